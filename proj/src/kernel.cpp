#include "apg/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "apg/errors.hpp"
#include "apg/quadrature.hpp"
#include "apg/rng.hpp"

namespace apg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_scale_of(double r) {
    const double clamped = std::min(std::max(r, 1e-300), 1.0);
    return 1.0 + std::abs(std::log(clamped));
}
}  // namespace

LevyKernel LevyKernel::time_scaled(TimeFunction f, LevyMeasure nu) {
    LevyKernel k;
    k.kind_ = Kind::time_scaled;
    k.f_ = std::move(f);
    k.nu_ = std::move(nu);
    return k;
}

LevyKernel LevyKernel::disintegrated(TimeFunction u, StableLikeFamily family) {
    if (u.kind() == TimeFunction::Kind::composed)
        throw UnsupportedShapeError("disintegrated kernel u(ds) must be linear, power or piecewise");
    LevyKernel k;
    k.kind_ = Kind::disintegrated;
    k.u_ = std::move(u);
    k.fam_ = std::move(family);
    return k;
}

LevyKernel LevyKernel::sum(std::vector<LevyKernel> parts) {
    LevyKernel k;
    k.kind_ = Kind::sum;
    k.parts_ = std::move(parts);
    return k;
}

bool LevyKernel::is_empty() const {
    switch (kind_) {
        case Kind::none:
            return true;
        case Kind::time_scaled:
            return nu_.is_empty() || f_.is_zero();
        case Kind::disintegrated:
            return u_.is_zero();
        case Kind::sum:
            return std::all_of(parts_.begin(), parts_.end(),
                               [](const LevyKernel& p) { return p.is_empty(); });
    }
    return true;
}

bool LevyKernel::symmetric() const {
    switch (kind_) {
        case Kind::none:
            return true;
        case Kind::time_scaled:
            return nu_.symmetric() || f_.is_zero();
        case Kind::disintegrated: {
            for (double s = 0.0; s <= 1.0; s += 1.0 / 64)
                if (fam_.cplus(s) != fam_.cminus(s)) return false;
            return true;
        }
        case Kind::sum:
            return std::all_of(parts_.begin(), parts_.end(),
                               [](const LevyKernel& p) { return p.symmetric(); });
    }
    return true;
}

bool LevyKernel::one_sided_positive() const {
    switch (kind_) {
        case Kind::none:
            return true;
        case Kind::time_scaled:
            return nu_.one_sided_positive() || f_.is_zero();
        case Kind::disintegrated: {
            for (const auto& kn : fam_.cminus.knots())
                if (kn.second != 0.0) return false;
            return true;
        }
        case Kind::sum:
            return std::all_of(parts_.begin(), parts_.end(),
                               [](const LevyKernel& p) { return p.one_sided_positive(); });
    }
    return true;
}

double LevyKernel::small_moment_horizon() const {
    switch (kind_) {
        case Kind::none:
            return kInf;
        case Kind::time_scaled:
            if (f_.is_zero() || std::isfinite(nu_.abs_between(0.0, 1.0))) return kInf;
            return 0.0;
        case Kind::disintegrated: {
            // finite iff alpha_s stays below 1: the 1/(1-alpha_s) factor is
            // non-integrable across a crossing
            const auto& kn = fam_.alpha.knots();
            if (kn.front().second >= 1.0) return 0.0;
            for (std::size_t i = 0; i + 1 < kn.size(); ++i) {
                if (kn[i + 1].second >= 1.0) {
                    const double s0 = kn[i].first, s1 = kn[i + 1].first;
                    const double v0 = kn[i].second, v1 = kn[i + 1].second;
                    return s0 + (1.0 - v0) / (v1 - v0) * (s1 - s0);
                }
            }
            return kInf;
        }
        case Kind::sum: {
            double h = kInf;
            for (const auto& p : parts_) h = std::min(h, p.small_moment_horizon());
            return h;
        }
    }
    return kInf;
}

double LevyKernel::support_radius() const {
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::time_scaled:
            return f_.is_zero() ? 0.0 : nu_.support_radius();
        case Kind::disintegrated:
            return 1.0;
        case Kind::sum: {
            double m = 0.0;
            for (const auto& p : parts_) m = std::max(m, p.support_radius());
            return m;
        }
    }
    return 0.0;
}

double LevyKernel::time_integral(double t, const std::function<double(double)>& slice,
                                 double stiffness) const {
    if (t <= 0.0) return 0.0;
    std::vector<double> bps;
    fam_.alpha.collect_breakpoints(t, bps, {0.0, 1.0, 2.0});
    fam_.cplus.collect_breakpoints(t, bps);
    fam_.cminus.collect_breakpoints(t, bps);
    for (double b : u_.breakpoints(t)) bps.push_back(b);
    bps.push_back(0.0);
    bps.push_back(t);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    const bool power_u = u_.kind() == TimeFunction::Kind::power && u_.param_p() != 1.0;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const double s0 = bps[i], s1 = bps[i + 1];
        // stiffness of the integrand in s comes from r^{-alpha_s}-type terms;
        // subdivide so Gauss-Legendre stays accurate
        const double da = std::abs(fam_.alpha(s1) - fam_.alpha(s0));
        const int nsub = 1 + static_cast<int>(da * stiffness / 4.0);
        if (power_u) {
            const double a = u_.param_a(), p = u_.param_p();
            const double tau0 = u_(s0), tau1 = u_(s1);
            for (int j = 0; j < nsub; ++j) {
                const double ta = tau0 + (tau1 - tau0) * j / nsub;
                const double tb = tau0 + (tau1 - tau0) * (j + 1) / nsub;
                total += gauss16(
                    [&](double tau) { return slice(std::pow(tau / a, 1.0 / p)); }, ta, tb);
            }
        } else {
            for (int j = 0; j < nsub; ++j) {
                const double sa = s0 + (s1 - s0) * j / nsub;
                const double sb = s0 + (s1 - s0) * (j + 1) / nsub;
                total += gauss16([&](double s) { return slice(s) * u_.derivative(s); }, sa, sb);
            }
        }
    }
    return total;
}

double LevyKernel::tail_mass(double t, double r) const {
    if (t <= 0.0) return 0.0;
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::time_scaled:
            return f_(t) * nu_.tail(r);
        case Kind::disintegrated: {
            if (r >= 1.0) return 0.0;
            return time_integral(t, [&](double s) { return fam_.at(s).tail(r); },
                                 log_scale_of(r));
        }
        case Kind::sum: {
            double g = 0.0;
            for (const auto& p : parts_) g += p.tail_mass(t, r);
            return g;
        }
    }
    return 0.0;
}

double LevyKernel::x2_below(double t, double r) const {
    if (t <= 0.0) return 0.0;
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::time_scaled:
            return f_(t) * nu_.x2_below(r);
        case Kind::disintegrated: {
            return time_integral(t, [&](double s) { return fam_.at(s).x2_below(r); },
                                 log_scale_of(r));
        }
        case Kind::sum: {
            double v = 0.0;
            for (const auto& p : parts_) v += p.x2_below(t, r);
            return v;
        }
    }
    return 0.0;
}

double LevyKernel::x_signed_between(double t, double a, double b) const {
    if (t <= 0.0 || !(b > a)) return 0.0;
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::time_scaled:
            return f_(t) * nu_.x_signed_between(a, b);
        case Kind::disintegrated: {
            if (a <= 0.0 && !std::isfinite(abs_between(t, a, b))) {
                const double net = fam_.cplus(t) - fam_.cminus(t);
                return net == 0.0 ? 0.0 : (net > 0.0 ? kInf : -kInf);
            }
            return time_integral(t, [&](double s) { return fam_.at(s).x_signed_between(a, b); },
                                 log_scale_of(std::max(a, 1e-300)));
        }
        case Kind::sum: {
            double v = 0.0;
            for (const auto& p : parts_) v += p.x_signed_between(t, a, b);
            return v;
        }
    }
    return 0.0;
}

double LevyKernel::abs_between(double t, double a, double b) const {
    if (t <= 0.0 || !(b > a)) return 0.0;
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::time_scaled:
            return f_(t) * nu_.abs_between(a, b);
        case Kind::disintegrated: {
            if (a <= 0.0 && small_moment_horizon() < t) return kInf;
            const double stiff = a <= 0.0 ? 1.0 : log_scale_of(a);
            return time_integral(t, [&](double s) { return fam_.at(s).abs_between(a, b); }, stiff);
        }
        case Kind::sum: {
            double v = 0.0;
            for (const auto& p : parts_) v += p.abs_between(t, a, b);
            return v;
        }
    }
    return 0.0;
}

double LevyKernel::total_mass(double t) const {
    if (t <= 0.0) return 0.0;
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::time_scaled:
            return f_(t) == 0.0 ? 0.0 : f_(t) * nu_.total();
        case Kind::disintegrated:
            return u_(t) == 0.0 ? 0.0 : (fam_.at(t).total() == 0.0 ? 0.0 : kInf);
        case Kind::sum: {
            double v = 0.0;
            for (const auto& p : parts_) v += p.total_mass(t);
            return v;
        }
    }
    return 0.0;
}

double LevyKernel::laplace(double t, double lam) const {
    if (t <= 0.0 || lam <= 0.0) return 0.0;
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::time_scaled:
            return f_(t) * nu_.laplace(lam);
        case Kind::disintegrated: {
            if (!one_sided_positive())
                throw UnsupportedShapeError("laplace exponent needs positive support");
            return time_integral(t, [&](double s) { return fam_.at(s).laplace(lam); },
                                 log_scale_of(1.0 / std::max(lam, 1e-300)));
        }
        case Kind::sum: {
            double v = 0.0;
            for (const auto& p : parts_) v += p.laplace(t, lam);
            return v;
        }
    }
    return 0.0;
}

double LevyKernel::tail_mass_quadrature(double t, double r) const {
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::time_scaled: {
            if (!nu_.has_density()) return tail_mass(t, r);
            const double hi = nu_.support_radius();
            const Fn1 d = [&](double x) { return nu_.density(x) + nu_.density(-x); };
            const double part = std::isfinite(hi) ? (hi > r ? integrate_log(d, r, hi) : 0.0)
                                                  : integrate_to_inf(d, r);
            return f_(t) * part;
        }
        case Kind::disintegrated: {
            if (r >= 1.0) return 0.0;
            const Fn1 d = [&](double x) {
                return time_integral(
                    t, [&](double s) { return fam_.at(s).density(x) + fam_.at(s).density(-x); },
                    log_scale_of(x));
            };
            return integrate_log(d, r, 1.0, 1e-9);
        }
        case Kind::sum: {
            double v = 0.0;
            for (const auto& p : parts_) v += p.tail_mass_quadrature(t, r);
            return v;
        }
    }
    return 0.0;
}

double LevyKernel::x2_below_quadrature(double t, double r) const {
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::time_scaled: {
            if (!nu_.has_density()) return x2_below(t, r);
            const double lo = 1e-14 * r;
            const Fn1 d = [&](double x) { return x * x * (nu_.density(x) + nu_.density(-x)); };
            const double cap = std::min(r, nu_.support_radius());
            return cap <= lo ? 0.0 : f_(t) * integrate_log(d, lo, cap);
        }
        case Kind::disintegrated: {
            const double cap = std::min(r, 1.0);
            const Fn1 d = [&](double x) {
                return x * x * time_integral(
                                   t,
                                   [&](double s) {
                                       return fam_.at(s).density(x) + fam_.at(s).density(-x);
                                   },
                                   log_scale_of(x));
            };
            return integrate_log(d, 1e-12 * cap, cap, 1e-9);
        }
        case Kind::sum: {
            double v = 0.0;
            for (const auto& p : parts_) v += p.x2_below_quadrature(t, r);
            return v;
        }
    }
    return 0.0;
}

void LevyKernel::collect_leaves(std::vector<Leaf>& out) const {
    switch (kind_) {
        case Kind::none:
            return;
        case Kind::sum:
            for (const auto& p : parts_) p.collect_leaves(out);
            return;
        default:
            out.push_back(Leaf{this});
    }
}

double LevyKernel::step_jump_mean(double t0, double t1, double eps) const {
    return tail_mass(t1, eps) - tail_mass(t0, eps);
}

double LevyKernel::place_jump_time(double t0, double t1, double eps, double u) const {
    if (kind_ == Kind::time_scaled) {
        const double v0 = f_(t0), v1 = f_(t1);
        if (!(v1 > v0)) return 0.5 * (t0 + t1);
        return f_.inverse(v0 + u * (v1 - v0), t1);
    }
    if (kind_ == Kind::disintegrated) {
        // linear intensity model across the step
        const double dt = t1 - t0;
        const double s_lo = t0 + 1e-3 * dt;  // dodge u'(0) singularities
        const double r0 = fam_.at(s_lo).tail(eps) * u_.derivative(s_lo);
        const double r1 = fam_.at(t1).tail(eps) * u_.derivative(t1);
        if (!(r0 + r1 > 0.0) || !std::isfinite(r0 + r1)) return t0 + u * dt;
        const double a = r0, b = (r1 - r0) / dt;
        const double target = u * (a * dt + 0.5 * b * dt * dt);
        if (std::abs(b) < 1e-14 * std::max(a, 1.0) / std::max(dt, 1e-300))
            return t0 + target / a;
        const double disc = std::max(a * a + 2.0 * b * target, 0.0);
        const double s = (-a + std::sqrt(disc)) / b;
        return t0 + std::clamp(s, 0.0, dt);
    }
    return 0.5 * (t0 + t1);
}

double LevyKernel::sample_jump_size(double s, double eps, Rng& rng) const {
    if (kind_ == Kind::time_scaled) return nu_.sample_jump(eps, rng);
    if (kind_ == Kind::disintegrated) return fam_.at(s).sample_jump(eps, rng);
    throw UnsupportedShapeError("sample_jump_size on non-leaf kernel");
}

}  // namespace apg
