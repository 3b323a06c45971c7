#include "apg/levy_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "apg/errors.hpp"
#include "apg/quadrature.hpp"
#include "apg/rng.hpp"

namespace apg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAlphaEps = 1e-9;

// (b^q - a^q)/q with the q->0 limit log(b/a)
double power_diff(double a, double b, double q) {
    if (std::abs(q) < kAlphaEps) return std::log(b / a);
    const double pa = a == 0.0 ? (q > 0.0 ? 0.0 : kInf) : std::pow(a, q);
    return (std::pow(b, q) - pa) / q;
}
}  // namespace

LevyMeasure LevyMeasure::symmetric_stable(double alpha, double c) {
    if (!(alpha > 0.0 && alpha < 2.0) || !(c > 0.0))
        throw ConfigError("symmetric_stable needs alpha in (0,2), c > 0");
    LevyMeasure m;
    m.kind_ = Kind::symmetric_stable;
    m.alpha_ = alpha;
    m.c_ = c;
    return m;
}

LevyMeasure LevyMeasure::one_sided_stable(double alpha, double c) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(c > 0.0))
        throw ConfigError("one_sided_stable needs alpha in (0,1), c > 0");
    LevyMeasure m;
    m.kind_ = Kind::one_sided_stable;
    m.alpha_ = alpha;
    m.c_ = c;
    return m;
}

LevyMeasure LevyMeasure::discrete(std::vector<std::pair<double, double>> atoms) {
    for (const auto& [x, mass] : atoms)
        if (x == 0.0 || mass < 0.0) throw ConfigError("atoms need x != 0 and mass >= 0");
    LevyMeasure m;
    m.kind_ = Kind::atoms;
    m.atoms_ = std::move(atoms);
    return m;
}

LevyMeasure LevyMeasure::pareto(double alpha, double c) {
    if (!(alpha > 0.0) || !(c > 0.0)) throw ConfigError("pareto needs alpha > 0, c > 0");
    LevyMeasure m;
    m.kind_ = Kind::pareto;
    m.alpha_ = alpha;
    m.c_ = c;
    return m;
}

LevyMeasure LevyMeasure::stable_like(double alpha, double cplus, double cminus) {
    if (!(alpha >= 0.0 && alpha <= 2.0) || cplus < 0.0 || cminus < 0.0)
        throw ConfigError("stable_like needs alpha in [0,2], c+ >= 0, c- >= 0");
    LevyMeasure m;
    m.kind_ = Kind::stable_like;
    m.alpha_ = alpha;
    m.cplus_ = cplus;
    m.cminus_ = cminus;
    return m;
}

bool LevyMeasure::symmetric() const {
    switch (kind_) {
        case Kind::none:
            return true;
        case Kind::symmetric_stable:
            return true;
        case Kind::stable_like:
            return cplus_ == cminus_;
        case Kind::atoms: {
            // symmetric iff masses pair up
            for (const auto& [x, mass] : atoms_) {
                double paired = 0.0;
                for (const auto& [x2, mass2] : atoms_)
                    if (x2 == -x) paired += mass2;
                if (paired != mass) return false;
            }
            return true;
        }
        default:
            return false;
    }
}

bool LevyMeasure::one_sided_positive() const {
    switch (kind_) {
        case Kind::none:
        case Kind::one_sided_stable:
        case Kind::pareto:
            return true;
        case Kind::atoms:
            return std::all_of(atoms_.begin(), atoms_.end(),
                               [](const auto& a) { return a.first > 0.0; });
        case Kind::stable_like:
            return cminus_ == 0.0;
        default:
            return false;
    }
}

double LevyMeasure::tail(double r) const {
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::symmetric_stable:
            return 2.0 * c_ * std::pow(r, -alpha_) / alpha_;
        case Kind::one_sided_stable:
            return c_ * std::pow(r, -alpha_) / alpha_;
        case Kind::atoms: {
            double s = 0.0;
            for (const auto& [x, mass] : atoms_)
                if (std::abs(x) > r) s += mass;
            return s;
        }
        case Kind::pareto:
            return c_ * std::pow(std::max(r, 1.0), -alpha_) / alpha_;
        case Kind::stable_like: {
            if (r >= 1.0 || alpha_ >= 2.0) return 0.0;
            return (cplus_ + cminus_) * (2.0 - alpha_) * power_diff(1.0, 1.0 / r, alpha_);
        }
    }
    return 0.0;
}

double LevyMeasure::pos_tail(double r) const {
    switch (kind_) {
        case Kind::symmetric_stable:
            return 0.5 * tail(r);
        case Kind::atoms: {
            double s = 0.0;
            for (const auto& [x, mass] : atoms_)
                if (x > r) s += mass;
            return s;
        }
        case Kind::stable_like: {
            const double t = tail(r);
            const double tot = cplus_ + cminus_;
            return tot > 0.0 ? t * cplus_ / tot : 0.0;
        }
        default:
            return tail(r);
    }
}

double LevyMeasure::x2_below(double r) const {
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::symmetric_stable:
            return 2.0 * c_ * std::pow(r, 2.0 - alpha_) / (2.0 - alpha_);
        case Kind::one_sided_stable:
            return c_ * std::pow(r, 2.0 - alpha_) / (2.0 - alpha_);
        case Kind::atoms: {
            double s = 0.0;
            for (const auto& [x, mass] : atoms_)
                if (std::abs(x) <= r) s += x * x * mass;
            return s;
        }
        case Kind::pareto:
            return r <= 1.0 ? 0.0 : c_ * power_diff(1.0, r, 2.0 - alpha_);
        case Kind::stable_like: {
            if (alpha_ >= 2.0) return 0.0;
            return (cplus_ + cminus_) * std::pow(std::min(r, 1.0), 2.0 - alpha_);
        }
    }
    return 0.0;
}

double LevyMeasure::x_signed_between(double a, double b) const {
    if (!(b > a)) return 0.0;
    switch (kind_) {
        case Kind::none:
        case Kind::symmetric_stable:
            return 0.0;
        case Kind::one_sided_stable:
            return c_ * power_diff(a, b, 1.0 - alpha_);
        case Kind::atoms: {
            double s = 0.0;
            for (const auto& [x, mass] : atoms_) {
                const double ax = std::abs(x);
                if (ax > a && ax <= b) s += x * mass;
            }
            return s;
        }
        case Kind::pareto: {
            const double lo = std::max(a, 1.0), hi = std::max(b, 1.0);
            if (!(hi > lo)) return 0.0;
            return c_ * power_diff(lo, hi, 1.0 - alpha_);
        }
        case Kind::stable_like: {
            if (alpha_ >= 2.0) return 0.0;
            const double lo = std::min(a, 1.0), hi = std::min(b, 1.0);
            if (!(hi > lo)) return 0.0;
            const double cd = cplus_ - cminus_;
            if (lo <= 0.0 && alpha_ >= 1.0) return cd == 0.0 ? 0.0 : (cd > 0.0 ? kInf : -kInf);
            return cd * (2.0 - alpha_) * power_diff(lo, hi, 1.0 - alpha_);
        }
    }
    return 0.0;
}

double LevyMeasure::abs_between(double a, double b) const {
    if (!(b > a)) return 0.0;
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::symmetric_stable: {
            if (a <= 0.0 && alpha_ >= 1.0) return kInf;
            return 2.0 * c_ * power_diff(a, b, 1.0 - alpha_);
        }
        case Kind::one_sided_stable:
            return c_ * power_diff(a, b, 1.0 - alpha_);
        case Kind::atoms: {
            double s = 0.0;
            for (const auto& [x, mass] : atoms_) {
                const double ax = std::abs(x);
                if (ax > a && ax <= b) s += ax * mass;
            }
            return s;
        }
        case Kind::pareto: {
            const double lo = std::max(a, 1.0), hi = std::max(b, 1.0);
            if (!(hi > lo)) return 0.0;
            return c_ * power_diff(lo, hi, 1.0 - alpha_);
        }
        case Kind::stable_like: {
            if (alpha_ >= 2.0) return 0.0;
            const double lo = std::min(a, 1.0), hi = std::min(b, 1.0);
            if (!(hi > lo)) return 0.0;
            if (lo <= 0.0 && alpha_ >= 1.0) return (cplus_ + cminus_) > 0.0 ? kInf : 0.0;
            return (cplus_ + cminus_) * (2.0 - alpha_) * power_diff(lo, hi, 1.0 - alpha_);
        }
    }
    return 0.0;
}

double LevyMeasure::total() const {
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::symmetric_stable:
        case Kind::one_sided_stable:
            return kInf;
        case Kind::atoms: {
            double s = 0.0;
            for (const auto& [x, mass] : atoms_) {
                (void)x;
                s += mass;
            }
            return s;
        }
        case Kind::pareto:
            return c_ / alpha_;
        case Kind::stable_like:
            return (alpha_ >= 2.0 || cplus_ + cminus_ == 0.0) ? 0.0 : kInf;
    }
    return 0.0;
}

double LevyMeasure::laplace(double lam) const {
    if (!one_sided_positive()) throw UnsupportedShapeError("laplace exponent needs positive support");
    if (lam <= 0.0) return 0.0;
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::one_sided_stable:
            return c_ * std::tgamma(1.0 - alpha_) / alpha_ * std::pow(lam, alpha_);
        case Kind::atoms: {
            double s = 0.0;
            for (const auto& [x, mass] : atoms_) s += mass * (1.0 - std::exp(-lam * x));
            return s;
        }
        case Kind::pareto:
            return integrate_to_inf(
                [this, lam](double x) { return (1.0 - std::exp(-lam * x)) * density(x); }, 1.0);
        case Kind::stable_like: {
            if (alpha_ >= 1.0) return kInf;
            return integrate_log(
                [this, lam](double x) { return (1.0 - std::exp(-lam * x)) * density(x); },
                std::min(1e-14, 1e-14 / lam), 1.0);
        }
        default:
            return 0.0;
    }
}

double LevyMeasure::density(double x) const {
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    switch (kind_) {
        case Kind::symmetric_stable:
            return c_ * std::pow(ax, -1.0 - alpha_);
        case Kind::one_sided_stable:
            return x > 0.0 ? c_ * std::pow(x, -1.0 - alpha_) : 0.0;
        case Kind::pareto:
            return x > 1.0 ? c_ * std::pow(x, -1.0 - alpha_) : 0.0;
        case Kind::stable_like: {
            if (ax > 1.0 || alpha_ >= 2.0) return 0.0;
            const double cc = x > 0.0 ? cplus_ : cminus_;
            return (2.0 - alpha_) * cc * std::pow(ax, -1.0 - alpha_);
        }
        default:
            return 0.0;
    }
}

double LevyMeasure::sample_jump(double eps, Rng& rng) const {
    switch (kind_) {
        case Kind::symmetric_stable: {
            const double mag = eps * std::pow(rng.u01(), -1.0 / alpha_);
            return rng.u01() < 0.5 ? mag : -mag;
        }
        case Kind::one_sided_stable:
            return eps * std::pow(rng.u01(), -1.0 / alpha_);
        case Kind::pareto:
            return std::max(eps, 1.0) * std::pow(rng.u01(), -1.0 / alpha_);
        case Kind::atoms: {
            const double t = tail(eps);
            double u = rng.u01() * t;
            for (const auto& [x, mass] : atoms_) {
                if (std::abs(x) <= eps) continue;
                u -= mass;
                if (u <= 0.0) return x;
            }
            return atoms_.back().first;
        }
        case Kind::stable_like: {
            const double side = rng.u01() * (cplus_ + cminus_);
            const double sign = side < cplus_ ? 1.0 : -1.0;
            const double u = rng.u01();
            double mag;
            if (alpha_ < kAlphaEps) {
                mag = std::pow(eps, u);  // tail ~ log(1/x)
            } else {
                const double t = std::pow(eps, -alpha_) - 1.0;
                mag = std::pow(1.0 + u * t, -1.0 / alpha_);
            }
            return sign * mag;
        }
        default:
            throw UnsupportedShapeError("sample_jump on empty measure");
    }
}

double LevyMeasure::support_radius() const {
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::atoms: {
            double m = 0.0;
            for (const auto& [x, mass] : atoms_)
                if (mass > 0.0) m = std::max(m, std::abs(x));
            return m;
        }
        case Kind::stable_like:
            return 1.0;
        default:
            return kInf;
    }
}

}  // namespace apg
