#include "apg/process_spec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "apg/errors.hpp"

namespace apg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void ProcessSpec::validate() const {
    if (d < 1 || static_cast<int>(components.size()) != d)
        throw ConfigError("spec needs exactly d components");
    if (!(T_max > 0.0)) throw ConfigError("T_max must be positive");
    for (int i = 0; i < d; ++i) {
        const Component& c = components[i];
        if (std::abs(c.gauss(0.0)) > 0.0) throw ConfigError("gaussian variance must vanish at t=0");
        if (!c.gauss.nondecreasing_on(T_max))
            throw ConfigError("gaussian variance must be nondecreasing");
        if (std::abs(c.drift(0.0)) > 0.0) throw ConfigError("drift must vanish at t=0");
        // nu_t must stay a Levy measure on the horizon
        const double x2 = c.kernel.x2_below(T_max, 1.0);
        const double tail = c.kernel.tail_mass(T_max, 1.0);
        if (!std::isfinite(x2) || !std::isfinite(tail))
            throw IntegrabilityError("kernel fails int (|x|^2 ^ 1) nu_t < inf on the horizon");
    }
}

const Component& ProcessSpec::comp(int i) const {
    if (i < 0 || i >= d) throw ConfigError("component index out of range");
    return components[static_cast<std::size_t>(i)];
}

double tail_mass(const ProcessSpec& spec, int i, double t, double r) {
    if (!(r > 0.0)) throw ConfigError("tail_mass needs r > 0");
    const double g = spec.comp(i).kernel.tail_mass(t, r);
    if (!std::isfinite(g)) throw IntegrabilityError("divergent tail integral");
    return g;
}

double truncated_moment2(const ProcessSpec& spec, int i, double t, double r) {
    if (!(r > 0.0)) throw ConfigError("truncated_moment2 needs r > 0");
    const double v = spec.comp(i).kernel.x2_below(t, r);
    if (!std::isfinite(v)) throw IntegrabilityError("divergent truncated second moment");
    return v;
}

double signed_mean(const ProcessSpec& spec, int i, double t, double r) {
    if (!(r > 0.0)) throw ConfigError("signed_mean needs r > 0");
    const Component& c = spec.comp(i);
    double v = c.drift(t);
    if (r > 1.0) {
        const double upper = c.kernel.x_signed_between(t, 1.0, r);
        if (!std::isfinite(c.kernel.abs_between(t, 1.0, r)))
            throw IntegrabilityError("divergent int_{1<|x|<=r} x nu_t");
        v += upper;
    } else if (r < 1.0) {
        v -= c.kernel.x_signed_between(t, r, 1.0);
    }
    return v;
}

double gamma0(const ProcessSpec& spec, int i, double t) {
    const Component& c = spec.comp(i);
    if (c.kernel.small_moment_horizon() < t)
        throw DriftUndefinedError("gamma0 queried past the integrability horizon t-bar");
    const double m1 = c.kernel.abs_between(t, 0.0, 1.0);
    if (!std::isfinite(m1))
        throw DriftUndefinedError("int_{|x|<=1}|x| nu_t diverges; drift undefined");
    return c.drift(t) - c.kernel.x_signed_between(t, 0.0, 1.0);
}

double gamma0_star(const ProcessSpec& spec, double t) {
    double total = 0.0;
    for (int i = 0; i < spec.d; ++i) {
        // running max over a refining grid, endpoint included
        int n = 64;
        double prev = -1.0, cur = 0.0;
        for (int round = 0; round < 8; ++round) {
            cur = 0.0;
            for (int k = 1; k <= n; ++k)
                cur = std::max(cur, std::abs(gamma0(spec, i, t * k / n)));
            if (prev >= 0.0 && std::abs(cur - prev) <= 1e-9 * std::max(cur, 1e-300)) break;
            prev = cur;
            n *= 2;
        }
        total += cur;
    }
    return total;
}

double total_mass(const ProcessSpec& spec, double t) {
    double p = 0.0;
    for (int i = 0; i < spec.d; ++i) {
        const double pi = spec.comp(i).kernel.total_mass(t);
        if (!std::isfinite(pi)) return kInf;
        p += pi;
    }
    return p;
}

bool drift_free_initially(const ProcessSpec& spec, double eps) {
    for (int i = 0; i < spec.d; ++i) {
        const Component& c = spec.comp(i);
        if (c.kernel.small_moment_horizon() <= 0.0) continue;  // vacuous
        if (!std::isfinite(c.kernel.abs_between(std::min(eps, c.kernel.small_moment_horizon()),
                                                0.0, 1.0)))
            continue;
        bool zero = true;
        for (int k = 1; k <= 64 && zero; ++k)
            zero = std::abs(gamma0(spec, i, eps * k / 64)) <= 1e-12;
        if (!zero) return false;
    }
    return true;
}

bool is_step_process(const ProcessSpec& spec, double t) {
    if (!std::isfinite(total_mass(spec, t))) return false;
    if (gauss_total(spec, t) != 0.0) return false;
    for (int i = 0; i < spec.d; ++i) {
        if (spec.comp(i).kernel.small_moment_horizon() < t) return false;
    }
    return gamma0_star(spec, t) <= 1e-12;
}

bool increasing_component(const ProcessSpec& spec, int i, double t) {
    const Component& c = spec.comp(i);
    if (!c.kernel.one_sided_positive()) return false;
    if (c.gauss(t) != 0.0) return false;
    if (c.kernel.small_moment_horizon() < t) return false;
    // gamma_0 must be nondecreasing and start at 0
    double prev = 0.0;
    for (int k = 1; k <= 64; ++k) {
        const double g = gamma0(spec, i, t * k / 64);
        if (g < prev - 1e-12) return false;
        prev = g;
    }
    return true;
}

double gauss_total(const ProcessSpec& spec, double t) {
    double s = 0.0;
    for (int i = 0; i < spec.d; ++i) s += spec.comp(i).gauss(t);
    return s;
}

}  // namespace apg
