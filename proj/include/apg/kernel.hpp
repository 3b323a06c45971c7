#pragma once

#include <functional>
#include <vector>

#include "apg/levy_measure.hpp"
#include "apg/time_function.hpp"

namespace apg {

class Rng;

// Time-varying stable-like density from the disintegrated representation
// nu(ds,dx) = kappa_s(dx) u(ds):
//   kappa_s = (2-a_s) c+_s x^{-1-a_s} dx on (0,1], (2-a_s) c-_s |x|^{-1-a_s} on [-1,0)
struct StableLikeFamily {
    ParamCurve alpha, cplus, cminus;
    LevyMeasure at(double s) const { return LevyMeasure::stable_like(alpha(s), cplus(s), cminus(s)); }
};

// Nondecreasing continuous Levy kernel nu_t. Shapes:
//   none           nu_t = 0
//   time_scaled    nu_t = f(t) * nu
//   disintegrated  nu_t(A) = int_0^t kappa_s(A) u(ds)
//   sum            nu_t = sum of sub-kernels
class LevyKernel {
  public:
    enum class Kind { none, time_scaled, disintegrated, sum };

    LevyKernel() = default;
    static LevyKernel none() { return LevyKernel(); }
    static LevyKernel time_scaled(TimeFunction f, LevyMeasure nu);
    static LevyKernel disintegrated(TimeFunction u, StableLikeFamily family);
    static LevyKernel sum(std::vector<LevyKernel> parts);

    Kind kind() const { return kind_; }
    bool is_empty() const;
    bool symmetric() const;
    bool one_sided_positive() const;
    // small-jump first-moment horizon t-bar: int_{|x|<=1}|x| nu_t finite iff t <= t-bar
    double small_moment_horizon() const;
    // largest jump size carrying mass
    double support_radius() const;

    // G_t(r) = nu_t({|x| > r})
    double tail_mass(double t, double r) const;
    // int_{|x|<=r} x^2 nu_t(dx)
    double x2_below(double t, double r) const;
    // int_{a<|x|<=b} x nu_t(dx), signed
    double x_signed_between(double t, double a, double b) const;
    // int_{a<|x|<=b} |x| nu_t(dx); may be +inf
    double abs_between(double t, double a, double b) const;
    // p(t) = nu_t(R); +inf allowed
    double total_mass(double t) const;
    // g_t(lam) = int_0^inf (1 - e^{-lam x}) nu_t(dx); positive support required
    double laplace(double t, double lam) const;

    // quadrature cross-check of tail/x2 integrals (density families only)
    double tail_mass_quadrature(double t, double r) const;
    double x2_below_quadrature(double t, double r) const;

    // --- simulation hooks -------------------------------------------------
    struct Leaf {
        const LevyKernel* k;
    };
    void collect_leaves(std::vector<Leaf>& out) const;
    // expected count of jumps with |x| > eps on (t0, t1]
    double step_jump_mean(double t0, double t1, double eps) const;
    // place one jump time in (t0,t1] given uniform u, by inverting s -> G_s(eps)
    double place_jump_time(double t0, double t1, double eps, double u) const;
    // draw the jump size at time s conditioned on |x| > eps
    double sample_jump_size(double s, double eps, Rng& rng) const;

    const TimeFunction& time_change() const { return f_; }
    const LevyMeasure& base_measure() const { return nu_; }
    const TimeFunction& u() const { return u_; }
    const StableLikeFamily& family() const { return fam_; }
    const std::vector<LevyKernel>& parts() const { return parts_; }

  private:
    // int_0^t slice(s) u(ds); stiffness bounds |d log slice / d alpha| so the
    // composite Gauss rule subdivides r^{-alpha_s}-type integrands enough
    double time_integral(double t, const std::function<double(double)>& slice,
                         double stiffness) const;

    Kind kind_ = Kind::none;
    TimeFunction f_;            // time_scaled
    LevyMeasure nu_;            // time_scaled
    TimeFunction u_;            // disintegrated
    StableLikeFamily fam_;      // disintegrated
    std::vector<LevyKernel> parts_;  // sum
};

}  // namespace apg
