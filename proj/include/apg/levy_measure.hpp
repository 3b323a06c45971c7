#pragma once

#include <utility>
#include <vector>

namespace apg {

class Rng;

// One-dimensional Levy measure from a parametric family, with closed-form
// primitive integrals and inverse-tail samplers. Families:
//   symmetric_stable   c|x|^{-1-a} dx on R\{0},          a in (0,2)
//   one_sided_stable   c x^{-1-a} dx on (0,inf),          a in (0,1)
//   atoms              discrete {(x_j, mass_j)}
//   pareto             c x^{-1-a} dx on (1,inf)
//   stable_like        (2-a) c+ x^{-1-a} dx on (0,1],
//                      (2-a) c- |x|^{-1-a} dx on [-1,0),   a in [0,2]
class LevyMeasure {
  public:
    enum class Kind { none, symmetric_stable, one_sided_stable, atoms, pareto, stable_like };

    LevyMeasure() = default;

    static LevyMeasure none() { return LevyMeasure(); }
    static LevyMeasure symmetric_stable(double alpha, double c);
    static LevyMeasure one_sided_stable(double alpha, double c);
    static LevyMeasure discrete(std::vector<std::pair<double, double>> atoms);
    static LevyMeasure pareto(double alpha, double c);
    static LevyMeasure stable_like(double alpha, double cplus, double cminus);

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double c() const { return c_; }
    double cplus() const { return cplus_; }
    double cminus() const { return cminus_; }
    const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }

    bool is_empty() const { return kind_ == Kind::none; }
    bool symmetric() const;
    bool one_sided_positive() const;

    // nu({|x| > r}), split by sign on request
    double tail(double r) const;
    double pos_tail(double r) const;

    // int_{|x|<=r} x^2 dnu
    double x2_below(double r) const;
    // int_{a<|x|<=b} x dnu (signed), 0 <= a < b
    double x_signed_between(double a, double b) const;
    // int_{a<|x|<=b} |x| dnu; may be +inf (a=0, heavy small jumps)
    double abs_between(double a, double b) const;
    // nu(R); +inf for infinite-activity families
    double total() const;
    // int_0^inf (1-e^{-lam x}) dnu; requires positive support
    double laplace(double lam) const;

    // density at x (0 for atoms); quadrature cross-checks only
    double density(double x) const;
    bool has_density() const { return kind_ != Kind::atoms && kind_ != Kind::none; }

    // draw a jump conditioned on |x| > eps; requires tail(eps) > 0
    double sample_jump(double eps, Rng& rng) const;

    // largest |x| carrying mass (inf for unbounded support)
    double support_radius() const;

  private:
    Kind kind_ = Kind::none;
    double alpha_ = 0.0, c_ = 0.0;
    double cplus_ = 0.0, cminus_ = 0.0;
    std::vector<std::pair<double, double>> atoms_;
};

}  // namespace apg
