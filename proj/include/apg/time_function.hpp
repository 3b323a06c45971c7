#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace apg {

// Continuous function of time with f(0) = 0: drifts B_t, Gaussian variances
// C_t, kernel time changes and the u of disintegrated kernels.
class TimeFunction {
  public:
    enum class Kind { linear, power, piecewise, composed };

    TimeFunction() : kind_(Kind::linear), a_(0.0) {}

    static TimeFunction zero() { return linear(0.0); }
    static TimeFunction linear(double a);
    static TimeFunction power(double a, double p);
    // knots must start at (0,0), strictly increasing in t
    static TimeFunction piecewise(std::vector<std::pair<double, double>> knots);
    static TimeFunction composed(TimeFunction outer, TimeFunction inner);

    double operator()(double t) const;
    // right derivative; infinite at t=0 for power with p<1
    double derivative(double t) const;
    // smallest t >= 0 with f(t) >= v (f assumed nondecreasing); t_hi caps the search
    double inverse(double v, double t_hi) const;

    bool is_zero() const;
    bool nondecreasing_on(double t_hi, int n_check = 257) const;
    // t-values in (0, t_hi) where the definition changes (piecewise knots)
    std::vector<double> breakpoints(double t_hi) const;

    Kind kind() const { return kind_; }
    double param_a() const { return a_; }
    double param_p() const { return p_; }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }
    const TimeFunction& outer() const { return *outer_; }
    const TimeFunction& inner() const { return *inner_; }

  private:
    Kind kind_;
    double a_ = 0.0, p_ = 1.0;
    std::vector<std::pair<double, double>> knots_;
    std::shared_ptr<const TimeFunction> outer_, inner_;
};

// Piecewise-linear parameter curve (alpha_s, c'_s, ...): no zero-at-zero
// constraint, constant extrapolation beyond the last knot.
class ParamCurve {
  public:
    ParamCurve() : knots_{{0.0, 0.0}} {}
    explicit ParamCurve(double constant) : knots_{{0.0, constant}} {}
    explicit ParamCurve(std::vector<std::pair<double, double>> knots);

    double operator()(double s) const;
    bool is_constant() const { return knots_.size() == 1; }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }
    // s-values in (0, t) where a linear piece ends or the curve crosses `level`
    void collect_breakpoints(double t, std::vector<double>& out,
                             const std::vector<double>& crossing_levels = {}) const;

  private:
    std::vector<std::pair<double, double>> knots_;
};

}  // namespace apg
