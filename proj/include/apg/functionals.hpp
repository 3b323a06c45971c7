#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apg/process_spec.hpp"

namespace apg {

// Lemma 2.1 constants
double lemma21_a();                 // a = (3+sqrt(5))/2
double lemma21_K(int d);            // K(1)=1, K(d)=3d^2
double lemma21_pi(int d);           // pi_d = a K(d)
double lemma21_A(int k, int d);     // A_k(d) = (18 sqrt(2dk))^k
double default_m(int d);            // m = (2 pi_d)^{-1}

// M*_t(r): running max of |signed_mean|/r over a refining s-grid,
// stable to rel_tol
double m_star(const ProcessSpec& spec, int i, double t, double r, double rel_tol = 1e-6);

// y_t^{(i)}(r) = G + r^{-2}(C_t + trunc2) + M*
double y_component(const ProcessSpec& spec, int i, double t, double r);

// y_t(r) summed over components
double y_total(const ProcessSpec& spec, double t, double r);

// Abstraction over (t,r) -> y used by the index machinery so synthetic
// fields can be checked with the same code paths.
class YField {
  public:
    virtual ~YField() = default;
    virtual double y(double t, double r) const = 0;
    virtual double t_max() const = 0;
};

class SpecYField final : public YField {
  public:
    explicit SpecYField(const ProcessSpec& spec) : spec_(&spec) {}
    double y(double t, double r) const override { return y_total(*spec_, t, r); }
    double t_max() const override { return spec_->T_max; }
    const ProcessSpec& spec() const { return *spec_; }

  private:
    const ProcessSpec* spec_;
};

class FnYField final : public YField {
  public:
    FnYField(std::function<double(double, double)> f, double tmax)
        : f_(std::move(f)), tmax_(tmax) {}
    double y(double t, double r) const override { return f_(t, r); }
    double t_max() const override { return tmax_; }

  private:
    std::function<double(double, double)> f_;
    double tmax_;
};

// smoothed functional ydot_t(r) = [r^{-1} int_0^r y_t(x)^{-1} dx]^{-1}; t > 0
double y_smooth(const YField& yf, double t, double r, double rel_tol = 1e-9);
double y_smooth(const ProcessSpec& spec, double t, double r, double rel_tol = 1e-9);

// n(r) = inf{t > 0 : y_{v(t)}(r) > m}; +inf if never on (0, t_cap];
// m must lie in (0, (aK(d))^{-1})
double n_of_r(const YField& yf, const std::function<double(double)>& v, double r, double m,
              double t_cap, int d = 1);
double n_of_r(const ProcessSpec& spec, const std::function<double(double)>& v, double r, double m);

// g_t(lambda) for an increasing component (positive one-sided kernel, C=0)
double laplace_exponent(const ProcessSpec& spec, int i, double t, double lambda);

// k(r) = r^{-1} int_0^r sup_{0<s<=t} hinv(s) dt from samples of hinv on (0, r]
double running_sup_smooth(std::span<const std::pair<double, double>> hinv_samples, double r);

// log-spaced grid helper (n points from lo to hi inclusive)
std::vector<double> log_grid(double lo, double hi, int n);
std::vector<double> linear_grid(double lo, double hi, int n);

// Evaluated functionals on a (t, r) grid.
struct FunctionalGrid {
    std::string label;
    double m = 0.0;  // threshold constant echoed into the metadata
    std::vector<double> t_grid, r_grid;
    // [comp][ti][ri]
    std::vector<std::vector<std::vector<double>>> G, K, Mstar;
    // [ti][ri]
    std::vector<std::vector<double>> y, y_smooth;

    double y_at(std::size_t ti, std::size_t ri) const { return y[ti][ri]; }
};

FunctionalGrid build_grid(const ProcessSpec& spec, std::vector<double> t_grid,
                          std::vector<double> r_grid, bool with_smooth = true);

void write_grid_csv(const FunctionalGrid& grid, std::ostream& os);

// Doubling (2.5) and 48^{-1} <= y/ydot <= 2 sandwich over all grid pairs.
struct GridPropertyStats {
    long pairs_checked = 0;
    long doubling_violations = 0;
    long sandwich_points = 0;
    long sandwich_violations = 0;
    double worst_doubling_excess = 0.0;  // how far past the bound, relative
    double worst_ratio_low = 1e300, worst_ratio_high = 0.0;
};

GridPropertyStats check_doubling_sandwich(const FunctionalGrid& grid, double rel_tol = 1e-9);

}  // namespace apg
