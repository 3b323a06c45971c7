#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "apg/functionals.hpp"
#include "apg/process_spec.hpp"

namespace apg {

// --- function classes -------------------------------------------------------

// c: (0,1) -> (0,1) with liminf_{r->0} c(r) r^{-eta} > 0 for every eta > 0
struct SlowFunction {
    enum class Kind { constant, log_pow, loglog_pow };
    Kind kind = Kind::constant;
    double c0 = 0.5;  // constant value
    double p = 1.0;   // exponent for the log kinds

    static SlowFunction constant(double c);
    static SlowFunction log_pow(double p);
    static SlowFunction loglog_pow(double p);

    double operator()(double r) const;
};

// nondecreasing phi with phi(t2)/phi(t1) <= rho (t2/t1)^sigma; the certificate
// (rho, sigma) is analytic for the power kind and grid-certified otherwise
struct ModerateFunction {
    enum class Kind { power, power_log, slow_log, sampled };
    Kind kind = Kind::power;
    double p = 1.0, kappa = 0.0;
    std::vector<std::pair<double, double>> samples;  // sampled kind

    static ModerateFunction power(double p);
    static ModerateFunction power_log(double p, double kappa);
    static ModerateFunction slow_log(double p);
    static ModerateFunction sampled_fn(std::vector<std::pair<double, double>> samples);

    double operator()(double t) const;
    double deriv(double t) const;
    double inverse(double z) const;
    double sigma() const;
    double rho() const;  // grid-certified for non-power kinds
    bool absolutely_continuous() const { return kind != Kind::sampled; }
    ModerateFunction smoothed() const;  // e-hat(t) = t^{-1} int_0^t e
};

// monotone interpolant from samples, log-log with tail-slope extrapolation
class SampledMonotone {
  public:
    SampledMonotone() = default;
    explicit SampledMonotone(std::vector<std::pair<double, double>> pts);
    double operator()(double x) const;

  private:
    std::vector<double> lx_, ly_;
};

// --- critical exponents -----------------------------------------------------

enum class LimitMode { liminf, limsup };

struct ExponentEstimate {
    double value = 0.0;
    double half_width = 0.0;
    std::array<double, 3> per_window{};  // window widths 1,2,3 decades
    bool at_lower_boundary = false;
    bool at_upper_boundary = false;
};

// critical exponent p of value ~ r^{-p} as r -> 0 from (r, value) samples:
// liminf mode takes the inf over tail windows of the log-log slope, limsup
// the sup; needs >= 4 decades of r
ExponentEstimate critical_exponent(std::vector<std::pair<double, double>> samples, LimitMode mode);

// --- growth indices ---------------------------------------------------------

struct DeltaBeta {
    ExponentEstimate delta, beta;
};

// delta/beta from the r->0 critical exponents of y_b(r)
DeltaBeta delta_beta_section4(const YField& yf, double b,
                              double r_lo = 1e-6, double r_hi = 0.5, int n = 61);

// growth function pair from y_{v(t)}(b) = phi(t)
struct GrowthU {
    std::vector<std::pair<double, double>> v_samples, u_samples;
    std::function<double(double)> v, u;
};

GrowthU build_growth_u(const YField& yf, double b, const ModerateFunction& phi, int n = 121);
// the canonical choice phi(t) = (y_{Tmax}(b)/Tmax) t, which makes v = id for
// Levy specs and v = f^{-1} for time-changed ones
GrowthU build_growth_u_linear(const YField& yf, double b, int n = 121);

struct Section3Indices {
    ExponentEstimate delta1, delta2, beta1, beta2;
};

struct Section3Config {
    double r_lo = 1e-6, r_hi = 0.5;
    int n_r = 61;
    double slope_eps = 0.01;
    int sigma_n_lo = 4, sigma_n_hi = 40;
    double eta_lo = 0.02, eta_hi = 4.0, eta_tol = 0.01;
};

Section3Indices indices_section3(const YField& yf, const std::function<double(double)>& v,
                                 const Section3Config& cfg = {});

// Sigma-sequence from a slow function: s_{n+1}/c(s_{n+1}) = s_n
struct SigmaSequence {
    std::vector<double> values;
    bool property_verified = false;  // (sigma_{n-1}/sigma_n) sigma_n^eta -> 0 trend
};
SigmaSequence sigma_sequence(const SlowFunction& c, double s0, int count = 40);

// quasiconvexity (3.1): y_{v(t2)}(r)/y_{v(t1)}(r) >= c(r) (t2/t1)^sigma
struct QuasiconvexResult {
    bool flag = false;
    double sigma_max = 0.0;
};
QuasiconvexResult quasiconvexity_test(const YField& yf, const std::function<double(double)>& v,
                                      double b, const SlowFunction& c, double t0);

// class I: t -> y_{v(t)}(r) convex for r small
bool class_I_test(const YField& yf, const std::function<double(double)>& v, double t0,
                  double r_hi = 0.1);

// semimartingale conditions (i)/(ii) for disintegrated specs
struct ConditionsI_II {
    bool no_sign_change = false;   // (i)
    bool h_nondecreasing = false;  // (ii)
};
ConditionsI_II conditions_i_ii_check(const ProcessSpec& spec, double t0, double r_hi = 0.1);

// section 4 envelope functions v-bar <= ... <= v-under around the index
struct VBounds {
    std::vector<double> t;
    std::vector<double> v_bar, v_under;
};
enum class WhichIndex { delta, beta };
VBounds v_bounds_section4(const YField& yf, double b, double index, double eps,
                          const SlowFunction& c, const std::vector<double>& t_grid);
// v(eta,t) of (1.2c)
double v_eta_section4(const YField& yf, double b, double index, double eta, double t);

// Proposition 4.2 numerical checkers
struct Prop42Flags {
    bool cond_i = false;
    bool cond_ii = false;
};
Prop42Flags prop42_checks(const YField& yf, double b, const SlowFunction& c1,
                          const SlowFunction& c2, const SlowFunction& c);

// simplified index routes (drift-free G-form; monotone Laplace form)
struct SimplifiedIndices {
    bool g_form_applicable = false;
    ExponentEstimate beta_G;
    bool monotone_applicable = false;
    ExponentEstimate delta_g, beta_g;
    bool agrees_with_section4 = true;
};
SimplifiedIndices simplified_indices(const ProcessSpec& spec, double b);

// --- moment method (section 5) ----------------------------------------------

// provider of r -> E G_{T_r}(lambda) over a lambda list (Monte Carlo hook)
using EgProvider =
    std::function<std::vector<double>(double r, const std::vector<double>& lambdas)>;

struct MomentIndices {
    std::vector<std::pair<double, double>> H_samples, h_samples;
    ExponentEstimate delta1, delta2, beta1, beta2;
    bool cond56 = false;  // int_r^1 EG e(dlam) <= c(r)^{-1} e(r) across the grid
};

MomentIndices moment_method_hH(const EgProvider& eg, const ModerateFunction& e,
                               const std::vector<double>& r_grid, const SlowFunction& c);

// --- assembled report ---------------------------------------------------------

struct GrowthReport {
    std::string label;
    double b = 1.0;
    DeltaBeta section4;
    Section3Indices section3;
    std::vector<std::pair<double, double>> u_samples, v_samples;
    bool quasiconvex31 = false;
    double sigma_exponent = 0.0;
    bool class_I = false;
    bool step_process = false;
    bool has_conditions = false;
    ConditionsI_II conditions;
    bool has_simplified = false;
    SimplifiedIndices simplified;
    bool has_moment = false;
    double moment_p = 0.0;
    MomentIndices moment;
    std::vector<std::string> warnings;
};

void write_report_csv(const GrowthReport& rep, std::ostream& os);
void write_report_text(const GrowthReport& rep, std::ostream& os);

}  // namespace apg
