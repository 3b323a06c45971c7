#pragma once

#include <string>
#include <vector>

#include "apg/kernel.hpp"
#include "apg/time_function.hpp"

namespace apg {

// Characteristics of one real-valued additive component: drift B_t, Gaussian
// variance C_t (nondecreasing, C_0 = 0) and Levy kernel nu_t.
struct Component {
    TimeFunction drift;
    TimeFunction gauss;
    LevyKernel kernel;
};

// A d-dimensional process with additive components, declared by its
// characteristics. Immutable after construction; all operations are pure.
struct ProcessSpec {
    int d = 1;
    std::vector<Component> components;
    double T_max = 1.0;
    std::string label;

    void validate() const;  // throws ConfigError on invariant violations
    const Component& comp(int i) const;
};

// --- primitive Levy-measure integrals -------------------------------------

// G_t^{(i)}(r) = nu_t({|x| > r})
double tail_mass(const ProcessSpec& spec, int i, double t, double r);

// int_{|x|<=r} x^2 nu_t(dx)  (the jump part inside K_t(r))
double truncated_moment2(const ProcessSpec& spec, int i, double t, double r);

// B_t + int_{1<|x|<=r v 1} x nu_t - int_{r ^ 1<|x|<=1} x nu_t
double signed_mean(const ProcessSpec& spec, int i, double t, double r);

// drift gamma_0(t) = B_t - int_{|x|<=1} x nu_t(dx); throws DriftUndefinedError
// past the integrability horizon t-bar
double gamma0(const ProcessSpec& spec, int i, double t);

// sum over components of max_{s<=t} |gamma_0^{(j)}(s)|
double gamma0_star(const ProcessSpec& spec, double t);

// p(t) = nu_t(R) summed over components; +inf for infinite-activity kernels
double total_mass(const ProcessSpec& spec, double t);

// --- structural predicates --------------------------------------------------

// drift-free initially: every component either has an infinite small-jump
// first moment (vacuous) or gamma_0^* vanishes on (0, eps]
bool drift_free_initially(const ProcessSpec& spec, double eps);

// step process on [0,t]: finite total mass, no Gaussian part, no drift
bool is_step_process(const ProcessSpec& spec, double t);

// component i is a.s. nondecreasing (one-sided positive jumps, no Gaussian,
// nondecreasing gamma_0)
bool increasing_component(const ProcessSpec& spec, int i, double t);

// sum over components of C_t^{(j)}
double gauss_total(const ProcessSpec& spec, double t);

}  // namespace apg
