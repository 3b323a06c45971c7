#include "apg/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "apg/errors.hpp"
#include "apg/quadrature.hpp"

namespace apg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double lemma21_a() { return 0.5 * (3.0 + std::sqrt(5.0)); }

double lemma21_K(int d) { return d <= 1 ? 1.0 : 3.0 * d * d; }

double lemma21_pi(int d) { return lemma21_a() * lemma21_K(d); }

double lemma21_A(int k, int d) { return std::pow(18.0 * std::sqrt(2.0 * d * k), k); }

double default_m(int d) { return 1.0 / (2.0 * lemma21_pi(d)); }

double m_star(const ProcessSpec& spec, int i, double t, double r, double rel_tol) {
    if (t <= 0.0) return 0.0;
    int n = 32;
    double prev = -1.0;
    for (int round = 0; round < 9; ++round) {
        double cur = 0.0;
        for (int k = 1; k <= n; ++k)
            cur = std::max(cur, std::abs(signed_mean(spec, i, t * k / n, r)));
        if (prev >= 0.0 && std::abs(cur - prev) <= rel_tol * std::max(cur, 1e-300))
            return cur / r;
        prev = cur;
        n *= 2;
    }
    return prev / r;
}

double y_component(const ProcessSpec& spec, int i, double t, double r) {
    if (!(r > 0.0)) throw ConfigError("y needs r > 0");
    if (t <= 0.0) return 0.0;
    const double g = tail_mass(spec, i, t, r);
    const double k = (spec.comp(i).gauss(t) + truncated_moment2(spec, i, t, r)) / (r * r);
    return g + k + m_star(spec, i, t, r);
}

double y_total(const ProcessSpec& spec, double t, double r) {
    double s = 0.0;
    for (int i = 0; i < spec.d; ++i) s += y_component(spec, i, t, r);
    return s;
}

double y_smooth(const YField& yf, double t, double r, double rel_tol) {
    if (!(t > 0.0)) throw ConfigError("y_smooth undefined at t = 0 (y_0 = 0)");
    if (!(r > 0.0)) throw ConfigError("y_smooth needs r > 0");
    // I_t(r) = r^{-1} int_0^r y_t(x)^{-1} dx; the integrand is bounded by
    // 2/y_t(r) via the doubling property, so the tail below r e^{-42} is dust
    const double lo = r * std::exp(-42.0);
    const double integral =
        integrate_log([&](double x) { return 1.0 / yf.y(t, x); }, lo, r, rel_tol);
    if (!(integral > 0.0)) return kInf;
    return r / integral;
}

double y_smooth(const ProcessSpec& spec, double t, double r, double rel_tol) {
    SpecYField yf(spec);
    return y_smooth(yf, t, r, rel_tol);
}

double n_of_r(const YField& yf, const std::function<double(double)>& v, double r, double m,
              double t_cap, int d) {
    if (!(m > 0.0) || !(m < 1.0 / (lemma21_a() * lemma21_K(d))))
        throw ConfigError("n(r) threshold m must lie in (0, (aK(d))^{-1})");
    if (!(r > 0.0)) throw ConfigError("n(r) needs r > 0");
    if (yf.y(v(t_cap), r) <= m) return kInf;
    double lo = 0.0, hi = t_cap;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (yf.y(v(mid), r) > m)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double n_of_r(const ProcessSpec& spec, const std::function<double(double)>& v, double r, double m) {
    SpecYField yf(spec);
    return n_of_r(yf, v, r, m, spec.T_max, spec.d);
}

double laplace_exponent(const ProcessSpec& spec, int i, double t, double lambda) {
    const Component& c = spec.comp(i);
    if (!c.kernel.one_sided_positive() || !c.gauss.is_zero())
        throw UnsupportedShapeError("laplace exponent needs an increasing component");
    if (!(lambda > 0.0)) return 0.0;
    return c.kernel.laplace(t, lambda);
}

double running_sup_smooth(std::span<const std::pair<double, double>> hinv_samples, double r) {
    if (hinv_samples.empty()) throw ConfigError("running_sup_smooth needs samples");
    std::vector<std::pair<double, double>> s(hinv_samples.begin(), hinv_samples.end());
    std::sort(s.begin(), s.end());
    // running sup of hinv over (0, t]
    double sup = 0.0;
    for (auto& [t, v] : s) {
        (void)t;
        sup = std::max(sup, v);
        v = sup;
    }
    // trapezoid on [0, r]; extend the first sample's value down to 0
    double integral = s.front().second * std::min(s.front().first, r);
    for (std::size_t i = 0; i + 1 < s.size() && s[i].first < r; ++i) {
        const double t0 = s[i].first;
        const double t1 = std::min(s[i + 1].first, r);
        if (t1 <= t0) continue;
        const double v1 = s[i].second + (s[i + 1].second - s[i].second) * (t1 - s[i].first) /
                                            (s[i + 1].first - s[i].first);
        integral += 0.5 * (s[i].second + v1) * (t1 - t0);
    }
    if (s.back().first < r) integral += s.back().second * (r - s.back().first);
    return integral / r;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

FunctionalGrid build_grid(const ProcessSpec& spec, std::vector<double> t_grid,
                          std::vector<double> r_grid, bool with_smooth) {
    FunctionalGrid grid;
    grid.label = spec.label;
    grid.m = default_m(spec.d);
    grid.t_grid = std::move(t_grid);
    grid.r_grid = std::move(r_grid);
    const std::size_t nt = grid.t_grid.size(), nr = grid.r_grid.size();
    grid.G.assign(spec.d, std::vector<std::vector<double>>(nt, std::vector<double>(nr, 0.0)));
    grid.K = grid.G;
    grid.Mstar = grid.G;
    grid.y.assign(nt, std::vector<double>(nr, 0.0));
    grid.y_smooth.assign(nt, std::vector<double>(nr, 0.0));
    SpecYField yf(spec);
    for (std::size_t ti = 0; ti < nt; ++ti) {
        const double t = grid.t_grid[ti];
        for (std::size_t ri = 0; ri < nr; ++ri) {
            const double r = grid.r_grid[ri];
            double total = 0.0;
            for (int i = 0; i < spec.d; ++i) {
                const double g = tail_mass(spec, i, t, r);
                const double k =
                    (spec.comp(i).gauss(t) + truncated_moment2(spec, i, t, r)) / (r * r);
                const double ms = t > 0.0 ? m_star(spec, i, t, r) : 0.0;
                grid.G[i][ti][ri] = g;
                grid.K[i][ti][ri] = k;
                grid.Mstar[i][ti][ri] = ms;
                total += g + k + ms;
            }
            grid.y[ti][ri] = total;
            grid.y_smooth[ti][ri] = (with_smooth && t > 0.0) ? y_smooth(yf, t, r) : 0.0;
        }
    }
    return grid;
}

void write_grid_csv(const FunctionalGrid& grid, std::ostream& os) {
    os << "t,r,component,G,K,Mstar,y,y_smooth\n";
    char buf[256];
    const int d = static_cast<int>(grid.G.size());
    for (std::size_t ti = 0; ti < grid.t_grid.size(); ++ti) {
        for (std::size_t ri = 0; ri < grid.r_grid.size(); ++ri) {
            for (int i = 0; i < d; ++i) {
                std::snprintf(buf, sizeof buf, "%.12g,%.12g,%d,%.12g,%.12g,%.12g,,\n",
                              grid.t_grid[ti], grid.r_grid[ri], i, grid.G[i][ti][ri],
                              grid.K[i][ti][ri], grid.Mstar[i][ti][ri]);
                os << buf;
            }
            double G = 0.0, K = 0.0, M = 0.0;
            for (int i = 0; i < d; ++i) {
                G += grid.G[i][ti][ri];
                K += grid.K[i][ti][ri];
                M += grid.Mstar[i][ti][ri];
            }
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,total,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                          grid.t_grid[ti], grid.r_grid[ri], G, K, M, grid.y[ti][ri],
                          grid.y_smooth[ti][ri]);
            os << buf;
        }
    }
}

GridPropertyStats check_doubling_sandwich(const FunctionalGrid& grid, double rel_tol) {
    GridPropertyStats st;
    const std::size_t nt = grid.t_grid.size(), nr = grid.r_grid.size();
    for (std::size_t ti = 0; ti < nt; ++ti) {
        const bool positive_t = grid.t_grid[ti] > 0.0;
        for (std::size_t ri = 0; ri < nr; ++ri) {
            const double y_r = grid.y[ti][ri];
            if (positive_t && grid.y_smooth[ti][ri] > 0.0 && y_r > 0.0) {
                ++st.sandwich_points;
                const double ratio = y_r / grid.y_smooth[ti][ri];
                st.worst_ratio_low = std::min(st.worst_ratio_low, ratio);
                st.worst_ratio_high = std::max(st.worst_ratio_high, ratio);
                if (ratio < (1.0 / 48.0) * (1.0 - rel_tol) || ratio > 2.0 * (1.0 + rel_tol))
                    ++st.sandwich_violations;
            }
            if (!(y_r > 0.0)) continue;
            for (std::size_t rj = ri + 1; rj < nr; ++rj) {
                const double theta = grid.r_grid[rj] / grid.r_grid[ri];
                if (!(theta > 1.0)) continue;
                ++st.pairs_checked;
                const double y_theta = grid.y[ti][rj];
                const double lower = y_r / (3.0 * theta * theta);
                double excess = 0.0;
                if (y_theta < lower * (1.0 - rel_tol))
                    excess = (lower - y_theta) / std::max(lower, 1e-300);
                if (y_theta > 2.0 * y_r * (1.0 + rel_tol))
                    excess = std::max(excess, (y_theta - 2.0 * y_r) / (2.0 * y_r));
                if (excess > 0.0) {
                    ++st.doubling_violations;
                    st.worst_doubling_excess = std::max(st.worst_doubling_excess, excess);
                }
            }
        }
    }
    return st;
}

}  // namespace apg
