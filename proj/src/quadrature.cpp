#include "apg/quadrature.hpp"

#include <cmath>
#include <limits>

namespace apg {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * h / 6.0;
}

double adapt(const Fn1& f, double a, double m, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const Fn1& f, double a, double b, double rel_tol) {
    if (!(b > a)) return 0.0;
    // seed with a coarse scan so the tolerance has a sensible scale
    const int n = 16;
    double scan = 0.0;
    const double h = (b - a) / n;
    for (int i = 0; i < n; ++i) scan += std::abs(f(a + (i + 0.5) * h)) * h;
    const double floor_abs = 1e-300;
    const double tol = std::max(scan * rel_tol, floor_abs);
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adapt(f, a, m, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, 48);
}

double integrate_log(const Fn1& f, double a, double b, double rel_tol) {
    if (!(b > a) || !(a > 0.0)) return 0.0;
    auto g = [&f](double u) {
        const double x = std::exp(u);
        return f(x) * x;
    };
    return integrate(g, std::log(a), std::log(b), rel_tol);
}

double integrate_to_inf(const Fn1& f, double a, double rel_tol) {
    double total = 0.0;
    double lo = a;
    for (int panel = 0; panel < 64; ++panel) {
        const double hi = lo * 4.0;
        const double part = integrate_log(f, lo, hi, rel_tol);
        total += part;
        if (std::abs(part) <= rel_tol * std::abs(total) && panel > 1) break;
        lo = hi;
    }
    return total;
}

double gauss16(const Fn1& f, double a, double b) {
    static const double xs[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                 0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double ws[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                 0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += ws[i] * (f(c - hw * xs[i]) + f(c + hw * xs[i]));
    return s * hw;
}

}  // namespace apg
