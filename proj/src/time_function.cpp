#include "apg/time_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "apg/errors.hpp"

namespace apg {

TimeFunction TimeFunction::linear(double a) {
    TimeFunction f;
    f.kind_ = Kind::linear;
    f.a_ = a;
    return f;
}

TimeFunction TimeFunction::power(double a, double p) {
    if (!(p > 0.0)) throw ConfigError("power time function needs p > 0");
    TimeFunction f;
    f.kind_ = Kind::power;
    f.a_ = a;
    f.p_ = p;
    return f;
}

TimeFunction TimeFunction::piecewise(std::vector<std::pair<double, double>> knots) {
    if (knots.empty() || knots.front().first != 0.0 || knots.front().second != 0.0)
        throw ConfigError("piecewise time function must start at (0,0)");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i].first > knots[i - 1].first))
            throw ConfigError("piecewise knots must be strictly increasing in t");
    TimeFunction f;
    f.kind_ = Kind::piecewise;
    f.knots_ = std::move(knots);
    return f;
}

TimeFunction TimeFunction::composed(TimeFunction outer, TimeFunction inner) {
    TimeFunction f;
    f.kind_ = Kind::composed;
    f.outer_ = std::make_shared<TimeFunction>(std::move(outer));
    f.inner_ = std::make_shared<TimeFunction>(std::move(inner));
    return f;
}

double TimeFunction::operator()(double t) const {
    switch (kind_) {
        case Kind::linear:
            return a_ * t;
        case Kind::power:
            return t <= 0.0 ? 0.0 : a_ * std::pow(t, p_);
        case Kind::piecewise: {
            if (t <= 0.0) return 0.0;
            const auto& k = knots_;
            auto it = std::upper_bound(k.begin(), k.end(), t,
                                       [](double x, const auto& kn) { return x < kn.first; });
            if (it == k.begin()) return 0.0;
            if (it == k.end()) {  // extrapolate last slope
                const auto& b = k.back();
                if (k.size() == 1) return b.second;
                const auto& a = k[k.size() - 2];
                const double slope = (b.second - a.second) / (b.first - a.first);
                return b.second + slope * (t - b.first);
            }
            const auto& hi = *it;
            const auto& lo = *(it - 1);
            const double w = (t - lo.first) / (hi.first - lo.first);
            return lo.second + w * (hi.second - lo.second);
        }
        case Kind::composed:
            return (*outer_)((*inner_)(t));
    }
    return 0.0;
}

double TimeFunction::derivative(double t) const {
    switch (kind_) {
        case Kind::linear:
            return a_;
        case Kind::power:
            if (p_ == 1.0) return a_;
            if (t <= 0.0) return p_ > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
            return a_ * p_ * std::pow(t, p_ - 1.0);
        case Kind::piecewise: {
            const auto& k = knots_;
            std::size_t i = 0;
            while (i + 1 < k.size() && k[i + 1].first <= t) ++i;
            if (i + 1 >= k.size()) {
                if (k.size() == 1) return 0.0;
                i = k.size() - 2;
            }
            return (k[i + 1].second - k[i].second) / (k[i + 1].first - k[i].first);
        }
        case Kind::composed:
            return outer_->derivative((*inner_)(t)) * inner_->derivative(t);
    }
    return 0.0;
}

double TimeFunction::inverse(double v, double t_hi) const {
    if (v <= 0.0) return 0.0;
    // closed forms for the common kinds
    if (kind_ == Kind::linear && a_ > 0.0) return std::min(v / a_, t_hi);
    if (kind_ == Kind::power && a_ > 0.0) return std::min(std::pow(v / a_, 1.0 / p_), t_hi);
    double lo = 0.0, hi = t_hi;
    if ((*this)(t_hi) < v) return t_hi;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((*this)(mid) >= v)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

bool TimeFunction::is_zero() const {
    switch (kind_) {
        case Kind::linear:
        case Kind::power:
            return a_ == 0.0;
        case Kind::piecewise:
            return std::all_of(knots_.begin(), knots_.end(),
                               [](const auto& k) { return k.second == 0.0; });
        case Kind::composed:
            return outer_->is_zero() || inner_->is_zero();
    }
    return false;
}

bool TimeFunction::nondecreasing_on(double t_hi, int n_check) const {
    double prev = 0.0;
    for (int i = 1; i <= n_check; ++i) {
        const double t = t_hi * i / n_check;
        const double v = (*this)(t);
        if (v < prev - 1e-12 * std::max(1.0, std::abs(prev))) return false;
        prev = v;
    }
    return true;
}

std::vector<double> TimeFunction::breakpoints(double t_hi) const {
    std::vector<double> out;
    if (kind_ == Kind::piecewise) {
        for (const auto& k : knots_)
            if (k.first > 0.0 && k.first < t_hi) out.push_back(k.first);
    } else if (kind_ == Kind::composed) {
        // inner breakpoints, plus preimages of outer breakpoints
        out = inner_->breakpoints(t_hi);
        for (double b : outer_->breakpoints((*inner_)(t_hi))) {
            const double t = inner_->inverse(b, t_hi);
            if (t > 0.0 && t < t_hi) out.push_back(t);
        }
        std::sort(out.begin(), out.end());
    }
    return out;
}

ParamCurve::ParamCurve(std::vector<std::pair<double, double>> knots) : knots_(std::move(knots)) {
    if (knots_.empty()) throw ConfigError("parameter curve needs at least one knot");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i].first > knots_[i - 1].first))
            throw ConfigError("parameter-curve knots must be strictly increasing in s");
}

double ParamCurve::operator()(double s) const {
    const auto& k = knots_;
    if (s <= k.front().first) return k.front().second;
    if (s >= k.back().first) return k.back().second;
    auto it = std::upper_bound(k.begin(), k.end(), s,
                               [](double x, const auto& kn) { return x < kn.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (s - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
}

void ParamCurve::collect_breakpoints(double t, std::vector<double>& out,
                                     const std::vector<double>& crossing_levels) const {
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        const double s0 = knots_[i].first, s1 = knots_[i + 1].first;
        const double v0 = knots_[i].second, v1 = knots_[i + 1].second;
        if (s1 > 0.0 && s1 < t) out.push_back(s1);
        for (double level : crossing_levels) {
            if ((v0 - level) * (v1 - level) < 0.0) {
                const double s = s0 + (level - v0) / (v1 - v0) * (s1 - s0);
                if (s > 0.0 && s < t) out.push_back(s);
            }
        }
    }
}

}  // namespace apg
