#include "evobound/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace evobound {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Relative tolerance on T omega / pi when deciding whether T sits on an
// integer multiple of the half period.
constexpr double kPeriodTol = 1e-9;

void check_nonnegative_finite(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument(std::string(what) + " must be finite and nonnegative");
    }
}

// 5-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 5> kGaussNodes = {
    -0.90617984593866399, -0.53846931010568309, 0.0,
    0.53846931010568309, 0.90617984593866399};
constexpr std::array<double, 5> kGaussWeights = {
    0.23692688505618909, 0.47862867049936647, 0.56888888888888889,
    0.47862867049936647, 0.23692688505618909};

template <class F>
double gauss5(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t j = 0; j < kGaussNodes.size(); ++j) {
        acc += kGaussWeights[j] * f(mid + half * kGaussNodes[j]);
    }
    return half * acc;
}

int period_multiple(double omega, double T) {
    const double m = T * omega / kPi;
    const auto n = static_cast<long long>(std::llround(m));
    if (n < 1 || std::abs(m - double(n)) > kPeriodTol) {
        throw std::invalid_argument(
            "sinusoidal bound: T must be a positive integer multiple of pi/omega");
    }
    return static_cast<int>(n);
}

}  // namespace

EnvelopeNorm EnvelopeNorm::constant(double gamma) {
    check_nonnegative_finite(gamma, "gamma");
    EnvelopeNorm env;
    env.kind_ = Kind::Constant;
    env.gamma_ = gamma;
    return env;
}

EnvelopeNorm EnvelopeNorm::sinusoidal(double gamma, double omega) {
    check_nonnegative_finite(gamma, "gamma");
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw std::invalid_argument("omega must be finite and positive");
    }
    EnvelopeNorm env;
    env.kind_ = Kind::Sinusoidal;
    env.gamma_ = gamma;
    env.omega_ = omega;
    return env;
}

EnvelopeNorm EnvelopeNorm::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("tabulated envelope needs at least two samples");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i].first) || !std::isfinite(samples[i].second) ||
            samples[i].second < 0.0) {
            throw std::invalid_argument("tabulated envelope: samples must be finite with kappa >= 0");
        }
        if (i > 0 && samples[i].first <= samples[i - 1].first) {
            throw std::invalid_argument("tabulated envelope: times must be strictly increasing");
        }
    }
    EnvelopeNorm env;
    env.kind_ = Kind::Tabulated;
    env.samples_ = std::move(samples);
    return env;
}

double EnvelopeNorm::kappa(double t) const {
    switch (kind_) {
        case Kind::Constant:
            return gamma_;
        case Kind::Sinusoidal:
            return gamma_ * std::abs(std::sin(omega_ * t));
        case Kind::Tabulated: {
            if (t < samples_.front().first || t > samples_.back().first) {
                throw std::out_of_range("tabulated envelope: t outside the sampled range");
            }
            auto it = std::lower_bound(samples_.begin(), samples_.end(), t,
                                       [](const auto& s, double v) { return s.first < v; });
            if (it == samples_.begin()) return it->second;
            const auto& hi = *it;
            const auto& lo = *(it - 1);
            const double w = (t - lo.first) / (hi.first - lo.first);
            return lo.second + w * (hi.second - lo.second);
        }
    }
    throw std::logic_error("unreachable envelope kind");
}

double EnvelopeNorm::integral(double t) const {
    check_nonnegative_finite(t, "t");
    switch (kind_) {
        case Kind::Constant:
            return gamma_ * t;
        case Kind::Sinusoidal: {
            // int_0^t |sin(omega u)| du = (2m + 1 - cos r)/omega with
            // m = floor(omega t / pi), r = omega t - m pi.
            const double x = omega_ * t;
            const double m = std::floor(x / kPi);
            const double r = x - m * kPi;
            return gamma_ * (2.0 * m + 1.0 - std::cos(r)) / omega_;
        }
        case Kind::Tabulated: {
            require_coverage(t);
            double acc = 0.0;
            for (std::size_t i = 1; i < samples_.size(); ++i) {
                const auto& lo = samples_[i - 1];
                const auto& hi = samples_[i];
                if (lo.first >= t) break;
                if (hi.first <= 0.0) continue;
                // Exact integral of the linear interpolant over [a, b].
                const double a = std::max(lo.first, 0.0);
                const double b = std::min(hi.first, t);
                const double span = hi.first - lo.first;
                const double ka = lo.second + (a - lo.first) / span * (hi.second - lo.second);
                const double kb = lo.second + (b - lo.first) / span * (hi.second - lo.second);
                acc += 0.5 * (ka + kb) * (b - a);
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable envelope kind");
}

std::vector<double> EnvelopeNorm::breakpoints(double T) const {
    std::vector<double> pts;
    switch (kind_) {
        case Kind::Constant:
            break;
        case Kind::Sinusoidal: {
            const double half_period = kPi / omega_;
            for (long long k = 1; double(k) * half_period < T * (1.0 - 1e-12); ++k) {
                pts.push_back(double(k) * half_period);
            }
            break;
        }
        case Kind::Tabulated:
            for (const auto& s : samples_) {
                if (s.first > 0.0 && s.first < T) pts.push_back(s.first);
            }
            break;
    }
    return pts;
}

void EnvelopeNorm::require_coverage(double T) const {
    if (kind_ != Kind::Tabulated) return;
    if (samples_.front().first > 0.0 || samples_.back().first < T) {
        throw std::invalid_argument("tabulated envelope does not cover [0, T]");
    }
}

double bound_general(const EnvelopeNorm& env, double T, int quad_points) {
    if (!std::isfinite(T) || T < 0.0) {
        throw std::invalid_argument("bound_general: T must be finite and nonnegative");
    }
    if (quad_points < 64) {
        throw std::invalid_argument("bound_general: quad_points must be >= 64");
    }
    if (T == 0.0) return 0.0;
    env.require_coverage(T);

    const auto kappa = [&env](double s) { return env.kappa(s); };

    // Segment the domain at the envelope's non-smooth points, then lay a
    // quadrature grid with node count proportional to segment length.
    std::vector<double> edges;
    edges.push_back(0.0);
    for (double b : env.breakpoints(T)) edges.push_back(b);
    edges.push_back(T);

    std::vector<double> grid;
    grid.push_back(0.0);
    for (std::size_t s = 1; s < edges.size(); ++s) {
        const double a = edges[s - 1];
        const double b = edges[s];
        const int n = std::max(16, static_cast<int>(std::ceil(quad_points * (b - a) / T)));
        for (int i = 1; i <= n; ++i) {
            grid.push_back(a + (b - a) * double(i) / double(n));
        }
        grid.back() = b;
    }

    // Cumulative antiderivative C(grid[k]) = int_0^{grid[k]} kappa, built in
    // one pass so the nested integral costs O(n), not O(n^2).
    const std::size_t m = grid.size() - 1;
    std::vector<double> cum(m + 1, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        cum[k + 1] = cum[k] + gauss5(kappa, grid[k], grid[k + 1]);
    }
    const double c_total = cum[m];

    double outer = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double a = grid[k];
        const double b = grid[k + 1];
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        for (std::size_t j = 0; j < kGaussNodes.size(); ++j) {
            const double s = mid + half * kGaussNodes[j];
            const double c_s = cum[k] + gauss5(kappa, a, s);
            outer += kGaussWeights[j] * half * kappa(s) * std::exp(c_total - c_s);
        }
    }
    return outer;
}

double bound_general_closed(const EnvelopeNorm& env, double T) {
    if (!env.has_closed_form()) {
        throw std::invalid_argument(
            "bound_general_closed: tabulated envelopes have no closed form, use bound_general");
    }
    check_nonnegative_finite(T, "T");
    return std::expm1(env.integral(T));
}

double bound_linear(const EnvelopeNorm& env, double T) {
    check_nonnegative_finite(T, "T");
    env.require_coverage(T);
    return env.integral(T);
}

double bound_constant(double gamma, double T) {
    check_nonnegative_finite(gamma, "gamma");
    check_nonnegative_finite(T, "T");
    return std::expm1(gamma * T);
}

double c_factor(double gamma, double omega) {
    check_nonnegative_finite(gamma, "gamma");
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw std::invalid_argument("c_factor: omega must be finite and positive");
    }
    return omega * omega * (1.0 + std::exp(-gamma * kPi / omega)) /
           (kPi * (gamma * gamma + omega * omega));
}

double bound_sinusoidal(double gamma, double omega, double T) {
    check_nonnegative_finite(gamma, "gamma");
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw std::invalid_argument("bound_sinusoidal: omega must be finite and positive");
    }
    period_multiple(omega, T);
    return c_factor(gamma, omega) * gamma * T * std::exp(gamma * T);
}

double bound_sinusoidal_period_sum(double gamma, double omega, double T) {
    check_nonnegative_finite(gamma, "gamma");
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw std::invalid_argument("bound_sinusoidal_period_sum: omega must be finite and positive");
    }
    const int n_periods = period_multiple(omega, T);
    const double ratio = gamma / omega;
    const double per_period = (1.0 / omega) * (1.0 + std::exp(-gamma * kPi / omega)) /
                              (ratio * ratio + 1.0);
    return gamma * std::exp(gamma * T) * double(n_periods) * per_period;
}

BoundCurve bound_curve(const EnvelopeNorm& env, const std::vector<double>& times) {
    if (times.empty() || times.front() != 0.0) {
        throw std::invalid_argument("bound_curve: grid must start at 0");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::invalid_argument("bound_curve: grid must be strictly increasing");
        }
    }

    BoundCurve curve;
    curve.times = times;
    curve.linear.reserve(times.size());
    curve.gronwall.reserve(times.size());
    curve.closed_form.reserve(times.size());

    for (double t : times) {
        const double lin = bound_linear(env, t);
        const double gron = env.has_closed_form() ? bound_general_closed(env, t)
                                                  : bound_general(env, t);
        curve.linear.push_back(lin);
        curve.gronwall.push_back(gron);
        switch (env.kind()) {
            case EnvelopeNorm::Kind::Constant:
                curve.closed_form.emplace_back(bound_constant(env.gamma(), t));
                break;
            case EnvelopeNorm::Kind::Sinusoidal: {
                if (t == 0.0) {
                    curve.closed_form.emplace_back(0.0);
                    break;
                }
                const double m = t * env.omega() / kPi;
                if (std::abs(m - std::round(m)) <= kPeriodTol && std::llround(m) >= 1) {
                    curve.closed_form.emplace_back(bound_sinusoidal(env.gamma(), env.omega(), t));
                } else {
                    curve.closed_form.emplace_back(std::nullopt);
                }
                break;
            }
            case EnvelopeNorm::Kind::Tabulated:
                curve.closed_form.emplace_back(std::nullopt);
                break;
        }
        if (!(lin >= 0.0) || lin > gron + 1e-9) {
            throw std::logic_error("bound_curve: column ordering invariant violated");
        }
    }
    return curve;
}

}  // namespace evobound
