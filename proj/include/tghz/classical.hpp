#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tghz/timeline.hpp"

namespace tghz {

/// E_t = Re(prod_i a_i) with the magnitude of the leftover imaginary part
/// kept as a diagnostic. A value is only accepted as a physical expectation
/// when the residual is below tolerance.
struct ObjectiveValue {
    double value;
    double imag_residual;
};

namespace detail {

/// Outcome phases of a support laid out slot-major: q[i*s + j] is the
/// complex outcome of supported timeline j at witness slot i.
struct SupportTable {
    std::size_t n = 0;
    std::size_t s = 0;
    std::vector<std::complex<double>> q;
};

inline SupportTable make_table(std::span<const Timeline> support) {
    SupportTable tab;
    tab.n = support.front().size();
    tab.s = support.size();
    const std::size_t d = support.front().dimension();
    std::vector<std::complex<double>> roots(d);
    for (std::size_t k = 0; k < d; ++k) roots[k] = PhaseExponent(static_cast<std::int64_t>(k), d).to_complex();
    tab.q.resize(tab.n * tab.s);
    for (std::size_t i = 0; i < tab.n; ++i) {
        for (std::size_t j = 0; j < tab.s; ++j) {
            tab.q[i * tab.s + j] = roots[support[j][i].exponent()];
        }
    }
    return tab;
}

inline void slot_sums(const SupportTable& tab, std::span<const double> p,
                      std::span<std::complex<double>> a) {
    for (std::size_t i = 0; i < tab.n; ++i) {
        std::complex<double> acc{0.0, 0.0};
        const std::complex<double>* row = tab.q.data() + i * tab.s;
        for (std::size_t j = 0; j < tab.s; ++j) acc += p[j] * row[j];
        a[i] = acc;
    }
}

inline ObjectiveValue objective(const SupportTable& tab, std::span<const double> p) {
    std::complex<double> prod{1.0, 0.0};
    for (std::size_t i = 0; i < tab.n; ++i) {
        std::complex<double> acc{0.0, 0.0};
        const std::complex<double>* row = tab.q.data() + i * tab.s;
        for (std::size_t j = 0; j < tab.s; ++j) acc += p[j] * row[j];
        prod *= acc;
    }
    return {prod.real(), std::abs(prod.imag())};
}

/// d(Re prod_i a_i)/dp_j = Re(sum_i (prod_{i' != i} a_{i'}) q_{ij}), built
/// from prefix/suffix partial products so zero factors need no division.
inline void objective_gradient(const SupportTable& tab, std::span<const double> p,
                               std::span<double> grad) {
    const std::size_t n = tab.n;
    const std::size_t s = tab.s;
    std::vector<std::complex<double>> a(n);
    slot_sums(tab, p, a);
    std::vector<std::complex<double>> prefix(n + 1), suffix(n + 1);
    prefix[0] = {1.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * a[i];
    suffix[n] = {1.0, 0.0};
    for (std::size_t i = n; i-- > 0;) suffix[i] = a[i] * suffix[i + 1];
    for (std::size_t j = 0; j < s; ++j) {
        std::complex<double> c{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            c += prefix[i] * suffix[i + 1] * tab.q[i * s + j];
        }
        grad[j] = c.real();
    }
}

}  // namespace detail

/// Classical temporal expectation of a distribution: the product over
/// witness slots of the probability-weighted outcome sums.
inline ObjectiveValue evaluate(const Distribution& dist) {
    auto tab = detail::make_table(dist.support());
    auto obj = detail::objective(tab, dist.probs());
    // Convex combinations of unit phases keep |E_t| <= 1 exactly; absorb
    // up to 1e-9 of floating-point spill without masking real bugs.
    if (obj.value > 1.0 && obj.value - 1.0 <= 1e-9) obj.value = 1.0;
    if (obj.value < -1.0 && -1.0 - obj.value <= 1e-9) obj.value = -1.0;
    return obj;
}

/// Analytic gradient of evaluate().value with respect to each supported
/// timeline's probability, in support order.
inline std::vector<double> gradient(const Distribution& dist) {
    auto tab = detail::make_table(dist.support());
    std::vector<double> g(dist.size());
    detail::objective_gradient(tab, dist.probs(), g);
    return g;
}

/// Certified qubit minimum -((n-2)/n)^n, proven for even n only.
inline double closed_form_qubit_min(std::size_t n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument(
            "closed_form_qubit_min: certified only for even n >= 4, got n = " + std::to_string(n));
    }
    const double x = (static_cast<double>(n) - 2.0) / static_cast<double>(n);
    return -std::pow(x, static_cast<double>(n));
}

/// Continuous-phase (d = infinity) minimum -(cos(pi/n))^n; also attained at
/// every finite d divisible by n.
inline double closed_form_continuous_min(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("closed_form_continuous_min: requires n >= 2, got n = " +
                                    std::to_string(n));
    }
    return -std::pow(std::cos(std::numbers::pi / static_cast<double>(n)),
                     static_cast<double>(n));
}

enum class BoundMode { qubit, continuous };
enum class Verdict { quantum_certified, classically_explainable };

/// A measured expectation certifies temporal entanglement exactly when it
/// lies strictly below the applicable classical minimum.
inline Verdict classify(double measured, std::size_t n, BoundMode mode) {
    if (!(measured >= -1.0 && measured <= 1.0)) {
        throw std::invalid_argument("classify: measured value " + std::to_string(measured) +
                                    " outside [-1, 1]");
    }
    const double bound =
        mode == BoundMode::qubit ? closed_form_qubit_min(n) : closed_form_continuous_min(n);
    return measured < bound ? Verdict::quantum_certified : Verdict::classically_explainable;
}

}  // namespace tghz
