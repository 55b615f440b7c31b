#pragma once

#include <cmath>
#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace tghz {

/// A d-th root of unity e^{2*pi*i*k/d}, stored as the exact integer residue
/// k in [0, d). Multiplying outcomes is residue addition mod d, so chains of
/// outcome products never touch floating point.
class PhaseExponent {
public:
    PhaseExponent(std::int64_t k, std::size_t d) : d_(d) {
        if (d == 0) {
            throw std::invalid_argument("PhaseExponent: dimension must be positive");
        }
        const auto m = static_cast<std::int64_t>(d);
        k_ = static_cast<std::size_t>(((k % m) + m) % m);
    }

    std::size_t exponent() const noexcept { return k_; }
    std::size_t dimension() const noexcept { return d_; }

    /// Embedding into the complex plane. The four quadrant angles are
    /// returned exactly so +/-1 and +/-i outcomes carry no rounding.
    std::complex<double> to_complex() const noexcept {
        if ((4 * k_) % d_ == 0) {
            switch ((4 * k_) / d_) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                default: return {0.0, -1.0};
            }
        }
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(k_) / static_cast<double>(d_);
        return {std::cos(theta), std::sin(theta)};
    }

    friend PhaseExponent operator*(const PhaseExponent& a, const PhaseExponent& b) {
        if (a.d_ != b.d_) {
            throw std::invalid_argument("PhaseExponent: dimension mismatch (" +
                                        std::to_string(a.d_) + " vs " + std::to_string(b.d_) +
                                        ")");
        }
        return PhaseExponent(static_cast<std::int64_t>(a.k_ + b.k_), a.d_);
    }

    PhaseExponent& operator*=(const PhaseExponent& b) { return *this = *this * b; }

    friend bool operator==(const PhaseExponent&, const PhaseExponent&) = default;
    friend auto operator<=>(const PhaseExponent&, const PhaseExponent&) = default;

private:
    std::size_t d_;
    std::size_t k_;
};

/// One slot sum of E_t: sum_j w_j * e^{2*pi*i*k_j/d} for non-negative weights.
inline std::complex<double> weighted_phase_sum(std::span<const PhaseExponent> phases,
                                               std::span<const double> weights) {
    if (phases.size() != weights.size()) {
        throw std::invalid_argument("weighted_phase_sum: " + std::to_string(phases.size()) +
                                    " phases vs " + std::to_string(weights.size()) + " weights");
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < phases.size(); ++j) {
        acc += weights[j] * phases[j].to_complex();
    }
    return acc;
}

}  // namespace tghz
