#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tghz/phase.hpp"

namespace tghz {

inline constexpr std::size_t default_enumeration_cap = 10'000'000;

/// Number of valid timelines, d^{n-1}; saturates at SIZE_MAX on overflow.
inline std::size_t timeline_count(std::size_t n, std::size_t d) {
    std::size_t count = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (d != 0 && count > std::numeric_limits<std::size_t>::max() / d) {
            return std::numeric_limits<std::size_t>::max();
        }
        count *= d;
    }
    return count;
}

struct enumeration_cap_error : std::length_error {
    enumeration_cap_error(std::size_t required, std::size_t cap)
        : std::length_error("too large to enumerate: " + std::to_string(required) +
                            " timelines exceed cap " + std::to_string(cap)),
          required_count(required) {}

    std::size_t required_count;
};

/// One classical assignment of outcomes to all witness slots. Outcomes share
/// a dimension; whether their product is the identity is a separate check,
/// so invalid assignments can be represented and rejected explicitly.
class Timeline {
public:
    explicit Timeline(std::vector<PhaseExponent> outcomes) : outcomes_(std::move(outcomes)) {
        if (outcomes_.size() < 2) {
            throw std::invalid_argument("Timeline: need at least two outcomes");
        }
        const std::size_t d = outcomes_.front().dimension();
        for (const auto& o : outcomes_) {
            if (o.dimension() != d) {
                throw std::invalid_argument("Timeline: mixed dimensions (" + std::to_string(d) +
                                            " vs " + std::to_string(o.dimension()) + ")");
            }
        }
    }

    static Timeline from_exponents(std::span<const std::int64_t> ks, std::size_t d) {
        std::vector<PhaseExponent> out;
        out.reserve(ks.size());
        for (auto k : ks) out.emplace_back(k, d);
        return Timeline(std::move(out));
    }

    std::size_t size() const noexcept { return outcomes_.size(); }
    std::size_t dimension() const noexcept { return outcomes_.front().dimension(); }
    const PhaseExponent& operator[](std::size_t i) const noexcept { return outcomes_[i]; }
    auto begin() const noexcept { return outcomes_.begin(); }
    auto end() const noexcept { return outcomes_.end(); }

    /// True iff the outcome exponents sum to 0 mod d, i.e. the outcomes
    /// multiply to one.
    bool satisfies_product_constraint() const noexcept {
        std::size_t sum = 0;
        for (const auto& o : outcomes_) sum += o.exponent();
        return sum % dimension() == 0;
    }

    friend bool operator==(const Timeline&, const Timeline&) = default;
    friend auto operator<=>(const Timeline&, const Timeline&) = default;

private:
    std::vector<PhaseExponent> outcomes_;
};

/// All d^{n-1} valid timelines in lexicographic exponent order: the first
/// n-1 outcomes run freely and the last one completes the product
/// constraint, so nothing is generated and rejected.
inline std::vector<Timeline> enumerate_timelines(std::size_t n, std::size_t d,
                                                 std::size_t cap = default_enumeration_cap) {
    if (n < 2) throw std::invalid_argument("enumerate_timelines: n must be at least 2");
    if (d < 2) throw std::invalid_argument("enumerate_timelines: d must be at least 2");
    const std::size_t count = timeline_count(n, d);
    if (count > cap) throw enumeration_cap_error(count, cap);

    std::vector<Timeline> result;
    result.reserve(count);
    std::vector<std::size_t> digits(n - 1, 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<PhaseExponent> row;
        row.reserve(n);
        std::size_t sum = 0;
        for (auto k : digits) {
            row.emplace_back(static_cast<std::int64_t>(k), d);
            sum += k;
        }
        row.emplace_back(-static_cast<std::int64_t>(sum % d), d);
        result.emplace_back(std::move(row));
        for (std::size_t pos = n - 1; pos-- > 0;) {
            if (++digits[pos] < d) break;
            digits[pos] = 0;
        }
    }
    return result;
}

/// Probability distribution over a sparse set of valid timelines sharing one
/// (n, d). Duplicate support entries are merged on construction.
class Distribution {
public:
    static constexpr double simplex_tolerance = 1e-12;

    Distribution(std::vector<Timeline> support, std::vector<double> probs) {
        if (support.size() != probs.size()) {
            throw std::invalid_argument("Distribution: support size " +
                                        std::to_string(support.size()) + " vs " +
                                        std::to_string(probs.size()) + " probabilities");
        }
        if (support.empty()) {
            throw std::invalid_argument("Distribution: empty support");
        }
        const std::size_t n = support.front().size();
        const std::size_t d = support.front().dimension();
        double total = 0.0;
        for (std::size_t j = 0; j < support.size(); ++j) {
            const Timeline& t = support[j];
            if (t.size() != n || t.dimension() != d) {
                throw std::invalid_argument("Distribution: support timelines must share n and d");
            }
            if (!t.satisfies_product_constraint()) {
                throw std::invalid_argument(
                    "Distribution: supported timeline violates the product constraint");
            }
            if (!(probs[j] >= 0.0)) {
                throw std::invalid_argument("Distribution: probabilities must be non-negative");
            }
            total += probs[j];
        }
        if (std::abs(total - 1.0) > simplex_tolerance) {
            throw std::invalid_argument("Distribution: probabilities sum to " +
                                        std::to_string(total) + ", expected 1");
        }
        for (std::size_t j = 0; j < support.size(); ++j) {
            bool merged = false;
            for (std::size_t i = 0; i < support_.size(); ++i) {
                if (support_[i] == support[j]) {
                    probs_[i] += probs[j];
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                support_.push_back(std::move(support[j]));
                probs_.push_back(probs[j]);
            }
        }
    }

    std::size_t size() const noexcept { return support_.size(); }
    std::size_t n() const noexcept { return support_.front().size(); }
    std::size_t dimension() const noexcept { return support_.front().dimension(); }
    std::span<const Timeline> support() const noexcept { return support_; }
    std::span<const double> probs() const noexcept { return probs_; }
    const Timeline& timeline(std::size_t j) const noexcept { return support_[j]; }
    double prob(std::size_t j) const noexcept { return probs_[j]; }

private:
    std::vector<Timeline> support_;
    std::vector<double> probs_;
};

/// The n-timeline family attaining the even-n qubit minimum -((n-2)/n)^n:
/// the all-identity timeline plus, for each slot i >= 2, the timeline that
/// flips slots 1 and i, all with probability 1/n. Works in any even
/// dimension with exponent d/2 playing the role of -1.
inline Distribution qubit_extremal_distribution(std::size_t n, std::size_t d = 2) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument(
            "qubit_extremal_distribution: requires even n >= 4 (the even-n pairing argument), "
            "got n = " +
            std::to_string(n));
    }
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("qubit_extremal_distribution: requires even d, got d = " +
                                    std::to_string(d));
    }
    const auto flip = static_cast<std::int64_t>(d / 2);
    std::vector<Timeline> support;
    support.reserve(n);
    std::vector<std::int64_t> ks(n, 0);
    support.push_back(Timeline::from_exponents(ks, d));
    for (std::size_t i = 1; i < n; ++i) {
        std::fill(ks.begin(), ks.end(), 0);
        ks[0] = flip;
        ks[i] = flip;
        support.push_back(Timeline::from_exponents(ks, d));
    }
    return Distribution(std::move(support), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

/// The two-timeline family attaining -(cos(pi/n))^n when n divides d: the
/// all-identity timeline paired with the uniform primitive n-th root
/// (exponent d/n at every slot), each with probability 1/2.
inline Distribution divisible_extremal_distribution(std::size_t n, std::size_t d) {
    if (n < 3) {
        throw std::invalid_argument("divisible_extremal_distribution: requires n >= 3, got n = " +
                                    std::to_string(n));
    }
    if (d < 2) {
        throw std::invalid_argument("divisible_extremal_distribution: requires d >= 2, got d = " +
                                    std::to_string(d));
    }
    if (d % n != 0) {
        throw std::invalid_argument(
            "divisible_extremal_distribution: requires n to divide d, got n = " +
            std::to_string(n) + ", d = " + std::to_string(d));
    }
    std::vector<std::int64_t> ks(n, 0);
    std::vector<Timeline> support;
    support.reserve(2);
    support.push_back(Timeline::from_exponents(ks, d));
    std::fill(ks.begin(), ks.end(), static_cast<std::int64_t>(d / n));
    support.push_back(Timeline::from_exponents(ks, d));
    return Distribution(std::move(support), {0.5, 0.5});
}

}  // namespace tghz
