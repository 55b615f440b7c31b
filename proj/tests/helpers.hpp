#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tghz/timeline.hpp"

namespace test_helpers {

/// Random valid distribution: distinct constraint-completing timelines with
/// Dirichlet(1) probabilities.
inline tghz::Distribution random_distribution(std::mt19937_64& rng, std::size_t n, std::size_t d,
                                              std::size_t max_support) {
    std::uniform_int_distribution<std::size_t> pick_size(1, max_support);
    std::uniform_int_distribution<std::int64_t> pick_exp(0, static_cast<std::int64_t>(d) - 1);
    const std::size_t target = pick_size(rng);
    std::vector<tghz::Timeline> support;
    for (std::size_t attempt = 0; attempt < 50 * max_support && support.size() < target;
         ++attempt) {
        std::vector<std::int64_t> ks(n, 0);
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            ks[i] = pick_exp(rng);
            sum += ks[i];
        }
        ks[n - 1] = -sum;
        auto t = tghz::Timeline::from_exponents(ks, d);
        if (std::find(support.begin(), support.end(), t) == support.end()) {
            support.push_back(std::move(t));
        }
    }
    std::exponential_distribution<double> expd(1.0);
    std::vector<double> probs(support.size());
    double total = 0.0;
    for (auto& p : probs) {
        p = expd(rng) + 1e-12;
        total += p;
    }
    for (auto& p : probs) p /= total;
    return tghz::Distribution(std::move(support), std::move(probs));
}

}  // namespace test_helpers
