#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tghz/optimize.hpp"
#include "tghz/paradox.hpp"
#include "tghz/sweep.hpp"
#include "tghz/timeline.hpp"

namespace tghz {

inline nlohmann::json to_json(const Distribution& dist) {
    nlohmann::json support = nlohmann::json::array();
    for (const auto& t : dist.support()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& o : t) row.push_back(o.exponent());
        support.push_back(std::move(row));
    }
    return {{"n", dist.n()},
            {"d", dist.dimension()},
            {"support", std::move(support)},
            {"probs", std::vector<double>(dist.probs().begin(), dist.probs().end())}};
}

inline Distribution distribution_from_json(const nlohmann::json& j) {
    const auto n = j.at("n").get<std::size_t>();
    const auto d = j.at("d").get<std::size_t>();
    const auto& support = j.at("support");
    const auto probs = j.at("probs").get<std::vector<double>>();
    if (!support.is_array()) {
        throw std::invalid_argument("distribution_from_json: \"support\" must be an array");
    }
    std::vector<Timeline> timelines;
    timelines.reserve(support.size());
    for (const auto& row : support) {
        const auto ks = row.get<std::vector<std::int64_t>>();
        if (ks.size() != n) {
            throw std::invalid_argument("distribution_from_json: timeline length " +
                                        std::to_string(ks.size()) + " does not match n = " +
                                        std::to_string(n));
        }
        timelines.push_back(Timeline::from_exponents(ks, d));
    }
    return Distribution(std::move(timelines), probs);
}

inline std::string to_string(Termination t) {
    switch (t) {
        case Termination::gradient_norm: return "gradient_norm";
        case Termination::max_iters: return "max_iters";
        default: return "support_exhausted";
    }
}

inline nlohmann::json to_json(const OptResult& r) {
    return {{"best_value", r.best_value},
            {"best_distribution", to_json(r.best_distribution)},
            {"restarts_run", r.restarts_run},
            {"converged_restarts", r.converged_restarts},
            {"seed", r.seed},
            {"termination", to_string(r.termination)},
            {"exhaustive_skipped", r.exhaustive_skipped}};
}

inline nlohmann::json complex_pair(const std::complex<double>& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

inline nlohmann::json to_json(const ParadoxReport& r) {
    nlohmann::json eigenvalues = nlohmann::json::array();
    for (const auto& lambda : r.eigenvalues) eigenvalues.push_back(complex_pair(lambda));
    return {{"is_common_eigenvector", r.is_common_eigenvector},
            {"eigenvalues", std::move(eigenvalues)},
            {"quantum_product", complex_pair(r.quantum_product)},
            {"classical_product_constraint_holds", r.classical_product_constraint_holds},
            {"is_paradox", r.is_paradox}};
}

inline nlohmann::json to_json(const NogoReport& r) {
    return {{"all_eigenvalues_in_S", r.all_eigenvalues_in_S},
            {"minus_one_found", r.minus_one_found}};
}

inline nlohmann::json to_json(std::span<const SweepRow> rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({{"n", r.n},
                       {"mode", r.mode},
                       {"min_value", r.min_value},
                       {"certified", r.certified}});
    }
    return out;
}

}  // namespace tghz
