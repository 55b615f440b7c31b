#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tghz/detail/rng.hpp"
#include "tghz/history.hpp"

namespace tghz {

/// Cyclic two-Y witness family on m qubit nodes: the all-X word plus, for
/// each slot i, the word with Y at slots i and i+1 (cyclically) and X
/// elsewhere. Each slot then sees Y twice and X m-1 times, so for odd m
/// every letter count is even and the classical outcome product is forced
/// to one. At m = 3 this is exactly {XXX, YYX, XYY, YXY}.
inline std::vector<WitnessWord> temporal_witness_family(std::size_t m) {
    if (m < 3) {
        throw std::invalid_argument("temporal_witness_family: requires m >= 3, got m = " +
                                    std::to_string(m));
    }
    if (m % 2 == 0) {
        throw std::invalid_argument(
            "temporal_witness_family: no certified family for even m (odd per-slot X count "
            "breaks the classical product constraint), got m = " +
            std::to_string(m));
    }
    std::vector<WitnessWord> words;
    words.reserve(m + 1);
    words.emplace_back(std::vector<PauliKind>(m, PauliKind::X), 2);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<PauliKind> letters(m, PauliKind::X);
        letters[i] = PauliKind::Y;
        letters[(i + 1) % m] = PauliKind::Y;
        words.emplace_back(std::move(letters), 2);
    }
    return words;
}

struct ParadoxReport {
    bool is_common_eigenvector;
    std::vector<std::complex<double>> eigenvalues;
    std::complex<double> quantum_product;
    bool classical_product_constraint_holds;
    bool is_paradox;
};

/// Checks the three ingredients of a GHZ-type contradiction: the state is a
/// common eigenvector of every word, the per-slot letter counts force the
/// classical outcome product to one, and the quantum eigenvalue product is
/// -1. Letter counts force the product exactly when each non-identity kind
/// appears a multiple of d times per slot (any d-th root to that power is
/// one).
inline ParadoxReport verify_ghz_paradox(const HistoryState& state,
                                        std::span<const WitnessWord> words) {
    if (words.empty()) {
        throw std::invalid_argument("verify_ghz_paradox: empty word family");
    }
    for (const auto& w : words) {
        if (w.dimension() != state.dimension() || w.size() != state.m()) {
            throw std::invalid_argument("verify_ghz_paradox: word " + w.str() +
                                        " does not match state shape (m = " +
                                        std::to_string(state.m()) + ", d = " +
                                        std::to_string(state.dimension()) + ")");
        }
    }

    ParadoxReport rep{true, {}, {1.0, 0.0}, true, false};
    constexpr double eigen_tol = 1e-9;
    for (const auto& w : words) {
        const Eigen::MatrixXcd mat = word_matrix(w);
        const Eigen::VectorXcd image = mat * state.amplitudes();
        const std::complex<double> lambda = state.amplitudes().dot(image);
        const double resid = (image - lambda * state.amplitudes()).norm();
        if (resid >= eigen_tol) rep.is_common_eigenvector = false;
        rep.eigenvalues.push_back(lambda);
        rep.quantum_product *= lambda;
    }

    const std::size_t d = state.dimension();
    for (std::size_t slot = 0; slot < state.m(); ++slot) {
        std::array<std::size_t, 3> counts{0, 0, 0};
        for (const auto& w : words) {
            switch (w.letters()[slot]) {
                case PauliKind::X: ++counts[0]; break;
                case PauliKind::Y: ++counts[1]; break;
                case PauliKind::Z: ++counts[2]; break;
                case PauliKind::I: break;
            }
        }
        for (auto c : counts) {
            if (c % d != 0) rep.classical_product_constraint_holds = false;
        }
    }

    rep.is_paradox = rep.is_common_eigenvector && rep.classical_product_constraint_holds &&
                     std::abs(rep.quantum_product + 1.0) < eigen_tol;
    return rep;
}

struct NogoReport {
    bool all_eigenvalues_in_S;
    bool minus_one_found;
    std::size_t words_checked;
    double max_root_distance;
};

/// Odd-dimension spectral check: for the three uniform single-letter words
/// plus a seeded pool of random per-slot letter products, every eigenvalue
/// of the dense tensor-product operator must sit on a d-th root of unity,
/// and none may be -1 (-1 is not a d-th root when d is odd).
inline NogoReport odd_dimension_nogo_check(std::size_t d, std::size_t m,
                                           std::size_t max_word_pool, std::uint64_t seed = 0) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument(
            "odd_dimension_nogo_check: the claim is about odd d >= 3, got d = " +
            std::to_string(d));
    }
    if (m < 1) throw std::invalid_argument("odd_dimension_nogo_check: requires m >= 1");
    detail::history_space_dim(d, m);

    const std::array<Eigen::MatrixXcd, 3> letters{generalized_pauli(PauliKind::X, d).matrix,
                                                  generalized_pauli(PauliKind::Y, d).matrix,
                                                  generalized_pauli(PauliKind::Z, d).matrix};

    std::vector<Eigen::MatrixXcd> words;
    for (const auto& mat : letters) {
        Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(1, 1);
        for (std::size_t slot = 0; slot < m; ++slot) w = detail::kron(w, mat);
        words.push_back(std::move(w));
    }
    detail::Rng rng{detail::mix_seed(seed, 0x6e6f676f)};
    for (std::size_t p = 0; p < max_word_pool; ++p) {
        Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(1, 1);
        for (std::size_t slot = 0; slot < m; ++slot) {
            Eigen::MatrixXcd op = letters[rng.index(3)];
            const std::size_t extra = rng.index(3);
            for (std::size_t f = 0; f < extra; ++f) op = op * letters[rng.index(3)];
            w = detail::kron(w, op);
        }
        words.push_back(std::move(w));
    }

    NogoReport rep{true, false, words.size(), 0.0};
    constexpr double tol = 1e-8;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(d);
    for (const auto& w : words) {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(w, false);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("odd_dimension_nogo_check: eigensolver failed");
        }
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
            const std::complex<double> lambda = solver.eigenvalues()(i);
            const auto nearest = static_cast<std::int64_t>(std::llround(std::arg(lambda) / step));
            const auto k = static_cast<std::size_t>(((nearest % static_cast<std::int64_t>(d)) +
                                                     static_cast<std::int64_t>(d)) %
                                                    static_cast<std::int64_t>(d));
            const double dist =
                std::abs(lambda - PhaseExponent(static_cast<std::int64_t>(k), d).to_complex());
            rep.max_root_distance = std::max(rep.max_root_distance, dist);
            if (dist > tol) rep.all_eigenvalues_in_S = false;
            if (std::abs(lambda + 1.0) <= tol) rep.minus_one_found = true;
        }
    }
    return rep;
}

}  // namespace tghz
