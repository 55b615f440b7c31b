#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tghz/pauli.hpp"

namespace tghz {

/// Hard ceiling on dense history-space dimension d^m; everything here is
/// desk-scale verification on explicit matrices.
inline constexpr std::size_t dense_dimension_cap = 10'000;

namespace detail {

inline std::size_t history_space_dim(std::size_t d, std::size_t m) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (dim > dense_dimension_cap / d) {
            throw std::invalid_argument("history space dimension d^m exceeds the dense cap of " +
                                        std::to_string(dense_dimension_cap));
        }
        dim *= d;
    }
    return dim;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace detail

/// One temporal observable: a single-letter operator per time node, all in
/// dimension d.
class WitnessWord {
public:
    WitnessWord(std::vector<PauliKind> letters, std::size_t d)
        : letters_(std::move(letters)), d_(d) {
        if (letters_.size() < 2) {
            throw std::invalid_argument("WitnessWord: need at least two letters");
        }
        if (d < 2) throw std::invalid_argument("WitnessWord: requires d >= 2");
    }

    std::span<const PauliKind> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    std::size_t dimension() const noexcept { return d_; }

    std::string str() const {
        std::string s;
        s.reserve(letters_.size());
        for (auto k : letters_) s.push_back(pauli_char(k));
        return s;
    }

private:
    std::vector<PauliKind> letters_;
    std::size_t d_;
};

/// Amplitude vector over the d^m computational-basis histories of m time
/// nodes; slot 0 is the most significant index digit.
class HistoryState {
public:
    HistoryState(std::size_t m, std::size_t d, Eigen::VectorXcd amplitudes)
        : m_(m), d_(d), amps_(std::move(amplitudes)) {
        if (m < 2) throw std::invalid_argument("HistoryState: requires m >= 2");
        if (d < 2) throw std::invalid_argument("HistoryState: requires d >= 2");
        const std::size_t dim = detail::history_space_dim(d, m);
        if (amps_.size() != static_cast<Eigen::Index>(dim)) {
            throw std::invalid_argument("HistoryState: expected " + std::to_string(dim) +
                                        " amplitudes, got " + std::to_string(amps_.size()));
        }
        if (std::abs(amps_.norm() - 1.0) > 1e-12) {
            throw std::invalid_argument("HistoryState: amplitudes must have unit norm");
        }
    }

    std::size_t m() const noexcept { return m_; }
    std::size_t dimension() const noexcept { return d_; }
    const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }

private:
    std::size_t m_;
    std::size_t d_;
    Eigen::VectorXcd amps_;
};

/// GHZ history state on m qubit nodes: (|0...0> - |1...1>)/sqrt(2).
inline HistoryState ghz_history_state(std::size_t m) {
    if (m < 2) throw std::invalid_argument("ghz_history_state: requires m >= 2");
    const std::size_t dim = detail::history_space_dim(2, m);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    const double a = 1.0 / std::sqrt(2.0);
    v(0) = a;
    v(static_cast<Eigen::Index>(dim - 1)) = -a;
    return HistoryState(m, 2, std::move(v));
}

/// Amplitude at one basis history; its squared modulus is that outcome
/// sequence's probability.
inline std::complex<double> history_amplitude(const HistoryState& state,
                                              std::span<const std::size_t> outcomes) {
    if (outcomes.size() != state.m()) {
        throw std::invalid_argument("history_amplitude: expected " + std::to_string(state.m()) +
                                    " outcomes, got " + std::to_string(outcomes.size()));
    }
    std::size_t idx = 0;
    for (auto o : outcomes) {
        if (o >= state.dimension()) {
            throw std::out_of_range("history_amplitude: basis index " + std::to_string(o) +
                                    " outside [0, " + std::to_string(state.dimension()) + ")");
        }
        idx = idx * state.dimension() + o;
    }
    return state.amplitudes()(static_cast<Eigen::Index>(idx));
}

/// Dense operator of a word: the slot-ordered tensor product of its letter
/// matrices.
inline Eigen::MatrixXcd word_matrix(const WitnessWord& w) {
    detail::history_space_dim(w.dimension(), w.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (auto kind : w.letters()) {
        m = detail::kron(m, generalized_pauli(kind, w.dimension()).matrix);
    }
    return m;
}

/// <psi| W |psi> for a word acting one letter per time node.
inline std::complex<double> witness_expectation(const HistoryState& state, const WitnessWord& w) {
    if (w.dimension() != state.dimension() || w.size() != state.m()) {
        throw std::invalid_argument("witness_expectation: word shape (m = " +
                                    std::to_string(w.size()) + ", d = " +
                                    std::to_string(w.dimension()) + ") does not match state (m = " +
                                    std::to_string(state.m()) + ", d = " +
                                    std::to_string(state.dimension()) + ")");
    }
    const Eigen::MatrixXcd m = word_matrix(w);
    return state.amplitudes().dot(m * state.amplitudes());
}

}  // namespace tghz
