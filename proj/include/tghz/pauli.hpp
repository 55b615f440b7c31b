#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "tghz/phase.hpp"

namespace tghz {

enum class PauliKind { I, X, Y, Z };

inline char pauli_char(PauliKind k) {
    switch (k) {
        case PauliKind::I: return 'I';
        case PauliKind::X: return 'X';
        case PauliKind::Y: return 'Y';
        default: return 'Z';
    }
}

inline PauliKind pauli_from_char(char c) {
    switch (c) {
        case 'I': return PauliKind::I;
        case 'X': return PauliKind::X;
        case 'Y': return PauliKind::Y;
        case 'Z': return PauliKind::Z;
        default:
            throw std::invalid_argument(std::string("pauli_from_char: unknown letter '") + c +
                                        "'");
    }
}

/// Generator of the dimension-d Heisenberg group: shift (X), phase (Z), or
/// phased shift (Y), each unitary of order d.
struct GeneralizedPauli {
    PauliKind kind;
    std::size_t d;
    Eigen::MatrixXcd matrix;
};

/// X maps |k> to |k+1 mod d>, Z multiplies |k> by eps^k, and Y maps |k> to
/// eps^k |k-1 mod d>. The bare phased shift has order 2d when d is even, so
/// Y carries the extra global phase e^{i*pi/d} there, restoring Y^d = I and
/// keeping the spectrum inside the d-th roots of unity; at d = 2 this is
/// the textbook Pauli Y. Odd d needs no correction.
inline GeneralizedPauli generalized_pauli(PauliKind kind, std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("generalized_pauli: requires d >= 2, got d = " +
                                    std::to_string(d));
    }
    auto root = [d](std::size_t k) {
        return PhaseExponent(static_cast<std::int64_t>(k), d).to_complex();
    };
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                static_cast<Eigen::Index>(d));
    switch (kind) {
        case PauliKind::I:
            m.setIdentity();
            break;
        case PauliKind::X:
            for (std::size_t k = 0; k < d; ++k) {
                m(static_cast<Eigen::Index>((k + 1) % d), static_cast<Eigen::Index>(k)) = 1.0;
            }
            break;
        case PauliKind::Z:
            for (std::size_t k = 0; k < d; ++k) {
                m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = root(k);
            }
            break;
        case PauliKind::Y: {
            const std::complex<double> fix =
                d % 2 == 0 ? PhaseExponent(1, 2 * d).to_complex() : std::complex<double>{1.0, 0.0};
            for (std::size_t k = 0; k < d; ++k) {
                m(static_cast<Eigen::Index>((k + d - 1) % d), static_cast<Eigen::Index>(k)) =
                    fix * root(k);
            }
            break;
        }
    }
    return {kind, d, std::move(m)};
}

}  // namespace tghz
