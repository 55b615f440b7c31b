#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "tghz/classical.hpp"
#include "tghz/history.hpp"
#include "tghz/paradox.hpp"
#include "tghz/pauli.hpp"

using tghz::generalized_pauli;
using tghz::ghz_history_state;
using tghz::HistoryState;
using tghz::PauliKind;
using tghz::temporal_witness_family;
using tghz::verify_ghz_paradox;
using tghz::witness_expectation;
using tghz::WitnessWord;

namespace {

WitnessWord word_from(const std::string& s, std::size_t d = 2) {
    std::vector<PauliKind> letters;
    for (char c : s) letters.push_back(tghz::pauli_from_char(c));
    return WitnessWord(std::move(letters), d);
}

}  // namespace

TEST_CASE("qubit generators are the textbook matrices") {
    const auto x = generalized_pauli(PauliKind::X, 2).matrix;
    CHECK(x(0, 0) == std::complex<double>(0, 0));
    CHECK(x(0, 1) == std::complex<double>(1, 0));
    CHECK(x(1, 0) == std::complex<double>(1, 0));
    CHECK(x(1, 1) == std::complex<double>(0, 0));

    const auto z = generalized_pauli(PauliKind::Z, 2).matrix;
    CHECK(z(0, 0) == std::complex<double>(1, 0));
    CHECK(z(1, 1) == std::complex<double>(-1, 0));
    CHECK(z(0, 1) == std::complex<double>(0, 0));

    const auto y = generalized_pauli(PauliKind::Y, 2).matrix;
    CHECK(y(0, 1) == std::complex<double>(0, -1));
    CHECK(y(1, 0) == std::complex<double>(0, 1));

    CHECK_THROWS_AS(generalized_pauli(PauliKind::X, 1), std::invalid_argument);
}

TEST_CASE("generators are unitary with order d") {
    for (std::size_t d = 2; d <= 12; ++d) {
        for (auto kind : {PauliKind::I, PauliKind::X, PauliKind::Y, PauliKind::Z}) {
            const auto m = generalized_pauli(kind, d).matrix;
            const Eigen::MatrixXcd gram = m * m.adjoint();
            const Eigen::MatrixXcd id =
                Eigen::MatrixXcd::Identity(m.rows(), m.cols());
            CHECK((gram - id).cwiseAbs().maxCoeff() < 1e-12);

            Eigen::MatrixXcd power = id;
            for (std::size_t k = 0; k < d; ++k) power = power * m;
            CHECK((power - id).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("X cubed is the identity at d = 3") {
    const auto x = generalized_pauli(PauliKind::X, 3).matrix;
    const Eigen::MatrixXcd x3 = x * x * x;
    CHECK((x3 - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("GHZ history state amplitudes") {
    const auto state = ghz_history_state(3);
    const double a = 1.0 / std::sqrt(2.0);
    REQUIRE(state.amplitudes().size() == 8);
    CHECK(std::abs(state.amplitudes()(0) - a) < 1e-15);
    CHECK(std::abs(state.amplitudes()(7) + a) < 1e-15);
    for (int i = 1; i < 7; ++i) CHECK(std::abs(state.amplitudes()(i)) == 0.0);
    CHECK(std::abs(state.amplitudes().norm() - 1.0) < 1e-15);

    const auto pair = ghz_history_state(2);
    CHECK(std::abs(pair.amplitudes()(0) - a) < 1e-15);
    CHECK(std::abs(pair.amplitudes()(3) + a) < 1e-15);

    CHECK_THROWS_AS(ghz_history_state(1), std::invalid_argument);
}

TEST_CASE("basis history amplitudes") {
    const auto state = ghz_history_state(3);
    const double a = 1.0 / std::sqrt(2.0);
    const std::size_t zeros[] = {0, 0, 0};
    const std::size_t mixed[] = {0, 0, 1};
    const std::size_t ones[] = {1, 1, 1};
    CHECK(std::abs(tghz::history_amplitude(state, zeros) - a) < 1e-15);
    CHECK(std::abs(tghz::history_amplitude(state, mixed)) == 0.0);
    CHECK(std::abs(tghz::history_amplitude(state, ones) + a) < 1e-15);

    const std::size_t bad[] = {0, 0, 2};
    CHECK_THROWS_AS(tghz::history_amplitude(state, bad), std::out_of_range);
    const std::size_t short_seq[] = {0, 0};
    CHECK_THROWS_AS(tghz::history_amplitude(state, short_seq), std::invalid_argument);
}

TEST_CASE("witness expectations on the GHZ history") {
    const auto state = ghz_history_state(3);
    CHECK(std::abs(witness_expectation(state, word_from("XXX")) + 1.0) < 1e-10);
    CHECK(std::abs(witness_expectation(state, word_from("XYY")) - 1.0) < 1e-10);
    CHECK(std::abs(witness_expectation(state, word_from("YXY")) - 1.0) < 1e-10);
    CHECK(std::abs(witness_expectation(state, word_from("YYX")) - 1.0) < 1e-10);
    CHECK(std::abs(witness_expectation(state, word_from("III")) - 1.0) < 1e-12);

    CHECK_THROWS_AS(witness_expectation(state, word_from("XX")), std::invalid_argument);
    CHECK_THROWS_AS(witness_expectation(state, word_from("XXX", 3)), std::invalid_argument);
}

TEST_CASE("witness family structure") {
    const auto family = temporal_witness_family(3);
    REQUIRE(family.size() == 4);
    std::vector<std::string> names;
    for (const auto& w : family) names.push_back(w.str());
    const std::vector<std::string> expected{"XXX", "YYX", "XYY", "YXY"};
    for (const auto& e : expected) {
        CHECK(std::find(names.begin(), names.end(), e) != names.end());
    }

    for (std::size_t slot = 0; slot < 3; ++slot) {
        std::size_t x_count = 0;
        std::size_t y_count = 0;
        for (const auto& w : family) {
            if (w.letters()[slot] == PauliKind::X) ++x_count;
            if (w.letters()[slot] == PauliKind::Y) ++y_count;
        }
        CHECK(x_count == 2);
        CHECK(y_count == 2);
    }

    CHECK(temporal_witness_family(5).size() == 6);
    CHECK_THROWS_AS(temporal_witness_family(4), std::invalid_argument);
    CHECK_THROWS_AS(temporal_witness_family(2), std::invalid_argument);
}

TEST_CASE("paradox verification on the GHZ family") {
    const auto state = ghz_history_state(3);
    const auto family = temporal_witness_family(3);
    const auto report = verify_ghz_paradox(state, family);
    CHECK(report.is_common_eigenvector);
    CHECK(report.classical_product_constraint_holds);
    CHECK(report.is_paradox);
    REQUIRE(report.eigenvalues.size() == 4);
    CHECK(std::abs(report.eigenvalues[0] + 1.0) < 1e-10);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(report.eigenvalues[i] - 1.0) < 1e-10);
    CHECK(std::abs(report.quantum_product + 1.0) < 1e-10);
}

TEST_CASE("a single word is no paradox") {
    const auto state = ghz_history_state(3);
    const std::vector<WitnessWord> single{word_from("XXX")};
    const auto report = verify_ghz_paradox(state, single);
    CHECK(report.is_common_eigenvector);
    CHECK_FALSE(report.classical_product_constraint_holds);
    CHECK_FALSE(report.is_paradox);
}

TEST_CASE("paradox holds for larger odd node counts") {
    for (std::size_t m : {5u, 7u}) {
        const auto report = verify_ghz_paradox(ghz_history_state(m), temporal_witness_family(m));
        CHECK(report.is_paradox);
        CHECK(std::abs(report.eigenvalues.front() + 1.0) < 1e-10);
        for (std::size_t i = 1; i < report.eigenvalues.size(); ++i) {
            CHECK(std::abs(report.eigenvalues[i] - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("the quantum product sits far below the classical boundary") {
    CHECK(-1.0 < tghz::closed_form_continuous_min(4));
    CHECK(tghz::closed_form_continuous_min(4) < tghz::closed_form_qubit_min(4));
}

TEST_CASE("shape mismatches are rejected by the verifier") {
    const auto state = ghz_history_state(3);
    const std::vector<WitnessWord> wrong{word_from("XXXX")};
    CHECK_THROWS_AS(verify_ghz_paradox(state, wrong), std::invalid_argument);
    CHECK_THROWS_AS(verify_ghz_paradox(state, std::vector<WitnessWord>{}),
                    std::invalid_argument);
}

TEST_CASE("odd-dimension spectra avoid -1") {
    for (std::size_t d : {3u, 5u, 7u}) {
        for (std::size_t m : {1u, 2u, 3u}) {
            const auto report = tghz::odd_dimension_nogo_check(d, m, 10);
            CHECK(report.all_eigenvalues_in_S);
            CHECK_FALSE(report.minus_one_found);
            CHECK(report.max_root_distance < 1e-8);
        }
    }
}

TEST_CASE("single letters at d = 3 have root-of-unity spectra") {
    const auto report = tghz::odd_dimension_nogo_check(3, 1, 0);
    CHECK(report.words_checked == 3);
    CHECK(report.all_eigenvalues_in_S);
    CHECK_FALSE(report.minus_one_found);
}

TEST_CASE("the no-go check guards its preconditions") {
    CHECK_THROWS_AS(tghz::odd_dimension_nogo_check(4, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(tghz::odd_dimension_nogo_check(2, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(tghz::odd_dimension_nogo_check(3, 9, 10), std::invalid_argument);
}

TEST_CASE("history states validate their invariants") {
    Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(8);
    bad(0) = 0.5;
    CHECK_THROWS_AS(HistoryState(3, 2, bad), std::invalid_argument);
    Eigen::VectorXcd wrong_len = Eigen::VectorXcd::Zero(7);
    wrong_len(0) = 1.0;
    CHECK_THROWS_AS(HistoryState(3, 2, wrong_len), std::invalid_argument);
}
