#include <doctest.h>

#include <cmath>
#include <complex>

#include "qpcam/qsim.hpp"
#include "test_util.hpp"

using namespace qpcam;
using namespace qpcam::qsim;

TEST_CASE("zero state has amplitude 1 at basis 0") {
    auto s1 = new_zero_state(1);
    REQUIRE(s1.amplitudes.size() == 2);
    CHECK(s1.amplitudes[0] == Amplitude{1.0});
    CHECK(s1.amplitudes[1] == Amplitude{0.0});

    auto s2 = new_zero_state(2);
    REQUIRE(s2.amplitudes.size() == 4);
    CHECK(s2.amplitudes[0] == Amplitude{1.0});

    auto s9 = new_zero_state(9);
    REQUIRE(s9.amplitudes.size() == 512);
    CHECK(s9.amplitudes[0] == Amplitude{1.0});

    CHECK_THROWS_AS(new_zero_state(0), std::invalid_argument);
    CHECK_THROWS_AS(new_zero_state(25), std::invalid_argument);
}

TEST_CASE("init_from_amplitudes validates and renormalizes") {
    auto s = init_from_amplitudes({Amplitude{1}, Amplitude{0}});
    CHECK(s.num_qubits == 1);

    auto s2 = init_from_amplitudes({Amplitude{0.6}, Amplitude{0.0, 0.8}});
    CHECK(probabilities(s2)[1] == doctest::Approx(0.64).epsilon(1e-12));

    auto s3 = init_from_amplitudes(std::vector<Amplitude>(4, Amplitude{0.5}));
    for (double p : probabilities(s3)) CHECK(p == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(init_from_amplitudes({Amplitude{1}, Amplitude{0}, Amplitude{0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(init_from_amplitudes({Amplitude{0}, Amplitude{0}}), std::invalid_argument);
    CHECK_THROWS_AS(init_from_amplitudes({Amplitude{2}, Amplitude{0}}), std::invalid_argument);
}

TEST_CASE("single-qubit gates match hand matrices") {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    auto h = apply_gate(new_zero_state(1), Gate::h(0));
    CHECK(std::abs(h.amplitudes[0] - Amplitude{inv_sqrt2}) < 1e-15);
    CHECK(std::abs(h.amplitudes[1] - Amplitude{inv_sqrt2}) < 1e-15);

    auto rx = apply_gate(new_zero_state(1), Gate::rx(M_PI / 2.0, 0));
    CHECK(std::abs(rx.amplitudes[0] - Amplitude{std::cos(M_PI / 4.0)}) < 1e-15);
    CHECK(std::abs(rx.amplitudes[1] - Amplitude{0.0, -std::sin(M_PI / 4.0)}) < 1e-15);

    auto p = probabilities(apply_gate(new_zero_state(1), Gate::rx(M_PI / 3.0, 0)));
    CHECK(p[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("gate validation rejects bad indices") {
    CHECK_THROWS_AS(apply_gate(new_zero_state(2), Gate::x(2)), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(new_zero_state(2), Gate::x(0, {{0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(new_zero_state(2), Gate::x(0, {{1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(new_zero_state(2), Gate::x(0, {{1, 1}, {1, 0}})),
                    std::invalid_argument);
}

TEST_CASE("CZ leaves all basis probabilities unchanged on random states") {
    for (int trial = 0; trial < 100; ++trial) {
        auto s = testutil::random_state(3, 1000 + trial);
        const auto before = probabilities(s);
        const auto after = probabilities(apply_gate(s, Gate::z(0, {{1, 1}})));
        for (std::size_t i = 0; i < before.size(); ++i)
            CHECK(std::abs(before[i] - after[i]) <= 1e-15);
    }
}

TEST_CASE("apply_circuit composes sequentially") {
    auto s = testutil::random_state(2, 7);
    Circuit empty{2, {}};
    CHECK(testutil::max_amplitude_diff(s, apply_circuit(s, empty)) == 0.0);

    Circuit xx{2, {Gate::x(0), Gate::x(0)}};
    CHECK(testutil::max_amplitude_diff(s, apply_circuit(s, xx)) < 1e-15);

    Circuit wrong{3, {}};
    CHECK_THROWS_AS(apply_circuit(s, wrong), std::invalid_argument);
}

TEST_CASE("every gate matrix is unitary within 1e-12") {
    CounterRng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const Gate g = testutil::random_gate(4, rng);
        const auto m = g.matrix();
        // U† U
        const Amplitude r00 = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
        const Amplitude r01 = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
        const Amplitude r10 = std::conj(m[1]) * m[0] + std::conj(m[3]) * m[2];
        const Amplitude r11 = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
        CHECK(std::abs(r00 - Amplitude{1.0}) < 1e-12);
        CHECK(std::abs(r01) < 1e-12);
        CHECK(std::abs(r10) < 1e-12);
        CHECK(std::abs(r11 - Amplitude{1.0}) < 1e-12);
    }
}

TEST_CASE("random circuits preserve norm and invert exactly") {
    for (int trial = 0; trial < 20; ++trial) {
        const int num_qubits = 2 + trial % 10;  // up to 11
        const auto circuit = testutil::random_circuit(num_qubits, 200, 999 + trial);
        const auto initial = testutil::random_state(num_qubits, 55 + trial);
        auto evolved = apply_circuit(initial, circuit);
        CHECK(std::abs(state_norm(evolved) - 1.0) <= 1e-9);

        Circuit inverse{num_qubits, {}};
        for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it)
            inverse.gates.push_back(it->inverse());
        const auto restored = apply_circuit(evolved, inverse);
        CHECK(testutil::max_amplitude_diff(initial, restored) <= 1e-9);
    }
}

TEST_CASE("diagonal gates leave probabilities exactly unchanged") {
    CounterRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = testutil::random_state(4, 300 + trial);
        const auto before = probabilities(s);
        Gate diag;
        switch (trial % 3) {
            case 0: diag = Gate::z(static_cast<int>(rng.next_below(4))); break;
            case 1: diag = Gate::z(0, {{1, 1}}); break;
            default: diag = Gate::rz(rng.next_double() * 6.28, 2, {{3, 0}}); break;
        }
        const auto after = probabilities(apply_gate(s, diag));
        for (std::size_t i = 0; i < before.size(); ++i)
            CHECK(std::abs(before[i] - after[i]) <= 1e-12);
    }
}

TEST_CASE("measurement sampling is deterministic and concentrates") {
    auto zero = new_zero_state(3);
    auto h100 = sample_measurements(zero, 100, 1);
    REQUIRE(h100.counts.size() == 1);
    CHECK(h100.counts.at(0) == 100);

    auto plus = apply_gate(new_zero_state(1), Gate::h(0));
    auto hist = sample_measurements(plus, 1000000, 123);
    const double f0 = static_cast<double>(hist.counts.at(0)) / 1e6;
    CHECK(f0 >= 0.497);
    CHECK(f0 <= 0.503);

    auto again = sample_measurements(plus, 1000000, 123);
    CHECK(again.counts == hist.counts);
    auto other = sample_measurements(plus, 1000000, 124);
    CHECK(other.counts != hist.counts);

    CHECK_THROWS_AS(sample_measurements(plus, 0, 1), std::invalid_argument);
}

TEST_CASE("circuit depth uses ASAP layering over touched qubits") {
    CHECK(circuit_depth({3, {}}) == 0);
    CHECK(circuit_depth({2, {Gate::h(0), Gate::h(1)}}) == 1);
    CHECK(circuit_depth({2, {Gate::h(0), Gate::x(1, {{0, 1}}), Gate::h(1)}}) == 3);
}
