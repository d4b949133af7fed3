#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "qpcam/frqi.hpp"
#include "qpcam/rng.hpp"
#include "test_util.hpp"

using namespace qpcam;
using namespace qpcam::frqi;

namespace {

GrayImage random_image(int side, std::uint64_t seed) {
    CounterRng rng(seed);
    GrayImage img(side);
    for (double& p : img.pixels) p = rng.next_double();
    return img;
}

double mean_abs_error(const GrayImage& a, const GrayImage& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) acc += std::abs(a.pixels[i] - b.pixels[i]);
    return acc / static_cast<double>(a.pixels.size());
}

}  // namespace

TEST_CASE("intensity maps linearly to angle") {
    GrayImage img(2);
    img.pixels = {0.0, 1.0, 2.0 / 3.0, 0.5};
    const auto angles = image_to_angles(img);
    CHECK(angles.thetas[0] == doctest::Approx(0.0));
    CHECK(angles.thetas[1] == doctest::Approx(M_PI / 2.0));
    CHECK(angles.thetas[2] == doctest::Approx(M_PI / 3.0));
    CHECK(angles.thetas[3] == doctest::Approx(M_PI / 4.0));
}

TEST_CASE("prepared state puts cos/sin amplitudes at (i,c)") {
    FrqiLayout layout{1};

    AngleImage black{1, {0.0, 0.0, 0.0, 0.0}};
    auto s = prepare_frqi_state(black, layout);
    for (std::uint64_t i = 0; i < 4; ++i) {
        CHECK(std::abs(s.amplitudes[layout.basis_index(i, 0)] - qsim::Amplitude{0.5}) < 1e-12);
        CHECK(std::abs(s.amplitudes[layout.basis_index(i, 1)]) < 1e-12);
    }

    AngleImage white{1, {M_PI / 2, M_PI / 2, M_PI / 2, M_PI / 2}};
    auto w = prepare_frqi_state(white, layout);
    for (std::uint64_t i = 0; i < 4; ++i)
        CHECK(std::abs(w.amplitudes[layout.basis_index(i, 1)] - qsim::Amplitude{0.5}) < 1e-12);

    // Mixed angle set: conditional P(c=1|i) = sin^2(theta_i).
    AngleImage mixed{1, {M_PI / 2, M_PI / 3, M_PI / 51, 0.0}};
    const auto probs = qsim::probabilities(prepare_frqi_state(mixed, layout));
    const double expected[] = {1.0, 0.75, std::sin(M_PI / 51) * std::sin(M_PI / 51), 0.0};
    for (std::uint64_t i = 0; i < 4; ++i) {
        const double p0 = probs[layout.basis_index(i, 0)];
        const double p1 = probs[layout.basis_index(i, 1)];
        CHECK(p1 / (p0 + p1) == doctest::Approx(expected[i]).epsilon(1e-9));
    }
}

TEST_CASE("position marginal is uniform for any angle image") {
    FrqiLayout layout{2};
    const auto img = random_image(4, 99);
    const auto probs = qsim::probabilities(prepare_frqi_state(image_to_angles(img), layout));
    for (std::uint64_t i = 0; i < layout.pixel_count(); ++i) {
        const double marginal =
            probs[layout.basis_index(i, 0)] + probs[layout.basis_index(i, 1)];
        CHECK(marginal == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    }
}

TEST_CASE("encoder circuit reproduces the direct amplitude construction") {
    for (int trial = 0; trial < 50; ++trial) {
        const int n = (trial % 2) + 1;  // 2x2 and 4x4
        FrqiLayout layout{n};
        const auto angles = image_to_angles(random_image(1 << n, 500 + trial));
        const auto direct = prepare_frqi_state(angles, layout);
        const auto circuit = build_frqi_encoder_circuit(angles, layout);
        const auto via_gates =
            qsim::apply_circuit(qsim::new_zero_state(layout.num_qubits()), circuit);
        CHECK(testutil::max_amplitude_diff(direct, via_gates) <= 1e-9);
    }
}

TEST_CASE("encoder circuit structure: H per positional qubit plus one rotation per pixel") {
    FrqiLayout tiny{1};
    const auto c2 = build_frqi_encoder_circuit(AngleImage{1, {0.1, 0.2, 0.3, 0.4}}, tiny);
    CHECK(c2.gates.size() == 2 + 4);

    FrqiLayout full{4};
    AngleImage a16{4, std::vector<double>(256, 0.3)};
    const auto c16 = build_frqi_encoder_circuit(a16, full);
    CHECK(c16.gates.size() == 8 + 256);
    CHECK(c16.num_qubits == 9);
}

TEST_CASE("decode estimates theta from conditional counts") {
    FrqiLayout layout{1};
    qsim::MeasurementHistogram hist;
    hist.shots = 100;
    hist.counts[layout.basis_index(2, 0)] = 50;
    hist.counts[layout.basis_index(2, 1)] = 50;
    const auto img = decode_histogram(hist, layout);
    CHECK(img.pixels[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(img.pixels[0] == 0.0);  // unobserved pixels decode to black

    qsim::MeasurementHistogram dark;
    dark.shots = 10;
    dark.counts[layout.basis_index(1, 0)] = 10;
    CHECK(decode_histogram(dark, layout).pixels[1] == 0.0);

    qsim::MeasurementHistogram bad;
    bad.shots = 1;
    bad.counts[8] = 1;  // out of range for 3 qubits
    CHECK_THROWS_AS(decode_histogram(bad, layout), std::invalid_argument);
}

TEST_CASE("exact-probability decode round-trips random images") {
    for (int trial = 0; trial < 20; ++trial) {
        FrqiLayout layout{4};
        const auto img = random_image(16, 700 + trial);
        const auto state = prepare_frqi_state(image_to_angles(img), layout);
        const auto decoded = decode_weights(qsim::probabilities(state), layout);
        for (std::size_t i = 0; i < img.pixels.size(); ++i)
            CHECK(std::abs(decoded.pixels[i] - img.pixels[i]) <= 1e-6);
    }
}

TEST_CASE("measured image estimates converge with shots") {
    FrqiLayout layout{1};
    AngleImage white{1, std::vector<double>(4, M_PI / 2)};
    const auto state = prepare_frqi_state(white, layout);
    const auto img = measure_image(state, 1000, 5, layout);
    for (double p : img.pixels) CHECK(p == 1.0);

    // Mixed 2x2 at 1e6 shots: MAE within binomial error bound.
    AngleImage mixed{1, {M_PI / 2, M_PI / 3, M_PI / 51, 0.0}};
    const auto ideal = angles_to_image(mixed);
    const auto measured =
        measure_image(prepare_frqi_state(mixed, layout), 1000000, 11, layout);
    CHECK(mean_abs_error(ideal, measured) <= 0.01);

    // Determinism per seed.
    const auto again = measure_image(prepare_frqi_state(mixed, layout), 4096, 3, layout);
    const auto third = measure_image(prepare_frqi_state(mixed, layout), 4096, 3, layout);
    CHECK(again.pixels == third.pixels);
}

TEST_CASE("redaction rewrites exactly the chosen pixels") {
    const auto angles = image_to_angles(random_image(4, 1234));

    const auto unchanged = redact_pixels(angles, {}, M_PI / 4);
    CHECK(unchanged.thetas == angles.thetas);

    std::set<std::size_t> all;
    for (std::size_t i = 0; i < 16; ++i) all.insert(i);
    const auto gray = redact_pixels(angles, all, M_PI / 4);
    for (double t : gray.thetas) CHECK(t == doctest::Approx(M_PI / 4));

    const std::set<std::size_t> some{1, 5, 9, 13};
    const auto partial = redact_pixels(angles, some, M_PI / 4);
    for (std::size_t i = 0; i < 16; ++i) {
        if (some.count(i))
            CHECK(partial.thetas[i] == doctest::Approx(M_PI / 4));
        else
            CHECK(partial.thetas[i] == angles.thetas[i]);
    }

    CHECK_THROWS_AS(redact_pixels(angles, {16}, M_PI / 4), std::invalid_argument);
}

TEST_CASE("gate categories act on the decoded image as permutation/inversion/no-op") {
    FrqiLayout layout{2};
    const int k = 1;  // positional qubit p_1
    const auto img = random_image(4, 4321);
    const auto state = prepare_frqi_state(image_to_angles(img), layout);
    const auto base = decode_weights(qsim::probabilities(state), layout);

    SUBCASE("X on p_k permutes pixels by i XOR 2^k") {
        const auto moved = qsim::apply_gate(state, qsim::Gate::x(layout.positional_qubit(k)));
        const auto decoded = decode_weights(qsim::probabilities(moved), layout);
        for (std::uint64_t i = 0; i < 16; ++i)
            CHECK(decoded.pixels[i ^ (1ULL << k)] ==
                  doctest::Approx(base.pixels[i]).epsilon(1e-9));
    }

    SUBCASE("CX(p_k -> c) complements intensity where bit k is set") {
        const auto flipped = qsim::apply_gate(
            state, qsim::Gate::x(layout.color_qubit(), {{layout.positional_qubit(k), 1}}));
        const auto decoded = decode_weights(qsim::probabilities(flipped), layout);
        for (std::uint64_t i = 0; i < 16; ++i) {
            const double expect = (i >> k) & 1 ? 1.0 - base.pixels[i] : base.pixels[i];
            CHECK(decoded.pixels[i] == doctest::Approx(expect).epsilon(1e-9));
        }
    }

    SUBCASE("CZ and CRZ leave the decoded image untouched") {
        for (const auto& gate :
             {qsim::Gate::z(layout.color_qubit(), {{layout.positional_qubit(k), 1}}),
              qsim::Gate::rz(M_PI / 2, layout.color_qubit(), {{layout.positional_qubit(k), 1}})}) {
            const auto decoded =
                decode_weights(qsim::probabilities(qsim::apply_gate(state, gate)), layout);
            for (std::uint64_t i = 0; i < 16; ++i)
                CHECK(decoded.pixels[i] == doctest::Approx(base.pixels[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("angle CSV round-trip") {
    const auto angles = image_to_angles(random_image(4, 77));
    const auto path = std::filesystem::temp_directory_path() / "qpcam_angles_test.csv";
    write_angles_csv(angles, path);
    const auto back = read_angles_csv(path);
    REQUIRE(back.n == angles.n);
    for (std::size_t i = 0; i < angles.thetas.size(); ++i)
        CHECK(back.thetas[i] == doctest::Approx(angles.thetas[i]).epsilon(1e-15));
    std::filesystem::remove(path);
}

TEST_CASE("PGM round-trip with 8-bit quantization") {
    const auto img = random_image(16, 2024);
    const auto path = std::filesystem::temp_directory_path() / "qpcam_pgm_test.pgm";
    write_pgm(img, path);
    const auto back = read_pgm(path);
    REQUIRE(back.side == 16);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        CHECK(std::abs(back.pixels[i] - img.pixels[i]) <= 0.5 / 255.0 + 1e-12);
    std::filesystem::remove(path);
}
