#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <vector>

#include "qpcam/image.hpp"
#include "qpcam/qsim.hpp"

namespace qpcam::frqi {

// Per-pixel color angles theta_i in [0, pi/2] for a 2^n x 2^n image.
struct AngleImage {
    int n = 0;
    std::vector<double> thetas;

    std::size_t pixel_count() const { return thetas.size(); }
    int side() const { return 1 << n; }
};

// Qubit layout: color qubit at index 0, positional qubits p_0..p_{2n-1} at
// indices 1..2n. Pixel index i = y * 2^n + x; basis index b = (i << 1) | c.
struct FrqiLayout {
    int n = 0;

    int num_qubits() const { return 2 * n + 1; }
    int color_qubit() const { return 0; }
    int positional_qubit(int k) const { return 1 + k; }
    int num_positional() const { return 2 * n; }
    std::size_t pixel_count() const { return 1ULL << (2 * n); }

    std::uint64_t basis_index(std::uint64_t pixel, int color) const {
        return (pixel << 1) | static_cast<std::uint64_t>(color);
    }
};

// theta_i = pixel_i * pi/2: intensity 0 -> black, 1 -> white.
AngleImage image_to_angles(const GrayImage& img);
GrayImage angles_to_image(const AngleImage& angles);

// Amplitude at (i, c=0) is cos(theta_i)/2^n and at (i, c=1) is sin(theta_i)/2^n.
qsim::StateVector prepare_frqi_state(const AngleImage& angles, const FrqiLayout& layout);

// H on every positional qubit, then one RY(2*theta_i) on the color qubit per
// pixel, controlled on all positional qubits matching the bits of i.
qsim::Circuit build_frqi_encoder_circuit(const AngleImage& angles, const FrqiLayout& layout);

// Conditional estimator per pixel: theta = arcsin(sqrt(c1/(c0+c1))); pixels
// with zero counts decode to black.
GrayImage decode_histogram(const qsim::MeasurementHistogram& hist, const FrqiLayout& layout);

// Same estimator over real-valued basis weights; feeding probabilities() gives
// the exact infinite-shot decode.
GrayImage decode_weights(const std::vector<double>& weights, const FrqiLayout& layout);

GrayImage measure_image(const qsim::StateVector& state, std::uint64_t shots, std::uint64_t seed,
                        const FrqiLayout& layout);

// theta_i := theta_r for every index in the set.
AngleImage redact_pixels(const AngleImage& angles, const std::set<std::size_t>& pixel_indices,
                         double theta_r);

// CSV with one theta value per line, row-major.
void write_angles_csv(const AngleImage& angles, const std::filesystem::path& path);
AngleImage read_angles_csv(const std::filesystem::path& path);

}  // namespace qpcam::frqi
