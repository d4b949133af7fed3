#include "qpcam/frqi.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace qpcam::frqi {

namespace {

constexpr double kHalfPi = M_PI / 2.0;

void validate_angles(const AngleImage& angles) {
    if (angles.n < 1) throw std::invalid_argument("angle image needs n >= 1");
    if (angles.thetas.size() != (1ULL << (2 * angles.n)))
        throw std::invalid_argument("theta count does not match 4^n");
    for (double t : angles.thetas)
        if (!(t >= 0.0 && t <= kHalfPi + 1e-12))
            throw std::invalid_argument("theta outside [0, pi/2]: " + std::to_string(t));
}

}  // namespace

AngleImage image_to_angles(const GrayImage& img) {
    validate_image(img);
    AngleImage angles;
    angles.n = int_log2(static_cast<std::uint64_t>(img.side));
    angles.thetas.resize(img.pixel_count());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) angles.thetas[i] = img.pixels[i] * kHalfPi;
    return angles;
}

GrayImage angles_to_image(const AngleImage& angles) {
    validate_angles(angles);
    GrayImage img(angles.side());
    for (std::size_t i = 0; i < angles.thetas.size(); ++i) {
        double p = angles.thetas[i] / kHalfPi;
        img.pixels[i] = std::clamp(p, 0.0, 1.0);
    }
    return img;
}

qsim::StateVector prepare_frqi_state(const AngleImage& angles, const FrqiLayout& layout) {
    validate_angles(angles);
    if (layout.n != angles.n) throw std::invalid_argument("layout n does not match angle image");
    const double scale = 1.0 / static_cast<double>(1 << layout.n);
    std::vector<qsim::Amplitude> amps(1ULL << layout.num_qubits());
    for (std::uint64_t i = 0; i < angles.thetas.size(); ++i) {
        const double t = angles.thetas[i];
        amps[layout.basis_index(i, 0)] = qsim::Amplitude{std::cos(t) * scale};
        amps[layout.basis_index(i, 1)] = qsim::Amplitude{std::sin(t) * scale};
    }
    return qsim::init_from_amplitudes(std::move(amps));
}

qsim::Circuit build_frqi_encoder_circuit(const AngleImage& angles, const FrqiLayout& layout) {
    validate_angles(angles);
    if (layout.n != angles.n) throw std::invalid_argument("layout n does not match angle image");
    qsim::Circuit circuit;
    circuit.num_qubits = layout.num_qubits();
    for (int k = 0; k < layout.num_positional(); ++k)
        circuit.gates.push_back(qsim::Gate::h(layout.positional_qubit(k)));
    for (std::uint64_t i = 0; i < angles.thetas.size(); ++i) {
        std::vector<qsim::Control> controls;
        controls.reserve(layout.num_positional());
        for (int k = 0; k < layout.num_positional(); ++k)
            controls.push_back({layout.positional_qubit(k), static_cast<int>((i >> k) & 1ULL)});
        circuit.gates.push_back(
            qsim::Gate::ry(2.0 * angles.thetas[i], layout.color_qubit(), std::move(controls)));
    }
    return circuit;
}

GrayImage decode_weights(const std::vector<double>& weights, const FrqiLayout& layout) {
    if (weights.size() != (1ULL << layout.num_qubits()))
        throw std::invalid_argument("weight count does not match 2^(2n+1)");
    GrayImage img(1 << layout.n, 0.0);
    for (std::uint64_t i = 0; i < layout.pixel_count(); ++i) {
        const double c0 = weights[layout.basis_index(i, 0)];
        const double c1 = weights[layout.basis_index(i, 1)];
        if (c0 < 0.0 || c1 < 0.0) throw std::invalid_argument("negative basis weight");
        const double total = c0 + c1;
        if (total == 0.0) {
            img.pixels[i] = 0.0;  // unobserved pixel reads as redacted
            continue;
        }
        const double ratio = std::clamp(c1 / total, 0.0, 1.0);
        const double theta = std::asin(std::sqrt(ratio));
        img.pixels[i] = std::clamp(theta / kHalfPi, 0.0, 1.0);
    }
    return img;
}

GrayImage decode_histogram(const qsim::MeasurementHistogram& hist, const FrqiLayout& layout) {
    const std::uint64_t dim = 1ULL << layout.num_qubits();
    std::vector<double> weights(dim, 0.0);
    for (const auto& [basis, count] : hist.counts) {
        if (basis >= dim)
            throw std::invalid_argument("histogram basis index out of range: " +
                                        std::to_string(basis));
        weights[basis] += static_cast<double>(count);
    }
    return decode_weights(weights, layout);
}

GrayImage measure_image(const qsim::StateVector& state, std::uint64_t shots, std::uint64_t seed,
                        const FrqiLayout& layout) {
    return decode_histogram(qsim::sample_measurements(state, shots, seed), layout);
}

AngleImage redact_pixels(const AngleImage& angles, const std::set<std::size_t>& pixel_indices,
                         double theta_r) {
    validate_angles(angles);
    if (!(theta_r >= 0.0 && theta_r <= kHalfPi))
        throw std::invalid_argument("redaction angle outside [0, pi/2]");
    AngleImage out = angles;
    for (std::size_t i : pixel_indices) {
        if (i >= out.thetas.size())
            throw std::invalid_argument("pixel index out of range: " + std::to_string(i));
        out.thetas[i] = theta_r;
    }
    return out;
}

void write_angles_csv(const AngleImage& angles, const std::filesystem::path& path) {
    validate_angles(angles);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.precision(17);
    for (double t : angles.thetas) out << t << "\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

AngleImage read_angles_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::vector<double> thetas;
    double v = 0.0;
    while (in >> v) thetas.push_back(v);
    if (thetas.empty() || !is_power_of_two(thetas.size()))
        throw std::runtime_error("theta count must be a power of four");
    AngleImage angles;
    angles.n = int_log2(thetas.size()) / 2;
    if ((1ULL << (2 * angles.n)) != thetas.size())
        throw std::runtime_error("theta count must be a power of four");
    angles.thetas = std::move(thetas);
    return angles;
}

}  // namespace qpcam::frqi
