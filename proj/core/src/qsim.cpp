#include "qpcam/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "qpcam/image.hpp"
#include "qpcam/rng.hpp"

namespace qpcam::qsim {

namespace {

constexpr int kMaxQubits = 24;

const Amplitude kI{0.0, 1.0};

}  // namespace

std::array<Amplitude, 4> Gate::matrix() const {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (kind) {
        case GateKind::X:
            return {Amplitude{0}, Amplitude{1}, Amplitude{1}, Amplitude{0}};
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            return {Amplitude{r}, Amplitude{r}, Amplitude{r}, Amplitude{-r}};
        }
        case GateKind::Z:
            return {Amplitude{1}, Amplitude{0}, Amplitude{0}, Amplitude{-1}};
        case GateKind::Rx:
            return {Amplitude{c}, -kI * s, -kI * s, Amplitude{c}};
        case GateKind::Ry:
            return {Amplitude{c}, Amplitude{-s}, Amplitude{s}, Amplitude{c}};
        case GateKind::Rz:
            return {std::exp(-kI * (theta / 2.0)), Amplitude{0}, Amplitude{0},
                    std::exp(kI * (theta / 2.0))};
    }
    throw std::logic_error("unknown gate kind");
}

Gate Gate::inverse() const {
    Gate inv = *this;
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::Z:
            break;  // self-inverse
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
            inv.theta = -theta;
            break;
    }
    return inv;
}

Gate Gate::x(int target, std::vector<Control> controls) {
    return Gate{GateKind::X, target, std::move(controls), 0.0};
}
Gate Gate::h(int target, std::vector<Control> controls) {
    return Gate{GateKind::H, target, std::move(controls), 0.0};
}
Gate Gate::z(int target, std::vector<Control> controls) {
    return Gate{GateKind::Z, target, std::move(controls), 0.0};
}
Gate Gate::rx(double theta, int target, std::vector<Control> controls) {
    return Gate{GateKind::Rx, target, std::move(controls), theta};
}
Gate Gate::ry(double theta, int target, std::vector<Control> controls) {
    return Gate{GateKind::Ry, target, std::move(controls), theta};
}
Gate Gate::rz(double theta, int target, std::vector<Control> controls) {
    return Gate{GateKind::Rz, target, std::move(controls), theta};
}

void validate_gate(const Gate& gate, int num_qubits) {
    if (gate.target < 0 || gate.target >= num_qubits)
        throw std::invalid_argument("gate target " + std::to_string(gate.target) +
                                    " out of range for " + std::to_string(num_qubits) + " qubits");
    std::uint64_t seen = 0;
    for (const Control& c : gate.controls) {
        if (c.qubit < 0 || c.qubit >= num_qubits)
            throw std::invalid_argument("control qubit " + std::to_string(c.qubit) +
                                        " out of range");
        if (c.qubit == gate.target)
            throw std::invalid_argument("control and target collide on qubit " +
                                        std::to_string(c.qubit));
        if (c.value != 0 && c.value != 1)
            throw std::invalid_argument("control value must be 0 or 1");
        const std::uint64_t bit = 1ULL << c.qubit;
        if (seen & bit) throw std::invalid_argument("duplicate control qubit");
        seen |= bit;
    }
}

StateVector new_zero_state(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count out of range [1," +
                                    std::to_string(kMaxQubits) + "]: " +
                                    std::to_string(num_qubits));
    StateVector s;
    s.num_qubits = num_qubits;
    s.amplitudes.assign(1ULL << num_qubits, Amplitude{0});
    s.amplitudes[0] = Amplitude{1};
    return s;
}

StateVector init_from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.empty() || !is_power_of_two(amps.size()))
        throw std::invalid_argument("amplitude count must be a nonzero power of two");
    double norm2 = 0.0;
    for (const Amplitude& a : amps) norm2 += std::norm(a);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) throw std::invalid_argument("zero amplitude vector");
    if (std::abs(norm - 1.0) > 1e-6)
        throw std::invalid_argument("amplitude norm " + std::to_string(norm) +
                                    " deviates from 1 by more than 1e-6");
    for (Amplitude& a : amps) a /= norm;
    StateVector s;
    s.num_qubits = int_log2(amps.size());
    if (s.num_qubits == 0) throw std::invalid_argument("need at least one qubit");
    s.amplitudes = std::move(amps);
    return s;
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    validate_gate(gate, state.num_qubits);
    const auto m = gate.matrix();
    const std::uint64_t dim = state.amplitudes.size();
    const std::uint64_t tbit = 1ULL << gate.target;
    std::uint64_t cmask = 0, cval = 0;
    for (const Control& c : gate.controls) {
        cmask |= 1ULL << c.qubit;
        if (c.value) cval |= 1ULL << c.qubit;
    }
    auto& a = state.amplitudes;
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & tbit) continue;              // visit each pair once via its target=0 member
        if ((b & cmask) != cval) continue;   // controls unsatisfied: untouched
        const std::uint64_t b1 = b | tbit;
        const Amplitude a0 = a[b];
        const Amplitude a1 = a[b1];
        a[b] = m[0] * a0 + m[1] * a1;
        a[b1] = m[2] * a0 + m[3] * a1;
    }
    return state;
}

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
    if (circuit.num_qubits != state.num_qubits)
        throw std::invalid_argument("circuit qubit count does not match state");
    for (const Gate& g : circuit.gates) state = apply_gate(std::move(state), g);
    return state;
}

std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> p(state.amplitudes.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state.amplitudes[i]);
    return p;
}

double state_norm(const StateVector& state) {
    double norm2 = 0.0;
    for (const Amplitude& a : state.amplitudes) norm2 += std::norm(a);
    return std::sqrt(norm2);
}

MeasurementHistogram sample_measurements(const StateVector& state, std::uint64_t shots,
                                         std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shots must be >= 1");
    const std::vector<double> p = probabilities(state);
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;  // guard against rounding in the tail

    MeasurementHistogram hist;
    hist.shots = shots;
    CounterRng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
        ++hist.counts[idx];
    }
    return hist;
}

int circuit_depth(const Circuit& circuit) {
    std::vector<int> level(circuit.num_qubits, 0);
    int depth = 0;
    for (const Gate& g : circuit.gates) {
        validate_gate(g, circuit.num_qubits);
        int d = level[g.target];
        for (const Control& c : g.controls) d = std::max(d, level[c.qubit]);
        ++d;
        level[g.target] = d;
        for (const Control& c : g.controls) level[c.qubit] = d;
        depth = std::max(depth, d);
    }
    return depth;
}

void write_histogram_csv(const MeasurementHistogram& hist, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "basis_index,count\n";
    for (const auto& [basis, count] : hist.counts) out << basis << "," << count << "\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace qpcam::qsim
