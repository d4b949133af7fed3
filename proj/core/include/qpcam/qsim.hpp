#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

namespace qpcam::qsim {

using Amplitude = std::complex<double>;

// Qubit 0 is the least significant bit of the basis index.
struct StateVector {
    int num_qubits = 0;
    std::vector<Amplitude> amplitudes;
};

enum class GateKind { X, H, Z, Rx, Ry, Rz };

// Control with an explicit required basis value, so control-on-0 needs no
// X conjugation.
struct Control {
    int qubit = 0;
    int value = 1;
};

struct Gate {
    GateKind kind = GateKind::X;
    int target = 0;
    std::vector<Control> controls;
    double theta = 0.0;  // Rx/Ry/Rz only

    // 2x2 unitary, row-major {m00, m01, m10, m11}.
    std::array<Amplitude, 4> matrix() const;
    Gate inverse() const;

    static Gate x(int target, std::vector<Control> controls = {});
    static Gate h(int target, std::vector<Control> controls = {});
    static Gate z(int target, std::vector<Control> controls = {});
    static Gate rx(double theta, int target, std::vector<Control> controls = {});
    static Gate ry(double theta, int target, std::vector<Control> controls = {});
    static Gate rz(double theta, int target, std::vector<Control> controls = {});
};

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
};

struct MeasurementHistogram {
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t shots = 0;
};

// |0...0>. num_qubits must lie in [1, 24] (memory guard).
StateVector new_zero_state(int num_qubits);

// Power-of-two length, norm within 1e-6 of 1; stored renormalized to unit norm.
StateVector init_from_amplitudes(std::vector<Amplitude> amps);

// Throws std::invalid_argument if the gate does not fit the state.
StateVector apply_gate(StateVector state, const Gate& gate);
StateVector apply_circuit(StateVector state, const Circuit& circuit);

std::vector<double> probabilities(const StateVector& state);

// Inverse-CDF sampling with a counter-based generator; deterministic per seed.
MeasurementHistogram sample_measurements(const StateVector& state, std::uint64_t shots,
                                         std::uint64_t seed);

// Longest chain of gates sharing qubits (as-soon-as-possible layering over
// target + control qubits).
int circuit_depth(const Circuit& circuit);

double state_norm(const StateVector& state);
void validate_gate(const Gate& gate, int num_qubits);

// CSV rows "basis_index,count" with a header line.
void write_histogram_csv(const MeasurementHistogram& hist, const std::filesystem::path& path);

}  // namespace qpcam::qsim
