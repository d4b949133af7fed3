#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace qpcam::nn {

// Row-major dense tensor of 64-bit reals.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape_);

    std::size_t numel() const { return data.size(); }
    static Tensor zeros_like(const Tensor& other);
};

struct DenseSpec {
    std::size_t in = 0;
    std::size_t out = 0;
};
// 2-D convolution, stride 1, square kernel, zero padding.
struct Conv2dSpec {
    std::size_t in_channels = 0;
    std::size_t out_channels = 0;
    std::size_t kernel = 3;
    std::size_t pad = 1;
};
struct ReluSpec {};
// 2x2 max pooling, stride 2.
struct MaxPool2Spec {};

using LayerSpec = std::variant<DenseSpec, Conv2dSpec, ReluSpec, MaxPool2Spec>;

struct NetworkSpec {
    std::vector<std::size_t> input_shape;  // per sample, e.g. {1,16,16} or {166}
    std::vector<LayerSpec> layers;

    // Per-sample output shape; throws on incompatible adjacent layers.
    std::vector<std::size_t> output_shape() const;
};

// Ordered named parameter tensors ("layer<i>.weight" / "layer<i>.bias").
struct NetworkParams {
    NetworkSpec spec;
    std::vector<std::pair<std::string, Tensor>> tensors;
};

// Gradient tensors aligned index-for-index with NetworkParams::tensors.
using Gradients = std::vector<Tensor>;

struct ActivationTrace {
    std::vector<Tensor> layer_inputs;
    std::vector<std::vector<std::size_t>> pool_argmax;  // flat source index per pooled element
    Tensor output;
};

// He-uniform weights, zero biases; bitwise deterministic per seed.
NetworkParams init_params(const NetworkSpec& spec, std::uint64_t seed);

// Input carries a leading batch dimension. The trace is filled only when
// record is true; backward requires it.
Tensor forward(const NetworkParams& params, const Tensor& input, bool record,
               ActivationTrace* trace);
Tensor forward(const NetworkParams& params, const Tensor& input);

Gradients backward(const NetworkParams& params, const ActivationTrace& trace,
                   const Tensor& output_grad);

struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct OptimizerState {
    AdamConfig config;
    std::vector<Tensor> first_moment;
    std::vector<Tensor> second_moment;
    std::uint64_t step = 0;
};

OptimizerState make_optimizer(const NetworkParams& params, const AdamConfig& config);
void adam_step(NetworkParams& params, const Gradients& grads, OptimizerState& state);

struct LossResult {
    double loss = 0.0;
    Tensor logits_grad;  // d(mean loss)/d(logits)
};

// Mean cross-entropy over the batch with a numerically stable softmax.
LossResult softmax_cross_entropy(const Tensor& logits, const std::vector<int>& labels);

// Row-wise softmax of [N, C] logits.
Tensor softmax(const Tensor& logits);

struct GradCheckReport {
    double max_rel_error = 0.0;
    std::size_t params_checked = 0;
};

// Central differences (step 1e-5) against backward() on a random instance
// of the spec with a softmax cross-entropy head.
GradCheckReport grad_check(const NetworkSpec& spec, std::uint64_t seed);

// Container: "QPNP" magic, little-endian u32 header length, JSON header
// (spec, tensor names/shapes, seed), then little-endian f64 payloads.
void save_params(const NetworkParams& params, const std::filesystem::path& path,
                 std::uint64_t seed = 0);
NetworkParams load_params(const std::filesystem::path& path);

std::string spec_to_json(const NetworkSpec& spec);
NetworkSpec spec_from_json(const std::string& text);

}  // namespace qpcam::nn
