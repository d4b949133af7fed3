#include "qpcam/nn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qpcam/rng.hpp"

namespace qpcam::nn {

using nlohmann::json;

namespace {

std::size_t product(const std::vector<std::size_t>& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct ShapeNCHW {
    std::size_t n, c, h, w;
};

ShapeNCHW as_nchw(const Tensor& t) {
    require(t.shape.size() == 4, "expected a [N,C,H,W] tensor");
    return {t.shape[0], t.shape[1], t.shape[2], t.shape[3]};
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape_)
    : shape(std::move(shape_)), data(product(shape), 0.0) {}

Tensor Tensor::zeros_like(const Tensor& other) {
    Tensor t;
    t.shape = other.shape;
    t.data.assign(other.data.size(), 0.0);
    return t;
}

std::vector<std::size_t> NetworkSpec::output_shape() const {
    std::vector<std::size_t> shape = input_shape;
    for (std::size_t li = 0; li < layers.size(); ++li) {
        const LayerSpec& layer = layers[li];
        if (const auto* dense = std::get_if<DenseSpec>(&layer)) {
            require(product(shape) == dense->in,
                    "dense layer " + std::to_string(li) + " expects " +
                        std::to_string(dense->in) + " inputs, got " +
                        std::to_string(product(shape)));
            shape = {dense->out};
        } else if (const auto* conv = std::get_if<Conv2dSpec>(&layer)) {
            require(shape.size() == 3 && shape[0] == conv->in_channels,
                    "conv layer " + std::to_string(li) + " input mismatch");
            const std::size_t padded = shape[1] + 2 * conv->pad;
            require(padded >= conv->kernel, "conv kernel larger than padded input");
            shape = {conv->out_channels, shape[1] + 2 * conv->pad - conv->kernel + 1,
                     shape[2] + 2 * conv->pad - conv->kernel + 1};
        } else if (std::holds_alternative<MaxPool2Spec>(layer)) {
            require(shape.size() == 3 && shape[1] % 2 == 0 && shape[2] % 2 == 0,
                    "maxpool layer " + std::to_string(li) + " needs even spatial dims");
            shape = {shape[0], shape[1] / 2, shape[2] / 2};
        }
        // ReLU keeps the shape.
    }
    return shape;
}

NetworkParams init_params(const NetworkSpec& spec, std::uint64_t seed) {
    spec.output_shape();  // validate layer compatibility
    NetworkParams params;
    params.spec = spec;
    CounterRng rng(derive_seed(seed, "init"));
    for (std::size_t li = 0; li < spec.layers.size(); ++li) {
        const std::string prefix = "layer" + std::to_string(li);
        if (const auto* dense = std::get_if<DenseSpec>(&spec.layers[li])) {
            Tensor w({dense->out, dense->in});
            const double limit = std::sqrt(6.0 / static_cast<double>(dense->in));
            for (double& v : w.data) v = (2.0 * rng.next_double() - 1.0) * limit;
            params.tensors.emplace_back(prefix + ".weight", std::move(w));
            params.tensors.emplace_back(prefix + ".bias", Tensor({dense->out}));
        } else if (const auto* conv = std::get_if<Conv2dSpec>(&spec.layers[li])) {
            Tensor w({conv->out_channels, conv->in_channels, conv->kernel, conv->kernel});
            const double fan_in =
                static_cast<double>(conv->in_channels * conv->kernel * conv->kernel);
            const double limit = std::sqrt(6.0 / fan_in);
            for (double& v : w.data) v = (2.0 * rng.next_double() - 1.0) * limit;
            params.tensors.emplace_back(prefix + ".weight", std::move(w));
            params.tensors.emplace_back(prefix + ".bias", Tensor({conv->out_channels}));
        }
    }
    return params;
}

namespace {

// Index of each layer's weight tensor in NetworkParams::tensors (-1 if none).
std::vector<int> tensor_base_of_layer(const NetworkSpec& spec) {
    std::vector<int> base(spec.layers.size(), -1);
    int next = 0;
    for (std::size_t li = 0; li < spec.layers.size(); ++li) {
        if (std::holds_alternative<DenseSpec>(spec.layers[li]) ||
            std::holds_alternative<Conv2dSpec>(spec.layers[li])) {
            base[li] = next;
            next += 2;
        }
    }
    return base;
}

Tensor dense_forward(const DenseSpec& spec, const Tensor& w, const Tensor& b, const Tensor& x) {
    const std::size_t n = x.shape[0];
    const std::size_t in = spec.in;
    const std::size_t out = spec.out;
    require(x.numel() == n * in, "dense input size mismatch");
    Tensor y({n, out});
    for (std::size_t s = 0; s < n; ++s) {
        const double* xi = x.data.data() + s * in;
        double* yo = y.data.data() + s * out;
        for (std::size_t o = 0; o < out; ++o) {
            const double* wo = w.data.data() + o * in;
            double acc = b.data[o];
            for (std::size_t i = 0; i < in; ++i) acc += wo[i] * xi[i];
            yo[o] = acc;
        }
    }
    return y;
}

Tensor conv_forward(const Conv2dSpec& spec, const Tensor& w, const Tensor& b, const Tensor& x) {
    const auto [n, c, h, wd] = as_nchw(x);
    require(c == spec.in_channels, "conv input channel mismatch");
    const std::size_t k = spec.kernel;
    const std::size_t oh = h + 2 * spec.pad - k + 1;
    const std::size_t ow = wd + 2 * spec.pad - k + 1;
    Tensor y({n, spec.out_channels, oh, ow});
    const long pad = static_cast<long>(spec.pad);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t oc = 0; oc < spec.out_channels; ++oc) {
            double* yo = y.data.data() + ((s * spec.out_channels + oc) * oh) * ow;
            const double bias = b.data[oc];
            for (std::size_t i = 0; i < oh * ow; ++i) yo[i] = bias;
            for (std::size_t ic = 0; ic < c; ++ic) {
                const double* xi = x.data.data() + ((s * c + ic) * h) * wd;
                const double* wk = w.data.data() + ((oc * c + ic) * k) * k;
                for (std::size_t ky = 0; ky < k; ++ky) {
                    for (std::size_t kx = 0; kx < k; ++kx) {
                        const double wv = wk[ky * k + kx];
                        for (std::size_t yy = 0; yy < oh; ++yy) {
                            const long sy = static_cast<long>(yy + ky) - pad;
                            if (sy < 0 || sy >= static_cast<long>(h)) continue;
                            const double* xrow = xi + static_cast<std::size_t>(sy) * wd;
                            double* yrow = yo + yy * ow;
                            for (std::size_t xx = 0; xx < ow; ++xx) {
                                const long sx = static_cast<long>(xx + kx) - pad;
                                if (sx < 0 || sx >= static_cast<long>(wd)) continue;
                                yrow[xx] += wv * xrow[sx];
                            }
                        }
                    }
                }
            }
        }
    }
    return y;
}

Tensor maxpool_forward(const Tensor& x, std::vector<std::size_t>* argmax) {
    const auto [n, c, h, w] = as_nchw(x);
    require(h % 2 == 0 && w % 2 == 0, "maxpool needs even spatial dims");
    Tensor y({n, c, h / 2, w / 2});
    if (argmax) argmax->assign(y.numel(), 0);
    std::size_t oi = 0;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t ch = 0; ch < c; ++ch) {
            const double* xi = x.data.data() + ((s * c + ch) * h) * w;
            const std::size_t plane = ((s * c + ch) * h) * w;
            for (std::size_t yy = 0; yy < h; yy += 2) {
                for (std::size_t xx = 0; xx < w; xx += 2, ++oi) {
                    std::size_t best = yy * w + xx;
                    for (const std::size_t cand :
                         {yy * w + xx + 1, (yy + 1) * w + xx, (yy + 1) * w + xx + 1})
                        if (xi[cand] > xi[best]) best = cand;
                    y.data[oi] = xi[best];
                    if (argmax) (*argmax)[oi] = plane + best;
                }
            }
        }
    }
    return y;
}

}  // namespace

Tensor forward(const NetworkParams& params, const Tensor& input, bool record,
               ActivationTrace* trace) {
    require(!input.shape.empty(), "input needs a batch dimension");
    const std::size_t batch = input.shape[0];
    require(input.numel() == batch * product(params.spec.input_shape),
            "input does not match spec input shape");
    if (record) {
        require(trace != nullptr, "record requested without a trace");
        trace->layer_inputs.clear();
        trace->pool_argmax.clear();
    }

    const auto base = tensor_base_of_layer(params.spec);
    Tensor x = input;
    // Normalize to [N, per-sample shape...].
    x.shape.assign(1, batch);
    x.shape.insert(x.shape.end(), params.spec.input_shape.begin(),
                   params.spec.input_shape.end());

    for (std::size_t li = 0; li < params.spec.layers.size(); ++li) {
        if (record) trace->layer_inputs.push_back(x);
        const LayerSpec& layer = params.spec.layers[li];
        if (const auto* dense = std::get_if<DenseSpec>(&layer)) {
            Tensor flat = std::move(x);
            flat.shape = {batch, dense->in};
            x = dense_forward(*dense, params.tensors[base[li]].second,
                              params.tensors[base[li] + 1].second, flat);
        } else if (const auto* conv = std::get_if<Conv2dSpec>(&layer)) {
            x = conv_forward(*conv, params.tensors[base[li]].second,
                             params.tensors[base[li] + 1].second, x);
        } else if (std::holds_alternative<ReluSpec>(layer)) {
            for (double& v : x.data) v = v > 0.0 ? v : 0.0;
        } else {
            std::vector<std::size_t> argmax;
            x = maxpool_forward(x, record ? &argmax : nullptr);
            if (record) trace->pool_argmax.push_back(std::move(argmax));
        }
    }
    if (record) trace->output = x;
    return x;
}

Tensor forward(const NetworkParams& params, const Tensor& input) {
    return forward(params, input, false, nullptr);
}

Gradients backward(const NetworkParams& params, const ActivationTrace& trace,
                   const Tensor& output_grad) {
    require(trace.layer_inputs.size() == params.spec.layers.size(),
            "trace does not match network depth (was forward run with record?)");
    Gradients grads;
    grads.reserve(params.tensors.size());
    for (const auto& [name, tensor] : params.tensors) grads.push_back(Tensor::zeros_like(tensor));

    const auto base = tensor_base_of_layer(params.spec);
    Tensor gy = output_grad;
    std::size_t pool_cursor = trace.pool_argmax.size();

    for (std::size_t li = params.spec.layers.size(); li-- > 0;) {
        const LayerSpec& layer = params.spec.layers[li];
        const Tensor& x = trace.layer_inputs[li];
        if (const auto* dense = std::get_if<DenseSpec>(&layer)) {
            const std::size_t n = x.shape[0];
            const Tensor& w = params.tensors[base[li]].second;
            Tensor& gw = grads[base[li]];
            Tensor& gb = grads[base[li] + 1];
            Tensor gx = Tensor::zeros_like(x);
            for (std::size_t s = 0; s < n; ++s) {
                const double* xi = x.data.data() + s * dense->in;
                const double* gyo = gy.data.data() + s * dense->out;
                double* gxi = gx.data.data() + s * dense->in;
                for (std::size_t o = 0; o < dense->out; ++o) {
                    const double g = gyo[o];
                    if (g == 0.0) continue;
                    gb.data[o] += g;
                    const double* wo = w.data.data() + o * dense->in;
                    double* gwo = gw.data.data() + o * dense->in;
                    for (std::size_t i = 0; i < dense->in; ++i) {
                        gwo[i] += g * xi[i];
                        gxi[i] += g * wo[i];
                    }
                }
            }
            gy = std::move(gx);
        } else if (const auto* conv = std::get_if<Conv2dSpec>(&layer)) {
            const auto [n, c, h, wd] = as_nchw(x);
            const std::size_t k = conv->kernel;
            const std::size_t oh = gy.shape[2], ow = gy.shape[3];
            const long pad = static_cast<long>(conv->pad);
            const Tensor& w = params.tensors[base[li]].second;
            Tensor& gw = grads[base[li]];
            Tensor& gb = grads[base[li] + 1];
            Tensor gx = Tensor::zeros_like(x);
            for (std::size_t s = 0; s < n; ++s) {
                for (std::size_t oc = 0; oc < conv->out_channels; ++oc) {
                    const double* gyo =
                        gy.data.data() + ((s * conv->out_channels + oc) * oh) * ow;
                    for (std::size_t i = 0; i < oh * ow; ++i) gb.data[oc] += gyo[i];
                    for (std::size_t ic = 0; ic < c; ++ic) {
                        const double* xi = x.data.data() + ((s * c + ic) * h) * wd;
                        double* gxi = gx.data.data() + ((s * c + ic) * h) * wd;
                        const double* wk = w.data.data() + ((oc * c + ic) * k) * k;
                        double* gwk = gw.data.data() + ((oc * c + ic) * k) * k;
                        for (std::size_t ky = 0; ky < k; ++ky) {
                            for (std::size_t kx = 0; kx < k; ++kx) {
                                const double wv = wk[ky * k + kx];
                                double gwv = 0.0;
                                for (std::size_t yy = 0; yy < oh; ++yy) {
                                    const long sy = static_cast<long>(yy + ky) - pad;
                                    if (sy < 0 || sy >= static_cast<long>(h)) continue;
                                    const double* xrow = xi + static_cast<std::size_t>(sy) * wd;
                                    double* gxrow = gxi + static_cast<std::size_t>(sy) * wd;
                                    const double* gyrow = gyo + yy * ow;
                                    for (std::size_t xx = 0; xx < ow; ++xx) {
                                        const long sx = static_cast<long>(xx + kx) - pad;
                                        if (sx < 0 || sx >= static_cast<long>(wd)) continue;
                                        const double g = gyrow[xx];
                                        gwv += g * xrow[sx];
                                        gxrow[sx] += g * wv;
                                    }
                                }
                                gwk[ky * k + kx] += gwv;
                            }
                        }
                    }
                }
            }
            gy = std::move(gx);
        } else if (std::holds_alternative<ReluSpec>(layer)) {
            Tensor gx = gy;
            for (std::size_t i = 0; i < gx.data.size(); ++i)
                if (x.data[i] <= 0.0) gx.data[i] = 0.0;
            gx.shape = x.shape;
            gy = std::move(gx);
        } else {
            --pool_cursor;
            const auto& argmax = trace.pool_argmax[pool_cursor];
            Tensor gx = Tensor::zeros_like(x);
            for (std::size_t i = 0; i < argmax.size(); ++i) gx.data[argmax[i]] += gy.data[i];
            gy = std::move(gx);
        }
    }
    return grads;
}

OptimizerState make_optimizer(const NetworkParams& params, const AdamConfig& config) {
    OptimizerState state;
    state.config = config;
    for (const auto& [name, tensor] : params.tensors) {
        state.first_moment.push_back(Tensor::zeros_like(tensor));
        state.second_moment.push_back(Tensor::zeros_like(tensor));
    }
    return state;
}

void adam_step(NetworkParams& params, const Gradients& grads, OptimizerState& state) {
    require(grads.size() == params.tensors.size(), "gradient/parameter count mismatch");
    ++state.step;
    const auto& cfg = state.config;
    const double bias1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(state.step));
    const double bias2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(state.step));
    for (std::size_t t = 0; t < grads.size(); ++t) {
        require(grads[t].numel() == params.tensors[t].second.numel(),
                "gradient shape mismatch at tensor " + std::to_string(t));
        auto& p = params.tensors[t].second.data;
        auto& m = state.first_moment[t].data;
        auto& v = state.second_moment[t].data;
        const auto& g = grads[t].data;
        for (std::size_t i = 0; i < p.size(); ++i) {
            m[i] = cfg.beta1 * m[i] + (1.0 - cfg.beta1) * g[i];
            v[i] = cfg.beta2 * v[i] + (1.0 - cfg.beta2) * g[i] * g[i];
            const double mhat = m[i] / bias1;
            const double vhat = v[i] / bias2;
            p[i] -= cfg.lr * mhat / (std::sqrt(vhat) + cfg.eps);
        }
    }
}

Tensor softmax(const Tensor& logits) {
    require(logits.shape.size() == 2, "softmax expects [N, C] logits");
    Tensor out = logits;
    const std::size_t n = logits.shape[0], c = logits.shape[1];
    for (std::size_t s = 0; s < n; ++s) {
        double* row = out.data.data() + s * c;
        const double mx = *std::max_element(row, row + c);
        double sum = 0.0;
        for (std::size_t i = 0; i < c; ++i) {
            row[i] = std::exp(row[i] - mx);
            sum += row[i];
        }
        for (std::size_t i = 0; i < c; ++i) row[i] /= sum;
    }
    return out;
}

LossResult softmax_cross_entropy(const Tensor& logits, const std::vector<int>& labels) {
    require(logits.shape.size() == 2, "cross-entropy expects [N, C] logits");
    const std::size_t n = logits.shape[0], c = logits.shape[1];
    require(labels.size() == n, "label count does not match batch");
    Tensor probs = softmax(logits);
    LossResult result;
    result.logits_grad = probs;
    double loss = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        const int y = labels[s];
        require(y >= 0 && static_cast<std::size_t>(y) < c, "label out of range");
        const double p = std::max(probs.data[s * c + y], 1e-300);
        loss -= std::log(p);
        result.logits_grad.data[s * c + y] -= 1.0;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (double& g : result.logits_grad.data) g *= inv_n;
    result.loss = loss * inv_n;
    return result;
}

GradCheckReport grad_check(const NetworkSpec& spec, std::uint64_t seed) {
    NetworkParams params = init_params(spec, seed);
    CounterRng rng(derive_seed(seed, "gradcheck"));

    const std::size_t batch = 2;
    Tensor input({batch, product(spec.input_shape)});
    for (double& v : input.data) v = rng.next_gaussian();
    const auto out_shape = spec.output_shape();
    require(out_shape.size() == 1, "grad_check expects a flat logits head");
    std::vector<int> labels(batch);
    for (int& y : labels) y = static_cast<int>(rng.next_below(out_shape[0]));

    const auto loss_of = [&]() {
        const Tensor logits = forward(params, input);
        return softmax_cross_entropy(logits, labels).loss;
    };

    ActivationTrace trace;
    const Tensor logits = forward(params, input, true, &trace);
    const LossResult loss = softmax_cross_entropy(logits, labels);
    const Gradients analytic = backward(params, trace, loss.logits_grad);

    GradCheckReport report;
    const double step = 1e-5;
    for (std::size_t t = 0; t < params.tensors.size(); ++t) {
        auto& data = params.tensors[t].second.data;
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double saved = data[i];
            data[i] = saved + step;
            const double up = loss_of();
            data[i] = saved - step;
            const double down = loss_of();
            data[i] = saved;
            const double numeric = (up - down) / (2.0 * step);
            const double a = analytic[t].data[i];
            const double scale = std::max({1e-6, std::abs(a), std::abs(numeric)});
            report.max_rel_error = std::max(report.max_rel_error, std::abs(a - numeric) / scale);
            ++report.params_checked;
        }
    }
    return report;
}

namespace {

json layer_to_json(const LayerSpec& layer) {
    if (const auto* d = std::get_if<DenseSpec>(&layer))
        return json{{"kind", "dense"}, {"in", d->in}, {"out", d->out}};
    if (const auto* c = std::get_if<Conv2dSpec>(&layer))
        return json{{"kind", "conv2d"},
                    {"in_channels", c->in_channels},
                    {"out_channels", c->out_channels},
                    {"kernel", c->kernel},
                    {"pad", c->pad}};
    if (std::holds_alternative<ReluSpec>(layer)) return json{{"kind", "relu"}};
    return json{{"kind", "maxpool2"}};
}

LayerSpec layer_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "dense")
        return DenseSpec{j.at("in").get<std::size_t>(), j.at("out").get<std::size_t>()};
    if (kind == "conv2d")
        return Conv2dSpec{j.at("in_channels").get<std::size_t>(),
                          j.at("out_channels").get<std::size_t>(),
                          j.at("kernel").get<std::size_t>(), j.at("pad").get<std::size_t>()};
    if (kind == "relu") return ReluSpec{};
    if (kind == "maxpool2") return MaxPool2Spec{};
    throw std::invalid_argument("unknown layer kind: " + kind);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw std::runtime_error("truncated parameter file header");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64_le(std::ostream& out, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64_le(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw std::runtime_error("truncated parameter payload");
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(bits);
}

}  // namespace

std::string spec_to_json(const NetworkSpec& spec) {
    json j;
    j["input_shape"] = spec.input_shape;
    j["layers"] = json::array();
    for (const LayerSpec& layer : spec.layers) j["layers"].push_back(layer_to_json(layer));
    return j.dump();
}

NetworkSpec spec_from_json(const std::string& text) {
    const json j = json::parse(text);
    NetworkSpec spec;
    spec.input_shape = j.at("input_shape").get<std::vector<std::size_t>>();
    for (const json& l : j.at("layers")) spec.layers.push_back(layer_from_json(l));
    return spec;
}

void save_params(const NetworkParams& params, const std::filesystem::path& path,
                 std::uint64_t seed) {
    json header;
    header["format"] = "qpcam-net-1";
    header["seed"] = seed;
    header["spec"] = json::parse(spec_to_json(params.spec));
    header["tensors"] = json::array();
    for (const auto& [name, tensor] : params.tensors)
        header["tensors"].push_back(json{{"name", name}, {"shape", tensor.shape}});
    const std::string text = header.dump();

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write("QPNP", 4);
    put_u32(out, static_cast<std::uint32_t>(text.size()));
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    for (const auto& [name, tensor] : params.tensors)
        for (double v : tensor.data) put_f64_le(out, v);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

NetworkParams load_params(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string_view(magic, 4) != "QPNP")
        throw std::runtime_error("not a qpcam parameter file: " + path.string());
    const std::uint32_t header_len = get_u32(in);
    std::string text(header_len, '\0');
    in.read(text.data(), header_len);
    if (!in) throw std::runtime_error("truncated parameter header");
    const json header = json::parse(text);
    if (header.at("format").get<std::string>() != "qpcam-net-1")
        throw std::runtime_error("unsupported parameter format");

    NetworkParams params;
    params.spec = spec_from_json(header.at("spec").dump());
    for (const json& t : header.at("tensors")) {
        Tensor tensor(t.at("shape").get<std::vector<std::size_t>>());
        for (double& v : tensor.data) v = get_f64_le(in);
        params.tensors.emplace_back(t.at("name").get<std::string>(), std::move(tensor));
    }
    return params;
}

}  // namespace qpcam::nn
