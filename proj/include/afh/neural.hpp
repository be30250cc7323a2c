#pragma once

// Small dense network family: hidden layers with a shared activation, then
// a linear output layer. Policies read the output as [logits..., value];
// Deep-SVDD encoders read it as an embedding.
//
// Parameters are stored as float32. Forward and backward passes accumulate in
// double so finite-difference checks stay meaningful.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace afh::nn {

enum class Activation : std::uint8_t { tanh = 0, relu = 1 };

struct NetSpec {
  std::size_t input_dim = 0;
  std::vector<std::size_t> hidden{128, 64};
  Activation activation = Activation::tanh;
  std::size_t output_dim = 6;
  bool bias = true;

  /// Actor-critic head: `actions` logits followed by one value output.
  static NetSpec policy(std::size_t input_dim, std::size_t actions,
                        std::vector<std::size_t> hidden = {128, 64});
  /// Bias-free relu encoder for Deep-SVDD.
  static NetSpec encoder(std::size_t input_dim, std::vector<std::size_t> hidden, std::size_t embedding);

  void validate() const;
  std::size_t layer_count() const { return hidden.size() + 1; }
  std::size_t layer_input(std::size_t layer) const;
  std::size_t layer_output(std::size_t layer) const;
  /// Width of the last hidden layer, the one feeding the output layer.
  std::size_t latent_width() const { return hidden.empty() ? input_dim : hidden.back(); }

  bool operator==(const NetSpec&) const = default;
};

/// One affine layer. Weights are stored input-major: weight[i * out + o].
template <typename T>
struct Layer {
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<T> weight;
  std::vector<T> bias;  // empty when the spec has no bias terms

  bool operator==(const Layer&) const = default;
};

template <typename T>
struct BasicParams {
  std::vector<Layer<T>> layers;

  static BasicParams zeros(const NetSpec& spec) {
    BasicParams params;
    for (std::size_t l = 0; l < spec.layer_count(); ++l) {
      Layer<T> layer;
      layer.in = spec.layer_input(l);
      layer.out = spec.layer_output(l);
      layer.weight.assign(layer.in * layer.out, T{0});
      if (spec.bias) layer.bias.assign(layer.out, T{0});
      params.layers.push_back(std::move(layer));
    }
    return params;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& layer : layers) n += layer.weight.size() + layer.bias.size();
    return n;
  }

  /// Visit every scalar in canonical order (layer by layer, weights then bias).
  template <typename F>
  void for_each(F&& f) {
    for (auto& layer : layers) {
      for (auto& w : layer.weight) f(w);
      for (auto& b : layer.bias) f(b);
    }
  }
  template <typename F>
  void for_each(F&& f) const {
    for (const auto& layer : layers) {
      for (const auto& w : layer.weight) f(w);
      for (const auto& b : layer.bias) f(b);
    }
  }

  bool matches(const NetSpec& spec) const;
  bool operator==(const BasicParams&) const = default;
};

using ParamSet = BasicParams<float>;
using GradientSet = BasicParams<double>;

extern template struct BasicParams<float>;
extern template struct BasicParams<double>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonFiniteGradient : public std::runtime_error {
 public:
  explicit NonFiniteGradient(std::size_t layer);
  std::size_t layer() const { return layer_; }

 private:
  std::size_t layer_;
};

/// Uniform weights in +-sqrt(6 / fan_in), zero biases. `output_gain` scales
/// the output layer's bound (policies start near-uniform with a small gain).
ParamSet init_params(const NetSpec& spec, std::uint64_t seed, double output_gain = 1.0);

struct ForwardResult {
  std::vector<double> output;
  std::vector<double> latent;

  /// Policy view: the first `actions` outputs are logits, the next is value.
  std::span<const double> logits(std::size_t actions) const { return {output.data(), actions}; }
  double value(std::size_t actions) const { return output[actions]; }
};

/// Activations of every layer for one input; consumed by backward passes.
struct ForwardTrace {
  std::vector<std::vector<double>> activations;  // one per hidden layer
  std::vector<double> output;

  const std::vector<double>& latent() const { return activations.back(); }
};

ForwardResult forward(const ParamSet& params, const NetSpec& spec, std::span<const float> input);
void forward_trace(const ParamSet& params, const NetSpec& spec, std::span<const float> input, ForwardTrace& trace);

/// Adds d(loss)/d(params) for one sample to `grads`, given the trace of that
/// sample and d(loss)/d(output).
void accumulate_gradient(const ParamSet& params, const NetSpec& spec, std::span<const float> input,
                         const ForwardTrace& trace, std::span<const double> output_grad, GradientSet& grads);

struct GradientSample {
  std::span<const float> input;
  std::span<const double> output_grad;
};

/// Batch reverse pass: recomputes forward traces and sums gradients.
/// Throws NonFiniteGradient naming the first offending layer.
GradientSet backward(const ParamSet& params, const NetSpec& spec, std::span<const GradientSample> batch);

void check_finite(const GradientSet& grads);

std::vector<double> softmax(std::span<const double> logits);
double log_softmax_at(std::span<const double> logits, std::size_t index);

struct AdamConfig {
  double lr = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  AdamConfig config;
  GradientSet first_moment;
  GradientSet second_moment;
  std::uint64_t step = 0;

  static AdamState for_spec(const NetSpec& spec, AdamConfig config);
};

/// One bias-corrected Adam update in place.
void adam_step(ParamSet& params, const GradientSet& grads, AdamState& state);

/// Global L2 norm of a gradient set.
double gradient_norm(const GradientSet& grads);
void scale_gradient(GradientSet& grads, double factor);

// -- AGW1 weight container -------------------------------------------------

/// `version` covers both an unknown magic tag and an unsupported format version.
enum class FormatErrorKind { version, shape_mismatch, truncated, io };

class FormatError : public std::runtime_error {
 public:
  FormatError(FormatErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  FormatErrorKind kind() const { return kind_; }

 private:
  FormatErrorKind kind_;
};

inline constexpr std::uint16_t kWeightFormatVersion = 1;

void save_params(std::ostream& out, const NetSpec& spec, const ParamSet& params);
void save_params(const std::string& path, const NetSpec& spec, const ParamSet& params);

struct LoadedParams {
  NetSpec spec;
  ParamSet params;
};

LoadedParams load_params(std::istream& in);
LoadedParams load_params(const std::string& path);
/// Load and require the stored spec to equal `expected`.
ParamSet load_params(std::istream& in, const NetSpec& expected);
ParamSet load_params(const std::string& path, const NetSpec& expected);

/// Trained network plus the spec it was built for. Shared read-only between
/// rollout code paths.
struct PolicySnapshot {
  std::string id;
  NetSpec spec;
  ParamSet params;

  std::size_t action_count() const { return spec.output_dim - 1; }
  ForwardResult evaluate(std::span<const float> input) const { return forward(params, spec, input); }
};

using SnapshotPtr = std::shared_ptr<const PolicySnapshot>;

}  // namespace afh::nn
