#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "adcnn/ops.hpp"

namespace adcnn {

enum class LayerKind { conv, relu, maxpool, flatten, dense };

/// One layer of a declarative network description. Padding is stored
/// explicitly; builders resolve "same" to concrete amounts.
struct LayerSpec {
  LayerKind kind = LayerKind::relu;
  int filters = 0;  // conv
  int units = 0;    // dense
  ConvGeometry geom;  // conv and maxpool

  static LayerSpec conv(int filters, int kernel, int stride, int pad);
  static LayerSpec conv_same(int filters, int kernel);
  static LayerSpec relu_layer();
  static LayerSpec maxpool(int window, int stride);
  static LayerSpec flatten_layer();
  static LayerSpec dense(int units);
};

struct NetworkSpec {
  std::array<int, 3> input_chw{1, 0, 0};
  std::vector<LayerSpec> layers;
  int num_classes = 0;
};

/// Output shape after each layer: {c,h,w} for spatial layers, {d} after
/// flatten/dense. Throws GeometryError/ShapeError when inference fails.
std::vector<std::vector<int>> infer_shapes(const NetworkSpec& spec);

/// Full structural validation: shape inference succeeds and the final layer
/// is dense(num_classes).
void validate_network(const NetworkSpec& spec);

int conv_layer_count(const NetworkSpec& spec);
int dense_layer_count(const NetworkSpec& spec);
long long parameter_count(const NetworkSpec& spec);

/// One-line-per-layer text form, stable across runs; used in checkpoints.
std::string serialize_network(const NetworkSpec& spec);
NetworkSpec parse_network(const std::string& text);

enum class ModelScale { paper, desk };

/// Dense head variants: the 512->16 stack and the 1024->32 alternative.
enum class FcStack { fc512, fc1024 };

/// Repeated conv/relu/maxpool blocks with doubling filter counts, then a
/// ReLU-separated dense stack and a 3-way classifier.
/// paper: 1x300x300 input, 6 blocks (4..128 filters), dense 512..16.
/// desk:  1x64x64 input, 4 blocks (4..32 filters), dense 64,32.
NetworkSpec build_deep_convnet(std::array<int, 3> input_chw, ModelScale scale,
                               FcStack fc = FcStack::fc512);

/// 5 conv layers with overlapping 3x3-stride-2 pooling after layers 1, 2 and
/// 5, then three dense layers. Channel widths divided by `divisor`.
NetworkSpec build_alexnet_scaled(std::array<int, 3> input_chw, int divisor);

/// 13 3x3 conv layers in the 2-2-3-3-3 grouping with 2x2 pooling after each
/// group, then three dense layers. Channel widths divided by `divisor`.
NetworkSpec build_vgg16_scaled(std::array<int, 3> input_chw, int divisor);

}  // namespace adcnn
