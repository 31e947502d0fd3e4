#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "adcnn/tensor.hpp"

namespace adcnn {

/// Window geometry shared by convolution and pooling.
/// output_dim = floor((input + 2*pad - kernel)/stride) + 1, which must be >= 1.
struct ConvGeometry {
  int kernel_h = 1;
  int kernel_w = 1;
  int stride_h = 1;
  int stride_w = 1;
  int pad_h = 0;
  int pad_w = 0;

  void validate() const;
  int out_h(int in_h) const;
  int out_w(int in_w) const;

  /// Stride-1 geometry whose output matches the input ("same" zero-padding).
  /// Kernel must be odd.
  static ConvGeometry same(int kernel_h, int kernel_w);
};

// --- convolution ----------------------------------------------------------

/// input [N,C,H,W] * weights [F,C,kh,kw] + bias [F] -> [N,F,H',W'].
/// Out-of-bounds taps read zero. Lowered through im2col + matmul.
Tensor conv2d_forward(const Tensor& input, const Tensor& weights, const Tensor& bias,
                      const ConvGeometry& geom);

struct ConvGrads {
  Tensor input;
  Tensor weights;
  Tensor bias;
};

ConvGrads conv2d_backward(const Tensor& grad_out, const Tensor& input,
                          const Tensor& weights, const ConvGeometry& geom);

// --- max pooling -----------------------------------------------------------

struct PoolResult {
  Tensor output;
  /// Per output element: flat index into the input of the selected maximum
  /// (first maximal element in row-major window order).
  std::vector<std::size_t> argmax;
};

PoolResult maxpool_forward(const Tensor& input, const ConvGeometry& geom);

Tensor maxpool_backward(const Tensor& grad_out, const std::vector<std::size_t>& argmax,
                        const std::vector<std::size_t>& input_shape);

// --- elementwise -----------------------------------------------------------

Tensor relu_forward(const Tensor& input);
/// Derivative at exactly 0 is taken as 0.
Tensor relu_backward(const Tensor& grad_out, const Tensor& input);

// --- dense -----------------------------------------------------------------

/// input [N,D] * weights [D,M] + bias [M] -> [N,M].
Tensor dense_forward(const Tensor& input, const Tensor& weights, const Tensor& bias);

struct DenseGrads {
  Tensor input;
  Tensor weights;
  Tensor bias;
};

DenseGrads dense_backward(const Tensor& grad_out, const Tensor& input,
                          const Tensor& weights);

// --- reshape ---------------------------------------------------------------

/// [N,C,H,W] -> [N, C*H*W], row-major order preserved.
Tensor flatten(const Tensor& input);

// --- building blocks (exposed for benchmarks) -------------------------------

/// C[m,n] += sum_k A[m,k] * B[k,n]
void matmul_nn(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n);
/// C[m,n] += sum_k A[m,k] * B[n,k]
void matmul_nt(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n);
/// C[m,n] += sum_k A[k,m] * B[k,n]
void matmul_tn(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n);

/// Unrolls one image [C,H,W] into columns [C*kh*kw, H'*W']; padding taps
/// become zeros.
void im2col(const double* image, int channels, int height, int width,
            const ConvGeometry& geom, double* columns);

/// Transpose of im2col: accumulates columns back into the image buffer.
void col2im(const double* columns, int channels, int height, int width,
            const ConvGeometry& geom, double* image);

}  // namespace adcnn
