#include "adcnn/ops.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

#include "adcnn/error.hpp"

namespace adcnn {

void ConvGeometry::validate() const {
  if (kernel_h < 1 || kernel_w < 1) throw GeometryError("kernel dims must be positive");
  if (stride_h < 1 || stride_w < 1) throw GeometryError("strides must be positive");
  if (pad_h < 0 || pad_w < 0) throw GeometryError("padding must be non-negative");
}

namespace {

int out_dim(int in, int kernel, int stride, int pad) {
  const int span = in + 2 * pad - kernel;
  if (span < 0) return 0;
  return span / stride + 1;
}

}  // namespace

int ConvGeometry::out_h(int in_h) const {
  const int o = out_dim(in_h, kernel_h, stride_h, pad_h);
  if (o < 1) {
    std::ostringstream os;
    os << "window " << kernel_h << " stride " << stride_h << " pad " << pad_h
       << " yields empty output for input height " << in_h;
    throw GeometryError(os.str());
  }
  return o;
}

int ConvGeometry::out_w(int in_w) const {
  const int o = out_dim(in_w, kernel_w, stride_w, pad_w);
  if (o < 1) {
    std::ostringstream os;
    os << "window " << kernel_w << " stride " << stride_w << " pad " << pad_w
       << " yields empty output for input width " << in_w;
    throw GeometryError(os.str());
  }
  return o;
}

ConvGeometry ConvGeometry::same(int kernel_h, int kernel_w) {
  if (kernel_h % 2 == 0 || kernel_w % 2 == 0) {
    throw GeometryError("same padding requires odd kernels");
  }
  return ConvGeometry{kernel_h, kernel_w, 1, 1, (kernel_h - 1) / 2, (kernel_w - 1) / 2};
}

// --- matmul ---------------------------------------------------------------

void matmul_nn(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    const double* ai = a + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double av = ai[p];
      const double* bp = b + p * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
  }
}

void matmul_nt(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double* bj = b + j * k;
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) acc += ai[p] * bj[p];
      ci[j] += acc;
    }
  }
}

void matmul_tn(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n) {
  for (std::size_t p = 0; p < k; ++p) {
    const double* ap = a + p * m;
    const double* bp = b + p * n;
    for (std::size_t i = 0; i < m; ++i) {
      const double av = ap[i];
      double* ci = c + i * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
  }
}

// --- im2col ----------------------------------------------------------------

void im2col(const double* image, int channels, int height, int width,
            const ConvGeometry& geom, double* columns) {
  const int oh = geom.out_h(height);
  const int ow = geom.out_w(width);
  double* col = columns;
  for (int c = 0; c < channels; ++c) {
    const double* plane = image + static_cast<std::size_t>(c) * height * width;
    for (int ki = 0; ki < geom.kernel_h; ++ki) {
      for (int kj = 0; kj < geom.kernel_w; ++kj) {
        for (int y = 0; y < oh; ++y) {
          const int iy = y * geom.stride_h + ki - geom.pad_h;
          if (iy < 0 || iy >= height) {
            std::fill(col, col + ow, 0.0);
            col += ow;
            continue;
          }
          const double* row = plane + static_cast<std::size_t>(iy) * width;
          for (int x = 0; x < ow; ++x) {
            const int ix = x * geom.stride_w + kj - geom.pad_w;
            *col++ = (ix >= 0 && ix < width) ? row[ix] : 0.0;
          }
        }
      }
    }
  }
}

void col2im(const double* columns, int channels, int height, int width,
            const ConvGeometry& geom, double* image) {
  const int oh = geom.out_h(height);
  const int ow = geom.out_w(width);
  const double* col = columns;
  for (int c = 0; c < channels; ++c) {
    double* plane = image + static_cast<std::size_t>(c) * height * width;
    for (int ki = 0; ki < geom.kernel_h; ++ki) {
      for (int kj = 0; kj < geom.kernel_w; ++kj) {
        for (int y = 0; y < oh; ++y) {
          const int iy = y * geom.stride_h + ki - geom.pad_h;
          if (iy < 0 || iy >= height) {
            col += ow;
            continue;
          }
          double* row = plane + static_cast<std::size_t>(iy) * width;
          for (int x = 0; x < ow; ++x) {
            const int ix = x * geom.stride_w + kj - geom.pad_w;
            if (ix >= 0 && ix < width) row[ix] += col[x];
          }
          col += ow;
        }
      }
    }
  }
}

// --- convolution ------------------------------------------------------------

namespace {

struct ConvDims {
  int n, c, h, w, f, oh, ow;
  std::size_t patch;   // C*kh*kw
  std::size_t pixels;  // oh*ow
};

ConvDims check_conv_shapes(const Tensor& input, const Tensor& weights,
                           const ConvGeometry& geom) {
  geom.validate();
  require_rank(input, 4, "conv2d input");
  require_rank(weights, 4, "conv2d weights");
  if (weights.dim(2) != static_cast<std::size_t>(geom.kernel_h) ||
      weights.dim(3) != static_cast<std::size_t>(geom.kernel_w)) {
    throw ShapeError("conv2d weights " + weights.shape_string() +
                     " disagree with kernel geometry");
  }
  if (input.dim(1) != weights.dim(1)) {
    throw ShapeError("conv2d channel mismatch: input " + input.shape_string() +
                     " vs weights " + weights.shape_string());
  }
  ConvDims d;
  d.n = static_cast<int>(input.dim(0));
  d.c = static_cast<int>(input.dim(1));
  d.h = static_cast<int>(input.dim(2));
  d.w = static_cast<int>(input.dim(3));
  d.f = static_cast<int>(weights.dim(0));
  d.oh = geom.out_h(d.h);
  d.ow = geom.out_w(d.w);
  d.patch = static_cast<std::size_t>(d.c) * geom.kernel_h * geom.kernel_w;
  d.pixels = static_cast<std::size_t>(d.oh) * d.ow;
  return d;
}

}  // namespace

Tensor conv2d_forward(const Tensor& input, const Tensor& weights, const Tensor& bias,
                      const ConvGeometry& geom) {
  const ConvDims d = check_conv_shapes(input, weights, geom);
  require_shape(bias, {static_cast<std::size_t>(d.f)}, "conv2d bias");

  Tensor out(std::vector<std::size_t>{static_cast<std::size_t>(d.n),
                                      static_cast<std::size_t>(d.f),
                                      static_cast<std::size_t>(d.oh),
                                      static_cast<std::size_t>(d.ow)});
  std::vector<double> columns(d.patch * d.pixels);
  const std::size_t image_size = static_cast<std::size_t>(d.c) * d.h * d.w;
  const std::size_t out_size = static_cast<std::size_t>(d.f) * d.pixels;

  for (int n = 0; n < d.n; ++n) {
    im2col(input.data() + n * image_size, d.c, d.h, d.w, geom, columns.data());
    double* dst = out.data() + n * out_size;
    // dst[f, p] = sum_k W[f, k] * col[k, p]
    matmul_nn(weights.data(), columns.data(), dst, static_cast<std::size_t>(d.f),
              d.patch, d.pixels);
    for (int f = 0; f < d.f; ++f) {
      const double bf = bias.data()[f];
      double* row = dst + f * d.pixels;
      for (std::size_t p = 0; p < d.pixels; ++p) row[p] += bf;
    }
  }
  return out;
}

ConvGrads conv2d_backward(const Tensor& grad_out, const Tensor& input,
                          const Tensor& weights, const ConvGeometry& geom) {
  const ConvDims d = check_conv_shapes(input, weights, geom);
  require_shape(grad_out,
                {static_cast<std::size_t>(d.n), static_cast<std::size_t>(d.f),
                 static_cast<std::size_t>(d.oh), static_cast<std::size_t>(d.ow)},
                "conv2d grad_out");

  ConvGrads g;
  g.input = Tensor(input.shape());
  g.weights = Tensor(weights.shape());
  g.bias = Tensor({static_cast<std::size_t>(d.f)});

  std::vector<double> columns(d.patch * d.pixels);
  std::vector<double> col_grad(d.patch * d.pixels);
  const std::size_t image_size = static_cast<std::size_t>(d.c) * d.h * d.w;
  const std::size_t out_size = static_cast<std::size_t>(d.f) * d.pixels;

  for (int n = 0; n < d.n; ++n) {
    const double* gout = grad_out.data() + n * out_size;

    for (int f = 0; f < d.f; ++f) {
      double acc = 0.0;
      const double* row = gout + f * d.pixels;
      for (std::size_t p = 0; p < d.pixels; ++p) acc += row[p];
      g.bias.data()[f] += acc;
    }

    im2col(input.data() + n * image_size, d.c, d.h, d.w, geom, columns.data());
    // gW[f, k] += sum_p gout[f, p] * col[k, p]
    matmul_nt(gout, columns.data(), g.weights.data(), static_cast<std::size_t>(d.f),
              d.pixels, d.patch);

    // col_grad[k, p] = sum_f W[f, k] * gout[f, p]
    std::fill(col_grad.begin(), col_grad.end(), 0.0);
    matmul_tn(weights.data(), gout, col_grad.data(), d.patch,
              static_cast<std::size_t>(d.f), d.pixels);
    col2im(col_grad.data(), d.c, d.h, d.w, geom, g.input.data() + n * image_size);
  }
  return g;
}

// --- max pooling -------------------------------------------------------------

PoolResult maxpool_forward(const Tensor& input, const ConvGeometry& geom) {
  geom.validate();
  require_rank(input, 4, "maxpool input");
  if (geom.pad_h >= geom.kernel_h || geom.pad_w >= geom.kernel_w) {
    throw GeometryError("pool padding must be smaller than the window");
  }
  const int n = static_cast<int>(input.dim(0));
  const int c = static_cast<int>(input.dim(1));
  const int h = static_cast<int>(input.dim(2));
  const int w = static_cast<int>(input.dim(3));
  const int oh = geom.out_h(h);
  const int ow = geom.out_w(w);

  PoolResult r;
  r.output = Tensor({static_cast<std::size_t>(n), static_cast<std::size_t>(c),
                     static_cast<std::size_t>(oh), static_cast<std::size_t>(ow)});
  r.argmax.resize(r.output.size());

  const double* src = input.data();
  double* dst = r.output.data();
  std::size_t out_i = 0;
  for (int ni = 0; ni < n; ++ni) {
    for (int ci = 0; ci < c; ++ci) {
      const std::size_t plane =
          (static_cast<std::size_t>(ni) * c + ci) * static_cast<std::size_t>(h) * w;
      for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < ow; ++x) {
          double best = 0.0;
          std::size_t best_idx = 0;
          bool seen = false;
          for (int ki = 0; ki < geom.kernel_h; ++ki) {
            const int iy = y * geom.stride_h + ki - geom.pad_h;
            if (iy < 0 || iy >= h) continue;
            for (int kj = 0; kj < geom.kernel_w; ++kj) {
              const int ix = x * geom.stride_w + kj - geom.pad_w;
              if (ix < 0 || ix >= w) continue;
              const std::size_t idx = plane + static_cast<std::size_t>(iy) * w + ix;
              const double v = src[idx];
              if (!seen || v > best) {  // strict > keeps the first maximum
                best = v;
                best_idx = idx;
                seen = true;
              }
            }
          }
          if (!seen) throw GeometryError("pool window fell entirely into padding");
          dst[out_i] = best;
          r.argmax[out_i] = best_idx;
          ++out_i;
        }
      }
    }
  }
  return r;
}

Tensor maxpool_backward(const Tensor& grad_out, const std::vector<std::size_t>& argmax,
                        const std::vector<std::size_t>& input_shape) {
  if (grad_out.size() != argmax.size()) {
    throw ShapeError("maxpool backward: grad_out does not match recorded indices");
  }
  Tensor grad_in(input_shape);
  for (std::size_t i = 0; i < argmax.size(); ++i) {
    if (argmax[i] >= grad_in.size()) {
      throw IndexError("maxpool backward: recorded index " + std::to_string(argmax[i]) +
                       " outside input of " + std::to_string(grad_in.size()) +
                       " elements");
    }
    grad_in.data()[argmax[i]] += grad_out.data()[i];
  }
  return grad_in;
}

// --- elementwise --------------------------------------------------------------

Tensor relu_forward(const Tensor& input) {
  Tensor out(input.shape());
  for (std::size_t i = 0; i < input.size(); ++i) {
    out.data()[i] = input.data()[i] > 0.0 ? input.data()[i] : 0.0;
  }
  return out;
}

Tensor relu_backward(const Tensor& grad_out, const Tensor& input) {
  if (grad_out.shape() != input.shape()) {
    throw ShapeError("relu backward: grad " + grad_out.shape_string() +
                     " vs input " + input.shape_string());
  }
  Tensor out(input.shape());
  for (std::size_t i = 0; i < input.size(); ++i) {
    out.data()[i] = input.data()[i] > 0.0 ? grad_out.data()[i] : 0.0;
  }
  return out;
}

// --- dense ---------------------------------------------------------------------

Tensor dense_forward(const Tensor& input, const Tensor& weights, const Tensor& bias) {
  require_rank(input, 2, "dense input");
  require_rank(weights, 2, "dense weights");
  if (input.dim(1) != weights.dim(0)) {
    throw ShapeError("dense: inner dims disagree, input " + input.shape_string() +
                     " vs weights " + weights.shape_string());
  }
  require_shape(bias, {weights.dim(1)}, "dense bias");
  const std::size_t n = input.dim(0), dsz = input.dim(1), m = weights.dim(1);
  Tensor out({n, m});
  matmul_nn(input.data(), weights.data(), out.data(), n, dsz, m);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = out.data() + i * m;
    for (std::size_t j = 0; j < m; ++j) row[j] += bias.data()[j];
  }
  return out;
}

DenseGrads dense_backward(const Tensor& grad_out, const Tensor& input,
                          const Tensor& weights) {
  require_rank(grad_out, 2, "dense grad_out");
  if (input.dim(1) != weights.dim(0)) {
    throw ShapeError("dense backward: inner dims disagree");
  }
  require_shape(grad_out, {input.dim(0), weights.dim(1)}, "dense grad_out");
  const std::size_t n = input.dim(0), dsz = input.dim(1), m = weights.dim(1);

  DenseGrads g;
  g.input = Tensor({n, dsz});
  g.weights = Tensor({dsz, m});
  g.bias = Tensor({m});
  // gX = G * W^T
  matmul_nt(grad_out.data(), weights.data(), g.input.data(), n, m, dsz);
  // gW = X^T * G
  matmul_tn(input.data(), grad_out.data(), g.weights.data(), dsz, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = grad_out.data() + i * m;
    for (std::size_t j = 0; j < m; ++j) g.bias.data()[j] += row[j];
  }
  return g;
}

// --- reshape ---------------------------------------------------------------------

Tensor flatten(const Tensor& input) {
  require_rank(input, 4, "flatten input");
  return input.reshaped({input.dim(0), input.dim(1) * input.dim(2) * input.dim(3)});
}

}  // namespace adcnn
