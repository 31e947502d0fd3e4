#include "adcnn/loss.hpp"

#include <cmath>

#include "adcnn/error.hpp"

namespace adcnn {

namespace {

constexpr double kProbFloor = 1e-12;

void check_prob_pair(const Tensor& p, const Tensor& t) {
  require_rank(p, 2, "probabilities");
  if (p.shape() != t.shape()) {
    throw ShapeError("probabilities " + p.shape_string() + " vs labels " +
                     t.shape_string());
  }
  const std::size_t n = t.dim(0), classes = t.dim(1);
  for (std::size_t i = 0; i < n; ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < classes; ++j) {
      const double v = t.data()[i * classes + j];
      if (v == 1.0) {
        ++ones;
      } else if (v != 0.0) {
        throw DataError("label row " + std::to_string(i) + " is not one-hot");
      }
    }
    if (ones != 1) throw DataError("label row " + std::to_string(i) + " is not one-hot");
  }
}

/// Weight applied to row i: the weight of its true class, or 1.
double row_weight(const Tensor& t, const Tensor& weights, std::size_t i) {
  if (weights.size() == 0) return 1.0;
  const std::size_t classes = t.dim(1);
  for (std::size_t j = 0; j < classes; ++j) {
    if (t.data()[i * classes + j] == 1.0) return weights.data()[j];
  }
  return 1.0;
}

}  // namespace

Tensor softmax(const Tensor& logits) {
  require_rank(logits, 2, "softmax logits");
  if (logits.dim(1) < 2) throw ShapeError("softmax needs at least two classes");
  if (!logits.all_finite()) throw DataError("softmax: non-finite logit");
  const std::size_t n = logits.dim(0), classes = logits.dim(1);
  Tensor out(logits.shape());
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = logits.data() + i * classes;
    double* dst = out.data() + i * classes;
    double mx = row[0];
    for (std::size_t j = 1; j < classes; ++j) mx = std::max(mx, row[j]);
    double sum = 0.0;
    for (std::size_t j = 0; j < classes; ++j) {
      dst[j] = std::exp(row[j] - mx);
      sum += dst[j];
    }
    for (std::size_t j = 0; j < classes; ++j) dst[j] /= sum;
  }
  return out;
}

double cross_entropy(const Tensor& p, const Tensor& t) {
  return cross_entropy(p, t, Tensor());
}

double cross_entropy(const Tensor& p, const Tensor& t, const Tensor& class_weights) {
  check_prob_pair(p, t);
  if (class_weights.size() != 0) {
    require_shape(class_weights, {t.dim(1)}, "class weights");
  }
  const std::size_t n = t.dim(0), classes = t.dim(1);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row_loss = 0.0;
    for (std::size_t j = 0; j < classes; ++j) {
      const double ti = t.data()[i * classes + j];
      if (ti == 0.0) continue;
      const double pi = std::max(p.data()[i * classes + j], kProbFloor);
      row_loss -= ti * std::log(pi);
    }
    total += row_weight(t, class_weights, i) * row_loss;
  }
  return total / static_cast<double>(n);
}

Tensor softmax_ce_gradient(const Tensor& p, const Tensor& t) {
  return softmax_ce_gradient(p, t, Tensor());
}

Tensor softmax_ce_gradient(const Tensor& p, const Tensor& t,
                           const Tensor& class_weights) {
  check_prob_pair(p, t);
  if (class_weights.size() != 0) {
    require_shape(class_weights, {t.dim(1)}, "class weights");
  }
  const std::size_t n = t.dim(0), classes = t.dim(1);
  const double inv_n = 1.0 / static_cast<double>(n);
  Tensor g(p.shape());
  for (std::size_t i = 0; i < n; ++i) {
    const double w = row_weight(t, class_weights, i);
    for (std::size_t j = 0; j < classes; ++j) {
      const std::size_t k = i * classes + j;
      g.data()[k] = w * (p.data()[k] - t.data()[k]) * inv_n;
    }
  }
  return g;
}

LossOutput softmax_cross_entropy(const Tensor& logits, const Tensor& t,
                                 const Tensor& class_weights) {
  LossOutput out;
  out.probabilities = softmax(logits);
  out.loss = cross_entropy(out.probabilities, t, class_weights);
  out.logit_gradient = softmax_ce_gradient(out.probabilities, t, class_weights);
  return out;
}

Tensor one_hot(const std::vector<int>& labels, int classes) {
  if (classes < 2) throw ShapeError("one_hot needs at least two classes");
  Tensor t({labels.size(), static_cast<std::size_t>(classes)});
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= classes) {
      throw DataError("label " + std::to_string(labels[i]) + " outside 0.." +
                      std::to_string(classes - 1));
    }
    t.data()[i * classes + static_cast<std::size_t>(labels[i])] = 1.0;
  }
  return t;
}

}  // namespace adcnn
