#pragma once

#include "adcnn/tensor.hpp"

namespace adcnn {

/// Row-wise softmax over logits [N,n], n >= 2. Stabilized by subtracting the
/// row maximum before exponentiation, which leaves the value unchanged.
Tensor softmax(const Tensor& logits);

/// Mean over the batch of -sum_i t_i * log(p_i) with p clamped to >= 1e-12
/// before the log. t rows must be exactly one-hot.
double cross_entropy(const Tensor& probabilities, const Tensor& one_hot);

/// Same loss with a per-class weight applied to each row's contribution.
double cross_entropy(const Tensor& probabilities, const Tensor& one_hot,
                     const Tensor& class_weights);

/// Gradient of the composed softmax + cross-entropy loss with respect to the
/// logits: (p - t)/N, matching the batch-mean convention of cross_entropy.
Tensor softmax_ce_gradient(const Tensor& probabilities, const Tensor& one_hot);

Tensor softmax_ce_gradient(const Tensor& probabilities, const Tensor& one_hot,
                           const Tensor& class_weights);

struct LossOutput {
  Tensor probabilities;
  double loss = 0.0;
  Tensor logit_gradient;
};

/// softmax -> cross-entropy -> logit gradient in one call. Weights may be an
/// empty tensor for the unweighted loss.
LossOutput softmax_cross_entropy(const Tensor& logits, const Tensor& one_hot,
                                 const Tensor& class_weights = Tensor());

/// Encodes labels in 0..classes-1 as one-hot rows.
Tensor one_hot(const std::vector<int>& labels, int classes);

}  // namespace adcnn
