#pragma once

#include "core/tensor.hpp"

namespace rbfcnn::kernels {

/// Pairwise squared Euclidean distances. a [P,D], b [F,D] -> [P,F].
/// Rank-1 a,b of equal length -> scalar.
Tensor sqdist(const Tensor& a, const Tensor& b);

/// Elementwise ops on identically shaped tensors.
Tensor ew_add(const Tensor& a, const Tensor& b);
Tensor ew_mul(const Tensor& a, const Tensor& b);

Tensor relu(const Tensor& x);
Tensor sigmoid(const Tensor& x);
Tensor exp_scale(const Tensor& x, double beta); // exp(beta * x)
Tensor log_ew(const Tensor& x);

/// Normalizes along the last dimension so each slice sums to 1.
/// Defined for positive inputs; a non-positive slice sum is an error.
Tensor normalize_l1(const Tensor& x);

/// x [N,A] or [A] times w [A,B] -> [N,B] or [B]. Inner loop over A in order.
Tensor matmul(const Tensor& x, const Tensor& w);

} // namespace rbfcnn::kernels
