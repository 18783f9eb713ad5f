#pragma once

#include <vector>

#include "hbef/rng.hpp"
#include "hbef/types.hpp"

namespace hbef {

// Fully connected network, tanh on hidden layers, linear output.
// A single-layer net {n_in, n_out} is exactly affine.
struct DenseNet {
  std::vector<Index> layer_sizes;  // {n_in, h_1, ..., n_out}
  std::vector<Matrix> weights;     // weights[k]: sizes[k+1] x sizes[k]
  std::vector<Vector> biases;      // biases[k]: sizes[k+1]

  Index input_size() const { return layer_sizes.front(); }
  Index output_size() const { return layer_sizes.back(); }
  std::size_t n_layers() const { return weights.size(); }
  Index n_parameters() const;
};

DenseNet make_dense_net(std::vector<Index> layer_sizes);  // zero-initialized

// Scaled Glorot-uniform weights, zero biases; deterministic given the source.
void init_weights(DenseNet& net, Rng& rng, double gain = 1.0);

Vector net_forward(const DenseNet& net, const Vector& x);
Matrix net_forward_batch(const DenseNet& net, const Matrix& x_cols);

// Activations kept for the backward pass; activations[0] is the input batch.
struct ForwardTrace {
  std::vector<Matrix> activations;
  const Matrix& output() const { return activations.back(); }
};

ForwardTrace net_forward_trace(const DenseNet& net, const Matrix& x_cols);

struct NetGradients {
  std::vector<Matrix> d_weights;
  std::vector<Vector> d_biases;
  Matrix d_input;  // n_in x batch
};

// Reverse mode through the trace; d_output is dLoss/dOutput per column.
NetGradients net_backprop(const DenseNet& net, const ForwardTrace& trace, const Matrix& d_output);

// Gradient of one output coordinate with respect to the input vector.
Vector net_input_gradient(const DenseNet& net, const Vector& x, Index output_index);

// Full Jacobian d(output)/d(input) as the product of layer Jacobians.
Matrix net_input_jacobian(const DenseNet& net, const Vector& x);

}  // namespace hbef
