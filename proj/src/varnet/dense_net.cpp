#include "hbef/varnet/dense_net.hpp"

#include <cmath>
#include <stdexcept>

namespace hbef {

Index DenseNet::n_parameters() const {
  Index n = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) n += weights[k].size() + biases[k].size();
  return n;
}

DenseNet make_dense_net(std::vector<Index> layer_sizes) {
  if (layer_sizes.size() < 2) throw std::invalid_argument("DenseNet: need at least 2 layer sizes");
  for (Index s : layer_sizes)
    if (s < 1) throw std::invalid_argument("DenseNet: layer sizes must be >= 1");
  DenseNet net;
  net.layer_sizes = std::move(layer_sizes);
  for (std::size_t k = 0; k + 1 < net.layer_sizes.size(); ++k) {
    net.weights.emplace_back(Matrix::Zero(net.layer_sizes[k + 1], net.layer_sizes[k]));
    net.biases.emplace_back(Vector::Zero(net.layer_sizes[k + 1]));
  }
  return net;
}

void init_weights(DenseNet& net, Rng& rng, double gain) {
  for (std::size_t k = 0; k < net.weights.size(); ++k) {
    Matrix& w = net.weights[k];
    const double bound = gain * std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
    for (Index j = 0; j < w.cols(); ++j)
      for (Index i = 0; i < w.rows(); ++i) w(i, j) = rng.uniform(-bound, bound);
    net.biases[k].setZero();
  }
}

namespace {

void check_input(const DenseNet& net, Index rows) {
  if (rows != net.input_size())
    throw std::invalid_argument("DenseNet: input length " + std::to_string(rows) +
                                " does not match layer size " + std::to_string(net.input_size()));
}

}  // namespace

Matrix net_forward_batch(const DenseNet& net, const Matrix& x_cols) {
  check_input(net, x_cols.rows());
  Matrix a = x_cols;
  for (std::size_t k = 0; k < net.weights.size(); ++k) {
    Matrix z = (net.weights[k] * a).colwise() + net.biases[k];
    a = (k + 1 < net.weights.size()) ? z.array().tanh().matrix() : std::move(z);
  }
  return a;
}

Vector net_forward(const DenseNet& net, const Vector& x) {
  return net_forward_batch(net, x);
}

ForwardTrace net_forward_trace(const DenseNet& net, const Matrix& x_cols) {
  check_input(net, x_cols.rows());
  ForwardTrace trace;
  trace.activations.reserve(net.weights.size() + 1);
  trace.activations.push_back(x_cols);
  for (std::size_t k = 0; k < net.weights.size(); ++k) {
    Matrix z = (net.weights[k] * trace.activations.back()).colwise() + net.biases[k];
    trace.activations.push_back((k + 1 < net.weights.size()) ? z.array().tanh().matrix()
                                                             : std::move(z));
  }
  return trace;
}

NetGradients net_backprop(const DenseNet& net, const ForwardTrace& trace, const Matrix& d_output) {
  const std::size_t n_layers = net.weights.size();
  if (trace.activations.size() != n_layers + 1)
    throw std::invalid_argument("net_backprop: trace does not match net");
  if (d_output.rows() != net.output_size() || d_output.cols() != trace.activations[0].cols())
    throw std::invalid_argument("net_backprop: d_output shape mismatch");

  NetGradients g;
  g.d_weights.resize(n_layers);
  g.d_biases.resize(n_layers);

  Matrix delta = d_output;  // output layer is linear
  for (std::size_t k = n_layers; k-- > 0;) {
    g.d_weights[k] = delta * trace.activations[k].transpose();
    g.d_biases[k] = delta.rowwise().sum();
    Matrix back = net.weights[k].transpose() * delta;
    if (k > 0) {
      // activations[k] is a tanh output; tanh' = 1 - a^2.
      delta = back.array() * (1.0 - trace.activations[k].array().square());
    } else {
      g.d_input = std::move(back);
    }
  }
  return g;
}

Vector net_input_gradient(const DenseNet& net, const Vector& x, Index output_index) {
  if (output_index < 0 || output_index >= net.output_size())
    throw std::invalid_argument("net_input_gradient: output index out of range");
  const ForwardTrace trace = net_forward_trace(net, x);
  Matrix seed = Matrix::Zero(net.output_size(), 1);
  seed(output_index, 0) = 1.0;
  return net_backprop(net, trace, seed).d_input;
}

Matrix net_input_jacobian(const DenseNet& net, const Vector& x) {
  const ForwardTrace trace = net_forward_trace(net, x);
  Matrix jac = net.weights[0];
  for (std::size_t k = 1; k < net.weights.size(); ++k) {
    const Vector dact = 1.0 - trace.activations[k].col(0).array().square();
    jac = net.weights[k] * dact.asDiagonal() * jac;
  }
  return jac;
}

}  // namespace hbef
