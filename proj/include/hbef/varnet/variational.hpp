#pragma once

#include <vector>

#include "hbef/rng.hpp"
#include "hbef/types.hpp"
#include "hbef/varnet/dense_net.hpp"
#include "hbef/varnet/loss.hpp"

namespace hbef {

double softplus(double rho);
double softplus_inv(double sigma);
double logistic(double rho);  // d softplus / d rho

// Mean-field Gaussian posterior over network weights: per-weight mean and an
// unconstrained scale rho with sigma = softplus(rho). Biases are deterministic
// parameters unless variational_bias is set.
struct VariationalParams {
  std::vector<Index> layer_sizes;
  std::vector<Matrix> w_mu;
  std::vector<Matrix> w_rho;
  std::vector<Vector> b_mu;
  std::vector<Vector> b_rho;  // only used when variational_bias
  bool variational_bias = false;
  double prior_std = 2e-4;
  double beta_kl = 1e-4;

  Index n_variational() const;  // count of (mu, sigma) pairs
};

VariationalParams make_variational(const DenseNet& pretrained, double sigma_init,
                                   double prior_std, double beta_kl,
                                   bool variational_bias = false);

// Sum over variational weights of log(sigma_p/sigma) + (sigma^2 + mu^2)/(2 sigma_p^2) - 1/2.
double kl_gaussian(const VariationalParams& vp);

// theta = mu + softplus(rho) * eps with eps drawn i.i.d. standard normal.
DenseNet sample_weights(const VariationalParams& vp, Rng& rng);

// theta = mu exactly (the deterministic collapse).
DenseNet mean_network(const VariationalParams& vp);

struct VariationalGradients {
  std::vector<Matrix> w_mu;
  std::vector<Matrix> w_rho;
  std::vector<Vector> b_mu;
  std::vector<Vector> b_rho;
};

struct ElboResult {
  LossBreakdown loss;
  VariationalGradients grad;
};

// total = weighted_l1(forward with sampled theta) + beta_kl * kl_gaussian.
// Gradients flow to (mu, rho) through the reparameterization; theta is
// resampled per call (n_theta_samples draws averaged), deterministic given
// the rng state.
ElboResult elbo_loss(const VariationalParams& vp, const Matrix& inputs, const Matrix& targets,
                     const Vector& elem_weights, Rng& rng, int n_theta_samples = 1);

}  // namespace hbef
