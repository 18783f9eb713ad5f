#include "hbef/varnet/variational.hpp"

#include <cmath>
#include <stdexcept>

namespace hbef {

double softplus(double rho) {
  // log(1 + exp(rho)) without overflow.
  return rho > 0.0 ? rho + std::log1p(std::exp(-rho)) : std::log1p(std::exp(rho));
}

double softplus_inv(double sigma) {
  if (sigma <= 0.0) throw std::domain_error("softplus_inv: sigma must be > 0");
  // log(exp(sigma) - 1); for small sigma expm1 keeps precision.
  return sigma > 20.0 ? sigma : std::log(std::expm1(sigma));
}

double logistic(double rho) { return 1.0 / (1.0 + std::exp(-rho)); }

Index VariationalParams::n_variational() const {
  Index n = 0;
  for (const auto& w : w_mu) n += w.size();
  if (variational_bias)
    for (const auto& b : b_mu) n += b.size();
  return n;
}

VariationalParams make_variational(const DenseNet& pretrained, double sigma_init,
                                   double prior_std, double beta_kl, bool variational_bias) {
  if (sigma_init <= 0.0) throw std::invalid_argument("vi: sigma_init must be > 0");
  if (prior_std <= 0.0) throw std::invalid_argument("vi: prior_std must be > 0");
  if (beta_kl < 0.0) throw std::invalid_argument("vi: beta_kl must be >= 0");
  VariationalParams vp;
  vp.layer_sizes = pretrained.layer_sizes;
  vp.prior_std = prior_std;
  vp.beta_kl = beta_kl;
  vp.variational_bias = variational_bias;
  const double rho0 = softplus_inv(sigma_init);
  for (std::size_t k = 0; k < pretrained.weights.size(); ++k) {
    vp.w_mu.push_back(pretrained.weights[k]);
    vp.w_rho.push_back(Matrix::Constant(pretrained.weights[k].rows(),
                                        pretrained.weights[k].cols(), rho0));
    vp.b_mu.push_back(pretrained.biases[k]);
    if (variational_bias)
      vp.b_rho.push_back(Vector::Constant(pretrained.biases[k].size(), rho0));
  }
  return vp;
}

namespace {

double kl_term(double mu, double sigma, double prior_std) {
  if (sigma <= 0.0) throw std::domain_error("kl_gaussian: sigma must be > 0");
  return std::log(prior_std / sigma) +
         (sigma * sigma + mu * mu) / (2.0 * prior_std * prior_std) - 0.5;
}

}  // namespace

double kl_gaussian(const VariationalParams& vp) {
  if (vp.prior_std <= 0.0) throw std::domain_error("kl_gaussian: prior_std must be > 0");
  double kl = 0.0;
  for (std::size_t k = 0; k < vp.w_mu.size(); ++k) {
    const Matrix& mu = vp.w_mu[k];
    const Matrix& rho = vp.w_rho[k];
    for (Index j = 0; j < mu.cols(); ++j)
      for (Index i = 0; i < mu.rows(); ++i)
        kl += kl_term(mu(i, j), softplus(rho(i, j)), vp.prior_std);
    if (vp.variational_bias) {
      const Vector& bmu = vp.b_mu[k];
      const Vector& brho = vp.b_rho[k];
      for (Index i = 0; i < bmu.size(); ++i)
        kl += kl_term(bmu[i], softplus(brho[i]), vp.prior_std);
    }
  }
  return kl;
}

DenseNet sample_weights(const VariationalParams& vp, Rng& rng) {
  DenseNet net = make_dense_net(vp.layer_sizes);
  for (std::size_t k = 0; k < vp.w_mu.size(); ++k) {
    Matrix& w = net.weights[k];
    for (Index j = 0; j < w.cols(); ++j)
      for (Index i = 0; i < w.rows(); ++i)
        w(i, j) = vp.w_mu[k](i, j) + softplus(vp.w_rho[k](i, j)) * rng.normal();
    if (vp.variational_bias) {
      Vector& b = net.biases[k];
      for (Index i = 0; i < b.size(); ++i)
        b[i] = vp.b_mu[k][i] + softplus(vp.b_rho[k][i]) * rng.normal();
    } else {
      net.biases[k] = vp.b_mu[k];
    }
  }
  return net;
}

DenseNet mean_network(const VariationalParams& vp) {
  DenseNet net = make_dense_net(vp.layer_sizes);
  for (std::size_t k = 0; k < vp.w_mu.size(); ++k) {
    net.weights[k] = vp.w_mu[k];
    net.biases[k] = vp.b_mu[k];
  }
  return net;
}

ElboResult elbo_loss(const VariationalParams& vp, const Matrix& inputs, const Matrix& targets,
                     const Vector& elem_weights, Rng& rng, int n_theta_samples) {
  if (inputs.cols() == 0) throw std::invalid_argument("elbo_loss: empty batch");
  if (n_theta_samples < 1) throw std::invalid_argument("elbo_loss: need >= 1 theta sample");

  ElboResult res;
  auto& g = res.grad;
  for (std::size_t k = 0; k < vp.w_mu.size(); ++k) {
    g.w_mu.push_back(Matrix::Zero(vp.w_mu[k].rows(), vp.w_mu[k].cols()));
    g.w_rho.push_back(Matrix::Zero(vp.w_rho[k].rows(), vp.w_rho[k].cols()));
    g.b_mu.push_back(Vector::Zero(vp.b_mu[k].size()));
    if (vp.variational_bias) g.b_rho.push_back(Vector::Zero(vp.b_mu[k].size()));
  }

  double l1 = 0.0;
  const double inv_s = 1.0 / static_cast<double>(n_theta_samples);
  for (int s = 0; s < n_theta_samples; ++s) {
    // Reparameterized draw; eps retained to route gradients to rho.
    DenseNet net = make_dense_net(vp.layer_sizes);
    std::vector<Matrix> w_eps(vp.w_mu.size());
    std::vector<Vector> b_eps(vp.w_mu.size());
    for (std::size_t k = 0; k < vp.w_mu.size(); ++k) {
      w_eps[k] = rng.normal_matrix(vp.w_mu[k].rows(), vp.w_mu[k].cols());
      net.weights[k] =
          vp.w_mu[k] + vp.w_rho[k].unaryExpr(&softplus).cwiseProduct(w_eps[k]);
      if (vp.variational_bias) {
        b_eps[k] = rng.normal_vector(vp.b_mu[k].size());
        net.biases[k] =
            vp.b_mu[k] + vp.b_rho[k].unaryExpr(&softplus).cwiseProduct(b_eps[k]);
      } else {
        net.biases[k] = vp.b_mu[k];
      }
    }

    const ForwardTrace trace = net_forward_trace(net, inputs);
    l1 += inv_s * weighted_l1(trace.output(), targets, elem_weights);
    const NetGradients ng =
        net_backprop(net, trace, weighted_l1_grad(trace.output(), targets, elem_weights));
    for (std::size_t k = 0; k < vp.w_mu.size(); ++k) {
      g.w_mu[k] += inv_s * ng.d_weights[k];
      g.w_rho[k] += inv_s * ng.d_weights[k].cwiseProduct(w_eps[k]).cwiseProduct(
                                vp.w_rho[k].unaryExpr(&logistic));
      g.b_mu[k] += inv_s * ng.d_biases[k];
      if (vp.variational_bias)
        g.b_rho[k] += inv_s * ng.d_biases[k].cwiseProduct(b_eps[k]).cwiseProduct(
                                  vp.b_rho[k].unaryExpr(&logistic));
    }
  }

  // KL closed form and its gradient; dKL/dsigma = sigma/sp^2 - 1/sigma.
  const double kl = kl_gaussian(vp);
  const double inv_sp2 = 1.0 / (vp.prior_std * vp.prior_std);
  for (std::size_t k = 0; k < vp.w_mu.size(); ++k) {
    g.w_mu[k] += vp.beta_kl * inv_sp2 * vp.w_mu[k];
    const Matrix sigma = vp.w_rho[k].unaryExpr(&softplus);
    g.w_rho[k] += vp.beta_kl * (sigma * inv_sp2 - sigma.cwiseInverse())
                      .cwiseProduct(vp.w_rho[k].unaryExpr(&logistic));
    if (vp.variational_bias) {
      g.b_mu[k] += vp.beta_kl * inv_sp2 * vp.b_mu[k];
      const Vector bsigma = vp.b_rho[k].unaryExpr(&softplus);
      g.b_rho[k] += vp.beta_kl * (bsigma * inv_sp2 - bsigma.cwiseInverse())
                        .cwiseProduct(vp.b_rho[k].unaryExpr(&logistic));
    }
  }

  res.loss.l1 = l1;
  res.loss.kl = kl;
  res.loss.total = l1 + vp.beta_kl * kl;
  if (!std::isfinite(res.loss.total))
    throw std::runtime_error("elbo_loss: non-finite loss (l1 = " + std::to_string(l1) +
                             ", kl = " + std::to_string(kl) + ")");
  return res;
}

}  // namespace hbef
