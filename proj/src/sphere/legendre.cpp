#include "hbef/sphere/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace hbef {
namespace {

void check_domain(int l, double x) {
  if (l < 0) throw std::domain_error("legendre: degree l must be >= 0");
  if (std::abs(x) > 1.0) throw std::domain_error("legendre: argument x must satisfy |x| <= 1");
}

}  // namespace

double legendre_p(int l, double x) {
  check_domain(l, x);
  if (l == 0) return 1.0;
  if (l == 1) return x;
  double pmm2 = 1.0;
  double pmm1 = x;
  double p = x;
  for (int k = 2; k <= l; ++k) {
    p = ((2.0 * k - 1.0) * x * pmm1 - (k - 1.0) * pmm2) / static_cast<double>(k);
    pmm2 = pmm1;
    pmm1 = p;
  }
  return p;
}

Vector legendre_p_all(int l_max, double x) {
  check_domain(l_max, x);
  Vector p(l_max + 1);
  p[0] = 1.0;
  if (l_max >= 1) p[1] = x;
  for (int k = 2; k <= l_max; ++k)
    p[k] = ((2.0 * k - 1.0) * x * p[k - 1] - (k - 1.0) * p[k - 2]) / static_cast<double>(k);
  return p;
}

double legendre_p_derivative(int l, double x) {
  check_domain(l, x);
  if (std::abs(x) >= 1.0) throw std::domain_error("legendre_p_derivative: |x| must be < 1");
  if (l == 0) return 0.0;
  const Vector p = legendre_p_all(l, x);
  return static_cast<double>(l) * (p[l - 1] - x * p[l]) / (1.0 - x * x);
}

double assoc_legendre(int l, int m, double x) {
  check_domain(l, x);
  const int am = std::abs(m);
  if (am > l) throw std::domain_error("assoc_legendre: |m| must be <= l");
  // Diagonal seed P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}.
  double pmm = 1.0;
  if (am > 0) {
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int k = 1; k <= am; ++k) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (l == am) return pmm;
  // P_{m+1}^m = x (2m+1) P_m^m, then upward in l:
  // (l-m) P_l^m = x (2l-1) P_{l-1}^m - (l+m-1) P_{l-2}^m.
  double pm1 = x * (2.0 * am + 1.0) * pmm;
  if (l == am + 1) return pm1;
  double p = pm1;
  for (int k = am + 2; k <= l; ++k) {
    p = (x * (2.0 * k - 1.0) * pm1 - (k + am - 1.0) * pmm) / static_cast<double>(k - am);
    pmm = pm1;
    pm1 = p;
  }
  return p;
}

double normalized_assoc_legendre(int l, int m, double x) {
  check_domain(l, x);
  if (m < 0 || m > l) throw std::domain_error("normalized_assoc_legendre: need 0 <= m <= l");
  // Diagonal: Nbar_m^m = (-1)^m sqrt((2m+1)/(4 pi) * prod_k (2k-1)/(2k)) (1-x^2)^{m/2},
  // with the (1-x^2) factor folded into the product to keep every partial in range.
  const double omx2 = (1.0 - x) * (1.0 + x);
  double diag2 = 1.0 / kFourPi;
  for (int k = 1; k <= m; ++k) diag2 *= (2.0 * k - 1.0) / (2.0 * k) * omx2;
  double pmm = ((m % 2) ? -1.0 : 1.0) * std::sqrt((2.0 * m + 1.0) * diag2);
  if (l == m) return pmm;
  double pm1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
  if (l == m + 1) return pm1;
  double p = pm1;
  for (int k = m + 2; k <= l; ++k) {
    const double k2 = static_cast<double>(k) * k;
    const double m2 = static_cast<double>(m) * m;
    const double a = std::sqrt((4.0 * k2 - 1.0) / (k2 - m2));
    const double b = std::sqrt((2.0 * k + 1.0) / (2.0 * k - 3.0) *
                               ((k - 1.0) * (k - 1.0) - m2) / (k2 - m2));
    p = a * x * pm1 - b * pmm;
    pmm = pm1;
    pm1 = p;
  }
  return p;
}

Matrix normalized_assoc_legendre_table(int l_max, const Vector& x) {
  const Index n_lm = packed_lm_index(l_max, l_max) + 1;
  Matrix table(n_lm, x.size());
  for (Index k = 0; k < x.size(); ++k) {
    const double xk = x[k];
    const double omx2 = (1.0 - xk) * (1.0 + xk);
    double diag2 = 1.0 / kFourPi;
    for (int m = 0; m <= l_max; ++m) {
      if (m > 0) diag2 *= (2.0 * m - 1.0) / (2.0 * m) * omx2;
      double pmm = ((m % 2) ? -1.0 : 1.0) * std::sqrt((2.0 * m + 1.0) * diag2);
      table(packed_lm_index(m, m), k) = pmm;
      if (m == l_max) break;
      double pm1 = xk * std::sqrt(2.0 * m + 3.0) * pmm;
      table(packed_lm_index(m + 1, m), k) = pm1;
      for (int l = m + 2; l <= l_max; ++l) {
        const double l2 = static_cast<double>(l) * l;
        const double m2 = static_cast<double>(m) * m;
        const double a = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
        const double b = std::sqrt((2.0 * l + 1.0) / (2.0 * l - 3.0) *
                                   ((l - 1.0) * (l - 1.0) - m2) / (l2 - m2));
        const double p = a * xk * pm1 - b * pmm;
        table(packed_lm_index(l, m), k) = p;
        pmm = pm1;
        pm1 = p;
      }
    }
  }
  return table;
}

}  // namespace hbef
