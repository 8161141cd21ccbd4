#include "lamina/legendre.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lamina/error.hpp"

namespace lamina {

namespace {

void check_args(int n, int m, double x) {
  if (m < 0 || m > n) fail(ErrorKind::Domain, "associated Legendre needs 0 <= m <= n, got n=" + std::to_string(n) +
                                                  " m=" + std::to_string(m));
  if (!(std::abs(x) <= 1.0)) fail(ErrorKind::Domain, "associated Legendre argument outside [-1, 1]");
}

// P_n^m and P_{n-1}^m (zero when n-1 < m).
struct Pair {
  double current;
  double previous;
};

Pair ferrers_pair(int n, int m, double x) {
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  double pmm = 1.0;
  for (int k = 1; k <= m; ++k) pmm *= (2.0 * k - 1.0) * s;
  if (n == m) return {pmm, 0.0};
  double prev = pmm;
  double cur = x * (2.0 * m + 1.0) * pmm;
  for (int l = m + 2; l <= n; ++l) {
    double next = ((2.0 * l - 1.0) * x * cur - (l + m - 1.0) * prev) / (l - m);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

Pair orthonormal_pair(int n, int m, double x) {
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  double pmm = std::sqrt(0.5);
  for (int k = 1; k <= m; ++k) pmm *= std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
  if (n == m) return {pmm, 0.0};
  double prev = pmm;
  double cur = x * std::sqrt(2.0 * m + 3.0) * pmm;
  for (int l = m + 2; l <= n; ++l) {
    const double ll = l, mm = m;
    double a = std::sqrt((4.0 * ll * ll - 1.0) / (ll * ll - mm * mm));
    double b = std::sqrt(((ll - 1.0) * (ll - 1.0) - mm * mm) * (2.0 * ll + 1.0) /
                         ((2.0 * ll - 3.0) * (ll * ll - mm * mm)));
    double next = a * x * cur - b * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

Pair legendre_pair(int n, int m, double x, LegendreNorm norm) {
  return norm == LegendreNorm::Ferrers ? ferrers_pair(n, m, x) : orthonormal_pair(n, m, x);
}

}  // namespace

double assoc_legendre(int n, int m, double x, LegendreNorm norm) {
  check_args(n, m, x);
  return legendre_pair(n, m, x, norm).current;
}

LegendreOnLatitude assoc_legendre_latitude(int n, int m, double phi, LegendreNorm norm) {
  const double c = std::cos(phi);
  if (!(std::abs(phi) < std::numbers::pi / 2) || c <= 0.0)
    fail(ErrorKind::Domain, "latitude derivative needs |phi| < pi/2");
  const double x = std::sin(phi);
  check_args(n, m, x);
  auto [p, p_prev] = legendre_pair(n, m, x, norm);
  double factor = n + m;
  if (norm == LegendreNorm::Orthonormal && n > m) {
    const double nn = n, mm = m;
    factor = std::sqrt((2.0 * nn + 1.0) * (nn - mm) * (nn + mm) / (2.0 * nn - 1.0));
  }
  return {p, (factor * p_prev - n * x * p) / c};
}

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (order < 1) fail(ErrorKind::Domain, "quadrature order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int l = 2; l <= order; ++l) {
        double p2 = ((2.0 * l - 1.0) * z * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (z * p1 - p0) / (z * z - 1.0);
      double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[order - 1 - i] = mid + half * z;
    rule.weights[i] = rule.weights[order - 1 - i] = half * w;
  }
  return rule;
}

}  // namespace lamina
