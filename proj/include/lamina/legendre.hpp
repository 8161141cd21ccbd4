#pragma once

#include <vector>

namespace lamina {

// Ferrers functions without the Condon-Shortley phase:
//   P_m^m(x) = (2m-1)!! (1-x^2)^(m/2),  P_n^0(1) = 1.
// Orthonormal rescales by sqrt((2n+1)/2 * (n-m)!/(n+m)!) so that
// int_{-1}^{1} P^2 dx = 1; it stays finite for large degrees where the
// Ferrers values overflow.
enum class LegendreNorm { Ferrers, Orthonormal };

// Upward three-term recurrence in the degree. Domain error for |x| > 1,
// m < 0 or m > n.
double assoc_legendre(int n, int m, double x, LegendreNorm norm = LegendreNorm::Ferrers);

struct LegendreOnLatitude {
  double value;  // P_n^m(sin phi)
  double dphi;   // d/dphi P_n^m(sin phi)
};

// Value and latitude derivative for |phi| < pi/2, using
//   cos(phi) dP/dphi = (1 - x^2) dP/dx = (n+m) P_{n-1}^m - n x P_n^m.
LegendreOnLatitude assoc_legendre_latitude(int n, int m, double phi, LegendreNorm norm = LegendreNorm::Ferrers);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule with `order` nodes on [a, b].
QuadratureRule gauss_legendre(int order, double a = -1.0, double b = 1.0);

}  // namespace lamina
