#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lamina/dynamics.hpp"
#include "support.hpp"

namespace lamina {
namespace {

TriadSystem triad(Complex a, Complex b, Complex c) {
  TriadSystem s;
  s.alphas = {a, b, c};
  return s;
}

double rel_error(const Amplitudes& a, const Amplitudes& b) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

TEST(Legendre, Examples) {
  for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0}) EXPECT_DOUBLE_EQ(assoc_legendre(0, 0, x), 1.0);
  EXPECT_DOUBLE_EQ(assoc_legendre(2, 0, 1.0), 1.0);
  EXPECT_LAMINA_ERROR(assoc_legendre(2, 3, 0.5), ErrorKind::Domain);
  EXPECT_LAMINA_ERROR(assoc_legendre(2, 1, 1.5), ErrorKind::Domain);
  EXPECT_LAMINA_ERROR(assoc_legendre(2, -1, 0.5), ErrorKind::Domain);
}

// Rodrigues: P_n^m(x) = (1-x^2)^(m/2) / (2^n n!) d^(n+m)/dx^(n+m) (x^2-1)^n,
// differentiated term by term from the binomial expansion.
double rodrigues(int n, int m, double x) {
  double sum = 0;
  for (int k = 0; k <= n; ++k) {
    int power = 2 * k;
    if (power < n + m) continue;
    double binom = std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0));
    double sign = ((n - k) % 2) ? -1.0 : 1.0;
    double falling = std::tgamma(power + 1.0) / std::tgamma(power - (n + m) + 1.0);
    sum += sign * binom * falling * std::pow(x, power - (n + m));
  }
  return std::pow(1 - x * x, m / 2.0) * sum / (std::pow(2.0, n) * std::tgamma(n + 1.0));
}

TEST(Legendre, MatchesRodriguesFormula) {
  EXPECT_NEAR(assoc_legendre(1, 1, 0.5), std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(assoc_legendre(1, 1, 0.5), rodrigues(1, 1, 0.5), 1e-15);
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (double x : {-0.9, -0.4, 0.1, 0.55, 0.95}) {
        double ref = rodrigues(n, m, x);
        ASSERT_NEAR(assoc_legendre(n, m, x), ref, 1e-9 * std::max(1.0, std::abs(ref))) << n << "," << m << "," << x;
      }
    }
  }
}

TEST(Legendre, OrthonormalVariantIsNormalized) {
  auto rule = gauss_legendre(80);
  for (int n = 0; n <= 20; ++n) {
    for (int m = 0; m <= n; m += 3) {
      double sum = 0, cross = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double p = assoc_legendre(n, m, rule.nodes[i], LegendreNorm::Orthonormal);
        sum += rule.weights[i] * p * p;
        if (n + 1 >= m && m <= n + 1)
          cross += rule.weights[i] * p * assoc_legendre(n + 1, m, rule.nodes[i], LegendreNorm::Orthonormal);
      }
      ASSERT_NEAR(sum, 1.0, 1e-12) << n << "," << m;
      ASSERT_NEAR(cross, 0.0, 1e-12) << n << "," << m;
    }
  }
}

TEST(Legendre, LatitudeDerivativeMatchesFiniteDifference) {
  for (auto norm : {LegendreNorm::Ferrers, LegendreNorm::Orthonormal}) {
    for (int n = 1; n <= 10; ++n) {
      for (int m = 0; m <= n; ++m) {
        for (double phi : {-1.2, -0.4, 0.3, 1.1}) {
          const double h = 1e-6;
          double fd = (assoc_legendre(n, m, std::sin(phi + h), norm) - assoc_legendre(n, m, std::sin(phi - h), norm)) /
                      (2 * h);
          auto v = assoc_legendre_latitude(n, m, phi, norm);
          ASSERT_NEAR(v.dphi, fd, 1e-6 * std::max(1.0, std::abs(fd))) << n << "," << m << "," << phi;
        }
      }
    }
  }
}

TEST(Quadrature, IntegratesPolynomialsExactly) {
  auto rule = gauss_legendre(10, 0.0, 2.0);
  for (int p = 0; p < 20; ++p) {
    double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], p);
    ASSERT_NEAR(sum, std::pow(2.0, p + 1) / (p + 1), 1e-9 * std::pow(2.0, p + 1));
  }
}

TEST(Integrator, ZeroIsAFixedPoint) {
  TriadSystem sys = triad(Complex{0, 1}, Complex{0, -2}, Complex{0, 3});
  auto t = integrate_triad(sys, {}, 5.0, 0.01, 10);
  for (const auto& s : t.samples) {
    for (const auto& a : s.A) ASSERT_EQ(a, Complex(0));
  }
  auto inv = manley_rowe(sys, {});
  EXPECT_EQ(inv.first, 0.0);
  EXPECT_EQ(inv.second, 0.0);
}

TEST(Integrator, ConstantWhenThirdCoefficientVanishes) {
  TriadSystem sys = triad(Complex{1, 0}, Complex{1, 0}, Complex{0, 0});
  AmplitudeState s0{{Complex(0.3, 0.1), Complex(-0.2, 0.4), 0}, 0};
  auto end = integrate_endpoint(sys, s0, 10.0, 0.01);
  EXPECT_EQ(end.A[0], s0.A[0]);
  EXPECT_EQ(end.A[1], s0.A[1]);
}

TEST(Integrator, RejectsBadArguments) {
  TriadSystem sys = triad(Complex{1, 0}, Complex{1, 0}, Complex{-1, 0});
  EXPECT_LAMINA_ERROR(integrate_triad(sys, {}, 1.0, 0.0), ErrorKind::Precondition);
  EXPECT_LAMINA_ERROR(integrate_triad(sys, {}, -1.0, 0.1), ErrorKind::Precondition);
}

TEST(Integrator, ExplosiveTriadDiverges) {
  TriadSystem sys = triad(Complex{1, 0}, Complex{1, 0}, Complex{1, 0});
  try {
    integrate_endpoint(sys, {{1.0, 1.0, 1.0}, 0}, 50.0, 0.01);
    FAIL() << "expected divergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Divergence);
    EXPECT_NE(std::string(e.what()).find("T = "), std::string::npos);
  }
}

TEST(Integrator, LandsExactlyOnHorizon) {
  TriadSystem sys = triad(Complex{1, 0}, Complex{1, 0}, Complex{-1, 0});
  auto t = integrate_triad(sys, {{0.1, 0.1, 0.1}, 0}, 1.0, 0.3, 1);
  ASSERT_EQ(t.samples.size(), 5u);
  EXPECT_DOUBLE_EQ(t.samples.back().T, 1.0);
  for (std::size_t i = 1; i < t.samples.size(); ++i) EXPECT_GT(t.samples[i].T, t.samples[i - 1].T);
}

// Real coefficients (1, 1, -1): periodic exchange. Period and extrema of
// |A1|^2 against a half-step run. Equal A1, A2 would sit on the separatrix.
TEST(Integrator, GenericTriadMatchesHalfStepReference) {
  TriadSystem sys = triad(Complex{1, 0}, Complex{1, 0}, Complex{-1, 0});
  AmplitudeState s0{{0.1, 0.05, 0.08}, 0};
  auto features = [&](double step) {
    auto t = integrate_triad(sys, s0, 200.0, step, 1);
    std::vector<double> e;
    for (const auto& s : t.samples) e.push_back(std::norm(s.A[0]));
    std::vector<double> peaks_t;
    double hi = 0, lo = 1e9;
    for (std::size_t i = 1; i + 1 < e.size(); ++i) {
      hi = std::max(hi, e[i]);
      lo = std::min(lo, e[i]);
      if (e[i] > e[i - 1] && e[i] >= e[i + 1]) {
        // Parabolic refinement of the peak time.
        double denom = e[i - 1] - 2 * e[i] + e[i + 1];
        double offset = denom != 0 ? 0.5 * (e[i - 1] - e[i + 1]) / denom : 0.0;
        peaks_t.push_back(t.samples[i].T + offset * step);
      }
    }
    double period = (peaks_t.back() - peaks_t.front()) / static_cast<double>(peaks_t.size() - 1);
    return std::array<double, 3>{period, hi, lo};
  };
  auto a = features(1e-2);
  auto b = features(5e-3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], 1e-6 * std::abs(b[i])) << i;
  EXPECT_GT(a[1] - a[2], 1e-3);
}

TEST(ManleyRowe, WeightsAnnihilateTheRates) {
  const TriadSystem systems[] = {triad({1, 0}, {1, 0}, {-1, 0}), triad({0, 2}, {0, -0.5}, {0, 1.5}),
                                 triad({0.5, 0.5}, {1, 1}, {2, -2})};
  for (const auto& sys : systems) {
    auto w = manley_rowe_weights(sys);
    std::array<Complex, 3> rates{sys.alphas[0], sys.alphas[1], std::conj(sys.alphas[2])};
    for (const auto& c : {w.first, w.second}) {
      Complex s = c[0] * rates[0] + c[1] * rates[1] + c[2] * rates[2];
      EXPECT_LT(std::abs(s), 1e-14);
    }
  }
  EXPECT_LAMINA_ERROR(manley_rowe_weights(triad({1, 0}, {0, 1}, {1, 0})), ErrorKind::UnsupportedStructure);
  auto zero = manley_rowe_weights(TriadSystem{});
  EXPECT_EQ(zero.first, (std::array<double, 3>{1, 0, 0}));
}

TEST(ManleyRowe, HomogeneousOfDegreeTwo) {
  auto sys = bve_system(bve_coefficients(kDemoTriad, 64, LegendreNorm::Orthonormal));
  AmplitudeState s{{Complex(0.1, 0.02), Complex(-0.05, 0.1), Complex(0.07, -0.01)}, 0};
  auto base = manley_rowe(sys, s);
  for (double lambda : {0.5, 2.0, 7.0}) {
    AmplitudeState scaled{{lambda * s.A[0], lambda * s.A[1], lambda * s.A[2]}, 0};
    auto v = manley_rowe(sys, scaled);
    EXPECT_NEAR(v.first, lambda * lambda * base.first, 1e-15 * lambda * lambda);
    EXPECT_NEAR(v.second, lambda * lambda * base.second, 1e-15 * lambda * lambda);
  }
}

// d/dT of the invariants along the exact flow, by central differences of the
// analytic right-hand side.
TEST(ManleyRowe, DerivativeAlongBveFlowVanishes) {
  auto sys = bve_system(bve_coefficients(kDemoTriad, 64, LegendreNorm::Orthonormal));
  auto traj = integrate_triad(sys, {{0.1, 0.1, 0.1}, 0}, 5.0, 1e-3, 250);
  for (const auto& sample : traj.samples) {
    const double h = 1e-6;
    auto f = sys.rhs(sample.A);
    AmplitudeState plus{{sample.A[0] + h * f[0], sample.A[1] + h * f[1], sample.A[2] + h * f[2]}, 0};
    AmplitudeState minus{{sample.A[0] - h * f[0], sample.A[1] - h * f[1], sample.A[2] - h * f[2]}, 0};
    auto ip = manley_rowe(sys, plus), im = manley_rowe(sys, minus);
    ASSERT_LT(std::abs(ip.first - im.first) / (2 * h), 1e-8);
    ASSERT_LT(std::abs(ip.second - im.second) / (2 * h), 1e-8);
  }
}

TEST(BveTriad, CoefficientsAndConvergence) {
  auto t = bve_coefficients(kDemoTriad, 64, LegendreNorm::Orthonormal);
  EXPECT_EQ(t.N, (std::array<std::int64_t, 3>{20, 12, 30}));
  ASSERT_EQ(t.convergence.size(), 2u);
  EXPECT_EQ(t.convergence[1].first, 128);
  EXPECT_NEAR(t.convergence[0].second, t.convergence[1].second, 1e-8 * std::abs(t.Z));
  EXPECT_GT(std::abs(t.Z), 1.0);
  auto sys = bve_system(t);
  for (const auto& a : sys.alphas) EXPECT_EQ(a.real(), 0.0);
}

TEST(BveTriad, NormalizationOnlyRescales) {
  auto ferrers = bve_coefficients(kDemoTriad, 64, LegendreNorm::Ferrers);
  auto ortho = bve_coefficients(kDemoTriad, 64, LegendreNorm::Orthonormal);
  // Ratio of the three orthonormalization factors.
  auto factor = [](int n, int m) {
    return std::sqrt((2 * n + 1) / 2.0 * std::tgamma(n - m + 1.0) / std::tgamma(n + m + 1.0));
  };
  double f = 1;
  for (const auto& k : kDemoTriad) f *= factor(k.n, std::abs(k.m));
  EXPECT_NEAR(ortho.Z, ferrers.Z * f, 1e-10 * std::abs(ortho.Z));
}

TEST(BveTriad, PreconditionsAndSymmetry) {
  EXPECT_LAMINA_ERROR(bve_coefficients(kDemoTriad, 8), ErrorKind::Precondition);
  std::array<WaveVector, 3> not_resonant{{{1, 3}, {2, 5}, {3, 5}}};
  EXPECT_LAMINA_ERROR(bve_coefficients(not_resonant, 64), ErrorKind::Precondition);
  std::array<WaveVector, 3> bad_mode{{{4, 3}, {2, 5}, {6, 5}}};
  EXPECT_LAMINA_ERROR(bve_coefficients(bad_mode, 64), ErrorKind::Precondition);

  std::array<WaveVector, 3> swapped{kDemoTriad[1], kDemoTriad[0], kDemoTriad[2]};
  EXPECT_NEAR(bve_interaction(swapped, 128, LegendreNorm::Orthonormal),
              -bve_interaction(kDemoTriad, 128, LegendreNorm::Orthonormal), 1e-12);
}

TEST(BveTriad, EqualModesGiveZero) {
  std::array<WaveVector, 3> t{{{1, 2}, {1, 2}, {2, 2}}};
  auto b = bve_coefficients(t, 32);
  EXPECT_EQ(b.Z, 0.0);
}

// With the integrand as printed, P_n^m(sin phi) has parity (-1)^(n-m) in
// phi and the derivative flips it, so Z vanishes when n1 + n2 + n3 is odd.
TEST(BveTriad, OddDegreeSumGivesZero) {
  std::array<WaveVector, 3> t{{{4, 12}, {5, 14}, {9, 13}}};
  for (auto norm : {LegendreNorm::Ferrers, LegendreNorm::Orthonormal}) {
    auto b = bve_coefficients(t, 64, norm);
    EXPECT_GT(b.integrand_scale, 0.0);
    EXPECT_LT(std::abs(b.Z), 1e-12 * b.integrand_scale);
  }
}

TEST(BveTriad, TimeReversalReturnsToStart) {
  auto sys = bve_system(bve_coefficients(kDemoTriad, 64, LegendreNorm::Orthonormal));
  AmplitudeState s0{{Complex(0.1, 0), Complex(0.1, 0.02), Complex(0.1, -0.03)}, 0};
  auto forward = integrate_endpoint(sys, s0, 10.0, 1e-3);
  auto back = integrate_endpoint(sys.reversed(), {forward.A, 0}, 10.0, 1e-3);
  EXPECT_LT(rel_error(back.A, s0.A), 1e-6);
}

TEST(BveTriad, InvariantsConservedOverLongRun) {
  auto sys = bve_system(bve_coefficients(kDemoTriad, 64, LegendreNorm::Orthonormal));
  auto traj = integrate_triad(sys, {{0.1, 0.1, 0.1}, 0}, 100.0, 1e-3, 100);
  ASSERT_TRUE(traj.weights.has_value());
  ASSERT_EQ(traj.invariant_drift.size(), traj.samples.size());
  for (const auto& d : traj.invariant_drift) {
    ASSERT_GE(d[0], 0.0);
    ASSERT_LT(d[0], 1e-8);
    ASSERT_LT(d[1], 1e-8);
  }
}

}  // namespace
}  // namespace lamina
