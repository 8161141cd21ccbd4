#include <gtest/gtest.h>

#include <cmath>

#include "lamina/dispersion.hpp"
#include "lamina/factorize.hpp"
#include "support.hpp"

namespace lamina {
namespace {

const DispersionLaw kRossby = RossbySphere{};
const DispersionLaw kDrift = DriftInverseNorm{};
const DispersionLaw kCapillary = CapillaryScalar{};
const DispersionLaw kGravity = GravityNormRoot{};

TEST(OmegaExact, Examples) {
  auto r = omega_exact(kRossby, {4, 12});
  EXPECT_TRUE(r.is_rational());
  EXPECT_EQ(r.coeff(), Rational(-2, 39));

  auto d1 = omega_exact(kDrift, {2, 1});
  EXPECT_EQ(d1.coeff(), Rational(1, 5));
  EXPECT_EQ(d1.kernel(), 5u);
  EXPECT_EQ(d1.degree(), 2);

  auto d2 = omega_exact(kDrift, {9, 18});
  EXPECT_EQ(d2.coeff(), Rational(1, 45));
  EXPECT_EQ(d2.kernel(), 5u);
}

TEST(OmegaExact, FloatLawHasNoExactForm) {
  EXPECT_LAMINA_ERROR(omega_exact(parse_law("float:formula=tanh,alpha=1"), {1, 0}), ErrorKind::NoExactForm);
}

TEST(OmegaExact, DomainViolations) {
  EXPECT_LAMINA_ERROR(omega_exact(kRossby, {0, 3}), ErrorKind::Domain);
  EXPECT_LAMINA_ERROR(omega_exact(kRossby, {4, 3}), ErrorKind::Domain);
  EXPECT_LAMINA_ERROR(omega_exact(kDrift, {0, 0}), ErrorKind::Domain);
  EXPECT_LAMINA_ERROR(omega_exact(kCapillary, {0, 0}), ErrorKind::Domain);
  EXPECT_LAMINA_ERROR(omega_float(kGravity, {0, 0}), ErrorKind::Domain);
}

TEST(OmegaFloat, Examples) {
  EXPECT_NEAR(omega_float(kDrift, {2, 1}), 0.4472135955, 1e-10);
  EXPECT_NEAR(omega_float(kRossby, {5, 14}), -1.0 / 21.0, 1e-15);
  EXPECT_DOUBLE_EQ(omega_float(kCapillary, {4, 0}), 8.0);
}

TEST(OmegaFloat, AgreesWithExactValues) {
  const DispersionLaw laws[] = {kDrift, kGravity, parse_law("power:exponent=3/4,base=norm"),
                                parse_law("power:exponent=-1/3,base=norm")};
  for (const auto& law : laws) {
    for (int m = -100; m <= 100; ++m) {
      for (int n = -100; n <= 100; ++n) {
        if (m == 0 && n == 0) continue;
        double exact = static_cast<double>(test::dec(omega_exact(law, {m, n})));
        ASSERT_LE(std::abs(omega_float(law, {m, n}) - exact), 1e-12) << describe_law(law) << " " << m << "," << n;
      }
    }
  }
  for (int k = 1; k <= 100; ++k) {
    double exact = static_cast<double>(test::dec(omega_exact(kCapillary, {k, 0})));
    ASSERT_LE(std::abs(omega_float(kCapillary, {k, 0}) - exact), 1e-12 * exact);
  }
  for (int n = 1; n <= 100; ++n) {
    for (int m = -n; m <= n; ++m) {
      if (m == 0) continue;
      double exact = static_cast<double>(test::dec(omega_exact(kRossby, {m, n})));
      ASSERT_LE(std::abs(omega_float(kRossby, {m, n}) - exact), 1e-12);
    }
  }
}

TEST(OmegaExact, ProportionalVectorsShareKernel) {
  for (int m = -12; m <= 12; ++m) {
    for (int n = -12; n <= 12; ++n) {
      if (m == 0 && n == 0) continue;
      auto base = omega_exact(kDrift, {m, n});
      for (int t = 1; t <= 10; ++t) {
        auto scaled = omega_exact(kDrift, {t * m, t * n});
        ASSERT_EQ(scaled.kernel(), base.kernel());
        ASSERT_EQ(scaled.coeff(), base.coeff() / Rational(t));
      }
    }
  }
}

TEST(OmegaExact, RationalityDichotomy) {
  for (int n = 1; n <= 40; ++n) {
    for (int m = -n; m <= n; ++m) {
      if (m != 0) ASSERT_TRUE(omega_exact(kRossby, {m, n}).is_rational());
    }
  }
  for (int m = -40; m <= 40; ++m) {
    for (int n = -40; n <= 40; ++n) {
      if (m == 0 && n == 0) continue;
      bool square = is_perfect_square(static_cast<std::uint64_t>(m * m + n * n));
      ASSERT_EQ(omega_exact(kDrift, {m, n}).is_rational(), square) << m << "," << n;
    }
  }
}

TEST(LawDescriptors, RoundTrip) {
  for (const char* text : {"rossby", "drift", "capillary", "gravity", "power:exponent=3/2,base=norm",
                           "power:exponent=-1/2,base=scalar", "float:formula=cubic,alpha=1,beta=1,base=scalar",
                           "float:formula=tanh,alpha=0.5,beta=0,base=norm"}) {
    auto law = parse_law(text);
    EXPECT_EQ(parse_law(describe_law(law)), law) << text;
  }
  EXPECT_LAMINA_ERROR(parse_law("unknown"), ErrorKind::Config);
  EXPECT_LAMINA_ERROR(parse_law("power:base=norm"), ErrorKind::Config);
  EXPECT_LAMINA_ERROR(parse_law("drift:alpha=1"), ErrorKind::Config);
}

TEST(LawProperties, DegreesAndKinds) {
  EXPECT_EQ(law_degree(kRossby), 1);
  EXPECT_EQ(law_degree(kDrift), 2);
  EXPECT_EQ(law_degree(kCapillary), 2);
  EXPECT_EQ(law_degree(kGravity), 4);
  EXPECT_EQ(law_degree(parse_law("power:exponent=3/4,base=norm")), 4);
  EXPECT_TRUE(is_rational_valued(kRossby));
  EXPECT_FALSE(is_rational_valued(kDrift));
  EXPECT_TRUE(is_scalar(kCapillary));
  auto f = parse_law("float:formula=linear");
  EXPECT_FALSE(is_exact(f));
  EXPECT_LAMINA_ERROR(law_degree(f), ErrorKind::NoExactForm);
}

TEST(Nondegeneracy, Examples) {
  EXPECT_FALSE(dispersion_nondegenerate(parse_law("float:formula=linear,alpha=1"), {3, 0}));
  EXPECT_TRUE(dispersion_nondegenerate(parse_law("float:formula=cubic,alpha=1,beta=1"), {2, 0}));
  EXPECT_TRUE(dispersion_nondegenerate(kCapillary, {4, 0}));
}

TEST(Nondegeneracy, TwoDimensionalLaws) {
  EXPECT_TRUE(dispersion_nondegenerate(kDrift, {2, 1}));
  EXPECT_TRUE(dispersion_nondegenerate(kGravity, {3, 4}));
  // |k| is homogeneous of degree one, so its Hessian is singular.
  EXPECT_FALSE(dispersion_nondegenerate(parse_law("power:exponent=1/2,base=norm"), {3, 4}));
  EXPECT_TRUE(dispersion_nondegenerate(kRossby, {2, 5}));
}

}  // namespace
}  // namespace lamina
