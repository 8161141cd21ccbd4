#include "lamina/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "lamina/error.hpp"

namespace lamina {

Amplitudes TriadSystem::rhs(const Amplitudes& a) const {
  return {alphas[0] * a[2] * std::conj(a[1]), alphas[1] * std::conj(a[0]) * a[2], alphas[2] * a[0] * a[1]};
}

TriadSystem TriadSystem::reversed() const { return {{-alphas[0], -alphas[1], -alphas[2]}}; }

InvariantWeights manley_rowe_weights(const TriadSystem& system) {
  const std::array<Complex, 3> w{system.alphas[0], system.alphas[1], std::conj(system.alphas[2])};
  std::size_t j = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(w[i]) > std::abs(w[j])) j = i;
  }
  const double largest = std::abs(w[j]);
  InvariantWeights out;
  if (largest == 0.0) {
    out.first = {1.0, 0.0, 0.0};
    out.second = {0.0, 1.0, 0.0};
    return out;
  }
  const Complex phase = std::conj(w[j]) / largest;
  std::array<double, 3> r{};
  for (std::size_t i = 0; i < 3; ++i) {
    Complex rotated = w[i] * phase;
    if (std::abs(rotated.imag()) > 1e-12 * largest)
      fail(ErrorKind::UnsupportedStructure,
           "triad coefficients (a1, a2, conj(a3)) are not real multiples of one phase; no quadratic invariant pair");
    r[i] = rotated.real();
  }
  const std::size_t a = (j + 1) % 3;
  const std::size_t b = (j + 2) % 3;
  const double sign = r[j] > 0 ? 1.0 : -1.0;
  const double pivot = std::abs(r[j]);
  out.first[a] = sign;
  out.first[j] = -r[a] / pivot;
  out.second[b] = sign;
  out.second[j] = -r[b] / pivot;
  return out;
}

namespace {

double weighted(const std::array<double, 3>& c, const Amplitudes& a) {
  return c[0] * std::norm(a[0]) + c[1] * std::norm(a[1]) + c[2] * std::norm(a[2]);
}

double weighted_scale(const std::array<double, 3>& c, const Amplitudes& a) {
  return std::abs(c[0]) * std::norm(a[0]) + std::abs(c[1]) * std::norm(a[1]) + std::abs(c[2]) * std::norm(a[2]);
}

Amplitudes axpy(const Amplitudes& y, double h, const Amplitudes& k) {
  return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2]};
}

Amplitudes rk4_step(const TriadSystem& sys, const Amplitudes& y, double h) {
  Amplitudes k1 = sys.rhs(y);
  Amplitudes k2 = sys.rhs(axpy(y, h / 2, k1));
  Amplitudes k3 = sys.rhs(axpy(y, h / 2, k2));
  Amplitudes k4 = sys.rhs(axpy(y, h, k3));
  Amplitudes out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = y[i] + (h / 6) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

bool finite(const Amplitudes& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

void check_integration_args(double horizon, double step) {
  if (!(step > 0)) fail(ErrorKind::Precondition, "integration step must be positive");
  if (!(horizon > 0)) fail(ErrorKind::Precondition, "integration horizon must be positive");
}

// Calls visit(step_index, T, A) after every step.
template <class Visit>
AmplitudeState march(const TriadSystem& system, const AmplitudeState& initial, double horizon, double step,
                     Visit&& visit) {
  check_integration_args(horizon, step);
  if (!finite(initial.A)) fail(ErrorKind::Divergence, "initial amplitudes are not finite");
  const auto steps = static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
  Amplitudes y = initial.A;
  double T = initial.T;
  for (std::size_t s = 1; s <= steps; ++s) {
    double h = s == steps ? initial.T + horizon - T : step;
    y = rk4_step(system, y, h);
    T = s == steps ? initial.T + horizon : initial.T + static_cast<double>(s) * step;
    if (!finite(y)) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", T);
      fail(ErrorKind::Divergence, std::string("amplitudes became non-finite at T = ") + buf);
    }
    visit(s, steps, T, y);
  }
  return {y, T};
}

}  // namespace

InvariantPair manley_rowe(const TriadSystem& system, const AmplitudeState& state) {
  auto w = manley_rowe_weights(system);
  return {weighted(w.first, state.A), weighted(w.second, state.A)};
}

Trajectory integrate_triad(const TriadSystem& system, const AmplitudeState& initial, double horizon, double step,
                           std::size_t sample_stride) {
  if (sample_stride == 0) fail(ErrorKind::Precondition, "sample stride must be positive");
  Trajectory traj;
  try {
    traj.weights = manley_rowe_weights(system);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedStructure) throw;
  }
  double i0[2] = {0, 0};
  double scale[2] = {1, 1};
  if (traj.weights) {
    const std::array<double, 3>* w[2] = {&traj.weights->first, &traj.weights->second};
    for (int k = 0; k < 2; ++k) {
      i0[k] = weighted(*w[k], initial.A);
      double sc = weighted_scale(*w[k], initial.A);
      scale[k] = sc > 0 ? sc : 1.0;
    }
  }
  auto record = [&](double T, const Amplitudes& a) {
    traj.samples.push_back({T, a});
    if (traj.weights) {
      traj.invariant_drift.push_back({std::abs(weighted(traj.weights->first, a) - i0[0]) / scale[0],
                                      std::abs(weighted(traj.weights->second, a) - i0[1]) / scale[1]});
    }
  };
  record(initial.T, initial.A);
  march(system, initial, horizon, step, [&](std::size_t s, std::size_t steps, double T, const Amplitudes& y) {
    if (s % sample_stride == 0 || s == steps) record(T, y);
  });
  return traj;
}

AmplitudeState integrate_endpoint(const TriadSystem& system, const AmplitudeState& initial, double horizon,
                                  double step) {
  return march(system, initial, horizon, step, [](std::size_t, std::size_t, double, const Amplitudes&) {});
}

namespace {

struct Integrals {
  double value = 0;
  double scale = 0;
};

Integrals z_integral(const std::array<WaveVector, 3>& modes, int order, LegendreNorm norm) {
  auto rule = gauss_legendre(order, -std::numbers::pi / 2, std::numbers::pi / 2);
  Integrals out;
  const double m1 = modes[0].m, m2 = modes[1].m;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double phi = rule.nodes[i];
    auto p1 = assoc_legendre_latitude(modes[0].n, std::abs(modes[0].m), phi, norm);
    auto p2 = assoc_legendre_latitude(modes[1].n, std::abs(modes[1].m), phi, norm);
    auto p3 = assoc_legendre_latitude(modes[2].n, std::abs(modes[2].m), phi, norm);
    double f = (m2 * p2.value * p1.dphi - m1 * p1.value * p2.dphi) * p3.dphi;
    out.value += rule.weights[i] * f;
    out.scale += rule.weights[i] * std::abs(f);
  }
  return out;
}

void check_rossby_triad(const std::array<WaveVector, 3>& modes) {
  const DispersionLaw law = RossbySphere{};
  for (const auto& k : modes) {
    try {
      check_mode(law, k);
    } catch (const Error& e) {
      fail(ErrorKind::Precondition, std::string("not a spherical triad: ") + e.what());
    }
  }
  if (modes[0].m + modes[1].m != modes[2].m)
    fail(ErrorKind::Precondition, "triad does not conserve the zonal number: m1 + m2 != m3");
  auto residue = omega_exact(law, modes[0]).coeff() + omega_exact(law, modes[1]).coeff() -
                 omega_exact(law, modes[2]).coeff();
  if (!residue.is_zero())
    fail(ErrorKind::Precondition, "triad is not resonant: omega1 + omega2 - omega3 = " + residue.str());
}

}  // namespace

double bve_interaction(const std::array<WaveVector, 3>& modes, int quadrature_order, LegendreNorm norm) {
  return z_integral(modes, quadrature_order, norm).value;
}

BVETriad bve_coefficients(const std::array<WaveVector, 3>& modes, int quadrature_order, LegendreNorm norm,
                          double tolerance) {
  if (!(tolerance > 0)) fail(ErrorKind::Precondition, "quadrature tolerance must be positive");
  if (quadrature_order < kMinQuadratureOrder)
    fail(ErrorKind::Precondition, "quadrature order must be >= " + std::to_string(kMinQuadratureOrder) + ", got " +
                                      std::to_string(quadrature_order));
  check_rossby_triad(modes);
  BVETriad t;
  t.modes = modes;
  t.norm = norm;
  for (std::size_t k = 0; k < 3; ++k) t.N[k] = std::int64_t{modes[k].n} * (modes[k].n + 1);
  auto coarse = z_integral(modes, quadrature_order, norm);
  auto fine = z_integral(modes, 2 * quadrature_order, norm);
  t.Z = coarse.value;
  t.integrand_scale = fine.scale;
  t.convergence = {{quadrature_order, coarse.value}, {2 * quadrature_order, fine.value}};
  const double reference = std::max(std::abs(fine.value), fine.scale);
  if (std::abs(coarse.value - fine.value) > tolerance * reference) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "Z changed from %.17g to %.17g when doubling the quadrature order", coarse.value,
                  fine.value);
    fail(ErrorKind::Accuracy, buf);
  }
  return t;
}

TriadSystem bve_system(const BVETriad& t) {
  const Complex i2Z(0.0, 2.0 * t.Z);
  const double n1 = static_cast<double>(t.N[0]);
  const double n2 = static_cast<double>(t.N[1]);
  const double n3 = static_cast<double>(t.N[2]);
  return {{-i2Z * (n2 - n3) / n1, -i2Z * (n3 - n1) / n2, i2Z * (n2 - n1) / n3}};
}

}  // namespace lamina
