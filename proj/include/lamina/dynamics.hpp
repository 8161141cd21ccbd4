#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lamina/dispersion.hpp"
#include "lamina/legendre.hpp"

namespace lamina {

using Complex = std::complex<double>;
using Amplitudes = std::array<Complex, 3>;

// dA1/dT = a1 A3 conj(A2),  dA2/dT = a2 conj(A1) A3,  dA3/dT = a3 A1 A2.
struct TriadSystem {
  std::array<Complex, 3> alphas{};

  Amplitudes rhs(const Amplitudes& a) const;
  // Same flow run backwards in slow time.
  TriadSystem reversed() const;
};

struct AmplitudeState {
  Amplitudes A{};
  double T = 0.0;
};

// Weights c of the two conserved quantities I = sum_i c_i |A_i|^2.
//
// Along the flow, with P = A1 A2 conj(A3):
//   d|A1|^2/dT = 2 Re(a1 conj(P)),  d|A2|^2/dT = 2 Re(a2 conj(P)),
//   d|A3|^2/dT = 2 Re(conj(a3) conj(P)).
// When w = (a1, a2, conj(a3)) = e^{i theta} (r1, r2, r3) with real r, every
// rate is 2 r_i Re(e^{i theta} conj(P)), so sum c_i r_i = 0 gives an
// invariant. With pivot j = argmax |r_j| and the other indices a, b:
//   I1: c_a = sign(r_j), c_j = -r_a / |r_j|
//   I2: c_b = sign(r_j), c_j = -r_b / |r_j|
// Both the real-coefficient generic system and the BVE form (purely
// imaginary alphas) have this structure. If all alphas vanish every |A_i|
// is constant and I1 = |A1|^2, I2 = |A2|^2.
struct InvariantWeights {
  std::array<double, 3> first{};
  std::array<double, 3> second{};
};

// Raises UnsupportedStructure when (a1, a2, conj(a3)) are not real
// multiples of one complex number.
InvariantWeights manley_rowe_weights(const TriadSystem& system);

struct InvariantPair {
  double first = 0;
  double second = 0;
};

InvariantPair manley_rowe(const TriadSystem& system, const AmplitudeState& state);

struct TrajectorySample {
  double T;
  Amplitudes A;
};

// drift[k] = |I(T) - I(0)| / sum_i |c_i| |A_i(0)|^2 (plain |I(T) - I(0)| if
// the denominator is zero). Empty when the system has no invariant pair.
struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<std::array<double, 2>> invariant_drift;
  std::optional<InvariantWeights> weights;
};

inline constexpr double kDefaultStep = 1e-3;
inline constexpr double kDefaultHorizon = 100.0;

// Classical fixed-step RK4 from initial.T to initial.T + horizon. The last
// step is shortened to land on the horizon. Every `sample_stride`-th step
// and the final state are recorded. A non-finite state raises Divergence.
Trajectory integrate_triad(const TriadSystem& system, const AmplitudeState& initial, double horizon,
                           double step = kDefaultStep, std::size_t sample_stride = 1);

// Final state only, without storing samples.
AmplitudeState integrate_endpoint(const TriadSystem& system, const AmplitudeState& initial, double horizon,
                                  double step);

// Resonant Rossby triad on the sphere with its interaction data:
//   N1 dA1/dT = -2iZ(N2 - N3) A3 conj(A2)
//   N2 dA2/dT = -2iZ(N3 - N1) conj(A1) A3
//   N3 dA3/dT =  2iZ(N2 - N1) A1 A2
// with N_k = n_k (n_k + 1) and
//   Z = int_{-pi/2}^{pi/2} [m2 P2 dP1/dphi - m1 P1 dP2/dphi] dP3/dphi dphi,
// P_k = P_{n_k}^{|m_k|}(sin phi).
struct BVETriad {
  std::array<WaveVector, 3> modes{};
  std::array<std::int64_t, 3> N{};
  double Z = 0;
  LegendreNorm norm = LegendreNorm::Ferrers;
  // (order, Z) at the requested order and at twice that order.
  std::vector<std::pair<int, double>> convergence;
  // int |integrand| dphi, the scale for accuracy checks on a vanishing Z.
  double integrand_scale = 0;
};

inline constexpr int kMinQuadratureOrder = 16;
inline constexpr double kQuadratureTolerance = 1e-8;

// Raises Precondition for a non-resonant triad (omega1 + omega2 != omega3
// or m1 + m2 != m3) or an order below kMinQuadratureOrder, and Accuracy if
// doubling the order moves Z by more than `tolerance` relative to
// max(|Z|, integrand_scale).
BVETriad bve_coefficients(const std::array<WaveVector, 3>& modes, int quadrature_order,
                          LegendreNorm norm = LegendreNorm::Ferrers, double tolerance = kQuadratureTolerance);

// Z alone at one quadrature order, without validation.
double bve_interaction(const std::array<WaveVector, 3>& modes, int quadrature_order, LegendreNorm norm);

TriadSystem bve_system(const BVETriad& triad);

// Rossby triad used by the simulation demo and the acceptance suite:
// (-3,4) + (1,3) -> (-2,5), with omega = 3/10, -1/6, 2/15. This is the
// (1,3), (2,5), (3,4) interaction written with N3 outside [N1, N2]; in the
// other labelling all three rates share a sign and amplitudes blow up in
// finite time.
inline constexpr std::array<WaveVector, 3> kDemoTriad{{{-3, 4}, {1, 3}, {-2, 5}}};

}  // namespace lamina
