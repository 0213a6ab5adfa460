#include "ppr/eos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ppr/errors.hpp"

namespace ppr {

double m_factor(double omega) {
  if (!std::isfinite(omega))
    throw InvalidInputError("acentric factor must be finite");
  if (omega <= 0.491)
    return 0.37464 + 1.54226 * omega - 0.26992 * omega * omega;
  return 0.374642 + 1.48503 * omega - 0.164423 * omega * omega +
         0.016666 * omega * omega * omega;
}

PureParams pure_params(const Component& c, double T) {
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
  c.validate();
  PureParams p;
  p.m = m_factor(c.omega);
  const double sq = 1.0 + p.m * (1.0 - std::sqrt(T / c.Tc));
  p.alpha = sq * sq;
  p.a = kOmegaA * kGasConstant * kGasConstant * c.Tc * c.Tc / c.Pc * p.alpha;
  p.b = kOmegaB * kGasConstant * c.Tc / c.Pc;
  return p;
}

std::vector<PureParams> pure_params_all(std::span<const Component> comps,
                                        double T) {
  std::vector<PureParams> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(pure_params(c, T));
  return out;
}

namespace {

double cubic_poly(double z, double c2, double c1, double c0) {
  return ((z + c2) * z + c1) * z + c0;
}

// One Newton step; keeps the analytic root when the derivative is too flat
// to improve it (double roots at the phase boundary).
double polish_root(double z, double c2, double c1, double c0) {
  for (int it = 0; it < 2; ++it) {
    const double f = cubic_poly(z, c2, c1, c0);
    const double df = (3.0 * z + 2.0 * c2) * z + c1;
    if (std::abs(df) < 1e-300) break;
    const double step = f / df;
    if (!std::isfinite(step) || std::abs(step) > 0.5 * std::max(1.0, std::abs(z)))
      break;
    z -= step;
  }
  return z;
}

}  // namespace

CubicRoots solve_cubic_z(double A, double B) {
  if (!(B >= 0.0)) throw DomainError("reduced co-volume must be non-negative");

  const double c2 = -(1.0 - B);
  const double c1 = A - 3.0 * B * B - 2.0 * B;
  const double c0 = -(A * B - B * B - B * B * B);

  // Depressed form t^3 + pt + q with Z = t - c2/3.
  const double shift = c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const double disc = 0.25 * q * q + p * p * p / 27.0;

  std::array<double, 3> cand{};
  int ncand = 0;
  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    const double u = std::cbrt(-0.5 * q + s);
    const double v = std::cbrt(-0.5 * q - s);
    cand[ncand++] = u + v - shift;
  } else if (p == 0.0) {
    cand[ncand++] = std::cbrt(-q) - shift;
  } else {
    const double r = std::sqrt(-p / 3.0);
    const double arg = std::clamp(-0.5 * q / (r * r * r), -1.0, 1.0);
    const double phi = std::acos(arg);
    for (int k = 0; k < 3; ++k) {
      cand[ncand++] =
          2.0 * r * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0) - shift;
    }
  }

  for (int i = 0; i < ncand; ++i) cand[i] = polish_root(cand[i], c2, c1, c0);
  std::sort(cand.begin(), cand.begin() + ncand);

  CubicRoots out;
  for (int i = 0; i < ncand; ++i) {
    if (!(cand[i] > B + 1e-12)) continue;            // unphysical volume
    if (out.count > 0 && std::abs(cand[i] - out.roots[out.count - 1]) < 1e-9)
      continue;                                      // merged double root
    out.roots[out.count++] = cand[i];
  }
  if (out.count == 0)
    throw DegenerateStateError("no physical compressibility root at A=" +
                               std::to_string(A) + ", B=" + std::to_string(B));
  return out;
}

double reduced_a(double a, double T, double P) {
  return a * P / (kGasConstant * kGasConstant * T * T);
}

double reduced_b(double b, double T, double P) {
  return b * P / (kGasConstant * T);
}

std::vector<double> fugacity_coefficients_at(const MixParams& mp,
                                             std::span<const double> x,
                                             double T, double P, double Z) {
  static const double sqrt2 = std::numbers::sqrt2;
  const double A = reduced_a(mp.a, T, P);
  const double B = reduced_b(mp.b, T, P);
  if (!(Z > B))
    throw DegenerateStateError("compressibility root does not exceed the "
                               "reduced co-volume");
  const double log_term = std::log((Z + (1.0 + sqrt2) * B) /
                                   (Z + (1.0 - sqrt2) * B));
  const double coef = A / (2.0 * sqrt2 * B) * log_term;

  std::vector<double> lnphi(mp.n);
  for (std::size_t i = 0; i < mp.n; ++i) {
    double sum_ai = 0.0;
    for (std::size_t j = 0; j < mp.n; ++j) sum_ai += x[j] * mp.cross(i, j);
    const double bi_b = mp.bi[i] / mp.b;
    lnphi[i] = bi_b * (Z - 1.0) - std::log(Z - B) -
               coef * (2.0 * sum_ai / mp.a - bi_b);
    if (!std::isfinite(lnphi[i]))
      throw DegenerateStateError("non-finite fugacity coefficient");
  }
  return lnphi;
}

std::vector<double> fugacity_coefficients(const MixParams& mp,
                                          std::span<const double> x, double T,
                                          double P, Phase phase_root) {
  if (!(P > 0.0)) throw DomainError("pressure must be positive");
  if (x.size() != mp.n)
    throw InvalidInputError("composition size does not match mixture");
  double sum = 0.0;
  for (double xi : x) sum += xi;
  if (std::abs(sum - 1.0) > 1e-12)
    throw InvalidInputError("phase composition must sum to 1");

  const auto roots =
      solve_cubic_z(reduced_a(mp.a, T, P), reduced_b(mp.b, T, P));
  const double Z =
      phase_root == Phase::liquid ? roots.liquid_like() : roots.vapor_like();
  return fugacity_coefficients_at(mp, x, T, P, Z);
}

}  // namespace ppr
