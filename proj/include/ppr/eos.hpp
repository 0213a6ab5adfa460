#ifndef PPR_EOS_HPP
#define PPR_EOS_HPP

#include <array>
#include <span>
#include <vector>

#include "ppr/component.hpp"

namespace ppr {

inline constexpr double kGasConstant = 8.314472;  // J/(mol K)
inline constexpr double kOmegaA = 0.457235529;
inline constexpr double kOmegaB = 0.0777960739;

/// Slope factor of the Soave alpha function, with the PR78 branch switch at
/// omega = 0.491.
double m_factor(double omega);

/// Pure-component PR78 parameters at temperature T.
struct PureParams {
  double a = 0.0;      // Pa m^6 / mol^2
  double b = 0.0;      // m^3 / mol
  double m = 0.0;
  double alpha = 0.0;
};

PureParams pure_params(const Component& c, double T);

/// Convenience: pure_params for every component of a list.
std::vector<PureParams> pure_params_all(std::span<const Component> comps,
                                        double T);

/// Real compressibility-factor roots of the PR cubic, ascending, after the
/// physical filter Z > B.
struct CubicRoots {
  std::array<double, 3> roots{};
  int count = 0;

  double liquid_like() const { return roots[0]; }
  double vapor_like() const { return roots[count - 1]; }
  bool has_two() const { return count > 1; }
};

/// Roots of Z^3 - (1-B)Z^2 + (A-3B^2-2B)Z - (AB-B^2-B^3) = 0 with A and B
/// the reduced energy and co-volume parameters. When three real roots exist
/// the middle one is the unstable branch; it is retained in `roots` but the
/// liquid_like/vapor_like selectors never return it. Throws
/// DegenerateStateError when no root passes the Z > B filter.
CubicRoots solve_cubic_z(double A, double B);

/// Mixture parameters from the one-fluid mixing rules, plus the per-pair
/// cross-energy table needed by the fugacity partials.
struct MixParams {
  double a = 0.0;                // Pa m^6 / mol^2
  double b = 0.0;                // m^3 / mol
  std::vector<double> ai;        // pure a_i
  std::vector<double> bi;        // pure b_i
  std::vector<double> aij;       // n*n cross energies, sqrt(ai aj)(1-kij)
  std::size_t n = 0;

  double cross(std::size_t i, std::size_t j) const { return aij[i * n + j]; }
};

enum class Phase { liquid, vapor };

/// ln(phi_i) for the phase of composition x at (T, P), evaluated on the
/// selected cubic root. x must sum to 1 within 1e-12.
std::vector<double> fugacity_coefficients(const MixParams& mp,
                                          std::span<const double> x, double T,
                                          double P, Phase phase_root);

/// ln(phi_i) evaluated at a caller-chosen compressibility root.
std::vector<double> fugacity_coefficients_at(const MixParams& mp,
                                             std::span<const double> x,
                                             double T, double P, double Z);

/// Reduced parameters A = aP/(RT)^2, B = bP/(RT).
double reduced_a(double a, double T, double P);
double reduced_b(double b, double T, double P);

}  // namespace ppr

#endif
