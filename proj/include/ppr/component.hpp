#ifndef PPR_COMPONENT_HPP
#define PPR_COMPONENT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ppr {

/// A pure chemical species: critical constants, acentric factor and its
/// decomposition into functional groups.
struct Component {
  std::string name;
  double Tc = 0.0;     // critical temperature, K
  double Pc = 0.0;     // critical pressure, Pa
  double omega = 0.0;  // acentric factor
  // (group name, occurrence count); group names resolve against the active
  // group-interaction table.
  std::vector<std::pair<std::string, int>> groups;

  /// Throws InvalidInputError when a field is out of range.
  void validate() const;
};

/// Built-in species with literature constants (see component.cpp for the
/// sources). Covers CH4, C2H6, C3H8, nC4..nC10, N2, CO2 and H2S.
const std::vector<Component>& component_library();

/// Looks a species up in the built-in library; throws InvalidInputError when
/// the name is unknown.
const Component& library_component(std::string_view name);

/// Component list plus global mole fractions.
struct Mixture {
  std::vector<Component> components;
  std::vector<double> z;

  std::size_t size() const { return components.size(); }

  /// Index of a component by name, -1 when absent.
  int index_of(std::string_view name) const;

  /// Checks size consistency, z_i >= 0 and sum(z) = 1 within 1e-10.
  void validate() const;
};

/// Component layout of `base` blended with CO2: base order preserved, a CO2
/// entry appended when the base oil has none. Shared by all loadings of a
/// sweep so that one KijMatrix serves every point.
std::vector<Component> co2_blend_components(const Mixture& base);

/// base renormalized to (1 - z_co2) plus CO2 at z_co2, using the
/// co2_blend_components layout.
Mixture co2_blend(const Mixture& base, double z_co2);

}  // namespace ppr

#endif
