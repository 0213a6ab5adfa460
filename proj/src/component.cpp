#include "ppr/component.hpp"

#include <cmath>

#include "ppr/errors.hpp"

namespace ppr {

void Component::validate() const {
  if (name.empty()) throw InvalidInputError("component has no name");
  if (!(Tc > 0.0))
    throw InvalidInputError("component '" + name + "': Tc must be positive");
  if (!(Pc > 0.0))
    throw InvalidInputError("component '" + name + "': Pc must be positive");
  if (!std::isfinite(omega))
    throw InvalidInputError("component '" + name + "': omega must be finite");
  for (const auto& [group, count] : groups) {
    if (count < 1)
      throw InvalidInputError("component '" + name + "': group '" + group +
                              "' has occurrence count < 1");
  }
}

namespace {

// Critical constants and acentric factors from the DIPPR compilation, the
// set conventionally used with the PPR78 parameter family. Pc stored in Pa.
std::vector<Component> make_library() {
  auto mpa = [](double p) { return p * 1e6; };
  std::vector<Component> lib;
  lib.push_back({"CH4", 190.564, mpa(4.599), 0.0115, {{"CH4", 1}}});
  lib.push_back({"C2H6", 305.32, mpa(4.872), 0.0995, {{"C2H6", 1}}});
  lib.push_back({"C3H8", 369.83, mpa(4.248), 0.1523, {{"CH3", 2}, {"CH2", 1}}});
  lib.push_back({"nC4", 425.12, mpa(3.796), 0.2002, {{"CH3", 2}, {"CH2", 2}}});
  lib.push_back({"nC5", 469.70, mpa(3.370), 0.2515, {{"CH3", 2}, {"CH2", 3}}});
  lib.push_back({"nC6", 507.60, mpa(3.025), 0.3013, {{"CH3", 2}, {"CH2", 4}}});
  lib.push_back({"nC7", 540.20, mpa(2.740), 0.3495, {{"CH3", 2}, {"CH2", 5}}});
  lib.push_back({"nC8", 568.70, mpa(2.490), 0.3996, {{"CH3", 2}, {"CH2", 6}}});
  lib.push_back({"nC9", 594.60, mpa(2.290), 0.4435, {{"CH3", 2}, {"CH2", 7}}});
  lib.push_back({"nC10", 617.70, mpa(2.110), 0.4923, {{"CH3", 2}, {"CH2", 8}}});
  lib.push_back({"N2", 126.20, mpa(3.400), 0.0377, {{"N2", 1}}});
  lib.push_back({"CO2", 304.21, mpa(7.383), 0.2236, {{"CO2", 1}}});
  lib.push_back({"H2S", 373.53, mpa(8.963), 0.0942, {{"H2S", 1}}});
  return lib;
}

}  // namespace

const std::vector<Component>& component_library() {
  static const std::vector<Component> lib = make_library();
  return lib;
}

const Component& library_component(std::string_view name) {
  for (const auto& c : component_library()) {
    if (c.name == name) return c;
  }
  throw InvalidInputError("unknown library component '" + std::string(name) +
                          "'");
}

int Mixture::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

void Mixture::validate() const {
  if (components.empty()) throw InvalidInputError("mixture has no components");
  if (components.size() != z.size())
    throw InvalidInputError("mixture has " +
                            std::to_string(components.size()) +
                            " components but " + std::to_string(z.size()) +
                            " mole fractions");
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!(z[i] >= 0.0))
      throw InvalidInputError("mole fraction of '" + components[i].name +
                              "' is negative");
    sum += z[i];
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw InvalidInputError("mole fractions sum to " + std::to_string(sum) +
                            ", expected 1");
  for (const auto& c : components) c.validate();
}

std::vector<Component> co2_blend_components(const Mixture& base) {
  std::vector<Component> comps = base.components;
  if (base.index_of("CO2") < 0) comps.push_back(library_component("CO2"));
  return comps;
}

Mixture co2_blend(const Mixture& base, double z_co2) {
  if (!(z_co2 >= 0.0 && z_co2 < 1.0))
    throw InvalidInputError("CO2 loading must lie in [0, 1)");
  Mixture m;
  m.components = co2_blend_components(base);
  m.z.assign(m.components.size(), 0.0);
  for (std::size_t i = 0; i < base.z.size(); ++i)
    m.z[i] = base.z[i] * (1.0 - z_co2);
  const int ico2 = m.index_of("CO2");
  m.z[ico2] += z_co2;
  return m;
}

}  // namespace ppr
