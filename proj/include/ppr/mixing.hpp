#ifndef PPR_MIXING_HPP
#define PPR_MIXING_HPP

#include <span>
#include <string>
#include <vector>

#include "ppr/component.hpp"
#include "ppr/eos.hpp"
#include "ppr/group_table.hpp"

namespace ppr {

/// Temperature-dependent binary interaction parameter from the group
/// contribution correlation. Symmetric; zero for i == j.
double gc_kij(const Component& i, const Component& j, double T,
              const GroupTable& table);

enum class KijProvenance { gc_predicted, overridden };

/// N x N binary interaction parameters at a fixed temperature, with a
/// provenance flag per pair.
class KijMatrix {
public:
  KijMatrix() = default;
  explicit KijMatrix(std::size_t n)
      : n_(n), k_(n * n, 0.0),
        prov_(n * n, KijProvenance::gc_predicted) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return k_[i * n_ + j]; }
  KijProvenance provenance(std::size_t i, std::size_t j) const {
    return prov_[i * n_ + j];
  }

  /// Sets (i,j) and (j,i); refuses the diagonal.
  void set(std::size_t i, std::size_t j, double value, KijProvenance prov);

private:
  std::size_t n_ = 0;
  std::vector<double> k_;
  std::vector<KijProvenance> prov_;
};

/// A (component name, component name, value) substitution for one pair.
struct KijOverride {
  std::string comp_i;
  std::string comp_j;
  double value = 0.0;
};

/// Matrix of gc_kij values for the mixture's components at T, with
/// overrides substituted symmetrically.
KijMatrix build_kij_matrix(const Mixture& mix, double T,
                           const GroupTable& table,
                           std::span<const KijOverride> overrides = {});

/// Same, for a bare component list (the mixture layout of a CO2 sweep).
KijMatrix build_kij_matrix(std::span<const Component> comps, double T,
                           const GroupTable& table,
                           std::span<const KijOverride> overrides = {});

/// van der Waals one-fluid mixing rules: a = sum_ij z_i z_j sqrt(a_i a_j)
/// (1 - k_ij), b = sum_i z_i b_i. Keeps the cross-energy table for the
/// fugacity partials.
MixParams vdw_mix(std::span<const double> z, std::span<const PureParams> pure,
                  const KijMatrix& kij);

}  // namespace ppr

#endif
