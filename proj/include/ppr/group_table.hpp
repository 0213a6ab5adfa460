#ifndef PPR_GROUP_TABLE_HPP
#define PPR_GROUP_TABLE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ppr {

/// Symmetric group-interaction parameter matrices A_kl and B_kl for the
/// temperature-dependent kij correlation. Immutable after load; entries are
/// stored in Pa. Pairs may be marked absent (null in the data file), in
/// which case requesting them is a configuration error.
class GroupTable {
public:
  /// Parses the structured-text form: a JSON object with keys `groups`,
  /// `A_MPa` and `B_MPa`, the matrices given as upper-triangle lists in
  /// row-major order. Malformed text raises ParseError with line/column;
  /// structural problems raise ConfigurationError.
  static GroupTable parse(std::string_view text, std::string_view source_name);

  /// Reads and parses a file.
  static GroupTable load(const std::string& path);

  /// The bundled PPR78 parameter set (embedded copy of data/ppr78_groups.json).
  static const GroupTable& builtin();

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t k) const { return names_[k]; }

  /// Index of a group by name, -1 when absent.
  int index_of(std::string_view group) const;

  bool has_pair(std::size_t k, std::size_t l) const;

  /// A_kl in Pa; throws ConfigurationError when the pair is absent.
  double A(std::size_t k, std::size_t l) const;
  /// B_kl in Pa; throws ConfigurationError when the pair is absent.
  double B(std::size_t k, std::size_t l) const;

  const std::string& source() const { return source_; }

private:
  std::vector<std::string> names_;
  std::vector<double> a_;        // n*n, Pa
  std::vector<double> b_;        // n*n, Pa
  std::vector<char> present_;    // n*n
  std::string source_;

  double at(const std::vector<double>& m, std::size_t k, std::size_t l) const;
};

namespace detail {
/// Text of the embedded copy of data/ppr78_groups.json.
const char* builtin_group_json();
}  // namespace detail

}  // namespace ppr

#endif
