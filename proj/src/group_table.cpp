#include "ppr/group_table.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ppr/errors.hpp"

namespace ppr {

namespace {

// nlohmann reports byte offsets; convert to 1-based line/column.
std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::size_t parse_error_byte(const nlohmann::json::parse_error& e) {
  return e.byte > 0 ? e.byte - 1 : 0;
}

}  // namespace

GroupTable GroupTable::parse(std::string_view text,
                             std::string_view source_name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, parse_error_byte(e));
    throw ParseError("group table '" + std::string(source_name) +
                         "': " + e.what(),
                     line, col);
  }

  auto fail = [&](const std::string& what) -> void {
    throw ConfigurationError("group table '" + std::string(source_name) +
                             "': " + what);
  };

  if (!j.is_object()) fail("top level must be an object");
  for (const char* key : {"groups", "A_MPa", "B_MPa"})
    if (!j.contains(key)) fail(std::string("missing key '") + key + "'");

  GroupTable t;
  t.source_ = std::string(source_name);
  if (!j["groups"].is_array() || j["groups"].empty())
    fail("'groups' must be a non-empty array of names");
  for (const auto& g : j["groups"]) {
    if (!g.is_string()) fail("'groups' entries must be strings");
    const std::string name = g.get<std::string>();
    if (t.index_of(name) >= 0) fail("duplicate group '" + name + "'");
    t.names_.push_back(name);
  }

  const std::size_t n = t.names_.size();
  const std::size_t npairs = n * (n - 1) / 2;
  t.a_.assign(n * n, 0.0);
  t.b_.assign(n * n, 0.0);
  t.present_.assign(n * n, 1);

  // Upper-triangle lists, row-major: (0,1)..(0,n-1), (1,2)..(1,n-1), ...
  auto read_triangle = [&](const char* key, std::vector<double>& m) {
    const auto& arr = j[key];
    if (!arr.is_array() || arr.size() != npairs)
      fail(std::string("'") + key + "' must list " + std::to_string(npairs) +
           " upper-triangle values, got " + std::to_string(arr.size()));
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = k + 1; l < n; ++l, ++idx) {
        const auto& v = arr[idx];
        if (v.is_null()) {
          t.present_[k * n + l] = 0;
          t.present_[l * n + k] = 0;
          continue;
        }
        if (!v.is_number())
          fail(std::string("'") + key + "' entry " + std::to_string(idx) +
               " (" + t.names_[k] + "," + t.names_[l] +
               ") must be a number or null");
        const double x = v.get<double>() * 1e6;  // MPa -> Pa
        if (!std::isfinite(x))
          fail(std::string("'") + key + "' entry for (" + t.names_[k] + "," +
               t.names_[l] + ") is not finite");
        m[k * n + l] = x;
        m[l * n + k] = x;
      }
    }
  };
  read_triangle("A_MPa", t.a_);
  read_triangle("B_MPa", t.b_);
  return t;
}

GroupTable GroupTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open group table file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const GroupTable& GroupTable::builtin() {
  static const GroupTable t =
      parse(detail::builtin_group_json(), "<builtin ppr78_groups.json>");
  return t;
}

int GroupTable::index_of(std::string_view group) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == group) return static_cast<int>(k);
  return -1;
}

bool GroupTable::has_pair(std::size_t k, std::size_t l) const {
  return present_[k * size() + l] != 0;
}

double GroupTable::at(const std::vector<double>& m, std::size_t k,
                      std::size_t l) const {
  if (k >= size() || l >= size())
    throw ConfigurationError("group index out of range");
  if (!has_pair(k, l))
    throw ConfigurationError("group pair (" + names_[k] + "," + names_[l] +
                             ") is missing from table '" + source_ + "'");
  return m[k * size() + l];
}

double GroupTable::A(std::size_t k, std::size_t l) const { return at(a_, k, l); }
double GroupTable::B(std::size_t k, std::size_t l) const { return at(b_, k, l); }

}  // namespace ppr
