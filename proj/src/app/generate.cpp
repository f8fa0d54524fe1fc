#include <functional>
#include <map>
#include <ostream>

#include "minuscule/app.hpp"
#include "minuscule/error.hpp"
#include "minuscule/families.hpp"

namespace minuscule::app {

using nlohmann::json;

namespace {

// Values indexed by k = k_min, k_min + 1, ...
struct Row {
  long k_min = 0;
  std::vector<Rat> values;
};

Row poly_row(const Poly& p) {
  if (p.is_zero()) return {0, {Rat(0)}};
  return {0, std::vector<Rat>(p.coeffs().begin(), p.coeffs().end())};
}

Row matrix_row(long n, Rat (*entry)(long, long)) {
  Row r{1, {}};
  for (long k = 1; k <= n - 1; ++k) r.values.push_back(entry(n, k));
  return r;
}

struct FamilyEntry {
  long min_n;
  std::function<Row(long)> row;
};

const std::map<std::string, FamilyEntry>& registry() {
  static const std::map<std::string, FamilyEntry> r = {
      {"N", {1, [](long n) { return poly_row(families::minuscule_sum(n)); }}},
      {"f", {0, [](long n) { return poly_row(families::f_poly(n)); }}},
      {"U", {0, [](long n) { return poly_row(families::chebyshev_U(n)); }}},
      {"D", {2, [](long n) { return poly_row(families::D_direct(n)); }}},
      {"gamma", {1, [](long n) { return Row{0, families::gamma_vector(families::minuscule_sum(n), n).gammas}; }}},
      {"h", {0, [](long n) { return poly_row(families::h_poly(n)); }}},
      {"g", {0, [](long n) { return poly_row(families::g_poly(n)); }}},
      {"coeffN", {2, [](long n) { return matrix_row(n, families::coeffN_entry); }}},
      {"coeffT", {2, [](long n) { return matrix_row(n, families::coeffT_entry); }}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"N", "f", "U", "D", "gamma", "h", "g", "coeffN", "coeffT"};
  return names;
}

void generate(const std::string& family, Range r, Format f, std::ostream& out) {
  const auto it = registry().find(family);
  if (it == registry().end()) throw DomainError("unknown family \"" + family + "\"");
  const auto& entry = it->second;
  if (r.lo < entry.min_n)
    throw DomainError("family " + family + " needs n >= " + std::to_string(entry.min_n));
  if (f == Format::Csv) {
    out << "n,k,value\n";
    for (long n = r.lo; n <= r.hi; ++n) {
      const Row row = entry.row(n);
      for (std::size_t i = 0; i < row.values.size(); ++i)
        out << n << ',' << row.k_min + static_cast<long>(i) << ',' << to_string(row.values[i]) << '\n';
    }
    return;
  }
  json rows = json::array();
  for (long n = r.lo; n <= r.hi; ++n) {
    const Row row = entry.row(n);
    std::vector<std::string> values;
    for (const auto& v : row.values) values.push_back(to_string(v));
    rows.push_back({{"n", n}, {"k_min", row.k_min}, {"values", values}});
  }
  out << json{{"family", family}, {"rows", rows}}.dump(2) << '\n';
}

}  // namespace minuscule::app
