#include <charconv>
#include <fstream>

#include "minuscule/app.hpp"
#include "minuscule/error.hpp"

namespace minuscule::app {

using nlohmann::json;

namespace {

long read_integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw DomainError("config: \"" + key + "\" must be an integer");
  return v.get<long>();
}

long read_positive(const json& v, const std::string& key) {
  const long x = read_integer(v, key);
  if (x < 1) throw DomainError("config: \"" + key + "\" must be positive");
  return x;
}

bool parse_long(std::string_view s, long& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

void apply_config(Settings& s, const json& config) {
  if (!config.is_object()) throw DomainError("config: top level must be an object");
  for (const auto& [key, v] : config.items()) {
    if (key == "degree_cap")
      s.limits.degree_cap = read_positive(v, key);
    else if (key == "matrix_size_cap")
      s.limits.matrix_size_cap = static_cast<std::size_t>(read_positive(v, key));
    else if (key == "minors_budget")
      s.limits.minors_budget = static_cast<unsigned long long>(read_positive(v, key));
    else if (key == "jobs")
      s.jobs = static_cast<int>(read_positive(v, key));
    else if (key == "refine_log2_width")
      s.refine_log2_width = read_integer(v, key);
    else
      throw DomainError("config: unknown key \"" + key + "\"");
  }
}

void load_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot read " + path);
  json config;
  try {
    config = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("config: " + path + ": " + e.what());
  }
  apply_config(s, config);
}

Range parse_range(std::string_view text) {
  Range r;
  const auto dots = text.find("..");
  const bool ok = dots == std::string_view::npos
                      ? parse_long(text, r.lo) && (r.hi = r.lo, true)
                      : parse_long(text.substr(0, dots), r.lo) && parse_long(text.substr(dots + 2), r.hi);
  if (!ok) throw DomainError("range: expected \"a..b\" or \"a\", got \"" + std::string(text) + "\"");
  if (r.lo > r.hi) throw DomainError("range: empty range " + std::string(text));
  return r;
}

}  // namespace minuscule::app
