#include <array>
#include <chrono>
#include <ctime>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "minuscule/app.hpp"
#include "minuscule/certify.hpp"
#include "minuscule/error.hpp"
#include "minuscule/families.hpp"
#include "minuscule/oracles.hpp"
#include "minuscule/stats.hpp"
#include "minuscule/totalpos.hpp"

namespace minuscule::app {

using nlohmann::json;

namespace {

// Accumulates named sub-checks into one certificate.
class Combined {
 public:
  explicit Combined(std::string suite, long n) : cert_{std::move(suite), "n = " + std::to_string(n), true} {
    cert_.params = {{"n", n}};
  }

  void add(const std::string& name, const Certificate& c) { add(name, c.pass, c.witness); }
  void add(const std::string& name, bool pass, json witness) {
    cert_.witness[name] = {{"pass", pass}, {"witness", std::move(witness)}};
    cert_.pass = cert_.pass && pass;
  }
  void param(const std::string& key, json v) { cert_.params[key] = std::move(v); }
  Certificate take() { return std::move(cert_); }

 private:
  Certificate cert_;
};

json poly_witness(const Poly& p) { return coeff_strings(p); }

Certificate realroot(long n, const Settings&) {
  Combined c("realroot", n);
  c.add("N_n", certify::certify_real_rooted(families::minuscule_sum(n), certify::RootSide::NonPositive));
  c.add("f_n", certify::certify_real_rooted(families::f_poly(n), certify::RootSide::NonPositive));
  return c.take();
}

Certificate interlace(long n, const Settings&) {
  Combined c("interlace", n);
  c.add("N_n_N_n+1", certify::certify_interlacing(families::minuscule_sum(n), families::minuscule_sum(n + 1)));
  c.add("f_n_f_n+1", certify::certify_interlacing(families::f_poly(n), families::f_poly(n + 1)));
  return c.take();
}

Certificate gamma(long n, const Settings&) {
  Combined c("gamma", n);
  const Poly p = families::minuscule_sum(n);
  c.add("gamma_positive", certify::certify_gamma_positive(p, n));
  c.add("coefficients", certify::certify_coeff_properties(p, n));
  return c.take();
}

Certificate identity(long n, const Settings&) {
  Combined c("identity", n);
  const Poly p = families::minuscule_sum(n);
  const Rat at_one = evaluate(p, Rat(1));
  const Rat expected = Rat(n - 1) * pow2_rat(2 * n - 3);
  c.add("value_at_one", at_one == expected, {{"value", to_string(at_one)}, {"expected", to_string(expected)}});
  const Poly closed = families::minuscule_closed(n);
  c.add("closed_form", closed == p, closed == p ? json::object() : json{{"closed", poly_witness(closed)}});
  const Rat f_one = evaluate(families::f_poly(n), Rat(1));
  c.add("f_value_at_one", f_one == pow2_rat(2 * n + 1), {{"value", to_string(f_one)}});
  if (n - 1 <= 12) {
    const Int s = oracles::symmetric_difference_sum(n - 1);
    c.add("symmetric_difference", Rat(s) == at_one, {{"enumerated", to_string(s)}});
  }
  return c.take();
}

Certificate stats_suite(long n, const Settings& s) {
  Combined c("stats", n);
  const auto st = stats::coeff_stats(n);
  bool symmetric = true;
  for (long k = 0; k <= n; ++k)
    symmetric = symmetric && st.probs[static_cast<std::size_t>(k)] == st.probs[static_cast<std::size_t>(n - k)];
  c.add("mean_variance", symmetric, {{"mean", to_string(st.mean)}, {"variance", to_string(st.variance)}});
  if (n >= 10) {
    const bool grows = st.variance > make_rat(n, 9);
    c.add("variance_above_n_over_9", grows, {{"variance", to_string(st.variance)}});
  }
  c.add("second_derivative", stats::second_derivative_identity(n));
  if (n >= 3 && n <= 60) {
    const auto r = stats::roots_stats(n, s.refine_log2_width);
    const bool inside = r.mean.contains(st.mean) && r.variance.contains(st.variance);
    c.add("root_enclosure", inside,
          {{"mean", {to_string(r.mean.lo), to_string(r.mean.hi)}},
           {"variance", {to_string(r.variance.lo), to_string(r.variance.hi)}}});
    c.param("log2_width", s.refine_log2_width);
  }
  return c.take();
}

Certificate xlogconcave(long n, const Settings&) {
  Combined c("xlogconcave", n);
  const Poly d = families::D_direct(n);
  long negative = -1;
  for (long k = 0; k <= d.degree() && negative < 0; ++k)
    if (d[static_cast<std::size_t>(k)] < 0) negative = k;
  c.add("nonnegative", negative < 0, negative < 0 ? json::object() : json{{"first_negative", negative}});
  const Poly closed = families::D_closed(n);
  c.add("closed_form", closed == d, closed == d ? json::object() : json{{"closed", poly_witness(closed)}});
  return c.take();
}

Certificate hurwitz(long n, const Settings&) {
  Combined c("hurwitz", n);
  c.add("D_n", certify::certify_weak_hurwitz(families::D_direct(n)));
  return c.take();
}

Certificate tp(long n, const Settings&) {
  Combined c("tp", n);
  const auto size = static_cast<std::size_t>(n);
  const auto coeff_n = families::coeffN_matrix(size);
  const auto nev = totalpos::neville_TP(coeff_n);
  c.add("coeffN", nev);
  c.add("minuscule_T", totalpos::pf_truncation_check(totalpos::PfSequence::MinusculeT, size));
  if (n <= 8) {
    const auto minors = totalpos::minors_all_TP(coeff_n, size);
    c.add("coeffN_minors_agree", minors.pass == nev.pass, minors.witness);
  }
  std::vector<Rat> weights;
  for (long k = 0; k <= n; ++k)
    weights.push_back(make_rat(Int(k) * factorial(static_cast<unsigned long>(k)), factorial(static_cast<unsigned long>(2 * k + 1))));
  c.add("multiplier_sequence", certify::check_multiplier_nseq(weights, n));
  c.add("h_recurrence", families::h_recurrence_holds(n), json::object());
  return c.take();
}

Certificate powerset(long n, const Settings&) {
  Combined c("powerset", n);
  const std::vector<std::array<Rat, 4>> tuples = {
      {Rat(1), Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(1), Rat(1), Rat(1)}, {Rat(1, 2), Rat(3), Rat(2, 3), Rat(5)}};
  json rows = json::array();
  bool ok = true;
  for (const auto& [a, b, cc, d] : tuples) {
    const Rat got = oracles::powerset_refined_gf(n, a, b, cc, d);
    const Rat serial = oracles::powerset_refined_gf_reference(n, a, b, cc, d);
    Rat want = 1;
    for (long i = 0; i < n; ++i) want *= a + b + cc + d;
    ok = ok && got == want && serial == got;
    rows.push_back({{"abcd", {to_string(a), to_string(b), to_string(cc), to_string(d)}}, {"sum", to_string(got)}});
  }
  c.add("refined_gf", ok, rows);
  const Int s = oracles::symmetric_difference_sum(n);
  const Rat expected = Rat(n) * pow2_rat(2 * n - 1);
  c.add("symmetric_difference_sum", Rat(s) == expected, {{"value", to_string(s)}, {"expected", to_string(expected)}});
  const Poly gf = oracles::symmetric_difference_gf(n);
  const Poly want = Rat(pow2(static_cast<unsigned long>(n))) * pow(Poly{1, 1}, static_cast<unsigned>(n));
  c.add("symmetric_difference_gf", gf == want, {{"gf", poly_witness(gf)}});
  return c.take();
}

struct SuiteEntry {
  Range bounds;
  std::function<Certificate(long, const Settings&)> run;
};

const std::map<std::string, SuiteEntry>& registry() {
  constexpr long open = 1'000'000;
  static const std::map<std::string, SuiteEntry> r = {
      {"realroot", {{1, open}, realroot}},      {"interlace", {{2, open}, interlace}},
      {"gamma", {{1, open}, gamma}},            {"identity", {{1, open}, identity}},
      {"stats", {{2, open}, stats_suite}},      {"xlogconcave", {{2, open}, xlogconcave}},
      {"hurwitz", {{2, open}, hurwitz}},        {"tp", {{1, open}, tp}},
      {"powerset", {{0, 12}, powerset}},
  };
  return r;
}

const SuiteEntry& find_suite(const std::string& suite) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw DomainError("unknown suite \"" + suite + "\"");
  return it->second;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, entry] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

Range suite_bounds(const std::string& suite) { return find_suite(suite).bounds; }

Certificate run_suite(const std::string& suite, long n, const Settings& s) {
  const auto& entry = find_suite(suite);
  if (n < entry.bounds.lo || n > entry.bounds.hi)
    throw DomainError("suite " + suite + " accepts n in " + std::to_string(entry.bounds.lo) + ".." +
                      std::to_string(entry.bounds.hi));
  try {
    return entry.run(n, s);
  } catch (const std::exception& e) {
    const char* kind = dynamic_cast<const BudgetError*>(&e)     ? "budget"
                       : dynamic_cast<const InternalError*>(&e) ? "internal"
                                                                : "error";
    Certificate c{suite, "n = " + std::to_string(n), false};
    c.params = {{"n", n}};
    c.witness = {{"error", e.what()}, {"kind", kind}};
    return c;
  }
}

json record_json(const Record& r) {
  return {{"suite", r.suite},
          {"n", r.n},
          {"verdict", r.cert.pass ? "pass" : "fail"},
          {"witness", r.cert.witness},
          {"params", r.cert.params},
          {"duration_ms", r.duration_ms}};
}

std::vector<Record> run_range(const std::string& suite, Range r, const Settings& s) {
  const auto& entry = find_suite(suite);
  if (r.lo < entry.bounds.lo || r.hi > entry.bounds.hi)
    throw DomainError("suite " + suite + " accepts n in " + std::to_string(entry.bounds.lo) + ".." +
                      std::to_string(entry.bounds.hi));
  const long count = r.hi - r.lo + 1;
  std::vector<Record> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) num_threads(s.jobs)
  for (long i = 0; i < count; ++i) {
    const long n = r.lo + i;
    const auto t0 = std::chrono::steady_clock::now();
    Certificate c = run_suite(suite, n, s);
    const auto t1 = std::chrono::steady_clock::now();
    out[static_cast<std::size_t>(i)] = {suite, n, std::move(c), std::chrono::duration<double, std::milli>(t1 - t0).count()};
  }
  return out;
}

json header_json(const std::string& verb, json details) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream ts;
  ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  details["tool"] = "minuscule";
  details["verb"] = verb;
  details["timestamp"] = ts.str();
  return {{"header", std::move(details)}};
}

}  // namespace minuscule::app
