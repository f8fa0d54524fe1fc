#include "minuscule/totalpos.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "minuscule/error.hpp"
#include "minuscule/families.hpp"
#include "minuscule/limits.hpp"

namespace minuscule::totalpos {

using nlohmann::json;

namespace {

using Index = std::vector<std::size_t>;

std::string describe(const ExactMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix"; }

std::vector<Index> combinations(std::size_t n, std::size_t k) {
  std::vector<Index> out;
  if (k > n) return out;
  Index c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

struct NegativeMinor {
  Index rows, cols;
  Rat value;
};

json to_json(const NegativeMinor& m) {
  return {{"order", m.rows.size()}, {"rows", m.rows}, {"cols", m.cols}, {"minor", to_string(m.value)}};
}

// First negative minor of order <= max_order in (k, rows, cols) order.
std::optional<NegativeMinor> first_negative_minor(const ExactMatrix& m, std::size_t max_order, bool parallel) {
  for (std::size_t k = 1; k <= max_order; ++k) {
    const auto row_sets = combinations(m.rows(), k);
    const auto col_sets = combinations(m.cols(), k);
    std::vector<std::optional<std::pair<std::size_t, Rat>>> found(row_sets.size());
    const long count = static_cast<long>(row_sets.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long r = 0; r < count; ++r) {
      const auto& rows = row_sets[static_cast<std::size_t>(r)];
      for (std::size_t c = 0; c < col_sets.size(); ++c) {
        Rat d = k == 1 ? m(rows[0], col_sets[c][0]) : determinant(m.submatrix(rows, col_sets[c]));
        if (d < 0) {
          found[static_cast<std::size_t>(r)] = std::make_pair(c, std::move(d));
          break;
        }
      }
    }
    for (std::size_t r = 0; r < found.size(); ++r)
      if (found[r]) return NegativeMinor{row_sets[r], col_sets[found[r]->first], found[r]->second};
  }
  return std::nullopt;
}

Certificate minors_impl(const ExactMatrix& m, std::size_t max_order, bool parallel) {
  if (max_order > std::min(m.rows(), m.cols())) throw DomainError("minors_all_TP: max_order exceeds matrix dimensions");
  const auto count = minor_count(m.rows(), m.cols(), max_order);
  if (count > limits().minors_budget)
    throw BudgetError("minors_all_TP: budget exceeded: " + std::to_string(count) + " minors for " + describe(m) +
                      " up to order " + std::to_string(max_order) + ", budget " +
                      std::to_string(limits().minors_budget));
  Certificate cert{"minors_TP", describe(m), false};
  cert.params = {{"max_order", max_order}};
  if (auto neg = first_negative_minor(m, max_order, parallel)) {
    cert.witness = to_json(*neg);
    return cert;
  }
  cert.pass = true;
  cert.witness = {{"minors_checked", count}};
  return cert;
}

// Working copy with labels back to the original row/column indices.
struct Work {
  std::vector<std::vector<Rat>> a;
  Index row_id, col_id;

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return a.empty() ? 0 : a.front().size(); }

  void drop_zero_lines() {
    std::vector<std::vector<Rat>> kept;
    Index kept_rows;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::any_of(a[i].begin(), a[i].end(), [](const Rat& x) { return x != 0; })) {
        kept.push_back(std::move(a[i]));
        kept_rows.push_back(row_id[i]);
      }
    a = std::move(kept);
    row_id = std::move(kept_rows);
    Index keep_cols;
    for (std::size_t j = 0; j < col_id.size(); ++j)
      if (std::any_of(a.begin(), a.end(), [j](const auto& row) { return row[j] != 0; })) keep_cols.push_back(j);
    if (keep_cols.size() == col_id.size()) return;
    for (auto& row : a) {
      std::vector<Rat> r;
      for (auto j : keep_cols) r.push_back(std::move(row[j]));
      row = std::move(r);
    }
    Index ids;
    for (auto j : keep_cols) ids.push_back(col_id[j]);
    col_id = std::move(ids);
    if (a.empty()) col_id.clear();
  }

  std::optional<json> negative_entry(long step) const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j)
        if (a[i][j] < 0)
          return json{{"stage", "negative_entry"}, {"step", step}, {"row", row_id[i]}, {"col", col_id[j]},
                      {"reduced_value", to_string(a[i][j])}};
    return std::nullopt;
  }
};

// Elimination failure description, or nullopt when the matrix is TP.
std::optional<json> neville_failure(const ExactMatrix& m, long& steps) {
  Work w;
  w.a.assign(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w.a[i][j] = m(i, j);
  for (std::size_t i = 0; i < m.rows(); ++i) w.row_id.push_back(i);
  for (std::size_t j = 0; j < m.cols(); ++j) w.col_id.push_back(j);

  for (steps = 0;; ++steps) {
    w.drop_zero_lines();
    if (w.rows() == 0) return std::nullopt;
    if (auto bad = w.negative_entry(steps)) return bad;

    // First column: positive head, zero tail.
    std::size_t s = 0;
    while (s < w.rows() && w.a[s][0] != 0) ++s;
    for (std::size_t i = s; i < w.rows(); ++i)
      if (w.a[i][0] != 0)
        return json{{"stage", "column_zero_pattern"}, {"step", steps}, {"zero_row", w.row_id[s]},
                    {"nonzero_row", w.row_id[i]}, {"col", w.col_id[0]}};
    for (std::size_t i = s; i-- > 1;) {
      const Rat f = w.a[i][0] / w.a[i - 1][0];
      for (std::size_t j = 0; j < w.cols(); ++j) w.a[i][j] -= f * w.a[i - 1][j];
    }
    w.drop_zero_lines();
    if (auto bad = w.negative_entry(steps)) return bad;

    // First row: positive head, zero tail.
    auto& top = w.a[0];
    std::size_t t = 0;
    while (t < w.cols() && top[t] != 0) ++t;
    for (std::size_t j = t; j < w.cols(); ++j)
      if (top[j] != 0)
        return json{{"stage", "row_zero_pattern"}, {"step", steps}, {"row", w.row_id[0]},
                    {"zero_col", w.col_id[t]}, {"nonzero_col", w.col_id[j]}};
    for (std::size_t j = t; j-- > 1;) {
      const Rat f = top[j] / top[j - 1];
      for (std::size_t i = 0; i < w.rows(); ++i) w.a[i][j] -= f * w.a[i][j - 1];
    }

    w.a.erase(w.a.begin());
    w.row_id.erase(w.row_id.begin());
    for (auto& row : w.a) row.erase(row.begin());
    w.col_id.erase(w.col_id.begin());
  }
}

}  // namespace

unsigned long long minor_count(std::size_t rows, std::size_t cols, std::size_t max_order) {
  constexpr auto cap = std::numeric_limits<unsigned long long>::max();
  Int total = 0;
  for (std::size_t k = 1; k <= max_order; ++k)
    total += binomial(static_cast<long>(rows), static_cast<long>(k)) * binomial(static_cast<long>(cols), static_cast<long>(k));
  if (!total.fits_ulong_p()) return cap;
  return total.get_ui();
}

Certificate minors_all_TP(const ExactMatrix& m, std::size_t max_order) { return minors_impl(m, max_order, true); }

Certificate minors_all_TP_reference(const ExactMatrix& m, std::size_t max_order) {
  return minors_impl(m, max_order, false);
}

Certificate neville_TP(const ExactMatrix& m) {
  Certificate cert{"neville_TP", describe(m), false};
  long steps = 0;
  auto failure = neville_failure(m, steps);
  if (!failure) {
    cert.pass = true;
    cert.witness = {{"elimination_steps", steps}};
    return cert;
  }
  json w = {{"elimination", *failure}};
  // Largest order whose exhaustive search fits the budget.
  const std::size_t full = std::min(m.rows(), m.cols());
  std::size_t order = 0;
  while (order < full && minor_count(m.rows(), m.cols(), order + 1) <= limits().minors_budget) ++order;
  if (auto neg = first_negative_minor(m, order, true)) {
    w["negative_minor"] = to_json(*neg);
  } else if (order == full) {
    throw InternalError("neville_TP: elimination rejected " + describe(m) + " but every minor is nonnegative");
  } else {
    w["minor_search_order"] = order;
  }
  cert.witness = std::move(w);
  return cert;
}

Certificate pf_truncation_check(PfSequence kind, std::size_t size, const std::vector<Rat>& custom) {
  if (size < 1) throw DomainError("pf_truncation_check: size must be >= 1");
  Certificate cert{"pf_truncation", "", false};
  cert.params = {{"size", size}};
  if (kind == PfSequence::Custom) {
    cert.subject = "custom sequence of length " + std::to_string(custom.size());
    const auto t = neville_TP(families::toeplitz(custom, size));
    cert.pass = t.pass;
    cert.witness = {{"toeplitz", t.witness}};
    return cert;
  }
  cert.subject = "k/(2k+1)!";
  const auto t = neville_TP(families::toeplitz(families::minuscule_T_sequence, size));
  const auto direct = neville_TP(families::coeffT_matrix(size));
  cert.pass = t.pass && direct.pass;
  cert.witness = {{"toeplitz", t.witness}, {"coefficient_matrix", direct.witness}};
  return cert;
}

}  // namespace minuscule::totalpos
