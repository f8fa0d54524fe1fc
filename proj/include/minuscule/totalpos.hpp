#pragma once

#include <cstddef>
#include <vector>

#include "minuscule/certificate.hpp"
#include "minuscule/matrix.hpp"

namespace minuscule::totalpos {

/// sum_{k=1}^{max_order} C(rows,k) C(cols,k), saturating.
unsigned long long minor_count(std::size_t rows, std::size_t cols, std::size_t max_order);

/// Every k x k minor with k <= max_order is >= 0. On failure the witness is the
/// first negative minor in (k, rows, cols) lexicographic order, indices 0-based.
/// Throws BudgetError when minor_count exceeds limits().minors_budget.
Certificate minors_all_TP(const ExactMatrix& m, std::size_t max_order);
/// Serial reference with identical output.
Certificate minors_all_TP_reference(const ExactMatrix& m, std::size_t max_order);

/// Total positivity by Neville elimination with the zero-pattern rules.
/// A failing verdict carries a negative minor whenever the exhaustive search
/// fits the minors budget, and the elimination step that failed otherwise.
Certificate neville_TP(const ExactMatrix& m);

enum class PfSequence { MinusculeT, Custom };

/// Toeplitz truncation of a sequence tested with neville_TP. For MinusculeT the
/// sequence is k/(2k+1)! and the coefficient matrix [(n-k)/(2n-2k+1)!] is tested
/// as well. `custom` (zero-padded) is read only for Custom.
Certificate pf_truncation_check(PfSequence kind, std::size_t size, const std::vector<Rat>& custom = {});

}  // namespace minuscule::totalpos
