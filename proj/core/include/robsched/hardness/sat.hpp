#pragma once

#include "robsched/hardness/cnf.hpp"

#include <optional>
#include <vector>

namespace robsched::hardness {

/// Plain DPLL with unit propagation (no learning); a desk-scale verification
/// oracle. Returns a satisfying assignment or std::nullopt for a certified
/// unsatisfiable formula. Throws SizeLimitError above max_variables.
std::optional<std::vector<bool>> sat_decide(const CnfFormula& formula, int max_variables = 20);

}  // namespace robsched::hardness
