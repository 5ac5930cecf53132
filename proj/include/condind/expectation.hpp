#pragma once

#include <optional>
#include <string>
#include <vector>

#include "condind/random_variable.hpp"

namespace condind {

/// E(X|H) on the whole of L0: E(X+|H) - E(X-|H), each side a probability
/// weighted cell average. An atom with X+ = +inf forces E(X+|H) = +inf on its
/// cell (atoms have positive mass); the difference uses inf - inf = 0.
RandomVariable cond_exp_extended(const RandomVariable& x, const Partition& h);

/// E(X+|H) and E(X-|H) as one value per cell.
struct CellParts {
  std::vector<ExtReal> plus;
  std::vector<ExtReal> minus;
};
CellParts cond_exp_parts(const RandomVariable& x, const Partition& h);

/// Which of the five additivity conditions a cell satisfies.
enum class AdditivityClass { F1, F2, F3, F4, F5 };
std::string to_string(AdditivityClass c);

struct AdditivitySet {
  Event set;                                            // F, the union of classified cells
  std::vector<std::vector<AdditivityClass>> cell_tags;  // per cell; empty when unclassified
};

/// Classifies each cell of h by the finiteness pattern of E(X+-|H), E(Y+-|H):
///   F1: E|X|, E|Y| finite
///   F2: E(X+) = inf, E(X-), E(Y-) finite
///   F3: E(X-) = inf, E(X+), E(Y+) finite
///   F4: E(Y+) = inf, E(X-), E(Y-) finite
///   F5: E(Y-) = inf, E(X+), E(Y+) finite
/// On F the extended conditional expectation is additive.
AdditivitySet additivity_set(const RandomVariable& x, const RandomVariable& y, const Partition& h);

/// E(density * X | H). Throws BadDensity unless density is finite, >= 0 and
/// E(density | H) = 1 (which also gives E(density) = 1).
RandomVariable weighted_expectation(const RandomVariable& x, const Partition& h, const RandomVariable& density);

/// Reason the density is unusable, or nullopt.
std::optional<std::string> density_problem(const RandomVariable& density, const Partition& h);

}  // namespace condind
