#pragma once

#include "condind/random_variable.hpp"

namespace condind {

/// Conditional essential supremum: on each cell of h, the maximum of X over
/// the cell's atoms. Every atom has positive mass, so this is the least
/// h-measurable variable dominating X.
RandomVariable esssup_cond(const RandomVariable& x, const Partition& h);

/// Conditional essential infimum, -esssup_cond(-X, h): the per-cell minimum.
RandomVariable essinf_cond(const RandomVariable& x, const Partition& h);

/// Per-cell max / min as one value per cell.
std::vector<ExtReal> cell_max(const RandomVariable& x, const Partition& h);
std::vector<ExtReal> cell_min(const RandomVariable& x, const Partition& h);

}  // namespace condind
