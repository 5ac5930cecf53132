#include "condind/essential.hpp"

#include "condind/error.hpp"

namespace condind {

std::vector<ExtReal> cell_max(const RandomVariable& x, const Partition& h) {
  if (h.atom_count() != x.size()) throw SpaceMismatch("esssup_cond: partition on a different space");
  std::vector<ExtReal> out;
  out.reserve(h.cell_count());
  for (const auto& cell : h.cells()) {
    const ExtReal* best = &x[cell.front()];
    for (auto a : cell)
      if (*best < x[a]) best = &x[a];
    out.push_back(*best);
  }
  return out;
}

std::vector<ExtReal> cell_min(const RandomVariable& x, const Partition& h) {
  if (h.atom_count() != x.size()) throw SpaceMismatch("essinf_cond: partition on a different space");
  std::vector<ExtReal> out;
  out.reserve(h.cell_count());
  for (const auto& cell : h.cells()) {
    const ExtReal* best = &x[cell.front()];
    for (auto a : cell)
      if (x[a] < *best) best = &x[a];
    out.push_back(*best);
  }
  return out;
}

RandomVariable esssup_cond(const RandomVariable& x, const Partition& h) {
  return RandomVariable::from_cells(x.space(), h, cell_max(x, h));
}

RandomVariable essinf_cond(const RandomVariable& x, const Partition& h) {
  return RandomVariable::from_cells(x.space(), h, cell_min(x, h));
}

}  // namespace condind
