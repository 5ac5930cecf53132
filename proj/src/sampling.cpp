#include "condind/sampling.hpp"

#include <limits>

namespace condind {

ValueGrid default_grid() {
  return {ExtReal::minus_inf(), ExtReal(-2), ExtReal(-1), ExtReal(0), ExtReal(1, 2), ExtReal(1), ExtReal(2),
          ExtReal::plus_inf()};
}

ValueGrid finite_grid() { return {ExtReal(-2), ExtReal(-1), ExtReal(0), ExtReal(1, 2), ExtReal(1), ExtReal(2)}; }

ValueGrid scalar_grid() {
  return {ExtReal(-2), ExtReal(-1), ExtReal(-1, 2), ExtReal(0), ExtReal(1, 2), ExtReal(1), ExtReal(2)};
}

ValueGrid nonneg_scalar_grid() { return {ExtReal(0), ExtReal(1, 2), ExtReal(1), ExtReal(2)}; }

ValueGrid unit_grid() { return {ExtReal(0), ExtReal(1, 4), ExtReal(1, 2), ExtReal(3, 4), ExtReal(1)}; }

RandomVariable Sampler::variable(const ValueGrid& grid) {
  std::vector<ExtReal> v;
  v.reserve(space_->size());
  for (std::size_t i = 0; i < space_->size(); ++i) v.push_back(pick(grid));
  return RandomVariable(space_, std::move(v));
}

RandomVariable Sampler::measurable(const Partition& h, const ValueGrid& grid) {
  std::vector<ExtReal> cells;
  cells.reserve(h.cell_count());
  for (std::size_t k = 0; k < h.cell_count(); ++k) cells.push_back(pick(grid));
  return RandomVariable::from_cells(space_, h, cells);
}

Event Sampler::event(const Partition& h) {
  Event e(h.atom_count());
  for (std::size_t k = 0; k < h.cell_count(); ++k)
    if (coin())
      for (auto a : h.cell(k)) e.insert(a);
  return e;
}

RandomVariable Sampler::variable_where(const ValueGrid& grid, const std::function<bool(const RandomVariable&)>& accept,
                                       int attempts) {
  for (int i = 0; i < attempts; ++i) {
    RandomVariable x = variable(grid);
    if (accept(x)) return x;
  }
  return RandomVariable::zero(space_);
}

std::size_t grid_variable_count(std::size_t atoms, std::size_t grid_size) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < atoms; ++i) {
    if (grid_size != 0 && total > std::numeric_limits<std::size_t>::max() / grid_size)
      return std::numeric_limits<std::size_t>::max();
    total *= grid_size;
  }
  return total;
}

void for_each_grid_variable(const SpacePtr& space, const ValueGrid& grid,
                            const std::function<void(const RandomVariable&)>& fn) {
  const std::size_t n = space->size();
  if (grid.empty()) return;
  std::vector<std::size_t> idx(n, 0);
  std::vector<ExtReal> values(n, grid[0]);
  while (true) {
    fn(RandomVariable(space, values));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < grid.size()) {
        values[i] = grid[idx[i]];
        break;
      }
      idx[i] = 0;
      values[i] = grid[0];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace condind
