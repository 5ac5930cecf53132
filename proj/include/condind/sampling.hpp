#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "condind/random_variable.hpp"

namespace condind {

using ValueGrid = std::vector<ExtReal>;

/// {-inf, -2, -1, 0, 1/2, 1, 2, +inf}
ValueGrid default_grid();
/// {-2, -1, 0, 1/2, 1, 2}
ValueGrid finite_grid();
/// Finite multipliers {-2, -1, -1/2, 0, 1/2, 1, 2}.
ValueGrid scalar_grid();
/// {0, 1/2, 1, 2}
ValueGrid nonneg_scalar_grid();
/// {0, 1/4, 1/2, 3/4, 1}
ValueGrid unit_grid();

/// Deterministic generator of test inputs. Uses only the raw 64-bit stream of
/// mt19937_64 so that draws are identical across standard libraries.
class Sampler {
 public:
  Sampler(SpacePtr space, std::uint64_t seed) : space_(std::move(space)), rng_(seed) {}

  const SpacePtr& space() const { return space_; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin() { return (rng_() & 1U) != 0; }
  const ExtReal& pick(const ValueGrid& grid) { return grid[index(grid.size())]; }

  RandomVariable variable(const ValueGrid& grid);
  /// A variable taking one grid value per cell of h.
  RandomVariable measurable(const Partition& h, const ValueGrid& grid);
  /// A random union of cells of h.
  Event event(const Partition& h);
  /// Draws from `grid` until `accept` holds (at most `attempts` tries), else 0.
  RandomVariable variable_where(const ValueGrid& grid, const std::function<bool(const RandomVariable&)>& accept,
                                int attempts = 64);

 private:
  SpacePtr space_;
  std::mt19937_64 rng_;
};

/// Calls fn on every variable with values in grid (grid^n of them), in
/// lexicographic order.
void for_each_grid_variable(const SpacePtr& space, const ValueGrid& grid,
                            const std::function<void(const RandomVariable&)>& fn);

/// Number of grid variables, saturating at SIZE_MAX.
std::size_t grid_variable_count(std::size_t atoms, std::size_t grid_size);

}  // namespace condind
