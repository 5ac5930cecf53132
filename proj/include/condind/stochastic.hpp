#pragma once

#include <optional>
#include <string>
#include <vector>

#include "condind/check_report.hpp"
#include "condind/filtration.hpp"
#include "condind/indicator.hpp"

namespace condind {

/// One indicator per date of a filtration; the indicator at date t targets
/// the partition at t.
struct StochasticIndicator {
  std::string name;
  Filtration filtration;
  std::vector<IndicatorSpec> at;

  std::size_t size() const { return at.size(); }
};

/// Throws ValidationError when the count or a target does not match.
StochasticIndicator make_stochastic(std::string name, Filtration filtration, std::vector<IndicatorSpec> per_time);
StochasticIndicator esssup_family(SpacePtr space, const Filtration& f);
StochasticIndicator essinf_family(SpacePtr space, const Filtration& f);
StochasticIndicator condexp_family(SpacePtr space, const Filtration& f);

/// One variable per date, each measurable at its date.
struct AdaptedProcess {
  std::vector<RandomVariable> values;
};

/// Throws ValidationError when a value is not measurable at its date.
AdaptedProcess make_adapted(const Filtration& f, std::vector<RandomVariable> values);

/// I_s(I_t(X)) = I_s(X) for s <= t (date indices). Also checks that I_t maps
/// D_{I_t} into D_{I_s}. Sweeps the grid when small, samples otherwise.
CheckReport check_tower(const StochasticIndicator& si, std::size_t s, std::size_t t, const CheckOptions& opt);
/// check_tower over every pair s < t.
CheckReport check_tower_all(const StochasticIndicator& si, const CheckOptions& opt);

/// Projection equality I0(X 1_F) = I0(Z 1_F) over every event F of ft.
/// Past the cap, `samples` random events are drawn from `seed`.
/// Throws ValidationError unless Z is ft-measurable.
CheckReport check_projection(const IndicatorSpec& i0, const RandomVariable& z, const RandomVariable& x,
                             const Partition& ft, std::size_t cap = kDefaultEventCap, std::size_t samples = 500,
                             std::uint64_t seed = 0);

/// Every ft-measurable Z whose cell values come from `grid` (plus the per-cell
/// maxima of X) and which satisfies the projection equality. Throws
/// GridTooLarge when the candidate count exceeds `budget`, CapExceeded when ft
/// has more than `cap` cells.
std::vector<RandomVariable> projection_solve(const IndicatorSpec& i0, const RandomVariable& x, const Partition& ft,
                                             const ValueGrid& grid, std::size_t budget = 1000000,
                                             std::size_t cap = kDefaultEventCap);

/// Superadditivity of I0 and "I0(Y) <= 0 iff Y = 0" for Y >= 0.
CheckReport check_projection_uniqueness_premises(const IndicatorSpec& i0, const CheckOptions& opt);

/// I_s(M_t) = M_s for every s <= t.
CheckReport is_indicator_martingale(const StochasticIndicator& si, const AdaptedProcess& m);

/// V_T = payoff, V_t = I_t(V_{t+1}); with an exercise process G,
/// V_t = max(G_t, I_t(V_{t+1})) for t < T.
AdaptedProcess backward_envelope(const StochasticIndicator& si, const RandomVariable& payoff,
                                 const std::optional<AdaptedProcess>& exercise = std::nullopt);

/// For X = X 1_F with esssup_{F0}(X) not identically 0: no eps > 0 in
/// `eps_grid` gives esssup_{F0}(X - eps 1_F) = esssup_{F0}(X). Skipped when
/// the hypotheses fail.
CheckReport check_essup_proj(const RandomVariable& x, const Event& f, const Partition& f0, const ValueGrid& eps_grid);
/// Same with esssup_{F0}((X - eps) 1_F) = esssup_{F0}(X 1_F) and hypothesis
/// esssup_{F0}(X 1_F) not identically 0.
CheckReport check_essup_proj_shifted(const RandomVariable& x, const Event& f, const Partition& f0,
                                     const ValueGrid& eps_grid);

}  // namespace condind
