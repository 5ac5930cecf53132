#include "condind/expectation.hpp"

#include "condind/error.hpp"

namespace condind {
namespace {

bool finite(const ExtReal& v) { return v.is_finite(); }

}  // namespace

CellParts cond_exp_parts(const RandomVariable& x, const Partition& h) {
  if (h.atom_count() != x.size()) throw SpaceMismatch("cond_exp: partition on a different space");
  const auto& space = *x.space();
  CellParts parts;
  parts.plus.reserve(h.cell_count());
  parts.minus.reserve(h.cell_count());
  for (const auto& cell : h.cells()) {
    Rational mass = 0;
    Rational pos = 0;
    Rational neg = 0;
    bool pos_inf = false;
    bool neg_inf = false;
    for (auto a : cell) {
      const Rational& p = space.prob(a);
      mass += p;
      const ExtReal& v = x[a];
      if (v.is_plus_inf()) pos_inf = true;
      else if (v.is_minus_inf()) neg_inf = true;
      else if (v.sign() > 0) pos += p * v.value();
      else neg -= p * v.value();
    }
    parts.plus.push_back(pos_inf ? ExtReal::plus_inf() : ExtReal(Rational(pos / mass)));
    parts.minus.push_back(neg_inf ? ExtReal::plus_inf() : ExtReal(Rational(neg / mass)));
  }
  return parts;
}

RandomVariable cond_exp_extended(const RandomVariable& x, const Partition& h) {
  CellParts parts = cond_exp_parts(x, h);
  std::vector<ExtReal> cells;
  cells.reserve(h.cell_count());
  for (std::size_t k = 0; k < h.cell_count(); ++k) cells.push_back(ext_sub(parts.plus[k], parts.minus[k]));
  return RandomVariable::from_cells(x.space(), h, cells);
}

std::string to_string(AdditivityClass c) {
  switch (c) {
    case AdditivityClass::F1: return "F1";
    case AdditivityClass::F2: return "F2";
    case AdditivityClass::F3: return "F3";
    case AdditivityClass::F4: return "F4";
    case AdditivityClass::F5: return "F5";
  }
  return "?";
}

AdditivitySet additivity_set(const RandomVariable& x, const RandomVariable& y, const Partition& h) {
  require_same_space(x, y);
  CellParts px = cond_exp_parts(x, h);
  CellParts py = cond_exp_parts(y, h);
  AdditivitySet out{Event(h.atom_count()), std::vector<std::vector<AdditivityClass>>(h.cell_count())};
  for (std::size_t k = 0; k < h.cell_count(); ++k) {
    const ExtReal& xp = px.plus[k];
    const ExtReal& xm = px.minus[k];
    const ExtReal& yp = py.plus[k];
    const ExtReal& ym = py.minus[k];
    auto& tags = out.cell_tags[k];
    if (finite(xp) && finite(xm) && finite(yp) && finite(ym)) tags.push_back(AdditivityClass::F1);
    if (xp.is_plus_inf() && finite(xm) && finite(ym)) tags.push_back(AdditivityClass::F2);
    if (xm.is_plus_inf() && finite(xp) && finite(yp)) tags.push_back(AdditivityClass::F3);
    if (yp.is_plus_inf() && finite(xm) && finite(ym)) tags.push_back(AdditivityClass::F4);
    if (ym.is_plus_inf() && finite(xp) && finite(yp)) tags.push_back(AdditivityClass::F5);
    if (!tags.empty())
      for (auto a : h.cell(k)) out.set.insert(a);
  }
  return out;
}

std::optional<std::string> density_problem(const RandomVariable& density, const Partition& h) {
  if (h.atom_count() != density.size()) return "density lives on a different space";
  for (std::size_t i = 0; i < density.size(); ++i) {
    if (!density[i].is_finite()) return "density is not finite at atom " + density.space()->label(i);
    if (density[i].sign() < 0) return "density is negative at atom " + density.space()->label(i);
  }
  RandomVariable cond = cond_exp_extended(density, h);
  for (std::size_t k = 0; k < h.cell_count(); ++k) {
    const ExtReal& v = cond[h.cell(k).front()];
    if (v != ExtReal(1))
      return "E(density | H) = " + v.to_string() + " on cell containing atom " +
             density.space()->label(h.cell(k).front()) + ", expected 1";
  }
  return std::nullopt;
}

RandomVariable weighted_expectation(const RandomVariable& x, const Partition& h, const RandomVariable& density) {
  require_same_space(x, density);
  if (auto problem = density_problem(density, h)) throw BadDensity(*problem);
  return cond_exp_extended(density * x, h);
}

}  // namespace condind
