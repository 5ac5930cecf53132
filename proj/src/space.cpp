#include "condind/space.hpp"

#include <algorithm>
#include <set>

#include "condind/error.hpp"

namespace condind {

std::shared_ptr<const ProbabilitySpace> ProbabilitySpace::create(std::vector<std::string> labels,
                                                                 std::vector<Rational> probs) {
  if (labels.size() != probs.size())
    throw ValidationError("atom labels and probabilities differ in length");
  if (labels.empty()) throw ValidationError("probability space has no atoms");
  std::set<std::string> seen;
  Rational total = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen.insert(labels[i]).second) throw ValidationError("duplicate atom label '" + labels[i] + "'");
    probs[i].canonicalize();
    if (sgn(probs[i]) <= 0)
      throw ValidationError("null atom '" + labels[i] + "': probability must be > 0, got " +
                            rational_to_string(probs[i]));
    total += probs[i];
  }
  if (total != 1) throw ValidationError("probabilities sum to " + rational_to_string(total) + ", not 1");
  return std::shared_ptr<const ProbabilitySpace>(new ProbabilitySpace(std::move(labels), std::move(probs)));
}

std::shared_ptr<const ProbabilitySpace> ProbabilitySpace::uniform(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Rational> probs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "w" + std::to_string(i));
    probs.emplace_back(1, static_cast<unsigned long>(n));
  }
  return create(std::move(labels), std::move(probs));
}

std::optional<std::size_t> ProbabilitySpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Event Event::full(std::size_t atom_count) {
  Event e(atom_count);
  e.members_.assign(atom_count, true);
  return e;
}

Event Event::of(std::size_t atom_count, const std::vector<std::size_t>& atoms) {
  Event e(atom_count);
  for (auto a : atoms) e.insert(a);
  return e;
}

std::size_t Event::count() const { return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true)); }

std::vector<std::size_t> Event::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(i);
  return out;
}

Event Event::complement() const {
  Event e(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) e.members_[i] = !members_[i];
  return e;
}

Event Event::operator|(const Event& other) const {
  if (other.atom_count() != atom_count()) throw SpaceMismatch("event union across spaces");
  Event e(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) e.members_[i] = members_[i] || other.members_[i];
  return e;
}

Event Event::operator&(const Event& other) const {
  if (other.atom_count() != atom_count()) throw SpaceMismatch("event intersection across spaces");
  Event e(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) e.members_[i] = members_[i] && other.members_[i];
  return e;
}

bool Event::subset_of(const Event& other) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] && !other.members_.at(i)) return false;
  return true;
}

Partition::Partition(std::size_t atom_count, std::vector<std::vector<std::size_t>> cells)
    : cells_(std::move(cells)), cell_of_(atom_count, atom_count) {
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    auto& c = cells_[k];
    if (c.empty()) throw ValidationError("partition has an empty cell");
    std::sort(c.begin(), c.end());
    for (auto a : c) {
      if (a >= atom_count) throw ValidationError("partition cell references atom out of range");
      if (cell_of_[a] != atom_count) throw ValidationError("partition cells overlap");
      cell_of_[a] = 0;
    }
  }
  for (std::size_t a = 0; a < atom_count; ++a)
    if (cell_of_[a] == atom_count) throw ValidationError("partition does not cover every atom");
  std::sort(cells_.begin(), cells_.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t k = 0; k < cells_.size(); ++k)
    for (auto a : cells_[k]) cell_of_[a] = k;
}

Partition Partition::trivial(std::size_t atom_count) {
  std::vector<std::size_t> all(atom_count);
  for (std::size_t i = 0; i < atom_count; ++i) all[i] = i;
  return Partition(atom_count, {all});
}

Partition Partition::discrete(std::size_t atom_count) {
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < atom_count; ++i) cells.push_back({i});
  return Partition(atom_count, std::move(cells));
}

Event Partition::cell_event(std::size_t k) const { return Event::of(atom_count(), cells_.at(k)); }

bool is_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.atom_count() != coarse.atom_count())
    throw SpaceMismatch("is_refinement: partitions live on different spaces");
  for (const auto& c : fine.cells()) {
    std::size_t target = coarse.cell_of(c.front());
    for (auto a : c)
      if (coarse.cell_of(a) != target) return false;
  }
  return true;
}

std::vector<Event> enumerate_events(const Partition& h, std::size_t cap) {
  const std::size_t k = h.cell_count();
  if (k > cap) throw CapExceeded(k, cap);
  std::vector<Event> events;
  events.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Event e(h.atom_count());
    for (std::size_t c = 0; c < k; ++c)
      if (mask & (std::size_t{1} << c))
        for (auto a : h.cell(c)) e.insert(a);
    events.push_back(std::move(e));
  }
  return events;
}

namespace {

void partitions_rec(std::size_t atom, std::size_t n, std::vector<std::vector<std::size_t>>& cells,
                    std::vector<Partition>& out) {
  if (atom == n) {
    out.emplace_back(n, cells);
    return;
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    cells[k].push_back(atom);
    partitions_rec(atom + 1, n, cells, out);
    cells[k].pop_back();
  }
  cells.push_back({atom});
  partitions_rec(atom + 1, n, cells, out);
  cells.pop_back();
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::size_t atom_count) {
  std::vector<Partition> out;
  std::vector<std::vector<std::size_t>> cells;
  if (atom_count == 0) return out;
  partitions_rec(0, atom_count, cells, out);
  return out;
}

}  // namespace condind
