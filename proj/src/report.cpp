#include "condind/report.hpp"

#include <sstream>

namespace condind {

Json to_json(const RandomVariable& x) {
  Json j = Json::object();
  for (std::size_t a = 0; a < x.size(); ++a) j[x.space()->label(a)] = x[a].to_string();
  return j;
}

Json to_json(const Witness& w) {
  Json inputs = Json::object();
  for (const auto& [name, v] : w.inputs) inputs[name] = to_json(v);
  Json j{{"inputs", inputs}, {"lhs", to_json(w.lhs)}, {"relation", w.relation}, {"rhs", to_json(w.rhs)}};
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json to_json(const CheckReport& r) {
  Json j{{"property", r.property}, {"verdict", to_string(r.verdict)}, {"cases", r.cases}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.alarm) j["alarm"] = true;
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.children.empty()) {
    Json children = Json::array();
    for (const auto& c : r.children) children.push_back(to_json(c));
    j["children"] = children;
  }
  return j;
}

Json to_json(const DensityReport& d) {
  Json mu = Json::object();
  for (std::size_t a = 0; a < d.mu.size(); ++a) mu[d.density.space()->label(a)] = d.mu[a].to_string();
  Json j{{"density", to_json(d.density)},
         {"mu", mu},
         {"mu_is_probability", d.mu_is_probability},
         {"conditional_mean_one", d.conditional_mean_one},
         {"reconstruction_ok", d.reconstruction_ok},
         {"cases", d.cases}};
  if (d.mismatch_witness) j["mismatch_witness"] = to_json(*d.mismatch_witness);
  return j;
}

Json to_json(const AdaptedProcess& p, const Filtration& f) {
  Json j = Json::object();
  for (std::size_t t = 0; t < p.values.size(); ++t) j[f.time(t)] = to_json(p.values[t]);
  return j;
}

namespace {

void render(const CheckReport& r, int depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << to_string(r.verdict) << "  " << r.property << " (" << r.cases << " cases)";
  if (!r.reason.empty()) out << ": " << r.reason;
  if (r.alarm) out << " [ALARM]";
  out << "\n";
  for (const auto& n : r.notes) out << std::string(2 * depth + 4, ' ') << "note: " << n << "\n";
  if (r.witness) {
    const Witness& w = *r.witness;
    const std::string pad(2 * depth + 4, ' ');
    for (const auto& [name, v] : w.inputs) out << pad << name << " = " << v.to_string() << "\n";
    out << pad << w.lhs.to_string() << " " << w.relation << " " << w.rhs.to_string() << " fails";
    if (!w.note.empty()) out << " (" << w.note << ")";
    out << "\n";
  }
  for (const auto& c : r.children) render(c, depth + 1, out);
}

}  // namespace

std::string render_text(const CheckReport& r) {
  std::ostringstream out;
  render(r, 0, out);
  return out.str();
}

}  // namespace condind
