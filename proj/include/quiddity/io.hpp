#pragma once

// JSON serialization (nlohmann/json) and plain-text renderers.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiddity/affine.hpp"
#include "quiddity/charseq.hpp"
#include "quiddity/cycles.hpp"
#include "quiddity/localdesc.hpp"
#include "quiddity/scalar.hpp"

namespace quiddity {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// cycles / localdesc

inline void to_json(json& j, const DihedralCycle& c) { j = c.canon(); }
inline void from_json(const json& j, DihedralCycle& c) { c = DihedralCycle(j.get<Pattern>()); }

inline Pattern pattern_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("pattern must be a non-empty JSON array of integers");
  Pattern p;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw Error("pattern entries must be non-negative integers");
    p.push_back(v.get<int>());
  }
  return p;
}

inline void to_json(json& j, const CoverPair& pair) {
  j = json::object();
  j["E"] = json::array();
  for (const auto& e : pair.E) j["E"].push_back(e.canon());
  j["F"] = json::array();
  for (const auto& f : pair.F) j["F"].push_back(f);
}

inline void from_json(const json& j, CoverPair& pair) {
  if (!j.is_object() || !j.contains("E") || !j.contains("F")) throw Error("cover pair needs fields E and F");
  pair = {};
  for (const auto& e : j.at("E")) pair.E.insert(DihedralCycle(pattern_from_json(e)));
  for (const auto& f : j.at("F")) pair.F.insert(pattern_from_json(f));
}

inline void to_json(json& j, const CoverReport& r) {
  j = json{{"checked", r.checked}, {"violations", json::array()}, {"bound", r.bound}};
  for (const auto& v : r.violations) j["violations"].push_back(v.canon());
}

inline void to_json(json& j, const SubseqReport& r) {
  j = json{{"checked", r.checked}, {"violations", r.violations}, {"bound", r.bound}};
  json hits = json::array();
  for (std::size_t k = 0; k < r.pattern_hits.size(); ++k)
    hits.push_back({{"pattern", tables::interior_patterns()[k]}, {"hits", r.pattern_hits[k]}});
  j["pattern_hits"] = hits;
  json exc = json::array();
  for (std::size_t k = 0; k < r.exceptional_hits.size(); ++k)
    exc.push_back({{"representative", tables::interior_exceptions()[k]}, {"hits", r.exceptional_hits[k]}});
  j["exceptional_hits"] = exc;
}

// ---------------------------------------------------------------------------
// scalars / charseq

inline void to_json(json& j, const Scalar& s) {
  j = json{{"zeta", {s.torsion_num(), s.torsion_den()}}, {"qexp", s.qexp()}};
}

inline void from_json(const json& j, Scalar& s) {
  const auto& z = j.at("zeta");
  if (!z.is_array() || z.size() != 2) throw Error("scalar zeta must be [k, n]");
  s = Scalar(z[0].get<std::int64_t>(), z[1].get<std::int64_t>(), j.value("qexp", std::int64_t{0}));
}

inline void to_json(json& j, const Triple& t) { j = json{{"q1", t.q1}, {"q", t.q}, {"q2", t.q2}}; }
inline void from_json(const json& j, Triple& t) {
  t = {j.at("q1").get<Scalar>(), j.at("q").get<Scalar>(), j.at("q2").get<Scalar>()};
}

inline void to_json(json& j, const CharSeqReport& r) {
  j = json{{"shape", to_string(r.shape)}, {"period", r.period}, {"ends", r.ends},
           {"orbit", r.orbit},            {"window", r.window}, {"origin", r.origin},
           {"state_period", r.state_period}};
}

inline void to_json(json& j, const SolveReport& r) {
  j = json{{"window", r.window}, {"bound", r.bound}, {"ambiguous", r.ambiguous()}, {"matches", json::array()}};
  for (const auto& m : r.matches)
    j["matches"].push_back({{"triple", m.triple}, {"modulus", m.modulus}, {"through_end", m.through_end}});
}

// ---------------------------------------------------------------------------
// affine

inline void to_json(json& j, const AffineDecomposition& d) {
  j = json{{"blocks", d.blocks}, {"junctions", json::array()}, {"period_multiple", d.period_multiple}};
  for (const auto& jn : d.junctions)
    j["junctions"].push_back({{"position", jn.position}, {"left", jn.left}, {"right", jn.right}});
}

inline std::string parameter_text(const ClassifiedOrbit& orbit) {
  std::string out;
  for (int r : orbit.rows) {
    const auto& row = affine_table()[static_cast<std::size_t>(r - 1)];
    std::string p = row.parameter;
    if (row.zeta_order == 0) p = "q := ζ ∈ μ" + std::to_string(orbit.level) + " (" + p + ")";
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

inline void to_json(json& j, const ClassifiedOrbit& o) {
  j = json{{"row_matched", o.rows},   {"diagrams", o.diagrams}, {"parameter", parameter_text(o)},
           {"period", o.period},      {"orbit_size", o.orbit_size}, {"level", o.level},
           {"shape", to_string(o.shape)}};
  if (!o.unmatched.empty()) j["unmatched"] = o.unmatched;
}

/// The classification serializes as the list of affine orbits.
inline void to_json(json& j, const ClassificationReport& r) { j = r.affine; }

inline void to_json(json& j, const GenericRowsReport& r) {
  j = json{{"max_order", r.max_order}, {"rows", json::array()}};
  for (const auto& row : r.rows) {
    json mism = json::array();
    for (const auto& s : row.mismatches)
      mism.push_back({{"order", s.order}, {"power", s.power}, {"period", s.period}, {"shape", to_string(s.shape)}});
    std::vector<std::int64_t> degenerate;
    for (const auto& s : row.specializations)
      if (!s.matches && (degenerate.empty() || degenerate.back() != s.order)) degenerate.push_back(s.order);
    j["rows"].push_back({{"row", row.row},
                         {"diagram", row.diagram},
                         {"period", row.generic.period},
                         {"shape", to_string(row.generic.shape)},
                         {"affine", row.generic_affine},
                         {"period_ok", row.generic_period_ok},
                         {"specializations", row.specializations.size()},
                         {"degenerate_orders", degenerate},
                         {"mismatches", mism}});
  }
}

inline void to_json(json& j, const Cor15Report& r) {
  j = json{{"checked", r.checked}, {"violations", r.violations}, {"bound", r.bound}};
}

// ---------------------------------------------------------------------------
// Text renderers

/// One line per step along a state period: q_k, the m-value, the reflection
/// and whether the step is an end.
inline std::string render_arrows(const CharSeqReport& r, std::int64_t zeta_order = 0) {
  std::ostringstream os;
  const std::size_t steps = r.periodic() ? r.state_period : r.path.size();
  for (std::size_t k = 0; k < steps && k < r.path.size(); ++k) {
    const int sigma = k % 2 == 0 ? 1 : 2;
    const Triple& here = r.path[k];
    const bool end = std::find(r.ends.begin(), r.ends.end(), k) != r.ends.end();
    os << "q" << k << " = " << to_string(here, zeta_order);
    if (k < r.window.size() - r.origin) {
      os << "  <--" << r.window[r.origin + k] << "-- s" << sigma;
      if (end) os << "  [end]";
    }
    os << '\n';
  }
  if (r.periodic()) os << "(returns to q0)\n";
  return os.str();
}

/// Table layout: row | diagrams | parameters | period.
inline std::string render_table(const ClassificationReport& r) {
  std::ostringstream os;
  os << "rows  | diagrams (ζ primitive of the given order) | parameters | period\n";
  for (const auto& o : r.affine) {
    std::string rows;
    for (int row : o.rows) rows += (rows.empty() ? "" : ",") + std::to_string(row);
    if (rows.empty()) rows = "??";
    os << rows << " | ";
    for (std::size_t i = 0; i < o.diagrams.size(); ++i) os << (i ? " " : "") << to_string(o.diagrams[i], o.level);
    os << " | ζ ∈ μ" << o.level << " | " << to_string(o.period) << '\n';
  }
  return os.str();
}

}  // namespace quiddity
