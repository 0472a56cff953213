#pragma once

// Affine characteristic sequences: gluing quiddity-cycle blocks with "+2"
// junctions, the fifteen-pattern necessary condition, and the classification
// of affine rank-two triples.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "quiddity/charseq.hpp"
#include "quiddity/cycles.hpp"
#include "quiddity/tables.hpp"

namespace quiddity {

/// A junction entry splits as left + 2 + right: `left` closes the block
/// before it, `right` opens the block after it.
struct Junction {
  std::size_t position = 0;
  int left = 0;
  int right = 0;

  friend bool operator==(const Junction&, const Junction&) = default;
};

/// Cyclic arrangement of quiddity representatives covering `period_multiple`
/// copies of a period. Block k runs from junctions[k] to junctions[k+1].
struct AffineDecomposition {
  std::vector<Pattern> blocks;
  std::vector<Junction> junctions;
  int period_multiple = 1;
};

/// Reassembles the cyclic word a decomposition describes, starting at the
/// first junction.
inline Pattern reassemble(const AffineDecomposition& d) {
  Pattern out;
  const std::size_t k = d.junctions.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Junction& j = d.junctions[i];
    out.push_back(j.left + 2 + j.right);
    const Pattern& block = d.blocks[i];
    out.insert(out.end(), block.begin() + 1, block.end() - 1);
  }
  return out;
}

namespace detail {

inline bool is_quiddity_block(const Pattern& block) {
  if (block.size() < 2) return false;
  return is_quiddity(DihedralCycle(block));
}

class AffineSearch {
 public:
  AffineSearch(const Pattern& word, std::size_t start, int start_left)
      : word_(word), L_(word.size()), start_(start), start_left_(start_left) {}

  // Extends from the junction at absolute position `pos` whose right part is `right`.
  bool extend(std::size_t pos, int right) {
    if (failed_.contains({pos, right})) return false;
    long interior_sum = 0;
    for (std::size_t next = pos + 1; next <= start_ + L_; ++next) {
      const std::size_t r = next - pos + 1;  // block length
      const bool closing = next == start_ + L_;
      const int v = word_[next % L_];
      // A quiddity cycle of length r >= 3 sums to 3(r - 2), which pins the
      // closing entry; length 2 forces (0,0).
      std::optional<int> left;
      if (r == 2) {
        if (right == 0) left = 0;
      } else if (const long need = 3 * static_cast<long>(r - 2) - interior_sum - right; need >= 0) {
        left = static_cast<int>(need);
      }
      const bool fits = left && (closing ? *left == start_left_ : (v >= 2 && *left <= v - 2));
      if (fits) {
        Pattern block{right};
        for (std::size_t i = pos + 1; i < next; ++i) block.push_back(word_[i % L_]);
        block.push_back(*left);
        if (is_quiddity_block(block)) {
          blocks_.push_back(std::move(block));
          if (closing) return true;
          junctions_.push_back({next % L_, *left, v - 2 - *left});
          if (extend(next, v - 2 - *left)) return true;
          junctions_.pop_back();
          blocks_.pop_back();
        }
      }
      if (closing || v <= 0) break;  // a 0 can only sit inside a (0,0) block
      interior_sum += v;
    }
    failed_.insert({pos, right});
    return false;
  }

  std::vector<Pattern> blocks_;
  std::vector<Junction> junctions_;

 private:
  const Pattern& word_;
  std::size_t L_;
  std::size_t start_;
  int start_left_;
  std::set<std::pair<std::size_t, int>> failed_;
};

}  // namespace detail

inline constexpr int kDefaultMaxMultiple = 3;

/// Searches m = 1..max_multiple copies of the period, arranged cyclically,
/// for junctions whose delimited blocks are quiddity representatives.
inline std::optional<AffineDecomposition> decompose_affine(std::span<const int> period,
                                                           int max_multiple = kDefaultMaxMultiple) {
  if (period.empty()) throw Error("decompose_affine: empty period");
  if (std::any_of(period.begin(), period.end(), [](int v) { return v < 0; }))
    throw Error("decompose_affine: negative entry");
  const std::size_t P = period.size();
  for (int m = 1; m <= max_multiple; ++m) {
    Pattern word;
    for (int i = 0; i < m; ++i) word.insert(word.end(), period.begin(), period.end());
    for (std::size_t p0 = 0; p0 < P; ++p0) {
      const int v = word[p0];
      for (int left = 0; left <= v - 2; ++left) {
        detail::AffineSearch search(word, p0, left);
        search.junctions_.push_back({p0, left, v - 2 - left});
        if (search.extend(p0, v - 2 - left)) {
          AffineDecomposition d;
          d.blocks = std::move(search.blocks_);
          d.junctions = std::move(search.junctions_);
          d.period_multiple = m;
          return d;
        }
      }
    }
  }
  return std::nullopt;
}

/// Necessary condition for affineness: the periodic sequence, read in either
/// direction, contains one of the fifteen affine patterns.
inline bool cor15_check(std::span<const int> period) {
  if (period.empty()) return false;
  const std::size_t P = period.size();
  Pattern word;
  while (word.size() < P + 4) word.insert(word.end(), period.begin(), period.end());
  const Pattern rev = reversed(word);
  for (const auto& p : tables::affine_patterns())
    if (contains_linear(word, p) || contains_linear(rev, p)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// The table of affine triples

struct DynkinRow {
  int row = 0;
  std::int64_t zeta_order = 0;                       // 0: generic parameter q
  std::vector<std::array<std::int64_t, 3>> powers;   // zeta exponents (root-of-unity rows)
  std::vector<Triple> generic;                       // entries in q, sign as torsion (generic rows)
  Pattern period;
  std::string parameter;
  std::vector<std::int64_t> excluded_orders;         // orders of q that are excluded (generic rows)
};

inline const std::vector<DynkinRow>& affine_table() {
  static const std::vector<DynkinRow> rows = [] {
    const Scalar q = Scalar::generic(1);
    const Scalar mq = Scalar::minus_one() * q;
    std::vector<DynkinRow> t{
        {1, 3, {{1, 1, 1}}, {}, {2}, "ζ ∈ μ3", {}},
        {2, 6, {{2, 5, 2}}, {}, {2}, "ζ ∈ μ6", {}},
        {3, 6, {{1, 4, 4}}, {}, {2}, "ζ ∈ μ6", {}},
        {4, 6, {{4, 1, 2}, {2, 3, 2}, {2, 1, 4}}, {}, {2}, "ζ ∈ μ6", {}},
        {5, 12, {{1, 10, 4}}, {}, {2}, "ζ ∈ μ12", {}},
        {6, 5, {{1, 4, 4}}, {}, {1, 4}, "ζ ∈ μ5", {}},
        {7, 8, {{4, 4, 1}}, {}, {1, 4}, "ζ ∈ μ8", {}},
        {8, 10, {{1, 9, 4}}, {}, {1, 4}, "ζ ∈ μ10", {}},
        {9, 12, {{1, 10, 9}, {9, 8, 4}}, {}, {2, 3, 1, 3}, "ζ ∈ μ12", {}},
        {10, 12, {{1, 8, 6}, {6, 4, 3}, {3, 2, 9}, {9, 4, 6}, {6, 8, 7}}, {}, {4, 1, 3, 3, 1}, "ζ ∈ μ12", {}},
        {11, 18, {{1, 12, 9}, {9, 6, 4}}, {}, {6, 1, 3, 1}, "ζ ∈ μ18", {}},
        {12, 0, {}, {{q, pow(q, -2), q}}, {2}, "q ∉ {±1}", {1, 2}},
        {13, 0, {}, {{q, pow(q, -2), mq}}, {2}, "q ∉ {±1}", {1, 2}},
        {14, 0, {}, {{q, pow(q, -4), pow(q, 4)}}, {1, 4}, "q ∉ {±1}, q ∉ μ3, q ∉ μ4", {1, 2, 3, 4}},
    };
    return t;
  }();
  return rows;
}

/// The row's diagrams for the primitive root zeta^u (root-of-unity rows).
inline std::vector<Triple> row_diagrams(const DynkinRow& row, std::int64_t u) {
  std::vector<Triple> out;
  for (const auto& p : row.powers) out.push_back(root_triple(row.zeta_order, u * p[0], u * p[1], u * p[2]));
  return out;
}

/// Substitutes a value for the parameter q.
inline Scalar specialize(const Scalar& s, const Scalar& value) {
  return Scalar::root(s.torsion_num(), s.torsion_den()) * pow(value, s.qexp());
}

inline Triple specialize(const Triple& t, const Scalar& value) {
  return {specialize(t.q1, value), specialize(t.q, value), specialize(t.q2, value)};
}

namespace detail {

inline const std::map<Triple, std::vector<int>>& root_row_index() {
  static const std::map<Triple, std::vector<int>> index = [] {
    std::map<Triple, std::vector<int>> idx;
    for (const auto& row : affine_table()) {
      if (row.zeta_order == 0) continue;
      for (std::int64_t u = 1; u < row.zeta_order; ++u) {
        if (std::gcd(u, row.zeta_order) != 1) continue;
        for (const auto& d : row_diagrams(row, u)) {
          auto& rows = idx[diagram_key(d)];
          if (std::find(rows.begin(), rows.end(), row.row) == rows.end()) rows.push_back(row.row);
        }
      }
    }
    return idx;
  }();
  return index;
}

inline bool generic_row_contains(const DynkinRow& row, const Triple& t) {
  for (const Triple& o : {t, swap_labels(t)}) {
    for (const auto& d : row.generic) {
      // every generic diagram has q1 = q, so q is read off the first label
      const Scalar value = o.q1;
      if (specialize(d, value) != o) continue;
      if (value.is_root_of_unity()) {
        const auto ord = value.torsion_den();
        if (std::find(row.excluded_orders.begin(), row.excluded_orders.end(), ord) != row.excluded_orders.end())
          continue;
      }
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Rows of the table listing t (up to label swap), ascending.
inline std::vector<int> rows_containing(const Triple& t) {
  std::vector<int> rows;
  const auto& idx = detail::root_row_index();
  if (auto it = idx.find(diagram_key(t)); it != idx.end()) rows = it->second;
  for (const auto& row : affine_table())
    if (row.zeta_order == 0 && detail::generic_row_contains(row, t)) rows.push_back(row.row);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

// ---------------------------------------------------------------------------
// Classification over roots of unity

struct ClassifiedOrbit {
  std::vector<Triple> diagrams;  // diagram keys of the orbit, sorted
  std::size_t orbit_size = 0;    // distinct triples visited by the walk
  std::int64_t level = 0;        // lcm of root orders
  Shape shape = Shape::cycle;
  Pattern period;
  std::vector<int> rows;              // table rows listing at least one diagram
  std::vector<Triple> unmatched;      // diagrams listed in no row
  AffineDecomposition decomposition;
};

struct RowCheck {
  int row = 0;
  bool found = false;       // some orbit contains the row's diagrams
  bool period_ok = false;   // with the row's period (up to rotation and reversal)
  bool same_orbit = false;  // all listed diagrams of one zeta lie in one orbit
};

struct ClassificationReport {
  int n_max = 0;
  std::size_t triples = 0;
  std::size_t broken = 0;
  std::size_t orbits = 0;  // non-broken orbits up to label swap
  std::vector<ClassifiedOrbit> affine;
  std::vector<RowCheck> rows;  // rows 1-11 whose zeta order is <= n_max

  std::size_t unmatched_orbits() const {
    return static_cast<std::size_t>(
        std::count_if(affine.begin(), affine.end(), [](const ClassifiedOrbit& o) { return !o.unmatched.empty(); }));
  }
  bool ok() const {
    return unmatched_orbits() == 0 &&
           std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.found && r.period_ok && r.same_orbit; });
  }
};

inline bool same_period(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  if (a.size() < 2) return std::equal(a.begin(), a.end(), b.begin());
  return dihedral_canonical_form(a) == dihedral_canonical_form(b);
}

/// Walks every root-of-unity triple of level <= n_max, keeps the orbits whose
/// period decomposes, and matches them against the table.
inline ClassificationReport classify_mu(int n_max, int max_multiple = kDefaultMaxMultiple) {
  if (n_max < 2) throw Error("classify_mu: n_max must be >= 2");
  ClassificationReport report;
  report.n_max = n_max;
  std::unordered_set<Triple, TripleHash> visited;
  std::map<Triple, std::size_t> orbit_of;  // diagram key -> index into report.affine

  for (std::int64_t n = 1; n <= n_max; ++n) {
    for_each_root_triple(n, [&](const Triple& t) {
      ++report.triples;
      if (visited.contains(t)) return;
      const CharSeqReport walked = walk(t);
      for (const auto& o : walked.orbit) {
        visited.insert(o);
        visited.insert(swap_labels(o));
      }
      if (!walked.periodic()) {
        visited.insert(t);
        ++report.broken;
        return;
      }
      ++report.orbits;
      auto decomposition = decompose_affine(walked.period, max_multiple);
      if (!decomposition) return;
      ClassifiedOrbit orbit;
      std::set<Triple> keys;
      for (const auto& o : walked.orbit) keys.insert(diagram_key(o));
      orbit.diagrams.assign(keys.begin(), keys.end());
      orbit.orbit_size = walked.orbit.size();
      orbit.level = level(t);
      orbit.shape = walked.shape;
      orbit.period = walked.period;
      orbit.decomposition = std::move(*decomposition);
      for (const auto& d : orbit.diagrams) {
        const auto rows = rows_containing(d);
        if (rows.empty()) orbit.unmatched.push_back(d);
        orbit.rows.insert(orbit.rows.end(), rows.begin(), rows.end());
      }
      std::sort(orbit.rows.begin(), orbit.rows.end());
      orbit.rows.erase(std::unique(orbit.rows.begin(), orbit.rows.end()), orbit.rows.end());
      for (const auto& d : orbit.diagrams) orbit_of[d] = report.affine.size();
      report.affine.push_back(std::move(orbit));
    });
  }

  for (const auto& row : affine_table()) {
    if (row.zeta_order == 0 || row.zeta_order > n_max) continue;
    RowCheck check{row.row, true, true, true};
    for (std::int64_t u = 1; u < row.zeta_order; ++u) {
      if (std::gcd(u, row.zeta_order) != 1) continue;
      std::set<std::size_t> hit;
      for (const auto& d : row_diagrams(row, u)) {
        auto it = orbit_of.find(diagram_key(d));
        if (it == orbit_of.end()) {
          check.found = false;
          continue;
        }
        hit.insert(it->second);
        if (!same_period(report.affine[it->second].period, row.period)) check.period_ok = false;
      }
      if (hit.size() > 1) check.same_orbit = false;
    }
    if (!check.found) check.period_ok = check.same_orbit = false;
    report.rows.push_back(check);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generic rows

struct Specialization {
  std::int64_t order = 0;  // order of the root substituted for q
  std::int64_t power = 1;  // q := e^{2 pi i power / order}
  Pattern period;          // empty when broken
  Shape shape = Shape::broken;
  bool affine = false;
  bool matches = false;    // affine with the row's period
  bool excluded = false;   // the parameter column excludes this order
};

struct GenericRowCheck {
  int row = 0;
  Triple diagram;
  CharSeqReport generic;
  bool generic_affine = false;
  bool generic_period_ok = false;
  std::vector<Specialization> specializations;
  std::vector<Specialization> mismatches;  // matches == excluded

  bool ok() const { return generic_affine && generic_period_ok && mismatches.empty(); }
};

struct GenericRowsReport {
  std::int64_t max_order = 0;
  std::vector<GenericRowCheck> rows;

  bool ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const GenericRowCheck& r) { return r.ok(); });
  }
};

/// Walks the generic rows symbolically, then substitutes every primitive k-th
/// root of unity for q, 1 <= k <= max_order, and checks that exactly the
/// excluded orders lose the row's affine period.
inline GenericRowsReport check_generic_rows(std::int64_t max_order = 48) {
  GenericRowsReport report;
  report.max_order = max_order;
  for (const auto& row : affine_table()) {
    if (row.zeta_order != 0) continue;
    for (const auto& diagram : row.generic) {
      GenericRowCheck check;
      check.row = row.row;
      check.diagram = diagram;
      check.generic = walk(diagram);
      check.generic_period_ok = check.generic.periodic() && same_period(check.generic.period, row.period);
      check.generic_affine = check.generic.periodic() && decompose_affine(check.generic.period).has_value();
      for (std::int64_t k = 1; k <= max_order; ++k) {
        for (std::int64_t u = 0; u < k; ++u) {
          if (std::gcd(u, k) != 1) continue;
          Specialization s;
          s.order = k;
          s.power = u;
          const CharSeqReport r = walk(specialize(diagram, Scalar::root(u, k)));
          s.shape = r.shape;
          s.period = r.period;
          s.affine = r.periodic() && decompose_affine(r.period).has_value();
          s.matches = s.affine && same_period(r.period, row.period);
          s.excluded =
              std::find(row.excluded_orders.begin(), row.excluded_orders.end(), k) != row.excluded_orders.end();
          if (s.matches == s.excluded) check.mismatches.push_back(s);
          check.specializations.push_back(std::move(s));
        }
      }
      report.rows.push_back(std::move(check));
    }
  }
  return report;
}

struct Cor15Report {
  std::size_t checked = 0;
  std::vector<Pattern> violations;
  int bound = 0;

  bool ok() const { return violations.empty(); }
};

inline Cor15Report verify_cor15_on_classified(const ClassificationReport& classified) {
  Cor15Report report;
  report.bound = classified.n_max;
  for (const auto& orbit : classified.affine) {
    ++report.checked;
    if (!cor15_check(orbit.period)) report.violations.push_back(orbit.period);
  }
  return report;
}

inline Cor15Report verify_cor15_on_classified(int n_max) { return verify_cor15_on_classified(classify_mu(n_max)); }

}  // namespace quiddity
