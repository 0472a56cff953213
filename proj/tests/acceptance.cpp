// Acceptance run: one PASS/FAIL line per criterion. A criterion passes only
// if its checks hold and it finishes within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quiddity/quiddity.hpp"

using namespace quiddity;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

Outcome rewriting_examples() {
  Outcome o;
  o.require(rho(Pattern{3, 1, 2, 2, 1}) == Pattern{1, 4, 1, 3, 1, 3, 1}, "rho(3,1,2,2,1)");
  o.require(rho(Pattern{3, 1, 2, 3, 1, 2}) == Pattern{1, 4, 1, 3, 1, 4, 1, 3, 1}, "rho(3,1,2,3,1,2)");
  const DihedralCycle target{4, 1, 3, 1, 4, 1, 3, 1};
  o.require(delta(DihedralCycle{3, 1, 2, 3, 1, 2}) == target, "delta<3,1,2,3,1,2>");
  o.require(delta(DihedralCycle{4, 1, 2, 2, 2, 1}) == target, "delta<4,1,2,2,2,1>");
  return o;
}

Outcome first_step() {
  Outcome o;
  const CoverPair next = theorem_step(base_cover_pair());
  o.require(next.E == std::set<DihedralCycle>{{0, 0}, {1, 1, 1}, {1, 2, 1, 2}, {1, 2, 2, 1, 3}, {1, 3, 1, 3, 1, 3}},
            "E'");
  o.require(next.F == std::set<Pattern>{{1, 2}, {2, 1}, {1, 3, 1}}, "F'");
  o.detail = "|E'|=" + std::to_string(next.E.size()) + " |F'|=" + std::to_string(next.F.size()) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome cover_checks() {
  Outcome o;
  CycleCatalog catalog(14);
  o.require(tables::cor12_quadruples().size() == 27, "27 quadruples");
  const CoverReport cor12 = verify_cover(cor12_cover_pair(), 14, catalog);
  o.require(cor12.ok(), "27-quadruple pair: " + std::to_string(cor12.violations.size()) + " violations");
  CoverPair shortest{{DihedralCycle{0, 0}}, {}};
  for (const auto& p : tables::short_patterns())
    if (p != Pattern{0, 0}) shortest.F.insert(p);
  const CoverReport sh = verify_cover(shortest, 14, catalog);
  o.require(sh.ok(), "short-pattern pair: " + std::to_string(sh.violations.size()) + " violations");
  o.detail = std::to_string(cor12.checked) + " classes per pair" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome interior_patterns() {
  Outcome o;
  const SubseqReport r = verify_thm_subseqs(12);
  o.require(r.ok(), std::to_string(r.violations.size()) + " violations");
  for (std::size_t k = 0; k < r.pattern_hits.size(); ++k)
    o.require(r.pattern_hits[k] > 0, "pattern " + to_string(tables::interior_patterns()[k]) + " never occurs");
  for (std::size_t k = 0; k < r.exceptional_hits.size(); ++k)
    o.require(r.exceptional_hits[k] > 0, "exception " + to_string(tables::interior_exceptions()[k]) + " never occurs");
  o.detail = std::to_string(r.checked) + " representatives" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome enumeration_counts() {
  Outcome o;
  const std::vector<std::size_t> expected{1, 1, 1, 3, 4, 12, 27, 82, 228, 733};
  CycleCatalog catalog(12);
  std::ostringstream counts;
  for (int n = 3; n <= 12; ++n) {
    const auto classes = oracle::quiddity_classes(n);
    const auto& level = catalog.of_length(n);
    const std::size_t want = expected[static_cast<std::size_t>(n - 3)];
    o.require(classes.size() == want, "oracle count at n=" + std::to_string(n));
    bool same = level.size() == classes.size();
    auto it = classes.begin();
    for (std::size_t i = 0; same && i < level.size(); ++i, ++it) same = level[i].canon() == *it;
    o.require(same, "enumeration differs from oracle at n=" + std::to_string(n));
    counts << (n > 3 ? "," : "") << level.size();
  }
  o.detail = "counts " + counts.str() + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome worked_example() {
  Outcome o;
  const Triple t = root_triple(9, 6, 8, 6);
  const CharSeqReport r = walk(t);
  o.require(r.period == Pattern{2, 2, 5}, "period (2,2,5)");
  const auto s = sigma1(t);
  o.require(s && s->image == root_triple(9, 6, 4, 1) && s->c() == 2, "sigma1 image (ζ^6,ζ^4,ζ) with c=2");
  o.require(r.shape == Shape::cycle, "shape cycle (walk reports " + to_string(r.shape) + ")");
  o.detail = "shape " + to_string(r.shape) + ", period " + to_string(r.period) + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome reflection_properties() {
  Outcome o;
  std::size_t triples = 0, checked = 0, bad_involution = 0, bad_cases = 0;
  for (std::int64_t n = 1; n <= 24; ++n) {
    for_each_root_triple(n, [&](const Triple& t) {
      ++triples;
      for (int which : {1, 2}) {
        const auto r = reflect(t, which);
        if (!r) continue;
        ++checked;
        const auto back = reflect(r->image, which);
        if (!back || back->image != t) ++bad_involution;
      }
      const auto r = sigma1(t);
      if (!r) return;
      const int m = r->c();
      Triple expect;
      if (oracle::power_one(t.q1, t.q, m))
        expect = t;
      else if (oracle::geometric_zero(t.q1, m))
        expect = {t.q1, pow(t.q1, 2) * inv(t.q), t.q1 * pow(t.q, m) * t.q2};
      else
        expect = {};
      if (expect != r->image) ++bad_cases;
    });
  }
  o.require(bad_involution == 0, std::to_string(bad_involution) + " involution failures");
  o.require(bad_cases == 0, std::to_string(bad_cases) + " case-formula mismatches");
  o.detail = std::to_string(triples) + " triples, " + std::to_string(checked) + " reflections" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome classification() {
  Outcome o;
  const ClassificationReport r = classify_mu(24);
  const std::vector<Pattern> periods{{2}, {2}, {2}, {2}, {2}, {1, 4}, {1, 4}, {1, 4}, {2, 3, 1, 3}, {4, 1, 3, 3, 1}, {6, 1, 3, 1}};
  o.require(r.rows.size() == 11, "rows 1-11 checked");
  for (const auto& row : r.rows) {
    o.require(row.found && row.same_orbit, "row " + std::to_string(row.row) + " found in one orbit");
    o.require(row.period_ok, "row " + std::to_string(row.row) + " period");
    o.require(same_period(affine_table()[static_cast<std::size_t>(row.row - 1)].period,
                          periods[static_cast<std::size_t>(row.row - 1)]),
              "row " + std::to_string(row.row) + " table period");
  }
  o.require(r.unmatched_orbits() == 0, std::to_string(r.unmatched_orbits()) + " unmatched orbits");
  o.detail = std::to_string(r.triples) + " triples, " + std::to_string(r.affine.size()) + " affine orbits, " +
             std::to_string(r.unmatched_orbits()) + " unmatched" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome generic_rows() {
  Outcome o;
  const GenericRowsReport r = check_generic_rows(48);
  o.require(r.rows.size() == 3, "three generic rows");
  const std::vector<Pattern> periods{{2}, {2}, {1, 4}};
  for (std::size_t i = 0; i < r.rows.size() && i < 3; ++i) {
    const auto& row = r.rows[i];
    o.require(row.generic.period == periods[i] && row.generic_affine, "row " + std::to_string(row.row) + " generic period");
    o.require(row.mismatches.empty(), "row " + std::to_string(row.row) + " specializations");
  }
  if (r.rows.size() == 3) {
    bool exclusions = true;
    for (const auto& s : r.rows[2].specializations) {
      if (s.order < 3) continue;
      const bool excluded = s.order == 3 || s.order == 4;
      exclusions = exclusions && s.matches != excluded;
    }
    o.require(exclusions, "row 14 fails exactly on orders 3 and 4");
  }
  return o;
}

Outcome affine_pattern_condition() {
  Outcome o;
  const Cor15Report r = verify_cor15_on_classified(24);
  o.require(r.ok(), std::to_string(r.violations.size()) + " classified periods fail the pattern condition");
  o.require(!cor15_check(Pattern{2, 2, 5}), "(2,2,5) fails the pattern condition");
  o.require(!decompose_affine(Pattern{2, 2, 5}).has_value(), "(2,2,5) has no decomposition");
  o.detail = std::to_string(r.checked) + " periods" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rewriting examples", 1.0, rewriting_examples},
      {2, "first cover step", 1.0, first_step},
      {3, "cover pairs up to length 14", 60.0, cover_checks},
      {4, "interior patterns up to length 12", 60.0, interior_patterns},
      {5, "enumeration counts vs triangulation oracle", 30.0, enumeration_counts},
      {6, "mu9 worked example", 1.0, worked_example},
      {7, "reflection involution and case formulas, n <= 24", 60.0, reflection_properties},
      {8, "classification up to level 24", 300.0, classification},
      {9, "generic rows and specializations", 60.0, generic_rows},
      {10, "affine pattern condition and (2,2,5)", 10.0, affine_pattern_condition},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s [%.3fs / limit %.0fs]%s%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_seconds, o.detail.empty() ? "" : " - ", o.detail.c_str(), in_time ? "" : " (time limit exceeded)");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
