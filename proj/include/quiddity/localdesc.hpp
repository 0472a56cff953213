#pragma once

// Local descriptions of quiddity cycles: the ear-doubling map psi, the
// rewriting normal forms rho (linear) and delta (cyclic), their preimage
// searches, and the cover step (E, F) -> (E', F').

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "quiddity/cycles.hpp"
#include "quiddity/error.hpp"
#include "quiddity/tables.hpp"

namespace quiddity {

/// (c1, c2, ...) -> (c1+2, 1, c2+2, 1, ...)
inline Pattern psi(std::span<const int> seq) {
  Pattern out;
  out.reserve(2 * seq.size());
  for (int v : seq) {
    out.push_back(v + 2);
    out.push_back(1);
  }
  return out;
}

/// Quiddity cycles of even length in which exactly half the entries are 1.
inline bool in_a_prime(const DihedralCycle& c) {
  const std::size_t n = c.size();
  if (n % 2 != 0) return false;
  const auto ones = static_cast<std::size_t>(std::count(c.canon().begin(), c.canon().end(), 1));
  return ones * 2 == n && is_quiddity(c);
}

inline DihedralCycle psi_bar(const DihedralCycle& c) {
  if (!is_quiddity(c)) throw Error("psi_bar: " + to_string(c) + " is not a quiddity cycle");
  return DihedralCycle(psi(c.canon()));
}

/// Removes all ears at once.
inline DihedralCycle psi_bar_inv(const DihedralCycle& c) {
  if (!in_a_prime(c)) throw Error("psi_bar_inv: " + to_string(c) + " is not in A'");
  Pattern rep = c.canon();
  if (rep[0] == 1) rep = rotated(rep, 1);
  Pattern out;
  for (std::size_t i = 0; i < rep.size(); i += 2) {
    if (rep[i + 1] != 1 || rep[i] < 2) throw Error("psi_bar_inv: " + to_string(c) + " does not alternate");
    out.push_back(rep[i] - 2);
  }
  return DihedralCycle(out);
}

/// (c1, 1, c3, 1, ...) -> (1, c1, 1, c3, 1, ...)
inline Pattern iota(std::span<const int> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const bool ok = (i % 2 == 1) ? seq[i] == 1 : seq[i] > 1;
    if (!ok) throw Error("iota: malformed alternation in " + to_string(Pattern(seq.begin(), seq.end())));
  }
  Pattern out{1};
  out.insert(out.end(), seq.begin(), seq.end());
  return out;
}

// ---------------------------------------------------------------------------
// rho

inline bool is_rho_normal(std::span<const int> s) {
  if (s.empty()) return true;
  if (s.front() > 1 || s.back() > 1) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] > 1 && s[i + 1] > 1) return false;
  return true;
}

/// Normal form under: split an adjacent pair > 1 as (a+1, 1, b+1); prepend 1
/// to a first entry > 1 (incrementing it); append 1 after a last entry > 1.
/// Rules fire leftmost-first with priority prepend, split, append.
inline Pattern rho(std::span<const int> seq) {
  Pattern s(seq.begin(), seq.end());
  for (;;) {
    if (!s.empty() && s.front() > 1) {
      ++s.front();
      s.insert(s.begin(), 1);
      continue;
    }
    bool split = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] > 1 && s[i + 1] > 1) {
        ++s[i];
        ++s[i + 1];
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(i) + 1, 1);
        split = true;
        break;
      }
    }
    if (split) continue;
    if (!s.empty() && s.back() > 1) {
      ++s.back();
      s.push_back(1);
      continue;
    }
    return s;
  }
}

/// All s with rho(s) == target, by exhaustive reverse rewriting.
inline std::vector<Pattern> rho_preimages(std::span<const int> target) {
  const Pattern t(target.begin(), target.end());
  if (!is_rho_normal(t)) throw Error("rho_preimages: " + to_string(t) + " is not a rho normal form");
  std::set<Pattern> seen{t};
  std::deque<Pattern> queue{t};
  auto visit = [&](Pattern p) {
    if (seen.insert(p).second) queue.push_back(std::move(p));
  };
  while (!queue.empty()) {
    const Pattern s = std::move(queue.front());
    queue.pop_front();
    const std::size_t n = s.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (s[i] == 1 && s[i - 1] >= 3 && s[i + 1] >= 3) {
        Pattern p = s;
        --p[i - 1];
        --p[i + 1];
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
        visit(std::move(p));
      }
    }
    if (n >= 2 && s[0] == 1 && s[1] >= 3) {
      Pattern p(s.begin() + 1, s.end());
      --p[0];
      visit(std::move(p));
    }
    if (n >= 2 && s[n - 1] == 1 && s[n - 2] >= 3) {
      Pattern p(s.begin(), s.end() - 1);
      --p.back();
      visit(std::move(p));
    }
  }
  std::vector<Pattern> out;
  for (const auto& s : seen)
    if (rho(s) == t) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// delta

inline bool in_delta_domain(const DihedralCycle& c) {
  return c != DihedralCycle{0, 0} && c != DihedralCycle{1, 1, 1};
}

/// Cyclic normal form: every cyclically adjacent pair with both entries > 1
/// gets a 1 inserted between them and both incremented. Works on the canonical
/// representative, leftmost interior pair first, the wrap pair last.
inline DihedralCycle delta(const DihedralCycle& c) {
  if (!in_delta_domain(c)) throw Error("delta: undefined on " + to_string(c));
  Pattern s = c.canon();
  for (;;) {
    bool split = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] > 1 && s[i + 1] > 1) {
        ++s[i];
        ++s[i + 1];
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(i) + 1, 1);
        split = true;
        break;
      }
    }
    if (split) continue;
    if (s.front() > 1 && s.back() > 1) {
      ++s.front();
      ++s.back();
      s.push_back(1);
      continue;
    }
    return DihedralCycle(s);
  }
}

/// All classes c in the domain of delta with delta(c) == target. Results are
/// not filtered for membership in A.
inline std::vector<DihedralCycle> delta_preimages(const DihedralCycle& target) {
  if (!in_a_prime(target)) throw Error("delta_preimages: " + to_string(target) + " is not in A'");
  std::set<DihedralCycle> seen{target};
  std::deque<DihedralCycle> queue{target};
  while (!queue.empty()) {
    const DihedralCycle c = queue.front();
    queue.pop_front();
    const Pattern& s = c.canon();
    const std::size_t n = s.size();
    if (n < 3) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t prev = (i + n - 1) % n;
      const std::size_t next = (i + 1) % n;
      if (s[i] != 1 || s[prev] < 3 || s[next] < 3) continue;
      Pattern p = s;
      --p[prev];
      --p[next];
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
      DihedralCycle d(p);
      if (seen.insert(d).second) queue.push_back(d);
    }
  }
  std::vector<DihedralCycle> out;
  for (const auto& c : seen)
    if (in_delta_domain(c) && delta(c) == target) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Cover pairs

/// E: exceptional cycles. F: patterns, one of which every other quiddity cycle
/// strictly contains.
struct CoverPair {
  std::set<DihedralCycle> E;
  std::set<Pattern> F;

  friend bool operator==(const CoverPair&, const CoverPair&) = default;
};

inline std::size_t min_pattern_length(const std::set<Pattern>& F) {
  std::size_t m = static_cast<std::size_t>(-1);
  for (const auto& f : F) m = std::min(m, f.size());
  return m;
}

inline CoverPair base_cover_pair() { return {{DihedralCycle{0, 0}, DihedralCycle{1, 1, 1}}, {Pattern{1}}}; }

inline CoverPair cor12_cover_pair() {
  const auto& E = tables::cor12_exceptions();
  const auto& F = tables::cor12_quadruples();
  return {{E.begin(), E.end()}, {F.begin(), F.end()}};
}

/// Checks the structural properties the cover step relies on: both base
/// cycles are exceptional, E consists of quiddity cycles, and every pattern
/// contains a 1. Returns an empty string when satisfied.
inline std::string cover_pair_defect(const CoverPair& pair) {
  if (!pair.E.contains(DihedralCycle{0, 0}) || !pair.E.contains(DihedralCycle{1, 1, 1}))
    return "E must contain <0,0> and <1,1,1>";
  for (const auto& e : pair.E)
    if (!is_quiddity(e)) return "E contains non-quiddity cycle " + to_string(e);
  if (pair.F.empty()) return "F is empty";
  for (const auto& f : pair.F)
    if (std::find(f.begin(), f.end(), 1) == f.end()) return "pattern " + to_string(f) + " contains no 1";
  return {};
}

/// E' = E u delta^-1(psi_bar(E)) restricted to quiddity cycles,
/// F' = rho^-1(iota(psi(F))).
inline CoverPair theorem_step(const CoverPair& pair) {
  if (auto defect = cover_pair_defect(pair); !defect.empty()) throw Error("theorem_step: " + defect);
  CoverPair next;
  next.E = pair.E;
  for (const auto& e : pair.E)
    for (const auto& c : delta_preimages(psi_bar(e)))
      if (is_quiddity(c)) next.E.insert(c);
  for (const auto& f : pair.F)
    for (auto& s : rho_preimages(iota(psi(f)))) next.F.insert(std::move(s));
  if (min_pattern_length(next.F) <= min_pattern_length(pair.F))
    throw std::logic_error("theorem_step: minimal pattern length did not grow");
  return next;
}

// ---------------------------------------------------------------------------
// Brute-force verification

struct CoverReport {
  std::size_t checked = 0;
  std::vector<DihedralCycle> violations;
  int bound = 0;

  bool ok() const { return violations.empty(); }
};

/// Every cycle of length <= max_length must be in E or strictly contain a
/// pattern of F.
inline bool covered(const CoverPair& pair, const DihedralCycle& c) {
  if (pair.E.contains(c)) return true;
  return std::any_of(pair.F.begin(), pair.F.end(),
                     [&](const Pattern& f) { return f.size() < c.size() && contains_cyclic(c, f); });
}

inline CoverReport verify_cover(const CoverPair& pair, int max_length, CycleCatalog& catalog) {
  CoverReport report;
  report.bound = max_length;
  for (int n = 2; n <= max_length; ++n) {
    for (const auto& c : catalog.of_length(n)) {
      ++report.checked;
      if (!covered(pair, c)) report.violations.push_back(c);
    }
  }
  return report;
}

inline CoverReport verify_cover(const CoverPair& pair, int max_length) {
  CycleCatalog catalog(std::max(max_length, 2));
  return verify_cover(pair, max_length, catalog);
}

struct SubseqReport {
  std::size_t checked = 0;  // representatives, not classes
  std::vector<Pattern> violations;
  int bound = 0;
  std::vector<std::size_t> pattern_hits;      // per tables::interior_patterns()
  std::vector<std::size_t> exceptional_hits;  // per tables::interior_exceptions()

  bool ok() const { return violations.empty(); }
};

/// Interior statement: every representative is exceptional, or its interior
/// (first and last entry dropped), read in either direction, contains one of
/// the nine interior patterns.
inline SubseqReport verify_thm_subseqs(int max_length, CycleCatalog& catalog) {
  const auto& patterns = tables::interior_patterns();
  const auto& exceptional = tables::interior_exceptions();
  SubseqReport report;
  report.bound = max_length;
  report.pattern_hits.assign(patterns.size(), 0);
  report.exceptional_hits.assign(exceptional.size(), 0);
  for (int n = 2; n <= max_length; ++n) {
    for (const auto& c : catalog.of_length(n)) {
      for (const auto& rep : representatives(c)) {
        ++report.checked;
        bool pass = false;
        for (std::size_t k = 0; k < exceptional.size(); ++k) {
          if (rep == exceptional[k]) {
            ++report.exceptional_hits[k];
            pass = true;
          }
        }
        if (rep.size() > 2) {
          const Pattern interior(rep.begin() + 1, rep.end() - 1);
          const Pattern interior_rev = reversed(interior);
          for (std::size_t k = 0; k < patterns.size(); ++k) {
            if (contains_linear(interior, patterns[k]) || contains_linear(interior_rev, patterns[k])) {
              ++report.pattern_hits[k];
              pass = true;
            }
          }
        }
        if (!pass) report.violations.push_back(rep);
      }
    }
  }
  return report;
}

inline SubseqReport verify_thm_subseqs(int max_length) {
  CycleCatalog catalog(std::max(max_length, 2));
  return verify_thm_subseqs(max_length, catalog);
}

}  // namespace quiddity
