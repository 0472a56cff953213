#pragma once

// Reflection walk on scalar triples (q1, q, q2) and the resulting
// characteristic sequences.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "quiddity/cycles.hpp"
#include "quiddity/scalar.hpp"

namespace quiddity {

struct Triple {
  Scalar q1;
  Scalar q;
  Scalar q2;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline Triple swap_labels(const Triple& t) { return {t.q2, t.q, t.q1}; }

/// The Dynkin-diagram representative: the smaller of t and its label swap.
inline Triple diagram_key(const Triple& t) { return std::min(t, swap_labels(t)); }

inline bool is_root_of_unity(const Triple& t) {
  return t.q1.is_root_of_unity() && t.q.is_root_of_unity() && t.q2.is_root_of_unity();
}

/// Least common multiple of the torsion orders of a root-of-unity triple.
inline std::int64_t level(const Triple& t) {
  return std::lcm(std::lcm(t.q1.torsion_den(), t.q.torsion_den()), t.q2.torsion_den());
}

inline std::string to_string(const Triple& t, std::int64_t zeta_order = 0) {
  return "(" + to_string(t.q1, zeta_order) + "," + to_string(t.q, zeta_order) + "," + to_string(t.q2, zeta_order) +
         ")";
}

/// Triple of powers of a primitive n-th root of unity.
inline Triple root_triple(std::int64_t n, std::int64_t a1, std::int64_t a, std::int64_t a2) {
  return {Scalar::root(a1, n), Scalar::root(a, n), Scalar::root(a2, n)};
}

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept {
    std::hash<Scalar> h;
    return (h(t.q1) * 31 + h(t.q)) * 31 + h(t.q2);
  }
};

// ---------------------------------------------------------------------------
// Reflections

struct Reflection {
  Triple image;
  MValue m;

  int c() const { return m.m; }
  bool fixes(const Triple& t) const { return image == t; }
};

/// (q1, q, q2) -> (q1, q1^{-2m} q^{-1}, q1^{m^2} q^m q2) with m = m_value(q1, q).
inline std::optional<Reflection> sigma1(const Triple& t) {
  const auto m = m_value(t.q1, t.q);
  if (!m) return std::nullopt;
  const std::int64_t k = m->m;
  return Reflection{{t.q1, pow(t.q1, -2 * k) * inv(t.q), pow(t.q1, k * k) * pow(t.q, k) * t.q2}, *m};
}

/// (q1, q, q2) -> (q1 q^m q2^{m^2}, q2^{-2m} q^{-1}, q2) with m = m_value(q2, q).
inline std::optional<Reflection> sigma2(const Triple& t) {
  const auto m = m_value(t.q2, t.q);
  if (!m) return std::nullopt;
  const std::int64_t k = m->m;
  return Reflection{{t.q1 * pow(t.q, k) * pow(t.q2, k * k), pow(t.q2, -2 * k) * inv(t.q), t.q2}, *m};
}

inline std::optional<Reflection> reflect(const Triple& t, int which) { return which == 1 ? sigma1(t) : sigma2(t); }

// ---------------------------------------------------------------------------
// Walk

enum class Shape { cycle, chain, broken, unresolved };

inline std::string to_string(Shape s) {
  switch (s) {
    case Shape::cycle:
      return "cycle";
    case Shape::chain:
      return "chain";
    case Shape::broken:
      return "broken";
    case Shape::unresolved:
      return "unresolved";
  }
  return "?";
}

struct WalkState {
  Triple triple;
  int next = 1;  // reflection applied next: 1 or 2

  friend bool operator==(const WalkState&, const WalkState&) = default;
};

inline constexpr int kDefaultMaxSteps = 10000;

struct CharSeqReport {
  Shape shape = Shape::broken;
  Pattern period;                // minimal period, lex-min rotation; empty unless cycle/chain
  std::size_t state_period = 0;  // number of walk steps until the start state recurs
  std::vector<std::size_t> ends; // steps k in [0, state_period) whose reflection fixes the triple
  std::vector<Triple> orbit;     // distinct triples in order of first visit
  std::vector<Triple> path;      // q_0, q_1, ... along the forward walk
  Pattern window;                // c_{-origin}, ..., c_{window.size() - origin - 1}
  std::size_t origin = 0;
  int bound = kDefaultMaxSteps;

  bool periodic() const { return shape == Shape::cycle || shape == Shape::chain; }

  /// c_k for any integer k; valid for periodic reports.
  int c(std::int64_t k) const {
    const auto L = static_cast<std::int64_t>(state_period);
    return window[origin + static_cast<std::size_t>(((k % L) + L) % L)];
  }
};

/// Least period of a cyclic word, rotated to its lex-min form.
inline Pattern minimal_period(std::span<const int> window) {
  const std::size_t n = window.size();
  if (n == 0) return {};
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i) periodic = window[i] == window[(i + p) % n];
    if (periodic) {
      const std::span<const int> head = window.first(p);
      return rotated(head, least_rotation(head));
    }
  }
  return Pattern(window.begin(), window.end());
}

/// Alternates sigma1, sigma2 from `start` (sigma1 first, c_0 = m1) and
/// sigma2, sigma1 backwards (c_{-1} = m2). Ends are walked through, so a chain
/// produces its mirrored bi-infinite sequence.
inline CharSeqReport walk(const Triple& start, int max_steps = kDefaultMaxSteps) {
  if (max_steps < 1) throw Error("walk: max_steps must be >= 1");
  CharSeqReport report;
  report.bound = max_steps;

  std::vector<int> forward;
  std::unordered_set<Triple, TripleHash> seen{start};
  report.orbit.push_back(start);
  WalkState state{start, 1};
  bool closed = false;
  bool broken = false;
  for (int step = 0; step < max_steps; ++step) {
    report.path.push_back(state.triple);
    const auto r = reflect(state.triple, state.next);
    if (!r) {
      broken = true;
      break;
    }
    if (r->fixes(state.triple)) report.ends.push_back(forward.size());
    forward.push_back(r->c());
    state = {r->image, 3 - state.next};
    if (seen.insert(state.triple).second) report.orbit.push_back(state.triple);
    if (state == WalkState{start, 1}) {
      closed = true;
      break;
    }
  }

  if (closed) {
    const std::size_t L = forward.size();
    report.state_period = L;
    report.period = minimal_period(forward);
    report.shape = report.ends.empty() ? Shape::cycle : Shape::chain;
  } else {
    report.shape = broken ? Shape::broken : Shape::unresolved;
    report.ends.clear();
  }

  // Backward: c_{-1}, c_{-2}, ...
  std::vector<int> backward;
  const std::size_t back_steps = closed ? forward.size() : static_cast<std::size_t>(max_steps);
  WalkState back{start, 2};
  for (std::size_t step = 0; step < back_steps; ++step) {
    const auto r = reflect(back.triple, back.next);
    if (!r) {
      report.shape = Shape::broken;
      break;
    }
    backward.push_back(r->c());
    back = {r->image, 3 - back.next};
  }

  if (report.shape == Shape::broken) {
    report.period.clear();
    report.state_period = 0;
    report.ends.clear();
  }
  report.origin = backward.size();
  report.window.assign(backward.rbegin(), backward.rend());
  report.window.insert(report.window.end(), forward.begin(), forward.end());
  return report;
}

// ---------------------------------------------------------------------------
// Reconstruction from windows

struct SolveMatch {
  Triple triple;
  std::int64_t modulus = 0;  // level of the triple
  bool through_end = false;  // an interior window entry is an end step

  friend bool operator==(const SolveMatch&, const SolveMatch&) = default;
  friend auto operator<=>(const SolveMatch&, const SolveMatch&) = default;
};

struct SolveReport {
  Pattern window;
  int bound = 0;
  std::vector<SolveMatch> matches;  // sorted by triple

  bool has_interior() const {
    return std::any_of(matches.begin(), matches.end(), [](const SolveMatch& m) { return !m.through_end; });
  }
  bool has_through_end() const {
    return std::any_of(matches.begin(), matches.end(), [](const SolveMatch& m) { return m.through_end; });
  }
  /// Both readings occur, so the window alone does not fix the triple.
  bool ambiguous() const { return has_interior() && has_through_end(); }
};

/// Every root-of-unity triple whose exponents have exact common denominator n.
template <typename Fn>
void for_each_root_triple(std::int64_t n, Fn&& fn) {
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        if (std::gcd(std::gcd(std::gcd(a, b), c), n) == 1) fn(root_triple(n, a, b, c));
}

/// Exhaustive search over all root-of-unity triples of level <= modulus_bound
/// for t whose characteristic sequence reads `window` starting at c_{-1}, i.e.
/// t sits between the first two window entries.
inline SolveReport solve_triples(std::span<const int> window, int modulus_bound) {
  if (window.size() < 3) throw Error("solve_triples: window needs at least 3 entries");
  SolveReport report;
  report.window.assign(window.begin(), window.end());
  report.bound = modulus_bound;
  for (std::int64_t n = 1; n <= modulus_bound; ++n) {
    for_each_root_triple(n, [&](const Triple& t) {
      const CharSeqReport r = walk(t);
      if (!r.periodic()) return;
      for (std::size_t j = 0; j < window.size(); ++j)
        if (r.c(static_cast<std::int64_t>(j) - 1) != window[j]) return;
      const auto L = static_cast<std::int64_t>(r.state_period);
      bool through_end = false;
      for (std::size_t j = 1; j + 1 < window.size(); ++j) {
        const std::int64_t step = ((static_cast<std::int64_t>(j) - 1) % L + L) % L;
        through_end = through_end || std::find(r.ends.begin(), r.ends.end(), static_cast<std::size_t>(step)) != r.ends.end();
      }
      report.matches.push_back({t, n, through_end});
    });
  }
  std::sort(report.matches.begin(), report.matches.end());
  return report;
}

}  // namespace quiddity
