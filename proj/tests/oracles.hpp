#pragma once

// Independent reference implementations used by the test suites. None of
// these call into the library beyond its value types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <deque>
#include <numbers>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "quiddity/scalar.hpp"

namespace oracle {

using Seq = std::vector<int>;

/// Lex-min over all 2n rotations and reflections.
inline Seq brute_canonical(const Seq& s) {
  const std::size_t n = s.size();
  Seq best = s;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < n; ++r) {
      Seq cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = dir == 0 ? s[(r + i) % n] : s[(r + n - i) % n];
      best = std::min(best, cand);
    }
  }
  return best;
}

namespace detail {

template <typename Fn>
void triangulate(std::vector<std::pair<int, int>>& pending, Seq& counts, Fn& fn) {
  if (pending.empty()) {
    fn(counts);
    return;
  }
  const auto [i, j] = pending.back();
  pending.pop_back();
  if (j - i < 2) {
    triangulate(pending, counts, fn);
  } else {
    for (int k = i + 1; k < j; ++k) {
      ++counts[i], ++counts[k], ++counts[j];
      pending.push_back({i, k});
      pending.push_back({k, j});
      triangulate(pending, counts, fn);
      pending.pop_back();
      pending.pop_back();
      --counts[i], --counts[k], --counts[j];
    }
  }
  pending.push_back({i, j});
}

}  // namespace detail

/// Calls fn(quiddity) for every labelled triangulation of a convex n-gon
/// (Catalan(n-2) of them), without any deduplication.
template <typename Fn>
void for_each_triangulation(int n, Fn fn) {
  Seq counts(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  detail::triangulate(pending, counts, fn);
}

/// Quiddity classes of length n: all triangulations, then quotient by the
/// dihedral action.
inline std::set<Seq> quiddity_classes(int n) {
  std::set<Seq> out;
  if (n == 2) return {{0, 0}};
  for_each_triangulation(n, [&](const Seq& q) { out.insert(brute_canonical(q)); });
  return out;
}

struct M2 {
  long long a, b, c, d;
  friend bool operator==(const M2&, const M2&) = default;
};

inline M2 mul(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

/// prod_i ((c_i, -1), (1, 0)).
inline M2 eta_product(const Seq& s) {
  M2 m{1, 0, 0, 1};
  for (int c : s) m = mul(m, M2{c, -1, 1, 0});
  return m;
}

/// Linear normal form in one pass: a 1 between every adjacent pair > 1, and
/// a 1 outside a boundary entry > 1; each entry grows by the number of 1s
/// placed next to it.
inline Seq rho_closed(const Seq& s) {
  const std::size_t n = s.size();
  Seq out;
  if (n == 0) return out;
  if (s.front() > 1) out.push_back(1);
  for (std::size_t i = 0; i < n; ++i) {
    int v = s[i];
    if (v > 1) {
      v += (i == 0) + (i + 1 == n);
      if (i > 0 && s[i - 1] > 1) ++v;
      if (i + 1 < n && s[i + 1] > 1) ++v;
    }
    out.push_back(v);
    if (i + 1 < n && s[i] > 1 && s[i + 1] > 1) out.push_back(1);
  }
  if (s.back() > 1) out.push_back(1);
  return out;
}

/// Cyclic normal form in one pass (n >= 2), returned canonical.
inline Seq delta_closed(const Seq& s) {
  const std::size_t n = s.size();
  Seq out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
    int v = s[i];
    if (v > 1) v += (s[prev] > 1) + (s[next] > 1);
    out.push_back(v);
    if (s[i] > 1 && s[next] > 1) out.push_back(1);
  }
  return brute_canonical(out);
}

/// Every normal form reachable by applying the linear rules in any order.
inline std::set<Seq> rho_all_orders(const Seq& start) {
  std::set<Seq> seen{start}, normal;
  std::deque<Seq> queue{start};
  while (!queue.empty()) {
    Seq s = queue.front();
    queue.pop_front();
    std::vector<Seq> next;
    if (!s.empty() && s.front() > 1) {
      Seq t = s;
      ++t.front();
      t.insert(t.begin(), 1);
      next.push_back(t);
    }
    if (!s.empty() && s.back() > 1) {
      Seq t = s;
      ++t.back();
      t.push_back(1);
      next.push_back(t);
    }
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] > 1 && s[i + 1] > 1) {
        Seq t = s;
        ++t[i], ++t[i + 1];
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, 1);
        next.push_back(t);
      }
    }
    if (next.empty()) normal.insert(s);
    for (auto& t : next)
      if (seen.insert(t).second) queue.push_back(std::move(t));
  }
  return normal;
}

/// Every cyclic normal form reachable in any order (classes, canonical).
inline std::set<Seq> delta_all_orders(const Seq& start) {
  std::set<Seq> seen{brute_canonical(start)}, normal;
  std::deque<Seq> queue{start};
  while (!queue.empty()) {
    Seq s = queue.front();
    queue.pop_front();
    const std::size_t n = s.size();
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      if (s[i] > 1 && s[j] > 1) {
        any = true;
        Seq t = s;
        ++t[i], ++t[j];
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, 1);
        if (seen.insert(brute_canonical(t)).second) queue.push_back(std::move(t));
      }
    }
    if (!any) normal.insert(brute_canonical(s));
  }
  return normal;
}

inline std::complex<double> torsion(const quiddity::Scalar& s) {
  const double angle = 2 * std::numbers::pi * static_cast<double>(s.torsion_num()) / static_cast<double>(s.torsion_den());
  return std::polar(1.0, angle);
}

inline bool near_zero(std::complex<double> z) { return std::abs(z) < 1e-9; }

/// 1 + qi + ... + qi^m == 0, evaluated numerically. Non-trivial q-powers give
/// a nonzero Laurent polynomial.
inline bool geometric_zero(const quiddity::Scalar& qi, int m) {
  if (qi.qexp() != 0) return false;
  std::complex<double> sum = 0, power = 1;
  const auto z = torsion(qi);
  for (int j = 0; j <= m; ++j) {
    sum += power;
    power *= z;
  }
  return near_zero(sum);
}

/// qi^m q == 1, torsion numerically and q-power exactly.
inline bool power_one(const quiddity::Scalar& qi, const quiddity::Scalar& q, int m) {
  if (static_cast<std::int64_t>(m) * qi.qexp() + q.qexp() != 0) return false;
  return near_zero(std::pow(torsion(qi), m) * torsion(q) - 1.0);
}

/// Least m in [0, limit] satisfying either condition.
inline std::optional<int> m_scan(const quiddity::Scalar& qi, const quiddity::Scalar& q, int limit) {
  for (int m = 0; m <= limit; ++m)
    if (geometric_zero(qi, m) || power_one(qi, q, m)) return m;
  return std::nullopt;
}

}  // namespace oracle
