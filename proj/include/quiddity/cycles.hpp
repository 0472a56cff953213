#pragma once

// Quiddity cycles: dihedral classes of integer cycles, eta matrices, the
// recursive membership test and exhaustive enumeration by ear insertion.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quiddity/error.hpp"

namespace quiddity {

/// A finite linear sequence of non-negative integers.
using Pattern = std::vector<int>;

struct PatternHash {
  std::size_t operator()(const Pattern& p) const noexcept {
    std::size_t h = p.size();
    for (int v : p) h = h * 1000003u ^ static_cast<std::size_t>(v + 0x9e37);
    return h;
  }
};

inline std::string to_string(const Pattern& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

inline Pattern rotated(std::span<const int> p, std::size_t k) {
  Pattern out(p.size());
  if (p.empty()) return out;
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[(i + k) % p.size()];
  return out;
}

inline Pattern reversed(std::span<const int> p) { return Pattern(p.rbegin(), p.rend()); }

/// Start index of the lexicographically least rotation (Booth's algorithm).
inline std::size_t least_rotation(std::span<const int> s) {
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> fail(static_cast<std::size_t>(2 * n), -1);
  std::ptrdiff_t k = 0;
  auto at = [&](std::ptrdiff_t idx) { return s[static_cast<std::size_t>(idx % n)]; };
  for (std::ptrdiff_t j = 1; j < 2 * n; ++j) {
    const int sj = at(j);
    std::ptrdiff_t i = fail[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j;
      fail[static_cast<std::size_t>(j - k)] = -1;
    } else {
      fail[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return static_cast<std::size_t>(k);
}

/// Lex-min over all rotations of both orientations.
inline Pattern dihedral_canonical_form(std::span<const int> raw) {
  Pattern fwd = rotated(raw, least_rotation(raw));
  const Pattern rev_raw = reversed(raw);
  Pattern rev = rotated(rev_raw, least_rotation(rev_raw));
  return std::min(fwd, rev);
}

/// An equivalence class <c1,...,cn> under rotation and reversal, stored as its
/// lexicographically least representative.
class DihedralCycle {
 public:
  DihedralCycle() : canon_{0, 0} {}

  explicit DihedralCycle(std::span<const int> raw) {
    if (raw.size() < 2) throw Error("dihedral cycle needs length >= 2, got " + std::to_string(raw.size()));
    if (std::any_of(raw.begin(), raw.end(), [](int v) { return v < 0; }))
      throw Error("cycle entries must be non-negative: " + to_string(Pattern(raw.begin(), raw.end())));
    canon_ = dihedral_canonical_form(raw);
  }
  DihedralCycle(std::initializer_list<int> raw) : DihedralCycle(std::span<const int>(raw.begin(), raw.size())) {}

  const Pattern& canon() const noexcept { return canon_; }
  std::size_t size() const noexcept { return canon_.size(); }

  friend bool operator==(const DihedralCycle&, const DihedralCycle&) = default;
  friend auto operator<=>(const DihedralCycle& a, const DihedralCycle& b) { return a.canon_ <=> b.canon_; }

 private:
  Pattern canon_;
};

struct DihedralCycleHash {
  std::size_t operator()(const DihedralCycle& c) const noexcept { return PatternHash{}(c.canon()); }
};

inline std::string to_string(const DihedralCycle& c) {
  std::string s = to_string(c.canon());
  s.front() = '<';
  s.back() = '>';
  return s;
}

inline DihedralCycle canonicalize(std::span<const int> raw) { return DihedralCycle(raw); }

/// Every distinct rotation and reversal of the canonical representative.
inline std::vector<Pattern> representatives(const DihedralCycle& c) {
  std::vector<Pattern> reps;
  const Pattern rev = reversed(c.canon());
  for (std::size_t k = 0; k < c.size(); ++k) {
    reps.push_back(rotated(c.canon(), k));
    reps.push_back(rotated(rev, k));
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

// ---------------------------------------------------------------------------
// 2x2 integer matrices

struct IntMatrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static constexpr IntMatrix2 identity() { return {1, 0, 0, 1}; }
  constexpr std::int64_t det() const { return a * d - b * c; }
  constexpr std::int64_t trace() const { return a + d; }

  friend constexpr IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend constexpr IntMatrix2 operator-(const IntMatrix2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend constexpr bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

using EtaMatrix = IntMatrix2;
using XiMatrix = IntMatrix2;

inline std::string to_string(const IntMatrix2& m) {
  return "((" + std::to_string(m.a) + "," + std::to_string(m.b) + "),(" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "))";
}

/// eta(a) = (a -1; 1 0)
constexpr EtaMatrix eta(std::int64_t a) { return {a, -1, 1, 0}; }

/// xi(a) = eta(a) eta(1)
constexpr XiMatrix xi(std::int64_t a) { return eta(a) * eta(1); }

inline EtaMatrix eta_product(std::span<const int> seq) {
  EtaMatrix m = EtaMatrix::identity();
  for (int v : seq) m = m * eta(v);
  return m;
}

// ---------------------------------------------------------------------------
// Membership

namespace detail {

// Ear reduction on a raw cyclic sequence. Any ear may be cut: cutting is the
// exact inverse of ear insertion, so membership does not depend on the choice.
inline bool ear_reduces_to_base(Pattern c) {
  for (;;) {
    const std::size_t n = c.size();
    if (n < 2) return false;
    if (n == 2) return c[0] == 0 && c[1] == 0;
    if (std::any_of(c.begin(), c.end(), [](int v) { return v <= 0; })) return false;
    auto ear = std::find(c.begin(), c.end(), 1);
    if (ear == c.end()) return false;
    const std::size_t i = static_cast<std::size_t>(ear - c.begin());
    --c[(i + n - 1) % n];
    --c[(i + 1) % n];
    c.erase(ear);
  }
}

inline Pattern insert_ear_unchecked(const Pattern& canon, std::size_t position) {
  const std::size_t n = canon.size();
  const std::size_t i = position % n;
  const std::size_t j = (i + 1) % n;
  Pattern out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(canon[k] + ((k == i || k == j) ? 1 : 0));
    if (k == i) out.push_back(1);
  }
  return out;
}

}  // namespace detail

inline bool is_quiddity(const DihedralCycle& c) { return detail::ear_reduces_to_base(c.canon()); }

/// Inserts an ear between canonical positions `position` and `position + 1`
/// (cyclically), incrementing both neighbours.
inline DihedralCycle ear_insert(const DihedralCycle& c, std::size_t position) {
  if (!is_quiddity(c)) throw Error("ear_insert: " + to_string(c) + " is not a quiddity cycle");
  return DihedralCycle(detail::insert_ear_unchecked(c.canon(), position));
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kDefaultEnumerateBound = 18;

/// Memoized table of quiddity cycles by length. Each level is sorted.
class CycleCatalog {
 public:
  explicit CycleCatalog(int bound = kDefaultEnumerateBound) : bound_(bound) {
    levels_.push_back({DihedralCycle{0, 0}});
  }

  int bound() const noexcept { return bound_; }

  const std::vector<DihedralCycle>& of_length(int n) {
    if (n < 2) throw Error("enumerate: length must be >= 2, got " + std::to_string(n));
    if (n > bound_)
      throw Error("enumerate: length " + std::to_string(n) + " exceeds bound " + std::to_string(bound_));
    while (static_cast<int>(levels_.size()) + 1 < n) extend();
    return levels_[static_cast<std::size_t>(n - 2)];
  }

  /// All cycles of length 2..max_length, shortest first.
  std::vector<DihedralCycle> up_to(int max_length) {
    std::vector<DihedralCycle> all;
    for (int n = 2; n <= max_length; ++n) {
      const auto& level = of_length(n);
      all.insert(all.end(), level.begin(), level.end());
    }
    return all;
  }

 private:
  void extend() {
    const auto& prev = levels_.back();
    std::vector<DihedralCycle> next;
    next.reserve(prev.size() * (prev.front().size() + 1));
    for (const auto& c : prev)
      for (std::size_t pos = 0; pos < c.size(); ++pos)
        next.emplace_back(detail::insert_ear_unchecked(c.canon(), pos));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels_.push_back(std::move(next));
  }

  int bound_;
  std::vector<std::vector<DihedralCycle>> levels_;
};

inline std::vector<DihedralCycle> enumerate(int n, int bound = kDefaultEnumerateBound) {
  CycleCatalog catalog(bound);
  return catalog.of_length(n);
}

// ---------------------------------------------------------------------------
// Containment

/// True iff some rotation or reversal of `c` has `d` as a consecutive block.
inline bool contains_cyclic(const DihedralCycle& c, std::span<const int> d) {
  const std::size_t n = c.size();
  const std::size_t m = d.size();
  if (m > n) return false;
  const Pattern& w = c.canon();
  for (std::size_t start = 0; start < n; ++start) {
    bool fwd = true;
    bool rev = true;
    for (std::size_t i = 0; i < m && (fwd || rev); ++i) {
      fwd = fwd && w[(start + i) % n] == d[i];
      rev = rev && w[(start + n - i) % n] == d[i];
    }
    if (fwd || rev) return true;
  }
  return false;
}

/// Consecutive-subsequence test without wraparound.
inline bool contains_linear(std::span<const int> seq, std::span<const int> d) {
  return std::search(seq.begin(), seq.end(), d.begin(), d.end()) != seq.end();
}

}  // namespace quiddity

template <>
struct std::hash<quiddity::DihedralCycle> : quiddity::DihedralCycleHash {};
