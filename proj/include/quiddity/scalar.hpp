#pragma once

// Exact scalars of the form  zeta * q^e  where zeta is a root of unity
// (a rational exponent k/n taken mod 1) and q is a single parameter of
// infinite multiplicative order. The group is (Q/Z) x Z.

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include "quiddity/error.hpp"

namespace quiddity {

namespace detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Inverse of a modulo n, requires gcd(a, n) == 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t old_r = floor_mod(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error("mod_inverse: not invertible");
  return floor_mod(old_s, n);
}

}  // namespace detail

class Scalar {
 public:
  constexpr Scalar() = default;

  /// e^{2 pi i k / n} * q^qexp
  Scalar(std::int64_t k, std::int64_t n, std::int64_t qexp = 0) : qexp_(qexp) {
    if (n <= 0) throw Error("Scalar: root-of-unity denominator must be positive");
    k = detail::floor_mod(k, n);
    const std::int64_t g = std::gcd(k, n);
    num_ = k / g;
    den_ = n / g;
  }

  static Scalar root(std::int64_t k, std::int64_t n) { return {k, n, 0}; }
  static Scalar generic(std::int64_t qexp) { return {0, 1, qexp}; }
  static Scalar minus_one() { return {1, 2, 0}; }

  std::int64_t torsion_num() const noexcept { return num_; }
  std::int64_t torsion_den() const noexcept { return den_; }
  std::int64_t qexp() const noexcept { return qexp_; }
  bool is_root_of_unity() const noexcept { return qexp_ == 0; }
  bool is_one() const noexcept { return num_ == 0 && qexp_ == 0; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l, a.qexp_ + b.qexp_};
  }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend auto operator<=>(const Scalar&, const Scalar&) = default;

 private:
  // member order drives the defaulted ordering: torsion first, then q-power
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::int64_t qexp_ = 0;
};

inline Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar inv(const Scalar& a) { return {-a.torsion_num(), a.torsion_den(), -a.qexp()}; }
inline Scalar pow(const Scalar& a, std::int64_t k) {
  const std::int64_t n = a.torsion_den();
  return {detail::floor_mod(a.torsion_num() * detail::floor_mod(k, n), n), n, a.qexp() * k};
}
inline bool is_one(const Scalar& a) { return a.is_one(); }

/// Multiplicative order; absent for non-trivial q-powers.
inline std::optional<std::int64_t> order(const Scalar& a) {
  if (!a.is_root_of_unity()) return std::nullopt;
  return a.torsion_den();
}

// ---------------------------------------------------------------------------
// m-values

enum class MBranch {
  geometric_sum,  // 1 + qi + ... + qi^m = 0
  power_match,    // qi^m q = 1
};

struct MValue {
  int m = 0;
  MBranch branch = MBranch::geometric_sum;

  friend bool operator==(const MValue&, const MValue&) = default;
};

/// Least m >= 0 with 1 + qi + ... + qi^m = 0 (only for roots of unity != 1,
/// first at m = ord(qi) - 1) or with qi^m q = 1. Absent when neither holds
/// for any m.
inline std::optional<MValue> m_value(const Scalar& qi, const Scalar& q) {
  std::optional<std::int64_t> geometric;
  if (qi.is_root_of_unity() && qi.torsion_den() > 1) geometric = qi.torsion_den() - 1;

  std::optional<std::int64_t> power;
  if (qi.qexp() != 0) {
    if (q.qexp() % qi.qexp() == 0) {
      const std::int64_t m = -q.qexp() / qi.qexp();
      if (m >= 0 && is_one(pow(qi, m) * q)) power = m;
    }
  } else if (q.qexp() == 0) {
    // Need qi^m = q^-1 inside the cyclic group of order ni generated by qi.
    const std::int64_t ni = qi.torsion_den();
    const std::int64_t n = q.torsion_den();
    if (ni % n == 0) {
      const std::int64_t target = detail::floor_mod(-q.torsion_num(), n) * (ni / n);
      power = ni == 1 ? 0 : detail::floor_mod(target * detail::mod_inverse(qi.torsion_num(), ni), ni);
    }
  }

  if (geometric && (!power || *geometric <= *power)) return MValue{static_cast<int>(*geometric), MBranch::geometric_sum};
  if (power) return MValue{static_cast<int>(*power), MBranch::power_match};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text

/// Renders zeta- and q-powers. With zeta_order > 0 and a root of unity whose
/// order divides it, the result is written as a power of a fixed primitive
/// zeta_order-th root "ζ".
inline std::string to_string(const Scalar& s, std::int64_t zeta_order = 0) {
  std::string torsion;
  const std::int64_t k = s.torsion_num();
  const std::int64_t n = s.torsion_den();
  if (k == 0) {
    torsion = "";
  } else if (n == 2) {
    torsion = "-";
  } else if (zeta_order > 0 && zeta_order % n == 0) {
    const std::int64_t e = k * (zeta_order / n);
    torsion = e == 1 ? "ζ" : "ζ^" + std::to_string(e);
  } else {
    torsion = "e(" + std::to_string(k) + "/" + std::to_string(n) + ")";
  }
  if (s.qexp() == 0) {
    if (torsion.empty()) return "1";
    return torsion == "-" ? "-1" : torsion;
  }
  std::string qpart = s.qexp() == 1 ? "q" : "q^" + std::to_string(s.qexp());
  if (torsion.empty() || torsion == "-") return torsion + qpart;
  return torsion + "·" + qpart;
}

/// Parses "1", "-1", "q", "-q^3", "q^-2", and (when zeta_order > 0) "z^k" or
/// "ζ^k" meaning the k-th power of a primitive zeta_order-th root.
inline Scalar parse_scalar(std::string text, std::int64_t zeta_order = 0) {
  const std::string original = text;
  auto fail = [&]() -> Scalar { throw Error("cannot parse scalar '" + original + "'"); };
  Scalar sign;
  if (!text.empty() && text[0] == '-') {
    sign = Scalar::minus_one();
    text.erase(0, 1);
  }
  auto exponent_after = [&](std::size_t prefix) -> std::int64_t {
    if (text.size() == prefix) return 1;
    if (text[prefix] != '^' || text.size() == prefix + 1) fail();
    std::size_t used = 0;
    const std::string digits = text.substr(prefix + 1);
    std::int64_t e = 0;
    try {
      e = std::stoll(digits, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != digits.size()) fail();
    return e;
  };
  if (text == "1") return sign;
  if (!text.empty() && text[0] == 'q') return sign * Scalar::generic(exponent_after(1));
  const std::string zeta_utf8 = "ζ";
  std::size_t zlen = 0;
  if (!text.empty() && text[0] == 'z') zlen = 1;
  if (text.rfind(zeta_utf8, 0) == 0) zlen = zeta_utf8.size();
  if (zlen > 0) {
    if (zeta_order <= 0) throw Error("scalar '" + original + "' needs --zeta");
    return sign * Scalar::root(exponent_after(zlen), zeta_order);
  }
  return fail();
}

}  // namespace quiddity

template <>
struct std::hash<quiddity::Scalar> {
  std::size_t operator()(const quiddity::Scalar& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.torsion_num());
    h = h * 1000003u ^ static_cast<std::size_t>(s.torsion_den());
    h = h * 1000003u ^ static_cast<std::size_t>(s.qexp());
    return h;
  }
};
