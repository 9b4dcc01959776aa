#pragma once

// Exact integer scalars.
//
// `Integer` is the arbitrary precision type used by every public interface.
// `CheckedInt64` is a machine-word integer that throws `Overflow` instead of
// wrapping; the elimination routines run on it first and rerun on `Integer`
// when it throws.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wadefect {

// Expression templates are disabled so that generic code sees plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

struct Overflow : std::exception {
  const char* what() const noexcept override { return "int64 overflow"; }
};

class CheckedInt64 {
 public:
  constexpr CheckedInt64() = default;
  constexpr CheckedInt64(int64_t v) : v_(v) {}  // NOLINT(implicit)
  constexpr CheckedInt64(int v) : v_(v) {}      // NOLINT(implicit)

  constexpr int64_t value() const { return v_; }

  friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
    int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
    int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
    int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (a.v_ == std::numeric_limits<int64_t>::min() && b.v_ == -1) throw Overflow{};
    return a.v_ / b.v_;
  }
  friend CheckedInt64 operator%(CheckedInt64 a, CheckedInt64 b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  CheckedInt64 operator-() const {
    if (v_ == std::numeric_limits<int64_t>::min()) throw Overflow{};
    return -v_;
  }
  CheckedInt64& operator+=(CheckedInt64 o) { return *this = *this + o; }
  CheckedInt64& operator-=(CheckedInt64 o) { return *this = *this - o; }
  CheckedInt64& operator*=(CheckedInt64 o) { return *this = *this * o; }

  friend constexpr auto operator<=>(CheckedInt64, CheckedInt64) = default;
  friend std::ostream& operator<<(std::ostream& os, CheckedInt64 x) { return os << x.v_; }

 private:
  int64_t v_ = 0;
};

namespace scalar {

template <class T>
inline bool is_zero(const T& x) {
  return x == T(0);
}

template <class T>
inline T abs(const T& x) {
  return x < T(0) ? T(-x) : x;
}

/// Quotient rounded toward negative infinity.
template <class T>
inline T floor_div(const T& a, const T& b) {
  T q = a / b;
  T r = a - q * b;
  if (!is_zero(r) && ((r < T(0)) != (b < T(0)))) q = q - T(1);
  return q;
}

/// Representative of a mod m in [0, |m|).
template <class T>
inline T mod(const T& a, const T& m) {
  T r = a % m;
  if (r < T(0)) r = r + abs(m);
  return r;
}

template <class T>
inline T gcd(T a, T b) {
  a = abs(a);
  b = abs(b);
  while (!is_zero(b)) {
    T r = a % b;
    a = b;
    b = r;
  }
  return a;
}

template <class T>
inline T lcm(const T& a, const T& b) {
  if (is_zero(a) || is_zero(b)) return T(0);
  return abs(a / gcd(a, b) * b);
}

template <class To, class From>
To convert(const From& x);

template <>
inline Integer convert<Integer, Integer>(const Integer& x) {
  return x;
}
template <>
inline CheckedInt64 convert<CheckedInt64, CheckedInt64>(const CheckedInt64& x) {
  return x;
}
template <>
inline Integer convert<Integer, CheckedInt64>(const CheckedInt64& x) {
  return Integer(x.value());
}
template <>
inline CheckedInt64 convert<CheckedInt64, Integer>(const Integer& x) {
  static const Integer lo(std::numeric_limits<int64_t>::min());
  static const Integer hi(std::numeric_limits<int64_t>::max());
  if (x < lo || x > hi) throw Overflow{};
  return CheckedInt64(static_cast<int64_t>(x));
}

}  // namespace scalar

/// Converts an Integer known to be small (indices, orders) to int64_t.
inline int64_t to_int64(const Integer& x) {
  return scalar::convert<CheckedInt64>(x).value();
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace wadefect
