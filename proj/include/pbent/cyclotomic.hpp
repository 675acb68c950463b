#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Z[xi], xi = exp(2*pi*i/p), p prime.
 *
 * An element is stored by its coordinates on the power basis
 * 1, xi, ..., xi^(p-2). Because xi is not a root of any rational polynomial of
 * degree below p-1 this basis is independent, so the representation is
 * canonical and equality is coefficient-wise. Reduction uses
 * 1 + xi + ... + xi^(p-1) = 0, i.e. xi^(p-1) = -(1 + xi + ... + xi^(p-2)).
 *
 * For p = 2 the ring is Z with xi = -1 and a single coefficient.
 *
 * All coefficient arithmetic is checked; overflow raises OverflowError.
 */

#include <array>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "pbent/error.hpp"
#include "pbent/zpspace.hpp"

namespace pbent {

namespace detail {

inline std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow (add)");
  return r;
}
inline std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow (sub)");
  return r;
}
inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow (mul)");
  return r;
}

}  // namespace detail

class CycInt {
 public:
  static constexpr int kMaxCoeffs = kMaxPrime - 1;
  using Coeffs = std::array<std::int64_t, kMaxCoeffs>;
  // Length-p coordinates on 1, xi, ..., xi^(p-1); not unique until reduced.
  using Extended = std::array<std::int64_t, kMaxPrime>;

  /// Zero of Z[xi_p].
  explicit CycInt(int p = 2) : p_(static_cast<std::uint8_t>(p)) { check_prime(p); }

  /// The rational integer m.
  CycInt(int p, std::int64_t m) : CycInt(p) { c_[0] = m; }

  static CycInt from_coeffs(int p, std::span<const std::int64_t> coeffs) {
    CycInt r(p);
    if (coeffs.size() != static_cast<std::size_t>(p - 1)) {
      throw InvalidArgument("CycInt for p=" + std::to_string(p) + " needs " + std::to_string(p - 1) + " coefficients");
    }
    std::copy(coeffs.begin(), coeffs.end(), r.c_.begin());
    return r;
  }

  /// xi^k, any integer k.
  static CycInt from_power(long long k, int p) {
    Extended e{};
    e[static_cast<std::size_t>(reduce_exponent(k, p))] = 1;
    return from_extended(p, e);
  }

  /// sum_k counts[k] * xi^k for k in [0, p).
  static CycInt from_exponent_counts(int p, std::span<const std::int64_t> counts) {
    if (counts.size() != static_cast<std::size_t>(p)) throw InvalidArgument("exponent histogram needs p entries");
    Extended e{};
    std::copy(counts.begin(), counts.end(), e.begin());
    return from_extended(p, e);
  }

  /// Reduce a length-p coordinate vector by subtracting its last entry everywhere.
  static CycInt from_extended(int p, const Extended& e) {
    CycInt r(p);
    const std::int64_t top = e[static_cast<std::size_t>(p - 1)];
    for (int i = 0; i < p - 1; ++i) r.c_[static_cast<std::size_t>(i)] = detail::sub_checked(e[static_cast<std::size_t>(i)], top);
    return r;
  }

  int p() const noexcept { return p_; }
  std::span<const std::int64_t> coeffs() const noexcept { return {c_.data(), static_cast<std::size_t>(p_ - 1)}; }
  std::int64_t coeff(int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const noexcept {
    for (int i = 0; i < p_ - 1; ++i) {
      if (c_[static_cast<std::size_t>(i)] != 0) return false;
    }
    return true;
  }

  /// True iff this is the rational integer m.
  bool equals_int(std::int64_t m) const noexcept {
    if (c_[0] != m) return false;
    for (int i = 1; i < p_ - 1; ++i) {
      if (c_[static_cast<std::size_t>(i)] != 0) return false;
    }
    return true;
  }

  CycInt& operator+=(const CycInt& o) {
    same_ring(o);
    for (int i = 0; i < p_ - 1; ++i) c_[static_cast<std::size_t>(i)] = detail::add_checked(c_[static_cast<std::size_t>(i)], o.c_[static_cast<std::size_t>(i)]);
    return *this;
  }
  CycInt& operator-=(const CycInt& o) {
    same_ring(o);
    for (int i = 0; i < p_ - 1; ++i) c_[static_cast<std::size_t>(i)] = detail::sub_checked(c_[static_cast<std::size_t>(i)], o.c_[static_cast<std::size_t>(i)]);
    return *this;
  }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  CycInt operator-() const { return CycInt(p_) - *this; }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    a.same_ring(b);
    const int p = a.p_;
    Extended acc{};
    for (int i = 0; i < p - 1; ++i) {
      const std::int64_t ai = a.c_[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      for (int j = 0; j < p - 1; ++j) {
        const std::int64_t bj = b.c_[static_cast<std::size_t>(j)];
        if (bj == 0) continue;
        auto& slot = acc[static_cast<std::size_t>((i + j) % p)];
        slot = detail::add_checked(slot, detail::mul_checked(ai, bj));
      }
    }
    return from_extended(p, acc);
  }

  /// Multiply by the rational integer m.
  CycInt scaled(std::int64_t m) const {
    CycInt r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.c_[static_cast<std::size_t>(i)] = detail::mul_checked(c_[static_cast<std::size_t>(i)], m);
    return r;
  }

  /// this * xi^k, computed as a rotation of the extended coordinates.
  CycInt mul_by_power(long long k) const {
    const int s = reduce_exponent(k, p_);
    if (s == 0) return *this;
    Extended e{};
    for (int i = 0; i < p_ - 1; ++i) e[static_cast<std::size_t>((i + s) % p_)] = c_[static_cast<std::size_t>(i)];
    return from_extended(p_, e);
  }

  /// Complex conjugation, the automorphism xi -> xi^(p-1).
  CycInt conj() const {
    Extended e{};
    for (int i = 0; i < p_ - 1; ++i) e[static_cast<std::size_t>((p_ - i) % p_)] = c_[static_cast<std::size_t>(i)];
    return from_extended(p_, e);
  }

  /// a * conj(a) = |a|^2, an element fixed by conj.
  CycInt norm_sq() const { return *this * conj(); }

  /// Exact division of every coefficient by d.
  CycInt exact_div(std::int64_t d) const {
    if (d == 0) throw InvalidArgument("division by zero");
    CycInt r(p_);
    for (int i = 0; i < p_ - 1; ++i) {
      const std::int64_t v = c_[static_cast<std::size_t>(i)];
      if (v % d != 0) throw NotDivisible("coefficient " + std::to_string(v) + " is not divisible by " + std::to_string(d));
      r.c_[static_cast<std::size_t>(i)] = v / d;
    }
    return r;
  }

  /**
   * (m, k) with m > 0 and this = m * xi^k, if such a pair exists.
   *
   * xi^k for k < p-1 is a basis vector; xi^(p-1) is the all-minus-one vector.
   * Negative multiples are not recognized: -1 is not a power of xi for odd p.
   */
  std::optional<std::pair<std::int64_t, int>> as_scaled_root() const {
    const int len = p_ - 1;
    int nonzero = 0;
    int at = -1;
    for (int i = 0; i < len; ++i) {
      if (c_[static_cast<std::size_t>(i)] != 0) {
        ++nonzero;
        at = i;
      }
    }
    if (nonzero == 0) return std::nullopt;
    if (nonzero == 1 && c_[static_cast<std::size_t>(at)] > 0) return std::pair{c_[static_cast<std::size_t>(at)], at};
    if (nonzero == len && c_[0] < 0) {
      for (int i = 1; i < len; ++i) {
        if (c_[static_cast<std::size_t>(i)] != c_[0]) return std::nullopt;
      }
      return std::pair{-c_[0], p_ - 1};
    }
    return std::nullopt;
  }

  /// Numeric embedding via xi = exp(2*pi*i/p). For sanity checks only.
  std::complex<double> to_complex() const {
    std::complex<double> z{0.0, 0.0};
    for (int i = 0; i < p_ - 1; ++i) {
      z += static_cast<double>(c_[static_cast<std::size_t>(i)]) * std::polar(1.0, 2.0 * std::numbers::pi * i / p_);
    }
    return z;
  }

  /// "c0 + c1·x + c2·x^2 + ...", every coefficient printed.
  std::string to_string() const {
    std::string s;
    for (int i = 0; i < p_ - 1; ++i) {
      if (i > 0) s += " + ";
      s += std::to_string(c_[static_cast<std::size_t>(i)]);
      if (i >= 1) s += kTimes;
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  /// Inverse of to_string(); the term count fixes p.
  static CycInt parse(std::string_view text) {
    std::array<std::int64_t, kMaxPrime> vals{};
    int count = 0;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void { throw ParseError(what, 1, pos + 1); };
    while (true) {
      if (count == kMaxCoeffs) fail("too many terms");
      std::size_t start = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start || (pos == start + 1 && text[start] == '-')) fail("expected an integer coefficient");
      try {
        vals[static_cast<std::size_t>(count)] = std::stoll(std::string(text.substr(start, pos - start)));
      } catch (const std::out_of_range&) {
        fail("coefficient out of 64-bit range");
      }
      if (count >= 1) {
        if (text.substr(pos, kTimes.size()) == kTimes) {
          pos += kTimes.size();
        } else if (pos < text.size() && text[pos] == '*') {
          ++pos;
        } else {
          fail("expected '·x'");
        }
        if (pos >= text.size() || text[pos] != 'x') fail("expected 'x'");
        ++pos;
        if (count >= 2) {
          const std::string expo = "^" + std::to_string(count);
          if (text.substr(pos, expo.size()) != expo) fail("expected exponent " + expo);
          pos += expo.size();
        }
      }
      ++count;
      if (pos == text.size()) break;
      if (text.substr(pos, 3) != " + ") fail("expected ' + '");
      pos += 3;
    }
    const int p = count + 1;
    if (!is_prime(p)) throw ParseError(std::to_string(count) + " terms do not match a prime p", 1, 1);
    return from_coeffs(p, std::span<const std::int64_t>(vals.data(), static_cast<std::size_t>(count)));
  }

  friend bool operator==(const CycInt& a, const CycInt& b) noexcept { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  static constexpr std::string_view kTimes = "·";

  static void check_prime(int p) {
    if (!is_prime(p) || p > kMaxPrime) throw InvalidArgument("CycInt requires a prime p <= 13, got " + std::to_string(p));
  }
  static int reduce_exponent(long long k, int p) noexcept {
    long long r = k % p;
    return static_cast<int>(r < 0 ? r + p : r);
  }
  void same_ring(const CycInt& o) const {
    if (o.p_ != p_) throw InvalidArgument("CycInt operands from different rings");
  }

  std::uint8_t p_;
  Coeffs c_{};
};

}  // namespace pbent
