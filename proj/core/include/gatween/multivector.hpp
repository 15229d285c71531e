// SPDX-FileCopyrightText: Copyright (c) 2026 The gatween Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>

namespace gatween {

// Dense multivector over a small real Clifford algebra, parameterized
// by a traits type that fixes the basis-vector count, the per-vector
// metric squares, and the coefficient ordering.
//
// Basis blades are bitmasks: bit i set means basis vector i is a
// factor, and factors are written in ascending vector order (e012 ==
// e0 e1 e2). Products are table driven; the tables are built at
// compile time from the reordering-swap parity and the metric.
//
// Two algebras are instantiated:
//   MultivectorPGA: e0^2 = 0, e1^2 = e2^2 = e3^2 = +1  (16 coeffs)
//   MultivectorCGA: e1..e4^2 = +1, e5^2 = -1           (32 coeffs)
//
// PGA coefficient order:
//   [1, e0, e1, e2, e3, e01, e02, e03, e12, e13, e23,
//    e012, e013, e023, e123, e0123]
// CGA coefficient order: grades 0..5, lexicographic inside a grade.

struct PgaTraits {
  static constexpr std::size_t kVectors = 4;  // e0 e1 e2 e3
  static constexpr std::size_t kSize = 16;
  static constexpr std::array<int, kVectors> kMetric = {0, 1, 1, 1};
  static constexpr std::array<std::uint8_t, kSize> kMask = {
      0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0101, 0b1001,
      0b0110, 0b1010, 0b1100, 0b0111, 0b1011, 0b1101, 0b1110, 0b1111};
  static constexpr std::array<const char*, kSize> kName = {
      "1",    "e0",   "e1",   "e2",   "e3",   "e01",  "e02",  "e03",
      "e12",  "e13",  "e23",  "e012", "e013", "e023", "e123", "e0123"};
};

struct CgaTraits {
  static constexpr std::size_t kVectors = 5;  // e1 e2 e3 e4 e5
  static constexpr std::size_t kSize = 32;
  static constexpr std::array<int, kVectors> kMetric = {1, 1, 1, 1, -1};
  static constexpr std::array<std::uint8_t, kSize> kMask = {
      0,                                               // 1
      1,  2,  4,  8,  16,                              // e1 e2 e3 e4 e5
      3,  5,  9,  17, 6,  10, 18, 12, 20, 24,          // e12 .. e45
      7,  11, 19, 13, 21, 25, 14, 22, 26, 28,          // e123 .. e345
      15, 23, 27, 29, 30,                              // e1234 .. e2345
      31};                                             // e12345
  static constexpr std::array<const char*, kSize> kName = {
      "1",     "e1",    "e2",    "e3",    "e4",    "e5",    "e12",   "e13",
      "e14",   "e15",   "e23",   "e24",   "e25",   "e34",   "e35",   "e45",
      "e123",  "e124",  "e125",  "e134",  "e135",  "e145",  "e234",  "e235",
      "e245",  "e345",  "e1234", "e1235", "e1245", "e1345", "e2345", "e12345"};
};

namespace detail {

// Parity of the swaps needed to merge two ascending factor lists:
// each vector of `a` above the lowest hops over every lower-indexed
// vector of `b`.
constexpr int reorder_sign(unsigned a, unsigned b) {
  a >>= 1;
  int swaps = 0;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

struct CayleyCell {
  std::int8_t sign;
  std::uint8_t idx;
};

template <typename Traits>
constexpr auto make_cayley() {
  std::array<std::uint8_t, (1u << Traits::kVectors)> index_of{};
  for (std::size_t i = 0; i < Traits::kSize; ++i) index_of[Traits::kMask[i]] = static_cast<std::uint8_t>(i);

  std::array<std::array<CayleyCell, Traits::kSize>, Traits::kSize> t{};
  for (std::size_t i = 0; i < Traits::kSize; ++i) {
    for (std::size_t j = 0; j < Traits::kSize; ++j) {
      const unsigned a = Traits::kMask[i];
      const unsigned b = Traits::kMask[j];
      int sign = reorder_sign(a, b);
      for (unsigned common = a & b; common != 0; common &= common - 1) {
        sign *= Traits::kMetric[std::countr_zero(common)];
      }
      t[i][j] = {static_cast<std::int8_t>(sign), index_of[a ^ b]};
    }
  }
  return t;
}

template <typename Traits>
constexpr auto make_grades() {
  std::array<std::uint8_t, Traits::kSize> g{};
  for (std::size_t i = 0; i < Traits::kSize; ++i) g[i] = static_cast<std::uint8_t>(std::popcount(unsigned{Traits::kMask[i]}));
  return g;
}

template <typename Traits>
inline constexpr auto kCayley = make_cayley<Traits>();

template <typename Traits>
inline constexpr auto kGrade = make_grades<Traits>();

}  // namespace detail

template <typename Traits>
struct Multivector {
  using traits = Traits;
  static constexpr std::size_t kSize = Traits::kSize;

  std::array<double, kSize> c{};

  static constexpr Multivector scalar(double s) {
    Multivector m;
    m.c[0] = s;
    return m;
  }

  static constexpr std::size_t grade_of(std::size_t idx) { return detail::kGrade<Traits>[idx]; }

  constexpr Multivector operator+(const Multivector& o) const {
    Multivector out;
    for (std::size_t i = 0; i < kSize; ++i) out.c[i] = c[i] + o.c[i];
    return out;
  }

  constexpr Multivector operator-(const Multivector& o) const {
    Multivector out;
    for (std::size_t i = 0; i < kSize; ++i) out.c[i] = c[i] - o.c[i];
    return out;
  }

  constexpr Multivector operator-() const { return *this * -1.0; }

  constexpr Multivector operator*(double s) const {
    Multivector out;
    for (std::size_t i = 0; i < kSize; ++i) out.c[i] = c[i] * s;
    return out;
  }

  constexpr double scalar_part() const { return c[0]; }

  // Reverse: each grade-k blade picks up (-1)^(k(k-1)/2).
  constexpr Multivector reverse() const {
    Multivector out;
    for (std::size_t i = 0; i < kSize; ++i) {
      const std::size_t k = grade_of(i);
      out.c[i] = (k >> 1) & 1 ? -c[i] : c[i];
    }
    return out;
  }

  constexpr Multivector grade(std::size_t k) const {
    Multivector out;
    for (std::size_t i = 0; i < kSize; ++i) {
      if (grade_of(i) == k) out.c[i] = c[i];
    }
    return out;
  }

  double max_abs_of_odd_grades() const {
    double m = 0.0;
    for (std::size_t i = 0; i < kSize; ++i) {
      if (grade_of(i) & 1) {
        const double a = c[i] < 0.0 ? -c[i] : c[i];
        if (a > m) m = a;
      }
    }
    return m;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kSize; ++i) {
      if (c[i] == 0.0) continue;
      if (!out.empty()) out += " ";
      out += (c[i] < 0.0 ? "-" : "+");
      out += std::to_string(c[i] < 0.0 ? -c[i] : c[i]);
      if (i != 0) {
        out += "*";
        out += Traits::kName[i];
      }
    }
    return out.empty() ? "0" : out;
  }
};

template <typename Traits>
constexpr Multivector<Traits> operator*(double s, const Multivector<Traits>& m) {
  return m * s;
}

// Geometric product.
template <typename Traits>
constexpr Multivector<Traits> gp(const Multivector<Traits>& a, const Multivector<Traits>& b) {
  Multivector<Traits> out;
  for (std::size_t i = 0; i < Traits::kSize; ++i) {
    const double ai = a.c[i];
    if (ai == 0.0) continue;
    const auto& row = detail::kCayley<Traits>[i];
    for (std::size_t j = 0; j < Traits::kSize; ++j) {
      const double bj = b.c[j];
      if (bj == 0.0) continue;
      const auto cell = row[j];
      if (cell.sign != 0) out.c[cell.idx] += static_cast<double>(cell.sign) * ai * bj;
    }
  }
  return out;
}

// Inner product in the Hestenes convention: the grade |r - s| part of
// the blade product, with scalar-grade operands contributing nothing.
template <typename Traits>
constexpr Multivector<Traits> inner_hestenes(const Multivector<Traits>& a, const Multivector<Traits>& b) {
  Multivector<Traits> out;
  for (std::size_t i = 0; i < Traits::kSize; ++i) {
    const double ai = a.c[i];
    const int gi = static_cast<int>(detail::kGrade<Traits>[i]);
    if (ai == 0.0 || gi == 0) continue;
    const auto& row = detail::kCayley<Traits>[i];
    for (std::size_t j = 0; j < Traits::kSize; ++j) {
      const double bj = b.c[j];
      const int gj = static_cast<int>(detail::kGrade<Traits>[j]);
      if (bj == 0.0 || gj == 0) continue;
      const auto cell = row[j];
      if (cell.sign == 0) continue;
      const int want = gi > gj ? gi - gj : gj - gi;
      if (static_cast<int>(detail::kGrade<Traits>[cell.idx]) == want) {
        out.c[cell.idx] += static_cast<double>(cell.sign) * ai * bj;
      }
    }
  }
  return out;
}

using MultivectorPGA = Multivector<PgaTraits>;
using MultivectorCGA = Multivector<CgaTraits>;

// Named coefficient indices, matching the documented orders above.
namespace pga {
inline constexpr std::size_t kScalar = 0, kE0 = 1, kE1 = 2, kE2 = 3, kE3 = 4, kE01 = 5,
                             kE02 = 6, kE03 = 7, kE12 = 8, kE13 = 9, kE23 = 10, kE012 = 11,
                             kE013 = 12, kE023 = 13, kE123 = 14, kE0123 = 15;
}  // namespace pga

namespace cga {
inline constexpr std::size_t kScalar = 0, kE1 = 1, kE2 = 2, kE3 = 3, kE4 = 4, kE5 = 5,
                             kE12 = 6, kE13 = 7, kE14 = 8, kE15 = 9, kE23 = 10, kE24 = 11,
                             kE25 = 12, kE34 = 13, kE35 = 14, kE45 = 15, kE123 = 16,
                             kE124 = 17, kE125 = 18, kE134 = 19, kE135 = 20, kE145 = 21,
                             kE234 = 22, kE235 = 23, kE245 = 24, kE345 = 25, kE1234 = 26,
                             kE1235 = 27, kE1245 = 28, kE1345 = 29, kE2345 = 30, kE12345 = 31;
}  // namespace cga

}  // namespace gatween
