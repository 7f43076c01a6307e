#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace uhsl2 {

/// A half-integer stored as twice its value, so j = 3/2 is HalfInt::from_twice(3).
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int n) : twice_(2 * n) {}  // NOLINT: integers are half-integers

  static constexpr HalfInt from_twice(int twice) {
    HalfInt r;
    r.twice_ = twice;
    return r;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Value as an int; throws std::domain_error if the value is not integral.
  int to_int() const;
  double to_double() const { return twice_ / 2.0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "-1/2", "1".
  std::string str() const;

 private:
  int twice_ = 0;
};

inline constexpr HalfInt half = HalfInt::from_twice(1);

std::ostream& operator<<(std::ostream& os, HalfInt v);

/// Accepts "3/2", "1.5", "1", "-1/2", "-0.5". Throws std::invalid_argument otherwise.
HalfInt parse_half_int(std::string_view text);

/// Weights of the spin-j multiplet in basis order: j, j-1, ..., -j.
std::vector<HalfInt> weights(HalfInt j);

/// Position of weight m in the ordering returned by weights(j).
std::size_t weight_index(HalfInt j, HalfInt m);

/// True when |m| <= j and j - m is integral.
bool valid_weight(HalfInt j, HalfInt m);

/// Spin values 0, 1/2, 1, ..., max_j.
std::vector<HalfInt> spins_up_to(HalfInt max_j);

/// |j1 - j2| <= j <= j1 + j2 with j1 + j2 + j integral.
bool triangle(HalfInt j1, HalfInt j2, HalfInt j);

inline std::size_t dimension(HalfInt j) { return static_cast<std::size_t>(j.twice() + 1); }

}  // namespace uhsl2
