#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace ionsim {

//! Exact half-integer quantum number, stored as twice its value.
//! All coupling arithmetic stays in integers; floating point only
//! appears when an energy is evaluated.
class HalfInt {
public:
  constexpr HalfInt() : twice_(0) {}

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int n) { return HalfInt(2 * n); }
  static constexpr HalfInt half() { return HalfInt(1); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return twice_ / 2.0; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  //! j(j+1), exact: twice*(twice+2)/4 may not be integral, so return
  //! the numerator over 4 as a double only at the caller's request.
  constexpr double j_times_j_plus_1() const {
    return twice_ * (twice_ + 2) / 4.0;
  }
  //! 4*j*(j+1) = twice*(twice+2), exact integer.
  constexpr long long j_times_j_plus_1_x4() const {
    return static_cast<long long>(twice_) * (twice_ + 2);
  }
  //! Multiplicity 2j+1.
  constexpr int degeneracy() const { return twice_ + 1; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  //! "3/2", "1", "0", ...
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  explicit constexpr HalfInt(int twice) : twice_(twice) {}
  int twice_;
};

inline HalfInt abs(HalfInt a) {
  return HalfInt::from_twice(a.twice() < 0 ? -a.twice() : a.twice());
}

} // namespace ionsim
