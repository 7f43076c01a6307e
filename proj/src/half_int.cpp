#include "uhsl2/half_int.hpp"

#include <charconv>
#include <stdexcept>

namespace uhsl2 {

int HalfInt::to_int() const {
  if (!is_integer())
    throw std::domain_error("half-integer " + str() + " is not integral");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt v) { return os << v.str(); }

namespace {

bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

HalfInt parse_half_int(std::string_view text) {
  const auto fail = [&] {
    return std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long num = 0, den = 0;
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den))
      throw fail();
    if (den == 1) return HalfInt(static_cast<int>(num));
    if (den == 2) return HalfInt::from_twice(static_cast<int>(num));
    throw fail();
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    long w = 0;
    if (whole.empty() || whole == "-" || whole == "+") {
      w = 0;
    } else if (!parse_int(whole, w)) {
      throw fail();
    }
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    int half_units = 0;
    if (frac == "5") {
      half_units = 1;
    } else if (!frac.empty()) {
      throw fail();
    }
    long twice = 2 * (w < 0 ? -w : w) + half_units;
    return HalfInt::from_twice(static_cast<int>(negative ? -twice : twice));
  }
  long n = 0;
  if (!parse_int(text, n)) throw fail();
  return HalfInt(static_cast<int>(n));
}

std::vector<HalfInt> weights(HalfInt j) {
  if (j.twice() < 0) throw std::domain_error("negative spin " + j.str());
  std::vector<HalfInt> out;
  out.reserve(dimension(j));
  for (HalfInt m = j; m >= -j; m -= HalfInt(1)) out.push_back(m);
  return out;
}

std::size_t weight_index(HalfInt j, HalfInt m) {
  if (!valid_weight(j, m))
    throw std::domain_error("weight " + m.str() + " out of range for j = " + j.str());
  return static_cast<std::size_t>((j - m).to_int());
}

bool valid_weight(HalfInt j, HalfInt m) {
  return j.twice() >= 0 && m <= j && m >= -j && (j - m).is_integer();
}

std::vector<HalfInt> spins_up_to(HalfInt max_j) {
  std::vector<HalfInt> out;
  for (int t = 0; t <= max_j.twice(); ++t) out.push_back(HalfInt::from_twice(t));
  return out;
}

bool triangle(HalfInt j1, HalfInt j2, HalfInt j) {
  if (j1.twice() < 0 || j2.twice() < 0 || j.twice() < 0) return false;
  HalfInt lo = j1 > j2 ? j1 - j2 : j2 - j1;
  return j >= lo && j <= j1 + j2 && (j1 + j2 + j).is_integer();
}

}  // namespace uhsl2
