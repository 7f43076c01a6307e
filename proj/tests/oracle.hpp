#pragma once

// Floating-point reference values computed without the library's formulas.

#include <cmath>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

// Spins and weights are passed doubled (2j, 2m) to stay integral.
struct Ket {
  int tj1, tj2;
  std::vector<double> c;  // index (j1 - m1) * (2 j2 + 1) + (j2 - m2)

  double& at(int tm1, int tm2) { return c[((tj1 - tm1) / 2) * (tj2 + 1) + (tj2 - tm2) / 2]; }
  double at(int tm1, int tm2) const { return c[((tj1 - tm1) / 2) * (tj2 + 1) + (tj2 - tm2) / 2]; }
};

inline double lower_coef(int tj, int tm) {  // J- |j m> = √((j+m)(j-m+1)) |j m-1>
  return std::sqrt((tj + tm) / 2.0 * ((tj - tm) / 2.0 + 1.0));
}

inline Ket lower(const Ket& v) {
  Ket out{v.tj1, v.tj2, std::vector<double>(v.c.size(), 0.0)};
  for (int tm1 = -v.tj1; tm1 <= v.tj1; tm1 += 2)
    for (int tm2 = -v.tj2; tm2 <= v.tj2; tm2 += 2) {
      const double a = v.at(tm1, tm2);
      if (a == 0.0) continue;
      if (tm1 > -v.tj1) out.at(tm1 - 2, tm2) += a * lower_coef(v.tj1, tm1);
      if (tm2 > -v.tj2) out.at(tm1, tm2 - 2) += a * lower_coef(v.tj2, tm2);
    }
  return out;
}

inline double dot(const Ket& a, const Ket& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.c.size(); ++i) s += a.c[i] * b.c[i];
  return s;
}

inline void normalize(Ket& v) {
  const double n = std::sqrt(dot(v, v));
  for (double& x : v.c) x /= n;
}

// ⟨j1 m1; j2 m2|j m⟩ from highest-weight vectors (orthogonal to all larger j, phase fixed by
// a positive m1 = j1 component) lowered with J-. Keyed by (2j, 2m, 2m1, 2m2).
inline std::map<std::tuple<int, int, int, int>, double> cgc_table(int tj1, int tj2) {
  std::map<std::tuple<int, int, int, int>, double> out;
  std::map<std::pair<int, int>, Ket> built;  // (2j, 2m)
  for (int tj = tj1 + tj2; tj >= std::abs(tj1 - tj2); tj -= 2) {
    Ket top{tj1, tj2, std::vector<double>((tj1 + 1) * (tj2 + 1), 0.0)};
    // Start from the weight-tj subspace and project out the larger-j vectors of that weight.
    for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
      const int tm2 = tj - tm1;
      if (std::abs(tm2) <= tj2 && (tm2 - tj2) % 2 == 0) top.at(tm1, tm2) = 1.0 + 0.1 * (tm1 + tj1);
    }
    for (int tk = tj1 + tj2; tk > tj; tk -= 2) {
      const Ket& other = built.at({tk, tj});
      const double p = dot(top, other);
      for (std::size_t i = 0; i < top.c.size(); ++i) top.c[i] -= p * other.c[i];
    }
    normalize(top);
    if (top.at(tj1, tj - tj1) < 0)
      for (double& x : top.c) x = -x;
    Ket v = top;
    for (int tm = tj; tm >= -tj; tm -= 2) {
      if (tm < tj) {
        v = lower(v);
        normalize(v);
      }
      built[{tj, tm}] = v;
      for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
        for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) out[{tj, tm, tm1, tm2}] = v.at(tm1, tm2);
    }
  }
  return out;
}

}  // namespace oracle
