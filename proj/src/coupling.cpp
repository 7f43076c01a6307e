#include "uhsl2/coupling.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace uhsl2 {

namespace {

unsigned long nat(HalfInt v) {
  int n = v.to_int();
  if (n < 0) throw std::logic_error("negative factorial argument " + v.str());
  return static_cast<unsigned long>(n);
}

std::string quad(HalfInt a, HalfInt b, HalfInt c, HalfInt d) {
  return "(" + a.str() + "," + b.str() + "|" + c.str() + "," + d.str() + ")";
}

}  // namespace

Rational binom_ext(long n, long m) {
  if (m < 0) return 0;
  Rational out = 1;
  for (long i = 0; i < m; ++i) out *= Rational(n - i);
  for (long i = 2; i <= m; ++i) out /= Rational(i);
  return out;
}

Rational binom_ext(HalfInt n, HalfInt m) {
  if (!n.is_integer() || !m.is_integer())
    throw std::logic_error("binomial with non-integral argument (" + n.str() + ", " + m.str() + ")");
  return binom_ext(static_cast<long>(n.to_int()), static_cast<long>(m.to_int()));
}

HPoly alpha(HalfInt j1, HalfInt j2, HalfInt k1, HalfInt k2, HalfInt m1, HalfInt m2) {
  if (!valid_weight(j1, k1) || !valid_weight(j1, m1) || !valid_weight(j2, k2) || !valid_weight(j2, m2))
    throw std::domain_error("alpha: index out of range " + quad(k1, k2, m1, m2) + " for j1=" + j1.str() +
                            " j2=" + j2.str());
  const HalfInt one(1);
  const Rational b = binom_ext(m1 + k1, k2 - m2) * binom_ext(m2 + k2, k1 - m1);
  const Rational b_shift = binom_ext(m1 + k1 - one, k2 - one - m2) * binom_ext(m2 + k2 - one, k1 - one - m1);
  const Rational diff = b - b_shift;
  if (diff == 0) return {};

  const int degree = (k1 + k2 - m1 - m2).to_int();
  if (degree < 0) throw std::logic_error("alpha: negative h-degree with nonzero binomials");

  PrimePowers d;
  d.mul_factorial(nat(j1 - m1)).mul_factorial(nat(j1 + k1)).mul_factorial(nat(j2 - m2)).mul_factorial(nat(j2 + k2));
  d.mul_factorial(nat(j1 + m1), -1).mul_factorial(nat(j1 - k1), -1);
  d.mul_factorial(nat(j2 + m2), -1).mul_factorial(nat(j2 - k2), -1);

  Rational coef = diff;
  for (int i = 0; i < degree; ++i) coef /= 2;
  if ((k2 - m2).to_int() % 2 != 0) coef = -coef;
  return HPoly::monomial(d.sqrt() * RadScalar(coef), degree);
}

AlphaTable::AlphaTable(HalfInt j1, HalfInt j2)
    : j1_(j1), j2_(j2), d1_(dimension(j1)), d2_(dimension(j2)) {
  values_.resize(d1_ * d1_ * d2_ * d2_);
  const auto w1 = weights(j1);
  const auto w2 = weights(j2);
  std::size_t idx = 0;
  for (HalfInt k1 : w1)
    for (HalfInt k2 : w2)
      for (HalfInt m1 : w1)
        for (HalfInt m2 : w2) values_[idx++] = alpha(j1, j2, k1, k2, m1, m2);
}

const HPoly& AlphaTable::operator()(HalfInt k1, HalfInt k2, HalfInt m1, HalfInt m2) const {
  const std::size_t i = ((weight_index(j1_, k1) * d2_ + weight_index(j2_, k2)) * d1_ + weight_index(j1_, m1)) * d2_ +
                        weight_index(j2_, m2);
  return values_[i];
}

const AlphaTable& alpha_table(HalfInt j1, HalfInt j2) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<AlphaTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{j1.twice(), j2.twice()}];
  if (!slot) slot = std::make_unique<AlphaTable>(j1, j2);
  return *slot;
}

Index product_index(HalfInt j1, HalfInt j2, HalfInt k1, HalfInt k2) {
  return static_cast<Index>(weight_index(j1, k1) * dimension(j2) + weight_index(j2, k2));
}

PolyVector intermediate_ket(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2) {
  const AlphaTable& a = alpha_table(j1, j2);
  PolyVector v = PolyVector::Zero(static_cast<Index>(dimension(j1) * dimension(j2)));
  for (HalfInt k1 : weights(j1))
    for (HalfInt k2 : weights(j2)) v(product_index(j1, j2, k1, k2)) = a(k1, k2, m1, m2);
  return v;
}

PolyRowVector intermediate_bra(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2) {
  const AlphaTable& a = alpha_table(j1, j2);
  PolyRowVector v = PolyRowVector::Zero(static_cast<Index>(dimension(j1) * dimension(j2)));
  for (HalfInt k1 : weights(j1))
    for (HalfInt k2 : weights(j2)) v(product_index(j1, j2, k1, k2)) = a(-k1, -k2, -m1, -m2);
  return v;
}

RadScalar sl2_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2) {
  const HalfInt m = m1 + m2;
  if (!triangle(j1, j2, j) || !valid_weight(j1, m1) || !valid_weight(j2, m2) || !valid_weight(j, m)) return {};

  PrimePowers norm;
  norm.mul_integer(static_cast<std::uint64_t>(j.twice() + 1));
  norm.mul_factorial(nat(j1 + j2 - j)).mul_factorial(nat(j1 - j2 + j)).mul_factorial(nat(j2 - j1 + j));
  norm.mul_factorial(nat(j1 + j2 + j + HalfInt(1)), -1);
  norm.mul_factorial(nat(j1 + m1)).mul_factorial(nat(j1 - m1));
  norm.mul_factorial(nat(j2 + m2)).mul_factorial(nat(j2 - m2));
  norm.mul_factorial(nat(j + m)).mul_factorial(nat(j - m));

  const int a = (j1 + j2 - j).to_int();
  const int b = (j1 - m1).to_int();
  const int c = (j2 + m2).to_int();
  const int d = (j - j2 + m1).to_int();
  const int e = (j - j1 - m2).to_int();
  Rational sum = 0;
  for (int k = 0; k <= a; ++k) {
    if (b - k < 0 || c - k < 0 || d + k < 0 || e + k < 0) continue;
    Integer den = factorial(static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(a - k)) *
                  factorial(static_cast<unsigned long>(b - k)) * factorial(static_cast<unsigned long>(c - k)) *
                  factorial(static_cast<unsigned long>(d + k)) * factorial(static_cast<unsigned long>(e + k));
    Rational term(1, den);
    term.canonicalize();
    sum += (k % 2 ? -term : term);
  }
  return norm.sqrt() * RadScalar(sum);
}

HPoly uh_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt k1, HalfInt k2, HalfInt m) {
  const AlphaTable& a = alpha_table(j1, j2);
  HPoly out;
  for (HalfInt m1 : weights(j1)) {
    const HalfInt m2 = m - m1;
    if (!valid_weight(j2, m2)) continue;
    const RadScalar c = sl2_cgc(j1, j2, j, m1, m2);
    if (c.is_zero()) continue;
    out += a(k1, k2, m1, m2) * HPoly(c);
  }
  return out;
}

HPoly uh_cgc_bra(HalfInt j1, HalfInt j2, HalfInt j, HalfInt k1, HalfInt k2, HalfInt m) {
  const AlphaTable& a = alpha_table(j1, j2);
  HPoly out;
  for (HalfInt n1 : weights(j1)) {
    const HalfInt n2 = m - n1;
    if (!valid_weight(j2, n2)) continue;
    const RadScalar c = sl2_cgc(j1, j2, j, n1, n2);
    if (c.is_zero()) continue;
    out += a(-k1, -k2, -n1, -n2) * HPoly(c);
  }
  return out;
}

CoupledBasis coupled_basis(HalfInt j1, HalfInt j2) {
  CoupledBasis basis{j1, j2, {}};
  const HalfInt lo = j1 > j2 ? j1 - j2 : j2 - j1;
  const Index dim = static_cast<Index>(dimension(j1) * dimension(j2));
  for (HalfInt j = j1 + j2; j >= lo; j -= HalfInt(1)) {
    CoupledBlock block{j, {}};
    for (HalfInt m : weights(j)) {
      PolyVector v = PolyVector::Zero(dim);
      for (HalfInt m1 : weights(j1)) {
        const HalfInt m2 = m - m1;
        if (!valid_weight(j2, m2)) continue;
        const RadScalar c = sl2_cgc(j1, j2, j, m1, m2);
        if (c.is_zero()) continue;
        v += intermediate_ket(j1, j2, m1, m2) * HPoly(c);
      }
      block.vectors.push_back(std::move(v));
    }
    basis.blocks.push_back(std::move(block));
  }
  return basis;
}

namespace {

// Δ(C) eigenvalue check for every coupled vector; returns the first offending description.
std::optional<std::string> casimir_mismatch(const CoupledBasis& basis, const PolyMatrix& delta_c) {
  for (const auto& block : basis.blocks) {
    const HPoly value(Rational(block.j.twice() * (block.j.twice() + 2), 4));
    for (std::size_t i = 0; i < block.vectors.size(); ++i) {
      const PolyVector& v = block.vectors[i];
      PolyVector r = delta_c * v - v * value;
      if (auto entry = first_nonzero(r))
        return "j=" + block.j.str() + " m=" + (block.j - HalfInt(static_cast<int>(i))).str() + ": " + *entry;
    }
  }
  return std::nullopt;
}

PolyMatrix delta_casimir(HalfInt j1, HalfInt j2) {
  return casimir(coproduct(irrep(j1).rep, irrep(j2).rep));
}

}  // namespace

std::vector<std::pair<HalfInt, int>> decompose(HalfInt j1, HalfInt j2) {
  const CoupledBasis basis = coupled_basis(j1, j2);
  if (auto bad = casimir_mismatch(basis, delta_casimir(j1, j2)))
    throw std::runtime_error("Δ(C) eigenvalue mismatch in " + j1.str() + " ⊗ " + j2.str() + ": " + *bad);
  std::map<HalfInt, std::size_t, std::greater<>> counts;
  std::size_t total = 0;
  for (const auto& block : basis.blocks) {
    counts[block.j] += block.vectors.size();
    total += block.vectors.size();
  }
  if (total != dimension(j1) * dimension(j2)) throw std::runtime_error("decompose: dimension count mismatch");
  std::vector<std::pair<HalfInt, int>> out;
  for (const auto& [j, n] : counts) {
    if (n % dimension(j) != 0) throw std::runtime_error("decompose: partial multiplet at j=" + j.str());
    out.emplace_back(j, static_cast<int>(n / dimension(j)));
  }
  return out;
}

RadScalar raising_factor(HalfInt j, HalfInt m) {
  return RadScalar::sqrt(Rational((j.twice() - m.twice()) * (j.twice() + m.twice() + 2), 4));
}

RadScalar lowering_factor(HalfInt j, HalfInt m) {
  return RadScalar::sqrt(Rational((j.twice() + m.twice()) * (j.twice() - m.twice() + 2), 4));
}

VerificationReport verify_alpha_orthogonality(HalfInt j1, HalfInt j2) {
  VerificationReport report;
  report.suite = "alpha orthogonality j1=" + j1.str() + " j2=" + j2.str();
  const AlphaTable& a = alpha_table(j1, j2);
  std::size_t count = 0;
  std::optional<std::string> bad;
  for (HalfInt m1 : weights(j1))
    for (HalfInt m2 : weights(j2))
      for (HalfInt n1 : weights(j1))
        for (HalfInt n2 : weights(j2)) {
          HPoly sum;
          for (HalfInt k1 : weights(j1))
            for (HalfInt k2 : weights(j2)) sum += a(k1, k2, m1, m2) * a(-k1, -k2, -n1, -n2);
          const HPoly expected = (m1 == n1 && m2 == n2) ? HPoly(1) : HPoly();
          ++count;
          if (!(sum == expected) && !bad) bad = "quadruple " + quad(m1, m2, n1, n2) + " gives " + sum.str();
        }
  report.expect_zero(std::to_string(count) + " quadruples", bad);
  return report;
}

VerificationReport verify_intermediate_orthonormality(HalfInt j1, HalfInt j2) {
  VerificationReport report;
  report.suite = "intermediate orthonormality j1=" + j1.str() + " j2=" + j2.str();
  std::size_t count = 0;
  std::optional<std::string> bad;
  for (HalfInt n1 : weights(j1))
    for (HalfInt n2 : weights(j2)) {
      const PolyRowVector bra = intermediate_bra(j1, j2, n1, n2);
      for (HalfInt m1 : weights(j1))
        for (HalfInt m2 : weights(j2)) {
          const HPoly pairing = bra.dot(intermediate_ket(j1, j2, m1, m2).transpose());
          const HPoly expected = (m1 == n1 && m2 == n2) ? HPoly(1) : HPoly();
          ++count;
          if (!(pairing == expected) && !bad) bad = "pair " + quad(n1, n2, m1, m2) + " gives " + pairing.str();
        }
    }
  report.expect_zero(std::to_string(count) + " pairings", bad);
  return report;
}

VerificationReport verify_intermediate_action(HalfInt j1, HalfInt j2) {
  VerificationReport report;
  report.suite = "intermediate action j1=" + j1.str() + " j2=" + j2.str();
  const Representation delta = coproduct(irrep(j1).rep, irrep(j2).rep);
  const Index dim = delta.dim();

  auto ket = [&](HalfInt m1, HalfInt m2) -> PolyVector {
    if (!valid_weight(j1, m1) || !valid_weight(j2, m2)) return PolyVector::Zero(dim);
    return intermediate_ket(j1, j2, m1, m2);
  };
  auto bra = [&](HalfInt m1, HalfInt m2) -> PolyRowVector {
    if (!valid_weight(j1, m1) || !valid_weight(j2, m2)) return PolyRowVector::Zero(dim);
    return intermediate_bra(j1, j2, m1, m2);
  };
  // Second coefficient as printed in one source, with j1 in place of j2.
  auto variant_factor = [&](HalfInt m2, int sign) {
    const int t = j1.twice() - sign * m2.twice();
    const int u = j2.twice() + sign * m2.twice() + 2;
    const Rational r(t * u, 4);
    return r < 0 ? std::optional<RadScalar>() : std::optional<RadScalar>(RadScalar::sqrt(r));
  };

  const HalfInt one(1);
  std::optional<std::string> bad_h, bad_zp, bad_zm, bad_bra;
  std::optional<std::string> variant_failure;
  for (HalfInt m1 : weights(j1))
    for (HalfInt m2 : weights(j2)) {
      const std::string at = " at (m1,m2)=(" + m1.str() + "," + m2.str() + ")";
      const PolyVector v = ket(m1, m2);
      const HPoly eig(Rational((m1 + m2).twice()));
      if (!bad_h)
        if (auto r = first_nonzero(PolyVector(delta.h * v - v * eig))) bad_h = *r + at;

      const PolyVector zp_expected = ket(m1 + one, m2) * HPoly(raising_factor(j1, m1)) +
                                     ket(m1, m2 + one) * HPoly(raising_factor(j2, m2));
      if (!bad_zp)
        if (auto r = first_nonzero(PolyVector(delta.zp * v - zp_expected))) bad_zp = *r + at;

      const PolyVector zm_expected = ket(m1 - one, m2) * HPoly(lowering_factor(j1, m1)) +
                                     ket(m1, m2 - one) * HPoly(lowering_factor(j2, m2));
      if (!bad_zm)
        if (auto r = first_nonzero(PolyVector(delta.zm * v - zm_expected))) bad_zm = *r + at;

      if (!variant_failure) {
        for (int sign : {1, -1}) {
          auto f = variant_factor(m2, sign);
          const PolyMatrix& z = sign > 0 ? delta.zp : delta.zm;
          const PolyVector first = sign > 0 ? PolyVector(ket(m1 + one, m2) * HPoly(raising_factor(j1, m1)))
                                            : PolyVector(ket(m1 - one, m2) * HPoly(lowering_factor(j1, m1)));
          const PolyVector second = ket(m1, sign > 0 ? m2 + one : m2 - one);
          if (!f) {
            if (!is_zero(second)) variant_failure = "negative radicand" + at;
            continue;
          }
          if (auto r = first_nonzero(PolyVector(z * v - first - second * HPoly(*f))))
            variant_failure = (sign > 0 ? "Z+ " : "Z- ") + *r + at;
        }
      }

      // Bras: <(m1 m2)| Z+ lowers the bra labels, Z- raises them.
      const PolyRowVector w = bra(m1, m2);
      const PolyRowVector bra_zp = bra(m1 - one, m2) * HPoly(lowering_factor(j1, m1)) +
                                   bra(m1, m2 - one) * HPoly(lowering_factor(j2, m2));
      const PolyRowVector bra_zm = bra(m1 + one, m2) * HPoly(raising_factor(j1, m1)) +
                                   bra(m1, m2 + one) * HPoly(raising_factor(j2, m2));
      if (!bad_bra) {
        if (auto r = first_nonzero(PolyRowVector(w * delta.h - w * eig))) bad_bra = "H " + *r + at;
        else if (auto r2 = first_nonzero(PolyRowVector(w * delta.zp - bra_zp))) bad_bra = "Z+ " + *r2 + at;
        else if (auto r3 = first_nonzero(PolyRowVector(w * delta.zm - bra_zm))) bad_bra = "Z- " + *r3 + at;
      }
    }
  report.expect_zero("Δ(H) on kets", bad_h);
  report.expect_zero("Δ(Z+) on kets", bad_zp);
  report.expect_zero("Δ(Z-) on kets", bad_zm);
  report.expect_zero("Δ(H), Δ(Z±) on bras", bad_bra);
  if (variant_failure)
    report.skip("variant with (j1∓m2)(j2±m2+1)", "does not hold: " + *variant_failure);
  else
    report.skip("variant with (j1∓m2)(j2±m2+1)", "also holds for this (j1, j2)");
  return report;
}

VerificationReport verify_coupled_basis(HalfInt j1, HalfInt j2) {
  VerificationReport report;
  report.suite = "coupled basis j1=" + j1.str() + " j2=" + j2.str();
  const CoupledBasis basis = coupled_basis(j1, j2);
  report.expect_zero("Δ(C) = j(j+1) on each block", casimir_mismatch(basis, delta_casimir(j1, j2)));

  std::size_t total = 0;
  bool multiplicity_free = true;
  const HalfInt lo = j1 > j2 ? j1 - j2 : j2 - j1;
  HalfInt expect_j = j1 + j2;
  for (const auto& block : basis.blocks) {
    total += block.vectors.size();
    if (block.vectors.size() != dimension(block.j) || block.j != expect_j) multiplicity_free = false;
    expect_j -= HalfInt(1);
  }
  report.expect("j1+j2 down to |j1-j2|, multiplicity free",
                multiplicity_free && total == dimension(j1) * dimension(j2) && expect_j + HalfInt(1) == lo,
                "block structure differs from the sl(2) rule");

  // Coefficient matrices: columns of kets are coupled vectors, rows of bras are coupled bras.
  const Index dim = static_cast<Index>(dimension(j1) * dimension(j2));
  PolyMatrix kets(dim, dim), bras(dim, dim);
  Index col = 0;
  for (const auto& block : basis.blocks) {
    for (HalfInt m : weights(block.j)) {
      for (HalfInt k1 : weights(j1))
        for (HalfInt k2 : weights(j2)) {
          const Index r = product_index(j1, j2, k1, k2);
          kets(r, col) = uh_cgc(j1, j2, block.j, k1, k2, m);
          bras(col, r) = uh_cgc_bra(j1, j2, block.j, k1, k2, m);
        }
      ++col;
    }
  }
  std::optional<std::string> mismatch;
  col = 0;
  for (const auto& block : basis.blocks)
    for (const auto& v : block.vectors) {
      if (!mismatch)
        if (auto r = first_nonzero(PolyVector(kets.col(col) - v))) mismatch = "column " + std::to_string(col) + " " + *r;
      ++col;
    }
  report.expect_zero("uh_cgc reproduces coupled vectors", mismatch);
  const PolyMatrix one = identity<HPoly>(dim);
  report.expect_zero("bra CGC · ket CGC = 1", first_nonzero(PolyMatrix(bras * kets - one)));
  report.expect_zero("ket CGC · bra CGC = 1", first_nonzero(PolyMatrix(kets * bras - one)));
  return report;
}

VerificationReport verify_cgc_classical_limit(HalfInt j1, HalfInt j2) {
  VerificationReport report;
  report.suite = "CGC classical limit j1=" + j1.str() + " j2=" + j2.str();
  const HalfInt lo = j1 > j2 ? j1 - j2 : j2 - j1;
  std::optional<std::string> bad_limit, bad_orth;
  for (HalfInt j = j1 + j2; j >= lo; j -= HalfInt(1))
    for (HalfInt m : weights(j)) {
      for (HalfInt k1 : weights(j1))
        for (HalfInt k2 : weights(j2)) {
          RadScalar expected = (k1 + k2 == m) ? sl2_cgc(j1, j2, j, k1, k2) : RadScalar();
          if (!(uh_cgc(j1, j2, j, k1, k2, m).eval(0) == expected) && !bad_limit)
            bad_limit = "j=" + j.str() + " m=" + m.str() + " k=" + k1.str() + "," + k2.str();
          if (!(uh_cgc_bra(j1, j2, j, k1, k2, m).eval(0) == expected) && !bad_limit)
            bad_limit = "bra j=" + j.str() + " m=" + m.str() + " k=" + k1.str() + "," + k2.str();
        }
      for (HalfInt jp = j1 + j2; jp >= lo; jp -= HalfInt(1)) {
        if (!valid_weight(jp, m)) continue;
        RadScalar s;
        for (HalfInt m1 : weights(j1))
          if (valid_weight(j2, m - m1)) s += sl2_cgc(j1, j2, j, m1, m - m1) * sl2_cgc(j1, j2, jp, m1, m - m1);
        if (!(s == RadScalar(j == jp ? 1 : 0)) && !bad_orth)
          bad_orth = "j=" + j.str() + " j'=" + jp.str() + " m=" + m.str() + " gives " + s.str();
      }
    }
  report.expect_zero("uh CGC at h=0 equals sl(2) CGC", bad_limit);
  report.expect_zero("sl(2) CGC orthonormality", bad_orth);
  return report;
}

}  // namespace uhsl2
