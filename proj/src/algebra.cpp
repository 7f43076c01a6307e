#include "uhsl2/algebra.hpp"

#include <stdexcept>

namespace uhsl2 {

namespace {

// Residual detail that also reports the largest h-degree present.
std::optional<std::string> residual(const PolyMatrix& m) {
  auto entry = first_nonzero(m);
  if (!entry) return std::nullopt;
  return "max degree " + std::to_string(max_degree(m)) + ", " + *entry;
}

Rational binomial_half(int n) {
  // binom(1/2, n)
  Rational out = 1;
  for (int i = 0; i < n; ++i) out *= Rational(1, 2) - i;
  for (int i = 2; i <= n; ++i) out /= i;
  return out;
}

Rational quarter_power(int n) {
  Rational out = 1;
  for (int i = 0; i < n; ++i) out /= 4;
  return out;
}

}  // namespace

std::string to_string(Generator g) {
  switch (g) {
    case Generator::X: return "X";
    case Generator::Y: return "Y";
    case Generator::H: return "H";
    case Generator::Unit: return "unit";
    case Generator::ExpHX: return "expHX";
    case Generator::ExpmHX: return "expmHX";
  }
  return "?";
}

Generator parse_generator(std::string_view name) {
  if (name == "X") return Generator::X;
  if (name == "Y") return Generator::Y;
  if (name == "H") return Generator::H;
  if (name == "unit" || name == "1") return Generator::Unit;
  if (name == "expHX") return Generator::ExpHX;
  if (name == "expmHX") return Generator::ExpmHX;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

Sl2Matrices sl2_irrep(HalfInt j) {
  if (j.twice() < 0) throw std::domain_error("negative spin " + j.str());
  const Index n = static_cast<Index>(dimension(j));
  Sl2Matrices out{zeros<RadScalar>(n, n), zeros<RadScalar>(n, n), zeros<RadScalar>(n, n)};
  const int tj = j.twice();
  for (Index i = 0; i < n; ++i) {
    const int tm = tj - 2 * static_cast<int>(i);
    out.hm(i, i) = RadScalar(tm);
    if (i > 0) out.zp(i - 1, i) = RadScalar::sqrt(Rational((tj - tm) * (tj + tm + 2), 4));
    if (i + 1 < n) out.zm(i + 1, i) = RadScalar::sqrt(Rational((tj + tm) * (tj - tm + 2), 4));
  }
  return out;
}

PolyMatrix Representation::matrix(Generator g) const {
  switch (g) {
    case Generator::X: return x;
    case Generator::Y: return y;
    case Generator::H: return h;
    case Generator::Unit: return identity<HPoly>(dim());
    case Generator::ExpHX: return exp_hx;
    case Generator::ExpmHX: return expm_hx;
  }
  throw std::logic_error("unhandled generator");
}

PolyMatrix arctanh_map(const PolyMatrix& a) {
  // (2/h) arctanh(h a/2) = Σ_n (h/2)^{2n} a^{2n+1} / (2n+1)
  return nilpotent_series(a, [](int k) {
    if (k % 2 == 0) return HPoly();
    return HPoly::monomial(RadScalar(Rational(1, k) * quarter_power((k - 1) / 2)), k - 1);
  });
}

PolyMatrix sqrt_one_minus_square(const PolyMatrix& a) {
  // Σ_n binom(1/2, n) (-1)^n (h/2)^{2n} a^{2n}
  return nilpotent_series(a, [](int k) {
    if (k % 2 != 0) return HPoly();
    const int n = k / 2;
    Rational c = binomial_half(n) * quarter_power(n);
    if (n % 2) c = -c;
    return HPoly::monomial(RadScalar(c), k);
  });
}

PolyMatrix exp_scaled(const PolyMatrix& x, const Rational& factor) {
  PolyMatrix hx = x * HPoly::monomial(RadScalar(factor), 1);
  return nilpotent_exp(hx);
}

Representation realize(const PolyMatrix& jp, const PolyMatrix& jm, const PolyMatrix& j0) {
  if (jp.rows() != jm.rows() || jp.rows() != j0.rows())
    throw DimensionError("realize", jp.rows(), jp.cols(), jm.rows(), jm.cols());
  Representation rep;
  rep.h = j0;
  rep.x = arctanh_map(jp);
  const PolyMatrix s = sqrt_one_minus_square(jp);
  rep.y = s * jm * s;
  rep.exp_hx = exp_scaled(rep.x, 1);
  rep.expm_hx = exp_scaled(rep.x, -1);
  rep.zp = zplus_from(rep.x);
  rep.zm = zminus_from(rep.x, rep.y);
  return rep;
}

Irrep irrep(HalfInt j) {
  Sl2Matrices sl2 = sl2_irrep(j);
  Representation rep = realize(to_poly(sl2.zp), to_poly(sl2.zm), to_poly(sl2.hm));
  return {j, std::move(sl2), std::move(rep)};
}

PolyMatrix x_matrix(HalfInt j) { return arctanh_map(to_poly(sl2_irrep(j).zp)); }

PolyMatrix y_matrix(HalfInt j) {
  const Sl2Matrices sl2 = sl2_irrep(j);
  const PolyMatrix s = sqrt_one_minus_square(to_poly(sl2.zp));
  return s * to_poly(sl2.zm) * s;
}

PolyMatrix exp_hx(HalfInt j, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("exp_hx: sign must be +1 or -1");
  return exp_scaled(x_matrix(j), sign);
}

PolyMatrix exp_hx_mobius(HalfInt j, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("exp_hx_mobius: sign must be +1 or -1");
  const PolyMatrix t = to_poly(sl2_irrep(j).zp) * HPoly::monomial(RadScalar(Rational(sign, 2)), 1);
  return (identity<HPoly>(t.rows()) + t) * neumann_inverse(t);
}

PolyMatrix sinh_over_h(const Representation& rep) {
  return divide_by_h(rep.exp_hx - rep.expm_hx, 1) * HPoly(Rational(1, 2));
}

PolyMatrix cosh_hx(const Representation& rep) { return (rep.exp_hx + rep.expm_hx) * HPoly(Rational(1, 2)); }

PolyMatrix zplus_from(const PolyMatrix& x) {
  const PolyMatrix e = exp_scaled(x, Rational(1, 2));
  const PolyMatrix f = exp_scaled(x, Rational(-1, 2));
  // (2/h) sinh(hX/2) = (e - f)/h; cosh(hX/2) = 1 + N with N nilpotent.
  const PolyMatrix two_sinh_over_h = divide_by_h(e - f, 1);
  const PolyMatrix cosh = (e + f) * HPoly(Rational(1, 2));
  const PolyMatrix n = cosh - identity<HPoly>(x.rows());
  return two_sinh_over_h * neumann_inverse(PolyMatrix(-n));
}

PolyMatrix zminus_from(const PolyMatrix& x, const PolyMatrix& y) {
  const PolyMatrix cosh = (exp_scaled(x, Rational(1, 2)) + exp_scaled(x, Rational(-1, 2))) * HPoly(Rational(1, 2));
  return cosh * y * cosh;
}

PolyMatrix casimir(const Representation& rep) {
  const PolyMatrix s = sinh_over_h(rep);
  PolyMatrix c = (rep.y * s + s * rep.y) * HPoly(Rational(1, 2));
  c += rep.h * rep.h * HPoly(Rational(1, 4));
  c += s * s * HPoly::monomial(RadScalar(Rational(1, 4)), 2);
  return c;
}

PolyMatrix casimir_sl2_form(const Representation& rep) {
  const PolyMatrix half_h = rep.h * HPoly(Rational(1, 2));
  return rep.zp * rep.zm + half_h * (half_h - identity<HPoly>(rep.dim()));
}

PolyMatrix casimir_matrix(HalfInt j) { return casimir(irrep(j).rep); }

VerificationReport verify_defining_relations(const Representation& rep, const std::string& label) {
  VerificationReport report;
  report.suite = "defining relations " + label;
  const PolyMatrix sinh = sinh_over_h(rep);
  const PolyMatrix cosh = cosh_hx(rep);
  report.expect_zero("[X,Y] - H", residual(commutator(rep.x, rep.y) - rep.h));
  report.expect_zero("[H,X] - 2 sinh(hX)/h", residual(commutator(rep.h, rep.x) - sinh * HPoly(2)));
  report.expect_zero("[H,Y] + Y cosh(hX) + cosh(hX) Y",
                     residual(commutator(rep.h, rep.y) + rep.y * cosh + cosh * rep.y));
  return report;
}

VerificationReport verify_defining_relations(HalfInt j) {
  return verify_defining_relations(irrep(j).rep, "j=" + j.str());
}

VerificationReport verify_casimir(HalfInt j) {
  VerificationReport report;
  report.suite = "casimir j=" + j.str();
  const Irrep ir = irrep(j);
  const PolyMatrix c = casimir(ir.rep);
  const Rational value = Rational(j.twice() * (j.twice() + 2), 4);
  report.expect_zero("C - j(j+1)", residual(c - identity<HPoly>(ir.rep.dim()) * HPoly(value)));
  report.expect_zero("C(2.5 form) - C(Z form)", residual(c - casimir_sl2_form(ir.rep)));
  return report;
}

std::vector<CoproductTerm> coproduct_terms(Generator c) {
  using G = Generator;
  switch (c) {
    case G::X: return {{G::X, G::Unit}, {G::Unit, G::X}};
    case G::Y: return {{G::Y, G::ExpHX}, {G::ExpmHX, G::Y}};
    case G::H: return {{G::H, G::ExpHX}, {G::ExpmHX, G::H}};
    case G::Unit: return {{G::Unit, G::Unit}};
    case G::ExpHX: return {{G::ExpHX, G::ExpHX}};
    case G::ExpmHX: return {{G::ExpmHX, G::ExpmHX}};
  }
  throw std::logic_error("unhandled generator");
}

int counit(Generator c) {
  switch (c) {
    case Generator::X:
    case Generator::Y:
    case Generator::H: return 0;
    default: return 1;
  }
}

PolyMatrix antipode(Generator c, const Representation& rep) {
  switch (c) {
    case Generator::X: return -rep.x;
    case Generator::Y: return -(rep.exp_hx * rep.y * rep.expm_hx);
    case Generator::H: return -(rep.exp_hx * rep.h * rep.expm_hx);
    case Generator::Unit: return identity<HPoly>(rep.dim());
    case Generator::ExpHX: return rep.expm_hx;
    case Generator::ExpmHX: return rep.exp_hx;
  }
  throw std::logic_error("unhandled generator");
}

PolyMatrix coproduct(Generator c, const Representation& a, const Representation& b) {
  PolyMatrix out = zeros<HPoly>(a.dim() * b.dim(), a.dim() * b.dim());
  for (const auto& t : coproduct_terms(c)) out += kron(a.matrix(t.left), b.matrix(t.right));
  return out;
}

Representation coproduct(const Representation& a, const Representation& b) {
  Representation rep;
  rep.x = coproduct(Generator::X, a, b);
  rep.y = coproduct(Generator::Y, a, b);
  rep.h = coproduct(Generator::H, a, b);
  rep.exp_hx = coproduct(Generator::ExpHX, a, b);
  rep.expm_hx = coproduct(Generator::ExpmHX, a, b);
  rep.zp = zplus_from(rep.x);
  rep.zm = zminus_from(rep.x, rep.y);
  return rep;
}

VerificationReport verify_hopf_axioms(HalfInt j1, HalfInt j2) {
  VerificationReport report;
  report.suite = "hopf axioms j1=" + j1.str() + " j2=" + j2.str();
  const Representation a = irrep(j1).rep;
  const Representation b = irrep(j2).rep;
  const Representation trivial = irrep(HalfInt(0)).rep;

  // Δ is an algebra map: the tensor product space satisfies the defining relations.
  const Representation ab = coproduct(a, b);
  report.absorb(verify_defining_relations(ab, "on j1⊗j2"));
  report.expect_zero("Δ(e^{hX}) Δ(e^{-hX}) - 1",
                     residual(ab.exp_hx * ab.expm_hx - identity<HPoly>(ab.dim())));
  report.expect_zero("Δ(e^{hX}) - exp(hΔX)", residual(ab.exp_hx - exp_scaled(ab.x, 1)));

  const Generator gens[] = {Generator::X, Generator::Y, Generator::H, Generator::ExpHX, Generator::ExpmHX};
  for (Generator g : gens) {
    const std::string name = to_string(g);
    report.expect("ε(" + name + ") on trivial irrep",
                  exactly_equal(trivial.matrix(g), identity<HPoly>(1) * HPoly(counit(g))),
                  "trivial representation disagrees with counit");
    // (ε ⊗ id)Δ = id = (id ⊗ ε)Δ, realized on W^(0) ⊗ W^(j1) and W^(j1) ⊗ W^(0).
    report.expect_zero("(ε⊗id)Δ(" + name + ") - " + name, residual(coproduct(g, trivial, a) - a.matrix(g)));
    report.expect_zero("(id⊗ε)Δ(" + name + ") - " + name, residual(coproduct(g, a, trivial) - a.matrix(g)));
    // Σ S(c1) c2 = ε(c) = Σ c1 S(c2)
    for (const Representation* rep : {&a, &b}) {
      PolyMatrix left = zeros<HPoly>(rep->dim(), rep->dim());
      PolyMatrix right = left;
      for (const auto& t : coproduct_terms(g)) {
        left += antipode(t.left, *rep) * rep->matrix(t.right);
        right += rep->matrix(t.left) * antipode(t.right, *rep);
      }
      const PolyMatrix eps = identity<HPoly>(rep->dim()) * HPoly(counit(g));
      const std::string where = rep == &a ? " on j1" : " on j2";
      report.expect_zero("Σ S(c1)c2 - ε, c=" + name + where, residual(left - eps));
      report.expect_zero("Σ c1 S(c2) - ε, c=" + name + where, residual(right - eps));
    }
    // Coassociativity on j1 ⊗ j2 ⊗ 1/2.
    const Representation c = irrep(half).rep;
    PolyMatrix lhs = zeros<HPoly>(ab.dim() * c.dim(), ab.dim() * c.dim());
    PolyMatrix rhs = lhs;
    for (const auto& t : coproduct_terms(g)) {
      lhs += kron(coproduct(t.left, a, b), c.matrix(t.right));
      rhs += kron(a.matrix(t.left), coproduct(t.right, b, c));
    }
    report.expect_zero("coassociativity " + name, residual(lhs - rhs));
  }
  return report;
}

VerificationReport verify_hopf_axioms(HalfInt j) { return verify_hopf_axioms(j, j); }

VerificationReport verify_classical_limit(HalfInt j) {
  VerificationReport report;
  report.suite = "classical limit j=" + j.str();
  const Irrep ir = irrep(j);
  const RadMatrix one = identity<RadScalar>(ir.rep.dim());
  report.expect("X(h=0) = Z+", exactly_equal(eval_h(ir.rep.x, 0), ir.sl2.zp), "X(0) differs from Z+");
  report.expect("Y(h=0) = Z-", exactly_equal(eval_h(ir.rep.y, 0), ir.sl2.zm), "Y(0) differs from Z-");
  report.expect("H(h=0) = H", exactly_equal(eval_h(ir.rep.h, 0), ir.sl2.hm), "H(0) differs");
  report.expect("e^{hX}(h=0) = 1", exactly_equal(eval_h(ir.rep.exp_hx, 0), one), "e^{hX}(0) != 1");
  report.expect("e^{-hX}(h=0) = 1", exactly_equal(eval_h(ir.rep.expm_hx, 0), one), "e^{-hX}(0) != 1");
  return report;
}

}  // namespace uhsl2
