#include "uhsl2/wigner_eckart.hpp"

#include <stdexcept>

#include "uhsl2/coupling.hpp"

namespace uhsl2 {

namespace {

Index sector_row(const Sector& s, HalfInt m) {
  if (!valid_weight(s.j, m)) throw std::domain_error("weight " + m.str() + " out of range for j=" + s.j.str());
  return s.basis.at(weight_index(s.j, m));
}

void check_shape(const TensorOpFamily& fam, const Sector& target, const Sector& source) {
  const Index rows = fam.context.target->dim(), cols = fam.context.source->dim();
  for (Index i : target.basis)
    if (i < 0 || i >= rows) throw DimensionError("matrix_element target sector", i, 0, rows, cols);
  for (Index i : source.basis)
    if (i < 0 || i >= cols) throw DimensionError("matrix_element source sector", 0, i, rows, cols);
}

std::string case_label(const TensorOpFamily& fam, const Sector& source, const Sector& target) {
  return "I(" + fam.rank.str() + " " + source.j.str() + " " + target.j.str() + ") [" + source.label + " -> " +
         target.label + "]";
}

// phi[i1][i2] = |φ; j1 - i1, j2 - i2>
using PhiTable = std::vector<std::vector<PolyVector>>;

PhiTable phi_table(const TensorOpFamily& fam, const Sector& source) {
  PhiTable out;
  for (HalfInt m1 : weights(fam.rank)) {
    out.emplace_back();
    for (HalfInt m2 : weights(source.j)) out.back().push_back(phi_vector(fam, source, m1, m2).vector);
  }
  return out;
}

const PolyVector* phi_at(const PhiTable& t, HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2) {
  if (!valid_weight(j1, m1) || !valid_weight(j2, m2)) return nullptr;
  return &t[weight_index(j1, m1)][weight_index(j2, m2)];
}

// <j m|φ; m1 m2>, zero when m is out of range.
HPoly phi_component(const PhiTable& t, const Sector& target, HalfInt j1, HalfInt j2, HalfInt m, HalfInt m1,
                    HalfInt m2) {
  const PolyVector* v = phi_at(t, j1, j2, m1, m2);
  if (!v || !valid_weight(target.j, m)) return {};
  return (*v)(sector_row(target, m));
}

}  // namespace

std::string to_string(ReducedOutcome o) {
  switch (o) {
    case ReducedOutcome::Value: return "value";
    case ReducedOutcome::SelectionRuleForbidden: return "selection-rule-forbidden";
    case ReducedOutcome::ChannelMismatch: return "channel-mismatch";
  }
  return "?";
}

HPoly matrix_element(const TensorOpFamily& fam, const Sector& target, HalfInt m, HalfInt m1, const Sector& source,
                     HalfInt m2) {
  check_shape(fam, target, source);
  const PolyMatrix& t = fam.component(m1);
  return t(sector_row(target, m), sector_row(source, m2));
}

PhiVector phi_vector(const TensorOpFamily& fam, const Sector& source, HalfInt m1, HalfInt m2) {
  const HalfInt j1 = fam.rank, j2 = source.j;
  if (!valid_weight(j1, m1) || !valid_weight(j2, m2))
    throw std::domain_error("phi_vector: weights (" + m1.str() + ", " + m2.str() + ") out of range");
  const AlphaTable& a = alpha_table(j1, j2);
  PolyVector v = PolyVector::Zero(fam.context.target->dim());
  for (HalfInt k1 : weights(j1)) {
    if (k1 < m1) continue;
    for (HalfInt k2 : weights(j2)) {
      if (k2 < m2) continue;
      const HPoly& c = a(k1, k2, m1, m2);
      if (!c.is_zero()) v += fam.component(k1).col(sector_row(source, k2)) * c;
    }
  }
  return {j1, j2, m1, m2, std::move(v)};
}

VerificationReport verify_phi_recurrence(const TensorOpFamily& fam, const Sector& source) {
  VerificationReport report;
  report.suite = "phi recurrence " + fam.name + " on " + source.label;
  const HalfInt j1 = fam.rank, j2 = source.j;
  const PhiTable phi = phi_table(fam, source);
  const Representation& rep = fam.context.target->rep;
  for (int sign : {1, -1}) {
    const PolyMatrix& z = sign > 0 ? rep.zp : rep.zm;
    const HalfInt step = sign > 0 ? HalfInt(1) : HalfInt(-1);
    for (HalfInt m1 : weights(j1))
      for (HalfInt m2 : weights(j2)) {
        PolyVector rhs = PolyVector::Zero(z.rows());
        const RadScalar f1 = sign > 0 ? raising_factor(j1, m1) : lowering_factor(j1, m1);
        const RadScalar f2 = sign > 0 ? raising_factor(j2, m2) : lowering_factor(j2, m2);
        if (auto* v = phi_at(phi, j1, j2, m1 + step, m2); v && !f1.is_zero()) rhs += *v * HPoly(f1);
        if (auto* v = phi_at(phi, j1, j2, m1, m2 + step); v && !f2.is_zero()) rhs += *v * HPoly(f2);
        const PolyVector lhs = z * *phi_at(phi, j1, j2, m1, m2);
        report.expect_zero(std::string(sign > 0 ? "Z+" : "Z-") + " |φ; " + m1.str() + " " + m2.str() + ">",
                           first_nonzero(PolyVector(lhs - rhs)));
      }
  }
  return report;
}

VerificationReport verify_sector(const Space& space, const Sector& sector) {
  VerificationReport report;
  report.suite = "sector " + sector.label + " of " + space.name;
  const Representation model = irrep(sector.j).rep;
  for (Generator g : {Generator::X, Generator::Y, Generator::H}) {
    const PolyMatrix& big = space.rep.matrix(g);
    const PolyMatrix& small = model.matrix(g);
    std::optional<std::string> bad;
    for (std::size_t c = 0; c < sector.basis.size() && !bad; ++c)
      for (Index r = 0; r < space.dim() && !bad; ++r) {
        HPoly expected;
        for (std::size_t k = 0; k < sector.basis.size(); ++k)
          if (sector.basis[k] == r) expected = small(static_cast<Index>(k), static_cast<Index>(c));
        const HPoly diff = big(r, sector.basis[c]) - expected;
        if (!diff.is_zero()) bad = "entry (" + std::to_string(r) + "," + std::to_string(sector.basis[c]) + "): " + diff.str();
      }
    report.expect_zero(to_string(g) + " restricts to irrep(" + sector.j.str() + ")", bad);
  }
  return report;
}

ReducedMatrixElement reduced_matrix_element(const TensorOpFamily& fam, const Sector& source, const Sector& target) {
  check_shape(fam, target, source);
  ReducedMatrixElement out{fam.rank, source.j, target.j, ReducedOutcome::Value, {}, 0, {}};
  if (!triangle(out.j1, out.j2, out.j)) {
    out.outcome = ReducedOutcome::SelectionRuleForbidden;
    out.detail = "triangle rule fails for (" + out.j1.str() + ", " + out.j2.str() + ", " + out.j.str() + ")";
    return out;
  }
  const PhiTable phi = phi_table(fam, source);
  bool have = false;
  for (HalfInt m : weights(out.j))
    for (HalfInt m1 : weights(out.j1)) {
      const HalfInt m2 = m - m1;
      if (!valid_weight(out.j2, m2)) continue;
      const RadScalar c = sl2_cgc(out.j1, out.j2, out.j, m1, m2);
      if (c.is_zero()) continue;
      ++out.channels;
      const HPoly value = phi_component(phi, target, out.j1, out.j2, m, m1, m2) * HPoly(c.inverse());
      if (!have) {
        out.value = value;
        have = true;
      } else if (!(value == out.value) && out.outcome == ReducedOutcome::Value) {
        out.outcome = ReducedOutcome::ChannelMismatch;
        out.detail = "channel (m=" + m.str() + ", m1=" + m1.str() + ") gives " + value.str() + ", first channel gave " +
                     out.value.str();
      }
    }
  return out;
}

std::optional<RadScalar> classical_reduced_matrix_element(const TensorOpFamily& fam, const Sector& source,
                                                          const Sector& target) {
  check_shape(fam, target, source);
  const HalfInt j1 = fam.rank, j2 = source.j, j = target.j;
  if (!triangle(j1, j2, j)) return std::nullopt;
  std::optional<RadScalar> value;
  for (HalfInt m : weights(j))
    for (HalfInt m1 : weights(j1)) {
      const HalfInt m2 = m - m1;
      if (!valid_weight(j2, m2)) continue;
      const RadScalar c = sl2_cgc(j1, j2, j, m1, m2);
      const RadScalar element = matrix_element(fam, target, m, m1, source, m2).eval(0);
      if (c.is_zero()) {
        if (!element.is_zero()) return std::nullopt;
        continue;
      }
      const RadScalar v = element * c.inverse();
      if (!value) value = v;
      else if (!(*value == v)) return std::nullopt;
    }
  return value;
}

VerificationReport verify_wigner_eckart(const TensorOpFamily& fam, const Sector& source, const Sector& target) {
  VerificationReport report;
  report.suite = "Wigner-Eckart " + fam.name + " " + case_label(fam, source, target);
  const HalfInt j1 = fam.rank, j2 = source.j, j = target.j;

  if (!triangle(j1, j2, j)) {
    std::optional<std::string> bad;
    for (HalfInt m : weights(j))
      for (HalfInt m1 : weights(j1))
        for (HalfInt m2 : weights(j2))
          if (const HPoly e = matrix_element(fam, target, m, m1, source, m2); !e.is_zero() && !bad)
            bad = "<" + m.str() + "|t_" + m1.str() + "|" + m2.str() + "> = " + e.str();
    report.expect_zero("selection rule: all matrix elements vanish", bad);
    return report;
  }

  const ReducedMatrixElement red = reduced_matrix_element(fam, source, target);
  report.expect("I independent of channel (" + std::to_string(red.channels) + " channels)",
                red.outcome == ReducedOutcome::Value, red.detail);
  if (red.outcome != ReducedOutcome::Value) return report;
  report.pass("I value", red.value.is_zero() ? std::string("0 (vanishes identically)")
                                              : red.value.str() + " (h-degree " + std::to_string(red.value.degree()) + ")");

  const AlphaTable& a = alpha_table(j1, j2);
  const PhiTable phi = phi_table(fam, source);
  auto cgc = [&](HalfInt n1, HalfInt n2, HalfInt m) {
    return n1 + n2 == m ? sl2_cgc(j1, j2, j, n1, n2) : RadScalar();
  };

  std::optional<std::string> bad_theorem, bad_inverse, bad_bra;
  for (HalfInt m : weights(j))
    for (HalfInt m1 : weights(j1))
      for (HalfInt m2 : weights(j2)) {
        const std::string where = "(m=" + m.str() + ", m1=" + m1.str() + ", m2=" + m2.str() + ")";
        const HPoly lhs = matrix_element(fam, target, m, m1, source, m2);
        HPoly bra, inverse;
        for (HalfInt n1 : weights(j1))
          for (HalfInt n2 : weights(j2)) {
            if (n1 < m1 || n2 < m2) continue;  // α_{-m}^{-n} vanishes for -m < -n
            const HPoly& coef = a(-m1, -m2, -n1, -n2);
            if (coef.is_zero()) continue;
            if (const RadScalar c = cgc(n1, n2, m); !c.is_zero()) bra += coef * HPoly(c);
            inverse += coef * phi_component(phi, target, j1, j2, m, n1, n2);
          }
        if (!bad_theorem)
          if (const HPoly r = lhs - red.value * bra; !r.is_zero()) bad_theorem = where + " residual " + r.str();
        if (!bad_inverse)
          if (const HPoly r = lhs - inverse; !r.is_zero()) bad_inverse = where + " residual " + r.str();
        if (!bad_bra)
          if (const HPoly r = bra - uh_cgc_bra(j1, j2, j, m1, m2, m); !r.is_zero()) bad_bra = where + " " + r.str();
      }
  report.expect_zero("<j m|t|j2 m2> = I Σ α C for all weights", bad_theorem);
  report.expect_zero("<j m|t|j2 m2> = Σ α <j m|φ> (α-inversion)", bad_inverse);
  report.expect_zero("bra sum equals U_h bra CGC", bad_bra);

  // <j m|φ; m1 m2> = I C^{j1 j2 j}_{m1 m2 m}, including m != m1 + m2.
  std::optional<std::string> bad_prop;
  for (HalfInt m : weights(j))
    for (HalfInt m1 : weights(j1))
      for (HalfInt m2 : weights(j2)) {
        const HPoly r = phi_component(phi, target, j1, j2, m, m1, m2) - red.value * HPoly(cgc(m1, m2, m));
        if (!r.is_zero() && !bad_prop)
          bad_prop = "(m=" + m.str() + ", m1=" + m1.str() + ", m2=" + m2.str() + ") residual " + r.str();
      }
  report.expect_zero("<j m|φ; m1 m2> proportional to sl(2) CGC", bad_prop);

  // sl(2) CGC recurrence for f(m1, m2) = <j, m1+m2|φ; m1 m2>.
  auto f = [&](HalfInt m1, HalfInt m2) {
    if (!valid_weight(j1, m1) || !valid_weight(j2, m2)) return HPoly();
    return phi_component(phi, target, j1, j2, m1 + m2, m1, m2);
  };
  std::optional<std::string> bad_rec;
  for (int sign : {1, -1}) {
    auto factor = [sign](HalfInt jj, HalfInt mm) {
      if (!valid_weight(jj, mm)) return RadScalar();
      return sign > 0 ? raising_factor(jj, mm) : lowering_factor(jj, mm);
    };
    const HalfInt step = sign > 0 ? HalfInt(1) : HalfInt(-1);
    for (HalfInt m1 : weights(j1))
      for (HalfInt m2 : weights(j2)) {
        const HPoly r = f(m1, m2) * HPoly(factor(j, m1 + m2)) - f(m1 + step, m2) * HPoly(factor(j1, m1)) -
                        f(m1, m2 + step) * HPoly(factor(j2, m2));
        if (!r.is_zero() && !bad_rec)
          bad_rec = std::string(sign > 0 ? "+" : "-") + " (m1=" + m1.str() + ", m2=" + m2.str() + ") residual " + r.str();
      }
  }
  report.expect_zero("sl(2) CGC recurrence for <j m|φ>", bad_rec);

  // The bra coefficients invert the coupled kets within the j block.
  {
    const CoupledBasis basis = coupled_basis(j1, j2);
    std::optional<std::string> bad;
    for (const auto& block : basis.blocks) {
      if (block.j != j) continue;
      for (HalfInt m : weights(j))
        for (HalfInt mp : weights(j)) {
          HPoly dot;
          for (HalfInt k1 : weights(j1))
            for (HalfInt k2 : weights(j2))
              dot += uh_cgc_bra(j1, j2, j, k1, k2, m) *
                     block.vectors[weight_index(j, mp)](product_index(j1, j2, k1, k2));
          if (const HPoly r = dot - HPoly(m == mp ? 1 : 0); !r.is_zero() && !bad)
            bad = "<" + m.str() + "|" + mp.str() + "> - δ = " + r.str();
        }
    }
    report.expect_zero("bra CGC dual to coupled kets", bad);
  }

  const auto classical = classical_reduced_matrix_element(fam, source, target);
  report.expect("I at h=0 equals classical reduced matrix element", classical && red.value.eval(0) == *classical,
                classical ? "I(0) = " + red.value.eval(0).str() + ", classical " + classical->str()
                          : std::string("classical channels disagree"));
  return report;
}

std::vector<WignerEckartCase> wigner_eckart_cases(const TensorOpFamily& fam, HalfInt max_j) {
  std::vector<WignerEckartCase> out;
  for (const auto& s : fam.context.source->sectors) {
    if (s.j > max_j) continue;
    for (const auto& t : fam.context.target->sectors) {
      if (t.j > max_j) continue;
      out.push_back({&s, &t, triangle(fam.rank, s.j, t.j)});
    }
  }
  return out;
}

VerificationReport verify_wigner_eckart_family(const TensorOpFamily& fam, HalfInt max_j) {
  VerificationReport report;
  report.suite = "Wigner-Eckart " + fam.name;
  for (const auto& s : fam.context.source->sectors) report.absorb(verify_sector(*fam.context.source, s));
  if (fam.context.target != fam.context.source)
    for (const auto& t : fam.context.target->sectors) report.absorb(verify_sector(*fam.context.target, t));
  for (const auto& s : fam.context.source->sectors)
    if (s.j <= max_j) report.absorb(verify_phi_recurrence(fam, s));
  for (const auto& c : wigner_eckart_cases(fam, max_j)) report.absorb(verify_wigner_eckart(fam, *c.source, *c.target));
  return report;
}

}  // namespace uhsl2
