// uhsl2: construct and verify U_h(sl(2)) objects from the command line.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uhsl2/algebra.hpp"
#include "uhsl2/coupling.hpp"
#include "uhsl2/serialize.hpp"
#include "uhsl2/suite.hpp"
#include "uhsl2/wigner_eckart.hpp"

using namespace uhsl2;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const CLI::Validator kHalfInt(
    [](std::string& s) -> std::string {
      try {
        parse_half_int(s);
        return {};
      } catch (const std::exception& e) {
        return e.what();
      }
    },
    "HALF-INT");

Rational parse_rational(const std::string& s) {
  const auto dot = s.find('.');
  Rational q;
  if (dot == std::string::npos) {
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  }
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  Integer num;
  if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) throw std::invalid_argument("not a decimal: '" + s + "'");
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
  q = Rational(num, den);
  q.canonicalize();
  return q;
}

const CLI::Validator kRational(
    [](std::string& s) -> std::string {
      try {
        parse_rational(s);
        return {};
      } catch (const std::exception& e) {
        return e.what();
      }
    },
    "RATIONAL");

// Rows of already-formatted cells plus the JSON twin of each row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  Json json = Json::array();

  std::string csv() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + csv_field(header[i]);
    out += '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(r[i]);
      out += '\n';
    }
    return out;
  }

  std::string pretty() const {
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string out;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += "  ";
        out += cells[i] + std::string(w[i] - cells[i].size(), ' ');
      }
      while (!out.empty() && out.back() == ' ') out.pop_back();
      return out + '\n';
    };
    std::string out = line(header);
    for (const auto& r : rows) out += line(r);
    return out;
  }
};

struct Options {
  std::string j, j1, j2, m, m1, m2, gen, realization, format, h_eval, max_j = "2", out;
};

struct Context {
  Options opt;
  Format format = Format::Pretty;
  std::optional<Rational> h_eval;
  std::ostringstream body;

  HalfInt half_int(const std::string& value, const char* flag) const {
    if (value.empty()) throw UsageError(std::string("missing required option ") + flag);
    return parse_half_int(value);
  }
  std::optional<HalfInt> maybe(const std::string& value) const {
    return value.empty() ? std::nullopt : std::optional<HalfInt>(parse_half_int(value));
  }

  Json scalar_json(const HPoly& p) const { return h_eval ? to_json(p.eval(*h_eval)) : to_json(p); }
  std::string scalar_text(const HPoly& p) const { return h_eval ? p.eval(*h_eval).str() : p.str(); }

  void emit_matrix(const std::string& title, const PolyMatrix& m, Json& json) {
    if (h_eval) {
      const RadMatrix v = eval_h(m, *h_eval);
      json[title] = to_json(v);
      if (format == Format::Csv) body << "# " << title << '\n' << to_csv(v);
      if (format == Format::Pretty) body << title << ":\n" << to_pretty(v) << '\n';
    } else {
      json[title] = to_json(m);
      if (format == Format::Csv) body << "# " << title << '\n' << to_csv(m);
      if (format == Format::Pretty) body << title << ":\n" << to_pretty(m) << '\n';
    }
  }

  void emit_table(const Table& t, Json meta = Json::object()) {
    if (format == Format::Json) {
      meta["rows"] = t.json;
      body << meta.dump(2) << '\n';
    } else {
      body << (format == Format::Csv ? t.csv() : t.pretty());
    }
  }

  void emit_report(const VerificationReport& r) {
    switch (format) {
      case Format::Json: body << to_json(r).dump(2) << '\n'; break;
      case Format::Csv: body << to_csv(r); break;
      case Format::Pretty: body << to_pretty(r); break;
    }
  }
};

int cmd_irrep(Context& ctx) {
  const HalfInt j = ctx.half_int(ctx.opt.j, "--j");
  const Irrep ir = irrep(j);
  std::vector<std::pair<std::string, PolyMatrix>> mats;
  auto pick = [&](const std::string& g) {
    if (g == "Zp" || g == "Z+") return ir.rep.zp;
    if (g == "Zm" || g == "Z-") return ir.rep.zm;
    if (g == "C") return casimir(ir.rep);
    try {
      return ir.rep.matrix(parse_generator(g));
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown generator '" + g + "' (X, Y, H, Zp, Zm, expHX, expmHX, C)");
    }
  };
  if (ctx.opt.gen.empty())
    for (const char* g : {"X", "Y", "H"}) mats.emplace_back(g, pick(g));
  else
    mats.emplace_back(ctx.opt.gen, pick(ctx.opt.gen));
  Json json{{"j", j.str()}};
  if (ctx.h_eval) json["h"] = ctx.h_eval->get_str();
  Json matrices = Json::object();
  for (const auto& [name, m] : mats) ctx.emit_matrix(name, m, matrices);
  json["matrices"] = std::move(matrices);
  if (ctx.format == Format::Json) ctx.body << json.dump(2) << '\n';
  return 0;
}

int cmd_alpha(Context& ctx) {
  const HalfInt j1 = ctx.half_int(ctx.opt.j1, "--j1"), j2 = ctx.half_int(ctx.opt.j2, "--j2");
  const auto m1 = ctx.maybe(ctx.opt.m1), m2 = ctx.maybe(ctx.opt.m2);
  if (m1 && !valid_weight(j1, *m1)) throw UsageError("--m1 out of range for j1=" + j1.str());
  if (m2 && !valid_weight(j2, *m2)) throw UsageError("--m2 out of range for j2=" + j2.str());
  const AlphaTable& a = alpha_table(j1, j2);
  Table t{{"k1", "k2", "m1", "m2", "alpha"}, {}};
  for (HalfInt p1 : weights(j1)) {
    if (m1 && p1 != *m1) continue;
    for (HalfInt p2 : weights(j2)) {
      if (m2 && p2 != *m2) continue;
      for (HalfInt k1 : weights(j1))
        for (HalfInt k2 : weights(j2)) {
          const HPoly& v = a(k1, k2, p1, p2);
          if (v.is_zero()) continue;
          t.rows.push_back({k1.str(), k2.str(), p1.str(), p2.str(), ctx.scalar_text(v)});
          t.json.push_back(Json{{"k1", k1.str()}, {"k2", k2.str()}, {"m1", p1.str()}, {"m2", p2.str()},
                                {"alpha", ctx.scalar_json(v)}});
        }
    }
  }
  ctx.emit_table(t, Json{{"j1", j1.str()}, {"j2", j2.str()}});
  return 0;
}

int cmd_cgc(Context& ctx) {
  const HalfInt j1 = ctx.half_int(ctx.opt.j1, "--j1"), j2 = ctx.half_int(ctx.opt.j2, "--j2");
  const auto jsel = ctx.maybe(ctx.opt.j);
  const auto msel = ctx.maybe(ctx.opt.m);
  if (jsel && !triangle(j1, j2, *jsel)) throw UsageError("--j violates the triangle rule");
  if (jsel && msel && !valid_weight(*jsel, *msel)) throw UsageError("--m out of range for --j");
  Table t{{"j", "m", "k1", "k2", "ket", "bra", "sl2"}, {}};
  for (const auto& [j, mult] : decompose(j1, j2)) {
    (void)mult;
    if (jsel && j != *jsel) continue;
    for (HalfInt m : weights(j)) {
      if (msel && m != *msel) continue;
      for (HalfInt k1 : weights(j1))
        for (HalfInt k2 : weights(j2)) {
          const HPoly ket = uh_cgc(j1, j2, j, k1, k2, m), bra = uh_cgc_bra(j1, j2, j, k1, k2, m);
          if (ket.is_zero() && bra.is_zero()) continue;
          const RadScalar sl2 = k1 + k2 == m ? sl2_cgc(j1, j2, j, k1, k2) : RadScalar();
          t.rows.push_back({j.str(), m.str(), k1.str(), k2.str(), ctx.scalar_text(ket), ctx.scalar_text(bra), sl2.str()});
          t.json.push_back(Json{{"j", j.str()}, {"m", m.str()}, {"k1", k1.str()}, {"k2", k2.str()},
                                {"ket", ctx.scalar_json(ket)}, {"bra", ctx.scalar_json(bra)}, {"sl2", to_json(sl2)}});
        }
    }
  }
  ctx.emit_table(t, Json{{"j1", j1.str()}, {"j2", j2.str()}});
  return 0;
}

int cmd_decompose(Context& ctx) {
  const HalfInt j1 = ctx.half_int(ctx.opt.j1, "--j1"), j2 = ctx.half_int(ctx.opt.j2, "--j2");
  const auto parts = decompose(j1, j2);
  std::string text;
  Table t{{"j", "multiplicity"}, {}};
  for (const auto& [j, mult] : parts) {
    for (int i = 0; i < mult; ++i) text += (text.empty() ? "" : " ⊕ ") + j.str();
    t.rows.push_back({j.str(), std::to_string(mult)});
    t.json.push_back(Json{{"j", j.str()}, {"multiplicity", mult}});
  }
  switch (ctx.format) {
    case Format::Pretty: ctx.body << text << '\n'; break;
    case Format::Csv: ctx.body << t.csv(); break;
    case Format::Json:
      ctx.body << Json{{"j1", j1.str()}, {"j2", j2.str()}, {"decomposition", text}, {"irreps", t.json}}.dump(2) << '\n';
      break;
  }
  return 0;
}

const char* kRealizations = "fermion1, fermion2, boson-raising, boson-lowering, rank1, identity";

TensorOpFamily family_for(const std::string& name, std::optional<HalfInt> j) {
  auto need = [&]() {
    if (!j) throw UsageError("realization '" + name + "' needs a spin (--j or --j2)");
    return *j;
  };
  if (name == "fermion1") return fermion_realization().first;
  if (name == "fermion2") return fermion_realization().second;
  if (name == "boson-raising") return boson_raising(need());
  if (name == "boson-lowering") {
    if (need().twice() < 1) throw UsageError("boson-lowering needs j >= 1/2");
    return boson_lowering(*j);
  }
  if (name == "rank1") return rank1_generators(need());
  if (name == "identity") return invariant_identity(need());
  throw UsageError("unknown realization '" + name + "' (" + kRealizations + ")");
}

int cmd_tensorop(Context& ctx) {
  if (ctx.opt.realization.empty()) throw UsageError(std::string("missing --realization (") + kRealizations + ")");
  const TensorOpFamily fam = family_for(ctx.opt.realization, ctx.maybe(ctx.opt.j));
  const auto m1 = ctx.maybe(ctx.opt.m1);
  if (m1 && !valid_weight(fam.rank, *m1)) throw UsageError("--m1 out of range for rank " + fam.rank.str());
  VerificationReport report = verify_tensor_operator(fam);
  report.absorb(verify_classical_tensor_operator(fam));

  Json json{{"family", fam.name}, {"rank", fam.rank.str()}};
  Json comps = Json::object();
  for (HalfInt m : weights(fam.rank))
    if (!m1 || m == *m1) ctx.emit_matrix("t_" + m.str(), fam.component(m), comps);
  json["components"] = std::move(comps);
  if (ctx.format == Format::Json) {
    json["report"] = to_json(report, false);
    ctx.body << json.dump(2) << '\n';
  } else {
    ctx.emit_report(report);
  }
  return report.passed() ? 0 : kExitFail;
}

int cmd_wigner_eckart(Context& ctx) {
  if (ctx.opt.realization.empty()) throw UsageError(std::string("missing --realization (") + kRealizations + ")");
  const HalfInt j2 = ctx.half_int(ctx.opt.j2, "--j2");
  const auto jsel = ctx.maybe(ctx.opt.j);
  const TensorOpFamily fam = family_for(ctx.opt.realization, j2);
  bool ok = true, any = false;
  Json cases = Json::array();
  for (const auto& source : fam.context.source->sectors) {
    if (source.j != j2) continue;
    for (const auto& target : fam.context.target->sectors) {
      if (jsel && target.j != *jsel) continue;
      any = true;
      const ReducedMatrixElement red = reduced_matrix_element(fam, source, target);
      const VerificationReport report = verify_wigner_eckart(fam, source, target);
      ok = ok && report.passed();

      Table t{{"m", "m1", "m2", "element", "I*bra-cgc", "status"}, {}};
      for (HalfInt m : weights(target.j))
        for (HalfInt m1 : weights(fam.rank))
          for (HalfInt m2 : weights(source.j)) {
            const HPoly lhs = matrix_element(fam, target, m, m1, source, m2);
            const HPoly rhs = red.outcome == ReducedOutcome::Value ? red.value * uh_cgc_bra(fam.rank, j2, target.j, m1, m2, m)
                                                                   : HPoly();
            const bool match = lhs == rhs;
            t.rows.push_back({m.str(), m1.str(), m2.str(), ctx.scalar_text(lhs), ctx.scalar_text(rhs), match ? "pass" : "fail"});
            t.json.push_back(Json{{"m", m.str()}, {"m1", m1.str()}, {"m2", m2.str()}, {"element", ctx.scalar_json(lhs)},
                                  {"predicted", ctx.scalar_json(rhs)}, {"status", match ? "pass" : "fail"}});
            ok = ok && match;
          }

      const std::string label = "I(" + fam.rank.str() + " " + j2.str() + " " + target.j.str() + ")";
      Json c{{"source", source.label}, {"target", target.label}, {"j1", fam.rank.str()}, {"j2", j2.str()},
             {"j", target.j.str()}, {"outcome", to_string(red.outcome)}};
      if (red.outcome == ReducedOutcome::Value) c["I"] = ctx.scalar_json(red.value);
      c["passed"] = report.passed();
      if (ctx.format == Format::Json) {
        c["elements"] = t.json;
        c["report"] = to_json(report, false);
        cases.push_back(std::move(c));
      } else if (ctx.format == Format::Pretty) {
        ctx.body << source.label << " -> " << target.label << '\n';
        ctx.body << label << " = "
                 << (red.outcome == ReducedOutcome::Value ? ctx.scalar_text(red.value) : to_string(red.outcome)) << '\n';
        ctx.body << t.pretty() << (report.passed() ? "PASS" : "FAIL") << "  (" << report.checks.size()
                 << " checks)\n\n";
      } else {
        ctx.body << "# " << label << " = "
                 << (red.outcome == ReducedOutcome::Value ? red.value.str() : to_string(red.outcome)) << '\n'
                 << t.csv();
      }
    }
  }
  if (!any) throw UsageError("no source sector j2=" + j2.str() + (jsel ? " and target j=" + jsel->str() : "") + " for " + fam.name);
  if (ctx.format == Format::Json)
    ctx.body << Json{{"family", fam.name}, {"passed", ok}, {"cases", cases}}.dump(2) << '\n';
  return ok ? 0 : kExitFail;
}

int cmd_verify(Context& ctx) {
  const HalfInt max_j = ctx.half_int(ctx.opt.max_j, "--max-j");
  if (max_j.twice() < 0) throw UsageError("--max-j must be non-negative");
  const SuiteRun run = run_verification(max_j);
  switch (ctx.format) {
    case Format::Json: ctx.body << to_json(run).dump(2) << '\n'; break;
    case Format::Csv: ctx.body << to_csv(run); break;
    case Format::Pretty: ctx.body << to_pretty(run); break;
  }
  return run.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact representations, Clebsch-Gordan coefficients and tensor operators of U_h(sl(2))", "uhsl2"};
  app.require_subcommand(1);
  Options opt;

  const char* env_format = std::getenv("UHSL2_FORMAT");
  opt.format = env_format && *env_format ? env_format : "pretty";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json, csv or pretty (default from UHSL2_FORMAT, else pretty)")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", opt.out, "write output to FILE instead of stdout");
  };
  auto spin = [&](CLI::App* sub, const char* flag, std::string& dst, const char* help) {
    return sub->add_option(flag, dst, help)->check(kHalfInt);
  };

  auto* irrep_cmd = app.add_subcommand("irrep", "representation matrices on W^(j)");
  spin(irrep_cmd, "--j", opt.j, "spin j")->required();
  irrep_cmd->add_option("--gen", opt.gen, "X, Y, H, Zp, Zm, expHX, expmHX or C (default: X, Y, H)");
  irrep_cmd->add_option("--h-eval", opt.h_eval, "substitute a rational value for h")->check(kRational);
  common(irrep_cmd);

  auto* alpha_cmd = app.add_subcommand("alpha", "transition coefficients alpha_{k1,k2}^{m1,m2}");
  spin(alpha_cmd, "--j1", opt.j1, "first spin")->required();
  spin(alpha_cmd, "--j2", opt.j2, "second spin")->required();
  spin(alpha_cmd, "--m1", opt.m1, "restrict to m1");
  spin(alpha_cmd, "--m2", opt.m2, "restrict to m2");
  alpha_cmd->add_option("--h-eval", opt.h_eval, "substitute a rational value for h")->check(kRational);
  common(alpha_cmd);

  auto* cgc_cmd = app.add_subcommand("cgc", "U_h(sl(2)) Clebsch-Gordan coefficients (ket and bra) beside sl(2) ones");
  spin(cgc_cmd, "--j1", opt.j1, "first spin")->required();
  spin(cgc_cmd, "--j2", opt.j2, "second spin")->required();
  spin(cgc_cmd, "--j", opt.j, "restrict to coupled spin j");
  spin(cgc_cmd, "--m", opt.m, "restrict to coupled weight m");
  cgc_cmd->add_option("--h-eval", opt.h_eval, "substitute a rational value for h")->check(kRational);
  common(cgc_cmd);

  auto* dec_cmd = app.add_subcommand("decompose", "irreducible content of W^(j1) ⊗ W^(j2)");
  spin(dec_cmd, "--j1", opt.j1, "first spin")->required();
  spin(dec_cmd, "--j2", opt.j2, "second spin")->required();
  common(dec_cmd);

  auto* top_cmd = app.add_subcommand("tensorop", "components of a tensor-operator family and its check");
  top_cmd->add_option("--realization", opt.realization, kRealizations)->required();
  spin(top_cmd, "--j", opt.j, "source spin of the family");
  spin(top_cmd, "--m1", opt.m1, "only this component");
  top_cmd->add_option("--h-eval", opt.h_eval, "substitute a rational value for h")->check(kRational);
  common(top_cmd);

  auto* we_cmd = app.add_subcommand("wigner-eckart", "reduced matrix element and matrix-element table");
  we_cmd->add_option("--realization", opt.realization, kRealizations)->required();
  spin(we_cmd, "--j2", opt.j2, "source spin")->required();
  spin(we_cmd, "--j", opt.j, "restrict to target spin j");
  we_cmd->add_option("--h-eval", opt.h_eval, "substitute a rational value for h in the printed values")->check(kRational);
  common(we_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run every verification suite");
  spin(verify_cmd, "--max-j", opt.max_j, "largest spin covered (default 2)");
  common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Context ctx;
  ctx.opt = opt;
  int status = 0;
  try {
    ctx.format = parse_format(opt.format);
    if (!opt.h_eval.empty()) ctx.h_eval = parse_rational(opt.h_eval);
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "irrep") status = cmd_irrep(ctx);
    else if (name == "alpha") status = cmd_alpha(ctx);
    else if (name == "cgc") status = cmd_cgc(ctx);
    else if (name == "decompose") status = cmd_decompose(ctx);
    else if (name == "tensorop") status = cmd_tensorop(ctx);
    else if (name == "wigner-eckart") status = cmd_wigner_eckart(ctx);
    else status = cmd_verify(ctx);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (opt.out.empty()) {
    std::cout << ctx.body.str();
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << opt.out << '\n';
      return kExitUsage;
    }
    f << ctx.body.str();
  }
  return status;
}
