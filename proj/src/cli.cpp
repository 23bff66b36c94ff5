#include "padicw1/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "padicw1/families.hpp"
#include "padicw1/hecke_structure.hpp"
#include "padicw1/lfunction.hpp"
#include "padicw1/linvariant.hpp"
#include "padicw1/overconvergent.hpp"
#include "padicw1/report.hpp"
#include "padicw1/verify.hpp"

namespace padicw1 {

namespace {

struct Options {
  std::string character = "kronecker:-4";
  long p = 0;
  int prec = 30;
  int guard = 5;
  int mx = 8;
  int jet = 3;
  long center = 0;
  long nmax = 1000;
  long lmax = 200;
  long up_range = 200;
  int k = 1;
  std::string kind = "1,phi";
  std::string unit_poly;
  int unit_val = 0;
  std::string unit_inv_poly;
  int unit_inv_val = 0;
  std::string unit_file;
  long embedding = 1;
  std::string check = "all";
  bool stability = false;
  std::string output;
};

struct Outcome {
  Json report;
  bool pass = true;
};

std::vector<mpq_class> parse_coefficients(const std::string& s) {
  std::vector<mpq_class> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    mpq_class q;
    if (item.empty() || q.set_str(item, 10) != 0) {
      throw PreconditionError("bad coefficient '" + item + "' in unit polynomial");
    }
    q.canonicalize();
    out.push_back(q);
  }
  if (out.size() < 2) throw PreconditionError("unit polynomial has degree < 1");
  return out;
}

// Unit data for phi and phi^-1 from flags or the JSON file; flags win.
std::pair<std::optional<PUnitData>, std::optional<PUnitData>> units(const Options& o) {
  std::optional<PUnitData> u, v;
  if (!o.unit_file.empty()) {
    std::ifstream in(o.unit_file);
    if (!in) throw PreconditionError("cannot read unit file " + o.unit_file);
    Json j;
    try {
      in >> j;
    } catch (const Json::parse_error& e) {
      throw PreconditionError("unit file " + o.unit_file + ": " + e.what());
    }
    u = unit_from_json(j);
    if (j.contains("inverse")) v = unit_from_json(j.at("inverse"));
  }
  if (!o.unit_poly.empty()) {
    u = PUnitData{parse_coefficients(o.unit_poly), o.unit_val, "command line"};
  }
  if (!o.unit_inv_poly.empty()) {
    v = PUnitData{parse_coefficients(o.unit_inv_poly), o.unit_inv_val, "command line"};
  }
  return {u, v};
}

DirichletCharacter character(const Options& o) { return DirichletCharacter::parse(o.character); }

long prime(const Options& o) {
  if (o.p == 0) throw PreconditionError("--p is required");
  require_odd_prime(o.p);
  return o.p;
}

VerifyConfig verify_config(const Options& o) {
  VerifyConfig c;
  c.phi = character(o);
  c.p = prime(o);
  c.prec = o.prec;
  c.guard = o.guard;
  c.mx = o.mx;
  c.nmax = o.nmax;
  c.up_range = std::min(o.up_range, o.nmax);
  c.lmax = o.lmax;
  c.embedding = o.embedding;
  std::tie(c.unit, c.unit_inv) = units(o);
  return c;
}

Outcome from_suite(SuiteResult s) { return Outcome{std::move(s.report), s.pass}; }

std::string term(const std::string& coeff, long n) {
  if (n == 0) return coeff;
  std::string q = n == 1 ? "q" : "q^" + std::to_string(n);
  return coeff == "1" ? q : "(" + coeff + ")" + q;
}

template <class Text>
std::string preview(long n_max, Text text) {
  std::string s;
  const long shown = std::min<long>(n_max, 10);
  for (long n = 0; n <= shown; ++n) {
    std::string c = text(n);
    if (c == "0") continue;
    if (!s.empty()) s += " + ";
    s += term(c, n);
  }
  if (s.empty()) s = "0";
  return s + " + O(q^" + std::to_string(shown + 1) + ")";
}

Outcome cmd_lp(const Options& o) {
  DirichletCharacter phi = character(o);
  LpJet jet = lp_jet(phi, prime(o), o.jet, o.prec, o.center, o.embedding);
  Json r{{"character", phi.label()}, {"p", jet.p}, {"center", jet.center},
         {"variable", "t = s - center"}, {"jet", to_json(jet.series)}};
  return {r, true};
}

Outcome cmd_zeta(const Options& o) {
  DirichletCharacter phi = character(o);
  ZetaSeries z = zeta_series(phi, prime(o), o.mx, o.prec, o.embedding);
  return {Json{{"character", phi.label()}, {"p", z.p}, {"series", to_json(z.series)}}, true};
}

Outcome cmd_linv(const Options& o) {
  DirichletCharacter phi = character(o);
  const long p = prime(o);
  require_lp_setting(phi, p);
  require_irregular(phi, p);
  auto [u, v] = units(o);
  LInvariantResult l = l_invariant(phi, p, o.prec, u);
  Json r{{"character", phi.label()},
         {"p", p},
         {"value", to_json(l.value)},
         {"root", to_json(l.root)},
         {"unit", to_json(l.unit)},
         {"embedding", o.embedding},
         {"formula", "log_p(r) / e, r the root of valuation e"}};
  if (auto d = phi.discriminant()) {
    QuadraticOrderData q = split_prime_power_generator(*d, p);
    r["generator"] = Json{{"x", q.x.get_str()}, {"y", q.y.get_str()}, {"h", q.h}};
  }
  if (v) r["value_inverse"] = to_json(l_invariant(phi.inverse(), p, o.prec, v).value);
  return {r, true};
}

Outcome cmd_qexp(const Options& o) {
  DirichletCharacter phi = character(o);
  EisensteinKind kind = parse_eisenstein_kind(o.kind);
  Json r{{"character", phi.label()}, {"k", o.k}, {"kind", to_string(kind)}, {"n_max", o.nmax}};
  if (phi.order() <= 2) {
    QExpansion<mpq_class> e = eisenstein_qexp_exact(phi, o.k, kind, o.nmax);
    Json exact = Json::array();
    for (const auto& c : e.coefficients()) exact.push_back(c.get_str());
    r["exact"] = exact;
    r["preview"] = preview(e.n_max(), [&](long n) { return e[n].get_str(); });
  } else if (o.p == 0) {
    throw PreconditionError("characters of order > 2 need --p for their values");
  }
  if (o.p != 0) {
    CharacterEmbedding emb(phi, prime(o), o.prec, o.embedding);
    QExpansion<Padic> e = eisenstein_qexp(emb, o.k, kind, o.nmax);
    r["padic"] = to_json(e);
    if (!r.contains("preview")) {
      r["preview"] = preview(e.n_max(), [&](long n) {
        return e[n].is_exact_zero() ? std::string("0") : e[n].to_string(3);
      });
    }
  }
  return {r, true};
}

std::string series_text(const TruncatedSeries<Padic>& s) {
  std::string out;
  for (int i = 0; i < s.mx(); ++i) {
    if (s[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + s[i].to_string(3) + "]";
    if (i > 0) out += i == 1 ? "X" : "X^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Outcome cmd_family(const Options& o, bool cuspidal) {
  VerifyConfig c = verify_config(o);
  CharacterEmbedding emb(c.phi, c.p, c.cap(), c.embedding);
  FamilyExpansion f;
  Json r{{"character", c.phi.label()}, {"p", c.p}, {"n_max", o.nmax}};
  if (cuspidal) {
    require_irregular(c.phi, c.p);
    LInvariantPair l = l_invariants(c.phi, c.p, c.cap(), c.unit, c.unit_inv);
    f = cuspidal_family(emb, o.nmax, l);
    r["mx"] = 2;
  } else {
    EisensteinKind kind = parse_eisenstein_kind(o.kind);
    f = lambda_eisenstein(emb, kind, o.nmax, o.mx);
    r["kind"] = to_string(kind);
    r["mx"] = o.mx;
  }
  r["family"] = to_json(f);
  r["preview"] = preview(f.n_max(), [&](long n) { return series_text(f[n]); });
  return {r, true};
}

Outcome cmd_overconvergent(const Options& o) {
  VerifyConfig c = verify_config(o);
  if (o.check == "all") return from_suite(verify_overconvergent(c));
  if (o.check != "none") throw PreconditionError("--check must be all or none");
  require_irregular(c.phi, c.p);
  CharacterEmbedding emb(c.phi, c.p, c.cap(), c.embedding);
  EigenspaceBasis b =
      eigenspace_basis(emb, c.nmax, l_invariants(c.phi, c.p, c.cap(), c.unit, c.unit_inv));
  return {Json{{"character", c.phi.label()},
               {"p", c.p},
               {"f", to_json(b.f)},
               {"f_dagger_phi_one", to_json(b.dagger_phi_one)},
               {"f_dagger_one_phi", to_json(b.dagger_one_phi)}},
          true};
}

Outcome cmd_hecke(const Options& o) {
  VerifyConfig c = verify_config(o);
  c.structure_mx = {o.mx};
  return from_suite(verify_structure(c));
}

int emit(const Options& o, const std::string& command, Outcome out, std::ostream& os,
         std::ostream& err) {
  out.report["schema"] = kSchema;
  out.report["command"] = command;
  if (!out.report.contains("pass")) out.report["pass"] = out.pass;
  const std::string text = dump(out.report);
  if (o.output.empty()) {
    os << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "error: cannot write " << o.output << "\n";
      return kExitPrecondition;
    }
    f << text;
  }
  if (!out.pass) err << command << ": some identities failed their thresholds\n";
  return out.pass ? kExitPass : kExitIdentityFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"p-adic L-functions and weight-one Eisenstein points"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file; flags override it");
  // character specs and unit polynomials contain commas
  app.get_config_formatter_base()->arrayDelimiter('\x1f');
  app.add_option("--char", o.character, "kronecker:D or mod:N:g1=e1,...,order=m")
      ->capture_default_str();
  app.add_option("--p", o.p, "odd prime");
  app.add_option("--prec", o.prec, "p-adic digits")->capture_default_str();
  app.add_option("--guard", o.guard, "digits withheld from thresholds")->capture_default_str();
  app.add_option("--mx", o.mx, "truncation X^Mx")->capture_default_str();
  app.add_option("--jet", o.jet, "order of the L_p jet")->capture_default_str();
  app.add_option("--s", o.center, "center of the L_p jet")->capture_default_str();
  app.add_option("--nmax", o.nmax, "last q-expansion coefficient")->capture_default_str();
  app.add_option("--lmax", o.lmax, "largest prime for the linear relation")
      ->capture_default_str();
  app.add_option("--up-range", o.up_range, "U_p identities on n <= this")
      ->capture_default_str();
  app.add_option("--k", o.k, "weight")->capture_default_str();
  app.add_option("--kind", o.kind, "1,phi or phi,1")->capture_default_str();
  app.add_option("--unit-poly", o.unit_poly, "c0,c1,...,cd of the p-unit for phi");
  app.add_option("--unit-val", o.unit_val, "valuation of the root to use");
  app.add_option("--unit-inv-poly", o.unit_inv_poly, "the same for phi^-1");
  app.add_option("--unit-inv-val", o.unit_inv_val, "valuation for phi^-1");
  app.add_option("--unit-file", o.unit_file, "JSON unit data");
  app.add_option("--embedding", o.embedding, "root of unity index for non-quadratic phi")
      ->capture_default_str();
  app.add_option("--check", o.check, "all or none")->capture_default_str();
  app.add_flag("--stability", o.stability, "verify all: rerun at prec + 10");
  app.add_option("--output", o.output, "write the report here instead of stdout");

  auto* lp = app.add_subcommand("lp", "jet of L_p(phi omega, s)");
  auto* zeta = app.add_subcommand("zeta-series", "zeta_phi(X) mod X^Mx");
  auto* linv = app.add_subcommand("linv", "the L-invariant");
  auto* qexp = app.add_subcommand("qexp", "classical q-expansions");
  qexp->require_subcommand(1);
  auto* qexp_eis = qexp->add_subcommand("eisenstein", "E_k(1,phi) or E_k(phi,1)");
  auto* family = app.add_subcommand("family", "Lambda-adic families");
  family->require_subcommand(1);
  auto* fam_cusp = family->add_subcommand("cuspidal", "the cuspidal family mod X^2");
  auto* fam_eis = family->add_subcommand("eisenstein", "an Eisenstein family mod X^Mx");
  auto* oc = app.add_subcommand("overconvergent", "the generalized eigenspace of f");
  auto* hecke = app.add_subcommand("hecke-structure", "models of the Hecke algebras");
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* v_gross = verify->add_subcommand("gross", "trivial zero and Gross' formula");
  auto* v_rel = verify->add_subcommand("relation", "the linear relation mod X^2");
  auto* v_fg = verify->add_subcommand("ferrero-greenberg", "simple zero of zeta_phi");
  auto* v_int = verify->add_subcommand("interpolation", "L_p against Bernoulli numbers");
  auto* v_all = verify->add_subcommand("all", "every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitPrecondition;
  }

  try {
    if (*lp) return emit(o, "lp", cmd_lp(o), out, err);
    if (*zeta) return emit(o, "zeta-series", cmd_zeta(o), out, err);
    if (*linv) return emit(o, "linv", cmd_linv(o), out, err);
    if (*qexp_eis) return emit(o, "qexp eisenstein", cmd_qexp(o), out, err);
    if (*fam_cusp) return emit(o, "family cuspidal", cmd_family(o, true), out, err);
    if (*fam_eis) return emit(o, "family eisenstein", cmd_family(o, false), out, err);
    if (*oc) return emit(o, "overconvergent", cmd_overconvergent(o), out, err);
    if (*hecke) return emit(o, "hecke-structure", cmd_hecke(o), out, err);
    if (*v_gross) return emit(o, "verify gross", from_suite(verify_gross(verify_config(o))), out, err);
    if (*v_rel) {
      return emit(o, "verify relation", from_suite(verify_relation(verify_config(o))), out, err);
    }
    if (*v_fg) {
      return emit(o, "verify ferrero-greenberg",
                  from_suite(verify_ferrero_greenberg(verify_config(o))), out, err);
    }
    if (*v_int) {
      return emit(o, "verify interpolation", from_suite(verify_interpolation(verify_config(o))),
                  out, err);
    }
    if (*v_all) {
      return emit(o, "verify all", from_suite(verify_all(verify_config(o), o.stability)), out,
                  err);
    }
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const std::invalid_argument& e) {
    err << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::out_of_range& e) {
    err << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecision;
  }
  err << "no command given\n";
  return kExitPrecondition;
}

}  // namespace padicw1
