#include "padicw1/verify.hpp"

#include <algorithm>
#include <map>

#include "padicw1/families.hpp"
#include "padicw1/hecke_structure.hpp"
#include "padicw1/lfunction.hpp"
#include "padicw1/overconvergent.hpp"

namespace padicw1 {

namespace {

class Claims {
 public:
  explicit Claims(SuiteResult& r) : r_(r) { r_.report["claims"] = Json::array(); }

  void add(const std::string& name, int digits, int threshold, Json extra = Json::object()) {
    Json c = claim(name, digits, threshold);
    for (auto& [k, v] : extra.items()) c[k] = v;
    if (digits < threshold) r_.pass = false;
    r_.report["claims"].push_back(std::move(c));
  }

  // A yes/no claim.
  void add_bool(const std::string& name, bool ok, Json extra = Json::object()) {
    Json c{{"name", name}, {"pass", ok}};
    for (auto& [k, v] : extra.items()) c[k] = v;
    if (!ok) r_.pass = false;
    r_.report["claims"].push_back(std::move(c));
  }

 private:
  SuiteResult& r_;
};

void finish(SuiteResult& r) { r.report["pass"] = r.pass; }

Json point_json(const VerifyConfig& c) {
  return Json{{"character", c.phi.label()}, {"p", c.p}, {"prec", c.prec}, {"guard", c.guard}};
}

LInvariantPair pair_for(const VerifyConfig& c) {
  return l_invariants(c.phi, c.p, c.cap(), c.unit, c.unit_inv);
}

void require_point(const VerifyConfig& c) {
  require_lp_setting(c.phi, c.p);
  require_irregular(c.phi, c.p);
  if (c.prec <= 2 * c.guard) throw PreconditionError("precision must exceed twice the guard");
}

}  // namespace

SuiteResult verify_gross(const VerifyConfig& c) {
  require_point(c);
  SuiteResult r;
  r.report = point_json(c);
  Claims claims(r);
  LpJet jet = lp_jet(c.phi, c.p, 2, c.prec, 0, c.embedding);
  claims.add("L_p(phi omega, 0) = 0", jet.series[0].valuation_bound(), c.strict(),
             {{"value", to_json(jet.series[0])}});
  GrossReport g = gross_check(c.phi, c.p, c.prec, c.unit, c.embedding);
  claims.add("L_p'(phi omega, 0) = -L(phi) L(phi, 0)", g.digits, c.strict(),
             {{"lhs", to_json(g.lhs)}, {"rhs", to_json(g.rhs)}});
  r.values = {{"L_p(0)", jet.series[0]}, {"L_p'(0)", g.lhs}, {"-L(phi) L(phi,0)", g.rhs}};
  finish(r);
  return r;
}

SuiteResult verify_ferrero_greenberg(const VerifyConfig& c) {
  require_point(c);
  SuiteResult r;
  r.report = point_json(c);
  r.report["mx"] = c.mx;
  Claims claims(r);
  ZetaSeries z = zeta_series(c.phi, c.p, c.mx, c.prec, c.embedding);
  FerreroGreenbergReport fg = ferrero_greenberg_check(z, c.strict());
  claims.add("zeta(0) = 0", fg.zeta0.valuation_bound(), c.strict(),
             {{"value", to_json(fg.zeta0)}});
  const int v = fg.leading.valuation_bound();
  claims.add_bool("ord_p zeta'(0) < threshold", fg.ord_x == 1 && v < c.strict(),
                  {{"valuation", v}, {"threshold", c.strict()}, {"value", to_json(fg.leading)}});
  r.report["ord_x"] = fg.ord_x;
  r.report["series"] = to_json(z.series);
  r.values = {{"zeta(0)", z.series[0]}, {"zeta'(0)", z.series[1]}};
  r.invariants = {{"ord_X zeta", fg.ord_x}};
  finish(r);
  return r;
}

SuiteResult verify_interpolation(const VerifyConfig& c) {
  require_lp_setting(c.phi, c.p);
  SuiteResult r;
  r.report = point_json(c);
  Claims claims(r);
  CharacterEmbedding emb(c.phi, c.p, c.cap(), c.embedding);
  for (int j = 1; j <= 3; ++j) {
    const int k = 1 + j * static_cast<int>(c.p - 1);
    Padic lhs = lp_value(c.phi, c.p, 1 - k, c.prec, c.embedding);
    Padic euler = Padic::one(c.p, c.cap()) - Padic::from_integer(c.p, c.p, c.cap()).pow(k - 1);
    Padic rhs = euler * classical_L_nonpositive(emb, k);
    claims.add("L_p(phi omega, 1 - " + std::to_string(k) + ") = (1 - p^(k-1)) L(phi, 1 - k)",
               agreement(lhs, rhs), c.loose(),
               {{"k", k}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
    r.values.emplace_back("L_p(1-" + std::to_string(k) + ")", lhs);
  }
  finish(r);
  return r;
}

SuiteResult verify_relation(const VerifyConfig& c) {
  require_point(c);
  SuiteResult r;
  r.report = point_json(c);
  r.report["lmax"] = c.lmax;
  Claims claims(r);
  CharacterEmbedding emb(c.phi, c.p, c.cap(), c.embedding);
  LInvariantPair l = pair_for(c);
  RelationReport rel = verify_linear_relation(emb, l, c.lmax);
  Json rows = Json::array();
  for (const auto& row : rel.rows) {
    Json j{{"ell", row.ell},
           {"linear", digits_json(row.linear)},
           {"constant", digits_json(row.constant)}};
    if (row.quadratic >= 0) j["quadratic"] = digits_json(row.quadratic);
    rows.push_back(std::move(j));
  }
  r.report["rows"] = rows;
  claims.add("(L + L') a_l(F)'(0) = L' a_l(E_1phi)'(0) + L a_l(E_phi1)'(0), all l <= lmax",
             rel.min_digits, c.loose(), {{"primes", rel.rows.size()}});
  r.report["l_phi"] = to_json(l.l_phi);
  r.report["l_phi_inv"] = to_json(l.l_phi_inv);
  r.values = {{"L(phi)", l.l_phi}, {"L(phi^-1)", l.l_phi_inv}};
  FamilyExpansion f = cuspidal_family(emb, std::min<long>(c.lmax, 50), l);
  for (long n = 1; n <= f.n_max(); ++n) r.values.emplace_back("a_" + std::to_string(n) + "(F)'(0)", f[n][1]);
  finish(r);
  return r;
}

SuiteResult verify_overconvergent(const VerifyConfig& c) {
  require_point(c);
  SuiteResult r;
  r.report = point_json(c);
  Claims claims(r);
  CharacterEmbedding emb(c.phi, c.p, c.cap(), c.embedding);
  LInvariantPair l = pair_for(c);
  const long basis_nmax = std::max(c.nmax, c.up_range * c.p * c.p);
  EigenspaceBasis b = eigenspace_basis(emb, basis_nmax, l);
  r.report["basis_nmax"] = basis_nmax;
  for (const auto& check : eigenspace_checks(b, emb, c.up_range, 50)) {
    claims.add(check.name, check.digits, c.loose(), {{"range", check.detail}});
  }

  // the decomposition is stated on 0..nmax
  EigenspaceBasis cut;
  auto head = [&](const QExpansion<Padic>& q) {
    std::vector<Padic> v(q.coefficients().begin(),
                         q.coefficients().begin() + static_cast<long>(c.nmax) + 1);
    return QExpansion<Padic>(std::move(v), q.label());
  };
  cut.f = head(b.f);
  cut.dagger_phi_one = head(b.dagger_phi_one);
  cut.dagger_one_phi = head(b.dagger_one_phi);
  cut.l = b.l;
  cut.l0 = b.l0;
  IdentityCheck d = classical_decomposition(cut, emb);
  claims.add(d.name, d.digits, c.loose(), {{"range", d.detail}});

  for (EisensteinKind kind : {EisensteinKind::kPhiOne, EisensteinKind::kOnePhi}) {
    QExpansion<Padic> dual = f_dagger_from_families(emb, kind, c.nmax, l);
    const QExpansion<Padic>& closed =
        kind == EisensteinKind::kPhiOne ? b.dagger_phi_one : b.dagger_one_phi;
    claims.add(closed.label() + ": closed form = scaled d/dX (family - F)",
               agreement_range(dual, closed, 0, c.nmax), c.loose(),
               {{"range", "0 <= n <= " + std::to_string(c.nmax)}});
  }

  CuspidalKernel k = cuspidal_kernel(b, c.p, 50);
  claims.add_bool("cusp forms killed by U_p - 1 in the span: dimension 1", k.dimension == 1,
                  {{"dimension", k.dimension}});
  claims.add("that kernel is a multiple of f", k.multiple_of_f_digits, c.loose());

  Json preview = Json::object();
  const long shown = std::min<long>(c.nmax, 12);
  for (const auto* q : {&b.dagger_phi_one, &b.dagger_one_phi}) {
    Json coeffs = Json::array();
    for (long n = 0; n <= shown; ++n) coeffs.push_back(to_json((*q)[n]));
    preview[q->label()] = coeffs;
  }
  r.report["preview"] = preview;
  for (long n = 0; n <= std::min<long>(c.nmax, 100); ++n) {
    r.values.emplace_back("a_" + std::to_string(n) + "(f_dagger(phi,1))", b.dagger_phi_one[n]);
    r.values.emplace_back("a_" + std::to_string(n) + "(f_dagger(1,phi))", b.dagger_one_phi[n]);
  }
  r.invariants = {{"cuspidal kernel dimension", k.dimension}};
  finish(r);
  return r;
}

SuiteResult verify_structure(const VerifyConfig& c) {
  require_point(c);
  SuiteResult r;
  r.report = point_json(c);
  Claims claims(r);
  LInvariantPair l = pair_for(c);
  const long p = c.p;
  const int cap = c.cap();
  const std::map<std::string, std::pair<int, int>> expected{
      {"T", {3, 2}}, {"T'", {3, 1}}, {"Tord", {2, 1}}};
  Json models = Json::array();
  for (int mx : c.structure_mx) {
    const SubalgebraModel ms[] = {build_T(p, cap, mx), build_Tprime(l, mx), build_Tord(p, cap, mx)};
    for (const auto& m : ms) {
      FiberReport f = fiber_and_socle(m);
      const auto [fiber, socle] = expected.at(m.name());
      const int closure = m.closure_digits();
      Json socle_basis = Json::array();
      for (const auto& s : f.socle) socle_basis.push_back(to_json(s));
      models.push_back(Json{{"model", m.name()},
                            {"mx", mx},
                            {"dimension", f.dimension},
                            {"fiber_dim", f.fiber_dim},
                            {"socle_dim", f.socle_dim},
                            {"gorenstein", f.gorenstein},
                            {"x_regular", f.x_regular},
                            {"closure_digits", digits_json(closure)},
                            {"socle_basis", socle_basis}});
      const std::string tag = m.name() + " at Mx = " + std::to_string(mx);
      claims.add_bool(tag + ": (fiber, socle) = (" + std::to_string(fiber) + ", " +
                          std::to_string(socle) + ")",
                      f.fiber_dim == fiber && f.socle_dim == socle && f.x_regular,
                      {{"fiber_dim", f.fiber_dim}, {"socle_dim", f.socle_dim}});
      claims.add(tag + ": closed under multiplication", closure, c.loose());
      r.invariants.emplace_back(tag + " socle", f.socle_dim);
    }
    claims.add("Y (Y + L X)(Y - L' X) = 0 at Mx = " + std::to_string(mx),
               y_cubic_digits(l, mx), c.loose());
    const SubalgebraModel tp = build_Tprime(l, mx);
    const int gen = generated_dimension(
        tp, {diagonal_monomial(3, mx, Padic::one(p, cap), 1), y_element(l, mx)});
    claims.add_bool("1, X, Y generate T' at Mx = " + std::to_string(mx),
                    gen == tp.dimension(), {{"generated", gen}, {"dimension", tp.dimension()}});
  }
  r.report["models"] = models;

  UpReport up = up_structure(l, p);
  claims.add("(U_p - 1)^2 = 0 in the fiber of T at Mx = 2", up.square_digits, c.loose());
  claims.add_bool("T' + (U_p - 1) T' = T at Mx = 2", up.span_dim == up.t_dim,
                  {{"span_dim", up.span_dim}, {"t_dim", up.t_dim}});

  CharacterEmbedding emb(c.phi, p, cap, c.embedding);
  ZetaSeries z = zeta_series(c.phi, p, c.mx, c.prec, c.embedding);
  CongruenceReport cm = congruence_module(z, l.l_phi, classical_L_nonpositive(emb, 1), c.strict());
  claims.add_bool("J_eis = (X)", cm.j_eis_is_x, {{"dim", cm.j_eis_dim}, {"mx", cm.mx}});
  claims.add_bool("length Lambda/J_eis = length Lambda/(zeta) = 1",
                  cm.length == 1 && cm.zeta_ord == 1,
                  {{"length", cm.length}, {"ord_x_zeta", cm.zeta_ord}});
  claims.add("u(0) = zeta'(0) = L(phi) L(phi, 0) / log_p(1 + p)", cm.u0_digits, c.loose(),
             {{"u0", to_json(cm.u0)}, {"expected", to_json(cm.u0_expected)}});
  claims.add_bool("Ann(ker pi_eis) = ker pi_cusp, mapping onto (X)",
                  cm.annihilator_is_kernel && cm.annihilator_maps_onto_x);
  r.values = {{"u(0)", cm.u0}};
  r.invariants.emplace_back("congruence length", cm.length);
  finish(r);
  return r;
}

namespace {

SuiteResult run_suites(const VerifyConfig& c) {
  SuiteResult all;
  all.report = point_json(c);
  const std::pair<const char*, SuiteResult (*)(const VerifyConfig&)> suites[] = {
      {"gross", verify_gross},
      {"ferrero_greenberg", verify_ferrero_greenberg},
      {"interpolation", verify_interpolation},
      {"relation", verify_relation},
      {"overconvergent", verify_overconvergent},
      {"structure", verify_structure}};
  for (const auto& [name, fn] : suites) {
    SuiteResult s = fn(c);
    all.pass = all.pass && s.pass;
    all.report["suites"][name] = std::move(s.report);
    for (auto& v : s.values) all.values.push_back(std::move(v));
    for (auto& v : s.invariants) all.invariants.push_back(std::move(v));
  }
  return all;
}

}  // namespace

SuiteResult verify_all(const VerifyConfig& c, bool stability) {
  SuiteResult all = run_suites(c);
  if (stability) {
    VerifyConfig hi = c;
    hi.prec += 10;
    SuiteResult again = run_suites(hi);
    int worst = Padic::kExact;
    int shortfall = 0;
    Json mismatches = Json::array();
    for (size_t i = 0; i < all.values.size(); ++i) {
      const Padic& a = all.values[i].second;
      const Padic& b = again.values.at(i).second;
      const int shared = std::min(a.absolute_precision(), b.absolute_precision());
      const int got = agreement(a, b);
      worst = std::min(worst, got);
      if (got < shared) {
        ++shortfall;
        mismatches.push_back(Json{{"value", all.values[i].first},
                                  {"digits", digits_json(got)},
                                  {"shared", digits_json(shared)}});
      }
    }
    bool invariants_equal = all.invariants == again.invariants;
    Json st{{"prec", hi.prec},
            {"values_compared", all.values.size()},
            {"least_agreement", digits_json(worst)},
            {"mismatches", mismatches},
            {"invariants_equal", invariants_equal},
            {"higher_precision_pass", again.pass},
            {"pass", shortfall == 0 && invariants_equal && again.pass}};
    all.pass = all.pass && st["pass"].get<bool>();
    all.report["stability"] = st;
  }
  all.report["pass"] = all.pass;
  return all;
}

}  // namespace padicw1
