#include "cli.hpp"

#include "liecas/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

namespace liecas::cli {

namespace {

class UsageError : public Error {
public:
  using Error::Error;
};

struct Options {
  std::string verb;
  std::string file;
  std::string builtin;
  std::string algebra, lsa, form, map, alpha, ideal;
  std::string specialize;
  bool json = false;
  int expect_index = -1;
  std::vector<int> criteria;
  std::string override_file, external_file;
  bool serial = false;
  std::string dump_name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Assignment parse_assignment(const std::string& text) {
  Assignment out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--specialize expects k=v, got '" + item + "'");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    try {
      Rational q(value);
      q.canonicalize();
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      out[key] = q;
    } catch (const std::invalid_argument&) {
      throw UsageError("--specialize: '" + value + "' is not a rational number");
    }
  }
  return out;
}

class Session {
public:
  explicit Session(const Options& o) : opt(o) {}

  void load() {
    if (!opt.file.empty()) {
      doc_ = parse_source(read_file(opt.file));
      builtin_ = false;
      for (const auto& issue : validate_document(doc_))
        fail("load." + issue.object, "line " + std::to_string(issue.line) + ": " + issue.message);
    } else if (!opt.builtin.empty()) {
      doc_ = Dataset::instance().document();
      builtin_ = true;
    } else {
      throw UsageError(opt.verb + ": give a source file or --builtin <name>");
    }
  }

  // Object named by its verb flag, falling back to --builtin.
  std::string pick(const std::string& flag_value, const std::string& flag) const {
    if (!flag_value.empty()) return flag_value;
    if (!opt.builtin.empty()) return opt.builtin;
    throw UsageError(opt.verb + ": missing " + flag);
  }

  LieAlgebra algebra(const std::string& name) {
    const auto* a = doc_.algebra(name);
    if (!a && builtin_ && name.rfind("L8_", 0) == 0) reconstruct_L8(name);
    if (!a) throw UsageError("no algebra named " + name);
    note(name);
    return specialize(a->algebra, assign);
  }
  LSA lsa(const std::string& name) {
    const auto* a = doc_.lsa(name);
    if (!a) throw UsageError("no lsa named " + name);
    note(name);
    return specialize(a->lsa, assign);
  }
  const NamedForm& form(const std::string& name) {
    const auto* f = doc_.form(name);
    if (!f) throw UsageError("no form named " + name);
    note(name);
    return *f;
  }
  AltForm form_value(const std::string& name) { return specialize(form(name).form, assign); }
  const NamedMap& map(const std::string& name) {
    const auto* m = doc_.map(name);
    if (!m) throw UsageError("no map named " + name);
    note(name);
    return *m;
  }
  Cocycle2 alpha(const std::string& name) {
    const auto* a = doc_.alpha(name);
    if (!a) throw UsageError("no alpha named " + name);
    note(name);
    std::map<int, RatFunc> sub;
    for (const auto& [k, v] : assign) sub[intern_variable(k)] = RatFunc(v);
    return a->alpha.substitute(sub);
  }
  const Document& doc() const { return doc_; }

  void line(const std::string& s) { lines.push_back(s); }
  void add(Claim c) { claims.push_back(std::move(c)); }
  void pass(const std::string& id, const std::string& w = {}) { add({id, ClaimStatus::Pass, w}); }
  void fail(const std::string& id, const std::string& w) { add({id, ClaimStatus::Fail, w}); }
  void report(const std::string& id, const std::string& w) { add({id, ClaimStatus::Reported, w}); }
  void verdict(const std::string& id, bool ok, const std::string& w_fail, const std::string& w_ok = {}) {
    ok ? pass(id, w_ok) : fail(id, w_fail);
    line(std::string(ok ? "ok   " : "FAIL ") + id + (ok ? (w_ok.empty() ? "" : ": " + w_ok) : ": " + w_fail));
  }

  bool failed() const {
    return std::any_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; });
  }

  const Options& opt;
  Assignment assign;
  std::vector<std::string> lines;
  std::vector<Claim> claims;

private:
  void note(const std::string& name) {
    if (!builtin_ || assign.empty() || !noted_.insert(name).second) return;
    for (const auto& w : check_constraints(name, assign)) {
      add({"warn." + w.entry, ClaimStatus::Warning, w.message});
      line("warning: " + w.entry + ": " + w.message);
    }
  }

  Document doc_;
  bool builtin_ = false;
  std::set<std::string> noted_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ------------------------------------------------------------------ verbs

void verb_check(Session& s) {
  if (s.opt.file.empty()) throw UsageError("check: missing source file");
  Document doc = parse_source(read_file(s.opt.file));
  for (auto& a : doc.algebras) a.algebra = specialize(a.algebra, s.assign);
  for (auto& l : doc.lsas) l.lsa = specialize(l.lsa, s.assign);
  auto issues = validate_document(doc);
  std::map<std::string, std::vector<const ValidationIssue*>> by_object;
  for (const auto& i : issues) by_object[i.object].push_back(&i);

  std::vector<std::pair<std::string, std::string>> objects;
  for (const auto& a : doc.algebras) objects.emplace_back("algebra", a.name);
  for (const auto& a : doc.lsas) objects.emplace_back("lsa", a.name);
  for (const auto& a : doc.maps) objects.emplace_back("map", a.name);
  for (const auto& a : doc.forms) objects.emplace_back("form", a.name);
  for (const auto& a : doc.alphas) objects.emplace_back("alpha", a.name);
  for (const auto& a : doc.cochains) objects.emplace_back("cochain", a.name);
  for (const auto& [kind, name] : objects) {
    auto it = by_object.find(name);
    if (it == by_object.end()) {
      s.pass("check." + name);
      s.line("ok   " + kind + " " + name);
      continue;
    }
    std::string w;
    for (const auto* i : it->second)
      w += (w.empty() ? "" : "; ") + std::string("line ") + std::to_string(i->line) + ": " + i->message;
    s.fail("check." + name, w);
    s.line("FAIL " + kind + " " + name + ": " + w);
    by_object.erase(it);
  }
  for (const auto& [name, list] : by_object)
    for (const auto* i : list) {
      s.fail("check." + name, "line " + std::to_string(i->line) + ": " + i->message);
      s.line("FAIL " + name + ": line " + std::to_string(i->line) + ": " + i->message);
    }
  s.line("objects: " + std::to_string(objects.size()) + ", issues: " + std::to_string(issues.size()));
}

void verb_cocycles(Session& s) {
  std::string name = s.pick(s.opt.algebra, "--algebra");
  LieAlgebra g = s.algebra(name);
  auto fam = two_cocycle_family(g);
  s.line("dim Z2 = " + std::to_string(fam.size()));
  for (std::size_t i = 0; i < fam.size(); ++i) s.line("  " + fam.symbols[i] + ": " + fam.basis[i].str());
  s.line("general = " + fam.general.str());
  s.report("cocycles." + name + ".z2_dim", std::to_string(fam.size()));
  std::size_t h2 = h2_dim(g);
  s.line("dim H2 = " + std::to_string(h2));
  s.report("cocycles." + name + ".h2_dim", std::to_string(h2));
  if (g.dim() % 2 == 0) {
    RatFunc pf = generic_nondegeneracy(fam);
    s.line("generic Pfaffian = " + pf.str());
    s.report("cocycles." + name + ".generic_pfaffian", pf.str());
  }
  if (!s.opt.form.empty()) {
    AltForm w = s.form_value(s.opt.form);
    auto c = fam.coordinates_of(w);
    std::string coords;
    if (c)
      for (std::size_t i = 0; i < c->size(); ++i)
        if (!(*c)[i].is_zero()) coords += (coords.empty() ? "" : ", ") + fam.symbols[i] + " = " + (*c)[i].str();
    s.verdict("cocycles." + name + ".contains." + s.opt.form, c.has_value(), w.str() + " is not closed", coords);
  }
}

void verb_index(Session& s) {
  std::string name = s.pick(s.opt.algebra, "--algebra");
  auto idx = lie_index(s.algebra(name));
  s.line("index = " + std::to_string(idx));
  if (s.opt.expect_index >= 0) {
    bool ok = idx == static_cast<std::size_t>(s.opt.expect_index);
    s.add({"index." + name, ok ? ClaimStatus::Pass : ClaimStatus::Fail,
           "index = " + std::to_string(idx) + (ok ? "" : ", expected " + std::to_string(s.opt.expect_index))});
  } else {
    s.report("index." + name, "index = " + std::to_string(idx));
  }
}

void verb_symplectic(Session& s) {
  std::string name = s.pick(s.opt.algebra, "--algebra");
  LieAlgebra g = s.algebra(name);
  if (g.dim() % 2 != 0) {
    s.line("odd dimension: no symplectic form");
    s.report("symplectic." + name, "odd dimension");
  } else {
    auto fam = two_cocycle_family(g);
    RatFunc pf = generic_nondegeneracy(fam);
    s.line("symplectic: " + yes_no(!pf.is_zero()) + (pf.is_zero() ? "" : " (generic Pfaffian " + pf.str() + ")"));
    s.report("symplectic." + name, pf.is_zero() ? "no nondegenerate cocycle" : "generic Pfaffian " + pf.str());
  }
  auto idx = lie_index(g);
  s.line("frobenius: " + yes_no(idx == 0) + " (index " + std::to_string(idx) + ")");
  s.report("frobenius." + name, "index = " + std::to_string(idx));

  if (!s.opt.form.empty()) {
    AltForm w = s.form_value(s.opt.form);
    std::string base = "symplectic." + name + "." + s.opt.form;
    AltForm dw = ce_d(g, w);
    s.verdict(base + ".closed", dw.is_zero(), "d omega = " + dw.str());
    s.verdict(base + ".nondegenerate", is_nondegenerate(g.dim(), w), "degenerate");
    auto prim = find_primitive(g, w);
    s.line("exact: " + yes_no(prim.has_value()) + (prim ? " (primitive " + prim->str() + ")" : ""));
    s.report(base + ".exact", prim ? "primitive " + prim->str() : "not exact");
  }
}

std::vector<Vec> parse_ideal(const std::string& text, std::size_t dim, const std::vector<std::string>& vars) {
  std::vector<Vec> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) gens.push_back(parse_vector_text(item, dim, vars));
  if (gens.empty()) throw UsageError("--ideal is empty");
  return gens;
}

void verb_reduce(Session& s) {
  std::string name = s.pick(s.opt.algebra, "--algebra");
  if (s.opt.form.empty()) throw UsageError("reduce: missing --form");
  if (s.opt.ideal.empty()) throw UsageError("reduce: missing --ideal");
  LieAlgebra g = s.algebra(name);
  AltForm w = s.form_value(s.opt.form);
  Subspace j = Subspace::span(g.dim(), parse_ideal(s.opt.ideal, g.dim(), g.params()));
  auto cls = classify_ideal(g, w, j);
  std::string base = "reduce." + name;
  s.verdict(base + ".ideal", cls.is_ideal, "<" + s.opt.ideal + "> is not an ideal");
  s.verdict(base + ".lagrangian", cls.lagrangian,
            std::string(cls.isotropic ? "isotropic but not maximal" : "not isotropic"));
  if (!cls.is_ideal || !cls.lagrangian) return;
  auto red = lagrangian_reduction(g, w, j);
  std::string comp;
  for (auto i : red.complement) comp += (comp.empty() ? "e" : ", e") + std::to_string(i + 1);
  s.line("quotient basis: " + comp);
  s.line(print_lsa(name + "_quotient", red.quotient));
  auto defects = associator_defects(red.quotient);
  s.verdict(base + ".quotient_lsa", defects.empty(), defects.empty() ? "" : defects.front().describe());
}

void verb_extend(Session& s) {
  std::string name = s.pick(s.opt.lsa, "--lsa");
  LSA a = s.lsa(name);
  Cocycle2 alpha = s.opt.alpha.empty() ? Cocycle2(a.dim()) : s.alpha(s.opt.alpha);
  std::string base = "extend." + name;
  ExtensionResult r;
  try {
    r = lagrangian_extension(a, alpha);
  } catch (const ValidationError& e) {
    s.verdict(base + ".rho_cocycle", false, e.what());
    return;
  }
  s.verdict(base + ".rho_cocycle", true, "");
  s.verdict(base + ".lagrangian_cocycle", r.lagrangian_cocycle, "cyclic condition fails");
  auto jd = jacobi_defects(r.total);
  s.verdict(base + ".jacobi", jd.empty(), jd.empty() ? "" : jd.front().describe());
  s.verdict(base + ".omega0_closed", r.omega_closed, "d omega0 != 0");
  s.line(print_algebra(name + "_ext", r.total));
  s.line("omega0 = " + r.omega0.str());
}

void verb_cohomology(Session& s) {
  std::string name = s.pick(s.opt.lsa, "--lsa");
  auto r = extension_cohomology(s.lsa(name));
  std::string base = "cohomology." + name;
  s.line("Z2_rho = " + std::to_string(r.z2) + ", B2_rho = " + std::to_string(r.b2) + ", H2_rho = " +
         std::to_string(r.h2));
  s.line("Z2_L = " + std::to_string(r.z2_lag) + ", B2_L = " + std::to_string(r.b2_lag) + ", H2_L = " +
         std::to_string(r.h2_lag) + ", kappa_L = " + std::to_string(r.kappa));
  s.report(base + ".h2", std::to_string(r.h2));
  s.report(base + ".h2_lagrangian", std::to_string(r.h2_lag));
  s.report(base + ".kappa", std::to_string(r.kappa));
  if (!r.degeneration.empty()) {
    std::string d;
    for (const auto& p : r.degeneration) d += (d.empty() ? "" : ", ") + p.str();
    s.line("ranks may drop where these vanish: " + d);
    s.report(base + ".degeneration", d);
  }
}

void verb_transport(Session& s) {
  std::string name = s.pick(s.opt.map, "--map");
  const NamedMap& nm = s.map(name);
  LinMap m = specialize(nm.matrix, s.assign);
  LieAlgebra from = s.algebra(nm.from), to = s.algebra(nm.to);
  std::string base = "transport." + name;
  RatFunc det = determinant(m);
  s.verdict(base + ".invertible", !det.is_zero(), "det = 0", "det = " + det.str());
  if (det.is_zero()) return;
  auto defects = check_homomorphism(m, from, to);
  s.verdict(base + ".isomorphism", defects.empty(),
            defects.empty() ? "" : std::to_string(defects.size()) + " defects, first " + defects.front().describe());
  s.line(print_algebra(nm.from + "_transported", transport(from, m)));
  if (s.opt.form.empty()) return;
  const NamedForm& nf = s.form(s.opt.form);
  AltForm w = specialize(nf.form, s.assign);
  AltForm moved;
  const LieAlgebra* on = nullptr;
  std::string where;
  if (nf.on == nm.to) {
    moved = pullback_form(m, w);
    on = &from;
    where = nm.from;
  } else if (nf.on == nm.from) {
    moved = pushforward_form(m, w);
    on = &to;
    where = nm.to;
  } else {
    throw UsageError("form " + nf.name + " lives on " + nf.on + ", not on " + nm.from + " or " + nm.to);
  }
  s.line("form on " + where + " = " + moved.str());
  s.report(base + ".form", moved.str());
  AltForm dw = ce_d(*on, moved);
  s.verdict(base + ".form_closed", dw.is_zero(), "d omega = " + dw.str());
  s.verdict(base + ".form_nondegenerate", is_nondegenerate(on->dim(), moved), "degenerate");
}

void verb_dump(Session& s) {
  const auto& ds = Dataset::instance();
  if (!ds.info(s.opt.dump_name) && s.opt.dump_name.rfind("L8_", 0) == 0) reconstruct_L8(s.opt.dump_name);
  if (!ds.info(s.opt.dump_name)) throw UsageError("no built-in named " + s.opt.dump_name);
  if (!s.assign.empty())
    for (const auto& w : check_constraints(s.opt.dump_name, s.assign))
      s.add({"warn." + w.entry, ClaimStatus::Warning, w.message});
  s.line(ds.dump(s.opt.dump_name));
}

std::string pad(const std::string& s, std::size_t n) { return s.size() >= n ? s : s + std::string(n - s.size(), ' '); }

void verb_suite(Session& s) {
  SuiteOptions so;
  so.specialize = s.assign;
  so.parallel = !s.opt.serial;
  if (!s.opt.override_file.empty()) so.overrides = parse_source(read_file(s.opt.override_file));
  if (!s.opt.external_file.empty()) so.external = parse_source(read_file(s.opt.external_file));

  std::vector<Claim> claims;
  std::vector<CriterionResult> criteria;
  if (s.opt.criteria.empty()) {
    auto rep = run_suite(so);
    claims = std::move(rep.claims);
    criteria = std::move(rep.criteria);
  } else {
    for (int n : s.opt.criteria) {
      if (n < 1 || n > kCriterionCount) throw UsageError("no criterion " + std::to_string(n));
      auto c = run_criterion(n, so);
      CriterionResult cr{n, criterion_title(n), c.size(), 0};
      for (const auto& x : c) cr.failures += x.status == ClaimStatus::Fail;
      criteria.push_back(cr);
      claims.insert(claims.end(), c.begin(), c.end());
    }
    auto extra = specialization_claims(so);
    claims.insert(claims.end(), extra.begin(), extra.end());
    std::stable_sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  }
  for (const auto& c : claims) {
    s.add(c);
    s.line(pad(status_name(c.status), 9) + c.id + (c.witness.empty() ? "" : "  " + c.witness));
  }
  s.line("");
  std::size_t ok = 0;
  for (const auto& c : criteria) {
    ok += c.passed();
    std::ostringstream l;
    l << "criterion " << std::setw(2) << c.number << "  " << (c.passed() ? "PASS" : "FAIL") << "  " << c.title << " ("
      << c.claims << " claims, " << c.failures << " failed)";
    s.line(l.str());
  }
  s.line("paper-suite: " + std::to_string(ok) + " of " + std::to_string(criteria.size()) + " criteria pass");
}

void emit(const Session& s, std::ostream& out, int code) {
  auto claims = s.claims;
  std::stable_sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  if (!s.opt.json) {
    for (const auto& l : s.lines) out << l << "\n";
    return;
  }
  nlohmann::ordered_json j;
  j["verb"] = s.opt.verb;
  j["exit_code"] = code;
  auto& arr = j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : claims) {
    nlohmann::ordered_json e;
    e["claim_id"] = c.id;
    e["status"] = status_name(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["output"] = s.lines;
  out << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of symplectic and Frobenius Lie algebra data", "liecas"};
  app.require_subcommand(1);
  app.add_option("--specialize", o.specialize, "Substitute parameter values, e.g. p=0,lam=1/2");
  app.add_flag("--json", o.json, "Emit a JSON report");

  auto with_source = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("file", o.file, "Source file");
    sub->add_option("--builtin", o.builtin, "Use the built-in object with this name");
  };
  auto* check = app.add_subcommand("check", "Parse and validate a source file");
  check->fallthrough();
  check->add_option("file", o.file, "Source file")->required();
  auto* cocycles = app.add_subcommand("cocycles", "Closed 2-forms of an algebra");
  with_source(cocycles);
  cocycles->add_option("--algebra", o.algebra);
  cocycles->add_option("--form", o.form, "Also test membership of this form");
  auto* index = app.add_subcommand("index", "Index of an algebra");
  with_source(index);
  index->add_option("--algebra", o.algebra);
  index->add_option("--expect", o.expect_index, "Fail unless the index equals this value");
  auto* symp = app.add_subcommand("symplectic", "Symplectic and Frobenius detection");
  with_source(symp);
  symp->add_option("--algebra", o.algebra);
  symp->add_option("--form", o.form, "Check this form");
  auto* reduce = app.add_subcommand("reduce", "Reduction along a Lagrangian ideal");
  with_source(reduce);
  reduce->add_option("--algebra", o.algebra);
  reduce->add_option("--form", o.form);
  reduce->add_option("--ideal", o.ideal, "Comma-separated generators, e.g. e4,e5,e6,e7");
  auto* extend = app.add_subcommand("extend", "Lagrangian extension of an LSA");
  with_source(extend);
  extend->add_option("--lsa", o.lsa);
  extend->add_option("--alpha", o.alpha);
  auto* cohom = app.add_subcommand("cohomology", "Extension cohomology of an LSA");
  with_source(cohom);
  cohom->add_option("--lsa", o.lsa);
  auto* transp = app.add_subcommand("transport", "Transport an algebra and a form along a map");
  with_source(transp);
  transp->add_option("--map", o.map);
  transp->add_option("--form", o.form);
  auto* dump = app.add_subcommand("dump", "Print a built-in in the source format");
  dump->fallthrough();
  dump->add_option("name", o.dump_name)->required();
  auto* suite = app.add_subcommand("paper-suite", "Run the verification criteria");
  suite->fallthrough();
  suite->add_option("--criterion", o.criteria, "Run only these criteria (1-12)");
  suite->add_option("--override", o.override_file, "Source file whose algebras and LSAs replace built-ins");
  suite->add_option("--external", o.external_file, "Source file with catalog algebras");
  suite->add_flag("--serial", o.serial, "Run criteria one after another");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "liecas: " << e.what() << "\n";
    return kExitUsage;
  }
  o.verb = app.get_subcommands().front()->get_name();

  Session s(o);
  try {
    s.assign = parse_assignment(o.specialize);
    if (o.verb == "check") {
      verb_check(s);
    } else if (o.verb == "dump") {
      verb_dump(s);
    } else if (o.verb == "paper-suite") {
      verb_suite(s);
    } else {
      s.load();
      if (o.verb == "cocycles") verb_cocycles(s);
      else if (o.verb == "index") verb_index(s);
      else if (o.verb == "symplectic") verb_symplectic(s);
      else if (o.verb == "reduce") verb_reduce(s);
      else if (o.verb == "extend") verb_extend(s);
      else if (o.verb == "cohomology") verb_cohomology(s);
      else if (o.verb == "transport") verb_transport(s);
    }
  } catch (const UsageError& e) {
    err << "liecas: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "liecas: " << (o.file.empty() ? "" : o.file + ": ") << e.what() << "\n";
    return kExitUsage;
  } catch (const ExternalDataRequired& e) {
    err << "liecas: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    s.fail(o.verb + ".error", e.what());
    s.line(std::string("FAIL ") + e.what());
  }
  int code = s.failed() ? kExitFail : kExitPass;
  emit(s, out, code);
  if (!o.json && code == kExitFail && o.verb != "paper-suite")
    for (const auto& c : s.claims)
      if (c.status == ClaimStatus::Fail && c.id.rfind("load.", 0) == 0) err << "liecas: " << c.witness << "\n";
  return code;
}

}  // namespace liecas::cli
