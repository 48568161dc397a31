#include "liecas/dataset.hpp"

#include <algorithm>
#include <set>

namespace liecas {

namespace data {
extern const char* const kBaseText;
}

namespace {

// Reconstruction rows: one string per f_i, in the e-basis of the target algebra.
struct ReconstructionRow {
  std::string target;     // L8 name
  std::string source;     // algebra the rows are written against
  std::vector<std::string> images;
};

const std::vector<ReconstructionRow>& reconstruction_rows() {
  static const std::vector<ReconstructionRow> rows = {
      {"L8_16", "g_rho1", {"e3", "e1", "e2", "-e6", "e7 + e8", "-e7 + e8", "-e5 + e8", "e4"}},
      {"L8_17", "g_rho2_p",
       {"e3", "e1", "e2", "-e7 + 2/(p+1)*e8", "-e5", "e6", "-e7 - 2*p/(p+1)*e8", "(p+1)/2*e4"}},
      {"L8_20", "g_rho3", {"e3", "e1", "e2", "-e6", "-e7 + e8", "-2*e5 - 1/2*e6", "1/2*e7 + 1/6*e8", "e4"}},
      {"L8_18", "g_rho4_p",
       {"e3", "e1", "e2", "-p*e6 - 1/p*e8", "p*e7 + p*e8", "-e7 + e8", "-e5 + e8", "p*e4"}},
      {"L8_4", "g_rho5_p",
       {"e1", "e2", "e3", "e5 - e7 - 2/p*e8", "-e5 - e7 + 2/p*e8", "e6 + 2*e8", "e6 - 2*e8", "p*e4"}},
      {"L8_3", "g_rho6", {"e1", "e2", "e3", "2*e8", "e6", "e7", "e5", "e4"}},
      // f4 printed as -e7 + e8; row L8_17 at p = 0 gives -e7 + 2*e8.
      {"L8_17_0", "g_rho7", {"e3", "e1", "e2", "-e7 + 2*e8", "-e5", "e6", "-e7", "1/2*e4"}},
  };
  return rows;
}

const std::vector<std::string> kRow7Printed = {"e3", "e1", "e2", "-e7 + e8", "-e5", "e6", "-e7", "1/2*e4"};

// Cocycle families of the Frobeniusian algebras, as printed.
struct FamilyText {
  std::string algebra;
  std::vector<std::string> symbols;
  std::string text;
  std::string condition;
};

const std::vector<FamilyText>& families() {
  static const std::vector<FamilyText> f = {
      {"L8_3",
       {"a12", "a13", "a23", "a26", "a34", "a36", "a37"},
       "a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a26*e1^e4 + a26*e2^e6 - a26*e3^e5 + 2*a26*e7^e8"
       " + a34*e1^e5 - a34*e2^e7 + a34*e3^e4 + 2*a34*e6^e8 + a36*e1^e7 + a36*e2^e5 + a36*e3^e6 - 2*a36*e4^e8"
       " - a37*e1^e6 + a37*e2^e4 + a37*e3^e7 + 2*a37*e5^e8",
       "a26^2 + a34^2 + a36^2 + a37^2"},
      {"L8_4",
       {"a12", "a13", "a23", "a34", "a35", "a36", "a37"},
       "a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a34*e1^e5 - a34*e2^e7 + a34*e3^e4 - 2*a34*e4^e8 + 2*p*a34*e6^e8"
       " - a35*e1^e4 - a35*e2^e6 + a35*e3^e5 + 2*a35*e5^e8 - 2*p*a35*e7^e8"
       " + a36*e1^e7 + a36*e2^e5 + a36*e3^e6 - 2*p*a36*e4^e8 - 2*a36*e6^e8"
       " - a37*e1^e6 + a37*e2^e4 + a37*e3^e7 + 2*p*a37*e5^e8 + 2*a37*e7^e8",
       "a34^2 + a35^2 + a36^2 + a37^2"},
      {"L8_16",
       {"a12", "a13", "a23", "a25", "a27", "a34", "a36"},
       "a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a25*e1^e4 + a25*e2^e5 + a25*e4^e8 + a25*e6^e8"
       " + a27*e1^e6 + a27*e2^e7 + a27*e6^e8 - a34*e1^e5 + a34*e3^e4 + a34*e5^e8 + a34*e7^e8"
       " - a36*e1^e7 + a36*e3^e6 + a36*e7^e8",
       "a25*a36 - a27*a34"},
      {"L8_17",
       {"a12", "a13", "a14", "a15", "a16", "a17"},
       "a12*e1^e2 + a13*e1^e3 + a14*e1^e4 + a14*e2^e5 + a14*e4^e8 + a15*e1^e5 - a15*e3^e4 - a15*e5^e8"
       " + a16*e1^e6 + a16*e2^e7 + p*a16*e6^e8 + a17*e1^e7 - a17*e3^e6 - p*a17*e7^e8",
       "a14*a17 - a15*a16"},
      // a27*e2^e7 and a36*e3^e6 appear twice in the printed family.
      {"L8_17_0",
       {"a12", "a13", "a23", "a27", "a36", "a67", "a25", "a34"},
       "a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a27*e2^e7 + a36*e3^e6 + a67*e6^e7 + a27*e1^e6 + a27*e2^e7"
       " + a25*e1^e4 + a25*e2^e5 + a25*e4^e8 - a34*e1^e5 + a34*e3^e4 + a34*e5^e8 - a36*e1^e7 + a36*e3^e6",
       "(a13*a67 - a36^2)*a25^2 + a34^2*(a12*a67 - a27^2) + 2*a34*(a23*a67 + a27*a36)*a25"},
      {"L8_18",
       {"a12", "a13", "a23", "a25", "a34", "a27", "a36"},
       "a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a25*e1^e4 + a25*e2^e5 + p*a25*e4^e8 + a25*e6^e8"
       " - a34*e1^e5 + a34*e3^e4 + p*a34*e5^e8 + a34*e7^e8 + a27*e1^e6 + a27*e2^e7 - a27*e4^e8 + p*a27*e6^e8"
       " - a36*e1^e7 + a36*e3^e6 - a36*e5^e8 + p*a36*e7^e8",
       "a25*a36 - a27*a34"},
      {"L8_20",
       {"a12", "a13", "a23", "a15", "a16", "a25", "a36"},
       "a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a15*e1^e5 + 2*a15*e2^e6 + a15*e3^e4 + a15*e5^e8"
       " + a16*e1^e6 - a16*e2^e7 - 2*a16*e3^e5 - a16*e6^e8 + a25*e1^e4 + a25*e2^e5 + 1/3*a25*e4^e8"
       " - a36*e1^e7 + a36*e3^e6 + 1/3*a36*e7^e8",
       "a15^2*(4*a15*a36 - 3*a16^2) + a25^2*a36^2 + a16*a25*(6*a15*a36 - 4*a16^2)"},
  };
  return f;
}

// Symplectic forms attached to the Frobeniusian algebras.
const std::vector<std::pair<std::string, std::string>>& symplectic_form_texts() {
  static const std::vector<std::pair<std::string, std::string>> f = {
      {"L8_3", "e1^e7 + e2^e5 + e3^e6 - 2*e4^e8"},
      {"L8_4",
       "e1^e4 - e1^e5 + e2^e6 + e2^e7 - e3^e4 - e3^e5 + 2*e4^e8 - 2*e5^e8 - 2*p*e6^e8 + 2*p*e7^e8"},
      {"L8_16", "e1^e5 - e1^e6 - e2^e7 - e3^e4 - e5^e8 - e6^e8 - e7^e8"},
      {"L8_17", "-e1^e4 - e1^e7 - e2^e5 + e3^e6 - e4^e8 + p*e7^e8"},
      {"L8_17_0", "-e1^e4 - e1^e7 - e2^e5 + e3^e6 - e4^e8"},
      {"L8_18", "p*e1^e5 - e1^e6 - e2^e7 - p*e3^e4 + e4^e8 - p^2*e5^e8 - p*e6^e8 - p*e7^e8"},
      {"L8_20", "-e1^e5 + 1/2*e1^e7 - 2*e2^e6 - e3^e4 - 1/2*e3^e6 - e5^e8 - 1/6*e7^e8"},
  };
  return f;
}
// The other printing of the L8_20 form differs in the sign of e3^e6.
const char* const kL8_20Alt = "-e1^e5 + 1/2*e1^e7 - 2*e2^e6 - e3^e4 + 1/2*e3^e6 - e5^e8 - 1/6*e7^e8";

const std::set<std::string> kDecomposable = {"aff2_plus_aff1", "aff2_plus_R2"};

RatFunc parse_scalar(const std::string& text, const std::vector<std::string>& vars) {
  // A scalar is read as the coefficient of e1 in a one-dimensional vector.
  return parse_vector_text("(" + text + ")*e1", 1, vars)[0];
}

LinMap map_from_images(const std::vector<std::string>& images, const std::vector<std::string>& vars) {
  std::size_t n = images.size();
  LinMap m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec v = parse_vector_text(images[j], n, vars);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = v[i];
  }
  return m;
}

bool family_closed(const LieAlgebra& g, const std::vector<AltForm>& gens) {
  for (const auto& w : gens)
    if (!ce_d(g, w).is_zero()) return false;
  return true;
}

std::map<int, RatFunc> by_id(const std::map<std::string, RatFunc>& values) {
  std::map<int, RatFunc> sub;
  for (const auto& [k, v] : values) sub[intern_variable(k)] = v;
  return sub;
}

}  // namespace

std::string kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::Algebra: return "algebra";
    case EntryKind::Lsa: return "lsa";
    case EntryKind::Map: return "map";
    case EntryKind::Form: return "form";
    case EntryKind::Alpha: return "alpha";
    case EntryKind::Cochain: return "cochain";
  }
  return "?";
}

std::string Constraint::str() const {
  static const char* ops[] = {"!=", "<", "<=", ">", ">="};
  return param + " " + ops[static_cast<int>(op)] + " " + to_string(bound);
}

bool Constraint::holds(const Rational& v) const {
  switch (op) {
    case Op::Ne: return v != bound;
    case Op::Lt: return v < bound;
    case Op::Le: return v <= bound;
    case Op::Gt: return v > bound;
    case Op::Ge: return v >= bound;
  }
  return true;
}

LieAlgebra substitute(const LieAlgebra& g, const std::map<std::string, RatFunc>& values,
                      std::vector<std::string> params) {
  auto sub = by_id(values);
  LieAlgebra::Table t;
  for (const auto& [ij, v] : g.table()) {
    Vec w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) w[k] = v[k].substitute(sub);
    t[ij] = std::move(w);
  }
  return make_algebra_unchecked(g.dim(), std::move(params), std::move(t), g.labels());
}

LSA substitute(const LSA& a, const std::map<std::string, RatFunc>& values, std::vector<std::string> params) {
  auto sub = by_id(values);
  std::vector<Vec> table;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec v = a.product(i, j);
      for (auto& x : v) x = x.substitute(sub);
      table.push_back(std::move(v));
    }
  return make_lsa_unchecked(a.dim(), std::move(params), std::move(table));
}

std::vector<AltForm> family_generators(const AltForm& family, const std::vector<std::string>& symbols) {
  std::vector<AltForm> out;
  for (const auto& s : symbols) {
    std::map<int, RatFunc> sub;
    for (const auto& t : symbols) sub[intern_variable(t)] = RatFunc(t == s ? 1 : 0);
    out.push_back(family.substitute(sub));
  }
  return out;
}

Dataset::Dataset() : doc_(parse_source(data::kBaseText)) {
  using Op = Constraint::Op;
  auto info_for = [this](const std::string& name, EntryKind kind) -> EntryInfo& {
    entries_.push_back({name, kind, {}, false, {}, {}});
    return entries_.back();
  };
  for (const auto& a : doc_.algebras) info_for(a.name, EntryKind::Algebra);
  for (const auto& a : doc_.lsas) info_for(a.name, EntryKind::Lsa);
  for (const auto& a : doc_.maps) info_for(a.name, EntryKind::Map);
  for (const auto& a : doc_.cochains) info_for(a.name, EntryKind::Cochain);
  for (const auto& a : doc_.forms) info_for(a.name, EntryKind::Form);

  auto entry = [this](const std::string& name) -> EntryInfo& {
    for (auto& e : entries_)
      if (e.name == name) return e;
    throw Error("dataset: no entry " + name);
  };
  auto flag = [&](const std::string& name, const std::string& resolved, const std::string& note) {
    auto& e = entry(name);
    e.printed_variant = true;
    e.resolved = resolved;
    e.note = note;
  };
  auto constrain = [&](const std::string& name, std::vector<Constraint> cs) {
    auto& e = entry(name);
    e.constraints.insert(e.constraints.end(), cs.begin(), cs.end());
  };

  // Extensions h + h* with the zero cocycle.
  for (int l = 1; l <= 6; ++l) {
    std::string h = "h" + std::to_string(l);
    auto ext = lagrangian_extension(doc_.lsa(h)->lsa, Cocycle2(4));
    std::string g = "g_rho" + std::to_string(l);
    doc_.algebras.push_back({g, ext.total, 0});
    info_for(g, EntryKind::Algebra).note = "lagrangian extension of " + h + " by the zero cocycle";
    doc_.forms.push_back({"omega0_" + g, g, ext.omega0, {}, 0});
    info_for("omega0_" + g, EntryKind::Form);
  }
  doc_.algebras.push_back({"g_rho7", specialize(doc_.algebra("g_rho2")->algebra, {{"lam", Rational(1)}}), 0});
  info_for("g_rho7", EntryKind::Algebra).note = "g_rho2 at lam = 1";
  doc_.forms.push_back({"omega0_g_rho7", "g_rho7", doc_.form("omega0_g_rho2")->form, {}, 0});
  info_for("omega0_g_rho7", EntryKind::Form);

  flag("g_rho1_printed", "g_rho1", "[f5,f8] printed where [f4,f8] = 1/2*f6 - f8 is meant");
  flag("g_rho5_printed", "g_rho5", "[f1,f8] = 1/4*f5 - mu/4*f8 missing");
  flag("omega_typeII_printed", "omega_typeII", "a78*e7^e8 printed twice; the second copy is a67*e6^e7");

  // Reparametrized sources for the reconstruction rows.
  std::vector<std::string> pv = {"p"};
  auto reparam = [&](const std::string& from, const std::string& param, const std::string& expr,
                     const std::string& to) {
    auto g = substitute(doc_.algebra(from)->algebra, {{param, parse_scalar(expr, pv)}}, pv);
    doc_.algebras.push_back({to, g, 0});
    info_for(to, EntryKind::Algebra).note = from + " with " + param + " = " + expr;
  };
  reparam("g_rho2", "lam", "-(p-1)/(p+1)", "g_rho2_p");
  reparam("g_rho4", "nu", "-1/p^2", "g_rho4_p");
  reparam("g_rho5", "mu", "2/p", "g_rho5_p");

  for (const auto& row : reconstruction_rows()) {
    const auto& src = doc_.algebra(row.source)->algebra;
    std::vector<std::string> vars = src.params();
    LinMap P = map_from_images(row.images, vars);
    LinMap Pinv = inverse_map(P);
    LieAlgebra via_inverse = transport(src, Pinv);
    LieAlgebra via_printed = transport(src, P);

    const FamilyText* fam = nullptr;
    for (const auto& f : families())
      if (f.algebra == row.target) fam = &f;
    auto fam_vars = merge_params(vars, fam->symbols);
    AltForm family = parse_form_text(fam->text, 8, fam_vars);
    auto gens = family_generators(family, fam->symbols);

    ReconstructionRecipe r;
    r.name = row.target;
    r.source = row.source;
    r.map = "psi_" + row.target;
    r.form = "omega_" + row.target;
    r.family = "family_" + row.target;
    r.condition = fam->condition;
    if (family_closed(via_printed, gens)) r.family_closed_under.push_back("printed");
    if (family_closed(via_inverse, gens)) r.family_closed_under.push_back("inverse");
    // Inverse unless only the printed direction closes the family.
    r.inverse_direction = !(r.family_closed_under.size() == 1 && r.family_closed_under[0] == "printed");
    LieAlgebra L = r.inverse_direction ? via_inverse : via_printed;

    doc_.algebras.push_back({row.target, L, 0});
    info_for(row.target, EntryKind::Algebra).note = "transport of " + row.source + " along its reconstruction map";
    if (r.inverse_direction)
      doc_.maps.push_back({r.map, row.target, row.source, P, {}, 0});
    else
      doc_.maps.push_back({r.map, row.source, row.target, P, {}, 0});
    info_for(r.map, EntryKind::Map);
    doc_.forms.push_back({r.family, row.target, family, fam->symbols, 0});
    info_for(r.family, EntryKind::Form).note = "nondegenerate where " + fam->condition + " != 0";
    recipes_.push_back(std::move(r));
  }

  // Row 7 as printed.
  {
    LinMap P7 = map_from_images(kRow7Printed, {});
    doc_.maps.push_back({"psi_L8_17_0_printed", "L8_17_0", "g_rho7", P7, {}, 0});
    info_for("psi_L8_17_0_printed", EntryKind::Map);
    flag("psi_L8_17_0_printed", "psi_L8_17_0", "f4 printed as -e7 + e8; the p = 0 member of row L8_17 gives -e7 + 2*e8");
  }
  flag("family_L8_17_0", "", "a27*e2^e7 and a36*e3^e6 are printed twice; a23 is never paired with a closed partner");

  for (const auto& [name, text] : symplectic_form_texts()) {
    const auto& L = doc_.algebra(name)->algebra;
    doc_.forms.push_back({"omega_" + name, name, parse_form_text(text, 8, L.params()), {}, 0});
    info_for("omega_" + name, EntryKind::Form);
  }
  doc_.forms.push_back({"omega_L8_20_alt", "L8_20", parse_form_text(kL8_20Alt, 8, {}), {}, 0});
  info_for("omega_L8_20_alt", EntryKind::Form).note = "second printing of the L8_20 form (+1/2*e3^e6)";
  {
    const auto& L20 = doc_.algebra("L8_20")->algebra;
    bool main_closed = ce_d(L20, doc_.form("omega_L8_20")->form).is_zero();
    bool alt_closed = ce_d(L20, doc_.form("omega_L8_20_alt")->form).is_zero();
    if (alt_closed && !main_closed) {
      flag("omega_L8_20", "omega_L8_20_alt", "not closed on L8_20; the +1/2*e3^e6 printing is");
      for (auto& r : recipes_)
        if (r.name == "L8_20") r.form = "omega_L8_20_alt";
    } else if (!alt_closed) {
      flag("omega_L8_20_alt", main_closed ? "omega_L8_20" : "", "not closed on L8_20");
    }
  }

  Constraint lam_pos{Op::Gt, "lam", 0}, nu_neg{Op::Lt, "nu", 0}, mu_pos{Op::Gt, "mu", 0};
  Constraint p_ne0{Op::Ne, "p", 0}, p_gt_m1{Op::Gt, "p", -1}, p_le1{Op::Le, "p", 1}, p_pos{Op::Gt, "p", 0};
  for (auto n : {"h2", "g_rho2", "g_rho2_printed"}) constrain(n, {lam_pos});
  for (auto n : {"h4", "g_rho4", "g_rho4_printed"}) constrain(n, {nu_neg});
  for (auto n : {"h5", "g_rho5", "g_rho5_printed"}) constrain(n, {mu_pos});
  for (auto n : {"L8_4", "g_rho5_p", "psi_L8_4", "omega_L8_4", "family_L8_4"}) constrain(n, {p_ne0});
  for (auto n : {"L8_17", "g_rho2_p", "psi_L8_17", "omega_L8_17", "family_L8_17"}) constrain(n, {p_gt_m1, p_le1, p_ne0});
  for (auto n : {"L8_18", "g_rho4_p", "psi_L8_18", "omega_L8_18", "family_L8_18"}) constrain(n, {p_pos});

  for (const auto& issue : validate_document(doc_)) {
    const auto* e = info(issue.object);
    if (e && e->printed_variant) continue;
    load_issues_.push_back(issue.object + ": " + issue.message);
  }
}

const Dataset& Dataset::instance() {
  static const Dataset d;
  return d;
}

const EntryInfo* Dataset::info(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const ReconstructionRecipe* Dataset::recipe(const std::string& name) const {
  for (const auto& r : recipes_)
    if (r.name == name) return &r;
  return nullptr;
}

std::string Dataset::dump(const std::string& name) const {
  const auto* e = info(name);
  if (!e) throw Error("unknown built-in '" + name + "'");
  Document out;
  std::vector<std::string> algebras;
  auto need_algebra = [&](const std::string& a) {
    if (std::find(algebras.begin(), algebras.end(), a) == algebras.end()) algebras.push_back(a);
  };
  auto need_lsa = [&](const std::string& l) {
    const auto* x = doc_.lsa(l);
    if (!x->over.empty()) need_algebra(x->over);
    out.lsas.push_back(*x);
  };
  switch (e->kind) {
    case EntryKind::Algebra: need_algebra(name); break;
    case EntryKind::Lsa: need_lsa(name); break;
    case EntryKind::Map: {
      const auto* m = doc_.map(name);
      need_algebra(m->from);
      need_algebra(m->to);
      out.maps.push_back(*m);
      break;
    }
    case EntryKind::Form: {
      const auto* f = doc_.form(name);
      need_algebra(f->on);
      out.forms.push_back(*f);
      break;
    }
    case EntryKind::Cochain: {
      const auto* c = doc_.cochain(name);
      need_lsa(c->on);
      out.cochains.push_back(*c);
      break;
    }
    case EntryKind::Alpha: {
      const auto* a = doc_.alpha(name);
      need_lsa(a->on);
      out.alphas.push_back(*a);
      break;
    }
  }
  for (const auto& a : algebras) out.algebras.push_back(*doc_.algebra(a));
  std::string head;
  if (e->printed_variant)
    head = "# " + name + " is printed verbatim and fails its check" +
           (e->resolved.empty() ? std::string() : "; see " + e->resolved) + "\n";
  if (!e->note.empty()) head += "# " + e->note + "\n";
  if (!e->constraints.empty()) {
    head += "# constraints:";
    for (const auto& c : e->constraints) head += " " + c.str();
    head += "\n";
  }
  return head + print_document(out);
}

std::vector<Warning> check_constraints(const std::string& name, const Assignment& values) {
  std::vector<Warning> out;
  const auto* e = Dataset::instance().info(name);
  if (!e) return out;
  for (const auto& c : e->constraints) {
    auto it = values.find(c.param);
    if (it != values.end() && !c.holds(it->second))
      out.push_back({name, c.param + " = " + to_string(it->second) + " violates " + c.str()});
  }
  return out;
}

namespace {
void collect(const std::string& name, const Assignment& values, std::vector<Warning>* warnings) {
  if (!warnings) return;
  auto w = check_constraints(name, values);
  warnings->insert(warnings->end(), w.begin(), w.end());
}
}  // namespace

LieAlgebra builtin_algebra(const std::string& name, const Assignment& values, std::vector<Warning>* warnings) {
  const auto* a = Dataset::instance().document().algebra(name);
  if (!a) throw Error("unknown built-in algebra '" + name + "'");
  collect(name, values, warnings);
  return specialize(a->algebra, values);
}

LSA builtin_lsa(const std::string& name, const Assignment& values, std::vector<Warning>* warnings) {
  const auto* a = Dataset::instance().document().lsa(name);
  if (!a) throw Error("unknown built-in LSA '" + name + "'");
  collect(name, values, warnings);
  return specialize(a->lsa, values);
}

AltForm builtin_form(const std::string& name, const Assignment& values) {
  const auto* f = Dataset::instance().document().form(name);
  if (!f) throw Error("unknown built-in form '" + name + "'");
  return specialize(f->form, values);
}

LinMap builtin_map(const std::string& name, const Assignment& values) {
  const auto* m = Dataset::instance().document().map(name);
  if (!m) throw Error("unknown built-in map '" + name + "'");
  return specialize(m->matrix, values);
}

Cochain1 builtin_cochain(const std::string& name) {
  const auto* c = Dataset::instance().document().cochain(name);
  if (!c) throw Error("unknown built-in cochain '" + name + "'");
  return c->matrix;
}

Reconstruction reconstruct_L8(const std::string& name) {
  const auto& ds = Dataset::instance();
  const auto& doc = ds.document();
  if (kDecomposable.count(name))
    return {name, doc.algebra(name)->algebra, doc.form("omega_" + name)->form, {}, {}, false};
  if (const auto* r = ds.recipe(name))
    return {name, doc.algebra(name)->algebra, doc.form(r->form)->form, r->source, r->map, r->inverse_direction};
  bool catalog = name.rfind("L8_", 0) == 0;
  if (catalog) {
    try {
      int k = std::stoi(name.substr(3));
      catalog = k >= 1 && k <= 22;
    } catch (const std::exception&) {
      catalog = false;
    }
  }
  if (catalog)
    throw ExternalDataRequired(name +
                               ": external data required; its brackets are not built in. Supply them as an "
                               "`algebra " + name + "` block in a liecas source file.");
  throw Error("unknown algebra '" + name + "' for reconstruction");
}

}  // namespace liecas
