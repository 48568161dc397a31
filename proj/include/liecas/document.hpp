#pragma once

#include "liecas/extension.hpp"
#include "liecas/morphism.hpp"

#include <string>
#include <vector>

namespace liecas {

// Text format:
//   params p q                         (before any block: shared by the document)
//   algebra <name>                     then dim, params, bracket i j : <vector>
//   lsa <name>                         then dim, params, over <algebra>, prod i j : <vector>
//   map <name> from <A> to <B>         then params, image i : <vector in B>
//   cochain <name> on <lsa>            then params, image i : <vector in e_{n+1}..e_{2n}>
//   form <name> on <algebra> [params x y] : <sum of c*e_i^e_j>
//   alpha <name> on <lsa> : i j : <vector in e_{n+1}..e_{2n}> ; i j : ...
// Vectors are sums of c*e_k; '#' starts a comment. Indices are 1-based.

struct NamedAlgebra {
  std::string name;
  LieAlgebra algebra;
  std::size_t line = 0;
  bool operator==(const NamedAlgebra& o) const { return name == o.name && algebra == o.algebra; }
};

struct NamedLSA {
  std::string name;
  LSA lsa;
  std::string over;  // declared commutator algebra, may be empty
  std::size_t line = 0;
  bool operator==(const NamedLSA& o) const { return name == o.name && lsa == o.lsa && over == o.over; }
};

struct NamedMap {
  std::string name, from, to;
  LinMap matrix;
  std::vector<std::string> params;  // extra symbols beyond those of the two algebras
  std::size_t line = 0;
  bool operator==(const NamedMap& o) const {
    return name == o.name && from == o.from && to == o.to && matrix == o.matrix && params == o.params;
  }
};

struct NamedForm {
  std::string name, on;
  AltForm form;
  std::vector<std::string> params;  // family symbols beyond the algebra's own
  std::size_t line = 0;
  bool operator==(const NamedForm& o) const {
    return name == o.name && on == o.on && form == o.form && params == o.params;
  }
};

// 1-cochain h -> h*; column j is phi(e_j) in dual coordinates.
struct NamedCochain {
  std::string name, on;
  Cochain1 matrix;
  std::vector<std::string> params;
  std::size_t line = 0;
  bool operator==(const NamedCochain& o) const {
    return name == o.name && on == o.on && matrix == o.matrix && params == o.params;
  }
};

struct NamedAlpha {
  std::string name, on;
  Cocycle2 alpha;
  std::size_t line = 0;
  bool operator==(const NamedAlpha& o) const { return name == o.name && on == o.on && alpha == o.alpha; }
};

struct Document {
  std::vector<std::string> params;
  std::vector<NamedAlgebra> algebras;
  std::vector<NamedLSA> lsas;
  std::vector<NamedMap> maps;
  std::vector<NamedForm> forms;
  std::vector<NamedAlpha> alphas;
  std::vector<NamedCochain> cochains;

  const NamedAlgebra* algebra(const std::string& name) const;
  const NamedLSA* lsa(const std::string& name) const;
  const NamedMap* map(const std::string& name) const;
  const NamedForm* form(const std::string& name) const;
  const NamedAlpha* alpha(const std::string& name) const;
  const NamedCochain* cochain(const std::string& name) const;
  bool has_name(const std::string& name) const;

  bool operator==(const Document& o) const = default;
};

// Syntax and reference errors throw ParseError with line and column.
// Structural validity (Jacobi, associators) is left to validate_document.
Document parse_source(const std::string& text);
std::string print_document(const Document& doc);

struct ValidationIssue {
  std::string object;
  std::size_t line = 0;
  std::string message;
};
std::vector<ValidationIssue> validate_document(const Document& doc);

// Single-object renderings used by dump.
std::string print_algebra(const std::string& name, const LieAlgebra& g, const std::vector<std::string>& shared = {});
std::string print_lsa(const std::string& name, const LSA& a, const std::string& over = {},
                      const std::vector<std::string>& shared = {});
std::string print_map(const std::string& name, const std::string& from, const std::string& to, const LinMap& m,
                      const std::vector<std::string>& params = {});
std::string print_form(const std::string& name, const std::string& on, const AltForm& w,
                       const std::vector<std::string>& params = {});
std::string print_alpha(const std::string& name, const std::string& on, const Cocycle2& a);
std::string print_cochain(const std::string& name, const std::string& on, const Cochain1& phi,
                          const std::vector<std::string>& params = {});

// Standalone pieces of the grammar, for data kept outside documents.
Vec parse_vector_text(const std::string& text, std::size_t dim, const std::vector<std::string>& vars);
AltForm parse_form_text(const std::string& text, std::size_t dim, const std::vector<std::string>& vars);

}  // namespace liecas
