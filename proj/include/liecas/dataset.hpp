#pragma once

#include "liecas/document.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liecas {

// Raised for algebras whose brackets are not part of the built-in data
// (the remaining catalog entries, the full Type II brackets).
class ExternalDataRequired : public Error {
public:
  using Error::Error;
};

enum class EntryKind { Algebra, Lsa, Map, Form, Alpha, Cochain };
std::string kind_name(EntryKind k);

// Advisory parameter constraint such as "p != 0" or "lam > 0".
struct Constraint {
  enum class Op { Ne, Lt, Le, Gt, Ge } op = Op::Ne;
  std::string param;
  Rational bound;
  std::string str() const;
  bool holds(const Rational& value) const;
};

struct EntryInfo {
  std::string name;
  EntryKind kind = EntryKind::Algebra;
  std::vector<Constraint> constraints;
  // Set on verbatim transcriptions that a machine check rejects; `resolved`
  // names the corrected entry.
  bool printed_variant = false;
  std::string resolved;
  std::string note;
};

// How a Frobeniusian L8 algebra is obtained from the extension tables.
struct ReconstructionRecipe {
  std::string name;        // L8_3, ...
  std::string source;      // g_rho6, g_rho2_p, ...
  std::string map;         // map entry holding the printed row matrix
  std::string form;        // stored symplectic form entry
  std::string family;      // printed cocycle family entry
  std::string condition;   // printed nondegeneracy polynomial of the family
  // true: L = transport(source, P^-1) with P the printed row matrix.
  bool inverse_direction = true;
  std::vector<std::string> family_closed_under;  // "printed", "inverse"
};

class Dataset {
public:
  static const Dataset& instance();

  const Document& document() const { return doc_; }
  const std::vector<EntryInfo>& entries() const { return entries_; }
  const EntryInfo* info(const std::string& name) const;
  const std::vector<ReconstructionRecipe>& recipes() const { return recipes_; }
  const ReconstructionRecipe* recipe(const std::string& name) const;

  // The named entry plus everything it references, in the file format.
  std::string dump(const std::string& name) const;

  // Validation failures of entries not marked as printed variants; empty on
  // a correct build.
  const std::vector<std::string>& load_issues() const { return load_issues_; }

private:
  Dataset();
  Document doc_;
  std::vector<EntryInfo> entries_;
  std::vector<ReconstructionRecipe> recipes_;
  std::vector<std::string> load_issues_;
};

struct Warning {
  std::string entry;
  std::string message;
};

// Symbolic by default; an assignment specializes the named parameters and
// reports advisory constraint violations without refusing.
LieAlgebra builtin_algebra(const std::string& name, const Assignment& values = {},
                           std::vector<Warning>* warnings = nullptr);
LSA builtin_lsa(const std::string& name, const Assignment& values = {}, std::vector<Warning>* warnings = nullptr);
AltForm builtin_form(const std::string& name, const Assignment& values = {});
LinMap builtin_map(const std::string& name, const Assignment& values = {});
Cochain1 builtin_cochain(const std::string& name);
std::vector<Warning> check_constraints(const std::string& name, const Assignment& values);

struct Reconstruction {
  std::string name;
  LieAlgebra algebra;
  AltForm form;
  std::string source;
  std::string map;
  bool inverse_direction = true;
};

// Frobeniusian L8 algebras and the decomposables; anything else from the
// classification throws ExternalDataRequired, unknown names throw Error.
Reconstruction reconstruct_L8(const std::string& name);

// Parameter substitution by rational functions (e.g. lam -> -(p-1)/(p+1)).
LieAlgebra substitute(const LieAlgebra& g, const std::map<std::string, RatFunc>& values,
                      std::vector<std::string> params);
LSA substitute(const LSA& a, const std::map<std::string, RatFunc>& values, std::vector<std::string> params);

// Coefficient vectors of a family form linear in `symbols`.
std::vector<AltForm> family_generators(const AltForm& family, const std::vector<std::string>& symbols);

}  // namespace liecas
