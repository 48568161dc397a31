#include "liecas/document.hpp"

#include "liecas/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace liecas {

template <class T>
static const T* find_named(const std::vector<T>& v, const std::string& name) {
  for (const auto& x : v)
    if (x.name == name) return &x;
  return nullptr;
}

const NamedAlgebra* Document::algebra(const std::string& name) const { return find_named(algebras, name); }
const NamedLSA* Document::lsa(const std::string& name) const { return find_named(lsas, name); }
const NamedMap* Document::map(const std::string& name) const { return find_named(maps, name); }
const NamedForm* Document::form(const std::string& name) const { return find_named(forms, name); }
const NamedAlpha* Document::alpha(const std::string& name) const { return find_named(alphas, name); }
const NamedCochain* Document::cochain(const std::string& name) const { return find_named(cochains, name); }

bool Document::has_name(const std::string& name) const {
  return algebra(name) || lsa(name) || map(name) || form(name) || alpha(name) || cochain(name);
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_basis_name(const std::string& s) {
  return s.size() >= 2 && s[0] == 'e' && std::all_of(s.begin() + 1, s.end(), is_digit);
}

// A piece of a line with its 1-based starting column.
struct Span {
  std::string text;
  std::size_t column;
};

Span trim(const Span& s) {
  std::size_t a = 0, b = s.text.size();
  while (a < b && is_space(s.text[a])) ++a;
  while (b > a && is_space(s.text[b - 1])) --b;
  return {s.text.substr(a, b - a), s.column + a};
}

std::vector<Span> split_words(const Span& s) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < s.text.size()) {
    while (i < s.text.size() && is_space(s.text[i])) ++i;
    std::size_t start = i;
    while (i < s.text.size() && !is_space(s.text[i])) ++i;
    if (i > start) out.push_back({s.text.substr(start, i - start), s.column + start});
  }
  return out;
}

std::vector<Span> split_on(const Span& s, char sep) {
  std::vector<Span> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i) {
    if (i == s.text.size() || s.text[i] == sep) {
      out.push_back({s.text.substr(start, i - start), s.column + start});
      start = i + 1;
    }
  }
  return out;
}

// Splits at the first ':'.
std::pair<Span, Span> split_colon(const Span& s, std::size_t line) {
  auto pos = s.text.find(':');
  if (pos == std::string::npos) throw ParseError("expected ':'", line, s.column + s.text.size());
  return {{s.text.substr(0, pos), s.column}, {s.text.substr(pos + 1), s.column + pos + 1}};
}

RatFunc scalar_at(const Span& s, const std::vector<std::string>& vars, std::size_t line) {
  try {
    return parse_scalar(s.text, vars);
  } catch (const ParseError& e) {
    std::size_t col = e.column() ? s.column + e.column() - 1 : s.column;
    throw ParseError(e.message(), line, col);
  }
}

std::size_t index_at(const Span& s, std::size_t max, std::size_t line) {
  if (s.text.empty() || !std::all_of(s.text.begin(), s.text.end(), is_digit) || s.text.size() > 6)
    throw ParseError("expected a basis index, got '" + s.text + "'", line, s.column);
  std::size_t k = std::stoul(s.text);
  if (k < 1 || k > max)
    throw ParseError("basis index " + s.text + " out of range 1.." + std::to_string(max), line, s.column);
  return k - 1;
}

struct LinearTerm {
  RatFunc coeff;
  std::vector<Span> basis;  // e.g. {e1} or {e1, e7}
};

// Sum of c*e_i[^e_j...] terms, split at top-level binary signs.
std::vector<LinearTerm> parse_linear(const Span& raw, const std::vector<std::string>& vars, std::size_t line) {
  Span s = trim(raw);
  if (s.text.empty()) throw ParseError("expected a sum of basis terms", line, s.column);
  std::vector<LinearTerm> out;
  if (s.text == "0") return out;
  std::vector<std::pair<int, Span>> pieces;
  int depth = 0;
  int sign = 1;
  std::size_t start = 0;
  char prev = 0;  // previous non-space character
  for (std::size_t i = 0; i <= s.text.size(); ++i) {
    char c = i < s.text.size() ? s.text[i] : 0;
    bool cut = i == s.text.size();
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == '+' || c == '-') && depth == 0 && prev != 0 && prev != '*' && prev != '/' && prev != '^' &&
        prev != '(')
      cut = true;
    if (cut) {
      pieces.push_back({sign, {s.text.substr(start, i - start), s.column + start}});
      sign = c == '-' ? -1 : 1;
      start = i + 1;
    }
    if (!is_space(c) && c != 0) prev = c;
    if (i == 0 && (c == '+' || c == '-')) {
      sign = c == '-' ? -1 : 1;
      start = 1;
      prev = 0;
    }
  }
  for (auto& [sg, piece] : pieces) {
    Span t = trim(piece);
    if (t.text.empty()) throw ParseError("empty term", line, t.column);
    // Peel basis factors e_k (joined by '^') off the end.
    std::vector<Span> basis;
    std::size_t end = t.text.size();
    for (;;) {
      std::size_t k = end;
      while (k > 0 && is_digit(t.text[k - 1])) --k;
      if (k == end || k == 0 || t.text[k - 1] != 'e') break;
      std::size_t e = k - 1;
      if (e > 0 && (std::isalnum(static_cast<unsigned char>(t.text[e - 1])) || t.text[e - 1] == '_')) break;
      basis.insert(basis.begin(), Span{t.text.substr(k, end - k), t.column + k});
      std::size_t j = e;
      while (j > 0 && is_space(t.text[j - 1])) --j;
      if (j > 0 && t.text[j - 1] == '^') {
        end = j - 1;
        while (end > 0 && is_space(t.text[end - 1])) --end;
        continue;
      }
      end = e;
      break;
    }
    if (basis.empty()) throw ParseError("term '" + t.text + "' does not end in a basis element e<k>", line, t.column);
    Span coeff = trim({t.text.substr(0, end), t.column});
    RatFunc c(1);
    if (!coeff.text.empty()) {
      if (coeff.text.back() != '*') throw ParseError("expected '*' before the basis element", line, t.column + end);
      coeff.text.pop_back();
      c = scalar_at(coeff, vars, line);
    }
    out.push_back({sg < 0 ? -c : c, basis});
  }
  return out;
}

Vec parse_vector(const Span& s, std::size_t dim, const std::vector<std::string>& vars, std::size_t line,
                 std::size_t offset = 0) {
  Vec v = zero_vec(dim);
  for (const auto& t : parse_linear(s, vars, line)) {
    if (t.basis.size() != 1) throw ParseError("expected a vector term c*e_k", line, t.basis.front().column);
    const Span& b = t.basis.front();
    std::size_t k = index_at(b, offset + dim, line);
    if (k < offset)
      throw ParseError("dual index must lie in " + std::to_string(offset + 1) + ".." + std::to_string(offset + dim),
                       line, b.column);
    v[k - offset] += t.coeff;
  }
  return v;
}

AltForm parse_form(const Span& s, std::size_t dim, const std::vector<std::string>& vars, std::size_t line) {
  auto terms = parse_linear(s, vars, line);
  std::size_t degree = terms.empty() ? 2 : terms.front().basis.size();
  AltForm w(degree, dim);
  for (const auto& t : terms) {
    if (t.basis.size() != degree) throw ParseError("terms of a form must share one degree", line, t.basis.front().column);
    IndexTuple idx;
    for (const auto& b : t.basis) idx.push_back(index_at(b, dim, line));
    IndexTuple sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("repeated index in a wedge term", line, t.basis.front().column);
    w.add(idx, t.coeff);
  }
  return w;
}

enum class BlockKind { None, Algebra, Lsa, Map, Cochain };

struct Block {
  BlockKind kind = BlockKind::None;
  std::string name;
  std::size_t line = 0;
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::string from, to, over;
  LieAlgebra::Table table;
  std::vector<Vec> products;
  std::vector<bool> product_set;
  ExactMatrix images;
  std::vector<bool> image_set;
  std::size_t image_offset = 0;  // cochain values live in e_{n+1}..e_{2n}
  bool body_started = false;
};

class DocumentParser {
public:
  Document run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
      ++line;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      Span s = trim({raw, 1});
      if (s.text.empty()) continue;
      handle(s, line);
    }
    close_block();
    return std::move(doc_);
  }

private:
  void check_new_name(const Span& w, std::size_t line) {
    if (!is_identifier(w.text)) throw ParseError("invalid name '" + w.text + "'", line, w.column);
    if (doc_.has_name(w.text) || (block_.kind != BlockKind::None && block_.name == w.text))
      throw ParseError("duplicate name '" + w.text + "'", line, w.column);
  }

  std::vector<std::string> vars_for_block() const {
    std::vector<std::string> v = doc_.params;
    v = merge_params(v, block_.params);
    if (block_.kind == BlockKind::Map) {
      v = merge_params(v, doc_.algebra(block_.from)->algebra.params());
      v = merge_params(v, doc_.algebra(block_.to)->algebra.params());
    }
    if (block_.kind == BlockKind::Cochain) v = merge_params(v, doc_.lsa(block_.from)->lsa.params());
    return v;
  }

  std::vector<std::string> parse_params(const std::vector<Span>& words, std::size_t line, std::size_t first = 1) {
    std::vector<std::string> out;
    for (std::size_t i = first; i < words.size(); ++i) {
      const auto& w = words[i];
      if (!is_identifier(w.text) || is_reserved_identifier(w.text) || is_basis_name(w.text))
        throw ParseError("invalid parameter name '" + w.text + "'", line, w.column);
      if (std::find(out.begin(), out.end(), w.text) != out.end())
        throw ParseError("duplicate parameter '" + w.text + "'", line, w.column);
      out.push_back(w.text);
    }
    return out;
  }

  void require_dim(const Span& at, std::size_t line) {
    if (block_.dim == 0) throw ParseError("'dim' must precede the block body", line, at.column);
    block_.body_started = true;
  }

  void handle(const Span& s, std::size_t line) {
    auto words = split_words(s);
    const std::string& kw = words.front().text;
    if (kw == "algebra" || kw == "lsa") {
      close_block();
      if (words.size() != 2) throw ParseError("expected '" + kw + " <name>'", line, s.column);
      check_new_name(words[1], line);
      block_ = Block{};
      block_.kind = kw == "algebra" ? BlockKind::Algebra : BlockKind::Lsa;
      block_.name = words[1].text;
      block_.line = line;
    } else if (kw == "map") {
      close_block();
      if (words.size() != 6 || words[2].text != "from" || words[4].text != "to")
        throw ParseError("expected 'map <name> from <A> to <B>'", line, s.column);
      check_new_name(words[1], line);
      for (std::size_t k : {3u, 5u})
        if (!doc_.algebra(words[k].text))
          throw ParseError("unknown algebra '" + words[k].text + "'", line, words[k].column);
      block_ = Block{};
      block_.kind = BlockKind::Map;
      block_.name = words[1].text;
      block_.line = line;
      block_.from = words[3].text;
      block_.to = words[5].text;
      block_.dim = doc_.algebra(block_.from)->algebra.dim();
      block_.images = ExactMatrix(doc_.algebra(block_.to)->algebra.dim(), block_.dim);
      block_.image_set.assign(block_.dim, false);
    } else if (kw == "cochain") {
      close_block();
      if (words.size() != 4 || words[2].text != "on") throw ParseError("expected 'cochain <name> on <lsa>'", line, s.column);
      check_new_name(words[1], line);
      if (!doc_.lsa(words[3].text)) throw ParseError("unknown lsa '" + words[3].text + "'", line, words[3].column);
      block_ = Block{};
      block_.kind = BlockKind::Cochain;
      block_.name = words[1].text;
      block_.line = line;
      block_.from = words[3].text;
      block_.dim = doc_.lsa(block_.from)->lsa.dim();
      block_.images = ExactMatrix(block_.dim, block_.dim);
      block_.image_set.assign(block_.dim, false);
      block_.image_offset = block_.dim;
    } else if (kw == "params") {
      auto ps = parse_params(words, line);
      if (block_.kind == BlockKind::None) {
        if (!doc_.algebras.empty() || !doc_.lsas.empty() || !doc_.maps.empty() || !doc_.forms.empty() ||
            !doc_.alphas.empty() || !doc_.cochains.empty() || !doc_.params.empty())
          throw ParseError("document-level 'params' must come first", line, s.column);
        doc_.params = ps;
      } else {
        if (block_.body_started) throw ParseError("'params' must precede the block body", line, s.column);
        block_.params = merge_params(block_.params, ps);
      }
    } else if (kw == "dim") {
      if (block_.kind == BlockKind::None) throw ParseError("'dim' outside a block", line, s.column);
      if (words.size() != 2) throw ParseError("expected 'dim <n>'", line, s.column);
      std::size_t n = index_at(words[1], 1000, line) + 1;
      if (block_.kind == BlockKind::Map || block_.kind == BlockKind::Cochain) {
        if (n != block_.dim) throw ParseError("dimension differs from the source", line, words[1].column);
        return;
      }
      if (block_.dim != 0) throw ParseError("duplicate 'dim'", line, s.column);
      block_.dim = n;
      if (block_.kind == BlockKind::Lsa) {
        block_.products.assign(n * n, zero_vec(n));
        block_.product_set.assign(n * n, false);
      }
    } else if (kw == "over") {
      if (block_.kind != BlockKind::Lsa) throw ParseError("'over' is only valid in an lsa block", line, s.column);
      if (words.size() != 2 || !doc_.algebra(words[1].text))
        throw ParseError("expected 'over <known algebra>'", line, s.column);
      block_.over = words[1].text;
    } else if (kw == "bracket" || kw == "prod") {
      bool bracket = kw == "bracket";
      if (block_.kind != (bracket ? BlockKind::Algebra : BlockKind::Lsa))
        throw ParseError("'" + kw + "' outside its block", line, s.column);
      require_dim(s, line);
      auto [head, body] = split_colon({s.text.substr(kw.size()), s.column + kw.size()}, line);
      auto idx = split_words(head);
      if (idx.size() != 2) throw ParseError("expected two basis indices", line, head.column);
      std::size_t i = index_at(idx[0], block_.dim, line), j = index_at(idx[1], block_.dim, line);
      Vec v = parse_vector(body, block_.dim, vars_for_block(), line);
      if (bracket) {
        if (i == j) throw ParseError("bracket of a basis element with itself", line, idx[1].column);
        auto key = std::make_pair(std::min(i, j), std::max(i, j));
        if (block_.table.count(key)) throw ParseError("duplicate bracket entry", line, idx[0].column);
        if (i > j)
          for (auto& x : v) x = -x;
        block_.table[key] = v;
      } else {
        if (block_.product_set[i * block_.dim + j]) throw ParseError("duplicate product entry", line, idx[0].column);
        block_.product_set[i * block_.dim + j] = true;
        block_.products[i * block_.dim + j] = v;
      }
    } else if (kw == "image") {
      if (block_.kind != BlockKind::Map && block_.kind != BlockKind::Cochain)
        throw ParseError("'image' outside a map or cochain block", line, s.column);
      block_.body_started = true;
      auto [head, body] = split_colon({s.text.substr(kw.size()), s.column + kw.size()}, line);
      auto idx = split_words(head);
      if (idx.size() != 1) throw ParseError("expected one basis index", line, head.column);
      std::size_t i = index_at(idx[0], block_.dim, line);
      if (block_.image_set[i]) throw ParseError("duplicate image entry", line, idx[0].column);
      block_.image_set[i] = true;
      Vec v = parse_vector(body, block_.images.rows(), vars_for_block(), line, block_.image_offset);
      for (std::size_t k = 0; k < v.size(); ++k) block_.images(k, i) = v[k];
    } else if (kw == "form" || kw == "alpha") {
      close_block();
      auto [head, body] = split_colon(s, line);
      auto hw = split_words(head);
      bool with_params = kw == "form" && hw.size() >= 6 && hw[4].text == "params";
      if ((hw.size() != 4 && !with_params) || hw[2].text != "on")
        throw ParseError("expected '" + kw + " <name> on <target> :'", line, s.column);
      check_new_name(hw[1], line);
      if (kw == "form") {
        const NamedAlgebra* g = doc_.algebra(hw[3].text);
        if (!g) throw ParseError("unknown algebra '" + hw[3].text + "'", line, hw[3].column);
        std::vector<std::string> extra = with_params ? parse_params(hw, line, 5) : std::vector<std::string>{};
        auto vars = merge_params(merge_params(doc_.params, g->algebra.params()), extra);
        doc_.forms.push_back({hw[1].text, hw[3].text, parse_form(body, g->algebra.dim(), vars, line), extra, line});
      } else {
        const NamedLSA* a = doc_.lsa(hw[3].text);
        if (!a) throw ParseError("unknown lsa '" + hw[3].text + "'", line, hw[3].column);
        std::size_t n = a->lsa.dim();
        auto vars = merge_params(doc_.params, a->lsa.params());
        Cocycle2 c(n);
        std::vector<bool> seen(n * n, false);
        for (const auto& entry : split_on(body, ';')) {
          if (trim(entry).text.empty()) continue;
          auto [eh, eb] = split_colon(entry, line);
          auto idx = split_words(eh);
          if (idx.size() != 2) throw ParseError("expected 'i j : value'", line, eh.column);
          std::size_t i = index_at(idx[0], n, line), j = index_at(idx[1], n, line);
          if (i == j) throw ParseError("alpha(e_i, e_i) is zero by definition", line, idx[1].column);
          if (seen[std::min(i, j) * n + std::max(i, j)]) throw ParseError("duplicate alpha entry", line, idx[0].column);
          seen[std::min(i, j) * n + std::max(i, j)] = true;
          c.set(i, j, parse_vector(eb, n, vars, line, n));
        }
        doc_.alphas.push_back({hw[1].text, hw[3].text, c, line});
      }
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line, s.column);
    }
  }

  void close_block() {
    if (block_.kind == BlockKind::None) return;
    auto params = merge_params(doc_.params, block_.params);
    if (block_.dim == 0)
      throw ParseError("block '" + block_.name + "' has no 'dim'", block_.line, 1);
    switch (block_.kind) {
      case BlockKind::Algebra: {
        LieAlgebra::Table t;
        for (auto& [k, v] : block_.table)
          if (!is_zero_vec(v)) t[k] = v;
        doc_.algebras.push_back({block_.name, make_algebra_unchecked(block_.dim, params, std::move(t)), block_.line});
        break;
      }
      case BlockKind::Lsa:
        doc_.lsas.push_back(
            {block_.name, make_lsa_unchecked(block_.dim, params, std::move(block_.products)), block_.over, block_.line});
        break;
      case BlockKind::Map:
        doc_.maps.push_back({block_.name, block_.from, block_.to, block_.images, block_.params, block_.line});
        break;
      case BlockKind::Cochain:
        doc_.cochains.push_back({block_.name, block_.from, block_.images, block_.params, block_.line});
        break;
      case BlockKind::None:
        break;
    }
    block_ = Block{};
  }

  Document doc_;
  Block block_;
};

std::string params_line(const std::vector<std::string>& params, const std::vector<std::string>& shared) {
  std::string s;
  for (const auto& p : params)
    if (std::find(shared.begin(), shared.end(), p) == shared.end()) s += " " + p;
  return s.empty() ? "" : "params" + s + "\n";
}

}  // namespace

Document parse_source(const std::string& text) {
  return DocumentParser().run(text);
}

std::string print_algebra(const std::string& name, const LieAlgebra& g, const std::vector<std::string>& shared) {
  std::string s = "algebra " + name + "\ndim " + std::to_string(g.dim()) + "\n" + params_line(g.params(), shared);
  for (const auto& [ij, v] : g.table())
    s += "bracket " + std::to_string(ij.first + 1) + " " + std::to_string(ij.second + 1) + " : " + format_vector(v) +
         "\n";
  return s;
}

std::string print_lsa(const std::string& name, const LSA& a, const std::string& over,
                      const std::vector<std::string>& shared) {
  std::string s = "lsa " + name + "\ndim " + std::to_string(a.dim()) + "\n" + params_line(a.params(), shared);
  if (!over.empty()) s += "over " + over + "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero_vec(a.product(i, j)))
        s += "prod " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " : " + format_vector(a.product(i, j)) +
             "\n";
  return s;
}

std::string print_map(const std::string& name, const std::string& from, const std::string& to, const LinMap& m,
                      const std::vector<std::string>& params) {
  std::string s = "map " + name + " from " + from + " to " + to + "\n" + params_line(params, {});
  for (std::size_t j = 0; j < m.cols(); ++j) s += "image " + std::to_string(j + 1) + " : " + format_vector(m.col(j)) + "\n";
  return s;
}

std::string print_cochain(const std::string& name, const std::string& on, const Cochain1& phi,
                          const std::vector<std::string>& params) {
  std::string s = "cochain " + name + " on " + on + "\n" + params_line(params, {});
  std::size_t n = phi.cols();
  for (std::size_t j = 0; j < n; ++j) {
    Vec shifted = zero_vec(2 * n);
    for (std::size_t k = 0; k < n; ++k) shifted[n + k] = phi(k, j);
    s += "image " + std::to_string(j + 1) + " : " + format_vector(shifted) + "\n";
  }
  return s;
}

std::string print_form(const std::string& name, const std::string& on, const AltForm& w,
                       const std::vector<std::string>& params) {
  std::string head = "form " + name + " on " + on;
  for (std::size_t i = 0; i < params.size(); ++i) head += (i == 0 ? " params " : " ") + params[i];
  return head + " : " + w.str() + "\n";
}

Vec parse_vector_text(const std::string& text, std::size_t dim, const std::vector<std::string>& vars) {
  return parse_vector({text, 1}, dim, vars, 0);
}

AltForm parse_form_text(const std::string& text, std::size_t dim, const std::vector<std::string>& vars) {
  return parse_form({text, 1}, dim, vars, 0);
}

std::string print_alpha(const std::string& name, const std::string& on, const Cocycle2& a) {
  std::string s = "alpha " + name + " on " + on + " :";
  bool first = true;
  std::size_t n = a.dim();
  for (const auto& [ij, v] : a.table()) {
    Vec shifted = zero_vec(2 * n);
    for (std::size_t k = 0; k < n; ++k) shifted[n + k] = v[k];
    s += std::string(first ? " " : " ; ") + std::to_string(ij.first + 1) + " " + std::to_string(ij.second + 1) +
         " : " + format_vector(shifted);
    first = false;
  }
  return s + "\n";
}

std::string print_document(const Document& doc) {
  std::string s;
  if (!doc.params.empty()) s += params_line(doc.params, {}) + "\n";
  for (const auto& a : doc.algebras) s += print_algebra(a.name, a.algebra, doc.params) + "\n";
  for (const auto& a : doc.lsas) s += print_lsa(a.name, a.lsa, a.over, doc.params) + "\n";
  for (const auto& m : doc.maps) s += print_map(m.name, m.from, m.to, m.matrix, m.params) + "\n";
  for (const auto& c : doc.cochains) s += print_cochain(c.name, c.on, c.matrix, c.params) + "\n";
  for (const auto& f : doc.forms) s += print_form(f.name, f.on, f.form, f.params);
  for (const auto& a : doc.alphas) s += print_alpha(a.name, a.on, a.alpha);
  return s;
}

std::vector<ValidationIssue> validate_document(const Document& doc) {
  std::vector<ValidationIssue> out;
  for (const auto& a : doc.algebras)
    for (const auto& d : jacobi_defects(a.algebra)) out.push_back({a.name, a.line, d.describe()});
  for (const auto& a : doc.lsas) {
    for (const auto& d : associator_defects(a.lsa)) out.push_back({a.name, a.line, d.describe()});
    for (const auto& d : jacobi_defects(a.lsa.commutator()))
      out.push_back({a.name, a.line, "commutator: " + d.describe()});
    if (!a.over.empty()) {
      const auto& g = doc.algebra(a.over)->algebra;
      if (g.dim() != a.lsa.dim()) {
        out.push_back({a.name, a.line, "dimension differs from '" + a.over + "'"});
      } else {
        for (const auto& [i, j] : commutator_defects(a.lsa, g))
          out.push_back({a.name, a.line,
                         "e" + std::to_string(i + 1) + ".e" + std::to_string(j + 1) + " - e" + std::to_string(j + 1) +
                             ".e" + std::to_string(i + 1) + " differs from the bracket of '" + a.over + "'"});
      }
    }
  }
  for (const auto& m : doc.maps) {
    const auto& g1 = doc.algebra(m.from)->algebra;
    const auto& g2 = doc.algebra(m.to)->algebra;
    for (const auto& d : check_homomorphism(m.matrix, g1, g2)) out.push_back({m.name, m.line, d.describe()});
  }
  for (const auto& a : doc.alphas) {
    const auto& l = doc.lsa(a.on)->lsa;
    for (const auto& [t, v] : coboundary_2_defects(l, a.alpha)) {
      Vec shifted = zero_vec(2 * l.dim());
      for (std::size_t k = 0; k < l.dim(); ++k) shifted[l.dim() + k] = v[k];
      out.push_back({a.name, a.line,
                     "not a rho-cocycle on (e" + std::to_string(t[0] + 1) + ", e" + std::to_string(t[1] + 1) + ", e" +
                         std::to_string(t[2] + 1) + "): " + format_vector(shifted)});
    }
  }
  return out;
}

}  // namespace liecas
