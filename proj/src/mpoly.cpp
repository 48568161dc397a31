#include "liecas/mpoly.hpp"

#include "liecas/error.hpp"
#include "liecas/ratfunc.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace liecas {

std::string to_string(const Rational& q) {
  return q.get_str();
}

namespace {

struct SymbolTable {
  std::mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string, int> ids;
};

SymbolTable& symbols() {
  static SymbolTable t;
  return t;
}

}  // namespace

int intern_variable(std::string_view name) {
  auto& t = symbols();
  std::lock_guard lock(t.mu);
  std::string key(name);
  auto it = t.ids.find(key);
  if (it != t.ids.end()) return it->second;
  int id = static_cast<int>(t.names.size());
  t.names.push_back(key);
  t.ids.emplace(std::move(key), id);
  return id;
}

const std::string& variable_name(int id) {
  auto& t = symbols();
  std::lock_guard lock(t.mu);
  return t.names.at(static_cast<std::size_t>(id));
}

std::optional<int> find_variable(std::string_view name) {
  auto& t = symbols();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it == t.ids.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Power> powers) : powers_(std::move(powers)) {
  std::sort(powers_.begin(), powers_.end());
  std::vector<Power> merged;
  for (const auto& [v, e] : powers_) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  powers_ = std::move(merged);
  for (const auto& pe : powers_) degree_ += pe.second;
}

Monomial Monomial::variable(int id, unsigned exp) {
  return Monomial({{id, exp}});
}

unsigned Monomial::exponent(int id) const {
  for (const auto& [v, e] : powers_)
    if (v == id) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.powers_.reserve(powers_.size() + o.powers_.size());
  auto a = powers_.begin();
  auto b = o.powers_.begin();
  while (a != powers_.end() || b != o.powers_.end()) {
    if (b == o.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      r.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      r.powers_.push_back(*b++);
    } else {
      r.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& d) const {
  Monomial r;
  auto a = powers_.begin();
  for (const auto& [v, e] : d.powers_) {
    while (a != powers_.end() && a->first < v) r.powers_.push_back(*a++);
    if (a == powers_.end() || a->first != v || a->second < e) return std::nullopt;
    if (a->second > e) r.powers_.emplace_back(v, a->second - e);
    ++a;
  }
  while (a != powers_.end()) r.powers_.push_back(*a++);
  r.degree_ = degree_ - d.degree_;
  return r;
}

Monomial Monomial::without(int id) const {
  std::vector<Power> p;
  for (const auto& pe : powers_)
    if (pe.first != id) p.push_back(pe);
  return Monomial(std::move(p));
}

std::string Monomial::str() const {
  std::vector<std::pair<std::string, unsigned>> named;
  for (const auto& [v, e] : powers_) named.emplace_back(variable_name(v), e);
  std::sort(named.begin(), named.end());
  std::string s;
  for (const auto& [n, e] : named) {
    if (!s.empty()) s += '*';
    s += n;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

bool GrlexById::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Lex with smaller id as the more significant variable.
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].first != pb[i].first) return pa[i].first > pb[i].first;
    if (pa[i].second != pb[i].second) return pa[i].second < pb[i].second;
  }
  return pa.size() < pb.size();
}

bool grlex_by_name_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto named = [](const Monomial& m) {
    std::vector<std::pair<std::string, unsigned>> v;
    for (const auto& [id, e] : m.powers()) v.emplace_back(variable_name(id), e);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto na = named(a);
  auto nb = named(b);
  std::size_t i = 0;
  for (; i < na.size() && i < nb.size(); ++i) {
    if (na[i].first != nb[i].first) return na[i].first > nb[i].first;
    if (na[i].second != nb[i].second) return na[i].second < nb[i].second;
  }
  return na.size() < nb.size();
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(std::string_view name) {
  return variable(intern_variable(name));
}

MPoly MPoly::variable(int id) {
  return monomial(Monomial::variable(id), Rational(1));
}

MPoly MPoly::monomial(const Monomial& m, const Rational& c) {
  MPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MPoly::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::vector<int> MPoly::variables() const {
  std::vector<int> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& pe : m.powers()) vs.push_back(pe.first);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

unsigned MPoly::degree_in(int id) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(id));
  return d;
}

std::pair<Monomial, Rational> MPoly::leading_term() const {
  if (terms_.empty()) return {Monomial{}, Rational(0)};
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (grlex_by_name_less(best->first, it->first)) best = it;
  return *best;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw MathError("division by the zero polynomial");
  if (a.is_zero()) return MPoly{};
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  MPoly q;
  MPoly r = a;
  const auto& [lb_m, lb_c] = *b.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& [lr_m, lr_c] = *r.terms_.rbegin();
    auto qm = lr_m.divide(lb_m);
    if (!qm) return std::nullopt;
    Rational qc = lr_c / lb_c;
    MPoly t = MPoly::monomial(*qm, qc);
    q.add_term(*qm, qc);
    r -= t * b;
  }
  return q;
}

std::map<unsigned, MPoly> MPoly::coefficients_in(int id) const {
  std::map<unsigned, MPoly> out;
  for (const auto& [m, c] : terms_) out[m.exponent(id)].add_term(m.without(id), c);
  return out;
}

Rational MPoly::content() const {
  if (terms_.empty()) return Rational(0);
  Integer g = 0;
  Integer l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  if (leading_term().second < 0) r = -r;
  return r;
}

MPoly MPoly::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  return *this * Rational(1 / c);
}

RatFunc MPoly::substitute(const std::map<int, RatFunc>& values) const {
  RatFunc out;
  std::map<std::pair<int, unsigned>, RatFunc> power_cache;
  for (const auto& [m, c] : terms_) {
    MPoly kept = MPoly::monomial(Monomial{}, c);
    RatFunc factor(1);
    std::vector<Monomial::Power> rest;
    for (const auto& [v, e] : m.powers()) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pc = power_cache.find(key);
      if (pc == power_cache.end()) pc = power_cache.emplace(key, it->second.pow(static_cast<int>(e))).first;
      factor *= pc->second;
    }
    kept = MPoly::monomial(Monomial(std::move(rest)), c);
    out += RatFunc(kept) * factor;
  }
  return out;
}

MPoly MPoly::derivative(int id) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(id);
    if (e == 0) continue;
    auto reduced = m.divide(Monomial::variable(id));
    r.add_term(*reduced, c * e);
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return grlex_by_name_less(b.first, a.first); });
  std::string s;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + '*';
      s += m.str();
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
  return os << p.str();
}

// ---------------------------------------------------------------- gcd

namespace {

MPoly content_in(const MPoly& a, int x);

// Pseudo-remainder of a by b in x; b has positive degree in x.
MPoly pseudo_remainder(MPoly a, const MPoly& b, int x) {
  auto bc = b.coefficients_in(x);
  unsigned db = bc.rbegin()->first;
  const MPoly& lb = bc.rbegin()->second;
  while (!a.is_zero()) {
    unsigned da = a.degree_in(x);
    if (da < db) break;
    MPoly la = a.coefficients_in(x).rbegin()->second;
    a = lb * a - la * MPoly::monomial(Monomial::variable(x, da - db), Rational(1)) * b;
  }
  return a;
}

MPoly primitive_in(const MPoly& a, int x) {
  MPoly c = content_in(a, x);
  return *MPoly::divide_exact(a, c);
}

MPoly content_in(const MPoly& a, int x) {
  MPoly g;
  for (const auto& [d, c] : a.coefficients_in(x)) {
    g = gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a == b) return a.primitive();
  auto va = a.variables();
  auto vb = b.variables();
  std::vector<int> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  if (common.empty()) return MPoly(1);
  // Variables occurring in only one argument are content there.
  for (int v : va)
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd(content_in(a, v), b);
  for (int v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd(a, content_in(b, v));
  int x = common.front();
  unsigned best = std::max(a.degree_in(x), b.degree_in(x));
  for (int v : common) {
    unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      x = v;
    }
  }
  MPoly ca = content_in(a, x);
  MPoly cb = content_in(b, x);
  MPoly c = gcd(ca, cb);
  MPoly p = *MPoly::divide_exact(a, ca);
  MPoly q = *MPoly::divide_exact(b, cb);
  if (p.degree_in(x) < q.degree_in(x)) std::swap(p, q);
  while (!q.is_zero() && q.degree_in(x) > 0) {
    MPoly r = pseudo_remainder(p, q, x);
    p = std::move(q);
    if (r.is_zero()) {
      q = MPoly{};
    } else if (r.degree_in(x) == 0) {
      q = MPoly{};
      p = MPoly(1);
    } else {
      q = primitive_in(r, x).primitive();
    }
  }
  if (!q.is_zero()) p = MPoly(1);  // q constant in x after reduction: coprime parts
  MPoly g = primitive_in(p, x);
  return (c * g).primitive();
}

}  // namespace liecas
