#include "liecas/ratfunc.hpp"

#include "liecas/error.hpp"

#include <algorithm>

namespace liecas {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("division by the zero polynomial");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_value();
    if (c != 1) num_ *= Rational(1 / c);
    den_ = MPoly(1);
    return;
  }
  if (auto q = MPoly::divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = MPoly(1);
    return;
  }
  MPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *MPoly::divide_exact(num_, g);
    den_ = *MPoly::divide_exact(den_, g);
    if (den_.is_constant()) {
      normalize();
      return;
    }
  }
  // Integer-primitive pair with positive leading coefficient in the denominator.
  Rational cd = den_.content();
  Rational cn = num_.content();
  num_ = num_.primitive();
  den_ = den_.primitive();
  Rational ratio = cn / cd;
  num_ *= Rational(ratio.get_num());
  den_ *= Rational(ratio.get_den());
}

bool RatFunc::is_one() const {
  return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1;
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw MathError("not a constant: " + str());
  return num_.constant_value() / den_.constant_value();
}

std::vector<int> RatFunc::variables() const {
  auto a = num_.variables();
  auto b = den_.variables();
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_constant()) {
      if (num_.is_zero()) den_ = MPoly(1);
      return *this;
    }
    normalize();
    return *this;
  }
  if (o.den_.is_constant()) {
    num_ += o.num_ * den_;
  } else if (den_.is_constant()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
  } else {
    MPoly g = gcd(den_, o.den_);
    MPoly a = *MPoly::divide_exact(den_, g);
    MPoly b = *MPoly::divide_exact(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = den_ * b;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  return *this += -o;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  return *this *= o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("division by the zero polynomial");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

RatFunc RatFunc::substitute(const std::map<int, RatFunc>& values) const {
  if (values.empty()) return *this;
  return num_.substitute(values) / den_.substitute(values);
}

std::string RatFunc::str() const {
  if (den_.is_constant()) return num_.str();
  auto wrap = [](const MPoly& p) {
    if (p.size() == 1 && p.terms().begin()->second == 1) return p.str();
    return "(" + p.str() + ")";
  };
  std::string d = den_.str();
  if (d.find_first_of("*/+- ") != std::string::npos) d = "(" + d + ")";
  return wrap(num_) + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << f.str();
}

std::map<int, RatFunc> to_substitution(const Assignment& a) {
  std::map<int, RatFunc> out;
  for (const auto& [name, v] : a) out.emplace(intern_variable(name), RatFunc(v));
  return out;
}

RatFunc specialize(const RatFunc& f, const Assignment& a) {
  if (a.empty()) return f;
  return f.substitute(to_substitution(a));
}

}  // namespace liecas
