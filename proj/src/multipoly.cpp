#include "lietame/multipoly.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace lietame {

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db)
    return da > db;
  return a > b; // lex, larger first
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (!c.is_zero())
    p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  if (index >= vars.size())
    throw structural_error("MultiPoly::variable: index out of range");
  MultiPoly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents e, const Rational& c) {
  if (e.size() != vars.size())
    throw structural_error("MultiPoly::monomial: exponent length mismatch");
  for (int k : e)
    if (k < 0)
      throw structural_error("MultiPoly::monomial: negative exponent");
  MultiPoly p(std::move(vars));
  if (!c.is_zero())
    p.terms_.emplace(std::move(e), c);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty())
    return -1;
  return total_degree(terms_.begin()->first); // leading term has max degree
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty())
    return true;
  const int d = total_degree(terms_.begin()->first);
  return total_degree(terms_.rbegin()->first) == d;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::leading_coeff() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size())
    throw structural_error("MultiPoly::add_term: exponent length mismatch");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_)
    throw structural_error("MultiPoly: variable-list mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_)
    r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_same_vars(o);
  MultiPoly r(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  terms_ = std::move(r.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_)
    v *= c;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
  if (c.is_zero())
    throw structural_error("MultiPoly: division by zero scalar");
  for (auto& [e, v] : terms_)
    v /= c;
  return *this;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0)
    throw structural_error("MultiPoly::pow: negative exponent");
  MultiPoly r = constant(vars_, 1);
  for (int i = 0; i < k; ++i)
    r *= *this;
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size())
    throw structural_error("MultiPoly::derivative: index out of range");
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0)
      continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(e[var]));
  }
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size())
    throw structural_error("MultiPoly::evaluate: point dimension mismatch");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k)
        t *= point[i];
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size())
    throw structural_error("MultiPoly::substitute: image count mismatch");
  std::vector<std::string> target =
      images.empty() ? std::vector<std::string>{} : images.front().variables();
  for (const auto& im : images)
    if (im.variables() != target)
      throw structural_error("MultiPoly::substitute: images disagree on variables");

  // Power cache per variable, grown on demand.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(MultiPoly::constant(target, 1));

  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      while ((int)powers[i].size() <= e[i])
        powers[i].push_back(powers[i].back() * images[i]);
      if (e[i] > 0)
        t *= powers[i][e[i]];
    }
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::restrict_to(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> target;
  target.reserve(keep.size());
  for (std::size_t i : keep) {
    if (i >= vars_.size())
      throw structural_error("MultiPoly::restrict_to: index out of range");
    target.push_back(vars_[i]);
  }
  std::vector<int> pos(vars_.size(), -1);
  for (std::size_t j = 0; j < keep.size(); ++j)
    pos[keep[j]] = (int)j;

  MultiPoly r(target);
  Exponents e(keep.size());
  for (const auto& [src, c] : terms_) {
    bool vanishes = false;
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 0)
        continue;
      if (pos[i] < 0) {
        vanishes = true; // dropped variable set to zero
        break;
      }
      e[pos[i]] = src[i];
    }
    if (!vanishes)
      r.add_term(e, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const Rational a = c.abs();
    if (first) {
      if (c.sign() < 0)
        os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit_monomial = total_degree(e) == 0;
    if (a != Rational(1) || unit_monomial) {
      os << a.to_string();
      if (!unit_monomial)
        os << "*";
    }
    bool firstvar = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!firstvar)
        os << "*";
      firstvar = false;
      os << vars_[i];
      if (e[i] > 1)
        os << "^" << e[i];
    }
  }
  return os.str();
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
  case PolyOp::add:
    return a + b;
  case PolyOp::mul:
    return a * b;
  case PolyOp::sub:
    return a - b;
  }
  throw structural_error("poly_arith: unknown op");
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.to_string();
}

} // namespace lietame
