#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lietame/rational.hpp"

namespace lietame {

// Exponent vector of a monomial; length always equals the variable count.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Canonical term order: graded lexicographic, stored descending so the
// leading term comes first when iterating or printing.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q with a fixed, ordered variable list.
// Zero coefficients are never stored; two polynomials over the same variable
// list are equal iff their term maps are equal.
class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

  MultiPoly() = default; // zero polynomial over the empty variable list
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
  static MultiPoly monomial(std::vector<std::string> vars, Exponents e, const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coeff(const Exponents& e) const;
  Rational leading_coeff() const; // 0 for the zero polynomial

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator/=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(int k) const;
  MultiPoly derivative(std::size_t var) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Substitutes images[i] for variable i; all images must share one variable
  // list, which becomes the result's.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  // Sets every variable outside `keep` to zero and re-expresses the result
  // over the kept variables (in the order given).
  MultiPoly restrict_to(const std::vector<std::size_t>& keep) const;

  std::string to_string() const;

private:
  void check_same_vars(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class PolyOp { add, mul, sub };

// Spec-level entry point for exact ring arithmetic.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

} // namespace lietame
