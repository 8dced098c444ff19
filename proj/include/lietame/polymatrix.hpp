#pragma once

#include <cstddef>
#include <vector>

#include "lietame/multipoly.hpp"

namespace lietame {

// Square matrix with MultiPoly entries, all sharing one variable list.
struct PolyMatrix {
  std::size_t size = 0;
  std::vector<std::vector<MultiPoly>> entries;

  static PolyMatrix zero(std::size_t n, std::vector<std::string> vars);

  const MultiPoly& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
  MultiPoly& at(std::size_t i, std::size_t j) { return entries[i][j]; }
  const std::vector<std::string>& variables() const;

  void validate() const; // square, consistent variable lists
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

// Coefficients of det(T*Id - M) in descending powers of T: n+1 entries,
// leading coefficient the constant 1. Faddeev-LeVerrier over exact rationals;
// the per-step division by an integer is exact.
std::vector<MultiPoly> charpoly(const PolyMatrix& m, std::size_t max_size = 16);

} // namespace lietame
