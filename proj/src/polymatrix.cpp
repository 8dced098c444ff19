#include "lietame/polymatrix.hpp"

#include <string>

namespace lietame {

PolyMatrix PolyMatrix::zero(std::size_t n, std::vector<std::string> vars) {
  PolyMatrix m;
  m.size = n;
  m.entries.assign(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
  return m;
}

const std::vector<std::string>& PolyMatrix::variables() const {
  if (entries.empty())
    throw structural_error("PolyMatrix: empty matrix has no variables");
  return entries[0][0].variables();
}

void PolyMatrix::validate() const {
  if (entries.size() != size)
    throw structural_error("PolyMatrix: row count != size");
  for (const auto& row : entries) {
    if (row.size() != size)
      throw structural_error("PolyMatrix: not square");
    for (const auto& p : row)
      if (p.variables() != variables())
        throw structural_error("PolyMatrix: entries disagree on variables");
  }
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size != b.size)
    throw structural_error("PolyMatrix: size mismatch in product");
  PolyMatrix r = PolyMatrix::zero(a.size, a.variables());
  for (std::size_t i = 0; i < a.size; ++i)
    for (std::size_t k = 0; k < a.size; ++k) {
      if (a.entries[i][k].is_zero())
        continue;
      for (std::size_t j = 0; j < a.size; ++j) {
        if (b.entries[k][j].is_zero())
          continue;
        r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
      }
    }
  return r;
}

std::vector<MultiPoly> charpoly(const PolyMatrix& m, std::size_t max_size) {
  m.validate();
  const std::size_t n = m.size;
  if (n == 0)
    throw structural_error("charpoly: empty matrix");
  if (n > max_size)
    throw resource_error("charpoly: size " + std::to_string(n) + " exceeds guard " +
                         std::to_string(max_size));
  const auto& vars = m.variables();

  std::vector<MultiPoly> coeffs;
  coeffs.reserve(n + 1);
  coeffs.push_back(MultiPoly::constant(vars, 1));

  // N_1 = Id; M_k = M*N_k; c_{n-k} = -tr(M_k)/k; N_{k+1} = M_k + c_{n-k}*Id.
  PolyMatrix acc = PolyMatrix::zero(n, vars);
  for (std::size_t i = 0; i < n; ++i)
    acc.entries[i][i] = MultiPoly::constant(vars, 1);

  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    MultiPoly tr(vars);
    for (std::size_t i = 0; i < n; ++i)
      tr += acc.entries[i][i];
    MultiPoly c = tr / Rational(-(long)k);
    coeffs.push_back(c);
    if (k < n)
      for (std::size_t i = 0; i < n; ++i)
        acc.entries[i][i] += c;
  }
  return coeffs;
}

} // namespace lietame
