#include "amalgam/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace amalgam {

MatrixR MatrixR::identity() { return scalar(RingElem(1)); }

MatrixR MatrixR::scalar(const RingElem& s) {
  MatrixR m;
  for (std::size_t i = 0; i < kDim; ++i) m(i, i) = s;
  return m;
}

MatrixR operator*(const MatrixR& m, const MatrixR& n) {
  MatrixR r;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      RingElem acc;
      for (std::size_t l = 0; l < kDim; ++l) {
        if (m(i, l).is_zero() || n(l, j).is_zero()) continue;
        acc += m(i, l) * n(l, j);
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

MatrixR operator+(const MatrixR& m, const MatrixR& n) {
  MatrixR r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r(i, j) = m(i, j) + n(i, j);
  return r;
}

std::string MatrixR::encode() const {
  std::string out;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (i + j > 0) out += '|';
      out += rows_[i][j].to_string();
    }
  }
  return out;
}

MatrixR adjoint(const MatrixR& m) {
  MatrixR r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r(i, j) = conj(m(j, i));
  return r;
}

bool is_unitary(const MatrixR& m) { return (m * adjoint(m)).is_identity(); }

RingElem det(const MatrixR& m) {
  std::array<std::size_t, kDim> perm;
  std::iota(perm.begin(), perm.end(), 0);
  RingElem total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = i + 1; j < kDim; ++j) inversions += perm[i] > perm[j];
    RingElem term(1);
    for (std::size_t i = 0; i < kDim && !term.is_zero(); ++i) term *= m(i, perm[i]);
    if (term.is_zero()) continue;
    total += (inversions % 2 == 0) ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

MatrixR power(const MatrixR& m, unsigned long e) {
  MatrixR result = MatrixR::identity();
  MatrixR base = m;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MatrixR unitary_inverse(const MatrixR& m) {
  MatrixR inv = adjoint(m);
  if (!(m * inv).is_identity()) throw std::domain_error("matrix is not unitary");
  return inv;
}

unsigned long element_order(const MatrixR& m, unsigned long cap) {
  if (cap < 1) throw std::invalid_argument("order cap must be >= 1");
  MatrixR acc = m;
  for (unsigned long n = 1; n <= cap; ++n) {
    if (acc.is_identity()) return n;
    acc = acc * m;
  }
  throw OrderExceedsCap(cap);
}

std::string CharPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += ' ';
    out += coeffs[i].to_string();
  }
  return out;
}

CharPoly char_poly(const MatrixR& m) {
  // Coefficients of det(xI - A_r) for the leading r x r block, highest degree first.
  std::vector<RingElem> prev{RingElem(1)};
  for (std::size_t r = 0; r < kDim; ++r) {
    // Toeplitz column: 1, -a_rr, -R c, -R A c, ..., -R A^{r-1} c
    std::vector<RingElem> col;
    col.reserve(r + 2);
    col.emplace_back(1);
    col.push_back(-m(r, r));
    std::vector<RingElem> v(r);  // A_r^i c
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t step = 0; step < r; ++step) {
      RingElem dot;
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * v[i];
      col.push_back(-dot);
      std::vector<RingElem> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<RingElem> cur(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) cur[i] += col[i - j] * prev[j];
    prev = std::move(cur);
  }
  CharPoly p;
  for (std::size_t i = 0; i <= kDim; ++i) p.coeffs[i] = prev[kDim - i];
  return p;
}

MatrixR evaluate(const CharPoly& p, const MatrixR& m) {
  MatrixR acc = MatrixR::scalar(p.coeffs[kDim]);
  for (std::size_t i = kDim; i-- > 0;) acc = acc * m + MatrixR::scalar(p.coeffs[i]);
  return acc;
}

bool is_self_reciprocal(const CharPoly& p) {
  const RingElem& c0 = p.coeffs[0];
  if (!(c0 == RingElem(1) || c0 == RingElem(-1))) throw NonUnitConstantTerm();
  // x^5 p(1/x) has coefficients reversed; comparing against c0 * p covers both signs
  // since the reversed polynomial has leading coefficient c0.
  for (std::size_t i = 0; i <= kDim; ++i) {
    if (!(p.coeffs[kDim - i] == c0 * p.coeffs[i])) return false;
  }
  return true;
}

std::string to_fixture_block(const MatrixR& m) {
  std::string out;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (j > 0) out += ", ";
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

MatrixR parse_fixture_block(const std::vector<std::string>& lines) {
  if (lines.size() != kDim) {
    throw std::invalid_argument("matrix block must have 5 lines, got " + std::to_string(lines.size()));
  }
  MatrixR m;
  for (std::size_t i = 0; i < kDim; ++i) {
    std::string_view line = lines[i];
    std::size_t j = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t sep = line.find(", ", start);
      const std::string_view cell = line.substr(start, sep == std::string_view::npos ? line.npos : sep - start);
      if (j >= kDim) throw std::invalid_argument("too many entries in row: " + lines[i]);
      m(i, j++) = RingElem::parse(cell);
      if (sep == std::string_view::npos) break;
      start = sep + 2;
    }
    if (j != kDim) throw std::invalid_argument("too few entries in row: " + lines[i]);
  }
  return m;
}

}  // namespace amalgam
