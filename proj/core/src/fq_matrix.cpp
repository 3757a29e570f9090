#include "amalgam/fq_matrix.hpp"

#include <utility>

namespace amalgam {

FqMatrix FqMatrix::identity() {
  FqMatrix m;
  for (std::size_t i = 0; i < kDim; ++i) m(i, i) = 1;
  return m;
}

std::size_t FqMatrixHash::operator()(const FqMatrix& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (FieldElem x : m.e) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

FqMatrix mul(const Field& F, const FqMatrix& m, const FqMatrix& n) {
  FqMatrix r;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      FieldElem acc = 0;
      for (std::size_t l = 0; l < kDim; ++l) {
        if (m(i, l) != 0 && n(l, j) != 0) acc = F.add(acc, F.mul(m(i, l), n(l, j)));
      }
      r(i, j) = acc;
    }
  }
  return r;
}

FqMatrix scale(const Field& F, const FqMatrix& m, FieldElem s) {
  FqMatrix r;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = F.mul(m.e[i], s);
  return r;
}

FqMatrix transpose(const FqMatrix& m) {
  FqMatrix r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r(i, j) = m(j, i);
  return r;
}

FqMatrix frobenius(const Field& F, const FqMatrix& m) {
  FqMatrix r;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = F.frobenius(m.e[i]);
  return r;
}

FqMatrix power(const Field& F, const FqMatrix& m, unsigned long e) {
  FqMatrix result = FqMatrix::identity();
  FqMatrix base = m;
  while (e > 0) {
    if (e & 1UL) result = mul(F, result, base);
    e >>= 1;
    if (e > 0) base = mul(F, base, base);
  }
  return result;
}

FieldElem det(const Field& F, const FqMatrix& m) {
  FqMatrix a = m;
  FieldElem d = 1;
  for (std::size_t col = 0; col < kDim; ++col) {
    std::size_t pivot = col;
    while (pivot < kDim && a(pivot, col) == 0) ++pivot;
    if (pivot == kDim) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < kDim; ++j) std::swap(a(col, j), a(pivot, j));
      d = F.neg(d);
    }
    d = F.mul(d, a(col, col));
    const FieldElem inv = F.inv(a(col, col));
    for (std::size_t i = col + 1; i < kDim; ++i) {
      if (a(i, col) == 0) continue;
      const FieldElem factor = F.mul(a(i, col), inv);
      for (std::size_t j = col; j < kDim; ++j) a(i, j) = F.sub(a(i, j), F.mul(factor, a(col, j)));
    }
  }
  return d;
}

FqMatrix inverse(const Field& F, const FqMatrix& m) {
  FqMatrix a = m;
  FqMatrix r = FqMatrix::identity();
  for (std::size_t col = 0; col < kDim; ++col) {
    std::size_t pivot = col;
    while (pivot < kDim && a(pivot, col) == 0) ++pivot;
    if (pivot == kDim) throw DivisionByZero();
    for (std::size_t j = 0; j < kDim; ++j) {
      std::swap(a(col, j), a(pivot, j));
      std::swap(r(col, j), r(pivot, j));
    }
    const FieldElem inv = F.inv(a(col, col));
    for (std::size_t j = 0; j < kDim; ++j) {
      a(col, j) = F.mul(a(col, j), inv);
      r(col, j) = F.mul(r(col, j), inv);
    }
    for (std::size_t i = 0; i < kDim; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const FieldElem factor = a(i, col);
      for (std::size_t j = 0; j < kDim; ++j) {
        a(i, j) = F.sub(a(i, j), F.mul(factor, a(col, j)));
        r(i, j) = F.sub(r(i, j), F.mul(factor, r(col, j)));
      }
    }
  }
  return r;
}

unsigned long order(const Field& F, const FqMatrix& m, unsigned long cap) {
  FqMatrix acc = m;
  for (unsigned long n = 1; n <= cap; ++n) {
    if (acc.is_identity()) return n;
    acc = mul(F, acc, m);
  }
  return 0;
}

bool is_scalar(const FqMatrix& m) {
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      if (i == j ? m(i, j) != m(0, 0) : m(i, j) != 0) return false;
  return true;
}

bool preserves_standard_form(const Field& F, const FqMatrix& g) {
  return mul(F, transpose(frobenius(F, g)), g).is_identity();
}

std::string to_string(const Field& F, const FqMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < kDim; ++i) {
    if (i > 0) out += "; ";
    for (std::size_t j = 0; j < kDim; ++j) {
      if (j > 0) out += ' ';
      out += F.to_string(m(i, j));
    }
  }
  return out + "]";
}

}  // namespace amalgam
