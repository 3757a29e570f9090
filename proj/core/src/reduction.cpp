#include "amalgam/reduction.hpp"

namespace amalgam {

ReductionContext::ReductionContext(Field f, PrimeKind kind, IdealSign sign, FieldElem omega)
    : field_(std::move(f)), kind_(kind), sign_(sign), omega_(omega), inv2_(field_.inv(2)) {}

ReductionContext ReductionContext::make(std::uint32_t p, IdealSign sign) {
  if (legendre_minus_two(p) == Residuosity::square) {
    Field f = Field::prime(p);
    const std::uint32_t r = sqrt_mod(-2, p);
    const FieldElem w = sign == IdealSign::plus ? r : (p - r) % p;
    return ReductionContext(std::move(f), PrimeKind::split, sign, w);
  }
  Field f = Field::quadratic(p);
  const FieldElem w = f.t();
  return ReductionContext(std::move(f), PrimeKind::inert, IdealSign::plus, w);
}

FieldElem ReductionContext::reduce(const RingElem& u) const {
  const unsigned long p = this->p();
  const FieldElem x = static_cast<FieldElem>(mpz_fdiv_ui(u.x().get_mpz_t(), p));
  const FieldElem y = static_cast<FieldElem>(mpz_fdiv_ui(u.y().get_mpz_t(), p));
  const FieldElem num = field_.add(x, field_.mul(y, omega_));
  return field_.mul(num, field_.pow(inv2_, u.k()));
}

FqMatrix ReductionContext::reduce(const MatrixR& m) const {
  FqMatrix r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r(i, j) = reduce(m(i, j));
  return r;
}

std::string ReductionContext::describe() const {
  const std::string base = "p=" + std::to_string(p());
  if (kind_ == PrimeKind::inert) return base + " inert, GF(" + std::to_string(p()) + "^2), w -> t";
  return base + " split (" + (sign_ == IdealSign::plus ? "plus" : "minus") + "), w -> " +
         std::to_string(omega_);
}

bool check_unitary_form(const FqMatrix& g, const ReductionContext& ctx) {
  if (ctx.kind() != PrimeKind::inert) throw WrongContextKind();
  return preserves_standard_form(ctx.field(), g);
}

}  // namespace amalgam
