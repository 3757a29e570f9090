#include "amalgam/finite_field.hpp"

#include <utility>

namespace amalgam {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || p >= kMaxPrime || !is_prime(p)) throw NotOddPrime(p);
}

std::uint64_t residue(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint32_t canonical_root(std::uint64_t r, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::min<std::uint64_t>(r, (p - r) % p));
}

bool euler_square(std::uint64_t a, std::uint32_t p) {
  return a == 0 || pow_mod(a, (p - 1) / 2, p) == 1;
}

}  // namespace

Residuosity legendre_minus_two(std::uint32_t p) {
  require_odd_prime(p);
  return euler_square(residue(-2, p), p) ? Residuosity::square : Residuosity::nonsquare;
}

std::uint32_t sqrt_mod_tonelli_shanks(std::int64_t a, std::uint32_t p) {
  require_odd_prime(p);
  const std::uint64_t n = residue(a, p);
  if (!euler_square(n, p)) throw NotAResidue(a, p);
  if (n == 0) return 0;

  // p - 1 = q * 2^s with q odd
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (euler_square(z, p)) ++z;

  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(n, q, p);
  std::uint64_t r = pow_mod(n, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    const std::uint64_t b = pow_mod(c, std::uint64_t{1} << (m - i - 1), p);
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return canonical_root(r, p);
}

std::uint32_t sqrt_mod(std::int64_t a, std::uint32_t p) {
  require_odd_prime(p);
  if (p % 4 == 3) {
    const std::uint64_t n = residue(a, p);
    if (!euler_square(n, p)) throw NotAResidue(a, p);
    return canonical_root(pow_mod(n, (p + 1) / 4, p), p);
  }
  return sqrt_mod_tonelli_shanks(a, p);
}

Field::Field(std::uint32_t p, bool ext) : p_(p), q_(ext ? p * p : p), ext_(ext) {
  constexpr std::uint32_t kTableLimit = 1024;
  if (q_ > kTableLimit) return;
  auto tables = std::make_shared<Tables>();
  tables->add.resize(std::size_t{q_} * q_);
  tables->mul.resize(std::size_t{q_} * q_);
  tables->inv.resize(q_);
  for (FieldElem x = 0; x < q_; ++x) {
    for (FieldElem y = 0; y < q_; ++y) {
      tables->add[x * q_ + y] = add_slow(x, y);
      tables->mul[x * q_ + y] = mul_slow(x, y);
    }
  }
  for (FieldElem x = 1; x < q_; ++x) tables->inv[x] = inv_slow(x);
  tables_ = std::move(tables);
}

Field Field::prime(std::uint32_t p) {
  require_odd_prime(p);
  return Field(p, false);
}

Field Field::quadratic(std::uint32_t p) {
  if (legendre_minus_two(p) != Residuosity::nonsquare) {
    throw std::invalid_argument("t^2 + 2 is reducible mod " + std::to_string(p));
  }
  return Field(p, true);
}

FieldElem Field::t() const {
  if (!ext_) throw std::logic_error("prime field has no adjoined root");
  return p_;
}

FieldElem Field::make(std::uint32_t c0, std::uint32_t c1) const {
  if (!ext_ && c1 % p_ != 0) throw std::invalid_argument("prime field element with nonzero t part");
  return c0 % p_ + p_ * (c1 % p_);
}

FieldElem Field::from_int(std::int64_t v) const {
  return static_cast<FieldElem>(residue(v, p_));
}

FieldElem Field::neg(FieldElem x) const {
  const std::uint32_t a = c0(x), b = c1(x);
  return (a == 0 ? 0 : p_ - a) + p_ * (b == 0 ? 0 : p_ - b);
}

FieldElem Field::add_slow(FieldElem x, FieldElem y) const {
  const std::uint32_t a = (c0(x) + c0(y)) % p_;
  const std::uint32_t b = (c1(x) + c1(y)) % p_;
  return a + p_ * b;
}

FieldElem Field::mul_slow(FieldElem x, FieldElem y) const {
  // (a + bt)(c + dt) = (ac - 2bd) + (ad + bc)t
  const std::uint64_t p = p_;
  const std::uint64_t a = c0(x), b = c1(x), c = c0(y), d = c1(y);
  const std::uint64_t re = (a * c + 2 * (p - (b * d) % p)) % p;
  const std::uint64_t im = (a * d + b * c) % p;
  return static_cast<FieldElem>(re + p * im);
}

FieldElem Field::inv_slow(FieldElem x) const {
  if (x == 0) throw DivisionByZero();
  // 1/(a + bt) = (a - bt) / (a^2 + 2b^2)
  const std::uint64_t p = p_;
  const std::uint64_t a = c0(x), b = c1(x);
  const std::uint64_t n = (a * a + 2 * b * b) % p;
  const std::uint64_t ninv = pow_mod(n, p - 2, p);
  const std::uint64_t re = a * ninv % p;
  const std::uint64_t im = (p - b) % p * ninv % p;
  return static_cast<FieldElem>(re + p * im);
}

FieldElem Field::inv(FieldElem x) const {
  if (x == 0) throw DivisionByZero();
  return tables_ ? tables_->inv[x] : inv_slow(x);
}

FieldElem Field::pow(FieldElem x, std::uint64_t e) const {
  FieldElem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

FieldElem Field::frobenius(FieldElem x) const {
  if (!ext_) return x;
  const std::uint32_t b = c1(x);
  return c0(x) + p_ * (b == 0 ? 0 : p_ - b);
}

std::string Field::to_string(FieldElem x) const {
  if (!ext_) return std::to_string(x);
  return std::to_string(c0(x)) + "+" + std::to_string(c1(x)) + "t";
}

}  // namespace amalgam
