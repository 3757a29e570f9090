#include "amalgam/ring.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>
#include <vector>

namespace amalgam {

namespace {

bool even(const mpz_class& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

mpz_class shifted(const mpz_class& v, unsigned bits) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
  return r;
}

}  // namespace

RingElem RingElem::canonicalize(mpz_class x, mpz_class y, unsigned k) {
  if (x == 0 && y == 0) k = 0;
  while (k > 0 && even(x) && even(y)) {
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    mpz_fdiv_q_2exp(y.get_mpz_t(), y.get_mpz_t(), 1);
    --k;
  }
  RingElem r;
  r.x_ = std::move(x);
  r.y_ = std::move(y);
  r.k_ = k;
  return r;
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  r.x_ = -r.x_;
  r.y_ = -r.y_;
  return r;
}

RingElem operator+(const RingElem& u, const RingElem& v) {
  const unsigned k = std::max(u.k_, v.k_);
  return RingElem::canonicalize(shifted(u.x_, k - u.k_) + shifted(v.x_, k - v.k_),
                                shifted(u.y_, k - u.k_) + shifted(v.y_, k - v.k_), k);
}

RingElem operator-(const RingElem& u, const RingElem& v) { return u + (-v); }

RingElem operator*(const RingElem& u, const RingElem& v) {
  // (a + b w)(c + d w) = (ac - 2bd) + (ad + bc) w
  mpz_class x = u.x_ * v.x_ - 2 * u.y_ * v.y_;
  mpz_class y = u.x_ * v.y_ + u.y_ * v.x_;
  return RingElem::canonicalize(std::move(x), std::move(y), u.k_ + v.k_);
}

std::strong_ordering operator<=>(const RingElem& u, const RingElem& v) {
  if (u.k_ != v.k_) return u.k_ <=> v.k_;
  if (int c = cmp(u.x_, v.x_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(u.y_, v.y_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string RingElem::to_string() const {
  return x_.get_str() + "," + y_.get_str() + "," + std::to_string(k_);
}

RingElem RingElem::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) {
    throw std::invalid_argument("ring element must be \"x,y,k\": " + std::string(text));
  }
  auto integer = [&](std::string_view s) {
    mpz_class v;
    if (s.empty() || v.set_str(std::string(s), 10) != 0) {
      throw std::invalid_argument("bad integer in ring element: " + std::string(text));
    }
    return v;
  };
  mpz_class x = integer(parts[0]);
  mpz_class y = integer(parts[1]);
  unsigned k = 0;
  auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), k);
  if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size()) {
    throw std::invalid_argument("bad exponent in ring element: " + std::string(text));
  }
  return canonicalize(std::move(x), std::move(y), k);
}

RingElem conj(const RingElem& u) {
  return RingElem::canonicalize(u.x(), -u.y(), u.k());
}

RingElem norm(const RingElem& u) { return u * conj(u); }

}  // namespace amalgam
