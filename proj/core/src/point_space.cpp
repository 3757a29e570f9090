#include "amalgam/point_space.hpp"

#include <limits>
#include <stdexcept>

namespace amalgam {

PointSpace::PointSpace(Field field, ActionDomain domain)
    : field_(std::move(field)), domain_(domain), q_(field_.order()) {
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < kDim; ++i) qn *= q_;
  if (domain_ == ActionDomain::vectors) {
    slots_ = qn;
  } else {
    slots_ = (qn - 1) / (q_ - 1);
    std::uint64_t acc = 0;
    std::uint64_t block = qn / q_;  // q^4
    for (std::size_t j = 0; j < kDim; ++j) {
      offsets_[j] = acc;
      acc += block;
      block /= q_;
    }
    offsets_[kDim] = acc;
  }
  if (slots_ > std::numeric_limits<Point>::max()) {
    throw std::length_error("point space too large to index: " + std::to_string(slots_));
  }
}

std::uint64_t PointSpace::point_count() const {
  return domain_ == ActionDomain::vectors ? slots_ - 1 : slots_;
}

Point PointSpace::index(const FqVector& v) const {
  if (domain_ == ActionDomain::vectors) {
    std::uint64_t idx = 0;
    for (std::size_t i = kDim; i-- > 0;) idx = idx * q_ + v[i];
    return static_cast<Point>(idx);
  }
  std::size_t j = 0;
  while (j < kDim && v[j] == 0) ++j;
  if (j == kDim) throw std::invalid_argument("zero vector has no projective point");
  const FieldElem s = field_.inv(v[j]);
  std::uint64_t idx = 0;
  for (std::size_t i = kDim; i-- > j + 1;) idx = idx * q_ + field_.mul(v[i], s);
  return static_cast<Point>(offsets_[j] + idx);
}

FqVector PointSpace::vector(Point i) const {
  FqVector v{};
  std::uint64_t idx = i;
  if (domain_ == ActionDomain::vectors) {
    for (std::size_t k = 0; k < kDim; ++k) {
      v[k] = static_cast<FieldElem>(idx % q_);
      idx /= q_;
    }
    return v;
  }
  std::size_t j = 0;
  while (j + 1 < kDim && idx >= offsets_[j + 1]) ++j;
  idx -= offsets_[j];
  v[j] = 1;
  for (std::size_t k = j + 1; k < kDim; ++k) {
    v[k] = static_cast<FieldElem>(idx % q_);
    idx /= q_;
  }
  return v;
}

Point PointSpace::basis_point(std::size_t i) const {
  FqVector v{};
  v[i] = 1;
  return index(v);
}

}  // namespace amalgam
