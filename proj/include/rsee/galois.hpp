#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsee/op_count.hpp"

namespace rsee {

// Element of GF(2^m): bit i of the value is the coefficient of x^i in the
// polynomial-basis representation.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  static constexpr Element zero() { return Element{0}; }
  static constexpr Element one() { return Element{1}; }

  friend constexpr bool operator==(Element, Element) = default;

 private:
  std::uint32_t value_ = 0;
};

// GF(2^m) for 3 <= m <= 16, primitive element alpha = x.
//
// Immutable after construction, so one instance can be shared by any number
// of threads. Multiplications and inversions are reported to the thread's
// active OpCounter, if any.
class Field {
 public:
  static constexpr unsigned kMinDegree = 3;
  static constexpr unsigned kMaxDegree = 16;

  // Throws std::invalid_argument when m is out of range or prim_poly is not a
  // primitive polynomial of degree m.
  explicit Field(unsigned m, std::optional<std::uint32_t> prim_poly = std::nullopt);

  static std::uint32_t default_primitive_poly(unsigned m);

  unsigned degree() const { return m_; }
  std::uint32_t prim_poly() const { return prim_poly_; }
  // q = 2^m.
  std::uint32_t size() const { return size_; }
  // n = 2^m - 1, the multiplicative order of alpha.
  std::uint32_t order() const { return size_ - 1; }

  bool contains(Element a) const { return a.value() < size_; }
  // Checked conversion; throws std::out_of_range for values >= 2^m.
  Element element(std::uint32_t value) const;
  Element alpha() const { return Element{2}; }

  static constexpr Element add(Element a, Element b) { return Element{a.value() ^ b.value()}; }

  Element mul(Element a, Element b) const {
    ops::mul();
    if (a.is_zero() || b.is_zero()) return Element::zero();
    return Element{exp_[log_[a.value()] + log_[b.value()]]};
  }

  // Throws std::domain_error("inverse of zero").
  Element inv(Element a) const;

  Element alpha_pow(std::int64_t j) const;

  // Discrete log base alpha, in [0, n). Throws std::domain_error for zero.
  std::uint32_t log(Element a) const;

 private:
  unsigned m_;
  std::uint32_t prim_poly_;
  std::uint32_t size_;
  std::vector<std::uint32_t> log_;
  // exp_[i] = alpha^i for i in [0, 2n), doubled to skip the mod in mul.
  std::vector<std::uint32_t> exp_;
};

}  // namespace rsee
