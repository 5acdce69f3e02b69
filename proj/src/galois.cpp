#include "rsee/galois.hpp"

#include <stdexcept>
#include <string>

namespace rsee {

namespace {

// Primitive polynomials, one per degree, indexed by m - 3.
constexpr std::uint32_t kDefaultPolys[] = {
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x89,    // x^7 + x^3 + 1
    0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
};

void check_degree(unsigned m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree) {
    throw std::invalid_argument("field degree m must be in [3, 16], got " + std::to_string(m));
  }
}

}  // namespace

std::uint32_t Field::default_primitive_poly(unsigned m) {
  check_degree(m);
  return kDefaultPolys[m - kMinDegree];
}

Field::Field(unsigned m, std::optional<std::uint32_t> prim_poly)
    : m_(m), prim_poly_(prim_poly.value_or(0)), size_(0) {
  check_degree(m);
  if (!prim_poly) prim_poly_ = default_primitive_poly(m);
  if ((prim_poly_ >> m) != 1) {
    throw std::invalid_argument("primitive polynomial must have degree exactly m");
  }
  size_ = 1u << m;
  const std::uint32_t n = size_ - 1;

  log_.assign(size_, 0);
  exp_.assign(2 * static_cast<std::size_t>(n), 0);

  // Walk the powers of x; a primitive polynomial visits every nonzero element
  // exactly once before returning to 1.
  std::uint32_t value = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i > 0 && value == 1) {
      throw std::invalid_argument("polynomial is not primitive: alpha has order " +
                                  std::to_string(i));
    }
    exp_[i] = value;
    log_[value] = i;
    value <<= 1;
    if (value & size_) value ^= prim_poly_;
  }
  if (value != 1) {
    throw std::invalid_argument("polynomial is not primitive: alpha^n != 1");
  }
  for (std::uint32_t i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
}

Element Field::element(std::uint32_t value) const {
  if (value >= size_) {
    throw std::out_of_range("symbol " + std::to_string(value) + " outside GF(2^" +
                            std::to_string(m_) + ")");
  }
  return Element{value};
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  ops::inv();
  const std::uint32_t n = order();
  return Element{exp_[(n - log_[a.value()]) % n]};
}

Element Field::alpha_pow(std::int64_t j) const {
  const auto n = static_cast<std::int64_t>(order());
  std::int64_t r = j % n;
  if (r < 0) r += n;
  return Element{exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t Field::log(Element a) const {
  if (a.is_zero()) throw std::domain_error("log of zero");
  return log_[a.value()];
}

}  // namespace rsee
