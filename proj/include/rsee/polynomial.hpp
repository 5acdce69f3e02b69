#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsee/galois.hpp"

namespace rsee {

// Dense polynomial over GF(2^m); coefficient i multiplies x^i.
//
// Always normalized: the last stored coefficient is nonzero, and the zero
// polynomial stores nothing. The zero polynomial has no degree (degree()
// returns nullopt) and compares below every bound in degree_below().
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Element> coeffs);
  Polynomial(std::initializer_list<std::uint32_t> coeffs);

  static Polynomial constant(Element c);
  // c * x^power
  static Polynomial monomial(Element c, std::size_t power);
  // x^n - 1 (= x^n + 1 in characteristic 2).
  static Polynomial cyclic_modulus(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  // True when the polynomial is zero or its degree is < bound.
  bool degree_below(std::size_t bound) const { return coeffs_.size() <= bound; }
  // Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }

  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element::zero(); }
  // Leading coefficient; zero for the zero polynomial.
  Element leading() const { return coeffs_.empty() ? Element::zero() : coeffs_.back(); }
  bool is_monic() const { return leading() == Element::one(); }
  std::span<const Element> coeffs() const { return coeffs_; }

  // Low-to-high decimal coefficients separated by spaces; "0" for zero.
  std::string to_string() const;
  // Inverse of to_string(); symbols are range-checked against the field.
  // Throws std::invalid_argument on malformed text.
  static Polynomial parse(std::string_view text, const Field& field);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<Element> coeffs_;
};

// The arithmetic kernels below never branch on coefficient values (the only
// shortcut is skipping the leading-coefficient scaling for a monic divisor),
// so their multiplication counts depend only on operand degrees and on
// whether the divisor is monic.

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Field& field, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Field& field, const Polynomial& p, Element c);
// Throws std::domain_error when den is zero.
DivMod poly_divmod(const Field& field, const Polynomial& num, const Polynomial& den);
Element poly_eval(const Field& field, const Polynomial& p, Element at);

// Remainder of p modulo x^n - 1, by folding exponents; uses no multiplications.
Polynomial reduce_cyclic(const Polynomial& p, std::size_t n);

}  // namespace rsee
