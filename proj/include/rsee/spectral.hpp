#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rsee/galois.hpp"
#include "rsee/polynomial.hpp"

namespace rsee {

// Values of a polynomial at alpha^0, ..., alpha^(n-1); index i is the value at alpha^i.
class EvaluationVector {
 public:
  EvaluationVector() = default;
  explicit EvaluationVector(std::vector<Element> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  Element operator[](std::size_t i) const { return values_[i]; }
  Element& operator[](std::size_t i) { return values_[i]; }
  std::span<const Element> values() const { return values_; }

  friend bool operator==(const EvaluationVector&, const EvaluationVector&) = default;

 private:
  std::vector<Element> values_;
};

// A known value at position i, i.e. at alpha^i.
struct Point {
  std::size_t position;
  Element value;
};

// Forward transform: values[i] = p(alpha^i). Requires n == field.order() and
// degree(p) < n; throws std::domain_error otherwise.
EvaluationVector evaluate_all(const Field& field, const Polynomial& p, std::size_t n);

// Inverse transform: the unique T with degree < n and T(alpha^i) = v[i].
// Throws std::domain_error when v.size() != field.order().
Polynomial interpolate_all(const Field& field, const EvaluationVector& v);

// Lagrange interpolation through points at distinct positions in [0, n).
// The result has degree < points.size(). Throws std::domain_error on an empty
// set, a duplicate position, or a position out of range.
Polynomial interpolate_subset(const Field& field, std::span<const Point> points);

// Exact quotient (x^n - 1) / locator. Throws std::domain_error when the locator
// does not divide x^n - 1.
Polynomial cyclotomic_quotient(const Field& field, const Polynomial& locator, std::size_t n);

}  // namespace rsee
