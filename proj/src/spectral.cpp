#include "rsee/spectral.hpp"

#include <stdexcept>
#include <string>

namespace rsee {

namespace {

void check_length(const Field& field, std::size_t n) {
  if (n != field.order()) {
    throw std::domain_error("transform length " + std::to_string(n) + " != field order " +
                            std::to_string(field.order()));
  }
}

}  // namespace

EvaluationVector evaluate_all(const Field& field, const Polynomial& p, std::size_t n) {
  check_length(field, n);
  if (!p.degree_below(n)) throw std::domain_error("polynomial degree must be < n");
  std::vector<Element> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = poly_eval(field, p, field.alpha_pow(static_cast<std::int64_t>(i)));
  }
  return EvaluationVector(std::move(out));
}

Polynomial interpolate_all(const Field& field, const EvaluationVector& v) {
  const std::size_t n = v.size();
  check_length(field, n);
  // T_j = (1/n) * sum_i v_i alpha^(-ij). n = 2^m - 1 is odd, so 1/n = 1 in
  // characteristic 2, and T_j is the value polynomial evaluated at alpha^(-j).
  const Polynomial value_poly(std::vector<Element>(v.values().begin(), v.values().end()));
  std::vector<Element> coeffs(n);
  for (std::size_t j = 0; j < n; ++j) {
    coeffs[j] = poly_eval(field, value_poly, field.alpha_pow(-static_cast<std::int64_t>(j)));
  }
  return Polynomial(std::move(coeffs));
}

Polynomial interpolate_subset(const Field& field, std::span<const Point> points) {
  if (points.empty()) throw std::domain_error("interpolation needs at least one point");
  const std::size_t n = field.order();
  std::vector<bool> seen(n, false);
  std::vector<Element> xs;
  xs.reserve(points.size());
  for (const auto& p : points) {
    if (p.position >= n) {
      throw std::domain_error("position " + std::to_string(p.position) + " out of range");
    }
    if (seen[p.position]) {
      throw std::domain_error("duplicate position " + std::to_string(p.position));
    }
    seen[p.position] = true;
    xs.push_back(field.alpha_pow(static_cast<std::int64_t>(p.position)));
  }

  // node[] = prod_i (x - x_i), low-to-high, degree s.
  const std::size_t s = points.size();
  std::vector<Element> node(s + 1);
  node[0] = Element::one();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = i + 1; k > 0; --k) {
      node[k] = Field::add(node[k - 1], field.mul(xs[i], node[k]));
    }
    node[0] = field.mul(xs[i], node[0]);
  }

  std::vector<Element> out(s);
  std::vector<Element> basis(s);
  for (std::size_t i = 0; i < s; ++i) {
    // basis = node / (x - x_i) by synthetic division.
    basis[s - 1] = node[s];
    for (std::size_t k = s - 1; k > 0; --k) {
      basis[k - 1] = Field::add(node[k], field.mul(xs[i], basis[k]));
    }
    // denominator = basis(x_i) = prod_{j != i} (x_i - x_j)
    Element denom = basis[s - 1];
    for (std::size_t k = s - 1; k > 0; --k) denom = Field::add(field.mul(denom, xs[i]), basis[k - 1]);
    const Element weight = field.mul(points[i].value, field.inv(denom));
    for (std::size_t k = 0; k < s; ++k) out[k] = Field::add(out[k], field.mul(weight, basis[k]));
  }
  return Polynomial(std::move(out));
}

Polynomial cyclotomic_quotient(const Field& field, const Polynomial& locator, std::size_t n) {
  auto [quotient, remainder] = poly_divmod(field, Polynomial::cyclic_modulus(n), locator);
  if (!remainder.is_zero()) throw std::domain_error("locator does not divide x^n - 1");
  return std::move(quotient);
}

}  // namespace rsee
