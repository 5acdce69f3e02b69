#include "rsee/polynomial.hpp"

#include <charconv>
#include <stdexcept>

namespace rsee {

Polynomial::Polynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<std::uint32_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Element c) { return Polynomial(std::vector<Element>{c}); }

Polynomial Polynomial::monomial(Element c, std::size_t power) {
  if (c.is_zero()) return {};
  std::vector<Element> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::cyclic_modulus(std::size_t n) {
  std::vector<Element> v(n + 1);
  v[0] = Element::one();
  v[n] = Element::one();
  return Polynomial(std::move(v));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(coeffs_[i].value());
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text, const Field& field) {
  std::vector<Element> coeffs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::uint32_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
      throw std::invalid_argument("malformed polynomial coefficient in '" + std::string(text) + "'");
    }
    if (value >= field.size()) {
      throw std::invalid_argument("coefficient " + std::to_string(value) + " outside the field");
    }
    coeffs.emplace_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return Polynomial(std::move(coeffs));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  const auto& longer = a.size() >= b.size() ? a : b;
  const auto& shorter = a.size() >= b.size() ? b : a;
  std::vector<Element> out(longer.coeffs().begin(), longer.coeffs().end());
  for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = Field::add(out[i], shorter.coeff(i));
  return Polynomial(std::move(out));
}

Polynomial poly_mul(const Field& field, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Element> out(a.size() + b.size() - 1);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] = Field::add(out[i + j], field.mul(ac[i], bc[j]));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial poly_scale(const Field& field, const Polynomial& p, Element c) {
  if (c == Element::one()) return p;
  std::vector<Element> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& e : out) e = field.mul(e, c);
  return Polynomial(std::move(out));
}

DivMod poly_divmod(const Field& field, const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.size() < den.size()) return {Polynomial{}, num};

  const std::size_t dlen = den.size();
  const auto dc = den.coeffs();
  const bool monic = den.is_monic();
  const Element lead_inv = monic ? Element::one() : field.inv(den.leading());

  std::vector<Element> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<Element> quot(num.size() - dlen + 1);

  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const Element top = rem[shift + dlen - 1];
    const Element q = monic ? top : field.mul(top, lead_inv);
    quot[shift] = q;
    rem[shift + dlen - 1] = Element::zero();
    for (std::size_t j = 0; j + 1 < dlen; ++j) {
      rem[shift + j] = Field::add(rem[shift + j], field.mul(q, dc[j]));
    }
  }
  rem.resize(dlen - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Element poly_eval(const Field& field, const Polynomial& p, Element at) {
  const auto c = p.coeffs();
  if (c.empty()) return Element::zero();
  Element acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = Field::add(field.mul(acc, at), c[i]);
  return acc;
}

Polynomial reduce_cyclic(const Polynomial& p, std::size_t n) {
  if (p.size() <= n) return p;
  std::vector<Element> out(n);
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out[i % n] = Field::add(out[i % n], c[i]);
  return Polynomial(std::move(out));
}

}  // namespace rsee
