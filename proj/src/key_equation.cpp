#include "rsee/key_equation.hpp"

#include <stdexcept>
#include <utility>

namespace rsee {

namespace {

void validate(const KeyEquationProblem& p) {
  if (p.modulus.is_zero()) throw std::domain_error("key equation modulus is zero");
  const std::size_t mod_deg = *p.modulus.degree();
  if (!p.known.degree_below(mod_deg)) {
    throw std::domain_error("key equation operand degree must be below the modulus degree");
  }
  if (p.stop_degree == 0 || p.stop_degree > mod_deg) {
    throw std::domain_error("key equation stop degree must lie in (0, degree(modulus)]");
  }
}

}  // namespace

KeyEquationSolution solve(const Field& field, const KeyEquationProblem& problem,
                          std::vector<EuclidRow>* trace) {
  validate(problem);

  Polynomial r_prev = problem.modulus;
  Polynomial r_cur = problem.known;
  Polynomial v_prev;
  Polynomial v_cur = Polynomial::constant(Element::one());
  Polynomial u_prev, u_cur;
  if (trace) {
    u_prev = Polynomial::constant(Element::one());
    trace->push_back({u_prev, v_prev, r_prev});
    trace->push_back({u_cur, v_cur, r_cur});
  }

  std::size_t iterations = 0;
  // Terminates: remainder degrees strictly decrease, and zero is below any bound.
  while (!r_cur.degree_below(problem.stop_degree)) {
    ops::iteration();
    auto [q, r_next] = poly_divmod(field, r_prev, r_cur);
    Polynomial v_next = poly_add(v_prev, poly_mul(field, q, v_cur));
    if (trace) {
      UncountedScope quiet;
      Polynomial u_next = poly_add(u_prev, poly_mul(field, q, u_cur));
      trace->push_back({u_next, v_next, r_next});
      u_prev = std::exchange(u_cur, std::move(u_next));
    }
    r_prev = std::exchange(r_cur, std::move(r_next));
    v_prev = std::exchange(v_cur, std::move(v_next));
    ++iterations;
  }

  // v_cur is never zero: it starts at 1 and its degree grows with every step.
  if (v_cur.is_monic()) return {std::move(v_cur), std::move(r_cur), iterations};
  const Element scale = field.inv(v_cur.leading());
  return {poly_scale(field, v_cur, scale), poly_scale(field, r_cur, scale), iterations};
}

}  // namespace rsee
