#pragma once

#include <cstddef>
#include <vector>

#include "rsee/galois.hpp"
#include "rsee/polynomial.hpp"

namespace rsee {

// W * known = combination (mod modulus), with degree(combination) < stop_degree.
struct KeyEquationProblem {
  Polynomial modulus;
  Polynomial known;
  std::size_t stop_degree = 0;
};

struct KeyEquationSolution {
  Polynomial locator;      // monic W
  Polynomial combination;  // P (or Q), scaled with W
  std::size_t iterations = 0;
};

// One row of the extended Euclidean remainder sequence:
// u * modulus + v * known = r.
struct EuclidRow {
  Polynomial u;
  Polynomial v;
  Polynomial r;
};

// ceil(twice_bound / 2). For integer degrees, deg < (a + b) / 2 is the same
// test as deg < half_ceil(a + b).
constexpr std::size_t half_ceil(std::size_t twice_bound) { return (twice_bound + 1) / 2; }

// Partial extended Euclid on (modulus, known), stopped at the first remainder
// of degree < stop_degree. Throws std::domain_error when the problem is
// malformed (zero modulus, degree(known) >= degree(modulus), or stop_degree
// outside (0, degree(modulus)]).
//
// When `trace` is non-null every remainder row, including the two seeds, is
// appended to it together with its u cofactor. Tracing work is not counted.
KeyEquationSolution solve(const Field& field, const KeyEquationProblem& problem,
                          std::vector<EuclidRow>* trace = nullptr);

}  // namespace rsee
