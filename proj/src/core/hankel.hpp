#ifndef HCERT_HANKEL_HPP
#define HCERT_HANKEL_HPP

#include <vector>

#include "rational.hpp"

namespace hcert {

// Determinant of the q x q matrix (a_{n+i+j})_{0<=i,j<q} built from the
// Taylor coefficients a_1, a_2, ... (index 0 of `taylor` holds a_1,
// which is 1 for normalized functions). Fraction-free Bareiss
// elimination over the integers after clearing denominators.
Rational hankel_det(const std::vector<Rational>& taylor, unsigned q, unsigned n);

// generic exact determinant, same algorithm (used by hankel_det and as
// a direct entry point for small matrices)
Rational bareiss_det(std::vector<std::vector<Rational>> m);

}  // namespace hcert

#endif
