#pragma once

#include <vector>

#include "sunit/numeric.hpp"

namespace sunit {

// dense univariate polynomial over Q, ascending coefficients
using Poly = std::vector<Rat>;

int poly_deg(const Poly& p);
Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Rat& c, const Poly& a);
// remainder of a by b, b != 0
Poly poly_rem(Poly a, const Poly& b);
Poly poly_derivative(const Poly& a);
Rat poly_eval(const Poly& a, const Rat& x);

// resultant of a and b via the subresultant-free Euclidean scheme
Rat poly_resultant(Poly a, Poly b);

// number of distinct real roots of squarefree p in (lo, hi]
int sturm_count(const Poly& p, const Rat& lo, const Rat& hi);

// true if q(alpha) > 0 for every real root alpha of the squarefree,
// totally real polynomial m; requires gcd(m, q) = 1
bool positive_at_all_roots(const Poly& m, const Poly& q);

}  // namespace sunit
