#pragma once

#include <vector>

#include "coinv/poly.hpp"

namespace coinv {

// Key polynomial kappa_gamma: the monomial x^gamma when gamma is weakly
// decreasing, otherwise obtained by isobaric divided differences.  The
// resolution order of ascents does not affect the result; pass
// last_ascent=true to exercise the alternate order.
Poly demazure(const std::vector<int>& gamma, bool last_ascent = false);

// The Groebner-basis element attached to S (|S| = n-k+1): the key polynomial
// of the reversed skip composition, with x_i -> x_i^r and the variable order
// reversed.  Its lex leading term is x(S)^r with coefficient 1.
Poly groebner_element(const std::vector<int>& S, int n, int k, int r);

// Generators of the defining ideal: variable powers x_i^{kr+1} (ring R) or
// x_i^{kr} (ring S) together with e_n(x^r), ..., e_{n-k+1}(x^r).
std::vector<Poly> ideal_generators(Ring ring, int n, int k, int r);

// The claimed reduced Groebner basis: variable powers plus the Demazure
// elements for all S of size n-k+1 inside {1..n} (ring R) or {1..n-1} (ring S).
std::vector<Poly> claimed_groebner_basis(Ring ring, int n, int k, int r);

}  // namespace coinv
