#pragma once

#include <vector>

#include "coinv/poly.hpp"

namespace coinv {

struct GroebnerBudget {
    std::size_t max_pairs = 500000;
    std::size_t max_terms = 5000000;
};

// Buchberger with the normal selection strategy (smallest lcm degree first,
// lex tie-break) and the coprime-leading-term criterion, followed by
// inter-reduction.  Returns THE reduced basis: monic, sorted by descending
// leading term.  Throws BudgetExceeded when a ceiling is hit.
std::vector<Poly> buchberger(const std::vector<Poly>& generators, const GroebnerBudget& budget = {});

// Remainder of f under multivariate division by the basis; unique when the
// basis is a Groebner basis.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

// The two reducedness conditions: monic leading coefficients, and no leading
// term divides any term of another element.
bool is_reduced_basis(const std::vector<Poly>& basis);

// Monomials divisible by no leading term of the basis.  Requires every
// variable to carry a pure-power leading term (zero-dimensional quotient).
std::vector<Monomial> standard_monomials(const std::vector<Poly>& basis);

// Equality as sets of polynomials after making both sides monic.
bool same_basis(std::vector<Poly> a, std::vector<Poly> b);

}  // namespace coinv
