#pragma once

#include <map>
#include <vector>

#include "coinv/colored.hpp"
#include "coinv/poly.hpp"

namespace coinv {

// Descent monomial b_g = prod_i x_{pi_i}^{r d_i + c_i} where d_i counts
// descents weakly right of position i.  Works for partial colored
// permutations: distinct values from {1..nvars}, any length.
Monomial descent_monomial(const ColoredWord& g, int nvars);

// Straightening data of a monomial: the colored permutation g(m) sorting the
// exponents (ties by smaller index first, colors = exponents mod r), the
// descent count vector d, the exponent partition lambda, and the complement
// partition mu with r*mu' = lambda - r*d - colors.
struct StraighteningData {
    ColoredWord g;
    std::vector<int> d;
    std::vector<int> lambda;
    std::vector<int> mu;
    std::vector<int> mu_conjugate;
};

StraighteningData straightening_data(const Monomial& m, int r);

// Membership tests for the two descent bases.  For the extended basis the
// stratum (number of exponents equal to kr) is written to *z_out when given.
bool in_descent_basis(const Monomial& m, int n, int k, int r);
bool in_extended_descent_basis(const Monomial& m, int n, int k, int r, int* z_out = nullptr);

// Emits every element of the (n,k)-descent basis (extended: with its stratum
// z; plain basis entries all have z = 0).  Deduplicated, ascending lex.
template <class F>
void for_each_descent_basis(int n, int k, int r, bool extended, F&& f);
std::vector<std::pair<Monomial, int>> descent_basis(int n, int k, int r, bool extended);

// The strict order used by the straightening argument: smaller degree never
// compares; dominance on the exponent partitions, then larger inversion count
// of the underlying uncolored permutation.  Returns true iff a < b.
bool straightening_less(const Monomial& a, const Monomial& b, int r);

struct StraighteningStep {
    Monomial m;
    Rat coeff;
    std::string action;  // "drop", "emit", "reduce"
};

// Expands the coset of m in the descent basis of the chosen ring by the
// worklist algorithm: monomials divisible by a variable-power generator are
// dropped, basis members are emitted, everything else is replaced by
// m - e_{mu(m)}(x^r) b_{g(m)} and requeued.  Deterministic: the worklist is
// processed in descending lex order.
std::map<Monomial, Rat, LexLess> expand_in_basis(const Monomial& m, int n, int k, int r, Ring ring,
                                                 std::vector<StraighteningStep>* trace = nullptr,
                                                 long max_steps = 10000000);

template <class F>
void for_each_descent_basis(int n, int k, int r, bool extended, F&& f) {
    for (const auto& [m, z] : descent_basis(n, k, r, extended)) f(m, z);
}

}  // namespace coinv
