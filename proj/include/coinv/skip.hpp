#pragma once

#include <vector>

#include "coinv/colored.hpp"
#include "coinv/common.hpp"
#include "coinv/poly.hpp"

namespace coinv {

// Skip monomial data for S = {s_1 < ... < s_m} inside {1..n}: the exponent of
// x_{s_j} is s_j - j + 1 and all other exponents vanish.
struct SkipData {
    std::vector<int> S;
    Monomial skip_monomial;
    std::vector<int> gamma;           // exponent vector of the skip monomial
    std::vector<int> gamma_reversed;  // gamma read backwards
};

SkipData skip_data(const std::vector<int>& S, int n);

// True if x(S)^r divides m.
bool skip_divides(const std::vector<int>& S, int r, const Monomial& m);

// Nonskip test: no variable power x_i^{kr+1} divides m (x_i^{kr} when strong)
// and no r-th skip power x(S)^r with |S| = n-k+1 divides m.  Subsets are
// scanned recursively with pruning on partial divisibility.
bool is_nonskip(const Monomial& m, int n, int k, int r, bool strong);

// Emits the standard monomial family for the chosen ring in ascending lex
// order: exponent vectors componentwise <= some shuffle of
// (r-1, 2r-1, ..., kr-1) with n-k copies of kr (ring R) or kr-1 (ring S).
std::vector<Monomial> shuffle_basis(int n, int k, int r, Ring ring);

template <class F>
void for_each_shuffle_basis(int n, int k, int r, Ring ring, F&& f) {
    for (const auto& m : shuffle_basis(n, k, r, ring)) f(m);
}

// For m in the nonskip family of (n,k): the unique S with |S| = n-k such that
// x(S)^r | m(S)^r * m while no (n-k+1)-subset works for m(S)^r * m.  Scans all
// candidates, keeps the lexicographically final one, and re-verifies both
// conditions before returning.
std::vector<int> unique_skip_set(const Monomial& m, int n, int k, int r);

// Degree-preserving bijection from faces to nonskip monomials; restricts to
// ordered set partitions <-> strongly nonskip monomials, and the zero block
// is exactly the set of variables with exponent kr.
Monomial psi(const GFace& face);

// Inverse of psi, computed by the largest-letter-first protocol: the final
// block layout is maintained as k slots, a bar step fills a slot and freezes
// it, star steps target the j-th nonfrozen slot from the left.
GFace phi(const Monomial& m, int n, int k, int r);

struct NksCounts {
    Int nonskip;  // |N_{n,k,s}|
    Int osp;      // |OP_{n,k,s}|
};

// Counts both sides of the S_{n,k,s} correspondence by direct enumeration,
// asserting equality, and cross-checks against the suffix-exponent filter
// (rs+(r-1), r(s+1)+(r-1), ..., r(k-1)+(r-1)) inside the (n+k-s, k) family.
NksCounts count_nks(int n, int k, int s, int r);

}  // namespace coinv
