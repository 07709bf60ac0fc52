#include "coinv/demazure.hpp"

#include <algorithm>
#include <functional>

#include "coinv/skip.hpp"

namespace coinv {

Poly demazure(const std::vector<int>& gamma, bool last_ascent) {
    for (int g : gamma)
        if (g < 0) throw std::invalid_argument("demazure: negative part");
    int n = static_cast<int>(gamma.size());
    std::function<Poly(const std::vector<int>&)> rec = [&](const std::vector<int>& g) -> Poly {
        int pick = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (g[i] < g[i + 1]) {
                pick = i;
                if (!last_ascent) break;
            }
        }
        if (pick < 0) {
            Monomial m{std::vector<int>(g)};
            return Poly(m, Rat(1));
        }
        std::vector<int> swapped = g;
        std::swap(swapped[pick], swapped[pick + 1]);
        return isobaric_divided_difference(rec(swapped), pick + 1);
    };
    Poly out = rec(gamma);
    if (!out.integer_coeffs() || !out.nonnegative_coeffs())
        throw std::logic_error("demazure: coefficients not nonnegative integers");
    return out;
}

Poly groebner_element(const std::vector<int>& S, int n, int k, int r) {
    if (static_cast<int>(S.size()) != n - k + 1) throw std::invalid_argument("groebner_element: |S| != n-k+1");
    SkipData d = skip_data(S, n);
    Poly kappa = demazure(d.gamma_reversed);
    Poly out = kappa.substitute_powers(r).reverse_variables();
    // leading term must be x(S)^r with unit coefficient
    Monomial expected = d.skip_monomial;
    for (auto& x : expected.e) x *= r;
    const auto& [lt, lc] = out.leading();
    if (!(lt == expected) || lc != 1) throw std::logic_error("groebner_element: unexpected leading term");
    return out;
}

std::vector<Poly> ideal_generators(Ring ring, int n, int k, int r) {
    if (n < 1 || k < 0 || k > n || r < 1) throw std::invalid_argument("ideal_generators: bad parameters");
    std::vector<Poly> gens;
    int cap = ring == Ring::R ? k * r + 1 : k * r;
    for (int i = 1; i <= n; ++i) gens.push_back(Poly::variable(n, i, cap));
    for (int d = n; d >= n - k + 1; --d) gens.push_back(elementary_power(n, d, r));
    return gens;
}

std::vector<Poly> claimed_groebner_basis(Ring ring, int n, int k, int r) {
    if (n < 1 || k < 0 || k > n || r < 1) throw std::invalid_argument("claimed_groebner_basis: bad parameters");
    std::vector<Poly> basis;
    int cap = ring == Ring::R ? k * r + 1 : k * r;
    for (int i = 1; i <= n; ++i) basis.push_back(Poly::variable(n, i, cap));
    int ground = ring == Ring::R ? n : n - 1;
    int size = n - k + 1;
    if (size >= 0 && size <= ground) {
        std::vector<int> cur(size);
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == size) {
                basis.push_back(groebner_element(cur, n, k, r));
                return;
            }
            for (int s = start; s <= ground - (size - pos - 1); ++s) {
                cur[pos] = s;
                rec(pos + 1, s + 1);
            }
        };
        rec(0, 1);
    }
    return basis;
}

}  // namespace coinv
