#include "coinv/groebner.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace coinv {

namespace {

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (int i = 0; i < a.vars(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.vars(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

std::size_t total_terms(const std::vector<Poly>& basis) {
    std::size_t t = 0;
    for (const auto& g : basis) t += g.term_count();
    return t;
}

}  // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
    Poly rem(f.vars());
    Poly work = f;
    while (!work.is_zero()) {
        Monomial m = work.leading().first;
        Rat c = work.leading().second;
        bool reduced = false;
        for (const auto& g : basis) {
            const auto& [gm, gc] = g.leading();
            if (gm.divides(m)) {
                work -= g.times(m / gm, c / gc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return rem;
}

std::vector<Poly> buchberger(const std::vector<Poly>& generators, const GroebnerBudget& budget) {
    std::vector<Poly> basis;
    for (const auto& g : generators)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

    using Pair = std::pair<std::size_t, std::size_t>;
    auto pair_key = [&](const Pair& p) {
        return lcm(basis[p.first].leading().first, basis[p.second].leading().first);
    };
    auto cmp = [&](const Pair& a, const Pair& b) {
        Monomial la = pair_key(a), lb = pair_key(b);
        long da = la.degree(), db = lb.degree();
        if (da != db) return da > db;  // priority queue: smallest degree first
        return lex_compare(la, lb) > 0;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(cmp)> pairs(cmp);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push({i, j});

    std::size_t processed = 0;
    while (!pairs.empty()) {
        auto [i, j] = pairs.top();
        pairs.pop();
        if (++processed > budget.max_pairs) throw BudgetExceeded("buchberger: pair budget exceeded");
        const auto& [mi, ci] = basis[i].leading();
        const auto& [mj, cj] = basis[j].leading();
        if (coprime(mi, mj)) continue;
        Monomial l = lcm(mi, mj);
        Poly spoly = basis[i].times(l / mi, Rat(1) / ci) - basis[j].times(l / mj, Rat(1) / cj);
        Poly rem = normal_form(spoly, basis);
        if (rem.is_zero()) continue;
        basis.push_back(rem.monic());
        if (total_terms(basis) > budget.max_terms) throw BudgetExceeded("buchberger: term budget exceeded");
        for (std::size_t t = 0; t + 1 < basis.size(); ++t) pairs.push({t, basis.size() - 1});
    }

    // discard elements whose leading term another leading term divides
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = basis[j].leading().first;
            const Monomial& mi = basis[i].leading().first;
            if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // inter-reduce tails until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly red = normal_form(minimal[i], others).monic();
            if (!(red == minimal[i])) {
                minimal[i] = red;
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(),
              [](const Poly& a, const Poly& b) { return lex_compare(a.leading().first, b.leading().first) > 0; });

    // post-hoc certificate: every S-polynomial of the final basis reduces to 0
    for (std::size_t i = 0; i < minimal.size(); ++i)
        for (std::size_t j = i + 1; j < minimal.size(); ++j) {
            const auto& [mi, ci] = minimal[i].leading();
            const auto& [mj, cj] = minimal[j].leading();
            if (coprime(mi, mj)) continue;
            Monomial l = lcm(mi, mj);
            Poly spoly = minimal[i].times(l / mi, Rat(1) / ci) - minimal[j].times(l / mj, Rat(1) / cj);
            if (!normal_form(spoly, minimal).is_zero())
                throw std::logic_error("buchberger: output failed the S-polynomial certificate");
        }
    return minimal;
}

bool is_reduced_basis(const std::vector<Poly>& basis) {
    for (const auto& g : basis)
        if (g.is_zero() || g.leading().second != 1) return false;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& lt = basis[i].leading().first;
            for (const auto& [m, c] : basis[j].terms())
                if (lt.divides(m)) return false;
        }
    return true;
}

std::vector<Monomial> standard_monomials(const std::vector<Poly>& basis) {
    if (basis.empty()) throw std::invalid_argument("standard_monomials: empty basis");
    int n = basis.front().vars();
    std::vector<int> cap(n, -1);
    for (const auto& g : basis) {
        const Monomial& m = g.leading().first;
        int nz = 0, var = -1;
        for (int i = 0; i < n; ++i)
            if (m.e[i] > 0) {
                ++nz;
                var = i;
            }
        if (nz == 1 && (cap[var] < 0 || m.e[var] < cap[var])) cap[var] = m.e[var];
    }
    for (int i = 0; i < n; ++i)
        if (cap[i] < 0) throw std::invalid_argument("standard_monomials: quotient not finite-dimensional");

    std::vector<Monomial> lts;
    for (const auto& g : basis) lts.push_back(g.leading().first);
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    while (true) {
        Monomial m{std::vector<int>(e)};
        bool standard = true;
        for (const auto& lt : lts)
            if (lt.divides(m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(m);
        int i = n - 1;
        while (i >= 0 && e[i] == cap[i] - 1) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    return out;
}

bool same_basis(std::vector<Poly> a, std::vector<Poly> b) {
    if (a.size() != b.size()) return false;
    auto key = [](const Poly& p) { return p.monic(); };
    auto lt_less = [](const Poly& x, const Poly& y) {
        return lex_compare(x.leading().first, y.leading().first) > 0;
    };
    for (auto& p : a) p = key(p);
    for (auto& p : b) p = key(p);
    std::sort(a.begin(), a.end(), lt_less);
    std::sort(b.begin(), b.end(), lt_less);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

}  // namespace coinv
