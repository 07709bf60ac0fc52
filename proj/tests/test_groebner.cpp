#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "coinv/demazure.hpp"
#include "coinv/groebner.hpp"
#include "coinv/qpoly.hpp"
#include "coinv/skip.hpp"

using namespace coinv;

namespace {

void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& f) {
    if (size < 0 || size > n) return;
    std::vector<int> cur(size);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == size) {
            f(cur);
            return;
        }
        for (int s = start; s <= n - (size - pos - 1); ++s) {
            cur[pos] = s;
            rec(pos + 1, s + 1);
        }
    };
    rec(0, 1);
}

}  // namespace

TEST_CASE("Demazure base cases and one divided difference") {
    CHECK(demazure({3, 1, 0}) == Poly(Monomial{{3, 1, 0}}, Rat(1)));
    Poly k01 = demazure({0, 1});
    CHECK(k01 == Poly::variable(2, 1) + Poly::variable(2, 2));
    Poly k001 = demazure({0, 0, 1});
    CHECK(k001 == Poly::variable(3, 1) + Poly::variable(3, 2) + Poly::variable(3, 3));
}

TEST_CASE("Demazure is independent of the resolution order") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> gamma(n, 0);
        while (true) {
            CHECK(demazure(gamma, false) == demazure(gamma, true));
            int i = n - 1;
            while (i >= 0 && gamma[i] == 3) gamma[i--] = 0;
            if (i < 0) break;
            ++gamma[i];
        }
    }
}

TEST_CASE("groebner elements: leading terms, variable bound, cross-divisibility") {
    for (int r = 2; r <= 3; ++r)
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                int size = n - k + 1;
                if (size > n) continue;
                std::vector<std::vector<int>> subsets;
                std::vector<Poly> elems;
                for_each_subset(n, size, [&](const std::vector<int>& S) {
                    Poly g = groebner_element(S, n, k, r);
                    auto d = skip_data(S, n);
                    Monomial expect = d.skip_monomial;
                    for (auto& x : expect.e) x *= r;
                    CHECK(g.leading().first == expect);
                    CHECK(g.leading().second == 1);
                    int bound = r * (S.back() - n + k + 1);
                    for (const auto& [m, c] : g.terms())
                        for (int x : m.e) CHECK(x < bound);
                    subsets.push_back(S);
                    elems.push_back(g);
                });
                if (n <= 4) {
                    for (std::size_t a = 0; a < subsets.size(); ++a)
                        for (std::size_t b = 0; b < subsets.size(); ++b) {
                            if (a == b) continue;
                            for (const auto& [m, c] : elems[b].terms())
                                CHECK(!skip_divides(subsets[a], r, m));
                        }
                }
            }
}

TEST_CASE("buchberger on a monomial ideal is the identity") {
    std::vector<Poly> gens = {Poly::variable(2, 1), Poly::variable(2, 2)};
    auto gb = buchberger(gens);
    CHECK(same_basis(gb, gens));
    CHECK(is_reduced_basis(gb));
    CHECK(normal_form(Poly::constant(2, Rat(1)), gb) == Poly::constant(2, Rat(1)));
}

TEST_CASE("standard monomials of small ideals match the shuffle families") {
    // I_{2,1}, r = 2
    auto gb = buchberger(ideal_generators(Ring::R, 2, 1, 2));
    auto shuffles = shuffle_basis(2, 1, 2, Ring::R);
    auto std_mons = standard_monomials(gb);
    std::set<std::vector<int>> got, expect;
    for (const auto& m : std_mons) got.insert(m.e);
    for (const auto& m : shuffles) expect.insert(m.e);
    CHECK(got == expect);
    for (const auto& g : gb) CHECK(normal_form(g, gb).is_zero());

    // J_{3,2}, r = 2: 48 standard monomials
    auto gbj = buchberger(ideal_generators(Ring::S, 3, 2, 2));
    CHECK(Int(standard_monomials(gbj).size()) == 48);
    CHECK(is_reduced_basis(gbj));
}

TEST_CASE("demazure elements reduce to zero modulo the ideals") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= n; ++k) {
            auto gbr = buchberger(ideal_generators(Ring::R, n, k, 2));
            auto gbs = buchberger(ideal_generators(Ring::S, n, k, 2));
            for_each_subset(n, n - k + 1, [&](const std::vector<int>& S) {
                Poly g = groebner_element(S, n, k, 2);
                CHECK(normal_form(g, gbr).is_zero());
                CHECK(normal_form(g, gbs).is_zero());
            });
        }
}

TEST_CASE("claimed basis is the reduced Groebner basis for 0 < k < n") {
    for (int r = 2; r <= 3; ++r)
        for (int n = 2; n <= 3; ++n)
            for (int k = 1; k < n; ++k)
                for (Ring ring : {Ring::R, Ring::S}) {
                    auto claimed = claimed_groebner_basis(ring, n, k, r);
                    CHECK(is_reduced_basis(claimed));
                    auto oracle = buchberger(ideal_generators(ring, n, k, r));
                    CHECK(same_basis(claimed, oracle));
                }
}

TEST_CASE("budget ceilings throw") {
    GroebnerBudget tiny;
    tiny.max_pairs = 1;
    CHECK_THROWS_AS(buchberger(ideal_generators(Ring::R, 3, 2, 2), tiny), BudgetExceeded);
}
