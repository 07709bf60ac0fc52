#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "coinv/descent.hpp"
#include "coinv/qpoly.hpp"

using namespace coinv;

namespace {

ColoredWord word(int r, std::initializer_list<std::pair<int, int>> ls) {
    ColoredWord w;
    w.r = r;
    for (auto [v, c] : ls) w.letters.push_back({v, c});
    return w;
}

}  // namespace

TEST_CASE("descent monomial goldens") {
    auto g = word(3, {{3, 2}, {7, 0}, {1, 1}, {6, 1}, {8, 1}, {2, 0}, {4, 2}, {5, 1}});
    Monomial b = descent_monomial(g, 8);
    CHECK(b.e == std::vector<int>{4, 3, 8, 2, 1, 4, 6, 4});

    auto suffix = word(3, {{6, 1}, {8, 1}, {2, 0}, {4, 2}, {5, 1}});
    Monomial bs = descent_monomial(suffix, 8);
    CHECK(bs.e == std::vector<int>{0, 3, 0, 2, 1, 4, 0, 4});
    // truncation: the suffix monomial keeps the same exponents on its letters
    for (const auto& l : suffix.letters) CHECK(bs.e[l.value - 1] == b.e[l.value - 1]);

    auto identity = word(2, {{1, 0}, {2, 0}, {3, 0}});
    CHECK(descent_monomial(identity, 3).is_one());
    CHECK_THROWS_AS(descent_monomial(word(2, {{1, 0}, {1, 1}}), 3), std::invalid_argument);
}

TEST_CASE("straightening data golden") {
    Monomial m{{7, 3, 14, 2, 1, 7, 12, 7}};
    auto sd = straightening_data(m, 3);
    CHECK(to_string(sd.g) == "3^2 7^0 1^1 6^1 8^1 2^0 4^2 5^1");
    CHECK(sd.d == std::vector<int>{2, 2, 1, 1, 1, 1, 0, 0});
    CHECK(sd.lambda == std::vector<int>{14, 12, 7, 7, 7, 3, 2, 1});
    CHECK(sd.mu_conjugate == std::vector<int>{2, 2, 1, 1, 1, 0, 0, 0});
    CHECK(sd.mu == std::vector<int>{5, 2});
}

TEST_CASE("b_g has empty mu and recovers g") {
    std::mt19937_64 rng(5150);
    for (int r = 2; r <= 3; ++r)
        for (int n = 1; n <= 5; ++n)
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 1);
                std::shuffle(perm.begin(), perm.end(), rng);
                ColoredWord g;
                g.r = r;
                for (int v : perm) g.letters.push_back({v, static_cast<int>(rng() % r)});
                Monomial b = descent_monomial(g, n);
                auto sd = straightening_data(b, r);
                CHECK(sd.mu.empty());
                CHECK(to_string(sd.g) == to_string(g));
            }
}

TEST_CASE("residual exponents obey the factorization lemma") {
    std::mt19937_64 rng(777);
    for (int r = 2; r <= 3; ++r)
        for (int n = 1; n <= 5; ++n)
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<int> e(n);
                for (auto& x : e) x = static_cast<int>(rng() % (3 * r));
                auto sd = straightening_data(Monomial{std::move(e)}, r);
                // constructor already asserts: weakly decreasing nonnegative multiples of r
                CHECK(static_cast<int>(sd.mu_conjugate.size()) == n);
                CHECK(sd.d[0] == static_cast<int>(descent_set(sd.g).size()));
            }
}

TEST_CASE("descent basis golden (7,5,2)") {
    // the six members built on g = 2^1 5^0 6^1 1^0 3^1 4^0 7^0
    auto basis = descent_basis(7, 5, 2, false);
    std::set<std::vector<int>> members;
    for (const auto& [m, z] : basis) {
        CHECK(z == 0);
        members.insert(m.e);
    }
    std::vector<std::vector<int>> expected = {
        {2, 5, 1, 0, 4, 3, 0},          // b_g
        {2, 7, 1, 0, 4, 3, 0},          // * x2^2
        {2, 9, 1, 0, 4, 3, 0},          // * x2^4
        {2, 7, 1, 0, 6, 3, 0},          // * x2^2 x5^2
        {2, 9, 1, 0, 6, 3, 0},          // * x2^4 x5^2
        {2, 9, 1, 0, 8, 3, 0},          // * x2^4 x5^4
    };
    for (const auto& e : expected) CHECK(members.count(e) == 1);
}

TEST_CASE("extended descent basis golden (7,3,2)") {
    auto basis = descent_basis(7, 3, 2, true);
    std::set<std::vector<int>> members;
    for (const auto& [m, z] : basis) members.insert(m.e);
    // z = 2 prefix {5,1}, suffix 2^0 6^0 7^0 4^1 3^0
    std::vector<std::vector<int>> expected = {
        {6, 2, 0, 1, 6, 2, 2},
        {6, 4, 0, 1, 6, 2, 2},
        {6, 4, 0, 1, 6, 4, 2},
    };
    for (const auto& e : expected) CHECK(members.count(e) == 1);
    for (const auto& [m, z] : basis) {
        int z2 = -1;
        CHECK(in_extended_descent_basis(m, 7, 3, 2, &z2));
        CHECK(z2 == z);
    }
}

TEST_CASE("descent basis counts match dimensions") {
    for (int r = 2; r <= 3; ++r)
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= n; ++k) {
                CHECK(Int(descent_basis(n, k, r, false).size()) == dimension(Ring::S, n, k, r));
                auto ext = descent_basis(n, k, r, true);
                CHECK(Int(ext.size()) == dimension(Ring::R, n, k, r));
                // strata sizes: C(n,z) * |OP_{n-z,k}|
                std::map<int, Int> strata;
                for (const auto& [m, z] : ext) ++strata[z];
                for (const auto& [z, count] : strata)
                    CHECK(count == binomial(n, z) * dimension(Ring::S, n - z, k, r));
            }
    CHECK(descent_basis(3, 0, 2, true).size() == 1);
}

TEST_CASE("membership predicates agree with the enumerated sets") {
    for (int r = 1; r <= 2; ++r)
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= n; ++k) {
                std::set<std::vector<int>> plain, extended;
                for (const auto& [m, z] : descent_basis(n, k, r, false)) plain.insert(m.e);
                for (const auto& [m, z] : descent_basis(n, k, r, true)) extended.insert(m.e);
                std::vector<int> e(n, 0);
                while (true) {
                    Monomial m{std::vector<int>(e)};
                    CHECK(in_descent_basis(m, n, k, r) == (plain.count(e) > 0));
                    CHECK(in_extended_descent_basis(m, n, k, r) == (extended.count(e) > 0));
                    int i = n - 1;
                    while (i >= 0 && e[i] == k * r + 1) e[i--] = 0;
                    if (i < 0) break;
                    ++e[i];
                }
            }
}

TEST_CASE("basis members expand to themselves") {
    for (const auto& [m, z] : descent_basis(3, 2, 2, false)) {
        auto expansion = expand_in_basis(m, 3, 2, 2, Ring::S);
        REQUIRE(expansion.size() == 1);
        CHECK(expansion.begin()->first == m);
        CHECK(expansion.begin()->second == 1);
    }
    for (const auto& [m, z] : descent_basis(3, 2, 2, true)) {
        auto expansion = expand_in_basis(m, 3, 2, 2, Ring::R);
        REQUIRE(expansion.size() == 1);
        CHECK(expansion.begin()->first == m);
        CHECK(expansion.begin()->second == 1);
    }
}

TEST_CASE("generator multiples expand to zero") {
    // x1^{kr} | m in ring S
    auto expansion = expand_in_basis(Monomial{{4, 1, 0}}, 3, 2, 2, Ring::S);
    CHECK(expansion.empty());
    auto expansion_r = expand_in_basis(Monomial{{5, 1, 0}}, 3, 2, 2, Ring::R);
    CHECK(expansion_r.empty());
}

TEST_CASE("expansions preserve degree and strata") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= n; ++k) {
            int r = 2;
            std::vector<int> e(n, 0);
            while (true) {
                Monomial m{std::vector<int>(e)};
                auto expansion = expand_in_basis(m, n, k, r, Ring::R, nullptr);
                int z_in = 0;
                for (int x : e)
                    if (x == k * r) ++z_in;
                bool in_box = *std::max_element(e.begin(), e.end()) <= k * r;
                for (const auto& [mm, cc] : expansion) {
                    CHECK(mm.degree() == m.degree());
                    int z_out = -1;
                    CHECK(in_extended_descent_basis(mm, n, k, r, &z_out));
                    if (in_box) CHECK(z_out <= z_in);
                }
                auto es = expand_in_basis(m, n, k, r, Ring::S, nullptr);
                for (const auto& [mm, cc] : es) {
                    CHECK(mm.degree() == m.degree());
                    CHECK(in_descent_basis(mm, n, k, r));
                }
                int i = n - 1;
                while (i >= 0 && e[i] == k * r + 1) e[i--] = 0;
                if (i < 0) break;
                ++e[i];
            }
        }
}

TEST_CASE("straightening trace records steps") {
    // x1^2 x2^2 x3^2 = e_3(x^2) lies in the ideal: one reduce step, empty output
    std::vector<StraighteningStep> trace;
    auto expansion = expand_in_basis(Monomial{{2, 2, 2}}, 3, 2, 2, Ring::S, &trace);
    CHECK(expansion.empty());
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].action == "reduce");

    trace.clear();
    expansion = expand_in_basis(Monomial{{0, 2, 2}}, 3, 2, 2, Ring::S, &trace);
    CHECK(!expansion.empty());
    bool has_emit = false;
    for (const auto& st : trace) {
        CHECK((st.action == "emit" || st.action.rfind("drop", 0) == 0 || st.action == "reduce"));
        if (st.action == "emit") has_emit = true;
    }
    CHECK(has_emit);
    // coefficients of an integer coset expansion stay integer here
    for (const auto& [m, c] : expansion) CHECK(denominator(c) == 1);
}
