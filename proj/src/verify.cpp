#include "coinv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "coinv/colored.hpp"
#include "coinv/demazure.hpp"
#include "coinv/descent.hpp"
#include "coinv/frobenius.hpp"
#include "coinv/qpoly.hpp"
#include "coinv/skip.hpp"
#include "coinv/tableaux.hpp"

namespace coinv {

namespace {

struct Outcome {
    std::string status;
    std::string witness;
};

Outcome pass() { return {"pass", ""}; }
Outcome fail(const std::string& w) { return {"fail", w}; }

std::string fmt(int n, int k, int r) {
    std::ostringstream os;
    os << "n=" << n << " k=" << k << " r=" << r;
    return os.str();
}

void for_each_subset_of(int n, int size, const std::function<void(const std::vector<int>&)>& f) {
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

// --- individual checks ------------------------------------------------------

Outcome check_statistic_goldens(const VerifyConfig&) {
    ColoredWord g;
    g.r = 3;
    for (auto [v, c] :
         std::vector<std::pair<int, int>>{{3, 0}, {4, 1}, {6, 2}, {2, 0}, {5, 2}, {1, 2}})
        g.letters.push_back({v, c});
    if (maj(g) != 43) return fail("maj(3^0 4^1 6^2 2^0 5^2 1^2) != 43");

    OrderedSetPartition osp;
    osp.n = 6;
    osp.k = 3;
    osp.r = 3;
    osp.blocks = {{{3, 0}, {4, 1}}, {{6, 2}}, {{1, 2}, {2, 0}, {5, 2}}};
    if (maj(osp) != 22) return fail("maj of the worked partition != 22");
    if (coinversion(osp) != 23) return fail("coinv of the worked partition != 23");

    GFace face = parse_face("( 2 5 | 1^1 3^2 6^2 | 4^1 )", 3);
    if (coinversion(face) != 20) return fail("coinv of the worked face != 20");

    RTableau T;
    T.comp = {{{3, 6, 9}, {5, 7}}, {}, {{1, 4}, {2, 8}}};
    if (tableau_stats(T, 3).maj != 59) return fail("tableau maj != 59");
    return pass();
}

Outcome check_counts_enumeration(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 1; n <= cfg.max_n; ++n) {
            long perms = 0;
            for_each_colored_permutation(n, r, [&](const ColoredWord&) { ++perms; });
            if (Int(perms) != int_pow(Int(r), n) * factorial(n))
                return fail("colored permutation count at " + fmt(n, n, r));
            for (int k = 0; k <= n; ++k) {
                long faces = 0, osps = 0;
                std::vector<long> by_zero(n + 1, 0);
                for_each_face(n, k, r, [&](const GFace& f) {
                    ++faces;
                    ++by_zero[f.zero_block.size()];
                });
                if (k >= 1)
                    for_each_osp(n, k, r, [&](const OrderedSetPartition&) { ++osps; });
                if (Int(faces) != dimension(Ring::R, n, k, r))
                    return fail("face count at " + fmt(n, k, r));
                if (k >= 1 && Int(osps) != dimension(Ring::S, n, k, r))
                    return fail("partition count at " + fmt(n, k, r));
                for (int z = 0; z <= n; ++z) {
                    Int expect = z <= n - k ? binomial(n, z) * dimension(Ring::S, n - z, k, r) : 0;
                    if (k >= 1 && Int(by_zero[z]) != expect)
                        return fail("zero-block split at " + fmt(n, k, r));
                }
            }
        }
    return pass();
}

Outcome check_des_asc_partition(const VerifyConfig& cfg) {
    for (int r : cfg.rs) {
        for (int len = 1; len <= std::min(cfg.max_n, 4); ++len) {
            int alphabet = 3 * r;
            std::vector<int> idx(len, 0);
            while (true) {
                ColoredWord w;
                w.r = r;
                for (int i = 0; i < len; ++i) w.letters.push_back({idx[i] / r + 1, idx[i] % r});
                int eq = 0;
                for (int i = 0; i + 1 < len; ++i)
                    if (w.letters[i] == w.letters[i + 1]) ++eq;
                if (static_cast<int>(descent_set(w).size() + ascent_set(w).size()) + eq != len - 1)
                    return fail("descents+ascents do not partition positions");
                int p = len - 1;
                while (p >= 0 && idx[p] == alphabet - 1) idx[p--] = 0;
                if (p < 0) break;
                ++idx[p];
            }
        }
    }
    return pass();
}

Outcome check_insertion_increments(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 0; n <= std::min(cfg.max_n, 5); ++n)
            for (int k = 0; k <= n; ++k) {
                Outcome bad = pass();
                for_each_face(n, k, r, [&](const GFace& f) {
                    if (bad.status == "fail") return;
                    long base = coinversion(f);
                    for (int j = 1; j <= k; ++j)
                        for (int c = 0; c < r; ++c) {
                            auto nf = insert_letter(f, {InsertMove::Star, j, c});
                            if (coinversion(nf) - base != r * (k - j) + (r - c - 1)) {
                                bad = fail("star increment at " + fmt(n, k, r));
                                return;
                            }
                        }
                    if (coinversion(insert_letter(f, {InsertMove::Zero, 0, 0})) - base != k * r) {
                        bad = fail("zero increment at " + fmt(n, k, r));
                        return;
                    }
                    for (int j = 0; j <= k; ++j)
                        for (int c = 0; c < r; ++c) {
                            auto nf = insert_letter(f, {InsertMove::Bar, j, c});
                            if (coinversion(nf) - base != r * (n - k) + r * (k - j) + (r - c - 1)) {
                                bad = fail("bar increment at " + fmt(n, k, r));
                                return;
                            }
                        }
                });
                if (bad.status == "fail") return bad;
            }
    return pass();
}

Outcome check_group_action(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 1; n <= std::min(cfg.max_n, 5); ++n)
            for (int k = 0; k <= n; ++k) {
                std::set<std::string> all, all_osp;
                for_each_face(n, k, r, [&](const GFace& f) {
                    all.insert(to_string(f));
                    if (f.zero_block.empty()) all_osp.insert(to_string(f));
                });
                for (int t = 1; t < n; ++t) {
                    std::vector<int> pi(n);
                    for (int i = 0; i < n; ++i) pi[i] = i + 1;
                    std::swap(pi[t - 1], pi[t]);
                    std::set<std::string> image, image_osp;
                    for_each_face(n, k, r, [&](const GFace& f) {
                        auto g = act_permutation(f, pi);
                        image.insert(to_string(g));
                        if (g.zero_block.empty()) image_osp.insert(to_string(g));
                    });
                    if (image != all || image_osp != all_osp)
                        return fail("transposition action at " + fmt(n, k, r));
                }
                std::vector<int> shift(n, 0);
                shift[0] = 1;
                std::set<std::string> image;
                for_each_face(n, k, r,
                              [&](const GFace& f) { image.insert(to_string(act_diagonal(f, shift))); });
                if (image != all) return fail("diagonal action at " + fmt(n, k, r));
            }
    return pass();
}

Outcome check_hilbert_three_way(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 1; n <= cfg.max_n; ++n)
            for (int k = 0; k <= n; ++k) {
                QPoly face_gf, osp_gf;
                for_each_face(n, k, r, [&](const GFace& f) {
                    face_gf += QPoly::monomial(static_cast<int>(coinversion(f)));
                });
                if (k >= 1)
                    for_each_osp(n, k, r, [&](const OrderedSetPartition& o) {
                        osp_gf += QPoly::monomial(static_cast<int>(coinversion(o)));
                    });
                QPoly shuffle_r, shuffle_s;
                for (const auto& m : shuffle_basis(n, k, r, Ring::R))
                    shuffle_r += QPoly::monomial(static_cast<int>(m.degree()));
                for (const auto& m : shuffle_basis(n, k, r, Ring::S))
                    shuffle_s += QPoly::monomial(static_cast<int>(m.degree()));
                QPoly closed_r = hilbert_series(Ring::R, n, k, r);
                QPoly closed_s = hilbert_series(Ring::S, n, k, r);
                if (!(closed_r == face_gf)) return fail("R series vs faces at " + fmt(n, k, r));
                if (!(closed_r == shuffle_r)) return fail("R series vs shuffles at " + fmt(n, k, r));
                if (k >= 1 && !(closed_s == osp_gf)) return fail("S series vs partitions at " + fmt(n, k, r));
                if (!(closed_s == shuffle_s)) return fail("S series vs shuffles at " + fmt(n, k, r));
                if (closed_r.eval_at_one() != dimension(Ring::R, n, k, r))
                    return fail("R dimension at " + fmt(n, k, r));
                if (closed_s.eval_at_one() != dimension(Ring::S, n, k, r))
                    return fail("S dimension at " + fmt(n, k, r));
            }
    return pass();
}

Outcome check_psi_roundtrip(const VerifyConfig& cfg) {
    {
        GFace face = parse_face("( 2 5 | 1^0 7^0 8^1 | 6^1 | 3^2 4^2 )", 3);
        Monomial image = psi(face);
        if (image.e != std::vector<int>{2, 9, 6, 3, 9, 4, 2, 1}) return fail("psi golden image");
        if (to_string(phi(image, 8, 3, 3)) != to_string(face)) return fail("phi golden inverse");
    }
    for (int r : cfg.rs)
        for (int n = 1; n <= cfg.max_n; ++n)
            for (int k = 0; k <= n; ++k) {
                Outcome bad = pass();
                std::set<std::uint64_t> images;
                for_each_face(n, k, r, [&](const GFace& f) {
                    if (bad.status == "fail") return;
                    Monomial m = psi(f);
                    if (m.degree() != coinversion(f)) {
                        bad = fail("deg(psi) != coinv at " + fmt(n, k, r) + " face " + to_string(f));
                        return;
                    }
                    if (!images.insert(pack_exponents(m.e)).second) {
                        bad = fail("psi not injective at " + fmt(n, k, r));
                        return;
                    }
                    bool strong = is_nonskip(m, n, k, r, true);
                    if (strong != f.zero_block.empty()) {
                        bad = fail("zero-block/strong-nonskip mismatch at " + fmt(n, k, r));
                        return;
                    }
                    GFace back = phi(m, n, k, r);
                    if (to_string(back) != to_string(f)) {
                        bad = fail("phi(psi) != id at " + fmt(n, k, r) + " face " + to_string(f));
                        return;
                    }
                });
                if (bad.status == "fail") return bad;
                if (Int(images.size()) != dimension(Ring::R, n, k, r))
                    return fail("psi image size at " + fmt(n, k, r));
            }
    return pass();
}

Outcome check_skip_union(const VerifyConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    for (int n = 1; n <= std::min(cfg.max_n, 5); ++n) {
        int k = std::max(1, n / 2), r = 2;
        std::vector<std::vector<int>> subsets;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) s.push_back(i + 1);
            subsets.push_back(s);
        }
        std::uniform_int_distribution<int> expo(0, k * r + 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> e(n);
            for (auto& x : e) x = expo(rng);
            Monomial m{std::move(e)};
            for (const auto& S : subsets)
                for (const auto& T : subsets) {
                    if (!skip_divides(S, r, m) || !skip_divides(T, r, m)) continue;
                    std::vector<int> u;
                    std::set_union(S.begin(), S.end(), T.begin(), T.end(), std::back_inserter(u));
                    if (!skip_divides(u, r, m)) return fail("skip union fails at n=" + std::to_string(n));
                }
        }
    }
    return pass();
}

Outcome check_nonskip_shuffle(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 1; n <= std::min(cfg.max_n, 5); ++n)
            for (int k = 0; k <= n; ++k)
                for (Ring ring : {Ring::R, Ring::S}) {
                    bool strong = ring == Ring::S;
                    std::set<std::uint64_t> family;
                    for (const auto& m : shuffle_basis(n, k, r, ring)) family.insert(pack_exponents(m.e));
                    std::vector<int> e(n, 0);
                    while (true) {
                        Monomial m{std::vector<int>(e)};
                        if (is_nonskip(m, n, k, r, strong) != (family.count(pack_exponents(e)) > 0))
                            return fail("nonskip vs shuffle at " + fmt(n, k, r));
                        int i = n - 1;
                        while (i >= 0 && e[i] == k * r) e[i--] = 0;
                        if (i < 0) break;
                        ++e[i];
                    }
                }
    return pass();
}

Outcome check_demazure_leading_terms(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 2; n <= std::min(cfg.max_n, 5); ++n)
            for (int k = 1; k < n; ++k)
                for (Ring ring : {Ring::R, Ring::S})
                    if (!is_reduced_basis(claimed_groebner_basis(ring, n, k, r)))
                        return fail("claimed basis fails the reducedness checker at " + fmt(n, k, r));
    for (int r : cfg.rs)
        for (int n = 1; n <= std::min(cfg.max_n, 6); ++n)
            for (int k = 0; k <= n; ++k) {
                int size = n - k + 1;
                if (size > n) continue;
                std::vector<std::vector<int>> subsets;
                std::vector<Poly> elems;
                Outcome bad = pass();
                for_each_subset_of(n, size, [&](const std::vector<int>& S) {
                    if (bad.status == "fail") return;
                    Poly g = groebner_element(S, n, k, r);  // asserts LT = x(S)^r internally
                    int bound = r * (S.back() - n + k + 1);
                    for (const auto& [m, c] : g.terms())
                        for (int x : m.e)
                            if (x >= bound) {
                                bad = fail("variable power bound at " + fmt(n, k, r));
                                return;
                            }
                    subsets.push_back(S);
                    elems.push_back(g);
                });
                if (bad.status == "fail") return bad;
                for (std::size_t a = 0; a < subsets.size(); ++a)
                    for (std::size_t b = 0; b < subsets.size(); ++b) {
                        if (a == b) continue;
                        for (const auto& [m, c] : elems[b].terms())
                            if (skip_divides(subsets[a], r, m))
                                return fail("cross-divisibility at " + fmt(n, k, r));
                    }
            }
    return pass();
}

Outcome check_groebner_oracle(const VerifyConfig& cfg) {
    try {
        for (int r : cfg.rs)
            for (int n = 1; n <= std::min(cfg.max_n, 4); ++n)
                for (int k = 1; k <= n; ++k)
                    for (Ring ring : {Ring::R, Ring::S}) {
                        auto oracle = buchberger(ideal_generators(ring, n, k, r), cfg.budget);
                        auto claimed = claimed_groebner_basis(ring, n, k, r);
                        std::set<std::vector<int>> std_oracle, shuffles;
                        for (const auto& m : standard_monomials(oracle)) std_oracle.insert(m.e);
                        for (const auto& m : shuffle_basis(n, k, r, ring)) shuffles.insert(m.e);
                        if (std_oracle != shuffles)
                            return fail("standard monomials differ at " + fmt(n, k, r) + " ring " +
                                        ring_name(ring));
                        if (k < n) {
                            if (!is_reduced_basis(claimed))
                                return fail("claimed basis not reduced at " + fmt(n, k, r));
                            if (!same_basis(claimed, oracle))
                                return fail("claimed != oracle at " + fmt(n, k, r) + " ring " +
                                            ring_name(ring));
                        } else {
                            // k = n: claimed is a Groebner basis but need not be reduced
                            for (const auto& g : claimed)
                                if (!normal_form(g, oracle).is_zero())
                                    return fail("claimed element outside ideal at " + fmt(n, k, r));
                        }
                        for_each_subset_of(n, n - k + 1, [&](const std::vector<int>& S) {
                            Poly g = groebner_element(S, n, k, r);
                            if (!normal_form(g, oracle).is_zero())
                                throw std::logic_error("demazure element not in ideal at " + fmt(n, k, r));
                        });
                    }
    } catch (const BudgetExceeded& e) {
        return {"skipped-budget", ""};
    } catch (const std::logic_error& e) {
        return fail(e.what());
    }
    return pass();
}

Outcome check_descent_counts(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 1; n <= cfg.max_n; ++n)
            for (int k = 1; k <= n; ++k) {
                auto plain = descent_basis(n, k, r, false);
                if (Int(plain.size()) != dimension(Ring::S, n, k, r))
                    return fail("plain basis size at " + fmt(n, k, r));
                auto ext = descent_basis(n, k, r, true);
                if (Int(ext.size()) != dimension(Ring::R, n, k, r))
                    return fail("extended basis size at " + fmt(n, k, r));
                std::vector<Int> strata(n + 1, 0);
                for (const auto& [m, z] : ext) ++strata[z];
                for (int z = 0; z <= n; ++z) {
                    Int expect = z <= n - k ? binomial(n, z) * dimension(Ring::S, n - z, k, r) : 0;
                    if (strata[z] != expect) return fail("stratum size at " + fmt(n, k, r));
                }
            }
    return pass();
}

// exact dense linear algebra over the rationals
struct RatMatrix {
    int n = 0;
    std::vector<std::vector<Rat>> a;
};

bool lu_solve(RatMatrix m, std::vector<std::vector<Rat>>& rhs) {
    int n = m.n;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m.a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return false;
        std::swap(m.a[col], m.a[pivot]);
        for (auto& v : rhs) std::swap(v[col], v[pivot]);
        for (int row = col + 1; row < n; ++row) {
            if (m.a[row][col] == 0) continue;
            Rat f = m.a[row][col] / m.a[col][col];
            for (int c2 = col; c2 < n; ++c2) m.a[row][c2] -= f * m.a[col][c2];
            for (auto& v : rhs) v[row] -= f * v[col];
        }
    }
    for (int col = n - 1; col >= 0; --col) {
        for (auto& v : rhs) {
            for (int c2 = col + 1; c2 < n; ++c2) v[col] -= m.a[col][c2] * v[c2];
            v[col] /= m.a[col][col];
        }
    }
    return true;
}

Outcome check_descent_expand_oracle(const VerifyConfig& cfg) {
    struct Case {
        int n, k, r;
    };
    for (Case c : {Case{3, 2, 2}, Case{3, 3, 2}})
        for (Ring ring : {Ring::S, Ring::R}) {
            auto gb = buchberger(ideal_generators(ring, c.n, c.k, c.r), cfg.budget);
            auto std_mons = standard_monomials(gb);
            int dim = static_cast<int>(std_mons.size());
            std::map<Monomial, int, LexLess> index;
            for (int i = 0; i < dim; ++i) index.emplace(std_mons[i], i);
            auto nf_vector = [&](const Monomial& m) {
                std::vector<Rat> v(dim, Rat(0));
                Poly nf = normal_form(Poly(m, Rat(1)), gb);
                for (const auto& [mm, cc] : nf.terms()) {
                    auto it = index.find(mm);
                    if (it == index.end()) throw std::logic_error("normal form outside standard monomials");
                    v[it->second] = cc;
                }
                return v;
            };
            auto basis = descent_basis(c.n, c.k, c.r, ring == Ring::R);
            if (static_cast<int>(basis.size()) != dim) return fail("descent basis size vs quotient dim");
            RatMatrix B;
            B.n = dim;
            B.a.assign(dim, std::vector<Rat>(dim, Rat(0)));
            for (int col = 0; col < dim; ++col) {
                auto v = nf_vector(basis[col].first);
                for (int row = 0; row < dim; ++row) B.a[row][col] = v[row];
            }
            // solve B x = nf(m) for every monomial in the box [0, kr]^n
            std::vector<Monomial> tests;
            std::vector<int> e(c.n, 0);
            while (true) {
                tests.push_back(Monomial{std::vector<int>(e)});
                int i = c.n - 1;
                while (i >= 0 && e[i] == c.k * c.r) e[i--] = 0;
                if (i < 0) break;
                ++e[i];
            }
            std::vector<std::vector<Rat>> rhs;
            rhs.reserve(tests.size());
            for (const auto& m : tests) rhs.push_back(nf_vector(m));
            if (!lu_solve(B, rhs)) return fail("descent basis matrix is singular at " + fmt(c.n, c.k, c.r));
            for (std::size_t t = 0; t < tests.size(); ++t) {
                auto expansion = expand_in_basis(tests[t], c.n, c.k, c.r, ring);
                for (int col = 0; col < dim; ++col) {
                    Rat expect = rhs[t][col];
                    auto it = expansion.find(basis[col].first);
                    Rat got = it == expansion.end() ? Rat(0) : it->second;
                    if (got != expect)
                        return fail("expansion disagrees with the linear oracle at " + fmt(c.n, c.k, c.r) +
                                    " ring " + ring_name(ring) + " monomial " +
                                    Poly(tests[t], Rat(1)).str());
                }
            }
        }
    return pass();
}

Outcome check_frobenius_goldens(const VerifyConfig&) {
    for (int r = 2; r <= 4; ++r) {
        SchurSeries d = d_series(1, 1, r);
        for (int t = 1; t <= r; ++t) {
            RPartition shape(r);
            shape[t - 1] = {1};
            if (!(d.coeff(shape) == QPoly::monomial(r - t))) return fail("D_{1,1} coefficient");
        }
    }
    SchurSeries d22 = d_series(2, 2, 2);
    if (!(d22.coeff({{}, {2}}) == QPoly::one())) return fail("D_{2,2} q^0 term");
    if (!(d22.coeff({{1}, {1}}) == QPoly::monomial(1) + QPoly::monomial(3))) return fail("D_{2,2} odd terms");
    if (!(d22.coeff({{1, 1}, {}}) == QPoly::monomial(4))) return fail("D_{2,2} q^4 term");
    SchurSeries s32 = grfrob(Ring::S, 3, 2, 2);
    if (!(s32.coeff({{}, {3}}) == QPoly::one() + QPoly::monomial(2))) return fail("S_{3,2} trivial-shape");
    if (!(s32.coeff({{2, 1}, {}}) == QPoly::monomial(5) + QPoly::monomial(7))) return fail("S_{3,2} top");
    SchurSeries r32 = grfrob(Ring::R, 3, 2, 2);
    if (!(r32.coeff({{1, 1}, {1}}).coeff(8) == 1)) return fail("R_{3,2} q^8 term");
    if (!(r32.coeff({{}, {1, 1, 1}}) == QPoly::monomial(6))) return fail("R_{3,2} q^6 sign-like term");
    return pass();
}

Outcome check_eperp_recursion(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 1; n <= std::min(cfg.max_n, 5); ++n)
            for (int k = 1; k <= n; ++k) {
                SchurSeries d = d_series(n, k, r);
                for (int j = 1; j <= n; ++j)
                    for (int i = 1; i <= r; ++i) {
                        SchurSeries lhs = e_perp(d, j, i, r);
                        SchurSeries rhs;
                        for (int m = std::max(0, k - j); m <= std::min(k, n - j); ++m) {
                            SchurSeries base;
                            if (m == 0 && n - j == 0)
                                base.add(RPartition(r), QPoly::one());
                            else
                                base = d_series(n - j, m, r);
                            QPoly factor =
                                q_binomial(j, k - m).inflated(r).shifted(r * (k - m) * (n - j - m));
                            rhs += base.scaled(factor);
                        }
                        QPoly outer =
                            q_binomial(k, j).inflated(r).shifted(j * (r - i) + r * j * (j - 1) / 2);
                        rhs = rhs.scaled(outer);
                        if (!(lhs == rhs))
                            return fail("e-perp recursion fails at " + fmt(n, k, r) + " j=" +
                                        std::to_string(j) + " i=" + std::to_string(i));
                    }
            }
    return pass();
}

Outcome check_mi_symmetry(const VerifyConfig& cfg) {
    int max_size = std::min(cfg.max_n, 5);
    for (int r : cfg.rs) {
        // contents: each component a partition with parts <= 2 (entry
        // multiplicities at most 2), letter values <= size
        std::vector<RContent> contents;
        std::function<void(int, RContent&, int)> build = [&](int comp, RContent& cur, int total) {
            if (comp == r) {
                if (total >= 1) contents.push_back(cur);
                return;
            }
            // multiplicity vectors for this component with entries <= 2
            std::vector<std::vector<int>> options;
            std::vector<int> v(max_size, 0);
            std::function<void(int, int)> gen = [&](int pos, int used) {
                if (pos == max_size) {
                    options.push_back(v);
                    return;
                }
                for (int m = 0; m <= 2 && used + m <= max_size - total; ++m) {
                    v[pos] = m;
                    gen(pos + 1, used + m);
                }
                v[pos] = 0;
            };
            gen(0, 0);
            for (const auto& opt : options) {
                int s = 0;
                for (int x : opt) s += x;
                cur[comp] = opt;
                build(comp + 1, cur, total + s);
            }
            cur[comp].assign(max_size, 0);
        };
        RContent cur(r, std::vector<int>(max_size, 0));
        build(0, cur, 0);
        for (const auto& beta : contents) {
            int n = 0;
            for (const auto& compv : beta)
                for (int x : compv) n += x;
            for (int k = 1; k <= n; ++k) {
                auto [mser, iser] = content_series(beta, k, r);
                int dtop = hilbert_series(Ring::S, n, k, r).degree();
                if (mser.is_zero() != iser.is_zero()) return fail("one-sided vanishing content series");
                if (mser.is_zero()) continue;
                if (iser.degree() > dtop || mser.degree() > dtop)
                    return fail("content series exceeds the global degree");
                if (!(mser == iser.reversed_about(dtop)))
                    return fail("maj/coinv duality fails at n=" + std::to_string(n) +
                                " k=" + std::to_string(k) + " r=" + std::to_string(r));
            }
        }
    }
    return pass();
}

Outcome check_consistency_closure(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 1; n <= std::min(cfg.max_n, 5); ++n)
            for (int k = 1; k <= n; ++k) {
                SchurSeries s = grfrob(Ring::S, n, k, r);
                SchurSeries rr = grfrob(Ring::R, n, k, r);
                if (!s.schur_positive() || !rr.schur_positive())
                    return fail("negative Schur coefficient at " + fmt(n, k, r));
                if (!(hilb_from_frob(s) == hilbert_series(Ring::S, n, k, r)))
                    return fail("S character/Hilbert mismatch at " + fmt(n, k, r));
                if (!(hilb_from_frob(rr) == hilbert_series(Ring::R, n, k, r)))
                    return fail("R character/Hilbert mismatch at " + fmt(n, k, r));
                if (hilb_from_frob(rr).eval_at_one() != dimension(Ring::R, n, k, r))
                    return fail("R dimension at q=1 at " + fmt(n, k, r));
            }
    return pass();
}

Outcome check_nks_counts(const VerifyConfig& cfg) {
    for (int r : cfg.rs)
        for (int n = 1; n <= std::min(cfg.max_n, 5); ++n)
            for (int k = 1; k <= n; ++k)
                for (int s = 1; s <= k; ++s) {
                    auto c = count_nks(n, k, s, r);  // throws on any internal disagreement
                    if (c.nonskip != c.osp)
                        return fail("|N| != |OP| at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                    " s=" + std::to_string(s) + " r=" + std::to_string(r));
                    if (s == k && c.osp != dimension(Ring::S, n, k, r))
                        return fail("s=k degenerate count at " + fmt(n, k, r));
                }
    return pass();
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyConfig& cfg) {
    using Entry = std::pair<std::string, std::function<Outcome(const VerifyConfig&)>>;
    std::vector<Entry> checks = {
        {"consistency-closure", check_consistency_closure},
        {"counts-enumeration", check_counts_enumeration},
        {"demazure-leading-terms", check_demazure_leading_terms},
        {"des-asc-partition", check_des_asc_partition},
        {"descent-counts", check_descent_counts},
        {"descent-expand-oracle", check_descent_expand_oracle},
        {"eperp-recursion", check_eperp_recursion},
        {"frobenius-goldens", check_frobenius_goldens},
        {"groebner-oracle", check_groebner_oracle},
        {"group-action", check_group_action},
        {"hilbert-three-way", check_hilbert_three_way},
        {"insertion-increments", check_insertion_increments},
        {"mi-symmetry", check_mi_symmetry},
        {"nks-counts", check_nks_counts},
        {"nonskip-shuffle", check_nonskip_shuffle},
        {"psi-roundtrip", check_psi_roundtrip},
        {"skip-union", check_skip_union},
        {"statistic-goldens", check_statistic_goldens},
    };
    std::sort(checks.begin(), checks.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });

    std::ostringstream params;
    params << "max_n=" << cfg.max_n << " r={";
    for (std::size_t i = 0; i < cfg.rs.size(); ++i) params << (i ? "," : "") << cfg.rs[i];
    params << "} seed=" << cfg.seed;

    std::vector<CheckResult> results;
    for (const auto& [name, fn] : checks) {
        if (cfg.suite != "all" && name.rfind(cfg.suite, 0) != 0) continue;
        CheckResult res;
        res.name = name;
        res.params = params.str();
        auto start = std::chrono::steady_clock::now();
        try {
            Outcome out = fn(cfg);
            res.status = out.status;
            res.witness = out.witness;
        } catch (const BudgetExceeded&) {
            res.status = "skipped-budget";
        } catch (const std::exception& e) {
            res.status = "fail";
            res.witness = std::string("exception: ") + e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        res.ms = std::chrono::duration<double, std::milli>(stop - start).count();
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace coinv
