#include "coinv/descent.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace coinv {

Monomial descent_monomial(const ColoredWord& g, int nvars) {
    int len = g.size();
    std::vector<bool> seen(nvars, false);
    for (const auto& l : g.letters) {
        if (l.value < 1 || l.value > nvars || seen[l.value - 1])
            throw std::invalid_argument("descent_monomial: values must be distinct in {1..n}");
        seen[l.value - 1] = true;
    }
    auto des = descent_set(g);
    Monomial b = Monomial::one(nvars);
    for (int i = 1; i <= len; ++i) {
        int d_i = 0;
        for (int d : des)
            if (d >= i) ++d_i;
        b.e[g.letters[i - 1].value - 1] = g.r * d_i + g.letters[i - 1].color;
    }
    return b;
}

StraighteningData straightening_data(const Monomial& m, int r) {
    int n = m.vars();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (m.e[a] != m.e[b]) return m.e[a] > m.e[b];
        return a < b;
    });
    StraighteningData sd;
    sd.g.r = r;
    for (int i : idx) sd.g.letters.push_back({i + 1, m.e[i] % r});
    auto des = descent_set(sd.g);
    sd.d.resize(n);
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int d : des)
            if (d >= i) ++c;
        sd.d[i - 1] = c;
    }
    sd.lambda.resize(n);
    for (int i = 0; i < n; ++i) sd.lambda[i] = m.e[idx[i]];
    sd.mu_conjugate.resize(n);
    for (int i = 0; i < n; ++i) {
        int rest = sd.lambda[i] - r * sd.d[i] - sd.g.letters[i].color;
        if (rest < 0 || rest % r != 0) throw std::logic_error("straightening_data: residual not a multiple of r");
        sd.mu_conjugate[i] = rest / r;
        if (i > 0 && sd.mu_conjugate[i] > sd.mu_conjugate[i - 1])
            throw std::logic_error("straightening_data: residual sequence not weakly decreasing");
    }
    // conjugate of mu'
    int height = sd.mu_conjugate.empty() ? 0 : sd.mu_conjugate.front();
    sd.mu.assign(height, 0);
    for (int row = 1; row <= height; ++row) {
        int count = 0;
        for (int x : sd.mu_conjugate)
            if (x >= row) ++count;
        sd.mu[row - 1] = count;
    }
    return sd;
}

bool in_descent_basis(const Monomial& m, int n, int k, int r) {
    if (m.vars() != n) throw std::invalid_argument("in_descent_basis: wrong variable count");
    if (k < 1) return false;
    StraighteningData sd = straightening_data(m, r);
    int des = n > 0 ? sd.d[0] : 0;
    if (des >= k) return false;
    if (!sd.mu.empty() && sd.mu[0] > n - k) return false;
    return sd.mu_conjugate.empty() || sd.mu_conjugate[0] < k - des;
}

bool in_extended_descent_basis(const Monomial& m, int n, int k, int r, int* z_out) {
    if (m.vars() != n) throw std::invalid_argument("in_extended_descent_basis: wrong variable count");
    if (k == 0) {
        if (z_out) *z_out = 0;
        return m.is_one();
    }
    int z = 0;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
        if (m.e[i] > k * r) return false;
        if (m.e[i] == k * r)
            ++z;
        else
            keep.push_back(m.e[i]);
    }
    if (z > n - k) return false;
    Monomial rest{std::move(keep)};
    if (!in_descent_basis(rest, n - z, k, r)) return false;
    if (z_out) *z_out = z;
    return true;
}

namespace {

// Appends every monomial b_g * x_{pi_1}^{r i_1} ... built on the ordered
// colored arrangement of the letters `values`, as exponents inside a length-n
// vector, to out (tagged with the stratum z).
void emit_descent_family(int n, int k, int r, const std::vector<int>& values, int z,
                         const std::vector<int>& prefix_vars,
                         std::vector<std::pair<std::uint64_t, int>>& out) {
    int len = static_cast<int>(values.size());
    int tail = n - k - z;  // number of letters eligible for extra powers
    std::vector<int> perm = values;
    std::sort(perm.begin(), perm.end());
    do {
        for_each_coloring(len, r, [&](const std::vector<int>& colors) {
            ColoredWord g;
            g.r = r;
            for (int i = 0; i < len; ++i) g.letters.push_back({perm[i], colors[i]});
            auto des = descent_set(g);
            int d = static_cast<int>(des.size());
            if (d >= k) return;
            Monomial base = descent_monomial(g, n);
            for (int v : prefix_vars) base.e[v - 1] = k * r;
            // weakly decreasing sequences bounded by k - des(g) - 1
            std::vector<int> iseq(tail, 0);
            std::function<void(int)> rec = [&](int pos) {
                if (pos == tail) {
                    Monomial m = base;
                    for (int i = 0; i < tail; ++i) m.e[g.letters[i].value - 1] += r * iseq[i];
                    out.push_back({pack_exponents(m.e), z});
                    return;
                }
                int hi = pos == 0 ? k - d - 1 : iseq[pos - 1];
                for (int v = 0; v <= hi; ++v) {
                    iseq[pos] = v;
                    rec(pos + 1);
                }
            };
            if (tail >= 0) rec(0);
        });
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::vector<std::pair<Monomial, int>> descent_basis(int n, int k, int r, bool extended) {
    if (n < 0 || k < 0 || k > n || r < 1) throw std::invalid_argument("descent_basis: bad parameters");
    if (k == 0) {
        if (extended) return {{Monomial::one(n), 0}};
        return {};
    }
    std::vector<std::pair<std::uint64_t, int>> packed;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    if (!extended) {
        emit_descent_family(n, k, r, all, 0, {}, packed);
    } else {
        int zmax = n - k;
        std::vector<int> zset;
        std::function<void(int, int)> choose = [&](int start, int z) {
            if (static_cast<int>(zset.size()) == z) {
                std::vector<int> rest;
                for (int v = 1; v <= n; ++v)
                    if (std::find(zset.begin(), zset.end(), v) == zset.end()) rest.push_back(v);
                emit_descent_family(n, k, r, rest, z, zset, packed);
                return;
            }
            for (int v = start; v <= n; ++v) {
                zset.push_back(v);
                choose(v + 1, z);
                zset.pop_back();
            }
        };
        for (int z = 0; z <= zmax; ++z) choose(1, z);
    }
    std::sort(packed.begin(), packed.end());
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
    std::vector<std::pair<Monomial, int>> out;
    out.reserve(packed.size());
    for (auto [key, z] : packed) {
        std::vector<int> e(n);
        for (int i = n - 1; i >= 0; --i) {
            e[i] = static_cast<int>(key & 63);
            key >>= 6;
        }
        out.push_back({Monomial(std::move(e)), z});
    }
    return out;
}

bool straightening_less(const Monomial& a, const Monomial& b, int r) {
    if (a.degree() != b.degree()) return false;
    StraighteningData sa = straightening_data(a, r), sb = straightening_data(b, r);
    if (sa.lambda != sb.lambda) {
        // strict dominance
        long pa = 0, pb = 0;
        for (std::size_t i = 0; i < sa.lambda.size(); ++i) {
            pa += sa.lambda[i];
            pb += sb.lambda[i];
            if (pa > pb) return false;
        }
        return true;
    }
    auto inversions = [](const ColoredWord& g) {
        long inv = 0;
        for (int i = 0; i < g.size(); ++i)
            for (int j = i + 1; j < g.size(); ++j)
                if (g.letters[i].value > g.letters[j].value) ++inv;
        return inv;
    };
    return inversions(sa.g) > inversions(sb.g);
}

std::map<Monomial, Rat, LexLess> expand_in_basis(const Monomial& m, int n, int k, int r, Ring ring,
                                                 std::vector<StraighteningStep>* trace, long max_steps) {
    if (m.vars() != n) throw std::invalid_argument("expand_in_basis: wrong variable count");
    int cap = ring == Ring::R ? k * r + 1 : k * r;
    std::map<Monomial, Rat, LexGreater> work;
    std::map<Monomial, Rat, LexLess> emit;
    work.emplace(m, Rat(1));
    long steps = 0;
    while (!work.empty()) {
        if (++steps > max_steps) throw BudgetExceeded("expand_in_basis: step budget exceeded");
        Monomial mon = work.begin()->first;
        Rat coeff = work.begin()->second;
        work.erase(work.begin());
        if (coeff == 0) continue;
        bool generator_divisible =
            std::any_of(mon.e.begin(), mon.e.end(), [&](int x) { return x >= cap; });
        if (generator_divisible) {
            if (trace) {
                // note when the straightening route would also have applied
                StraighteningData sd = straightening_data(mon, r);
                int des0 = n > 0 ? sd.d[0] : 0;
                int mu0 = sd.mu.empty() ? 0 : sd.mu[0];
                bool reducible = ring == Ring::S ? (des0 >= k || mu0 > n - k) : (des0 >= k + 1 || mu0 > n - k);
                trace->push_back({mon, coeff, reducible ? "drop (reduce also applicable)" : "drop"});
            }
            continue;
        }
        StraighteningData sd = straightening_data(mon, r);
        int des = n > 0 ? sd.d[0] : 0;
        int mu1 = sd.mu.empty() ? 0 : sd.mu[0];
        bool reduce = ring == Ring::S ? (des >= k || mu1 > n - k) : (des >= k + 1 || mu1 > n - k);
        if (!reduce) {
            bool member = ring == Ring::S ? in_descent_basis(mon, n, k, r)
                                          : in_extended_descent_basis(mon, n, k, r);
            if (!member) throw std::logic_error("expand_in_basis: emitted monomial outside the basis");
            emit[mon] += coeff;
            if (emit[mon] == 0) emit.erase(mon);
            if (trace) trace->push_back({mon, coeff, "emit"});
            continue;
        }
        if (trace) trace->push_back({mon, coeff, "reduce"});
        Poly p = elementary_power_product(n, sd.mu, r) * Poly(descent_monomial(sd.g, n), Rat(1));
        if (p.coeff(mon) != 1) throw std::logic_error("expand_in_basis: straightening head coefficient != 1");
        for (const auto& [mm, cc] : p.terms()) {
            if (mm == mon) continue;
            if (!straightening_less(mm, mon, r))
                throw std::logic_error("expand_in_basis: straightening produced a non-smaller monomial");
            auto it = work.find(mm);
            if (it == work.end())
                work.emplace(mm, -coeff * cc);
            else {
                it->second -= coeff * cc;
                if (it->second == 0) work.erase(it);
            }
        }
    }
    return emit;
}

}  // namespace coinv
