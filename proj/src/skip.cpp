#include "coinv/skip.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace coinv {

SkipData skip_data(const std::vector<int>& S, int n) {
    SkipData d;
    d.S = S;
    std::sort(d.S.begin(), d.S.end());
    for (std::size_t i = 0; i + 1 < d.S.size(); ++i)
        if (d.S[i] == d.S[i + 1]) throw std::invalid_argument("skip_data: repeated element");
    for (int s : d.S)
        if (s < 1 || s > n) throw std::invalid_argument("skip_data: element outside {1..n}");
    d.gamma.assign(n, 0);
    for (std::size_t j = 0; j < d.S.size(); ++j) d.gamma[d.S[j] - 1] = d.S[j] - static_cast<int>(j);
    d.skip_monomial = Monomial(d.gamma);
    d.gamma_reversed.assign(d.gamma.rbegin(), d.gamma.rend());
    return d;
}

bool skip_divides(const std::vector<int>& S, int r, const Monomial& m) {
    for (std::size_t j = 0; j < S.size(); ++j) {
        int s = S[j];
        if (m.e[s - 1] < r * (s - static_cast<int>(j))) return false;
    }
    return true;
}

namespace {

// Is there S of the given size with x(S)^r | m, where the exponent available
// at letter s is m.e[s-1] + extra*r if s is a member (extra models m(S)^r)?
// DFS over sorted tuples with the per-position requirement checked eagerly.
bool exists_skip_divisor(const Monomial& m, int n, int size, int r, int extra) {
    std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
        if (pos == size) return true;
        for (int s = start; s <= n - (size - pos - 1); ++s)
            if (m.e[s - 1] + extra * r >= r * (s - pos)) {
                if (rec(pos + 1, s + 1)) return true;
            }
        return false;
    };
    if (size < 0 || size > n) return false;
    return rec(0, 1);
}

}  // namespace

bool is_nonskip(const Monomial& m, int n, int k, int r, bool strong) {
    if (m.vars() != n) throw std::invalid_argument("is_nonskip: wrong variable count");
    int cap = strong ? k * r : k * r + 1;
    for (int x : m.e)
        if (x >= cap) return false;
    return !exists_skip_divisor(m, n, n - k + 1, r, 0);
}

std::vector<Monomial> shuffle_basis(int n, int k, int r, Ring ring) {
    if (n < 0 || k < 0 || k > n || r < 1) throw std::invalid_argument("shuffle_basis: bad parameters");
    int filler = ring == Ring::R ? k * r : k * r - 1;
    std::vector<std::uint64_t> keys;
    // place the staircase entries (r-1, 2r-1, ..., kr-1) at positions given by
    // a k-subset of {1..n}; remaining positions get the filler bound
    std::vector<int> pos(k);
    std::function<void(int, int)> choose = [&](int start, int picked) {
        if (picked == k) {
            std::vector<int> bound(n, filler);
            for (int j = 0; j < k; ++j) bound[pos[j]] = (j + 1) * r - 1;
            if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return;
            std::vector<int> e(n, 0);
            while (true) {
                keys.push_back(pack_exponents(e));
                int i = n - 1;
                while (i >= 0 && e[i] == bound[i]) e[i--] = 0;
                if (i < 0) break;
                ++e[i];
            }
            return;
        }
        for (int p = start; p <= n - (k - picked); ++p) {
            pos[picked] = p;
            choose(p + 1, picked + 1);
        }
    };
    if (n == 0) return {Monomial::one(0)};
    choose(0, 0);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Monomial> out;
    out.reserve(keys.size());
    for (std::uint64_t key : keys) {
        std::vector<int> e(n);
        for (int i = n - 1; i >= 0; --i) {
            e[i] = static_cast<int>(key & 63);
            key >>= 6;
        }
        out.push_back(Monomial(std::move(e)));
    }
    return out;
}

std::vector<int> unique_skip_set(const Monomial& m, int n, int k, int r) {
    if (m.vars() != n) throw std::invalid_argument("unique_skip_set: wrong variable count");
    if (!is_nonskip(m, n, k, r, false)) throw std::invalid_argument("unique_skip_set: monomial is skip-divisible");
    int size = n - k;
    std::vector<int> best, cur(size);
    bool found = false;
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == size) {
            if (!found || cur > best) best = cur;
            found = true;
            return;
        }
        for (int s = start; s <= n - (size - pos - 1); ++s) {
            // membership contributes an extra factor x_s^r
            if (m.e[s - 1] + r >= r * (s - pos)) {
                cur[pos] = s;
                rec(pos + 1, s + 1);
            }
        }
    };
    rec(0, 1);
    if (!found) throw std::logic_error("unique_skip_set: no candidate set");
    // re-verify both defining conditions
    Monomial boosted = m;
    for (int s : best) boosted.e[s - 1] += r;
    if (!skip_divides(best, r, boosted)) throw std::logic_error("unique_skip_set: candidate fails divisibility");
    if (exists_skip_divisor(boosted, n, n - k + 1, r, 0))
        throw std::logic_error("unique_skip_set: larger skip divisor exists");
    return best;
}

Monomial psi(const GFace& face) {
    if (!face.valid()) throw std::invalid_argument("psi: invalid face");
    int n = face.n, r = face.r;
    std::vector<int> where(n + 1, -1);  // block index, -1 for zero block
    std::vector<int> color(n + 1, 0);
    std::vector<int> blockmin(face.k, n + 1);
    for (int v : face.zero_block) where[v] = -1;
    for (int b = 0; b < face.k; ++b)
        for (const auto& l : face.blocks[b]) {
            where[l.value] = b;
            color[l.value] = l.color;
            blockmin[b] = std::min(blockmin[b], l.value);
        }

    std::vector<int> e;
    e.reserve(n);
    for (int t = 1; t <= n; ++t) {
        // nonzero blocks already active among letters < t, in display order
        int active = 0, pos_of_block = -1;
        for (int b = 0; b < face.k; ++b) {
            if (blockmin[b] <= t) {
                if (b == where[t]) pos_of_block = active;
                ++active;
            }
        }
        if (where[t] == -1) {
            e.push_back(active * r);
            continue;
        }
        int c = color[t];
        if (blockmin[where[t]] < t) {
            // t joins an existing block
            e.push_back(pos_of_block * r + (r - c - 1));
        } else {
            // t opened its block: multiply in m(S)^r for the unique skip set
            Monomial partial{std::vector<int>(e)};
            auto S = unique_skip_set(partial, t - 1, active - 1, r);
            for (int s : S) e[s - 1] += r;
            e.push_back(pos_of_block * r + (r - c - 1));
        }
    }
    return Monomial(std::move(e));
}

GFace phi(const Monomial& m, int n, int k, int r) {
    if (m.vars() != n) throw std::invalid_argument("phi: wrong variable count");
    if (!is_nonskip(m, n, k, r, false)) throw std::invalid_argument("phi: monomial is skip-divisible");

    std::vector<std::vector<ColoredLetter>> slots(k);
    std::vector<bool> frozen(k, false);
    std::vector<int> zero_block;
    std::vector<int> cur = m.e;
    int kcur = k;

    auto nonfrozen_slot = [&](int j) -> int {
        int seen = 0;
        for (int b = 0; b < k; ++b) {
            if (frozen[b]) continue;
            if (seen == j) return b;
            ++seen;
        }
        throw std::logic_error("phi: slot index out of range");
    };

    for (int t = n; t >= 1; --t) {
        int a = cur[t - 1];
        if (a > kcur * r) throw std::logic_error("phi: exponent exceeds stage bound");
        if (a == kcur * r) {
            zero_block.push_back(t);
            continue;
        }
        int j = a / r;
        int c = r - 1 - (a % r);
        Monomial rest{std::vector<int>(cur.begin(), cur.begin() + (t - 1))};
        if (is_nonskip(rest, t - 1, kcur, r, false)) {
            slots[nonfrozen_slot(j)].push_back({t, c});
        } else {
            // bar step: strip the unique skip divisor and close this slot
            int size = t - kcur;
            std::vector<int> found, pick(size);
            bool have = false;
            std::function<void(int, int)> rec = [&](int pos, int start) {
                if (pos == size) {
                    if (have) throw std::logic_error("phi: skip divisor not unique");
                    found = pick;
                    have = true;
                    return;
                }
                for (int s = start; s <= (t - 1) - (size - pos - 1); ++s)
                    if (rest.e[s - 1] >= r * (s - pos)) {
                        pick[pos] = s;
                        rec(pos + 1, s + 1);
                    }
            };
            rec(0, 1);
            if (!have) throw std::logic_error("phi: skip divisor vanished");
            int slot = nonfrozen_slot(j);
            slots[slot].push_back({t, c});
            frozen[slot] = true;
            for (int s : found) cur[s - 1] -= r;
            --kcur;
        }
    }
    if (kcur != 0) throw std::logic_error("phi: unfilled block slots remain");

    GFace face;
    face.n = n;
    face.k = k;
    face.r = r;
    std::sort(zero_block.begin(), zero_block.end());
    face.zero_block = std::move(zero_block);
    face.blocks = std::move(slots);
    for (auto& b : face.blocks)
        std::sort(b.begin(), b.end(), [](const ColoredLetter& x, const ColoredLetter& y) {
            return compare_letters(x, y, LetterOrder::ValueMajor) < 0;
        });
    if (!face.valid()) throw std::logic_error("phi: produced invalid face");
    return face;
}

namespace {

// All subsets of {1..N} of the given size, as per-letter exponent requirements
// req[s-1] = r*(s - position), for fast divisibility scans.
std::vector<std::vector<int>> skip_requirements(int N, int size, int r) {
    std::vector<std::vector<int>> reqs;
    if (size < 0 || size > N) return reqs;
    std::vector<int> cur(size);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == size) {
            std::vector<int> req(N, 0);
            for (int j = 0; j < size; ++j) req[cur[j] - 1] = r * (cur[j] - j);
            reqs.push_back(std::move(req));
            return;
        }
        for (int s = start; s <= N - (size - pos - 1); ++s) {
            cur[pos] = s;
            rec(pos + 1, s + 1);
        }
    };
    rec(0, 1);
    return reqs;
}

bool dominated_by_any(const std::vector<int>& e, const std::vector<std::vector<int>>& reqs) {
    for (const auto& req : reqs) {
        bool div = true;
        for (std::size_t i = 0; i < e.size() && div; ++i)
            if (e[i] < req[i]) div = false;
        if (div) return true;
    }
    return false;
}

}  // namespace

NksCounts count_nks(int n, int k, int s, int r) {
    if (!(n >= k && k >= s && s >= 1 && r >= 1)) throw std::invalid_argument("count_nks: bad parameters");

    auto reqs_small = skip_requirements(n, n - s + 1, r);
    Int count_n = 0;
    std::vector<int> e(n, 0);
    int cap = k * r - 1;
    while (true) {
        if (!dominated_by_any(e, reqs_small)) ++count_n;
        int i = n - 1;
        while (i >= 0 && e[i] == cap) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }

    Int count_op = 0;
    for_each_osp_nks(n, k, s, r, [&](const OrderedSetPartition&) { ++count_op; });

    // suffix-exponent filter inside the (n+(k-s), k) strongly nonskip family
    int big = k - s, N = n + big;
    std::vector<int> suffix(big);
    for (int i = 0; i < big; ++i) suffix[i] = r * (s + i) + (r - 1);
    auto reqs_big = skip_requirements(N, n - s + 1, r);
    Int count_prime = 0;
    std::vector<int> full(N, 0);
    for (int i = 0; i < big; ++i) full[n + i] = suffix[i];
    e.assign(n, 0);
    while (true) {
        std::copy(e.begin(), e.end(), full.begin());
        if (!dominated_by_any(full, reqs_big)) ++count_prime;
        int i = n - 1;
        while (i >= 0 && e[i] == cap) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }

    if (count_n != count_op || count_n != count_prime)
        throw std::logic_error("count_nks: enumeration counts disagree");
    return {count_n, count_op};
}

}  // namespace coinv
