#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coinv/common.hpp"

namespace coinv {

struct ColoredLetter {
    int value = 1;  // >= 1
    int color = 0;  // in [0, r-1]
    bool operator==(const ColoredLetter&) const = default;
};

// The two total orders on colored letters.
//   ColorMajor: higher colors are smaller; ties broken by value.
//   ValueMajor: smaller values first; ties broken by higher color first.
enum class LetterOrder { ColorMajor, ValueMajor };

// Three-way comparison: negative if a before b, 0 if equal.
int compare_letters(const ColoredLetter& a, const ColoredLetter& b, LetterOrder order);

struct ColoredWord {
    int r = 1;
    std::vector<ColoredLetter> letters;

    int size() const { return static_cast<int>(letters.size()); }
    int color_sum() const;
    bool valid() const;
    // True if the values are a permutation of {1..n}.
    bool is_permutation() const;
};

// Positions i (1-based, i < n) with w_i > w_{i+1} / w_i < w_{i+1} in ColorMajor order.
std::vector<int> descent_set(const ColoredWord& w);
std::vector<int> ascent_set(const ColoredWord& w);
long maj(const ColoredWord& w);

// Ordered set partition of {1..n} with k blocks of r-colored letters.
// Blocks are stored sorted ascending in ValueMajor order.
struct OrderedSetPartition {
    int n = 0, k = 0, r = 1;
    std::vector<std::vector<ColoredLetter>> blocks;

    bool valid() const;
    int color_sum() const;
};

// Ordered multiset partition: blocks are sets of distinct colored letters but
// the same letter may recur across blocks.  Blocks sorted ascending ValueMajor.
struct OrderedMultisetPartition {
    int r = 1;
    std::vector<std::vector<ColoredLetter>> blocks;

    int size() const;
    int color_sum() const;
    bool valid() const;
};

// Face: an ordered set partition whose first block may be an uncolored "zero
// block".  The zero block is stored separately; dimension k = blocks.size().
struct GFace {
    int n = 0, k = 0, r = 1;
    std::vector<int> zero_block;  // sorted ascending, possibly empty
    std::vector<std::vector<ColoredLetter>> blocks;

    bool valid() const;
};

// Descent-starred form of an ordered set partition: a colored permutation g
// (blocks written in decreasing ColorMajor order, concatenated) together with
// the positions starred, which are exactly the intra-block adjacencies.
std::pair<ColoredWord, std::vector<int>> starred_form(const OrderedSetPartition& osp);

// maj from a starred pair; throws if S is not a subset of Des(g).
long maj_starred(const ColoredWord& g, const std::vector<int>& S);

long maj(const OrderedSetPartition& osp);
long maj(const OrderedMultisetPartition& omp);

long coinversion(const OrderedSetPartition& osp);
long coinversion(const OrderedMultisetPartition& omp);
long coinversion(const GFace& face);

// Removes the zero block and relabels the remaining letters onto {1..n-z} by
// the order-preserving map, keeping colors.
OrderedSetPartition standardize(const GFace& face);

struct InsertMove {
    enum Kind { Star, Zero, Bar } kind = Zero;
    int j = 0;  // Star: 1..k counted from the rightmost nonzero block; Bar: 0..k
    int c = 0;
};

// Inserts the letter n+1 into a face.  Star and Zero keep the dimension, Bar
// raises it by one.  coinv increases by r(k-j)+(r-c-1), kr, and
// r(n-k)+r(k-j)+(r-c-1) respectively.
GFace insert_letter(const GFace& face, const InsertMove& move);

// Value substitution i -> pi[i-1] (colors carried along), and diagonal color
// shift by shifts[i-1] mod r (zero-block letters unaffected).
GFace act_permutation(const GFace& face, const std::vector<int>& pi);
GFace act_diagonal(const GFace& face, const std::vector<int>& shifts);

// Text grammar: colored letter "V^C", uncolored zero-block letter "V",
// face "( a b | c ... | ... )" with the zero block (if nonempty) first and
// letters within a block ascending in ValueMajor order.
std::string to_string(const ColoredLetter& l);
std::string to_string(const ColoredWord& w);
std::string to_string(const OrderedSetPartition& osp);
std::string to_string(const GFace& face);
GFace parse_face(const std::string& text, int r);

// --- enumeration ----------------------------------------------------------
// Deterministic recursive order; every object is emitted exactly once.
// Streams are restartable by calling again.

template <class F>
void for_each_coloring(int n, int r, F&& f) {
    std::vector<int> colors(n, 0);
    while (true) {
        f(const_cast<const std::vector<int>&>(colors));
        int i = n - 1;
        while (i >= 0 && colors[i] == r - 1) colors[i--] = 0;
        if (i < 0) break;
        ++colors[i];
    }
}

template <class F>
void for_each_colored_permutation(int n, int r, F&& f) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        for_each_coloring(n, r, [&](const std::vector<int>& colors) {
            ColoredWord w;
            w.r = r;
            w.letters.resize(n);
            for (int i = 0; i < n; ++i) w.letters[i] = {perm[i], colors[i]};
            f(w);
        });
    } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace detail {

// Iterates over all assignments of {1..n} into slots {lo..hi} such that every
// slot in {must_lo..must_hi} receives at least one letter.
template <class F>
void for_each_assignment(int n, int lo, int hi, int must_lo, int must_hi, F&& f) {
    std::vector<int> a(n, lo);
    while (true) {
        bool ok = true;
        for (int b = must_lo; b <= must_hi && ok; ++b)
            ok = std::find(a.begin(), a.end(), b) != a.end();
        if (ok) f(const_cast<const std::vector<int>&>(a));
        int i = n - 1;
        while (i >= 0 && a[i] == hi) a[i--] = lo;
        if (i < 0) break;
        ++a[i];
    }
}

}  // namespace detail

template <class F>
void for_each_osp(int n, int k, int r, F&& f) {
    if (n < 0 || k < 0 || k > n || r < 1) throw std::invalid_argument("for_each_osp: bad parameters");
    if (k == 0) return;  // no partition of a nonempty set into 0 blocks (n>=k handled above)
    detail::for_each_assignment(n, 1, k, 1, k, [&](const std::vector<int>& a) {
        for_each_coloring(n, r, [&](const std::vector<int>& colors) {
            OrderedSetPartition osp;
            osp.n = n;
            osp.k = k;
            osp.r = r;
            osp.blocks.assign(k, {});
            for (int i = 0; i < n; ++i) osp.blocks[a[i] - 1].push_back({i + 1, colors[i]});
            f(osp);
        });
    });
}

template <class F>
void for_each_face(int n, int k, int r, F&& f) {
    if (n < 0 || k < 0 || k > n || r < 1) throw std::invalid_argument("for_each_face: bad parameters");
    // Slot 0 is the zero block, slots 1..k the nonzero blocks.
    detail::for_each_assignment(n, 0, k, 1, k, [&](const std::vector<int>& a) {
        std::vector<int> colored_pos;
        for (int i = 0; i < n; ++i)
            if (a[i] != 0) colored_pos.push_back(i);
        int m = static_cast<int>(colored_pos.size());
        for_each_coloring(m, r, [&](const std::vector<int>& colors) {
            GFace face;
            face.n = n;
            face.k = k;
            face.r = r;
            face.blocks.assign(k, {});
            for (int i = 0, ci = 0; i < n; ++i) {
                if (a[i] == 0)
                    face.zero_block.push_back(i + 1);
                else
                    face.blocks[a[i] - 1].push_back({i + 1, colors[ci++]});
            }
            f(face);
        });
    });
}

// Content of an ordered multiset partition: content[i][j-1] = multiplicity of
// the letter j with color i.
using RContent = std::vector<std::vector<int>>;

namespace detail {

template <class F>
void omp_rec(const std::vector<std::pair<ColoredLetter, int>>& letters, std::size_t idx, int k,
             std::vector<std::vector<ColoredLetter>>& blocks, F&& f) {
    if (idx == letters.size()) {
        for (const auto& b : blocks)
            if (b.empty()) return;
        f(const_cast<const std::vector<std::vector<ColoredLetter>>&>(blocks));
        return;
    }
    const auto& [letter, mult] = letters[idx];
    // choose the set of blocks receiving this letter
    std::vector<int> choice(mult);
    std::function<void(int, int)> choose = [&](int start, int picked) {
        if (picked == mult) {
            for (int b : choice) blocks[b].push_back(letter);
            omp_rec(letters, idx + 1, k, blocks, f);
            for (int b : choice) blocks[b].pop_back();
            return;
        }
        for (int b = start; b < k; ++b) {
            choice[picked] = b;
            choose(b + 1, picked + 1);
        }
    };
    choose(0, 0);
}

}  // namespace detail

template <class F>
void for_each_omp_with_content(const RContent& content, int k, int r, F&& f) {
    if (k < 0 || r < 1 || static_cast<int>(content.size()) != r)
        throw std::invalid_argument("for_each_omp_with_content: bad parameters");
    std::vector<std::pair<ColoredLetter, int>> letters;
    for (int c = 0; c < r; ++c)
        for (std::size_t v = 0; v < content[c].size(); ++v) {
            int mult = content[c][v];
            if (mult < 0) throw std::invalid_argument("for_each_omp_with_content: negative multiplicity");
            if (mult > k) return;  // a block is a set: no room
            if (mult > 0) letters.push_back({{static_cast<int>(v) + 1, c}, mult});
        }
    if (k > 0 && letters.empty()) return;
    if (k == 0) return;
    std::vector<std::vector<ColoredLetter>> blocks(k);
    detail::omp_rec(letters, 0, k, blocks, [&](const std::vector<std::vector<ColoredLetter>>& bl) {
        OrderedMultisetPartition omp;
        omp.r = r;
        omp.blocks = bl;
        for (auto& b : omp.blocks)
            std::sort(b.begin(), b.end(), [](const ColoredLetter& a, const ColoredLetter& c) {
                return compare_letters(a, c, LetterOrder::ValueMajor) < 0;
            });
        f(omp);
    });
}

// k-block ordered set partitions of {1..n+(k-s)} where the letter n+i sits in
// block s+i with color 0.  Small letters 1..n are distributed freely subject
// to blocks 1..s being nonempty.
template <class F>
void for_each_osp_nks(int n, int k, int s, int r, F&& f) {
    if (!(n >= k && k >= s && s >= 1 && r >= 1)) throw std::invalid_argument("for_each_osp_nks: bad parameters");
    detail::for_each_assignment(n, 1, k, 1, s, [&](const std::vector<int>& a) {
        for_each_coloring(n, r, [&](const std::vector<int>& colors) {
            OrderedSetPartition osp;
            osp.n = n + (k - s);
            osp.k = k;
            osp.r = r;
            osp.blocks.assign(k, {});
            for (int i = 0; i < n; ++i) osp.blocks[a[i] - 1].push_back({i + 1, colors[i]});
            for (int i = 1; i <= k - s; ++i) osp.blocks[s + i - 1].push_back({n + i, 0});
            for (auto& b : osp.blocks)
                std::sort(b.begin(), b.end(), [](const ColoredLetter& x, const ColoredLetter& y) {
                    return compare_letters(x, y, LetterOrder::ValueMajor) < 0;
                });
            f(osp);
        });
    });
}

}  // namespace coinv
