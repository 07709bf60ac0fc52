#pragma once

#include <vector>

#include "coinv/colored.hpp"
#include "coinv/common.hpp"

namespace coinv {

using Partition = std::vector<int>;          // weakly decreasing positive parts
using RPartition = std::vector<Partition>;   // exactly r components

int rpartition_size(const RPartition& shape);
Partition conjugate(const Partition& p);
RPartition conjugate(const RPartition& shape);

// Table with r components; comp[i] is a list of rows.
struct RTableau {
    std::vector<std::vector<std::vector<int>>> comp;

    int components() const { return static_cast<int>(comp.size()); }
    RPartition shape() const;
    int size() const;
};

// Entries 1..n appear once overall; rows and columns strict within components.
bool is_standard(const RTableau& T);
// Rows weakly increasing, columns strictly increasing.
bool is_semistandard(const RTableau& T);

struct TableauStats {
    std::vector<int> des_set;
    int des = 0;
    long maj = 0;
};

// Descents: i such that i+1 sits strictly below i in the same component, or in
// a component strictly to the right.  maj adds (j-1)|T^{(j)}| to r*sum(Des).
TableauStats tableau_stats(const RTableau& T, int r);

// Number of standard fillings of the shape: a multinomial times per-component
// hook-length counts.
Int syt_count(const RPartition& shape);

// All standard tableaux with r components and n boxes, by placing 1..n at
// addable corners (components ascending, rows ascending).
template <class F>
void for_each_syt(int n, int r, F&& f);

// Row-insertion RSK for r-colored words: the letter v^c row-inserts v into
// component c+1 of the insertion tableau; the recording tableau stays
// standard.  Des(w) = Des(T).
std::pair<RTableau, RTableau> colored_rsk(const ColoredWord& w);
ColoredWord colored_rsk_inverse(const RTableau& U, const RTableau& T, int r);

// --- implementation -------------------------------------------------------

namespace detail {

template <class F>
void syt_rec(int t, int n, RTableau& T, std::vector<Partition>& shapes, F&& f) {
    if (t > n) {
        f(T);
        return;
    }
    int r = T.components();
    for (int c = 0; c < r; ++c) {
        auto& sh = shapes[c];
        int rows = static_cast<int>(sh.size());
        for (int ri = 0; ri <= rows; ++ri) {
            bool new_row = ri == rows;
            if (!new_row && ri > 0 && sh[ri - 1] <= sh[ri]) continue;  // not an addable corner
            if (new_row) {
                sh.push_back(1);
                T.comp[c].push_back({t});
            } else {
                ++sh[ri];
                T.comp[c][ri].push_back(t);
            }
            syt_rec(t + 1, n, T, shapes, f);
            if (new_row) {
                sh.pop_back();
                T.comp[c].pop_back();
            } else {
                --sh[ri];
                T.comp[c][ri].pop_back();
            }
        }
    }
}

}  // namespace detail

template <class F>
void for_each_syt(int n, int r, F&& f) {
    if (n < 0 || r < 1) throw std::invalid_argument("for_each_syt: bad parameters");
    RTableau T;
    T.comp.resize(r);
    std::vector<Partition> shapes(r);
    detail::syt_rec(1, n, T, shapes, f);
}

}  // namespace coinv
