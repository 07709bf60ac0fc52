#include "coinv/tableaux.hpp"

#include <algorithm>

namespace coinv {

int rpartition_size(const RPartition& shape) {
    int s = 0;
    for (const auto& p : shape)
        for (int x : p) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    Partition out;
    int height = p.empty() ? 0 : p.front();
    for (int row = 1; row <= height; ++row) {
        int count = 0;
        for (int x : p)
            if (x >= row) ++count;
        out.push_back(count);
    }
    return out;
}

RPartition conjugate(const RPartition& shape) {
    RPartition out;
    out.reserve(shape.size());
    for (const auto& p : shape) out.push_back(conjugate(p));
    return out;
}

RPartition RTableau::shape() const {
    RPartition sh;
    for (const auto& component : comp) {
        Partition p;
        for (const auto& row : component) p.push_back(static_cast<int>(row.size()));
        sh.push_back(std::move(p));
    }
    return sh;
}

int RTableau::size() const {
    int s = 0;
    for (const auto& component : comp)
        for (const auto& row : component) s += static_cast<int>(row.size());
    return s;
}

namespace {

bool rows_and_columns_ok(const RTableau& T, bool strict_rows) {
    for (const auto& component : T.comp) {
        for (std::size_t ri = 0; ri < component.size(); ++ri) {
            if (ri + 1 < component.size() && component[ri + 1].size() > component[ri].size()) return false;
            for (std::size_t ci = 0; ci < component[ri].size(); ++ci) {
                if (ci + 1 < component[ri].size()) {
                    if (strict_rows ? component[ri][ci] >= component[ri][ci + 1]
                                    : component[ri][ci] > component[ri][ci + 1])
                        return false;
                }
                if (ri + 1 < component.size() && ci < component[ri + 1].size() &&
                    component[ri][ci] >= component[ri + 1][ci])
                    return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_standard(const RTableau& T) {
    int n = T.size();
    std::vector<bool> seen(n, false);
    for (const auto& component : T.comp)
        for (const auto& row : component)
            for (int x : row) {
                if (x < 1 || x > n || seen[x - 1]) return false;
                seen[x - 1] = true;
            }
    return rows_and_columns_ok(T, true);
}

bool is_semistandard(const RTableau& T) { return rows_and_columns_ok(T, false); }

TableauStats tableau_stats(const RTableau& T, int r) {
    int n = T.size();
    std::vector<std::pair<int, int>> where(n + 1, {-1, -1});  // component, row
    for (int c = 0; c < T.components(); ++c)
        for (std::size_t ri = 0; ri < T.comp[c].size(); ++ri)
            for (int x : T.comp[c][ri]) where[x] = {c, static_cast<int>(ri)};
    TableauStats st;
    for (int i = 1; i < n; ++i) {
        auto [ci, rowi] = where[i];
        auto [cj, rowj] = where[i + 1];
        if ((ci == cj && rowj > rowi) || cj > ci) st.des_set.push_back(i);
    }
    st.des = static_cast<int>(st.des_set.size());
    long s = 0;
    for (int i : st.des_set) s += i;
    st.maj = static_cast<long>(r) * s;
    for (int c = 0; c < T.components(); ++c) {
        long boxes = 0;
        for (const auto& row : T.comp[c]) boxes += static_cast<long>(row.size());
        st.maj += static_cast<long>(c) * boxes;
    }
    return st;
}

namespace {

Int hook_count(const Partition& p) {
    int boxes = 0;
    for (int x : p) boxes += x;
    Int num = factorial(boxes);
    Partition conj = conjugate(p);
    for (std::size_t ri = 0; ri < p.size(); ++ri)
        for (int ci = 0; ci < p[ri]; ++ci) {
            Int hook = (p[ri] - ci - 1) + (conj[ci] - static_cast<int>(ri) - 1) + 1;
            if (num % hook != 0) throw std::logic_error("hook_count: inexact division");
            num /= hook;
        }
    return num;
}

}  // namespace

Int syt_count(const RPartition& shape) {
    int n = rpartition_size(shape);
    Int count = factorial(n);
    for (const auto& p : shape) {
        int boxes = 0;
        for (int x : p) boxes += x;
        count /= factorial(boxes);
        count *= hook_count(p);
    }
    return count;
}

std::pair<RTableau, RTableau> colored_rsk(const ColoredWord& w) {
    if (!w.valid()) throw std::invalid_argument("colored_rsk: bad word");
    RTableau U, T;
    U.comp.resize(w.r);
    T.comp.resize(w.r);
    for (int step = 0; step < w.size(); ++step) {
        int comp = w.letters[step].color;
        int x = w.letters[step].value;
        auto& rows = U.comp[comp];
        std::size_t ri = 0;
        while (true) {
            if (ri == rows.size()) {
                rows.push_back({x});
                T.comp[comp].push_back({step + 1});
                break;
            }
            auto& row = rows[ri];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                T.comp[comp][ri].push_back(step + 1);
                break;
            }
            std::swap(*it, x);  // bump
            ++ri;
        }
    }
    return {U, T};
}

ColoredWord colored_rsk_inverse(const RTableau& U, const RTableau& T, int r) {
    if (U.components() != r || T.components() != r)
        throw std::invalid_argument("colored_rsk_inverse: component mismatch");
    RTableau u = U;
    RTableau t = T;
    int n = t.size();
    std::vector<ColoredLetter> letters(n);
    for (int step = n; step >= 1; --step) {
        int comp = -1, row = -1, col = -1;
        for (int c = 0; c < r && comp < 0; ++c)
            for (std::size_t ri = 0; ri < t.comp[c].size() && comp < 0; ++ri)
                for (std::size_t ci = 0; ci < t.comp[c][ri].size(); ++ci)
                    if (t.comp[c][ri][ci] == step) {
                        comp = c;
                        row = static_cast<int>(ri);
                        col = static_cast<int>(ci);
                        break;
                    }
        if (comp < 0) throw std::invalid_argument("colored_rsk_inverse: missing entry");
        if (col != static_cast<int>(t.comp[comp][row].size()) - 1 ||
            static_cast<int>(u.comp[comp][row].size()) - 1 != col)
            throw std::invalid_argument("colored_rsk_inverse: entry is not removable");
        int value = u.comp[comp][row].back();
        u.comp[comp][row].pop_back();
        t.comp[comp][row].pop_back();
        if (u.comp[comp][row].empty()) {
            u.comp[comp].pop_back();
            t.comp[comp].pop_back();
        }
        for (int ri = row - 1; ri >= 0; --ri) {
            auto& above = u.comp[comp][ri];
            // rightmost entry strictly smaller than the travelling value
            auto it = std::lower_bound(above.begin(), above.end(), value);
            if (it == above.begin()) throw std::invalid_argument("colored_rsk_inverse: reverse bump failed");
            --it;
            std::swap(*it, value);
        }
        letters[step - 1] = {value, comp};
    }
    ColoredWord w;
    w.r = r;
    w.letters = std::move(letters);
    return w;
}

}  // namespace coinv
