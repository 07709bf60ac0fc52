#include "coinv/frobenius.hpp"

#include <algorithm>
#include <functional>

namespace coinv {

QPoly SchurSeries::coeff(const RPartition& shape) const {
    auto it = terms_.find(shape);
    return it == terms_.end() ? QPoly() : it->second;
}

void SchurSeries::add(const RPartition& shape, const QPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.emplace(shape, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SchurSeries& SchurSeries::operator+=(const SchurSeries& o) {
    for (const auto& [shape, p] : o.terms_) add(shape, p);
    return *this;
}

SchurSeries SchurSeries::scaled(const QPoly& p) const {
    SchurSeries out;
    if (p.is_zero()) return out;
    for (const auto& [shape, c] : terms_) out.add(shape, c * p);
    return out;
}

int SchurSeries::max_degree() const {
    int d = -1;
    for (const auto& [shape, p] : terms_) d = std::max(d, p.degree());
    return d;
}

SchurSeries SchurSeries::reversed_about(int d) const {
    SchurSeries out;
    for (const auto& [shape, p] : terms_) out.add(shape, p.reversed_about(d));
    return out;
}

bool SchurSeries::schur_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.nonnegative(); });
}

SchurSeries d_series(int n, int k, int r) {
    if (n < 0 || k < 0 || k > n || r < 1) throw std::invalid_argument("d_series: bad parameters");
    SchurSeries pre;
    for_each_syt(n, r, [&](const RTableau& T) {
        TableauStats st = tableau_stats(T, r);
        if (st.des < n - k) return;
        long expo = st.maj + static_cast<long>(r) * (n - k) * (n - k - 1) / 2 -
                    static_cast<long>(r) * (n - k) * st.des;
        if (expo < 0) throw std::logic_error("d_series: negative exponent");
        QPoly coeff = q_binomial(st.des, n - k).inflated(r).shifted(static_cast<int>(expo));
        pre.add(conjugate(T.shape()), coeff);
    });
    if (pre.is_zero()) return pre;
    return pre.reversed_about(pre.max_degree());
}

std::vector<Partition> vertical_strip_removals(const Partition& p, int j) {
    std::vector<Partition> out;
    int rows = static_cast<int>(p.size());
    if (j > rows) return out;  // at most one box per row can leave
    std::vector<int> take(rows, 0);
    std::function<void(int, int)> rec = [&](int i, int removed) {
        if (removed > j) return;
        if (i == rows) {
            if (removed != j) return;
            Partition q;
            for (int t = 0; t < rows; ++t) {
                int len = p[t] - take[t];
                if (len > 0) q.push_back(len);
            }
            for (std::size_t t = 0; t + 1 < q.size(); ++t)
                if (q[t] < q[t + 1]) return;
            // also reject interior zero rows (a zero row above a positive one)
            for (int t = 0; t + 1 < rows; ++t)
                if (p[t] - take[t] == 0 && p[t + 1] - take[t + 1] > 0) return;
            out.push_back(std::move(q));
            return;
        }
        for (int d = 0; d <= 1; ++d) {
            if (p[i] - d < 0) continue;
            take[i] = d;
            rec(i + 1, removed + d);
        }
        take[i] = 0;
    };
    rec(0, 0);
    return out;
}

std::vector<Partition> horizontal_strip_additions(const Partition& p, int z) {
    std::vector<Partition> out;
    int rows = static_cast<int>(p.size());
    std::vector<int> q(rows + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rows + 1) {
            if (left != 0) return;
            Partition res;
            for (int t = 0; t <= rows; ++t)
                if (q[t] > 0) res.push_back(q[t]);
            out.push_back(std::move(res));
            return;
        }
        int lo = i < rows ? p[i] : 0;
        int hi = i == 0 ? (rows > 0 ? p[0] : 0) + z : p[i - 1];
        for (int len = lo; len <= hi && len - lo <= left; ++len) {
            q[i] = len;
            rec(i + 1, left - (len - lo));
        }
        q[i] = 0;
    };
    rec(0, z);
    return out;
}

SchurSeries e_perp(const SchurSeries& series, int j, int i, int r) {
    // The inner product pairs s_lambda with s_{lambda*}, where * reverses the
    // first r-1 components.  Multiplying by e_j in the variables of component
    // i* therefore adds vertical strips to component (i*)* = i of the dual
    // index; the adjoint acts on this side by removing vertical j-strips from
    // component i itself.  The recursion checks pin this convention down.
    if (j < 1 || i < 1 || i > r) throw std::invalid_argument("e_perp: bad parameters");
    SchurSeries out;
    for (const auto& [shape, p] : series.terms()) {
        for (const auto& smaller : vertical_strip_removals(shape[i - 1], j)) {
            RPartition target = shape;
            target[i - 1] = smaller;
            out.add(target, p);
        }
    }
    return out;
}

SchurSeries grfrob(Ring ring, int n, int k, int r) {
    if (n < 1 || k < 1 || k > n || r < 1) throw std::invalid_argument("grfrob: bad parameters");
    if (ring == Ring::S) return d_series(n, k, r);
    SchurSeries out;
    for (int z = 0; z <= n - k; ++z) {
        SchurSeries base = d_series(n - z, k, r);
        QPoly weight = QPoly::monomial(k * r * z);
        for (const auto& [shape, p] : base.terms()) {
            for (const auto& bigger : horizontal_strip_additions(shape[r - 1], z)) {
                RPartition target = shape;
                target[r - 1] = bigger;
                out.add(target, p * weight);
            }
        }
    }
    return out;
}

QPoly hilb_from_frob(const SchurSeries& series) {
    QPoly h;
    for (const auto& [shape, p] : series.terms()) {
        QPoly scaled = p;
        scaled *= syt_count(shape);
        h += scaled;
    }
    return h;
}

std::pair<QPoly, QPoly> content_series(const RContent& beta, int k, int r) {
    QPoly maj_series, coinv_series;
    for_each_omp_with_content(beta, k, r, [&](const OrderedMultisetPartition& omp) {
        maj_series += QPoly::monomial(static_cast<int>(maj(omp)));
        coinv_series += QPoly::monomial(static_cast<int>(coinversion(omp)));
    });
    return {maj_series, coinv_series};
}

}  // namespace coinv
