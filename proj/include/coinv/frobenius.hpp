#pragma once

#include <map>

#include "coinv/colored.hpp"
#include "coinv/qpoly.hpp"
#include "coinv/tableaux.hpp"

namespace coinv {

struct RPartitionLess {
    bool operator()(const RPartition& a, const RPartition& b) const {
        int sa = rpartition_size(a), sb = rpartition_size(b);
        if (sa != sb) return sa < sb;
        return a < b;
    }
};

/// Finitely supported map from r-partitions to graded multiplicities.
class SchurSeries {
  public:
    using TermMap = std::map<RPartition, QPoly, RPartitionLess>;

    SchurSeries() = default;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    QPoly coeff(const RPartition& shape) const;

    void add(const RPartition& shape, const QPoly& p);
    SchurSeries& operator+=(const SchurSeries& o);
    friend SchurSeries operator+(SchurSeries a, const SchurSeries& b) { return a += b; }
    bool operator==(const SchurSeries& o) const { return terms_ == o.terms_; }

    SchurSeries scaled(const QPoly& p) const;
    // Largest q-power appearing anywhere; -1 when zero.
    int max_degree() const;
    // Reverses every coefficient about the same global degree.
    SchurSeries reversed_about(int d) const;

    bool schur_positive() const;

  private:
    TermMap terms_;
};

// Graded multiplicity series attached to (n,k): the q-reversal (about the
// global top degree) of
//   sum_T q^{maj(T) + r C(n-k,2) - r(n-k)des(T)} [des(T) choose n-k]_{q^r}
//   s_{shape(T)'},
// summed over standard tableaux with r components and n boxes.  Conventions:
// n = k = 0 gives the empty-shape series 1; k = 0 < n gives 0.
SchurSeries d_series(int n, int k, int r);

// Adjoint of multiplication by e_j in the dual of component i (1-based):
// removes vertical j-strips from component i.
SchurSeries e_perp(const SchurSeries& series, int j, int i, int r);

// Graded character series of the chosen quotient: S gives d_series(n,k);
// R adds horizontal z-strips in component r with weight q^{krz}.
SchurSeries grfrob(Ring ring, int n, int k, int r);

// Hilbert series recovered from a character series: each shape contributes
// its standard-filling count.
QPoly hilb_from_frob(const SchurSeries& series);

// Coefficient of x^beta in the maj and coinv generating series: sums
// q^{maj}/q^{coinv} over all ordered multiset partitions with k blocks and
// content beta.  Returned as (maj series, coinv series).
std::pair<QPoly, QPoly> content_series(const RContent& beta, int k, int r);

// Partition moves used by the Pieri rules.
std::vector<Partition> vertical_strip_removals(const Partition& p, int j);
std::vector<Partition> horizontal_strip_additions(const Partition& p, int z);

}  // namespace coinv
