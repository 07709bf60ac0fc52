#pragma once

#include <vector>

#include "coinv/common.hpp"

namespace coinv {

/// Univariate polynomial in q with arbitrary-precision integer coefficients,
/// stored densely with coeffs[i] = coefficient of q^i and no trailing zeros.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(Int constant);
    explicit QPoly(std::vector<Int> coeffs);

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(Int(1)); }
    // q^d
    static QPoly monomial(int d, Int coeff = Int(1));

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int d) const;
    const std::vector<Int>& coeffs() const { return c_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    QPoly& operator*=(const Int& s);
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    // Multiplication by q^d.
    QPoly shifted(int d) const;
    // Substitution q -> q^r.
    QPoly inflated(int r) const;
    // Coefficient reversal about this polynomial's own degree.
    QPoly reversed() const;
    // Coefficient reversal about degree d (requires d >= degree()).
    QPoly reversed_about(int d) const;

    Int eval_at_one() const;
    bool nonnegative() const;

    std::string str() const;

  private:
    void trim();
    std::vector<Int> c_;
};

QPoly q_int(int n);
QPoly q_factorial(int n);
// Computed by exact polynomial division of factorials; the division is
// asserted to leave zero remainder.
QPoly q_binomial(int n, int k);
// q-Stirling number of the second kind: Stir_q(n,k) = [k]_q Stir_q(n-1,k) +
// Stir_q(n-1,k-1), Stir_q(0,k) = [k==0].  Out-of-range arguments give 0.
QPoly q_stirling(int n, int k);

QPoly rev_q(const QPoly& p);

// Exact division; throws std::domain_error if the remainder is nonzero.
QPoly exact_div(const QPoly& num, const QPoly& den);

// Closed-form Hilbert series of the two quotients:
//   S: rev_q([r]_q^n [k]!_{q^r} Stir_{q^r}(n,k))
//   R: sum_z C(n,z) q^{krz} rev_q([r]_q^{n-z} [k]!_{q^r} Stir_{q^r}(n-z,k))
QPoly hilbert_series(Ring ring, int n, int k, int r);

Int dimension(Ring ring, int n, int k, int r);

}  // namespace coinv
