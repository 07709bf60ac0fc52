#pragma once

#include <map>
#include <string>
#include <vector>

#include "coinv/common.hpp"

namespace coinv {

/// Monomial in a fixed number of variables, as its exponent vector.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }

    int vars() const { return static_cast<int>(e.size()); }
    long degree() const;
    bool is_one() const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& o) const;
    // Exact quotient; requires divisibility.
    Monomial operator/(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Lexicographic comparison with x_1 > x_2 > ...; negative if a < b.
int lex_compare(const Monomial& a, const Monomial& b);

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};
struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) < 0; }
};

/// Sparse polynomial over the rationals; terms iterate in descending lex.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rat, LexGreater>;

    Poly() = default;
    explicit Poly(int nvars) : n_(nvars) {}
    Poly(const Monomial& m, Rat c);

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, Rat c) { return Poly(Monomial::one(nvars), std::move(c)); }
    static Poly variable(int nvars, int i, int power = 1);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;
    // Leading (lex-largest) term; polynomial must be nonzero.
    const std::pair<const Monomial, Rat>& leading() const;
    long degree() const;

    void add_term(const Monomial& m, const Rat& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& s);
    Poly times(const Monomial& m, const Rat& c) const;
    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // x_i -> x_i^r
    Poly substitute_powers(int r) const;
    // x_i -> x_{n+1-i}
    Poly reverse_variables() const;
    // x_i <-> x_{i+1}, 1-based i
    Poly swap_variables(int i) const;
    Poly monic() const;

    bool integer_coeffs() const;
    bool nonnegative_coeffs() const;

    std::string str() const;

  private:
    int n_ = 0;
    TermMap terms_;
};

// d-th elementary symmetric polynomial in x_1^r .. x_n^r.
Poly elementary_power(int n, int d, int r);
// Product e_{mu_1}(x^r) e_{mu_2}(x^r) ...
Poly elementary_power_product(int n, const std::vector<int>& mu, int r);

// Numeric elementary/homogeneous symmetric evaluations, used by identity checks.
Rat elementary_eval(const std::vector<Rat>& xs, int d);
Rat homogeneous_eval(const std::vector<Rat>& xs, int d);

// (f - s_i f)/(x_i - x_{i+1}) composed with multiplication, i.e. the isobaric
// divided difference pi_i f = (x_i f - x_{i+1} (s_i f)) / (x_i - x_{i+1}).
// Division is exact by construction and asserted.
Poly isobaric_divided_difference(const Poly& f, int i);

}  // namespace coinv
