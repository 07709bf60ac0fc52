#include "coinv/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace coinv {

long Monomial::degree() const {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    if (e.size() != m.e.size()) throw std::invalid_argument("Monomial::divides: length mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e.size() != o.e.size()) throw std::invalid_argument("Monomial::*: length mismatch");
    Monomial m = *this;
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
    return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("Monomial::/: not divisible");
    Monomial m = *this;
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] -= o.e[i];
    return m;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("lex_compare: length mismatch");
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

Poly::Poly(const Monomial& m, Rat c) : n_(m.vars()) {
    if (c != 0) terms_.emplace(m, std::move(c));
}

Poly Poly::variable(int nvars, int i, int power) {
    if (i < 1 || i > nvars) throw std::invalid_argument("Poly::variable: index out of range");
    Monomial m = Monomial::one(nvars);
    m.e[i - 1] = power;
    return Poly(m, Rat(1));
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

const std::pair<const Monomial, Rat>& Poly::leading() const {
    if (terms_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
    return *terms_.begin();
}

long Poly::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (n_ != o.n_ && !o.is_zero() && !is_zero()) throw std::invalid_argument("Poly::+=: variable count mismatch");
    if (n_ == 0) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (n_ != o.n_ && !o.is_zero() && !is_zero()) throw std::invalid_argument("Poly::-=: variable count mismatch");
    if (n_ == 0) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.n_ ? a.n_ : b.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Poly Poly::times(const Monomial& m, const Rat& c) const {
    Poly out(n_);
    if (c == 0) return out;
    for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm * m, cc * c);
    return out;
}

Poly Poly::substitute_powers(int r) const {
    Poly out(n_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        for (auto& x : mm.e) x *= r;
        out.terms_.emplace(mm, c);
    }
    return out;
}

Poly Poly::reverse_variables() const {
    Poly out(n_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        std::reverse(mm.e.begin(), mm.e.end());
        out.add_term(mm, c);
    }
    return out;
}

Poly Poly::swap_variables(int i) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("Poly::swap_variables: index out of range");
    Poly out(n_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        std::swap(mm.e[i - 1], mm.e[i]);
        out.add_term(mm, c);
    }
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly out = *this;
    Rat lead = leading().second;
    out *= Rat(1) / lead;
    return out;
}

bool Poly::integer_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return denominator(t.second) == 1; });
}

bool Poly::nonnegative_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (mag != 1 || m.is_one()) {
            os << mag;
            printed = true;
        }
        for (int i = 0; i < m.vars(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << (i + 1);
            if (m.e[i] > 1) os << "^" << m.e[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

Poly elementary_power(int n, int d, int r) {
    if (d < 0 || d > n) return Poly::zero(n);
    Poly out(n);
    std::vector<int> idx(d);
    std::function<void(int, int)> rec = [&](int start, int picked) {
        if (picked == d) {
            Monomial m = Monomial::one(n);
            for (int i : idx) m.e[i] = r;
            out.add_term(m, Rat(1));
            return;
        }
        for (int i = start; i <= n - (d - picked); ++i) {
            idx[picked] = i;
            rec(i + 1, picked + 1);
        }
    };
    rec(0, 0);
    return out;
}

Poly elementary_power_product(int n, const std::vector<int>& mu, int r) {
    Poly out = Poly::constant(n, Rat(1));
    for (int part : mu)
        if (part > 0) out *= elementary_power(n, part, r);
    return out;
}

Rat elementary_eval(const std::vector<Rat>& xs, int d) {
    if (d < 0 || d > static_cast<int>(xs.size())) return Rat(0);
    std::vector<Rat> dp(d + 1, Rat(0));
    dp[0] = 1;
    for (const auto& x : xs)
        for (int j = d; j >= 1; --j) dp[j] += dp[j - 1] * x;
    return dp[d];
}

Rat homogeneous_eval(const std::vector<Rat>& xs, int d) {
    if (d < 0) return Rat(0);
    std::vector<Rat> dp(d + 1, Rat(0));
    dp[0] = 1;
    for (const auto& x : xs)
        for (int j = 1; j <= d; ++j) dp[j] += dp[j - 1] * x;
    return dp[d];
}

Poly isobaric_divided_difference(const Poly& f, int i) {
    int n = f.vars();
    Poly num = Poly::variable(n, i) * f - Poly::variable(n, i + 1) * f.swap_variables(i);
    // divide exactly by (x_i - x_{i+1}); its lex leading term is x_i
    Poly div = Poly::variable(n, i) - Poly::variable(n, i + 1);
    Poly quot(n);
    Poly rem = num;
    const Monomial& lt = div.leading().first;
    while (!rem.is_zero()) {
        const auto& [m, c] = rem.leading();
        if (!lt.divides(m)) throw std::logic_error("isobaric_divided_difference: division not exact");
        Monomial q = m / lt;
        quot.add_term(q, c);
        rem -= div.times(q, c);
    }
    return quot;
}

}  // namespace coinv
