#include "coinv/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace coinv {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int num = 1;
    for (int i = 0; i < k; ++i) num = num * (n - i) / (i + 1);
    return num;
}

Int stirling2(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k <= 0 || k > n) return 0;
    return Int(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

Int int_pow(Int base, int e) {
    Int p = 1;
    for (int i = 0; i < e; ++i) p *= base;
    return p;
}

std::uint64_t pack_exponents(const std::vector<int>& e) {
    if (e.size() > 10) throw std::invalid_argument("pack_exponents: too many variables");
    std::uint64_t key = 0;
    for (int x : e) {
        if (x < 0 || x >= 64) throw std::invalid_argument("pack_exponents: exponent out of range");
        key = (key << 6) | static_cast<std::uint64_t>(x);
    }
    return key;
}

QPoly::QPoly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int d, Int coeff) {
    QPoly p;
    if (coeff == 0) return p;
    p.c_.assign(d + 1, Int(0));
    p.c_[d] = std::move(coeff);
    return p;
}

Int QPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
    return c_[d];
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(c));
}

QPoly& QPoly::operator*=(const Int& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

QPoly QPoly::shifted(int d) const {
    if (is_zero()) return QPoly();
    std::vector<Int> c(c_.size() + d, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + d] = c_[i];
    return QPoly(std::move(c));
}

QPoly QPoly::inflated(int r) const {
    if (is_zero()) return QPoly();
    std::vector<Int> c(static_cast<std::size_t>(degree()) * r + 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * r] = c_[i];
    return QPoly(std::move(c));
}

QPoly QPoly::reversed() const {
    std::vector<Int> c(c_.rbegin(), c_.rend());
    return QPoly(std::move(c));
}

QPoly QPoly::reversed_about(int d) const {
    if (d < degree()) throw std::invalid_argument("reversed_about: degree too small");
    std::vector<Int> c(d + 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[d - i] = c_[i];
    return QPoly(std::move(c));
}

Int QPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& x : c_) s += x;
    return s;
}

bool QPoly::nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x >= 0; });
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        if (c_[d] == 0) continue;
        Int a = c_[d];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (mag != 1 || d == 0) os << mag;
        if (d >= 1) {
            if (mag != 1) os << "*";
            os << "q";
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

QPoly q_int(int n) {
    if (n <= 0) return QPoly();
    return QPoly(std::vector<Int>(n, Int(1)));
}

QPoly q_factorial(int n) {
    QPoly p = QPoly::one();
    for (int i = 1; i <= n; ++i) p *= q_int(i);
    return p;
}

QPoly exact_div(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (num.is_zero()) return QPoly();
    std::vector<Int> rem = num.coeffs();
    const auto& d = den.coeffs();
    int dn = den.degree();
    int qn = num.degree() - dn;
    if (qn < 0) throw std::domain_error("exact_div: nonzero remainder");
    std::vector<Int> quot(qn + 1, Int(0));
    for (int i = qn; i >= 0; --i) {
        Int top = rem[i + dn];
        if (top == 0) continue;
        if (top % d[dn] != 0) throw std::domain_error("exact_div: nonzero remainder");
        Int f = top / d[dn];
        quot[i] = f;
        for (int j = 0; j <= dn; ++j) rem[i + j] -= f * d[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw std::domain_error("exact_div: nonzero remainder");
    return QPoly(std::move(quot));
}

QPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) return QPoly();
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

QPoly q_stirling(int n, int k) {
    if (n == 0) return k == 0 ? QPoly::one() : QPoly();
    if (k <= 0 || k > n) return QPoly();
    return q_int(k) * q_stirling(n - 1, k) + q_stirling(n - 1, k - 1);
}

QPoly rev_q(const QPoly& p) { return p.reversed(); }

namespace {

QPoly pow_qpoly(const QPoly& p, int e) {
    QPoly out = QPoly::one();
    for (int i = 0; i < e; ++i) out *= p;
    return out;
}

}  // namespace

QPoly hilbert_series(Ring ring, int n, int k, int r) {
    if (n < 0 || k < 0 || k > n || r < 1) throw std::invalid_argument("hilbert_series: bad parameters");
    QPoly kfact_qr = q_factorial(k).inflated(r);
    if (ring == Ring::S) {
        QPoly p = pow_qpoly(q_int(r), n) * kfact_qr * q_stirling(n, k).inflated(r);
        return rev_q(p);
    }
    QPoly total;
    for (int z = 0; z <= n - k; ++z) {
        QPoly p = pow_qpoly(q_int(r), n - z) * kfact_qr * q_stirling(n - z, k).inflated(r);
        if (p.is_zero()) continue;
        total += rev_q(p).shifted(k * r * z) * QPoly(binomial(n, z));
    }
    return total;
}

Int dimension(Ring ring, int n, int k, int r) {
    if (ring == Ring::S) return int_pow(Int(r), n) * factorial(k) * stirling2(n, k);
    Int d = 0;
    for (int z = 0; z <= n - k; ++z)
        d += binomial(n, z) * int_pow(Int(r), n - z) * factorial(k) * stirling2(n - z, k);
    return d;
}

}  // namespace coinv
