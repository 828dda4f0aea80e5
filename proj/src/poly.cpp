#include "covercalc/poly.hpp"

#include <algorithm>
#include <sstream>

#include "covercalc/int_matrix.hpp"

namespace covercalc {

IntPoly::IntPoly(std::initializer_list<long long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long long v : ascending) coeffs_.emplace_back(v);
    trim();
}

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

IntPoly IntPoly::monomial(std::size_t degree, const BigInt& c) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, BigInt(0));
        p.coeffs_[degree] = c;
    }
    return p;
}

IntPoly IntPoly::all_ones(std::size_t n) {
    IntPoly p;
    p.coeffs_.assign(n, BigInt(1));
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> out(coeffs_);
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const BigInt& c) const {
    std::vector<BigInt> out(coeffs_);
    for (auto& x : out) x *= c;
    return IntPoly(std::move(out));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return IntPoly();
    std::vector<BigInt> rem(coeffs_);
    const auto& d = divisor.coeffs_;
    if (rem.size() < d.size()) throw std::domain_error("polynomial division leaves a remainder");
    std::vector<BigInt> quot(rem.size() - d.size() + 1, BigInt(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt& lead = rem[k + d.size() - 1];
        if (lead % d.back() != 0) throw std::domain_error("polynomial division leaves a remainder");
        BigInt q = lead / d.back();
        quot[k] = q;
        if (q != 0)
            for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("polynomial division leaves a remainder");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::positive_leading() const {
    if (is_zero() || coeffs_.back() > 0) return *this;
    return -*this;
}

bool IntPoly::is_palindromic() const {
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        BigInt c = coeffs_[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        BigInt a = big_abs(c);
        if (i == 0 || a != 1) os << a.str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

void LaurentPoly::normalize() {
    if (poly_.is_zero()) {
        low_ = 0;
        return;
    }
    std::size_t shift = 0;
    const auto& c = poly_.coeffs();
    while (shift < c.size() && c[shift] == 0) ++shift;
    if (shift > 0) {
        std::vector<BigInt> out(c.begin() + static_cast<long>(shift), c.end());
        poly_ = IntPoly(std::move(out));
        low_ += static_cast<long>(shift);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long lo = std::min(low_, o.low_);
    IntPoly a = IntPoly::monomial(static_cast<std::size_t>(low_ - lo)) * poly_;
    IntPoly b = IntPoly::monomial(static_cast<std::size_t>(o.low_ - lo)) * o.poly_;
    return LaurentPoly(a + b, lo);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(-poly_, low_); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    return LaurentPoly(poly_ * o.poly_, low_ + o.low_);
}

IntPoly det_poly_matrix(std::vector<std::vector<IntPoly>> a) {
    const std::size_t n = a.size();
    if (n == 0) return IntPoly{1};
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("det_poly_matrix: matrix must be square");
    int sign = 1;
    IntPoly prev = IntPoly{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return IntPoly();
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
            a[i][k] = IntPoly();
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    if (m == 0) {
        BigInt c = f.coeff(0), out(1);
        for (std::size_t i = 0; i < n; ++i) out *= c;
        return out;
    }
    if (n == 0) {
        BigInt c = g.coeff(0), out(1);
        for (std::size_t i = 0; i < m; ++i) out *= c;
        return out;
    }
    IntMatrix s(m + n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s.at(r, r + m - k) = f.coeff(k);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s.at(n + r, r + n - k) = g.coeff(k);
    return det_exact(s);
}

}  // namespace covercalc
