#include "covercalc/int_matrix.hpp"

#include <algorithm>

namespace covercalc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : dim_(rows.size()), entries_(rows.size() * rows.size(), BigInt(0)) {
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != dim_) throw std::invalid_argument("IntMatrix initializer must be square");
        std::size_t j = 0;
        for (long long v : r) entries_[i * dim_ + j++] = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_circulant() const {
    if (dim_ == 0) return true;
    for (std::size_t i = 0; i + 1 < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (at(i, j) != at(i + 1, (j + 1) % dim_)) return false;
    return true;
}

std::vector<BigInt> IntMatrix::first_row() const {
    std::vector<BigInt> r(dim_);
    for (std::size_t j = 0; j < dim_; ++j) r[j] = at(0, j);
    return r;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = -at(i, j);
    return m;
}

IntMatrix IntMatrix::leading_minor_matrix(std::size_t k) const {
    if (k > dim_) throw std::out_of_range("leading minor size exceeds dim");
    IntMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m.at(i, j) = at(i, j);
    return m;
}

bool CirculantFirstRow::is_symmetric() const {
    const std::size_t d = row.size();
    for (std::size_t j = 1; j < d; ++j)
        if (row[j] != row[d - j]) return false;
    return true;
}

IntMatrix circulant_from_first_row(const CirculantFirstRow& row) {
    const std::size_t d = row.size();
    if (d == 0) throw std::invalid_argument("circulant matrix needs at least one entry");
    IntMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = row.row[(j + d - i) % d];
    return m;
}

BigInt det_exact(const IntMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination with row pivoting.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

std::vector<BigInt> leading_principal_minors(const IntMatrix& m) {
    std::vector<BigInt> out;
    out.reserve(m.dim());
    for (std::size_t k = 1; k <= m.dim(); ++k)
        out.push_back(det_exact(m.leading_minor_matrix(k)));
    return out;
}

bool is_positive_definite(const IntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("positive definiteness requires a symmetric matrix");
    for (const BigInt& minor : leading_principal_minors(m))
        if (minor <= 0) return false;
    return true;
}

IntMatrix blow_down(const IntMatrix& m, std::size_t k) {
    if (!m.is_symmetric()) throw std::invalid_argument("blow_down requires a symmetric matrix");
    if (k >= m.dim()) throw std::out_of_range("blow_down index out of range");
    const BigInt& piv = m.at(k, k);
    if (piv != 1 && piv != -1) throw std::invalid_argument("blow_down requires |diagonal entry| = 1");
    const std::size_t n = m.dim();
    IntMatrix out(n - 1);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            // 1/piv == piv for piv = +-1
            out.at(oi, oj) = m.at(i, j) - m.at(i, k) * m.at(j, k) * piv;
            ++oj;
        }
        ++oi;
    }
    return out;
}

bool circulant_block_check(const IntMatrix& m, std::size_t d, std::size_t u) {
    if (d == 0 || u == 0 || m.dim() != d * u)
        throw std::invalid_argument("circulant_block_check: dim must equal u*d");
    for (std::size_t r = 0; r < u; ++r) {
        for (std::size_t s = 0; s < u; ++s) {
            // block shift rule: B[k][j] == B[k-1][j-1] (mod d)
            for (std::size_t k = 1; k < d; ++k)
                for (std::size_t j = 0; j < d; ++j)
                    if (m.at(r * d + k, s * d + j) != m.at(r * d + k - 1, s * d + (j + d - 1) % d))
                        return false;
            if (r == s) {
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t j = 0; j < d; ++j)
                        if (m.at(r * d + k, s * d + j) != m.at(r * d + j, s * d + k)) return false;
            }
        }
    }
    return true;
}

}  // namespace covercalc
