#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "covercalc/bigint.hpp"

namespace covercalc {

/// Dense square matrix over arbitrary-precision integers.
///
/// Carrier for linking matrices and SICUP candidates. All determinant
/// and definiteness queries are exact; no floating point is involved.
class IntMatrix {
public:
    IntMatrix() : dim_(0) {}
    explicit IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, BigInt(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    BigInt& at(std::size_t i, std::size_t j) {
        check(i, j);
        return entries_[i * dim_ + j];
    }
    const BigInt& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return entries_[i * dim_ + j];
    }

    bool operator==(const IntMatrix& other) const = default;

    bool is_symmetric() const;

    /// Shift rule a_{i,j} = a_{i+1,j+1} (indices mod dim).
    bool is_circulant() const;

    std::vector<BigInt> first_row() const;

    IntMatrix negated() const;

    /// Leading principal k x k submatrix, k <= dim.
    IntMatrix leading_minor_matrix(std::size_t k) const;

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= dim_ || j >= dim_) throw std::out_of_range("IntMatrix index out of range");
    }
    std::size_t dim_;
    std::vector<BigInt> entries_;
};

/// First row of a circulant matrix. For the symmetric case the row must
/// satisfy row[j] == row[d-j] for j = 1..d-1 (0-based).
struct CirculantFirstRow {
    std::vector<BigInt> row;

    std::size_t size() const { return row.size(); }
    bool is_symmetric() const;
};

IntMatrix circulant_from_first_row(const CirculantFirstRow& row);

/// Exact determinant via fraction-free (Bareiss) elimination.
/// det of the empty 0x0 matrix is 1.
BigInt det_exact(const IntMatrix& m);

/// Sylvester's criterion on exact leading principal minors.
/// Rejects non-symmetric input.
bool is_positive_definite(const IntMatrix& m);

/// All leading principal minors, sizes 1..dim.
std::vector<BigInt> leading_principal_minors(const IntMatrix& m);

/// Kirby blow-down of the k-th (0-based) component: requires |m_kk| = 1,
/// returns the (d-1)x(d-1) matrix with entries a_ij - a_ik*a_jk/a_kk.
IntMatrix blow_down(const IntMatrix& m, std::size_t k);

/// Block circulant structure test: dim = u*d, every d x d block B_rs obeys
/// the shift rule and diagonal blocks are symmetric circulant.
bool circulant_block_check(const IntMatrix& m, std::size_t d, std::size_t u);

}  // namespace covercalc
