#pragma once

#include <optional>
#include <vector>

#include "covercalc/int_matrix.hpp"

namespace covercalc::matrices {

/// Property report for the Symmetric/Integral/Circulant/Unimodular/Positive
/// definite test. `integral` is true by construction of IntMatrix.
struct SicupReport {
    bool symmetric = false;
    bool integral = true;
    bool circulant = false;
    bool unimodular = false;
    bool positive_definite = false;
    BigInt determinant = 0;
    /// Row sum; equals the all-ones eigenvalue when the matrix is circulant.
    BigInt lambda1 = 0;
    bool verdict = false;
};

SicupReport verify_sicup(const IntMatrix& m);

struct SpectralDecomposition {
    /// (approximate value, multiplicity); entry 0 is the simple eigenvalue.
    std::vector<std::pair<double, int>> eigenvalues;
    BigInt lambda1_exact = 0;
};

/// Spectrum of a symmetric circulant matrix of odd size d = 2r+1 via the
/// cosine closed form. lambda1 is exact; the r doubled eigenvalues are
/// returned as floating approximations.
SpectralDecomposition circulant_spectrum(const CirculantFirstRow& row);

struct EnumerationResult {
    std::vector<IntMatrix> matrices;
    /// |c_j| <= c1 <= c1_max; recorded so "complete up to bound" is explicit.
    long long c1_max = 0;
    bool used_lambda1_constraint = false;
};

/// All SICUP matrices of size d with diagonal entry at most c1_max, in
/// lexicographic first-row order. Odd sizes prune with the row-sum
/// constraint lambda1 = 1; even sizes search the full |c_j| <= c1 box.
EnumerationResult enumerate_sicup(std::size_t d, long long c1_max);

}  // namespace covercalc::matrices
