#include "covercalc/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace covercalc::matrices {

SicupReport verify_sicup(const IntMatrix& m) {
    SicupReport rep;
    rep.symmetric = m.is_symmetric();
    rep.circulant = m.is_circulant();
    rep.determinant = det_exact(m);
    rep.unimodular = (rep.determinant == 1);
    rep.positive_definite = rep.symmetric && is_positive_definite(m);
    if (rep.circulant) {
        BigInt s = 0;
        for (const auto& v : m.first_row()) s += v;
        rep.lambda1 = s;
    }
    rep.verdict = rep.symmetric && rep.integral && rep.circulant && rep.unimodular &&
                  rep.positive_definite;
    return rep;
}

SpectralDecomposition circulant_spectrum(const CirculantFirstRow& row) {
    const std::size_t d = row.size();
    if (d % 2 == 0) throw std::invalid_argument("circulant_spectrum requires odd size");
    if (!row.is_symmetric()) throw std::invalid_argument("circulant_spectrum requires a symmetric first row");
    const std::size_t r = d / 2;
    SpectralDecomposition out;
    BigInt lam = row.row[0];
    for (std::size_t k = 1; k <= r; ++k) lam += 2 * row.row[k];
    out.lambda1_exact = lam;
    out.eigenvalues.emplace_back(static_cast<double>(lam), 1);
    for (std::size_t j = 1; j <= r; ++j) {
        double v = static_cast<double>(row.row[0]);
        for (std::size_t k = 1; k <= r; ++k) {
            v += 2.0 * static_cast<double>(row.row[k]) *
                 std::cos(2.0 * std::numbers::pi * static_cast<double>(k * j) / static_cast<double>(d));
        }
        out.eigenvalues.emplace_back(v, 2);
    }
    return out;
}

namespace {

void emit_candidate(std::vector<BigInt>& half, std::size_t d, EnumerationResult& out) {
    // half = (c1, c2, ..., c_{floor(d/2)+1}); complete by symmetry
    CirculantFirstRow row;
    row.row.resize(d);
    for (std::size_t j = 0; j < half.size(); ++j) row.row[j] = half[j];
    for (std::size_t j = half.size(); j < d; ++j) row.row[j] = half[d - j];
    IntMatrix m = circulant_from_first_row(row);
    SicupReport rep = verify_sicup(m);
    if (rep.verdict) out.matrices.push_back(std::move(m));
}

}  // namespace

EnumerationResult enumerate_sicup(std::size_t d, long long c1_max) {
    if (d == 0) throw std::invalid_argument("enumerate_sicup requires d >= 1");
    if (c1_max < 1) throw std::invalid_argument("enumerate_sicup requires c1_max >= 1");
    EnumerationResult out;
    out.c1_max = c1_max;
    out.used_lambda1_constraint = (d % 2 == 1);
    if (d == 1) {
        out.matrices.push_back(IntMatrix::identity(1));
        return out;
    }
    const std::size_t nfree = d / 2;  // off-diagonal slots c2..c_{nfree+1}
    const bool odd = (d % 2 == 1);
    for (long long c1 = 1; c1 <= c1_max; ++c1) {
        std::vector<BigInt> half(nfree + 1);
        half[0] = c1;
        // Positive definiteness forces |c_j| <= c1.
        // For odd d the row-sum constraint lambda1 = 1 fixes the last slot.
        const std::size_t loops = odd ? nfree - 1 : nfree;
        auto fill = [&](auto&& self, std::size_t pos, long long partial) -> void {
            if (pos == loops) {
                if (odd) {
                    long long num = 1 - c1 - 2 * partial;
                    if (num % 2 != 0) return;
                    long long last = num / 2;
                    if (last < -c1 || last > c1) return;
                    half[nfree] = last;
                }
                emit_candidate(half, d, out);
                return;
            }
            for (long long v = -c1; v <= c1; ++v) {
                half[pos + 1] = v;
                self(self, pos + 1, partial + v);
            }
        };
        fill(fill, 0, 0);
    }
    std::sort(out.matrices.begin(), out.matrices.end(),
              [](const IntMatrix& a, const IntMatrix& b) { return a.first_row() < b.first_row(); });
    out.matrices.erase(std::unique(out.matrices.begin(), out.matrices.end()), out.matrices.end());
    return out;
}

}  // namespace covercalc::matrices
