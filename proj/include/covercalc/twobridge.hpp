#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covercalc/int_matrix.hpp"
#include "covercalc/poly.hpp"

namespace covercalc::twobridge {

/// Two-bridge knot fraction p/q: p odd positive, 0 < |q| < p, gcd(p,q) = 1.
struct TwoBridgeFraction {
    BigInt p;
    BigInt q;

    TwoBridgeFraction(BigInt p_, BigInt q_);
    static TwoBridgeFraction parse(const std::string& text);  // "p/q"
};

/// All-even continued fraction under the negative-CF convention
///   p/q = a_1 - 1/(a_2 - 1/(... - 1/a_k)),
/// computed greedily on the even representative of q (q odd is replaced by
/// q - sign(q)*p, which names the same knot).
struct EvenCF {
    std::vector<BigInt> terms;
    BigInt normalized_q;      // the even representative actually expanded
    bool mirror_normalized;   // true when normalized_q has opposite sign to q
};

EvenCF even_cf(const TwoBridgeFraction& f);

/// Fraction the term list evaluates to under the declared convention.
/// Throws on a zero tail (not a valid continued fraction).
std::pair<BigInt, BigInt> eval_even_cf(const std::vector<BigInt>& terms);

/// Banded Seifert matrix of the plumbing described by an even continued
/// fraction [2b_1, ..., 2b_2g]: diagonal b_i, unit couplings alternating
/// between super- and subdiagonal. Rejects odd-length input.
IntMatrix seifert_from_even_cf(const EvenCF& cf);

/// det(V - t V^T), normalized to lowest degree 0 and positive leading
/// coefficient. Enforces Delta(1) = +-1 and palindromicity.
IntPoly alexander_poly(const IntMatrix& seifert);

/// |H_1| of the d-fold cyclic branched cover: |Res((t^d-1)/(t-1), Delta)|,
/// exact. Zero encodes infinite homology.
BigInt homology_order(const IntPoly& delta, std::size_t d);

/// Tristram-Levine signature of (1-w)V + (1-conj(w))V^T at w = exp(2*pi*i*j/d),
/// evaluated in 100-digit arithmetic with a relative eigenvalue guard of
/// 1e-12. Throws on a degenerate form.
long long tl_signature(const IntMatrix& seifert, std::size_t d, std::size_t j);

struct CoverLine {
    std::size_t d = 0;
    BigInt homology_order;
    bool homology_sphere = false;
    std::vector<long long> signatures;  // j = 1..d-1, only when homology_sphere
    std::string verdict;                // "signature criterion applies" | "thin" | ""
};

struct BranchedCoverReport {
    TwoBridgeFraction fraction;
    EvenCF cf;
    IntPoly alexander;
    std::vector<CoverLine> lines;
};

/// Homology orders for every 2 <= d <= d_max; where the cover is a homology
/// sphere, the Tristram-Levine signature vector and the thin/criterion verdict.
BranchedCoverReport branched_cover_report(const TwoBridgeFraction& f, std::size_t d_max);

}  // namespace covercalc::twobridge
