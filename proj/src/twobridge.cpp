#include "covercalc/twobridge.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace covercalc::twobridge {

using Real = boost::multiprecision::cpp_bin_float_100;

TwoBridgeFraction::TwoBridgeFraction(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p <= 0 || p % 2 == 0) throw std::invalid_argument("two-bridge fraction needs odd positive p");
    if (q == 0 || big_abs(q) >= p) throw std::invalid_argument("two-bridge fraction needs 0 < |q| < p");
    if (big_gcd(p, big_abs(q)) != 1) throw std::invalid_argument("two-bridge fraction needs gcd(p,q) = 1");
}

TwoBridgeFraction TwoBridgeFraction::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("fraction syntax is p/q");
    return TwoBridgeFraction(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

namespace {

// nearest even integer to num/den (no ties arise for the fractions met here)
BigInt nearest_even(const BigInt& num, const BigInt& den) {
    // solve for e minimizing |num/den - 2e|
    BigInt n2 = num, d2 = 2 * den;
    if (d2 < 0) {
        n2 = -n2;
        d2 = -d2;
    }
    // floor division
    BigInt fl;
    if (n2 >= 0)
        fl = n2 / d2;
    else
        fl = -((-n2 + d2 - 1) / d2);
    BigInt best = 2 * fl, alt = 2 * (fl + 1);
    // compare |num - best*den| vs |num - alt*den|
    if (big_abs(num - alt * den) < big_abs(num - best * den)) return alt;
    return best;
}

}  // namespace

EvenCF even_cf(const TwoBridgeFraction& f) {
    EvenCF out;
    BigInt q = f.q;
    if (q % 2 != 0) q = q > 0 ? BigInt(q - f.p) : BigInt(q + f.p);
    out.normalized_q = q;
    out.mirror_normalized = (q > 0) != (f.q > 0);
    BigInt num = f.p, den = q;
    for (;;) {
        BigInt a = nearest_even(num, den);
        out.terms.push_back(a);
        BigInt rn = a * den - num;  // 1/x' = a - x
        if (rn == 0) break;
        num = den;
        den = rn;
    }
    return out;
}

std::pair<BigInt, BigInt> eval_even_cf(const std::vector<BigInt>& terms) {
    if (terms.empty()) throw std::invalid_argument("empty continued fraction");
    BigInt num = terms.back(), den = 1;
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        if (num == 0) throw std::invalid_argument("continued fraction hits a zero tail");
        // x = a - 1/(num/den) = (a*num - den)/num
        BigInt nn = terms[i] * num - den;
        den = num;
        num = nn;
    }
    BigInt g = big_gcd(big_abs(num), big_abs(den));
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

IntMatrix seifert_from_even_cf(const EvenCF& cf) {
    const std::size_t n = cf.terms.size();
    if (n % 2 != 0) throw std::invalid_argument("even continued fraction must have even length");
    IntMatrix v(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (cf.terms[i] == 0 || cf.terms[i] % 2 != 0)
            throw std::invalid_argument("continued fraction terms must be even and nonzero");
        v.at(i, i) = cf.terms[i] / 2;
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (i % 2 == 1)
            v.at(i - 1, i) = 1;
        else
            v.at(i, i - 1) = 1;
    }
    return v;
}

IntPoly alexander_poly(const IntMatrix& seifert) {
    const std::size_t n = seifert.dim();
    if (n == 0) return IntPoly{1};
    std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // V - t V^T
            std::vector<BigInt> coeffs{seifert.at(i, j), -seifert.at(j, i)};
            a[i][j] = IntPoly(std::move(coeffs));
        }
    IntPoly det = det_poly_matrix(std::move(a));
    IntPoly delta = LaurentPoly(det, 0).unit_normalized().positive_leading();
    BigInt at1 = delta.eval(1);
    if (at1 != 1 && at1 != -1)
        throw std::domain_error("Seifert matrix does not present a knot: Delta(1) != +-1");
    if (!delta.is_palindromic())
        throw std::domain_error("Alexander polynomial is not palindromic");
    return delta;
}

BigInt homology_order(const IntPoly& delta, std::size_t d) {
    if (d < 2) throw std::invalid_argument("homology_order requires d >= 2");
    BigInt at1 = delta.eval(1);
    if (at1 != 1 && at1 != -1) throw std::invalid_argument("homology_order requires Delta(1) = +-1");
    return big_abs(resultant(IntPoly::all_ones(d), delta));
}

namespace {

std::vector<Real> jacobi_eigenvalues(std::vector<std::vector<Real>> a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    auto off_norm = [&]() {
        Real s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
        return s;
    };
    Real scale = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = (std::max)(scale, Real(abs(a[i][j])));
    if (scale == 0) return std::vector<Real>(n, Real(0));
    const Real tol = scale * scale * Real("1e-140");
    for (int sweep = 0; sweep < 200 && off_norm() > tol; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (abs(a[p][q]) == 0) continue;
                Real theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                Real t = (theta >= 0 ? Real(1) : Real(-1)) / (abs(theta) + sqrt(theta * theta + 1));
                Real c = 1 / sqrt(t * t + 1);
                Real s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    Real akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Real apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<Real> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    return ev;
}

}  // namespace

long long tl_signature(const IntMatrix& seifert, std::size_t d, std::size_t j) {
    if (d < 2 || j == 0 || j >= d) throw std::invalid_argument("tl_signature needs 1 <= j < d");
    const std::size_t n = seifert.dim();
    if (n == 0) return 0;
    const Real pi = acos(Real(-1));
    const Real theta = 2 * pi * Real(j) / Real(d);
    const Real one_minus_cos = 1 - cos(theta);
    const Real sin_t = sin(theta);
    // H = (1-w)V + (1-conj(w))V^T is Hermitian; embed as the real symmetric
    // doubling [[Re H, -Im H], [Im H, Re H]] whose spectrum doubles H's.
    std::vector<std::vector<Real>> m(2 * n, std::vector<Real>(2 * n, Real(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Real vij = Real(seifert.at(r, c).str());
            Real vji = Real(seifert.at(c, r).str());
            Real re = one_minus_cos * (vij + vji);
            Real im = sin_t * (vji - vij);
            m[r][c] = re;
            m[n + r][n + c] = re;
            m[r][n + c] = -im;
            m[n + r][c] = im;
        }
    }
    auto ev = jacobi_eigenvalues(std::move(m));
    Real mx = 0;
    for (const auto& v : ev) mx = (std::max)(mx, Real(abs(v)));
    if (mx == 0) throw std::domain_error("tl_signature: degenerate form");
    const Real guard = mx * Real("1e-12");
    long long pos = 0, neg = 0;
    for (const auto& v : ev) {
        if (abs(v) < guard) throw std::domain_error("tl_signature: eigenvalue below relative guard");
        if (v > 0)
            ++pos;
        else
            ++neg;
    }
    return (pos - neg) / 2;
}

BranchedCoverReport branched_cover_report(const TwoBridgeFraction& f, std::size_t d_max) {
    if (d_max < 2) throw std::invalid_argument("branched_cover_report requires d_max >= 2");
    BranchedCoverReport rep{f, even_cf(f), IntPoly{}, {}};
    IntMatrix v = seifert_from_even_cf(rep.cf);
    rep.alexander = alexander_poly(v);
    for (std::size_t d = 2; d <= d_max; ++d) {
        CoverLine line;
        line.d = d;
        line.homology_order = homology_order(rep.alexander, d);
        line.homology_sphere = (line.homology_order == 1);
        if (line.homology_sphere) {
            bool any = false;
            for (std::size_t j = 1; j < d; ++j) {
                long long s = tl_signature(v, d, j);
                line.signatures.push_back(s);
                any = any || (s != 0);
            }
            line.verdict = any ? "signature criterion applies" : "thin";
        }
        rep.lines.push_back(std::move(line));
    }
    return rep;
}

}  // namespace covercalc::twobridge
