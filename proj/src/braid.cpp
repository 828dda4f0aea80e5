#include "covercalc/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace covercalc::braid {

BraidWord::BraidWord(std::size_t n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (n < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int let : letters) {
        if (let == 0 || static_cast<std::size_t>(std::abs(let)) > n - 1)
            throw std::invalid_argument("braid letter out of range");
    }
}

BraidWord BraidWord::parse(const std::string& csv, std::size_t strands) {
    std::vector<int> letters;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                  tok.end());
        if (tok.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad braid letter: " + tok);
        letters.push_back(v);
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord power(const BraidWord& w, std::size_t d) {
    if (d < 1) throw std::invalid_argument("power requires d >= 1");
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.letters.size() * d);
    for (std::size_t i = 0; i < d; ++i)
        out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    return out;
}

std::vector<std::size_t> braid_permutation(const BraidWord& w) {
    const std::size_t n = w.strands;
    std::vector<std::size_t> pos(n);  // pos[p] = id of strand currently at position p
    std::iota(pos.begin(), pos.end(), 0);
    for (int let : w.letters) {
        std::size_t k = static_cast<std::size_t>(std::abs(let)) - 1;
        std::swap(pos[k], pos[k + 1]);
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t p = 0; p < n; ++p) perm[pos[p]] = p;
    return perm;
}

ClosureComponents closure_components(const BraidWord& w) {
    const auto perm = braid_permutation(w);
    const std::size_t n = w.strands;
    ClosureComponents out;
    out.labels.assign(n, 0);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (out.labels[s] != 0) continue;
        ++next;
        std::size_t x = s;
        while (out.labels[x] == 0) {
            out.labels[x] = next;
            x = perm[x];
        }
    }
    out.count = static_cast<std::size_t>(next);
    return out;
}

void trace_crossings(const BraidWord& w,
                     const std::function<void(std::size_t, std::size_t, std::size_t, int)>& visit) {
    const std::size_t n = w.strands;
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    for (std::size_t idx = 0; idx < w.letters.size(); ++idx) {
        int let = w.letters[idx];
        std::size_t k = static_cast<std::size_t>(std::abs(let)) - 1;
        visit(idx, pos[k], pos[k + 1], let > 0 ? 1 : -1);
        std::swap(pos[k], pos[k + 1]);
    }
}

namespace {

LinkingMatrixResult linking_impl(const BraidWord& w, const std::vector<BigInt>& framings,
                                 const BigInt& base, DiagonalRule rule) {
    LinkingMatrixResult res;
    res.components = closure_components(w);
    res.diagonal_rule = rule;
    res.base_framing = base;
    const std::size_t c = res.components.count;
    res.crossing_tallies = IntMatrix(c);
    trace_crossings(w, [&](std::size_t, std::size_t a, std::size_t b, int sign) {
        int ca = res.components.labels[a] - 1;
        int cb = res.components.labels[b] - 1;
        if (ca != cb) {
            res.crossing_tallies.at(ca, cb) += sign;
            res.crossing_tallies.at(cb, ca) += sign;
        }
    });
    res.matrix = IntMatrix(c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            if (i == j) continue;
            const BigInt& tally = res.crossing_tallies.at(i, j);
            if (tally % 2 != 0)
                throw std::domain_error("odd inter-component crossing sum: inconsistent diagram");
            res.matrix.at(i, j) = tally / 2;
        }
    }
    for (std::size_t i = 0; i < c; ++i) {
        BigInt off = 0;
        for (std::size_t j = 0; j < c; ++j)
            if (j != i) off += res.matrix.at(i, j);
        res.matrix.at(i, i) = framings[i] - off;
    }
    return res;
}

}  // namespace

LinkingMatrixResult linking_matrix_of_closure(const BraidWord& w, const BigInt& base_framing) {
    auto comps = closure_components(w);
    std::vector<BigInt> framings(comps.count, base_framing);
    return linking_impl(w, framings, base_framing, DiagonalRule::RowSum);
}

LinkingMatrixResult linking_matrix_of_closure(const BraidWord& w,
                                              const std::vector<BigInt>& framings) {
    auto comps = closure_components(w);
    if (framings.size() != comps.count)
        throw std::invalid_argument("one framing per component required");
    return linking_impl(w, framings, framings.empty() ? BigInt(0) : framings[0],
                        DiagonalRule::UserSupplied);
}

// ---------------------------------------------------------------------------
// Burau

namespace {

using LMatrix = std::vector<std::vector<LaurentPoly>>;

// Reduced Burau generator matrices differ from the identity only in column
// i-1 (0-based): rows i-2, i-1, i carry (t, -t, 1), truncated at the matrix
// boundary; the inverse column carries (1, -t^{-1}, t^{-1}). Right
// multiplication is therefore a single column update on the accumulator.
void apply_generator(LMatrix& m, std::size_t i, bool inverse) {
    const std::size_t sz = m.size();
    const std::size_t c = i - 1;
    const LaurentPoly tpos = LaurentPoly::t_power(1);
    const LaurentPoly tneg = LaurentPoly::t_power(-1);
    for (std::size_t r = 0; r < sz; ++r) {
        LaurentPoly acc;
        if (!inverse) {
            if (c >= 1) acc = acc + tpos * m[r][c - 1];
            acc = acc - tpos * m[r][c];
            if (c + 1 < sz) acc = acc + m[r][c + 1];
        } else {
            if (c >= 1) acc = acc + m[r][c - 1];
            acc = acc - tneg * m[r][c];
            if (c + 1 < sz) acc = acc + tneg * m[r][c + 1];
        }
        m[r][c] = std::move(acc);  // only row r's old entries feed row r's new column

    }
}

LMatrix reduced_burau(const BraidWord& w) {
    const std::size_t sz = w.strands - 1;
    LMatrix m(sz, std::vector<LaurentPoly>(sz));
    for (std::size_t i = 0; i < sz; ++i) m[i][i] = LaurentPoly::constant(1);
    for (int let : w.letters) apply_generator(m, static_cast<std::size_t>(std::abs(let)), let < 0);
    return m;
}

// Determinant of a Laurent matrix up to a unit +-t^k: clear the global low
// exponent, then eliminate over Z[t].
IntPoly laurent_det_up_to_unit(const LMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPoly{1};
    long minlow = 0;
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) minlow = std::min(minlow, e.low());
    std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j].is_zero()) continue;
            a[i][j] = IntPoly::monomial(static_cast<std::size_t>(m[i][j].low() - minlow)) * m[i][j].poly();
        }
    return det_poly_matrix(std::move(a));
}

}  // namespace

IntPoly alexander_via_burau(const BraidWord& w) {
    auto comps = closure_components(w);
    if (comps.count != 1)
        throw std::invalid_argument("alexander_via_burau requires a one-component closure");
    if (w.strands == 1) return IntPoly{1};
    LMatrix m = reduced_burau(w);
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = m[i][i] - LaurentPoly::constant(1);
    IntPoly d = laurent_det_up_to_unit(m);
    IntPoly q;
    try {
        q = d.divide_exact(IntPoly::all_ones(w.strands));
    } catch (const std::domain_error&) {
        throw std::domain_error("Burau determinant is not divisible by 1 + t + ... + t^{n-1}");
    }
    return LaurentPoly(q, 0).unit_normalized().positive_leading();
}

UnknotCheck unknot_necessary_check(const BraidWord& w) {
    UnknotCheck res;
    auto comps = closure_components(w);
    if (comps.count != 1) {
        res.pass = false;
        res.reason = "closure has " + std::to_string(comps.count) + " components";
        return res;
    }
    res.alexander = alexander_via_burau(w);
    if (!(res.alexander == IntPoly{1})) {
        res.pass = false;
        res.reason = "Alexander polynomial is not 1";
        return res;
    }
    BigInt det = big_abs(res.alexander.eval(-1));
    if (det != 1) {
        res.pass = false;
        res.reason = "determinant differs from 1";
        return res;
    }
    res.pass = true;
    return res;
}

}  // namespace covercalc::braid
