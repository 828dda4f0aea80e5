#include "covercalc/pell.hpp"

#include <algorithm>
#include <tuple>

#include "covercalc/matrices.hpp"

namespace covercalc::pell {

IntMatrix SicupParams5::matrix() const {
    CirculantFirstRow row;
    row.row = {x, l, m, m, l};
    return circulant_from_first_row(row);
}

namespace {

bool admissible(const PellSolution& s, const SolveOptions& o) {
    if (o.require_a_positive && s.a <= 0) return false;
    if (o.require_a_mod5) {
        BigInt r = s.a % 5;
        if (r < 0) r += 5;
        if (r != *o.require_a_mod5) return false;
    }
    return true;
}

}  // namespace

std::vector<PellSolution> solve_pell_5_4(std::size_t count, const SolveOptions& opts) {
    if (count == 0) throw std::invalid_argument("solve_pell_5_4 requires count >= 1");
    std::vector<PellSolution> out;
    BigInt a = 2, b = 0;
    while (out.size() < count) {
        std::vector<PellSolution> batch;  // all solutions with this |a|
        if (b == 0) {
            batch.push_back({a, b});
            if (!opts.require_a_positive) batch.push_back({-a, b});
        } else {
            batch.push_back({a, -b});
            batch.push_back({a, b});
            if (!opts.require_a_positive) {
                batch.push_back({-a, -b});
                batch.push_back({-a, b});
            }
        }
        std::sort(batch.begin(), batch.end(), [](const PellSolution& x, const PellSolution& y) {
            return std::tie(x.b, x.a) < std::tie(y.b, y.a);
        });
        for (const auto& s : batch) {
            if (admissible(s, opts)) out.push_back(s);
            if (out.size() == count) break;
        }
        // half-automorph step: stays on the a^2-5b^2=4 conic, a strictly grows
        BigInt na = (3 * a + 5 * b) / 2;
        BigInt nb = (a + 3 * b) / 2;
        a = na;
        b = nb;
    }
    return out;
}

PellSolution phi(const SicupParams5& p) {
    auto rep = matrices::verify_sicup(p.matrix());
    if (!rep.verdict) throw std::invalid_argument("phi requires SICUP parameters");
    return {2 * p.x - p.l - p.m, p.l - p.m};
}

SicupParams5 phi_inverse(const PellSolution& s) {
    if (s.a * s.a - 5 * s.b * s.b != 4) throw std::invalid_argument("not a solution of a^2 - 5 b^2 = 4");
    BigInt r = s.a % 5;
    if (r < 0) r += 5;
    if (r != 2) throw std::invalid_argument("phi_inverse requires a ≡ 2 (mod 5)");
    if (s.a <= 0)
        throw NegativeDefiniteBranch("phi_inverse: a <= 0 corresponds to a negative-definite matrix");
    BigInt xn = 2 * s.a + 1;
    BigInt ln = 2 - s.a + 5 * s.b;
    BigInt mn = 2 - s.a - 5 * s.b;
    // divisibility is forced by a ≡ 2 (mod 5) and the parity of (a, b)
    if (xn % 5 != 0 || ln % 10 != 0 || mn % 10 != 0)
        throw std::logic_error("phi_inverse: integrality failed");
    SicupParams5 p{xn / 5, ln / 10, mn / 10};
    if (!matrices::verify_sicup(p.matrix()).verdict)
        throw std::logic_error("phi_inverse: image is not SICUP");
    return p;
}

std::vector<IntMatrix> enumerate_m5(std::size_t count) {
    if (count == 0) throw std::invalid_argument("enumerate_m5 requires count >= 1");
    SolveOptions opts;
    opts.require_a_mod5 = 2;
    opts.require_a_positive = true;
    auto sols = solve_pell_5_4(count, opts);
    // a ascending then b descending
    std::stable_sort(sols.begin(), sols.end(), [](const PellSolution& x, const PellSolution& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b > y.b;
    });
    std::vector<IntMatrix> out;
    out.reserve(sols.size());
    for (const auto& s : sols) out.push_back(phi_inverse(s).matrix());
    return out;
}

}  // namespace covercalc::pell
