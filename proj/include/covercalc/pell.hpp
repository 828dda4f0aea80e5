#pragma once

#include <optional>
#include <vector>

#include "covercalc/int_matrix.hpp"

namespace covercalc::pell {

/// Solution of a^2 - 5 b^2 = 4.
struct PellSolution {
    BigInt a;
    BigInt b;
    bool operator==(const PellSolution&) const = default;
};

/// Parameters (x, l, m) of the symmetric circulant 5x5 matrix with first
/// row (x, l, m, m, l).
struct SicupParams5 {
    BigInt x;
    BigInt l;
    BigInt m;
    bool operator==(const SicupParams5&) const = default;

    IntMatrix matrix() const;
};

struct SolveOptions {
    std::optional<int> require_a_mod5;  // typically 2
    bool require_a_positive = false;
};

/// First `count` solutions of a^2 - 5 b^2 = 4 matching the filters, ordered
/// by |a|, then b, then a. Positive-a solutions are generated by the
/// half-automorph (a,b) -> ((3a+5b)/2, (a+3b)/2) from the seed (2,0),
/// together with the sign companions (a,-b) and, unless a > 0 is required,
/// (-a, +-b).
std::vector<PellSolution> solve_pell_5_4(std::size_t count, const SolveOptions& opts = {});

/// The map A(x,l,m) -> (2x-l-m, l-m). Rejects parameters whose matrix is
/// not SICUP.
PellSolution phi(const SicupParams5& p);

/// Inverse map (a,b) -> ((2a+1)/5, (2-a+5b)/10, (2-a-5b)/10).
/// Requires a ≡ 2 (mod 5) and a > 0; negative a would land on the
/// negative-definite branch and is rejected with a distinct error.
SicupParams5 phi_inverse(const PellSolution& s);

struct NegativeDefiniteBranch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// First `count` elements of M(5) via phi_inverse over admissible solutions
/// (a ≡ 2 mod 5, a > 0), ordered by a ascending then b descending.
std::vector<IntMatrix> enumerate_m5(std::size_t count);

}  // namespace covercalc::pell
