#pragma once

#include <functional>
#include <string>
#include <vector>

#include "covercalc/int_matrix.hpp"
#include "covercalc/poly.hpp"

namespace covercalc::braid {

/// Artin braid word: letter +i / -i is the positive / negative crossing of
/// strands at positions i, i+1 (1-based, i <= strands-1). The empty word is
/// the identity braid.
struct BraidWord {
    std::size_t strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(std::size_t n, std::vector<int> w);

    static BraidWord parse(const std::string& csv, std::size_t strands);
};

/// Concatenation of d copies.
BraidWord power(const BraidWord& w, std::size_t d);

/// Endpoint permutation, top-to-bottom: perm[p] = bottom position of the
/// strand entering at top position p (0-based).
std::vector<std::size_t> braid_permutation(const BraidWord& w);

struct ClosureComponents {
    std::size_t count = 0;
    /// 1-based component id per top position; component 1 contains position 1,
    /// ids ordered by least member position.
    std::vector<int> labels;
};

ClosureComponents closure_components(const BraidWord& w);

/// Visit every crossing in order: (letter index, top-position ids of the two
/// strands involved (0-based, left then right), crossing sign).
void trace_crossings(const BraidWord& w,
                     const std::function<void(std::size_t, std::size_t, std::size_t, int)>& visit);

enum class DiagonalRule { RowSum, UserSupplied };

struct LinkingMatrixResult {
    IntMatrix matrix;
    ClosureComponents components;
    /// inter-component signed crossing counts before halving
    IntMatrix crossing_tallies;
    DiagonalRule diagonal_rule = DiagonalRule::RowSum;
    BigInt base_framing = 1;
};

/// Linking matrix of the closure. Off-diagonal entries are half the signed
/// inter-component crossing counts; each diagonal entry is chosen so its row
/// sums to the base framing (the u = 1 surgery rule). Throws when an
/// inter-component tally is odd.
LinkingMatrixResult linking_matrix_of_closure(const BraidWord& w, const BigInt& base_framing);

/// Variant with one framing per component; row i sums to framings[i].
LinkingMatrixResult linking_matrix_of_closure(const BraidWord& w,
                                              const std::vector<BigInt>& framings);

/// Alexander polynomial of a one-component closure via the reduced Burau
/// representation: det(rho(w) - I) / (1 + t + ... + t^{n-1}), normalized to
/// lowest degree 0 and positive leading coefficient. Rejects multi-component
/// closures; a nonzero remainder in the exact division is a hard error.
IntPoly alexander_via_burau(const BraidWord& w);

struct UnknotCheck {
    bool pass = false;
    std::string reason;  // empty on pass
    IntPoly alexander;
};

/// Necessary (not sufficient) unknottedness test: single component,
/// Alexander polynomial 1, determinant 1.
UnknotCheck unknot_necessary_check(const BraidWord& w);

}  // namespace covercalc::braid
