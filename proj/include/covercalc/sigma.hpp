#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covercalc/floer.hpp"
#include "covercalc/tangle.hpp"

namespace covercalc::sigma {

/// Parameter vector (c_1, ..., c_{2m-1}) of odd integers.
struct SigmaParams {
    std::size_t m = 1;
    std::vector<long long> c;

    SigmaParams(std::size_t m_, std::vector<long long> c_);
};

/// The 2m-strand twist tangle: box 1-c_m between strands (m, m+1) ahead of
/// the staircase c_1, ..., c_{2m-1} on strand pairs (k, k+1). Its
/// connectivity sends top end 1 to bottom end 2m and j to j-1.
tangle::TwistTangle build_sigma(const SigmaParams& p);

/// First row (a_11, ..., a_1m) of the linking matrix of the closure of
/// sigma^m, from the equivariant crossing count in closed form: the box with
/// parameter c_k meets component pairs at cyclic distance +-k (mod m), the
/// auxiliary box at distance +-1, and a_11 completes the row sum to 1.
std::vector<BigInt> closed_form_first_row(const SigmaParams& p);

/// Full linking matrix of the closure of sigma^m computed by the diagram
/// engine (the independent crossing-sum oracle), base framing +1.
braid::LinkingMatrixResult brute_force_linking(const SigmaParams& p);

/// Certificate that component 1 of the closure of sigma^m is the torus knot
/// T(2, c_m): the only region instance whose two arcs are distinct strands
/// of component 1 is a c_m box; every other instance touching component 1
/// involves another component (so deleting the rest leaves a (2, c_m) braid).
struct TorusCertificate {
    bool valid = false;
    long long torus_parameter = 0;  // q of T(2, q)
    long long genus = 0;            // (|q| - 1) / 2
    std::size_t self_instances = 0;
    std::string self_region;
    std::string failure;
    floer::KnotClass knot_class() const;
};

TorusCertificate identify_L1(const SigmaParams& p);

struct AdaptedReport {
    braid::UnknotCheck unknot_check;
    bool linking_match = false;
    IntMatrix computed_linking;
    floer::AdaptedVerdict nu_condition;
    bool verdict = false;
};

/// Adaptedness of sigma(p) to the SICUP matrix A: unknot check of the
/// closure, equality of the diagram linking matrix with A, and the nu-sharp
/// inequality for L1 = T(2, c_m).
AdaptedReport check_adapted(const SigmaParams& p, const IntMatrix& A);

}  // namespace covercalc::sigma
