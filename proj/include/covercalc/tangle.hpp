#pragma once

#include <string>
#include <vector>

#include "covercalc/braid.hpp"

namespace covercalc::tangle {

enum class Orientation { Horizontal, Vertical };

/// One twist box: `twist` signed crossings between the strands at positions
/// (position, position+1) at the moment the box is reached.
struct TwistRegion {
    std::size_t position = 1;  // 1-based, <= strands-1
    long long twist = 0;
    Orientation orientation = Orientation::Horizontal;
    std::string label;
};

/// Ordered stack of twist boxes on a set of parallel strands, plus the
/// endpoint permutation the diagram is expected to realize (top position p
/// connects to bottom position routing[p], 0-based).
struct TwistTangle {
    std::size_t strands = 2;
    std::vector<TwistRegion> regions;
    std::vector<std::size_t> routing;
};

/// Braid-word compilation of a tangle; crossing i belongs to the region
/// named region_of[i].
struct CompiledTangle {
    braid::BraidWord word;
    std::vector<std::string> region_of;
};

/// Compile the boxes in order to a crossing sequence, tagging each crossing
/// with its source region. Throws if the compiled endpoint permutation does
/// not match the declared routing.
CompiledTangle compile_tangle(const TwistTangle& t);

}  // namespace covercalc::tangle
