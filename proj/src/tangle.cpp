#include "covercalc/tangle.hpp"

namespace covercalc::tangle {

CompiledTangle compile_tangle(const TwistTangle& t) {
    if (t.strands < 2) throw std::invalid_argument("tangle needs at least two strands");
    CompiledTangle out;
    std::vector<int> letters;
    for (const auto& r : t.regions) {
        if (r.position < 1 || r.position > t.strands - 1)
            throw std::invalid_argument("twist region position out of range");
        const int col = static_cast<int>(r.position);
        const int sign = r.twist >= 0 ? 1 : -1;
        for (long long k = 0; k < std::llabs(r.twist); ++k) {
            letters.push_back(sign * col);
            out.region_of.push_back(r.label);
        }
    }
    out.word = braid::BraidWord(t.strands, std::move(letters));
    if (!t.routing.empty()) {
        if (t.routing.size() != t.strands) throw std::invalid_argument("routing size mismatch");
        auto perm = braid_permutation(out.word);
        if (perm != t.routing) throw std::invalid_argument("compiled connectivity does not match routing");
    }
    return out;
}

}  // namespace covercalc::tangle
