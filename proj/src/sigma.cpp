#include "covercalc/sigma.hpp"

#include <algorithm>

#include "covercalc/matrices.hpp"

namespace covercalc::sigma {

SigmaParams::SigmaParams(std::size_t m_, std::vector<long long> c_) : m(m_), c(std::move(c_)) {
    if (m < 1) throw std::invalid_argument("sigma needs m >= 1");
    if (c.size() != 2 * m - 1) throw std::invalid_argument("sigma needs 2m-1 twist parameters");
    for (long long v : c)
        if (v % 2 == 0) throw std::invalid_argument("sigma twist parameters must be odd");
}

tangle::TwistTangle build_sigma(const SigmaParams& p) {
    tangle::TwistTangle t;
    t.strands = 2 * p.m;
    const long long cm = p.c[p.m - 1];
    t.regions.push_back({p.m, 1 - cm, tangle::Orientation::Vertical, "1-c" + std::to_string(p.m)});
    for (std::size_t k = 1; k <= 2 * p.m - 1; ++k) {
        auto orient = (k == p.m) ? tangle::Orientation::Vertical : tangle::Orientation::Horizontal;
        t.regions.push_back({k, p.c[k - 1], orient, "c" + std::to_string(k)});
    }
    // end 1 -> (2m)', end j -> (j-1)'
    t.routing.resize(t.strands);
    t.routing[0] = t.strands - 1;
    for (std::size_t j = 1; j < t.strands; ++j) t.routing[j] = j - 1;
    return t;
}

std::vector<BigInt> closed_form_first_row(const SigmaParams& p) {
    const std::size_t m = p.m;
    std::vector<BigInt> row(m, BigInt(0));
    if (m == 1) {
        row[0] = 1;
        return row;
    }
    auto mult = [&](std::size_t dist, std::size_t j) -> int {
        // box at component distance `dist` meets pair {1, j} in the copies
        // where dist = +-(j-1) mod m
        int mu = 0;
        if ((dist + m - (j - 1) % m) % m == 0) ++mu;
        if ((dist + (j - 1)) % m == 0) ++mu;
        return mu;
    };
    for (std::size_t j = 2; j <= m; ++j) {
        BigInt total = 0;
        for (std::size_t k = 1; k <= 2 * m - 1; ++k) {
            if (k == m) continue;  // the c_m box pairs strands of one component
            total += BigInt(p.c[k - 1]) * mult(k % m, j);
        }
        total += BigInt(1 - p.c[m - 1]) * mult(1, j);
        if (total % 2 != 0) throw std::logic_error("closed form produced an odd crossing sum");
        row[j - 1] = total / 2;
    }
    BigInt off = 0;
    for (std::size_t j = 1; j < m; ++j) off += row[j];
    row[0] = 1 - off;  // lambda1 = 1 row-sum completion
    return row;
}

braid::LinkingMatrixResult brute_force_linking(const SigmaParams& p) {
    auto compiled = tangle::compile_tangle(build_sigma(p));
    auto word = braid::power(compiled.word, p.m);
    return braid::linking_matrix_of_closure(word, BigInt(1));
}

floer::KnotClass TorusCertificate::knot_class() const {
    if (!valid) throw std::invalid_argument("invalid torus certificate");
    if (torus_parameter == 1 || torus_parameter == -1) return floer::KnotClass::unknot();
    return floer::KnotClass::torus2(torus_parameter);
}

TorusCertificate identify_L1(const SigmaParams& p) {
    TorusCertificate cert;
    auto compiled = tangle::compile_tangle(build_sigma(p));
    const std::size_t base_len = compiled.word.letters.size();
    auto word = braid::power(compiled.word, p.m);
    auto comps = braid::closure_components(word);

    // First crossing of each region instance determines its arc pair.
    struct Instance {
        std::string region;
        std::size_t copy;
        std::size_t strand_a, strand_b;
        long long signed_count = 0;
    };
    std::vector<Instance> instances;
    std::string current_key;
    braid::trace_crossings(word, [&](std::size_t idx, std::size_t a, std::size_t b, int sign) {
        std::size_t copy = idx / base_len;
        const std::string& region = compiled.region_of[idx % base_len];
        std::string key = std::to_string(copy) + "/" + region;
        if (key != current_key) {
            instances.push_back({region, copy, std::min(a, b), std::max(a, b), 0});
            current_key = key;
        }
        instances.back().signed_count += sign;
    });

    std::vector<const Instance*> self1;
    for (const auto& inst : instances) {
        if (comps.labels[inst.strand_a] == 1 && comps.labels[inst.strand_b] == 1)
            self1.push_back(&inst);
    }

    if (p.m == 1) {
        // degenerate case: both vertical boxes lie on the single component;
        // their twists merge to (1 - c_1) + c_1 = 1, the unknot T(2,1)
        long long total = 0;
        for (const auto* inst : self1) total += inst->signed_count;
        cert.valid = true;
        cert.torus_parameter = total;
        cert.genus = (std::llabs(total) - 1) / 2;
        cert.self_instances = self1.size();
        cert.self_region = "merged";
        return cert;
    }

    const std::string want = "c" + std::to_string(p.m);
    if (self1.size() != 1) {
        cert.failure = "expected exactly one component-1 self region, found " +
                       std::to_string(self1.size());
        return cert;
    }
    const Instance& inst = *self1.front();
    if (inst.region != want) {
        cert.failure = "component-1 self region is " + inst.region + ", expected " + want;
        return cert;
    }
    if (inst.strand_a == inst.strand_b) {
        cert.failure = "self region does not pair two distinct strands";
        return cert;
    }
    if (inst.signed_count != p.c[p.m - 1]) {
        cert.failure = "self region crossing sum differs from c_m";
        return cert;
    }
    cert.valid = true;
    cert.torus_parameter = p.c[p.m - 1];
    cert.genus = (std::llabs(cert.torus_parameter) - 1) / 2;
    cert.self_instances = 1;
    cert.self_region = inst.region;
    return cert;
}

AdaptedReport check_adapted(const SigmaParams& p, const IntMatrix& A) {
    if (!matrices::verify_sicup(A).verdict)
        throw std::invalid_argument("check_adapted requires a SICUP target matrix");
    AdaptedReport rep;
    auto compiled = tangle::compile_tangle(build_sigma(p));
    rep.unknot_check = braid::unknot_necessary_check(compiled.word);
    auto brute = brute_force_linking(p);
    rep.computed_linking = brute.matrix;
    rep.linking_match = (brute.matrix == A);
    auto cert = identify_L1(p);
    if (cert.valid) {
        rep.nu_condition = floer::adapted_inequalities(A.at(0, 0), floer::nu_sharp(cert.knot_class()));
    } else {
        rep.nu_condition.status = floer::AdaptedStatus::Inconclusive;
        rep.nu_condition.detail = cert.failure;
    }
    rep.verdict = rep.unknot_check.pass && rep.linking_match &&
                  rep.nu_condition.status == floer::AdaptedStatus::Satisfied;
    return rep;
}

}  // namespace covercalc::sigma
