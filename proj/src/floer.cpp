#include "covercalc/floer.hpp"

#include <fstream>
#include <numeric>

#include <json.hpp>

namespace covercalc::floer {

KnotClass KnotClass::unknot() { return KnotClass(); }

KnotClass KnotClass::torus2(long long q) {
    if (q % 2 == 0) throw std::invalid_argument("T(2,q) needs odd q");
    if (q == 1 || q == -1) return unknot();
    if (q < 0) return mirror(torus2(-q));
    KnotClass k;
    k.tag_ = Tag::Torus2;
    k.q_ = q;
    return k;
}

KnotClass KnotClass::catalog_entry(std::string name) {
    KnotClass k;
    k.tag_ = Tag::CatalogEntry;
    k.name_ = std::move(name);
    return k;
}

KnotClass KnotClass::mirror(KnotClass inner) {
    if (inner.tag_ == Tag::Mirror) return *inner.inner_;  // involution
    if (inner.tag_ == Tag::Unknot) return inner;          // amphichiral
    KnotClass k;
    k.tag_ = Tag::Mirror;
    k.inner_ = std::make_shared<const KnotClass>(std::move(inner));
    return k;
}

KnotClass KnotClass::unknown(std::string name) {
    KnotClass k;
    k.tag_ = Tag::Unknown;
    k.name_ = std::move(name);
    return k;
}

KnotClass KnotClass::parse(const std::string& spec) {
    if (spec == "unknot") return unknot();
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad knot class: " + spec);
    std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (head == "torus2") return torus2(std::stoll(rest));
    if (head == "catalog") return catalog_entry(rest);
    if (head == "mirror") return mirror(parse(rest));
    if (head == "unknown") return unknown(rest);
    throw std::invalid_argument("bad knot class: " + spec);
}

std::string KnotClass::to_string() const {
    switch (tag_) {
        case Tag::Unknot: return "unknot";
        case Tag::Torus2: return "torus2:" + std::to_string(q_);
        case Tag::CatalogEntry: return "catalog:" + name_;
        case Tag::Mirror: return "mirror:" + inner_->to_string();
        case Tag::Unknown: return "unknown:" + name_;
    }
    return "?";
}

Catalog Catalog::builtin() {
    Catalog c;
    c.insert("unknot", 0, Shape::V);
    c.insert("5_2_negative_clasp", -1, Shape::V);
    return c;
}

void Catalog::insert(const std::string& name, long long nu, Shape shape) {
    entries_[name] = NuSharpInfo{nu, shape, "catalog:" + name};
}

Catalog Catalog::from_json_file(const std::string& path) {
    Catalog c = builtin();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    nlohmann::json j;
    in >> j;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        std::string shape = v.at("shape").get<std::string>();
        if (shape != "V" && shape != "W")
            throw std::runtime_error("catalog shape must be \"V\" or \"W\" for " + it.key());
        c.insert(it.key(), v.at("nu").get<long long>(), shape == "V" ? Shape::V : Shape::W);
    }
    return c;
}

std::optional<NuSharpInfo> Catalog::lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

NuSharpInfo nu_sharp(const KnotClass& k, const Catalog& catalog) {
    switch (k.tag()) {
        case KnotClass::Tag::Unknot:
            return {0, Shape::V, "rule:unknot"};
        case KnotClass::Tag::Torus2:
            // instanton L-space knot: nu = 2g - 1 = q - 2
            return {k.torus_q() - 2, Shape::V, "rule:torus2"};
        case KnotClass::Tag::Mirror: {
            NuSharpInfo inner = nu_sharp(k.inner(), catalog);
            if (inner.nu) inner.nu = -*inner.nu;  // shape is preserved
            inner.provenance = "mirror(" + inner.provenance + ")";
            return inner;
        }
        case KnotClass::Tag::CatalogEntry: {
            auto hit = catalog.lookup(k.name());
            if (hit) return *hit;
            return {std::nullopt, Shape::Unknown, "missing-catalog:" + k.name()};
        }
        case KnotClass::Tag::Unknown:
            return {std::nullopt, Shape::Unknown, "unknown:" + k.name()};
    }
    return {};
}

bool trace_map_trivial(const NuSharpInfo& info, long long n) {
    if (!info.nu) throw std::invalid_argument("trace_map_trivial requires a known nu-sharp value");
    long long nu = *info.nu;
    if (nu != 0) return n >= nu;
    if (info.shape == Shape::V) return n >= -1;
    if (info.shape == Shape::W) return n >= 1;
    throw std::invalid_argument("trace_map_trivial: nu = 0 with unknown shape is inconclusive");
}

namespace {

// Case analysis shared by the surgery-side (>=) and adapted-side (<=) checks.
std::optional<int> matching_case(const NuSharpInfo& info, const BigInt& a, bool lower_bound) {
    if (!info.nu) return std::nullopt;
    long long nu = *info.nu;
    auto holds = [&](long long bound) {
        return lower_bound ? a >= BigInt(bound) : a <= BigInt(bound);
    };
    if (nu != 0) return holds(nu) ? std::optional<int>(1) : std::nullopt;
    if (info.shape == Shape::V) return holds(lower_bound ? -1 : 1) ? std::optional<int>(2) : std::nullopt;
    if (info.shape == Shape::W) return holds(lower_bound ? 1 : -1) ? std::optional<int>(3) : std::nullopt;
    return std::nullopt;
}

bool data_inconclusive(const NuSharpInfo& info) {
    return !info.nu || (*info.nu == 0 && info.shape == Shape::Unknown);
}

}  // namespace

ThmNuVerdict thm_nu_applies(const IntMatrix& A, const std::vector<NuSharpInfo>& components) {
    if (!A.is_symmetric()) throw std::invalid_argument("thm_nu_applies: matrix must be symmetric");
    if (components.size() != A.dim())
        throw std::invalid_argument("thm_nu_applies: one component record per matrix row required");
    const auto minors = leading_principal_minors(A);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        const bool want_negative = (k % 2 == 0);
        if (want_negative ? minors[k] >= 0 : minors[k] <= 0)
            throw std::invalid_argument("thm_nu_applies: matrix must be negative definite");
    }
    BigInt det = A.dim() == 0 ? BigInt(1) : minors.back();
    if (det != 1 && det != -1)
        throw std::invalid_argument("thm_nu_applies: matrix must be unimodular");

    ThmNuVerdict v;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& info = components[i];
        if (data_inconclusive(info)) {
            v.failures.push_back("component " + std::to_string(i + 1) + ": nu-sharp data inconclusive");
            continue;
        }
        auto c = matching_case(info, A.at(i, i), /*lower_bound=*/true);
        if (c) {
            v.applies = true;
            v.witness_index = i;
            v.case_number = *c;
            return v;
        }
        v.failures.push_back("component " + std::to_string(i + 1) + ": inequality fails");
    }
    return v;
}

AdaptedVerdict adapted_inequalities(const BigInt& a11, const NuSharpInfo& info) {
    AdaptedVerdict v;
    if (data_inconclusive(info)) {
        v.status = AdaptedStatus::Inconclusive;
        v.detail = "nu-sharp data inconclusive";
        return v;
    }
    auto c = matching_case(info, a11, /*lower_bound=*/false);
    if (c) {
        v.status = AdaptedStatus::Satisfied;
        v.case_number = *c;
    } else {
        v.status = AdaptedStatus::Violated;
        v.detail = "inequality fails";
    }
    return v;
}

CoverFactorization cover_factorization(long long d, long long w) {
    if (d <= 0) throw std::invalid_argument("cover_factorization requires d >= 1");
    CoverFactorization out;
    out.g = std::gcd(w, d);
    out.d_prime = d / out.g;
    out.coprime = std::gcd(w, out.d_prime) == 1;
    return out;
}

}  // namespace covercalc::floer
