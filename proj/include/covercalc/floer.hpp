#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "covercalc/int_matrix.hpp"

namespace covercalc::floer {

enum class Shape { V, W, Unknown };

/// nu-sharp record for one knot: the invariant enters this library only as
/// catalog data or through the torus-knot and mirror rules, never computed
/// from Floer theory.
struct NuSharpInfo {
    std::optional<long long> nu;
    Shape shape = Shape::Unknown;
    std::string provenance;

    bool known() const { return nu.has_value(); }
};

/// Knot classes the catalog understands.
/// Mirror(Mirror(k)) normalizes to k on construction.
class KnotClass {
public:
    enum class Tag { Unknot, Torus2, CatalogEntry, Mirror, Unknown };

    static KnotClass unknot();
    static KnotClass torus2(long long q);  // odd |q| >= 3; q<0 normalizes to Mirror(T(2,|q|))
    static KnotClass catalog_entry(std::string name);
    static KnotClass mirror(KnotClass inner);
    static KnotClass unknown(std::string name);

    /// "unknot", "torus2:q", "catalog:name", "mirror:<spec>", "unknown:name"
    static KnotClass parse(const std::string& spec);

    Tag tag() const { return tag_; }
    long long torus_q() const { return q_; }
    const std::string& name() const { return name_; }
    const KnotClass& inner() const { return *inner_; }

    std::string to_string() const;

private:
    Tag tag_ = Tag::Unknot;
    long long q_ = 0;
    std::string name_;
    std::shared_ptr<const KnotClass> inner_;
};

/// name -> {nu, shape} table. The built-in table carries exactly the values
/// the library is allowed to assume; a JSON file may extend it.
class Catalog {
public:
    static Catalog builtin();
    static Catalog from_json_file(const std::string& path);  // builtin + file entries

    void insert(const std::string& name, long long nu, Shape shape);
    std::optional<NuSharpInfo> lookup(const std::string& name) const;

    const std::map<std::string, NuSharpInfo>& entries() const { return entries_; }

private:
    std::map<std::string, NuSharpInfo> entries_;
};

/// Resolve nu-sharp data: Torus2(q) -> (q-2, V); mirror negates nu and keeps
/// the shape; catalog entries are looked up; unknown stays unknown.
NuSharpInfo nu_sharp(const KnotClass& k, const Catalog& catalog = Catalog::builtin());

/// n-trace cobordism map triviality:
///   nu != 0: trivial iff n >= nu
///   nu == 0, V-shaped: trivial iff n >= -1
///   nu == 0, W-shaped: trivial iff n >= 1
/// Throws when the data is insufficient (unknown nu, or nu = 0 with unknown
/// shape).
bool trace_map_trivial(const NuSharpInfo& info, long long n);

struct ThmNuVerdict {
    bool applies = false;
    std::optional<std::size_t> witness_index;  // 0-based
    std::optional<int> case_number;            // 1, 2 or 3
    std::vector<std::string> failures;         // one reason per non-witness index
};

/// Hypothesis check for the surgery theorem: A symmetric, negative definite,
/// det = +-1; applies iff some component i satisfies
///   (1) nu_i != 0 and a_ii >= nu_i, or
///   (2) nu_i = 0, V-shaped, a_ii >= -1, or
///   (3) nu_i = 0, W-shaped, a_ii >= 1.
/// Components with unknown nu never produce a witness.
ThmNuVerdict thm_nu_applies(const IntMatrix& A, const std::vector<NuSharpInfo>& components);

enum class AdaptedStatus { Satisfied, Violated, Inconclusive };

struct AdaptedVerdict {
    AdaptedStatus status = AdaptedStatus::Inconclusive;
    std::optional<int> case_number;
    std::string detail;
};

/// Positive-definite-side mirror of the theorem cases:
///   (1) nu != 0 and a11 <= nu
///   (2) nu = 0, V-shaped, a11 <= nu + 1
///   (3) nu = 0, W-shaped, a11 <= nu - 1
AdaptedVerdict adapted_inequalities(const BigInt& a11, const NuSharpInfo& info);

struct CoverFactorization {
    long long g = 0;        // gcd(w, d)
    long long d_prime = 0;  // d / g
    /// gcd(w, d_prime) == 1; false exposes that the one-step reduction does
    /// not always land on a coprime pair (e.g. d = 9, w = 6).
    bool coprime = false;
};

CoverFactorization cover_factorization(long long d, long long w);

}  // namespace covercalc::floer
