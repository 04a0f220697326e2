#pragma once

#include "hopfring/hopf.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

// ---------------------------------------------------------------------------
// Raw structured tables. This layer stores the source data as written
// (coefficients, monomial words, Bockstein-argument form), so it can be
// validated, exported, mutated by robustness tests, and pretty-printed in the
// source notation. Engines (Algebra/Hopf) are built from it.
// ---------------------------------------------------------------------------

// A written monomial: ordered generator powers, e.g. x6^2 zeta5.
using MonoS = NamePowers;

struct TensorTermS {
    Rat c;
    MonoS left, right;
    friend bool operator==(const TensorTermS&, const TensorTermS&) = default;
};

struct GenSpecS {
    GenName name;
    int degree = 0;
    Rule rule = Rule::Exterior;
    int bound = 1;
    friend bool operator==(const GenSpecS&, const GenSpecS&) = default;
};

// Reduced coproduct of one generator: direct tensor terms plus terms under a
// Bockstein, i.e. psi(g) = sum(direct) + beta_p^{(x)}( sum(bock) ).
struct PsiEntryS {
    GenName gen;
    std::vector<TensorTermS> direct;
    std::vector<TensorTermS> bock;
    std::string display;
    friend bool operator==(const PsiEntryS&, const PsiEntryS&) = default;
};

struct AlgebraS {
    int prime = 2;
    std::vector<GenSpecS> gens;
    std::vector<std::pair<GenName, MonoS>> squares;
    std::vector<int> rset, eset;
    std::vector<PsiEntryS> psi;
    friend bool operator==(const AlgebraS&, const AlgebraS&) = default;
};

// r_p(rho) = c * mono.
struct ReductionS {
    int prime = 2;
    GenName rho;
    Rat c;
    MonoS mono;
    friend bool operator==(const ReductionS&, const ReductionS&) = default;
};

// Reference to a torsion class C_I at a prime.
struct CRef {
    int prime = 2;
    std::vector<int> subs;  // I as subscripts into e(G,p)
    friend bool operator==(const CRef&, const CRef&) = default;
    std::string str() const;
};

// One summand of a relation side: c * monomial (in x/rho names) * C factors.
struct IntSideTermS {
    Rat c;
    MonoS mono;
    std::vector<CRef> cls;
    friend bool operator==(const IntSideTermS&, const IntSideTermS&) = default;
};

struct RelationS {
    std::string name;  // e.g. "x8*rho59"
    std::vector<IntSideTermS> lhs, rhs;
    std::string display;
    friend bool operator==(const RelationS&, const RelationS&) = default;
};

// A stated integral reduced coproduct:
//   psi(rho) = sum(direct, names in x/rho) + sum_p delta_p( sum(delta[p]) ).
// Imported entries may instead carry pre-expanded per-prime shadows.
struct IntPsiS {
    GenName rho;
    std::vector<TensorTermS> direct;
    std::map<int, std::vector<TensorTermS>> delta;
    std::map<int, std::vector<TensorTermS>> shadow_expanded;
    std::string display;
    friend bool operator==(const IntPsiS&, const IntPsiS&) = default;
};

// Restatements of individual psi_p(zeta) values carried with the integral tables.
struct ZetaNoteS {
    int prime = 2;
    GenName zeta;
    std::vector<TensorTermS> direct;
    friend bool operator==(const ZetaNoteS&, const ZetaNoteS&) = default;
};

struct SpecialS {
    int degree = 0;
    std::string weyl;  // opaque Weyl coordinate, documentation only
    friend bool operator==(const SpecialS&, const SpecialS&) = default;
};

struct XClassS {
    int degree = 0, torsion = 0, height = 0;
    friend bool operator==(const XClassS&, const XClassS&) = default;
};

struct GroupData {
    Group g = Group::G2;
    std::vector<int> DG;                             // invariant degrees
    std::vector<SpecialS> specials;
    std::vector<XClassS> xclasses;
    std::vector<AlgebraS> modp;
    std::vector<ReductionS> reductions;
    std::map<int, std::vector<int>> tau_rho;         // prime -> rho subs in tau_p
    std::vector<int> delta_rhos;                     // rho subs with stated squares
    std::vector<std::pair<int, MonoS>> rho_squares;  // rho sub -> square target
    std::vector<RelationS> relations;
    std::vector<IntPsiS> psi_int;
    std::vector<ZetaNoteS> zeta_notes;
    std::vector<GenName> primitives;                 // stated members of P(G)
    friend bool operator==(const GroupData&, const GroupData&) = default;
};

struct CatalogData {
    std::vector<GroupData> groups;
    GroupData& group(Group g);
    const GroupData& group(Group g) const;
};

// The transcription of the source tables (single source of truth).
const CatalogData& builtin_catalog_data();

// All mutable coefficient locations, for mutation-robustness tests.
std::vector<Rat*> coefficient_sites(GroupData& gd);

// ---------------------------------------------------------------------------
// Built entry: engines constructed from one GroupData, fully validated.
// ---------------------------------------------------------------------------

class CatalogEntry {
public:
    explicit CatalogEntry(GroupData gd);  // throws CorruptData on bad tables

    // Hopf instances point into the algebra members; pin the object.
    CatalogEntry(const CatalogEntry&) = delete;
    CatalogEntry& operator=(const CatalogEntry&) = delete;

    Group group() const { return data_.g; }
    const GroupData& data() const { return data_; }

    std::vector<int> primes() const;         // torsion primes, ascending
    bool has_prime(int p) const;

    const Algebra& rational() const { return rational_; }
    const Algebra& modp(int p) const;
    // p = 0 yields the rational structure (all generators primitive, no
    // Bockstein); torsion primes yield the mod-p tables.
    const Hopf& hopf(int p) const;
    // Explicit presentation of the integral ring, where one exists (G2, F4, E6).
    const Algebra* zmodel() const { return zmodel_ ? &*zmodel_ : nullptr; }

    // r_p on a rho- or x-generator.
    Element reduction_image(int p, GenName n) const;
    // r_p(C_I) = beta_p(zeta_I).
    Element reduction_image(const CRef& c) const;

    struct CIDescriptor {
        int degree = 0;       // 2(i1+...+ik) - k + 1
        Element zeta_I;       // product of zeta_{2s-1}, s in I
        Element rp_image;     // beta_p(zeta_I)
    };
    CIDescriptor class_CI(const CRef& c) const;  // throws NotInE

    // Stated-formula evaluation hooks used by the verifier and CLI.
    Element eval_mono(const Algebra& A, const MonoS& m, Rat c) const;
    Tensor eval_tensor_terms(const Algebra& A, const std::vector<TensorTermS>& ts) const;

private:
    void validate() const;

    GroupData data_;
    Algebra rational_;
    std::map<int, Algebra> modp_;
    std::map<int, std::unique_ptr<Hopf>> hopf_;
    std::optional<Algebra> zmodel_;
};

// Built-in entries, constructed once and cached.
const CatalogEntry& entry(Group g);

namespace detail {
// Mutation-test reroute slot consulted by entry(); null when inactive.
const CatalogEntry*& entry_override(Group g);
} // namespace detail

// Presentation access per the public contract; (group, p) pairs without
// p-torsion are rejected unless allow_exterior_model requests the
// rational-type exterior algebra on the free generator degrees.
Algebra make_algebra(Group g, Coeff coeff, bool allow_exterior_model = false);

Group parse_group(const std::string& s);  // throws UnknownPair

} // namespace hopf
