#pragma once

#include "hopfring/error.hpp"
#include "hopfring/names.hpp"
#include "hopfring/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hopf {

enum class Coeff : std::uint8_t { F2, F3, F5, Q, Z };

inline int coeff_char(Coeff c) {
    switch (c) {
        case Coeff::F2: return 2;
        case Coeff::F3: return 3;
        case Coeff::F5: return 5;
        default: return 0;
    }
}

inline const char* coeff_name(Coeff c) {
    switch (c) {
        case Coeff::F2: return "F2";
        case Coeff::F3: return "F3";
        case Coeff::F5: return "F5";
        case Coeff::Q: return "Q";
        case Coeff::Z: return "Z";
    }
    return "?";
}

// How a generator's powers behave in normal form.
enum class Rule : std::uint8_t {
    Exterior,   // g^2 = 0
    Truncated,  // g^h = 0, normal exponents 0..h-1
    SquareTo    // odd g with g^2 = (fixed even monomial), exponents 0..1
};

// No presentation here needs more than 12 generators.
constexpr int kMaxGens = 16;

// Exponent vector in generator-index order. Lexicographic comparison on the
// raw array doubles as the canonical term order.
struct Monomial {
    std::array<std::uint8_t, kMaxGens> e{};
    auto operator<=>(const Monomial&) const = default;
    bool is_unit() const {
        for (auto v : e)
            if (v) return false;
        return true;
    }
};

// Sparse linear combination in normal form. All arithmetic lives on Algebra,
// which owns the presentation the monomials are indexed against.
struct Element {
    std::map<Monomial, Rat> terms;
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Element&, const Element&) = default;
};

struct GeneratorSpec {
    GenName name;
    int degree = 0;
    Rule rule = Rule::Exterior;
    int bound = 1;    // top normal exponent (h-1 for Truncated)
    int torsion = 0;  // Z mode only: additive order, 0 = infinite
};

using NamePowers = std::vector<std::pair<GenName, int>>;

// A graded-commutative finitely presented algebra over F2/F3/F5/Q, or over Z
// in the restricted shape needed for integral cohomology models (free
// exterior part plus per-prime truncated torsion summands).
class Algebra {
public:
    Algebra() = default;
    Algebra(Coeff mode, Group g) : mode_(mode), group_(g) {}

    Coeff mode() const { return mode_; }
    Group group() const { return group_; }
    int p() const { return coeff_char(mode_); }

    // Installs the generator list, sorted canonically (even x-classes by
    // degree, then odd classes by degree). Call once.
    void set_gens(std::vector<GeneratorSpec> gens);

    // Declares g^2 = target for a SquareTo generator; the target must be a
    // single even monomial within bounds.
    void set_square(GenName g, const NamePowers& target);

    // Z mode: monomials containing p-torsion x-classes may only carry these
    // rho subscripts; anything else collapses to zero.
    void set_rho_allowed(int prime, std::set<int> subs);

    const std::vector<GeneratorSpec>& gens() const { return gens_; }
    int find(GenName n) const;      // -1 if absent
    int index_of(GenName n) const;  // throws UnknownGenerator
    bool has(GenName n) const { return find(n) >= 0; }

    int mono_degree(const Monomial& m) const;
    int mono_parity(const Monomial& m) const;
    // Z mode: modulus of the coefficient group of m (0 = free summand).
    int mono_modulus(const Monomial& m) const;

    Element zero() const { return {}; }
    Element one() const;
    Element gen(GenName n) const;
    // c * product of powers, multiplied left to right (signs and reductions
    // included), so authored strings mean what they say.
    Element make(Rat c, const NamePowers& pows) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element scal(Rat c, const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element pow(const Element& a, int n) const;

    // Accumulates c*m into e applying all coefficient normalization.
    void add_term(Element& e, const Monomial& m, Rat c) const;

    // Degree of a homogeneous element, -1 for zero; throws NonHomogeneous.
    int degree(const Element& e) const;

    std::vector<Monomial> basis(int deg) const;
    std::vector<long> dims(int maxdeg) const;
    long total_dim() const;
    int top_degree() const;

    std::string mono_str(const Monomial& m) const;
    std::string str(const Element& e) const;

private:
    Element reduce_raw(std::array<int, kMaxGens> raw, Rat c) const;
    Rat norm_scalar(Rat c) const;

    Coeff mode_ = Coeff::Q;
    Group group_ = Group::G2;
    std::vector<GeneratorSpec> gens_;
    std::map<int, Monomial> squares_;        // gen index -> g^2 target
    std::map<int, std::set<int>> rho_allowed_;  // Z mode, prime -> rho subs
};

// Free-function spellings used throughout the higher layers.

// Normal form of an unbounded power product. Entries align with gens();
// a short vector means the remaining exponents are zero.
inline Element reduce_monomial(const std::vector<int>& raw, const Algebra& alg) {
    NamePowers pows;
    auto n = std::min(raw.size(), alg.gens().size());
    for (std::size_t i = 0; i < n; ++i)
        if (raw[i]) pows.emplace_back(alg.gens()[i].name, raw[i]);
    return alg.make(Rat(1), pows);
}

inline Element multiply(const Element& a, const Element& b, const Algebra& alg) {
    return alg.mul(a, b);
}

inline std::vector<Monomial> monomial_basis(const Algebra& alg, int degree) {
    return alg.basis(degree);
}

inline std::vector<long> poincare(const Algebra& alg, int max_degree) {
    return alg.dims(max_degree);
}

} // namespace hopf
