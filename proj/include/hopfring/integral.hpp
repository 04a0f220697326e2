#pragma once

#include "hopfring/catalog.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Shadow coordinates for H*(G;Z): the free part written in the rational
// model (a polynomial in the rho generators, exterior) together with one
// mod-p shadow r_p(z) per torsion prime of G. Torsion classes are pinned by
// their shadows alone, because r_p is injective on p-torsion; the free part
// carries everything else. No explicit integral relation list is needed,
// which matters for E7/E8 where the source states none.
// ---------------------------------------------------------------------------

struct IntegralElement {
    Group g = Group::G2;
    Element free;                   // over entry(g).rational()
    std::map<int, Element> shadow;  // p -> r_p(z) over entry(g).modp(p)
    friend bool operator==(const IntegralElement&, const IntegralElement&) = default;
};

struct IntegralTensorElement {
    Group g = Group::G2;
    Tensor free;
    std::map<int, Tensor> shadow;
    friend bool operator==(const IntegralTensorElement& a, const IntegralTensorElement& b) {
        return a.g == b.g && a.free == b.free && a.shadow == b.shadow;
    }
};

IntegralElement int_zero(Group g);
IntegralElement int_one(Group g);

// A named catalog class: rho generators (free, with their stated mod-p
// reduction rows), x-classes (pure torsion), or zeta names rejected.
IntegralElement embed(Group g, GenName n);
// C_I = delta_p(zeta_I): pure p-torsion with shadow beta_p(zeta_I).
IntegralElement embed(Group g, const CRef& c);
// A polynomial in the rho generators, reduced shadow-wise.
IntegralElement embed_free(Group g, const Element& rational);

IntegralElement int_add(const IntegralElement& a, const IntegralElement& b);
IntegralElement int_sub(const IntegralElement& a, const IntegralElement& b);
IntegralElement int_scal(Rat c, const IntegralElement& a);
IntegralElement int_multiply(const IntegralElement& a, const IntegralElement& b);

bool int_is_zero(const IntegralElement& z);
// Degree of a homogeneous element, -1 when all components vanish; throws
// NonHomogeneous when components disagree.
int int_degree(const IntegralElement& z);
std::string int_str(const IntegralElement& z);

IntegralTensorElement it_zero(Group g);
IntegralTensorElement it_add(const IntegralTensorElement& a, const IntegralTensorElement& b);
IntegralTensorElement it_sub(const IntegralTensorElement& a, const IntegralTensorElement& b);
IntegralTensorElement it_scal(Rat c, const IntegralTensorElement& a);
IntegralTensorElement it_outer(const IntegralElement& a, const IntegralElement& b);
IntegralTensorElement it_multiply(const IntegralTensorElement& a, const IntegralTensorElement& b);

bool it_is_zero(const IntegralTensorElement& t);
std::string it_str(const IntegralTensorElement& t);

// The class delta_p(u) for a tensor u over A_p (x) A_p: pure p-torsion with
// shadow beta_p applied componentwise to u.
IntegralTensorElement delta_element(Group g, int p, const Tensor& u);

// Inverts r_p on torsion: returns the unique p-torsion class with shadow t.
// Membership in r_p(tau_p(G x G)) is decided exactly: every p-torsion class
// of G and of G x G has additive order p, so the Bockstein long exact
// sequence identifies r_p(tau_p) with the image of beta_p on A_p (x) A_p,
// and the test is a linear solve against that image in the given degree.
// Throws NotInTorsionImage otherwise.
IntegralTensorElement delta_lift(Group g, int p, const Tensor& t);

// Re-expression of a liftable shadow in the source notation: a sum of named
// integral pairs (x- and rho-classes) plus delta_p of a tensor argument.
// Degrees past the re-expression size cap leave the leftover in raw instead
// of bock_arg; it is liftable either way.
struct LiftDisplay {
    std::vector<TensorTermS> named;
    Tensor bock_arg;
    Tensor raw;
};
LiftDisplay lift_display(Group g, int p, const Tensor& t);

// Reduced coproduct, shadow-wise per the pull-back decomposition: the free
// leg through the rational structure, each shadow through psi_p. In
// generator mode the result must be pure torsion (free leg zero) and every
// shadow is certified liftable; either failure throws NotInTorsionImage.
IntegralTensorElement psi_integral(const IntegralElement& z, bool generator_mode);

bool is_primitive_integral(const IntegralElement& z);

} // namespace hopf
