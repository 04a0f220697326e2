#pragma once

#include "hopfring/tensor.hpp"

#include <map>

namespace hopf {

// Mod-p Hopf structure on one algebra: Bockstein values and reduced
// coproducts on generators, extended to everything by derivation/ring-map
// rules. Instances are immutable once the catalog finishes installing
// the generator tables.
class Hopf {
public:
    explicit Hopf(const Algebra& A) : A_(&A) {}

    const Algebra& algebra() const { return *A_; }

    void set_beta_gen(GenName g, Element v);
    void set_psi_gen(GenName g, Tensor v);  // reduced coproduct of g

    const Element& beta_gen(GenName g) const;
    const Tensor& psi_gen(GenName g) const;

    // Signed Leibniz extension of the generator Bockstein.
    Element bockstein(const Element& e) const;
    Element bockstein_mono(const Monomial& m) const;

    // The same derivation on tensor squares/cubes.
    Tensor bockstein_tensor(const Tensor& t) const;

    // Full coproduct (ring-map extension of g -> g(x)1 + 1(x)g + psi(g)).
    Tensor coproduct(const Element& e) const;
    const Tensor& coproduct_mono(const Monomial& m) const;

    // coproduct(e) - e(x)1 - 1(x)e; requires homogeneous positive degree.
    Tensor reduced_coproduct(const Element& e) const;

    bool is_primitive(const Element& e) const;

    // Applies the full coproduct to one leg of a 2-tensor, producing the
    // 3-tensor (mu (x) id) t (leg 0) or (id (x) mu) t (leg 1).
    Tensor coproduct_on_leg(const Tensor& t, int leg) const;

private:
    const Algebra* A_;
    std::map<int, Element> beta_;     // gen index -> value (absent = 0)
    std::map<int, Tensor> psi_;       // gen index -> reduced coproduct
    mutable std::map<Monomial, Tensor> memo_;
};

} // namespace hopf
