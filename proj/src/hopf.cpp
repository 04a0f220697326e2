#include "hopfring/hopf.hpp"

namespace hopf {

namespace {

const Element& empty_element() {
    static const Element e{};
    return e;
}

const Tensor& empty_tensor() {
    static const Tensor t{};
    return t;
}

} // namespace

void Hopf::set_beta_gen(GenName g, Element v) {
    int i = A_->index_of(g);
    if (!v.is_zero() && A_->degree(v) != A_->gens()[i].degree + 1)
        fail(HopfError::Kind::CorruptData,
             "bockstein value of " + g.str() + " has wrong degree");
    beta_[i] = std::move(v);
}

void Hopf::set_psi_gen(GenName g, Tensor v) {
    int i = A_->index_of(g);
    if (!v.is_zero() && t_degree(v) != A_->gens()[i].degree)
        fail(HopfError::Kind::CorruptData,
             "reduced coproduct of " + g.str() + " has wrong degree");
    for (const auto& [k, c] : v.terms)
        if (k.leg[0].is_unit() || k.leg[1].is_unit())
            fail(HopfError::Kind::CorruptData,
                 "reduced coproduct of " + g.str() + " has a unit leg");
    psi_[i] = std::move(v);
    memo_.clear();
}

const Element& Hopf::beta_gen(GenName g) const {
    auto it = beta_.find(A_->index_of(g));
    return it == beta_.end() ? empty_element() : it->second;
}

const Tensor& Hopf::psi_gen(GenName g) const {
    auto it = psi_.find(A_->index_of(g));
    return it == psi_.end() ? empty_tensor() : it->second;
}

// beta is an odd derivation. Odd generators never exceed exponent one, and
// every generator value beta(g) is an even central monomial, so
//   beta(m) = sum_i (-1)^{(odd factors left of i)} (m / g_i) beta(g_i)
// over the odd generator factors g_i of m that carry a nonzero value.
Element Hopf::bockstein_mono(const Monomial& m) const {
    Element out;
    int odd_prefix = 0;
    const auto& gens = A_->gens();
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        if (gens[i].degree % 2 == 0 || m.e[i] == 0) continue;
        auto it = beta_.find(i);
        if (it != beta_.end() && !it->second.is_zero()) {
            Monomial rest = m;
            rest.e[i] = 0;
            Element partial;
            A_->add_term(partial, rest, (odd_prefix % 2) ? Rat(-1) : Rat(1));
            out = A_->add(out, A_->mul(partial, it->second));
        }
        odd_prefix += m.e[i];
    }
    return out;
}

Element Hopf::bockstein(const Element& e) const {
    Element out;
    for (const auto& [m, c] : e.terms)
        out = A_->add(out, A_->scal(c, bockstein_mono(m)));
    return out;
}

Tensor Hopf::bockstein_tensor(const Tensor& t) const {
    return extend_derivation(t, [this](const Monomial& m) { return bockstein_mono(m); });
}

const Tensor& Hopf::coproduct_mono(const Monomial& m) const {
    auto hit = memo_.find(m);
    if (hit != memo_.end()) return hit->second;

    Tensor out(A_, 2);
    if (m.is_unit()) {
        t_add_term(out, TensorKey{}, Rat(1));
        return memo_.emplace(m, std::move(out)).first->second;
    }

    int last = -1;
    int total = 0;
    for (int i = 0; i < static_cast<int>(A_->gens().size()); ++i) {
        if (m.e[i]) { last = i; total += m.e[i]; }
    }

    if (total == 1) {
        // Base case: mu*(g) = g (x) 1 + 1 (x) g + psi(g).
        TensorKey k;
        k.leg[0] = m;
        t_add_term(out, k, Rat(1));
        k = TensorKey{};
        k.leg[1] = m;
        t_add_term(out, k, Rat(1));
        auto it = psi_.find(last);
        if (it != psi_.end()) out = t_add(out, it->second);
    } else {
        Monomial head = m, tail{};
        head.e[last] -= 1;
        tail.e[last] = 1;
        // head * g_last reassembles m with coefficient +1 because g_last is
        // the final factor of the canonical word.
        out = t_mul(coproduct_mono(head), coproduct_mono(tail));
    }
    return memo_.emplace(m, std::move(out)).first->second;
}

Tensor Hopf::coproduct(const Element& e) const {
    Tensor out(A_, 2);
    for (const auto& [m, c] : e.terms)
        out = t_add(out, t_scal(c, coproduct_mono(m)));
    return out;
}

Tensor Hopf::reduced_coproduct(const Element& e) const {
    Tensor out = coproduct(e);
    if (e.is_zero()) return out;
    if (A_->degree(e) <= 0)
        fail(HopfError::Kind::NonHomogeneous,
             "reduced coproduct needs positive degree");
    return t_sub(t_sub(out, t_outer(*A_, e, A_->one())), t_outer(*A_, A_->one(), e));
}

bool Hopf::is_primitive(const Element& e) const {
    return reduced_coproduct(e).is_zero();
}

Tensor Hopf::coproduct_on_leg(const Tensor& t, int leg) const {
    Tensor out(A_, 3);
    for (const auto& [k, c] : t.terms) {
        const Tensor& d = coproduct_mono(k.leg[leg]);
        for (const auto& [dk, dc] : d.terms) {
            TensorKey nk;
            if (leg == 0) {
                nk.leg = {dk.leg[0], dk.leg[1], k.leg[1]};
            } else {
                nk.leg = {k.leg[0], dk.leg[0], dk.leg[1]};
            }
            t_add_term(out, nk, c * dc);
        }
    }
    return out;
}

} // namespace hopf
