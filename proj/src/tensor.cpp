#include "hopfring/tensor.hpp"

#include <algorithm>

namespace hopf {

Tensor::Tensor(const Algebra* base, int arity) : base_(base), arity_(arity) {
    if (arity != 2 && arity != 3)
        fail(HopfError::Kind::CorruptData, "tensor arity must be 2 or 3");
    if (base && base->mode() == Coeff::Z)
        fail(HopfError::Kind::CorruptData, "tensors require field coefficients");
}

int t_key_degree(const Algebra& A, const TensorKey& k) {
    return A.mono_degree(k.leg[0]) + A.mono_degree(k.leg[1]) + A.mono_degree(k.leg[2]);
}

int t_key_parity(const Algebra& A, const TensorKey& k) {
    return t_key_degree(A, k) % 2;
}

void t_add_term(Tensor& t, const TensorKey& k, Rat c) {
    const Algebra& A = *t.base();
    int q = A.p();
    if (q) c = Rat(c.mod(q));
    if (c.is_zero()) return;
    auto [it, fresh] = t.terms.try_emplace(k, c);
    if (!fresh) {
        Rat s = it->second + c;
        if (q) s = Rat(s.mod(q));
        if (s.is_zero())
            t.terms.erase(it);
        else
            it->second = s;
    }
}

static void check_compatible(const Tensor& a, const Tensor& b) {
    if (a.base() != b.base() || a.arity() != b.arity())
        fail(HopfError::Kind::CorruptData, "tensor operands over different bases");
}

Tensor t_add(const Tensor& a, const Tensor& b) {
    check_compatible(a, b);
    Tensor r = a;
    for (const auto& [k, c] : b.terms) t_add_term(r, k, c);
    return r;
}

Tensor t_sub(const Tensor& a, const Tensor& b) {
    check_compatible(a, b);
    Tensor r = a;
    for (const auto& [k, c] : b.terms) t_add_term(r, k, -c);
    return r;
}

Tensor t_scal(Rat c, const Tensor& a) {
    Tensor r(a.base(), a.arity());
    for (const auto& [k, ck] : a.terms) t_add_term(r, k, c * ck);
    return r;
}

Tensor t_mul(const Tensor& a, const Tensor& b) {
    check_compatible(a, b);
    const Algebra& A = *a.base();
    const int n = a.arity();
    Tensor r(a.base(), n);
    for (const auto& [ku, cu] : a.terms) {
        for (const auto& [kv, cv] : b.terms) {
            int sign = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    sign += A.mono_degree(kv.leg[i]) * A.mono_degree(ku.leg[j]);
            std::array<Element, 3> legs;
            bool dead = false;
            for (int i = 0; i < n && !dead; ++i) {
                Element ei, ej;
                ei.terms[ku.leg[i]] = Rat(1);
                ej.terms[kv.leg[i]] = Rat(1);
                legs[i] = A.mul(ei, ej);
                if (legs[i].is_zero()) dead = true;
            }
            if (dead) continue;
            if (n == 2) {
                legs[2].terms[Monomial{}] = Rat(1);
            }
            Rat base_c = cu * cv;
            if (sign % 2) base_c = -base_c;
            for (const auto& [m0, c0] : legs[0].terms)
                for (const auto& [m1, c1] : legs[1].terms)
                    for (const auto& [m2, c2] : legs[2].terms)
                        t_add_term(r, TensorKey{{m0, m1, m2}}, base_c * c0 * c1 * c2);
        }
    }
    return r;
}

Tensor t_outer(const Algebra& A, const Element& a, const Element& b) {
    Tensor r(&A, 2);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms)
            t_add_term(r, TensorKey{{ma, mb, Monomial{}}}, ca * cb);
    return r;
}

Tensor t_outer3(const Algebra& A, const Element& a, const Element& b, const Element& c) {
    Tensor r(&A, 3);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms)
            for (const auto& [mc, cc] : c.terms)
                t_add_term(r, TensorKey{{ma, mb, mc}}, ca * cb * cc);
    return r;
}

int t_degree(const Tensor& t) {
    if (t.is_zero()) return -1;
    const Algebra& A = *t.base();
    int d = t_key_degree(A, t.terms.begin()->first);
    for (const auto& [k, c] : t.terms)
        if (t_key_degree(A, k) != d)
            fail(HopfError::Kind::NonHomogeneous, "tensor is not homogeneous");
    return d;
}

Tensor extend_derivation(const Tensor& t,
                         const std::function<Element(const Monomial&)>& d) {
    const Algebra& A = *t.base();
    Tensor r(t.base(), t.arity());
    for (const auto& [k, c] : t.terms) {
        int prefix = 0;
        for (int i = 0; i < t.arity(); ++i) {
            Element di = d(k.leg[i]);
            if (!di.is_zero()) {
                Rat sc = prefix % 2 ? -c : c;
                for (const auto& [m, cm] : di.terms) {
                    TensorKey nk = k;
                    nk.leg[i] = m;
                    t_add_term(r, nk, sc * cm);
                }
            }
            prefix += A.mono_degree(k.leg[i]);
        }
    }
    return r;
}

std::string t_str(const Tensor& t) {
    if (t.is_zero()) return "0";
    const Algebra& A = *t.base();
    std::vector<std::pair<TensorKey, Rat>> ts(t.terms.begin(), t.terms.end());
    std::stable_sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        return t_key_degree(A, a.first) < t_key_degree(A, b.first);
    });
    std::string s;
    for (const auto& [k, c] : ts) {
        Rat cc = c;
        if (s.empty()) {
            if (cc < Rat(0)) {
                s += '-';
                cc = -cc;
            }
        } else {
            s += cc < Rat(0) ? " - " : " + ";
            if (cc < Rat(0)) cc = -cc;
        }
        if (!(cc == Rat(1))) s += cc.str() + ' ';
        for (int i = 0; i < t.arity(); ++i) {
            if (i) s += " (x) ";
            s += A.mono_str(k.leg[i]);
        }
    }
    return s;
}

} // namespace hopf
