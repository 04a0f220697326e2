#pragma once

#include "hopfring/algebra.hpp"

#include <functional>

namespace hopf {

// One basis term of A^{(x)2} or A^{(x)3}; leg[2] stays the unit monomial in
// arity 2.
struct TensorKey {
    std::array<Monomial, 3> leg{};
    auto operator<=>(const TensorKey&) const = default;
};

// Sparse tensor over a field-coefficient Algebra (F2/F3/F5/Q).
class Tensor {
public:
    Tensor() = default;
    Tensor(const Algebra* base, int arity);

    const Algebra* base() const { return base_; }
    int arity() const { return arity_; }
    bool is_zero() const { return terms.empty(); }

    std::map<TensorKey, Rat> terms;

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.arity_ == b.arity_ && a.terms == b.terms;
    }

private:
    const Algebra* base_ = nullptr;
    int arity_ = 2;
};

int t_key_degree(const Algebra& A, const TensorKey& k);
int t_key_parity(const Algebra& A, const TensorKey& k);

// Accumulates c * k into t with field normalization.
void t_add_term(Tensor& t, const TensorKey& k, Rat c);

Tensor t_add(const Tensor& a, const Tensor& b);
Tensor t_sub(const Tensor& a, const Tensor& b);
Tensor t_scal(Rat c, const Tensor& a);

// Componentwise product with the sign rule
//   (u1 (x) ... (x) un)(v1 (x) ... (x) vn)
//     = (-1)^{sum_{i<j} deg v_i deg u_j} u1 v1 (x) ... (x) un vn.
Tensor t_mul(const Tensor& a, const Tensor& b);

Tensor t_outer(const Algebra& A, const Element& a, const Element& b);
Tensor t_outer3(const Algebra& A, const Element& a, const Element& b, const Element& c);

// Degree of a homogeneous tensor, -1 for zero; throws NonHomogeneous.
int t_degree(const Tensor& t);

// Extends an odd derivation d on A (given on monomials) to the tensor power:
//   d(u1 (x) ... (x) un) = sum_i (-1)^{deg u1 + ... + deg u_{i-1}}
//                                 u1 (x) ... (x) d(u_i) (x) ... (x) un.
Tensor extend_derivation(const Tensor& t,
                         const std::function<Element(const Monomial&)>& d);

std::string t_str(const Tensor& t);

// Contract spellings.

inline Tensor t_multiply(const Tensor& u, const Tensor& v) { return t_mul(u, v); }

inline Tensor apply_componentwise_derivation(
    const std::function<Element(const Monomial&)>& d, const Tensor& u) {
    return extend_derivation(u, d);
}

inline Tensor embed_left(const Algebra& A, const Element& a) {
    return t_outer(A, a, A.one());
}

inline Tensor embed_right(const Algebra& A, const Element& a) {
    return t_outer(A, A.one(), a);
}

} // namespace hopf
