#include "doctest.h"

#include "hopfring/catalog.hpp"
#include "hopfring/hopf.hpp"
#include "hopfring/tensor.hpp"

using namespace hopf;

TEST_CASE("componentwise product applies the sign rule") {
    const Algebra& A = entry(Group::F4).modp(3);
    Element z3 = A.gen(zg(3)), z7 = A.gen(zg(7)), x8 = A.gen(xg(8));

    // (1 (x) z3)(z7 (x) 1) = -(z7 (x) z3): the z7 crosses z3.
    CHECK(t_mul(embed_right(A, z3), embed_left(A, z7)) ==
          t_scal(Rat(-1), t_outer(A, z7, z3)));
    // Even classes cross for free.
    CHECK(t_mul(embed_right(A, z3), embed_left(A, x8)) == t_outer(A, x8, z3));

    // u v = (-1)^{deg u deg v} v u for homogeneous u, v.
    Element vals[] = {z3, z7, x8, A.mul(z3, z7), A.mul(x8, z3)};
    for (const Element& a : vals)
        for (const Element& b : vals)
            for (const Element& c : vals)
                for (const Element& d : vals) {
                    Tensor u = t_outer(A, a, b), v = t_outer(A, c, d);
                    int du = t_degree(u), dv = t_degree(v);
                    int sign = (du % 2 != 0 && dv % 2 != 0) ? -1 : 1;
                    CHECK(t_mul(u, v) == t_scal(Rat(sign), t_mul(v, u)));
                }
}

TEST_CASE("product is associative and bilinear") {
    const Algebra& A = entry(Group::E7).modp(2);
    Element z3 = A.gen(zg(3)), z5 = A.gen(zg(5)), x6 = A.gen(xg(6));
    Tensor u = t_outer(A, z3, z5);
    Tensor v = t_outer(A, x6, z3);
    Tensor w = t_add(t_outer(A, z5, A.one()), t_outer(A, A.one(), z5));

    CHECK(t_mul(t_mul(u, v), w) == t_mul(u, t_mul(v, w)));
    CHECK(t_mul(u, t_add(v, w)) == t_add(t_mul(u, v), t_mul(u, w)));
    CHECK(t_mul(u, Tensor(&A, 2)).is_zero());
}

TEST_CASE("odd derivations extend with the alternating sign") {
    const CatalogEntry& e = entry(Group::F4);
    const Algebra& A = e.modp(3);
    const Hopf& H = e.hopf(3);
    auto d = [&](const Monomial& m) { return H.bockstein_mono(m); };

    Element z7 = A.gen(zg(7)), x8 = A.gen(xg(8));
    // beta(z7) = -x8, so on z7 (x) z7 the second slot picks up (-1)^7.
    Tensor got = extend_derivation(t_outer(A, z7, z7), d);
    Tensor want = t_add(t_scal(Rat(-1), t_outer(A, x8, z7)), t_outer(A, z7, x8));
    CHECK(got == want);

    // A square-zero derivation stays square-zero on the tensor power.
    Element z3 = A.gen(zg(3));
    Tensor probe = t_add(t_outer(A, A.mul(z3, z7), z7), t_outer(A, z7, A.mul(x8, z7)));
    CHECK(extend_derivation(extend_derivation(probe, d), d).is_zero());
}

TEST_CASE("degrees of tensors") {
    const Algebra& A = entry(Group::G2).modp(2);
    Element z3 = A.gen(zg(3)), z5 = A.gen(zg(5));
    CHECK(t_degree(t_outer(A, z3, z5)) == 8);
    CHECK(t_degree(Tensor(&A, 2)) == -1);
    Tensor mixed = t_add(t_outer(A, z3, z3), t_outer(A, z3, z5));
    CHECK_THROWS_AS((void)t_degree(mixed), HopfError);
}

TEST_CASE("arity three tensors multiply with crossing signs") {
    const Algebra& A = entry(Group::F4).modp(3);
    Element z3 = A.gen(zg(3)), z7 = A.gen(zg(7));
    Tensor u = t_outer3(A, A.one(), A.one(), z3);
    Tensor v = t_outer3(A, z7, A.one(), A.one());
    // z7 crosses the degree 3 class in the last slot.
    CHECK(t_mul(u, v) == t_scal(Rat(-1), t_outer3(A, z7, A.one(), z3)));
}
