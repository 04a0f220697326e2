#include "doctest.h"

#include "hopfring/catalog.hpp"

using namespace hopf;

TEST_CASE("G2 mod 2 presentation arithmetic") {
    Algebra A = make_algebra(Group::G2, Coeff::F2);
    Element z3 = A.gen(zg(3)), z5 = A.gen(zg(5)), x6 = A.gen(xg(6));

    CHECK(A.mul(z3, z3) == x6);          // zeta3^2 = x6
    CHECK(A.mul(x6, x6).is_zero());      // height 2
    CHECK(A.pow(z3, 4).is_zero());       // (zeta3^2)^2 = x6^2
    CHECK(A.pow(z3, 3) == A.mul(x6, z3));
    CHECK(A.mul(z5, z5).is_zero());

    CHECK(A.total_dim() == 8);
    CHECK(A.top_degree() == 14);
    auto b11 = A.basis(11);
    REQUIRE(b11.size() == 1);
    CHECK(A.mono_str(b11[0]) == "x6 zeta5");

    // dims: 1,0,0,1,0,1,1,0,1,1,0,1,0,0,1
    auto d = A.dims(14);
    CHECK(d == std::vector<long>{1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1});
}

TEST_CASE("odd primary Koszul signs and truncation") {
    Algebra A = make_algebra(Group::F4, Coeff::F3);
    Element z3 = A.gen(zg(3)), z7 = A.gen(zg(7)), x8 = A.gen(xg(8));

    CHECK(A.mul(z3, z7) == A.scal(Rat(-1), A.mul(z7, z3)));
    CHECK(A.mul(z3, z3).is_zero());
    CHECK(!A.pow(x8, 2).is_zero());
    CHECK(A.pow(x8, 3).is_zero());

    // make() multiplies left to right, so written order carries its sign.
    Element w = A.make(Rat(1), {{zg(7), 1}, {zg(3), 1}});
    CHECK(w == A.scal(Rat(-1), A.make(Rat(1), {{zg(3), 1}, {zg(7), 1}})));

    CHECK(A.total_dim() == 48);
}

TEST_CASE("rational model is exterior on the rho classes") {
    Algebra A = make_algebra(Group::G2, Coeff::Q);
    Element r3 = A.gen(rg(3)), r11 = A.gen(rg(11));
    CHECK(A.mul(r3, r3).is_zero());
    CHECK(A.mul(r3, r11) == A.scal(Rat(-1), A.mul(r11, r3)));
    CHECK(A.total_dim() == 4);
    CHECK(A.top_degree() == 14);
}

TEST_CASE("integral model tracks torsion moduli and the rho filter") {
    Algebra A = make_algebra(Group::G2, Coeff::Z);
    Element r3 = A.gen(rg(3)), r11 = A.gen(rg(11)), x6 = A.gen(xg(6));

    CHECK(A.mul(r3, r3) == x6);              // rho3^2 = x6
    CHECK(A.mul(x6, x6).is_zero());
    CHECK(A.scal(Rat(2), x6).is_zero());     // 2 x6 = 0
    CHECK(!A.scal(Rat(2), r3).is_zero());
    CHECK(A.mul(x6, r11).is_zero());         // rho11 not allowed next to x6
    CHECK(!A.mul(x6, r3).is_zero());

    CHECK(A.mono_modulus(A.gen(xg(6)).terms.begin()->first) == 2);
    CHECK(A.mono_modulus(A.gen(rg(3)).terms.begin()->first) == 0);
}

TEST_CASE("degree accessors reject mixed elements") {
    Algebra A = make_algebra(Group::G2, Coeff::F2);
    Element mixed = A.add(A.gen(zg(3)), A.gen(xg(6)));
    CHECK_THROWS_AS((void)A.degree(mixed), HopfError);
    CHECK(A.degree(A.gen(zg(3))) == 3);
    CHECK(A.degree(A.zero()) == -1);
}

TEST_CASE("basis and poincare helpers agree") {
    Algebra A = make_algebra(Group::E8, Coeff::F5);
    auto d = poincare(A, A.top_degree());
    long total = 0;
    for (long v : d) total += v;
    CHECK(total == A.total_dim());
    CHECK(A.total_dim() == 1280);
    for (int deg = 0; deg <= 30; ++deg)
        CHECK(static_cast<long>(monomial_basis(A, deg).size()) == d[deg]);
}
