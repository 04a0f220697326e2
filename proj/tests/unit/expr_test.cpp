#include "doctest.h"

#include "hopfring/expr.hpp"

using namespace hopf;

namespace {

// Structural equality; shared_ptr identity is irrelevant.
bool same(const ExprPtr& a, const ExprPtr& b) {
    if (a->op != b->op) return false;
    switch (a->op) {
        case ExprNode::Op::Lit: return a->lit == b->lit;
        case ExprNode::Op::Gen: return a->gen == b->gen;
        case ExprNode::Op::CI: return a->ci.subs == b->ci.subs;
        case ExprNode::Op::Neg:
        case ExprNode::Op::Bock:
        case ExprNode::Op::Cop:
        case ExprNode::Op::Psi: return same(a->a, b->a);
        default: return same(a->a, b->a) && same(a->b, b->b);
    }
}

Element mp(const std::string& src, Group g, int p) {
    ModpValue v = eval_modp(parse_expr(src), entry(g), p);
    REQUIRE(v.is_el);
    return v.el;
}

} // namespace

TEST_CASE("precedence and shape") {
    auto e = parse_expr("-2*x6 + zeta5*zeta3");
    REQUIRE(e->op == ExprNode::Op::Add);
    REQUIRE(e->a->op == ExprNode::Op::Mul);
    CHECK(e->a->a->op == ExprNode::Op::Neg);     // unary minus binds tightest
    CHECK(e->a->a->a->lit == 2);
    CHECK(e->a->b->gen == xg(6));
    CHECK(e->b->op == ExprNode::Op::Mul);

    CHECK(same(parse_expr("x6 - zeta5"), parse_expr("x6 + -zeta5")));
    CHECK(same(parse_expr("x6"), parse_expr("((x6))")));
}

TEST_CASE("C tokens and operator calls") {
    auto e = parse_expr("psi(C{3,5} * x6)");
    REQUIRE(e->op == ExprNode::Op::Psi);
    REQUIRE(e->a->op == ExprNode::Op::Mul);
    CHECK(e->a->a->ci.subs == std::vector<int>{3, 5});

    CHECK(parse_expr("bock(zeta5)")->op == ExprNode::Op::Bock);
    CHECK(parse_expr("cop( zeta5 )")->op == ExprNode::Op::Cop);
}

TEST_CASE("syntax errors carry byte positions") {
    auto pos_of = [](const std::string& src) -> std::string {
        try {
            parse_expr(src);
        } catch (const HopfError& err) {
            CHECK(err.kind() == HopfError::Kind::Syntax);
            return err.what();
        }
        return "(no error)";
    };
    CHECK(pos_of("x6 + ").find("byte 5") != std::string::npos);
    CHECK(pos_of("foo").find("'foo'") != std::string::npos);
    CHECK(pos_of("(x6").find("byte 3") != std::string::npos);
    CHECK(pos_of("x6 zeta5").find("trailing") != std::string::npos);
    CHECK(pos_of("zeta").find("subscript") != std::string::npos);
    CHECK(pos_of("C{3,}").find("number") != std::string::npos);
}

TEST_CASE("format round-trips to an equal tree") {
    const char* corpus[] = {
        "x6",           "-x6",          "x6*zeta5",       "-2*x6 + zeta5*zeta3",
        "x6 - zeta5",   "(x6 + zeta5)*zeta3",             "C{3,5}",
        "psi(x6*zeta5)", "bock(cop(zeta5) + psi(zeta3))", "3*C{4} - x8",
        "-(x6 + zeta5)", "- -x6",
    };
    for (const char* src : corpus) {
        CAPTURE(src);
        auto e = parse_expr(src);
        auto round = parse_expr(format_expr(e));
        CHECK(same(e, round));
    }
}

TEST_CASE("mod-p evaluation") {
    const CatalogEntry& G2 = entry(Group::G2);
    const Algebra& A = G2.modp(2);

    CHECK(mp("x6*zeta5", Group::G2, 2) == A.mul(A.gen(xg(6)), A.gen(zg(5))));
    CHECK(mp("zeta3*zeta3", Group::G2, 2) == A.gen(xg(6)));  // the stated square
    CHECK(mp("x6*x6", Group::G2, 2).is_zero());
    CHECK(mp("bock(zeta5)", Group::G2, 2) == A.gen(xg(6)));
    CHECK(mp("C{3}", Group::G2, 2) == A.gen(xg(6)));  // r_2(C{3}) = beta(zeta5)

    CHECK_THROWS_WITH_AS(mp("x7", Group::G2, 2), doctest::Contains("x7"),
                         HopfError);

    ModpValue t = eval_modp(parse_expr("psi(zeta3*zeta5)"), G2, 2);
    REQUIRE(t.is_tens);
    CHECK(t.tens == G2.hopf(2).reduced_coproduct(
                        A.mul(A.gen(zg(3)), A.gen(zg(5)))));

    // Scalars fold until an op needs the algebra; 2 = 0 mod 2 once it lands.
    CHECK(mp("2*zeta3 + x6", Group::G2, 2) == A.gen(xg(6)));
    ModpValue s = eval_modp(parse_expr("2*3"), G2, 2);
    CHECK(s.is_scalar);
    CHECK(s.scalar == Rat(6));

    // Tensors admit +, scalar *, unary -; anything else is rejected.
    CHECK_THROWS_AS(eval_modp(parse_expr("cop(zeta5)*cop(zeta5)"), G2, 2),
                    HopfError);
    CHECK_THROWS_AS(eval_modp(parse_expr("bock(cop(zeta5))"), G2, 2), HopfError);
    ModpValue d = eval_modp(parse_expr("2*psi(zeta5) - psi(zeta5)"), G2, 2);
    REQUIRE(d.is_tens);
    CHECK(d.tens == G2.hopf(2).reduced_coproduct(A.gen(zg(5))));
}

TEST_CASE("odd prime coefficients survive") {
    const Algebra& A = entry(Group::F4).modp(3);
    CHECK(mp("zeta3*zeta7 + zeta7*zeta3", Group::F4, 3).is_zero());
    CHECK(mp("2*x8", Group::F4, 3) == A.scal(Rat(-1), A.gen(xg(8))));
}

TEST_CASE("rational context") {
    const Algebra& Q = entry(Group::G2).rational();
    CHECK(mp("rho3*rho11", Group::G2, 0) == Q.mul(Q.gen(rg(3)), Q.gen(rg(11))));
    CHECK(mp("C{3}", Group::G2, 0).is_zero());  // torsion dies rationally
    CHECK(mp("bock(rho3)", Group::G2, 0).is_zero());
}

TEST_CASE("integral evaluation") {
    IntValue v = eval_integral(parse_expr("rho3*rho3"), Group::G2);
    REQUIRE(v.is_el);
    CHECK(v.el == embed(Group::G2, xg(6)));  // rho3^2 = x6

    CHECK(int_is_zero(eval_integral(parse_expr("2*x6"), Group::G2).el));
    CHECK(eval_integral(parse_expr("C{3}"), Group::G2).el == embed(Group::G2, xg(6)));

    // C{4} at F4 sits at the odd prime; the subscript set picks p = 3.
    IntValue c4 = eval_integral(parse_expr("C{4}"), Group::F4);
    CHECK(c4.el == int_scal(Rat(-1), embed(Group::F4, xg(8))));
    CHECK_THROWS_AS(eval_integral(parse_expr("C{7}"), Group::F4), HopfError);

    // The stated E8 relation, spelled as expressions.
    IntValue lhs = eval_integral(parse_expr("x8*rho59"), Group::E8);
    IntValue rhs = eval_integral(parse_expr("x20*x20*C{4,10}"), Group::E8);
    CHECK(!int_is_zero(lhs.el));
    CHECK(lhs.el == rhs.el);

    CHECK_THROWS_AS(eval_integral(parse_expr("zeta5"), Group::G2), HopfError);
    CHECK_THROWS_AS(eval_integral(parse_expr("bock(x6)"), Group::G2), HopfError);

    IntValue t = eval_integral(parse_expr("psi(rho11)"), Group::G2);
    REQUIRE(t.is_tens);
    CHECK(t.tens == psi_integral(embed(Group::G2, rg(11)), false));

    // cop adds the primitive part back on.
    IntValue full = eval_integral(parse_expr("cop(x6)"), Group::G2);
    IntegralElement x6 = embed(Group::G2, xg(6));
    CHECK(full.tens == it_add(it_outer(x6, int_one(Group::G2)),
                              it_outer(int_one(Group::G2), x6)));
}
