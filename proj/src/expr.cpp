#include "hopfring/expr.hpp"

#include <algorithm>
#include <cctype>

namespace hopf {

namespace {

ExprPtr mk(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

ExprPtr mk_unary(ExprNode::Op op, ExprPtr a) {
    ExprNode n;
    n.op = op;
    n.a = std::move(a);
    return mk(std::move(n));
}

ExprPtr mk_binary(ExprNode::Op op, ExprPtr a, ExprPtr b) {
    ExprNode n;
    n.op = op;
    n.a = std::move(a);
    n.b = std::move(b);
    return mk(std::move(n));
}

// Recursive descent over
//   sum     := product (('+' | '-') product)*
//   product := signed ('*' signed)*
//   signed  := '-' signed | atom
//   atom    := INT | GEN | 'C' '{' INT (',' INT)* '}'
//            | ('bock' | 'cop' | 'psi') '(' sum ')' | '(' sum ')'
// Binary '-' is sugar for adding a negated product.
struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void err(std::size_t at, const std::string& what) const {
        fail(HopfError::Kind::Syntax, what + " at byte " + std::to_string(at));
    }

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* ctx) {
        if (!eat(c)) err(pos, std::string("expected '") + c + "' " + ctx);
    }

    long read_int() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) err(start, "expected a number");
        return std::stol(s.substr(start, pos - start));
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        for (;;) {
            if (eat('+'))
                e = mk_binary(ExprNode::Op::Add, std::move(e), parse_product());
            else if (eat('-'))
                e = mk_binary(ExprNode::Op::Add, std::move(e),
                              mk_unary(ExprNode::Op::Neg, parse_product()));
            else
                return e;
        }
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_signed();
        while (eat('*')) e = mk_binary(ExprNode::Op::Mul, std::move(e), parse_signed());
        return e;
    }

    ExprPtr parse_signed() {
        if (eat('-')) return mk_unary(ExprNode::Op::Neg, parse_signed());
        return parse_atom();
    }

    ExprPtr parse_atom() {
        skip();
        if (pos >= s.size()) err(pos, "expected an expression");
        char c = s[pos];

        if (std::isdigit(static_cast<unsigned char>(c))) {
            ExprNode n;
            n.op = ExprNode::Op::Lit;
            n.lit = read_int();
            return mk(std::move(n));
        }

        if (c == '(') {
            ++pos;
            ExprPtr e = parse_sum();
            expect(')', "to close the group");
            return e;
        }

        if (std::isalpha(static_cast<unsigned char>(c))) return parse_word();

        err(pos, std::string("unexpected character '") + c + "'");
    }

    ExprPtr parse_word() {
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string word = s.substr(start, pos - start);

        if (word == "bock" || word == "cop" || word == "psi") {
            expect('(', "after the operator name");
            ExprPtr arg = parse_sum();
            expect(')', "to close the operator call");
            ExprNode::Op op = word == "bock" ? ExprNode::Op::Bock
                            : word == "cop"  ? ExprNode::Op::Cop
                                             : ExprNode::Op::Psi;
            return mk_unary(op, std::move(arg));
        }

        if (word == "C") {
            expect('{', "after C");
            ExprNode n;
            n.op = ExprNode::Op::CI;
            n.ci.prime = 0;  // resolved from the evaluation context
            n.ci.subs.push_back(static_cast<int>(read_int()));
            while (eat(',')) n.ci.subs.push_back(static_cast<int>(read_int()));
            expect('}', "to close the subscript set");
            return mk(std::move(n));
        }

        Family fam;
        if (word == "x")
            fam = Family::X;
        else if (word == "zeta")
            fam = Family::Zeta;
        else if (word == "rho")
            fam = Family::Rho;
        else
            err(start, "unknown symbol '" + word + "'");

        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            err(pos, "generator '" + word + "' needs a degree subscript");
        ExprNode n;
        n.op = ExprNode::Op::Gen;
        n.gen = {fam, static_cast<std::int16_t>(read_int())};
        return mk(std::move(n));
    }
};

// Formatting precedence levels: sums 1, products 2, signed/atoms 3. A child
// is parenthesized when its own level is below what its slot requires, and
// right operands require one more than the operator so that the reparse
// rebuilds the same left-leaning tree.
int level_of(const ExprNode& n) {
    switch (n.op) {
        case ExprNode::Op::Add: return 1;
        case ExprNode::Op::Mul: return 2;
        default: return 3;
    }
}

std::string fmt(const ExprPtr& e, int min_level) {
    std::string out;
    switch (e->op) {
        case ExprNode::Op::Lit: out = std::to_string(e->lit); break;
        case ExprNode::Op::Gen: out = e->gen.str(); break;
        case ExprNode::Op::CI: out = e->ci.str(); break;
        case ExprNode::Op::Add: {
            std::string lhs = fmt(e->a, 1);
            if (e->b->op == ExprNode::Op::Neg)
                out = lhs + " - " + fmt(e->b->a, 3);
            else
                out = lhs + " + " + fmt(e->b, 2);
            break;
        }
        case ExprNode::Op::Mul:
            out = fmt(e->a, 2) + "*" + fmt(e->b, 3);
            break;
        case ExprNode::Op::Neg: out = "-" + fmt(e->a, 3); break;
        case ExprNode::Op::Bock: return "bock(" + fmt(e->a, 1) + ")";
        case ExprNode::Op::Cop: return "cop(" + fmt(e->a, 1) + ")";
        case ExprNode::Op::Psi: return "psi(" + fmt(e->a, 1) + ")";
    }
    if (level_of(*e) < min_level) return "(" + out + ")";
    return out;
}

// --- mod-p / rational evaluation -------------------------------------------

ModpValue mp_scalar(Rat c) {
    ModpValue v;
    v.scalar = c;
    return v;
}

ModpValue mp_element(Element e) {
    ModpValue v;
    v.is_scalar = false;
    v.is_el = true;
    v.el = std::move(e);
    return v;
}

ModpValue mp_tensor(Tensor t) {
    ModpValue v;
    v.is_scalar = false;
    v.is_tens = true;
    v.tens = std::move(t);
    return v;
}

Element mp_as_element(const ModpValue& v, const Algebra& A) {
    if (v.is_tens)
        fail(HopfError::Kind::Syntax, "tensors admit only +, scalar *, and -");
    if (v.is_scalar) return A.scal(v.scalar, A.one());
    return v.el;
}

ModpValue mp_eval(const ExprPtr& e, const CatalogEntry& E, const Algebra& A,
                  const Hopf& H, int p) {
    switch (e->op) {
        case ExprNode::Op::Lit: return mp_scalar(Rat(e->lit));
        case ExprNode::Op::Gen: return mp_element(A.gen(e->gen));
        case ExprNode::Op::CI: {
            if (p == 0) return mp_element(A.zero());  // torsion dies rationally
            CRef c = e->ci;
            c.prime = p;
            return mp_element(E.class_CI(c).rp_image);
        }
        case ExprNode::Op::Add: {
            ModpValue a = mp_eval(e->a, E, A, H, p);
            ModpValue b = mp_eval(e->b, E, A, H, p);
            if (a.is_scalar && b.is_scalar) return mp_scalar(a.scalar + b.scalar);
            if (a.is_tens || b.is_tens) {
                auto lift = [&](const ModpValue& v) {
                    if (v.is_tens) return v.tens;
                    return t_outer(A, mp_as_element(v, A), A.one());
                };
                return mp_tensor(t_add(lift(a), lift(b)));
            }
            return mp_element(A.add(mp_as_element(a, A), mp_as_element(b, A)));
        }
        case ExprNode::Op::Mul: {
            ModpValue a = mp_eval(e->a, E, A, H, p);
            ModpValue b = mp_eval(e->b, E, A, H, p);
            if (a.is_scalar && b.is_scalar) return mp_scalar(a.scalar * b.scalar);
            if (a.is_scalar && b.is_tens) return mp_tensor(t_scal(a.scalar, b.tens));
            if (b.is_scalar && a.is_tens) return mp_tensor(t_scal(b.scalar, a.tens));
            return mp_element(A.mul(mp_as_element(a, A), mp_as_element(b, A)));
        }
        case ExprNode::Op::Neg: {
            ModpValue a = mp_eval(e->a, E, A, H, p);
            if (a.is_scalar) return mp_scalar(-a.scalar);
            if (a.is_tens) return mp_tensor(t_scal(Rat(-1), a.tens));
            return mp_element(A.scal(Rat(-1), a.el));
        }
        case ExprNode::Op::Bock:
            return mp_element(H.bockstein(mp_as_element(mp_eval(e->a, E, A, H, p), A)));
        case ExprNode::Op::Cop:
            return mp_tensor(H.coproduct(mp_as_element(mp_eval(e->a, E, A, H, p), A)));
        case ExprNode::Op::Psi:
            return mp_tensor(
                H.reduced_coproduct(mp_as_element(mp_eval(e->a, E, A, H, p), A)));
    }
    fail(HopfError::Kind::Syntax, "unreachable expression node");
}

// --- integral evaluation ----------------------------------------------------

IntValue iv_scalar(Rat c) {
    IntValue v;
    v.scalar = c;
    return v;
}

IntValue iv_element(IntegralElement e) {
    IntValue v;
    v.is_scalar = false;
    v.is_el = true;
    v.el = std::move(e);
    return v;
}

IntValue iv_tensor(IntegralTensorElement t) {
    IntValue v;
    v.is_scalar = false;
    v.is_tens = true;
    v.tens = std::move(t);
    return v;
}

IntegralElement iv_as_element(const IntValue& v, Group g) {
    if (v.is_tens)
        fail(HopfError::Kind::Syntax, "tensors admit only +, scalar *, and -");
    if (v.is_scalar) return int_scal(v.scalar, int_one(g));
    return v.el;
}

// C{...} names its prime implicitly: the one torsion prime whose pairing set
// e(G,p) contains every subscript. The esets of one group never share a
// subscript across primes, so this is unambiguous.
int ci_prime(const CatalogEntry& E, const std::vector<int>& subs) {
    for (const auto& a : E.data().modp) {
        bool all = true;
        for (int s : subs)
            if (std::find(a.eset.begin(), a.eset.end(), s) == a.eset.end()) all = false;
        if (all) return a.prime;
    }
    fail(HopfError::Kind::NotInE, "no torsion prime pairs all of the given subscripts");
}

IntValue iv_eval(const ExprPtr& e, Group g) {
    const CatalogEntry& E = entry(g);
    switch (e->op) {
        case ExprNode::Op::Lit: return iv_scalar(Rat(e->lit));
        case ExprNode::Op::Gen: return iv_element(embed(g, e->gen));
        case ExprNode::Op::CI: {
            CRef c = e->ci;
            c.prime = ci_prime(E, c.subs);
            return iv_element(embed(g, c));
        }
        case ExprNode::Op::Add: {
            IntValue a = iv_eval(e->a, g);
            IntValue b = iv_eval(e->b, g);
            if (a.is_scalar && b.is_scalar) return iv_scalar(a.scalar + b.scalar);
            if (a.is_tens || b.is_tens) {
                auto lift = [&](const IntValue& v) {
                    if (v.is_tens) return v.tens;
                    return it_outer(iv_as_element(v, g), int_one(g));
                };
                return iv_tensor(it_add(lift(a), lift(b)));
            }
            return iv_element(int_add(iv_as_element(a, g), iv_as_element(b, g)));
        }
        case ExprNode::Op::Mul: {
            IntValue a = iv_eval(e->a, g);
            IntValue b = iv_eval(e->b, g);
            if (a.is_scalar && b.is_scalar) return iv_scalar(a.scalar * b.scalar);
            if (a.is_scalar && b.is_tens) return iv_tensor(it_scal(a.scalar, b.tens));
            if (b.is_scalar && a.is_tens) return iv_tensor(it_scal(b.scalar, a.tens));
            return iv_element(int_multiply(iv_as_element(a, g), iv_as_element(b, g)));
        }
        case ExprNode::Op::Neg: {
            IntValue a = iv_eval(e->a, g);
            if (a.is_scalar) return iv_scalar(-a.scalar);
            if (a.is_tens) return iv_tensor(it_scal(Rat(-1), a.tens));
            return iv_element(int_scal(Rat(-1), a.el));
        }
        case ExprNode::Op::Bock:
            fail(HopfError::Kind::UnknownPair,
                 "the Bockstein needs a mod-p context; use --prime");
        case ExprNode::Op::Cop: {
            IntegralElement z = iv_as_element(iv_eval(e->a, g), g);
            IntegralTensorElement full = psi_integral(z, false);
            full = it_add(full, it_outer(z, int_one(g)));
            full = it_add(full, it_outer(int_one(g), z));
            return iv_tensor(full);
        }
        case ExprNode::Op::Psi:
            return iv_tensor(psi_integral(iv_as_element(iv_eval(e->a, g), g), false));
    }
    fail(HopfError::Kind::Syntax, "unreachable expression node");
}

} // namespace

ExprPtr parse_expr(const std::string& s) {
    Parser p{s};
    ExprPtr e = p.parse_sum();
    p.skip();
    if (p.pos != s.size()) p.err(p.pos, "trailing input");
    return e;
}

std::string format_expr(const ExprPtr& e) { return fmt(e, 0); }

ModpValue eval_modp(const ExprPtr& e, const CatalogEntry& E, int p) {
    const Algebra& A = p == 0 ? E.rational() : E.modp(p);
    return mp_eval(e, E, A, E.hopf(p), p);
}

IntValue eval_integral(const ExprPtr& e, Group g) { return iv_eval(e, g); }

} // namespace hopf
