#pragma once

#include "hopfring/integral.hpp"

#include <memory>

namespace hopf {

// Element expressions: integer literals, generator tokens (x6, zeta5,
// rho11, C{3,5}), + and *, unary -, parentheses, and the operator calls
// bock(e), cop(e), psi(e). Unary minus binds tightest, then *, then +.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Op { Lit, Gen, CI, Add, Mul, Neg, Bock, Cop, Psi };
    Op op = Op::Lit;
    long lit = 0;
    GenName gen{};
    CRef ci{};
    ExprPtr a, b;
};

// Throws Syntax with a byte position in the message.
ExprPtr parse_expr(const std::string& s);

// Round-trips: parse_expr(format_expr(e)) denotes the same expression.
std::string format_expr(const ExprPtr& e);

// Evaluation result: scalar until an op forces it into an algebra; element
// or 2-tensor afterwards. cop/psi produce tensors; tensors stay terminal
// apart from +, scalar *, and unary -.
struct ModpValue {
    Rat scalar = Rat(0);
    bool is_scalar = true;
    Element el;
    bool is_el = false;
    Tensor tens;
    bool is_tens = false;
};

ModpValue eval_modp(const ExprPtr& e, const CatalogEntry& E, int p);

struct IntValue {
    Rat scalar = Rat(0);
    bool is_scalar = true;
    IntegralElement el;
    bool is_el = false;
    IntegralTensorElement tens;
    bool is_tens = false;
};

IntValue eval_integral(const ExprPtr& e, Group g);

} // namespace hopf
