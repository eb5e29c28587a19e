#pragma once

#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tfc/specfun.hpp"
#include "tfc/types.hpp"

namespace tfc::expr {

/// Abstract syntax tree over: literals (real or imaginary-suffixed), the
/// variable t, binary {+,-,*,/,^}, unary minus, and the calls exp, pow,
/// ml3. Power exponents are constants: the grammar admits only literal
/// towers after '^', and compile() rejects t-dependent pow/ml3 parameters.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { literal, variable, negate, binary, call };

    Kind kind = Kind::literal;
    ComplexScalar value{0.0, 0.0};  // literal
    char op = 0;                    // binary operator
    std::string callee;             // call name
    std::vector<ExprPtr> args;

    static ExprPtr literal(ComplexScalar v) {
        auto e = std::make_shared<Expr>();
        e->value = v;
        return e;
    }
    static ExprPtr variable() {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::variable;
        return e;
    }
    static ExprPtr negate(ExprPtr a) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::negate;
        e->args = {std::move(a)};
        return e;
    }
    static ExprPtr binary(char op, ExprPtr a, ExprPtr b) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::binary;
        e->op = op;
        e->args = {std::move(a), std::move(b)};
        return e;
    }
    static ExprPtr call(std::string name, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::call;
        e->callee = std::move(name);
        e->args = std::move(args);
        return e;
    }
};

namespace detail {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(std::size_t at, const std::string& expected) {
        std::ostringstream os;
        os << "parse error at offset " << at << ": expected " << expected;
        throw ParseError(at, expected, os.str());
    }

    bool peek_char(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept_char(char c) {
        if (peek_char(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect_char(char c, const char* what) {
        if (!accept_char(c)) fail(pos, what);
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    // expr := term (('+'|'-') term)*
    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            if (accept_char('+')) {
                lhs = Expr::binary('+', lhs, parse_term());
            } else if (accept_char('-')) {
                lhs = Expr::binary('-', lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    // term := factor (('*'|'/') factor)*
    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            if (accept_char('*')) {
                lhs = Expr::binary('*', lhs, parse_factor());
            } else if (accept_char('/')) {
                lhs = Expr::binary('/', lhs, parse_factor());
            } else {
                return lhs;
            }
        }
    }

    // factor := unary ('^' exponent)?   with exponent := literal ('^' exponent)?
    ExprPtr parse_factor() {
        ExprPtr base = parse_unary();
        if (accept_char('^')) {
            return Expr::binary('^', base, parse_exponent());
        }
        return base;
    }

    // Exponents are (signed) literals only; towers associate to the right.
    ExprPtr parse_exponent() {
        skip_ws();
        bool neg = accept_char('-');
        skip_ws();
        std::size_t at = pos;
        if (pos >= text.size() ||
            !(std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
              text[pos] == 'i'))
            fail(at, "numeric literal exponent");
        ExprPtr lit = parse_literal();
        if (neg) lit = Expr::negate(lit);
        if (accept_char('^')) {
            return Expr::binary('^', lit, parse_exponent());
        }
        return lit;
    }

    // unary := '-'? atom
    ExprPtr parse_unary() {
        if (accept_char('-')) return Expr::negate(parse_unary());
        return parse_atom();
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail(pos, "literal, 't', call, or '('");
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_literal();
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_expr();
            expect_char(')', "')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        fail(pos, "literal, 't', call, or '('");
    }

    ExprPtr parse_literal() {
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && text[pos] == 'i' &&
            !(pos + 1 < text.size() && std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
            ++pos;
            return Expr::literal({0.0, 1.0});
        }
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
            ++pos;
        if (pos == start) fail(start, "numeric literal");
        // exponent part: e or E followed by optional sign and digits
        if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
            std::size_t mark = pos + 1;
            if (mark < text.size() && (text[mark] == '+' || text[mark] == '-')) ++mark;
            if (mark < text.size() && std::isdigit(static_cast<unsigned char>(text[mark]))) {
                pos = mark;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
            }
        }
        double v = 0.0;
        try {
            v = std::stod(text.substr(start, pos - start));
        } catch (...) {
            fail(start, "numeric literal");
        }
        if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            return Expr::literal({0.0, v});
        }
        return Expr::literal({v, 0.0});
    }

    ExprPtr parse_name() {
        const std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string name = text.substr(start, pos - start);
        if (name == "t") return Expr::variable();
        if (name == "i") return Expr::literal({0.0, 1.0});
        if (name == "exp" || name == "pow" || name == "ml3") {
            expect_char('(', "'(' after function name");
            std::vector<ExprPtr> args;
            args.push_back(parse_expr());
            while (accept_char(',')) args.push_back(parse_expr());
            expect_char(')', "')'");
            const std::size_t want = name == "exp" ? 1 : name == "pow" ? 2 : 4;
            if (args.size() != want) {
                std::ostringstream os;
                os << want << " argument(s) to " << name;
                fail(start, os.str());
            }
            return Expr::call(name, std::move(args));
        }
        fail(start, "'t', 'i', 'exp', 'pow', or 'ml3'");
    }
};

inline bool contains_variable(const ExprPtr& e) {
    if (e->kind == Expr::Kind::variable) return true;
    for (const auto& a : e->args) {
        if (contains_variable(a)) return true;
    }
    return false;
}

inline ComplexScalar eval_node(const Expr& e, double t) {
    switch (e.kind) {
        case Expr::Kind::literal:
            return e.value;
        case Expr::Kind::variable:
            return {t, 0.0};
        case Expr::Kind::negate:
            return -eval_node(*e.args[0], t);
        case Expr::Kind::binary: {
            const ComplexScalar a = eval_node(*e.args[0], t);
            const ComplexScalar b = eval_node(*e.args[1], t);
            switch (e.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': {
                    if (a == ComplexScalar{0.0, 0.0} && b.real() <= 0.0)
                        throw EvalError("0 raised to a non-positive power");
                    return cpow(a, b);
                }
            }
            throw EvalError("unknown operator");
        }
        case Expr::Kind::call: {
            if (e.callee == "exp") return std::exp(eval_node(*e.args[0], t));
            if (e.callee == "pow") {
                const ComplexScalar base = eval_node(*e.args[0], t);
                const ComplexScalar ex = eval_node(*e.args[1], t);
                if (base == ComplexScalar{0.0, 0.0} && ex.real() <= 0.0)
                    throw EvalError("pow: 0 raised to a non-positive power");
                return cpow(base, ex);
            }
            // ml3(mu, nu, gammap, omega)(t) = t^{nu-1} E^{gammap}_{mu,nu}(omega t^mu)
            const ComplexScalar mu = eval_node(*e.args[0], t);
            const ComplexScalar nu = eval_node(*e.args[1], t);
            const ComplexScalar gp = eval_node(*e.args[2], t);
            const ComplexScalar om = eval_node(*e.args[3], t);
            if (t < 0.0) throw EvalError("ml3 kernel requires t >= 0");
            const ComplexScalar arg = om * cpow(t, mu);
            return cpow(t, nu - 1.0) * specfun::mittag_leffler3(mu, nu, gp, arg);
        }
    }
    throw EvalError("malformed expression node");
}

inline void pretty_node(const Expr& e, std::ostream& os, int parent_prec) {
    auto prec_of = [](const Expr& n) {
        switch (n.kind) {
            case Expr::Kind::binary:
                return n.op == '+' || n.op == '-' ? 1 : n.op == '^' ? 3 : 2;
            case Expr::Kind::negate:
                return 1;
            default:
                return 4;
        }
    };
    const int prec = prec_of(e);
    const bool parens = prec < parent_prec;
    if (parens) os << '(';
    switch (e.kind) {
        case Expr::Kind::literal: {
            if (e.value.imag() == 0.0) {
                os << e.value.real();
            } else if (e.value.real() == 0.0) {
                os << e.value.imag() << 'i';
            } else {
                os << '(' << e.value.real() << '+' << e.value.imag() << "i)";
            }
            break;
        }
        case Expr::Kind::variable:
            os << 't';
            break;
        case Expr::Kind::negate:
            os << '-';
            pretty_node(*e.args[0], os, 2);
            break;
        case Expr::Kind::binary:
            if (e.op == '^') {
                // exponents are literal towers; print them bare so the
                // literal-only exponent grammar can reparse them
                pretty_node(*e.args[0], os, prec + 1);
                os << e.op;
                pretty_node(*e.args[1], os, 0);
            } else {
                pretty_node(*e.args[0], os, prec);
                os << e.op;
                pretty_node(*e.args[1], os, prec + 1);
            }
            break;
        case Expr::Kind::call: {
            os << e.callee << '(';
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i) os << ',';
                pretty_node(*e.args[i], os, 0);
            }
            os << ')';
            break;
        }
    }
    if (parens) os << ')';
}

}  // namespace detail

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := unary ('^' literal)?        ('^' right-associative, literal towers)
///   unary  := '-'? atom
///   atom   := literal | 't' | call | '(' expr ')'
///   call   := ('exp'|'pow'|'ml3') '(' expr {',' expr} ')'
/// Imaginary literals carry an 'i' suffix (e.g. 3+2i). Whitespace is free.
/// Malformed input raises ParseError with the byte offset and expected set.
inline ExprPtr parse(const std::string& text) {
    detail::Parser p(text);
    ExprPtr e = p.parse_expr();
    if (!p.at_end()) p.fail(p.pos, "end of input or operator");
    return e;
}

/// Canonical rendering; parse followed by pretty is idempotent.
inline std::string pretty(const ExprPtr& e) {
    std::ostringstream os;
    detail::pretty_node(*e, os, 0);
    return os.str();
}

/// Compiles the tree into a FunctionHandle on `domain`. The regularity is
/// caller-asserted, not inferred. Evaluation errors (division blow-ups,
/// zero to a negative power) surface lazily as EvalError at call time, and
/// non-finite results never escape silently.
inline FunctionHandle compile(const ExprPtr& e, Interval domain,
                              Regularity regularity_claim = Regularity::smooth(),
                              double left_exponent = 0.0) {
    if (!e) throw DomainError("compile requires a parsed expression");
    // pow and ml3 parameters (and ^ exponents via the grammar) are constants
    struct Walker {
        static void check(const Expr& n) {
            if (n.kind == Expr::Kind::binary && n.op == '^' &&
                detail::contains_variable(n.args[1]))
                throw DomainError("'^' exponents must not depend on t");
            if (n.kind == Expr::Kind::call && n.callee == "pow" &&
                detail::contains_variable(n.args[1]))
                throw DomainError("pow() exponents must not depend on t");
            if (n.kind == Expr::Kind::call && n.callee == "ml3") {
                for (const auto& a : n.args) {
                    if (detail::contains_variable(a))
                        throw DomainError("ml3() parameters must not depend on t");
                }
            }
            for (const auto& a : n.args) check(*a);
        }
    };
    Walker::check(*e);

    auto fn = [e](double t) {
        const ComplexScalar v = detail::eval_node(*e, t);
        if (!is_finite(v)) throw EvalError("expression evaluated to a non-finite value");
        return v;
    };
    return FunctionHandle(fn, domain, regularity_claim, left_exponent);
}

}  // namespace tfc::expr
