#include "taut/expr.hpp"

#include <cctype>

namespace taut {

ParseError::ParseError(SourcePos pos, const std::string& msg)
    : InputError(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg), pos_(pos)
{
}

bool is_identifier_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_identifier_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '|' || c == '\'';
}

namespace {

class Parser {
public:
    Parser(const std::string& text, SourcePos origin) : text_(text), pos_(origin) {}

    ExprPtr parse()
    {
        skip();
        if (at_end())
            fail("expected an expression");
        ExprPtr e = sum();
        skip();
        if (!at_end())
            fail(std::string("unexpected '") + text_[i_] + "'");
        return e;
    }

private:
    bool at_end() const { return i_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[i_]; }

    void advance()
    {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++i_;
    }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    ExprPtr node(Expr::Kind k, SourcePos p, std::vector<ExprPtr> args = {})
    {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->pos = p;
        e->args = std::move(args);
        return e;
    }

    ExprPtr sum()
    {
        SourcePos start = pos_;
        std::vector<ExprPtr> terms{term()};
        for (;;) {
            skip();
            char c = peek();
            if (c != '+' && c != '-')
                break;
            SourcePos p = pos_;
            advance();
            skip();
            ExprPtr t = term();
            terms.push_back(c == '-' ? node(Expr::Kind::Negate, p, {t}) : t);
        }
        return terms.size() == 1 ? terms.front() : node(Expr::Kind::Sum, start, std::move(terms));
    }

    ExprPtr term()
    {
        SourcePos start = pos_;
        std::vector<ExprPtr> factors{unary()};
        for (;;) {
            skip();
            char c = peek();
            if (c == '*') {
                advance();
                skip();
                factors.push_back(unary());
            } else if (c == '/') {
                advance();
                skip();
                SourcePos p = pos_;
                Integer den = integer();
                if (den == 0)
                    throw ParseError(p, "division by zero");
                auto n = std::make_shared<Expr>();
                n->kind = Expr::Kind::Number;
                n->number = Rational(Integer(1), den);
                n->pos = p;
                factors.push_back(n);
            } else {
                break;
            }
        }
        return factors.size() == 1 ? factors.front() : node(Expr::Kind::Product, start, std::move(factors));
    }

    ExprPtr unary()
    {
        skip();
        if (peek() == '-' || peek() == '+') {
            const bool neg = peek() == '-';
            SourcePos p = pos_;
            advance();
            if (++depth_ > 200)
                fail("expression nested too deeply");
            ExprPtr inner = unary();
            --depth_;
            return neg ? node(Expr::Kind::Negate, p, {inner}) : inner;
        }
        return power();
    }

    ExprPtr power()
    {
        ExprPtr base = primary();
        skip();
        if (peek() != '^')
            return base;
        SourcePos p = pos_;
        advance();
        skip();
        SourcePos q = pos_;
        Integer k = integer();
        if (k > 10000)
            throw ParseError(q, "exponent too large");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Power;
        e->exponent = static_cast<int>(k.get_si());
        e->args = {base};
        e->pos = p;
        return e;
    }

    Integer integer()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (digits.size() > 200)
            fail("integer literal too long");
        return Integer(digits);
    }

    ExprPtr primary()
    {
        skip();
        SourcePos p = pos_;
        char c = peek();
        if (c == '(') {
            advance();
            if (++depth_ > 200)
                fail("expression nested too deeply");
            ExprPtr e = sum();
            --depth_;
            skip();
            if (peek() != ')')
                fail("expected ')'");
            advance();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Number;
            e->number = Rational(integer());
            e->pos = p;
            return e;
        }
        if (is_identifier_start(c)) {
            std::string name;
            while (!at_end() && is_identifier_char(peek())) {
                name += peek();
                advance();
            }
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Symbol;
            e->symbol = name;
            e->pos = p;
            return e;
        }
        if (at_end())
            fail("unexpected end of expression");
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& text_;
    std::size_t i_ = 0;
    SourcePos pos_;
    int depth_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text, SourcePos origin)
{
    return Parser(text, origin).parse();
}

Element evaluate(const ExprPtr& e, const AlgebraPtr& alg, const SymbolResolver& resolve)
{
    switch (e->kind) {
    case Expr::Kind::Number:
        return Element::constant(alg, e->number);
    case Expr::Kind::Symbol: {
        Element v = resolve(e->symbol, e->pos);
        if (!v.is_zero() && v.algebra() != alg)
            throw ParseError(e->pos, "symbol '" + e->symbol + "' lives in another algebra");
        return v.is_zero() ? Element(alg) : v;
    }
    case Expr::Kind::Sum: {
        Element acc(alg);
        for (const auto& a : e->args)
            acc += evaluate(a, alg, resolve);
        return acc;
    }
    case Expr::Kind::Product: {
        Element acc = Element::constant(alg, 1);
        for (const auto& a : e->args)
            acc = acc * evaluate(a, alg, resolve);
        return acc;
    }
    case Expr::Kind::Power:
        return power(evaluate(e->args.front(), alg, resolve), e->exponent);
    case Expr::Kind::Negate:
        return -evaluate(e->args.front(), alg, resolve);
    }
    return Element(alg);
}

Element evaluate_in(const ExprPtr& e, const AlgebraPtr& alg)
{
    return evaluate(e, alg, [&](const std::string& name, SourcePos pos) {
        auto i = alg->index_of(name);
        if (!i)
            throw ParseError(pos, "unknown name '" + name + "'");
        return Element::generator(alg, *i);
    });
}

Element parse_element(const std::string& text, const AlgebraPtr& alg)
{
    return evaluate_in(parse_expr(text), alg);
}

void collect_symbols(const ExprPtr& e, std::set<std::string>& out)
{
    if (e->kind == Expr::Kind::Symbol)
        out.insert(e->symbol);
    for (const auto& a : e->args)
        collect_symbols(a, out);
}

std::string to_string(const ExprPtr& e)
{
    switch (e->kind) {
    case Expr::Kind::Number:
        return e->number.get_str();
    case Expr::Kind::Symbol:
        return e->symbol;
    case Expr::Kind::Sum: {
        std::string s;
        for (std::size_t i = 0; i < e->args.size(); ++i) {
            const auto& a = e->args[i];
            if (i && a->kind == Expr::Kind::Negate)
                s += " - " + to_string(a->args.front());
            else
                s += (i ? " + " : "") + to_string(a);
        }
        return "(" + s + ")";
    }
    case Expr::Kind::Product: {
        std::string s;
        for (std::size_t i = 0; i < e->args.size(); ++i)
            s += (i ? "*" : "") + to_string(e->args[i]);
        return s;
    }
    case Expr::Kind::Power:
        return to_string(e->args.front()) + "^" + std::to_string(e->exponent);
    case Expr::Kind::Negate:
        return "-" + to_string(e->args.front());
    }
    return "";
}

}  // namespace taut
