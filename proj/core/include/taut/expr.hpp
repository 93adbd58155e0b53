#pragma once

#include "taut/algebra.hpp"
#include "taut/errors.hpp"

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace taut {

struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public InputError {
public:
    ParseError(SourcePos pos, const std::string& msg);
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

// Polynomial expression tree: sums, products, integer powers, rational
// literals and named symbols.
struct Expr {
    enum class Kind { Number, Symbol, Sum, Product, Power, Negate };
    Kind kind = Kind::Number;
    Rational number;
    std::string symbol;
    int exponent = 0;
    std::vector<std::shared_ptr<const Expr>> args;
    SourcePos pos;
};

using ExprPtr = std::shared_ptr<const Expr>;

bool is_identifier_start(char c);
bool is_identifier_char(char c);

// Parses the whole string; `origin` is the position of its first character.
ExprPtr parse_expr(const std::string& text, SourcePos origin = {});

using SymbolResolver = std::function<Element(const std::string&, SourcePos)>;
Element evaluate(const ExprPtr& e, const AlgebraPtr& alg, const SymbolResolver& resolve);
// Evaluates with the generators of alg as the only symbols.
Element evaluate_in(const ExprPtr& e, const AlgebraPtr& alg);
Element parse_element(const std::string& text, const AlgebraPtr& alg);

void collect_symbols(const ExprPtr& e, std::set<std::string>& out);
std::string to_string(const ExprPtr& e);

}  // namespace taut
