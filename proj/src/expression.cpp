#include "dq/expression.hpp"

#include <bit>
#include <cctype>
#include <limits>

namespace dq {
namespace {

struct Token {
    enum class Type { number, rational, identifier, symbol, end };
    Type type;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_blanks();
            const int line = line_, column = column_;
            if (pos_ >= text_.size()) {
                tokens.push_back({Token::Type::end, "", line, column});
                return tokens;
            }
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits = take_digits();
                if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                    std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                    advance();
                    digits += "/" + take_digits();
                    tokens.push_back({Token::Type::rational, digits, line, column});
                } else {
                    tokens.push_back({Token::Type::number, digits, line, column});
                }
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string ident;
                while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                    ident += text_[pos_];
                    advance();
                }
                tokens.push_back({Token::Type::identifier, ident, line, column});
            } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
                advance();
                tokens.push_back({Token::Type::symbol, std::string(1, c), line, column});
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line, column);
            }
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blanks() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    std::string take_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            advance();
        }
        return out;
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, const ParseContext& context) : tokens_(std::move(tokens)), context_(context) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek().type != Token::Type::end) fail("unexpected '" + peek().text + "'", peek());
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at_symbol(char c) const { return peek().type == Token::Type::symbol && peek().text[0] == c; }

    [[noreturn]] static void fail(const std::string& message, const Token& at) {
        throw ParseError(message, at.line, at.column);
    }

    void expect(char c) {
        if (!at_symbol(c)) {
            const Token& t = peek();
            fail(std::string("expected '") + c + "'" + (t.type == Token::Type::end ? " before end of input" : ""), t);
        }
        ++pos_;
    }

    static std::shared_ptr<Expr> node(Expr::Kind kind, const Token& at) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = at.line;
        e->column = at.column;
        return e;
    }

    static ExprPtr binary(Expr::Kind kind, const Token& at, ExprPtr lhs, ExprPtr rhs) {
        auto e = node(kind, at);
        e->children = {std::move(lhs), std::move(rhs)};
        return e;
    }

    unsigned uint_token(const Token& t, unsigned limit) {
        if (t.type != Token::Type::number) fail("expected a non-negative integer", t);
        if (t.text.size() > 9 || std::stoul(t.text) > limit) fail("integer " + t.text + " is too large", t);
        return static_cast<unsigned>(std::stoul(t.text));
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (at_symbol('+') || at_symbol('-')) {
            const Token& op = next();
            lhs = binary(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, op, lhs, term());
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (at_symbol('*') || at_symbol('/')) {
            const Token& op = next();
            lhs = binary(op.text == "*" ? Expr::Kind::mul : Expr::Kind::div, op, lhs, factor());
        }
        return lhs;
    }

    ExprPtr factor() {
        if (at_symbol('-')) {
            const Token& op = next();
            auto e = node(Expr::Kind::neg, op);
            e->children = {factor()};
            return e;
        }
        ExprPtr base = atom();
        if (!at_symbol('^')) return base;
        const Token& op = next();
        bool negative = false;
        if (at_symbol('-')) {
            negative = true;
            ++pos_;
        }
        const int e = static_cast<int>(uint_token(next(), 1u << 16));
        auto out = node(Expr::Kind::pow, op);
        out->exponent = negative ? -e : e;
        out->children = {base};
        return out;
    }

    ExprPtr atom() {
        const Token& t = next();
        switch (t.type) {
            case Token::Type::number:
            case Token::Type::rational: {
                auto e = node(Expr::Kind::rational, t);
                e->value = parse_rational(t.text);
                return e;
            }
            case Token::Type::identifier: return identifier(t);
            case Token::Type::symbol:
                if (t.text == "(") {
                    ExprPtr inner = expr();
                    expect(')');
                    return inner;
                }
                fail("unexpected '" + t.text + "'", t);
            case Token::Type::end: fail("unexpected end of input", t);
        }
        fail("unexpected token", t);
    }

    ExprPtr identifier(const Token& t) {
        const auto& s = context_.shape;
        if (t.text == "i") return node(Expr::Kind::imaginary, t);
        if (t.text == "hbar") return node(Expr::Kind::hbar, t);
        if (t.text == "theta") return node(Expr::Kind::theta, t);
        if (t.text == "gauss" || t.text == "phase") {
            auto e = node(Expr::Kind::weight, t);
            e->name = t.text;
            return e;
        }
        if (t.text == "e") {
            expect('(');
            bool negative = false;
            if (at_symbol('-')) {
                negative = true;
                ++pos_;
            }
            const int m = static_cast<int>(uint_token(next(), 1u << 16));
            expect(')');
            auto e = node(Expr::Kind::wave, t);
            e->exponent = negative ? -m : m;
            return e;
        }
        if (t.text == "psi") {
            if (context_.jet_domain == 0) fail("psi is not available without a representation", t);
            expect('(');
            std::vector<unsigned> idx{uint_token(next(), 1u << 16)};
            while (at_symbol(',')) {
                ++pos_;
                idx.push_back(uint_token(next(), 1u << 16));
            }
            expect(')');
            const auto arity = static_cast<size_t>(std::popcount(context_.jet_domain));
            if (idx.size() != arity)
                fail("psi takes " + std::to_string(arity) + " derivative order(s), got " + std::to_string(idx.size()), t);
            auto e = node(Expr::Kind::jet, t);
            e->alpha.assign(s.variable_count(), 0);
            size_t k = 0;
            for (int v = 0; v < s.variable_count(); ++v)
                if (in_domain(context_.jet_domain, v)) e->alpha[v] = idx[k++];
            return e;
        }
        if (auto var = s.index_of(t.text)) {
            auto e = node(Expr::Kind::variable, t);
            e->var = *var;
            return e;
        }
        fail("unknown variable '" + t.text + "' for the " + s.kind_name() + " chart of dimension " +
                 std::to_string(s.dim()),
             t);
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    const ParseContext& context_;
};

// c * hbar^k * e(m) with nothing else, or nullopt.
std::optional<std::pair<Coefficient, int>> as_unit(const Function& f) {
    if (f.terms().size() != 1 || f.weight()) return std::nullopt;
    const auto& [mono, c] = *f.terms().begin();
    if (mono.degree() != 0 || mono.theta_power != 0 || !mono.jets.empty() || !c.is_unit()) return std::nullopt;
    return std::pair{c, mono.theta_weight};
}

Function invert(const Function& f, const Expr& at) {
    auto unit = as_unit(f);
    if (!unit)
        throw ParseError("can only divide by or take negative powers of c*hbar^k*e(m), got " + to_string(f), at.line,
                         at.column);
    return unit->first.inverse() * Function::wave(f.shape(), -unit->second);
}

}  // namespace

ExprPtr parse_expression(std::string_view text, const ParseContext& context) {
    return Parser(Lexer(text).run(), context).parse();
}

Function lower(const ExprPtr& expr, const ParseContext& context) {
    const auto& s = context.shape;
    const Expr& e = *expr;
    auto child = [&](size_t k) { return lower(e.children.at(k), context); };
    switch (e.kind) {
        case Expr::Kind::rational: return Function::constant(s, Coefficient(GaussianRational(e.value)));
        case Expr::Kind::imaginary: return Function::constant(s, Coefficient::i());
        case Expr::Kind::hbar: return Function::constant(s, Coefficient::hbar());
        case Expr::Kind::variable: return Function::variable(s, e.var);
        case Expr::Kind::theta: return Function::theta(s);
        case Expr::Kind::jet: return Function::jet(s, context.jet_domain, e.alpha);
        case Expr::Kind::wave: return Function::wave(s, e.exponent);
        case Expr::Kind::weight: {
            WeightFactorPtr w;
            try {
                w = weight_by_id(e.name, s);
            } catch (const AlgebraError& err) {
                throw ParseError(err.what(), e.line, e.column);
            }
            return Function::constant(s, Coefficient(1)).with_weight(w);
        }
        case Expr::Kind::add: return child(0) + child(1);
        case Expr::Kind::sub: return child(0) - child(1);
        case Expr::Kind::mul: return child(0) * child(1);
        case Expr::Kind::div: return child(0) * invert(child(1), e);
        case Expr::Kind::neg: return -child(0);
        case Expr::Kind::pow: {
            Function base = child(0);
            if (e.exponent >= 0) return base.pow(static_cast<unsigned>(e.exponent));
            return invert(base, e).pow(static_cast<unsigned>(-e.exponent));
        }
    }
    throw AlgebraError("unknown expression node");
}

}  // namespace dq
