#include "wholo/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace wholo {

namespace {

struct Token {
    enum class Kind { End, Plus, Minus, Star, Slash, Caret, LParen, RParen, Int, Ident };
    Kind kind = Kind::End;
    std::string text;
    std::size_t offset = 0;  // 0-based byte offset of the first character
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& current() const { return token_; }

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        token_.offset = pos_;
        if (pos_ >= src_.size()) {
            token_.kind = Token::Kind::End;
            token_.text.clear();
            return;
        }
        char c = src_[pos_];
        switch (c) {
            case '+': single(Token::Kind::Plus); return;
            case '-': single(Token::Kind::Minus); return;
            case '*': single(Token::Kind::Star); return;
            case '/': single(Token::Kind::Slash); return;
            case '^': single(Token::Kind::Caret); return;
            case '(': single(Token::Kind::LParen); return;
            case ')': single(Token::Kind::RParen); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            token_.kind = Token::Kind::Int;
            token_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            token_.kind = Token::Kind::Ident;
            token_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "' at offset " +
                          std::to_string(pos_ + 1), pos_ + 1, "operator, name, number or '('");
    }

private:
    void single(Token::Kind kind) {
        token_.kind = kind;
        token_.text = std::string(1, src_[pos_]);
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token token_;
};

FormExprPtr make_node(FormExpr::Kind kind) {
    auto node = std::make_unique<FormExpr>();
    node->kind = kind;
    return node;
}

FormExprPtr make_binary(FormExpr::Kind kind, FormExprPtr lhs, FormExprPtr rhs) {
    auto node = make_node(kind);
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) {}

    FormExprPtr run() {
        FormExprPtr e = parse_expr();
        if (lexer_.current().kind != Token::Kind::End) {
            fail("end of input");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        const Token& tok = lexer_.current();
        std::string found = tok.kind == Token::Kind::End ? "end of input" : "'" + tok.text + "'";
        throw SyntaxError("syntax error at offset " + std::to_string(tok.offset + 1) +
                          ": expected " + expected + ", found " + found,
                          tok.offset + 1, expected);
    }

    bool accept(Token::Kind kind) {
        if (lexer_.current().kind != kind) return false;
        lexer_.advance();
        return true;
    }

    void expect(Token::Kind kind, const std::string& expected) {
        if (!accept(kind)) fail(expected);
    }

    FormExprPtr parse_expr() {
        FormExprPtr lhs = parse_term();
        while (true) {
            if (accept(Token::Kind::Plus)) {
                lhs = make_binary(FormExpr::Kind::Add, std::move(lhs), parse_term());
            } else if (accept(Token::Kind::Minus)) {
                lhs = make_binary(FormExpr::Kind::Sub, std::move(lhs), parse_term());
            } else {
                return lhs;
            }
        }
    }

    FormExprPtr parse_term() {
        FormExprPtr lhs = parse_factor();
        while (true) {
            if (accept(Token::Kind::Star)) {
                lhs = make_binary(FormExpr::Kind::Mul, std::move(lhs), parse_factor());
            } else if (accept(Token::Kind::Slash)) {
                lhs = make_binary(FormExpr::Kind::Div, std::move(lhs), parse_factor());
            } else {
                return lhs;
            }
        }
    }

    FormExprPtr parse_factor() {
        if (accept(Token::Kind::Minus)) {
            auto node = make_node(FormExpr::Kind::Neg);
            node->lhs = parse_factor();
            return node;
        }
        FormExprPtr base = parse_atom();
        if (accept(Token::Kind::Caret)) {
            bool negative = accept(Token::Kind::Minus);
            const Token& tok = lexer_.current();
            if (tok.kind != Token::Kind::Int) fail("integer exponent");
            long e = parse_long(tok.text, tok.offset);
            lexer_.advance();
            auto node = make_node(FormExpr::Kind::Pow);
            node->exponent = negative ? -e : e;
            node->lhs = std::move(base);
            return node;
        }
        return base;
    }

    long parse_long(const std::string& digits, std::size_t offset) {
        if (digits.size() > 6) {
            throw SyntaxError("exponent too large at offset " + std::to_string(offset + 1),
                              offset + 1, "exponent with at most 6 digits");
        }
        return std::stol(digits);
    }

    FormExprPtr parse_atom() {
        const Token tok = lexer_.current();
        switch (tok.kind) {
            case Token::Kind::Int: {
                lexer_.advance();
                auto node = make_node(FormExpr::Kind::IntLiteral);
                node->literal = Integer(tok.text);
                return node;
            }
            case Token::Kind::LParen: {
                lexer_.advance();
                FormExprPtr inner = parse_expr();
                expect(Token::Kind::RParen, "')'");
                return inner;
            }
            case Token::Kind::Ident:
                lexer_.advance();
                return parse_generator(tok);
            default:
                fail("generator, number, '-' or '('");
        }
    }

    FormExprPtr parse_generator(const Token& tok) {
        const std::string& name = tok.text;
        if (name == "Delta") return make_node(FormExpr::Kind::Delta);
        if (name == "j") return make_node(FormExpr::Kind::J);
        if (name == "Theta") {
            expect(Token::Kind::LParen, "'(' after Theta");
            auto node = make_node(FormExpr::Kind::Theta);
            node->lhs = parse_expr();
            expect(Token::Kind::RParen, "')'");
            return node;
        }
        if (name.size() >= 2 && name[0] == 'E' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            if (name.size() > 4) {
                throw UnknownGenerator("unknown generator '" + name + "' at offset " +
                                       std::to_string(tok.offset + 1), tok.offset + 1);
            }
            long k = std::stol(name.substr(1));
            if (k < 2 || k % 2 != 0) {
                throw UnknownGenerator("unknown generator '" + name + "' at offset " +
                                       std::to_string(tok.offset + 1) +
                                       " (Eisenstein weights are even and >= 2)",
                                       tok.offset + 1);
            }
            auto node = make_node(FormExpr::Kind::Eisenstein);
            node->eisenstein_k = k;
            return node;
        }
        throw UnknownGenerator("unknown generator '" + name + "' at offset " +
                               std::to_string(tok.offset + 1), tok.offset + 1);
    }

    Lexer lexer_;
};

}  // namespace

FormExprPtr parse(std::string_view text) {
    return Parser(text).run();
}

WeightInfo infer_weight(const FormExpr& e) {
    switch (e.kind) {
        case FormExpr::Kind::Eisenstein:
            if (e.eisenstein_k == 2) {
                return {std::nullopt, {"E2 is not modular (quasi-modular weight 2)"}};
            }
            return {e.eisenstein_k, {}};
        case FormExpr::Kind::Delta:
            return {12, {}};
        case FormExpr::Kind::J:
            return {0, {}};
        case FormExpr::Kind::IntLiteral:
            return {0, {}};
        case FormExpr::Kind::Neg:
            return infer_weight(*e.lhs);
        case FormExpr::Kind::Add:
        case FormExpr::Kind::Sub: {
            WeightInfo a = infer_weight(*e.lhs);
            WeightInfo b = infer_weight(*e.rhs);
            WeightInfo out{std::nullopt, std::move(a.diagnostics)};
            out.diagnostics.insert(out.diagnostics.end(), b.diagnostics.begin(),
                                   b.diagnostics.end());
            if (a.weight && b.weight) {
                if (*a.weight == *b.weight) {
                    out.weight = a.weight;
                } else {
                    out.diagnostics.push_back(
                        "weight mismatch in sum: " + std::to_string(*a.weight) + " vs " +
                        std::to_string(*b.weight));
                }
            }
            return out;
        }
        case FormExpr::Kind::Mul:
        case FormExpr::Kind::Div: {
            WeightInfo a = infer_weight(*e.lhs);
            WeightInfo b = infer_weight(*e.rhs);
            WeightInfo out{std::nullopt, std::move(a.diagnostics)};
            out.diagnostics.insert(out.diagnostics.end(), b.diagnostics.begin(),
                                   b.diagnostics.end());
            if (a.weight && b.weight) {
                out.weight = e.kind == FormExpr::Kind::Mul ? *a.weight + *b.weight
                                                           : *a.weight - *b.weight;
            }
            return out;
        }
        case FormExpr::Kind::Pow: {
            WeightInfo a = infer_weight(*e.lhs);
            if (a.weight) a.weight = *a.weight * e.exponent;
            return a;
        }
        case FormExpr::Kind::Theta: {
            WeightInfo a = infer_weight(*e.lhs);
            if (a.weight && *a.weight == 0) {
                a.weight = 2;
            } else {
                if (a.weight) {
                    a.diagnostics.push_back("Theta of weight " + std::to_string(*a.weight) +
                                            " is not modular (only weight 0 maps to weight 2)");
                }
                a.weight = std::nullopt;
            }
            return a;
        }
    }
    throw Error("infer_weight: unreachable");
}

namespace {

QExpansion eval_node(const FormExpr& e, long work) {
    switch (e.kind) {
        case FormExpr::Kind::Eisenstein:
            return eisenstein(e.eisenstein_k, work).series;
        case FormExpr::Kind::Delta:
            return delta(std::max(work, 2L)).series;
        case FormExpr::Kind::J:
            return j_invariant(std::max(work, 0L)).series;
        case FormExpr::Kind::IntLiteral:
            return QExpansion::monomial(Rational(e.literal), 0, work);
        case FormExpr::Kind::Neg:
            return neg(eval_node(*e.lhs, work));
        case FormExpr::Kind::Add:
            return add(eval_node(*e.lhs, work), eval_node(*e.rhs, work));
        case FormExpr::Kind::Sub:
            return sub(eval_node(*e.lhs, work), eval_node(*e.rhs, work));
        case FormExpr::Kind::Mul:
            return mul(eval_node(*e.lhs, work), eval_node(*e.rhs, work));
        case FormExpr::Kind::Div:
            return mul(eval_node(*e.lhs, work), inv(eval_node(*e.rhs, work)));
        case FormExpr::Kind::Pow: {
            QExpansion base = eval_node(*e.lhs, work);
            if (e.exponent >= 0) return pow(base, e.exponent);
            return pow(inv(base), -e.exponent);
        }
        case FormExpr::Kind::Theta:
            return theta(eval_node(*e.lhs, work));
    }
    throw Error("evaluate: unreachable");
}

// Rough bound on precision lost through inversions and powers, used to seed
// the working precision before the retry loop.
long loss_estimate(const FormExpr& e) {
    switch (e.kind) {
        case FormExpr::Kind::Eisenstein:
        case FormExpr::Kind::Delta:
        case FormExpr::Kind::IntLiteral:
            return 0;
        case FormExpr::Kind::J:
            return 2;
        case FormExpr::Kind::Neg:
        case FormExpr::Kind::Theta:
            return loss_estimate(*e.lhs);
        case FormExpr::Kind::Add:
        case FormExpr::Kind::Sub:
        case FormExpr::Kind::Mul:
        case FormExpr::Kind::Div:
            return loss_estimate(*e.lhs) + loss_estimate(*e.rhs) + 2;
        case FormExpr::Kind::Pow:
            return (std::abs(e.exponent) + 1) * (loss_estimate(*e.lhs) + 1);
    }
    return 4;
}

}  // namespace

ModularExpansion evaluate(const FormExpr& e, long prec) {
    std::optional<long> weight = infer_weight(e).weight;
    long work = prec + std::min(loss_estimate(e), 512L) + 2;
    for (int attempt = 0; attempt < 64; ++attempt) {
        QExpansion result = eval_node(e, work);
        if (result.prec() >= prec) {
            return {truncate(result, prec), weight};
        }
        work += (prec - result.prec()) + 2;
    }
    throw Error("evaluate: precision retry failed to converge");
}

ModularExpansion evaluate(std::string_view text, long prec) {
    FormExprPtr e = parse(text);
    return evaluate(*e, prec);
}

namespace {

int node_precedence(const FormExpr& e) {
    switch (e.kind) {
        case FormExpr::Kind::Add:
        case FormExpr::Kind::Sub:
            return 1;
        case FormExpr::Kind::Mul:
        case FormExpr::Kind::Div:
            return 2;
        case FormExpr::Kind::Neg:
            return 3;
        case FormExpr::Kind::Pow:
            return 4;
        default:
            return 5;
    }
}

void render_into(const FormExpr& e, std::string& out);

void render_child(const FormExpr& child, int parent_prec, bool needs_paren_on_tie,
                  std::string& out) {
    bool parens = node_precedence(child) < parent_prec ||
                  (needs_paren_on_tie && node_precedence(child) == parent_prec);
    if (parens) out += '(';
    render_into(child, out);
    if (parens) out += ')';
}

void render_into(const FormExpr& e, std::string& out) {
    switch (e.kind) {
        case FormExpr::Kind::Eisenstein:
            out += "E" + std::to_string(e.eisenstein_k);
            return;
        case FormExpr::Kind::Delta:
            out += "Delta";
            return;
        case FormExpr::Kind::J:
            out += "j";
            return;
        case FormExpr::Kind::IntLiteral:
            out += e.literal.get_str();
            return;
        case FormExpr::Kind::Neg:
            out += '-';
            render_child(*e.lhs, 3, false, out);
            return;
        case FormExpr::Kind::Add:
            render_child(*e.lhs, 1, false, out);
            out += " + ";
            render_child(*e.rhs, 1, true, out);
            return;
        case FormExpr::Kind::Sub:
            render_child(*e.lhs, 1, false, out);
            out += " - ";
            render_child(*e.rhs, 1, true, out);
            return;
        case FormExpr::Kind::Mul:
            render_child(*e.lhs, 2, false, out);
            out += "*";
            render_child(*e.rhs, 2, true, out);
            return;
        case FormExpr::Kind::Div:
            render_child(*e.lhs, 2, false, out);
            out += "/";
            render_child(*e.rhs, 2, true, out);
            return;
        case FormExpr::Kind::Pow:
            // The grammar only powers atoms; anything lower-precedence needs parens.
            render_child(*e.lhs, 5, false, out);
            out += "^" + std::to_string(e.exponent);
            return;
        case FormExpr::Kind::Theta:
            out += "Theta(";
            render_into(*e.lhs, out);
            out += ')';
            return;
    }
}

}  // namespace

std::string render(const FormExpr& e) {
    std::string out;
    render_into(e, out);
    return out;
}

}  // namespace wholo
