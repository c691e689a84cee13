#include "rhoform/parser.hpp"

#include <cctype>

#include "rhoform/errors.hpp"

namespace rhoform {

namespace {

struct Token {
    enum class Kind { Integer, Ident, Plus, Minus, Star, Slash, Caret, Wedge, LParen, RParen, End };
    Kind kind;
    long value = 0;
    std::string text;
    int line = 1;
    int col = 1;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::Integer: return "integer";
        case Token::Kind::Ident: return "identifier";
        case Token::Kind::Plus: return "'+'";
        case Token::Kind::Minus: return "'-'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::Slash: return "'/'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::Wedge: return "'/\\'";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_.line = line_;
        current_.col = col_;
        current_.text.clear();
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        auto one = [&](Token::Kind k) {
            current_.kind = k;
            ++pos_;
            ++col_;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++col_;
            }
            current_.kind = Token::Kind::Integer;
            current_.text = text_.substr(start, pos_ - start);
            current_.value = std::stol(current_.text);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            current_.kind = Token::Kind::Ident;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        switch (c) {
            case '+': one(Token::Kind::Plus); return;
            case '-': one(Token::Kind::Minus); return;
            case '*': one(Token::Kind::Star); return;
            case '^': one(Token::Kind::Caret); return;
            case '(': one(Token::Kind::LParen); return;
            case ')': one(Token::Kind::RParen); return;
            case '/':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\\') {
                    current_.kind = Token::Kind::Wedge;
                    pos_ += 2;
                    col_ += 2;
                } else {
                    one(Token::Kind::Slash);
                }
                return;
            default:
                throw Error(ErrorKind::SyntaxError,
                            "unexpected character '" + std::string(1, c) + "'", line_, col_);
        }
    }
};

[[noreturn]] void syntax_error(const Token& got, const std::string& expected) {
    throw Error(ErrorKind::SyntaxError,
                "expected " + expected + ", got " + token_name(got.kind) +
                    (got.text.empty() ? "" : " '" + got.text + "'") + " at " +
                    std::to_string(got.line) + ":" + std::to_string(got.col),
                got.line, got.col);
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = expression();
        if (lex_.peek().kind != Token::Kind::End)
            syntax_error(lex_.peek(), "'+', '-', '*', '/', '/\\', '^' or end of input");
        return e;
    }

private:
    Lexer lex_;

    static ExprPtr node(Expr::Kind k, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    // expression := addend (('+' | '-') addend)*
    ExprPtr expression() {
        ExprPtr e = addend();
        while (true) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Plus) {
                lex_.take();
                e = node(Expr::Kind::Add, e, addend());
            } else if (k == Token::Kind::Minus) {
                lex_.take();
                e = node(Expr::Kind::Sub, e, addend());
            } else {
                return e;
            }
        }
    }

    // addend := '-' addend | product   (unary minus binds below products)
    ExprPtr addend() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            return node(Expr::Kind::Neg, addend());
        }
        return product();
    }

    // product := power (('*' | '/' | '/\') power)*
    ExprPtr product() {
        ExprPtr e = power();
        while (true) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Star) {
                lex_.take();
                e = node(Expr::Kind::Mul, e, power());
            } else if (k == Token::Kind::Slash) {
                lex_.take();
                e = node(Expr::Kind::Div, e, power());
            } else if (k == Token::Kind::Wedge) {
                lex_.take();
                e = node(Expr::Kind::Wedge, e, power());
            } else {
                return e;
            }
        }
    }

    // power := atom ('^' ['-'] integer)?
    ExprPtr power() {
        ExprPtr base = atom();
        if (lex_.peek().kind != Token::Kind::Caret) return base;
        lex_.take();
        bool negative = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            negative = true;
        }
        if (lex_.peek().kind != Token::Kind::Integer)
            syntax_error(lex_.peek(), "an integer exponent");
        Token t = lex_.take();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Pow;
        e->lhs = std::move(base);
        e->integer = negative ? -t.value : t.value;
        return e;
    }

    ExprPtr atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::Integer: {
                Token tk = lex_.take();
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::Integer;
                e->integer = tk.value;
                return e;
            }
            case Token::Kind::LParen: {
                lex_.take();
                ExprPtr e = expression();
                if (lex_.peek().kind != Token::Kind::RParen) syntax_error(lex_.peek(), "')'");
                lex_.take();
                return e;
            }
            case Token::Kind::Ident: {
                Token tk = lex_.take();
                if (tk.text == "q") return node(Expr::Kind::QSymbol);
                if (tk.text == "eps") return node(Expr::Kind::EpsSymbol);
                if (tk.text == "d" && lex_.peek().kind == Token::Kind::LParen) {
                    lex_.take();
                    ExprPtr inner = expression();
                    if (lex_.peek().kind != Token::Kind::RParen) syntax_error(lex_.peek(), "')'");
                    lex_.take();
                    return node(Expr::Kind::Diff, inner);
                }
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::Generator;
                e->name = tk.text;
                return e;
            }
            default:
                syntax_error(t, "an integer, identifier, 'd(', '-' or '('");
        }
    }
};

} // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

Form parse_and_eval(const std::string& text, const EvalContext& ctx) {
    return evaluate(*parse_expr(text), ctx);
}

Scalar parse_scalar(const std::string& text, int eps_order) {
    // evaluate over a throwaway one-generator presentation; generators are
    // rejected because the value must be a scalar
    static const PresentationPtr dummy = AlgebraPresentation::quantum_plane(1);
    EvalContext ctx{dummy, GradedUnitHom::trivial(dummy->group()), eps_order};
    Form f = parse_and_eval(text, ctx);
    if (!f.is_element() || !f.to_element().is_scalar())
        fail(ErrorKind::BadArgument, "expected a scalar expression: " + text);
    return f.to_element().scalar_part();
}

GradeGroup parse_grade_group(const std::string& text) {
    int free_rank = 0;
    std::vector<int> torsion;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t plus = text.find('+', pos);
        std::string piece = text.substr(pos, plus == std::string::npos ? plus : plus - pos);
        if (piece == "Z") {
            free_rank += 1;
        } else if (piece.rfind("Z^", 0) == 0) {
            free_rank += std::stoi(piece.substr(2));
        } else if (piece.size() > 1 && piece[0] == 'Z' &&
                   piece.find_first_not_of("0123456789", 1) == std::string::npos) {
            torsion.push_back(std::stoi(piece.substr(1)));
        } else {
            fail(ErrorKind::BadArgument, "bad group spec piece '" + piece + "' in " + text);
        }
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return GradeGroup(free_rank, std::move(torsion));
}

Grade parse_grade(const std::string& text, const GradeGroup& group) {
    std::vector<long> comps;
    size_t pos = 0;
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string piece = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (piece.empty() || piece.find_first_not_of("-0123456789") != std::string::npos)
            fail(ErrorKind::BadArgument, "bad grade component '" + piece + "' in " + text);
        comps.push_back(std::stol(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(comps.size()) != group.generators())
        fail(ErrorKind::BadArgument, "grade " + text + " needs " +
                                         std::to_string(group.generators()) + " components");
    return Grade(group, std::move(comps));
}

} // namespace rhoform
