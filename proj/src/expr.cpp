#include "qspinor/expr.hpp"

#include "qspinor/duality.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace qspinor {

ParseError::ParseError(const std::string& message, std::size_t pos, std::string exp)
    : std::runtime_error(message + " at position " + std::to_string(pos) +
                         (exp.empty() ? std::string() : " (expected " + exp + ")")),
      position(pos),
      expected(std::move(exp)) {}

namespace {

struct Token {
    enum class Type { ident, number, plus, minus, star, slash, caret, lparen, rparen, comma, end };
    Type type = Type::end;
    std::string text;
    Int value;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        cur_ = Token{};
        cur_.pos = i_;
        if (i_ >= text_.size()) {
            cur_.type = Token::Type::end;
            return;
        }
        const char c = text_[i_];
        if (static_cast<unsigned char>(c) >= 0x80)
            throw ParseError("non-ASCII input; use the ASCII generator aliases", i_);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            cur_.type = Token::Type::number;
            cur_.text = text_.substr(i_, j - i_);
            cur_.value = Int(cur_.text);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            cur_.type = Token::Type::ident;
            cur_.text = text_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        switch (c) {
            case '+': cur_.type = Token::Type::plus; break;
            case '-': cur_.type = Token::Type::minus; break;
            case '*': cur_.type = Token::Type::star; break;
            case '/': cur_.type = Token::Type::slash; break;
            case '^': cur_.type = Token::Type::caret; break;
            case '(': cur_.type = Token::Type::lparen; break;
            case ')': cur_.type = Token::Type::rparen; break;
            case ',': cur_.type = Token::Type::comma; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        cur_.text = std::string(1, c);
        ++i_;
    }

    const std::string& text_;
    std::size_t i_ = 0;
    Token cur_;
};

const std::map<std::string, Gen>& generator_table() {
    static const std::map<std::string, Gen> table = {
        {"mu1", Gen::mu1}, {"mu2", Gen::mu2}, {"nu", Gen::nu},
        {"g1", Gen::g1},   {"g2", Gen::g2},   {"w", Gen::w},
        {"d1", Gen::d1},   {"d2", Gen::d2},   {"nab", Gen::nab},
    };
    return table;
}

bool is_named_operator(const std::string& s) {
    static const char* names[] = {"Ew", "Fw", "Kw", "Es", "Fs", "Ks", "Ed", "Fd",
                                  "Kd", "E",  "F",  "K",  "Z1", "Z2", "dq2_1", "dq2_2"};
    for (const char* n : names)
        if (s == n) return true;
    return false;
}

bool is_function(const std::string& s) {
    return s == "comm" || s == "tcomm" || s == "brace" || s == "qint" || s == "qbinom";
}

class OperatorParser {
public:
    explicit OperatorParser(Lexer& lex) : lex_(lex) {}

    OperatorExpr parse_expr() {
        OperatorExpr node;
        bool negate = false;
        if (lex_.peek().type == Token::Type::minus) {
            lex_.take();
            negate = true;
        }
        node = parse_term();
        if (negate) {
            OperatorExpr neg;
            neg.kind = OperatorExpr::Kind::neg;
            neg.pos = node.pos;
            neg.args.push_back(std::move(node));
            node = std::move(neg);
        }
        while (lex_.peek().type == Token::Type::plus || lex_.peek().type == Token::Type::minus) {
            const Token op = lex_.take();
            OperatorExpr rhs = parse_term();
            OperatorExpr parent;
            parent.kind = op.type == Token::Type::plus ? OperatorExpr::Kind::add : OperatorExpr::Kind::sub;
            parent.pos = op.pos;
            parent.args.push_back(std::move(node));
            parent.args.push_back(std::move(rhs));
            node = std::move(parent);
        }
        return node;
    }

    OperatorExpr parse_term() {
        OperatorExpr node = parse_factor();
        while (lex_.peek().type == Token::Type::star || lex_.peek().type == Token::Type::slash) {
            const Token op = lex_.take();
            OperatorExpr rhs = parse_factor();
            OperatorExpr parent;
            parent.kind = op.type == Token::Type::star ? OperatorExpr::Kind::mul : OperatorExpr::Kind::div;
            parent.pos = op.pos;
            parent.args.push_back(std::move(node));
            parent.args.push_back(std::move(rhs));
            node = std::move(parent);
        }
        return node;
    }

    OperatorExpr parse_factor() {
        OperatorExpr node = parse_atom();
        if (lex_.peek().type == Token::Type::caret) {
            const Token op = lex_.take();
            OperatorExpr parent;
            parent.kind = OperatorExpr::Kind::pow;
            parent.pos = op.pos;
            parent.exponent = parse_int_literal();
            parent.args.push_back(std::move(node));
            node = std::move(parent);
        }
        return node;
    }

    int parse_int_literal() {
        bool neg = false;
        if (lex_.peek().type == Token::Type::minus) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().type != Token::Type::number)
            throw ParseError("bad exponent", lex_.peek().pos, "integer");
        const Token t = lex_.take();
        const int v = static_cast<int>(t.value.convert_to<long long>());
        return neg ? -v : v;
    }

    OperatorExpr parse_atom() {
        const Token t = lex_.peek();
        if (t.type == Token::Type::number) {
            lex_.take();
            OperatorExpr node;
            node.kind = OperatorExpr::Kind::integer;
            node.pos = t.pos;
            node.int_value = t.value;
            return node;
        }
        if (t.type == Token::Type::lparen) {
            lex_.take();
            OperatorExpr node = parse_expr();
            expect(Token::Type::rparen, ")");
            return node;
        }
        if (t.type == Token::Type::ident) {
            lex_.take();
            if (lex_.peek().type == Token::Type::lparen) {
                if (!is_function(t.text)) throw ParseError("unknown function '" + t.text + "'", t.pos);
                lex_.take();
                OperatorExpr node;
                node.kind = OperatorExpr::Kind::call;
                node.pos = t.pos;
                node.name = t.text;
                node.args.push_back(parse_expr());
                while (lex_.peek().type == Token::Type::comma) {
                    lex_.take();
                    node.args.push_back(parse_expr());
                }
                expect(Token::Type::rparen, ")");
                return node;
            }
            OperatorExpr node;
            node.pos = t.pos;
            if (t.text == "q") {
                node.kind = OperatorExpr::Kind::q_atom;
                return node;
            }
            auto it = generator_table().find(t.text);
            if (it != generator_table().end()) {
                node.kind = OperatorExpr::Kind::generator;
                node.generator = it->second;
                return node;
            }
            if (is_named_operator(t.text)) {
                node.kind = OperatorExpr::Kind::named;
                node.name = t.text;
                return node;
            }
            throw ParseError("unknown identifier '" + t.text + "'", t.pos);
        }
        throw ParseError("unexpected token", t.pos, "identifier, number or (");
    }

    void expect(Token::Type type, const std::string& what) {
        if (lex_.peek().type != type) throw ParseError("unexpected token", lex_.peek().pos, what);
        lex_.take();
    }

private:
    Lexer& lex_;
};

AlgebraElement named_operator(const std::string& name, std::size_t pos) {
    if (name == "Ew") return sigma_weyl().E;
    if (name == "Fw") return sigma_weyl().F;
    if (name == "Kw") return sigma_weyl().K;
    if (name == "Es") return sigma_spinor().E;
    if (name == "Fs") return sigma_spinor().F;
    if (name == "Ks") return sigma_spinor().K;
    if (name == "Ed") return sigma_diagonal().E;
    if (name == "Fd") return sigma_diagonal().F;
    if (name == "Kd") return sigma_diagonal().K;
    if (name == "E") return sigma_dual().E;
    if (name == "F") return sigma_dual().F;
    if (name == "K") return sigma_dual().K;
    if (name == "Z1") return build_Z1();
    if (name == "Z2") return build_Z2();
    if (name == "dq2_1") return shifted_derivative(1, 2);
    if (name == "dq2_2") return shifted_derivative(2, 2);
    throw ParseError("unknown identifier '" + name + "'", pos);
}

int require_int(const AlgebraElement& a, std::size_t pos) {
    if (!a.is_scalar() || !a.scalar_value().is_integer())
        throw ParseError("argument must be an integer", pos);
    return static_cast<int>(a.scalar_value().integer_value().convert_to<long long>());
}

}  // namespace

OperatorExpr parse_operator_expr(const std::string& text) {
    Lexer lex(text);
    OperatorParser parser(lex);
    OperatorExpr node = parser.parse_expr();
    if (lex.peek().type != Token::Type::end)
        throw ParseError("trailing input", lex.peek().pos, "end of expression");
    return node;
}

AlgebraElement eval_operator(const OperatorExpr& e) {
    switch (e.kind) {
        case OperatorExpr::Kind::integer: return AlgebraElement(RatQ(e.int_value));
        case OperatorExpr::Kind::q_atom: return AlgebraElement(RatQ::q_power(1));
        case OperatorExpr::Kind::generator: return AlgebraElement::generator(e.generator);
        case OperatorExpr::Kind::named: return named_operator(e.name, e.pos);
        case OperatorExpr::Kind::add: return eval_operator(e.args[0]) + eval_operator(e.args[1]);
        case OperatorExpr::Kind::sub: return eval_operator(e.args[0]) - eval_operator(e.args[1]);
        case OperatorExpr::Kind::mul: return eval_operator(e.args[0]) * eval_operator(e.args[1]);
        case OperatorExpr::Kind::neg: return -eval_operator(e.args[0]);
        case OperatorExpr::Kind::div: {
            const AlgebraElement lhs = eval_operator(e.args[0]);
            const AlgebraElement rhs = eval_operator(e.args[1]);
            if (!rhs.is_scalar()) throw ParseError("division requires a scalar divisor", e.pos);
            if (rhs.is_zero()) throw ParseError("division by zero", e.pos);
            return lhs * rhs.scalar_value().inv();
        }
        case OperatorExpr::Kind::pow: {
            const AlgebraElement base = eval_operator(e.args[0]);
            if (e.exponent >= 0) return power(base, e.exponent);
            if (base.is_scalar()) {
                if (base.is_zero()) throw ParseError("division by zero", e.pos);
                return power(AlgebraElement(base.scalar_value().inv()), -e.exponent);
            }
            if (!base.single_term() || !base.terms().begin()->first.is_group_like())
                throw ParseError("negative power of a non-invertible element", e.pos);
            return power(base, e.exponent);
        }
        case OperatorExpr::Kind::call: {
            if (e.name == "comm") {
                if (e.args.size() != 2) throw ParseError("comm takes 2 arguments", e.pos);
                return commutator(eval_operator(e.args[0]), eval_operator(e.args[1]));
            }
            if (e.name == "tcomm") {
                if (e.args.size() != 3) throw ParseError("tcomm takes 3 arguments", e.pos);
                const AlgebraElement v = eval_operator(e.args[2]);
                if (!v.is_scalar()) throw ParseError("tcomm twist must be a scalar", e.args[2].pos);
                return twisted_commutator(eval_operator(e.args[0]), eval_operator(e.args[1]), v.scalar_value());
            }
            if (e.name == "brace") {
                if (e.args.size() != 1) throw ParseError("brace takes 1 argument", e.pos);
                const AlgebraElement a = eval_operator(e.args[0]);
                if (!a.single_term() ||
                    (!a.terms().begin()->first.is_group_like() && !a.is_scalar()))
                    throw ParseError("brace requires an invertible element", e.pos);
                return brace(a, 1);
            }
            if (e.name == "qint") {
                if (e.args.size() != 1) throw ParseError("qint takes 1 argument", e.pos);
                return AlgebraElement(quantum_int(require_int(eval_operator(e.args[0]), e.pos)));
            }
            if (e.name == "qbinom") {
                if (e.args.size() != 2) throw ParseError("qbinom takes 2 arguments", e.pos);
                const int n = require_int(eval_operator(e.args[0]), e.pos);
                const int m = require_int(eval_operator(e.args[1]), e.pos);
                return AlgebraElement(quantum_binomial(n, m));
            }
            throw ParseError("unknown function '" + e.name + "'", e.pos);
        }
    }
    throw std::logic_error("eval_operator: bad node");
}

AlgebraElement parse_operator(const std::string& text) { return eval_operator(parse_operator_expr(text)); }

namespace {

// one spinor term: product of variable powers and scalar factors
struct SpinorTermParser {
    Lexer& lex;
    OperatorParser& ops;

    bool starts_factor() const {
        const auto t = lex.peek().type;
        return t == Token::Type::ident || t == Token::Type::number || t == Token::Type::lparen;
    }

    SpinorVector parse_term() {
        RatQ coeff(1);
        int a = 0, b = 0, c = 0;
        bool any = false;
        for (;;) {
            if (lex.peek().type == Token::Type::star) {
                lex.take();
                if (!starts_factor()) throw ParseError("dangling '*'", lex.peek().pos, "factor");
                continue;
            }
            if (!starts_factor()) break;
            const Token t = lex.peek();
            if (t.type == Token::Type::ident && (t.text == "x1" || t.text == "x2" || t.text == "y")) {
                lex.take();
                int exp = 1;
                if (lex.peek().type == Token::Type::caret) {
                    lex.take();
                    exp = ops.parse_int_literal();
                    if (exp < 0) throw ParseError("negative exponent on a spinor variable", t.pos);
                }
                if (t.text == "x1") a += exp;
                else if (t.text == "x2") b += exp;
                else c += exp;
            } else {
                const OperatorExpr node = ops.parse_factor();
                const AlgebraElement val = eval_operator(node);
                if (!val.is_scalar())
                    throw ParseError("spinor coefficients must be scalars", node.pos);
                coeff *= val.scalar_value();
            }
            any = true;
        }
        if (!any) throw ParseError("empty spinor term", lex.peek().pos, "term");
        return SpinorVector::monomial(a, b, c, coeff);
    }
};

}  // namespace

SpinorVector parse_spinor(const std::string& text) {
    Lexer lex(text);
    OperatorParser ops(lex);
    SpinorTermParser terms{lex, ops};

    SpinorVector acc;
    bool negate = false;
    if (lex.peek().type == Token::Type::minus) {
        lex.take();
        negate = true;
    }
    SpinorVector term = terms.parse_term();
    acc += negate ? -term : term;
    while (lex.peek().type == Token::Type::plus || lex.peek().type == Token::Type::minus) {
        const bool minus = lex.take().type == Token::Type::minus;
        term = terms.parse_term();
        acc += minus ? -term : term;
    }
    if (lex.peek().type != Token::Type::end)
        throw ParseError("trailing input", lex.peek().pos, "end of expression");
    return acc;
}

RatQ parse_ratq(const std::string& text) {
    const AlgebraElement a = parse_operator(text);
    if (!a.is_scalar()) throw ParseError("not a scalar expression", 0);
    return a.scalar_value();
}

Rat parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + text + "'", 0, "n or n/m");
    }
}

}  // namespace qspinor
