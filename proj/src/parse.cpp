#include "lucastrig/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "lucastrig/errors.hpp"

namespace lucastrig {

namespace {

enum class Tok { Ident, Integer, Plus, Minus, Star, Caret, Slash, LParen, RParen, Equals, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

std::vector<Token> lex(const std::string& input) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        unsigned char c = input[i];
        if (c >= 0x80) {
            throw ParseError(
                "non-ASCII input; use plain identifiers (alpha -> a, theta -> t)",
                {i, i + 1});
        }
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            out.push_back({Tok::Integer, input.substr(start, i - start), {start, i}});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            while (i < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, input.substr(start, i - start), {start, i}});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '/': kind = Tok::Slash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '=': kind = Tok::Equals; break;
            default:
                throw ParseError(std::string("unexpected character '") +
                                     static_cast<char>(c) + "'",
                                 {i, i + 1});
        }
        out.push_back({kind, input.substr(i, 1), {i, i + 1}});
        ++i;
    }
    out.push_back({Tok::End, "", {input.size(), input.size()}});
    return out;
}

std::optional<TrigKind> trig_kind_of(const std::string& name) {
    if (name == "sin") return TrigKind::Sin;
    if (name == "cos") return TrigKind::Cos;
    if (name == "tan") return TrigKind::Tan;
    if (name == "sinh") return TrigKind::Sinh;
    if (name == "cosh") return TrigKind::Cosh;
    return std::nullopt;
}

std::optional<SeqKind> seq_kind_of(const std::string& name) {
    if (name == "U" || name == "F") return SeqKind::U;
    if (name == "V" || name == "L") return SeqKind::V;
    return std::nullopt;
}

bool is_known_call_name(const std::string& name) {
    return trig_kind_of(name).has_value() || seq_kind_of(name).has_value();
}

template <class Kind>
class Parser {
public:
    explicit Parser(const std::string& input)
        : input_(input), tokens_(lex(input)) {}

    Equation<Kind> parse_identity() {
        Equation<Kind> eq;
        eq.lhs = parse_expr();
        expect(Tok::Equals, "'='");
        eq.rhs = parse_expr();
        if (peek().kind != Tok::End) {
            fail("unexpected trailing input");
        }
        return canonicalize_sides(std::move(eq));
    }

private:
    using Terms = std::vector<Term<Kind>>;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t idx = pos_ + ahead;
        return idx < tokens_.size() ? tokens_[idx] : tokens_.back();
    }

    const Token& advance() { return tokens_[pos_++]; }

    bool accept(Tok kind) {
        if (peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(Tok kind, const std::string& what) {
        if (!accept(kind)) {
            fail("expected " + what);
        }
    }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg + ", got " + got, t.span);
    }

    // expr := ["+"|"-"] term { ("+"|"-") term }
    Terms parse_expr() {
        Terms out;
        bool negate = false;
        if (accept(Tok::Minus)) negate = true;
        else accept(Tok::Plus);
        append_terms(out, parse_product(), negate);
        while (true) {
            if (accept(Tok::Plus)) {
                append_terms(out, parse_product(), false);
            } else if (accept(Tok::Minus)) {
                append_terms(out, parse_product(), true);
            } else {
                break;
            }
        }
        return collect(std::move(out));
    }

    static void append_terms(Terms& out, Terms more, bool negate) {
        for (auto& t : more) {
            if (negate) t.coeff = t.coeff.scaled(Rational(-1));
            out.push_back(std::move(t));
        }
    }

    // term := factor { "*" factor }
    Terms parse_product() {
        Terms acc = parse_factor();
        while (accept(Tok::Star)) {
            acc = multiply(acc, parse_factor());
        }
        return acc;
    }

    static Terms multiply(const Terms& a, const Terms& b) {
        Terms out;
        for (const auto& x : a) {
            for (const auto& y : b) {
                Term<Kind> t;
                t.coeff = x.coeff * y.coeff;
                t.factors = x.factors;
                t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
                t.canonicalize();
                out.push_back(std::move(t));
            }
        }
        return out;
    }

    static Terms constant_terms(const Rational& r) {
        Terms out;
        if (r == 0) return out;
        Term<Kind> t;
        t.coeff = Coeff(r);
        out.push_back(std::move(t));
        return out;
    }

    static Terms coeff_terms(Coeff c) {
        Terms out;
        Term<Kind> t;
        t.coeff = std::move(c);
        out.push_back(std::move(t));
        return out;
    }

    Terms parse_factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Minus: {
                advance();
                Terms inner = parse_factor();
                for (auto& term : inner) term.coeff = term.coeff.scaled(Rational(-1));
                return inner;
            }
            case Tok::Integer:
                return parse_rational_factor();
            case Tok::Ident:
                return parse_named_factor();
            case Tok::LParen:
                return parse_paren_factor();
            case Tok::Slash:
                fail("division is not part of the grammar; cross-multiply the identity first");
            default:
                fail("expected a factor");
        }
    }

    // rational := integer [ "/" positive-integer ], then optional integer power
    Terms parse_rational_factor() {
        Rational value(advance().text, 10);
        if (accept(Tok::Slash)) {
            const Token& den = peek();
            if (den.kind != Tok::Integer) fail("expected a positive integer denominator");
            advance();
            Rational d(den.text, 10);
            if (d == 0) throw ParseError("zero denominator", den.span);
            value /= d;
        }
        if (accept(Tok::Caret)) {
            long e = parse_integer_exponent();
            if (value == 0 && e <= 0) fail("zero base with non-positive exponent");
            value = pow_rational(value, e);
        }
        return constant_terms(value);
    }

    long parse_integer_exponent() {
        bool neg = accept(Tok::Minus);
        const Token& t = peek();
        if (t.kind != Tok::Integer) fail("expected an integer exponent");
        advance();
        long v = 0;
        try {
            v = std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", t.span);
        }
        return neg ? -v : v;
    }

    // exponent := integer | identifier | "(" linform ")"
    LinForm parse_exponent_linform() {
        if (peek().kind == Tok::Integer || peek().kind == Tok::Minus) {
            return LinForm(Rational(parse_integer_exponent()));
        }
        if (peek().kind == Tok::Ident) {
            return LinForm::variable(advance().text);
        }
        expect(Tok::LParen, "an exponent");
        LinForm lf = parse_linform();
        expect(Tok::RParen, "')'");
        return lf;
    }

    Terms parse_named_factor();

    Terms parse_call(const Token& name_tok) {
        expect(Tok::LParen, "'(' after function name");
        LinForm arg = parse_linform();
        expect(Tok::RParen, "')'");
        int power = 1;
        if (accept(Tok::Caret)) {
            long e = parse_integer_exponent();
            if (e < 0) {
                throw ParseError(
                    "negative powers are not representable; cross-multiply the identity first",
                    name_tok.span);
            }
            power = static_cast<int>(e);
        }
        Kind kind = resolve_kind(name_tok);
        if (power == 0) return constant_terms(Rational(1));
        Terms out;
        Term<Kind> t;
        t.factors.push_back({kind, arg, power});
        out.push_back(std::move(t));
        return out;
    }

    Kind resolve_kind(const Token& name_tok);

    Terms parse_paren_factor() {
        advance();  // '('
        Terms inner = parse_expr();
        expect(Tok::RParen, "')'");
        if (!accept(Tok::Caret)) return inner;

        // "(-1)^e" is the sign symbol in sequence identities; any other
        // parenthesized base takes a nonnegative integer power.
        bool is_minus_one = inner.size() == 1 && inner[0].is_constant() &&
                            inner[0].coeff.is_rational() &&
                            inner[0].coeff.ratio() == -1;
        if (is_minus_one && allow_symbols() &&
            (peek().kind == Tok::Ident || peek().kind == Tok::LParen)) {
            LinForm e = parse_exponent_linform();
            return coeff_terms(Coeff(Rational(1), LinForm(), e, LinForm(), LinForm()));
        }
        if (is_minus_one) {
            long e = parse_integer_exponent();
            return constant_terms(e % 2 == 0 ? Rational(1) : Rational(-1));
        }
        if (inner.size() == 1 && inner[0].is_constant()) {
            long e = parse_integer_exponent();
            return constant_terms(pow_rational(inner[0].coeff.ratio(), e));
        }
        long e = parse_integer_exponent();
        if (e < 0) fail("negative powers of a sum are not representable");
        Terms acc = constant_terms(Rational(1));
        for (long k = 0; k < e; ++k) acc = multiply(acc, inner);
        return acc;
    }

    // linform := lterm { ("+"|"-") lterm }
    LinForm parse_linform() {
        LinForm acc = parse_linform_term(accept(Tok::Minus));
        while (true) {
            if (accept(Tok::Plus)) {
                acc = acc + parse_linform_term(false);
            } else if (accept(Tok::Minus)) {
                acc = acc + parse_linform_term(true);
            } else {
                break;
            }
        }
        return acc;
    }

    // lterm := rational ["*" ident ["/" posint]] | ident ["/" posint]
    //        | "(" linform ")" ["/" posint]
    LinForm parse_linform_term(bool negate) {
        LinForm out;
        const Token& t = peek();
        if (t.kind == Tok::Integer) {
            advance();
            Rational value(t.text, 10);
            if (accept(Tok::Slash)) value /= parse_posint();
            if (accept(Tok::Star)) {
                const Token& v = peek();
                if (v.kind != Tok::Ident) fail("expected a variable name");
                advance();
                if (accept(Tok::Slash)) value /= parse_posint();
                out = LinForm::variable(v.text, value);
            } else {
                out = LinForm(value);
            }
        } else if (t.kind == Tok::Ident) {
            advance();
            Rational value(1);
            if (accept(Tok::Slash)) value /= parse_posint();
            out = LinForm::variable(t.text, value);
        } else if (t.kind == Tok::LParen) {
            advance();
            out = parse_linform();
            expect(Tok::RParen, "')'");
            if (accept(Tok::Slash)) out = out.scaled(Rational(1) / parse_posint());
        } else if (t.kind == Tok::Minus) {
            advance();
            out = -parse_linform_term(false);
        } else {
            fail("expected a linear form");
        }
        return negate ? -out : out;
    }

    Rational parse_posint() {
        const Token& t = peek();
        if (t.kind != Tok::Integer) fail("expected a positive integer");
        advance();
        Rational v(t.text, 10);
        if (v == 0) throw ParseError("zero denominator", t.span);
        return v;
    }

    bool allow_symbols() const;

    const std::string& input_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Trig identities: calls resolve to trig kinds; D/Q/(-1)^n are rejected.
template <>
bool Parser<TrigKind>::allow_symbols() const { return false; }

template <>
TrigKind Parser<TrigKind>::resolve_kind(const Token& name_tok) {
    if (auto k = trig_kind_of(name_tok.text)) return *k;
    throw UnknownFunction("unknown function '" + name_tok.text +
                              "' (expected sin, cos, tan, sinh or cosh)",
                          name_tok.span);
}

template <>
Parser<TrigKind>::Terms Parser<TrigKind>::parse_named_factor() {
    const Token& name_tok = advance();
    if (peek().kind == Tok::LParen) return parse_call(name_tok);
    throw ParseError("bare symbol '" + name_tok.text +
                         "' is not valid in a trigonometric identity",
                     name_tok.span);
}

// Sequence identities: U/V (aliases F/L) calls plus the D, Q, (-1) symbols.
template <>
bool Parser<SeqKind>::allow_symbols() const { return true; }

template <>
SeqKind Parser<SeqKind>::resolve_kind(const Token& name_tok) {
    if (auto k = seq_kind_of(name_tok.text)) return *k;
    throw UnknownSequence("unknown sequence '" + name_tok.text +
                              "' (expected U, V, F or L)",
                          name_tok.span);
}

template <>
Parser<SeqKind>::Terms Parser<SeqKind>::parse_named_factor() {
    const Token& name_tok = advance();
    if (peek().kind == Tok::LParen) return parse_call(name_tok);
    if (name_tok.text == "D") {
        LinForm e(1);
        if (accept(Tok::Caret)) e = parse_exponent_linform();
        return coeff_terms(
            Coeff(Rational(1), LinForm(), LinForm(), LinForm(), e.scaled(Rational(2))));
    }
    if (name_tok.text == "Q") {
        LinForm e(1);
        if (accept(Tok::Caret)) e = parse_exponent_linform();
        return coeff_terms(
            Coeff(Rational(1), LinForm(), LinForm(), e.scaled(Rational(2)), LinForm()));
    }
    if (is_known_call_name(name_tok.text)) {
        throw ParseError("'" + name_tok.text + "' needs an argument list",
                         name_tok.span);
    }
    throw ParseError("bare symbol '" + name_tok.text +
                         "' is not valid in a sequence identity (only D and Q)",
                     name_tok.span);
}

}  // namespace

TrigEquation parse_trig_identity(const std::string& text) {
    Parser<TrigKind> p(text);
    TrigEquation eq = p.parse_identity();
    for (const auto* side : {&eq.lhs, &eq.rhs}) {
        for (const auto& t : *side) {
            if (!t.coeff.is_rational()) {
                throw ParseError("sequence symbols are not valid in a trigonometric identity",
                                 {0, text.size()});
            }
        }
    }
    return eq;
}

SeqEquation parse_seq_identity(const std::string& text) {
    Parser<SeqKind> p(text);
    return p.parse_identity();
}

}  // namespace lucastrig
