#include "lct/problem.hpp"

#include <cctype>
#include <sstream>

namespace lct {

namespace {

enum class Tok { Ident, Integer, Symbol, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1, col = 1;
    std::vector<Token> tokens;

    explicit Lexer(const std::string& s) : src(s) {}

    void push(Tok k, std::string text, int l, int c) {
        tokens.push_back({k, std::move(text), l, c});
    }

    void run() {
        while (pos < src.size()) {
            char ch = src[pos];
            if (ch == '#') {
                while (pos < src.size() && src[pos] != '\n') advance();
                continue;
            }
            if (ch == '\n') {
                if (tokens.empty() || tokens.back().kind != Tok::Newline)
                    push(Tok::Newline, "\n", line, col);
                advance();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch))) {
                int l = line, c = col;
                std::string word;
                while (pos < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                        src[pos] == '_')) {
                    word += src[pos];
                    advance();
                }
                push(Tok::Ident, std::move(word), l, c);
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                int l = line, c = col;
                std::string num;
                while (pos < src.size() &&
                       std::isdigit(static_cast<unsigned char>(src[pos]))) {
                    num += src[pos];
                    advance();
                }
                push(Tok::Integer, std::move(num), l, c);
                continue;
            }
            static const std::string symbols = "{}=;,:()+-*^[]";
            if (symbols.find(ch) != std::string::npos) {
                push(Tok::Symbol, std::string(1, ch), line, col);
                advance();
                continue;
            }
            throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
        }
        push(Tok::End, "", line, col);
    }

    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
};

struct Cursor {
    const std::vector<Token>& toks;
    std::size_t i = 0;

    const Token& peek(bool skip_newlines = true) {
        std::size_t j = i;
        if (skip_newlines)
            while (toks[j].kind == Tok::Newline) ++j;
        return toks[j];
    }
    const Token& next(bool skip_newlines = true) {
        if (skip_newlines)
            while (toks[i].kind == Tok::Newline) ++i;
        return toks[i++];
    }
    bool at_symbol(const char* s, bool skip_newlines = true) {
        const Token& t = peek(skip_newlines);
        return t.kind == Tok::Symbol && t.text == s;
    }
    void expect_symbol(const char* s) {
        const Token& t = next();
        if (t.kind != Tok::Symbol || t.text != s)
            throw ParseError(std::string("expected '") + s + "'", t.line, t.col);
    }
    std::string expect_ident(const char* what) {
        const Token& t = next();
        if (t.kind != Tok::Ident)
            throw ParseError(std::string("expected ") + what, t.line, t.col);
        return t.text;
    }
    Int expect_integer(const char* what) {
        const Token& t = next();
        if (t.kind != Tok::Integer)
            throw ParseError(std::string("expected ") + what, t.line, t.col);
        return Int(t.text);
    }
    // Skips separators between block entries.
    void skip_separators() {
        while (toks[i].kind == Tok::Newline ||
               (toks[i].kind == Tok::Symbol && toks[i].text == ";"))
            ++i;
    }
};

// Recursive-descent expression parser producing an SPolynomial.
struct ExprParser {
    Cursor& cur;
    const CoefficientRing& ring;
    const std::vector<std::string>& u_names;
    unsigned s;

    SPolynomial parse() { return expr(); }

    SPolynomial expr() {
        SPolynomial acc = term();
        while (cur.at_symbol("+", false) || cur.at_symbol("-", false)) {
            bool plus = cur.next(false).text == "+";
            SPolynomial rhs = term();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    SPolynomial term() {
        SPolynomial acc = factor();
        while (cur.at_symbol("*", false)) {
            cur.next(false);
            acc = acc * factor();
        }
        return acc;
    }

    SPolynomial factor() {
        if (cur.at_symbol("-", false)) {
            cur.next(false);
            return -factor();
        }
        return power();
    }

    SPolynomial power() {
        SPolynomial base = atom();
        if (cur.at_symbol("^", false)) {
            const Token& caret = cur.next(false);
            const Token& t = cur.next(false);
            if (t.kind != Tok::Integer)
                throw ParseError("expected integer exponent", t.line, t.col);
            Int e(t.text);
            if (e > 4096)
                throw ParseError("exponent too large", t.line, t.col);
            (void)caret;
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    SPolynomial atom() {
        const Token& t = cur.next(false);
        if (t.kind == Tok::Integer) {
            return SPolynomial::monomial(
                s, Exponents(s, 0), R0Element::constant(ring, Rat(Int(t.text))));
        }
        if (t.kind == Tok::Ident) {
            for (std::size_t k = 0; k < u_names.size(); ++k) {
                if (u_names[k] == t.text) {
                    Exponents e(s, 0);
                    e[k] = 1;
                    return SPolynomial::monomial(s, e, R0Element::from_int(ring, 1));
                }
            }
            if (ring.var_index(t.text) >= 0) {
                return SPolynomial::monomial(s, Exponents(s, 0),
                                             R0Element::variable(ring, t.text));
            }
            throw ParseError("unknown identifier " + t.text, t.line, t.col);
        }
        if (t.kind == Tok::Symbol && t.text == "(") {
            SPolynomial inner = expr();
            const Token& close = cur.next(false);
            if (close.kind != Tok::Symbol || close.text != ")")
                throw ParseError("expected ')'", close.line, close.col);
            return inner;
        }
        throw ParseError("expected a value", t.line, t.col);
    }
};

CoefficientRing parse_base_ring(Cursor& cur) {
    const Token& t = cur.next();
    CoefficientRing base = CoefficientRing::integers();
    if (t.kind != Tok::Ident)
        throw ParseError("expected base ring (ZZ, QQ or GF(p))", t.line, t.col);
    if (t.text == "ZZ") {
        base = CoefficientRing::integers();
    } else if (t.text == "QQ") {
        base = CoefficientRing::rationals();
    } else if (t.text == "GF") {
        cur.expect_symbol("(");
        Int p = cur.expect_integer("prime modulus");
        cur.expect_symbol(")");
        try {
            base = CoefficientRing::prime_field(p);
        } catch (const Error& e) {
            throw ParseError(e.what(), t.line, t.col);
        }
    } else {
        throw ParseError("unknown base ring " + t.text, t.line, t.col);
    }
    if (!cur.at_symbol("[")) return base;
    cur.expect_symbol("[");
    std::vector<std::string> vars;
    while (true) {
        vars.push_back(cur.expect_ident("variable name"));
        if (cur.at_symbol(",")) {
            cur.next();
            continue;
        }
        break;
    }
    cur.expect_symbol("]");
    const Token& where = cur.peek();
    try {
        return CoefficientRing::polynomial(base, std::move(vars));
    } catch (const Error& e) {
        throw ParseError(e.what(), where.line, where.col);
    }
}

} // namespace

SPolynomial parse_expression(const std::string& text, const CoefficientRing& ring,
                             const std::vector<std::string>& u_names) {
    Lexer lex(text);
    lex.run();
    Cursor cur{lex.tokens};
    ExprParser parser{cur, ring, u_names, static_cast<unsigned>(u_names.size())};
    SPolynomial out = parser.parse();
    const Token& t = cur.next();
    if (t.kind != Tok::End)
        throw ParseError("trailing input after expression", t.line, t.col);
    return out;
}

ProblemFile parse_problem(const std::string& text) {
    Lexer lex(text);
    lex.run();
    Cursor cur{lex.tokens};

    bool have_ring = false;
    CoefficientRing ring = CoefficientRing::integers();
    std::vector<std::string> u_names;
    std::vector<unsigned> weights;
    struct RawGen {
        std::string name;
        SPolynomial poly;
        int line, col;
    };
    std::vector<RawGen> gens;
    ProblemOptions options;

    while (cur.peek().kind != Tok::End) {
        const Token& head = cur.next();
        if (head.kind != Tok::Ident)
            throw ParseError("expected a block name", head.line, head.col);
        cur.expect_symbol("{");

        if (head.text == "ring") {
            cur.skip_separators();
            while (!cur.at_symbol("}")) {
                const Token& key = cur.next();
                if (key.kind != Tok::Ident)
                    throw ParseError("expected a key", key.line, key.col);
                cur.expect_symbol("=");
                if (key.text == "base") {
                    ring = parse_base_ring(cur);
                    have_ring = true;
                } else if (key.text == "vars") {
                    while (true) {
                        std::string name = cur.expect_ident("U-variable name");
                        cur.expect_symbol(":");
                        const Token& wt = cur.next();
                        if (wt.kind != Tok::Integer)
                            throw ParseError("expected a positive weight", wt.line, wt.col);
                        Int w(wt.text);
                        if (w <= 0 || w > 1000000)
                            throw ParseError("weight out of range", wt.line, wt.col);
                        u_names.push_back(name);
                        weights.push_back(static_cast<unsigned>(w.get_ui()));
                        if (cur.at_symbol(",")) {
                            cur.next();
                            continue;
                        }
                        break;
                    }
                } else {
                    throw ParseError("unknown ring key " + key.text, key.line, key.col);
                }
                cur.skip_separators();
            }
            cur.expect_symbol("}");
        } else if (head.text == "ideal") {
            if (!have_ring)
                throw ParseError("ideal block before ring block", head.line, head.col);
            cur.skip_separators();
            while (!cur.at_symbol("}")) {
                const Token& name = cur.next();
                if (name.kind != Tok::Ident)
                    throw ParseError("expected a generator name", name.line, name.col);
                for (const auto& g : gens)
                    if (g.name == name.text)
                        throw ParseError("duplicate generator " + name.text, name.line,
                                         name.col);
                cur.expect_symbol("=");
                ExprParser parser{cur, ring, u_names,
                                  static_cast<unsigned>(u_names.size())};
                SPolynomial poly = parser.parse();
                gens.push_back({name.text, std::move(poly), name.line, name.col});
                cur.skip_separators();
            }
            cur.expect_symbol("}");
        } else if (head.text == "options") {
            cur.skip_separators();
            while (!cur.at_symbol("}")) {
                const Token& key = cur.next();
                if (key.kind != Tok::Ident)
                    throw ParseError("expected an option key", key.line, key.col);
                cur.expect_symbol("=");
                Int v = cur.expect_integer("an integer value");
                if (key.text == "dmax") {
                    options.dmax = v.get_si();
                } else if (key.text == "minor_budget") {
                    options.minor_budget = static_cast<std::size_t>(v.get_ui());
                } else if (key.text == "alpha_max") {
                    options.alpha_max = static_cast<unsigned>(v.get_ui());
                } else if (key.text == "beta_max") {
                    options.beta_max = static_cast<unsigned>(v.get_ui());
                } else {
                    throw ParseError("unknown option " + key.text, key.line, key.col);
                }
                cur.skip_separators();
            }
            cur.expect_symbol("}");
        } else {
            throw ParseError("unknown block " + head.text, head.line, head.col);
        }
    }

    if (!have_ring) throw ParseError("missing ring block", 1, 1);
    for (const auto& name : u_names) {
        if (ring.var_index(name) >= 0)
            throw ParseError("variable " + name + " is both a U-variable and a base variable",
                             1, 1);
    }

    ProblemFile out{ring, u_names, weights, {}, {}, options};
    for (auto& g : gens) {
        if (g.poly.is_zero())
            throw ParseError("generator " + g.name + " is zero", g.line, g.col);
        auto [hom, deg] = g.poly.is_homogeneous(weights);
        (void)deg;
        if (!hom)
            throw ParseError("non-homogeneous generator " + g.name, g.line, g.col);
        out.generator_names.push_back(g.name);
        out.generators.push_back(std::move(g.poly));
    }
    return out;
}

GradedRingSpec ProblemFile::to_spec() const {
    if (u_names.empty())
        throw Error("the ring block declares no U-variables");
    return GradedRingSpec(ring, weights, generators, u_names, generator_names);
}

std::vector<R0Element> ProblemFile::charp_inputs() const {
    std::vector<R0Element> out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const SPolynomial& f = generators[i];
        R0Element value(ring);
        for (const auto& [e, c] : f.terms()) {
            for (unsigned x : e)
                if (x)
                    throw Error("generator " + generator_names[i] +
                                " involves U-variables; char-p inputs are R_0 elements");
            value += c;
        }
        out.push_back(std::move(value));
    }
    return out;
}

std::string ProblemFile::pretty_print() const {
    std::ostringstream out;
    out << "ring { base = " << ring.to_string();
    if (!u_names.empty()) {
        out << "; vars = ";
        for (std::size_t i = 0; i < u_names.size(); ++i) {
            if (i) out << ", ";
            out << u_names[i] << ":" << weights[i];
        }
    }
    out << " }\n";
    if (!generators.empty()) {
        out << "ideal {\n";
        for (std::size_t i = 0; i < generators.size(); ++i) {
            out << "  " << generator_names[i] << " = "
                << generators[i].to_string(u_names) << "\n";
        }
        out << "}\n";
    }
    bool any = options.dmax || options.minor_budget || options.alpha_max ||
               options.beta_max;
    if (any) {
        out << "options {";
        bool first = true;
        auto item = [&](const std::string& k, const std::string& v) {
            out << (first ? " " : "; ") << k << " = " << v;
            first = false;
        };
        if (options.dmax) item("dmax", std::to_string(*options.dmax));
        if (options.minor_budget)
            item("minor_budget", std::to_string(*options.minor_budget));
        if (options.alpha_max) item("alpha_max", std::to_string(*options.alpha_max));
        if (options.beta_max) item("beta_max", std::to_string(*options.beta_max));
        out << " }\n";
    }
    return out.str();
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
    return a.ring == b.ring && a.u_names == b.u_names && a.weights == b.weights &&
           a.generator_names == b.generator_names && a.generators == b.generators &&
           a.options.dmax == b.options.dmax &&
           a.options.minor_budget == b.options.minor_budget &&
           a.options.alpha_max == b.options.alpha_max &&
           a.options.beta_max == b.options.beta_max;
}

} // namespace lct
