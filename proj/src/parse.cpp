#include "quinn/parse.hpp"

#include <cctype>
#include <vector>

namespace quinn::parse {

namespace {

struct Token {
    enum Kind { Int, Ident, Op, End } kind;
    long value = 0;    // Int
    std::string text;  // Ident / Op
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace((unsigned char)ch)) {
            ++i;
        } else if (std::isdigit((unsigned char)ch)) {
            long v = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                if (v > (1L << 50))
                    throw math_error("integer literal is too large");
                v = v * 10 + (s[i] - '0');
                ++i;
            }
            out.push_back({Token::Int, v, ""});
        } else if (std::isalpha((unsigned char)ch)) {
            // variables are single letters, so "xy" means x*y
            out.push_back({Token::Ident, 0, std::string(1, ch)});
            ++i;
        } else if (std::string("+-*/^()").find(ch) != std::string::npos) {
            out.push_back({Token::Op, 0, std::string(1, ch)});
            ++i;
        } else {
            throw math_error("unexpected character '" + std::string(1, ch) +
                             "' in expression");
        }
    }
    out.push_back({Token::End, 0, ""});
    return out;
}

// Recursive descent over any value type with +, -, * and a context giving
// integer and variable atoms.
template <class V, class Ctx>
struct ExprParser {
    const std::vector<Token>& t;
    const Ctx& cx;
    size_t i = 0;

    const Token& peek() const { return t[i]; }
    bool is_op(const char* o) const {
        return peek().kind == Token::Op && peek().text == o;
    }
    void expect_op(const char* o) {
        if (!is_op(o)) throw math_error(std::string("expected '") + o + "'");
        ++i;
    }
    bool starts_atom() const {
        return peek().kind == Token::Int || peek().kind == Token::Ident ||
               is_op("(");
    }

    V parse_atom() {
        if (peek().kind == Token::Int) {
            long v = t[i++].value;
            return cx.from_int(v);
        }
        if (peek().kind == Token::Ident) {
            std::string name = t[i++].text;
            return cx.var(name);
        }
        if (is_op("(")) {
            ++i;
            V v = parse_expr();
            expect_op(")");
            return v;
        }
        throw math_error("expected a number, a variable, or '('");
    }

    V parse_factor() {
        bool neg = false;
        while (is_op("-")) {
            neg = !neg;
            ++i;
        }
        V v = parse_atom();
        if (is_op("^")) {
            ++i;
            if (peek().kind != Token::Int)
                throw math_error("exponent must be a plain integer");
            long e = t[i++].value;
            if (e > 64) throw math_error("exponent is too large");
            V acc = cx.from_int(1);
            for (long k = 0; k < e; ++k) acc = acc * v;
            v = acc;
        }
        return neg ? cx.from_int(0) - v : v;
    }

    V parse_term() {
        V v = parse_factor();
        while (true) {
            if (is_op("*")) {
                ++i;
                v = v * parse_factor();
            } else if (starts_atom()) { // juxtaposition
                v = v * parse_factor();
            } else {
                break;
            }
        }
        return v;
    }

    V parse_expr() {
        V v = parse_term();
        while (is_op("+") || is_op("-")) {
            bool plus = peek().text == "+";
            ++i;
            V w = parse_term();
            v = plus ? v + w : v - w;
        }
        return v;
    }

    void expect_end() {
        if (peek().kind != Token::End)
            throw math_error("unexpected input after the expression");
    }
};

struct PolyCtx {
    const gf::FieldSpec* fs;
    std::string var_name;
    polyf::Poly from_int(long v) const { return polyf::Poly(fs, {v}); }
    polyf::Poly var(const std::string& name) const {
        if (name != var_name)
            throw math_error("unknown variable '" + name + "'");
        return polyf::Poly::x(fs);
    }
};

struct RingCtx {
    const polyf::Poly* f;
    coordring::RingElement from_int(long v) const {
        return coordring::from_poly(polyf::Poly(f->spec(), {v}), *f);
    }
    coordring::RingElement var(const std::string& name) const {
        if (name == "x") return coordring::ring_x(*f);
        if (name == "y") return coordring::ring_y(*f);
        throw math_error("unknown variable '" + name + "'");
    }
};

struct Fraction {
    coordring::RingElement num, den;
};

// EXPR ['/' FACTOR]; the denominator, if any, ends the entry.
Fraction parse_fraction(const std::string& text, const polyf::Poly& f) {
    std::vector<Token> toks = lex(text);
    RingCtx cx{&f};
    ExprParser<coordring::RingElement, RingCtx> p{toks, cx};
    Fraction out{p.parse_expr(), cx.from_int(1)};
    if (p.is_op("/")) {
        ++p.i;
        out.den = p.parse_factor();
        if (out.den.is_zero()) throw math_error("zero denominator");
    }
    p.expect_end();
    return out;
}

// "[[e, e], [e, e]]" split at bracket level; entries contain no brackets.
std::vector<std::string> split_matrix(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    auto expect = [&](char ch) {
        skip_ws();
        if (i >= text.size() || text[i] != ch)
            throw math_error(std::string("expected '") + ch +
                             "' in matrix input");
        ++i;
    };
    auto entry = [&] {
        skip_ws();
        size_t start = i;
        long paren = 0;
        while (i < text.size()) {
            char ch = text[i];
            if (ch == '(') ++paren;
            if (ch == ')') --paren;
            if (paren == 0 && (ch == ',' || ch == ']')) break;
            if (ch == '[') throw math_error("'[' inside a matrix entry");
            ++i;
        }
        if (paren != 0) throw math_error("unbalanced parentheses");
        if (i == start) throw math_error("empty matrix entry");
        return text.substr(start, i - start);
    };

    std::vector<std::string> entries;
    expect('[');
    for (int row = 0; row < 2; ++row) {
        if (row == 1) expect(',');
        expect('[');
        entries.push_back(entry());
        expect(',');
        entries.push_back(entry());
        expect(']');
    }
    expect(']');
    skip_ws();
    if (i != text.size()) throw math_error("unexpected input after ']]'");
    return entries;
}

} // namespace

polyf::Poly parse_poly(const std::string& text, const gf::FieldSpec* fs,
                       const std::string& var) {
    std::vector<Token> toks = lex(text);
    PolyCtx cx{fs, var};
    ExprParser<polyf::Poly, PolyCtx> p{toks, cx};
    polyf::Poly out = p.parse_expr();
    p.expect_end();
    return out;
}

coordring::RingElement parse_ring_element(const std::string& text,
                                          const polyf::Poly& f) {
    std::vector<Token> toks = lex(text);
    RingCtx cx{&f};
    ExprParser<coordring::RingElement, RingCtx> p{toks, cx};
    coordring::RingElement out = p.parse_expr();
    p.expect_end();
    return out;
}

normlab::MatrixOverA parse_matrix(const std::string& text,
                                  const polyf::Poly& f) {
    std::vector<std::string> texts = split_matrix(text);
    std::vector<Fraction> fr;
    for (const std::string& t : texts) fr.push_back(parse_fraction(t, f));

    coordring::RingElement one = coordring::from_poly(polyf::Poly(f.spec(), {1}), f);
    std::vector<coordring::RingElement> distinct;
    for (const Fraction& e : fr) {
        if (e.den == one) continue;
        bool seen = false;
        for (const coordring::RingElement& d : distinct)
            if (d == e.den) seen = true;
        if (!seen) distinct.push_back(e.den);
    }
    std::vector<coordring::RingElement> cleared;
    for (const Fraction& e : fr) {
        coordring::RingElement v = e.num;
        for (const coordring::RingElement& d : distinct)
            if (!(d == e.den)) v = v * d;
        cleared.push_back(v);
    }
    return normlab::MatrixOverA(cleared[0], cleared[1], cleared[2], cleared[3]);
}

curve::WeierstrassCurve parse_curve_spec(const std::string& text,
                                         const gf::FieldSpec* fs) {
    std::vector<std::pair<std::string, long>> kv;
    size_t i = 0;
    while (i <= text.size()) {
        size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        std::string part = text.substr(i, j - i);
        size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw math_error("curve parameters look like a=-3,b=0");
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        auto strip = [](std::string s) {
            while (!s.empty() && std::isspace((unsigned char)s.front()))
                s.erase(s.begin());
            while (!s.empty() && std::isspace((unsigned char)s.back()))
                s.pop_back();
            return s;
        };
        key = strip(key);
        val = strip(val);
        long v = 0;
        try {
            size_t used = 0;
            v = std::stol(val, &used);
            if (used != val.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw math_error("curve parameter '" + key +
                             "' needs an integer value");
        }
        for (const auto& [k, w] : kv) {
            (void)w;
            if (k == key)
                throw math_error("curve parameter '" + key + "' given twice");
        }
        kv.push_back({key, v});
        i = j + 1;
        if (j == text.size()) break;
    }

    auto get = [&kv](const std::string& key, bool* found = nullptr) {
        for (const auto& [k, v] : kv)
            if (k == key) {
                if (found) *found = true;
                return v;
            }
        if (found) *found = false;
        return 0L;
    };
    bool short_form = false, long_form = false;
    for (const auto& [k, v] : kv) {
        (void)v;
        if (k == "a" || k == "b")
            short_form = true;
        else if (k == "a1" || k == "a2" || k == "a3" || k == "a4" || k == "a6")
            long_form = true;
        else
            throw math_error("unknown curve parameter '" + k + "'");
    }
    if (short_form && long_form)
        throw math_error("curve parameters mix the short and long forms");
    if (short_form) {
        bool have_a = false, have_b = false;
        long a = get("a", &have_a), b = get("b", &have_b);
        if (!have_a || !have_b)
            throw math_error("curve parameters need both a and b");
        return curve::WeierstrassCurve(fs, gf::FieldElement(fs, a),
                                       gf::FieldElement(fs, b));
    }
    if (!long_form) throw math_error("curve parameters are empty");
    return curve::from_long_form(
        fs, gf::FieldElement(fs, get("a1")), gf::FieldElement(fs, get("a2")),
        gf::FieldElement(fs, get("a3")), gf::FieldElement(fs, get("a4")),
        gf::FieldElement(fs, get("a6")));
}

ratring::RatMatrix parse_rat_matrix(const std::string& text,
                                    const ratring::RatRingSpec& spec) {
    std::vector<std::string> texts = split_matrix(text);
    std::vector<ratring::RatElement> entries;
    for (const std::string& t : texts) {
        std::vector<Token> toks = lex(t);
        PolyCtx cx{spec.fs, "t"};
        ExprParser<polyf::Poly, PolyCtx> p{toks, cx};
        polyf::Poly num = p.parse_expr();
        long m = 0;
        if (p.is_op("/")) {
            ++p.i;
            polyf::Poly den = p.parse_factor();
            while (den.degree() > 0) {
                auto [quo, rem] = polyf::divmod(den, spec.pi);
                if (!rem.is_zero())
                    throw math_error("denominator must be a power of pi");
                den = quo;
                ++m;
            }
            if (!(den == polyf::Poly(spec.fs, {1})))
                throw math_error("denominator must be a power of pi");
        }
        p.expect_end();
        entries.push_back(ratring::rat_element(spec, num, m));
    }
    return ratring::RatMatrix(entries[0], entries[1], entries[2], entries[3]);
}

curve::CurvePoint parse_point(const std::string& text,
                              const curve::WeierstrassCurve& c) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s == "inf") return curve::CurvePoint::at_infinity(c.fs);
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw math_error("points look like (3,2) or inf");
    size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw math_error("points look like (3,2) or inf");
    auto coord = [&](const std::string& t) {
        try {
            size_t used = 0;
            long v = std::stol(t, &used);
            if (used != t.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw math_error("point coordinates must be integers");
        }
    };
    long x = coord(s.substr(1, comma - 1));
    long y = coord(s.substr(comma + 1, s.size() - comma - 2));
    return curve::CurvePoint::affine(c, c.fs, gf::FieldElement(c.fs, x),
                                     gf::FieldElement(c.fs, y));
}

} // namespace quinn::parse
