#include "cohoc/parser.hpp"

#include <cctype>

namespace cohoc {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool at_identifier() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    unsigned long long decimal() {
        skip_ws();
        size_t start = pos;
        unsigned long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 0xffffffffull)
                throw SyntaxError("number too large", start);
            ++pos;
        }
        if (pos == start) throw SyntaxError("expected a number", pos);
        return v;
    }
};

Poly parse_term(Lexer& lx, const Presentation& R, OrderKind order, bool negate) {
    const Field& F = R.field;
    uint32_t coeff = 1;
    std::vector<uint32_t> exps(R.ngens(), 0);
    bool any_factor = false;

    if (lx.at_digit()) {
        coeff = F.reduce(static_cast<long long>(lx.decimal()));
        any_factor = true;
        lx.eat('*'); // optional separator after the coefficient
    }
    while (lx.at_identifier()) {
        size_t at = lx.pos;
        std::string name = lx.identifier();
        int idx = R.generator_index(name);
        if (idx < 0)
            throw UnknownGenerator("unknown generator '" + name + "' at position " +
                                   std::to_string(at));
        uint32_t e = 1;
        if (lx.eat('^')) e = static_cast<uint32_t>(lx.decimal());
        uint64_t total = uint64_t(exps[idx]) + e;
        if (total > 0xffffffffull) throw ExponentOverflow("monomial exponent exceeds 2^32-1");
        exps[idx] = static_cast<uint32_t>(total);
        any_factor = true;
        if (!lx.eat('*')) break; // '*' is required between named factors
    }
    if (!any_factor) throw SyntaxError("expected a term", lx.pos);
    if (negate) coeff = F.neg(coeff);
    if (coeff == 0) return {};
    Poly r;
    r.terms.push_back({mono_make(std::move(exps), R.degrees), coeff});
    return r;
}

} // namespace

Poly parse_element(const std::string& text, const Presentation& ring, OrderKind order) {
    Lexer lx{text};
    Poly acc = parse_term(lx, ring, order, false);
    while (true) {
        if (lx.eat('+'))
            acc = poly_add(acc, parse_term(lx, ring, order, false), ring.field, order);
        else if (lx.eat('-'))
            acc = poly_add(acc, parse_term(lx, ring, order, true), ring.field, order);
        else
            break;
    }
    lx.skip_ws();
    if (lx.pos != text.size())
        throw SyntaxError("unexpected character '" + std::string(1, text[lx.pos]) + "'", lx.pos);
    return acc;
}

std::string print_monomial(const Monomial& m, const Presentation& ring) {
    std::string out;
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i]) continue;
        if (!out.empty()) out += '*';
        out += ring.gens[i].name;
        if (m.exps[i] > 1) out += '^' + std::to_string(m.exps[i]);
    }
    return out.empty() ? "1" : out;
}

std::string print_element(const Poly& f, const Presentation& ring) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const Term& t : f.terms) {
        if (!out.empty()) out += " + ";
        if (t.m.is_one()) {
            out += std::to_string(t.c);
        } else {
            if (t.c != 1) out += std::to_string(t.c) + '*';
            out += print_monomial(t.m, ring);
        }
    }
    return out;
}

} // namespace cohoc
