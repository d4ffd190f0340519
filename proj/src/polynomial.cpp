#include "cohoc/polynomial.hpp"

#include <algorithm>
#include <map>

namespace cohoc {

namespace {

struct TermCmpDesc {
    OrderKind order;
    bool operator()(const Term& a, const Term& b) const {
        return mono_cmp(a.m, b.m, order) > 0;
    }
};

} // namespace

Poly poly_normalize(std::vector<Term> terms, const Field& F, OrderKind order) {
    for (Term& t : terms) t.c %= F.p;
    std::sort(terms.begin(), terms.end(), TermCmpDesc{order});
    Poly r;
    r.terms.reserve(terms.size());
    for (Term& t : terms) {
        if (!r.terms.empty() && r.terms.back().m == t.m)
            r.terms.back().c = F.add(r.terms.back().c, t.c);
        else
            r.terms.push_back(std::move(t));
    }
    std::erase_if(r.terms, [](const Term& t) { return t.c == 0; });
    return r;
}

Poly poly_add(const Poly& a, const Poly& b, const Field& F, OrderKind order) {
    Poly r;
    r.terms.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = mono_cmp(a.terms[i].m, b.terms[j].m, order);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            uint32_t s = F.add(a.terms[i].c, b.terms[j].c);
            if (s) r.terms.push_back({a.terms[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, const Field& F, OrderKind order) {
    return poly_add(a, poly_scale(b, F.p - 1, F), F, order);
}

Poly poly_scale(const Poly& a, uint32_t c, const Field& F) {
    c %= F.p;
    if (c == 0) return {};
    Poly r = a;
    for (Term& t : r.terms) t.c = F.mul(t.c, c);
    return r;
}

Poly poly_mul_term(const Poly& a, const Monomial& m, uint32_t c, const Field& F,
                   const std::vector<int64_t>&, OrderKind) {
    c %= F.p;
    if (c == 0) return {};
    Poly r;
    r.terms.reserve(a.size());
    // Multiplying every monomial by the same m preserves the term order.
    for (const Term& t : a.terms) r.terms.push_back({mono_mul(t.m, m), F.mul(t.c, c)});
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, const Field& F,
              const std::vector<int64_t>& gen_degrees, OrderKind order) {
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& big = a.size() <= b.size() ? b : a;
    Poly acc;
    for (const Term& t : small.terms)
        acc = poly_add(acc, poly_mul_term(big, t.m, t.c, F, gen_degrees, order), F, order);
    return acc;
}

Poly poly_pow(const Poly& a, uint32_t e, const Field& F,
              const std::vector<int64_t>& gen_degrees, OrderKind order) {
    if (e == 0) {
        Poly r;
        r.terms.push_back({mono_one(a.is_zero() ? 0 : a.terms[0].m.exps.size()), 1});
        return r;
    }
    if (a.is_zero()) return {};
    Poly r;
    r.terms.push_back({mono_one(a.terms[0].m.exps.size()), 1});
    Poly base = a;
    while (e) {
        if (e & 1) r = poly_mul(r, base, F, gen_degrees, order);
        e >>= 1;
        if (e) base = poly_mul(base, base, F, gen_degrees, order);
    }
    return r;
}

Poly poly_resort(const Poly& a, OrderKind order) {
    Poly r = a;
    std::sort(r.terms.begin(), r.terms.end(), TermCmpDesc{order});
    return r;
}

bool poly_equal(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a.terms[i].c != b.terms[i].c || !(a.terms[i].m == b.terms[i].m)) return false;
    return true;
}

std::optional<int64_t> homogeneous_degree(const Poly& a) {
    if (a.is_zero()) return -1;
    int64_t d = a.terms[0].m.degree;
    for (const Term& t : a.terms)
        if (t.m.degree != d) return std::nullopt;
    return d;
}

} // namespace cohoc
