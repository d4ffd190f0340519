#include "cohoc/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace cohoc {

namespace {

struct MonoCmpDesc {
    OrderKind order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b, order) > 0;
    }
};

Poly make_monic(Poly f, const Field& F) {
    if (f.is_zero() || f.lead().c == 1) return f;
    return poly_scale(f, F.inv(f.lead().c), F);
}

// Fully reduce f against G: leading and tail terms alike.  G elements are
// monic and sorted descending under `order`; the result comes out the same way.
Poly reduce_full(const Poly& f, const std::vector<Poly>& G, const Field& F, OrderKind order) {
    std::map<Monomial, uint32_t, MonoCmpDesc> work{MonoCmpDesc{order}};
    for (const Term& t : f.terms) work.emplace(t.m, t.c);
    std::vector<Term> out;
    while (!work.empty()) {
        auto it = work.begin(); // current largest monomial
        const Poly* red = nullptr;
        for (const Poly& g : G) {
            if (mono_divides(g.lead().m, it->first)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            out.push_back({it->first, it->second});
            work.erase(it);
            continue;
        }
        Monomial q = mono_div(it->first, red->lead().m);
        uint32_t c = it->second;
        work.erase(it);
        for (size_t k = 1; k < red->terms.size(); ++k) {
            Monomial m = mono_mul(red->terms[k].m, q);
            uint32_t delta = F.mul(c, red->terms[k].c);
            auto [jt, inserted] = work.emplace(std::move(m), F.neg(delta));
            if (!inserted) {
                jt->second = F.sub(jt->second, delta);
                if (jt->second == 0) work.erase(jt);
            }
        }
    }
    Poly r;
    r.terms = std::move(out);
    return r;
}

struct Pair {
    int64_t degree; // weighted degree of the lcm
    size_t i, j;
    bool operator>(const Pair& o) const {
        if (degree != o.degree) return degree > o.degree;
        if (i != o.i) return i > o.i;
        return j > o.j;
    }
};

uint64_t pair_key(size_t i, size_t j) { return (uint64_t(i) << 32) | j; }

} // namespace

MonomialIdeal antichain(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, OrderKind::degrevlex) < 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal I;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& kept : I.gens)
            if (mono_divides(kept, m)) {
                redundant = true;
                break;
            }
        if (!redundant) I.gens.push_back(m);
    }
    return I;
}

GroebnerBasis groebner_basis(const Presentation& ring, const std::vector<Poly>& extra,
                             OrderKind order, int64_t truncation) {
    const Field& F = ring.field;
    std::vector<Poly> G;
    int64_t max_input_degree = 0;
    auto feed = [&](const Poly& f) {
        if (f.is_zero()) return;
        Poly g = poly_resort(f, order);
        max_input_degree = std::max(max_input_degree, g.lead().m.degree);
        G.push_back(make_monic(std::move(g), F));
    };
    for (const Poly& f : ring.relations) feed(f);
    for (const Poly& f : extra) feed(f);
    if (truncation != kComplete && truncation < max_input_degree)
        throw TruncationTooSmall("truncation " + std::to_string(truncation) +
                                 " is below the largest input degree " +
                                 std::to_string(max_input_degree));

    std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
    std::set<uint64_t> handled;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            int64_t d = mono_lcm(G[i].lead().m, G[j].lead().m, ring.degrees).degree;
            if (truncation != kComplete && d > truncation) {
                handled.insert(pair_key(i, j));
                continue;
            }
            pairs.push({d, i, j});
        }
    };
    for (size_t j = 1; j < G.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        Pair pr = pairs.top();
        pairs.pop();
        handled.insert(pair_key(pr.i, pr.j));
        const Monomial &mi = G[pr.i].lead().m, &mj = G[pr.j].lead().m;
        // Product criterion: coprime leading monomials give a trivial S-pair.
        if (mono_coprime(mi, mj)) continue;
        Monomial lcm = mono_lcm(mi, mj, ring.degrees);
        // Chain criterion: skip when some third leading monomial divides the
        // lcm and both associated pairs were already handled.
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!mono_divides(G[k].lead().m, lcm)) continue;
            uint64_t a = pair_key(std::min(pr.i, k), std::max(pr.i, k));
            uint64_t b = pair_key(std::min(pr.j, k), std::max(pr.j, k));
            if (handled.count(a) && handled.count(b)) skip = true;
        }
        if (skip) continue;
        Poly s = poly_sub(
            poly_mul_term(G[pr.i], mono_div(lcm, mi), 1, F, ring.degrees, order),
            poly_mul_term(G[pr.j], mono_div(lcm, mj), 1, F, ring.degrees, order), F, order);
        Poly h = reduce_full(s, G, F, order);
        if (h.is_zero()) continue;
        G.push_back(make_monic(std::move(h), F));
        push_pairs_for(G.size() - 1);
    }

    // Minimalize: keep only elements whose leading monomial no other kept
    // leading monomial divides, preferring smaller leading monomials.
    std::vector<size_t> idx(G.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return mono_cmp(G[a].lead().m, G[b].lead().m, order) < 0;
    });
    std::vector<Poly> minimal;
    for (size_t i : idx) {
        bool redundant = false;
        for (const Poly& kept : minimal)
            if (mono_divides(kept.lead().m, G[i].lead().m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(G[i]);
    }
    // Tail-reduce each element against the others.
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        others.reserve(minimal.size() - 1);
        for (size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        reduced.push_back(make_monic(reduce_full(minimal[i], others, F, order), F));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        if (a.lead().m.degree != b.lead().m.degree)
            return a.lead().m.degree < b.lead().m.degree;
        return mono_cmp(a.lead().m, b.lead().m, order) < 0;
    });
    return GroebnerBasis{&ring, order, std::move(reduced), truncation};
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    if (!gb.complete()) {
        for (const Term& t : f.terms)
            if (t.m.degree > gb.truncation)
                throw DegreeExceedsTruncation("degree " + std::to_string(t.m.degree) +
                                              " exceeds basis truncation " +
                                              std::to_string(gb.truncation));
    }
    return reduce_full(poly_resort(f, gb.order), gb.elements, gb.ring->field, gb.order);
}

MonomialIdeal leading_ideal(const GroebnerBasis& gb) {
    if (!gb.complete()) throw TruncatedBasis("leading ideal requires a complete basis");
    std::vector<Monomial> lms;
    lms.reserve(gb.elements.size());
    for (const Poly& g : gb.elements) lms.push_back(g.lead().m);
    return antichain(std::move(lms));
}

std::vector<Monomial> monomials_of_degree(const std::vector<int64_t>& gen_degrees, int64_t d,
                                          OrderKind order) {
    std::vector<Monomial> out;
    std::vector<uint32_t> exps(gen_degrees.size(), 0);
    auto rec = [&](auto&& self, size_t i, int64_t remaining) -> void {
        if (i + 1 == gen_degrees.size()) {
            if (remaining % gen_degrees[i] == 0) {
                exps[i] = static_cast<uint32_t>(remaining / gen_degrees[i]);
                out.push_back(mono_make(exps, gen_degrees));
                exps[i] = 0;
            }
            return;
        }
        for (int64_t e = 0; e * gen_degrees[i] <= remaining; ++e) {
            exps[i] = static_cast<uint32_t>(e);
            self(self, i + 1, remaining - e * gen_degrees[i]);
        }
        exps[i] = 0;
    };
    if (gen_degrees.empty()) {
        if (d == 0) out.push_back(mono_one(0));
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, order) < 0;
    });
    return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int64_t d) {
    if (!gb.complete() && d > gb.truncation)
        throw DegreeExceedsTruncation("degree " + std::to_string(d) +
                                      " exceeds basis truncation " +
                                      std::to_string(gb.truncation));
    std::vector<Monomial> out;
    for (Monomial& m : monomials_of_degree(gb.ring->degrees, d, gb.order)) {
        bool standard = true;
        for (const Poly& g : gb.elements)
            if (mono_divides(g.lead().m, m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(std::move(m));
    }
    return out;
}

} // namespace cohoc
