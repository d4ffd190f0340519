#include "cohoc/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cohoc {

static const Int kZero = 0;

const Int& IntPoly::coeff(int64_t d) const {
    if (d < 0 || d >= static_cast<int64_t>(c.size())) return kZero;
    return c[static_cast<size_t>(d)];
}

IntPoly ip_make(std::vector<Int> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return IntPoly{std::move(coeffs)};
}

IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return ip_make(std::move(c));
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return ip_make(std::move(c));
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    }
    return ip_make(std::move(c));
}

IntPoly ip_one_minus_t(int64_t d) {
    std::vector<Int> c(static_cast<size_t>(d) + 1, 0);
    c[0] = 1;
    c[static_cast<size_t>(d)] = -1;
    return IntPoly{std::move(c)};
}

bool ip_equal(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

bool ip_nonneg(const IntPoly& a) {
    for (const Int& v : a.c)
        if (v < 0) return false;
    return true;
}

IpDivMod ip_divmod(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    IntPoly rem = a;
    std::vector<Int> quot;
    const Int& lead = b.c.back();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int64_t shift = rem.degree() - b.degree();
        Int q = rem.c.back() / lead;
        if (q * lead != rem.c.back()) break; // not exactly divisible at this step
        if (static_cast<int64_t>(quot.size()) <= shift) quot.resize(shift + 1, 0);
        quot[static_cast<size_t>(shift)] = q;
        std::vector<Int> scaled(static_cast<size_t>(shift) + b.c.size(), 0);
        for (size_t i = 0; i < b.c.size(); ++i) scaled[shift + i] = q * b.c[i];
        rem = ip_sub(rem, IntPoly{std::move(scaled)});
    }
    return {ip_make(std::move(quot)), std::move(rem)};
}

std::string ip_print(const IntPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int64_t d = 0; d <= a.degree(); ++d) {
        const Int& v = a.c[static_cast<size_t>(d)];
        if (v == 0) continue;
        Int mag = v < 0 ? Int(-v) : v;
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        std::string term;
        if (d == 0) {
            term = mag.str();
        } else {
            if (mag != 1) term = mag.str() + "*";
            term += d == 1 ? "t" : "t^" + std::to_string(d);
        }
        out += term;
    }
    return out;
}

HilbertSeries hs_canonical(HilbertSeries s) {
    std::sort(s.den.begin(), s.den.end());
    if (s.num.is_zero()) {
        s.den.clear();
        return s;
    }
    bool progress = true;
    while (progress && !s.den.empty()) {
        progress = false;
        for (size_t i = 0; i < s.den.size(); ++i) {
            IpDivMod dm = ip_divmod(s.num, ip_one_minus_t(s.den[i]));
            if (dm.rem.is_zero()) {
                s.num = std::move(dm.quot);
                s.den.erase(s.den.begin() + i);
                progress = true;
                break;
            }
        }
    }
    return s;
}

static IntPoly den_poly(const std::vector<int64_t>& den) {
    IntPoly p = ip_make({1});
    for (int64_t d : den) p = ip_mul(p, ip_one_minus_t(d));
    return p;
}

bool hs_equal(const HilbertSeries& a, const HilbertSeries& b) {
    // Cross-multiply with the factors missing on each side.
    std::multiset<int64_t> da(a.den.begin(), a.den.end()), db(b.den.begin(), b.den.end());
    std::vector<int64_t> only_a, only_b;
    for (int64_t d : da) {
        auto it = db.find(d);
        if (it != db.end())
            db.erase(it);
        else
            only_a.push_back(d);
    }
    only_b.assign(db.begin(), db.end());
    return ip_equal(ip_mul(a.num, den_poly(only_b)), ip_mul(b.num, den_poly(only_a)));
}

HilbertSeries hs_sub(const HilbertSeries& a, const HilbertSeries& b) {
    std::multiset<int64_t> da(a.den.begin(), a.den.end()), db(b.den.begin(), b.den.end());
    // Common denominator: per degree, the larger multiplicity.
    std::multiset<int64_t> common = da;
    {
        std::multiset<int64_t> tmp = da;
        for (int64_t d : db) {
            auto it = tmp.find(d);
            if (it != tmp.end())
                tmp.erase(it);
            else
                common.insert(d);
        }
    }
    std::vector<int64_t> extra_a, extra_b;
    {
        std::multiset<int64_t> t = common;
        for (int64_t d : da) t.erase(t.find(d));
        extra_a.assign(t.begin(), t.end());
    }
    {
        std::multiset<int64_t> t = common;
        for (int64_t d : db) t.erase(t.find(d));
        extra_b.assign(t.begin(), t.end());
    }
    HilbertSeries r;
    r.num = ip_sub(ip_mul(a.num, den_poly(extra_a)), ip_mul(b.num, den_poly(extra_b)));
    r.den.assign(common.begin(), common.end());
    return hs_canonical(std::move(r));
}

HilbertSeries hs_mul_factor(HilbertSeries s, int64_t d) {
    // Cancel against an equal denominator factor when present.
    auto it = std::find(s.den.begin(), s.den.end(), d);
    if (it != s.den.end()) {
        s.den.erase(it);
        return s;
    }
    s.num = ip_mul(s.num, ip_one_minus_t(d));
    return s;
}

std::string hs_print(const HilbertSeries& s) {
    if (s.den.empty()) return ip_print(s.num);
    std::string out = "(" + ip_print(s.num) + ")";
    out += " / (";
    for (int64_t d : s.den) out += d == 1 ? "(1-t)" : "(1-t^" + std::to_string(d) + ")";
    out += ")";
    return out;
}

// --- numerator of a monomial-ideal quotient --------------------------------

namespace {

struct AntichainKey {
    std::vector<std::vector<uint32_t>> exps;
    bool operator<(const AntichainKey& o) const { return exps < o.exps; }
};

AntichainKey key_of(const MonomialIdeal& I) {
    AntichainKey k;
    k.exps.reserve(I.gens.size());
    for (const Monomial& m : I.gens) k.exps.push_back(m.exps);
    std::sort(k.exps.begin(), k.exps.end());
    return k;
}

struct NumCtx {
    const std::vector<int64_t>& degrees;
    std::map<AntichainKey, IntPoly> memo;
};

IntPoly numerator(const MonomialIdeal& I, NumCtx& ctx) {
    if (I.gens.empty()) return ip_make({1});
    // Pairwise coprime generators: the quotient is a tensor product.
    bool coprime = true;
    for (size_t i = 0; i < I.gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < I.gens.size() && coprime; ++j)
            if (!mono_coprime(I.gens[i], I.gens[j])) coprime = false;
    if (coprime) {
        IntPoly p = ip_make({1});
        for (const Monomial& m : I.gens) p = ip_mul(p, ip_one_minus_t(m.degree));
        return p;
    }
    AntichainKey key = key_of(I);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;

    // Pivot: the variable occurring in the most generators.
    size_t ngens_ring = I.gens[0].exps.size();
    std::vector<int> freq(ngens_ring, 0);
    for (const Monomial& m : I.gens)
        for (size_t v = 0; v < ngens_ring; ++v)
            if (m.exps[v]) ++freq[v];
    size_t pivot = 0;
    for (size_t v = 1; v < ngens_ring; ++v)
        if (freq[v] > freq[pivot]) pivot = v;

    // N(I) = N(I + <x>) + t^{deg x} * N(I : x)
    std::vector<Monomial> plus_x, colon;
    Monomial x = mono_one(ngens_ring);
    x.exps[pivot] = 1;
    x.degree = ctx.degrees[pivot];
    plus_x.push_back(x);
    for (const Monomial& m : I.gens) {
        if (m.exps[pivot] == 0) {
            plus_x.push_back(m);
            colon.push_back(m);
        } else {
            Monomial q = m;
            q.exps[pivot] -= 1;
            q.degree -= ctx.degrees[pivot];
            colon.push_back(std::move(q));
        }
    }
    IntPoly n0 = numerator(antichain(std::move(plus_x)), ctx);
    IntPoly n1 = numerator(antichain(std::move(colon)), ctx);
    std::vector<Int> shifted(static_cast<size_t>(ctx.degrees[pivot]), 0);
    shifted.insert(shifted.end(), n1.c.begin(), n1.c.end());
    IntPoly result = ip_add(n0, IntPoly{std::move(shifted)});
    ctx.memo.emplace(std::move(key), result);
    return result;
}

} // namespace

HilbertSeries monomial_ideal_series(const MonomialIdeal& ideal,
                                    const std::vector<GeneratorInfo>& gens) {
    std::vector<int64_t> degrees;
    degrees.reserve(gens.size());
    for (const GeneratorInfo& g : gens) degrees.push_back(g.degree);
    NumCtx ctx{degrees, {}};
    HilbertSeries s{numerator(ideal, ctx), degrees};
    return hs_canonical(std::move(s));
}

HilbertSeries poincare_series(const Presentation& ring, OrderKind order) {
    return quotient_series(ring, {}, order);
}

HilbertSeries quotient_series(const Presentation& ring, const std::vector<Poly>& extra,
                              OrderKind order) {
    GroebnerBasis gb = groebner_basis(ring, extra, order);
    return monomial_ideal_series(leading_ideal(gb), ring.gens);
}

std::vector<Int> expand(const HilbertSeries& s, int64_t bound) {
    std::vector<Int> c(static_cast<size_t>(bound) + 1, 0);
    for (int64_t d = 0; d <= bound && d <= s.num.degree(); ++d)
        c[static_cast<size_t>(d)] = s.num.coeff(d);
    // Multiplying by 1/(1-t^d) is a strided prefix sum.
    for (int64_t d : s.den)
        for (int64_t k = d; k <= bound; ++k)
            c[static_cast<size_t>(k)] += c[static_cast<size_t>(k - d)];
    return c;
}

ClearResult clear_parameters(const HilbertSeries& s, const std::vector<int64_t>& degrees) {
    IntPoly num = s.num;
    std::multiset<int64_t> den(s.den.begin(), s.den.end());
    for (int64_t d : degrees) {
        auto it = den.find(d);
        if (it != den.end())
            den.erase(it);
        else
            num = ip_mul(num, ip_one_minus_t(d));
    }
    IpDivMod dm = ip_divmod(num, den_poly(std::vector<int64_t>(den.begin(), den.end())));
    ClearResult r;
    r.is_polynomial = dm.rem.is_zero();
    if (r.is_polynomial) {
        r.poly = std::move(dm.quot);
        r.witness_degree = -1;
    } else {
        r.remainder = std::move(dm.rem);
        int64_t lowest = 0;
        while (r.remainder.coeff(lowest) == 0) ++lowest;
        r.witness_degree = lowest;
    }
    return r;
}

} // namespace cohoc
