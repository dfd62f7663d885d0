#include "hecke/membership.hpp"

#include <utility>

namespace hecke {

std::string WordToken::str() const {
    switch (kind) {
        case Kind::S: return "S";
        case Kind::T: return "T";
        case Kind::TInv: return "T^-1";
        case Kind::GInv: return "g" + std::to_string(k) + "^-1";
    }
    return {};
}

WordToken WordToken::parse(const std::string& text) {
    if (text == "S") return {Kind::S, 0};
    if (text == "T") return {Kind::T, 0};
    if (text == "T^-1") return {Kind::TInv, 0};
    if (text.size() > 4 && text[0] == 'g' && text.ends_with("^-1")) {
        std::string mid = text.substr(1, text.size() - 4);
        if (!mid.empty() && mid.find_first_not_of("0123456789") == std::string::npos)
            return {Kind::GInv, std::stol(mid)};
    }
    throw ParseError("invalid word token '" + text + "'");
}

long bd_interval_of(const ProjPoint& x, const Generators& gen) {
    if (!x.is_infinity()) {
        const long q1 = (long)gen.left.size(); // q - 1
        for (long k = 1; k <= q1; ++k) {
            // left endpoints decrease with k, ending at left[q-2] = 0
            if (x >= gen.left[k - 1]) return k;
        }
    }
    throw DomainError("point lies in no boundary interval");
}

long bd_interval_of(const ProjPoint& x, const ContextPtr& ctx) {
    return bd_interval_of(x, generators(ctx));
}

namespace {

// minimal l >= 0 with v + l*lambda >= 0 for every finite coordinate v
mpz_class translation_shift(const std::vector<ProjPoint>& coords, const ContextPtr& ctx) {
    mpz_class ell = 0;
    RingRat lam = RingRat::lambda(ctx);
    for (const ProjPoint& p : coords) {
        if (p.is_infinity()) continue; // vacuously nonnegative after any shift
        if (p.value().sign() == Sign::negative) {
            mpz_class need = ceil_ratio(-p.value(), lam);
            if (need > ell) ell = need;
        }
    }
    return ell;
}

} // namespace

DecisionResult decide(const ProjMatrix& g) {
    const ContextPtr& ctx = g.context();
    const long q = ctx->q();
    Generators gen = generators(ctx);

    ProjPoint at0 = g.apply(ProjPoint(RingRat::zero(ctx)));
    ProjPoint atinf = g.apply(ProjPoint::infinity());
    mpz_class ell = translation_shift({at0, atinf}, ctx);
    if (!ell.fits_slong_p())
        throw DiagnosticError("translation shift exceeds the representable word length");

    ProjMatrix h = ProjMatrix::translation_power(ctx, ell) * g;
    bool swapped = h.apply(ProjPoint(RingRat::zero(ctx))) > h.apply(ProjPoint::infinity());
    if (swapped) h = h * gen.S;

    DecisionResult res;
    res.bound = [&] {
        mpz_class b = ceil_ratio(h.entry_sum(), RingRat::lambda(ctx));
        if (!b.fits_slong_p()) throw DiagnosticError("iteration bound overflow");
        return b.get_si();
    }();
    const long cap = res.bound + q;

    std::vector<long> ks;
    while (!h.is_identity() && !h.mixed_signs()) {
        if (++res.iterations > cap)
            throw DiagnosticError("membership loop exceeded its safety cap");
        ProjPoint h0 = h.apply(ProjPoint(RingRat::zero(ctx)));
        long k = h0.is_infinity() ? 1 : bd_interval_of(h0, gen);
        h = gen.g[k - 1] * h;
        ks.push_back(k);
    }

    res.member = h.is_identity();
    if (res.member) {
        long l = ell.get_si();
        res.word.reserve((size_t)l + ks.size() + 1);
        for (long i = 0; i < l; ++i) res.word.push_back({WordToken::Kind::TInv, 0});
        for (long k : ks) res.word.push_back({WordToken::Kind::GInv, k});
        if (swapped) res.word.push_back({WordToken::Kind::S, 0});
        if (!(word_multiply(res.word, ctx) == g))
            throw DiagnosticError("membership certificate failed verification");
    }
    return res;
}

ProjMatrix word_multiply(const std::vector<WordToken>& word, const ContextPtr& ctx) {
    Generators gen = generators(ctx);
    ProjMatrix tinv = gen.T.inverse();
    ProjMatrix m = ProjMatrix::identity(ctx);
    for (const WordToken& t : word) {
        switch (t.kind) {
            case WordToken::Kind::S: m = m * gen.S; break;
            case WordToken::Kind::T: m = m * gen.T; break;
            case WordToken::Kind::TInv: m = m * tinv; break;
            case WordToken::Kind::GInv:
                if (t.k < 1 || t.k > ctx->q() - 1)
                    throw DomainError("generator index out of range for this q");
                m = m * gen.g_inv[t.k - 1];
                break;
        }
    }
    return m;
}

} // namespace hecke
