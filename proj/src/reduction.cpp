#include "hecke/reduction.hpp"

#include <utility>

namespace hecke {

long interval_of(const Surd& x, const Generators& gen) {
    if (x.is_infinity() || x.sign() != Sign::positive)
        throw DomainError("interval index requires 0 < x < infinity");
    const long q1 = (long)gen.left.size(); // q - 1
    for (long k = 1; k <= q1; ++k) {
        auto cl = x.compare(gen.left[k - 1]);
        if (cl == std::strong_ordering::equal)
            throw DomainError("point on an interval boundary");
        if (cl == std::strong_ordering::greater) {
            auto cr = x.compare(gen.right[k - 1]);
            if (cr == std::strong_ordering::equal)
                throw DomainError("point on an interval boundary");
            if (cr == std::strong_ordering::less) return k;
            throw DiagnosticError("interval scan order violated");
        }
    }
    throw DomainError("point lies in no open interval"); // x <= g_{q-1}^{-1}.0 = 0
}

long interval_of(const Surd& x, const ContextPtr& ctx) {
    return interval_of(x, generators(ctx));
}

ReductionResult reduce(const ProjForm& F) {
    const ContextPtr& ctx = F.context();
    const long q = ctx->q();
    Generators gen = generators(ctx);

    GammaFormCheck check = validate_gamma_form(F);
    if (!check.ok()) throw DomainError("not a Gamma-form: " + check.reason());

    ProjMatrix target = psi2(F);
    const long cap = [&] {
        mpz_class c = ceil_ratio(target.entry_sum(), RingRat::lambda(ctx)) + q + 8;
        if (!c.fits_slong_p()) throw DiagnosticError("safety cap overflow");
        return c.get_si();
    }();

    ReductionResult res;
    ProjForm cur = F;
    ZeroPair z = zeros(cur);
    ProjMatrix h = ProjMatrix::identity(ctx);
    res.preperiod.push_back(cur);

    if (z.attracting.sign() == Sign::negative) {
        cur = act(gen.S, cur);
        z = {gen.S.apply(z.attracting), gen.S.apply(z.repelling)};
        h = gen.S;
        res.preperiod.push_back(cur);
    }

    long steps = 0;
    while (!is_reduced(cur)) {
        if (++steps > cap) throw DiagnosticError("preperiod exceeded the safety cap");
        if (z.attracting.sign() != Sign::positive)
            throw DomainError("attracting zero left the positive axis");
        long k = interval_of(z.attracting, gen);
        cur = act(gen.g[k - 1], cur);
        z = {gen.g[k - 1].apply(z.attracting), gen.g[k - 1].apply(z.repelling)};
        h = h * gen.g_inv[k - 1];
        res.preperiod.push_back(cur);
    }
    res.conjugator = h;

    const ProjForm first_reduced = cur;
    const ZeroPair zm = z;
    ProjMatrix a = ProjMatrix::identity(ctx);
    for (;;) {
        if (++steps > cap) throw DiagnosticError("period exceeded the safety cap");
        long k = interval_of(z.attracting, gen);
        cur = act(gen.g[k - 1], cur);
        z = {gen.g[k - 1].apply(z.attracting), gen.g[k - 1].apply(z.repelling)};
        a = a * gen.g_inv[k - 1];
        res.period_word.push_back(k);
        res.period.push_back(cur);
        bool pair_eq = z.attracting == zm.attracting && z.repelling == zm.repelling;
        bool form_eq = cur == first_reduced;
        if (pair_eq != form_eq)
            throw DiagnosticError("zero-pair and form period detection disagree");
        if (pair_eq) break;
    }

    // level: smallest n with h a^n h^{-1} = psi2(F); traces of a^n grow
    // strictly, so overshooting the target trace is a hard error
    RingRat target_tr = target.trace();
    if (target_tr.sign() == Sign::negative) target_tr = -target_tr;
    ProjMatrix apow = ProjMatrix::identity(ctx);
    ProjMatrix hinv = h.inverse();
    for (long n = 1;; ++n) {
        if (n > cap) throw DiagnosticError("level loop exceeded the safety cap");
        apow = apow * a;
        ProjMatrix cand = h * apow * hinv;
        if (cand == target) {
            res.level = n;
            res.hyperbolic_element = cand;
            break;
        }
        RingRat tr = apow.trace();
        if (tr.sign() == Sign::negative) tr = -tr;
        if ((tr - target_tr).sign() == Sign::positive)
            throw DiagnosticError("level loop overshot the target trace");
    }
    return res;
}

bool reduced_cycle_rotation_check(const ProjForm& F) {
    ReductionResult base = reduce(F);
    const auto& cycle = base.period;
    const size_t p = cycle.size();
    for (const ProjForm& G : cycle) {
        ReductionResult r = reduce(G);
        if (r.period.size() != p) return false;
        size_t shift = p;
        for (size_t i = 0; i < p; ++i) {
            if (r.period[0] == cycle[i]) {
                shift = i;
                break;
            }
        }
        if (shift == p) return false;
        for (size_t i = 0; i < p; ++i) {
            if (!(r.period[i] == cycle[(shift + i) % p])) return false;
        }
    }
    return true;
}

} // namespace hecke
