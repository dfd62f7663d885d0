#include "hecke/enumeration.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <utility>

#include "hecke/reduction.hpp"
#include "interval.hpp"

namespace hecke {

namespace {

// integral 2x2 matrices over Z[lambda]; the search only ever multiplies the
// nonnegative representatives p_k of g_k^{-1}, so entries stay nonnegative
struct IMat {
    RingInt a, b, c, d;
};

IMat imul(const IMat& x, const IMat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// sign of (v^2 - bound) for v >= 0 and a rational bound = num/den, den > 0
Sign square_vs_rational(const RingInt& v, const mpq_class& bound) {
    RingInt lhs = (v * v) * bound.get_den() - RingInt::integer(v.context(), bound.get_num());
    return lhs.sign();
}

struct SearchState {
    const ContextPtr& ctx;
    const std::vector<IMat>& letters; // p_1 .. p_{q-1}
    const mpq_class& dmax;
    mpq_class dmax_plus_4;
    long cap;
    std::vector<EnumeratedForm> out;
    unsigned long long explored = 0;

    void dfs(const IMat& m, std::vector<long>& word) {
        RingInt tr = m.a + m.d;
        // emit reduced hyperbolic forms within the discriminant bound
        if (square_vs_rational(tr, mpq_class(4)) == Sign::positive &&
            m.b.sign() == Sign::positive && m.c.sign() == Sign::positive &&
            square_vs_rational(tr, dmax_plus_4) != Sign::positive) {
            ProjForm F(m.c, m.d - m.a, -m.b, 1);
            if (!is_reduced(F))
                throw DiagnosticError("off-diagonal positivity filter disagrees with is_reduced");
            out.push_back({F, word, F.discriminant()});
        }
        if ((long)word.size() >= cap) return;
        for (long k = 1; k < (long)letters.size() + 1; ++k) {
            IMat child = imul(m, letters[k - 1]);
            ++explored;
            // extensions never decrease the trace; prune once it overshoots
            if (square_vs_rational(child.a + child.d, dmax_plus_4) == Sign::positive)
                continue;
            word.push_back(k);
            dfs(child, word);
            word.pop_back();
        }
    }
};

std::vector<IMat> letter_matrices(const ContextPtr& ctx) {
    Generators gen = generators(ctx);
    std::vector<IMat> letters;
    for (long k = 1; k <= ctx->q() - 1; ++k) {
        letters.push_back({gen.chebyshev[k], gen.chebyshev[k + 1], gen.chebyshev[k - 1],
                           gen.chebyshev[k]});
    }
    return letters;
}

} // namespace

long enumeration_word_cap(const mpq_class& dmax, const ContextPtr& ctx) {
    if (sgn(dmax) <= 0) return 0;
    const long prec = 128;
    detail::Interval shifted(prec);
    mpq_class s = dmax + 4;
    shifted.set(s);
    detail::Interval root = shifted.sqrt();
    detail::Interval lam = detail::cos_root(1, ctx->q(), prec);
    detail::Interval two(prec);
    two.set(2L);
    detail::Interval total = two * root / lam;
    if (ctx->q() > 3) {
        detail::Interval one(prec);
        one.set(1L);
        detail::Interval delta = two * (lam - one);
        total = total + root / delta;
    }
    mpz_class n0;
    mpfr_get_z(n0.get_mpz_t(), total.hi(), MPFR_RNDU);
    if (!n0.fits_slong_p()) throw DomainError("discriminant bound is out of range");
    return n0.get_si();
}

EnumerationReport enumerate_reduced_capped(const mpq_class& dmax, const ContextPtr& ctx,
                                           long cap, int threads) {
    EnumerationReport report;
    report.dmax = dmax;
    report.word_length_cap = cap;
    if (sgn(dmax) <= 0 || cap <= 0) return report;

    std::vector<IMat> letters = letter_matrices(ctx);
    const long nletters = (long)letters.size();
    mpq_class dmax4 = dmax + 4;

    auto run_first = [&](long k, SearchState& st) {
        // explore the subtree rooted at the single-letter word (k)
        IMat m = letters[k - 1];
        ++st.explored;
        if (square_vs_rational(m.a + m.d, dmax4) == Sign::positive) return;
        std::vector<long> word{k};
        st.dfs(m, word);
    };

    if (threads <= 1 || nletters == 1) {
        SearchState st{ctx, letters, dmax, dmax4, cap, {}, 0};
        for (long k = 1; k <= nletters; ++k) run_first(k, st);
        report.forms = std::move(st.out);
        report.explored = st.explored;
    } else {
        int nworkers = std::min<long>(threads, nletters);
        std::vector<SearchState> states;
        states.reserve(nworkers);
        for (int w = 0; w < nworkers; ++w)
            states.push_back(SearchState{ctx, letters, dmax, dmax4, cap, {}, 0});
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) {
            pool.emplace_back([&, w] {
                for (long k = 1 + w; k <= nletters; k += nworkers) run_first(k, states[w]);
                mpfr_free_cache(); // per-thread constant caches
            });
        }
        for (auto& t : pool) t.join();
        for (auto& st : states) {
            report.explored += st.explored;
            for (auto& f : st.out) report.forms.push_back(std::move(f));
        }
    }

    std::sort(report.forms.begin(), report.forms.end(),
              [](const EnumeratedForm& x, const EnumeratedForm& y) {
                  if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
                  return x.word < y.word;
              });
    std::set<ProjForm, bool (*)(const ProjForm&, const ProjForm&)> seen(&form_repr_less);
    for (const auto& f : report.forms)
        if (!seen.insert(f.form).second)
            throw DiagnosticError("duplicate form in enumeration output");
    return report;
}

EnumerationReport enumerate_reduced(const mpq_class& dmax, const ContextPtr& ctx,
                                    int threads) {
    return enumerate_reduced_capped(dmax, ctx, enumeration_word_cap(dmax, ctx), threads);
}

bool cross_check_cycles(const EnumerationReport& report) {
    std::set<ProjForm, bool (*)(const ProjForm&, const ProjForm&)> known(&form_repr_less);
    for (const auto& f : report.forms) known.insert(f.form);
    for (const auto& f : report.forms) {
        ReductionResult r = reduce(f.form);
        for (const ProjForm& P : r.period)
            if (!known.count(P)) return false;
    }
    return true;
}

} // namespace hecke
