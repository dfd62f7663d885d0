#pragma once

// Brute-force enumeration oracle: walks EVERY generator word up to the given
// length with no pruning and collects the reduced forms with discriminant
// <= dmax. Independent of the production search; arithmetic is plain int64
// coefficient vectors with explicit per-q sign logic. Supports q in {3,4,5},
// whose rings have degree <= 2.
//
// Reducedness here comes straight from the quadratic formula for the zeros
// of [c, d-a, -b, +]: with nonnegative entries and determinant one,
// x_a > 0 > x_r collapses to b > 0 and c > 0.

#include <cstdint>
#include <set>
#include <vector>

#include "hecke/enumeration.hpp"
#include "hecke/forms.hpp"

namespace hecke_test {

namespace oracle_detail {

struct Elem {
    std::int64_t x = 0, y = 0; // x + y*lambda
};

struct OMat {
    Elem a, b, c, d;
};

struct Ring {
    long q;
    // lambda^2 = l20 + l21*lambda ; lambda = (e + sqrt(f)) / 2
    std::int64_t l20, l21, e, f;

    static Ring make(long q) {
        switch (q) {
            case 3: return {3, 0, 0, 2, 0};  // lambda = 1 (kept as (2+sqrt0)/2)
            case 4: return {4, 2, 0, 0, 8};  // lambda = sqrt 2
            case 5: return {5, 1, 1, 1, 5};  // lambda = golden ratio
            default: throw hecke::DomainError("oracle supports q in {3,4,5}");
        }
    }

    Elem mul(Elem u, Elem v) const {
        __int128 xy = (__int128)u.x * v.y + (__int128)u.y * v.x;
        __int128 yy = (__int128)u.y * v.y;
        __int128 nx = (__int128)u.x * v.x + yy * l20;
        __int128 ny = xy + yy * l21;
        if (q == 3) { // lambda = 1: fold into the rational part
            nx += ny;
            ny = 0;
        }
        Elem r{(std::int64_t)nx, (std::int64_t)ny};
        if (nx != r.x || ny != r.y || std::llabs(r.x) > (1LL << 60) ||
            std::llabs(r.y) > (1LL << 60))
            throw hecke::DiagnosticError("oracle coefficient overflow");
        return r;
    }

    static Elem add(Elem u, Elem v) { return {u.x + v.x, u.y + v.y}; }
    static Elem sub(Elem u, Elem v) { return {u.x - v.x, u.y - v.y}; }

    // exact sign of x + y*lambda with lambda = (e + sqrt f)/2
    int sign(Elem u) const {
        __int128 P = 2 * (__int128)u.x + (__int128)this->e * u.y;
        __int128 R = u.y;
        int sp = P > 0 ? 1 : (P < 0 ? -1 : 0);
        if (f == 0 || R == 0) return sp;
        int sr = R > 0 ? 1 : -1;
        if (sp == 0) return sr;
        if (sp == sr) return sp;
        __int128 t = P * P - (__int128)f * R * R;
        return t > 0 ? sp : (t < 0 ? -sp : 0);
    }

    // sign of (u - n/den) = sign(den*u - n)
    int cmp_rational(Elem u, const mpq_class& r) const {
        std::int64_t den = (std::int64_t)r.get_den().get_si();
        std::int64_t num = (std::int64_t)r.get_num().get_si();
        return sign({u.x * den - num, u.y * den});
    }
};

inline OMat omul(const Ring& R, const OMat& m, const OMat& n) {
    return {R.add(R.mul(m.a, n.a), R.mul(m.b, n.c)),
            R.add(R.mul(m.a, n.b), R.mul(m.b, n.d)),
            R.add(R.mul(m.c, n.a), R.mul(m.d, n.c)),
            R.add(R.mul(m.c, n.b), R.mul(m.d, n.d))};
}

} // namespace oracle_detail

// Every reduced form with discriminant <= dmax reachable by a word of length
// <= max_len, as canonical library forms.
inline std::set<hecke::ProjForm, bool (*)(const hecke::ProjForm&, const hecke::ProjForm&)>
oracle_reduced_forms(const mpq_class& dmax, const hecke::ContextPtr& ctx, long max_len) {
    using namespace oracle_detail;
    using hecke::ProjForm;
    using hecke::RingInt;

    const long q = ctx->q();
    Ring R = Ring::make(q);
    mpq_class dmax4 = dmax + 4;

    // letters p_k = [[u_k, u_{k+1}], [u_{k-1}, u_k]] via the sine recurrence
    std::vector<Elem> u(q + 1);
    u[0] = {0, 0};
    u[1] = {1, 0};
    Elem lam = q == 3 ? Elem{1, 0} : Elem{0, 1};
    for (long k = 2; k <= q; ++k) u[k] = Ring::sub(R.mul(lam, u[k - 1]), u[k - 2]);
    std::vector<OMat> letters;
    for (long k = 1; k <= q - 1; ++k) letters.push_back({u[k], u[k + 1], u[k - 1], u[k]});

    auto to_ring_int = [&](Elem v) {
        std::vector<mpz_class> c{mpz_class((long)v.x), mpz_class((long)v.y)};
        c.resize(ctx->degree());
        return RingInt::from_coeffs(ctx, std::move(c));
    };

    std::set<ProjForm, bool (*)(const ProjForm&, const ProjForm&)> out(&hecke::form_repr_less);

    std::vector<OMat> stack;
    std::vector<long> word;
    auto visit = [&](auto&& self) -> void {
        const OMat& m = stack.back();
        Elem tr = Ring::add(m.a, m.d);
        Elem tr2 = R.mul(tr, tr);
        bool hyperbolic = R.cmp_rational(tr2, mpq_class(4)) > 0;
        if (hyperbolic && R.sign(m.b) > 0 && R.sign(m.c) > 0 &&
            R.cmp_rational(tr2, dmax4) <= 0) {
            out.insert(ProjForm(to_ring_int(m.c), to_ring_int(Ring::sub(m.d, m.a)),
                                to_ring_int(Elem{-m.b.x, -m.b.y}), 1));
        }
        if ((long)word.size() >= max_len) return;
        for (long k = 1; k <= q - 1; ++k) {
            stack.push_back(omul(R, stack.back(), letters[k - 1]));
            word.push_back(k);
            self(self);
            stack.pop_back();
            word.pop_back();
        }
    };

    for (long k = 1; k <= q - 1; ++k) {
        stack.push_back(letters[k - 1]);
        word.push_back(k);
        visit(visit);
        stack.pop_back();
        word.pop_back();
    }
    return out;
}

} // namespace hecke_test
