#include "hecke/moebius.hpp"

#include <utility>

#include "interval.hpp"

namespace hecke {

// --- Surd ----------------------------------------------------------------------

Surd Surd::infinity(const ContextPtr& ctx) {
    Surd s;
    s.p_ = RingRat::zero(ctx);
    s.r_ = RingRat::zero(ctx);
    s.delta_ = RingInt::zero(ctx);
    s.infinite_ = true;
    return s;
}

Surd::Surd(RingRat rational_value)
    : p_(std::move(rational_value)),
      r_(RingRat::zero(p_.context())),
      delta_(RingInt::zero(p_.context())) {}

Surd::Surd(RingRat p, RingRat r, RingInt delta)
    : p_(std::move(p)), r_(std::move(r)), delta_(std::move(delta)) {
    if (r_.is_zero()) {
        delta_ = RingInt::zero(p_.context());
    } else if (delta_.sign() != Sign::positive) {
        throw DomainError("surd radicand must be positive");
    }
}

Sign Surd::sign() const {
    if (infinite_) return Sign::positive;
    if (r_.is_zero()) return p_.sign();
    Sign sp = p_.sign();
    Sign sr = r_.sign();
    if (sp == Sign::zero) return sr;
    if (sp == sr) return sp;
    // opposite rational and radical parts: decide on p^2 - r^2 delta
    Sign s2 = (p_ * p_ - r_ * r_ * RingRat(delta_)).sign();
    return sp * s2;
}

Surd Surd::conjugate() const {
    if (infinite_) return *this;
    Surd s = *this;
    s.r_ = -s.r_;
    return s;
}

namespace {

// difference a - b as a surd over a common radicand; throws if both are
// irrational with different radicands (never needed within one computation)
Surd surd_difference(const Surd& a, const Surd& b) {
    const ContextPtr& ctx = a.context();
    RingInt delta = RingInt::zero(ctx);
    if (!a.radical_coeff().is_zero()) delta = a.radicand();
    if (!b.radical_coeff().is_zero()) {
        if (!a.radical_coeff().is_zero() && !(a.radicand() == b.radicand()))
            throw DomainError("comparing surds with different radicands");
        delta = b.radicand();
    }
    RingRat r = a.radical_coeff() - b.radical_coeff();
    if (r.is_zero()) return Surd(a.rational_part() - b.rational_part());
    return Surd(a.rational_part() - b.rational_part(), std::move(r), std::move(delta));
}

std::strong_ordering order_from_sign(Sign s) {
    if (s == Sign::negative) return std::strong_ordering::less;
    if (s == Sign::positive) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace

bool operator==(const Surd& a, const Surd& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return order_from_sign(surd_difference(a, b).sign());
}

std::strong_ordering Surd::compare(const ProjPoint& x) const {
    if (infinite_ && x.is_infinity()) return std::strong_ordering::equal;
    if (infinite_) return std::strong_ordering::greater;
    if (x.is_infinity()) return std::strong_ordering::less;
    return *this <=> Surd(x.value());
}

// --- ProjMatrix ------------------------------------------------------------------

ProjMatrix::ProjMatrix(RingRat a, RingRat b, RingRat c, RingRat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (!(a_ * d_ - b_ * c_ == RingRat::one(a_.context())))
        throw DomainError("matrix determinant is not 1");
    for (const RingRat* e : {&a_, &b_, &c_, &d_}) {
        Sign s = e->sign();
        if (s == Sign::zero) continue;
        if (s == Sign::negative) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
            d_ = -d_;
        }
        break;
    }
}

ProjMatrix ProjMatrix::identity(const ContextPtr& ctx) {
    return ProjMatrix(RingRat::one(ctx), RingRat::zero(ctx), RingRat::zero(ctx),
                      RingRat::one(ctx));
}

ProjMatrix ProjMatrix::translation_power(const ContextPtr& ctx, const mpz_class& n) {
    return ProjMatrix(RingRat::one(ctx), RingRat(RingInt::lambda(ctx) * n),
                      RingRat::zero(ctx), RingRat::one(ctx));
}

bool ProjMatrix::is_identity() const { return *this == identity(context()); }

bool ProjMatrix::is_integral() const {
    return a_.is_integral() && b_.is_integral() && c_.is_integral() && d_.is_integral();
}

ProjMatrix ProjMatrix::inverse() const { return ProjMatrix(d_, -b_, -c_, a_); }

ProjMatrix operator*(const ProjMatrix& g, const ProjMatrix& h) {
    check_same_context(g.context(), h.context());
    return ProjMatrix(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
                      g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_);
}

bool operator==(const ProjMatrix& g, const ProjMatrix& h) {
    return g.a_ == h.a_ && g.b_ == h.b_ && g.c_ == h.c_ && g.d_ == h.d_;
}

ElementClass ProjMatrix::classify() const {
    if (is_identity()) return ElementClass::identity;
    RingRat tr = trace();
    Sign s = (tr * tr - RingRat::integer(context(), 4)).sign();
    if (s == Sign::positive) return ElementClass::hyperbolic;
    if (s == Sign::zero) return ElementClass::parabolic;
    return ElementClass::elliptic;
}

ProjPoint ProjMatrix::apply(const ProjPoint& z) const {
    if (z.is_infinity()) {
        if (c_.is_zero()) return ProjPoint::infinity();
        return ProjPoint(a_ / c_);
    }
    RingRat den = c_ * z.value() + d_;
    if (den.is_zero()) return ProjPoint::infinity();
    return ProjPoint((a_ * z.value() + b_) / den);
}

Surd ProjMatrix::apply(const Surd& x) const {
    const ContextPtr& ctx = context();
    if (x.is_infinity()) {
        if (c_.is_zero()) return Surd::infinity(ctx);
        return Surd(a_ / c_);
    }
    if (x.is_rational()) {
        ProjPoint img = apply(ProjPoint(x.rational_part()));
        return img.is_infinity() ? Surd::infinity(ctx) : Surd(img.value());
    }
    // numerator and denominator as surds over the same radicand
    RingRat np = a_ * x.rational_part() + b_;
    RingRat nr = a_ * x.radical_coeff();
    RingRat dp = c_ * x.rational_part() + d_;
    RingRat dr = c_ * x.radical_coeff();
    RingRat delta_rat(x.radicand());

    if (dp.is_zero() && dr.is_zero()) return Surd::infinity(ctx);
    // norm of the denominator; zero only if the denominator itself vanishes
    // as a real number or the radicand is a square in Q(lambda)
    RingRat norm = dp * dp - dr * dr * delta_rat;
    if (norm.is_zero()) {
        if (dr.is_zero()) return Surd::infinity(ctx); // dp == 0 handled above
        // sqrt(delta) = dp / dr exactly; the whole expression is rational
        RingRat root = dp / dr;
        if (Surd(dp, dr, x.radicand()).sign() == Sign::zero) return Surd::infinity(ctx);
        // denominator = dp + dr*root = 2 dp, numerator = np + nr*root
        return Surd((np + nr * root) / (dp + dr * root));
    }
    // multiply by the conjugate of the denominator
    RingRat rp = (np * dp - nr * dr * delta_rat) / norm;
    RingRat rr = (nr * dp - np * dr) / norm;
    if (rr.is_zero()) return Surd(std::move(rp));
    return Surd(std::move(rp), std::move(rr), x.radicand());
}

std::pair<Surd, Surd> ProjMatrix::fixed_points() const {
    if (classify() != ElementClass::hyperbolic)
        throw DomainError("fixed points require a hyperbolic element");
    const ContextPtr& ctx = context();
    RingRat tr = trace();
    Sign strace = tr.sign(); // nonzero, |tr| > 2

    if (c_.is_zero()) {
        // diagonal action fixing infinity; d = a^{-1}
        RingRat fin = b_ / (a_ - d_);
        bool a_big = (a_ * a_ - RingRat::one(ctx)).sign() == Sign::positive;
        if (a_big) return {Surd::infinity(ctx), Surd(fin)};
        return {Surd(fin), Surd::infinity(ctx)};
    }

    // tr = u / v with v > 0; sqrt(tr^2 - 4) = sqrt(u^2 - 4 v^2) / v
    RingInt u = tr.num();
    const mpz_class& v = tr.den();
    RingInt delta = u * u - RingInt::integer(ctx, 4 * v * v);
    RingRat abs_tr = strace == Sign::negative ? -tr : tr;
    RingRat sgn = RingRat::integer(ctx, strace == Sign::negative ? -1 : 1);
    RingRat sc = sgn * c_;
    RingRat p = (abs_tr / RingRat::integer(ctx, 2) - sgn * d_) / sc;
    RingRat r = (RingRat::rational(ctx, 1, 2 * v)) / sc;
    return {Surd(p, r, delta), Surd(p, -r, delta)};
}

RingRat ProjMatrix::entry_sum() const {
    RingRat s = a_ + b_ + c_ + d_;
    return s.sign() == Sign::negative ? -s : s;
}

bool ProjMatrix::mixed_signs() const {
    bool pos = false, neg = false;
    for (const RingRat* e : {&a_, &b_, &c_, &d_}) {
        Sign s = e->sign();
        if (s == Sign::positive) pos = true;
        if (s == Sign::negative) neg = true;
    }
    return pos && neg;
}

RealEnclosure displacement(const ProjMatrix& g, long precision_bits) {
    if (g.classify() != ElementClass::hyperbolic)
        throw DomainError("displacement length requires a hyperbolic element");
    if (precision_bits < 8) precision_bits = 8;
    for (mpfr_prec_t prec = std::max<long>(96, precision_bits + 32);; prec *= 2) {
        detail::Interval tr = detail::eval_at_root(g.trace(), 1, prec);
        detail::Interval atr = tr.abs();
        detail::Interval four(prec);
        four.set(4L);
        detail::Interval disc = atr * atr - four;
        if (disc.sign() <= 0) continue; // |tr| > 2, refine until certified
        detail::Interval two(prec);
        two.set(2L);
        detail::Interval lam_plus = (atr + disc.sqrt()) / two;
        detail::Interval t = two * lam_plus.log();
        if (!t.relative_width_below(precision_bits)) {
            if (prec > (1L << 24))
                throw DiagnosticError("displacement exceeded precision cap");
            continue;
        }
        RealEnclosure out;
        out.lo = t.lo_double();
        out.hi = t.hi_double();
        out.decimal = t.midpoint_decimal((long)(precision_bits * 0.30103) + 1);
        return out;
    }
}

Generators generators(const ContextPtr& ctx) {
    const long q = ctx->q();
    Generators gen;
    RingRat zero = RingRat::zero(ctx), one = RingRat::one(ctx);
    gen.S = ProjMatrix(zero, one, -one, zero);
    gen.T = ProjMatrix(one, RingRat::lambda(ctx), zero, one);
    gen.U = gen.T * gen.S;

    gen.chebyshev.resize(q + 1);
    gen.chebyshev[0] = RingInt::zero(ctx);
    gen.chebyshev[1] = RingInt::one(ctx);
    RingInt lam = RingInt::lambda(ctx);
    for (long k = 2; k <= q; ++k)
        gen.chebyshev[k] = lam * gen.chebyshev[k - 1] - gen.chebyshev[k - 2];
    if (!gen.chebyshev[q].is_zero())
        throw DiagnosticError("Chebyshev recurrence did not close at u_q = 0");

    for (long k = 1; k <= q - 1; ++k) {
        RingRat um{gen.chebyshev[k - 1]};
        RingRat u{gen.chebyshev[k]};
        RingRat up{gen.chebyshev[k + 1]};
        ProjMatrix ginv{u, up, um, u};
        gen.g_inv.push_back(ginv);
        gen.g.push_back(ginv.inverse());
        gen.left.push_back(ginv.apply(ProjPoint(RingRat::zero(ctx))));
        gen.right.push_back(ginv.apply(ProjPoint::infinity()));
    }
    return gen;
}

} // namespace hecke
