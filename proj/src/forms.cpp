#include "hecke/forms.hpp"

#include <utility>

#include "hecke/membership.hpp"

namespace hecke {

ProjForm::ProjForm(RingInt A, RingInt B, RingInt C, int s)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), s_(s) {
    if (s_ != 1 && s_ != -1) throw DomainError("orientation must be +1 or -1");
    check_same_context(A_.context(), B_.context());
    check_same_context(A_.context(), C_.context());
    if (discriminant().sign() != Sign::positive)
        throw DomainError("form is not indefinite");
    for (const RingInt* coeff : {&A_, &B_, &C_}) {
        Sign sg = coeff->sign();
        if (sg == Sign::zero) continue;
        if (sg == Sign::negative) {
            A_ = -A_;
            B_ = -B_;
            C_ = -C_;
            s_ = -s_;
        }
        break;
    }
}

RingInt ProjForm::discriminant() const { return B_ * B_ - A_ * C_ * mpz_class(4); }

bool operator==(const ProjForm& F, const ProjForm& G) {
    return F.s_ == G.s_ && F.A_ == G.A_ && F.B_ == G.B_ && F.C_ == G.C_;
}

bool form_repr_less(const ProjForm& F, const ProjForm& G) {
    if (F.s_ != G.s_) return F.s_ < G.s_;
    for (auto [a, b] : {std::pair{&F.A_, &G.A_}, {&F.B_, &G.B_}, {&F.C_, &G.C_}}) {
        const auto& ca = a->coeffs();
        const auto& cb = b->coeffs();
        for (size_t i = 0; i < ca.size(); ++i) {
            int c = cmp(ca[i], cb[i]);
            if (c != 0) return c < 0;
        }
    }
    return false;
}

ZeroPair zeros(const ProjForm& F) {
    const ContextPtr& ctx = F.context();
    Surd xplus{RingRat::zero(ctx)}, xminus{RingRat::zero(ctx)};
    if (F.A().is_zero()) {
        // D = B^2 > 0, so B != 0; the zero set degenerates to {0, infinity}
        if (F.B().sign() == Sign::positive) {
            xplus = Surd(RingRat::zero(ctx));
            xminus = Surd::infinity(ctx);
        } else {
            xplus = Surd::infinity(ctx);
            xminus = Surd(RingRat::zero(ctx));
        }
    } else {
        RingInt D = F.discriminant();
        RingRat two_a = RingRat(F.A()) * RingRat::integer(ctx, 2);
        RingRat p = RingRat(-F.B()) / two_a;
        RingRat r = RingRat::one(ctx) / two_a;
        xplus = Surd(p, r, D);
        xminus = Surd(p, -r, D);
    }
    if (F.s() == 1) return {xplus, xminus};
    return {xminus, xplus};
}

ProjForm act(const ProjMatrix& g, const ProjForm& F) {
    check_same_context(g.context(), F.context());
    RingRat a = g.a(), b = g.b(), c = g.c(), d = g.d();
    RingRat A{F.A()}, B{F.B()}, C{F.C()};
    RingRat two = RingRat::integer(F.context(), 2);
    RingRat A2 = A * d * d - B * c * d + C * c * c;
    RingRat B2 = B * (a * d + b * c) - two * (A * b * d + C * a * c);
    RingRat C2 = A * b * b - B * a * b + C * a * a;
    if (!A2.is_integral() || !B2.is_integral() || !C2.is_integral())
        throw DomainError("form action left Z[lambda]");
    return ProjForm(A2.as_ring_int(), B2.as_ring_int(), C2.as_ring_int(), F.s());
}

ProjMatrix psi2(const ProjForm& F) {
    const ContextPtr& ctx = F.context();
    auto t = sqrt_in_ring(F.discriminant() + RingInt::integer(ctx, 4));
    if (!t)
        throw DomainError("not a Gamma-form: D + 4 has no square root in Z[lambda]");
    RingRat st = RingRat(*t) * RingRat::integer(ctx, F.s());
    RingRat half = RingRat::rational(ctx, 1, 2);
    return ProjMatrix((st - RingRat(F.B())) * half, RingRat(-F.C()), RingRat(F.A()),
                      (st + RingRat(F.B())) * half);
}

ProjForm psi2_inv(const ProjMatrix& g) {
    if (g.classify() != ElementClass::hyperbolic)
        throw DomainError("psi2_inv requires a hyperbolic element");
    if (!g.is_integral())
        throw DomainError("psi2_inv requires entries in Z[lambda]");
    int s = g.trace().sign() == Sign::positive ? 1 : -1;
    return ProjForm(g.c().as_ring_int(), (g.d() - g.a()).as_ring_int(),
                    (-g.b()).as_ring_int(), s);
}

bool is_reduced(const ProjForm& F) {
    ZeroPair z = zeros(F);
    return z.attracting.sign() == Sign::positive && z.repelling.sign() == Sign::negative;
}

std::string GammaFormCheck::reason() const {
    switch (status) {
        case GammaFormStatus::yes: return "yes";
        case GammaFormStatus::non_square_discriminant_shift:
            return "non-square-discriminant-shift";
        case GammaFormStatus::not_in_group: return "not-in-group";
    }
    return {};
}

GammaFormCheck validate_gamma_form(const ProjForm& F) {
    const ContextPtr& ctx = F.context();
    auto t = sqrt_in_ring(F.discriminant() + RingInt::integer(ctx, 4));
    if (!t) return {GammaFormStatus::non_square_discriminant_shift};
    if (!decide(psi2(F)).member) return {GammaFormStatus::not_in_group};
    return {GammaFormStatus::yes};
}

} // namespace hecke
