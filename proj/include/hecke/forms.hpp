#pragma once

#include <string>

#include "hecke/moebius.hpp"
#include "hecke/ring.hpp"

namespace hecke {

/// Projective oriented indefinite binary quadratic form over Z[lambda]:
/// the class of (A x^2 + B x y + C y^2, s) modulo (f, s) ~ (-f, -s), with
/// discriminant B^2 - 4AC > 0. The stored representative has its first
/// nonzero coefficient (in the order A, B, C) positive under the
/// distinguished embedding.
class ProjForm {
public:
    ProjForm() = default;
    ProjForm(RingInt A, RingInt B, RingInt C, int s);

    const ContextPtr& context() const { return A_.context(); }
    const RingInt& A() const { return A_; }
    const RingInt& B() const { return B_; }
    const RingInt& C() const { return C_; }
    int s() const { return s_; }

    RingInt discriminant() const;

    friend bool operator==(const ProjForm& F, const ProjForm& G);
    /// Arbitrary strict order on canonical representations (container use).
    friend bool form_repr_less(const ProjForm& F, const ProjForm& G);

private:
    RingInt A_, B_, C_;
    int s_ = 1;
};

bool form_repr_less(const ProjForm& F, const ProjForm& G);

struct ZeroPair {
    Surd attracting;
    Surd repelling;
};

/// Zeros x_+- = (-B +- sqrt(D)) / (2A), with {0, infinity} conventions for
/// A = 0, oriented by s: the attracting zero is x_+ for s = +1.
ZeroPair zeros(const ProjForm& F);

/// G-action g.f(x, y) = f(dx - by, -cx + ay); orientation unchanged.
/// The result must land back in Z[lambda]; otherwise DomainError.
ProjForm act(const ProjMatrix& g, const ProjForm& F);

/// The hyperbolic element [[(-B + s t)/2, -C], [A, (B + s t)/2]] with
/// t = sqrt(D + 4) in Z[lambda]. Throws DomainError when D + 4 has no
/// square root in the ring (the form is not a Gamma-form).
ProjMatrix psi2(const ProjForm& F);

/// Inverse correspondence [[a,b],[c,d]] -> [c, d-a, -b, sgn(a+d)].
/// Requires a hyperbolic matrix with entries in Z[lambda].
ProjForm psi2_inv(const ProjMatrix& g);

/// x_a(F) > 0 > x_r(F), decided exactly.
bool is_reduced(const ProjForm& F);

enum class GammaFormStatus { yes, non_square_discriminant_shift, not_in_group };

struct GammaFormCheck {
    GammaFormStatus status = GammaFormStatus::yes;
    bool ok() const { return status == GammaFormStatus::yes; }
    std::string reason() const;
};

/// F is a Gamma_q-form iff sqrt(D+4) exists in Z[lambda] and psi2(F) lies
/// in Gamma_q.
GammaFormCheck validate_gamma_form(const ProjForm& F);

} // namespace hecke
