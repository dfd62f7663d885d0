#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke/ring.hpp"

namespace hecke {

class ProjMatrix;

/// Quadratic surd p + r*sqrt(delta) over Q(lambda), extended by infinity.
/// The radicand is kept literally as constructed; comparisons between two
/// irrational surds require the same radicand. All sign and order decisions
/// are exact.
class Surd {
public:
    Surd() = default;
    static Surd infinity(const ContextPtr& ctx);
    Surd(RingRat rational_value); // r = 0, delta = 0
    Surd(RingRat p, RingRat r, RingInt delta);

    const ContextPtr& context() const { return p_.context(); }
    bool is_infinity() const { return infinite_; }
    bool is_rational() const { return !infinite_ && r_.is_zero(); }
    const RingRat& rational_part() const { return p_; }
    const RingRat& radical_coeff() const { return r_; }
    const RingInt& radicand() const { return delta_; }

    /// Exact sign of the real number; infinity counts as positive.
    Sign sign() const;

    Surd conjugate() const; // p - r*sqrt(delta)

    friend bool operator==(const Surd& a, const Surd& b);
    friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);
    std::strong_ordering compare(const ProjPoint& x) const;

private:
    RingRat p_, r_;
    RingInt delta_;
    bool infinite_ = false;
};

enum class ElementClass { identity, parabolic, elliptic, hyperbolic };

/// Element of PSL_2 over Q(lambda): determinant-one representative with the
/// first nonzero entry (in the order a, b, c, d) positive under the
/// distinguished embedding, so equality is plain entry equality.
class ProjMatrix {
public:
    ProjMatrix() = default;
    ProjMatrix(RingRat a, RingRat b, RingRat c, RingRat d);
    static ProjMatrix identity(const ContextPtr& ctx);
    /// T^n = [[1, n lambda], [0, 1]].
    static ProjMatrix translation_power(const ContextPtr& ctx, const mpz_class& n);

    const ContextPtr& context() const { return a_.context(); }
    const RingRat& a() const { return a_; }
    const RingRat& b() const { return b_; }
    const RingRat& c() const { return c_; }
    const RingRat& d() const { return d_; }

    bool is_identity() const;
    bool is_integral() const;
    RingRat trace() const { return a_ + d_; }

    ProjMatrix inverse() const;
    friend ProjMatrix operator*(const ProjMatrix& g, const ProjMatrix& h);
    friend bool operator==(const ProjMatrix& g, const ProjMatrix& h);

    /// |a+d| > 2 hyperbolic, = 2 parabolic (if not the identity), < 2 elliptic.
    ElementClass classify() const;

    /// Fractional linear action on the boundary, with c z + d = 0 -> infinity.
    ProjPoint apply(const ProjPoint& z) const;
    /// Moebius action extended to quadratic surds; the radicand is preserved.
    Surd apply(const Surd& x) const;

    /// (attracting, repelling) fixed points of a hyperbolic element.
    std::pair<Surd, Surd> fixed_points() const;

    /// |a + b + c + d| under the distinguished embedding.
    RingRat entry_sum() const;
    /// True iff the entries contain both a positive and a negative value.
    bool mixed_signs() const;

private:
    RingRat a_, b_, c_, d_;
};

/// Certified enclosure of an approximate real quantity.
struct RealEnclosure {
    double lo = 0;
    double hi = 0;
    std::string decimal;
};

/// Displacement length 2 log((|tr| + sqrt(tr^2 - 4)) / 2) of a hyperbolic
/// element, certified to a relative width below 2^-precision_bits. The only
/// approximate quantity in the library; nothing downstream decides on it.
RealEnclosure displacement(const ProjMatrix& g, long precision_bits = 128);

/// The distinguished elements of the Hecke triangle group Gamma_q,
/// S = [[0,1],[-1,0]], T = [[1,lambda],[0,1]], U = TS, g_k = (U^k S)^{-1},
/// together with the boundary interval endpoints g_k^{-1}.0 and g_k^{-1}.inf.
/// The entries of g_k^{-1} are the Chebyshev-like values
/// u_k = sin(k pi/q)/sin(pi/q) computed exactly in Z[lambda] by
/// u_0 = 0, u_1 = 1, u_{k+1} = lambda u_k - u_{k-1}.
struct Generators {
    ProjMatrix S, T, U;
    std::vector<ProjMatrix> g;     // g[k-1] = g_k,     k = 1..q-1
    std::vector<ProjMatrix> g_inv; // g_inv[k-1] = g_k^{-1}
    std::vector<ProjPoint> left;   // left[k-1]  = g_k^{-1}.0
    std::vector<ProjPoint> right;  // right[k-1] = g_k^{-1}.inf
    std::vector<RingInt> chebyshev; // u_0 .. u_q
};

Generators generators(const ContextPtr& ctx);

} // namespace hecke
