#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const mpz_class& z) {
    int s = sgn(z);
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign operator*(Sign a, Sign b) {
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

inline Sign operator-(Sign a) { return static_cast<Sign>(-static_cast<int>(a)); }

class RingContext;
using ContextPtr = std::shared_ptr<const RingContext>;

/// Arithmetic context for Z[lambda_q], lambda_q = 2cos(pi/q).
///
/// Stores q, the field degree d = phi(2q)/2 and the minimal polynomial of
/// lambda_q over Q. The minimal polynomial is computed exactly: the
/// cyclotomic polynomial Phi_{2q} is obtained by Moebius-recursive integer
/// polynomial division and folded through the substitution x = z + 1/z.
/// Construction certifies numerically that 2cos(pi/q) is a root.
///
/// Immutable after construction; safe to share between threads.
class RingContext {
public:
    /// q >= 3; throws DomainError otherwise.
    static ContextPtr make(long q);

    long q() const { return q_; }
    long degree() const { return degree_; }

    /// Monic integer coefficients, constant term first, length degree()+1.
    const std::vector<mpz_class>& min_poly() const { return min_poly_; }

    /// The distinct real embeddings of the ring send lambda to 2cos(k pi/q);
    /// this lists the k values, the distinguished embedding (k = 1) first.
    const std::vector<long>& conjugate_ks() const { return conjugate_ks_; }

    /// Decimal approximation of lambda_q, certified to `bits` bits.
    std::string lambda_decimal(long bits) const;

    double lambda_double() const;

private:
    RingContext() = default;
    long q_ = 0;
    long degree_ = 0;
    std::vector<mpz_class> min_poly_;
    std::vector<long> conjugate_ks_;
};

inline void check_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!a || !b || a->q() != b->q())
        throw DomainError("ring context mismatch");
}

/// Element of Z[lambda_q]: integer coefficient vector of length degree(),
/// canonical (reduced modulo the minimal polynomial). The zero element is
/// the all-zero vector, so representation equality is value equality.
class RingInt {
public:
    RingInt() = default; // empty value, only valid as a container slot

    static RingInt zero(const ContextPtr& ctx);
    static RingInt one(const ContextPtr& ctx);
    static RingInt lambda(const ContextPtr& ctx);
    static RingInt integer(const ContextPtr& ctx, mpz_class n);
    /// Coefficients of any degree; reduced modulo the minimal polynomial.
    static RingInt from_coeffs(const ContextPtr& ctx, std::vector<mpz_class> coeffs);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool is_zero() const;

    /// Exact sign under the distinguished embedding lambda = 2cos(pi/q).
    /// Zero is returned iff this is the zero element; nonzero signs are
    /// certified by outward-rounded interval evaluation with doubling
    /// precision (64 bits upward).
    Sign sign() const;

    RingInt operator-() const;
    friend RingInt operator+(const RingInt& a, const RingInt& b);
    friend RingInt operator-(const RingInt& a, const RingInt& b);
    friend RingInt operator*(const RingInt& a, const RingInt& b);
    RingInt operator*(const mpz_class& n) const;
    RingInt& operator+=(const RingInt& b) { return *this = *this + b; }
    RingInt& operator-=(const RingInt& b) { return *this = *this - b; }
    RingInt& operator*=(const RingInt& b) { return *this = *this * b; }

    friend bool operator==(const RingInt& a, const RingInt& b);

    /// gcd of the coefficients, nonnegative; 0 for the zero element.
    mpz_class content() const;

private:
    ContextPtr ctx_;
    std::vector<mpz_class> c_;
};

/// The square root in Z[lambda] with nonnegative sign, if one exists.
///
/// All conjugate images of `a` are enclosed by certified intervals; if any
/// is negative there is no root. Otherwise candidate coefficient vectors
/// are reconstructed from the embedding square roots (one sign choice per
/// conjugate), rounded, and the winner is verified exactly by squaring.
std::optional<RingInt> sqrt_in_ring(const RingInt& a);

/// Element of Q(lambda_q): RingInt numerator over a positive integer
/// denominator, kept coprime to the numerator content.
class RingRat {
public:
    RingRat() = default;
    RingRat(RingInt num); // den = 1
    RingRat(RingInt num, mpz_class den);
    static RingRat zero(const ContextPtr& ctx);
    static RingRat one(const ContextPtr& ctx);
    static RingRat lambda(const ContextPtr& ctx);
    static RingRat integer(const ContextPtr& ctx, mpz_class n);
    static RingRat rational(const ContextPtr& ctx, mpz_class num, mpz_class den);

    const ContextPtr& context() const { return num_.context(); }
    const RingInt& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    RingInt as_ring_int() const; // throws DomainError unless integral

    Sign sign() const { return num_.sign(); }

    RingRat inverse() const; // throws DomainError on zero

    RingRat operator-() const;
    friend RingRat operator+(const RingRat& a, const RingRat& b);
    friend RingRat operator-(const RingRat& a, const RingRat& b);
    friend RingRat operator*(const RingRat& a, const RingRat& b);
    friend RingRat operator/(const RingRat& a, const RingRat& b);
    RingRat& operator+=(const RingRat& b) { return *this = *this + b; }
    RingRat& operator-=(const RingRat& b) { return *this = *this - b; }
    RingRat& operator*=(const RingRat& b) { return *this = *this * b; }
    RingRat& operator/=(const RingRat& b) { return *this = *this / b; }

    friend bool operator==(const RingRat& a, const RingRat& b);
    // Exact total order under the distinguished embedding.
    friend std::strong_ordering operator<=>(const RingRat& a, const RingRat& b);

private:
    void normalize();
    RingInt num_;
    mpz_class den_ = 1;
};

/// P^1 over Q(lambda): a finite RingRat or the point at infinity.
/// Ordered with infinity maximal.
class ProjPoint {
public:
    ProjPoint() = default;
    ProjPoint(RingRat v) : v_(std::move(v)), finite_(true) {}
    static ProjPoint infinity() { return ProjPoint(); }

    bool is_infinity() const { return !finite_; }
    const RingRat& value() const {
        if (!finite_) throw DomainError("projective point is infinite");
        return v_;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

private:
    RingRat v_;
    bool finite_ = false;
};

/// Smallest integer >= x, computed exactly.
mpz_class ceil_of(const RingRat& x);
/// ceil(x / y) for y > 0, computed exactly.
mpz_class ceil_ratio(const RingRat& x, const RingRat& y);

} // namespace hecke
