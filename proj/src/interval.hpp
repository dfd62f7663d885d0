#pragma once

// Outward-rounded interval arithmetic over MPFR. Internal to the library;
// every exact decision in the public API only uses this to certify signs,
// never to produce values.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "hecke/errors.hpp"
#include "hecke/ring.hpp"

namespace hecke::detail {

class Interval {
public:
    explicit Interval(mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
    Interval(const Interval& o) : Interval(o.prec_) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval& o) {
        if (this != &o) {
            mpfr_set_prec(lo_, o.prec_);
            mpfr_set_prec(hi_, o.prec_);
            prec_ = o.prec_;
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }

    mpfr_prec_t prec() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }

    void set(const mpz_class& z) {
        mpfr_set_z(lo_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(hi_, z.get_mpz_t(), MPFR_RNDU);
    }
    void set(long n) {
        mpfr_set_si(lo_, n, MPFR_RNDD);
        mpfr_set_si(hi_, n, MPFR_RNDU);
    }
    void set(const mpq_class& q) {
        mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    Interval operator-() const {
        Interval r(prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        // lower endpoint: min over the four products rounded down
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        // upper endpoint: max over the four products rounded up
        mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        return a * b.reciprocal();
    }

    Interval reciprocal() const {
        if (sign() == 0)
            throw DiagnosticError("interval reciprocal straddles zero");
        Interval r(prec_);
        mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
        mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
        return r;
    }

    Interval sqrt() const {
        if (mpfr_sgn(lo_) < 0)
            throw DiagnosticError("interval sqrt of possibly negative value");
        Interval r(prec_);
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    Interval log() const {
        if (mpfr_sgn(lo_) <= 0)
            throw DiagnosticError("interval log of possibly nonpositive value");
        Interval r(prec_);
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    Interval abs() const {
        int s = sign();
        if (s > 0) return *this;
        if (s < 0) return -*this;
        // straddles zero: [0, max(|lo|, hi)]
        Interval r(prec_);
        mpfr_set_zero(r.lo_, 1);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    // +1 if certainly positive, -1 if certainly negative, 0 if undecided.
    int sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    // If the interval contains exactly one integer, store it and return true;
    // if it contains none return false with found=false... (see .cpp uses)
    enum class IntegerFit { unique, none, ambiguous };
    IntegerFit integer_fit(mpz_class& out) const {
        mpz_class zlo, zhi;
        mpfr_get_z(zlo.get_mpz_t(), lo_, MPFR_RNDU); // smallest integer >= lo
        mpfr_get_z(zhi.get_mpz_t(), hi_, MPFR_RNDD); // largest integer <= hi
        if (zlo > zhi) return IntegerFit::none;
        if (zlo == zhi) {
            out = zlo;
            return IntegerFit::unique;
        }
        return IntegerFit::ambiguous;
    }

    // Relative width <= 2^-bits (with a floor on tiny magnitudes).
    bool relative_width_below(long bits) const {
        mpfr_t w, m;
        mpfr_init2(w, prec_);
        mpfr_init2(m, prec_);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        mpfr_abs(m, lo_, MPFR_RNDD);
        bool ok;
        if (mpfr_zero_p(m)) {
            mpfr_set_si_2exp(m, 1, -bits, MPFR_RNDD);
            ok = mpfr_cmp(w, m) <= 0;
        } else {
            mpfr_mul_2si(m, m, -bits, MPFR_RNDD);
            ok = mpfr_cmp(w, m) <= 0;
        }
        mpfr_clear(w);
        mpfr_clear(m);
        return ok;
    }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

    // Midpoint printed with `digits` significant decimal digits.
    std::string midpoint_decimal(long digits) const;

private:
    Interval() : Interval(64) {}
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Enclosure of 2cos(k pi / q) at the given precision.
Interval cos_root(long k, long q, mpfr_prec_t prec);

// Horner evaluation of a at the embedding lambda -> 2cos(k pi / q).
Interval eval_at_root(const RingInt& a, long k, mpfr_prec_t prec);
Interval eval_at_root(const RingRat& a, long k, mpfr_prec_t prec);

} // namespace hecke::detail
