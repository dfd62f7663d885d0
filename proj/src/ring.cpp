#include "hecke/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "interval.hpp"

namespace hecke {

namespace {

// --- dense integer polynomials, index = degree ------------------------------

using Poly = std::vector<mpz_class>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division over Z; the remainder must vanish.
Poly poly_divexact(Poly num, const Poly& den) {
    Poly q;
    if (den.empty()) throw DomainError("polynomial division by zero");
    if (num.size() < den.size()) {
        poly_trim(num);
        if (!num.empty()) throw DomainError("inexact polynomial division");
        return {};
    }
    q.assign(num.size() - den.size() + 1, mpz_class(0));
    for (size_t i = num.size(); i-- >= den.size();) {
        mpz_class c = num[i] / den.back();
        if (c * den.back() != num[i]) throw DomainError("inexact polynomial division");
        q[i - (den.size() - 1)] = c;
        for (size_t j = 0; j < den.size(); ++j)
            num[i - (den.size() - 1) + j] -= c * den[j];
        if (i == den.size() - 1) break;
    }
    poly_trim(num);
    if (!num.empty()) throw DomainError("inexact polynomial division");
    return q;
}

// Phi_n by the recursion Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
Poly cyclotomic(long n, std::map<long, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_divexact(std::move(num), cyclotomic(d, memo));
    }
    memo[n] = num;
    return num;
}

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

} // namespace

// --- RingContext -------------------------------------------------------------

ContextPtr RingContext::make(long q) {
    if (q < 3) throw DomainError("hecke parameter q must be >= 3");
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->q_ = q;
    ctx->degree_ = euler_phi(2 * q) / 2;

    std::map<long, Poly> memo;
    Poly phi = cyclotomic(2 * q, memo);
    long d = ctx->degree_;
    if ((long)phi.size() != 2 * d + 1)
        throw DiagnosticError("cyclotomic degree mismatch");

    // Phi_{2q} is self-reciprocal; fold z^k + z^-k through the Chebyshev-like
    // basis V_0 = 2, V_1 = y, V_{k+1} = y V_k - V_{k-1}.
    Poly acc(d + 1, mpz_class(0));
    acc[0] = phi[d];
    Poly vkm1{mpz_class(2)};             // V_0
    Poly vk{mpz_class(0), mpz_class(1)}; // V_1
    for (long k = 1; k <= d; ++k) {
        for (size_t i = 0; i < vk.size(); ++i) acc[i] += phi[d + k] * vk[i];
        if (k < d) {
            Poly vkp1(vk.size() + 1, mpz_class(0));
            for (size_t i = 0; i < vk.size(); ++i) vkp1[i + 1] = vk[i];
            for (size_t i = 0; i < vkm1.size(); ++i) vkp1[i] -= vkm1[i];
            vkm1 = std::move(vk);
            vk = std::move(vkp1);
        }
    }
    if (acc.back() != 1) throw DiagnosticError("minimal polynomial is not monic");
    ctx->min_poly_ = std::move(acc);

    for (long k = 1; k < q; ++k)
        if (std::gcd(k, 2 * q) == 1) ctx->conjugate_ks_.push_back(k);
    if ((long)ctx->conjugate_ks_.size() != d)
        throw DiagnosticError("embedding count mismatch");

    // Startup check: the computed polynomial vanishes at 2cos(pi/q) to within
    // 128-bit certified evaluation.
    detail::Interval lam = detail::cos_root(1, q, 128);
    detail::Interval v(128);
    v.set(ctx->min_poly_[d]);
    for (long i = d; i-- > 0;) {
        detail::Interval c(128);
        c.set(ctx->min_poly_[i]);
        v = v * lam + c;
    }
    if (!v.contains_zero())
        throw DiagnosticError("minimal polynomial fails the numeric root check");
    return ctx;
}

std::string RingContext::lambda_decimal(long bits) const {
    if (bits < 4) bits = 4;
    detail::Interval lam = detail::cos_root(1, q_, bits + 32);
    long digits = (long)(bits * 0.30103) + 1;
    return lam.midpoint_decimal(digits);
}

double RingContext::lambda_double() const {
    return detail::cos_root(1, q_, 64).lo_double();
}

// --- RingInt ------------------------------------------------------------------

RingInt RingInt::zero(const ContextPtr& ctx) {
    RingInt r;
    r.ctx_ = ctx;
    r.c_.assign(ctx->degree(), mpz_class(0));
    return r;
}

RingInt RingInt::one(const ContextPtr& ctx) { return integer(ctx, 1); }

RingInt RingInt::integer(const ContextPtr& ctx, mpz_class n) {
    RingInt r = zero(ctx);
    r.c_[0] = std::move(n);
    return r;
}

RingInt RingInt::lambda(const ContextPtr& ctx) {
    std::vector<mpz_class> c{mpz_class(0), mpz_class(1)};
    return from_coeffs(ctx, std::move(c));
}

RingInt RingInt::from_coeffs(const ContextPtr& ctx, std::vector<mpz_class> coeffs) {
    const long d = ctx->degree();
    const auto& mp = ctx->min_poly();
    // reduce modulo the monic minimal polynomial
    for (long i = (long)coeffs.size() - 1; i >= d; --i) {
        mpz_class c = coeffs[i];
        if (c == 0) continue;
        coeffs[i] = 0;
        for (long j = 0; j < d; ++j) coeffs[i - d + j] -= c * mp[j];
    }
    coeffs.resize(d, mpz_class(0));
    RingInt r;
    r.ctx_ = ctx;
    r.c_ = std::move(coeffs);
    return r;
}

bool RingInt::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

Sign RingInt::sign() const {
    if (is_zero()) return Sign::zero;
    if (ctx_->degree() == 1) return sign_of(c_[0]);
    // lambda > 0, so a uniform coefficient sign decides immediately
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& c : c_) {
        if (c > 0) all_nonpos = false;
        if (c < 0) all_nonneg = false;
    }
    if (all_nonneg) return Sign::positive;
    if (all_nonpos) return Sign::negative;
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        detail::Interval v = detail::eval_at_root(*this, 1, prec);
        int s = v.sign();
        if (s > 0) return Sign::positive;
        if (s < 0) return Sign::negative;
        if (prec > (1L << 26))
            throw DiagnosticError("sign determination exceeded precision cap");
    }
}

RingInt RingInt::operator-() const {
    RingInt r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RingInt operator+(const RingInt& a, const RingInt& b) {
    check_same_context(a.ctx_, b.ctx_);
    RingInt r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

RingInt operator-(const RingInt& a, const RingInt& b) {
    check_same_context(a.ctx_, b.ctx_);
    RingInt r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

RingInt operator*(const RingInt& a, const RingInt& b) {
    check_same_context(a.ctx_, b.ctx_);
    const long d = a.ctx_->degree();
    std::vector<mpz_class> conv(2 * d - 1, mpz_class(0));
    for (long i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (b.c_[j] == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return RingInt::from_coeffs(a.ctx_, std::move(conv));
}

RingInt RingInt::operator*(const mpz_class& n) const {
    RingInt r = *this;
    for (auto& c : r.c_) c *= n;
    return r;
}

bool operator==(const RingInt& a, const RingInt& b) {
    if (!a.ctx_ || !b.ctx_) return !a.ctx_ && !b.ctx_;
    if (a.ctx_->q() != b.ctx_->q()) return false;
    return a.c_ == b.c_;
}

mpz_class RingInt::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// --- sqrt_in_ring -------------------------------------------------------------

std::optional<RingInt> sqrt_in_ring(const RingInt& a) {
    const ContextPtr& ctx = a.context();
    if (a.is_zero()) return RingInt::zero(ctx);
    const long d = ctx->degree();
    const auto& ks = ctx->conjugate_ks();

    if (d == 1) { // plain integers (q = 3)
        const mpz_class& n = a.coeffs()[0];
        if (n < 0) return std::nullopt;
        mpz_class root, rem;
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
        if (rem != 0) return std::nullopt;
        return RingInt::integer(ctx, root);
    }

    const long npatterns = 1L << (d - 1); // first embedding root fixed nonnegative
    std::vector<bool> alive(npatterns, true);

    for (mpfr_prec_t prec = 256;; prec *= 2) {
        if (prec > (1L << 24))
            throw DiagnosticError("sqrt_in_ring exceeded precision cap");

        // images of a under all embeddings
        std::vector<detail::Interval> img;
        img.reserve(d);
        bool refine = false;
        for (long j = 0; j < d; ++j) {
            img.push_back(detail::eval_at_root(a, ks[j], prec));
            int s = img.back().sign();
            if (s < 0) return std::nullopt; // negative under some real embedding
            if (s == 0) refine = true;      // a != 0, so every image is nonzero
        }
        if (refine) continue;

        std::vector<detail::Interval> roots;
        roots.reserve(d);
        for (long j = 0; j < d; ++j) roots.push_back(img[j].sqrt());

        // Vandermonde matrix rows: powers of the conjugate roots
        std::vector<std::vector<detail::Interval>> vand(
            d, std::vector<detail::Interval>(d, detail::Interval(prec)));
        for (long j = 0; j < d; ++j) {
            detail::Interval lam = detail::cos_root(ks[j], ctx->q(), prec);
            detail::Interval pw(prec);
            pw.set(1L);
            for (long c = 0; c < d; ++c) {
                vand[j][c] = pw;
                pw = pw * lam;
            }
        }

        bool any_pending = false;
        for (long pat = 0; pat < npatterns; ++pat) {
            if (!alive[pat]) continue;

            // interval Gaussian elimination on [vand | rhs]
            auto m = vand;
            std::vector<detail::Interval> rhs;
            rhs.reserve(d);
            for (long j = 0; j < d; ++j) {
                bool neg = j > 0 && ((pat >> (j - 1)) & 1);
                rhs.push_back(neg ? -roots[j] : roots[j]);
            }
            bool singular = false;
            for (long col = 0; col < d && !singular; ++col) {
                long piv = -1;
                for (long row = col; row < d; ++row) {
                    if (m[row][col].sign() != 0) {
                        piv = row;
                        break;
                    }
                }
                if (piv < 0) {
                    singular = true; // pivot undecided at this precision
                    break;
                }
                std::swap(m[piv], m[col]);
                std::swap(rhs[piv], rhs[col]);
                for (long row = col + 1; row < d; ++row) {
                    if (mpfr_zero_p(m[row][col].lo()) && mpfr_zero_p(m[row][col].hi()))
                        continue;
                    detail::Interval f = m[row][col] / m[col][col];
                    for (long c2 = col; c2 < d; ++c2)
                        m[row][c2] = m[row][c2] - f * m[col][c2];
                    rhs[row] = rhs[row] - f * rhs[col];
                }
            }
            if (singular) {
                any_pending = true;
                continue;
            }

            std::vector<detail::Interval> sol(d, detail::Interval(prec));
            bool undecided = false;
            for (long row = d; row-- > 0;) {
                detail::Interval acc = rhs[row];
                for (long c2 = row + 1; c2 < d; ++c2) acc = acc - m[row][c2] * sol[c2];
                if (m[row][row].sign() == 0) {
                    undecided = true;
                    break;
                }
                sol[row] = acc / m[row][row];
            }
            if (undecided) {
                any_pending = true;
                continue;
            }

            std::vector<mpz_class> cand(d);
            bool pending = false, dead = false;
            for (long c2 = 0; c2 < d; ++c2) {
                switch (sol[c2].integer_fit(cand[c2])) {
                    case detail::Interval::IntegerFit::unique: break;
                    case detail::Interval::IntegerFit::none: dead = true; break;
                    case detail::Interval::IntegerFit::ambiguous: pending = true; break;
                }
                if (dead || pending) break;
            }
            if (dead) {
                alive[pat] = false;
                continue;
            }
            if (pending) {
                any_pending = true;
                continue;
            }

            RingInt t = RingInt::from_coeffs(ctx, cand);
            if (t * t == a) {
                if (t.sign() == Sign::negative) t = -t;
                return t;
            }
            // the unique integer candidate fails exactly: no integer solution here
            alive[pat] = false;
        }

        // every pattern either returned, died, or was marked pending above
        if (!any_pending) return std::nullopt;
    }
}

// --- RingRat ------------------------------------------------------------------

RingRat::RingRat(RingInt num) : num_(std::move(num)), den_(1) {}

RingRat::RingRat(RingInt num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    normalize();
}

RingRat RingRat::zero(const ContextPtr& ctx) { return RingRat(RingInt::zero(ctx)); }
RingRat RingRat::one(const ContextPtr& ctx) { return RingRat(RingInt::one(ctx)); }
RingRat RingRat::lambda(const ContextPtr& ctx) { return RingRat(RingInt::lambda(ctx)); }
RingRat RingRat::integer(const ContextPtr& ctx, mpz_class n) {
    return RingRat(RingInt::integer(ctx, std::move(n)));
}
RingRat RingRat::rational(const ContextPtr& ctx, mpz_class num, mpz_class den) {
    return RingRat(RingInt::integer(ctx, std::move(num)), std::move(den));
}

void RingRat::normalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    mpz_class g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        std::vector<mpz_class> c = num_.coeffs();
        for (auto& x : c) x /= g;
        num_ = RingInt::from_coeffs(num_.context(), std::move(c));
        den_ /= g;
    }
}

RingInt RingRat::as_ring_int() const {
    if (den_ != 1) throw DomainError("element is not integral over Z[lambda]");
    return num_;
}

RingRat RingRat::operator-() const {
    RingRat r = *this;
    r.num_ = -r.num_;
    return r;
}

RingRat operator+(const RingRat& a, const RingRat& b) {
    return RingRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RingRat operator-(const RingRat& a, const RingRat& b) {
    return RingRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RingRat operator*(const RingRat& a, const RingRat& b) {
    return RingRat(a.num_ * b.num_, a.den_ * b.den_);
}

RingRat operator/(const RingRat& a, const RingRat& b) { return a * b.inverse(); }

namespace {

// Extended Euclid over Q[x] for the inverse of a modulo the minimal
// polynomial: returns u with a*u = g (a nonzero rational constant) mod m.
using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qsub_scaled(QPoly a, const QPoly& b, const mpq_class& f, size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    qtrim(a);
    return a;
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    qtrim(a);
    if (b.empty()) throw DomainError("polynomial division by zero");
    while (a.size() >= b.size()) {
        mpq_class f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, mpq_class(0));
        q[shift] += f;
        a = qsub_scaled(std::move(a), b, f, shift);
        if (a.empty()) break;
    }
    return {q, a};
}

} // namespace

RingRat RingRat::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(lambda)");
    const ContextPtr& ctx = num_.context();
    const long d = ctx->degree();

    QPoly r0(ctx->min_poly().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = mpq_class(ctx->min_poly()[i]);
    QPoly r1(d);
    for (long i = 0; i < d; ++i) r1[i] = mpq_class(num_.coeffs()[i]);
    qtrim(r1);
    QPoly t0, t1{mpq_class(1)};
    while (!r1.empty()) {
        auto [q, rem] = qdivmod(r0, r1);
        QPoly tn = t0;
        // tn = t0 - q * t1
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0) tn = qsub_scaled(std::move(tn), t1, q[i], i);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (r0.size() != 1)
        throw DiagnosticError("minimal polynomial is not coprime to the element");
    // inverse of num_ is t0 / r0[0]; clear rational denominators
    mpz_class common = 1;
    for (auto& c : t0) {
        c /= r0[0];
        c.canonicalize();
        mpz_class cd = c.get_den();
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), cd.get_mpz_t());
    }
    std::vector<mpz_class> vi(t0.size());
    for (size_t i = 0; i < t0.size(); ++i) {
        mpq_class scaled = t0[i] * mpq_class(common);
        scaled.canonicalize();
        vi[i] = scaled.get_num();
    }
    RingInt v = RingInt::from_coeffs(ctx, std::move(vi));
    // (num/den)^-1 = den * v / common
    return RingRat(v * den_, common);
}

bool operator==(const RingRat& a, const RingRat& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
}

std::strong_ordering operator<=>(const RingRat& a, const RingRat& b) {
    Sign s = (a - b).sign();
    if (s == Sign::negative) return std::strong_ordering::less;
    if (s == Sign::positive) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// --- ProjPoint ----------------------------------------------------------------

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.finite_ != b.finite_) return false;
    if (!a.finite_) return true;
    return a.v_ == b.v_;
}

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::greater; // infinity maximal
    if (!b.finite_) return std::strong_ordering::less;
    return a.v_ <=> b.v_;
}

// --- exact ceilings -----------------------------------------------------------

mpz_class ceil_of(const RingRat& x) {
    const ContextPtr& ctx = x.context();
    for (mpfr_prec_t prec = 96;; prec *= 2) {
        detail::Interval v = detail::eval_at_root(x, 1, prec);
        mpz_class lo, hi;
        mpfr_get_z(lo.get_mpz_t(), v.lo(), MPFR_RNDU); // smallest integer >= lo
        mpfr_get_z(hi.get_mpz_t(), v.hi(), MPFR_RNDU); // smallest integer >= hi
        if (hi - lo <= 4) {
            // the true ceiling lies in [lo, hi]; settle exactly
            for (mpz_class m = lo; m <= hi; ++m) {
                if ((RingRat::integer(ctx, m) - x).sign() != Sign::negative) return m;
            }
            throw DiagnosticError("ceil_of bracket failed");
        }
        if (prec > (1L << 24)) throw DiagnosticError("ceil_of exceeded precision cap");
    }
}

mpz_class ceil_ratio(const RingRat& x, const RingRat& y) {
    if (y.sign() != Sign::positive) throw DomainError("ceil_ratio needs y > 0");
    return ceil_of(x / y);
}

// --- interval helpers ---------------------------------------------------------

namespace detail {

std::string Interval::midpoint_decimal(long digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%ldRNg", digits);
    char* s = nullptr;
    mpfr_asprintf(&s, fmt, mid);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(mid);
    return out;
}

Interval cos_root(long k, long q, mpfr_prec_t prec) {
    // 2cos(k pi / q) with outward rounding; cos is decreasing on [0, pi]
    Interval r(prec);
    mpfr_t alo, ahi, t;
    mpfr_init2(alo, prec + 16);
    mpfr_init2(ahi, prec + 16);
    mpfr_init2(t, prec + 16);
    mpfr_const_pi(alo, MPFR_RNDD);
    mpfr_mul_si(alo, alo, k, MPFR_RNDD);
    mpfr_div_si(alo, alo, q, MPFR_RNDD);
    mpfr_const_pi(ahi, MPFR_RNDU);
    mpfr_mul_si(ahi, ahi, k, MPFR_RNDU);
    mpfr_div_si(ahi, ahi, q, MPFR_RNDU);
    mpfr_cos(t, ahi, MPFR_RNDD);
    mpfr_mul_2ui(t, t, 1, MPFR_RNDD);
    mpfr_set(r.lo_mut(), t, MPFR_RNDD);
    mpfr_cos(t, alo, MPFR_RNDU);
    mpfr_mul_2ui(t, t, 1, MPFR_RNDU);
    mpfr_set(r.hi_mut(), t, MPFR_RNDU);
    mpfr_clear(alo);
    mpfr_clear(ahi);
    mpfr_clear(t);
    return r;
}

Interval eval_at_root(const RingInt& a, long k, mpfr_prec_t prec) {
    const long d = a.context()->degree();
    Interval lam = cos_root(k, a.context()->q(), prec);
    Interval v(prec);
    v.set(a.coeffs()[d - 1]);
    for (long i = d - 1; i-- > 0;) {
        Interval c(prec);
        c.set(a.coeffs()[i]);
        v = v * lam + c;
    }
    return v;
}

Interval eval_at_root(const RingRat& a, long k, mpfr_prec_t prec) {
    Interval v = eval_at_root(a.num(), k, prec);
    Interval den(prec);
    den.set(a.den());
    return v / den;
}

} // namespace detail

} // namespace hecke
