#include <doctest.h>

#include <gmpxx.h>
#include <mpfr.h>

#include <atomic>
#include <random>
#include <thread>
#include <vector>

#include "hecke/ring.hpp"

using namespace hecke;

namespace {

RingInt ri(const ContextPtr& ctx, std::vector<long> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return RingInt::from_coeffs(ctx, std::move(c));
}

RingInt random_elem(const ContextPtr& ctx, std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<mpz_class> c(ctx->degree());
    for (auto& x : c) x = dist(rng);
    return RingInt::from_coeffs(ctx, std::move(c));
}

// test-side polynomial helpers over Z, used by the cyclotomic identity oracle
using Poly = std::vector<mpz_class>;

Poly tmul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly tdiv_exact(Poly num, const Poly& den) {
    Poly q(num.size() - den.size() + 1, mpz_class(0));
    for (size_t i = num.size(); i-- >= den.size();) {
        mpz_class c = num[i] / den.back();
        REQUIRE(c * den.back() == num[i]);
        q[i - (den.size() - 1)] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= c * den[j];
    }
    for (const auto& c : num) REQUIRE(c == 0);
    return q;
}

int moebius_mu(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

// independent oracle: Phi_n(x) = prod_{d|n} (x^d - 1)^{mu(n/d)}
Poly cyclotomic_oracle(long n) {
    Poly num{mpz_class(1)}, den{mpz_class(1)};
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = moebius_mu(n / d);
        if (mu == 0) continue;
        Poly f(d + 1, mpz_class(0));
        f[0] = -1;
        f[d] = 1;
        if (mu == 1)
            num = tmul(num, f);
        else
            den = tmul(den, f);
    }
    return tdiv_exact(std::move(num), den);
}

// independent 256-bit outward-rounded evaluation used to cross-check sign()
int certified_sign_256(const RingInt& a) {
    const long q = a.context()->q();
    const long d = a.context()->degree();
    mpfr_t pl, ph, ll, lh, vl, vh, t1, t2, t3;
    for (auto* x : {&pl, &ph, &ll, &lh, &vl, &vh, &t1, &t2, &t3}) mpfr_init2(*x, 256);
    mpfr_const_pi(pl, MPFR_RNDD);
    mpfr_div_si(pl, pl, q, MPFR_RNDD);
    mpfr_const_pi(ph, MPFR_RNDU);
    mpfr_div_si(ph, ph, q, MPFR_RNDU);
    mpfr_cos(ll, ph, MPFR_RNDD);
    mpfr_mul_2ui(ll, ll, 1, MPFR_RNDD);
    mpfr_cos(lh, pl, MPFR_RNDU);
    mpfr_mul_2ui(lh, lh, 1, MPFR_RNDU);
    mpfr_set_z(vl, a.coeffs()[d - 1].get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(vh, a.coeffs()[d - 1].get_mpz_t(), MPFR_RNDU);
    for (long i = d - 1; i-- > 0;) {
        // v <- v * lambda + c, outward: lambda > 0 here, but do the full 4-way min/max
        mpfr_mul(t1, vl, ll, MPFR_RNDD);
        mpfr_mul(t2, vl, lh, MPFR_RNDD);
        mpfr_min(t1, t1, t2, MPFR_RNDD);
        mpfr_mul(t2, vh, ll, MPFR_RNDD);
        mpfr_min(t1, t1, t2, MPFR_RNDD);
        mpfr_mul(t2, vh, lh, MPFR_RNDD);
        mpfr_min(t1, t1, t2, MPFR_RNDD);
        mpfr_mul(t2, vh, lh, MPFR_RNDU);
        mpfr_mul(t3, vh, ll, MPFR_RNDU);
        mpfr_max(t2, t2, t3, MPFR_RNDU);
        mpfr_mul(t3, vl, lh, MPFR_RNDU);
        mpfr_max(t2, t2, t3, MPFR_RNDU);
        mpfr_mul(t3, vl, ll, MPFR_RNDU);
        mpfr_max(t2, t2, t3, MPFR_RNDU);
        mpfr_add_z(vl, t1, a.coeffs()[i].get_mpz_t(), MPFR_RNDD);
        mpfr_add_z(vh, t2, a.coeffs()[i].get_mpz_t(), MPFR_RNDU);
    }
    int s = 0;
    if (mpfr_sgn(vl) > 0) s = 1;
    if (mpfr_sgn(vh) < 0) s = -1;
    for (auto* x : {&pl, &ph, &ll, &lh, &vl, &vh, &t1, &t2, &t3}) mpfr_clear(*x);
    return s; // 0 = interval did not exclude zero
}

} // namespace

TEST_CASE("context: minimal polynomials for small q") {
    auto c3 = RingContext::make(3);
    CHECK(c3->degree() == 1);
    CHECK(c3->min_poly() == std::vector<mpz_class>{mpz_class(-1), mpz_class(1)});

    auto c4 = RingContext::make(4);
    CHECK(c4->degree() == 2);
    CHECK(c4->min_poly() == std::vector<mpz_class>{mpz_class(-2), mpz_class(0), mpz_class(1)});

    auto c5 = RingContext::make(5);
    CHECK(c5->degree() == 2);
    CHECK(c5->min_poly() == std::vector<mpz_class>{mpz_class(-1), mpz_class(-1), mpz_class(1)});

    CHECK_THROWS_AS(RingContext::make(2), DomainError);
    CHECK_THROWS_AS(RingContext::make(0), DomainError);
}

TEST_CASE("context: numeric root check and cyclotomic identity") {
    for (long q = 3; q <= 20; ++q) {
        auto ctx = RingContext::make(q);
        const long d = ctx->degree();

        // min_poly(2cos(pi/q)) ~ 0 in double arithmetic
        double lam = 2.0 * std::cos(M_PI / (double)q);
        double v = 0, scale = 0;
        for (long i = d; i >= 0; --i) {
            v = v * lam + ctx->min_poly()[i].get_d();
            scale = scale * std::abs(lam) + std::abs(ctx->min_poly()[i].get_d());
        }
        CHECK(std::abs(v) <= 1e-9 * (scale + 1));

        // z^d * min_poly(z + 1/z) == Phi_{2q}(z), exactly
        Poly acc{mpz_class(0)};
        Poly zp1{mpz_class(0), mpz_class(1)};           // z
        Poly base{mpz_class(1), mpz_class(0), mpz_class(1)}; // 1 + z^2 == z*(z + 1/z)
        // Horner in y = z + 1/z, tracking the cleared power of z
        // result = sum_i c_i y^i z^d  ==  sum_i c_i (1+z^2)^i z^(d-i)
        Poly total(2 * d + 1, mpz_class(0));
        for (long i = 0; i <= d; ++i) {
            Poly term{ctx->min_poly()[i]};
            for (long j = 0; j < i; ++j) term = tmul(term, base);
            // multiply by z^(d-i)
            Poly shifted(term.size() + (d - i), mpz_class(0));
            for (size_t k = 0; k < term.size(); ++k) shifted[k + (d - i)] = term[k];
            if (shifted.size() < total.size()) shifted.resize(total.size(), mpz_class(0));
            for (size_t k = 0; k < total.size(); ++k) total[k] += shifted[k];
        }
        Poly phi = cyclotomic_oracle(2 * q);
        REQUIRE(phi.size() == total.size());
        bool plus = true, minus = true;
        for (size_t k = 0; k < phi.size(); ++k) {
            if (phi[k] != total[k]) plus = false;
            if (phi[k] != -total[k]) minus = false;
        }
        CHECK((plus || minus));
        (void)zp1;
    }
}

TEST_CASE("ring arithmetic: frozen small cases") {
    auto c4 = RingContext::make(4);
    auto c5 = RingContext::make(5);

    // lambda * lambda reduces to lambda + 1 for q = 5
    CHECK(RingInt::lambda(c5) * RingInt::lambda(c5) == ri(c5, {1, 1}));
    // (lambda+1)(lambda-1) = 1 for q = 4
    CHECK(ri(c4, {1, 1}) * ri(c4, {-1, 1}) == RingInt::one(c4));
    // additive identity
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        RingInt a = random_elem(c5, rng, 1000);
        CHECK(a + RingInt::zero(c5) == a);
        CHECK(a - a == RingInt::zero(c5));
    }
    // context mismatch
    CHECK_THROWS_AS(RingInt::one(c4) + RingInt::one(c5), DomainError);
}

TEST_CASE("sign_of: frozen examples and exact zero") {
    auto c4 = RingContext::make(4);
    auto c5 = RingContext::make(5);
    CHECK(ri(c4, {-1, 1}).sign() == Sign::positive); // sqrt(2) - 1
    CHECK(RingInt::zero(c4).sign() == Sign::zero);
    CHECK(ri(c5, {1, -1}).sign() == Sign::negative); // 1 - golden ratio
}

TEST_CASE("sign_of: multiplicativity and certified cross-check") {
    for (long q : {3L, 4L, 5L, 7L, 12L}) {
        auto ctx = RingContext::make(q);
        std::mt19937_64 rng(100 + q);
        for (int i = 0; i < 200; ++i) {
            RingInt a = random_elem(ctx, rng, 1000000);
            RingInt b = random_elem(ctx, rng, 1000000);
            CHECK((a * b).sign() == a.sign() * b.sign());
            CHECK((a.sign() == Sign::zero) == a.is_zero());
            int cert = certified_sign_256(a);
            if (cert != 0) CHECK(static_cast<int>(a.sign()) == cert);
        }
        // cancellation must produce exact zeros: (a+b)^2 - a^2 - 2ab - b^2 == 0
        for (int i = 0; i < 50; ++i) {
            RingInt a = random_elem(ctx, rng, 100000);
            RingInt b = random_elem(ctx, rng, 100000);
            RingInt z = (a + b) * (a + b) - a * a - (a * b) * mpz_class(2) - b * b;
            CHECK(z.sign() == Sign::zero);
        }
        // the minimal polynomial evaluated at lambda inside the ring is zero
        RingInt lam = RingInt::lambda(ctx);
        RingInt v = RingInt::integer(ctx, ctx->min_poly().back());
        for (long i = ctx->degree(); i-- > 0;)
            v = v * lam + RingInt::integer(ctx, ctx->min_poly()[i]);
        CHECK(v.is_zero());
    }
}

TEST_CASE("sqrt_in_ring: frozen examples") {
    auto c3 = RingContext::make(3);
    auto c4 = RingContext::make(4);
    auto r9 = sqrt_in_ring(RingInt::integer(c3, 9));
    REQUIRE(r9.has_value());
    CHECK(*r9 == RingInt::integer(c3, 3));
    CHECK(!sqrt_in_ring(RingInt::integer(c3, 5)).has_value());
    auto r2 = sqrt_in_ring(RingInt::integer(c4, 2));
    REQUIRE(r2.has_value());
    CHECK(*r2 == RingInt::lambda(c4));
}

TEST_CASE("sqrt_in_ring: roundtrip on random squares") {
    for (long q : {3L, 4L, 5L, 6L, 7L, 12L}) {
        auto ctx = RingContext::make(q);
        std::mt19937_64 rng(4000 + q);
        for (int i = 0; i < 60; ++i) {
            RingInt t = random_elem(ctx, rng, 50);
            auto r = sqrt_in_ring(t * t);
            REQUIRE(r.has_value());
            RingInt expect = t.sign() == Sign::negative ? -t : t;
            CHECK(*r == expect);
        }
        // non-squares: x^2 + 1 is totally positive yet has no root when... just
        // check a few explicit negatives stay rootless
        CHECK(!sqrt_in_ring(RingInt::integer(ctx, -1)).has_value());
    }
}

TEST_CASE("rationals: inverse, normalization and exact order") {
    for (long q : {3L, 5L, 7L}) {
        auto ctx = RingContext::make(q);
        std::mt19937_64 rng(900 + q);
        for (int i = 0; i < 60; ++i) {
            RingInt n = random_elem(ctx, rng, 500);
            if (n.is_zero()) continue;
            std::uniform_int_distribution<long> dd(1, 300);
            RingRat x(n, mpz_class(dd(rng)));
            CHECK(x * x.inverse() == RingRat::one(ctx));
            CHECK(x / x == RingRat::one(ctx));
        }
        CHECK_THROWS_AS(RingRat::zero(ctx).inverse(), DomainError);

        // total order: antisymmetry, transitivity, translation invariance
        std::vector<RingRat> xs;
        std::uniform_int_distribution<long> dd(1, 40);
        for (int i = 0; i < 24; ++i) xs.push_back(RingRat(random_elem(ctx, rng, 60), mpz_class(dd(rng))));
        for (const auto& a : xs)
            for (const auto& b : xs) {
                auto ab = a <=> b, ba = b <=> a;
                CHECK((ab == std::strong_ordering::equal) == (a == b));
                if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
                for (const auto& c : xs) {
                    if (a < b && b < c) CHECK(a < c);
                    CHECK((a < b) == (a + c < b + c));
                }
            }
    }
}

TEST_CASE("compare: projective points with infinity maximal") {
    auto c3 = RingContext::make(3);
    auto c4 = RingContext::make(4);
    ProjPoint inf = ProjPoint::infinity();
    CHECK(ProjPoint(RingRat::rational(c3, 1, 2)) < inf);
    CHECK(inf == ProjPoint::infinity());
    CHECK(ProjPoint(RingRat::rational(c3, 1, 2)) < ProjPoint(RingRat::integer(c3, 1)));
    CHECK(ProjPoint(RingRat::lambda(c4)) < ProjPoint(RingRat::rational(c4, 3, 2)));
}

TEST_CASE("lambda decimal approximations") {
    CHECK(RingContext::make(3)->lambda_decimal(64) == "1"); // lambda_3 = 1 exactly
    CHECK(RingContext::make(4)->lambda_decimal(64).substr(0, 12) == "1.4142135623");
    CHECK(RingContext::make(5)->lambda_decimal(64).substr(0, 12) == "1.6180339887");
    CHECK(RingContext::make(6)->lambda_decimal(64).substr(0, 12) == "1.7320508075");
}

TEST_CASE("sign determination is safe under concurrency") {
    auto ctx = RingContext::make(7);
    std::vector<RingInt> elems;
    std::vector<Sign> expected;
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 64; ++i) {
        elems.push_back(random_elem(ctx, rng, 1000000000L));
        expected.push_back(elems.back().sign());
    }
    std::atomic<int> mismatches{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([&] {
            for (size_t i = 0; i < elems.size(); ++i)
                if (elems[i].sign() != expected[i]) ++mismatches;
            mpfr_free_cache();
        });
    }
    for (auto& th : pool) th.join();
    CHECK(mismatches.load() == 0);
}

TEST_CASE("exact ceilings") {
    auto c4 = RingContext::make(4);
    CHECK(ceil_of(RingRat::rational(c4, 7, 2)) == 4);
    CHECK(ceil_of(RingRat::integer(c4, -3)) == -3);
    CHECK(ceil_of(RingRat::lambda(c4)) == 2);                 // ceil(sqrt 2)
    CHECK(ceil_of(-RingRat::lambda(c4)) == -1);               // ceil(-sqrt 2)
    CHECK(ceil_ratio(RingRat::integer(c4, 3), RingRat::lambda(c4)) == 3); // 3/sqrt2 ~ 2.12
    CHECK_THROWS_AS(ceil_ratio(RingRat::one(c4), RingRat::zero(c4)), DomainError);
}
