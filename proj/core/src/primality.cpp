#include <permprime/primality.hpp>

#include <array>
#include <bit>
#include <random>

namespace permprime {

namespace {

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// One strong-probable-prime round; n odd, n > 2, witness already reduced.
bool sprp_u64(std::uint64_t n, std::uint64_t witness) {
    std::uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    std::uint64_t x = powmod_u64(witness, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

}  // namespace

bool is_prime_small(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0)
            return n == p;
    }
    if (n < 41 * 41)
        return true;
    for (std::uint64_t w : kWitnesses)
        if (!sprp_u64(n, w))
            return false;
    return true;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::composite: return "composite";
        case Verdict::prime: return "prime";
        case Verdict::probable_prime: return "probable prime";
    }
    return "?";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::trial: return "trial";
        case Method::miller_rabin_deterministic: return "miller-rabin-deterministic";
        case Method::bpsw: return "bpsw";
    }
    return "?";
}

const WideNat& deterministic_miller_rabin_bound() {
    static const WideNat bound = WideNat::from_decimal("318665857834031151167461");
    return bound;
}

namespace {

PrimalityVerdict verdict_u64(std::uint64_t n) {
    if (n < 2)
        return {Verdict::composite, Method::trial};
    for (std::uint64_t p : kWitnesses)
        if (n % p == 0)
            return {n == p ? Verdict::prime : Verdict::composite, Method::trial};
    if (n < 41 * 41)
        return {Verdict::prime, Method::trial};
    return {is_prime_small(n) ? Verdict::prime : Verdict::composite, Method::miller_rabin_deterministic};
}

// Strong probable-prime round on an mpz value. n odd, > 2.
bool sprp_wide(mpz_srcptr n, mpz_srcptr base) {
    mpz_t nm1, d, x;
    mpz_inits(nm1, d, x, nullptr);
    mpz_sub_ui(nm1, n, 1);
    mpz_set(d, nm1);
    mp_bitcnt_t s = mpz_scan1(d, 0);
    mpz_fdiv_q_2exp(d, d, s);
    mpz_powm(x, base, d, n);
    bool pass = mpz_cmp_ui(x, 1) == 0 || mpz_cmp(x, nm1) == 0;
    for (mp_bitcnt_t i = 1; !pass && i < s; ++i) {
        mpz_mul(x, x, x);
        mpz_mod(x, x, n);
        pass = mpz_cmp(x, nm1) == 0;
    }
    mpz_clears(nm1, d, x, nullptr);
    return pass;
}

bool sprp_wide_ui(mpz_srcptr n, unsigned long base) {
    mpz_t b;
    mpz_init_set_ui(b, base);
    bool pass = sprp_wide(n, b);
    mpz_clear(b);
    return pass;
}

// Selfridge parameter search: first D in 5, -7, 9, -11, ... with
// jacobi(D/n) = -1. Returns false if n is proven composite on the way
// (jacobi hit 0 with 1 < gcd < n).
bool pick_lucas_d(mpz_srcptr n, long& d_out) {
    long d = 5;
    while (true) {
        int j = mpz_si_kronecker(d, n);
        if (j == -1) {
            d_out = d;
            return true;
        }
        if (j == 0) {
            // d shares a factor with n; n > |d| here, so n is composite.
            return false;
        }
        d = (d > 0) ? -(d + 2) : -(d - 2);
    }
}

// Strong Lucas probable-prime test with P = 1, Q = (1 - D)/4.
bool strong_lucas_wide(mpz_srcptr n, long d_param) {
    long q_param = (1 - d_param) / 4;

    mpz_t d, u, v, qk, t1, t2;
    mpz_inits(d, u, v, qk, t1, t2, nullptr);

    // n + 1 = idx * 2^s, idx odd.
    mpz_add_ui(d, n, 1);
    mp_bitcnt_t s = mpz_scan1(d, 0);
    mpz_fdiv_q_2exp(d, d, s);

    auto halve_mod = [&](mpz_ptr x) {
        mpz_mod(x, x, n);  // D U + V can be negative; normalize first
        if (mpz_odd_p(x))
            mpz_add(x, x, n);
        mpz_fdiv_q_2exp(x, x, 1);
    };
    auto mul_q = [&](mpz_ptr x) {
        if (q_param >= 0)
            mpz_mul_ui(x, x, static_cast<unsigned long>(q_param));
        else {
            mpz_mul_ui(x, x, static_cast<unsigned long>(-q_param));
            mpz_neg(x, x);
        }
        mpz_mod(x, x, n);
    };

    // U_1 = 1, V_1 = P = 1, Q^1 = Q; walk the remaining bits of idx.
    mpz_set_ui(u, 1);
    mpz_set_ui(v, 1);
    mpz_set_si(qk, q_param);
    mpz_mod(qk, qk, n);

    mp_bitcnt_t bits = mpz_sizeinbase(d, 2);
    for (mp_bitcnt_t i = bits - 1; i-- > 0;) {
        // double: U_2k = U V, V_2k = V^2 - 2 Q^k.
        mpz_mul(u, u, v);
        mpz_mod(u, u, n);
        mpz_mul(v, v, v);
        mpz_submul_ui(v, qk, 2);
        mpz_mod(v, v, n);
        mpz_mul(qk, qk, qk);
        mpz_mod(qk, qk, n);
        if (mpz_tstbit(d, i)) {
            // increment: U' = (U + V)/2, V' = (D U + V)/2, Q^k *= Q.
            mpz_add(t1, u, v);
            mpz_set(t2, u);
            mpz_mul_si(t2, t2, d_param);
            mpz_add(t2, t2, v);
            mpz_set(u, t1);
            halve_mod(u);
            mpz_set(v, t2);
            halve_mod(v);
            mul_q(qk);
        }
    }

    bool pass = mpz_sgn(u) == 0;
    // V_{idx * 2^r} = 0 for some r < s also passes.
    for (mp_bitcnt_t r = 0; !pass && r < s; ++r) {
        if (mpz_sgn(v) == 0) {
            pass = true;
            break;
        }
        mpz_mul(v, v, v);
        mpz_submul_ui(v, qk, 2);
        mpz_mod(v, v, n);
        mpz_mul(qk, qk, qk);
        mpz_mod(qk, qk, n);
    }
    mpz_clears(d, u, v, qk, t1, t2, nullptr);
    return pass;
}

}  // namespace

PrimalityVerdict is_probable_prime(const WideNat& n, int extra_rounds) {
    if (n.fits_u64())
        return verdict_u64(n.to_u64());

    mpz_srcptr z = n.raw();

    // Quick small-factor scan.
    for (unsigned long p = 3; p < 30000; p += 2)
        if (mpz_divisible_ui_p(z, p))
            return {Verdict::composite, Method::trial};
    if (n.is_even())
        return {Verdict::composite, Method::trial};

    if (n < deterministic_miller_rabin_bound()) {
        for (std::uint64_t w : kWitnesses)
            if (!sprp_wide_ui(z, static_cast<unsigned long>(w)))
                return {Verdict::composite, Method::miller_rabin_deterministic};
        return {Verdict::prime, Method::miller_rabin_deterministic};
    }

    // BPSW: strong base-2 round, square check, strong Lucas.
    if (!sprp_wide_ui(z, 2))
        return {Verdict::composite, Method::bpsw};
    if (is_perfect_square(n))
        return {Verdict::composite, Method::bpsw};
    long d_param = 0;
    if (!pick_lucas_d(z, d_param))
        return {Verdict::composite, Method::bpsw};
    if (!strong_lucas_wide(z, d_param))
        return {Verdict::composite, Method::bpsw};

    // Extra Miller-Rabin rounds on bases drawn from a generator seeded by n,
    // so identical inputs always test identical bases.
    if (extra_rounds > 0) {
        std::uint64_t seed = 0x9e3779b97f4a7c15ull ^ mpz_get_ui(z) ^ (static_cast<std::uint64_t>(mpz_sizeinbase(z, 2)) << 32);
        std::mt19937_64 rng(seed);
        mpz_t base;
        mpz_init(base);
        for (int i = 0; i < extra_rounds; ++i) {
            std::uint64_t raw = 2 + rng() % (std::uint64_t{1} << 62);
            mpz_set_ui(base, static_cast<unsigned long>(raw));
            bool ok = sprp_wide(z, base);
            if (!ok) {
                mpz_clear(base);
                return {Verdict::composite, Method::bpsw};
            }
        }
        mpz_clear(base);
    }
    return {Verdict::probable_prime, Method::bpsw};
}

}  // namespace permprime
