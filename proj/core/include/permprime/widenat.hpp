// widenat.hpp -- arbitrary-precision natural numbers (GMP-backed)
#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <permprime/digits.hpp>

namespace permprime {

/// A nonnegative arbitrary-precision integer. Round-trips through its
/// decimal string; this is the value type for repunits and everything the
/// probable-prime machinery touches.
class WideNat {
public:
    WideNat() { mpz_init(v_); }
    WideNat(std::uint64_t value) {  // NOLINT(google-explicit-constructor)
        mpz_init(v_);
        set_u64(value);
    }
    WideNat(const WideNat& o) { mpz_init_set(v_, o.v_); }
    WideNat(WideNat&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    WideNat& operator=(const WideNat& o) {
        if (this != &o)
            mpz_set(v_, o.v_);
        return *this;
    }
    WideNat& operator=(WideNat&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~WideNat() { mpz_clear(v_); }

    /// Parse a decimal string. Throws std::invalid_argument if the string is
    /// empty, contains a non-digit, or carries a sign.
    static WideNat from_decimal(std::string_view s);

    std::string to_decimal() const;

    /// Number of decimal digits (1 for zero).
    std::size_t digit_count() const;

    bool fits_u64() const { return mpz_sizeinbase(v_, 2) <= 64; }
    std::uint64_t to_u64() const;  // throws std::overflow_error if too wide

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_even() const { return mpz_even_p(v_) != 0; }

    friend WideNat operator+(const WideNat& a, const WideNat& b) { return binop(mpz_add, a, b); }
    friend WideNat operator*(const WideNat& a, const WideNat& b) { return binop(mpz_mul, a, b); }
    /// Natural subtraction; throws std::underflow_error if b > a.
    friend WideNat operator-(const WideNat& a, const WideNat& b);
    friend WideNat operator/(const WideNat& a, const WideNat& b) { return binop(mpz_fdiv_q, a, b); }
    friend WideNat operator%(const WideNat& a, const WideNat& b) { return binop(mpz_fdiv_r, a, b); }

    friend bool operator==(const WideNat& a, const WideNat& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const WideNat& a, const WideNat& b) {
        int c = mpz_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    static WideNat pow10(unsigned exponent);

    /// Raw GMP handle, for the number-theoretic routines layered on top.
    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

private:
    void set_u64(std::uint64_t value);
    static WideNat binop(void (*op)(mpz_ptr, mpz_srcptr, mpz_srcptr), const WideNat& a, const WideNat& b) {
        WideNat r;
        op(r.v_, a.v_, b.v_);
        return r;
    }
    mpz_t v_;
};

/// base^exp mod m (m > 0).
WideNat powmod(const WideNat& base, const WideNat& exponent, const WideNat& modulus);

/// Jacobi symbol (a / n) for small signed a and odd n > 0.
int jacobi_si(long a, const WideNat& n);

bool is_perfect_square(const WideNat& n);

/// Distinct-arrangement count of a multiset without any width limit
/// (multinomial_permutations overflows past 20 digits; this never does).
WideNat wide_multinomial(const DigitMultiset& ms);

}  // namespace permprime
