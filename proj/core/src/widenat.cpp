#include <permprime/widenat.hpp>

#include <stdexcept>
#include <vector>

namespace permprime {

void WideNat::set_u64(std::uint64_t value) {
    mpz_import(v_, 1, -1, sizeof(value), 0, 0, &value);
}

WideNat WideNat::from_decimal(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("decimal string must be nonempty");
    for (char ch : s)
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("decimal string may contain only 0..9");
    WideNat r;
    std::string buf(s);
    mpz_set_str(r.v_, buf.c_str(), 10);
    return r;
}

std::string WideNat::to_decimal() const {
    std::vector<char> buf(mpz_sizeinbase(v_, 10) + 2);
    mpz_get_str(buf.data(), 10, v_);
    return std::string(buf.data());
}

std::size_t WideNat::digit_count() const {
    if (is_zero())
        return 1;
    // mpz_sizeinbase may overestimate by one for base 10.
    std::size_t est = mpz_sizeinbase(v_, 10);
    if (est <= 1)
        return est;
    WideNat bound = pow10(static_cast<unsigned>(est - 1));
    return (*this < bound) ? est - 1 : est;
}

std::uint64_t WideNat::to_u64() const {
    if (!fits_u64())
        throw std::overflow_error("WideNat does not fit 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v_);
    return out;
}

WideNat operator-(const WideNat& a, const WideNat& b) {
    if (mpz_cmp(a.v_, b.v_) < 0)
        throw std::underflow_error("natural subtraction would go negative");
    WideNat r;
    mpz_sub(r.v_, a.v_, b.v_);
    return r;
}

WideNat WideNat::pow10(unsigned exponent) {
    WideNat r;
    mpz_ui_pow_ui(r.v_, 10, exponent);
    return r;
}

WideNat powmod(const WideNat& base, const WideNat& exponent, const WideNat& modulus) {
    if (modulus.is_zero())
        throw std::invalid_argument("powmod modulus must be positive");
    WideNat r;
    mpz_powm(r.raw(), base.raw(), exponent.raw(), modulus.raw());
    return r;
}

int jacobi_si(long a, const WideNat& n) {
    return mpz_si_kronecker(a, n.raw());
}

bool is_perfect_square(const WideNat& n) {
    return mpz_perfect_square_p(n.raw()) != 0;
}

WideNat wide_multinomial(const DigitMultiset& ms) {
    WideNat result = 1;
    unsigned long placed = 0;
    for (int d = 0; d <= 9; ++d) {
        for (int i = 1; i <= ms.count(d); ++i) {
            mpz_mul_ui(result.raw(), result.raw(), ++placed);
            mpz_divexact_ui(result.raw(), result.raw(), static_cast<unsigned long>(i));
        }
    }
    return result;
}

}  // namespace permprime
