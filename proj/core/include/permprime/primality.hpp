// primality.hpp -- exact primality for 64-bit values, BPSW for wide ones
#pragma once

#include <cstdint>

#include <permprime/widenat.hpp>

namespace permprime {

/// Exact primality for any 64-bit value: trial by the first twelve primes,
/// then deterministic Miller-Rabin with those twelve as witnesses (exact
/// well past 2^64).
bool is_prime_small(std::uint64_t n);

enum class Verdict { composite, prime, probable_prime };
enum class Method { trial, miller_rabin_deterministic, bpsw };

/// Composite and prime verdicts come only from exact methods;
/// probable_prime only from the BPSW path.
struct PrimalityVerdict {
    Verdict kind;
    Method method;

    bool is_composite() const { return kind == Verdict::composite; }
    friend bool operator==(const PrimalityVerdict&, const PrimalityVerdict&) = default;
};

const char* to_string(Verdict v);
const char* to_string(Method m);

/// Largest range over which the twelve-witness Miller-Rabin test is a proof:
/// everything below 318,665,857,834,031,151,167,461 (Sorenson-Webster).
const WideNat& deterministic_miller_rabin_bound();

/// Classify n. Exact (prime/composite) below the deterministic bound; above
/// it, BPSW (strong base-2 Miller-Rabin + strong Lucas with Selfridge
/// parameters) plus `extra_rounds` further Miller-Rabin rounds on
/// deterministically seeded random bases. Composite verdicts are always
/// exact; "prime" is never claimed above the deterministic bound.
PrimalityVerdict is_probable_prime(const WideNat& n, int extra_rounds = 20);

}  // namespace permprime
