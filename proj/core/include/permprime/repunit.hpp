// repunit.hpp -- all-ones integers and the scan for prime ones
#pragma once

#include <vector>

#include <permprime/primality.hpp>
#include <permprime/widenat.hpp>

namespace permprime {

/// R(n) = (10^n - 1)/9, the integer written as n ones. Throws
/// std::invalid_argument for n < 1.
WideNat repunit(int n);

struct RepunitResult {
    int exponent = 0;
    PrimalityVerdict verdict{Verdict::composite, Method::trial};
};

struct RepunitScanOptions {
    int workers = 1;
    /// Extra Miller-Rabin rounds applied when re-testing a scan hit.
    int confirm_rounds = 40;
};

/// Exponents n <= max_n whose repunit is prime or probable prime, ascending.
/// R(ab) is divisible by R(a), so only prime exponents are ever tested; the
/// scan runs BPSW alone and re-tests hits with confirm_rounds extra rounds.
std::vector<RepunitResult> scan_repunit_primes(int max_n, const RepunitScanOptions& options = {});

}  // namespace permprime
