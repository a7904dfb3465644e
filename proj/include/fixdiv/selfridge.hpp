// Scalar divisibility searches over Z: pairs (m, n) with b^m - b^n dividing
// x^m - x^n for every integer x, decided through the exact fixed divisor of
// x^m - x^n, plus the direct 2^m - 2^n | 3^m - 3^n variant.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fixdiv {

// modulus * quotient == value re-verifies every reported pair.
struct PairWitness {
    mpz_class modulus;  // |b^m - b^n|
    mpz_class value;    // the divided quantity (a fixed divisor, or 3^m - 3^n)
    mpz_class quotient;
};

struct PairHit {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    PairWitness witness;
};

struct PairReport {
    mpz_class base;
    std::uint64_t window = 0;  // pairs were searched for m <= window
    std::vector<PairHit> pairs;
};

// true iff (b^m - b^n) divides the fixed divisor of x^m - x^n.
// Requires m > n >= 0 and b^m != b^n.
bool divides_fixdiv(const mpz_class& b, std::uint64_t m, std::uint64_t n);

// All pairs m > n >= 0 with m <= max_m satisfying divides_fixdiv(b, m, n).
PairReport base_b_pairs(const mpz_class& b, std::uint64_t max_m, unsigned workers = 1);

inline PairReport selfridge_pairs(std::uint64_t max_m, unsigned workers = 1) {
    return base_b_pairs(2, max_m, workers);
}

// All pairs m > n > 0 with m <= max_m and 2^m - 2^n dividing 3^m - 3^n.
PairReport ruderman_pairs(std::uint64_t max_m, unsigned workers = 1);

}  // namespace fixdiv
