// Fixed divisors: the ideal generated by all values of a polynomial, over Z,
// over an imaginary quadratic ring, and over the n x n matrices of either.
//
// The certifying algorithm is stabilization: J starts as the ideal generated
// by a handful of actual values and grows whenever a residue representative
// a modulo J has g(a) outside J.  Values depend only on the argument modulo
// J, so a clean pass over all residues proves J is the fixed divisor.  Each
// enlargement strictly decreases N(J), so the loop terminates.

#pragma once

#include "fixdiv/ideal.hpp"
#include "fixdiv/poly.hpp"

#include <cstdint>

namespace fixdiv {

inline constexpr std::uint64_t kDefaultDenseCutoff = 4096;

// Raised when a scan or a seed evaluation would exceed its cap.  `best` is
// generated by actual polynomial values, hence always contained in the true
// fixed divisor (a certified lower bound in the divisibility order).
class FixdivCapError : public std::runtime_error {
public:
    FixdivCapError(const std::string& what, Ideal best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const Ideal& best() const { return best_; }

private:
    Ideal best_;
};

// d(Z, g) as a nonnegative integer; 0 iff g = 0.  Polynomials with
// max exponent <= dense_cutoff use the finite-difference gcd over the points
// 0..deg; sparse high-exponent inputs use modular stabilization.
mpz_class fixdiv_int(const ScalarPoly& g, std::uint64_t dense_cutoff = kDefaultDenseCutoff,
                     std::uint64_t residue_cap = kDefaultResidueCap);

// gcd of g(0), ..., g(deg); requires ring Z.
mpz_class fixdiv_int_dense(const ScalarPoly& g);

// Modular stabilization specialized to Z; requires ring Z.
mpz_class fixdiv_int_sparse(const ScalarPoly& g, std::uint64_t residue_cap = kDefaultResidueCap);

// d(R, g) by stabilization over residue representatives.
Ideal fixdiv_ring(const ScalarPoly& g, std::uint64_t residue_cap = kDefaultResidueCap);

struct FixdivMode {
    bool exact = true;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;

    static FixdivMode exact_mode() { return {}; }
    static FixdivMode sampled(std::uint64_t count, std::uint64_t seed) {
        return {false, count, seed};
    }
};

struct MatrixFixdiv {
    Ideal ideal;
    // true: ideal equals d(M_n(R), f).  false: ideal is generated by sampled
    // values, hence contained in d(M_n(R), f).
    bool certified = false;
};

// d(M_n(R), f).  Exact mode scans all matrices with entries drawn from the
// residues of the candidate ideal (N(J)^(n^2) of them, capped); sampled mode
// joins the entry ideals of f at `count` seeded pseudorandom matrices.
MatrixFixdiv fixdiv_matrix(const MatrixPoly& f, FixdivMode mode = FixdivMode::exact_mode(),
                           std::uint64_t residue_cap = kDefaultResidueCap);

}  // namespace fixdiv
