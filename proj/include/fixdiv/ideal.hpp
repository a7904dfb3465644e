// Nonzero ideals of the supported rings as canonical Z-lattice bases.
//
// Over an imaginary quadratic ring the basis is {p, q + r*w} with p > 0,
// r > 0 and 0 <= q < p, stored as the upper-triangular matrix
// [[p, q], [0, r]] over the integral basis {1, w}.  Equal ideals have equal
// bases, so ideal equality is structural equality.  Over Z an ideal is a
// single nonnegative generator g.  The zero ideal is a distinguished value.

#pragma once

#include "fixdiv/ring.hpp"

#include <vector>

namespace fixdiv {

inline constexpr std::uint64_t kDefaultResidueCap = 1000000;

class ResidueCapError : public std::runtime_error {
public:
    explicit ResidueCapError(const std::string& what) : std::runtime_error(what) {}
};

class Ideal {
public:
    Ideal() = default;

    static Ideal zero(RingDesc ring);
    static Ideal unit(RingDesc ring);
    static Ideal principal(const RingElem& x);
    static Ideal from_generators(RingDesc ring, const std::vector<RingElem>& gens);

    // Reassembles an ideal from stored basis data, revalidating canonicity.
    static Ideal from_basis_z(RingDesc ring, const mpz_class& g);
    static Ideal from_basis_quadratic(RingDesc ring, const mpz_class& p, const mpz_class& q,
                                      const mpz_class& r);

    const RingDesc& ring() const { return ring_; }
    bool is_zero() const { return zero_; }
    bool is_unit() const;

    // Z only
    const mpz_class& g() const;
    // quadratic only
    const mpz_class& p() const;
    const mpz_class& q() const;
    const mpz_class& r() const;

    // {g} over Z, {p, q + r*w} over quadratic rings, {} for the zero ideal.
    std::vector<RingElem> basis_elems() const;

    mpz_class norm() const;  // throws on the zero ideal

    bool contains(const RingElem& x) const;
    bool contains(const Ideal& other) const;  // other is a subset of this

    // Canonical representative of x modulo this ideal; nonzero ideals only.
    // Representatives are a + b*w with 0 <= a < p, 0 <= b < r (0 <= a < g over Z).
    RingElem reduce(const RingElem& x) const;

    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    RingDesc ring_;
    bool zero_ = true;
    mpz_class p_;  // doubles as g over Z
    mpz_class q_;
    mpz_class r_;
};

Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_join(const Ideal& I, const Ideal& J);
Ideal ideal_join(const Ideal& I, const RingElem& x);
Ideal ideal_conjugate(const Ideal& I);

// The unique ideal J with I*J = (x); requires x != 0 and x in I.
Ideal ideal_quotient(const RingElem& x, const Ideal& I);

// All residue class representatives of R/I.  Throws ResidueCapError when
// norm(I) exceeds cap.
std::vector<RingElem> residues(const Ideal& I, std::uint64_t cap = kDefaultResidueCap);

}  // namespace fixdiv
