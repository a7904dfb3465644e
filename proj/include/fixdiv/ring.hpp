// Exact arithmetic in Z and in rings of integers of imaginary quadratic
// fields Q(sqrt(-d)).  Elements are stored as integer coordinates a + b*w
// over the integral basis {1, w}, where w = (1+sqrt(-d))/2 when d = 3 mod 4
// and w = sqrt(-d) otherwise.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fixdiv {

enum class RingKind { Integers, ImaginaryQuadratic };

class RingDesc {
public:
    RingDesc() : kind_(RingKind::Integers), d_(0) {}

    static RingDesc integers() { return RingDesc(); }

    // d must be squarefree and >= 1.
    static RingDesc imaginary_quadratic(unsigned long d);

    RingKind kind() const { return kind_; }
    bool is_z() const { return kind_ == RingKind::Integers; }
    unsigned long d() const { return d_; }

    // true when d = 3 mod 4, i.e. w = (1+sqrt(-d))/2
    bool half_basis() const { return kind_ == RingKind::ImaginaryQuadratic && d_ % 4 == 3; }

    bool operator==(const RingDesc& o) const { return kind_ == o.kind_ && d_ == o.d_; }
    bool operator!=(const RingDesc& o) const { return !(*this == o); }

    std::string to_string() const;                  // "Z" or "Q(sqrt(-5))"
    static RingDesc parse(const std::string& s);

private:
    RingKind kind_;
    unsigned long d_;
};

// Immutable element of a RingDesc ring.  All arithmetic is exact; over Z the
// w-coordinate is identically zero.
class RingElem {
public:
    RingElem() = default;
    explicit RingElem(RingDesc ring) : ring_(ring) {}
    RingElem(RingDesc ring, mpz_class a) : a_(std::move(a)), ring_(ring) {}
    RingElem(RingDesc ring, mpz_class a, mpz_class b);

    static RingElem omega(RingDesc ring);           // throws over Z

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const RingDesc& ring() const { return ring_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }

    RingElem operator+(const RingElem& y) const;
    RingElem operator-(const RingElem& y) const;
    RingElem operator*(const RingElem& y) const;
    RingElem operator-() const { return RingElem(ring_, -a_, -b_); }

    bool operator==(const RingElem& y) const { return ring_ == y.ring_ && a_ == y.a_ && b_ == y.b_; }
    bool operator!=(const RingElem& y) const { return !(*this == y); }

    // Image under the nontrivial field automorphism (complex conjugation).
    // Involution; the identity over Z.
    RingElem conjugate() const;

    // Absolute norm: |x| over Z, x * conjugate(x) over quadratic rings.
    // Nonnegative rational integer; zero iff x = 0.
    mpz_class norm() const;

    // Exact quotient x / y when y divides x in the ring; throws otherwise.
    RingElem divexact(const RingElem& y) const;

    std::string to_string() const;                  // "a", "b*w" or "a+b*w"
    static RingElem parse(RingDesc ring, const std::string& text);

private:
    mpz_class a_;
    mpz_class b_;
    RingDesc ring_;

    void check_same_ring(const RingElem& y) const {
        if (ring_ != y.ring_) throw std::invalid_argument("ring mismatch");
    }
};

inline RingElem conjugate(const RingElem& x) { return x.conjugate(); }
inline mpz_class elem_norm(const RingElem& x) { return x.norm(); }

}  // namespace fixdiv
