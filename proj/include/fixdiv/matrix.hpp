// Exact n x n matrices over a supported ring: arithmetic, binary powering,
// conjugate transpose, squared Frobenius norm, fraction-free determinants,
// entry ideals and the exact spectral classification of B*B.

#pragma once

#include "fixdiv/ideal.hpp"
#include "fixdiv/ring.hpp"

#include <cstdint>
#include <vector>

namespace fixdiv {

class Mat {
public:
    Mat() = default;
    Mat(RingDesc ring, int n);  // zero matrix, n >= 1

    static Mat identity(RingDesc ring, int n);
    static Mat unit(RingDesc ring, int n, int i, int j);  // single 1 at (i, j)
    static Mat scalar(RingDesc ring, int n, const RingElem& c);

    int n() const { return n_; }
    const RingDesc& ring() const { return ring_; }

    RingElem& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const RingElem& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    bool is_zero() const;

    Mat operator+(const Mat& y) const;
    Mat operator-(const Mat& y) const;
    Mat operator*(const Mat& y) const;
    Mat operator-() const;
    Mat operator*(const RingElem& c) const;

    bool operator==(const Mat& y) const;
    bool operator!=(const Mat& y) const { return !(*this == y); }

    std::string to_string() const;

private:
    int n_ = 0;
    RingDesc ring_;
    std::vector<RingElem> e_;

    void check_compatible(const Mat& y) const;
};

Mat mat_pow(const Mat& x, std::uint64_t m);
Mat conj_transpose(const Mat& m);
mpz_class frob_norm_sq(const Mat& m);

// Exact determinant by fraction-free elimination (direct expansion for n <= 2).
RingElem det(const Mat& m);

// Ideal generated by all entries.
Ideal entry_ideal(const Mat& m);

enum class SpectralClass { Singular, AllAboveOne, AllBelowOne, Boundary, Mixed };

const char* to_string(SpectralClass c);

// Classifies the eigenvalues of B*B without floating point.  Singular when
// det(B) = 0; otherwise positive definiteness of B*B -+ I is decided by
// Sylvester's criterion on leading principal minors, which are rational
// integers for conjugation-closed rings.
SpectralClass spectral_class(const Mat& b);

}  // namespace fixdiv
