// Sparse polynomials sum_i c_i x^(m_i) with ring-element or matrix
// coefficients and natural-number exponents.  Terms are kept sorted by
// strictly increasing exponent; duplicate exponents are merged by coefficient
// addition at construction and zero coefficients are dropped.

#pragma once

#include "fixdiv/matrix.hpp"
#include "fixdiv/ring.hpp"

#include <cstdint>
#include <vector>

namespace fixdiv {

struct ScalarTerm {
    std::uint64_t exp;
    RingElem coeff;
};

class ScalarPoly {
public:
    explicit ScalarPoly(RingDesc ring) : ring_(ring) {}
    ScalarPoly(RingDesc ring, std::vector<ScalarTerm> terms);

    const RingDesc& ring() const { return ring_; }
    const std::vector<ScalarTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t max_exp() const { return terms_.empty() ? 0 : terms_.back().exp; }

    bool operator==(const ScalarPoly& o) const;

    std::string to_string() const;

private:
    RingDesc ring_;
    std::vector<ScalarTerm> terms_;
};

struct MatrixTerm {
    std::uint64_t exp;
    Mat coeff;
};

class MatrixPoly {
public:
    MatrixPoly(RingDesc ring, int n) : ring_(ring), n_(n) {}
    MatrixPoly(RingDesc ring, int n, std::vector<MatrixTerm> terms);

    const RingDesc& ring() const { return ring_; }
    int n() const { return n_; }
    const std::vector<MatrixTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t max_exp() const { return terms_.empty() ? 0 : terms_.back().exp; }

private:
    RingDesc ring_;
    int n_ = 1;
    std::vector<MatrixTerm> terms_;
};

RingElem eval(const ScalarPoly& g, const RingElem& x);

// sum_i A_i C^(m_i): coefficients multiply from the left.
Mat eval(const MatrixPoly& f, const Mat& c);

// Scalar polynomial collecting entry (i, j) of every coefficient (0-based).
ScalarPoly entry_poly(const MatrixPoly& f, int i, int j);

}  // namespace fixdiv
