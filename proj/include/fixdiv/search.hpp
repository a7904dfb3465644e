// Condition checks and certified searches for matrix divisibility solutions:
// hypotheses on B (proper entry ideal, spectral class of B*B off the unit
// circle), subset-sum nonvanishing, the entry-ideal containment test against
// the matrix fixed divisor, exponent-tuple search windows, the exact norm
// cutoff for candidate B, and the box search over B.

#pragma once

#include "fixdiv/fixdiv.hpp"
#include "fixdiv/matrix.hpp"
#include "fixdiv/poly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace fixdiv {

inline constexpr unsigned kDefaultSubsetCap = 20;

struct Caps {
    std::uint64_t residue_cap = kDefaultResidueCap;
    unsigned subset_cap = kDefaultSubsetCap;
};

struct ACheck {
    bool a1 = false;  // entry ideal of B is proper
    SpectralClass spectral = SpectralClass::Mixed;
    bool a2 = false;  // spectral class is all-above-one or all-below-one
};

ACheck check_A(const Mat& b);

struct B1Check {
    bool ok = false;
    // Term-index subsets (into f.terms()) whose sum vanishes at B.
    std::vector<std::vector<std::size_t>> failures;
};

// Evaluates all 2^k - 1 nonempty subset sums of A_i B^(m_i).
B1Check check_B1(const MatrixPoly& f, const Mat& b, unsigned subset_cap = kDefaultSubsetCap);

enum class B2Status { FalseDefinitive, TrueUncertified, TrueCertified };

const char* to_string(B2Status s);

struct ConditionReport {
    bool a1 = false;
    SpectralClass spectral = SpectralClass::Mixed;
    bool a2 = false;
    B1Check b1;
    B2Status b2 = B2Status::FalseDefinitive;
    Ideal f_of_b_entry_ideal;
    MatrixFixdiv fixdiv;
};

// Shared memo for fixed divisors of the polynomials met during searches.
// Writes are idempotent: a key always maps to the same value.
class FixdivCache {
public:
    std::optional<MatrixFixdiv> find(const std::string& key) const;
    void store(const std::string& key, const MatrixFixdiv& value);

private:
    mutable std::mutex mu_;
    std::map<std::string, MatrixFixdiv> map_;
};

ConditionReport check_conditions(const MatrixPoly& f, const Mat& b,
                                 FixdivMode mode = FixdivMode::exact_mode(), Caps caps = {},
                                 FixdivCache* cache = nullptr);

struct GrowthRow {
    std::uint64_t m = 0;       // stratum: max entry of the tuple
    mpz_class min_norm_sq;     // least frob_norm_sq(f(B)) among subset-sound tuples
};

struct TupleHit {
    std::vector<std::uint64_t> tuple;
    ConditionReport report;
    // Instance diagnostics for the norm-cutoff argument.
    bool bound2_hypothesis_held = false;
    bool bound2_lower_bound_held = false;
    bool vandermonde_nonzero = false;
};

struct SearchReport {
    std::uint64_t window = 0;
    std::vector<TupleHit> hits;
    std::vector<GrowthRow> growth;
    std::vector<std::vector<std::uint64_t>> truncated;  // tuples that hit a cap
    std::vector<std::string> notes;
};

// Scans every tuple in [0, max_m]^k; exponent collisions are merged by
// coefficient addition before checking.  Requires check_A(B) to pass.
SearchReport search_tuples(const std::vector<Mat>& coeffs, const Mat& b, std::uint64_t max_m,
                           FixdivMode mode = FixdivMode::exact_mode(), Caps caps = {},
                           FixdivCache* cache = nullptr);

// Exact rational upper bound T on the norm cutoff: any B with ||B|| > T makes
// the power-growth lower bound on ||f(B)|| exceed the f(2^j I) upper bound
// for every admissible tuple.  Comparisons stay in integers; the irrational
// cross terms are rounded up by integer square roots.
struct NormBound {
    mpq_class t_sq;     // certified bound on ||B||^2
    mpz_class t_ceil;   // smallest integer c with c^2 >= t_sq
};

NormBound bound_B_norm(const std::vector<Mat>& coeffs);

struct BCandidateStats {
    std::uint64_t scanned = 0;
    std::uint64_t skipped_zero = 0;
    std::uint64_t skipped_norm = 0;
    std::uint64_t skipped_a1 = 0;
    std::uint64_t skipped_a2 = 0;
    std::uint64_t searched = 0;
};

struct BHit {
    Mat b;
    SearchReport report;  // all-zero tuples already excluded
};

struct BSearchReport {
    NormBound bound;
    bool box_covers_bound = false;
    BCandidateStats stats;
    std::vector<BHit> hits;
    std::vector<std::vector<std::uint64_t>> truncated;
    std::vector<std::string> notes;
};

// Enumerates B with entry coordinates in [-entry_box, entry_box], filters by
// frob_norm_sq(B) <= T^2 and by the A hypotheses, then searches tuples for
// each survivor.
BSearchReport search_B(const std::vector<Mat>& coeffs, std::uint64_t max_m, long entry_box,
                       FixdivMode mode = FixdivMode::exact_mode(), Caps caps = {},
                       unsigned workers = 1);

}  // namespace fixdiv
