#include "fixdiv/search.hpp"

#include "fixdiv/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace fixdiv {

namespace {

const char* kBelowOneNote =
    "note: over these rings a nonsingular B has det(B*B) = N(det B) >= 1, so the "
    "all-below-one class cannot occur; the branch is kept as stated";

mpz_class ceil_sqrt(const mpz_class& x) {
    mpz_class s, rem;
    mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
    if (rem != 0) ++s;
    return s;
}

// Integer upper bound for (sum_i sqrt(v_i))^2.
mpz_class upper_sum_sqrt_sq(const std::vector<mpz_class>& v) {
    mpz_class out = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out += v[i];
        for (size_t j = i + 1; j < v.size(); ++j) out += 2 * ceil_sqrt(v[i] * v[j]);
    }
    return out;
}

std::string poly_key(const MatrixPoly& f, FixdivMode mode) {
    std::ostringstream os;
    os << (mode.exact ? "E" : "S") << mode.count << ":" << mode.seed << "|"
       << f.ring().to_string() << "|" << f.n();
    for (const MatrixTerm& t : f.terms()) os << "|" << t.exp << ":" << t.coeff.to_string();
    return os.str();
}

MatrixFixdiv cached_fixdiv(const MatrixPoly& f, FixdivMode mode, const Caps& caps,
                           FixdivCache* cache) {
    if (!cache) return fixdiv_matrix(f, mode, caps.residue_cap);
    std::string key = poly_key(f, mode);
    if (auto hit = cache->find(key)) return *hit;
    MatrixFixdiv value = fixdiv_matrix(f, mode, caps.residue_cap);
    cache->store(key, value);
    return value;
}

}  // namespace

std::optional<MatrixFixdiv> FixdivCache::find(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void FixdivCache::store(const std::string& key, const MatrixFixdiv& value) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, value);
}

ACheck check_A(const Mat& b) {
    ACheck out;
    out.a1 = !entry_ideal(b).contains(RingElem(b.ring(), 1));
    out.spectral = spectral_class(b);
    out.a2 = out.spectral == SpectralClass::AllAboveOne ||
             out.spectral == SpectralClass::AllBelowOne;
    return out;
}

B1Check check_B1(const MatrixPoly& f, const Mat& b, unsigned subset_cap) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (f.ring() != b.ring() || f.n() != b.n())
        throw std::invalid_argument("polynomial and matrix do not match");
    const size_t k = f.terms().size();
    if (k > subset_cap) throw std::invalid_argument("subset explosion");

    std::vector<Mat> term_values;
    Mat power = Mat::identity(b.ring(), b.n());
    std::uint64_t have = 0;
    for (const MatrixTerm& t : f.terms()) {
        power = power * mat_pow(b, t.exp - have);
        have = t.exp;
        term_values.push_back(t.coeff * power);
    }

    B1Check out;
    out.ok = true;
    // Gray-code walk: one add or subtract per subset.
    Mat sum(b.ring(), b.n());
    std::uint64_t prev = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << k); ++i) {
        std::uint64_t gray = i ^ (i >> 1);
        std::uint64_t flipped = gray ^ prev;
        int bit = 0;
        while (!((flipped >> bit) & 1)) ++bit;
        if ((gray >> bit) & 1)
            sum = sum + term_values[static_cast<size_t>(bit)];
        else
            sum = sum - term_values[static_cast<size_t>(bit)];
        prev = gray;
        if (sum.is_zero()) {
            std::vector<std::size_t> subset;
            for (size_t t = 0; t < k; ++t)
                if ((gray >> t) & 1) subset.push_back(t);
            out.failures.push_back(std::move(subset));
            out.ok = false;
        }
    }
    std::sort(out.failures.begin(), out.failures.end());
    return out;
}

const char* to_string(B2Status s) {
    switch (s) {
        case B2Status::FalseDefinitive: return "false";
        case B2Status::TrueUncertified: return "true-uncertified";
        case B2Status::TrueCertified: return "true-certified";
    }
    return "?";
}

ConditionReport check_conditions(const MatrixPoly& f, const Mat& b, FixdivMode mode, Caps caps,
                                 FixdivCache* cache) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    ConditionReport r;
    ACheck a = check_A(b);
    r.a1 = a.a1;
    r.spectral = a.spectral;
    r.a2 = a.a2;
    r.b1 = check_B1(f, b, caps.subset_cap);
    Mat fb = eval(f, b);
    r.f_of_b_entry_ideal = entry_ideal(fb);
    r.fixdiv = cached_fixdiv(f, mode, caps, cache);
    bool contained = r.f_of_b_entry_ideal.contains(r.fixdiv.ideal);
    if (!contained)
        r.b2 = B2Status::FalseDefinitive;
    else
        r.b2 = r.fixdiv.certified ? B2Status::TrueCertified : B2Status::TrueUncertified;
    return r;
}

namespace {

struct TupleDiagnostics {
    bool hypothesis = false;
    bool lower_bound = false;
    bool vandermonde = false;
};

TupleDiagnostics hit_diagnostics(const MatrixPoly& f, const Mat& b, const mpz_class& f_of_b_norm) {
    TupleDiagnostics d;
    const auto& terms = f.terms();
    mpz_class lead_sq = frob_norm_sq(terms.back().coeff);
    std::uint64_t m1 = terms.back().exp;
    mpz_class fb = frob_norm_sq(b);

    std::vector<mpz_class> rest;
    for (size_t i = 0; i + 1 < terms.size(); ++i) rest.push_back(frob_norm_sq(terms[i].coeff));
    // ||B|| >= 2 sum_(i>=2) ||A_i|| / ||A_1||, compared on squares.
    d.hypothesis = fb * lead_sq >= 4 * upper_sum_sqrt_sq(rest);
    // ||f(B)|| >= ||A_1|| ||B||^(m_1) / 2, squared.
    mpz_class fbm;
    mpz_pow_ui(fbm.get_mpz_t(), fb.get_mpz_t(), static_cast<unsigned long>(m1));
    d.lower_bound = 4 * f_of_b_norm >= lead_sq * fbm;

    for (size_t j = 0; j < terms.size() && !d.vandermonde; ++j) {
        RingElem c(f.ring(), mpz_class(1) << j);
        if (!eval(f, Mat::scalar(f.ring(), f.n(), c)).is_zero()) d.vandermonde = true;
    }
    return d;
}

}  // namespace

SearchReport search_tuples(const std::vector<Mat>& coeffs, const Mat& b, std::uint64_t max_m,
                           FixdivMode mode, Caps caps, FixdivCache* cache) {
    if (coeffs.empty()) throw std::invalid_argument("need at least one coefficient");
    const RingDesc ring = b.ring();
    const int n = b.n();
    for (const Mat& a : coeffs)
        if (a.ring() != ring || a.n() != n)
            throw std::invalid_argument("coefficients and B do not match");

    ACheck a = check_A(b);
    if (!a.a1)
        throw std::invalid_argument("hypothesis A.1 fails: the entry ideal of B is the whole ring");
    if (!a.a2)
        throw std::invalid_argument(std::string("hypothesis A.2 fails: spectral class of B*B is ") +
                                    to_string(a.spectral));

    const size_t k = coeffs.size();
    mpz_class grid;
    mpz_ui_pow_ui(grid.get_mpz_t(), static_cast<unsigned long>(max_m + 1),
                  static_cast<unsigned long>(k));
    if (grid > 100000000) throw std::invalid_argument("tuple grid too large");
    const std::uint64_t total = grid.get_ui();

    FixdivCache local_cache;
    if (!cache) cache = &local_cache;

    SearchReport rep;
    rep.window = max_m;
    std::map<std::uint64_t, mpz_class> growth;

    std::vector<std::uint64_t> tuple(k, 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        std::vector<MatrixTerm> terms;
        for (size_t i = 0; i < k; ++i) terms.push_back({tuple[i], coeffs[i]});
        MatrixPoly f(ring, n, std::move(terms));

        bool b1_ok = false;
        B1Check b1;
        if (!f.is_zero()) {
            b1 = check_B1(f, b, caps.subset_cap);
            b1_ok = b1.ok;
        }
        if (b1_ok) {
            Mat fb = eval(f, b);
            mpz_class fn = frob_norm_sq(fb);
            std::uint64_t stratum = *std::max_element(tuple.begin(), tuple.end());
            auto [it_g, fresh] = growth.emplace(stratum, fn);
            if (!fresh && fn < it_g->second) it_g->second = fn;

            try {
                MatrixFixdiv fd = cached_fixdiv(f, mode, caps, cache);
                Ideal ifb = entry_ideal(fb);
                bool contained = ifb.contains(fd.ideal);
                B2Status b2 = !contained ? B2Status::FalseDefinitive
                              : fd.certified ? B2Status::TrueCertified
                                             : B2Status::TrueUncertified;
                if (b2 == B2Status::TrueCertified) {
                    TupleHit hit;
                    hit.tuple = tuple;
                    hit.report.a1 = a.a1;
                    hit.report.spectral = a.spectral;
                    hit.report.a2 = a.a2;
                    hit.report.b1 = std::move(b1);
                    hit.report.b2 = b2;
                    hit.report.f_of_b_entry_ideal = std::move(ifb);
                    hit.report.fixdiv = std::move(fd);
                    TupleDiagnostics diag = hit_diagnostics(f, b, fn);
                    hit.bound2_hypothesis_held = diag.hypothesis;
                    hit.bound2_lower_bound_held = diag.lower_bound;
                    hit.vandermonde_nonzero = diag.vandermonde;
                    rep.hits.push_back(std::move(hit));
                }
            } catch (const FixdivCapError&) {
                rep.truncated.push_back(tuple);
            }
        }

        for (size_t i = 0; i < k; ++i) {
            if (++tuple[i] <= max_m) break;
            tuple[i] = 0;
        }
    }

    for (auto& [m, v] : growth) rep.growth.push_back({m, v});
    return rep;
}

NormBound bound_B_norm(const std::vector<Mat>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("need at least one coefficient");
    const RingDesc ring = coeffs.front().ring();
    const int n = coeffs.front().n();
    std::vector<mpz_class> f;
    bool any_nonzero = false;
    for (const Mat& a : coeffs) {
        if (a.ring() != ring || a.n() != n) throw std::invalid_argument("coefficient mismatch");
        f.push_back(frob_norm_sq(a));
        if (f.back() != 0) any_nonzero = true;
    }
    if (!any_nonzero) throw std::invalid_argument("all coefficients zero");

    const size_t k = coeffs.size();
    mpz_class four_k = mpz_class(1) << (2 * k);
    mpz_class u_all = upper_sum_sqrt_sq(f);

    // The leading position is not fixed here, so take the worst case over
    // every nonzero coefficient in that role.
    mpq_class best(0);
    for (size_t j = 0; j < k; ++j) {
        if (f[j] == 0) continue;
        std::vector<mpz_class> rest;
        for (size_t i = 0; i < k; ++i)
            if (i != j) rest.push_back(f[i]);
        mpq_class t1(4 * upper_sum_sqrt_sq(rest), f[j]);
        mpq_class t2(four_k * n * u_all, f[j]);
        t1.canonicalize();
        t2.canonicalize();
        if (t1 > best) best = t1;
        if (t2 > best) best = t2;
    }

    NormBound out;
    out.t_sq = best;
    mpz_class num = best.get_num(), den = best.get_den();
    mpz_class c = ceil_sqrt(num / den);
    while (c * c * den < num) ++c;
    out.t_ceil = c;
    return out;
}

namespace {

struct CandidateOutcome {
    enum Kind { Unset, Zero, Norm, A1, A2, Searched } kind = Unset;
    Mat b;
    SearchReport report;
};

}  // namespace

BSearchReport search_B(const std::vector<Mat>& coeffs, std::uint64_t max_m, long entry_box,
                       FixdivMode mode, Caps caps, unsigned workers) {
    if (coeffs.empty()) throw std::invalid_argument("need at least one coefficient");
    if (entry_box < 0) throw std::invalid_argument("entry box must be nonnegative");
    const RingDesc ring = coeffs.front().ring();
    const int n = coeffs.front().n();

    BSearchReport rep;
    rep.bound = bound_B_norm(coeffs);

    mpz_class needed = ring.half_basis() ? 2 * rep.bound.t_ceil : rep.bound.t_ceil;
    rep.box_covers_bound = mpz_class(entry_box) >= needed;
    if (!rep.box_covers_bound)
        rep.notes.push_back("box does not cover certified bound (need coordinates up to " +
                            needed.get_str() + ")");
    rep.notes.push_back(kBelowOneNote);

    const int coords = ring.is_z() ? 1 : 2;
    const int dims = n * n * coords;
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(entry_box) + 1;
    mpz_class cand;
    mpz_ui_pow_ui(cand.get_mpz_t(), static_cast<unsigned long>(side),
                  static_cast<unsigned long>(dims));
    if (cand > 2000000) throw std::invalid_argument("entry box enumeration too large");
    const std::uint64_t count = cand.get_ui();

    std::vector<CandidateOutcome> slots(count);
    FixdivCache cache;

    parallel_for(0, count, workers, [&](std::uint64_t idx) {
        CandidateOutcome& slot = slots[idx];
        Mat b(ring, n);
        std::uint64_t rem = idx;
        for (int cell = 0; cell < n * n; ++cell) {
            mpz_class a(static_cast<long>(rem % side) - entry_box);
            rem /= side;
            mpz_class bb = 0;
            if (coords == 2) {
                bb = static_cast<long>(rem % side) - entry_box;
                rem /= side;
            }
            b.at(cell / n, cell % n) = RingElem(ring, a, bb);
        }
        slot.b = b;
        if (b.is_zero()) {
            slot.kind = CandidateOutcome::Zero;
            return;
        }
        mpq_class fb(frob_norm_sq(b));
        if (fb > rep.bound.t_sq) {
            slot.kind = CandidateOutcome::Norm;
            return;
        }
        ACheck a = check_A(b);
        if (!a.a1) {
            slot.kind = CandidateOutcome::A1;
            return;
        }
        if (!a.a2) {
            slot.kind = CandidateOutcome::A2;
            return;
        }
        slot.report = search_tuples(coeffs, b, max_m, mode, caps, &cache);
        slot.kind = CandidateOutcome::Searched;
    });

    for (CandidateOutcome& slot : slots) {
        ++rep.stats.scanned;
        switch (slot.kind) {
            case CandidateOutcome::Zero: ++rep.stats.skipped_zero; break;
            case CandidateOutcome::Norm: ++rep.stats.skipped_norm; break;
            case CandidateOutcome::A1: ++rep.stats.skipped_a1; break;
            case CandidateOutcome::A2: ++rep.stats.skipped_a2; break;
            case CandidateOutcome::Unset: break;
            case CandidateOutcome::Searched: {
                ++rep.stats.searched;
                for (const auto& t : slot.report.truncated) rep.truncated.push_back(t);
                // Tuples with every exponent zero are excluded from B hits.
                std::vector<TupleHit> kept;
                for (TupleHit& hit : slot.report.hits) {
                    bool all_zero = std::all_of(hit.tuple.begin(), hit.tuple.end(),
                                                [](std::uint64_t m) { return m == 0; });
                    if (!all_zero) kept.push_back(std::move(hit));
                }
                if (!kept.empty()) {
                    SearchReport r;
                    r.window = slot.report.window;
                    r.hits = std::move(kept);
                    r.growth = std::move(slot.report.growth);
                    rep.hits.push_back({std::move(slot.b), std::move(r)});
                }
                break;
            }
        }
    }
    return rep;
}

}  // namespace fixdiv
