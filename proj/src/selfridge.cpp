#include "fixdiv/selfridge.hpp"

#include "fixdiv/fixdiv.hpp"
#include "fixdiv/parallel.hpp"
#include "fixdiv/poly.hpp"

#include <stdexcept>

namespace fixdiv {

namespace {

mpz_class pow_z(const mpz_class& b, std::uint64_t e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

ScalarPoly power_difference(std::uint64_t m, std::uint64_t n) {
    RingDesc z = RingDesc::integers();
    return ScalarPoly(z, {{m, RingElem(z, 1)}, {n, RingElem(z, -1)}});
}

}  // namespace

bool divides_fixdiv(const mpz_class& b, std::uint64_t m, std::uint64_t n) {
    if (m <= n) throw std::invalid_argument("need m > n >= 0");
    mpz_class t = pow_z(b, m) - pow_z(b, n);
    if (t == 0) throw std::invalid_argument("degenerate modulus");
    mpz_class d = fixdiv_int(power_difference(m, n));
    return mpz_divisible_p(d.get_mpz_t(), t.get_mpz_t()) != 0;
}

PairReport base_b_pairs(const mpz_class& b, std::uint64_t max_m, unsigned workers) {
    if (abs(b) < 2) throw std::invalid_argument("need |b| >= 2");
    if (max_m < 1) throw std::invalid_argument("need max_m >= 1");

    PairReport report;
    report.base = b;
    report.window = max_m;

    std::vector<std::vector<PairHit>> per_m(max_m + 1);
    parallel_for(1, max_m + 1, workers, [&](std::uint64_t m) {
        mpz_class bm = pow_z(b, m);
        mpz_class f3m = pow_z(3, m);
        mpz_class f2m = pow_z(2, m);
        for (std::uint64_t n = 0; n < m; ++n) {
            mpz_class t = bm - pow_z(b, n);
            if (t == 0) continue;
            // The fixed divisor divides gcd of the values at 2 and 3, so a
            // candidate surviving that gcd test is confirmed exactly.
            mpz_class g;
            mpz_class f2 = f2m - pow_z(2, n);
            mpz_class f3 = f3m - pow_z(3, n);
            mpz_gcd(g.get_mpz_t(), f2.get_mpz_t(), f3.get_mpz_t());
            if (!mpz_divisible_p(g.get_mpz_t(), t.get_mpz_t())) continue;
            mpz_class d = fixdiv_int(power_difference(m, n));
            if (!mpz_divisible_p(d.get_mpz_t(), t.get_mpz_t())) continue;
            PairHit hit;
            hit.m = m;
            hit.n = n;
            hit.witness.modulus = abs(t);
            hit.witness.value = d;
            hit.witness.quotient = d / hit.witness.modulus;
            per_m[m].push_back(std::move(hit));
        }
    });
    for (auto& chunk : per_m)
        for (auto& hit : chunk) report.pairs.push_back(std::move(hit));
    return report;
}

PairReport ruderman_pairs(std::uint64_t max_m, unsigned workers) {
    if (max_m < 1) throw std::invalid_argument("need max_m >= 1");
    PairReport report;
    report.base = 2;
    report.window = max_m;

    std::vector<std::vector<PairHit>> per_m(max_m + 1);
    parallel_for(2, max_m + 1, workers, [&](std::uint64_t m) {
        mpz_class m2 = pow_z(2, m);
        mpz_class m3 = pow_z(3, m);
        for (std::uint64_t n = 1; n < m; ++n) {
            mpz_class t = m2 - pow_z(2, n);
            mpz_class v = m3 - pow_z(3, n);
            if (!mpz_divisible_p(v.get_mpz_t(), t.get_mpz_t())) continue;
            PairHit hit;
            hit.m = m;
            hit.n = n;
            hit.witness.modulus = t;
            hit.witness.value = v;
            hit.witness.quotient = v / t;
            per_m[m].push_back(std::move(hit));
        }
    });
    for (auto& chunk : per_m)
        for (auto& hit : chunk) report.pairs.push_back(std::move(hit));
    return report;
}

}  // namespace fixdiv
