#include "fixdiv/fixdiv.hpp"

#include "fixdiv/rng.hpp"

#include <algorithm>
#include <vector>

namespace fixdiv {

namespace {

// Seed evaluations are exact; refuse ones whose results would not fit in
// memory (huge exponent at a base of modulus > 1).
constexpr std::uint64_t kSeedValueBitLimit = std::uint64_t(1) << 26;

mpz_class eval_z(const ScalarPoly& g, const mpz_class& x) {
    mpz_class acc = 0, power = 1;
    std::uint64_t have = 0;
    for (const ScalarTerm& t : g.terms()) {
        mpz_class gap;
        mpz_pow_ui(gap.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(t.exp - have));
        power *= gap;
        have = t.exp;
        acc += t.coeff.a() * power;
    }
    return acc;
}

mpz_class eval_z_mod(const ScalarPoly& g, const mpz_class& a, const mpz_class& q) {
    mpz_class acc = 0, p;
    for (const ScalarTerm& t : g.terms()) {
        mpz_class e(static_cast<unsigned long>(t.exp));
        // exponents above ulong range still fit an mpz built from two halves
        if (t.exp > 0xffffffffUL) {
            e = mpz_class(static_cast<unsigned long>(t.exp >> 32));
            e <<= 32;
            e += static_cast<unsigned long>(t.exp & 0xffffffffUL);
        }
        mpz_powm(p.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
        acc += t.coeff.a() * p;
        acc %= q;
    }
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), q.get_mpz_t());
    return acc;
}

std::uint64_t bit_length(long long v) {
    std::uint64_t u = static_cast<std::uint64_t>(v < 0 ? -v : v);
    std::uint64_t bits = 0;
    while (u) {
        ++bits;
        u >>= 1;
    }
    return bits;
}

}  // namespace

mpz_class fixdiv_int_dense(const ScalarPoly& g) {
    if (!g.ring().is_z()) throw std::invalid_argument("fixdiv_int needs ring Z");
    if (g.is_zero()) return 0;
    mpz_class d = 0;
    for (std::uint64_t a = 0; a <= g.max_exp(); ++a) {
        mpz_class v = eval_z(g, mpz_class(static_cast<unsigned long>(a)));
        mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t());
        if (d == 1) break;
    }
    return d;
}

mpz_class fixdiv_int_sparse(const ScalarPoly& g, std::uint64_t residue_cap) {
    if (!g.ring().is_z()) throw std::invalid_argument("fixdiv_int needs ring Z");
    if (g.is_zero()) return 0;

    // Seed the candidate modulus with actual values at small points.  A
    // nonzero sparse polynomial with k terms cannot vanish at all of
    // +-1..+-(k+1), so the seed is nonzero whenever all seeds are evaluable.
    mpz_class q = 0;
    long long reach = static_cast<long long>(g.terms().size()) + 1;
    for (long long t = 0; t <= reach && q != 1; ++t) {
        for (long long s : {t, -t}) {
            if (s == 0 && t != 0) continue;
            if (t > 1 && bit_length(s) * g.max_exp() > kSeedValueBitLimit) continue;
            mpz_class v = eval_z(g, mpz_class(static_cast<long>(s)));
            mpz_gcd(q.get_mpz_t(), q.get_mpz_t(), v.get_mpz_t());
        }
    }
    if (q == 0)
        throw FixdivCapError("seed evaluation too large for sparse fixed divisor",
                             Ideal::zero(g.ring()));

    for (;;) {
        if (q > residue_cap)
            throw FixdivCapError("residue enumeration too large",
                                 Ideal::from_basis_z(g.ring(), q));
        bool enlarged = false;
        for (mpz_class a = 0; a < q; ++a) {
            mpz_class v = eval_z_mod(g, a, q);
            if (v != 0) {
                mpz_gcd(q.get_mpz_t(), q.get_mpz_t(), v.get_mpz_t());
                enlarged = true;
                break;
            }
        }
        if (!enlarged) return q;
    }
}

mpz_class fixdiv_int(const ScalarPoly& g, std::uint64_t dense_cutoff, std::uint64_t residue_cap) {
    if (!g.ring().is_z()) throw std::invalid_argument("fixdiv_int needs ring Z");
    if (g.max_exp() <= dense_cutoff) return fixdiv_int_dense(g);
    return fixdiv_int_sparse(g, residue_cap);
}

namespace {

RingElem reduce_coeff(const Ideal& J, const RingElem& c) { return J.reduce(c); }

RingElem pow_mod(const Ideal& J, const RingElem& x, std::uint64_t m) {
    RingElem result = J.reduce(RingElem(x.ring(), 1));
    RingElem base = J.reduce(x);
    while (m > 0) {
        if (m & 1) result = J.reduce(result * base);
        m >>= 1;
        if (m) base = J.reduce(base * base);
    }
    return result;
}

RingElem eval_mod(const Ideal& J, const ScalarPoly& g, const RingElem& x) {
    RingElem acc(g.ring());
    RingElem power = J.reduce(RingElem(g.ring(), 1));
    std::uint64_t have = 0;
    for (const ScalarTerm& t : g.terms()) {
        power = J.reduce(power * pow_mod(J, x, t.exp - have));
        have = t.exp;
        acc = J.reduce(acc + reduce_coeff(J, t.coeff) * power);
    }
    return acc;
}

// idx -> canonical residue representative, without materializing the list.
RingElem residue_at(const Ideal& J, std::uint64_t idx) {
    if (J.ring().is_z()) return RingElem(J.ring(), mpz_class(static_cast<unsigned long>(idx)));
    std::uint64_t p = J.p().get_ui();
    return RingElem(J.ring(), mpz_class(static_cast<unsigned long>(idx % p)),
                    mpz_class(static_cast<unsigned long>(idx / p)));
}

}  // namespace

Ideal fixdiv_ring(const ScalarPoly& g, std::uint64_t residue_cap) {
    const RingDesc ring = g.ring();
    if (g.is_zero()) return Ideal::zero(ring);

    std::vector<RingElem> seeds;
    long long reach = static_cast<long long>(g.terms().size()) + 1;
    for (long long t = 0; t <= reach; ++t)
        for (long long s : {t, -t}) {
            if (s == 0 && t != 0) continue;
            if (t > 1 && bit_length(s) * g.max_exp() > kSeedValueBitLimit) continue;
            seeds.emplace_back(ring, mpz_class(static_cast<long>(s)));
        }
    if (!ring.is_z()) {
        std::uint64_t omega_bits = bit_length(static_cast<long long>(ring.d())) + 2;
        if (omega_bits * g.max_exp() / 2 <= kSeedValueBitLimit) {
            seeds.push_back(RingElem::omega(ring));
            seeds.push_back(RingElem(ring, 1, 1));
        }
    }

    Ideal J = Ideal::zero(ring);
    for (const RingElem& s : seeds) J = ideal_join(J, eval(g, s));
    if (J.is_zero())
        throw FixdivCapError("seed evaluation too large for fixed divisor", J);

    for (;;) {
        if (J.norm() > residue_cap) throw FixdivCapError("residue enumeration too large", J);
        std::uint64_t n = J.norm().get_ui();
        bool enlarged = false;
        for (std::uint64_t idx = 0; idx < n; ++idx) {
            RingElem v = eval_mod(J, g, residue_at(J, idx));
            if (!v.is_zero()) {
                J = ideal_join(J, v);
                enlarged = true;
                break;
            }
        }
        if (!enlarged) return J;
    }
}

namespace {

Mat reduce_mat(const Ideal& J, const Mat& m) {
    Mat out(m.ring(), m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out.at(i, j) = J.reduce(m.at(i, j));
    return out;
}

Mat mat_mul_mod(const Ideal& J, const Mat& x, const Mat& y) { return reduce_mat(J, x * y); }

Mat mat_pow_mod(const Ideal& J, const Mat& c, std::uint64_t m) {
    Mat result = reduce_mat(J, Mat::identity(c.ring(), c.n()));
    Mat base = reduce_mat(J, c);
    while (m > 0) {
        if (m & 1) result = mat_mul_mod(J, result, base);
        m >>= 1;
        if (m) base = mat_mul_mod(J, base, base);
    }
    return result;
}

Mat eval_matrix_mod(const Ideal& J, const MatrixPoly& f, const Mat& c) {
    Mat acc(f.ring(), f.n());
    Mat power = reduce_mat(J, Mat::identity(f.ring(), f.n()));
    std::uint64_t have = 0;
    for (const MatrixTerm& t : f.terms()) {
        power = mat_mul_mod(J, power, mat_pow_mod(J, c, t.exp - have));
        have = t.exp;
        acc = reduce_mat(J, acc + reduce_mat(J, t.coeff) * power);
    }
    return acc;
}

Ideal join_entries(Ideal J, const Mat& value) {
    for (int i = 0; i < value.n(); ++i)
        for (int j = 0; j < value.n(); ++j)
            if (!value.at(i, j).is_zero()) J = ideal_join(J, value.at(i, j));
    return J;
}

std::vector<Mat> starter_matrices(const MatrixPoly& f) {
    const RingDesc ring = f.ring();
    const int n = f.n();
    std::vector<Mat> out;
    out.push_back(Mat(ring, n));
    out.push_back(Mat::identity(ring, n));
    out.push_back(-Mat::identity(ring, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.push_back(Mat::unit(ring, n, i, j));
    long long reach = static_cast<long long>(f.terms().size()) + 1;
    for (long long c = 2; c <= reach + 1; ++c) {
        if (bit_length(c) * f.max_exp() > kSeedValueBitLimit) break;
        out.push_back(Mat::scalar(ring, n, RingElem(ring, mpz_class(static_cast<long>(c)))));
    }
    return out;
}

}  // namespace

MatrixFixdiv fixdiv_matrix(const MatrixPoly& f, FixdivMode mode, std::uint64_t residue_cap) {
    const RingDesc ring = f.ring();
    const int n = f.n();
    if (f.is_zero()) return {Ideal::zero(ring), true};

    if (!mode.exact) {
        Ideal J = Ideal::zero(ring);
        SplitMix64 rng(mode.seed);
        if (16 * f.max_exp() > kSeedValueBitLimit)
            throw FixdivCapError("sampled evaluation too large", J);
        for (std::uint64_t i = 0; i < mode.count; ++i) {
            Mat c(ring, n);
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    mpz_class a(static_cast<long>(rng.range(-16, 16)));
                    mpz_class b = ring.is_z() ? mpz_class(0) : mpz_class(static_cast<long>(rng.range(-16, 16)));
                    c.at(r, s) = RingElem(ring, a, b);
                }
            J = join_entries(std::move(J), eval(f, c));
        }
        return {J, false};
    }

    Ideal J = Ideal::zero(ring);
    for (const Mat& s : starter_matrices(f)) J = join_entries(std::move(J), eval(f, s));
    if (J.is_zero())
        throw FixdivCapError("seed evaluation too large for matrix fixed divisor", J);

    const int cells = n * n;
    for (;;) {
        mpz_class nj = J.norm();
        mpz_class total;
        mpz_pow_ui(total.get_mpz_t(), nj.get_mpz_t(), static_cast<unsigned long>(cells));
        if (total > residue_cap)
            throw FixdivCapError(
                "matrix residue scan too large (" + total.get_str() +
                    " candidates); use sampled mode",
                J);
        std::uint64_t nr = nj.get_ui();
        std::uint64_t count = total.get_ui();

        bool enlarged = false;
        std::vector<std::uint64_t> digits(static_cast<size_t>(cells), 0);
        for (std::uint64_t it = 0; it < count && !enlarged; ++it) {
            Mat c(ring, n);
            for (int idx = 0; idx < cells; ++idx)
                c.at(idx / n, idx % n) = residue_at(J, digits[static_cast<size_t>(idx)]);
            Mat v = eval_matrix_mod(J, f, c);
            if (!v.is_zero()) {
                J = join_entries(std::move(J), v);
                enlarged = true;
                break;
            }
            for (int idx = 0; idx < cells; ++idx) {
                if (++digits[static_cast<size_t>(idx)] < nr) break;
                digits[static_cast<size_t>(idx)] = 0;
            }
        }
        if (!enlarged) return {J, true};
    }
}

}  // namespace fixdiv
