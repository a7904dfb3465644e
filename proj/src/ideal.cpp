#include "fixdiv/ideal.hpp"

#include <utility>

namespace fixdiv {

namespace {

// Row reduction of coordinate vectors (a, b) meaning a + b*w into the
// canonical basis {p, q + r*w}.  Pivots on the w-coordinate first: the
// rational-integer part of the lattice is collected as a running gcd.
struct HnfBuilder {
    mpz_class p = 0;   // gcd of w-free coordinates
    mpz_class q0 = 0;  // pivot row (q0, r)
    mpz_class r = 0;

    void add_row(const mpz_class& a, const mpz_class& b) {
        if (a == 0 && b == 0) return;
        if (b == 0) {
            mpz_gcd(p.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
            return;
        }
        if (r == 0) {
            q0 = a;
            r = b;
            if (r < 0) {
                r = -r;
                q0 = -q0;
            }
            return;
        }
        // Unimodular combination of (q0, r) and (a, b): new pivot has
        // w-coordinate gcd(r, b), the eliminated row is w-free.
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t());
        mpz_class eliminated = q0 * (b / g) - a * (r / g);
        mpz_gcd(p.get_mpz_t(), p.get_mpz_t(), eliminated.get_mpz_t());
        q0 = s * q0 + t * a;
        r = g;
    }
};

}  // namespace

Ideal Ideal::zero(RingDesc ring) {
    Ideal I;
    I.ring_ = ring;
    return I;
}

Ideal Ideal::unit(RingDesc ring) {
    if (ring.is_z()) return from_basis_z(ring, 1);
    return from_basis_quadratic(ring, 1, 0, 1);
}

Ideal Ideal::from_basis_z(RingDesc ring, const mpz_class& g) {
    if (!ring.is_z()) throw std::invalid_argument("from_basis_z on a quadratic ring");
    if (g < 0) throw std::invalid_argument("basis generator must be nonnegative");
    if (g == 0) return zero(ring);
    Ideal I;
    I.ring_ = ring;
    I.zero_ = false;
    I.p_ = g;
    return I;
}

Ideal Ideal::from_basis_quadratic(RingDesc ring, const mpz_class& p, const mpz_class& q,
                                  const mpz_class& r) {
    if (ring.is_z()) throw std::invalid_argument("from_basis_quadratic on Z");
    if (p <= 0 || r <= 0 || q < 0 || q >= p)
        throw std::invalid_argument("basis is not in canonical form");
    Ideal I;
    I.ring_ = ring;
    I.zero_ = false;
    I.p_ = p;
    I.q_ = q;
    I.r_ = r;
    // The lattice must be closed under multiplication by w.
    if (!I.contains(RingElem::omega(ring) * RingElem(ring, p, 0)) ||
        !I.contains(RingElem::omega(ring) * RingElem(ring, q, r)))
        throw std::invalid_argument("basis does not span an ideal");
    return I;
}

Ideal Ideal::from_generators(RingDesc ring, const std::vector<RingElem>& gens) {
    if (ring.is_z()) {
        mpz_class g = 0;
        for (const RingElem& x : gens) {
            if (x.ring() != ring) throw std::invalid_argument("ring mismatch");
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.a().get_mpz_t());
        }
        return from_basis_z(ring, g);
    }
    RingElem w = RingElem::omega(ring);
    HnfBuilder h;
    for (const RingElem& x : gens) {
        if (x.ring() != ring) throw std::invalid_argument("ring mismatch");
        h.add_row(x.a(), x.b());
        RingElem wx = w * x;
        h.add_row(wx.a(), wx.b());
    }
    if (h.r == 0 && h.p == 0) return zero(ring);
    if (h.r == 0 || h.p == 0)
        throw std::logic_error("generator lattice is not w-closed");
    Ideal I;
    I.ring_ = ring;
    I.zero_ = false;
    I.p_ = h.p;
    I.r_ = h.r;
    mpz_fdiv_r(I.q_.get_mpz_t(), h.q0.get_mpz_t(), h.p.get_mpz_t());
    return I;
}

Ideal Ideal::principal(const RingElem& x) { return from_generators(x.ring(), {x}); }

bool Ideal::is_unit() const {
    if (zero_) return false;
    if (ring_.is_z()) return p_ == 1;
    return p_ == 1 && r_ == 1;
}

const mpz_class& Ideal::g() const {
    if (!ring_.is_z() || zero_) throw std::logic_error("g() needs a nonzero ideal of Z");
    return p_;
}

const mpz_class& Ideal::p() const {
    if (ring_.is_z() || zero_) throw std::logic_error("p() needs a nonzero quadratic ideal");
    return p_;
}

const mpz_class& Ideal::q() const {
    if (ring_.is_z() || zero_) throw std::logic_error("q() needs a nonzero quadratic ideal");
    return q_;
}

const mpz_class& Ideal::r() const {
    if (ring_.is_z() || zero_) throw std::logic_error("r() needs a nonzero quadratic ideal");
    return r_;
}

std::vector<RingElem> Ideal::basis_elems() const {
    if (zero_) return {};
    if (ring_.is_z()) return {RingElem(ring_, p_)};
    return {RingElem(ring_, p_, 0), RingElem(ring_, q_, r_)};
}

mpz_class Ideal::norm() const {
    if (zero_) throw std::domain_error("norm of zero ideal undefined");
    if (ring_.is_z()) return p_;
    return p_ * r_;
}

bool Ideal::contains(const RingElem& x) const {
    if (x.ring() != ring_) throw std::invalid_argument("ring mismatch");
    if (zero_) return x.is_zero();
    if (ring_.is_z()) return mpz_divisible_p(x.a().get_mpz_t(), p_.get_mpz_t()) != 0;
    if (!mpz_divisible_p(x.b().get_mpz_t(), r_.get_mpz_t())) return false;
    mpz_class t = x.b() / r_;
    mpz_class u = x.a() - t * q_;
    return mpz_divisible_p(u.get_mpz_t(), p_.get_mpz_t()) != 0;
}

bool Ideal::contains(const Ideal& other) const {
    if (other.ring_ != ring_) throw std::invalid_argument("ring mismatch");
    if (other.zero_) return true;
    if (zero_) return false;
    for (const RingElem& e : other.basis_elems())
        if (!contains(e)) return false;
    return true;
}

RingElem Ideal::reduce(const RingElem& x) const {
    if (x.ring() != ring_) throw std::invalid_argument("ring mismatch");
    if (zero_) throw std::domain_error("reduce modulo the zero ideal");
    if (ring_.is_z()) {
        mpz_class a;
        mpz_fdiv_r(a.get_mpz_t(), x.a().get_mpz_t(), p_.get_mpz_t());
        return RingElem(ring_, a);
    }
    mpz_class t;
    mpz_fdiv_q(t.get_mpz_t(), x.b().get_mpz_t(), r_.get_mpz_t());
    mpz_class b = x.b() - t * r_;
    mpz_class u = x.a() - t * q_;
    mpz_class s;
    mpz_fdiv_q(s.get_mpz_t(), u.get_mpz_t(), p_.get_mpz_t());
    return RingElem(ring_, u - s * p_, b);
}

bool Ideal::operator==(const Ideal& o) const {
    if (ring_ != o.ring_) return false;
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return p_ == o.p_ && q_ == o.q_ && r_ == o.r_;
}

std::string Ideal::to_string() const {
    if (zero_) return "(0)";
    if (ring_.is_z()) return "(" + p_.get_str() + ")";
    return "[" + p_.get_str() + ", " + RingElem(ring_, q_, r_).to_string() + "]";
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw std::invalid_argument("ring mismatch");
    if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
    if (I.ring().is_z()) return Ideal::from_basis_z(I.ring(), I.g() * J.g());
    std::vector<RingElem> gens;
    for (const RingElem& x : I.basis_elems())
        for (const RingElem& y : J.basis_elems()) gens.push_back(x * y);
    return Ideal::from_generators(I.ring(), gens);
}

Ideal ideal_join(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw std::invalid_argument("ring mismatch");
    std::vector<RingElem> gens = I.basis_elems();
    for (const RingElem& y : J.basis_elems()) gens.push_back(y);
    return Ideal::from_generators(I.ring(), gens);
}

Ideal ideal_join(const Ideal& I, const RingElem& x) {
    std::vector<RingElem> gens = I.basis_elems();
    gens.push_back(x);
    return Ideal::from_generators(I.ring(), gens);
}

Ideal ideal_conjugate(const Ideal& I) {
    if (I.ring().is_z() || I.is_zero()) return I;
    std::vector<RingElem> gens;
    for (const RingElem& x : I.basis_elems()) gens.push_back(x.conjugate());
    return Ideal::from_generators(I.ring(), gens);
}

Ideal ideal_quotient(const RingElem& x, const Ideal& I) {
    if (x.ring() != I.ring()) throw std::invalid_argument("ring mismatch");
    if (x.is_zero() || !I.contains(x))
        throw std::invalid_argument("quotient does not exist as stated");
    const RingDesc& ring = I.ring();
    if (ring.is_z()) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), x.a().get_mpz_t(), I.g().get_mpz_t());
        return Ideal::from_basis_z(ring, abs(q));
    }
    // (x) = I*J gives J = (x) * conj(I) / N(I), using I * conj(I) = (N(I)).
    Ideal K = ideal_product(Ideal::principal(x), ideal_conjugate(I));
    mpz_class n = I.norm();
    mpz_class jp, jq, jr;
    if (!mpz_divisible_p(K.p().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(K.q().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(K.r().get_mpz_t(), n.get_mpz_t()))
        throw std::logic_error("colon ideal scaling is not integral");
    mpz_divexact(jp.get_mpz_t(), K.p().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(jq.get_mpz_t(), K.q().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(jr.get_mpz_t(), K.r().get_mpz_t(), n.get_mpz_t());
    Ideal J = Ideal::from_basis_quadratic(ring, jp, jq, jr);
    if (ideal_product(I, J) != Ideal::principal(x))
        throw std::logic_error("quotient postcondition failed");
    return J;
}

std::vector<RingElem> residues(const Ideal& I, std::uint64_t cap) {
    mpz_class n = I.norm();
    if (n > cap) throw ResidueCapError("residue enumeration too large");
    std::vector<RingElem> out;
    out.reserve(n.get_ui());
    if (I.ring().is_z()) {
        for (mpz_class a = 0; a < I.g(); ++a) out.emplace_back(I.ring(), a);
        return out;
    }
    for (mpz_class b = 0; b < I.r(); ++b)
        for (mpz_class a = 0; a < I.p(); ++a) out.emplace_back(I.ring(), a, b);
    return out;
}

}  // namespace fixdiv
