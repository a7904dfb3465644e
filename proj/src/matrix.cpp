#include "fixdiv/matrix.hpp"

#include <sstream>

namespace fixdiv {

Mat::Mat(RingDesc ring, int n) : n_(n), ring_(ring) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    e_.assign(static_cast<size_t>(n) * n, RingElem(ring));
}

Mat Mat::identity(RingDesc ring, int n) {
    Mat m(ring, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RingElem(ring, 1);
    return m;
}

Mat Mat::unit(RingDesc ring, int n, int i, int j) {
    Mat m(ring, n);
    m.at(i, j) = RingElem(ring, 1);
    return m;
}

Mat Mat::scalar(RingDesc ring, int n, const RingElem& c) {
    Mat m(ring, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

bool Mat::is_zero() const {
    for (const RingElem& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

void Mat::check_compatible(const Mat& y) const {
    if (n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
    if (ring_ != y.ring_) throw std::invalid_argument("ring mismatch");
}

Mat Mat::operator+(const Mat& y) const {
    check_compatible(y);
    Mat out(ring_, n_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + y.e_[i];
    return out;
}

Mat Mat::operator-(const Mat& y) const {
    check_compatible(y);
    Mat out(ring_, n_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - y.e_[i];
    return out;
}

Mat Mat::operator-() const {
    Mat out(ring_, n_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
    return out;
}

Mat Mat::operator*(const Mat& y) const {
    check_compatible(y);
    Mat out(ring_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const RingElem& xik = at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < n_; ++j) out.at(i, j) = out.at(i, j) + xik * y.at(k, j);
        }
    return out;
}

Mat Mat::operator*(const RingElem& c) const {
    Mat out(ring_, n_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
    return out;
}

bool Mat::operator==(const Mat& y) const {
    return n_ == y.n_ && ring_ == y.ring_ && e_ == y.e_;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat mat_pow(const Mat& x, std::uint64_t m) {
    Mat result = Mat::identity(x.ring(), x.n());
    Mat base = x;
    while (m > 0) {
        if (m & 1) result = result * base;
        m >>= 1;
        if (m) base = base * base;
    }
    return result;
}

Mat conj_transpose(const Mat& m) {
    Mat out(m.ring(), m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out.at(i, j) = m.at(j, i).conjugate();
    return out;
}

mpz_class frob_norm_sq(const Mat& m) {
    // sum of squared entry moduli: x * conj(x), which over Z is a^2 (the
    // element norm |a| is not the squared modulus there)
    mpz_class s = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            const RingElem& x = m.at(i, j);
            s += x.ring().is_z() ? mpz_class(x.a() * x.a()) : x.norm();
        }
    return s;
}

RingElem det(const Mat& m) {
    const int n = m.n();
    const RingDesc ring = m.ring();
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);

    // Bareiss fraction-free elimination; every division is exact in the ring.
    Mat a = m;
    RingElem prev(ring, 1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return RingElem(ring);  // column is zero below: singular
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                RingElem num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num.divexact(prev);
            }
        prev = a.at(k, k);
    }
    RingElem d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

Ideal entry_ideal(const Mat& m) {
    std::vector<RingElem> gens;
    gens.reserve(static_cast<size_t>(m.n()) * m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) gens.push_back(m.at(i, j));
    return Ideal::from_generators(m.ring(), gens);
}

const char* to_string(SpectralClass c) {
    switch (c) {
        case SpectralClass::Singular: return "singular";
        case SpectralClass::AllAboveOne: return "all-above-one";
        case SpectralClass::AllBelowOne: return "all-below-one";
        case SpectralClass::Boundary: return "boundary";
        case SpectralClass::Mixed: return "mixed";
    }
    return "?";
}

namespace {

// Leading principal minor of order k (1-based), as a rational integer.
// The argument must be Hermitian; its minors then have zero w-coordinate.
mpz_class leading_minor(const Mat& h, int k) {
    Mat sub(h.ring(), k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = h.at(i, j);
    RingElem d = det(sub);
    if (d.b() != 0) throw std::logic_error("Hermitian minor has a w-coordinate");
    return d.a();
}

bool positive_definite(const Mat& h) {
    for (int k = 1; k <= h.n(); ++k)
        if (leading_minor(h, k) <= 0) return false;
    return true;
}

}  // namespace

SpectralClass spectral_class(const Mat& b) {
    if (det(b).is_zero()) return SpectralClass::Singular;
    Mat h = conj_transpose(b) * b;
    Mat id = Mat::identity(b.ring(), b.n());
    Mat above = h - id;
    if (positive_definite(above)) return SpectralClass::AllAboveOne;
    if (positive_definite(id - h)) return SpectralClass::AllBelowOne;
    if (leading_minor(above, b.n()) == 0) return SpectralClass::Boundary;
    return SpectralClass::Mixed;
}

}  // namespace fixdiv
