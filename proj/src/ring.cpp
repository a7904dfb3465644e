#include "fixdiv/ring.hpp"

#include <cctype>
#include <utility>

namespace fixdiv {

RingDesc RingDesc::imaginary_quadratic(unsigned long d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (d > 1000000000UL) throw std::invalid_argument("d too large");
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) throw std::invalid_argument("d must be squarefree");
    }
    RingDesc r;
    r.kind_ = RingKind::ImaginaryQuadratic;
    r.d_ = d;
    return r;
}

std::string RingDesc::to_string() const {
    if (is_z()) return "Z";
    return "Q(sqrt(-" + std::to_string(d_) + "))";
}

RingDesc RingDesc::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "Z" || t == "ZZ") return integers();
    // Accept Q(sqrt(-d)) and the shorthand sqrt(-d).
    auto take = [&](const std::string& prefix) -> bool {
        if (t.rfind(prefix, 0) == 0) {
            t = t.substr(prefix.size());
            return true;
        }
        return false;
    };
    bool wrapped = take("Q(sqrt(-") || take("sqrt(-");
    if (!wrapped) throw std::invalid_argument("unrecognized ring: " + s);
    size_t pos = 0;
    unsigned long d = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
        d = d * 10 + static_cast<unsigned long>(t[pos] - '0');
        ++pos;
    }
    if (pos == 0) throw std::invalid_argument("unrecognized ring: " + s);
    std::string rest = t.substr(pos);
    if (rest != ")" && rest != "))") throw std::invalid_argument("unrecognized ring: " + s);
    return imaginary_quadratic(d);
}

RingElem::RingElem(RingDesc ring, mpz_class a, mpz_class b)
    : a_(std::move(a)), b_(std::move(b)), ring_(ring) {
    if (ring_.is_z() && b_ != 0)
        throw std::invalid_argument("Z has no w-coordinate");
}

RingElem RingElem::omega(RingDesc ring) {
    if (ring.is_z()) throw std::invalid_argument("Z has no w-coordinate");
    return RingElem(ring, 0, 1);
}

RingElem RingElem::operator+(const RingElem& y) const {
    check_same_ring(y);
    return RingElem(ring_, a_ + y.a_, b_ + y.b_);
}

RingElem RingElem::operator-(const RingElem& y) const {
    check_same_ring(y);
    return RingElem(ring_, a_ - y.a_, b_ - y.b_);
}

RingElem RingElem::operator*(const RingElem& y) const {
    check_same_ring(y);
    if (ring_.is_z()) return RingElem(ring_, a_ * y.a_);
    // (a1 + b1 w)(a2 + b2 w) with w^2 = w - (1+d)/4 or w^2 = -d.
    mpz_class cross = a_ * y.b_ + b_ * y.a_;
    mpz_class bb = b_ * y.b_;
    if (ring_.half_basis()) {
        mpz_class c = mpz_class(ring_.d() + 1) / 4;
        return RingElem(ring_, a_ * y.a_ - c * bb, cross + bb);
    }
    return RingElem(ring_, a_ * y.a_ - mpz_class(ring_.d()) * bb, cross);
}

RingElem RingElem::conjugate() const {
    if (ring_.is_z()) return *this;
    if (ring_.half_basis()) return RingElem(ring_, a_ + b_, -b_);
    return RingElem(ring_, a_, -b_);
}

mpz_class RingElem::norm() const {
    if (ring_.is_z()) return abs(a_);
    if (ring_.half_basis()) {
        mpz_class c = mpz_class(ring_.d() + 1) / 4;
        return a_ * a_ + a_ * b_ + c * b_ * b_;
    }
    return a_ * a_ + mpz_class(ring_.d()) * b_ * b_;
}

RingElem RingElem::divexact(const RingElem& y) const {
    check_same_ring(y);
    if (y.is_zero()) throw std::invalid_argument("division by zero");
    if (ring_.is_z()) {
        if (!mpz_divisible_p(a_.get_mpz_t(), y.a_.get_mpz_t()))
            throw std::invalid_argument("inexact division");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a_.get_mpz_t(), y.a_.get_mpz_t());
        return RingElem(ring_, q);
    }
    RingElem t = *this * y.conjugate();
    mpz_class n = y.norm();
    if (!mpz_divisible_p(t.a_.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(t.b_.get_mpz_t(), n.get_mpz_t()))
        throw std::invalid_argument("inexact division");
    mpz_class qa, qb;
    mpz_divexact(qa.get_mpz_t(), t.a_.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qb.get_mpz_t(), t.b_.get_mpz_t(), n.get_mpz_t());
    return RingElem(ring_, qa, qb);
}

std::string RingElem::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string bw = mpz_class(abs(b_)).get_str() + "*w";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + bw;
    return a_.get_str() + (b_ < 0 ? "-" : "+") + bw;
}

namespace {

// Grammar: elem := term (('+'|'-') term)* ; term := int | [int '*'] 'w'.
// Whitespace is ignored.
struct ElemParser {
    const std::string& s;
    size_t i = 0;

    explicit ElemParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(i) +
                                    " in \"" + s + "\": " + what);
    }

    bool parse_int(mpz_class& out) {
        skip_ws();
        size_t start = i;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i];
            ++i;
        }
        if (digits.empty()) {
            i = start;
            return false;
        }
        out = mpz_class(digits, 10);
        return true;
    }

    // Parses one signed term into (coeff-of-1, coeff-of-w).
    void parse_term(mpz_class& a, mpz_class& b, int sign) {
        skip_ws();
        mpz_class mag;
        bool have_int = parse_int(mag);
        skip_ws();
        bool is_w = false;
        if (have_int) {
            if (i < s.size() && s[i] == '*') {
                size_t save = i;
                ++i;
                skip_ws();
                if (i < s.size() && s[i] == 'w') {
                    ++i;
                    is_w = true;
                } else {
                    i = save;
                    fail("expected 'w' after '*'");
                }
            }
        } else if (i < s.size() && s[i] == 'w') {
            ++i;
            mag = 1;
            is_w = true;
        } else {
            fail("expected integer or 'w'");
        }
        if (is_w)
            b += sign * mag;
        else
            a += sign * mag;
    }
};

}  // namespace

RingElem RingElem::parse(RingDesc ring, const std::string& text) {
    ElemParser p(text);
    mpz_class a = 0, b = 0;
    int sign = 1;
    p.skip_ws();
    if (p.i < p.s.size() && (p.s[p.i] == '+' || p.s[p.i] == '-')) {
        sign = p.s[p.i] == '-' ? -1 : 1;
        ++p.i;
    }
    p.parse_term(a, b, sign);
    p.skip_ws();
    while (p.i < p.s.size()) {
        char c = p.s[p.i];
        if (c != '+' && c != '-') p.fail("expected '+' or '-'");
        ++p.i;
        p.parse_term(a, b, c == '-' ? -1 : 1);
        p.skip_ws();
    }
    if (ring.is_z() && b != 0)
        throw std::invalid_argument("element \"" + text + "\" has a w-coordinate but the ring is Z");
    return RingElem(ring, a, b);
}

}  // namespace fixdiv
