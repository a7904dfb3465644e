#include "fixdiv/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fixdiv {

ScalarPoly::ScalarPoly(RingDesc ring, std::vector<ScalarTerm> terms) : ring_(ring) {
    std::map<std::uint64_t, RingElem> merged;
    for (ScalarTerm& t : terms) {
        if (t.coeff.ring() != ring) throw std::invalid_argument("ring mismatch");
        auto [it, fresh] = merged.emplace(t.exp, t.coeff);
        if (!fresh) it->second = it->second + t.coeff;
    }
    for (auto& [exp, coeff] : merged)
        if (!coeff.is_zero()) terms_.push_back({exp, coeff});
}

bool ScalarPoly::operator==(const ScalarPoly& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

std::string ScalarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (it != terms_.rbegin()) os << " + ";
        os << "(" << it->coeff.to_string() << ")";
        if (it->exp == 1)
            os << "*x";
        else if (it->exp > 1)
            os << "*x^" << it->exp;
    }
    return os.str();
}

MatrixPoly::MatrixPoly(RingDesc ring, int n, std::vector<MatrixTerm> terms) : ring_(ring), n_(n) {
    std::map<std::uint64_t, Mat> merged;
    for (MatrixTerm& t : terms) {
        if (t.coeff.ring() != ring) throw std::invalid_argument("ring mismatch");
        if (t.coeff.n() != n) throw std::invalid_argument("matrix dimension mismatch");
        auto [it, fresh] = merged.emplace(t.exp, t.coeff);
        if (!fresh) it->second = it->second + t.coeff;
    }
    for (auto& [exp, coeff] : merged)
        if (!coeff.is_zero()) terms_.push_back({exp, coeff});
}

namespace {

RingElem elem_pow(const RingElem& x, std::uint64_t m) {
    RingElem result(x.ring(), 1);
    RingElem base = x;
    while (m > 0) {
        if (m & 1) result = result * base;
        m >>= 1;
        if (m) base = base * base;
    }
    return result;
}

}  // namespace

RingElem eval(const ScalarPoly& g, const RingElem& x) {
    if (x.ring() != g.ring()) throw std::invalid_argument("ring mismatch");
    RingElem acc(g.ring());
    RingElem power(g.ring(), 1);
    std::uint64_t have = 0;
    for (const ScalarTerm& t : g.terms()) {
        power = power * elem_pow(x, t.exp - have);
        have = t.exp;
        acc = acc + t.coeff * power;
    }
    return acc;
}

Mat eval(const MatrixPoly& f, const Mat& c) {
    if (c.ring() != f.ring()) throw std::invalid_argument("ring mismatch");
    if (c.n() != f.n()) throw std::invalid_argument("matrix dimension mismatch");
    Mat acc(f.ring(), f.n());
    Mat power = Mat::identity(f.ring(), f.n());
    std::uint64_t have = 0;
    for (const MatrixTerm& t : f.terms()) {
        power = power * mat_pow(c, t.exp - have);
        have = t.exp;
        acc = acc + t.coeff * power;
    }
    return acc;
}

ScalarPoly entry_poly(const MatrixPoly& f, int i, int j) {
    if (i < 0 || j < 0 || i >= f.n() || j >= f.n())
        throw std::out_of_range("entry index out of range");
    std::vector<ScalarTerm> terms;
    for (const MatrixTerm& t : f.terms()) terms.push_back({t.exp, t.coeff.at(i, j)});
    return ScalarPoly(f.ring(), std::move(terms));
}

}  // namespace fixdiv
