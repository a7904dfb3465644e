#include "fixdiv/json_io.hpp"

namespace fixdiv {

namespace {

std::uint64_t exp_from_json(const Json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>(), 10).get_ui();
    return j.get<std::uint64_t>();
}

}  // namespace

Json to_json(const RingDesc& ring) { return ring.to_string(); }

RingDesc ring_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("ring must be a string");
    return RingDesc::parse(j.get<std::string>());
}

Json to_json(const Ideal& ideal) {
    Json j;
    j["ring"] = to_json(ideal.ring());
    if (ideal.is_zero()) {
        j["zero"] = true;
        return j;
    }
    if (ideal.ring().is_z()) {
        j["g"] = ideal.g().get_str();
        return j;
    }
    j["basis"] = Json::array({Json::array({ideal.p().get_str(), ideal.q().get_str()}),
                              Json::array({"0", ideal.r().get_str()})});
    return j;
}

Ideal ideal_from_json(const Json& j) {
    RingDesc ring = ring_from_json(j.at("ring"));
    if (j.contains("zero") && j.at("zero").get<bool>()) return Ideal::zero(ring);
    if (j.contains("g")) return Ideal::from_basis_z(ring, mpz_class(j.at("g").get<std::string>(), 10));
    const Json& basis = j.at("basis");
    if (!basis.is_array() || basis.size() != 2 || basis[0].size() != 2 || basis[1].size() != 2)
        throw std::invalid_argument("ideal basis must be a 2x2 matrix");
    if (mpz_class(basis[1][0].get<std::string>(), 10) != 0)
        throw std::invalid_argument("ideal basis must be upper triangular");
    return Ideal::from_basis_quadratic(ring, mpz_class(basis[0][0].get<std::string>(), 10),
                                       mpz_class(basis[0][1].get<std::string>(), 10),
                                       mpz_class(basis[1][1].get<std::string>(), 10));
}

Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    Json j;
    j["n"] = m.n();
    j["ring"] = to_json(m.ring());
    j["rows"] = std::move(rows);
    return j;
}

Mat mat_from_json(const Json& j, RingDesc ring, int n) {
    const Json& rows = j.is_object() ? j.at("rows") : j;
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix needs " + std::to_string(n) + " rows");
    Mat m(ring, n);
    for (int i = 0; i < n; ++i) {
        const Json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix row " + std::to_string(i) + " needs " +
                                        std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c)
            m.at(i, c) = RingElem::parse(ring, row[static_cast<size_t>(c)].get<std::string>());
    }
    return m;
}

Mat mat_from_json(const Json& j) {
    RingDesc ring = ring_from_json(j.at("ring"));
    int n = j.at("n").get<int>();
    return mat_from_json(j, ring, n);
}

Json to_json(const ScalarPoly& g) {
    Json terms = Json::array();
    for (const ScalarTerm& t : g.terms()) {
        Json term;
        term["exp"] = t.exp;
        term["coeff"] = t.coeff.to_string();
        terms.push_back(std::move(term));
    }
    Json j;
    j["ring"] = to_json(g.ring());
    j["terms"] = std::move(terms);
    return j;
}

ScalarPoly scalar_poly_from_json(const Json& j) {
    RingDesc ring = ring_from_json(j.at("ring"));
    std::vector<ScalarTerm> terms;
    for (const Json& t : j.at("terms"))
        terms.push_back({exp_from_json(t.at("exp")),
                         RingElem::parse(ring, t.at("coeff").get<std::string>())});
    return ScalarPoly(ring, std::move(terms));
}

Json to_json(const MatrixPoly& f) {
    Json terms = Json::array();
    for (const MatrixTerm& t : f.terms()) {
        Json term;
        term["exp"] = t.exp;
        term["coeff"] = to_json(t.coeff);
        terms.push_back(std::move(term));
    }
    Json j;
    j["ring"] = to_json(f.ring());
    j["n"] = f.n();
    j["terms"] = std::move(terms);
    return j;
}

MatrixPoly matrix_poly_from_json(const Json& j) {
    RingDesc ring = ring_from_json(j.at("ring"));
    int n = j.at("n").get<int>();
    std::vector<MatrixTerm> terms;
    for (const Json& t : j.at("terms"))
        terms.push_back({exp_from_json(t.at("exp")), mat_from_json(t.at("coeff"), ring, n)});
    return MatrixPoly(ring, n, std::move(terms));
}

Json to_json(const PairReport& r) {
    Json pairs = Json::array();
    for (const PairHit& hit : r.pairs) {
        Json p;
        p["m"] = hit.m;
        p["n"] = hit.n;
        p["modulus"] = hit.witness.modulus.get_str();
        p["value"] = hit.witness.value.get_str();
        p["quotient"] = hit.witness.quotient.get_str();
        pairs.push_back(std::move(p));
    }
    Json j;
    j["base"] = r.base.get_str();
    j["window"] = r.window;
    j["pairs"] = std::move(pairs);
    return j;
}

Json to_json(const MatrixFixdiv& r) {
    Json j;
    j["ideal"] = to_json(r.ideal);
    j["certified"] = r.certified;
    j["flag"] = r.certified ? "certified" : "lower_bound";
    return j;
}

Json to_json(const ConditionReport& r) {
    Json j;
    j["a1"] = r.a1;
    j["a2"] = r.a2;
    j["spectral"] = to_string(r.spectral);
    Json b1;
    b1["ok"] = r.b1.ok;
    b1["failures"] = r.b1.failures;
    j["b1"] = std::move(b1);
    j["b2"] = to_string(r.b2);
    j["f_of_b_entry_ideal"] = to_json(r.f_of_b_entry_ideal);
    j["fixdiv"] = to_json(r.fixdiv);
    return j;
}

Json to_json(const SearchReport& r) {
    Json hits = Json::array();
    for (const TupleHit& hit : r.hits) {
        Json h;
        h["tuple"] = hit.tuple;
        h["report"] = to_json(hit.report);
        h["bound2_hypothesis_held"] = hit.bound2_hypothesis_held;
        h["bound2_lower_bound_held"] = hit.bound2_lower_bound_held;
        h["vandermonde_nonzero"] = hit.vandermonde_nonzero;
        hits.push_back(std::move(h));
    }
    Json growth = Json::array();
    for (const GrowthRow& row : r.growth) {
        Json g;
        g["m"] = row.m;
        g["min_norm_sq"] = row.min_norm_sq.get_str();
        growth.push_back(std::move(g));
    }
    Json j;
    j["window"] = r.window;
    j["hits"] = std::move(hits);
    j["growth"] = std::move(growth);
    j["truncated"] = r.truncated;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const NormBound& b) {
    Json j;
    j["t_sq"] = b.t_sq.get_str();
    j["t_ceil"] = b.t_ceil.get_str();
    return j;
}

Json to_json(const BSearchReport& r) {
    Json j;
    j["bound"] = to_json(r.bound);
    j["box_covers_bound"] = r.box_covers_bound;
    Json stats;
    stats["scanned"] = r.stats.scanned;
    stats["skipped_zero"] = r.stats.skipped_zero;
    stats["skipped_norm"] = r.stats.skipped_norm;
    stats["skipped_a1"] = r.stats.skipped_a1;
    stats["skipped_a2"] = r.stats.skipped_a2;
    stats["searched"] = r.stats.searched;
    j["stats"] = std::move(stats);
    Json hits = Json::array();
    for (const BHit& hit : r.hits) {
        Json h;
        h["B"] = to_json(hit.b);
        h["report"] = to_json(hit.report);
        hits.push_back(std::move(h));
    }
    j["hits"] = std::move(hits);
    j["truncated"] = r.truncated;
    j["notes"] = r.notes;
    return j;
}

}  // namespace fixdiv
