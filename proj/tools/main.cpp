// Command-line front end.  Subcommands: fixdiv, selfridge, ruderman, check,
// search-tuples, search-b, bound, repro.  Exit codes: 0 complete, 1 malformed
// input, 2 cap-truncated search.

#include "fixdiv/fixdiv.hpp"
#include "fixdiv/json_io.hpp"
#include "fixdiv/search.hpp"
#include "fixdiv/selfridge.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace fixdiv;

// ---------------------------------------------------------------------------
// Polynomial mini-grammar: poly := term (('+'|'-') term)*
//   term  := coeff '*' xpart | xpart | coeff
//   xpart := 'x' ['^' nat]
//   coeff := '(' elem ')' | integer | ['int' '*'] 'w'
// Whitespace is insignificant.
// ---------------------------------------------------------------------------
struct PolyParser {
    const std::string& s;
    size_t i = 0;
    RingDesc ring;

    PolyParser(const std::string& text, RingDesc r) : s(text), ring(r) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    " in \"" + s + "\": " + what);
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    std::optional<mpz_class> try_integer() {
        skip_ws();
        size_t start = i;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (digits.empty()) {
            i = start;
            return std::nullopt;
        }
        return mpz_class(digits, 10);
    }

    std::uint64_t parse_exponent() {
        auto e = try_integer();
        if (!e) fail("expected exponent");
        if (!e->fits_ulong_p()) fail("exponent too large");
        return e->get_ui();
    }

    // coefficient in front of x (or a constant term); never consumes 'x'
    RingElem parse_coeff() {
        skip_ws();
        if (eat('(')) {
            size_t start = i;
            int depth = 1;
            while (i < s.size() && depth > 0) {
                if (s[i] == '(') ++depth;
                if (s[i] == ')') --depth;
                ++i;
            }
            if (depth != 0) fail("unbalanced parenthesis");
            return RingElem::parse(ring, s.substr(start, i - 1 - start));
        }
        auto mag = try_integer();
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            // could be int*w (a coefficient) or int*x (handled by caller);
            // peek past the '*'
            size_t save = i;
            ++i;
            skip_ws();
            if (i < s.size() && s[i] == 'w') {
                ++i;
                return RingElem(ring, 0, mag ? *mag : mpz_class(1));
            }
            i = save;
        }
        if (!mag) {
            if (i < s.size() && s[i] == 'w') {
                ++i;
                return RingElem(ring, 0, 1);
            }
            fail("expected coefficient");
        }
        return RingElem(ring, *mag);
    }

    ScalarPoly parse() {
        std::vector<ScalarTerm> terms;
        skip_ws();
        if (i >= s.size()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            int sign = 1;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            skip_ws();
            RingElem coeff(ring, 1);
            bool have_coeff = false;
            if (i < s.size() && s[i] != 'x') {
                coeff = parse_coeff();
                have_coeff = true;
            }
            std::uint64_t exp = 0;
            skip_ws();
            bool star = false;
            if (have_coeff && i < s.size() && s[i] == '*') {
                ++i;
                star = true;
                skip_ws();
            }
            if (i < s.size() && s[i] == 'x') {
                ++i;
                exp = 1;
                if (eat('^')) exp = parse_exponent();
            } else if (star) {
                fail("expected 'x' after '*'");
            } else if (!have_coeff) {
                fail("expected term");
            }
            if (sign < 0) coeff = -coeff;
            terms.push_back({exp, coeff});
        }
        if (terms.empty()) fail("empty polynomial");
        return ScalarPoly(ring, std::move(terms));
    }
};

ScalarPoly parse_poly(const std::string& text, RingDesc ring) {
    return PolyParser(text, ring).parse();
}

// ---------------------------------------------------------------------------
// Problem files
// ---------------------------------------------------------------------------
Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

struct Problem {
    RingDesc ring;
    int n = 1;
    std::vector<Mat> coeffs;
    std::optional<Mat> b;
    std::optional<std::vector<std::uint64_t>> exponents;
    std::uint64_t max_m = 10;
    long entry_box = 2;
    FixdivMode mode = FixdivMode::exact_mode();
    Caps caps;
};

Problem load_problem(const std::string& path, const Caps& default_caps) {
    Json j = load_json(path);
    Problem p;
    p.caps = default_caps;
    try {
        p.ring = ring_from_json(j.at("ring"));
        p.n = j.value("n", 1);
        if (p.n < 1) throw std::invalid_argument("n must be >= 1");
        if (!j.contains("coeffs") || !j.at("coeffs").is_array() || j.at("coeffs").empty())
            throw std::invalid_argument("problem needs a nonempty \"coeffs\" array");
        for (const Json& c : j.at("coeffs")) p.coeffs.push_back(mat_from_json(c, p.ring, p.n));
        if (j.contains("B")) p.b = mat_from_json(j.at("B"), p.ring, p.n);
        if (j.contains("exponents")) {
            std::vector<std::uint64_t> exps;
            for (const Json& e : j.at("exponents")) exps.push_back(e.get<std::uint64_t>());
            if (exps.size() != p.coeffs.size())
                throw std::invalid_argument("exponents and coeffs must have equal length");
            p.exponents = std::move(exps);
        }
        if (j.contains("max_m")) p.max_m = j.at("max_m").get<std::uint64_t>();
        if (j.contains("entry_box")) p.entry_box = j.at("entry_box").get<long>();
        if (j.contains("mode")) {
            const Json& m = j.at("mode");
            if (m.is_string() && m.get<std::string>() == "exact") {
                p.mode = FixdivMode::exact_mode();
            } else if (m.is_object()) {
                p.mode = FixdivMode::sampled(m.at("count").get<std::uint64_t>(),
                                             m.value("seed", std::uint64_t(0)));
            } else {
                throw std::invalid_argument("mode must be \"exact\" or {count, seed}");
            }
        }
        if (j.contains("caps")) {
            const Json& c = j.at("caps");
            if (c.contains("residues")) p.caps.residue_cap = c.at("residues").get<std::uint64_t>();
            if (c.contains("subsets")) p.caps.subset_cap = c.at("subsets").get<unsigned>();
        }
    } catch (const Json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return p;
}

MatrixPoly problem_poly(const Problem& p) {
    if (!p.exponents)
        throw std::invalid_argument("problem needs an \"exponents\" array for this subcommand");
    std::vector<MatrixTerm> terms;
    for (size_t i = 0; i < p.coeffs.size(); ++i) terms.push_back({(*p.exponents)[i], p.coeffs[i]});
    return MatrixPoly(p.ring, p.n, std::move(terms));
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------
bool g_json = false;

void emit(const Json& j, const std::string& table) {
    if (g_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table;
}

std::string pair_table(const PairReport& r) {
    std::ostringstream os;
    os << "base " << r.base.get_str() << ", window m <= " << r.window << ": " << r.pairs.size()
       << " pair(s)\n";
    for (const PairHit& hit : r.pairs)
        os << "  (" << hit.m << ", " << hit.n << ")  modulus=" << hit.witness.modulus.get_str()
           << "  value=" << hit.witness.value.get_str()
           << "  quotient=" << hit.witness.quotient.get_str() << "\n";
    return os.str();
}

std::string condition_table(const ConditionReport& r) {
    std::ostringstream os;
    os << "A.1 (entry ideal of B proper): " << (r.a1 ? "pass" : "fail") << "\n";
    os << "A.2 (spectral class " << to_string(r.spectral) << "): " << (r.a2 ? "pass" : "fail")
       << "\n";
    os << "B.1 (subset sums nonzero): " << (r.b1.ok ? "pass" : "fail");
    if (!r.b1.ok) {
        os << "  failing subsets:";
        for (const auto& sub : r.b1.failures) {
            os << " {";
            for (size_t t = 0; t < sub.size(); ++t) os << (t ? "," : "") << sub[t];
            os << "}";
        }
    }
    os << "\n";
    os << "B.2 (entry ideal contains fixed divisor): " << to_string(r.b2) << "\n";
    os << "  I_f(B) = " << r.f_of_b_entry_ideal.to_string() << "\n";
    os << "  fixdiv = " << r.fixdiv.ideal.to_string()
       << (r.fixdiv.certified ? " (certified)" : " (lower bound)") << "\n";
    return os.str();
}

std::string search_table(const SearchReport& r) {
    std::ostringstream os;
    os << "window m <= " << r.window << ": " << r.hits.size() << " hit(s), " << r.truncated.size()
       << " truncated tuple(s)\n";
    for (const TupleHit& hit : r.hits) {
        os << "  tuple (";
        for (size_t i = 0; i < hit.tuple.size(); ++i) os << (i ? ", " : "") << hit.tuple[i];
        os << ")  I_f(B)=" << hit.report.f_of_b_entry_ideal.to_string()
           << "  fixdiv=" << hit.report.fixdiv.ideal.to_string() << "\n";
    }
    return os.str();
}

int exit_code_for(const SearchReport& r) { return r.truncated.empty() ? 0 : 2; }

// ---------------------------------------------------------------------------

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::strtoull(v, nullptr, 10);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fixed divisors and certified divisibility searches"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    app.add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    unsigned workers = 1;
    app.add_option("--workers", workers, "worker threads for pair and box searches");

    Caps caps;
    caps.residue_cap = env_u64("FIXDIV_RESIDUE_CAP", kDefaultResidueCap);
    caps.subset_cap = static_cast<unsigned>(env_u64("FIXDIV_SUBSET_CAP", kDefaultSubsetCap));
    app.add_option("--residue-cap", caps.residue_cap, "residue enumeration cap");
    app.add_option("--subset-cap", caps.subset_cap, "subset explosion cap");

    // fixdiv
    auto* cmd_fixdiv = app.add_subcommand("fixdiv", "fixed divisor of a polynomial");
    std::string fd_ring = "Z", fd_poly, fd_input;
    int fd_n = 0;
    std::string fd_mode = "exact";
    std::uint64_t fd_samples = env_u64("FIXDIV_SAMPLES", 10000);
    std::uint64_t fd_seed = 0;
    cmd_fixdiv->add_option("--ring", fd_ring, "Z or Q(sqrt(-d))");
    cmd_fixdiv->add_option("--poly", fd_poly, "polynomial, e.g. \"x^5 - x\"");
    cmd_fixdiv->add_option("--input", fd_input, "polynomial JSON file");
    cmd_fixdiv->add_option("--n", fd_n, "matrix dimension (omit for the scalar fixed divisor)");
    cmd_fixdiv->add_option("--mode", fd_mode, "exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    cmd_fixdiv->add_option("--samples", fd_samples, "sample count for sampled mode");
    cmd_fixdiv->add_option("--seed", fd_seed, "seed for sampled mode");

    // selfridge
    auto* cmd_sel = app.add_subcommand("selfridge", "pairs (m, n) with b^m - b^n dividing the fixed divisor of x^m - x^n");
    std::uint64_t sel_max = 16;
    std::string sel_base = "2";
    cmd_sel->add_option("--max-m", sel_max, "search window")->required();
    cmd_sel->add_option("--base", sel_base, "base b (default 2)");

    // ruderman
    auto* cmd_rud = app.add_subcommand("ruderman", "pairs m > n > 0 with 2^m - 2^n dividing 3^m - 3^n");
    std::uint64_t rud_max = 16;
    cmd_rud->add_option("--max-m", rud_max, "search window")->required();

    // check
    auto* cmd_check = app.add_subcommand("check", "check A.1/A.2/B.1/B.2 for f, B from a problem file");
    std::string check_input;
    cmd_check->add_option("--input", check_input, "problem JSON file")->required();

    // search-tuples
    auto* cmd_st = app.add_subcommand("search-tuples", "scan exponent tuples for a fixed B");
    std::string st_input;
    std::uint64_t st_max = 0;
    cmd_st->add_option("--input", st_input, "problem JSON file")->required();
    cmd_st->add_option("--max-m", st_max, "override the problem window");

    // search-b
    auto* cmd_sb = app.add_subcommand("search-b", "enumerate candidate B inside an entry box");
    std::string sb_input;
    long sb_box = -1;
    std::uint64_t sb_max = 0;
    cmd_sb->add_option("--input", sb_input, "problem JSON file")->required();
    cmd_sb->add_option("--entry-box", sb_box, "override the problem entry box");
    cmd_sb->add_option("--max-m", sb_max, "override the problem window");

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "norm cutoff for candidate B");
    std::string bound_input, bound_coeffs, bound_ring = "Z";
    cmd_bound->add_option("--input", bound_input, "problem JSON file");
    cmd_bound->add_option("--coeffs", bound_coeffs, "inline 1x1 coefficients, e.g. \"1,-1\"");
    cmd_bound->add_option("--ring", bound_ring, "ring for --coeffs");

    // repro
    auto* cmd_repro = app.add_subcommand("repro", "canned reproduction of the headline results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    g_json = format == "json";

    try {
        if (*cmd_fixdiv) {
            if (fd_poly.empty() == fd_input.empty())
                throw std::invalid_argument("fixdiv needs exactly one of --poly or --input");
            FixdivMode mode = fd_mode == "sampled" ? FixdivMode::sampled(fd_samples, fd_seed)
                                                   : FixdivMode::exact_mode();
            if (!fd_input.empty()) {
                Json j = load_json(fd_input);
                if (j.contains("n") && j.at("n").get<int>() > 0 && j.at("terms").size() > 0 &&
                    j.at("terms")[0].at("coeff").is_object()) {
                    MatrixPoly f = matrix_poly_from_json(j);
                    MatrixFixdiv d = fixdiv_matrix(f, mode, caps.residue_cap);
                    emit(to_json(d), "fixdiv = " + d.ideal.to_string() +
                                         (d.certified ? " (certified)\n" : " (lower bound)\n"));
                    return 0;
                }
                ScalarPoly g = scalar_poly_from_json(j);
                if (g.ring().is_z() && fd_n == 0) {
                    mpz_class d = fixdiv_int(g, kDefaultDenseCutoff, caps.residue_cap);
                    emit(Json{{"fixdiv", d.get_str()}}, d.get_str() + "\n");
                    return 0;
                }
                Ideal d = fixdiv_ring(g, caps.residue_cap);
                emit(to_json(d), d.to_string() + "\n");
                return 0;
            }
            RingDesc ring = RingDesc::parse(fd_ring);
            ScalarPoly g = parse_poly(fd_poly, ring);
            if (fd_n > 0) {
                // scalar coefficients lifted to c * identity
                std::vector<MatrixTerm> terms;
                for (const ScalarTerm& t : g.terms())
                    terms.push_back({t.exp, Mat::scalar(ring, fd_n, t.coeff)});
                MatrixPoly f(ring, fd_n, std::move(terms));
                MatrixFixdiv d = fixdiv_matrix(f, mode, caps.residue_cap);
                emit(to_json(d), d.ideal.to_string() +
                                     (d.certified ? " (certified)\n" : " (lower bound)\n"));
                return 0;
            }
            if (ring.is_z()) {
                mpz_class d = fixdiv_int(g, kDefaultDenseCutoff, caps.residue_cap);
                emit(Json{{"fixdiv", d.get_str()}}, d.get_str() + "\n");
                return 0;
            }
            Ideal d = fixdiv_ring(g, caps.residue_cap);
            emit(to_json(d), d.to_string() + "\n");
            return 0;
        }

        if (*cmd_sel) {
            PairReport r = base_b_pairs(mpz_class(sel_base, 10), sel_max, workers);
            emit(to_json(r), pair_table(r));
            return 0;
        }

        if (*cmd_rud) {
            PairReport r = ruderman_pairs(rud_max, workers);
            emit(to_json(r), pair_table(r));
            return 0;
        }

        if (*cmd_check) {
            Problem p = load_problem(check_input, caps);
            if (!p.b) throw std::invalid_argument("check needs \"B\" in the problem file");
            MatrixPoly f = problem_poly(p);
            ConditionReport r = check_conditions(f, *p.b, p.mode, p.caps);
            emit(to_json(r), condition_table(r));
            return 0;
        }

        if (*cmd_st) {
            Problem p = load_problem(st_input, caps);
            if (!p.b) throw std::invalid_argument("search-tuples needs \"B\" in the problem file");
            if (st_max) p.max_m = st_max;
            SearchReport r = search_tuples(p.coeffs, *p.b, p.max_m, p.mode, p.caps);
            emit(to_json(r), search_table(r));
            return exit_code_for(r);
        }

        if (*cmd_sb) {
            Problem p = load_problem(sb_input, caps);
            if (sb_box >= 0) p.entry_box = sb_box;
            if (sb_max) p.max_m = sb_max;
            BSearchReport r = search_B(p.coeffs, p.max_m, p.entry_box, p.mode, p.caps, workers);
            std::ostringstream os;
            os << "bound T = " << r.bound.t_ceil.get_str() << " (T^2 = " << r.bound.t_sq.get_str()
               << "), box " << (r.box_covers_bound ? "covers" : "DOES NOT cover") << " it\n";
            os << "scanned " << r.stats.scanned << ", searched " << r.stats.searched << ", hits on "
               << r.hits.size() << " candidate(s)\n";
            for (const BHit& hit : r.hits) {
                os << "B = " << hit.b.to_string() << "\n" << search_table(hit.report);
            }
            emit(to_json(r), os.str());
            return r.truncated.empty() ? 0 : 2;
        }

        if (*cmd_bound) {
            std::vector<Mat> coeffs;
            if (!bound_input.empty()) {
                Problem p = load_problem(bound_input, caps);
                coeffs = p.coeffs;
            } else if (!bound_coeffs.empty()) {
                RingDesc ring = RingDesc::parse(bound_ring);
                std::stringstream ss(bound_coeffs);
                std::string item;
                while (std::getline(ss, item, ','))
                    coeffs.push_back(Mat::scalar(ring, 1, RingElem::parse(ring, item)));
            } else {
                throw std::invalid_argument("bound needs --input or --coeffs");
            }
            NormBound b = bound_B_norm(coeffs);
            emit(to_json(b),
                 "T = " + b.t_ceil.get_str() + "  (T^2 bound = " + b.t_sq.get_str() + ")\n");
            return 0;
        }

        if (*cmd_repro) {
            bool all_ok = true;
            std::ostringstream os;
            Json jout;

            const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected = {
                {1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {5, 3}, {6, 2},
                {7, 3}, {8, 2}, {8, 4}, {9, 3}, {14, 2}, {15, 3}, {16, 4}};
            PairReport sel = selfridge_pairs(16, workers);
            std::vector<std::pair<std::uint64_t, std::uint64_t>> got;
            for (const PairHit& h : sel.pairs) got.push_back({h.m, h.n});
            std::sort(got.begin(), got.end());
            auto sorted_expected = expected;
            std::sort(sorted_expected.begin(), sorted_expected.end());
            bool ok1 = got == sorted_expected;
            all_ok &= ok1;
            os << "fourteen pairs, window 16: " << (ok1 ? "ok" : "FAIL") << "\n";
            jout["fourteen_pairs"] = ok1;

            bool ok2 = true;
            for (long b = 3; b <= 6; ++b)
                ok2 &= base_b_pairs(b, 30, workers).pairs.empty();
            all_ok &= ok2;
            os << "base 3..6 empty, window 30: " << (ok2 ? "ok" : "FAIL") << "\n";
            jout["base_3_to_6_empty"] = ok2;

            RingDesc z = RingDesc::integers();
            std::vector<Mat> cs = {Mat::scalar(z, 1, RingElem(z, 1)),
                                   Mat::scalar(z, 1, RingElem(z, -1))};
            Mat b2 = Mat::scalar(z, 1, RingElem(z, 2));
            SearchReport st = search_tuples(cs, b2, 16, FixdivMode::exact_mode(), caps);
            std::vector<std::pair<std::uint64_t, std::uint64_t>> collapsed;
            for (const TupleHit& h : st.hits) {
                auto mx = std::max(h.tuple[0], h.tuple[1]);
                auto mn = std::min(h.tuple[0], h.tuple[1]);
                collapsed.push_back({mx, mn});
            }
            std::sort(collapsed.begin(), collapsed.end());
            collapsed.erase(std::unique(collapsed.begin(), collapsed.end()), collapsed.end());
            bool ok3 = collapsed == sorted_expected;
            all_ok &= ok3;
            os << "1x1 tuple search agrees with the pair search, window 16: "
               << (ok3 ? "ok" : "FAIL") << "\n";
            jout["dimension_one_collapse"] = ok3;

            emit(jout, os.str());
            return all_ok ? 0 : 1;
        }
    } catch (const FixdivCapError& e) {
        std::cerr << "capped: " << e.what() << "\n";
        return 2;
    } catch (const ResidueCapError& e) {
        std::cerr << "capped: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
