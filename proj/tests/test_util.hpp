#pragma once

#include "fixdiv/ideal.hpp"
#include "fixdiv/matrix.hpp"
#include "fixdiv/poly.hpp"
#include "fixdiv/ring.hpp"
#include "fixdiv/rng.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace testutil {

using namespace fixdiv;

inline RingDesc zz() { return RingDesc::integers(); }
inline RingDesc gauss() { return RingDesc::imaginary_quadratic(1); }
inline RingDesc ring_d(unsigned long d) { return RingDesc::imaginary_quadratic(d); }

inline RingElem elem(RingDesc ring, long a, long b = 0) {
    return RingElem(ring, mpz_class(a), mpz_class(b));
}

inline RingElem random_elem(SplitMix64& rng, RingDesc ring, long box) {
    long a = rng.range(-box, box);
    long b = ring.is_z() ? 0 : rng.range(-box, box);
    return elem(ring, a, b);
}

inline RingElem random_nonzero_elem(SplitMix64& rng, RingDesc ring, long box) {
    for (;;) {
        RingElem x = random_elem(rng, ring, box);
        if (!x.is_zero()) return x;
    }
}

inline Mat random_mat(SplitMix64& rng, RingDesc ring, int n, long box) {
    Mat m(ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_elem(rng, ring, box);
    return m;
}

inline Ideal random_nonzero_ideal(SplitMix64& rng, RingDesc ring, long box) {
    for (;;) {
        std::vector<RingElem> gens = {random_elem(rng, ring, box), random_elem(rng, ring, box)};
        Ideal I = Ideal::from_generators(ring, gens);
        if (!I.is_zero()) return I;
    }
}

// Random member of I: a small integer combination of the basis.
inline RingElem random_member(SplitMix64& rng, const Ideal& I, long box) {
    RingElem acc(I.ring());
    for (const RingElem& e : I.basis_elems()) acc = acc + e * random_elem(rng, I.ring(), box);
    return acc;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(FIXDIV_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace testutil
