#include "csdiv/fillings.hpp"

#include "csdiv/lattice.hpp"

#include <algorithm>

namespace csd {

bool FillingHomology::identities_hold() const {
    return b2 == b_plus + b_minus + b_zero && euler == 1 - b1 + b2 - b3 && sigma == b_plus - b_minus;
}

FillingHomology minimal_filling_homology(const Divisor& d, const FillabilityVerdict& f) {
    if (f.status != FillStatus::Fillable) throw Error(ErrorKind::NotFillable, to_string(d) + " is not fillable");
    const Signature sg = signature(d);
    const Int q = charge(d);
    const Int bz(static_cast<unsigned long>(sg.b_zero));
    FillingHomology h;
    h.b_plus = 0;
    h.b3 = 0;
    h.b_zero = 1;
    h.b1 = bz;  // b1(Y_D) - 1
    h.b_minus = q - 2 + bz;
    h.b2 = 1 + h.b_minus;
    h.euler = q;
    h.sigma = 2 - q - bz;
    h.c1_zero = true;
    return h;
}

CapInvariants cap_invariants(const Divisor& d, const Int& ambient_b2) {
    const Signature sg = signature(d);
    const Int q = charge(d);
    CapInvariants c;
    c.euler = q;
    c.sigma = 4 - q - 2 * Int(static_cast<unsigned long>(sg.b_plus)) - Int(static_cast<unsigned long>(sg.b_zero));
    if (sg.b_zero == 0) {
        c.b2 = ambient_b2 + 1 - Int(static_cast<unsigned long>(d.length()));
        c.b1 = 0;
        c.b0 = 1;
    }
    return c;
}

std::vector<long> dual_cusp_word(const std::vector<long>& c) {
    if (c.empty()) throw Error(ErrorKind::NotCuspShape, "empty cycle");
    const std::size_t n = c.size();
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] > -2) throw Error(ErrorKind::NotCuspShape, "entry " + std::to_string(c[i]) + " above -2");
        if (c[i] <= -3 && start == n) start = i;
    }
    if (start == n) throw Error(ErrorKind::NotCuspShape, "cycle consists of -2 entries");
    // blocks (-a_i, -2 x b_i) starting at an entry <= -3; scratch reused across calls
    thread_local std::vector<long> a, b, out;
    a.clear();
    b.clear();
    out.clear();
    for (std::size_t j = 0; j < n; ++j) {
        const long x = c[(start + j) % n];
        if (x <= -3) {
            a.push_back(-x);
            b.push_back(0);
        } else {
            ++b.back();
        }
    }
    const std::size_t k = a.size();
    // each -2 run pairs with the block that follows it
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(-(b[i] + 3));
        out.insert(out.end(), static_cast<std::size_t>(a[(i + 1) % k] - 3), -2L);
    }
    // smallest rotation
    const std::size_t m = out.size();
    std::size_t best = 0;
    for (std::size_t o = 1; o < m; ++o)
        for (std::size_t j = 0; j < m; ++j) {
            const long x = out[(o + j) % m], y = out[(best + j) % m];
            if (x != y) {
                if (x < y) best = o;
                break;
            }
        }
    std::vector<long> r(m);
    for (std::size_t j = 0; j < m; ++j) r[j] = out[(best + j) % m];
    return r;
}

CuspCycle dual_cusp(const IntVec& c) {
    std::vector<long> w;
    w.reserve(c.size());
    for (const Int& x : c) {
        if (x > -2) throw Error(ErrorKind::NotCuspShape, to_string(c) + " has an entry above -2");
        w.push_back(to_long(x));
    }
    if (std::all_of(w.begin(), w.end(), [](long x) { return x == -2; }))
        throw Error(ErrorKind::NotCuspShape, to_string(c) + " consists of -2 entries");
    const std::vector<long> out = dual_cusp_word(w);
    CuspCycle cc;
    cc.irreducible_nodal = out.size() == 1;
    cc.entries.assign(out.begin(), out.end());
    return cc;
}

CuspCycle dual_cusp(const Divisor& d) { return dual_cusp(d.entries()); }

GeographyReport stein_geography(const Divisor& d) {
    const Signature sg = signature(d);
    if (!sg.negative_definite())
        throw Error(ErrorKind::NotNegativeDefinite, to_string(d) + " is not negative definite");
    GeographyReport g;
    g.q = charge(d);
    g.cases.push_back({1, Int(0), Int(0), Int(1), std::nullopt, "negative definite, b1 = 1"});
    if (g.q >= 3 && g.q <= 21) g.cases.push_back({2, Int(1), Int(1), Int(0), Int(21 - g.q), "(b+,b0,b1) = (1,1,0), c1 = 0"});
    if (g.q >= 3 && g.q <= 22) g.cases.push_back({3, Int(2), Int(0), Int(1), Int(22 - g.q), "(b+,b0,b1) = (2,0,1), c1 = 0"});
    return g;
}

}  // namespace csd
