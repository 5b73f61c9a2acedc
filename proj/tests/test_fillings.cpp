#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csdiv/classify.hpp"
#include "csdiv/fillings.hpp"
#include "csdiv/lattice.hpp"
#include "util.hpp"

#include <map>

using namespace csd;

static FillingHomology homology_of(const Divisor& d) {
    const FillabilityVerdict f = classify_fillability(d);
    REQUIRE(f.status == FillStatus::Fillable);
    return minimal_filling_homology(d, f);
}

static IntVec iv(const std::vector<long>& xs) { return IntVec(xs.begin(), xs.end()); }

static oracle::Seq to_longs(const IntVec& v) {
    oracle::Seq s;
    for (const Int& x : v) s.push_back(x.get_si());
    return s;
}

TEST_CASE("filling homology examples") {
    FillingHomology h = homology_of(Divisor{1, 1, 1});
    CHECK(h.b1 == 2);
    CHECK(h.b2 == 1);
    CHECK(h.b_minus == 0);
    CHECK(h.identities_hold());

    h = homology_of(Divisor{0, 4});
    CHECK(h.b_minus == 0);
    CHECK(h.b2 == 1);
    CHECK(h.b1 == 0);
    CHECK(h.identities_hold());

    const Divisor f4{1, -2, -3, -3, -2, -3, -2};
    h = homology_of(f4);
    CHECK(h.b_minus == 3);
    CHECK(h.b2 == 4);
    CHECK(h.b1 == 0);
    CHECK(h.c1_zero);
    // complement in CP2 # 9 points
    const CapInvariants cap = cap_invariants(f4, Int(10));
    REQUIRE(cap.b2);
    CHECK(*cap.b2 == 4);
    CHECK(*cap.b2 == h.b2);
    CHECK(cap.euler == charge(f4));
}

TEST_CASE("cap invariants") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 200; ++it) {
        const Divisor d = to_div(oracle::random_seq(rng, 2, 8, -6, 4));
        const Signature sg = signature(d);
        const CapInvariants c = cap_invariants(d, Int(10));
        CHECK(c.euler == oracle::charge(to_seq(d)));
        if (sg.b_plus == 1 && sg.b_zero == 0) CHECK(c.sigma == 2 - c.euler);
        CHECK(c.b2.has_value() == (sg.b_zero == 0));
    }
}

TEST_CASE("identities hold for every fillable cycle in a box") {
    std::size_t fillable = 0;
    for (const oracle::Seq& s : all_canonical(2, 5, -5, 3)) {
        const Divisor d = to_div(s);
        if (signature(d).b_plus == 0) {
            CHECK_THROWS_AS(classify_fillability(d), Error);
            continue;
        }
        const FillabilityVerdict f = classify_fillability(d);
        if (f.status != FillStatus::Fillable) {
            CHECK_THROWS_AS(minimal_filling_homology(d, f), Error);
            continue;
        }
        ++fillable;
        const FillingHomology h = minimal_filling_homology(d, f);
        const Signature sg = signature(d);
        CHECK(h.identities_hold());
        CHECK(h.euler == oracle::charge(s));
        CHECK(h.sigma == 2 - oracle::charge(s) - long(sg.b_zero));
        CHECK(h.b2 == h.b_plus + h.b_minus + h.b_zero);
        CHECK(h.b_plus == 0);
        CHECK(h.b3 == 0);
        CHECK(h.b_zero == 1);
    }
    CHECK(fillable > 1000);
}

TEST_CASE("not fillable input is rejected") {
    const Divisor d{1, 1, 2};
    const FillabilityVerdict f = classify_fillability(d);
    CHECK(f.status == FillStatus::NotFillable);
    try {
        minimal_filling_homology(d, f);
        FAIL("expected NotFillable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFillable);
    }
}

TEST_CASE("dual cusp examples") {
    CuspCycle c = dual_cusp(iv({-5, -2}));
    CHECK(c.entries == iv({-4, -2, -2}));
    CHECK_FALSE(c.irreducible_nodal);
    c = dual_cusp(iv({-4, -2, -2}));
    CHECK(c.entries == iv({-5, -2}));
    c = dual_cusp(iv({-3, -2}));
    CHECK(c.entries == iv({-4}));
    CHECK(c.irreducible_nodal);
    CHECK(dual_cusp(iv({-4})).entries == iv({-3, -2}));
    // rotation does not matter
    CHECK(dual_cusp(iv({-2, -5})).entries == iv({-4, -2, -2}));
    for (auto bad : {iv({-2, -2, -2}), iv({-3, -1}), iv({0, -4})}) {
        try {
            dual_cusp(bad);
            FAIL("expected NotCuspShape");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotCuspShape);
        }
    }
}

TEST_CASE("dual cusp is an involution on every cycle up to length 8 with entries in [-12,-2]") {
    std::size_t count = 0, bad = 0, bad_charge = 0;
    std::map<long, std::size_t> charge_sum;
    for (std::size_t r = 1; r <= 8; ++r)
        oracle::bracelets(r, -12, -2, [&](const oracle::Seq& s) {
            if (std::all_of(s.begin(), s.end(), [](long x) { return x == -2; })) return;
            const oracle::Seq d = dual_cusp_word(s);
            const oracle::Seq dd = dual_cusp_word(d);
            if (dd != s) ++bad;
            // the pair sum, computed from both sides
            const long q = oracle::charge(s) + oracle::charge(d);
            if (q != oracle::charge(d) + oracle::charge(dd)) ++bad_charge;
            ++charge_sum[q];
            ++count;
        });
    CHECK(bad == 0);
    CHECK(bad_charge == 0);
    CHECK(count > 10000000);
    for (const auto& [q, n] : charge_sum) MESSAGE("q(c) + q(dual c) = " << q << " on " << n << " cycles");
}

TEST_CASE("big-integer dual agrees with the word version") {
    std::mt19937_64 rng(62);
    for (int it = 0; it < 2000; ++it) {
        oracle::Seq s = oracle::random_seq(rng, 1, 8, -12, -2);
        if (std::all_of(s.begin(), s.end(), [](long x) { return x == -2; })) s[0] = -3;
        const CuspCycle c = dual_cusp(iv(s));
        CHECK(to_longs(c.entries) == dual_cusp_word(s));
        CHECK(c.irreducible_nodal == (c.entries.size() == 1));
        // input rotation and reflection only move the output by a rotation/reflection
        oracle::Seq rs(s.rbegin(), s.rend());
        CHECK(oracle::min_dihedral(dual_cusp_word(rs)) == oracle::min_dihedral(dual_cusp_word(s)));
    }
}

TEST_CASE("stein geography") {
    GeographyReport g = stein_geography(Divisor{-2, -5});
    CHECK(g.q == 13);
    REQUIRE(g.cases.size() == 3);
    CHECK(g.cases[0].index == 1);
    CHECK_FALSE(g.cases[0].b_minus);
    CHECK(g.cases[0].b1 == 1);
    CHECK(g.cases[1].index == 2);
    CHECK(g.cases[1].b_minus == Int(8));
    CHECK(g.cases[1].b_plus == 1);
    CHECK(g.cases[1].b_zero == 1);
    CHECK(g.cases[1].b1 == 0);
    CHECK(g.cases[2].index == 3);
    CHECK(g.cases[2].b_minus == Int(9));
    CHECK(g.cases[2].b_plus == 2);
    CHECK(g.cases[2].b_zero == 0);
    CHECK(g.cases[2].b1 == 1);

    const Divisor big{-12, -12};
    CHECK(charge(big) == 30);
    CHECK(stein_geography(big).cases.size() == 1);
    const Divisor e23{-2, -15};
    CHECK(charge(e23) == 23);
    g = stein_geography(e23);
    REQUIRE(g.cases.size() == 1);
    CHECK(g.cases[0].index == 1);
    // at 22 only case 3 joins
    g = stein_geography(Divisor{-2, -14});
    CHECK(g.q == 22);
    REQUIRE(g.cases.size() == 2);
    CHECK(g.cases[1].index == 3);
    CHECK(g.cases[1].b_minus == Int(0));
    oracle::Seq s2(10, -2);
    s2.push_back(-3);
    const Divisor q2 = to_div(s2);
    REQUIRE(charge(q2) == 2);
    g = stein_geography(q2);
    REQUIRE(g.cases.size() == 1);
    CHECK(g.cases[0].index == 1);
    try {
        stein_geography(Divisor{1, 1, 1});
        FAIL("expected NotNegativeDefinite");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotNegativeDefinite);
    }
}

TEST_CASE("geography case list against the bounds") {
    for (long n = 3; n <= 30; ++n) {
        const Divisor d{-2, -n};
        const GeographyReport g = stein_geography(d);
        const long q = 12 - 6 + 2 + n;
        CHECK(g.q == q);
        std::size_t expect = 1 + (q >= 3 && q <= 21) + (q >= 3 && q <= 22);
        CHECK(g.cases.size() == expect);
        for (const GeographyCase& c : g.cases)
            if (c.b_minus) CHECK(*c.b_minus >= 0);
    }
}
