// one PASS/FAIL line per acceptance criterion; exit status 1 if any fails
#include "csdiv/classify.hpp"
#include "csdiv/convexity.hpp"
#include "csdiv/equiv.hpp"
#include "csdiv/fillings.hpp"
#include "csdiv/lattice.hpp"
#include "csdiv/sl2z.hpp"
#include "util.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace csd;

namespace {

struct Tally {
    std::size_t checks = 0, failures = 0;
    std::string first;
    void operator()(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first = what;
    }
};

std::string show(const oracle::Seq& s) { return to_string(to_div(s)); }

// 1. toric invariance
void toric_invariance(Tally& t) {
    std::mt19937_64 rng(1001);
    for (int it = 0; it < 500; ++it) {
        oracle::Seq s = oracle::random_seq(rng, 2, 8, -6, 4);
        Divisor d = to_div(s);
        const long q0 = oracle::charge(s);
        const oracle::Inertia in0 = oracle::inertia_ldlt(oracle::plumbing(s));
        const BundleClass c0 = negative_boundary_class(d);
        const long tr0 = std::llabs(oracle::monodromy(s)[0] + oracle::monodromy(s)[3]);
        const int steps = std::uniform_int_distribution<int>(1, 6)(rng);
        for (int k = 0; k < steps; ++k) {
            const Move m = random_toric_move(d, rng);
            const oracle::Seq before = to_seq(d);
            const oracle::Inertia ib = oracle::inertia_ldlt(oracle::plumbing(before));
            d = apply_move(d, m);
            s = to_seq(d);
            const oracle::Seq naive = m.kind == MoveKind::ToricBlowUp ? oracle::blow_up(before, m.index)
                                                                       : oracle::blow_down(before, m.index);
            t(naive == s, "move disagrees with the naive rule on " + show(before));
            const oracle::Inertia in = oracle::inertia_ldlt(oracle::plumbing(s));
            t(oracle::charge(s) == q0, "charge changed on " + show(s));
            t(charge(d) == q0, "library charge on " + show(s));
            t(in.pos == in0.pos && in.zero == in0.zero, "b+ or b0 changed on " + show(s));
            t(signature(d).b_plus == in.pos && signature(d).b_zero == in.zero, "library signature on " + show(s));
            const long step = m.kind == MoveKind::ToricBlowUp ? 1 : -1;
            t(long(in.neg) == long(ib.neg) + step, "b- did not move by one on " + show(s));
            t(negative_boundary_class(d) == c0, "bundle class changed on " + show(s));
            t(std::llabs(oracle::monodromy(s)[0] + oracle::monodromy(s)[3]) == tr0, "|trace| changed on " + show(s));
        }
    }
}

// 2. monodromy versus lattice
void monodromy_lattice(Tally& t) {
    std::mt19937_64 rng(1002);
    for (int it = 0; it < 500; ++it) {
        const oracle::Seq s = oracle::random_seq(rng, 2, 8, -6, 4);
        const oracle::M2 a = oracle::monodromy(s);
        const long long m00 = a[0] - 1, m01 = a[1], m10 = a[2], m11 = a[3] - 1;
        const long long det_ami = m00 * m11 - m01 * m10;
        const mpz_class det_q = oracle::det_leibniz(oracle::plumbing(s));
        t(abs(det_q) == mpz_class(static_cast<long>(std::llabs(det_ami))), "|det(A-I)| != |det Q| on " + show(s));
        // 2x2 Smith form: d1 = gcd of entries, d1 d2 = |det|
        const long long g = std::gcd(std::gcd(std::llabs(m00), std::llabs(m01)), std::gcd(std::llabs(m10), std::llabs(m11)));
        oracle::Seq tors;
        std::size_t free = 0;
        if (det_ami != 0) {
            if (g > 1) tors.push_back(g);
            if (std::llabs(det_ami) / g > 1) tors.push_back(std::llabs(det_ami) / g);
        } else {
            free = g == 0 ? 2 : 1;
            if (g > 1) tors.push_back(g);
        }
        const AbelianGroup cq = smith_normal_form(intersection_matrix(to_div(s)));
        oracle::Seq lib;
        for (const Int& x : cq.torsion) lib.push_back(x.get_si());
        t(lib == tors, "cokernel torsion differs on " + show(s));
        t(cq.free_rank == free, "cokernel rank differs on " + show(s));
        if (det_ami != 0) t(cq.torsion_order() == static_cast<long>(std::llabs(det_ami)), "cokernel order on " + show(s));
    }
}

bool certificate_checks(const oracle::Seq& s, GsMode mode, const RatVec& z) {
    const auto q = oracle::plumbing(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (mode == GsMode::Concave ? z[i] <= 0 : z[i] > 0) return false;
        Rat a = 0;
        for (std::size_t j = 0; j < s.size(); ++j) a += q[i][j] * z[j];
        if (a <= 0) return false;
    }
    return true;
}

// 3. GS verdicts versus the signature
void trichotomy_cross(Tally& t) {
    std::size_t n = 0;
    for (const oracle::Seq& s : all_canonical(2, 5, -5, 3)) {
        ++n;
        const Divisor d = to_div(s);
        const oracle::Inertia in = oracle::inertia_ldlt(oracle::plumbing(s));
        const bool concave = in.pos >= 1, convex = in.neg == s.size();
        for (GsMode m : {GsMode::Concave, GsMode::Convex}) {
            const ConvexityVerdict v = gs_feasible(d, m);
            t(v.feasible == (m == GsMode::Concave ? concave : convex), "GS verdict disagrees on " + show(s));
            if (v.feasible) t(v.certificate && certificate_checks(s, m, v.certificate->z), "bad certificate on " + show(s));
            else t(v.witness && witness_valid(d, m, *v.witness), "bad infeasibility witness on " + show(s));
        }
    }
    // count against the independent bracelet generator
    std::size_t expect = 0;
    for (std::size_t r = 2; r <= 5; ++r) oracle::bracelets(r, -5, 3, [&](const oracle::Seq&) { ++expect; });
    t(n == expect, "enumerated " + std::to_string(n) + " cycles, expected " + std::to_string(expect));
}

oracle::Seq oracle_replay(oracle::Seq s, const MoveTrace& tr, bool& ok) {
    for (const Move& m : tr) {
        if (m.kind == MoveKind::ToricBlowUp) {
            s = oracle::blow_up(s, m.index);
        } else if (m.kind == MoveKind::ToricBlowDown && s.size() >= 3 && s[m.index] == -1) {
            s = oracle::blow_down(s, m.index);
        } else {
            ok = false;
            return s;
        }
    }
    return s;
}

// 4. reference equivalences
void reference_equivalences(Tally& t) {
    std::vector<std::pair<Divisor, Divisor>> pairs{
        {Divisor{-1, 4}, Divisor{1, -1, -2, -2, -2}}, {Divisor{1, 4}, Divisor{3, -1, 0}},
        {Divisor{3, -1, 0}, Divisor{1, 1, 0}},        {Divisor{1, 4}, Divisor{1, 1, 0}},
        {Divisor{2, 2}, Divisor{1, 1, -1}},           {Divisor{3, -2, 0}, Divisor{2, -2, -1, -1}},
        {Divisor{2, -2, -1, -1}, Divisor{2, -1, 0}},  {Divisor{3, -2, 0}, Divisor{2, -1, 0}},
    };
    for (long p = -4; p <= 0; ++p) pairs.push_back({Divisor{0, 0, 0, p}, Divisor{1, 1, p + 1}});
    for (const auto& [a, b] : pairs) {
        const EquivVerdict v = decide_equivalence(a, b);
        const std::string name = to_string(a) + " ~ " + to_string(b);
        t(v.kind == EquivKind::Equivalent, name + " not certified");
        if (v.kind != EquivKind::Equivalent) continue;
        t(replay(a, v.trace) == b, name + " trace does not replay");
        bool ok = true;
        const oracle::Seq end = oracle_replay(to_seq(a), v.trace, ok);
        t(ok && oracle::min_dihedral(end) == oracle::min_dihedral(to_seq(b)), name + " trace fails the naive replay");
    }
}

// 5. fillability table
void fillability_table(Tally& t) {
    auto status = [](const Divisor& d) { return classify_fillability(d); };
    for (long p = -6; p <= 4; ++p) t(status(Divisor{0, p}).status == FillStatus::Fillable, "(0," + std::to_string(p) + ") not fillable");
    for (long p : {5, 6}) t(status(Divisor{0, p}).status == FillStatus::NotFillable, "(0," + std::to_string(p) + ") fillable");
    for (long p = -8; p <= 1; ++p)
        t(status(Divisor{1, 1, p}).status == FillStatus::Fillable, "(1,1," + std::to_string(p) + ") not fillable");
    const FillabilityVerdict v = status(Divisor{1, 1, 2});
    t(v.status == FillStatus::NotFillable && v.reason == FillReason::BPlusAtLeastTwo, "(1,1,2) verdict");
    t(status(Divisor{5, 0}).status == FillStatus::NotFillable, "(5,0) fillable");
    const FillabilityVerdict f4 = status(Divisor{1, -2, -3, -3, -2, -3, -2});
    t(f4.status == FillStatus::Fillable && f4.family == 4, "(1,-2,-3,-3,-2,-3,-2) not family 4");
}

// 6. filling homology
void filling_homology(Tally& t) {
    auto hom = [&](const Divisor& d) { return minimal_filling_homology(d, classify_fillability(d)); };
    FillingHomology h = hom(Divisor{1, 1, 1});
    t(h.b1 == 2 && h.b2 == 1 && h.b_minus == 0, "(1,1,1) homology");
    const Divisor f4{1, -2, -3, -3, -2, -3, -2};
    h = hom(f4);
    t(h.b1 == 0 && h.b2 == 4 && h.b_minus == 3, "family 4 example homology");
    const CapInvariants cap = cap_invariants(f4, Int(10));
    t(cap.b2 && *cap.b2 == 4, "cap b2 cross-check");
    for (const oracle::Seq& s : all_canonical(2, 4, -5, 3)) {
        const Divisor d = to_div(s);
        if (signature(d).b_plus == 0) continue;
        const FillabilityVerdict f = classify_fillability(d);
        if (f.status != FillStatus::Fillable) continue;
        const FillingHomology r = minimal_filling_homology(d, f);
        const oracle::Inertia in = oracle::inertia_ldlt(oracle::plumbing(s));
        t(r.identities_hold(), "identities fail on " + show(s));
        t(r.euler == oracle::charge(s), "euler != q on " + show(s));
        t(r.sigma == 2 - oracle::charge(s) - long(in.zero), "sigma on " + show(s));
    }
}

bool witness_ok(const Divisor& d, const BlowUpWitness& w) {
    bool non_toric = false, ok = true;
    std::size_t nt = 0;
    oracle::Seq cur = to_seq(w.seed);
    for (const Move& m : w.trace) {
        if (m.kind == MoveKind::NonToricBlowUp) {
            non_toric = true;
            ++nt;
            --cur[m.index];
        } else {
            ok = ok && !non_toric && m.kind == MoveKind::ToricBlowUp;
            cur = oracle::blow_up(cur, m.index);
        }
    }
    return ok && oracle::min_dihedral(cur) == oracle::min_dihedral(to_seq(d)) && nt == w.non_toric &&
           long(nt) == oracle::charge(to_seq(d)) - oracle::charge(to_seq(w.seed));
}

// 7. anti-canonical search on D_n
void dn_search(Tally& t) {
    const Divisor d1{-1, -4};
    AntiCanonicalVerdict v = strictly_semidefinite_report(d1);
    t(v.status == AcStatus::AntiCanonical && v.witness && witness_ok(d1, *v.witness), "D_1 = (-1,-4) witness");
    for (std::size_t n = 2; n <= 9; ++n) {
        v = strictly_semidefinite_report(dn(n));
        t(v.status == AcStatus::AntiCanonical && v.witness && witness_ok(dn(n), *v.witness),
          "D_" + std::to_string(n) + " witness");
    }
    for (std::size_t n : {10, 11}) {
        v = strictly_semidefinite_report(dn(n));
        t(v.status == AcStatus::NotAntiCanonical &&
              (v.obstruction == AcObstruction::ExhaustiveSearch || v.obstruction == AcObstruction::ChargeDeficit),
          "D_" + std::to_string(n) + " not excluded by search or charge");
    }
}

// 8. dual cusp involution
void dual_involution(Tally& t) {
    std::size_t n = 0, bad = 0;
    for (std::size_t r = 1; r <= 8; ++r)
        oracle::bracelets(r, -12, -2, [&](const oracle::Seq& s) {
            if (std::all_of(s.begin(), s.end(), [](long x) { return x == -2; })) return;
            ++n;
            if (dual_cusp_word(dual_cusp_word(s)) != s) ++bad;
        });
    t(bad == 0, std::to_string(bad) + " cycles fail the involution");
    t(n > 10000000, "too few cycles enumerated");
}

SL2 from_m2(const oracle::M2& m) { return SL2::of(m[0], m[1], m[2], m[3]); }

// 9. conjugacy canonical forms
void conjugacy(Tally& t) {
    std::mt19937_64 rng(1009);
    std::vector<oracle::M2> base{{0, -1, 1, 0}, {0, 1, -1, 0}, {0, -1, 1, 1}, {1, 1, -1, 0}, {-1, -1, 1, 0}, {0, 1, -1, -1}};
    for (long n : {0L, 1L, -3L, 7L}) {
        base.push_back({1, n, 0, 1});
        base.push_back({-1, -n, 0, -1});
    }
    std::size_t pos_h = 0, neg_h = 0;
    while (base.size() < 50) {
        const oracle::M2 m = oracle::random_sl2(rng, 5);
        const long long tr = m[0] + m[3];
        if (tr > 2 && pos_h < 18) {
            base.push_back(m);
            ++pos_h;
        } else if (tr < -2 && neg_h < 18) {
            base.push_back(m);
            ++neg_h;
        }
    }
    std::set<BundleKind> kinds;
    for (const oracle::M2& b : base) {
        const BundleClass c = conjugacy_canon(from_m2(b));
        kinds.insert(c.kind);
        for (int k = 0; k < 200; ++k) {
            const oracle::M2 p = oracle::random_sl2(rng, 6);
            const SL2 P = from_m2(p);
            t(conjugacy_canon(P * from_m2(b) * P.inverse()) == c, "canonical form moved under conjugation");
        }
    }
    t(kinds.size() == 5, "not every kind was sampled");
    for (long n = -20; n <= 20; ++n)
        for (int sign : {1, -1}) {
            const SL2 b = SL2::of(sign, sign * n, 0, sign);
            for (int k = 0; k < 20; ++k) {
                const SL2 P = from_m2(oracle::random_sl2(rng, 6));
                const BundleClass c = conjugacy_canon(P * b * P.inverse());
                t(c.n == n && c.kind == (sign > 0 ? BundleKind::PositiveParabolic : BundleKind::NegativeParabolic),
                  "parabolic n=" + std::to_string(n) + " not recovered");
            }
        }
}

// 10. Stein geography
void geography(Tally& t) {
    const GeographyReport g = stein_geography(Divisor{-2, -5});
    t(g.q == 13 && g.cases.size() == 3, "(-2,-5) case count");
    if (g.cases.size() == 3) {
        t(g.cases[0].index == 1 && !g.cases[0].b_minus, "case 1");
        t(g.cases[1].index == 2 && g.cases[1].b_minus == Int(8), "case 2 b- = 8");
        t(g.cases[2].index == 3 && g.cases[2].b_minus == Int(9), "case 3 b- = 9");
    }
    for (long n = 15; n <= 40; ++n) {
        const GeographyReport h = stein_geography(Divisor{-2, -n});
        t(h.q >= 23 && h.cases.size() == 1 && h.cases[0].index == 1, "(-2,-" + std::to_string(n) + ") not case 1 only");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* what;
        double limit;
        std::function<void(Tally&)> run;
    };
    const std::vector<Criterion> all{
        {1, "toric invariance of q, b+, b0, -Y_D class; b- steps", 30, toric_invariance},
        {2, "|det(A-I)| = |det Q| and matching cokernels", 30, monodromy_lattice},
        {3, "GS verdicts match the signature trichotomy (r <= 5, [-5,3])", 300, trichotomy_cross},
        {4, "equivalences certified with replayable traces", 10, reference_equivalences},
        {5, "fillability table", 30, fillability_table},
        {6, "filling homology and identities", 5, filling_homology},
        {7, "D_n anti-canonical iff n <= 9 (n <= 11 checked)", 120, dn_search},
        {8, "dual cusp involution (length <= 8, entries >= -12)", 60, dual_involution},
        {9, "conjugacy canonical forms stable; parabolic n recovered", 60, conjugacy},
        {10, "Stein geography cases", 1, geography},
    };
    int failed = 0;
    for (const Criterion& c : all) {
        Tally t;
        const auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = error.empty() && t.failures == 0 && secs <= c.limit;
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.what << " (" << t.checks << " checks, ";
        line.precision(2);
        line << std::fixed << secs << " s, limit " << c.limit << " s)";
        if (!error.empty()) line << " exception: " << error;
        if (t.failures) line << " " << t.failures << " failed, first: " << t.first;
        if (error.empty() && !t.failures && secs > c.limit) line << " over time";
        std::cout << line.str() << std::endl;
        failed += !ok;
    }
    std::cout << (failed ? "FAILED " : "all passed ") << all.size() - failed << "/" << all.size() << std::endl;
    return failed ? 1 : 0;
}
