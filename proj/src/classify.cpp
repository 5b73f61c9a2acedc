#include "csdiv/classify.hpp"

#include "csdiv/convexity.hpp"
#include "csdiv/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace csd {

const char* fill_status_name(FillStatus s) {
    switch (s) {
        case FillStatus::Fillable: return "fillable";
        case FillStatus::NotFillable: return "not_fillable";
        case FillStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* fill_reason_name(FillReason r) {
    switch (r) {
        case FillReason::BPlusAtLeastTwo: return "b_plus_ge_2";
        case FillReason::BundleMismatch: return "bundle_mismatch";
        case FillReason::NotBlownUp: return "not_blown_up";
        case FillReason::Certificate: return "certificate";
        case FillReason::Budget: return "budget";
    }
    return "?";
}

const char* ac_status_name(AcStatus s) {
    switch (s) {
        case AcStatus::AntiCanonical: return "anti_canonical";
        case AcStatus::NotAntiCanonical: return "not_anti_canonical";
        case AcStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* ac_obstruction_name(AcObstruction o) {
    switch (o) {
        case AcObstruction::None: return "none";
        case AcObstruction::ChargeDeficit: return "q_deficit";
        case AcObstruction::ExhaustiveSearch: return "exhaustive_search";
        case AcObstruction::SemidefiniteBound: return "semidefinite_bound";
    }
    return "?";
}

static Int min_entry(const Divisor& d) { return *std::min_element(d.entries().begin(), d.entries().end()); }

namespace {

// some alignment with x[al(j)] >= d[j] for all j
std::optional<Alignment> dominating_alignment(const IntVec& x, const Divisor& d) {
    const std::size_t r = x.size();
    for (int refl = 0; refl < 2; ++refl)
        for (std::size_t o = 0; o < r; ++o) {
            Alignment al{o, refl == 1};
            bool ok = true;
            for (std::size_t j = 0; j < r && ok; ++j) ok = x[al.pos_to_raw(j, r)] >= d[j];
            if (ok) return al;
        }
    return std::nullopt;
}

struct SearchOutcome {
    bool found = false;
    bool complete = true;
    std::size_t explored = 0;
    BlowUpWitness witness;
};

struct NodeInfo {
    IntVec prev;
    std::size_t edge = 0;
    int seed = -1;  // >= 0 on roots
};

// Level-wise toric blow-up enumeration from the seeds, entries kept >= d's minimum,
// followed by a domination test at the length of d.
SearchOutcome blow_up_search(const std::vector<Seed>& seeds, const Divisor& d, std::size_t max_nodes) {
    SearchOutcome out;
    const std::size_t r = d.length();
    const Int lo = min_entry(d);
    std::unordered_map<IntVec, NodeInfo, IntVecHash> info;
    std::vector<IntVec> frontier;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        IntVec c = canonical_entries(seeds[s].d.entries());
        if (c.size() > r || info.count(c)) continue;
        info[c] = NodeInfo{{}, 0, static_cast<int>(s)};
        frontier.push_back(c);
    }
    auto finish = [&](const IntVec& hit) {
        // rebuild the toric path back to the seed
        std::vector<std::pair<IntVec, std::size_t>> chain;
        IntVec cur = hit;
        while (info.at(cur).seed < 0) {
            const NodeInfo& ni = info.at(cur);
            chain.emplace_back(ni.prev, ni.edge);
            cur = ni.prev;
        }
        const Seed& seed = seeds[static_cast<std::size_t>(info.at(cur).seed)];
        std::reverse(chain.begin(), chain.end());
        Path p;
        for (auto& [node, edge] : chain) {
            p.nodes.push_back(node);
            p.steps.push_back({MoveKind::ToricBlowUp, edge, 0});
        }
        p.nodes.push_back(hit);
        BlowUpWitness w{seed.d, materialize(seed.d, p), seed.d, 0, seed.family};
        Divisor x = replay(seed.d, w.trace);
        w.toric_stage = x;
        auto al = dominating_alignment(x.entries(), d);
        if (!al) throw Error(ErrorKind::Internal, "lost the dominating alignment");
        for (std::size_t j = 0; j < r; ++j) {
            std::size_t pos = al->pos_to_raw(j, r);
            for (Int k = x[pos] - d[j]; sgn(k) > 0; --k) {
                w.trace.push_back({MoveKind::NonToricBlowUp, pos, 0});
                ++w.non_toric;
            }
        }
        out.found = true;
        out.witness = std::move(w);
    };
    out.explored = info.size();
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& c : frontier) {
            if (c.size() == r) {
                if (dominating_alignment(c, d)) {
                    finish(c);
                    return out;
                }
                continue;
            }
            const Divisor cd(c);
            for (std::size_t e = 0; e < c.size(); ++e) {
                Divisor x = toric_blow_up(cd, e);
                bool ok = true;
                for (const Int& v : x.entries())
                    if (v < lo) { ok = false; break; }
                if (!ok) continue;
                IntVec cx = canonical_entries(x.entries());
                if (info.count(cx)) continue;
                info[cx] = NodeInfo{c, e, -1};
                next.push_back(std::move(cx));
                if (info.size() >= max_nodes) {
                    out.complete = false;
                    out.explored = info.size();
                    return out;
                }
            }
        }
        frontier = std::move(next);
        out.explored = info.size();
    }
    return out;
}

}  // namespace

std::optional<IntVec> family4_parameters(const Divisor& d) {
    const std::size_t r = d.length();
    if (r < 3) return std::nullopt;
    for (int refl = 0; refl < 2; ++refl)
        for (std::size_t o = 0; o < r; ++o) {
            Alignment al{o, refl == 1};
            auto at = [&](std::size_t j) -> const Int& { return d[al.pos_to_raw(j, r)]; };
            if (at(0) != 1) continue;
            IntVec p;
            const std::size_t l = r - 1;
            bool ok = true;
            for (std::size_t i = 1; i <= l && ok; ++i) {
                Int pi = -at(i);
                if (i == 1) pi += 1;
                if (i == l) pi += 1;
                if (pi < 2) ok = false;
                p.push_back(pi);
            }
            if (ok) return p;
        }
    return std::nullopt;
}

Divisor family4_divisor(const IntVec& p) {
    if (p.size() < 2) throw Error(ErrorKind::WrongShape, "family (4) needs l >= 2");
    IntVec v{Int(1)};
    for (std::size_t i = 0; i < p.size(); ++i) {
        Int x = -p[i];
        if (i == 0) x += 1;
        if (i + 1 == p.size()) x += 1;
        v.push_back(x);
    }
    return Divisor(std::move(v));
}

BlownUpResult blown_up_check(const Divisor& d, std::size_t max_nodes) {
    if (!family4_parameters(d))
        throw Error(ErrorKind::WrongShape, to_string(d) + " is not of the form (1,1-p1,-p2,...,1-pl)");
    std::vector<Seed> seeds{{Divisor{1, 1, 1}, "(1,1,1)"}};
    SearchOutcome o = blow_up_search(seeds, d, max_nodes);
    if (!o.found && !o.complete) throw Error(ErrorKind::BudgetInvalid, "blown-up search exceeded its node budget");
    BlownUpResult res;
    res.blown_up = o.found;
    res.nodes_explored = o.explored;
    if (o.found) res.witness = std::move(o.witness);
    return res;
}

std::vector<Seed> minimal_model_seeds(const Int& lo, std::size_t max_length) {
    std::vector<Seed> out;
    std::set<IntVec> seen;
    auto add = [&](IntVec v, const std::string& fam) {
        if (v.size() > max_length) return;
        for (const Int& x : v)
            if (x < lo) return;
        IntVec c = canonical_entries(v);
        if (!seen.insert(c).second) return;
        out.push_back({Divisor(std::move(v)), fam});
    };
    add({Int(1), Int(4)}, "(1,4)");
    add({Int(1), Int(1), Int(1)}, "(1,1,1)");
    add({Int(4), Int(0)}, "(4,0)");
    // entries are linear in the parameter with slope +-2, so this range covers every admissible value
    const long bound = to_long(abs(lo)) + 6;
    // small |parameter| first, so witnesses start from the simplest seed
    for (long k = 0; k <= 2 * bound; ++k) {
        const long t = k % 2 ? (k + 1) / 2 : -(k / 2);
        const Int b(t), a(t);
        const std::string bs = " b=" + std::to_string(t), as = " a=" + std::to_string(t);
        add({2 * b, 4 - 2 * b}, "(2b,4-2b)" + bs);
        add({2 * b, Int(0), 2 - 2 * b}, "(2b,0,2-2b)" + bs);
        add({2 * b, Int(0), -2 * b, Int(0)}, "(2b,0,-2b,0)" + bs);
        add({2 * a + 1, 3 - 2 * a}, "(2a+1,3-2a)" + as);
        add({2 * a + 1, Int(0), 1 - 2 * a}, "(2a+1,0,1-2a)" + as);
        add({2 * a + 1, Int(0), -2 * a - 1, Int(0)}, "(2a+1,0,-2a-1,0)" + as);
    }
    return out;
}

AntiCanonicalVerdict anticanonical_search(const Divisor& d, std::size_t max_nodes) {
    AntiCanonicalVerdict v;
    const Int q = charge(d);
    const Signature sg = signature(d);
    if (sgn(q) < 0) {
        v.status = AcStatus::NotAntiCanonical;
        v.obstruction = AcObstruction::ChargeDeficit;
        v.note = "negative charge: no minimal-model cycle has q < 0";
        return v;
    }
    if (sg.negative_definite() && q < 3) {
        v.status = AcStatus::NotAntiCanonical;
        v.obstruction = AcObstruction::ChargeDeficit;
        v.note = "negative definite anti-canonical cycles need q >= 3";
        return v;
    }
    std::vector<Seed> seeds;
    for (Seed& s : minimal_model_seeds(min_entry(d), d.length()))
        if (charge(s.d) <= q) seeds.push_back(std::move(s));
    SearchOutcome o = blow_up_search(seeds, d, max_nodes);
    v.nodes_explored = o.explored;
    if (o.found) {
        v.status = AcStatus::AntiCanonical;
        v.witness = std::move(o.witness);
    } else if (o.complete) {
        v.status = AcStatus::NotAntiCanonical;
        v.obstruction = AcObstruction::ExhaustiveSearch;
    } else {
        v.status = AcStatus::Inconclusive;
    }
    return v;
}

AntiCanonicalVerdict strictly_semidefinite_report(const Divisor& d, std::size_t max_nodes) {
    const Signature sg = signature(d);
    if (sg.b_plus != 0 || sg.b_zero == 0)
        throw Error(ErrorKind::NotSemidefinite, to_string(d) + " is not strictly negative semi-definite");
    const Reduction red = toric_minimal_reduction(d);
    // toric minimal forms here are D_n or (-1,-4) = D_1; q(D_n) = 12 - n
    const Int n = 12 - charge(d);
    AntiCanonicalVerdict v = anticanonical_search(red.result, max_nodes);
    if (n <= 9 && v.status != AcStatus::AntiCanonical)
        throw Error(ErrorKind::Internal, "missing witness for D_n, n <= 9");
    if (n >= 10 && v.status == AcStatus::AntiCanonical)
        throw Error(ErrorKind::Internal, "unexpected witness for D_n, n >= 10");
    if (v.status == AcStatus::Inconclusive) {
        // search budget ran out; n >= 10 is settled by the charge/component bound
        v.status = AcStatus::NotAntiCanonical;
        v.obstruction = AcObstruction::SemidefiniteBound;
    }
    v.note = "toric equivalent to D_" + n.get_str() + " " + to_string(red.result) + "; not rigid";
    return v;
}

FillabilityVerdict classify_fillability(const Divisor& d, const BudgetOverrides& budget) {
    const Signature sg = signature(d);
    if (sg.b_plus == 0) throw Error(ErrorKind::NotConcave, to_string(d) + " has b+ = 0");
    FillabilityVerdict v;
    v.negative_boundary = negative_boundary_class(d);
    if (sg.b_plus >= 2) {
        v.status = FillStatus::NotFillable;
        v.reason = FillReason::BPlusAtLeastTwo;
        return v;
    }
    const BundleClass& cls = v.negative_boundary;
    struct Candidate {
        Divisor rep;
        int family;
        std::string params;
    };
    std::vector<Candidate> cands;
    bool class_matched = false;
    auto consider = [&](const Divisor& rep, int fam, const std::string& params) {
        if (negative_boundary_class(rep) == cls) cands.push_back({rep, fam, params});
    };
    switch (cls.kind) {
        case BundleKind::Elliptic:
            for (long p = 1; p <= 3; ++p) {
                consider(Divisor{1, p}, 1, "(1,p) p=" + std::to_string(p));
                consider(Divisor{-1, -p}, 1, "(-1,-p) p=" + std::to_string(p));
            }
            break;
        case BundleKind::PositiveParabolic: {
            Int p = 1 - cls.n;
            if (p <= 1) consider(Divisor(IntVec{Int(1), Int(1), p}), 2, "p=" + p.get_str());
            break;
        }
        case BundleKind::NegativeParabolic: {
            Int p = -cls.n;
            if (p <= 4) consider(Divisor(IntVec{Int(0), p}), 3, "p=" + p.get_str());
            break;
        }
        case BundleKind::PositiveHyperbolic: break;
        case BundleKind::NegativeHyperbolic: {
            Int p = monodromy(d).trace() + 2;
            if (p <= -1) consider(Divisor(IntVec{Int(1), p}), 4, "(1,p) p=" + p.get_str());
            if (!cands.empty()) break;
            // reconstruct the (p_i) cycle from the canonical word
            std::set<IntVec> tried;
            std::vector<IntVec> cycles;
            for (const IntVec& w : {cls.word, reverse_word(cls.word)})
                for (int swap = 0; swap < 2; ++swap) {
                    IntVec p;
                    for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
                        const Int& big = swap ? w[i] : w[i + 1];
                        const Int& run = swap ? w[i + 1] : w[i];
                        p.push_back(big + 2);
                        for (Int k = 1; k < run; ++k) p.push_back(Int(2));
                    }
                    if (p.size() < 2 || !tried.insert(canonical_entries(p)).second) continue;
                    if (negative_boundary_class(family4_divisor(p)) == cls) cycles.push_back(p);
                }
            std::set<IntVec> reps;
            for (const IntVec& p : cycles) {
                class_matched = true;
                const std::size_t l = p.size();
                for (int refl = 0; refl < 2; ++refl)
                    for (std::size_t o = 0; o < l; ++o) {
                        Alignment al{o, refl == 1};
                        IntVec q(l);
                        for (std::size_t j = 0; j < l; ++j) q[j] = p[al.pos_to_raw(j, l)];
                        Divisor rep = family4_divisor(q);
                        if (!reps.insert(canonical_entries(rep.entries())).second) continue;
                        if (!blown_up_check(rep).blown_up) continue;
                        std::string params = "p=" + to_string(q);
                        cands.push_back({rep, 4, params});
                    }
            }
            break;
        }
    }
    if (cands.empty()) {
        v.status = FillStatus::NotFillable;
        v.reason = class_matched ? FillReason::NotBlownUp : FillReason::BundleMismatch;
        return v;
    }
    for (const Candidate& c : cands) {
        EquivVerdict e = decide_equivalence(d, c.rep, resolve_budget(budget, d, c.rep));
        if (e.kind == EquivKind::Equivalent) {
            v.status = FillStatus::Fillable;
            v.reason = FillReason::Certificate;
            v.family = c.family;
            v.parameters = c.params;
            v.representative = c.rep;
            v.certificate = std::move(e.trace);
            return v;
        }
    }
    v.status = FillStatus::Inconclusive;
    v.reason = FillReason::Budget;
    v.family = cands.front().family;
    return v;
}

RigidityReport rigidity_report(const Divisor& d, const FillabilityVerdict* f, const AntiCanonicalVerdict* ac) {
    RigidityReport rep;
    const Signature sg = signature(d);
    if (sg.b_plus >= 1) {
        if (f && f->status != FillStatus::Inconclusive) {
            bool yes = f->status == FillStatus::Fillable;
            rep.symplectically_embeddable = rep.rationally_embeddable = rep.anti_canonical = rep.rigid = yes;
        }
        if (f && f->status == FillStatus::Fillable)
            rep.notes.push_back("finitely many minimal symplectic fillings up to symplectic deformation");
        return rep;
    }
    rep.symplectically_embeddable = true;
    // anti-canonical already sits in a rational surface; only the converse is open
    if (ac && ac->status == AcStatus::AntiCanonical) rep.rationally_embeddable = true;
    if (sg.b_zero == 0) {
        rep.rigid = false;
        if (ac && ac->status != AcStatus::Inconclusive) rep.anti_canonical = ac->status == AcStatus::AntiCanonical;
        rep.notes.push_back("negative definite: rational embeddability needs at least 10 blow-ups; open in general");
    } else {
        rep.rigid = false;
        if (ac && ac->status != AcStatus::Inconclusive) rep.anti_canonical = ac->status == AcStatus::AntiCanonical;
        rep.notes.push_back("semi-definite: rationally embeddable iff anti-canonical is conjectural");
    }
    return rep;
}

}  // namespace csd
