#include "csdiv/equiv.hpp"

#include "csdiv/lattice.hpp"
#include "csdiv/sl2z.hpp"

#include <algorithm>
#include <unordered_map>

namespace csd {

const char* equiv_name(EquivKind k) {
    switch (k) {
        case EquivKind::Equivalent: return "equivalent";
        case EquivKind::Distinct: return "distinct";
        case EquivKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

void validate_budget(const SearchBudget& b) {
    if (b.max_length < 2) throw Error(ErrorKind::BudgetInvalid, "max_length must be at least 2");
    if (b.max_nodes == 0) throw Error(ErrorKind::BudgetInvalid, "max_nodes must be positive");
}

std::optional<InvariantWitness> invariant_screen(const Divisor& d1, const Divisor& d2) {
    std::vector<InvariantDiff> diffs;
    const Int q1 = charge(d1), q2 = charge(d2);
    if (q1 != q2) diffs.push_back({"charge", q1.get_str(), q2.get_str()});
    const Signature s1 = signature(d1), s2 = signature(d2);
    if (s1.b_plus != s2.b_plus) diffs.push_back({"b_plus", std::to_string(s1.b_plus), std::to_string(s2.b_plus)});
    if (s1.b_zero != s2.b_zero) diffs.push_back({"b_zero", std::to_string(s1.b_zero), std::to_string(s2.b_zero)});
    const BundleClass c1 = negative_boundary_class(d1), c2 = negative_boundary_class(d2);
    if (!(c1 == c2)) diffs.push_back({"bundle_class", c1.to_string(), c2.to_string()});
    if (diffs.empty()) return std::nullopt;
    return InvariantWitness{diffs[0].name, diffs[0].first, diffs[0].second, diffs};
}

bool is_toric_minimal(const Divisor& d) {
    if (d.length() == 2) return true;
    return std::none_of(d.entries().begin(), d.entries().end(), [](const Int& x) { return x == -1; });
}

static void blow_down_all(Divisor& cur, MoveTrace& t) {
    while (cur.length() >= 3) {
        Alignment al;
        IntVec c = canonical_entries(cur.entries(), &al);
        auto it = std::find(c.begin(), c.end(), Int(-1));
        if (it == c.end()) break;
        std::size_t raw = al.pos_to_raw(static_cast<std::size_t>(it - c.begin()), cur.length());
        t.push_back({MoveKind::ToricBlowDown, raw, 0});
        cur = toric_blow_down(cur, raw);
    }
}

Reduction toric_minimal_reduction(const Divisor& d) {
    Reduction red{d, {}};
    blow_down_all(red.result, red.trace);
    return red;
}

Reduction normalize(const Divisor& d) {
    Reduction red{d, {}};
    Divisor& cur = red.result;
    for (;;) {
        blow_down_all(cur, red.trace);
        const std::size_t r = cur.length();
        if (r < 3) break;
        Alignment al;
        IntVec c = canonical_entries(cur.entries(), &al);
        auto it = std::find(c.begin(), c.end(), Int(0));
        if (it == c.end()) break;
        const std::size_t z = al.pos_to_raw(static_cast<std::size_t>(it - c.begin()), r);
        const Int& k = cur[(z + r - 1) % r];
        const Int& p = cur[(z + 1) % r];
        // empty out the cheaper neighbour
        Int n = mpz_cmpabs(k.get_mpz_t(), p.get_mpz_t()) <= 0 ? Int(k) : Int(-p);
        for (const Move& m : balancing_primitives(cur, z, n)) {
            red.trace.push_back(m);
            cur = apply_move(cur, m);
        }
        const std::size_t rr = cur.length();
        std::size_t pair = rr;
        for (std::size_t i = 0; i < rr; ++i)
            if (sgn(cur[i]) == 0 && sgn(cur[(i + 1) % rr]) == 0) { pair = i; break; }
        if (pair == rr) throw Error(ErrorKind::Internal, "balancing did not create a zero pair");
        for (const Move& m : zero_pair_primitives(cur, pair)) {
            red.trace.push_back(m);
            cur = apply_move(cur, m);
        }
    }
    return red;
}

SearchBudget default_budget(const Divisor& d1, const Divisor& d2) {
    SearchBudget b;
    b.max_length = std::max(d1.length(), d2.length()) + 4;
    Int lo = d1[0];
    for (const Divisor* d : {&d1, &d2}) {
        for (const Int& x : d->entries()) lo = std::min(lo, x);
        const Reduction n = normalize(*d);
        for (const Int& x : n.result.entries()) lo = std::min(lo, x);
    }
    b.min_entry = lo - 4;
    b.max_nodes = 200000;
    return b;
}

SearchBudget resolve_budget(const BudgetOverrides& o, const Divisor& d1, const Divisor& d2) {
    SearchBudget b = default_budget(d1, d2);
    if (o.max_length) b.max_length = *o.max_length;
    if (o.min_entry) b.min_entry = *o.min_entry;
    if (o.max_nodes) b.max_nodes = *o.max_nodes;
    return b;
}

namespace {

struct Edge {
    IntVec prev;
    Move step;
    bool root = false;
};
using ParentMap = std::unordered_map<IntVec, Edge, IntVecHash>;

void neighbours(const IntVec& c, const SearchBudget& b, std::vector<std::pair<Move, IntVec>>& out) {
    out.clear();
    const Divisor d(c);
    const std::size_t r = c.size();
    auto push = [&](const Move& m) {
        Divisor x = apply_move(d, m);
        if (x.length() > b.max_length) return;
        for (const Int& e : x.entries())
            if (e < b.min_entry) return;
        out.emplace_back(m, canonical_entries(x.entries()));
    };
    if (r + 1 <= b.max_length)
        for (std::size_t e = 0; e < r; ++e) push({MoveKind::ToricBlowUp, e, 0});
    if (r >= 3)
        for (std::size_t i = 0; i < r; ++i) {
            if (c[i] == -1) push({MoveKind::ToricBlowDown, i, 0});
            if (sgn(c[i]) == 0 && r + 1 <= b.max_length) {
                push({MoveKind::Balancing, i, 1});
                push({MoveKind::Balancing, i, -1});
            }
        }
}

Path walk_back(const ParentMap& pm, const IntVec& end) {
    Path p;
    IntVec cur = end;
    for (;;) {
        const Edge& e = pm.at(cur);
        p.nodes.push_back(cur);
        if (e.root) break;
        p.steps.push_back(e.step);
        cur = e.prev;
    }
    std::reverse(p.nodes.begin(), p.nodes.end());
    std::reverse(p.steps.begin(), p.steps.end());
    return p;
}

// bidirectional BFS between canonical forms
std::optional<Path> bfs(const IntVec& a, const IntVec& b, const SearchBudget& budget, std::size_t& explored) {
    if (a == b) return Path{{a}, {}};
    ParentMap side[2];
    std::vector<IntVec> frontier[2] = {{a}, {b}};
    side[0][a] = Edge{{}, {}, true};
    side[1][b] = Edge{{}, {}, true};
    explored = 2;
    std::vector<std::pair<Move, IntVec>> nb;
    while (!frontier[0].empty() && !frontier[1].empty()) {
        const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        std::vector<IntVec> next;
        for (const IntVec& c : frontier[s]) {
            neighbours(c, budget, nb);
            for (auto& [m, x] : nb) {
                if (side[s].count(x)) continue;
                side[s][x] = Edge{c, m, false};
                ++explored;
                if (side[1 - s].count(x)) {
                    Path pa = walk_back(side[0], x);
                    Path pb = walk_back(side[1], x);
                    return concat(pa, reverse_path(pb));
                }
                if (explored >= budget.max_nodes) return std::nullopt;
                next.push_back(std::move(x));
            }
        }
        frontier[s] = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

// drop exact loops and stop at the first cycle equal to the target
static MoveTrace shorten(const Divisor& src, const MoveTrace& t, const Divisor& target) {
    std::vector<Divisor> states{src};
    MoveTrace out;
    if (src == target) return out;
    for (const Move& m : t) {
        Divisor nx = apply_move(states.back(), m);
        auto again = std::find_if(states.begin(), states.end(), [&](const Divisor& s) { return s.same_sequence(nx); });
        if (again != states.end()) {
            const auto k = static_cast<std::size_t>(again - states.begin());
            states.resize(k + 1);
            out.resize(k);
            continue;
        }
        out.push_back(m);
        states.push_back(std::move(nx));
        if (states.back() == target) break;
    }
    return out;
}

EquivVerdict decide_equivalence(const Divisor& d1, const Divisor& d2, std::optional<SearchBudget> budget) {
    EquivVerdict v;
    v.bounds = budget ? *budget : default_budget(d1, d2);
    validate_budget(v.bounds);
    if (auto w = invariant_screen(d1, d2)) {
        v.kind = EquivKind::Distinct;
        v.witness = w;
        return v;
    }
    const Reduction n1 = normalize(d1), n2 = normalize(d2);
    const Path p1 = path_from_trace(d1, n1.trace);
    const Path p2 = reverse_path(path_from_trace(d2, n2.trace));
    auto mid = bfs(p1.nodes.back(), p2.nodes.front(), v.bounds, v.nodes_explored);
    if (!mid) {
        v.kind = EquivKind::Inconclusive;
        return v;
    }
    v.kind = EquivKind::Equivalent;
    v.trace = shorten(d1, materialize(d1, concat(concat(p1, *mid), p2)), d2);
    if (!(replay(d1, v.trace) == d2)) throw Error(ErrorKind::Internal, "certificate does not replay");
    return v;
}

}  // namespace csd
