#include "csdiv/path.hpp"

namespace csd {

static bool edge_indexed(MoveKind k) { return k == MoveKind::ToricBlowUp || k == MoveKind::Smoothing; }

Move move_to_raw(const Move& m, const Alignment& al, std::size_t r) {
    Move out = m;
    if (edge_indexed(m.kind)) {
        out.index = al.edge_to_raw(m.index, r);
    } else if (m.kind == MoveKind::ZeroPairCollapse) {
        // pair (j, j+1) is the edge j
        out.index = al.edge_to_raw(m.index, r);
    } else {
        out.index = al.pos_to_raw(m.index, r);
    }
    // predecessor and successor swap under reflection
    if (m.kind == MoveKind::Balancing && al.reflected) out.n = -m.n;
    return out;
}

Move move_from_raw(const Move& m, const Alignment& al, std::size_t r) {
    Move out = m;
    if (edge_indexed(m.kind) || m.kind == MoveKind::ZeroPairCollapse) out.index = al.edge_from_raw(m.index, r);
    else out.index = al.pos_from_raw(m.index, r);
    if (m.kind == MoveKind::Balancing && al.reflected) out.n = -m.n;
    return out;
}

Path path_from_trace(const Divisor& source, const MoveTrace& t) {
    Path p;
    Divisor cur = source;
    Alignment al;
    p.nodes.push_back(canonical_entries(cur.entries(), &al));
    for (const Move& m : t) {
        p.steps.push_back(move_from_raw(m, al, cur.length()));
        cur = apply_move(cur, m);
        p.nodes.push_back(canonical_entries(cur.entries(), &al));
    }
    return p;
}

static Move inverse_raw(const Divisor& before, const Move& m) {
    // inverse of m, in the raw coordinates of apply_move(before, m)
    const std::size_t r = before.length();
    switch (m.kind) {
        case MoveKind::ToricBlowUp: return {MoveKind::ToricBlowDown, m.index + 1, 0};
        case MoveKind::ToricBlowDown: return {MoveKind::ToricBlowUp, (m.index + (r - 1) - 1) % (r - 1), 0};
        case MoveKind::Balancing: return {MoveKind::Balancing, m.index, -m.n};
        default: throw Error(ErrorKind::Internal, std::string("no inverse for ") + move_name(m.kind));
    }
}

Path reverse_path(const Path& p) {
    Path out;
    out.nodes.assign(p.nodes.rbegin(), p.nodes.rend());
    for (std::size_t i = p.steps.size(); i-- > 0;) {
        const Divisor c(p.nodes[i]);
        const Divisor x = apply_move(c, p.steps[i]);
        Alignment al;
        IntVec cx = canonical_entries(x.entries(), &al);
        if (cx != p.nodes[i + 1]) throw Error(ErrorKind::Internal, "path does not match its nodes");
        out.steps.push_back(move_from_raw(inverse_raw(c, p.steps[i]), al, x.length()));
    }
    return out;
}

Path concat(const Path& a, const Path& b) {
    if (a.nodes.empty()) return b;
    if (b.nodes.empty()) return a;
    if (a.nodes.back() != b.nodes.front()) throw Error(ErrorKind::Internal, "paths do not meet");
    Path out = a;
    out.nodes.insert(out.nodes.end(), b.nodes.begin() + 1, b.nodes.end());
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

MoveTrace materialize(const Divisor& source, const Path& p) {
    MoveTrace t;
    Divisor cur = source;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        Alignment al;
        if (canonical_entries(cur.entries(), &al) != p.nodes[i]) throw Error(ErrorKind::Internal, "replay left the path");
        Move m = move_to_raw(p.steps[i], al, cur.length());
        if (m.kind == MoveKind::Balancing) {
            for (const Move& prim : balancing_primitives(cur, m.index, m.n)) {
                cur = apply_move(cur, prim);
                t.push_back(prim);
            }
        } else if (m.kind == MoveKind::ZeroPairCollapse) {
            for (const Move& prim : zero_pair_primitives(cur, m.index)) {
                cur = apply_move(cur, prim);
                t.push_back(prim);
            }
        } else {
            cur = apply_move(cur, m);
            t.push_back(m);
        }
    }
    return t;
}

}  // namespace csd
