#include "csdiv/divisor.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace csd {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::TooShort: return "TooShort";
        case ErrorKind::IndexRange: return "IndexRange";
        case ErrorKind::NotExceptional: return "NotExceptional";
        case ErrorKind::LengthTwo: return "LengthTwo";
        case ErrorKind::NotZero: return "NotZero";
        case ErrorKind::NotZeroPair: return "NotZeroPair";
        case ErrorKind::BudgetInvalid: return "BudgetInvalid";
        case ErrorKind::WrongShape: return "WrongShape";
        case ErrorKind::NotConcave: return "NotConcave";
        case ErrorKind::NotSemidefinite: return "NotSemidefinite";
        case ErrorKind::NotFillable: return "NotFillable";
        case ErrorKind::NotCuspShape: return "NotCuspShape";
        case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
        case ErrorKind::Internal: return "Internal";
    }
    return "Error";
}

Divisor::Divisor(IntVec entries) : s_(std::move(entries)) {
    if (s_.size() < 2) throw Error(ErrorKind::TooShort, "a divisor needs at least two components");
}

Divisor::Divisor(std::initializer_list<long> entries) {
    for (long x : entries) s_.emplace_back(x);
    if (s_.size() < 2) throw Error(ErrorKind::TooShort, "a divisor needs at least two components");
}

bool operator==(const Divisor& a, const Divisor& b) {
    if (a.length() != b.length()) return false;
    return canonical_entries(a.entries()) == canonical_entries(b.entries());
}

static std::size_t mod(long long a, std::size_t r) {
    long long m = a % static_cast<long long>(r);
    return static_cast<std::size_t>(m < 0 ? m + static_cast<long long>(r) : m);
}

std::size_t Alignment::pos_to_raw(std::size_t j, std::size_t r) const {
    return reflected ? mod(static_cast<long long>(offset) - static_cast<long long>(j), r) : (offset + j) % r;
}
std::size_t Alignment::edge_to_raw(std::size_t j, std::size_t r) const {
    return reflected ? mod(static_cast<long long>(offset) - static_cast<long long>(j) - 1, r) : (offset + j) % r;
}
std::size_t Alignment::pos_from_raw(std::size_t p, std::size_t r) const {
    return reflected ? mod(static_cast<long long>(offset) - static_cast<long long>(p), r)
                     : mod(static_cast<long long>(p) - static_cast<long long>(offset), r);
}
std::size_t Alignment::edge_from_raw(std::size_t e, std::size_t r) const {
    return reflected ? mod(static_cast<long long>(offset) - 1 - static_cast<long long>(e), r)
                     : mod(static_cast<long long>(e) - static_cast<long long>(offset), r);
}

IntVec canonical_entries(const IntVec& v, Alignment* align) {
    const std::size_t r = v.size();
    Alignment best{0, false};
    auto at = [&](const Alignment& a, std::size_t j) -> const Int& { return v[a.pos_to_raw(j, r)]; };
    for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t o = 0; o < r; ++o) {
            Alignment cand{o, refl == 1};
            for (std::size_t j = 0; j < r; ++j) {
                int c = cmp(at(cand, j), at(best, j));
                if (c < 0) { best = cand; break; }
                if (c > 0) break;
            }
        }
    }
    IntVec out(r);
    for (std::size_t j = 0; j < r; ++j) out[j] = at(best, j);
    if (align) *align = best;
    return out;
}

Divisor canonical_form(const Divisor& d) { return Divisor(canonical_entries(d.entries())); }

Divisor reversed(const Divisor& d) {
    IntVec v(d.entries().rbegin(), d.entries().rend());
    return Divisor(std::move(v));
}

Int charge(const Divisor& d) {
    Int sum = 0;
    for (const Int& x : d.entries()) sum += x;
    return Int(12) - 3 * Int(static_cast<unsigned long>(d.length())) - sum;
}

Int self_intersection_square(const Divisor& d) {
    Int sum = 0;
    for (const Int& x : d.entries()) sum += x + 2;
    return sum;
}

std::size_t nonnegative_count(const Divisor& d) {
    return static_cast<std::size_t>(std::count_if(d.entries().begin(), d.entries().end(),
                                                  [](const Int& x) { return sgn(x) >= 0; }));
}

const char* move_name(MoveKind k) {
    switch (k) {
        case MoveKind::ToricBlowUp: return "toric_blow_up";
        case MoveKind::ToricBlowDown: return "toric_blow_down";
        case MoveKind::Balancing: return "balancing";
        case MoveKind::ZeroPairCollapse: return "zero_pair_collapse";
        case MoveKind::NonToricBlowUp: return "non_toric_blow_up";
        case MoveKind::Smoothing: return "smoothing";
    }
    return "?";
}

bool is_toric(MoveKind k) {
    return k == MoveKind::ToricBlowUp || k == MoveKind::ToricBlowDown || k == MoveKind::Balancing ||
           k == MoveKind::ZeroPairCollapse;
}

static void check_index(const Divisor& d, std::size_t i) {
    if (i >= d.length())
        throw Error(ErrorKind::IndexRange, "index " + std::to_string(i) + " out of range for length " +
                                               std::to_string(d.length()));
}

Divisor toric_blow_up(const Divisor& d, std::size_t edge) {
    check_index(d, edge);
    const std::size_t r = d.length();
    IntVec v = d.entries();
    v[edge] -= 1;
    v[(edge + 1) % r] -= 1;
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(edge + 1), Int(-1));
    return Divisor(std::move(v));
}

Divisor toric_blow_down(const Divisor& d, std::size_t i) {
    check_index(d, i);
    if (d[i] != -1) throw Error(ErrorKind::NotExceptional, "entry " + d[i].get_str() + " is not -1");
    const std::size_t r = d.length();
    if (r == 2) throw Error(ErrorKind::LengthTwo, "cannot blow down a length-2 divisor");
    IntVec v = d.entries();
    v[(i + r - 1) % r] += 1;
    v[(i + 1) % r] += 1;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    return Divisor(std::move(v));
}

Divisor balancing_move(const Divisor& d, std::size_t zero_index, const Int& n) {
    check_index(d, zero_index);
    if (d[zero_index] != 0) throw Error(ErrorKind::NotZero, "pivot entry " + d[zero_index].get_str() + " is not 0");
    const std::size_t r = d.length();
    if (r == 2) throw Error(ErrorKind::LengthTwo, "balancing needs length at least 3");
    IntVec v = d.entries();
    v[(zero_index + r - 1) % r] -= n;
    v[(zero_index + 1) % r] += n;
    return Divisor(std::move(v));
}

Divisor zero_pair_collapse(const Divisor& d, std::size_t i) {
    check_index(d, i);
    const std::size_t r = d.length();
    if (r == 2) throw Error(ErrorKind::LengthTwo, "zero-pair collapse needs length at least 3");
    const std::size_t j = (i + 1) % r;
    if (d[i] != 0 || d[j] != 0) throw Error(ErrorKind::NotZeroPair, "entries are not (0,0)");
    // rotate so the pair sits in front
    IntVec x(r);
    for (std::size_t k = 0; k < r; ++k) x[k] = d[(i + k) % r];
    IntVec out;
    if (r == 3) {
        out = {Int(1), x[2] + 2};
    } else {
        out.push_back(Int(1));
        for (std::size_t k = 2; k < r; ++k) out.push_back(x[k]);
        out[1] += 1;
        out.back() += 1;
    }
    return Divisor(std::move(out));
}

Divisor non_toric_blow_up(const Divisor& d, std::size_t i) {
    check_index(d, i);
    IntVec v = d.entries();
    v[i] -= 1;
    return Divisor(std::move(v));
}

Divisor smoothing(const Divisor& d, std::size_t edge) {
    check_index(d, edge);
    const std::size_t r = d.length();
    if (r == 2) throw Error(ErrorKind::LengthTwo, "smoothing a length-2 divisor leaves a torus");
    const std::size_t j = (edge + 1) % r;
    IntVec v = d.entries();
    v[edge] = d[edge] + d[j] + 2;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
    return Divisor(std::move(v));
}

MoveTrace balancing_primitives(const Divisor& d, std::size_t zero_index, const Int& n) {
    balancing_move(d, zero_index, n);  // precondition check
    MoveTrace t;
    Divisor cur = d;
    std::size_t z = zero_index;
    const bool forward = sgn(n) > 0;
    Int count = abs(n);
    for (Int c = 0; c < count; ++c) {
        const std::size_t r = cur.length();
        // blow up on the side that loses, then blow down the old zero
        std::size_t edge = forward ? (z + r - 1) % r : z;
        std::size_t ins = edge + 1;
        std::size_t zi = z >= ins ? z + 1 : z;
        std::size_t newz = ins;  // the inserted -1 becomes the new zero
        t.push_back({MoveKind::ToricBlowUp, edge, 0});
        cur = toric_blow_up(cur, edge);
        t.push_back({MoveKind::ToricBlowDown, zi, 0});
        cur = toric_blow_down(cur, zi);
        z = newz > zi ? newz - 1 : newz;
    }
    return t;
}

MoveTrace zero_pair_primitives(const Divisor& d, std::size_t i) {
    zero_pair_collapse(d, i);  // precondition check
    const std::size_t r = d.length();
    // (0,0,...) -> (-1,-1,-1,...) -> (0,-1,...) -> (1,...)
    const std::size_t second = (i + 1 < r) ? i + 1 : 0;
    return {{MoveKind::ToricBlowUp, i, 0}, {MoveKind::ToricBlowDown, i, 0}, {MoveKind::ToricBlowDown, second, 0}};
}

Divisor apply_move(const Divisor& d, const Move& m) {
    switch (m.kind) {
        case MoveKind::ToricBlowUp: return toric_blow_up(d, m.index);
        case MoveKind::ToricBlowDown: return toric_blow_down(d, m.index);
        case MoveKind::Balancing: return balancing_move(d, m.index, m.n);
        case MoveKind::ZeroPairCollapse: return zero_pair_collapse(d, m.index);
        case MoveKind::NonToricBlowUp: return non_toric_blow_up(d, m.index);
        case MoveKind::Smoothing: return smoothing(d, m.index);
    }
    throw Error(ErrorKind::Internal, "unknown move");
}

Divisor replay(const Divisor& d, const MoveTrace& t) {
    Divisor cur = d;
    for (const Move& m : t) cur = apply_move(cur, m);
    return cur;
}

IntVec parse_entries(std::string_view text) {
    std::size_t p = 0;
    auto ws = [&] { while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p; };
    auto fail = [&](const std::string& what) -> Error {
        return Error(ErrorKind::Parse, what + " at position " + std::to_string(p), p);
    };
    ws();
    if (p >= text.size() || text[p] != '(') throw fail("expected '('");
    ++p;
    IntVec v;
    for (;;) {
        ws();
        std::size_t start = p;
        if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
        std::size_t digits = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == digits) { p = start; throw fail("expected integer"); }
        std::string tok(text.substr(start, p - start));
        if (tok[0] == '+') tok.erase(0, 1);
        v.emplace_back(tok, 10);
        ws();
        if (p < text.size() && text[p] == ',') { ++p; continue; }
        if (p < text.size() && text[p] == ')') { ++p; break; }
        throw fail("expected ',' or ')'");
    }
    ws();
    if (p != text.size()) throw fail("trailing characters");
    return v;
}

Divisor parse_divisor(std::string_view text) {
    IntVec v = parse_entries(text);
    if (v.size() < 2) throw Error(ErrorKind::Parse, "a divisor needs at least two entries", 0);
    return Divisor(std::move(v));
}

std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string to_string(const Divisor& d) { return to_string(d.entries()); }

std::string render_trace(const Divisor& source, const MoveTrace& t) {
    std::ostringstream os;
    os << to_string(source);
    Divisor cur = source;
    for (const Move& m : t) {
        cur = apply_move(cur, m);
        os << " -[" << move_name(m.kind) << " " << (m.index + 1);
        if (m.kind == MoveKind::Balancing) os << " n=" << m.n.get_str();
        os << "]-> " << to_string(cur);
    }
    return os.str();
}

}  // namespace csd
