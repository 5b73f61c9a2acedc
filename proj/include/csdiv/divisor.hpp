#pragma once

#include "csdiv/core.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace csd {

// Cyclic self-intersection sequence (s_1, ..., s_r), r >= 2.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(IntVec entries);
    Divisor(std::initializer_list<long> entries);

    const IntVec& entries() const { return s_; }
    std::size_t length() const { return s_.size(); }
    const Int& operator[](std::size_t i) const { return s_[i]; }

    // equality as cycles (rotation and reflection)
    friend bool operator==(const Divisor& a, const Divisor& b);
    // exact sequence equality
    bool same_sequence(const Divisor& o) const { return s_ == o.s_; }

private:
    IntVec s_;
};

// Position of a raw sequence relative to its canonical form:
//   canon[j] = raw[(offset + j) % r]        if !reflected
//   canon[j] = raw[(offset - j) mod r]      if  reflected
struct Alignment {
    std::size_t offset = 0;
    bool reflected = false;

    std::size_t pos_to_raw(std::size_t j, std::size_t r) const;
    std::size_t edge_to_raw(std::size_t j, std::size_t r) const;
    std::size_t pos_from_raw(std::size_t p, std::size_t r) const;
    std::size_t edge_from_raw(std::size_t e, std::size_t r) const;
};

IntVec canonical_entries(const IntVec& v, Alignment* align = nullptr);
Divisor canonical_form(const Divisor& d);
Divisor reversed(const Divisor& d);

Int charge(const Divisor& d);
Int self_intersection_square(const Divisor& d);
std::size_t nonnegative_count(const Divisor& d);

enum class MoveKind {
    ToricBlowUp,
    ToricBlowDown,
    Balancing,
    ZeroPairCollapse,
    NonToricBlowUp,
    Smoothing,
};

const char* move_name(MoveKind k);

struct Move {
    MoveKind kind;
    std::size_t index;  // edge for blow-up/smoothing, entry otherwise
    Int n = 0;          // balancing transfer
    bool operator==(const Move&) const = default;
};

using MoveTrace = std::vector<Move>;

Divisor toric_blow_up(const Divisor& d, std::size_t edge);
Divisor toric_blow_down(const Divisor& d, std::size_t i);
Divisor balancing_move(const Divisor& d, std::size_t zero_index, const Int& n);
Divisor zero_pair_collapse(const Divisor& d, std::size_t i);
Divisor non_toric_blow_up(const Divisor& d, std::size_t i);
Divisor smoothing(const Divisor& d, std::size_t edge);

// Primitive decompositions; replaying them yields the composite's result up to rotation.
MoveTrace balancing_primitives(const Divisor& d, std::size_t zero_index, const Int& n);
MoveTrace zero_pair_primitives(const Divisor& d, std::size_t i);

Divisor apply_move(const Divisor& d, const Move& m);
Divisor replay(const Divisor& d, const MoveTrace& t);
bool is_toric(MoveKind k);

// '(' int (',' int)* ')', whitespace allowed; any length >= 1
IntVec parse_entries(std::string_view text);
Divisor parse_divisor(std::string_view text);
std::string to_string(const Divisor& d);
std::string to_string(const IntVec& v);
// arrow notation, 1-based indices
std::string render_trace(const Divisor& source, const MoveTrace& t);

}  // namespace csd
