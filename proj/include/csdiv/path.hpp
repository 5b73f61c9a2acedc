#pragma once

#include "csdiv/divisor.hpp"

#include <vector>

namespace csd {

// A walk through canonical forms. steps[i] is expressed in the coordinates of nodes[i]
// and lands on a dihedral image of nodes[i+1].
struct Path {
    std::vector<IntVec> nodes;
    std::vector<Move> steps;
};

Path path_from_trace(const Divisor& source, const MoveTrace& t);
Path reverse_path(const Path& p);
Path concat(const Path& a, const Path& b);
// replay from any representative of nodes[0]; balancing steps expand into primitives
MoveTrace materialize(const Divisor& source, const Path& p);

// move index conversion between canonical coordinates and raw coordinates
Move move_to_raw(const Move& m, const Alignment& al, std::size_t r);
Move move_from_raw(const Move& m, const Alignment& al, std::size_t r);

}  // namespace csd
