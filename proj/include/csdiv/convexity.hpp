#pragma once

#include "csdiv/core.hpp"
#include "csdiv/divisor.hpp"
#include "csdiv/lattice.hpp"

#include <optional>
#include <vector>

namespace csd {

using RatVec = std::vector<Rat>;

enum class GsMode { Concave, Convex };
enum class Trichotomy { Concave, Convex, Neither };
const char* trichotomy_name(Trichotomy t);

struct GsCertificate {
    RatVec z;
    RatVec a;  // Q z
};

// u >= 0, u^T G <= 0, u^T h > 0 for the system G y >= h, y >= 0 (see gs_system)
struct FarkasWitness {
    RatVec u;
};

struct ConvexityVerdict {
    bool feasible = false;
    std::optional<GsCertificate> certificate;
    std::optional<FarkasWitness> witness;
};

// Substitution used by the LP: concave z = 1 + y, convex z = -y.
struct GsSystem {
    std::vector<RatVec> G;
    RatVec h;
};
GsSystem gs_system(const Divisor& d, GsMode mode);

ConvexityVerdict gs_feasible(const Divisor& d, GsMode mode);
bool certificate_valid(const Divisor& d, GsMode mode, const GsCertificate& c);
bool witness_valid(const Divisor& d, GsMode mode, const FarkasWitness& w);
Trichotomy trichotomy(const Divisor& d);
Trichotomy trichotomy(const Signature& s);

// some z with Q z = a, if one exists
std::optional<RatVec> solve_area(const Divisor& d, const RatVec& a);

// Exact feasibility of {y >= 0, G y >= h}; returns y, or fills the Farkas vector.
std::optional<RatVec> feasible_point(const std::vector<RatVec>& G, const RatVec& h, RatVec* farkas);

}  // namespace csd
