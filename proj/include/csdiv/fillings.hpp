#pragma once

#include "csdiv/classify.hpp"
#include "csdiv/divisor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csd {

struct FillingHomology {
    Int b1, b2, b3, b_plus, b_minus, b_zero;
    Int euler, sigma;
    bool c1_zero = true;
    bool identities_hold() const;
};

FillingHomology minimal_filling_homology(const Divisor& d, const FillabilityVerdict& f);

struct CapInvariants {
    Int euler, sigma;
    std::optional<Int> b2, b1, b0;  // only when Q_D is nonsingular
};
CapInvariants cap_invariants(const Divisor& d, const Int& ambient_b2);

struct CuspCycle {
    IntVec entries;
    bool irreducible_nodal = false;  // length one, entry <= -3
};

CuspCycle dual_cusp(const IntVec& c);
// same map on machine words; used for exhaustive sweeps
std::vector<long> dual_cusp_word(const std::vector<long>& c);
CuspCycle dual_cusp(const Divisor& d);

struct GeographyCase {
    int index;  // 1, 2 or 3
    Int b_plus, b_zero, b1;
    std::optional<Int> b_minus;  // absent for case 1 (negative definite, b1 = 1)
    std::string description;
};

struct GeographyReport {
    Int q;
    std::vector<GeographyCase> cases;
};

GeographyReport stein_geography(const Divisor& d);

}  // namespace csd
