#pragma once

#include "csdiv/divisor.hpp"
#include "csdiv/path.hpp"

#include <optional>
#include <string>

namespace csd {

struct SearchBudget {
    std::size_t max_length = 0;
    Int min_entry = 0;
    std::size_t max_nodes = 200000;
};

// partial budget; unset fields fall back to default_budget
struct BudgetOverrides {
    std::optional<std::size_t> max_length;
    std::optional<Int> min_entry;
    std::optional<std::size_t> max_nodes;
    bool empty() const { return !max_length && !min_entry && !max_nodes; }
};

struct InvariantDiff {
    std::string name;  // charge | b_plus | b_zero | bundle_class
    std::string first, second;
};

// first differing invariant in the order charge, b_plus, b_zero, bundle_class; `all` lists every one
struct InvariantWitness {
    std::string name;
    std::string first, second;
    std::vector<InvariantDiff> all;
};

enum class EquivKind { Equivalent, Distinct, Inconclusive };
const char* equiv_name(EquivKind k);

struct EquivVerdict {
    EquivKind kind = EquivKind::Inconclusive;
    MoveTrace trace;  // replays from the first divisor onto the second (as cycles)
    std::optional<InvariantWitness> witness;
    SearchBudget bounds;
    std::size_t nodes_explored = 0;
};

struct Reduction {
    Divisor result;
    MoveTrace trace;
};

void validate_budget(const SearchBudget& b);
SearchBudget default_budget(const Divisor& d1, const Divisor& d2);
SearchBudget resolve_budget(const BudgetOverrides& o, const Divisor& d1, const Divisor& d2);
std::optional<InvariantWitness> invariant_screen(const Divisor& d1, const Divisor& d2);
Reduction toric_minimal_reduction(const Divisor& d);
// blow-downs, then balancing + zero-pair collapse while a 0 survives at length >= 3
Reduction normalize(const Divisor& d);
EquivVerdict decide_equivalence(const Divisor& d1, const Divisor& d2, std::optional<SearchBudget> budget = std::nullopt);
bool is_toric_minimal(const Divisor& d);

}  // namespace csd
