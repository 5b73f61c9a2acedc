#pragma once

#include "csdiv/divisor.hpp"
#include "csdiv/equiv.hpp"
#include "csdiv/sl2z.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csd {

// Toric blow-ups of a seed followed by non-toric blow-ups.
struct BlowUpWitness {
    Divisor seed;
    MoveTrace trace;        // toric moves first, then non-toric decrements
    Divisor toric_stage;    // after the toric phase
    std::size_t non_toric = 0;
    std::string seed_family;  // e.g. "(2b,0,-2b,0) b=0"
};

struct BlownUpResult {
    bool blown_up = false;
    std::optional<BlowUpWitness> witness;
    std::size_t nodes_explored = 0;
};

// (1, 1-p_1, -p_2, ..., -p_{l-1}, 1-p_l), p_i >= 2, l >= 2, up to rotation/reflection
std::optional<IntVec> family4_parameters(const Divisor& d);
Divisor family4_divisor(const IntVec& p);
BlownUpResult blown_up_check(const Divisor& d, std::size_t max_nodes = 2000000);

enum class FillStatus { Fillable, NotFillable, Inconclusive };
enum class FillReason { BPlusAtLeastTwo, BundleMismatch, NotBlownUp, Certificate, Budget };
const char* fill_status_name(FillStatus s);
const char* fill_reason_name(FillReason r);

struct FillabilityVerdict {
    FillStatus status = FillStatus::Inconclusive;
    int family = 0;              // 1..4 when a family member is matched
    std::string parameters;      // e.g. "p=4"
    std::optional<Divisor> representative;
    FillReason reason = FillReason::Budget;
    MoveTrace certificate;       // from the input to the representative
    BundleClass negative_boundary;
};

FillabilityVerdict classify_fillability(const Divisor& d, const BudgetOverrides& budget = {});

enum class AcStatus { AntiCanonical, NotAntiCanonical, Inconclusive };
enum class AcObstruction { None, ChargeDeficit, ExhaustiveSearch, SemidefiniteBound };
const char* ac_status_name(AcStatus s);
const char* ac_obstruction_name(AcObstruction o);

struct AntiCanonicalVerdict {
    AcStatus status = AcStatus::Inconclusive;
    std::optional<BlowUpWitness> witness;
    AcObstruction obstruction = AcObstruction::None;
    std::size_t nodes_explored = 0;
    std::string note;
};

struct Seed {
    Divisor d;
    std::string family;
};
// minimal-model cycles whose entries are all >= min_entry and length <= max_length
std::vector<Seed> minimal_model_seeds(const Int& min_entry, std::size_t max_length);

AntiCanonicalVerdict anticanonical_search(const Divisor& d, std::size_t max_nodes = 2000000);
AntiCanonicalVerdict strictly_semidefinite_report(const Divisor& d, std::size_t max_nodes = 2000000);

struct RigidityReport {
    std::optional<bool> symplectically_embeddable, rationally_embeddable, anti_canonical, rigid;
    std::vector<std::string> notes;
};
RigidityReport rigidity_report(const Divisor& d, const FillabilityVerdict* f, const AntiCanonicalVerdict* ac);

}  // namespace csd
