#pragma once

#include "csdiv/classify.hpp"
#include "csdiv/convexity.hpp"
#include "csdiv/equiv.hpp"
#include "csdiv/fillings.hpp"
#include "csdiv/lattice.hpp"
#include "csdiv/sl2z.hpp"

#include <json.hpp>

namespace csd {

using nlohmann::json;

// integers as JSON numbers when they fit in 64 bits, decimal strings otherwise
json to_json(const Int& x);
json to_json(const Rat& x);
json to_json(const IntVec& v);
json to_json(const Divisor& d);
json to_json(const Signature& s);
json to_json(const AbelianGroup& g);
json to_json(const SL2& m);
json to_json(const IntMatrix& m);
json to_json(const BundleClass& c);
json to_json(const MoveTrace& t);
json to_json(const SearchBudget& b);
json to_json(const GsCertificate& c);
json to_json(const ConvexityVerdict& v);
json to_json(const EquivVerdict& v);
json to_json(const BlowUpWitness& w);
json to_json(const FillabilityVerdict& v);
json to_json(const AntiCanonicalVerdict& v);
json to_json(const RigidityReport& r);
json to_json(const FillingHomology& h);
json to_json(const CapInvariants& c);
json to_json(const CuspCycle& c);
json to_json(const GeographyReport& g);

json invariants_report(const Divisor& d);

struct ClassifyOptions {
    BudgetOverrides budget;
    std::size_t search_nodes = 2000000;
};

struct ClassifyResult {
    json report;
    bool inconclusive = false;
};

ClassifyResult classify_report(const Divisor& d, const ClassifyOptions& opt = {});

}  // namespace csd
