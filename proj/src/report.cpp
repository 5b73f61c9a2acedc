#include "csdiv/report.hpp"

namespace csd {

json to_json(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

json to_json(const Rat& x) { return json{{"num", to_json(Int(x.get_num()))}, {"den", to_json(Int(x.get_den()))}}; }

json to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const Divisor& d) { return to_json(d.entries()); }

json to_json(const Signature& s) {
    return {{"b_plus", s.b_plus}, {"b_minus", s.b_minus}, {"b_zero", s.b_zero}};
}

json to_json(const AbelianGroup& g) {
    return {{"free_rank", g.free_rank}, {"torsion", to_json(g.torsion)}, {"text", g.to_string()}};
}

json to_json(const SL2& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const BundleClass& c) {
    json j{{"kind", kind_name(c.kind)}, {"sign", c.sign > 0 ? "+" : "-"}};
    switch (c.kind) {
        case BundleKind::Elliptic: j["data"] = c.label; break;
        case BundleKind::PositiveParabolic:
        case BundleKind::NegativeParabolic: j["data"] = to_json(c.n); break;
        default: j["data"] = to_json(c.word); break;
    }
    return j;
}

json to_json(const MoveTrace& t) {
    json a = json::array();
    for (const Move& m : t) a.push_back({{"move", move_name(m.kind)}, {"index", m.index + 1}, {"n", to_json(m.n)}});
    return a;
}

json to_json(const SearchBudget& b) {
    return {{"max_length", b.max_length}, {"min_entry", to_json(b.min_entry)}, {"max_nodes", b.max_nodes}};
}

static json to_json(const RatVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const GsCertificate& c) { return {{"z", to_json(c.z)}, {"a", to_json(c.a)}}; }

json to_json(const ConvexityVerdict& v) {
    json j{{"feasible", v.feasible}};
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    if (v.witness) j["farkas"] = to_json(v.witness->u);
    return j;
}

json to_json(const EquivVerdict& v) {
    json j{{"verdict", equiv_name(v.kind)}, {"bounds", to_json(v.bounds)}, {"nodes_explored", v.nodes_explored}};
    if (v.kind == EquivKind::Equivalent) j["trace"] = to_json(v.trace);
    if (v.witness) {
        json all = json::array();
        for (const InvariantDiff& d : v.witness->all)
            all.push_back({{"invariant", d.name}, {"values", {d.first, d.second}}});
        j["witness"] = {{"invariant", v.witness->name}, {"values", {v.witness->first, v.witness->second}}, {"differing", all}};
    }
    return j;
}

json to_json(const BlowUpWitness& w) {
    return {{"seed", to_json(w.seed)},
            {"seed_family", w.seed_family},
            {"toric_stage", to_json(w.toric_stage)},
            {"non_toric", w.non_toric},
            {"trace", to_json(w.trace)}};
}

json to_json(const FillabilityVerdict& v) {
    json j{{"status", fill_status_name(v.status)},
           {"reason", fill_reason_name(v.reason)},
           {"negative_boundary_class", to_json(v.negative_boundary)}};
    if (v.family) j["family"] = v.family;
    if (!v.parameters.empty()) j["parameters"] = v.parameters;
    if (v.representative) j["representative"] = to_json(*v.representative);
    if (v.status == FillStatus::Fillable) j["certificate"] = to_json(v.certificate);
    return j;
}

json to_json(const AntiCanonicalVerdict& v) {
    json j{{"status", ac_status_name(v.status)},
           {"obstruction", ac_obstruction_name(v.obstruction)},
           {"nodes_explored", v.nodes_explored}};
    if (v.witness) j["witness"] = to_json(*v.witness);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json to_json(const RigidityReport& r) {
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    return {{"symplectically_embeddable", opt(r.symplectically_embeddable)},
            {"rationally_embeddable", opt(r.rationally_embeddable)},
            {"anti_canonical", opt(r.anti_canonical)},
            {"rigid", opt(r.rigid)},
            {"notes", r.notes}};
}

json to_json(const FillingHomology& h) {
    return {{"b1", to_json(h.b1)},         {"b2", to_json(h.b2)},       {"b3", to_json(h.b3)},
            {"b_plus", to_json(h.b_plus)}, {"b_minus", to_json(h.b_minus)}, {"b_zero", to_json(h.b_zero)},
            {"euler", to_json(h.euler)},   {"sigma", to_json(h.sigma)}, {"c1_zero", h.c1_zero},
            {"note", "b1 follows b1(Y_D) - 1 = b0(Q_D)"}};
}

json to_json(const CapInvariants& c) {
    json j{{"euler", to_json(c.euler)}, {"sigma", to_json(c.sigma)}};
    if (c.b2) j["b2"] = to_json(*c.b2);
    if (c.b1) j["b1"] = to_json(*c.b1);
    if (c.b0) j["b0"] = to_json(*c.b0);
    return j;
}

json to_json(const CuspCycle& c) {
    return {{"entries", to_json(c.entries)}, {"irreducible_nodal", c.irreducible_nodal}};
}

json to_json(const GeographyReport& g) {
    json cases = json::array();
    for (const GeographyCase& c : g.cases) {
        json j{{"case", c.index},
               {"b_plus", to_json(c.b_plus)},
               {"b_zero", to_json(c.b_zero)},
               {"b1", to_json(c.b1)},
               {"description", c.description}};
        j["b_minus"] = c.b_minus ? to_json(*c.b_minus) : json(nullptr);
        cases.push_back(j);
    }
    return {{"q", to_json(g.q)}, {"cases", cases}};
}

json invariants_report(const Divisor& d) {
    const IntMatrix q = intersection_matrix(d);
    const SL2 a = monodromy(d);
    const AbelianGroup h1 = boundary_h1(d);
    return {{"input", to_json(d)},
            {"canonical", to_json(canonical_form(d))},
            {"r", d.length()},
            {"q", to_json(charge(d))},
            {"D2", to_json(self_intersection_square(d))},
            {"r_nonneg", nonnegative_count(d)},
            {"intersection_matrix", to_json(q)},
            {"det", to_json(determinant(q))},
            {"signature", to_json(signature(q))},
            {"h1_boundary", to_json(h1)},
            {"b1_boundary", h1.free_rank},
            {"monodromy", to_json(a)},
            {"bundle_class", to_json(conjugacy_canon(a))},
            {"negative_boundary_class", to_json(negative_boundary_class(d))}};
}

ClassifyResult classify_report(const Divisor& d, const ClassifyOptions& opt) {
    ClassifyResult res;
    json rep = invariants_report(d);
    const Signature sg = signature(d);
    const Trichotomy tri = trichotomy(sg);
    json verdicts{{"trichotomy", trichotomy_name(tri)},
                  {"gs_concave", to_json(gs_feasible(d, GsMode::Concave))},
                  {"gs_convex", to_json(gs_feasible(d, GsMode::Convex))}};
    json fillings = json::object();
    std::optional<FillabilityVerdict> fv;
    std::optional<AntiCanonicalVerdict> av;
    if (tri == Trichotomy::Concave) {
        fv = classify_fillability(d, opt.budget);
        verdicts["fillability"] = to_json(*fv);
        if (fv->status == FillStatus::Inconclusive) res.inconclusive = true;
        if (fv->status == FillStatus::Fillable) {
            FillingHomology h = minimal_filling_homology(d, *fv);
            fillings["minimal_filling"] = to_json(h);
        }
    } else if (tri == Trichotomy::Convex) {
        av = anticanonical_search(d, opt.search_nodes);
        verdicts["anti_canonical"] = to_json(*av);
        if (av->status == AcStatus::Inconclusive) res.inconclusive = true;
        if (av->status == AcStatus::AntiCanonical) fillings["stein_geography"] = to_json(stein_geography(d));
    } else {
        av = strictly_semidefinite_report(d, opt.search_nodes);
        verdicts["anti_canonical"] = to_json(*av);
        verdicts["note"] = "rationally embeddable iff anti-canonical is conjectural for semi-definite cycles";
    }
    verdicts["rigidity"] = to_json(rigidity_report(d, fv ? &*fv : nullptr, av ? &*av : nullptr));
    rep["verdicts"] = verdicts;
    rep["fillings"] = fillings;
    rep["cap"] = to_json(cap_invariants(d, Int(0)));
    rep["cap"].erase("b2");
    res.report = std::move(rep);
    return res;
}

}  // namespace csd
