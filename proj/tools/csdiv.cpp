#include "csdiv/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

using namespace csd;

namespace {

enum Exit { Ok = 0, ParseFail = 2, Precondition = 3, Inconclusive = 4 };

struct BudgetFlags {
    std::optional<std::size_t> max_nodes, max_length;
    std::optional<long> min_entry;

    void add(CLI::App* app) {
        app->add_option("--max-bfs-nodes", max_nodes, "node budget for equivalence search (env MAX_BFS_NODES)");
        app->add_option("--max-length", max_length, "longest cycle visited by the search (env MAX_LENGTH)");
        app->add_option("--min-entry", min_entry, "smallest entry visited by the search (env MIN_ENTRY)");
    }

    BudgetOverrides resolve() const {
        BudgetOverrides o;
        auto env = [](const char* name) -> std::optional<std::string> {
            const char* v = std::getenv(name);
            if (!v || !*v) return std::nullopt;
            return std::string(v);
        };
        auto num = [](const std::string& s, const char* name) -> long long {
            try {
                std::size_t used = 0;
                long long x = std::stoll(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                return x;
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, std::string(name) + " is not an integer: " + s, 0);
            }
        };
        if (max_nodes) o.max_nodes = *max_nodes;
        else if (auto e = env("MAX_BFS_NODES")) o.max_nodes = static_cast<std::size_t>(num(*e, "MAX_BFS_NODES"));
        if (max_length) o.max_length = *max_length;
        else if (auto e = env("MAX_LENGTH")) o.max_length = static_cast<std::size_t>(num(*e, "MAX_LENGTH"));
        if (min_entry) o.min_entry = Int(*min_entry);
        else if (auto e = env("MIN_ENTRY")) o.min_entry = Int(static_cast<long>(num(*e, "MIN_ENTRY")));
        return o;
    }
};

// json entry list in literal syntax
std::string cycle_text(const json& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].is_string() ? a[i].get<std::string>() : a[i].dump();
    }
    return s + ")";
}

std::string yesno(const json& j) { return j.is_null() ? "unknown" : (j.get<bool>() ? "yes" : "no"); }

std::string class_text(const json& c) {
    std::string s = c["kind"].get<std::string>();
    if (c["data"].is_array()) s += " " + c["data"].dump();
    else if (c["data"].is_string()) s += " " + c["data"].get<std::string>();
    else s += " n=" + c["data"].dump();
    return s;
}

void print_invariants_text(const json& r) {
    std::cout << "divisor        " << cycle_text(r["input"]) << "  canonical " << cycle_text(r["canonical"]) << "\n"
              << "r              " << r["r"] << "  (non-negative entries: " << r["r_nonneg"] << ")\n"
              << "charge q       " << r["q"] << "\n"
              << "D^2            " << r["D2"] << "\n"
              << "signature      (b+,b-,b0) = (" << r["signature"]["b_plus"] << "," << r["signature"]["b_minus"]
              << "," << r["signature"]["b_zero"] << ")\n"
              << "det Q          " << r["det"] << "\n"
              << "H1(Y_D)        " << r["h1_boundary"]["text"].get<std::string>() << "\n"
              << "monodromy      " << r["monodromy"].dump() << "\n"
              << "Y_D class      " << class_text(r["bundle_class"]) << "\n"
              << "-Y_D class     " << class_text(r["negative_boundary_class"]) << "\n";
}

Divisor divisor_from_json(const json& a) {
    IntVec v;
    for (const json& x : a) v.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long>()));
    return Divisor(std::move(v));
}

void print_trace_text(const Divisor& src, const json& trace) {
    static const MoveKind kinds[] = {MoveKind::ToricBlowUp,      MoveKind::ToricBlowDown,   MoveKind::Balancing,
                                     MoveKind::ZeroPairCollapse, MoveKind::NonToricBlowUp, MoveKind::Smoothing};
    MoveTrace t;
    for (const json& m : trace) {
        const std::string name = m["move"];
        MoveKind k = MoveKind::ToricBlowUp;
        for (MoveKind c : kinds)
            if (name == move_name(c)) k = c;
        const json& n = m["n"];
        t.push_back({k, m["index"].get<std::size_t>() - 1, n.is_string() ? Int(n.get<std::string>()) : Int(n.get<long>())});
    }
    std::cout << "  " << render_trace(src, t) << "\n";
}

void print_classify_text(const Divisor& d, const json& r) {
    print_invariants_text(r);
    const json& v = r["verdicts"];
    std::cout << "trichotomy     " << v["trichotomy"].get<std::string>() << "\n";
    if (v.contains("fillability")) {
        const json& f = v["fillability"];
        std::cout << "fillability    " << f["status"].get<std::string>() << " (" << f["reason"].get<std::string>() << ")";
        if (f.contains("family")) std::cout << " family " << f["family"];
        if (f.contains("parameters")) std::cout << " " << f["parameters"].get<std::string>();
        if (f.contains("representative")) std::cout << " representative " << cycle_text(f["representative"]);
        std::cout << "\n";
        if (f.contains("certificate") && !f["certificate"].empty()) print_trace_text(d, f["certificate"]);
    }
    if (v.contains("anti_canonical")) {
        const json& a = v["anti_canonical"];
        std::cout << "anti-canonical " << a["status"].get<std::string>();
        if (a["obstruction"] != "none") std::cout << " (" << a["obstruction"].get<std::string>() << ")";
        std::cout << "\n";
        if (a.contains("witness")) {
            std::cout << "  from " << a["witness"]["seed_family"].get<std::string>() << ":\n";
            print_trace_text(divisor_from_json(a["witness"]["seed"]), a["witness"]["trace"]);
        }
        if (a.contains("note")) std::cout << "  " << a["note"].get<std::string>() << "\n";
    }
    const json& g = v["rigidity"];
    std::cout << "embeddable     " << yesno(g["symplectically_embeddable"]) << "  rationally "
              << yesno(g["rationally_embeddable"]) << "  anti-canonical " << yesno(g["anti_canonical"]) << "  rigid "
              << yesno(g["rigid"]) << "\n";
    for (const auto& n : g["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
    if (r["fillings"].contains("minimal_filling")) {
        const json& h = r["fillings"]["minimal_filling"];
        std::cout << "filling        b1=" << h["b1"] << " b2=" << h["b2"] << " b3=" << h["b3"] << " (b+,b-,b0)=("
                  << h["b_plus"] << "," << h["b_minus"] << "," << h["b_zero"] << ") e=" << h["euler"]
                  << " sigma=" << h["sigma"] << " c1=0\n";
    }
    if (r["fillings"].contains("stein_geography")) {
        for (const json& c : r["fillings"]["stein_geography"]["cases"]) {
            std::cout << "stein case " << c["case"] << "   " << c["description"].get<std::string>();
            if (!c["b_minus"].is_null()) std::cout << ", b- = " << c["b_minus"];
            std::cout << "\n";
        }
    }
}

struct Range {
    long lo = -4, hi = 2;
};

Range parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw Error(ErrorKind::Parse, "entry range must look like a..b", 0);
    try {
        Range r{std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
        if (r.lo > r.hi) throw Error(ErrorKind::Parse, "empty entry range", 0);
        return r;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::Parse, "entry range must look like a..b", 0);
    }
}

// canonical cycles of length 2..max_len with entries in the range
std::vector<IntVec> canonical_cycles(std::size_t max_len, const Range& rg) {
    std::vector<IntVec> out;
    for (std::size_t r = 2; r <= max_len; ++r) {
        std::vector<long> v(r, rg.lo);
        for (;;) {
            IntVec x(v.begin(), v.end());
            if (canonical_entries(x) == x) out.push_back(std::move(x));
            std::size_t i = r;
            while (i > 0 && v[i - 1] == rg.hi) v[--i] = rg.lo;
            if (i == 0) break;
            ++v[i - 1];
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular spherical divisors: invariants, equivalence, fillability"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    std::string lit1, lit2;
    BudgetFlags bflags;

    auto* inv = app.add_subcommand("invariants", "lattice, homology and bundle invariants");
    inv->add_option("divisor", lit1, "e.g. \"(1,-2,-3)\"")->required();
    add_format(inv);

    auto* cls = app.add_subcommand("classify", "full report: trichotomy, fillability, anti-canonical search");
    cls->add_option("divisor", lit1)->required();
    bflags.add(cls);
    add_format(cls);

    auto* eq = app.add_subcommand("equiv", "decide toric equivalence with a replayable certificate");
    eq->add_option("first", lit1)->required();
    eq->add_option("second", lit2)->required();
    bflags.add(eq);
    add_format(eq);

    auto* du = app.add_subcommand("dual", "dual cusp cycle");
    du->add_option("cycle", lit1)->required();
    add_format(du);

    std::size_t en_len = 4;
    std::string en_range = "-4..2", en_out, en_kind = "full";
    unsigned en_jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* en = app.add_subcommand("enumerate", "JSON-lines reports for every canonical cycle in a box");
    en->add_option("--max-length", en_len, "longest cycle")->required();
    en->add_option("--entries", en_range, "entry range a..b")->required();
    en->add_option("--output,-o", en_out, "output path (default stdout)");
    en->add_option("--report", en_kind, "invariants or full")->check(CLI::IsMember({"invariants", "full"}));
    en->add_option("--jobs,-j", en_jobs, "worker threads");
    en->add_option("--max-bfs-nodes", bflags.max_nodes, "node budget for equivalence search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : ParseFail;
    }

    const bool js = format == "json";
    try {
        if (inv->parsed()) {
            Divisor d = parse_divisor(lit1);
            json r = invariants_report(d);
            if (js) std::cout << r.dump(2) << "\n";
            else print_invariants_text(r);
            return Ok;
        }
        if (cls->parsed()) {
            Divisor d = parse_divisor(lit1);
            ClassifyOptions opt;
            opt.budget = bflags.resolve();
            ClassifyResult res = classify_report(d, opt);
            if (js) std::cout << res.report.dump(2) << "\n";
            else print_classify_text(d, res.report);
            return res.inconclusive ? Inconclusive : Ok;
        }
        if (eq->parsed()) {
            Divisor a = parse_divisor(lit1), b = parse_divisor(lit2);
            EquivVerdict v = decide_equivalence(a, b, resolve_budget(bflags.resolve(), a, b));
            if (js) {
                json j = to_json(v);
                j["first"] = to_json(a);
                j["second"] = to_json(b);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << equiv_name(v.kind);
                if (v.witness)
                    for (const InvariantDiff& d : v.witness->all)
                        std::cout << "\n  " << d.name << ": " << d.first << " vs " << d.second;
                std::cout << "\n";
                if (v.kind == EquivKind::Equivalent) std::cout << "  " << render_trace(a, v.trace) << "\n";
                if (v.kind == EquivKind::Inconclusive)
                    std::cout << "  budget: " << to_json(v.bounds).dump() << ", nodes explored " << v.nodes_explored << "\n";
            }
            return v.kind == EquivKind::Inconclusive ? Inconclusive : Ok;
        }
        if (du->parsed()) {
            IntVec c = parse_entries(lit1);
            CuspCycle dc = dual_cusp(c);
            if (js) {
                json j = to_json(dc);
                j["input"] = to_json(c);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << to_string(dc.entries);
                if (dc.irreducible_nodal) std::cout << "  (irreducible nodal cusp)";
                std::cout << "\n";
            }
            return Ok;
        }
        if (en->parsed()) {
            if (en_len < 2) throw Error(ErrorKind::Parse, "--max-length must be at least 2", 0);
            const Range rg = parse_range(en_range);
            const std::vector<IntVec> cycles = canonical_cycles(en_len, rg);
            std::vector<std::string> lines(cycles.size());
            std::vector<bool> inconclusive(cycles.size(), false);
            ClassifyOptions opt;
            opt.budget = bflags.resolve();
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex fail_mu;
            auto worker = [&] {
                for (;;) {
                    std::size_t i = next++;
                    if (i >= cycles.size()) return;
                    try {
                        Divisor d(cycles[i]);
                        if (en_kind == "invariants") {
                            lines[i] = invariants_report(d).dump();
                        } else {
                            ClassifyResult res = classify_report(d, opt);
                            lines[i] = res.report.dump();
                            inconclusive[i] = res.inconclusive;
                        }
                    } catch (...) {
                        std::lock_guard<std::mutex> lk(fail_mu);
                        if (!failure) failure = std::current_exception();
                    }
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < std::max(1u, en_jobs); ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            if (failure) std::rethrow_exception(failure);
            // cycles were generated by length then lexicographically; keep that order
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!en_out.empty()) {
                file.open(en_out);
                if (!file) throw Error(ErrorKind::Parse, "cannot open " + en_out, 0);
                os = &file;
            }
            for (const std::string& l : lines) *os << l << "\n";
            std::size_t unresolved = static_cast<std::size_t>(std::count(inconclusive.begin(), inconclusive.end(), true));
            std::cerr << cycles.size() << " canonical cycles written";
            if (unresolved) std::cerr << ", " << unresolved << " inconclusive";
            std::cerr << "\n";
            return Ok;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse ? ParseFail : Precondition;
    }
    return Ok;
}
