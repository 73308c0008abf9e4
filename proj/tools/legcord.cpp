#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "legcord/census.hpp"
#include "legcord/front.hpp"
#include "legcord/grid.hpp"
#include "legcord/obstruct.hpp"
#include "legcord/planar.hpp"
#include "legcord/rulings.hpp"
#include "legcord/skein.hpp"

using namespace legcord;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "legcord/1";
constexpr int64_t kDefaultSimplifyBudget = 1000000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "json";
    uint64_t seed = 0;
    int jobs = 1;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

GridDiagram read_grid(const std::string& path) { return grid_from_json(slurp(path)); }

// A front word, or a JSON grid converted to its front.
FrontWord read_front(const std::string& path) {
    std::string text = slurp(path);
    if (looks_like_json(text)) return grid_to_front(grid_from_json(text));
    return FrontWord::parse(text);
}

// Knot Atlas PD text, a JSON grid, or a front word.
PlanarDiagram read_diagram(const std::string& path) {
    std::string text = slurp(path);
    if (text.find("X[") != std::string::npos) return planar_from_pd(text);
    if (looks_like_json(text)) return grid_to_planar(grid_from_json(text));
    return front_to_planar(FrontWord::parse(text));
}

int64_t budget_or_env(int64_t flag, int64_t fallback) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("LEGCORD_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("LEGCORD_BUDGET is not an integer: ") + env);
        }
    }
    return fallback;
}

json header(const std::string& command) { return json{{"schema", kSchema}, {"command", command}}; }

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json grid_json(const GridDiagram& g) { return json{{"size", g.size}, {"x", g.xs}, {"o", g.os}}; }

json stages_json(const ObstructionReport& r) {
    json a = json::array();
    for (auto& s : r.stages) a.push_back({{"name", s.name}, {"status", s.status}, {"detail", s.detail}});
    return a;
}

json rulings_json(const std::vector<NormalRuling>& rs) {
    json a = json::array();
    for (auto& r : rs) a.push_back(r.switches);
    return a;
}

int cmd_grid_invariants(const Globals& g, const std::string& file) {
    GridDiagram grid = read_grid(file);
    GridInvariants inv = grid_classical_invariants(grid);
    json j = header("grid invariants");
    j["tb"] = inv.tb;
    j["r"] = inv.r;
    j["writhe"] = inv.writhe;
    j["components"] = inv.components;
    j["size"] = grid.size;
    std::ostringstream t;
    t << "tb " << inv.tb << "\nr " << inv.r << "\nwrithe " << inv.writhe << "\ncomponents " << inv.components
      << "\nsize " << grid.size << "\n";
    emit(g, j, t.str());
    return 0;
}

int cmd_grid_simplify(const Globals& g, const std::string& file, int64_t budget) {
    GridDiagram grid = read_grid(file);
    int64_t b = budget_or_env(budget, kDefaultSimplifyBudget);
    SimplificationReport rep = grid_simplify(grid, b);
    json j = header("grid simplify");
    j["outcome"] = outcome_name(rep.outcome);
    j["budget"] = b;
    j["seed"] = g.seed;
    j["states_visited"] = rep.states_visited;
    json steps = json::array();
    for (auto& s : rep.steps) steps.push_back({{"block", s.block}, {"move", s.split ? "split" : s.move.to_string()}});
    j["steps"] = steps;
    json finals = json::array();
    for (auto& f : rep.finals) finals.push_back(grid_json(f));
    j["finals"] = finals;
    std::ostringstream t;
    t << "outcome " << outcome_name(rep.outcome) << "\nstates " << rep.states_visited << "\nsteps " << rep.steps.size()
      << "\nfinals";
    for (auto& f : rep.finals) t << " " << f.size;
    t << "\n";
    emit(g, j, t.str());
    return 0;
}

int cmd_front_invariants(const Globals& g, const std::string& file) {
    FrontWord f = read_front(file);
    FrontInvariants inv = front_invariants(f);
    json j = header("front invariants");
    j["tb"] = inv.tb;
    j["r"] = inv.r;
    j["components"] = inv.components;
    j["crossings"] = inv.crossings;
    j["cusps"] = inv.cusps;
    j["writhe"] = inv.writhe;
    j["component_tb"] = inv.component_tb;
    j["component_r"] = inv.component_r;
    std::ostringstream t;
    t << "tb " << inv.tb << "\nr " << inv.r << "\ncomponents " << inv.components << "\ncrossings " << inv.crossings
      << "\ncusps " << inv.cusps << "\nwrithe " << inv.writhe << "\n";
    emit(g, j, t.str());
    return 0;
}

int cmd_front_word(const Globals& g, const std::string& command, const FrontWord& out) {
    json j = header(command);
    j["front"] = out.to_string();
    FrontInvariants inv = front_invariants(out);
    j["tb"] = inv.tb;
    j["r"] = inv.r;
    j["components"] = inv.components;
    emit(g, j, out.to_string() + "\n");
    return 0;
}

int cmd_front_certify(const Globals& g, const std::string& file, int64_t budget) {
    FrontWord f = read_front(file);
    int64_t b = budget_or_env(budget, kDefaultPinchBudget);
    PinchSearch ps = find_slice_pinch(f, b);
    json j = header("front certify");
    j["budget"] = b;
    j["seed"] = g.seed;
    j["states"] = ps.states;
    j["sites_tried"] = ps.sites_tried;
    std::ostringstream t;
    if (ps.certificate) {
        const SliceCertificate& c = *ps.certificate;
        std::string why;
        bool ok = replay_certificate(c, &why);
        j["certificate"] = {{"slice", c.site.slice},
                            {"pos", c.site.pos},
                            {"pinched_front", pinch(c.front, c.site).to_string()},
                            {"pinched_grid", grid_json(c.pinched_grid)},
                            {"simplification_steps", c.simplification.steps.size()},
                            {"saddles", c.saddles},
                            {"births", c.births},
                            {"replayed", ok}};
        t << "certificate slice " << c.site.slice << " pos " << c.site.pos << " states " << ps.states << " replayed "
          << (ok ? "yes" : "no: " + why) << "\n";
        emit(g, j, t.str());
        return ok ? 0 : 1;
    }
    j["certificate"] = nullptr;
    t << "inconclusive after " << ps.states << " states\n";
    emit(g, j, t.str());
    return 1;
}

int cmd_rulings(const Globals& g, const std::string& file, int d, const std::string& mode, size_t limit) {
    FrontWord f = read_front(file);
    json j = header("rulings");
    j["d"] = d;
    j["mode"] = mode;
    std::ostringstream t;
    if (mode == "poly") {
        RulingCount rc = ruling_polynomial(f, d);
        j["polynomial"] = rc.polynomial.to_string();
        j["max_states"] = rc.max_states;
        t << rc.polynomial.to_string() << "\n";
    } else if (mode == "list") {
        std::vector<NormalRuling> rs = enumerate_rulings(f, d, limit);
        j["count"] = rs.size();
        j["rulings"] = rulings_json(rs);
        json exps = json::array();
        for (auto& r : rs) exps.push_back(ruling_exponent(f, r));
        j["exponents"] = exps;
        for (auto& r : rs) {
            for (size_t i = 0; i < r.switches.size(); ++i) t << (i ? " " : "") << r.switches[i];
            t << "\n";
        }
    } else {
        std::vector<NormalRuling> w;
        bool two = exists_two_rulings(f, d, &w);
        j["exists_two"] = two;
        j["rulings"] = rulings_json(w);
        t << (two ? "true" : "false") << "\n";
    }
    emit(g, j, t.str());
    return 0;
}

int cmd_obstruct(const Globals& g, const std::string& file, const ObstructOptions& opt, bool filters) {
    FrontWord f = read_front(file);
    ObstructionReport r = obstruct_concordance_to_unknot(f, opt);
    json j = header("obstruct");
    j["verdict"] = verdict_name(r.verdict);
    j["theorem"] = theorem_name(r.theorem);
    j["max_cable"] = opt.max_cable;
    j["assert_slice"] = opt.assert_slice;
    j["stages"] = stages_json(r);
    json w;
    if (!r.rulings.empty()) w["rulings"] = rulings_json(r.rulings);
    if (r.a2_ruling) w["delta2_ruling"] = {{"front", r.a2_ruling->front.to_string()}, {"switches", r.a2_ruling->ruling.switches}};
    if (r.polynomial) w["polynomial"] = r.polynomial->to_string();
    if (r.cable_n) w["cable_n"] = r.cable_n;
    j["witness"] = w;
    j["witness_checked"] = check_witness(f, r);
    std::ostringstream t;
    t << verdict_name(r.verdict) << " " << theorem_name(r.theorem) << "\n";
    for (auto& s : r.stages) t << "  " << s.name << ": " << s.status << " (" << s.detail << ")\n";
    if (filters) {
        SliceFilterReport s = slice_filter(front_to_planar(f), f);
        j["filters"] = {{"determinant", s.determinant},
                        {"determinant_square", s.determinant_square},
                        {"signature", s.signature},
                        {"signature_zero", s.signature_zero},
                        {"alexander", s.alexander.to_string('t')},
                        {"fox_milnor", s.fox_milnor.holds},
                        {"fox_milnor_factor", s.fox_milnor.holds ? json(s.fox_milnor.f.to_string()) : json(nullptr)},
                        {"tb", s.tb},
                        {"tb_is_minus_one", s.tb_is_minus_one},
                        {"r1", s.r1.to_string()},
                        {"r2", s.r2.to_string()},
                        {"ruling_dominance", s.ruling_dominance},
                        {"passes", s.passes()}};
        t << "filters det " << s.determinant << (s.determinant_square ? " square" : " nonsquare") << ", sigma "
          << s.signature << ", fox-milnor " << (s.fox_milnor.holds ? "holds" : "fails") << ", alexander "
          << s.alexander.to_string('t') << "\n";
    }
    emit(g, j, t.str());
    return 0;
}

int cmd_skein(const Globals& g, const std::string& which, const std::string& file, int cap) {
    PlanarDiagram d = read_diagram(file);
    LaurentPoly2 p = which == "homfly" ? homfly(d, cap) : kauffman_dubrovnik(d, cap);
    json j = header("skein " + which);
    j["polynomial"] = p.to_string();
    j["crossings"] = d.crossings();
    j["components"] = d.components();
    emit(g, j, p.to_string() + "\n");
    return 0;
}

int cmd_census(const Globals& g, const std::vector<std::string>& entries, bool deep, int64_t budget) {
    CensusOptions opt;
    opt.entries = entries;
    opt.deep = deep;
    opt.jobs = g.jobs;
    opt.pinch_budget = budget_or_env(budget, kDefaultPinchBudget);
    CensusReport rep = verify_census(opt);
    std::ostringstream t;
    for (auto& r : rep.results) {
        t << r.name << ": tb " << r.tb << " r " << r.r << ", certificate "
          << (r.certificate ? std::to_string(r.certificate->site.slice) + "," + std::to_string(r.certificate->site.pos)
                            : "none")
          << ", R1 " << r.r1.to_string() << ", 2-cable " << (r.cable2 ? r.cable2->to_string() : "n/a");
        if (r.cable3) t << ", 3-cable " << r.cable3->to_string();
        t << ", " << verdict_name(r.obstruction.verdict);
        if (r.obstruction.verdict == Verdict::obstructed) t << " (" << theorem_name(r.obstruction.theorem) << ")";
        t << "\n";
        for (auto& d : r.diffs) t << "  DIFF " << d.field << ": expected " << d.expected << ", got " << d.actual << "\n";
    }
    t << "obstructed " << rep.obstructed << ", not obstructed " << rep.not_obstructed << ", inconclusive "
      << rep.inconclusive << ", diffs " << rep.diff_count() << "\n";
    if (g.format == "json") {
        json j = json::parse(census_report_json(rep));
        j["schema"] = kSchema;
        j["command"] = "census verify";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << t.str();
    }
    return rep.diff_count() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendrian knot toolkit: fronts, grids, rulings, obstructions, skein polynomials and the census"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "Seed recorded in search reports");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::string file, mode = "poly", pattern, which;
    int64_t budget = 0;
    int d = 1, slice = 0, pos = 0, cap = kDefaultSkeinCrossingCap;
    size_t limit = SIZE_MAX;
    ObstructOptions oo;
    bool skip_a2 = false, filters = false, deep = false;
    std::vector<std::string> entries;
    std::function<int()> run;

    auto* grid = app.add_subcommand("grid", "Grid diagrams (JSON)");
    grid->require_subcommand(1);
    auto* gi = grid->add_subcommand("invariants", "tb, r, writhe and components");
    gi->add_option("file", file)->required();
    gi->callback([&] { run = [&] { return cmd_grid_invariants(g, file); }; });
    auto* gs = grid->add_subcommand("simplify", "Destabilize and split toward an unlink of unknots");
    gs->add_option("file", file)->required();
    gs->add_option("--budget", budget, "Visited-state budget");
    gs->callback([&] { run = [&] { return cmd_grid_simplify(g, file, budget); }; });

    auto* front = app.add_subcommand("front", "Front words or JSON grids");
    front->require_subcommand(1);
    auto* fi = front->add_subcommand("invariants", "Classical invariants");
    fi->add_option("file", file)->required();
    fi->callback([&] { run = [&] { return cmd_front_invariants(g, file); }; });
    auto* fs = front->add_subcommand("satellite", "Legendrian satellite");
    fs->add_option("file", file)->required();
    fs->add_option("--pattern", pattern, "delta2, tw:N, p:N or w")->required();
    fs->callback([&] {
        run = [&] { return cmd_front_word(g, "front satellite", satellite(read_front(file), pattern_by_name(pattern))); };
    });
    auto* fp = front->add_subcommand("pinch", "Pinch move between slice strands pos and pos + 1");
    fp->add_option("file", file)->required();
    fp->add_option("--slice", slice)->required();
    fp->add_option("--pos", pos)->required();
    fp->callback([&] { run = [&] { return cmd_front_word(g, "front pinch", pinch(read_front(file), {slice, pos})); }; });
    auto* fg = front->add_subcommand("grid", "Convert to a grid diagram");
    fg->add_option("file", file)->required();
    fg->callback([&] {
        run = [&] {
            GridDiagram gr = front_to_grid(read_front(file));
            json j = grid_json(gr);
            std::cout << j.dump() << "\n";
            return 0;
        };
    });
    auto* fc = front->add_subcommand("certify", "Search for a pinch certifying a slice surface");
    fc->add_option("file", file)->required();
    fc->add_option("--budget", budget, "Simplification states per front");
    fc->callback([&] { run = [&] { return cmd_front_certify(g, file, budget); }; });

    auto* rul = app.add_subcommand("rulings", "Normal ruling polynomials");
    rul->add_option("file", file)->required();
    rul->add_option("--d", d, "Grading modulus: 0, 1, 2, ...")->check(CLI::NonNegativeNumber);
    rul->add_option("--mode", mode)->check(CLI::IsMember({"poly", "list", "two"}));
    rul->add_option("--limit", limit, "Maximum rulings listed");
    rul->callback([&] { run = [&] { return cmd_rulings(g, file, d, mode, limit); }; });

    auto* ob = app.add_subcommand("obstruct", "Obstructions to a concordance to the unknot");
    ob->add_option("file", file)->required();
    ob->add_option("--max-cable", oo.max_cable)->check(CLI::PositiveNumber);
    ob->add_flag("--assert-slice", oo.assert_slice, "Assume U < f, enabling the cable test");
    ob->add_flag("--skip-a2", skip_a2, "Skip the delta2 satellite stage");
    ob->add_flag("--filters", filters, "Add determinant, signature and Fox-Milnor filters");
    ob->callback([&] {
        run = [&] {
            oo.a2_stage = !skip_a2;
            return cmd_obstruct(g, file, oo, filters);
        };
    });

    auto* sk = app.add_subcommand("skein", "HOMFLY-PT or Dubrovnik polynomial");
    sk->add_option("which", which)->required()->check(CLI::IsMember({"homfly", "kauffman"}));
    sk->add_option("file", file, "PD text, JSON grid or front word")->required();
    sk->add_option("--max-crossings", cap)->check(CLI::PositiveNumber);
    sk->callback([&] { run = [&] { return cmd_skein(g, which, file, cap); }; });

    auto* ce = app.add_subcommand("census", "Census verification");
    ce->require_subcommand(1);
    auto* cv = ce->add_subcommand("verify", "Check every entry against the stored expectations");
    cv->add_option("--entry", entries, "Entry name, repeatable");
    cv->add_flag("--deep", deep, "Also compute 3-cables");
    cv->add_option("--budget", budget, "Pinch-search states per entry");
    cv->callback([&] { run = [&] { return cmd_census(g, entries, deep, budget); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "legcord: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "legcord: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "legcord: " << e.what() << "\n";
        return 1;
    }
}
