#include "legcord/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "legcord/planar.hpp"
#include "legcord/rulings.hpp"

namespace legcord {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

// Gadget of family_15581: two full twists on consecutive strand pairs.
constexpr int kFamilySlice = 4;
constexpr int kFamilyStrand = 2;

bool standard_pair(const FrontInvariants& inv) {
    if (inv.components != 2) return false;
    for (int c = 0; c < 2; ++c)
        if (inv.component_tb[c] != -1 || inv.component_r[c] != 0) return false;
    return true;
}

// Necessary conditions for a split unlink of unknots.
bool unknotted_unlinked(const PlanarDiagram& d) {
    if (linking_number(d) != 0) return false;
    for (auto& c : component_diagrams(d))
        if (alexander_polynomial(c) != LaurentPoly(1)) return false;
    return true;
}

enum class SiteResult { certified, rejected, budget };

SiteResult try_site(const FrontWord& f, const PinchSite& s, int64_t budget, int64_t& states,
                    std::optional<SliceCertificate>& out) {
    FrontWord p = pinch(f, s);
    FrontInvariants inv = front_invariants(p);
    if (!standard_pair(inv) || !unknotted_unlinked(front_to_planar(p))) return SiteResult::rejected;
    GridDiagram g = front_to_grid(p);
    SimplificationReport rep = grid_simplify(g, budget);
    states += rep.states_visited;
    if (rep.outcome == SimplifyOutcome::budget_exhausted) return SiteResult::budget;
    if (rep.outcome != SimplifyOutcome::split_unlink_of_unknots || rep.finals.size() != 2) return SiteResult::rejected;
    SliceCertificate c;
    c.front = f;
    c.site = s;
    c.pinched_grid = g;
    c.simplification = std::move(rep);
    for (int k = 0; k < 2; ++k) c.components.emplace_back(inv.component_tb[k], inv.component_r[k]);
    out = std::move(c);
    return SiteResult::certified;
}

void compare(std::vector<CensusDiff>& diffs, const std::string& field, const std::string& expected,
             const std::string& actual) {
    if (expected != actual) diffs.push_back({field, expected, actual});
}

json poly_json(const std::optional<LaurentPoly>& p) { return p ? json(p->to_string()) : json(nullptr); }

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("LEGCORD_DATA_DIR")) return env;
    return LEGCORD_DATA_DIR;
}

std::vector<CensusEntry> load_census(const std::string& dir) {
    json table = read_json(dir + "/expectations/table2.json");
    std::vector<CensusEntry> out;
    for (auto& row : table.at("entries")) {
        CensusEntry e;
        e.name = row.at("name").get<std::string>();
        e.grid = load_grid(dir + "/census/" + e.name + ".json");
        const json& n = row.at("n");
        e.expected.least_n = n.is_string() ? n.get<std::string>() : std::to_string(n.get<int>());
        if (row.contains("polynomial")) e.expected.polynomial = LaurentPoly::parse(row.at("polynomial").get<std::string>());
        if (row.contains("auxiliary")) e.expected.auxiliary = LaurentPoly::parse(row.at("auxiliary").get<std::string>());
        e.expected.obstructed = row.at("obstructed").get<bool>();
        out.push_back(std::move(e));
    }
    return out;
}

const CensusEntry& find_entry(const std::vector<CensusEntry>& census, const std::string& name) {
    for (auto& e : census)
        if (e.name == name) return e;
    throw std::invalid_argument("no census entry named " + name);
}

PinchSearch find_slice_pinch(const FrontWord& f, int64_t budget, std::optional<PinchSite> hint) {
    FrontInvariants inv = front_invariants(f);
    if (inv.components != 1) throw std::invalid_argument("slice pinch search needs a knot");
    if (inv.tb != -1) throw std::invalid_argument("slice pinch search needs tb = -1, got " + std::to_string(inv.tb));
    PinchSearch out;
    std::vector<PinchSite> sites = pinch_sites(f);
    if (hint) {
        auto same = [&](const PinchSite& s) { return s.slice == hint->slice && s.pos == hint->pos; };
        auto it = std::find_if(sites.begin(), sites.end(), same);
        if (it != sites.end()) std::rotate(sites.begin(), it, it + 1);
    }
    // Passes over the live sites with a growing per-site cap; the last pass may spend the whole remainder.
    std::vector<bool> tried(sites.size(), false);
    for (int64_t cap : {budget / 8, budget / 2, budget}) {
        for (size_t i = 0; i < sites.size(); ++i) {
            if (sites[i].slice < 0) continue;
            int64_t left = std::min(cap, budget - out.states);
            if (left <= 0) return out;
            if (!tried[i]) tried[i] = true, ++out.sites_tried;
            SiteResult r = try_site(f, sites[i], left, out.states, out.certificate);
            if (r == SiteResult::certified) return out;
            if (r == SiteResult::rejected) sites[i].slice = -1;
        }
    }
    return out;
}

PinchSearch find_slice_pinch(const GridDiagram& g, int64_t budget, std::optional<PinchSite> hint) {
    return find_slice_pinch(grid_to_front(g), budget, hint);
}

bool replay_certificate(const SliceCertificate& c, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (c.saddles != 1 || c.births != 1) return fail("a concordance needs one saddle and one birth");
    FrontWord p;
    try {
        p = pinch(c.front, c.site);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    FrontInvariants inv = front_invariants(p);
    if (!standard_pair(inv)) return fail("pinched front is not two tb = -1, r = 0 components");
    for (int k = 0; k < 2; ++k)
        if (c.components.size() != 2 || c.components[k] != std::make_pair(inv.component_tb[k], inv.component_r[k]))
            return fail("stored component invariants disagree");
    GridDiagram g = front_to_grid(p);
    if (!(g == c.pinched_grid)) return fail("pinched grid differs from the stored one");
    std::vector<GridDiagram> finals;
    try {
        finals = replay_simplification(g, c.simplification);
    } catch (const std::exception& e) {
        return fail(std::string("simplification replay failed: ") + e.what());
    }
    if (finals.size() != 2) return fail("replay ends in " + std::to_string(finals.size()) + " diagrams");
    for (auto& f : finals)
        if (f.size != 2) return fail("replay leaves a grid of size " + std::to_string(f.size));
    return true;
}

std::vector<std::pair<std::string, PinchSite>> load_pinch_fixtures(const std::string& dir) {
    std::vector<std::pair<std::string, PinchSite>> out;
    std::string path = dir + "/fixtures/pinch_sites.json";
    if (!std::filesystem::exists(path)) return out;
    json j = read_json(path);
    for (auto& [name, site] : j.at("sites").items())
        out.emplace_back(name, PinchSite{site.at("slice").get<int>(), site.at("pos").get<int>()});
    return out;
}

FrontWord family_15581(int n) {
    if (n < 1) throw std::invalid_argument("family index starts at 1");
    FrontWord f = grid_to_front(load_grid(data_dir() + "/census/m14n15581.json"));
    std::vector<Event> gadget;
    for (int k = 1; k < n; ++k)
        for (int q : {0, 0, 1, 1}) gadget.push_back({'X', kFamilyStrand + q});
    f.events.insert(f.events.begin() + kFamilySlice, gadget.begin(), gadget.end());
    f.validate();
    return f;
}

size_t CensusReport::diff_count() const {
    size_t n = 0;
    for (auto& r : results) n += r.diffs.size();
    return n;
}

CensusResult verify_entry(const CensusEntry& e, const CensusOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    CensusResult res;
    res.name = e.name;
    GridInvariants gi = grid_classical_invariants(e.grid);
    res.tb = gi.tb;
    res.r = gi.r;
    compare(res.diffs, "tb", "-1", std::to_string(gi.tb));
    compare(res.diffs, "r", "0", std::to_string(gi.r));

    FrontWord f = grid_to_front(e.grid);
    std::optional<PinchSite> hint;
    for (auto& [name, site] : load_pinch_fixtures())
        if (name == e.name) hint = site;
    if (gi.tb == -1 && gi.components == 1) {
        PinchSearch ps = find_slice_pinch(f, opt.pinch_budget, hint);
        res.certificate = ps.certificate;
        res.pinch_states = ps.states;
    }
    compare(res.diffs, "slice-certificate", "found", res.certificate ? "found" : "inconclusive");

    res.r1 = ruling_polynomial(f, 1, opt.state_limit).polynomial;
    auto cable = [&](int n) {
        return ruling_polynomial(satellite(f, pattern_twist(n)), 1, opt.state_limit).polynomial.shifted(n - 1);
    };
    try {
        res.cable2 = cable(2);
        if (opt.deep) res.cable3 = cable(3);
    } catch (const StateLimitExceeded&) {
    }
    const CensusExpectation& x = e.expected;
    if (x.least_n == "1") {
        compare(res.diffs, "R1", x.polynomial->to_string(), res.r1.to_string());
    } else {
        compare(res.diffs, "R1", "1", res.r1.to_string());
        std::string want = x.least_n == "2" ? x.polynomial->to_string() : "1";
        compare(res.diffs, "cable2", want, res.cable2 ? res.cable2->to_string() : "inconclusive");
    }
    if (x.auxiliary) {
        res.r0 = ruling_polynomial(f, 0, opt.state_limit).polynomial;
        compare(res.diffs, "R0", x.auxiliary->to_string(), res.r0->to_string());
    }

    ObstructOptions oo;
    oo.max_cable = 2;
    oo.assert_slice = res.certificate.has_value();
    oo.state_limit = opt.state_limit;
    res.obstruction = obstruct_concordance_to_unknot(f, oo);
    compare(res.diffs, "verdict", verdict_name(x.obstructed ? Verdict::obstructed : Verdict::not_obstructed),
            verdict_name(res.obstruction.verdict));
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

CensusReport verify_census(const CensusOptions& opt, const std::string& dir) {
    std::vector<CensusEntry> census = load_census(dir);
    std::vector<const CensusEntry*> todo;
    if (opt.entries.empty())
        for (auto& e : census) todo.push_back(&e);
    else
        for (auto& name : opt.entries) todo.push_back(&find_entry(census, name));

    CensusReport rep;
    rep.results.resize(todo.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < todo.size();) rep.results[i] = verify_entry(*todo[i], opt);
    };
    int jobs = std::max(1, std::min<int>(opt.jobs, int(todo.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (auto& r : rep.results) {
        switch (r.obstruction.verdict) {
            case Verdict::obstructed: ++rep.obstructed; break;
            case Verdict::not_obstructed: ++rep.not_obstructed; break;
            case Verdict::inconclusive: ++rep.inconclusive; break;
        }
    }
    return rep;
}

std::string census_report_json(const CensusReport& r) {
    json out;
    out["schema"] = "legcord.census/1";
    out["obstructed"] = r.obstructed;
    out["not_obstructed"] = r.not_obstructed;
    out["inconclusive"] = r.inconclusive;
    out["diff_count"] = r.diff_count();
    json entries = json::array();
    for (auto& e : r.results) {
        json j;
        j["name"] = e.name;
        j["tb"] = e.tb;
        j["r"] = e.r;
        if (e.certificate)
            j["slice_certificate"] = {{"slice", e.certificate->site.slice},
                                      {"pos", e.certificate->site.pos},
                                      {"pinched_grid_size", e.certificate->pinched_grid.size},
                                      {"simplification_steps", e.certificate->simplification.steps.size()},
                                      {"states", e.pinch_states},
                                      {"provenance", "search output"}};
        else
            j["slice_certificate"] = nullptr;
        j["R1"] = e.r1.to_string();
        j["R0"] = poly_json(e.r0);
        j["cable2"] = poly_json(e.cable2);
        if (e.cable3) j["cable3"] = e.cable3->to_string();
        j["verdict"] = verdict_name(e.obstruction.verdict);
        j["theorem"] = theorem_name(e.obstruction.theorem);
        json stages = json::array();
        for (auto& s : e.obstruction.stages) stages.push_back({{"name", s.name}, {"status", s.status}, {"detail", s.detail}});
        j["stages"] = stages;
        json diffs = json::array();
        for (auto& d : e.diffs) diffs.push_back({{"field", d.field}, {"expected", d.expected}, {"actual", d.actual}});
        j["diffs"] = diffs;
        j["seconds"] = e.seconds;
        entries.push_back(j);
    }
    out["entries"] = entries;
    return out.dump(2);
}

}  // namespace legcord
