#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "legcord/census.hpp"
#include "legcord/front.hpp"
#include "legcord/grid.hpp"
#include "legcord/obstruct.hpp"
#include "legcord/planar.hpp"
#include "legcord/rulings.hpp"
#include "legcord/skein.hpp"

using namespace legcord;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2d  %-34s %8.2f s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), s);
    for (const std::string& n : o.notes) std::printf("          %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

FrontWord read_front(const std::string& name) {
    std::ifstream in(data_dir() + "/fronts/" + name + ".front");
    std::stringstream ss;
    ss << in.rdbuf();
    return FrontWord::parse(ss.str());
}

LaurentPoly brute_force(const FrontWord& f, int d) {
    std::vector<int> crossings;
    for (size_t k = 0; k < f.size(); ++k)
        if (f.events[k].kind == 'X') crossings.push_back(int(k));
    LaurentPoly total;
    for (uint32_t mask = 0; mask < (1u << crossings.size()); ++mask) {
        NormalRuling r;
        r.d = d;
        for (size_t i = 0; i < crossings.size(); ++i)
            if (mask >> i & 1) r.switches.push_back(crossings[i]);
        if (validate_ruling(f, r)) total += LaurentPoly::monomial(ruling_exponent(f, r));
    }
    return total;
}

bool graded(const FrontWord& f, int d) {
    try {
        check_grading(f, d);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace

int main() {
    std::vector<CensusEntry> census = load_census();
    std::map<std::string, FrontWord> fronts;
    for (const CensusEntry& e : census) fronts[e.name] = grid_to_front(e.grid);
    FrontWord unknot = read_front("unknot");
    FrontWord m946 = fronts.at("m9_46");

    criterion(1, "census invariants", [&](Outcome& o) {
        o.expect(census.size() == 23, "census has " + std::to_string(census.size()) + " entries");
        for (const CensusEntry& e : census) {
            GridInvariants inv = grid_classical_invariants(e.grid);
            o.expect(inv.components == 1 && inv.tb == -1 && inv.r == 0,
                     e.name + ": tb " + std::to_string(inv.tb) + " r " + std::to_string(inv.r));
        }
    });

    criterion(2, "ruling polynomials, n = 1 rows", [&](Outcome& o) {
        const std::vector<std::pair<std::string, std::string>> rows = {
            {"m9_46", "2"},
            {"12n838", "2"},
            {"m13n3158", "z^4 + 3z^2 + 3"},
            {"14n2601", "z^4 + 3z^2 + 3"},
            {"m14n15581", "z^4 + 2z^2 + 2"},
            {"14n21563", "z^4 + 3z^2 + 2"},
        };
        std::string r2601 = ruling_polynomial(fronts.at("14n2601"), 1).polynomial.to_string();
        if (r2601 != "z^4 + 3z^2 + 2")
            o.notes.push_back("14n2601: alternate reading z^4 + 3z^2 + 2 disagrees with the table row and with R1 = " +
                              r2601);
        for (auto& [name, want] : rows) {
            std::string got = ruling_polynomial(fronts.at(name), 1).polynomial.to_string();
            o.expect(got == want, name + ": R1 = " + got + ", table " + want);
            const CensusExpectation& ex = find_entry(census, name).expected;
            if (ex.auxiliary) {
                std::string r0 = ruling_polynomial(fronts.at(name), 0).polynomial.to_string();
                if (r0 != ex.auxiliary->to_string())
                    o.notes.push_back(name + ": R0 = " + r0 + " against second column " + ex.auxiliary->to_string());
            }
        }
    });

    criterion(5, "slice certificates", [&](Outcome& o) {
        int64_t worst = 0;
        auto certify = [&](const std::string& name, const FrontWord& f) {
            PinchSearch s = find_slice_pinch(f, kDefaultPinchBudget);
            worst = std::max(worst, s.states);
            if (!s.certificate) return o.fail(name + ": no certificate within budget");
            std::string why;
            o.expect(replay_certificate(*s.certificate, &why), name + ": replay failed: " + why);
        };
        for (const CensusEntry& e : census) certify(e.name, fronts.at(e.name));
        for (int n = 1; n <= 4; ++n) certify("family_15581(" + std::to_string(n) + ")", family_15581(n));
        o.notes.push_back("largest search " + std::to_string(worst) + " states, budget " +
                          std::to_string(kDefaultPinchBudget));
    });

    CensusReport report;
    double census_seconds = 0;
    {
        auto t0 = std::chrono::steady_clock::now();
        CensusOptions opt;
        opt.jobs = int(std::max(1u, std::thread::hardware_concurrency()));
        report = verify_census(opt);
        census_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    std::printf("      census sweep: %.2f s\n", census_seconds);

    criterion(3, "2-cable ruling polynomials", [&](Outcome& o) {
        const std::map<std::string, std::string> rows = {
            {"m12n768", "z^12 + 12z^10 + 49z^8 + 78z^6 + 41z^4 + 4z^2 + 1"},
            {"m13n579", "z^12 + 9z^10 + 25z^8 + 21z^6 + 4z^4 + 1"},
            {"m14n8579", "3z^12 + 27z^10 + 81z^8 + 93z^6 + 38z^4 + 4z^2 + 1"},
            {"m14n12406", "3z^12 + 26z^10 + 72z^8 + 68z^6 + 17z^4 + 1"},
            {"m14n22150", "z^12 + 8z^10 + 18z^8 + 8z^6 + 1"},
        };
        int bounded = 0;
        for (const CensusResult& r : report.results) {
            const CensusExpectation& ex = find_entry(census, r.name).expected;
            std::string want;
            if (rows.count(r.name)) want = rows.at(r.name);
            else if (!ex.least_n.empty() && ex.least_n[0] == '>') want = "1", ++bounded;
            else continue;
            std::string got = r.cable2 ? r.cable2->to_string() : "(missing)";
            o.expect(got == want, r.name + ": z R1(2-cable) = " + got + ", table " + want);
        }
        o.expect(bounded == 12, std::to_string(bounded) + " entries bounded above n = 2");
    });

    criterion(4, "obstruction column", [&](Outcome& o) {
        for (const CensusResult& r : report.results) {
            bool expected = find_entry(census, r.name).expected.obstructed;
            bool got = r.obstruction.verdict == Verdict::obstructed;
            o.expect(expected == got, r.name + ": " + verdict_name(r.obstruction.verdict));
            if (got) o.expect(check_witness(fronts.at(r.name), r.obstruction), r.name + ": witness does not check");
        }
        o.expect(report.obstructed == 11 && report.not_obstructed == 12,
                 std::to_string(report.obstructed) + " obstructed, " + std::to_string(report.not_obstructed) +
                     " not obstructed");
        o.expect(report.diff_count() == 0, std::to_string(report.diff_count()) + " census diffs");
    });

    criterion(6, "satellite tb formulas", [&](Outcome& o) {
        std::map<std::string, FrontWord> bases = {{"U", unknot}, {"trefoil", read_front("trefoil_right")}, {"m9_46", m946}};
        for (auto& [name, f] : bases) {
            int tb = front_invariants(f).tb;
            for (int n = 1; n <= 3; ++n) {
                int got = front_invariants(satellite(f, pattern_twist(n))).tb;
                o.expect(got == n * n * (tb + 1) - n, name + " tw" + std::to_string(n) + ": tb " + std::to_string(got));
            }
        }
        o.expect(front_invariants(satellite(unknot, pattern_delta2())).tb == -3, "S(U, delta2) tb");
        for (int n = 1; n <= 4; ++n) {
            FrontInvariants p = front_invariants(satellite(unknot, pattern_clasp(n)));
            o.expect(p.tb == -1 && p.components == 1, "S(U, P" + std::to_string(n) + ")");
        }
        FrontWord w = satellite(unknot, pattern_whitehead());
        o.expect(front_invariants(w).tb == 1, "S(U, W) tb");
        o.expect(homfly(front_to_planar(w)) == homfly(front_to_planar(read_front("trefoil_right"))),
                 "S(U, W) is not a right-handed trefoil");
    });

    criterion(7, "clasp versus twist rulings", [&](Outcome& o) {
        for (auto& [name, f] : std::map<std::string, FrontWord>{{"U", unknot}, {"m9_46", m946}})
            for (int n : {2, 3})
                for (int d : {0, 1, 2}) {
                    LaurentPoly p = ruling_polynomial(satellite(f, pattern_clasp(n)), d).polynomial;
                    LaurentPoly t = ruling_polynomial(satellite(f, pattern_twist(n)), d).polynomial;
                    o.expect(p == t.shifted(n - 1), name + " n " + std::to_string(n) + " d " + std::to_string(d) +
                                                        ": " + p.to_string() + " vs " + t.to_string());
                }
        for (int n = 1; n <= 4; ++n)
            for (int d : {0, 1, 2}) {
                LaurentPoly t = ruling_polynomial(satellite(unknot, pattern_twist(n)), d).polynomial;
                o.expect(t == LaurentPoly::monomial(1 - n), "S(U, tw" + std::to_string(n) + ") = " + t.to_string());
            }
    });

    criterion(8, "constructive rulings", [&](Outcome& o) {
        for (auto& [name, f] : std::map<std::string, FrontWord>{{"m9_46", m946}, {"family_15581(3)", family_15581(3)}}) {
            std::vector<NormalRuling> w;
            if (!exists_two_rulings(f, 1, &w)) {
                o.fail(name + ": fewer than two rulings");
                continue;
            }
            Delta2Ruling d = construct_delta2_ruling(f, w[0], w[1]);
            std::string why;
            o.expect(validate_ruling(d.front, d.ruling, &why), name + ": delta2 ruling rejected: " + why);
        }
        for (auto& [name, f] : std::map<std::string, FrontWord>{{"U", unknot}, {"m9_46", m946}}) {
            FrontWord two = satellite(f, pattern_twist(2));
            for (const NormalRuling& r : enumerate_rulings(f, 1)) {
                std::string why;
                o.expect(validate_ruling(two, ncopy_ruling(f, r, 2), &why), name + ": 2-copy ruling rejected: " + why);
            }
        }
    });

    criterion(9, "skein pins and brute force", [&](Outcome& o) {
        std::vector<std::pair<std::string, FrontWord>> pins;
        for (const char* name : {"unknot", "trefoil_right", "trefoil_left", "figure_eight"})
            pins.emplace_back(name, read_front(name));
        for (auto& [name, f] : pins) {
            PlanarDiagram d = front_to_planar(f);
            int k = -front_invariants(f).tb - 1;
            LaurentPoly kf = coeff_of_a(kauffman_dubrovnik(d), k), kh = coeff_of_a(homfly(d), k);
            LaurentPoly r1 = ruling_polynomial(f, 1).polynomial, r2 = ruling_polynomial(f, 2).polynomial;
            o.expect(kf == r1, name + ": Kauffman " + kf.to_string() + " vs R1 " + r1.to_string());
            o.expect(kh == r2, name + ": HOMFLY " + kh.to_string() + " vs R2 " + r2.to_string());
        }
        std::vector<std::pair<std::string, FrontWord>> small = pins;
        small.emplace_back("S(U, tw2)", satellite(unknot, pattern_twist(2)));
        small.emplace_back("S(U, tw3)", satellite(unknot, pattern_twist(3)));
        small.emplace_back("S(U, delta2)", satellite(unknot, pattern_delta2()));
        small.emplace_back("S(U, P2)", satellite(unknot, pattern_clasp(2)));
        small.emplace_back("S(U, W)", satellite(unknot, pattern_whitehead()));
        for (auto& [name, f] : fronts) small.emplace_back(name, f);
        int compared = 0;
        for (auto& [name, f] : small) {
            if (front_invariants(f).crossings > 12) continue;
            for (int d : {0, 1, 2}) {
                if (!graded(f, d)) continue;
                ++compared;
                LaurentPoly dp = ruling_polynomial(f, d).polynomial, bf = brute_force(f, d);
                o.expect(dp == bf, name + " d " + std::to_string(d) + ": " + dp.to_string() + " vs " + bf.to_string());
            }
        }
        o.notes.push_back(std::to_string(compared) + " DP/brute-force comparisons");
    });

    criterion(10, "slice filters", [&](Outcome& o) {
        for (const CensusEntry& e : census) {
            SliceFilterReport r = slice_filter(grid_to_planar(e.grid), fronts.at(e.name));
            o.expect(r.determinant_square && r.signature_zero && r.fox_milnor.holds,
                     e.name + ": det " + std::to_string(r.determinant) + " sigma " + std::to_string(r.signature));
        }
        int sigma = signature(front_to_planar(read_front("trefoil_right")));
        o.expect(sigma == 2, "right trefoil sigma " + std::to_string(sigma));
        FrontWord fig8 = read_front("figure_eight");
        SliceFilterReport f8 = slice_filter(front_to_planar(fig8), fig8);
        o.expect(f8.determinant == 5 && !f8.determinant_square, "figure-eight det " + std::to_string(f8.determinant));
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
