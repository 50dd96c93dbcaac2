// Acceptance gate for the volume-argument pipeline. Each criterion prints one
// PASS/FAIL line; the process exits nonzero when any criterion fails. All
// comparisons are exact rational identities -- no tolerances anywhere.

#include "tuckvol/tuckvol.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace tuckvol;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeedsPerDim = 100;
const std::vector<std::size_t> kDims = {1, 2, 3};

struct Gate {
    int failures = 0;

    void report(int number, const std::string& title, bool ok,
                const std::vector<std::string>& notes) {
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "\n";
        if (!ok) {
            ++failures;
            std::size_t shown = 0;
            for (const auto& n : notes) {
                std::cout << "      - " << n << "\n";
                if (++shown == 5) {
                    std::cout << "      - (" << notes.size() - shown << " more)\n";
                    break;
                }
            }
        }
    }
};

void expect(bool cond, const std::string& what, std::vector<std::string>& notes) {
    if (!cond) notes.push_back(what);
}

bool status_is(const Report& r, const char* name, CheckStatus want) {
    const CheckResult* c = r.find_check(name);
    return c != nullptr && c->status == want;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(TUCKVOL_BIN) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
}

fs::path temp_file(const char* name) {
    const fs::path dir = fs::temp_directory_path() / "tuckvol-acceptance";
    fs::create_directories(dir);
    return dir / name;
}

std::string fixture_path() {
    return std::string(TUCKVOL_FIXTURE_DIR) + "/planar_example.json";
}

struct TuckerRun {
    Instance instance;
    Report report;
};

}  // namespace

int main() {
    Gate gate;

    // Shared corpus: d in {1,2,3} x 100 seeds of randomized antipodal
    // labelings on refinements cycling through both schemes and rounds 0..2.
    std::vector<TuckerRun> runs;
    runs.reserve(kDims.size() * kSeedsPerDim);
    for (std::size_t d : kDims)
        for (std::uint64_t seed = 0; seed < kSeedsPerDim; ++seed) {
            TuckerRun run;
            run.instance = make_tucker_instance(d, seed);
            run.report = check_tucker_instance(run.instance.triangulation,
                                               run.instance.labeling, EnclosureKind::shell,
                                               run.instance.id);
            runs.push_back(std::move(run));
        }

    // ---- 1. enclosure volume is constant under both deformations ----------
    {
        std::vector<std::string> notes;
        for (const auto& run : runs) {
            const Rational expected = enclosure_volume(run.instance.dim, 2);
            for (const char* key : {"C_total_t", "C_total_star"}) {
                const auto it = run.report.polynomials.find(key);
                if (it == run.report.polynomials.end() ||
                    it->second != Poly::constant(expected))
                    expect(false, run.instance.id + ": " + key + " is not the constant " +
                                      rational_str(expected), notes);
            }
            for (const char* name :
                 {"deformation-volume-constant-t", "deformation-volume-constant-star"})
                expect(status_is(run.report, name, CheckStatus::pass),
                       run.instance.id + ": " + name + " did not pass", notes);
        }
        gate.report(1, "enclosure volume constant in t for the cone and star flows (" +
                           std::to_string(runs.size()) + " instances)",
                    notes.empty(), notes);
    }

    // ---- 2. restricted sums agree between the two triangulations ----------
    {
        std::vector<std::string> notes;
        for (const auto& run : runs) {
            for (const char* name : {"core-sums-equal", "shell-sums-equal", "sum-decomposition"})
                expect(status_is(run.report, name, CheckStatus::pass),
                       run.instance.id + ": " + name + " did not pass", notes);
            const auto& polys = run.report.polynomials;
            if (polys.count("P_total_t") && polys.count("P_total_star"))
                expect(polys.at("P_total_t") == polys.at("P_total_star"),
                       run.instance.id + ": restricted sums differ coefficient-wise", notes);
            else
                expect(false, run.instance.id + ": restricted sums missing", notes);
        }
        gate.report(2, "interior-restricted volume sums agree coefficient-wise", notes.empty(),
                    notes);
    }

    // ---- 3. boundary-clean instances: odd degree and the volume bridge ----
    {
        std::vector<std::string> notes;
        std::map<std::size_t, int> clean_per_dim;
        for (const auto& run : runs) {
            if (!run.report.boundary_complementary_edges.empty()) continue;
            ++clean_per_dim[run.instance.dim];
            for (const char* name : {"degree-odd", "degree-volume-bridge"})
                expect(status_is(run.report, name, CheckStatus::pass),
                       run.instance.id + ": " + name + " did not pass", notes);
            if (run.report.degree) {
                const Rational bridge =
                    poly_eval(run.report.polynomials.at("P_total_star"), Rational(1));
                expect(bridge == Rational(run.report.degree->degree) *
                                     cross_polytope_volume(run.instance.dim),
                       run.instance.id + ": restricted sum at t=1 is not degree * vol(P)", notes);
            }
        }
        for (std::size_t d : kDims)
            expect(clean_per_dim[d] > 0,
                   "no boundary-clean random instance in dimension " + std::to_string(d), notes);

        // curated odd maps with hand-computed degrees
        struct Curated {
            std::size_t dim;
            const char* name;
            std::function<std::vector<Rational>(const Point&)> map;
            long long degree;
        };
        const std::vector<Curated> curated = {
            {1, "identity-d1", [](const Point& p) { return p; }, 1},
            {2, "identity-d2", [](const Point& p) { return p; }, 1},
            {3, "identity-d3", [](const Point& p) { return p; }, 1},
            {1, "negation-d1", [](const Point& p) { return point_negate(p); }, -1},
            {2, "negation-d2", [](const Point& p) { return point_negate(p); }, 1},
            {3, "negation-d3", [](const Point& p) { return point_negate(p); }, -1},
            {2, "rotation-d2",
             [](const Point& p) { return std::vector<Rational>{p[1], -p[0]}; }, 1},
        };
        for (const auto& c : curated) {
            const Triangulation t = cross_polytope_cone(c.dim);
            const Report rep =
                check_tucker_instance(t, labeling_from_odd_map(t, c.map),
                                      EnclosureKind::shell, c.name);
            expect(rep.all_passed(), std::string(c.name) + ": some check failed", notes);
            expect(rep.degree && rep.degree->degree == c.degree,
                   std::string(c.name) + ": degree != " + std::to_string(c.degree), notes);
        }
        // signed permutations exercise the bridge without pinned values
        struct Extra {
            std::size_t dim;
            const char* name;
            std::function<std::vector<Rational>(const Point&)> map;
        };
        const std::vector<Extra> extras = {
            {2, "swap-d2", [](const Point& p) { return std::vector<Rational>{p[1], p[0]}; }},
            {3, "cycle-d3",
             [](const Point& p) { return std::vector<Rational>{p[1], p[2], -p[0]}; }},
        };
        for (const auto& e : extras) {
            const Triangulation t = cross_polytope_cone(e.dim);
            const Report rep = check_tucker_instance(t, labeling_from_odd_map(t, e.map),
                                                     EnclosureKind::shell, e.name);
            expect(rep.all_passed(), std::string(e.name) + ": some check failed", notes);
        }
        gate.report(3, "odd degree and exact bridge on boundary-clean instances", notes.empty(),
                    notes);
    }

    // ---- 4. facet tallies are consistent; winding agrees in the plane -----
    {
        std::vector<std::string> notes;
        int tallied = 0, wound = 0;
        for (const auto& run : runs) {
            const CheckResult* well = run.report.find_check("degree-well-defined");
            if (well && well->status != CheckStatus::skipped) {
                expect(well->status == CheckStatus::pass,
                       run.instance.id + ": facet tallies disagree", notes);
                ++tallied;
            }
            if (run.report.degree) {
                const auto& pf = run.report.degree->per_facet;
                expect(pf.size() == (std::size_t{1} << run.instance.dim),
                       run.instance.id + ": facet table incomplete", notes);
                for (const auto& [sig, tally] : pf)
                    expect(tally.p - tally.n == run.report.degree->degree,
                           run.instance.id + ": a facet tally differs from the degree", notes);
            }
            const CheckResult* wind = run.report.find_check("winding-matches-degree");
            if (wind && wind->status != CheckStatus::skipped) {
                expect(wind->status == CheckStatus::pass,
                       run.instance.id + ": winding number disagrees with the degree", notes);
                ++wound;
            }
        }
        expect(tallied > 0, "no instance ever reached the degree computation", notes);
        expect(wound > 0, "no planar instance ever compared winding against degree", notes);
        gate.report(4, "per-facet signed tallies all equal the degree; planar winding agrees (" +
                           std::to_string(tallied) + " tallied, " + std::to_string(wound) +
                           " wound)",
                    notes.empty(), notes);
    }

    // ---- 5. complementary edges exist for every valid labeling ------------
    {
        std::vector<std::string> notes;
        for (const auto& run : runs) {
            expect(status_is(run.report, "complementary-edge-exists", CheckStatus::pass),
                   run.instance.id + ": no complementary edge found", notes);
            expect(!run.report.complementary_edges.empty(),
                   run.instance.id + ": witness list is empty", notes);
            for (const auto& w : run.report.complementary_edges)
                expect(w.label_u + w.label_v == 0 && w.label_u != 0,
                       run.instance.id + ": witness edge labels are not complementary", notes);
        }

        std::ifstream fixture(fixture_path());
        std::ostringstream buf;
        buf << fixture.rdbuf();
        const InstanceFile fig = instance_file_from_json(json_from_text(buf.str()));
        const Report fixrep =
            check_tucker_instance(fig.triangulation, fig.labeling, EnclosureKind::shell,
                                  "planar-example");
        expect(fixrep.all_passed(), "planar fixture: some check failed", notes);
        expect(fixrep.complementary_edges.size() == 1 &&
                   fixrep.complementary_edges[0].u == 10 &&
                   fixrep.complementary_edges[0].v == 11,
               "planar fixture: expected the single complementary edge {10,11}", notes);
        expect(run_cli("check " + fixture_path()) == 0,
               "cli check on the shipped instance did not exit 0", notes);
        gate.report(5, "every valid random labeling and the shipped planar instance yield a "
                       "complementary edge",
                    notes.empty(), notes);
    }

    // ---- 6. without complementary edges the deformed volume vanishes ------
    {
        std::vector<std::string> notes;
        int ran = 0;
        for (int i = 0; i < 100; ++i) {
            const std::size_t d = kDims[static_cast<std::size_t>(i) % kDims.size()];
            const Instance base = make_tucker_instance(d, static_cast<std::uint64_t>(i));
            Labeling positive;
            positive.kind = LabelKind::tucker;
            Rng rng(mix_seed(static_cast<std::uint64_t>(i), 0xabcdefu));
            for (const auto& v : base.triangulation.vertices)
                positive.labels[v.id] = 1 + static_cast<int>(rng.below(d));
            const Report rep = check_tucker_instance(base.triangulation, positive,
                                                     EnclosureKind::shell,
                                                     "positive-" + std::to_string(i));
            expect(rep.complementary_edges.empty(),
                   rep.instance_id + ": positive labels produced a complementary edge", notes);
            expect(status_is(rep, "no-edge-volume-vanishes", CheckStatus::pass),
                   rep.instance_id + ": deformed volume did not vanish at t=1", notes);
            const auto it = rep.polynomials.find("P_total_t");
            expect(it != rep.polynomials.end() && poly_eval(it->second, Rational(1)) == 0,
                   rep.instance_id + ": restricted sum at t=1 is nonzero", notes);
            ++ran;
        }
        gate.report(6, "all-positive labelings admit no complementary edge and collapse the "
                       "interior volume to 0 (" + std::to_string(ran) + " labelings)",
                    notes.empty(), notes);
    }

    // ---- 7. sperner side: odd count, signed count 1, constant volume ------
    {
        std::vector<std::string> notes;
        int ran = 0;
        for (std::size_t d : kDims)
            for (std::uint64_t seed = 0; seed < kSeedsPerDim; ++seed) {
                const Instance inst = make_sperner_instance(d, seed);
                const Report rep =
                    check_sperner_instance(inst.triangulation, inst.labeling, inst.id);
                expect(rep.all_passed(), inst.id + ": some check failed", notes);
                if (rep.fully_labeled) {
                    expect(rep.fully_labeled->total() % 2 == 1,
                           inst.id + ": fully labeled count is even", notes);
                    expect(rep.fully_labeled->signed_count() == 1,
                           inst.id + ": signed count != 1", notes);
                }
                const auto it = rep.polynomials.find("S_total");
                expect(it != rep.polynomials.end() &&
                           it->second == Poly::constant(standard_simplex_volume(d)),
                       inst.id + ": simplex volume sum is not constant", notes);
                ++ran;
            }
        gate.report(7, "random simplex labelings have an odd fully-labeled count with signed "
                       "count exactly 1 (" + std::to_string(ran) + " instances)",
                    notes.empty(), notes);
    }

    // ---- 8. builders validate against analytic volumes --------------------
    {
        std::vector<std::string> notes;
        for (std::size_t d : kDims) {
            const std::string tag = "d" + std::to_string(d) + ": ";
            const Triangulation cone = cross_polytope_cone(d);
            expect(validate_triangulation(cone, cross_polytope_volume(d)).ok(),
                   tag + "cone volume", notes);
            const Triangulation b = boundary_complex(cone);
            expect(validate_triangulation(star_from_boundary(b), cross_polytope_volume(d)).ok(),
                   tag + "star volume", notes);
            expect(validate_triangulation(
                       shell_prisms(b),
                       enclosure_volume(d, 2) - cross_polytope_volume(d)).ok(),
                   tag + "shell volume", notes);
            expect(validate_triangulation(assemble_enclosure(cone), enclosure_volume(d, 2)).ok(),
                   tag + "enclosure volume", notes);
            for (unsigned rounds : {0u, 1u})
                expect(validate_triangulation(standard_simplex(d, rounds),
                                              standard_simplex_volume(d)).ok(),
                       tag + "simplex volume at " + std::to_string(rounds) + " rounds", notes);
            for (const auto scheme : {RefinementSpec::Scheme::barycentric,
                                      RefinementSpec::Scheme::edge_midpoint}) {
                RefinementSpec spec;
                spec.scheme = scheme;
                spec.rounds = 1;
                const Triangulation r = refine(cone, spec);
                const std::string stag = tag + scheme_to_string(scheme);
                expect(validate_triangulation(r, cross_polytope_volume(d)).ok(),
                       stag + ": refined cone volume", notes);
                expect(check_antipodal_symmetry(boundary_complex(r)),
                       stag + ": refined boundary lost antipodal symmetry", notes);
                expect(validate_boundary_complex(boundary_complex(r)).ok(),
                       stag + ": refined boundary structure", notes);
            }
        }
        expect(validate_triangulation(square_enclosure_2d(cross_polytope_cone(2)),
                                      Rational(16)).ok(),
               "square enclosure volume", notes);
        gate.report(8, "every builder validates structurally and against its analytic volume",
                    notes.empty(), notes);
    }

    // ---- 9. fault injection is detected ------------------------------------
    {
        std::vector<std::string> notes;
        std::ifstream fixture(fixture_path());
        std::ostringstream buf;
        buf << fixture.rdbuf();
        const Json raw = json_from_text(buf.str());
        const InstanceFile fig = instance_file_from_json(raw);

        // (a) every single boundary label flip breaks validity with a witness
        for (const auto& v : fig.triangulation.vertices) {
            if (!v.on_boundary) continue;
            Labeling mutant = fig.labeling;
            mutant.labels[v.id] = -mutant.labels[v.id];
            const ValidityReport rep = validate_tucker(fig.triangulation, mutant);
            expect(!rep.ok(), "flip of vertex " + std::to_string(v.id) + " went unnoticed",
                   notes);
        }

        // (b) a corrupted stored report is rejected, in process and via the cli
        const Report fresh = check_tucker_instance(fig.triangulation, fig.labeling,
                                                   EnclosureKind::shell, "planar-example");
        Json stored = report_to_json(fresh);
        stored["polynomials"]["C_total_t"][0] = "9";
        expect(json_to_text(stored) != json_to_text(report_to_json(fresh)),
               "coefficient corruption is invisible in serialized form", notes);
        const fs::path repfile = temp_file("report.json");
        const fs::path forged = temp_file("forged.json");
        expect(run_cli("check " + fixture_path() + " --report " + repfile.string()) == 0,
               "writing a fresh report failed", notes);
        expect(run_cli("check " + fixture_path() + " --expect-report " + repfile.string()) == 0,
               "replaying an intact report failed", notes);
        {
            std::ofstream out(forged);
            out << json_to_text(stored);
        }
        expect(run_cli("check " + fixture_path() + " --expect-report " + forged.string()) == 1,
               "forged report was accepted", notes);

        // (c) exit code contract: 0 verified, 1 counterexample, 2 bad input
        Json flipped = raw;
        flipped["labeling"]["labels"]["4"] =
            -flipped["labeling"]["labels"]["4"].get<int>();
        const fs::path flipfile = temp_file("flipped.json");
        {
            std::ofstream out(flipfile);
            out << json_to_text(flipped);
        }
        const fs::path garbage = temp_file("garbage.json");
        {
            std::ofstream out(garbage);
            out << "{broken";
        }
        const fs::path d3file = temp_file("d3.json");
        expect(run_cli("gen --mode tucker --dim 3 --seed 1 --out " + d3file.string()) == 0,
               "gen for the render probe failed", notes);
        const fs::path svg = temp_file("probe.svg");

        const std::pair<std::string, int> matrix[] = {
            {"check " + fixture_path(), 0},
            {"check " + flipfile.string(), 1},
            {"check " + garbage.string(), 2},
            {"check /nonexistent.json", 2},
            {"gen --dim 0 --out /dev/null", 2},
            {"--help", 0},
            {"render " + d3file.string() + " --svg " + svg.string(), 2},
        };
        for (const auto& [args, want] : matrix) {
            const int got = run_cli(args);
            expect(got == want, "`" + args + "` exited " + std::to_string(got) + ", expected " +
                                    std::to_string(want), notes);
        }
        gate.report(9, "label flips, forged reports, and malformed inputs are all rejected",
                    notes.empty(), notes);
    }

    std::cout << (gate.failures == 0 ? "all criteria satisfied\n"
                                     : std::to_string(gate.failures) + " criteria failed\n");
    return gate.failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
