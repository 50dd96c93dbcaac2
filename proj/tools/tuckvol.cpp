// tuckvol: generate, check, batch-verify, and render labeled triangulation
// instances for the cross-polytope (Tucker) and standard-simplex (Sperner)
// volume arguments. Exit codes: 0 verified, 1 check failure (counterexample),
// 2 usage or malformed input.

#include "tuckvol/tuckvol.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GenArgs {
    std::size_t dim = 2;
    unsigned refine = 0;
    std::string scheme = "barycentric";
    std::uint64_t seed = 0;
    std::string mode = "tucker";
    std::string out;
};

struct CheckArgs {
    std::string instance_path;
    std::string enclosure = "shell";
    std::string report_path;
    std::string expect_report_path;
};

struct BatchArgs {
    std::vector<std::size_t> dims = {1, 2, 3};
    std::uint64_t seeds = 10;
    std::uint64_t seed_begin = 0;
    std::string mode = "tucker";
    std::string enclosure = "shell";
    std::optional<unsigned> rounds;
    std::string scheme = "barycentric";
    std::string json_out;
};

struct RenderArgs {
    std::string instance_path;
    std::string svg_path;
    std::string at_time = "0";
    bool highlight_complementary = false;
};

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

int run_gen(const GenArgs& a) {
    tuckvol::RefinementSpec spec;
    spec.scheme = tuckvol::scheme_from_string(a.scheme);
    spec.rounds = a.refine;
    spec.seed = tuckvol::mix_seed(static_cast<std::uint64_t>(a.dim), a.seed);
    const tuckvol::Instance inst =
        tuckvol::make_instance(tuckvol::label_kind_from_string(a.mode), a.dim, a.seed, spec);
    const tuckvol::Json j = tuckvol::instance_file_to_json(tuckvol::to_instance_file(inst));
    if (a.out.empty())
        std::cout << tuckvol::json_to_text(j);
    else
        tuckvol::write_json_file(a.out, j);
    return kExitOk;
}

void print_report(const tuckvol::Report& r) {
    for (const auto& c : r.checks) {
        std::cout << "  [" << tuckvol::to_string(c.status) << "] " << c.name;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
    }
    if (!r.complementary_edges.empty()) {
        std::cout << "  complementary edges:";
        const std::size_t shown = std::min<std::size_t>(r.complementary_edges.size(), 8);
        for (std::size_t i = 0; i < shown; ++i)
            std::cout << " {" << r.complementary_edges[i].u << ","
                      << r.complementary_edges[i].v << "}";
        if (shown < r.complementary_edges.size())
            std::cout << " (+" << r.complementary_edges.size() - shown << " more)";
        std::cout << "\n";
    }
}

int run_check(const CheckArgs& a) {
    const tuckvol::InstanceFile f =
        tuckvol::instance_file_from_json(tuckvol::read_json_file(a.instance_path));
    const tuckvol::EnclosureKind enclosure = tuckvol::enclosure_from_string(a.enclosure);
    if (enclosure == tuckvol::EnclosureKind::square2d && f.triangulation.dim != 2)
        throw std::invalid_argument("--enclosure square2d requires a d=2 instance");

    std::string id = a.instance_path;
    if (f.metadata.contains("id") && f.metadata["id"].is_string())
        id = f.metadata["id"].get<std::string>();
    else if (f.metadata.contains("mode") && f.metadata["mode"].is_string() &&
             f.metadata.contains("seed") && f.metadata["seed"].is_number_unsigned())
        id = f.metadata["mode"].get<std::string>() + "-d" + std::to_string(f.triangulation.dim) +
             "-seed" + std::to_string(f.metadata["seed"].get<std::uint64_t>());

    const tuckvol::Report report =
        f.labeling.kind == tuckvol::LabelKind::tucker
            ? tuckvol::check_tucker_instance(f.triangulation, f.labeling, enclosure, id)
            : tuckvol::check_sperner_instance(f.triangulation, f.labeling, id);

    std::cout << report.instance_id << ":\n";
    print_report(report);

    if (!a.report_path.empty())
        tuckvol::write_json_file(a.report_path, tuckvol::report_to_json(report));

    if (!a.expect_report_path.empty()) {
        const tuckvol::Json expected = tuckvol::read_json_file(a.expect_report_path);
        const tuckvol::Json actual = tuckvol::report_to_json(report);
        if (expected != actual) {
            std::cout << "stored report does not match this run\n";
            return kExitCheckFailed;
        }
        std::cout << "stored report matches\n";
    }

    if (!report.all_passed()) return kExitCheckFailed;
    return kExitOk;
}

int run_batch(const BatchArgs& a) {
    tuckvol::BatchOptions opt;
    opt.mode = tuckvol::label_kind_from_string(a.mode);
    opt.dims = a.dims;
    opt.seed_begin = a.seed_begin;
    opt.seed_count = a.seeds;
    opt.enclosure = tuckvol::enclosure_from_string(a.enclosure);
    if (opt.enclosure == tuckvol::EnclosureKind::square2d)
        for (std::size_t d : opt.dims)
            if (d != 2) throw std::invalid_argument("--enclosure square2d requires --dims 2 only");
    if (a.rounds) {
        tuckvol::RefinementSpec spec;
        spec.scheme = tuckvol::scheme_from_string(a.scheme);
        spec.rounds = *a.rounds;
        opt.refinement = spec;
    }

    const tuckvol::BatchSummary summary = tuckvol::batch_run(opt);
    for (const auto& r : summary.reports) {
        std::cout << (r.all_passed() ? "pass " : "FAIL ") << r.instance_id << "\n";
        if (!r.all_passed()) print_report(r);
    }
    std::cout << summary.passed << " passed, " << summary.failed << " failed ("
              << summary.seconds << "s)\n";

    if (!a.json_out.empty()) {
        tuckvol::Json out;
        out["mode"] = a.mode;
        out["passed"] = summary.passed;
        out["failed"] = summary.failed;
        out["halted"] = summary.halted;
        tuckvol::Json reports = tuckvol::Json::array();
        for (const auto& r : summary.reports) reports.push_back(tuckvol::report_to_json(r));
        out["reports"] = std::move(reports);
        tuckvol::write_json_file(a.json_out, out);
    }
    return summary.failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_render(const RenderArgs& a) {
    const tuckvol::InstanceFile f =
        tuckvol::instance_file_from_json(tuckvol::read_json_file(a.instance_path));
    const tuckvol::Rational t = tuckvol::parse_rational(a.at_time);
    const std::string svg =
        tuckvol::render_svg(f.triangulation, &f.labeling, t, a.highlight_complementary);
    if (a.svg_path.empty())
        std::cout << svg;
    else
        write_text_file(a.svg_path, svg);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact volume-argument verifier for Tucker and Sperner labelings"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a random labeled instance");
    cmd_gen->add_option("--dim", gen.dim, "ambient dimension d >= 1")->check(CLI::Range(1, 8));
    cmd_gen->add_option("--refine", gen.refine, "refinement rounds");
    cmd_gen->add_option("--scheme", gen.scheme, "barycentric | edge-midpoint");
    cmd_gen->add_option("--seed", gen.seed, "instance seed");
    cmd_gen->add_option("--mode", gen.mode, "tucker | sperner");
    cmd_gen->add_option("--out", gen.out, "output path (stdout when omitted)");

    CheckArgs check;
    CLI::App* cmd_check = app.add_subcommand("check", "run every check on an instance file");
    cmd_check->add_option("instance", check.instance_path, "instance JSON path")->required();
    cmd_check->add_option("--enclosure", check.enclosure, "shell | square2d");
    cmd_check->add_option("--report", check.report_path, "write the full report JSON here");
    cmd_check->add_option("--expect-report", check.expect_report_path,
                          "fail unless the run reproduces this stored report exactly");

    BatchArgs batch;
    CLI::App* cmd_batch = app.add_subcommand("batch", "generate-and-check a seed range");
    cmd_batch->add_option("--dims", batch.dims, "dimensions to cover, comma-separated")
        ->delimiter(',');
    cmd_batch->add_option("--seeds", batch.seeds, "number of consecutive seeds per dimension");
    cmd_batch->add_option("--seed-begin", batch.seed_begin, "first seed");
    cmd_batch->add_option("--mode", batch.mode, "tucker | sperner");
    cmd_batch->add_option("--enclosure", batch.enclosure, "shell | square2d");
    cmd_batch->add_option("--rounds", batch.rounds,
                          "fixed refinement rounds (per-seed derivation when omitted)");
    cmd_batch->add_option("--scheme", batch.scheme, "scheme for fixed rounds");
    cmd_batch->add_option("--json", batch.json_out, "write the summary JSON here");

    RenderArgs render;
    CLI::App* cmd_render = app.add_subcommand("render", "draw a d=2 instance as SVG");
    cmd_render->add_option("instance", render.instance_path, "instance JSON path")->required();
    cmd_render->add_option("--svg", render.svg_path, "output path (stdout when omitted)");
    cmd_render->add_option("--at-time", render.at_time, "deformation time, rational p/q in [0,1]");
    cmd_render->add_flag("--highlight-complementary", render.highlight_complementary,
                         "stroke complementary edges distinctly");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_gen)) return run_gen(gen);
        if (app.got_subcommand(cmd_check)) return run_check(check);
        if (app.got_subcommand(cmd_batch)) return run_batch(batch);
        return run_render(render);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
