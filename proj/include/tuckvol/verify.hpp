#pragma once

#include "tuckvol/builders.hpp"
#include "tuckvol/deform.hpp"
#include "tuckvol/degree.hpp"
#include "tuckvol/labeling.hpp"
#include "tuckvol/report.hpp"
#include "tuckvol/rng.hpp"
#include "tuckvol/triangulation.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tuckvol {

enum class EnclosureKind { shell, square2d };

inline const char* to_string(EnclosureKind e) {
    return e == EnclosureKind::shell ? "shell" : "square2d";
}

inline EnclosureKind enclosure_from_string(const std::string& s) {
    if (s == "shell") return EnclosureKind::shell;
    if (s == "square2d") return EnclosureKind::square2d;
    throw std::invalid_argument("unknown enclosure kind: " + s);
}

// Everything one instance run produced: named check outcomes, the witnesses
// (complementary edges, degree tallies, fully-labeled cells), and the exact
// volume-sum polynomials the identities were asserted on.
struct Report {
    std::string instance_id;
    std::size_t dim = 0;
    std::vector<CheckResult> checks;
    std::vector<EdgeWitness> complementary_edges;
    std::vector<EdgeWitness> boundary_complementary_edges;
    std::optional<DegreeReport> degree;
    std::optional<int> winding;
    std::optional<FullyLabeledCount> fully_labeled;
    std::map<std::string, Poly> polynomials;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }

    const CheckResult* find_check(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

// Labels are usable for the deformation machinery when every vertex has one
// in {0, +-1, ..., +-d} with 0 confined to the star center. Weaker than full
// Tucker validity: anti-symmetry is not required here.
inline bool tucker_labels_usable(const Triangulation& t, const Labeling& l, std::string& why) {
    if (l.kind != LabelKind::tucker) {
        why = "labeling kind is " + std::string(to_string(l.kind)) + ", expected tucker";
        return false;
    }
    const int d = static_cast<int>(t.dim);
    for (const auto& v : t.vertices) {
        if (!l.has_label(v.id)) {
            why = "vertex " + std::to_string(v.id) + " has no label";
            return false;
        }
        const int lab = l.label_of(v.id);
        if (lab == 0) {
            if (!t.star_center || *t.star_center != v.id) {
                why = "label 0 on vertex " + std::to_string(v.id) + ", which is not the star center";
                return false;
            }
        } else if (lab < -d || lab > d) {
            why = "label " + std::to_string(lab) + " on vertex " + std::to_string(v.id) +
                  " is outside {+-1..+-" + std::to_string(d) + "}";
            return false;
        }
    }
    return true;
}

inline CheckResult constancy_check(std::string name, const Poly& total, const Rational& expected) {
    if (total == Poly::constant(expected))
        return CheckResult::passed(std::move(name), "constant " + rational_str(expected));
    return CheckResult::failed(std::move(name), "expected constant " + rational_str(expected) +
                                                    ", got " + total.str());
}

inline CheckResult poly_equal_check(std::string name, const Poly& a, const Poly& b) {
    if (a == b) return CheckResult::passed(std::move(name));
    return CheckResult::failed(std::move(name), "(" + a.str() + ") vs (" + b.str() + ")");
}

struct EnclosureSums {
    Poly total, core, shell;
};

inline EnclosureSums split_sums(const Triangulation& c, const TargetAssignment& a) {
    const VolumePoly vp = volume_sum_poly(c, a, SimplexFilter::all);
    EnclosureSums out;
    out.total = vp.total;
    for (const auto& [index, poly] : vp.per_simplex)
        (index < c.core_count ? out.core : out.shell) += poly;
    return out;
}

}  // namespace detail

// Runs every check the Tucker pipeline asserts, in proof order, against the
// triangulation t_p of the cross-polytope P and a labeling of its vertices.
// Invalid input never throws (square2d with d != 2 excepted); each anomaly
// becomes a failed or skipped check with a witness in its detail string.
inline Report check_tucker_instance(const Triangulation& t_p, const Labeling& l,
                                    EnclosureKind enclosure = EnclosureKind::shell,
                                    std::string instance_id = {}) {
    if (enclosure == EnclosureKind::square2d && t_p.dim != 2)
        throw std::invalid_argument("check_tucker_instance: square2d enclosure requires d = 2");

    Report r;
    r.instance_id = std::move(instance_id);
    r.dim = t_p.dim;
    const std::size_t d = t_p.dim;

    // 1. Structure: t_p triangulates P, so unsigned volumes sum to 2^d/d!.
    const ValidityReport tv = validate_triangulation(t_p, cross_polytope_volume(d));
    r.checks.push_back(tv.ok() ? CheckResult::passed("triangulation-valid")
                               : CheckResult::failed("triangulation-valid", tv.errors.front()));
    if (!tv.ok()) return r;

    // 2. Labeling hypotheses of Tucker's lemma.
    const ValidityReport lv = validate_tucker(t_p, l);
    r.checks.push_back(lv.ok() ? CheckResult::passed("tucker-labeling-valid")
                               : CheckResult::failed("tucker-labeling-valid", lv.errors.front()));

    std::string why;
    if (!detail::tucker_labels_usable(t_p, l, why)) {
        r.checks.push_back(CheckResult::skip("deformation-pipeline", "labels unusable: " + why));
        return r;
    }

    r.complementary_edges = find_complementary_edges(t_p, l);
    r.boundary_complementary_edges = find_boundary_complementary_edges(t_p, l);
    bool zero_free = true;
    for (const auto& v : t_p.vertices)
        if (l.label_of(v.id) == 0) zero_free = false;

    // 3. Build the star sibling T* over the same boundary and enclose both
    // in C = 2P with an identical shell.
    const Triangulation t = orient_positively(t_p);
    const Triangulation b = boundary_complex(t);
    const Triangulation star = star_from_boundary(b, t.next_vertex_id());
    const Triangulation c_t = assemble_enclosure(t, Rational(2));
    const Triangulation c_star = assemble_enclosure(star, Rational(2));
    const TargetAssignment targets_t = targets_from_labeling(c_t, l);
    const TargetAssignment targets_star = targets_from_labeling(c_star, l);

    const detail::EnclosureSums sums_t = detail::split_sums(c_t, targets_t);
    const detail::EnclosureSums sums_star = detail::split_sums(c_star, targets_star);
    r.polynomials["C_total_t"] = sums_t.total;
    r.polynomials["C_total_star"] = sums_star.total;
    r.polynomials["E_total_t"] = sums_t.shell;
    r.polynomials["E_total_star"] = sums_star.shell;
    r.polynomials["P_total_t"] = sums_t.core;
    r.polynomials["P_total_star"] = sums_star.core;

    // 4. The volume sum over C is the constant vol(C) under both deformations.
    const Rational vol_c = enclosure_volume(d, Rational(2));
    r.checks.push_back(detail::constancy_check("deformation-volume-constant-t", sums_t.total, vol_c));
    r.checks.push_back(
        detail::constancy_check("deformation-volume-constant-star", sums_star.total, vol_c));

    // 5. Both deformations agree on the shell E, where they move the same
    // vertices to the same targets.
    r.checks.push_back(detail::poly_equal_check("shell-sums-equal", sums_t.shell, sums_star.shell));

    // 6. Hence they agree on P: the core sums are equal as polynomials, in
    // particular at t = 1.
    r.checks.push_back(detail::poly_equal_check("core-sums-equal", sums_t.core, sums_star.core));
    if (sums_t.total == sums_t.core + sums_t.shell && sums_star.total == sums_star.core + sums_star.shell)
        r.checks.push_back(CheckResult::passed("sum-decomposition"));
    else
        r.checks.push_back(CheckResult::failed("sum-decomposition", "core + shell != total"));

    // 7. Tucker's lemma: a complementary edge exists. Stated only for valid
    // zero-free labelings (a 0 label removes a vertex from every +-pair).
    if (!lv.ok())
        r.checks.push_back(CheckResult::skip("complementary-edge-exists",
                                             "hypothesis not met: labeling invalid"));
    else if (!zero_free)
        r.checks.push_back(CheckResult::skip("complementary-edge-exists",
                                             "hypothesis not met: labeling uses the center label 0"));
    else if (r.complementary_edges.empty())
        r.checks.push_back(CheckResult::failed("complementary-edge-exists",
                                               "valid labeling produced no complementary edge"));
    else
        r.checks.push_back(CheckResult::passed("complementary-edge-exists",
                                               std::to_string(r.complementary_edges.size()) +
                                                   " found"));

    // 8. Degree block, which only makes sense when no complementary edge
    // sits on the boundary (the induced boundary map is simplicial then).
    const bool boundary_clean = r.boundary_complementary_edges.empty();
    const std::string hyp = "hypothesis not met: complementary edge on the boundary";
    if (boundary_clean) {
        const DegreeReport deg = degree_of_labeling(b, l);
        r.degree = deg;
        r.checks.push_back(deg.consistent
                               ? CheckResult::passed("degree-well-defined",
                                                     "degree " + std::to_string(deg.degree))
                               : CheckResult::failed("degree-well-defined",
                                                     "p - n differs across facets"));
        if (!lv.ok())
            r.checks.push_back(
                CheckResult::skip("degree-odd", "hypothesis not met: labeling invalid"));
        else if (deg.degree % 2 != 0)
            r.checks.push_back(CheckResult::passed("degree-odd", std::to_string(deg.degree)));
        else
            r.checks.push_back(CheckResult::failed("degree-odd", "degree " +
                                                                     std::to_string(deg.degree) +
                                                                     " is even"));

        const Rational bridge_left = poly_eval(sums_star.core, Rational(1));
        const Rational bridge_right = Rational(deg.degree) * cross_polytope_volume(d);
        if (!deg.consistent)
            r.checks.push_back(
                CheckResult::skip("degree-volume-bridge", "hypothesis not met: degree not well-defined"));
        else if (bridge_left == bridge_right)
            r.checks.push_back(CheckResult::passed(
                "degree-volume-bridge", "S*(1) = " + rational_str(bridge_left) + " = deg * vol(P)"));
        else
            r.checks.push_back(CheckResult::failed(
                "degree-volume-bridge", "S*(1) = " + rational_str(bridge_left) + " but deg * vol(P) = " +
                                    rational_str(bridge_right)));

        if (d == 2) {
            try {
                const int w = winding_number_2d(b, l);
                r.winding = w;
                if (deg.consistent && w == deg.degree)
                    r.checks.push_back(
                        CheckResult::passed("winding-matches-degree", std::to_string(w)));
                else
                    r.checks.push_back(CheckResult::failed(
                        "winding-matches-degree", "winding " + std::to_string(w) + " vs degree " +
                                                      std::to_string(deg.degree)));
            } catch (const std::exception& e) {
                r.checks.push_back(CheckResult::failed("winding-matches-degree", e.what()));
            }
        } else {
            r.checks.push_back(
                CheckResult::skip("winding-matches-degree", "only defined for d = 2"));
        }
    } else {
        r.checks.push_back(CheckResult::skip("degree-well-defined", hyp));
        r.checks.push_back(CheckResult::skip("degree-odd", hyp));
        r.checks.push_back(CheckResult::skip("degree-volume-bridge", hyp));
        r.checks.push_back(CheckResult::skip("winding-matches-degree",
                                             d == 2 ? hyp : "only defined for d = 2"));
    }

    // 9. No complementary edge anywhere forces the core sum to vanish at
    // t = 1 (no cell can reach d+1 affinely independent targets). Only
    // applicable when every label is nonzero.
    if (!zero_free)
        r.checks.push_back(CheckResult::skip("no-edge-volume-vanishes",
                                             "hypothesis not met: labeling uses the center label 0"));
    else if (!r.complementary_edges.empty())
        r.checks.push_back(CheckResult::skip("no-edge-volume-vanishes",
                                             "hypothesis not met: complementary edges present"));
    else {
        const Rational at_one = poly_eval(sums_t.core, Rational(1));
        r.checks.push_back(at_one == 0
                               ? CheckResult::passed("no-edge-volume-vanishes", "S(1) = 0")
                               : CheckResult::failed("no-edge-volume-vanishes",
                                                     "no complementary edge but S(1) = " +
                                                         rational_str(at_one)));
    }

    // d=2 replay against the square enclosure with vol(C) = 4h^2, h = 2.
    if (enclosure == EnclosureKind::square2d) {
        const Rational h(2);
        const Triangulation sq_t = square_enclosure_2d(t, h);
        const Triangulation sq_star = square_enclosure_2d(star, h);
        const TargetAssignment sq_targets_t = targets_from_labeling(sq_t, l);
        const TargetAssignment sq_targets_star = targets_from_labeling(sq_star, l);
        const detail::EnclosureSums sq_sums_t = detail::split_sums(sq_t, sq_targets_t);
        const detail::EnclosureSums sq_sums_star = detail::split_sums(sq_star, sq_targets_star);
        r.polynomials["C_total_t_square"] = sq_sums_t.total;
        r.polynomials["C_total_star_square"] = sq_sums_star.total;
        r.polynomials["E_total_t_square"] = sq_sums_t.shell;
        r.polynomials["E_total_star_square"] = sq_sums_star.shell;
        r.polynomials["P_total_t_square"] = sq_sums_t.core;
        r.polynomials["P_total_star_square"] = sq_sums_star.core;

        const Rational vol_sq = Rational(4) * h * h;
        r.checks.push_back(
            detail::constancy_check("square-volume-constant-t", sq_sums_t.total, vol_sq));
        r.checks.push_back(
            detail::constancy_check("square-volume-constant-star", sq_sums_star.total, vol_sq));
        r.checks.push_back(
            detail::poly_equal_check("square-shell-sums-equal", sq_sums_t.shell, sq_sums_star.shell));
        r.checks.push_back(
            detail::poly_equal_check("square-core-sums-equal", sq_sums_t.core, sq_sums_star.core));
        if (sq_sums_t.total == sq_sums_t.core + sq_sums_t.shell &&
            sq_sums_star.total == sq_sums_star.core + sq_sums_star.shell)
            r.checks.push_back(CheckResult::passed("square-sum-decomposition"));
        else
            r.checks.push_back(
                CheckResult::failed("square-sum-decomposition", "core + shell != total"));
    }

    return r;
}

// The Sperner pipeline over a triangulation of the standard simplex: validity,
// volume-sum constancy 1/d!, and the odd / signed fully-labeled counts.
inline Report check_sperner_instance(const Triangulation& t_s, const Labeling& l,
                                     std::string instance_id = {}) {
    Report r;
    r.instance_id = std::move(instance_id);
    r.dim = t_s.dim;
    const std::size_t d = t_s.dim;

    const ValidityReport tv = validate_triangulation(t_s, standard_simplex_volume(d));
    r.checks.push_back(tv.ok() ? CheckResult::passed("triangulation-valid")
                               : CheckResult::failed("triangulation-valid", tv.errors.front()));
    if (!tv.ok()) return r;

    const std::vector<Point> ambient = standard_simplex_frame(d);
    const ValidityReport lv = validate_sperner(t_s, l, ambient);
    r.checks.push_back(lv.ok() ? CheckResult::passed("sperner-labeling-valid")
                               : CheckResult::failed("sperner-labeling-valid", lv.errors.front()));
    if (!lv.ok()) return r;  // constancy needs the carrier condition

    const Triangulation t = orient_positively(t_s);
    const TargetAssignment targets = targets_from_labeling(t, l, ambient);
    const Poly total = volume_sum_poly(t, targets).total;
    r.polynomials["S_total"] = total;
    r.checks.push_back(
        detail::constancy_check("deformation-volume-constant", total, standard_simplex_volume(d)));

    const FullyLabeledCount fc = find_fully_labeled(t, l);
    r.fully_labeled = fc;
    r.checks.push_back(fc.total() % 2 != 0
                           ? CheckResult::passed("fully-labeled-count-odd", std::to_string(fc.total()))
                           : CheckResult::failed("fully-labeled-count-odd",
                                                 std::to_string(fc.total()) + " is even"));
    r.checks.push_back(fc.signed_count() == 1
                           ? CheckResult::passed("fully-labeled-signed-count",
                                                 std::to_string(fc.positive) + " - " +
                                                     std::to_string(fc.negative))
                           : CheckResult::failed("fully-labeled-signed-count",
                                                 "positive - negative = " +
                                                     std::to_string(fc.signed_count())));
    return r;
}

// --- deterministic instance generation -------------------------------------

struct Instance {
    std::string id;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    LabelKind kind = LabelKind::tucker;
    RefinementSpec refinement;
    Triangulation triangulation;
    Labeling labeling;
};

// Refinement derived from the instance coordinates: rounds cycle 0,1,2 with
// the seed, and the scheme alternates with seed parity (edge-midpoint splits
// exist for d <= 3 only).
inline RefinementSpec derived_refinement(std::size_t dim, std::uint64_t seed) {
    RefinementSpec spec;
    spec.rounds = static_cast<unsigned>(seed % 3);
    spec.scheme = (seed % 2 != 0 && dim <= 3) ? RefinementSpec::Scheme::edge_midpoint
                                              : RefinementSpec::Scheme::barycentric;
    spec.seed = mix_seed(static_cast<std::uint64_t>(dim), seed);
    return spec;
}

inline Instance make_tucker_instance(std::size_t dim, std::uint64_t seed,
                                     std::optional<RefinementSpec> refinement = std::nullopt) {
    Instance inst;
    inst.dim = dim;
    inst.seed = seed;
    inst.kind = LabelKind::tucker;
    inst.refinement = refinement ? *refinement : derived_refinement(dim, seed);
    inst.id = "tucker-d" + std::to_string(dim) + "-seed" + std::to_string(seed);
    inst.triangulation = refine(cross_polytope_cone(dim), inst.refinement);
    inst.labeling =
        random_tucker_labeling(inst.triangulation, mix_seed(static_cast<std::uint64_t>(dim), seed));
    return inst;
}

inline Instance make_sperner_instance(std::size_t dim, std::uint64_t seed,
                                      std::optional<RefinementSpec> refinement = std::nullopt) {
    Instance inst;
    inst.dim = dim;
    inst.seed = seed;
    inst.kind = LabelKind::sperner;
    inst.refinement = refinement ? *refinement : derived_refinement(dim, seed);
    inst.id = "sperner-d" + std::to_string(dim) + "-seed" + std::to_string(seed);
    inst.triangulation = refine(standard_simplex(dim), inst.refinement);
    inst.labeling = random_sperner_labeling(
        inst.triangulation, mix_seed(static_cast<std::uint64_t>(dim), seed),
        standard_simplex_frame(dim));
    return inst;
}

inline Instance make_instance(LabelKind kind, std::size_t dim, std::uint64_t seed,
                              std::optional<RefinementSpec> refinement = std::nullopt) {
    return kind == LabelKind::tucker ? make_tucker_instance(dim, seed, refinement)
                                     : make_sperner_instance(dim, seed, refinement);
}

// --- batch driver -----------------------------------------------------------

struct BatchOptions {
    LabelKind mode = LabelKind::tucker;
    std::vector<std::size_t> dims = {1, 2, 3};
    std::uint64_t seed_begin = 0;
    std::uint64_t seed_count = 1;
    std::optional<RefinementSpec> refinement;  // fixed spec, or per-seed derivation when empty
    EnclosureKind enclosure = EnclosureKind::shell;
};

struct BatchSummary {
    std::vector<Report> reports;
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool halted = false;  // a failed report is a counterexample; the batch stops on it
    double seconds = 0.0;
};

inline BatchSummary batch_run(const BatchOptions& opt) {
    BatchSummary out;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t dim : opt.dims) {
        for (std::uint64_t k = 0; k < opt.seed_count && !out.halted; ++k) {
            const Instance inst = make_instance(opt.mode, dim, opt.seed_begin + k, opt.refinement);
            Report rep = opt.mode == LabelKind::tucker
                             ? check_tucker_instance(inst.triangulation, inst.labeling,
                                                     opt.enclosure, inst.id)
                             : check_sperner_instance(inst.triangulation, inst.labeling, inst.id);
            const bool ok = rep.all_passed();
            out.reports.push_back(std::move(rep));
            if (ok) {
                ++out.passed;
            } else {
                ++out.failed;
                out.halted = true;
            }
        }
        if (out.halted) break;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace tuckvol
