#pragma once

#include "tuckvol/builders.hpp"
#include "tuckvol/geometry.hpp"
#include "tuckvol/rng.hpp"
#include "tuckvol/report.hpp"
#include "tuckvol/triangulation.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tuckvol {

enum class LabelKind { tucker, sperner };

inline const char* to_string(LabelKind k) { return k == LabelKind::tucker ? "tucker" : "sperner"; }

inline LabelKind label_kind_from_string(const std::string& s) {
    if (s == "tucker") return LabelKind::tucker;
    if (s == "sperner") return LabelKind::sperner;
    throw std::invalid_argument("unknown labeling kind: " + s);
}

// Vertex labels: {+-1,...,+-d} for Tucker (0 reserved for a star center),
// {1,...,d+1} for Sperner.
struct Labeling {
    LabelKind kind = LabelKind::tucker;
    std::map<VertexId, int> labels;

    bool has_label(VertexId id) const { return labels.count(id) != 0; }

    int label_of(VertexId id) const {
        const auto it = labels.find(id);
        if (it == labels.end())
            throw std::out_of_range("Labeling: vertex " + std::to_string(id) + " has no label");
        return it->second;
    }
};

// An edge whose endpoint labels sum to zero.
struct EdgeWitness {
    VertexId u = 0, v = 0;
    int label_u = 0, label_v = 0;
};

// Checks a Tucker labeling against the hypotheses of Tucker's lemma:
// totality, label range (0 only on the star center), antipodal boundary
// symmetry of the complex, and the anti-symmetry l(-v) = -l(v) on boundary
// vertices.
inline ValidityReport validate_tucker(const Triangulation& t, const Labeling& l) {
    ValidityReport rep;
    if (l.kind != LabelKind::tucker) {
        rep.add("labeling kind is not tucker");
        return rep;
    }
    const int d = static_cast<int>(t.dim);
    for (const auto& v : t.vertices) {
        if (!l.has_label(v.id)) {
            rep.add("vertex " + std::to_string(v.id) + " has no label");
            continue;
        }
        const int lab = l.label_of(v.id);
        if (lab == 0) {
            if (!t.star_center || *t.star_center != v.id)
                rep.add("vertex " + std::to_string(v.id) +
                        " carries label 0 but is not the star center");
        } else if (lab < -d || lab > d) {
            rep.add("vertex " + std::to_string(v.id) + " has out-of-range label " +
                    std::to_string(lab));
        }
    }
    for (const auto& [id, lab] : l.labels)
        if (!t.has_vertex(id))
            rep.add("label assigned to unknown vertex " + std::to_string(id));
    if (!rep.ok()) return rep;

    // Boundary structure: antipodally symmetric vertex set and cell set.
    std::map<Point, VertexId> boundary_by_coords;
    for (const auto& v : t.vertices)
        if (v.on_boundary) boundary_by_coords[v.coords] = v.id;
    for (const auto& v : t.vertices) {
        if (!v.on_boundary) continue;
        const auto it = boundary_by_coords.find(point_negate(v.coords));
        if (it == boundary_by_coords.end()) {
            rep.add("boundary vertex " + std::to_string(v.id) + " has no antipodal partner");
            continue;
        }
        const int a = l.label_of(v.id), b = l.label_of(it->second);
        if (a + b != 0)
            rep.add("antipodal boundary labels do not sum to zero: l(" + std::to_string(v.id) +
                    ")=" + std::to_string(a) + ", l(" + std::to_string(it->second) + ")=" +
                    std::to_string(b));
    }
    if (!rep.ok()) return rep;

    try {
        const Triangulation b = t.is_boundary_complex() ? t : boundary_complex(t);
        if (!check_antipodal_symmetry(b))
            rep.add("boundary complex is not antipodally symmetric");
    } catch (const std::exception& e) {
        rep.add(std::string("boundary complex could not be extracted: ") + e.what());
    }
    return rep;
}

// All edges of the complex whose endpoint labels sum to zero, ascending by
// endpoint ids. Edges with an unlabeled endpoint are ignored.
inline std::vector<EdgeWitness> find_complementary_edges(const Triangulation& t, const Labeling& l) {
    std::vector<EdgeWitness> out;
    for (const auto& [u, v] : enumerate_edges(t)) {
        if (!l.has_label(u) || !l.has_label(v)) continue;
        const int a = l.label_of(u), b = l.label_of(v);
        if (a + b == 0 && a != 0) out.push_back(EdgeWitness{u, v, a, b});
    }
    return out;
}

// Complementary edges lying inside the boundary: both endpoints in one
// boundary cell. For a solid complex the boundary is extracted first.
inline std::vector<EdgeWitness> find_boundary_complementary_edges(const Triangulation& t,
                                                                  const Labeling& l) {
    if (t.is_boundary_complex()) return find_complementary_edges(t, l);
    return find_complementary_edges(boundary_complex(t), l);
}

// Builds a Tucker labeling from an odd map g: R^d -> R^d, nonzero on every
// vertex: l(v) = sign(g(v)_i) * i where i is the smallest index maximizing
// |g(v)_i|. A designated star center is labeled 0 instead of sampling g.
// Oddness g(-v) = -g(v) is verified on antipodal boundary vertex pairs.
inline Labeling labeling_from_odd_map(const Triangulation& t,
                                      const std::function<std::vector<Rational>(const Point&)>& g) {
    const std::size_t d = t.dim;
    std::map<VertexId, std::vector<Rational>> values;
    for (const auto& v : t.vertices) {
        if (t.star_center && *t.star_center == v.id) continue;
        auto gv = g(v.coords);
        if (gv.size() != d) throw std::invalid_argument("labeling_from_odd_map: g has wrong arity");
        values[v.id] = std::move(gv);
    }
    // Oddness on the boundary.
    std::map<Point, VertexId> boundary_by_coords;
    for (const auto& v : t.vertices)
        if (v.on_boundary) boundary_by_coords[v.coords] = v.id;
    for (const auto& v : t.vertices) {
        if (!v.on_boundary) continue;
        const auto it = boundary_by_coords.find(point_negate(v.coords));
        if (it == boundary_by_coords.end())
            throw std::invalid_argument("labeling_from_odd_map: boundary vertex " +
                                        std::to_string(v.id) + " has no antipodal partner");
        const auto& a = values.at(v.id);
        const auto& b = values.at(it->second);
        for (std::size_t i = 0; i < d; ++i)
            if (a[i] + b[i] != 0)
                throw std::invalid_argument("labeling_from_odd_map: g is not odd at boundary vertex " +
                                            std::to_string(v.id));
    }

    Labeling l;
    l.kind = LabelKind::tucker;
    if (t.star_center) l.labels[*t.star_center] = 0;
    for (const auto& [id, gv] : values) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < d; ++i)
            if (abs_of(gv[i]) > abs_of(gv[best])) best = i;
        const int s = sign_of(gv[best]);
        if (s == 0)
            throw std::invalid_argument("labeling_from_odd_map: g vanishes at vertex " +
                                        std::to_string(id));
        l.labels[id] = s * static_cast<int>(best + 1);
    }
    return l;
}

// Random valid Tucker labeling: boundary vertices drawn in antipodal pairs
// (l(-v) = -l(v)), interior vertices drawn independently; all labels in
// {+-1,...,+-d}. Deterministic for a fixed seed.
inline Labeling random_tucker_labeling(const Triangulation& t, std::uint64_t seed) {
    const std::size_t d = t.dim;
    std::map<Point, VertexId> boundary_by_coords;
    for (const auto& v : t.vertices)
        if (v.on_boundary) boundary_by_coords[v.coords] = v.id;

    Rng rng(mix_seed(seed, 0x7ac7e5u));
    Labeling l;
    l.kind = LabelKind::tucker;
    for (const auto& v : t.vertices) {
        if (!v.on_boundary) {
            l.labels[v.id] = rng.tucker_label(d);
            continue;
        }
        const auto it = boundary_by_coords.find(point_negate(v.coords));
        if (it == boundary_by_coords.end())
            throw std::invalid_argument("random_tucker_labeling: boundary not antipodally symmetric");
        const VertexId partner = it->second;
        if (partner == v.id)
            throw std::invalid_argument("random_tucker_labeling: vertex is its own antipode");
        if (partner < v.id) continue;  // the smaller id of the pair draws for both
        const int lab = rng.tucker_label(d);
        l.labels[v.id] = lab;
        l.labels[partner] = -lab;
    }
    return l;
}

// Checks a Sperner labeling: every vertex labeled by one of the ambient
// simplex's vertices spanning its carrier (minimal face). Labels are 1-based
// indices into `ambient`. Throws when a vertex lies outside the ambient
// simplex.
inline ValidityReport validate_sperner(const Triangulation& t, const Labeling& l,
                                       const std::vector<Point>& ambient) {
    ValidityReport rep;
    if (l.kind != LabelKind::sperner) {
        rep.add("labeling kind is not sperner");
        return rep;
    }
    const int max_label = static_cast<int>(ambient.size());
    for (const auto& v : t.vertices) {
        if (!l.has_label(v.id)) {
            rep.add("vertex " + std::to_string(v.id) + " has no label");
            continue;
        }
        const int lab = l.label_of(v.id);
        if (lab < 1 || lab > max_label) {
            rep.add("vertex " + std::to_string(v.id) + " has out-of-range label " +
                    std::to_string(lab));
            continue;
        }
        const auto face = carrier(v.coords, ambient);
        if (!face.count(static_cast<std::size_t>(lab - 1)))
            rep.add("vertex " + std::to_string(v.id) + " labeled " + std::to_string(lab) +
                    " outside its carrier");
    }
    return rep;
}

// Random valid Sperner labeling: each vertex draws uniformly from its
// carrier. Deterministic for a fixed seed.
inline Labeling random_sperner_labeling(const Triangulation& t, std::uint64_t seed,
                                        const std::vector<Point>& ambient) {
    Rng rng(mix_seed(seed, 0x59e27bu));
    Labeling l;
    l.kind = LabelKind::sperner;
    for (const auto& v : t.vertices) {
        const auto face = carrier(v.coords, ambient);
        std::vector<std::size_t> options(face.begin(), face.end());
        l.labels[v.id] = static_cast<int>(options[rng.below(options.size())] + 1);
    }
    return l;
}

struct FullyLabeledCount {
    long long positive = 0;
    long long negative = 0;
    std::vector<std::pair<Simplex, int>> witnesses;  // (simplex, orientation in label order)

    long long total() const { return positive + negative; }
    long long signed_count() const { return positive - negative; }
};

// Maximal simplices carrying all d+1 distinct labels, split by the sign of
// the signed volume of the vertex tuple reordered by ascending label.
inline FullyLabeledCount find_fully_labeled(const Triangulation& t, const Labeling& l) {
    FullyLabeledCount out;
    const std::size_t d = t.dim;
    for (const auto& s : t.simplices) {
        if (s.vertices.size() != d + 1) continue;
        std::vector<std::pair<int, VertexId>> by_label;
        by_label.reserve(d + 1);
        bool usable = true;
        for (VertexId id : s.vertices) {
            if (!l.has_label(id)) {
                usable = false;
                break;
            }
            by_label.push_back({l.label_of(id), id});
        }
        if (!usable) continue;
        std::sort(by_label.begin(), by_label.end());
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < by_label.size(); ++i)
            if (by_label[i].first == by_label[i + 1].first) {
                distinct = false;
                break;
            }
        if (!distinct) continue;
        std::vector<Point> pts;
        pts.reserve(d + 1);
        for (const auto& [lab, id] : by_label) pts.push_back(t.coords(id));
        const int sgn = sign_of(points_signed_volume(pts));
        if (sgn > 0)
            ++out.positive;
        else if (sgn < 0)
            ++out.negative;
        out.witnesses.push_back({s, sgn});
    }
    return out;
}

}  // namespace tuckvol
