#pragma once

#include "tuckvol/builders.hpp"
#include "tuckvol/labeling.hpp"
#include "tuckvol/poly.hpp"
#include "tuckvol/rational.hpp"
#include "tuckvol/triangulation.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tuckvol {

// Per-vertex deformation targets: the position of each vertex at time t = 1.
// Vertices meant to stay fixed carry their own position.
struct TargetAssignment {
    std::map<VertexId, Point> targets;

    const Point& target_of(VertexId id) const {
        const auto it = targets.find(id);
        if (it == targets.end())
            throw std::out_of_range("TargetAssignment: no target for vertex " + std::to_string(id));
        return it->second;
    }
};

// Builds the deformation targets induced by a labeling.
//
// Tucker: a vertex labeled k moves to e_k (k < 0 means -e_|k|, the special
// center label 0 means the origin); unlabeled vertices (the enclosure shell)
// stay fixed.
//
// Sperner: every vertex must be labeled and moves to the ambient-simplex
// vertex its label names.
inline TargetAssignment targets_from_labeling(const Triangulation& t, const Labeling& l,
                                              const std::vector<Point>& ambient = {}) {
    TargetAssignment a;
    const int d = static_cast<int>(t.dim);
    for (const auto& v : t.vertices) {
        if (!l.has_label(v.id)) {
            if (l.kind == LabelKind::sperner)
                throw std::invalid_argument("targets_from_labeling: vertex " + std::to_string(v.id) +
                                            " has no label");
            a.targets[v.id] = v.coords;
            continue;
        }
        const int lab = l.label_of(v.id);
        if (l.kind == LabelKind::tucker) {
            if (lab == 0) {
                a.targets[v.id] = Point(t.dim, Rational(0));
            } else if (lab >= -d && lab <= d) {
                a.targets[v.id] = unit_point(t.dim, static_cast<std::size_t>(std::abs(lab)),
                                             lab > 0 ? 1 : -1);
            } else {
                throw std::invalid_argument("targets_from_labeling: out-of-range label " +
                                            std::to_string(lab));
            }
        } else {
            if (lab < 1 || static_cast<std::size_t>(lab) > ambient.size())
                throw std::invalid_argument("targets_from_labeling: label " + std::to_string(lab) +
                                            " does not name an ambient vertex");
            a.targets[v.id] = ambient[static_cast<std::size_t>(lab - 1)];
        }
    }
    return a;
}

// The exact polynomial t -> signed volume of the simplex whose vertices move
// linearly from their positions to their targets. The volume is a determinant
// with entries affine in t, hence a polynomial of degree <= d; it is
// recovered from d+1 exact evaluations at t = 0, 1/d, ..., 1.
inline Poly simplex_volume_poly(const Simplex& s, const Triangulation& t, const TargetAssignment& a) {
    const std::size_t d = t.dim;
    if (s.dim() != d)
        throw std::invalid_argument("simplex_volume_poly: simplex is not full-dimensional");
    const auto start = simplex_points(s, t);
    std::vector<Point> finish;
    finish.reserve(s.vertices.size());
    for (VertexId id : s.vertices) {
        const Point& target = a.target_of(id);
        if (target.size() != d)
            throw std::invalid_argument("simplex_volume_poly: target dimension mismatch");
        finish.push_back(target);
    }
    std::vector<std::pair<Rational, Rational>> samples;
    samples.reserve(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        const Rational tk = Rational(static_cast<long long>(k)) / Rational(static_cast<long long>(d));
        std::vector<Point> pts;
        pts.reserve(start.size());
        for (std::size_t i = 0; i < start.size(); ++i)
            pts.push_back(point_add(point_scale(Rational(1) - tk, start[i]),
                                    point_scale(tk, finish[i])));
        samples.push_back({tk, Rational(s.orientation) * points_signed_volume(pts)});
    }
    return poly_interpolate(samples);
}

enum class SimplexFilter { all, core, shell };

// Per-simplex volume polynomials (indexed into the triangulation's simplex
// list) and their exact sum, over the whole complex or one side of the
// core/shell split recorded at assembly time.
struct VolumePoly {
    std::vector<std::pair<std::size_t, Poly>> per_simplex;
    Poly total;
};

inline VolumePoly volume_sum_poly(const Triangulation& t, const TargetAssignment& a,
                                  SimplexFilter filter = SimplexFilter::all) {
    std::size_t begin = 0, end = t.simplices.size();
    if (filter == SimplexFilter::core) end = t.core_count;
    if (filter == SimplexFilter::shell) begin = t.core_count;
    VolumePoly out;
    out.total = Poly::zero();
    for (std::size_t i = begin; i < end; ++i) {
        Poly p = simplex_volume_poly(t.simplices[i], t, a);
        out.total += p;
        out.per_simplex.push_back({i, std::move(p)});
    }
    return out;
}

}  // namespace tuckvol
