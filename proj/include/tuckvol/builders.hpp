#pragma once

#include "tuckvol/geometry.hpp"
#include "tuckvol/rational.hpp"
#include "tuckvol/triangulation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tuckvol {

inline Rational rational_pow(const Rational& base, std::size_t exp) {
    Rational out(1);
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

// vol(P) for the cross-polytope P = conv(+-e_1, ..., +-e_d): 2^d / d!.
inline Rational cross_polytope_volume(std::size_t d) {
    return Rational(BigInt(1) << d) / Rational(factorial(d));
}

// vol(scale * P).
inline Rational enclosure_volume(std::size_t d, const Rational& scale) {
    return rational_pow(scale, d) * cross_polytope_volume(d);
}

inline Rational standard_simplex_volume(std::size_t d) {
    return Rational(1) / Rational(factorial(d));
}

inline Point unit_point(std::size_t d, std::size_t axis, int sign) {
    Point p(d, Rational(0));
    p[axis - 1] = Rational(sign);
    return p;
}

inline Rational l1_norm(const Point& p) {
    Rational n(0);
    for (const auto& c : p) n += abs_of(c);
    return n;
}

// All 2^d facet sign vectors of the cross-polytope, in mask order: bit i of
// the mask set means axis i+1 takes sign -1.
inline std::vector<std::vector<int>> facet_signatures(std::size_t d) {
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t(1) << d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << d); ++mask) {
        std::vector<int> s(d);
        for (std::size_t i = 0; i < d; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(std::move(s));
    }
    return out;
}

inline std::optional<VertexId> find_vertex_by_coords(const Triangulation& t, const Point& p) {
    for (const auto& v : t.vertices)
        if (v.coords == p) return v.id;
    return std::nullopt;
}

namespace detail {

inline void require_cross_polytope_boundary(const Triangulation& b, const char* who) {
    if (b.dim < 1) throw std::invalid_argument(std::string(who) + ": dimension must be >= 1");
    if (b.simplices.empty() || b.max_simplex_dim() + 1 != b.dim)
        throw std::invalid_argument(std::string(who) + ": input is not a (d-1)-dimensional complex");
    const auto rep = validate_boundary_complex(b);
    if (!rep.ok())
        throw std::invalid_argument(std::string(who) + ": invalid boundary complex: " + rep.errors.front());
    for (const auto& v : b.vertices)
        if (l1_norm(v.coords) != 1)
            throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v.id) +
                                        " does not lie on the cross-polytope boundary");
}

}  // namespace detail

// The cone triangulation of the cross-polytope: vertices +-e_i and the
// origin, one maximal simplex per facet, coned to the origin. Vertex ids:
// e_1..e_d get 0..d-1, -e_1..-e_d get d..2d-1, the origin gets 2d.
inline Triangulation cross_polytope_cone(std::size_t d) {
    if (d < 1) throw std::invalid_argument("cross_polytope_cone: dimension must be >= 1");
    Triangulation t;
    t.dim = d;
    for (std::size_t i = 1; i <= d; ++i) t.add_vertex(unit_point(d, i, 1), true);
    for (std::size_t i = 1; i <= d; ++i) t.add_vertex(unit_point(d, i, -1), true);
    const VertexId center = t.add_vertex(Point(d, Rational(0)), false);
    for (const auto& s : facet_signatures(d)) {
        std::vector<VertexId> tuple;
        tuple.reserve(d + 1);
        for (std::size_t i = 0; i < d; ++i)
            tuple.push_back(s[i] > 0 ? static_cast<VertexId>(i) : static_cast<VertexId>(d + i));
        tuple.push_back(center);
        t.simplices.push_back(Simplex(std::move(tuple)));
    }
    t.core_count = t.simplices.size();
    t.star_center = center;
    return orient_positively(std::move(t));
}

// The star triangulation over a boundary complex of the cross-polytope: one
// new interior vertex at the origin, coned over every boundary cell. The
// center id defaults to one past b's largest id; pass center_id when b's ids
// come from a larger complex whose other ids must stay distinct.
inline Triangulation star_from_boundary(const Triangulation& b,
                                        std::optional<VertexId> center_id = std::nullopt) {
    detail::require_cross_polytope_boundary(b, "star_from_boundary");
    Triangulation t;
    t.dim = b.dim;
    t.vertices = b.vertices;
    for (auto& v : t.vertices) v.on_boundary = true;
    const VertexId center = center_id.value_or(t.next_vertex_id());
    if (center < t.next_vertex_id())
        throw std::invalid_argument("star_from_boundary: center id " + std::to_string(center) +
                                    " collides with a boundary vertex id");
    t.vertices.push_back(Vertex{center, Point(b.dim, Rational(0)), false});
    for (const auto& cell : b.simplices) {
        std::vector<VertexId> tuple = cell.vertices;
        tuple.push_back(center);
        t.simplices.push_back(Simplex(std::move(tuple)));
    }
    t.core_count = t.simplices.size();
    t.star_center = center;
    return orient_positively(std::move(t));
}

// Triangulates the shell E = scale*P \ int(P) over a boundary complex b of P
// with staircase prisms: each boundary cell (w_0 < ... < w_{d-1}) spawns the
// d simplices (w_0..w_k, scale*w_k..scale*w_{d-1}). The global ascending-id
// order makes adjacent prisms meet face-to-face. Outer vertices get the id
// fresh_base + inner id, preserving the order; fresh_base defaults to one
// past the largest inner id.
inline Triangulation shell_prisms(const Triangulation& b, const Rational& scale = Rational(2),
                                  std::optional<VertexId> fresh_base = std::nullopt) {
    detail::require_cross_polytope_boundary(b, "shell_prisms");
    if (scale <= 1) throw std::invalid_argument("shell_prisms: scale must be > 1");
    const VertexId base = fresh_base ? *fresh_base : b.next_vertex_id();
    if (!b.vertices.empty() && base <= b.vertices.back().id)
        throw std::invalid_argument("shell_prisms: fresh_base collides with inner vertex ids");

    Triangulation t;
    t.dim = b.dim;
    t.vertices = b.vertices;
    for (auto& v : t.vertices) v.on_boundary = true;
    for (const auto& v : b.vertices)
        t.vertices.push_back(Vertex{base + v.id, point_scale(scale, v.coords), true});

    const auto outer = [base](VertexId inner) { return base + inner; };
    for (const auto& cell : b.simplices) {
        const auto& w = cell.vertices;  // ascending
        const std::size_t d = w.size();
        for (std::size_t k = 0; k < d; ++k) {
            std::vector<VertexId> tuple;
            tuple.reserve(d + 1);
            for (std::size_t i = 0; i <= k; ++i) tuple.push_back(w[i]);
            for (std::size_t i = k; i < d; ++i) tuple.push_back(outer(w[i]));
            t.simplices.push_back(Simplex(std::move(tuple)));
        }
    }
    t.core_count = 0;  // a standalone shell has no core simplices
    return orient_positively(std::move(t));
}

// T = t_p extended over C = scale*P by the prism shell; t_p's vertex ids and
// simplex order are preserved, shell simplices follow, and core_count marks
// the boundary between the two.
inline Triangulation assemble_enclosure(const Triangulation& t_p, const Rational& scale = Rational(2)) {
    if (t_p.simplices.empty() || t_p.max_simplex_dim() != t_p.dim)
        throw std::invalid_argument("assemble_enclosure: input must be a solid complex");
    const Triangulation b = boundary_complex(t_p);
    const VertexId base = t_p.next_vertex_id();
    const Triangulation shell = shell_prisms(b, scale, base);

    Triangulation t = orient_positively(t_p);
    for (auto& v : t.vertices) v.on_boundary = false;  // all of P is interior to C
    for (const auto& v : shell.vertices)
        if (v.id >= base) t.vertices.push_back(v);
    t.core_count = t.simplices.size();
    for (const auto& s : shell.simplices) t.simplices.push_back(s);
    t.star_center = t_p.star_center;
    return t;
}

// The square enclosure of the d=2 cross-polytope: corner vertices (+-h,+-h)
// and side midpoints (+-h,0),(0,+-h); each quadrant's corner is fanned over
// the diamond-edge vertices of that quadrant, and each midpoint forms two
// triangles with its adjacent corners and the extreme point of P on its side.
inline Triangulation square_enclosure_2d(const Triangulation& t_p, const Rational& halfwidth = Rational(2)) {
    if (t_p.dim != 2) throw std::invalid_argument("square_enclosure_2d: dimension must be 2");
    if (t_p.simplices.empty() || t_p.max_simplex_dim() != 2)
        throw std::invalid_argument("square_enclosure_2d: input must be a solid complex");
    if (halfwidth <= 1)
        throw std::invalid_argument("square_enclosure_2d: halfwidth must exceed 1 so P is strictly inside");
    const Rational h = halfwidth;
    const Triangulation b = boundary_complex(t_p);
    for (const auto& v : b.vertices)
        if (l1_norm(v.coords) != 1)
            throw std::invalid_argument("square_enclosure_2d: boundary vertex " + std::to_string(v.id) +
                                        " is not on the diamond, cannot assign it to a quadrant edge");

    Triangulation t = orient_positively(t_p);
    for (auto& v : t.vertices) v.on_boundary = false;
    const VertexId base = t.next_vertex_id();
    // corners: (+h,+h), (-h,+h), (-h,-h), (+h,-h)
    t.vertices.push_back(Vertex{base + 0, {h, h}, true});
    t.vertices.push_back(Vertex{base + 1, {-h, h}, true});
    t.vertices.push_back(Vertex{base + 2, {-h, -h}, true});
    t.vertices.push_back(Vertex{base + 3, {h, -h}, true});
    // side midpoints: (+h,0), (0,+h), (-h,0), (0,-h)
    t.vertices.push_back(Vertex{base + 4, {h, Rational(0)}, true});
    t.vertices.push_back(Vertex{base + 5, {Rational(0), h}, true});
    t.vertices.push_back(Vertex{base + 6, {-h, Rational(0)}, true});
    t.vertices.push_back(Vertex{base + 7, {Rational(0), -h}, true});

    const auto extreme = [&](int axis, int sign) {
        const auto id = find_vertex_by_coords(t_p, unit_point(2, axis, sign));
        if (!id)
            throw std::invalid_argument("square_enclosure_2d: t_p lacks the extreme vertex on axis " +
                                        std::to_string(sign * axis));
        return *id;
    };
    const VertexId e_px = extreme(1, 1), e_py = extreme(2, 1);
    const VertexId e_nx = extreme(1, -1), e_ny = extreme(2, -1);

    std::vector<Simplex> added;
    // Quadrant fans, in corner order (+,+), (-,+), (-,-), (+,-).
    const int quad_signs[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    for (int q = 0; q < 4; ++q) {
        const int sx = quad_signs[q][0], sy = quad_signs[q][1];
        std::vector<std::pair<Rational, VertexId>> on_edge;  // keyed by sy*y, ascending
        for (const auto& v : b.vertices) {
            const Rational x = v.coords[0], y = v.coords[1];
            if (sign_of(x) * sx >= 0 && sign_of(y) * sy >= 0)
                on_edge.push_back({Rational(sy) * y, v.id});
        }
        std::sort(on_edge.begin(), on_edge.end());
        if (on_edge.size() < 2)
            throw std::invalid_argument("square_enclosure_2d: quadrant edge has too few vertices");
        const VertexId corner = base + q;
        for (std::size_t j = 0; j + 1 < on_edge.size(); ++j)
            added.push_back(Simplex({corner, on_edge[j].second, on_edge[j + 1].second}));
    }
    // Midpoint pairs per square side: (corner1, m, e) and (m, corner2, e).
    const struct { VertexId c1, m, c2, e; } sides[4] = {
        {base + 0, base + 4, base + 3, e_px},  // right, x = +h
        {base + 1, base + 5, base + 0, e_py},  // top, y = +h
        {base + 2, base + 6, base + 1, e_nx},  // left, x = -h
        {base + 3, base + 7, base + 2, e_ny},  // bottom, y = -h
    };
    for (const auto& sd : sides) {
        added.push_back(Simplex({sd.c1, sd.m, sd.e}));
        added.push_back(Simplex({sd.m, sd.c2, sd.e}));
    }

    t.core_count = t.simplices.size();
    for (auto& s : added) {
        const int sgn = sign_of(Rational(s.orientation) * points_signed_volume(simplex_points(s, t)));
        if (sgn == 0) throw std::invalid_argument("square_enclosure_2d: degenerate enclosure triangle");
        if (sgn < 0) s.orientation = -s.orientation;
        t.simplices.push_back(std::move(s));
    }
    return t;
}

struct RefinementSpec {
    enum class Scheme { barycentric, edge_midpoint };
    Scheme scheme = Scheme::barycentric;
    unsigned rounds = 0;
    std::uint64_t seed = 0;  // reserved for randomized schemes; the two uniform ones ignore it
};

inline RefinementSpec::Scheme scheme_from_string(const std::string& name) {
    if (name == "barycentric") return RefinementSpec::Scheme::barycentric;
    if (name == "edge-midpoint") return RefinementSpec::Scheme::edge_midpoint;
    throw std::invalid_argument("unknown refinement scheme: " + name);
}

inline const char* scheme_to_string(RefinementSpec::Scheme s) {
    return s == RefinementSpec::Scheme::barycentric ? "barycentric" : "edge-midpoint";
}

namespace detail {

// Sorted (d-1)-face keys that lie in exactly one maximal simplex. Empty
// optional means the input is itself a boundary complex, so every face of it
// is on the boundary.
inline std::optional<std::set<std::vector<VertexId>>> boundary_face_keys(const Triangulation& t) {
    if (t.is_boundary_complex()) return std::nullopt;
    std::map<std::vector<VertexId>, std::size_t> counts;
    for (const auto& s : t.simplices)
        for (std::size_t k = 0; k < s.vertices.size(); ++k) {
            std::vector<VertexId> key;
            for (std::size_t j = 0; j < s.vertices.size(); ++j)
                if (j != k) key.push_back(s.vertices[j]);
            ++counts[key];
        }
    std::set<std::vector<VertexId>> out;
    for (const auto& [key, c] : counts)
        if (c == 1) out.insert(key);
    return out;
}

inline bool face_in_boundary(const std::vector<VertexId>& face,
                             const std::optional<std::set<std::vector<VertexId>>>& bset) {
    if (!bset) return true;
    for (const auto& b : *bset)
        if (std::includes(b.begin(), b.end(), face.begin(), face.end())) return true;
    return false;
}

inline Point face_barycenter(const std::vector<VertexId>& face, const Triangulation& t) {
    Point sum(t.dim, Rational(0));
    for (VertexId id : face) sum = point_add(sum, t.coords(id));
    return point_scale(Rational(1) / Rational(static_cast<long long>(face.size())), sum);
}

// Child orientation sign relative to its parent cell, for a child tuple
// spanning part of the parent's affine hull.
inline int child_extra_sign(const std::vector<Point>& child_pts, const Simplex& parent,
                            const std::vector<Point>& parent_pts) {
    return parent.orientation * relative_orientation(child_pts, parent_pts);
}

inline Triangulation barycentric_round(const Triangulation& t) {
    const std::size_t k = t.max_simplex_dim();
    if (k == 0) return t;  // refining isolated points is the identity
    // Collect every face of every maximal simplex; faces of size 1 reuse the
    // original vertex id, larger faces get fresh barycenter vertices.
    std::map<std::vector<VertexId>, VertexId> face_id;
    for (const auto& s : t.simplices) {
        const auto& ids = s.vertices;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << ids.size()); ++mask) {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (mask >> i & 1) face.push_back(ids[i]);
            face_id.emplace(std::move(face), -1);
        }
    }
    Triangulation out;
    out.dim = t.dim;
    out.vertices = t.vertices;
    out.star_center = t.star_center;
    const auto bset = boundary_face_keys(t);
    VertexId next = t.next_vertex_id();
    for (auto& [face, id] : face_id) {
        if (face.size() == 1) {
            id = face[0];
            continue;
        }
        id = next++;
        out.vertices.push_back(Vertex{id, face_barycenter(face, t), face_in_boundary(face, bset)});
    }

    std::size_t core_children = 0;
    for (std::size_t ci = 0; ci < t.simplices.size(); ++ci) {
        const Simplex& cell = t.simplices[ci];
        const auto parent_pts = simplex_points(cell, t);
        std::vector<VertexId> perm = cell.vertices;  // ascending start
        do {
            std::vector<VertexId> tuple;
            tuple.reserve(k + 1);
            std::vector<VertexId> prefix;
            for (std::size_t i = 0; i <= k; ++i) {
                prefix.push_back(perm[i]);
                std::vector<VertexId> key = prefix;
                std::sort(key.begin(), key.end());
                tuple.push_back(face_id.at(key));
            }
            std::vector<Point> child_pts;
            child_pts.reserve(tuple.size());
            for (VertexId id : tuple) child_pts.push_back(out.coords(id));
            const int extra = child_extra_sign(child_pts, cell, parent_pts);
            out.simplices.push_back(Simplex(std::move(tuple), extra));
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (ci + 1 == t.core_count) core_children = out.simplices.size();
    }
    out.core_count = t.core_count == t.simplices.size() ? out.simplices.size() : core_children;
    return out;
}

inline Triangulation edge_midpoint_round(const Triangulation& t) {
    const std::size_t k = t.max_simplex_dim();
    if (k == 0) return t;  // refining isolated points is the identity
    if (k > 3)
        throw std::invalid_argument("refine: edge-midpoint scheme supports simplex dimension <= 3");
    std::map<std::pair<VertexId, VertexId>, VertexId> mid_id;
    for (const auto& s : t.simplices)
        for (std::size_t i = 0; i < s.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
                mid_id.emplace(std::make_pair(s.vertices[i], s.vertices[j]), -1);

    Triangulation out;
    out.dim = t.dim;
    out.vertices = t.vertices;
    out.star_center = t.star_center;
    const auto bset = boundary_face_keys(t);
    VertexId next = t.next_vertex_id();
    for (auto& [edge, id] : mid_id) {
        id = next++;
        const Point mid = point_scale(Rational(1) / Rational(2),
                                      point_add(t.coords(edge.first), t.coords(edge.second)));
        out.vertices.push_back(Vertex{id, mid, face_in_boundary({edge.first, edge.second}, bset)});
    }
    const auto m = [&](VertexId a, VertexId b) { return mid_id.at({std::min(a, b), std::max(a, b)}); };

    std::size_t core_children = 0;
    for (std::size_t ci = 0; ci < t.simplices.size(); ++ci) {
        const Simplex& cell = t.simplices[ci];
        const auto& v = cell.vertices;  // ascending
        std::vector<std::vector<VertexId>> tuples;
        if (k == 1) {
            tuples = {{v[0], m(v[0], v[1])}, {m(v[0], v[1]), v[1]}};
        } else if (k == 2) {
            tuples = {
                {v[0], m(v[0], v[1]), m(v[0], v[2])},
                {m(v[0], v[1]), v[1], m(v[1], v[2])},
                {m(v[0], v[2]), m(v[1], v[2]), v[2]},
                {m(v[0], v[1]), m(v[1], v[2]), m(v[0], v[2])},
            };
        } else {
            // Uniform tetrahedron refinement: four corner tets plus the inner
            // octahedron split along the m02-m13 diagonal. With globally
            // sorted parent tuples, neighbouring tets subdivide shared faces
            // identically, keeping the complex face-to-face.
            const VertexId m01 = m(v[0], v[1]), m02 = m(v[0], v[2]), m03 = m(v[0], v[3]);
            const VertexId m12 = m(v[1], v[2]), m13 = m(v[1], v[3]), m23 = m(v[2], v[3]);
            tuples = {
                {v[0], m01, m02, m03}, {m01, v[1], m12, m13},
                {m02, m12, v[2], m23}, {m03, m13, m23, v[3]},
                {m01, m02, m03, m13},  {m01, m02, m12, m13},
                {m02, m03, m13, m23},  {m02, m12, m13, m23},
            };
        }
        const auto parent_pts = simplex_points(cell, t);
        for (auto& tuple : tuples) {
            std::vector<Point> child_pts;
            child_pts.reserve(tuple.size());
            for (VertexId id : tuple) child_pts.push_back(out.coords(id));
            const int extra = child_extra_sign(child_pts, cell, parent_pts);
            out.simplices.push_back(Simplex(std::move(tuple), extra));
        }
        if (ci + 1 == t.core_count) core_children = out.simplices.size();
    }
    out.core_count = t.core_count == t.simplices.size() ? out.simplices.size() : core_children;
    return out;
}

}  // namespace detail

// Applies the requested uniform refinement scheme the requested number of
// rounds. Both schemes act identically on antipodal cells, so antipodal
// symmetry of boundaries is preserved automatically.
inline Triangulation refine(const Triangulation& t, const RefinementSpec& spec) {
    Triangulation out = t;
    for (unsigned r = 0; r < spec.rounds; ++r) {
        switch (spec.scheme) {
            case RefinementSpec::Scheme::barycentric:
                out = detail::barycentric_round(out);
                break;
            case RefinementSpec::Scheme::edge_midpoint:
                out = detail::edge_midpoint_round(out);
                break;
            default:
                throw std::invalid_argument("refine: unknown scheme");
        }
    }
    return out;
}

// The standard simplex S = conv(0, e_1, ..., e_d), barycentrically refined.
// Corners of the standard simplex in label order: position k-1 is the target
// of Sperner label k (the origin for k = 1, e_{k-1} otherwise), matching the
// vertex ids of standard_simplex.
inline std::vector<Point> standard_simplex_frame(std::size_t d) {
    if (d < 1) throw std::invalid_argument("standard_simplex_frame: dimension must be >= 1");
    std::vector<Point> frame;
    frame.reserve(d + 1);
    frame.push_back(Point(d, Rational(0)));
    for (std::size_t i = 1; i <= d; ++i) frame.push_back(unit_point(d, i, 1));
    return frame;
}

// Vertex ids: 0 for the origin, i for e_i.
inline Triangulation standard_simplex(std::size_t d, unsigned rounds = 0) {
    if (d < 1) throw std::invalid_argument("standard_simplex: dimension must be >= 1");
    Triangulation t;
    t.dim = d;
    t.add_vertex(Point(d, Rational(0)), true);
    for (std::size_t i = 1; i <= d; ++i) t.add_vertex(unit_point(d, i, 1), true);
    std::vector<VertexId> tuple(d + 1);
    for (std::size_t i = 0; i <= d; ++i) tuple[i] = static_cast<VertexId>(i);
    t.simplices.push_back(Simplex(std::move(tuple)));
    t.core_count = 1;
    t = orient_positively(std::move(t));
    RefinementSpec spec;
    spec.scheme = RefinementSpec::Scheme::barycentric;
    spec.rounds = rounds;
    return refine(t, spec);
}

}  // namespace tuckvol
