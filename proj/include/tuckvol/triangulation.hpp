#pragma once

#include "tuckvol/geometry.hpp"
#include "tuckvol/linalg.hpp"
#include "tuckvol/rational.hpp"
#include "tuckvol/report.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tuckvol {

struct Vertex {
    VertexId id = 0;
    Point coords;
    bool on_boundary = false;
};

// A geometric simplicial complex: a vertex table with exact coordinates plus
// the list of maximal simplices. Maximal simplices all have the same
// dimension: `dim` for a solid complex, `dim - 1` for a boundary complex.
//
// `core_count` partitions the simplex list into a core prefix and a shell
// suffix; builders that extend a complex (enclosures) put the original
// simplices first, so restricted volume sums can select by construction-time
// membership instead of geometric tests.
struct Triangulation {
    std::size_t dim = 0;
    std::vector<Vertex> vertices;  // ascending by id
    std::vector<Simplex> simplices;
    std::size_t core_count = 0;
    std::optional<VertexId> star_center;

    bool has_vertex(VertexId id) const { return find_index(id).has_value(); }

    const Vertex& vertex(VertexId id) const {
        const auto idx = find_index(id);
        if (!idx) throw std::out_of_range("Triangulation: no vertex with id " + std::to_string(id));
        return vertices[*idx];
    }

    const Point& coords(VertexId id) const { return vertex(id).coords; }

    VertexId next_vertex_id() const {
        return vertices.empty() ? 0 : vertices.back().id + 1;
    }

    VertexId add_vertex(Point p, bool on_boundary) {
        if (p.size() != dim) throw std::invalid_argument("add_vertex: coordinate count != dim");
        const VertexId id = next_vertex_id();
        vertices.push_back(Vertex{id, std::move(p), on_boundary});
        return id;
    }

    // Dimension of the maximal simplices (dim, or dim-1 for boundary complexes).
    std::size_t max_simplex_dim() const {
        if (simplices.empty()) throw std::logic_error("max_simplex_dim: empty complex");
        return simplices.front().dim();
    }

    bool is_boundary_complex() const { return max_simplex_dim() + 1 == dim; }

  private:
    std::optional<std::size_t> find_index(VertexId id) const {
        const auto it = std::lower_bound(
            vertices.begin(), vertices.end(), id,
            [](const Vertex& v, VertexId key) { return v.id < key; });
        if (it == vertices.end() || it->id != id) return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }
};

inline BigInt factorial(std::size_t n) {
    BigInt f(1);
    for (std::size_t k = 2; k <= n; ++k) f *= BigInt(k);
    return f;
}

// Signed volume of the ordered point tuple (p_0, ..., p_d) in ambient
// dimension d: (1/d!) times the determinant with columns p_i - p_0.
inline Rational points_signed_volume(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("points_signed_volume: no points");
    const std::size_t d = pts[0].size();
    if (pts.size() != d + 1)
        throw std::invalid_argument("points_signed_volume: need d+1 points in dimension d");
    for (const auto& p : pts)
        if (p.size() != d) throw std::invalid_argument("points_signed_volume: mixed dimensions");
    if (d == 0) throw std::invalid_argument("points_signed_volume: dimension 0");
    Matrix m(d, std::vector<Rational>(d));
    for (std::size_t col = 0; col < d; ++col)
        for (std::size_t row = 0; row < d; ++row)
            m[row][col] = pts[col + 1][row] - pts[0][row];
    return determinant(m) / Rational(factorial(d));
}

inline std::vector<Point> simplex_points(const Simplex& s, const Triangulation& t) {
    std::vector<Point> pts;
    pts.reserve(s.vertices.size());
    for (VertexId id : s.vertices) pts.push_back(t.coords(id));
    return pts;
}

// Signed volume of a maximal simplex: the volume of its ascending vertex
// tuple times the stored orientation sign.
inline Rational signed_volume(const Simplex& s, const Triangulation& t) {
    if (s.dim() != t.dim)
        throw std::invalid_argument("signed_volume: simplex is not full-dimensional");
    return Rational(s.orientation) * points_signed_volume(simplex_points(s, t));
}

// Flips orientation signs so that every maximal simplex has positive signed
// volume. Throws on a degenerate simplex.
inline Triangulation orient_positively(Triangulation t) {
    for (auto& s : t.simplices) {
        const Rational v = signed_volume(s, t);
        const int sgn = sign_of(v);
        if (sgn == 0) throw std::invalid_argument("orient_positively: degenerate simplex");
        if (sgn < 0) s.orientation = -s.orientation;
    }
    return t;
}

inline Rational total_signed_volume(const Triangulation& t) {
    Rational sum(0);
    for (const auto& s : t.simplices) sum += signed_volume(s, t);
    return sum;
}

inline Rational total_unsigned_volume(const Triangulation& t) {
    Rational sum(0);
    for (const auto& s : t.simplices) sum += abs_of(signed_volume(s, t));
    return sum;
}

namespace detail {

inline std::string ids_str(const std::vector<VertexId>& ids) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
    os << "]";
    return os.str();
}

}  // namespace detail

// Structural and metric validation of a solid triangulation:
//   (i)   every maximal simplex is non-degenerate,
//   (ii)  pseudo-manifold face counts (every (d-1)-face in 1 or 2 simplices),
//   (iii) after orienting positively, the two cofaces of each interior face
//         induce opposite orientations on it,
//   (iv)  the unsigned volumes sum exactly to expected_volume.
// Failures are report entries carrying the first violating entity.
inline ValidityReport validate_triangulation(const Triangulation& t, const Rational& expected_volume) {
    ValidityReport rep;
    if (t.dim == 0) {
        rep.add("ambient dimension is 0");
        return rep;
    }
    if (t.simplices.empty()) {
        rep.add("no maximal simplices");
        return rep;
    }
    for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i)
        if (t.vertices[i].id >= t.vertices[i + 1].id) {
            rep.add("vertex table not in ascending id order at position " + std::to_string(i));
            return rep;
        }
    for (const auto& v : t.vertices)
        if (v.coords.size() != t.dim) {
            rep.add("vertex " + std::to_string(v.id) + " has wrong coordinate count");
            return rep;
        }
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        const auto& s = t.simplices[i];
        if (s.vertices.size() != t.dim + 1) {
            rep.add("simplex #" + std::to_string(i) + " " + detail::ids_str(s.vertices) +
                    " is not full-dimensional");
            return rep;
        }
        for (VertexId id : s.vertices)
            if (!t.has_vertex(id)) {
                rep.add("simplex #" + std::to_string(i) + " references unknown vertex " +
                        std::to_string(id));
                return rep;
            }
    }

    // (i) non-degeneracy
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        if (points_signed_volume(simplex_points(t.simplices[i], t)) == 0) {
            rep.add("simplex #" + std::to_string(i) + " " +
                    detail::ids_str(t.simplices[i].vertices) + " is degenerate (volume 0)");
            return rep;
        }
    }

    // (ii)+(iii) face counts and induced-orientation consistency, with all
    // simplices taken positively oriented.
    const Triangulation pos = orient_positively(t);
    std::map<std::vector<VertexId>, std::vector<std::pair<int, std::size_t>>> faces;
    for (std::size_t i = 0; i < pos.simplices.size(); ++i) {
        const auto& s = pos.simplices[i];
        for (std::size_t k = 0; k < s.vertices.size(); ++k) {
            const Simplex f = face_of(s, k);
            faces[f.vertices].push_back({f.orientation, i});
        }
    }
    for (const auto& [key, occurrences] : faces) {
        if (occurrences.size() > 2) {
            rep.add("face " + detail::ids_str(key) + " lies in " +
                    std::to_string(occurrences.size()) + " maximal simplices");
            return rep;
        }
        if (occurrences.size() == 2 && occurrences[0].first + occurrences[1].first != 0) {
            rep.add("interior face " + detail::ids_str(key) +
                    " has inconsistent induced orientations (simplices #" +
                    std::to_string(occurrences[0].second) + ", #" +
                    std::to_string(occurrences[1].second) + ")");
            return rep;
        }
    }

    // (iv) total volume
    const Rational total = total_unsigned_volume(t);
    if (total != expected_volume) {
        rep.add("total unsigned volume " + rational_str(total) + " != expected " +
                rational_str(expected_volume));
    }
    return rep;
}

// Orientation of an ordered (d-1)-tuple on the boundary sphere of a polytope
// containing the origin in its interior: +1 when the tuple is positively
// oriented under the outward-normal-last convention, i.e. appending the
// origin (an inward point) gives a negative d-simplex.
inline int outward_orientation(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("outward_orientation: no points");
    pts.push_back(Point(pts[0].size(), Rational(0)));
    const int s = sign_of(points_signed_volume(pts));
    if (s == 0) throw std::invalid_argument("outward_orientation: tuple is degenerate or contains the origin's hyperplane");
    return -s;
}

// Extracts the boundary complex: the (d-1)-faces lying in exactly one maximal
// simplex, each oriented so that appending the parent's remaining (inward)
// vertex yields a negative d-simplex. Throws if the input is not a
// pseudo-manifold.
inline Triangulation boundary_complex(const Triangulation& t) {
    if (t.simplices.empty() || t.max_simplex_dim() != t.dim)
        throw std::invalid_argument("boundary_complex: input must be a solid complex");
    std::map<std::vector<VertexId>, std::vector<std::pair<std::size_t, VertexId>>> faces;
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        const auto& s = t.simplices[i];
        for (std::size_t k = 0; k < s.vertices.size(); ++k) {
            std::vector<VertexId> key;
            key.reserve(s.vertices.size() - 1);
            for (std::size_t j = 0; j < s.vertices.size(); ++j)
                if (j != k) key.push_back(s.vertices[j]);
            faces[std::move(key)].push_back({i, s.vertices[k]});
        }
    }
    Triangulation b;
    b.dim = t.dim;
    std::set<VertexId> used;
    for (const auto& [key, occ] : faces) {
        if (occ.size() > 2)
            throw std::invalid_argument("boundary_complex: face " + detail::ids_str(key) +
                                        " lies in more than two maximal simplices");
        if (occ.size() != 1) continue;
        std::vector<Point> pts;
        pts.reserve(key.size() + 1);
        for (VertexId id : key) pts.push_back(t.coords(id));
        pts.push_back(t.coords(occ[0].second));
        const int vol_sign = sign_of(points_signed_volume(pts));
        if (vol_sign == 0)
            throw std::invalid_argument("boundary_complex: degenerate parent simplex at face " +
                                        detail::ids_str(key));
        b.simplices.push_back(Simplex(key, -vol_sign));
        for (VertexId id : key) used.insert(id);
    }
    if (b.simplices.empty()) throw std::invalid_argument("boundary_complex: complex has no boundary");
    for (const auto& v : t.vertices)
        if (used.count(v.id)) b.vertices.push_back(v);
    std::sort(b.simplices.begin(), b.simplices.end());
    b.core_count = b.simplices.size();
    return b;
}

// True iff the vertex set is closed under x -> -x and the (unoriented)
// maximal-simplex set is closed under negating all vertices.
inline bool check_antipodal_symmetry(const Triangulation& b) {
    std::map<Point, VertexId> by_coords;
    for (const auto& v : b.vertices) by_coords[v.coords] = v.id;
    std::map<VertexId, VertexId> antipode;
    for (const auto& v : b.vertices) {
        const auto it = by_coords.find(point_negate(v.coords));
        if (it == by_coords.end()) return false;
        antipode[v.id] = it->second;
    }
    std::set<std::vector<VertexId>> cells;
    for (const auto& s : b.simplices) cells.insert(s.vertices);
    for (const auto& s : b.simplices) {
        std::vector<VertexId> neg;
        neg.reserve(s.vertices.size());
        for (VertexId id : s.vertices) neg.push_back(antipode[id]);
        std::sort(neg.begin(), neg.end());
        if (!cells.count(neg)) return false;
    }
    return true;
}

// Map from each vertex id to the id of the vertex at the negated coordinates,
// for the vertices of b. Throws when some antipode is missing.
inline std::map<VertexId, VertexId> antipode_map(const Triangulation& b) {
    std::map<Point, VertexId> by_coords;
    for (const auto& v : b.vertices) by_coords[v.coords] = v.id;
    std::map<VertexId, VertexId> out;
    for (const auto& v : b.vertices) {
        const auto it = by_coords.find(point_negate(v.coords));
        if (it == by_coords.end())
            throw std::invalid_argument("antipode_map: vertex " + std::to_string(v.id) +
                                        " has no antipodal partner");
        out[v.id] = it->second;
    }
    return out;
}

// Exact barycentric coordinates of p with respect to an affinely independent
// frame of d+1 points in dimension d.
inline std::vector<Rational> barycentric_coordinates(const Point& p, const std::vector<Point>& frame) {
    const std::size_t d = p.size();
    if (frame.size() != d + 1)
        throw std::invalid_argument("barycentric_coordinates: frame must have d+1 points");
    for (const auto& q : frame)
        if (q.size() != d) throw std::invalid_argument("barycentric_coordinates: dimension mismatch");
    Matrix a(d + 1, std::vector<Rational>(d + 1));
    std::vector<Rational> rhs(d + 1);
    for (std::size_t row = 0; row < d; ++row) {
        for (std::size_t i = 0; i <= d; ++i) a[row][i] = frame[i][row];
        rhs[row] = p[row];
    }
    for (std::size_t i = 0; i <= d; ++i) a[d][i] = Rational(1);
    rhs[d] = Rational(1);
    try {
        return solve_linear(std::move(a), std::move(rhs));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("barycentric_coordinates: frame is affinely dependent");
    }
}

// Indices of the ambient-simplex vertices with strictly positive barycentric
// coordinate at p: the minimal face of the ambient simplex containing p.
// Throws when p lies outside the ambient simplex.
inline std::set<std::size_t> carrier(const Point& p, const std::vector<Point>& ambient_simplex) {
    const auto lambda = barycentric_coordinates(p, ambient_simplex);
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const int s = sign_of(lambda[i]);
        if (s < 0)
            throw std::invalid_argument("carrier: point lies outside the ambient simplex");
        if (s > 0) out.insert(i);
    }
    return out;
}

// Orientation of the tuple `child` relative to the tuple `parent`, both
// spanning the same affine hull: either two full-dimensional tuples, or two
// (d-1)-tuples in a common hyperplane. Returns +1 or -1; throws when either
// tuple is degenerate.
inline int relative_orientation(const std::vector<Point>& child, const std::vector<Point>& parent) {
    if (child.size() != parent.size() || child.empty())
        throw std::invalid_argument("relative_orientation: tuple size mismatch");
    const std::size_t d = parent[0].size();
    if (parent.size() == d + 1) {
        const int a = sign_of(points_signed_volume(child));
        const int b = sign_of(points_signed_volume(parent));
        if (a == 0 || b == 0) throw std::invalid_argument("relative_orientation: degenerate tuple");
        return a * b;
    }
    if (parent.size() == d) {
        // Codimension 1: append a common point off the shared hyperplane.
        for (std::size_t j = 0; j < d; ++j) {
            Point off = parent[0];
            off[j] += 1;
            std::vector<Point> par = parent;
            par.push_back(off);
            const int b = sign_of(points_signed_volume(par));
            if (b == 0) continue;
            std::vector<Point> ch = child;
            ch.push_back(off);
            const int a = sign_of(points_signed_volume(ch));
            if (a == 0) throw std::invalid_argument("relative_orientation: degenerate child tuple");
            return a * b;
        }
        throw std::invalid_argument("relative_orientation: parent tuple is degenerate");
    }
    throw std::invalid_argument("relative_orientation: unsupported codimension");
}

// All distinct 1-faces of the maximal simplices, as ascending id pairs in
// lexicographic order.
inline std::vector<std::pair<VertexId, VertexId>> enumerate_edges(const Triangulation& t) {
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& s : t.simplices)
        for (std::size_t i = 0; i < s.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
                edges.insert({s.vertices[i], s.vertices[j]});
    return {edges.begin(), edges.end()};
}

// Structural validation for boundary complexes ((d-1)-dimensional maximal
// simplices): affine independence of every cell, and for d >= 2 the closed
// pseudo-manifold condition (every (d-2)-face in exactly two cells).
inline ValidityReport validate_boundary_complex(const Triangulation& b) {
    ValidityReport rep;
    if (b.simplices.empty()) {
        rep.add("no maximal simplices");
        return rep;
    }
    for (const auto& s : b.simplices) {
        if (s.vertices.size() != b.dim) {
            rep.add("cell " + detail::ids_str(s.vertices) + " is not (d-1)-dimensional");
            return rep;
        }
        for (VertexId id : s.vertices)
            if (!b.has_vertex(id)) {
                rep.add("cell " + detail::ids_str(s.vertices) + " references unknown vertex");
                return rep;
            }
        if (b.dim >= 2) {
            const auto pts = simplex_points(s, b);
            Matrix m(pts.size() - 1, std::vector<Rational>(b.dim));
            for (std::size_t i = 1; i < pts.size(); ++i)
                for (std::size_t j = 0; j < b.dim; ++j) m[i - 1][j] = pts[i][j] - pts[0][j];
            if (matrix_rank(m) != pts.size() - 1) {
                rep.add("cell " + detail::ids_str(s.vertices) + " is degenerate");
                return rep;
            }
        }
    }
    if (b.dim >= 2) {
        std::map<std::vector<VertexId>, std::size_t> rims;
        for (const auto& s : b.simplices)
            for (std::size_t k = 0; k < s.vertices.size(); ++k) {
                std::vector<VertexId> key;
                for (std::size_t j = 0; j < s.vertices.size(); ++j)
                    if (j != k) key.push_back(s.vertices[j]);
                ++rims[key];
            }
        for (const auto& [key, count] : rims)
            if (count != 2) {
                rep.add("(d-2)-face " + detail::ids_str(key) + " lies in " + std::to_string(count) +
                        " cells; a closed boundary needs exactly 2");
                return rep;
            }
    }
    return rep;
}

}  // namespace tuckvol
