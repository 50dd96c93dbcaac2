#pragma once

#include "tuckvol/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tuckvol {

using VertexId = std::int64_t;
using Point = std::vector<Rational>;

inline Point point_add(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("point_add: dimension mismatch");
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Point point_sub(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("point_sub: dimension mismatch");
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Point point_scale(const Rational& c, const Point& a) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

inline Point point_negate(const Point& a) { return point_scale(Rational(-1), a); }

inline bool is_zero_point(const Point& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

// Parity of the permutation that sorts `ids` ascending: +1 even, -1 odd.
// Counts inversions directly; tuples here are tiny (at most d+1 entries).
inline int sort_parity(const std::vector<VertexId>& ids) {
    int parity = 1;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (ids[i] > ids[j]) parity = -parity;
    return parity;
}

// An oriented abstract simplex: vertex ids stored ascending plus a sign that
// remembers the orientation of the tuple it was built from. Two tuples that
// differ by an even permutation produce equal Simplex values.
struct Simplex {
    std::vector<VertexId> vertices;  // strictly ascending
    int orientation = 1;             // +1 or -1

    Simplex() = default;

    explicit Simplex(std::vector<VertexId> tuple, int extra_sign = 1) {
        if (extra_sign != 1 && extra_sign != -1)
            throw std::invalid_argument("Simplex: sign must be +1 or -1");
        orientation = extra_sign * sort_parity(tuple);
        std::sort(tuple.begin(), tuple.end());
        if (std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end())
            throw std::invalid_argument("Simplex: repeated vertex id");
        vertices = std::move(tuple);
    }

    std::size_t dim() const { return vertices.empty() ? 0 : vertices.size() - 1; }

    Simplex opposite() const {
        Simplex s = *this;
        s.orientation = -s.orientation;
        return s;
    }

    bool contains(VertexId v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    bool operator==(const Simplex& o) const {
        return vertices == o.vertices && orientation == o.orientation;
    }
    bool operator!=(const Simplex& o) const { return !(*this == o); }
    bool operator<(const Simplex& o) const {
        if (vertices != o.vertices) return vertices < o.vertices;
        return orientation < o.orientation;
    }
};

// The i-th oriented face of an oriented k-simplex: drop vertex i of the
// ascending tuple and multiply the orientation by (-1)^i.
inline Simplex face_of(const Simplex& s, std::size_t i) {
    if (i >= s.vertices.size()) throw std::out_of_range("face_of: index out of range");
    std::vector<VertexId> ids;
    ids.reserve(s.vertices.size() - 1);
    for (std::size_t j = 0; j < s.vertices.size(); ++j)
        if (j != i) ids.push_back(s.vertices[j]);
    const int sign = (i % 2 == 0) ? 1 : -1;
    return Simplex(std::move(ids), s.orientation * sign);
}

}  // namespace tuckvol
