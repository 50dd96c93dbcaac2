#pragma once

#include "tuckvol/builders.hpp"
#include "tuckvol/labeling.hpp"
#include "tuckvol/triangulation.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tuckvol {

// Sign vector identifying the cross-polytope facet spanned by {s_i * e_i}.
struct FacetSignature {
    std::vector<int> signs;

    bool operator<(const FacetSignature& o) const { return signs < o.signs; }
    bool operator==(const FacetSignature& o) const { return signs == o.signs; }
};

struct FacetTally {
    long long p = 0;  // orientation-preserving preimages
    long long n = 0;  // orientation-reversing preimages
};

// Preimage tallies of every facet under the label-induced boundary map, the
// common difference p - n when it exists, and whether it is facet-independent.
struct DegreeReport {
    std::map<FacetSignature, FacetTally> per_facet;
    long long degree = 0;
    bool consistent = false;
};

// The label-induced boundary map fails to be simplicial into the facet fan
// exactly when some boundary cell contains a complementary edge.
struct MapNotSimplicialError : std::runtime_error {
    EdgeWitness witness;

    explicit MapNotSimplicialError(EdgeWitness w)
        : std::runtime_error("label-induced map is not simplicial: complementary edge {" +
                             std::to_string(w.u) + "," + std::to_string(w.v) + "} with labels " +
                             std::to_string(w.label_u) + "," + std::to_string(w.label_v) +
                             " on the boundary"),
          witness(w) {}
};

// If the labels of the (d-1)-cell s are exactly {s_1*1, ..., s_d*d} for a
// sign vector s, returns that facet signature together with the map's
// orientation sign on this cell: +1 when the cell's stored orientation is
// carried to the target facet's outward orientation, -1 when reversed.
// Returns nothing when two labels share an absolute value (degenerate image).
inline std::optional<std::pair<FacetSignature, int>> facet_signature_of(const Simplex& s,
                                                                        const Labeling& l) {
    const std::size_t d = s.vertices.size();
    if (d == 0) throw std::invalid_argument("facet_signature_of: empty simplex");
    std::vector<int> signs(d, 0);
    std::vector<Point> image;
    image.reserve(d);
    for (VertexId id : s.vertices) {
        const int lab = l.label_of(id);
        const int axis = std::abs(lab);
        if (axis < 1 || static_cast<std::size_t>(axis) > d)
            throw std::invalid_argument("facet_signature_of: label " + std::to_string(lab) +
                                        " out of range for a (d-1)-cell with d = " + std::to_string(d));
        if (signs[axis - 1] != 0) return std::nullopt;  // repeated absolute value
        signs[axis - 1] = lab > 0 ? 1 : -1;
        image.push_back(unit_point(d, static_cast<std::size_t>(axis), lab > 0 ? 1 : -1));
    }
    const int map_sign = s.orientation * outward_orientation(image);
    return std::make_pair(FacetSignature{std::move(signs)}, map_sign);
}

// Degree of the boundary map induced by a Tucker labeling on a boundary
// complex b of the cross-polytope: tallies (p, n) over all 2^d facets and
// checks that p - n is facet-independent. Throws MapNotSimplicialError when
// a boundary cell contains a complementary edge (the hypothesis of the
// degree argument).
inline DegreeReport degree_of_labeling(const Triangulation& b, const Labeling& l) {
    if (b.simplices.empty() || !b.is_boundary_complex())
        throw std::invalid_argument("degree_of_labeling: input must be a boundary complex");
    const std::size_t d = b.dim;
    for (const auto& s : b.simplices)
        for (std::size_t i = 0; i < s.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
                const int a = l.label_of(s.vertices[i]);
                const int c = l.label_of(s.vertices[j]);
                if (a + c == 0 && a != 0)
                    throw MapNotSimplicialError(EdgeWitness{s.vertices[i], s.vertices[j], a, c});
            }

    DegreeReport rep;
    for (auto& signs : facet_signatures(d)) rep.per_facet[FacetSignature{std::move(signs)}];
    for (const auto& s : b.simplices) {
        const auto hit = facet_signature_of(s, l);
        if (!hit) continue;
        auto& tally = rep.per_facet.at(hit->first);
        if (hit->second > 0)
            ++tally.p;
        else
            ++tally.n;
    }
    rep.consistent = true;
    bool first = true;
    for (const auto& [sig, tally] : rep.per_facet) {
        const long long diff = tally.p - tally.n;
        if (first) {
            rep.degree = diff;
            first = false;
        } else if (diff != rep.degree) {
            rep.consistent = false;
        }
    }
    return rep;
}

namespace detail {

// Cyclic position of a d=2 target vertex e_l on the outward-oriented target
// cycle e_2 -> e_1 -> e_{-2} -> e_{-1}.
inline int quarter_index(int label) {
    switch (label) {
        case 2: return 0;
        case 1: return 1;
        case -2: return 2;
        case -1: return 3;
    }
    throw std::invalid_argument("winding_number_2d: label " + std::to_string(label) +
                                " is not in {+-1, +-2}");
}

}  // namespace detail

// Winding number of the label-induced boundary map for d = 2: walks the
// boundary cycle once in its positive orientation and accumulates the
// quarter-turns of the image sequence e_{l(v)}. Equals the facet-count degree.
inline int winding_number_2d(const Triangulation& b, const Labeling& l) {
    if (b.dim != 2 || b.simplices.empty() || !b.is_boundary_complex())
        throw std::invalid_argument("winding_number_2d: input must be a d=2 boundary complex");

    // Each vertex must have exactly two incident edges, and orientations must
    // chain head-to-tail into one cycle.
    std::map<VertexId, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < b.simplices.size(); ++i)
        for (VertexId id : b.simplices[i].vertices) incident[id].push_back(i);
    for (const auto& [id, edges] : incident)
        if (edges.size() != 2)
            throw std::invalid_argument("winding_number_2d: boundary is not a single cycle at vertex " +
                                        std::to_string(id));

    const auto tail_head = [&](std::size_t i) -> std::pair<VertexId, VertexId> {
        const auto& s = b.simplices[i];
        // orientation +1 traverses the ascending pair in order, -1 reversed
        if (s.orientation > 0) return {s.vertices[0], s.vertices[1]};
        return {s.vertices[1], s.vertices[0]};
    };

    std::size_t current = 0;
    const VertexId start = tail_head(0).first;
    VertexId at = start;
    int turns = 0;
    std::size_t steps = 0;
    do {
        const auto [tail, head] = tail_head(current);
        if (tail != at)
            throw std::invalid_argument("winding_number_2d: boundary orientations do not chain");
        const int from = detail::quarter_index(l.label_of(tail));
        const int to = detail::quarter_index(l.label_of(head));
        const int step = ((to - from) % 4 + 4) % 4;
        if (step == 2)
            throw MapNotSimplicialError(EdgeWitness{tail, head, l.label_of(tail), l.label_of(head)});
        turns += step == 3 ? -1 : step;
        at = head;
        const auto& next_pair = incident.at(head);
        current = next_pair[0] == current ? next_pair[1] : next_pair[0];
        if (++steps > b.simplices.size())
            throw std::invalid_argument("winding_number_2d: boundary is not a single cycle");
    } while (at != start);
    if (steps != b.simplices.size())
        throw std::invalid_argument("winding_number_2d: boundary has more than one cycle");
    if (turns % 4 != 0)
        throw std::logic_error("winding_number_2d: quarter turns did not close up");
    return turns / 4;
}

}  // namespace tuckvol
