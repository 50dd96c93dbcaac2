#pragma once

#include "tuckvol/degree.hpp"
#include "tuckvol/labeling.hpp"
#include "tuckvol/poly.hpp"
#include "tuckvol/triangulation.hpp"
#include "tuckvol/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tuckvol {

// Field order in emitted files is fixed, so identical data produces identical
// bytes and instance files round-trip through parse/serialize unchanged.
using Json = nlohmann::ordered_json;

inline Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(rational_str(c));
    return arr;  // dense ascending coefficients; [] is the zero polynomial
}

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array of rationals");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

inline Json triangulation_to_json(const Triangulation& t) {
    Json out;
    out["dim"] = t.dim;
    Json verts = Json::array();
    for (const auto& v : t.vertices) {
        Json jv;
        jv["id"] = v.id;
        Json coords = Json::array();
        for (const auto& c : v.coords) coords.push_back(rational_str(c));
        jv["coords"] = std::move(coords);
        jv["boundary"] = v.on_boundary;
        verts.push_back(std::move(jv));
    }
    out["vertices"] = std::move(verts);
    Json cells = Json::array();
    for (const auto& s : t.simplices) {
        // A simplex is stored as a plain vertex tuple whose order carries the
        // orientation: ascending for +1, first two swapped for -1.
        std::vector<VertexId> tuple = s.vertices;
        if (s.orientation < 0) {
            if (tuple.size() < 2)
                throw std::logic_error("triangulation_to_json: cannot encode a negated point cell");
            std::swap(tuple[0], tuple[1]);
        }
        cells.push_back(tuple);
    }
    out["simplices"] = std::move(cells);
    if (t.star_center) out["star_center"] = *t.star_center;
    return out;
}

inline Triangulation triangulation_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("triangulation: expected an object");
    Triangulation t;
    t.dim = j.at("dim").get<std::size_t>();
    for (const auto& jv : j.at("vertices")) {
        Vertex v;
        v.id = jv.at("id").get<VertexId>();
        for (const auto& c : jv.at("coords")) v.coords.push_back(parse_rational(c.get<std::string>()));
        v.on_boundary = jv.at("boundary").get<bool>();
        t.vertices.push_back(std::move(v));
    }
    std::sort(t.vertices.begin(), t.vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (const auto& cell : j.at("simplices")) {
        std::vector<VertexId> tuple;
        for (const auto& id : cell) tuple.push_back(id.get<VertexId>());
        t.simplices.push_back(Simplex(std::move(tuple)));
    }
    t.core_count = t.simplices.size();
    if (j.contains("star_center") && !j.at("star_center").is_null())
        t.star_center = j.at("star_center").get<VertexId>();
    return t;
}

inline Json labeling_to_json(const Labeling& l) {
    Json out;
    out["kind"] = to_string(l.kind);
    Json labels = Json::object();
    for (const auto& [id, lab] : l.labels) labels[std::to_string(id)] = lab;
    out["labels"] = std::move(labels);
    return out;
}

inline Labeling labeling_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("labeling: expected an object");
    Labeling l;
    l.kind = label_kind_from_string(j.at("kind").get<std::string>());
    for (const auto& [key, value] : j.at("labels").items()) {
        std::size_t used = 0;
        const long long id = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument("labeling: bad vertex id '" + key + "'");
        l.labels[static_cast<VertexId>(id)] = value.get<int>();
    }
    return l;
}

// One self-contained instance on disk: the complex, its labels, and opaque
// caller-supplied metadata preserved byte-for-byte across a parse/serialize trip.
struct InstanceFile {
    Triangulation triangulation;
    Labeling labeling;
    Json metadata = Json::object();
};

inline Json instance_file_to_json(const InstanceFile& f) {
    Json out;
    out["triangulation"] = triangulation_to_json(f.triangulation);
    out["labeling"] = labeling_to_json(f.labeling);
    out["metadata"] = f.metadata;
    return out;
}

inline InstanceFile instance_file_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("instance: expected an object");
    InstanceFile f;
    f.triangulation = triangulation_from_json(j.at("triangulation"));
    f.labeling = labeling_from_json(j.at("labeling"));
    if (j.contains("metadata")) f.metadata = j.at("metadata");
    return f;
}

inline InstanceFile to_instance_file(const Instance& inst) {
    InstanceFile f;
    f.triangulation = inst.triangulation;
    f.labeling = inst.labeling;
    f.metadata["generator"] = "tuckvol";
    f.metadata["mode"] = to_string(inst.kind);
    f.metadata["dim"] = inst.dim;
    f.metadata["seed"] = inst.seed;
    f.metadata["scheme"] = scheme_to_string(inst.refinement.scheme);
    f.metadata["rounds"] = inst.refinement.rounds;
    return f;
}

inline Json edge_witness_to_json(const EdgeWitness& e) {
    Json out;
    out["u"] = e.u;
    out["v"] = e.v;
    out["label_u"] = e.label_u;
    out["label_v"] = e.label_v;
    return out;
}

inline Json report_to_json(const Report& r) {
    Json out;
    out["instance_id"] = r.instance_id;
    out["dim"] = r.dim;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["status"] = to_string(c.status);
        jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    Json comp = Json::array();
    for (const auto& e : r.complementary_edges) comp.push_back(edge_witness_to_json(e));
    out["complementary_edges"] = std::move(comp);
    Json bcomp = Json::array();
    for (const auto& e : r.boundary_complementary_edges) bcomp.push_back(edge_witness_to_json(e));
    out["boundary_complementary_edges"] = std::move(bcomp);
    if (r.degree) {
        Json jd;
        jd["degree"] = r.degree->degree;
        jd["consistent"] = r.degree->consistent;
        Json facets = Json::array();
        for (const auto& [sig, tally] : r.degree->per_facet) {
            Json jf;
            jf["signs"] = sig.signs;
            jf["p"] = tally.p;
            jf["n"] = tally.n;
            facets.push_back(std::move(jf));
        }
        jd["per_facet"] = std::move(facets);
        out["degree"] = std::move(jd);
    }
    if (r.winding) out["winding"] = *r.winding;
    if (r.fully_labeled) {
        Json jf;
        jf["positive"] = r.fully_labeled->positive;
        jf["negative"] = r.fully_labeled->negative;
        Json wits = Json::array();
        for (const auto& [cell, sign] : r.fully_labeled->witnesses) {
            Json jw;
            jw["vertices"] = cell.vertices;
            jw["sign"] = sign;
            wits.push_back(std::move(jw));
        }
        jf["witnesses"] = std::move(wits);
        out["fully_labeled"] = std::move(jf);
    }
    Json polys = Json::object();
    for (const auto& [name, poly] : r.polynomials) polys[name] = poly_to_json(poly);
    out["polynomials"] = std::move(polys);
    return out;
}

inline std::string json_to_text(const Json& j) { return j.dump(2) + "\n"; }

inline Json json_from_text(const std::string& text) { return Json::parse(text); }

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << json_to_text(j);
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return json_from_text(buffer.str());
}

}  // namespace tuckvol
