#ifndef CCX_JSON_IO_HPP
#define CCX_JSON_IO_HPP

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ccx/functions.hpp"
#include "ccx/hahn_banach.hpp"

namespace ccx {

/// Field order is pinned (ordered_json) so serialized reports are
/// byte-identical across reruns.
using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending JSON path.
class JsonError : public std::runtime_error {
  public:
    JsonError(const std::string& path, const std::string& what)
        : std::runtime_error("at " + path + ": " + what) {}
};

// ---------------------------------------------------------------------------
// writers: integers that fit a 64-bit signed value print as JSON numbers,
// everything else in the exact "p/q" text form; never decimals.

inline Json rational_to_json(const Rational& q) {
    if (denominator(q) == 1 && numerator(q).fits_slong_p())
        return Json(static_cast<std::int64_t>(numerator(q).get_si()));
    return Json(to_string(q));
}

inline Json vector_to_json(const QVector& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(rational_to_json(q));
    return a;
}

inline Json vectors_to_json(const std::vector<QVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vector_to_json(v));
    return a;
}

inline Json hpolyhedron_to_json(const HPolyhedron& P) {
    Json j;
    j["dim"] = P.dim();
    j["openness"] = P.openness() == Openness::Open ? "open" : "closed";
    Json cs = Json::array();
    for (const auto& c : P.constraints()) {
        Json jc;
        jc["a"] = vector_to_json(c.a);
        jc["b"] = rational_to_json(c.b);
        jc["strict"] = c.strict;
        cs.push_back(std::move(jc));
    }
    j["constraints"] = std::move(cs);
    return j;
}

inline Json vpolyhedron_to_json(const VPolyhedron& V) {
    Json j;
    j["dim"] = V.dim;
    j["vertices"] = vectors_to_json(V.vertices);
    j["rays"] = vectors_to_json(V.rays);
    return j;
}

inline Json cone_to_json(const Cone& C) {
    Json j;
    j["dim"] = C.dim;
    j["generators"] = vectors_to_json(C.generators);
    return j;
}

inline Json functional_to_json(const Functional& f) {
    Json j;
    j["coeffs"] = vector_to_json(f.coeffs);
    return j;
}

inline Json setvalued_to_json(const SetValuedMap& F) {
    Json j;
    j["dim_x"] = F.dim_x;
    j["dim_y"] = F.dim_y;
    j["graph"] = hpolyhedron_to_json(F.graph);
    return j;
}

inline Json function_to_json(const PolyhedralFunction& f) {
    Json j;
    j["dim"] = f.dim();
    j["epigraph"] = hpolyhedron_to_json(f.epigraph());
    return j;
}

inline Json separation_to_json(const SeparationResult& r) {
    Json j;
    j["f"] = vector_to_json(r.functional.coeffs);
    j["level"] = rational_to_json(r.level);
    j["witness_lo"] = vector_to_json(r.witness_lo);
    j["witness_hi"] = vector_to_json(r.witness_hi);
    return j;
}

inline Json extended_value_to_json(const ExtendedValue& v) {
    switch (v.kind) {
        case ExtendedValue::Kind::Finite: return rational_to_json(v.value);
        case ExtendedValue::Kind::PlusInfinity: return Json("+inf");
        case ExtendedValue::Kind::MinusInfinity: return Json("-inf");
    }
    throw std::logic_error("extended value: unreachable");
}

// ---------------------------------------------------------------------------
// readers

inline Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw JsonError(path, e.what());
        }
    }
    throw JsonError(path, "expected an integer or a \"p/q\" string");
}

inline QVector vector_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw JsonError(path, "expected an array of rationals");
    QVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

inline std::vector<QVector> vectors_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw JsonError(path, "expected an array of vectors");
    std::vector<QVector> vs;
    for (std::size_t i = 0; i < j.size(); ++i)
        vs.push_back(vector_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return vs;
}

inline const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw JsonError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw JsonError(path, std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::size_t dim_from_json(const Json& j, const std::string& path) {
    const Json& d = member(j, "dim", path);
    if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<std::int64_t>() >= 0))
        throw JsonError(path + ".dim", "expected a nonnegative integer");
    return d.get<std::size_t>();
}

inline HPolyhedron hpolyhedron_from_json(const Json& j, const std::string& path = "$") {
    std::size_t dim = dim_from_json(j, path);
    bool declared_open = false;
    if (j.contains("openness")) {
        const Json& o = j["openness"];
        if (!o.is_string() || (o != "open" && o != "closed"))
            throw JsonError(path + ".openness", "expected \"open\" or \"closed\"");
        declared_open = (o == "open");
    }
    std::vector<Constraint> cs;
    const Json& jcs = member(j, "constraints", path);
    if (!jcs.is_array()) throw JsonError(path + ".constraints", "expected an array");
    for (std::size_t i = 0; i < jcs.size(); ++i) {
        std::string cpath = path + ".constraints[" + std::to_string(i) + "]";
        Constraint c;
        c.a = vector_from_json(member(jcs[i], "a", cpath), cpath + ".a");
        if (c.a.size() != dim) throw JsonError(cpath + ".a", "length differs from dim");
        c.b = rational_from_json(member(jcs[i], "b", cpath), cpath + ".b");
        if (jcs[i].contains("strict")) {
            if (!jcs[i]["strict"].is_boolean()) throw JsonError(cpath + ".strict", "expected a boolean");
            c.strict = jcs[i]["strict"].get<bool>();
        } else {
            c.strict = declared_open;
        }
        if (!declared_open && c.strict)
            throw JsonError(cpath + ".strict", "strict constraint in a closed set");
        cs.push_back(std::move(c));
    }
    return HPolyhedron(dim, std::move(cs));
}

inline VPolyhedron vpolyhedron_from_json(const Json& j, const std::string& path = "$") {
    VPolyhedron V;
    V.dim = dim_from_json(j, path);
    V.vertices = vectors_from_json(member(j, "vertices", path), path + ".vertices");
    if (j.contains("rays")) V.rays = vectors_from_json(j["rays"], path + ".rays");
    for (const auto& v : V.vertices)
        if (v.size() != V.dim) throw JsonError(path + ".vertices", "vertex length differs from dim");
    for (const auto& r : V.rays)
        if (r.size() != V.dim) throw JsonError(path + ".rays", "ray length differs from dim");
    return V;
}

inline SublinearFunc sublinear_from_json(const Json& j, const std::string& path = "$") {
    SublinearFunc p;
    p.pieces = vectors_from_json(member(j, "pieces", path), path + ".pieces");
    if (p.pieces.empty()) throw JsonError(path + ".pieces", "at least one piece required");
    for (const auto& piece : p.pieces)
        if (piece.size() != p.pieces.front().size())
            throw JsonError(path + ".pieces", "pieces of unequal length");
    return p;
}

inline Functional functional_from_json(const Json& j, const std::string& path = "$") {
    return Functional{vector_from_json(member(j, "coeffs", path), path + ".coeffs")};
}

inline SetValuedMap setvalued_from_json(const Json& j, const std::string& path = "$") {
    const Json& jx = member(j, "dim_x", path);
    const Json& jy = member(j, "dim_y", path);
    if (!jx.is_number_integer() && !jx.is_number_unsigned())
        throw JsonError(path + ".dim_x", "expected an integer");
    if (!jy.is_number_integer() && !jy.is_number_unsigned())
        throw JsonError(path + ".dim_y", "expected an integer");
    HPolyhedron graph = hpolyhedron_from_json(member(j, "graph", path), path + ".graph");
    try {
        return SetValuedMap(jx.get<std::size_t>(), jy.get<std::size_t>(), std::move(graph));
    } catch (const std::invalid_argument& e) {
        throw JsonError(path, e.what());
    }
}

inline PolyhedralFunction function_from_json(const Json& j, const std::string& path = "$") {
    std::size_t dim = dim_from_json(j, path);
    try {
        if (j.contains("epigraph"))
            return PolyhedralFunction(dim, hpolyhedron_from_json(j["epigraph"], path + ".epigraph"));
        if (j.contains("max_affine")) {
            const Json& jm = j["max_affine"];
            if (!jm.is_array()) throw JsonError(path + ".max_affine", "expected an array");
            std::vector<std::pair<QVector, Rational>> pieces;
            for (std::size_t i = 0; i < jm.size(); ++i) {
                std::string ppath = path + ".max_affine[" + std::to_string(i) + "]";
                QVector g = vector_from_json(member(jm[i], "g", ppath), ppath + ".g");
                if (g.size() != dim) throw JsonError(ppath + ".g", "length differs from dim");
                Rational c = rational_from_json(member(jm[i], "c", ppath), ppath + ".c");
                pieces.emplace_back(std::move(g), std::move(c));
            }
            std::optional<HPolyhedron> domain;
            if (j.contains("domain")) domain = hpolyhedron_from_json(j["domain"], path + ".domain");
            return PolyhedralFunction::from_max_affine(dim, pieces, domain);
        }
    } catch (const ImproperFunctionError& e) {
        throw JsonError(path, e.what());
    } catch (const std::invalid_argument& e) {
        throw JsonError(path, e.what());
    }
    throw JsonError(path, "expected \"epigraph\" or \"max_affine\"");
}

} // namespace ccx

#endif
