#include "ramicalc/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace ramicalc {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("malformed input: " + what);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

long int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        bad(std::string("field '") + key + "' must be an integer");
    return v.get<long>();
}

} // namespace

Json rat_to_json(const Rat& r) {
    return r.str();
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rat(j.get<long>());
    if (!j.is_string())
        bad("rational must be a \"num/den\" string");
    return Rat::parse(j.get<std::string>());
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const Rat& c : p.coeffs())
        arr.push_back(c.str());
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array())
        bad("polynomial must be an array of coefficients");
    std::vector<Rat> coeffs;
    coeffs.reserve(j.size());
    for (const Json& c : j)
        coeffs.push_back(rat_from_json(c));
    return Poly(std::move(coeffs));
}

Json slopes_to_json(const SlopeDecomposition& d) {
    Json arr = Json::array();
    for (const auto& [slope, rank] : d.pieces()) {
        Json piece;
        piece["slope"] = slope.str();
        piece["rank"] = rank;
        arr.push_back(std::move(piece));
    }
    return arr;
}

SlopeDecomposition slopes_from_json(const Json& j) {
    if (!j.is_array())
        bad("slope decomposition must be an array");
    SlopeDecomposition d;
    for (const Json& piece : j)
        d.add_piece(rat_from_json(field(piece, "slope")), int_field(piece, "rank"));
    return d;
}

Json module_to_json(const GaloisModuleData& m) {
    Json j;
    j["rank"] = m.rank();
    j["perfect_residue"] = m.perfect_residue();
    j["log"] = slopes_to_json(m.log());
    j["nonlog"] = m.nonlog() ? slopes_to_json(*m.nonlog()) : Json(nullptr);
    return j;
}

GaloisModuleData module_from_json(const Json& j) {
    const Json& flag = field(j, "perfect_residue");
    if (!flag.is_boolean())
        bad("field 'perfect_residue' must be a boolean");
    std::optional<SlopeDecomposition> nonlog;
    if (j.contains("nonlog") && !j.at("nonlog").is_null())
        nonlog = slopes_from_json(j.at("nonlog"));
    return GaloisModuleData(int_field(j, "rank"), flag.get<bool>(),
                            slopes_from_json(field(j, "log")), std::move(nonlog));
}

Json divisor_to_json(const QWeilDivisor& d) {
    Json comps = Json::object();
    for (const auto& [name, mult] : d.components())
        comps[name] = mult.str();
    Json j;
    j["components"] = std::move(comps);
    return j;
}

QWeilDivisor divisor_from_json(const Json& j) {
    const Json& comps = field(j, "components");
    if (!comps.is_object())
        bad("divisor components must be an object");
    QWeilDivisor d;
    for (const auto& [name, mult] : comps.items())
        d.set(name, rat_from_json(mult));
    return d;
}

Json token_to_json(const CoherentToken& t) {
    Json fibers = Json::object();
    for (const auto& [label, divisor] : t.fibers())
        fibers[label] = divisor_to_json(divisor);
    Json j;
    j["name"] = t.name();
    j["fibers"] = std::move(fibers);
    return j;
}

CoherentToken token_from_json(const Json& j) {
    const Json& name = field(j, "name");
    if (!name.is_string())
        bad("token name must be a string");
    const Json& fibers = field(j, "fibers");
    if (!fibers.is_object())
        bad("token fibers must be an object");
    std::map<std::string, QWeilDivisor> out;
    for (const auto& [label, divisor] : fibers.items())
        out.emplace(label, divisor_from_json(divisor));
    return CoherentToken(name.get<std::string>(), std::move(out));
}

Json combo_to_json(const CoherentCombo& c) {
    Json terms = Json::array();
    for (const auto& [name, term] : c.terms()) {
        Json t;
        t["coeff"] = term.second.str();
        t["token"] = token_to_json(term.first);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

CoherentCombo combo_from_json(const Json& j) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array())
        bad("combo terms must be an array");
    CoherentCombo c;
    for (const Json& t : terms)
        c.add_term(token_from_json(field(t, "token")), rat_from_json(field(t, "coeff")));
    return c;
}

Json curve_to_json(const CurveSheafData& d) {
    Json pts = Json::array();
    for (const BadPoint& pt : d.bad_points) {
        Json p;
        p["label"] = pt.label;
        p["dimtot"] = pt.dimtot.str();
        p["stalk_rank"] = pt.stalk_rank;
        pts.push_back(std::move(p));
    }
    Json j;
    j["genus"] = d.genus;
    j["generic_rank"] = d.generic_rank;
    j["bad_points"] = std::move(pts);
    return j;
}

CurveSheafData curve_from_json(const Json& j) {
    CurveSheafData d;
    d.genus = int_field(j, "genus");
    d.generic_rank = int_field(j, "generic_rank");
    const Json& pts = field(j, "bad_points");
    if (!pts.is_array())
        bad("bad_points must be an array");
    for (const Json& p : pts) {
        const Json& label = field(p, "label");
        if (!label.is_string())
            bad("bad-point label must be a string");
        d.bad_points.push_back(BadPoint{label.get<std::string>(),
                                        rat_from_json(field(p, "dimtot")),
                                        int_field(p, "stalk_rank")});
    }
    validate(d);
    return d;
}

Json family_to_json(const BoundFamily& f) {
    Json arr = Json::array();
    for (const Poly& p : f.polys())
        arr.push_back(poly_to_json(p));
    return arr;
}

BoundFamily family_from_json(const Json& j) {
    if (!j.is_array())
        bad("bound family must be an array of polynomials");
    std::vector<Poly> polys;
    polys.reserve(j.size());
    for (const Json& p : j)
        polys.push_back(poly_from_json(p));
    return BoundFamily(std::move(polys));
}

Json chain_report_to_json(const ChainReport& r) {
    Json arr = Json::array();
    for (const ChainStep& s : r.steps) {
        Json step;
        step["n"] = s.n;
        step["step"] = s.step;
        step["certified"] = s.certified;
        arr.push_back(std::move(step));
    }
    return arr;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace ramicalc
