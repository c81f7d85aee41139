#include "polybloch/io.hpp"

#include <fstream>

namespace pb {

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw FormatError("complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

json lincomb_to_json(const GeneratorRegistry& reg, const LinComb& c) {
    json o = json::object();
    for (auto& [g, e] : c) o[reg.name(g)] = e;
    return o;
}

LinComb lincomb_from_json(const GeneratorRegistry& reg, const json& j) {
    if (!j.is_object()) throw FormatError("u/v must be an object {generator: exponent}");
    LinComb c;
    for (auto& [name, e] : j.items()) {
        auto id = reg.find(name);
        if (!id) throw FormatError("unknown generator '" + name + "'");
        if (!e.is_number_integer()) throw FormatError("exponent of '" + name + "' is not an integer");
        c = lc_add(c, lc_gen(*id, e.get<long long>()));
    }
    return c;
}

int sign_from_json(const json& j, const char* what) {
    if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != -1 && j.get<int>() != 0))
        throw FormatError(std::string(what) + " must be 1, -1 or 0");
    return j.get<int>();
}

}  // namespace

json relation_to_json(const RelationSum& r) {
    json j;
    j["generators"] = r.reg.names();
    json terms = json::array();
    for (auto& t : r.terms)
        terms.push_back({{"coef", t.coef},
                         {"u", lincomb_to_json(r.reg, t.pair.u)},
                         {"v", lincomb_to_json(r.reg, t.pair.v)},
                         {"sign1", t.sign1},
                         {"sign2", t.sign2}});
    j["terms"] = terms;
    return j;
}

RelationSum relation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("terms"))
        throw FormatError("relation needs 'generators' and 'terms'");
    RelationSum r;
    for (auto& g : j["generators"]) {
        if (!g.is_string()) throw FormatError("generator names must be strings");
        if (r.reg.find(g.get<std::string>())) throw FormatError("duplicate generator " + g.get<std::string>());
        r.reg.add(g.get<std::string>());
    }
    for (auto& t : j["terms"]) {
        if (!t.contains("coef") || !t["coef"].is_number_integer()) throw FormatError("term needs integer 'coef'");
        SymbolicLogPair p{lincomb_from_json(r.reg, t.value("u", json::object())),
                          lincomb_from_json(r.reg, t.value("v", json::object()))};
        int s1 = t.contains("sign1") ? sign_from_json(t["sign1"], "sign1") : 0;
        int s2 = t.contains("sign2") ? sign_from_json(t["sign2"], "sign2") : 0;
        if ((s1 == 0) != (s2 == 0)) throw FormatError("sign1 and sign2 must both be set or both be 0");
        r.add(t["coef"].get<long long>(), p, s1, s2);
    }
    return r;
}

json realization_to_json(const Realization& r) {
    json j;
    json signs = json::array();
    for (auto& [a, b] : r.signs) signs.push_back({a, b});
    j["signs"] = signs;
    json vals = json::object(), logs = json::object();
    for (auto& [k, v] : r.values) vals[k] = cplx_to_json(v);
    for (auto& [k, v] : r.logs) logs[k] = cplx_to_json(v);
    j["values"] = vals;
    j["logs"] = logs;
    return j;
}

Realization realization_from_json(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j.contains("logs"))
        throw FormatError("realization needs 'values' and 'logs'");
    Realization r;
    for (auto& s : j.value("signs", json::array())) {
        if (!s.is_array() || s.size() != 2) throw FormatError("signs entries must be [s1, s2]");
        r.signs.push_back({sign_from_json(s[0], "sign"), sign_from_json(s[1], "sign")});
    }
    for (auto& [k, v] : j["values"].items()) r.values[k] = cplx_from_json(v);
    for (auto& [k, v] : j["logs"].items()) r.logs[k] = cplx_from_json(v);
    return r;
}

json quiver_to_json(const Quiver& q) {
    json j;
    json vs = json::array();
    for (std::size_t i = 0; i < q.m; ++i) vs.push_back({{"name", q.names[i]}, {"frozen", bool(q.frozen[i])}});
    json es = json::array();
    for (std::size_t i = 0; i < q.m; ++i)
        for (std::size_t k = 0; k < q.m; ++k)
            if (q.eps[i][k] > 0) es.push_back({i, k, q.eps[i][k]});
    j["vertices"] = vs;
    j["edges"] = es;
    return j;
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices")) throw FormatError("quiver needs 'vertices'");
    Quiver q(j["vertices"].size());
    std::size_t i = 0;
    for (auto& v : j["vertices"]) {
        if (v.is_string()) {
            q.names[i] = v.get<std::string>();
        } else {
            q.names[i] = v.value("name", q.names[i]);
            q.frozen[i] = v.value("frozen", false);
        }
        ++i;
    }
    for (auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw FormatError("edges must be [i, j] or [i, j, mult]");
        auto a = e[0].get<long long>(), b = e[1].get<long long>();
        int mult = e.size() == 3 ? e[2].get<int>() : 1;
        if (a < 0 || b < 0 || std::size_t(a) >= q.m || std::size_t(b) >= q.m || a == b)
            throw FormatError("edge endpoint out of range");
        q.add_arrow(std::size_t(a), std::size_t(b), mult);
    }
    return q;
}

json seed_to_json(const MutationClass& mc, std::size_t seed) {
    const auto& s = mc.seeds.at(seed);
    json j;
    j["quiver"] = quiver_to_json(s.quiver);
    json coords = json::array();
    for (auto c : s.coords) coords.push_back(mc.reg.poly(c).to_string(mc.q0.names));
    j["coordinates"] = coords;
    return j;
}

json scenario_to_json(const ScenarioReport& r) {
    json j;
    j["name"] = r.name;
    j["expected"] = cplx_to_json(r.expected);
    j["modulus"] = cplx_to_json(r.modulus);
    j["samples"] = r.samples;
    j["max_residual"] = r.max_residual;
    j["multiples"] = r.multiples;
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json comparison_to_json(const MultisetComparison& c) {
    return {{"lhs_terms", c.lhs_terms},
            {"rhs_terms", c.rhs_terms},
            {"collisions", c.collisions},
            {"max_coef_diff", c.max_coef_diff},
            {"match", c.match}};
}

json matrix_to_json(const CMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(cplx_to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

CMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw FormatError("matrix must be a list of rows");
    CMatrix m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != j[0].size()) throw FormatError("ragged matrix");
        for (std::size_t k = 0; k < j[i].size(); ++k) m(i, k) = cplx_from_json(j[i][k]);
    }
    return m;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

}  // namespace pb
