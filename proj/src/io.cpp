#include "theta/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace theta::io {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

Vec to_vec(const json& j) {
    Vec v;
    for (auto& x : j) v.push_back(x.get<Int>());
    return v;
}

Mat to_mat(const json& j) {
    Mat m;
    for (auto& row : j) m.push_back(to_vec(row));
    return m;
}

Rational to_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<Int>());
    return Rational::parse(j.get<std::string>());
}

ConeComplex parse_complex(const json& j) {
    ConeComplex cx;
    for (auto& d : j.at("divisors")) cx.divisors.push_back(d.get<std::string>());
    for (auto& s : j.at("strata")) {
        Stratum st;
        st.id = s.at("id").get<std::string>();
        for (auto& l : s.at("labels")) st.labels.push_back(l.get<std::string>());
        if (s.contains("parents"))
            for (auto& p : s.at("parents")) st.parents.push_back(p.get<std::string>());
        cx.strata.push_back(st);
    }
    cx.validate();
    return cx;
}

IntegralPoint parse_point_json(const ConeComplex& cx, const json& j) {
    std::map<std::string, Int> coords;
    for (auto& [k, v] : j.at("coords").items()) coords[k] = v.get<Int>();
    return canonical_point(cx, j.at("cone").get<std::string>(), coords);
}

} // namespace

Geometry load_geometry(const std::string& path) {
    json j = load_json(path);
    Geometry g;
    g.complex = parse_complex(j);
    if (j.contains("relative")) {
        RelativeData rel;
        for (auto& [k, v] : j.at("relative").at("multiplicities").items())
            rel.multiplicities[k] = v.get<Int>();
        g.relative = rel;
    }
    std::map<std::string, Rational> a;
    for (auto& d : g.complex.divisors) a[d] = Rational(0);
    if (j.contains("skeleton_coeffs"))
        for (auto& [k, v] : j.at("skeleton_coeffs").items()) a[k] = to_rational(v);
    g.skeleton = ks_skeleton(g.complex, a, g.relative);

    const json& c = j.at("classes");
    g.classes.n = c.at("h2_rank").get<size_t>();
    g.classes.divisors = g.complex.divisors;
    for (auto& [k, v] : c.at("pairing_matrix").items()) g.classes.pairing_rows[k] = to_vec(v);
    g.classes.c1 = to_vec(c.at("c1"));
    std::string flag = c.at("flag").get<std::string>();
    if (flag == "nef") g.classes.flag = C1Flag::Nef;
    else if (flag == "antinef") g.classes.flag = C1Flag::AntiNef;
    else if (flag == "logcy") g.classes.flag = C1Flag::LogCalabiYau;
    else throw std::runtime_error("unknown c1 flag " + flag);
    if (g.classes.flag == C1Flag::LogCalabiYau) {
        for (auto& d : g.complex.divisors) g.classes.logcy_coeffs[d] = Rational(0);
        if (c.contains("logcy_coeffs"))
            for (auto& [k, v] : c.at("logcy_coeffs").items())
                g.classes.logcy_coeffs[k] = to_rational(v);
    }
    const json& cm = c.at("class_monoid");
    g.pmonoid.n = g.classes.n;
    for (auto& gen : cm.at("generators")) g.pmonoid.generators.push_back(to_vec(gen));
    g.pmonoid.phi = to_vec(cm.at("phi"));
    const json& id = c.at("ideal");
    if (id.contains("threshold")) g.ideal.threshold = id.at("threshold").get<Int>();
    else g.ideal.generators = to_mat(id.at("generators"));
    g.validate();
    return g;
}

InvariantTable load_table(const Geometry& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    InvariantTable t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line);
        if (j.contains("policy")) {
            std::string p = j.at("policy").get<std::string>();
            if (p == "complete") t.policy = TablePolicy::Complete;
            else if (p == "strict") t.policy = TablePolicy::Strict;
            else throw std::runtime_error("unknown table policy " + p);
            continue;
        }
        t.insert(g, to_vec(j.at("A")), parse_point_json(g.complex, j.at("p1")),
                 parse_point_json(g.complex, j.at("p2")),
                 parse_point_json(g.complex, j.at("r")), to_rational(j.at("N")));
    }
    return t;
}

RingPresentation load_presentation(const Geometry& g, const std::string& path) {
    json j = load_json(path);
    RingPresentation pres;
    for (auto& v : j.at("vars")) pres.vars.push_back(v.get<std::string>());
    for (auto& [k, v] : j.at("points").items())
        pres.points[k] = parse_point_json(g.complex, v);
    if (j.contains("relations"))
        for (auto& r : j.at("relations")) {
            Relation rel;
            for (auto& [k, v] : r.at("lead").items()) rel.lead[k] = v.get<Int>();
            for (auto& term : r.at("replacement")) {
                Monomial m;
                if (term.contains("monomial"))
                    for (auto& [k, v] : term.at("monomial").items()) m[k] = v.get<Int>();
                rel.replacement.push_back(
                    {Coefficient::monomial(to_vec(term.at("class")),
                                           to_rational(term.at("value"))),
                     m});
            }
            pres.relations.push_back(rel);
        }
    pres.validate(g);
    return pres;
}

TropFamily load_tropical(const std::string& path) {
    json j = load_json(path);
    TropFamily f;
    f.complex = parse_complex(j.at("complex"));
    const json& gjson = j.at("graph");
    for (auto& v : gjson.at("vertices"))
        f.vertices.push_back({v.at("name").get<std::string>(),
                              v.at("bsigma").get<std::string>()});
    if (gjson.contains("edges"))
        for (auto& e : gjson.at("edges")) {
            TropEdgeData ed;
            ed.name = e.at("name").get<std::string>();
            ed.src = e.at("src").get<std::string>();
            ed.dst = e.at("dst").get<std::string>();
            ed.bsigma = e.at("bsigma").get<std::string>();
            ed.u = to_vec(e.at("u"));
            f.edges.push_back(ed);
        }
    for (auto& l : gjson.at("legs")) {
        TropLeg leg;
        leg.label = l.at("label").get<std::string>();
        leg.vertex = l.at("vertex").get<std::string>();
        leg.bsigma = l.at("bsigma").get<std::string>();
        leg.u = to_vec(l.at("u"));
        if (l.contains("bounded")) leg.bounded = l.at("bounded").get<bool>();
        f.legs.push_back(leg);
    }
    for (auto& b : j.at("base").at("generators")) f.base_gens.push_back(b.get<std::string>());
    for (auto& [k, v] : j.at("nu").items()) f.nu[k] = to_mat(v);
    if (j.contains("lengths"))
        for (auto& [k, v] : j.at("lengths").items()) f.lengths[k] = to_vec(v);
    if (j.contains("delta")) f.delta = to_vec(j.at("delta"));
    if (j.contains("r")) f.r = to_vec(j.at("r"));
    return f;
}

ToricMonoid load_monoid(const std::string& path) {
    json j = load_json(path);
    return ToricMonoid(j.at("rank").get<size_t>(), to_mat(j.at("generators")));
}

IntegralPoint parse_point(const Geometry& g, const std::string& text) {
    if (text == "0" || text == "zero") return zero_point(g.complex);
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("point syntax: cone:label=c,label=c (or 'zero')");
    std::string cone = text.substr(0, colon);
    std::map<std::string, Int> coords;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("point syntax: cone:label=c,label=c");
        coords[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    }
    return canonical_point(g.complex, cone, coords);
}

std::string point_json(const IntegralPoint& p) {
    json j;
    j["cone"] = p.cone;
    j["coords"] = json::object();
    for (auto& [l, c] : p.coords) j["coords"][l] = c;
    return j.dump();
}

std::string element_json(const ThetaElement& e) {
    json arr = json::array();
    for (auto& [p, coef] : e.terms)
        for (auto& [a, c] : coef.terms) {
            json t;
            t["point"] = json::parse(point_json(p));
            t["class"] = a;
            t["value"] = c.str();
            arr.push_back(t);
        }
    return arr.dump();
}

} // namespace theta::io
