#include "dmsx/jsonio.hpp"

#include <stdexcept>

#include "json.hpp"

namespace dmsx {

using ojson = nlohmann::ordered_json;

std::string surfaceToJson(const SurfaceSpec& spec) {
    ojson j;
    j["name"] = spec.name;
    j["arcs"] = spec.arcs;
    ojson polys = ojson::array();
    for (const Polygon& p : spec.polygons) {
        ojson jp;
        ojson sides = ojson::array();
        for (const Side& s : p.sides) {
            if (s.boundary)
                sides.push_back("boundary");
            else
                sides.push_back(ojson{{"arc", spec.arcs[s.arc]}, {"flip", s.flip}});
        }
        jp["sides"] = sides;
        jp["corner_degrees"] = p.cornerDegrees;
        polys.push_back(jp);
    }
    j["polygons"] = polys;
    return j.dump(2) + "\n";
}

SurfaceSpec surfaceFromJson(const std::string& text) {
    ojson j = ojson::parse(text);
    SurfaceSpec spec;
    spec.name = j.value("name", "");
    for (const auto& a : j.at("arcs")) spec.arcs.push_back(a.get<std::string>());
    auto arcIndex = [&](const std::string& name) {
        for (int i = 0; i < (int)spec.arcs.size(); ++i)
            if (spec.arcs[i] == name) return i;
        throw std::runtime_error("UnknownArc: " + name);
    };
    for (const auto& jp : j.at("polygons")) {
        Polygon p;
        for (const auto& s : jp.at("sides")) {
            if (s.is_string() && s.get<std::string>() == "boundary")
                p.sides.push_back(Side::makeBoundary());
            else
                p.sides.push_back(Side::makeArc(arcIndex(s.at("arc").get<std::string>()),
                                                s.at("flip").get<bool>()));
        }
        for (const auto& d : jp.at("corner_degrees")) p.cornerDegrees.push_back(d.get<int>());
        spec.polygons.push_back(std::move(p));
    }
    return spec;
}

namespace {
ojson endpointToJson(const Endpoint& e) {
    if (e.kind == Endpoint::Decoration) return ojson{{"decoration", e.polygon}};
    return ojson{{"marked", ojson::array({e.polygon, e.vertex})}};
}
Endpoint endpointFromJson(const ojson& j) {
    if (j.contains("decoration")) return Endpoint::decoration(j.at("decoration").get<int>());
    auto m = j.at("marked");
    return Endpoint::marked(m.at(0).get<int>(), m.at(1).get<int>());
}
}  // namespace

std::string curveToJson(const Surface& s, const CurveWalk& w) {
    ojson j;
    j["start"] = endpointToJson(w.start);
    j["end"] = endpointToJson(w.end);
    ojson ps = ojson::array();
    for (const Passage& p : w.passages)
        ps.push_back(ojson{{"arc", s.spec().arcs[p.arc]}, {"slot", p.toOcc}});
    j["passages"] = ps;
    j["sweeps"] = w.sweeps;
    j["chi0"] = ojson::array({w.chi0.z, w.chi0.x});
    return j.dump(2) + "\n";
}

CurveWalk curveFromJson(const Surface& s, const std::string& text) {
    ojson j = ojson::parse(text);
    CurveWalk w;
    w.start = endpointFromJson(j.at("start"));
    w.end = endpointFromJson(j.at("end"));
    for (const auto& p : j.at("passages")) {
        int arc = s.arcIndex(p.at("arc").get<std::string>());
        if (arc < 0) throw std::runtime_error("UnknownArc: " + p.at("arc").get<std::string>());
        w.passages.push_back(Passage{arc, p.at("slot").get<int>()});
    }
    for (const auto& v : j.at("sweeps")) w.sweeps.push_back(v.get<int>());
    auto chi = j.at("chi0");
    w.chi0 = BiDegree{chi.at(0).get<long long>(), chi.at(1).get<long long>()};
    return w;
}

}  // namespace dmsx
