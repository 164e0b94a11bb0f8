#include "dihedral/json.hpp"

namespace dihedral {

Json to_json(const std::vector<Element>& elements) {
    Json out = Json::array();
    for (const auto& x : elements) out.push_back(to_string(x));
    return out;
}

Json to_json(const SpaceReport& report) {
    Json out;
    out["theta"] = to_string(report.theta);
    out["H"] = to_json(report.H);
    out["Q"] = to_json(report.Q);
    out["R"] = report.R ? to_json(*report.R) : Json(nullptr);
    out["h_shape"] = to_string(report.h_shape);
    out["q_generator"] = report.q_generator ? Json(report.q_generator->generator()) : Json(nullptr);
    out["hq_is_g"] = report.hq.hq_is_g;
    out["hq_diagnostics"] = {{"b_in_image", report.hq.b_in_image},
                             {"trivial_intersection", report.hq.trivial_intersection},
                             {"gcd_coprime", report.hq.gcd_coprime}};
    Json orbits = Json::array();
    for (const auto& orbit : report.h_orbits) orbits.push_back(to_json(orbit));
    out["h_orbits"] = std::move(orbits);
    out["g_orbit_count"] = report.g_orbit_count;
    return out;
}

Json to_json(const EquivClass& cls) {
    Json out;
    out["a"] = cls.a.value();
    out["rep_b"] = cls.rep_b.value();
    out["representative"] = to_string(cls.representative());
    out["size"] = cls.size;
    out["order_bound"] = cls.order_bound;
    out["members"] = cls.members;
    return out;
}

Json to_json(const SubsetDescriptor& d) {
    Json out;
    out["kind"] = to_string(d.kind);
    out["generator"] = d.generator ? Json(*d.generator) : Json(nullptr);
    out["extras"] = to_json(d.extras);
    return out;
}

Json to_json(const InfiniteSpaces& spaces) {
    Json out;
    out["H"] = to_json(spaces.H);
    out["Q"] = to_json(spaces.Q);
    out["R"] = to_json(spaces.R);
    return out;
}

}  // namespace dihedral
