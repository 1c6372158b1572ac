#include "spinwhit/render.hpp"

namespace spinwhit {

Json weight_json(const SpinWeight& w) {
    Json out = Json::array();
    for (const HalfInt& e : w.entries) out.push_back(format_half_int(e));
    return out;
}

Json diagram_json(const SocleDiagram& d) {
    Json layers = Json::array();
    for (const auto& layer : d.layers) {
        Json row = Json::array();
        for (const IrrLabel& l : layer) row.push_back(l.wire());
        layers.push_back(row);
    }
    Json arrows = Json::array();
    for (const auto& [u, l] : d.arrows) arrows.push_back(Json::array({u.wire(), l.wire()}));
    return Json{{"layers", layers}, {"arrows", arrows}};
}

Json trace_json(const DerivationTrace& t) {
    auto fact = [](const TraceFact& f) { return Json{{"via", f.via}, {"fact", f.what}}; };
    Json out;
    out["socle_step"] = fact(t.socle_step);
    out["candidate_step"] = fact(t.candidate_step);
    out["parity_layers"] = t.parity_layers;
    Json ex = Json::array();
    for (const auto& f : t.exclusion_facts) ex.push_back(fact(f));
    out["exclusion_facts"] = ex;
    Json mult = Json::array();
    for (const auto& f : t.multiplicity_facts) mult.push_back(fact(f));
    out["multiplicity_facts"] = mult;
    return out;
}

Json envelope(const std::string& command, Json input, Json result,
              const std::vector<std::string>& warnings) {
    Json out;
    out["schema_version"] = "1";
    out["command"] = command;
    out["input"] = std::move(input);
    out["result"] = std::move(result);
    out["warnings"] = warnings;
    return out;
}

std::string diagram_dot(const SocleDiagram& d) {
    std::string out = "digraph socle {\n";
    for (const auto& layer : d.layers) {
        for (const IrrLabel& l : layer) out += "  \"" + l.wire() + "\";\n";
    }
    for (const auto& [u, l] : d.arrows) {
        out += "  \"" + u.wire() + "\" -> \"" + l.wire() + "\";\n";
    }
    out += "}\n";
    return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace spinwhit
