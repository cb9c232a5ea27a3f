#include "flagres/descriptor.hpp"

#include "flagres/errors.hpp"

namespace flagres {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; surface it as the column.
        throw ParseError(e.what(), 1, static_cast<int>(e.byte));
    }
}

const json& require(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'", 1, 1);
    return *it;
}

std::string get_string(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_string()) throw ParseError(std::string("'") + key + "' must be a string", 1, 1);
    return v.get<std::string>();
}

long long get_int(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer", 1, 1);
    return v.get<long long>();
}

std::vector<std::string> get_string_list(const json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of strings", 1, 1);
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw ParseError(std::string(what) + " must contain only strings", 1, 1);
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

FlagDescriptor parse_flag_descriptor(const std::string& json_text) {
    const json j = parse_json(json_text);
    FlagDescriptor d;
    d.ambient = get_string(j, "ambient");
    if (d.ambient != "P3" && d.ambient != "P2")
        throw ParseError("ambient must be \"P3\" or \"P2\"", 1, 1);
    d.form = get_string_list(require(j, "form"), "'form'");
    d.field = get_string_list(require(j, "field"), "'field'");
    d.d1 = static_cast<int>(get_int(j, "d1"));
    d.d2 = static_cast<int>(get_int(j, "d2"));
    if (j.contains("symbol")) d.symbol = get_string(j, "symbol");

    if (j.contains("components")) {
        const json& comps = j.at("components");
        if (!comps.is_array()) throw ParseError("'components' must be an array", 1, 1);
        for (const auto& c : comps) {
            ComponentDescriptor cd;
            cd.name = get_string(c, "name");
            cd.degree = static_cast<int>(get_int(c, "degree"));
            if (cd.degree < 1) throw ParseError("component '" + cd.name + "': degree must be >= 1", 1, 1);
            if (c.contains("defining_equations"))
                cd.defining_equations = get_string_list(c.at("defining_equations"), "'defining_equations'");
            cd.chart = static_cast<int>(get_int(c, "chart"));
            const json& disc = require(c, "disc");
            cd.disc.fix = get_string(disc, "fix");
            cd.disc.value = get_string(disc, "value");
            const json& pt = require(c, "point");
            if (!pt.is_array() || pt.size() != 2)
                throw ParseError("component '" + cd.name + "': point must be a pair", 1, 1);
            const auto coords = get_string_list(pt, "'point'");
            cd.point = {coords[0], coords[1]};
            d.components.push_back(std::move(cd));
        }
    }
    if (j.contains("isolated_points")) {
        const json& pts = j.at("isolated_points");
        if (!pts.is_array()) throw ParseError("'isolated_points' must be an array", 1, 1);
        for (const auto& p : pts) d.isolated_points.push_back(get_string_list(p, "isolated point"));
    }
    return d;
}

RelationDescriptor parse_relation_descriptor(const std::string& json_text) {
    const json j = parse_json(json_text);
    RelationDescriptor d;
    d.d1 = get_int(j, "d1");
    d.d2 = get_int(j, "d2");
    d.l1 = get_int(j, "l1");
    d.l2 = get_int(j, "l2");
    d.degC = get_int(j, "degC");
    if (d.degC < 1) throw ParseError("degC must be >= 1", 1, 1);
    if (j.contains("chi")) {
        if (!j.at("chi").is_number_integer()) throw ParseError("'chi' must be an integer", 1, 1);
        d.chi = j.at("chi").get<long long>();
    }
    return d;
}

nlohmann::json serialize(const FlagDescriptor& d) {
    json j;
    j["ambient"] = d.ambient;
    j["form"] = d.form;
    j["field"] = d.field;
    j["d1"] = d.d1;
    j["d2"] = d.d2;
    j["symbol"] = d.symbol;
    j["components"] = json::array();
    for (const auto& c : d.components) {
        json cj;
        cj["name"] = c.name;
        cj["degree"] = c.degree;
        if (!c.defining_equations.empty()) cj["defining_equations"] = c.defining_equations;
        cj["chart"] = c.chart;
        cj["disc"] = {{"fix", c.disc.fix}, {"value", c.disc.value}};
        cj["point"] = {c.point[0], c.point[1]};
        j["components"].push_back(std::move(cj));
    }
    j["isolated_points"] = d.isolated_points;
    return j;
}

nlohmann::json serialize(const RelationDescriptor& d) {
    json j;
    j["d1"] = d.d1;
    j["d2"] = d.d2;
    j["l1"] = d.l1;
    j["l2"] = d.l2;
    j["degC"] = d.degC;
    if (d.chi) j["chi"] = *d.chi;
    return j;
}

}  // namespace flagres
