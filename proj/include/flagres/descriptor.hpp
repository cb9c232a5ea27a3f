#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace flagres {

/// Disc inside a chart, as written in a descriptor file.
struct DiscDescriptor {
    std::string fix;    // affine variable to pin
    std::string value;  // Q(i) literal

    friend bool operator==(const DiscDescriptor&, const DiscDescriptor&) = default;
};

struct ComponentDescriptor {
    std::string name;
    int degree = 1;
    std::vector<std::string> defining_equations;  // optional complete-intersection data
    int chart = 0;
    DiscDescriptor disc;
    std::array<std::string, 2> point;  // Q(i) literals, disc coordinates

    friend bool operator==(const ComponentDescriptor&, const ComponentDescriptor&) = default;
};

/// Input document for `validate` and `residues`: a flag on P^3 plus its
/// singular components. Polynomials are strings in the homogeneous
/// coordinates of the ambient.
struct FlagDescriptor {
    std::string ambient = "P3";
    std::vector<std::string> form;
    std::vector<std::string> field;
    int d1 = 0;
    int d2 = 0;
    std::string symbol = "c1^2";
    std::vector<ComponentDescriptor> components;
    std::vector<std::vector<std::string>> isolated_points;

    friend bool operator==(const FlagDescriptor&, const FlagDescriptor&) = default;
};

/// Input document for `relation`.
struct RelationDescriptor {
    long long d1 = 0;
    long long d2 = 0;
    long long l1 = 0;
    long long l2 = 0;
    long long degC = 1;
    std::optional<long long> chi;

    friend bool operator==(const RelationDescriptor&, const RelationDescriptor&) = default;
};

FlagDescriptor parse_flag_descriptor(const std::string& json_text);
RelationDescriptor parse_relation_descriptor(const std::string& json_text);

nlohmann::json serialize(const FlagDescriptor& d);
nlohmann::json serialize(const RelationDescriptor& d);

}  // namespace flagres
