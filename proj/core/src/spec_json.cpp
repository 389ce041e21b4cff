#include "voa/spec_json.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"

namespace voa {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rat& r) { return format_rational(r); }

Rat rational_from(const Json& j, const char* field) {
    if (!j.is_string()) throw SpecError(std::string(field) + " must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

}  // namespace

VoaSpec load_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("JSON parse error: ") + e.what());
    }

    VoaSpec spec;
    try {
        spec.labels = j.at("labels").get<std::vector<std::string>>();
        spec.vacuum = j.at("vacuum").get<int>();
        spec.dual = j.at("dual").get<std::vector<int>>();
        for (const auto& w : j.at("weights")) spec.weights.push_back(rational_from(w, "weight"));
        spec.central_charge = rational_from(j.at("central_charge"), "central_charge");
        if (j.contains("strongly_generated_degree_one") &&
            !j["strongly_generated_degree_one"].is_null())
            spec.strongly_generated_degree_one = j["strongly_generated_degree_one"].get<bool>();

        const int l = spec.size();
        if (spec.vacuum < 0 || spec.vacuum >= l) throw SpecError("vacuum index out of range");
        spec.init_tensor();
        for (const auto& entry : j.at("three_point")) {
            if (!entry.is_array() || entry.size() != 4)
                throw SpecError("three_point entries must be [a,b,c,value]");
            const int a = entry[0].get<int>(), b = entry[1].get<int>(), c = entry[2].get<int>();
            const long long v = entry[3].get<long long>();
            if (a < 0 || a >= l || b < 0 || b >= l || c < 0 || c >= l)
                throw SpecError("three_point index out of range");
            spec.set_s(a, b, c, v);
        }
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("spec JSON schema violation: ") + e.what());
    }

    validate(spec);
    return spec;
}

std::string save_spec(const VoaSpec& spec) {
    Json j;
    j["labels"] = spec.labels;
    j["vacuum"] = spec.vacuum;
    j["dual"] = spec.dual;
    Json weights = Json::array();
    for (const auto& w : spec.weights) weights.push_back(rational_json(w));
    j["weights"] = weights;
    j["central_charge"] = rational_json(spec.central_charge);

    Json orbits = Json::array();
    const int l = spec.size();
    for (int a = 0; a < l; ++a)
        for (int b = a; b < l; ++b)
            for (int c = b; c < l; ++c) {
                const long long v = spec.s(a, b, c);
                if (v != 0) orbits.push_back(Json::array({a, b, c, v}));
            }
    j["three_point"] = orbits;

    if (spec.strongly_generated_degree_one)
        j["strongly_generated_degree_one"] = *spec.strongly_generated_degree_one;
    else
        j["strongly_generated_degree_one"] = nullptr;

    return j.dump(2) + "\n";
}

std::uint64_t spec_content_hash(const VoaSpec& spec) {
    const std::string text = save_spec(spec);
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace voa
