#include "json.hpp"

#include "detskein/certify.hpp"
#include "detskein/error.hpp"

namespace detskein {
namespace {

using nlohmann::json;

json coefficients_json(const Coefficients& c) {
    return {{"a", c.a.str()}, {"b", c.b.str()}, {"sign", c.sign}};
}

json certificate_json(const Certificate& c) {
    json nodes = json::array();
    for (const auto& n : c.nodes) {
        json just;
        if (n.just.is_base()) {
            just["base"] = *n.just.base;
        } else {
            just["triple"] = {n.just.i, n.just.j};
            if (n.just.resolution) just["resolution"] = *n.just.resolution;
        }
        json node{{"frac", to_string(n.frac)}, {"just", just}};
        if (n.orient) node["orient"] = to_string(*n.orient);
        nodes.push_back(std::move(node));
    }
    json out{{"kind", c.kind == CertKind::oriented ? "oriented" : "unoriented"},
             {"ambient", {{"pd", c.ambient.pd}, {"coefficients", coefficients_json(c.ambient.coeffs)}}},
             {"nodes", std::move(nodes)}};
    if (!c.summand.empty()) {
        out["summand"] = {{"pd", c.summand_pd}, {"certificate", certificate_json(c.summand.front())}};
    }
    return out;
}

[[noreturn]] void bad(const std::string& what) { throw ParseError("malformed certificate: " + what); }

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::string text(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::size_t index(const json& v) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        bad("node references must be non-negative integers");
    }
    return v.get<std::size_t>();
}

BigInt big(const json& obj, const char* key) {
    const json& v = field(obj, key);
    try {
        if (v.is_string()) return BigInt(v.get<std::string>());
        if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    } catch (const std::exception&) {
    }
    bad(std::string("field '") + key + "' must be an integer");
}

Certificate certificate_from(const json& j) {
    Certificate c;
    const std::string kind = text(j, "kind");
    if (kind == "unoriented") {
        c.kind = CertKind::unoriented;
    } else if (kind == "oriented") {
        c.kind = CertKind::oriented;
    } else {
        bad("unknown kind '" + kind + "'");
    }
    const json& amb = field(j, "ambient");
    c.ambient.pd = text(amb, "pd");
    const json& co = field(amb, "coefficients");
    c.ambient.coeffs.a = big(co, "a");
    c.ambient.coeffs.b = big(co, "b");
    const json& sign = field(co, "sign");
    if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) bad("sign must be 1 or -1");
    c.ambient.coeffs.sign = sign.get<int>();

    const json& nodes = field(j, "nodes");
    if (!nodes.is_array()) bad("nodes must be an array");
    for (const json& n : nodes) {
        CertNode node;
        node.frac = parse_fraction(text(n, "frac"));
        if (n.contains("orient")) node.orient = parse_orientation_class(text(n, "orient"));
        const json& just = field(n, "just");
        if (just.contains("base")) {
            node.just = Justification::make_base(text(just, "base"));
        } else {
            const json& t = field(just, "triple");
            if (!t.is_array() || t.size() != 2) bad("triple must list two node indices");
            std::optional<std::size_t> res;
            if (just.contains("resolution")) res = index(just.at("resolution"));
            node.just = Justification::make_triple(index(t[0]), index(t[1]), res);
        }
        c.nodes.push_back(std::move(node));
    }
    if (j.contains("summand")) {
        const json& s = j.at("summand");
        c.summand_pd = text(s, "pd");
        c.summand.push_back(certificate_from(field(s, "certificate")));
    }
    return c;
}

}  // namespace

std::string to_json(const Certificate& c) { return certificate_json(c).dump(2) + "\n"; }

Certificate certificate_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed certificate JSON: ") + e.what());
    }
    try {
        return certificate_from(j);
    } catch (const DomainError& e) {
        bad(e.what());
    } catch (const json::exception& e) {
        bad(e.what());
    }
}

}  // namespace detskein
