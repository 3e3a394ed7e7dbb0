#include "dodgson/json_io.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

namespace dodgson {

using nlohmann::json;

namespace {

json cells_json(const Monomial& m) {
    json cells = json::array();
    for (const Cell& c : m.cells()) cells.push_back(json::array({c.row, c.col}));
    return cells;
}

Monomial cells_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("cells must be an array of [row, col] pairs");
    std::vector<Cell> cells;
    cells.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("cells must be an array of [row, col] pairs");
        cells.push_back(Cell{e[0].get<int>(), e[1].get<int>()});
    }
    return Monomial(std::move(cells));
}

json weight_json(const FormalWeight& w) {
    return json{{"sign", w.sign}, {"cells", cells_json(w.cells)}};
}

json pairing_json(const Pairing& p) {
    auto layer = [](const Permutation& perm) {
        json obj = json::object();
        for (const auto& [man, woman] : perm.pairs()) obj[std::to_string(man)] = woman;
        return obj;
    };
    return json{{"n", p.n},
                {"class", std::string(1, class_letter(p.cls))},
                {"marriages", layer(p.marriages)},
                {"affairs", layer(p.affairs)}};
}

std::vector<std::pair<int, int>> layer_from_json(const json& j, const char* name) {
    if (!j.is_object())
        throw ParseError(std::string(name) + " must be an object of man -> woman");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(j.size());
    for (const auto& [key, value] : j.items()) {
        int man;
        try {
            man = static_cast<int>(parse_int(key).get_si());
        } catch (const ParseError&) {
            throw ParseError(std::string(name) + ": key '" + key + "' is not an integer");
        }
        if (!value.is_number_integer())
            throw ParseError(std::string(name) + ": image of " + key + " is not an integer");
        pairs.emplace_back(man, value.get<int>());
    }
    return pairs;
}

json parse_json(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

Pairing pairing_from(const json& j) {
    if (!j.is_object()) throw ParseError("pairing must be a JSON object");
    for (const char* key : {"n", "class", "marriages", "affairs"})
        if (!j.contains(key)) throw ParseError(std::string("pairing lacks '") + key + "'");
    if (!j["n"].is_number_integer()) throw ParseError("'n' must be an integer");
    if (!j["class"].is_string()) throw ParseError("'class' must be a string");

    return make_pairing(j["n"].get<int>(), class_from_letter(j["class"].get<std::string>()),
                        layer_from_json(j["marriages"], "marriages"),
                        layer_from_json(j["affairs"], "affairs"));
}

std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

std::string poly_to_json(const FormalPoly& p) {
    json out = json::array();
    for (const auto& [mono, coeff] : p.terms())
        out.push_back(json{{"cells", cells_json(mono)}, {"coeff", int_str(coeff)}});
    return out.dump() + "\n";
}

FormalPoly poly_from_json(std::string_view text) {
    json j = parse_json(text);
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array of terms");
    FormalPoly p;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("cells") || !term.contains("coeff") ||
            !term["coeff"].is_string())
            throw ParseError("each term needs 'cells' and a string 'coeff'");
        p.add_term(cells_from_json(term["cells"]), parse_int(term["coeff"].get<std::string>()));
    }
    return p;
}

std::string pairing_to_json(const Pairing& p, int indent) { return dump(pairing_json(p), indent); }

Pairing pairing_from_json(std::string_view text) { return pairing_from(parse_json(text)); }

Pairing pairing_from_json_or_trace(std::string_view text) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("output")) return pairing_from(j["output"]);
    return pairing_from(j);
}

std::string weight_to_json(const FormalWeight& w, int indent) { return dump(weight_json(w), indent); }

std::string trace_to_json(const Pairing& input, const Chain& chain, const Pairing& output,
                          const FormalWeight& weight_in, const FormalWeight& weight_out,
                          int indent) {
    json j{{"input", pairing_json(input)},
           {"chain", json{{"men", chain.men}, {"women", chain.women}, {"terminal", chain.terminal}}},
           {"output", pairing_json(output)},
           {"weight_in", weight_json(weight_in)},
           {"weight_out", weight_json(weight_out)}};
    return dump(j, indent);
}

std::string condensation_trace_to_json(const CondensationTrace& trace, const Scalar& value,
                                       int indent) {
    json layers = json::array();
    for (const IntMatrix& layer : trace.layers) {
        json rows = json::array();
        for (int i = 0; i < layer.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < layer.cols(); ++j) row.push_back(int_str(layer(i, j)));
            rows.push_back(std::move(row));
        }
        layers.push_back(std::move(rows));
    }
    json repairs = json::array();
    for (const RepairRecord& r : trace.repairs)
        repairs.push_back(json{{"attempt", r.attempt},
                               {"target_row", r.target_row},
                               {"source_row", r.source_row},
                               {"multiplier", r.multiplier},
                               {"divisor_layer", r.divisor_layer},
                               {"at_row", r.at_row},
                               {"at_col", r.at_col}});
    json j{{"value", value.str()},
           {"prefactor", int_str(trace.prefactor)},
           {"fallback_used", trace.fallback_used},
           {"repairs", std::move(repairs)},
           {"layers", std::move(layers)}};
    return dump(j, indent);
}

}  // namespace dodgson
