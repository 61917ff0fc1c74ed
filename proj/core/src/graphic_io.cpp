#include "elliptic/graphic_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace elliptic {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw GraphicError(where + " must be an object");
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) throw GraphicError("unknown key '" + key + "' in " + where);
    for (const auto& key : allowed)
        if (!obj.contains(key)) throw GraphicError("missing key '" + key + "' in " + where);
}

const json& array_at(const json& obj, const char* key, const std::string& where) {
    const json& a = obj.at(key);
    if (!a.is_array()) throw GraphicError(std::string(key) + " in " + where + " must be an array");
    return a;
}

int int_at(const json& obj, const char* key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw GraphicError(std::string(key) + " in " + where + " must be an integer");
    return v.get<int>();
}

std::string string_at(const json& obj, const char* key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_string()) throw GraphicError(std::string(key) + " in " + where + " must be a string");
    return v.get<std::string>();
}

std::vector<int> int_list(const json& a, const std::string& where) {
    std::vector<int> out;
    for (const auto& x : a) {
        if (!x.is_number_integer()) throw GraphicError(where + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    try {
        std::size_t slash = text.find('/');
        std::size_t used = 0;
        long long num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) throw GraphicError("");
        long long den = 1;
        if (slash != std::string::npos) {
            std::string d = text.substr(slash + 1);
            den = std::stoll(d, &used);
            if (used != d.size() || den <= 0) throw GraphicError("");
        }
        return Rational(num, den);
    } catch (const std::exception&) {
        throw GraphicError("malformed rational '" + text + "'");
    }
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Graphic parse_graphic_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphicError(std::string("invalid JSON: ") + e.what());
    }
    require_keys(doc, {"vertices", "edges", "regions"}, "graphic");

    std::vector<GraphicVertex> vertices;
    for (const auto& v : array_at(doc, "vertices", "graphic")) {
        require_keys(v, {"id", "s", "t", "kind", "edge_order"}, "vertex");
        GraphicVertex gv;
        gv.id = int_at(v, "id", "vertex");
        std::string where = "vertex " + std::to_string(gv.id);
        gv.s = parse_rational(string_at(v, "s", where));
        gv.t = parse_rational(string_at(v, "t", where));
        auto kind = parse_vertex_kind(string_at(v, "kind", where));
        if (!kind) throw GraphicError("unknown vertex kind in " + where);
        gv.kind = *kind;
        gv.edge_order = int_list(array_at(v, "edge_order", where), "edge_order of " + where);
        vertices.push_back(std::move(gv));
    }

    std::vector<GraphicEdge> edges;
    for (const auto& e : array_at(doc, "edges", "graphic")) {
        require_keys(e, {"id", "v_from", "v_to", "tangencies"}, "edge");
        GraphicEdge ge;
        ge.id = int_at(e, "id", "edge");
        std::string where = "edge " + std::to_string(ge.id);
        ge.from = int_at(e, "v_from", where);
        ge.to = int_at(e, "v_to", where);
        for (const auto& t : array_at(e, "tangencies", where)) {
            if (!t.is_string()) throw GraphicError("tangencies of " + where + " must be strings");
            auto tan = parse_tangency(t.get<std::string>());
            if (!tan) throw GraphicError("unknown tangency '" + t.get<std::string>() + "' in " + where);
            ge.tangencies.push_back(*tan);
        }
        edges.push_back(std::move(ge));
    }

    std::vector<GraphicRegion> regions;
    for (const auto& r : array_at(doc, "regions", "graphic")) {
        require_keys(r, {"id", "boundary", "label"}, "region");
        GraphicRegion gr;
        gr.id = int_at(r, "id", "region");
        std::string where = "region " + std::to_string(gr.id);
        gr.boundary = int_list(array_at(r, "boundary", where), "boundary of " + where);
        try {
            gr.label = Label::parse(string_at(r, "label", where));
        } catch (const LabelError& e) {
            throw GraphicError(where + ": " + e.what());
        }
        regions.push_back(std::move(gr));
    }
    return Graphic(std::move(vertices), std::move(edges), std::move(regions));
}

Graphic read_graphic_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphicError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return parse_graphic_json(os.str());
}

std::string write_graphic_json(const Graphic& g) {
    ordered doc;
    doc["vertices"] = ordered::array();
    for (const auto& v : g.vertices()) {
        ordered o;
        o["id"] = v.id;
        o["s"] = format_rational(v.s);
        o["t"] = format_rational(v.t);
        o["kind"] = to_string(v.kind);
        o["edge_order"] = v.edge_order;
        doc["vertices"].push_back(o);
    }
    doc["edges"] = ordered::array();
    for (const auto& e : g.edges()) {
        ordered o;
        o["id"] = e.id;
        o["v_from"] = e.from;
        o["v_to"] = e.to;
        o["tangencies"] = ordered::array();
        for (Tangency t : e.tangencies) o["tangencies"].push_back(to_string(t));
        doc["edges"].push_back(o);
    }
    doc["regions"] = ordered::array();
    for (const auto& r : g.regions()) {
        ordered o;
        o["id"] = r.id;
        o["boundary"] = r.boundary;
        o["label"] = r.label.to_string();
        doc["regions"].push_back(o);
    }
    return doc.dump(2) + "\n";
}

}  // namespace elliptic
