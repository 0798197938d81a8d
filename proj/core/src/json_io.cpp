#include "seplat/json_io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "seplat/errors.hpp"

namespace seplat {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) throw InputError("malformed JSON");
    return parsed;
}

void reject_unknown_keys(const json& object, const std::set<std::string>& known) {
    if (!object.is_object()) throw InputError("expected a JSON object");
    for (const auto& [key, value] : object.items())
        if (!known.count(key)) throw InputError("unknown key: " + key);
    for (const std::string& key : known)
        if (!object.contains(key)) throw InputError("missing key: " + key);
}

std::vector<std::string> string_array(const json& value, const std::string& where) {
    if (!value.is_array()) throw InputError(where + " must be an array");
    std::vector<std::string> out;
    for (const json& item : value) {
        if (!item.is_string()) throw InputError(where + " entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

json labels_json(const Digraph& d, const VertexSet& set) {
    json out = json::array();
    for (Vertex v : set) out.push_back(d.label(v));
    return out;
}

json path_json(const Digraph& d, const Path& p) {
    json out = json::array();
    for (Vertex v : p) out.push_back(d.label(v));
    return out;
}

json system_json(const Digraph& d, const PathSystem& ps) {
    json out = json::array();
    for (const Path& p : ps.paths) out.push_back(path_json(d, p));
    return out;
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

void quote_dot(std::ostream& os, const std::string& text) {
    os << '"';
    for (char c : text) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
    }
    os << '"';
}

} // namespace

Digraph digraph_from_json(const std::string& text) {
    const json parsed = parse(text);
    reject_unknown_keys(parsed, {"vertices", "edges", "A", "B"});

    const auto vertices = string_array(parsed["vertices"], "vertices");
    {
        std::set<std::string> uniq(vertices.begin(), vertices.end());
        if (uniq.size() != vertices.size()) throw InputError("duplicate vertex");
    }
    if (!parsed["edges"].is_array()) throw InputError("edges must be an array");
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> seen;
    for (const json& item : parsed["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
            throw InputError("each edge must be a [from, to] pair of strings");
        std::pair<std::string, std::string> edge{item[0].get<std::string>(),
                                                 item[1].get<std::string>()};
        if (!seen.insert(edge).second)
            throw InputError("duplicate edge: " + edge.first + " -> " + edge.second);
        edges.push_back(std::move(edge));
    }
    const auto sources = string_array(parsed["A"], "A");
    const auto sinks = string_array(parsed["B"], "B");
    {
        std::set<std::string> uniq(sources.begin(), sources.end());
        if (uniq.size() != sources.size()) throw InputError("duplicate vertex in A");
    }
    {
        std::set<std::string> uniq(sinks.begin(), sinks.end());
        if (uniq.size() != sinks.size()) throw InputError("duplicate vertex in B");
    }
    return Digraph(vertices, edges, sources, sinks);
}

std::string digraph_to_json(const Digraph& d) {
    json out;
    json vertices = json::array();
    for (Vertex v = 0; v < d.order(); ++v) vertices.push_back(d.label(v));
    out["vertices"] = std::move(vertices);
    json edges = json::array();
    for (const auto& [from, to] : d.edges())
        edges.push_back(json::array({d.label(from), d.label(to)}));
    out["edges"] = std::move(edges);
    out["A"] = labels_json(d, d.source_set());
    out["B"] = labels_json(d, d.sink_set());
    return dump(out);
}

FiniteLattice finite_lattice_from_json(const std::string& text) {
    const json parsed = parse(text);
    reject_unknown_keys(parsed, {"elements", "leq"});
    const auto labels = string_array(parsed["elements"], "elements");
    if (!parsed["leq"].is_array()) throw InputError("leq must be an array of boolean rows");
    std::vector<std::vector<bool>> matrix;
    for (const json& row : parsed["leq"]) {
        if (!row.is_array()) throw InputError("leq rows must be arrays");
        std::vector<bool> bits;
        for (const json& cell : row) {
            if (!cell.is_boolean()) throw InputError("leq entries must be booleans");
            bits.push_back(cell.get<bool>());
        }
        matrix.push_back(std::move(bits));
    }
    return FiniteLattice::checked(labels, matrix);
}

std::string finite_lattice_to_json(const FiniteLattice& l) {
    json out;
    json elements = json::array();
    for (int i = 0; i < l.size(); ++i) elements.push_back(l.label(i));
    out["elements"] = std::move(elements);
    json rows = json::array();
    for (int i = 0; i < l.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < l.size(); ++j) row.push_back(l.less_eq(i, j));
        rows.push_back(std::move(row));
    }
    out["leq"] = std::move(rows);
    return dump(out);
}

std::string separation_lattice_to_json(const SeparationLattice& lattice, const Digraph& d) {
    json out;
    json elements = json::array();
    for (const VertexSet& s : lattice.elements) elements.push_back(labels_json(d, s));
    out["elements"] = std::move(elements);
    json rows = json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < lattice.size(); ++j)
            row.push_back(static_cast<bool>(lattice.order[i][j]));
        rows.push_back(std::move(row));
    }
    out["leq"] = std::move(rows);
    return dump(out);
}

std::string witness_to_json(const Digraph& d, const OrthogonalityWitness& w) {
    json out;
    out["separation"] = labels_json(d, w.separation);
    out["paths"] = system_json(d, w.system);
    return dump(out);
}

std::string path_system_to_json(const Digraph& d, const PathSystem& ps) {
    json out;
    out["paths"] = system_json(d, ps);
    return dump(out);
}

std::string linkage_to_json(const LinkageWitness& w) {
    json out;
    out["covered"] = labels_json(w.carrier, w.covered);
    out["paths"] = system_json(w.carrier, w.system);
    return dump(out);
}

std::string escalante_to_json(const EscalanteReport& report) {
    json out;
    out["orthogonality_matches"] = report.orthogonality_matches;
    out["closed_under_meet_join"] = report.closed_under_meet_join;
    out["distributive"] = report.distributive;
    out["findings"] = report.findings;
    out["all_pass"] = report.all_pass();
    return dump(out);
}

std::string figure1_to_json(const Figure1Report& report) {
    json out;
    out["half_width"] = report.half_width;
    out["interior_range"] = report.interior_range;
    json claims = json::array();
    for (const Figure1Claim& claim : report.claims) {
        json entry;
        entry["name"] = claim.name;
        entry["pass"] = claim.pass;
        entry["detail"] = claim.detail;
        claims.push_back(std::move(entry));
    }
    out["claims"] = std::move(claims);
    const Figure1Window window(report.half_width);
    out["window_inf"] = labels_json(window.graph(), report.window_inf);
    out["all_pass"] = report.all_pass;
    return dump(out);
}

std::string verify_to_json(const oracle::VerifyReport& report) {
    json out;
    json checks = json::array();
    for (const auto& entry : report.entries) {
        json item;
        item["check"] = entry.check;
        item["ok"] = entry.ok;
        item["detail"] = entry.detail;
        checks.push_back(std::move(item));
    }
    out["checks"] = std::move(checks);
    out["mismatches"] = report.mismatches;
    out["ok"] = report.ok();
    return dump(out);
}

std::string representation_to_json(const DistributiveRepresentation& rep, const FiniteLattice& l) {
    json out;
    out["graph"] = parse(digraph_to_json(rep.graph));
    json mapping = json::array();
    for (std::size_t i = 0; i < rep.em.size(); ++i) {
        json entry;
        entry["separation"] = labels_json(rep.graph, rep.em.elements[i]);
        entry["lattice_element"] = l.label(rep.iso[i]);
        mapping.push_back(std::move(entry));
    }
    out["isomorphism"] = std::move(mapping);
    return dump(out);
}

namespace {

std::string hasse_dot_impl(const std::vector<std::string>& labels,
                           const std::vector<std::vector<bool>>& order) {
    const std::size_t count = labels.size();
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < count; ++i) {
        os << "  n" << i << " [label=";
        quote_dot(os, labels[i]);
        os << "];\n";
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j || !order[i][j]) continue;
            bool covering = true;
            for (std::size_t k = 0; k < count && covering; ++k)
                if (k != i && k != j && order[i][k] && order[k][j]) covering = false;
            if (covering) os << "  n" << i << " -> n" << j << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace

std::string hasse_dot(const FiniteLattice& l) {
    std::vector<std::string> labels;
    labels.reserve(l.size());
    for (int i = 0; i < l.size(); ++i) labels.push_back(l.label(i));
    return hasse_dot_impl(labels, l.matrix());
}

std::string hasse_dot(const SeparationLattice& lattice, const Digraph& d) {
    std::vector<std::string> labels;
    labels.reserve(lattice.size());
    for (const VertexSet& s : lattice.elements) labels.push_back(d.format_set(s));
    return hasse_dot_impl(labels, lattice.order);
}

std::string digraph_to_dot(const Digraph& d) {
    std::ostringstream os;
    os << "digraph g {\n  rankdir=LR;\n";
    for (Vertex v = 0; v < d.order(); ++v) {
        os << "  ";
        quote_dot(os, d.label(v));
        if (d.is_source(v) && d.is_sink(v))
            os << " [shape=Mdiamond]";
        else if (d.is_source(v))
            os << " [shape=box]";
        else if (d.is_sink(v))
            os << " [shape=doublecircle]";
        os << ";\n";
    }
    for (const auto& [from, to] : d.edges()) {
        os << "  ";
        quote_dot(os, d.label(from));
        os << " -> ";
        quote_dot(os, d.label(to));
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

VertexSet vertex_set_from_json(const Digraph& d, const std::string& text) {
    const json parsed = parse(text);
    if (!parsed.is_array()) throw InputError("expected a JSON array of vertex labels");
    std::vector<std::string> labels;
    for (const json& item : parsed) {
        if (!item.is_string()) throw InputError("vertex labels must be strings");
        labels.push_back(item.get<std::string>());
    }
    return d.vertex_set(labels);
}

} // namespace seplat
