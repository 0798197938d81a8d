// Command-line front end: batch analysis of separation lattices plus DOT
// figure output. Results go to stdout as JSON; errors go to stderr as
// {"error": ...} with exit code 2 (input), 3 (guard refusal) or
// 4 (verification mismatch).
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seplat/appendix.hpp"
#include "seplat/errors.hpp"
#include "seplat/json_io.hpp"
#include "seplat/lattice.hpp"
#include "seplat/menger.hpp"
#include "seplat/oracle.hpp"
#include "seplat/representation.hpp"
#include "seplat/separations.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitMismatch = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw seplat::InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw seplat::InputError("cannot write file: " + path);
    out << text;
}

seplat::Digraph load_graph(const std::string& path) {
    return seplat::digraph_from_json(slurp(path));
}

nlohmann::json set_json(const seplat::Digraph& d, const seplat::VertexSet& s) {
    nlohmann::json out = nlohmann::json::array();
    for (seplat::Vertex v : s) out.push_back(d.label(v));
    return out;
}

nlohmann::json path_json(const seplat::Digraph& d, const seplat::Path& p) {
    nlohmann::json out = nlohmann::json::array();
    for (seplat::Vertex v : p) out.push_back(d.label(v));
    return out;
}

void emit(const nlohmann::json& value) { std::cout << value.dump(2) << "\n"; }

// Minimality certificate: the separation verdict plus one private path per
// member (an A->B path meeting the set only there).
nlohmann::json bound_certificate(const seplat::Digraph& d, const seplat::VertexSet& s) {
    nlohmann::json out;
    out["set"] = set_json(d, s);
    out["is_separation"] = seplat::is_separation(d, s);
    out["is_minimal_separation"] = seplat::is_minimal_separation(d, s);
    nlohmann::json private_paths = nlohmann::json::array();
    for (seplat::Vertex v : s) {
        seplat::VertexSet rest = s;
        rest.erase(std::find(rest.begin(), rest.end(), v));
        if (auto path = seplat::ab_path_avoiding(d, rest))
            private_paths.push_back(path_json(d, *path));
        else
            private_paths.push_back(nullptr);
    }
    out["private_paths"] = std::move(private_paths);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"separation lattices of finite digraphs"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string lattice_path;
    std::string hasse_path;
    std::string dot_path;
    bool em_only = false;
    int copies = 0;
    int half_width = 0;
    std::size_t guard = seplat::kSeparationEnumerationGuard;
    std::vector<std::string> witness_args;

    CLI::App* cmd_paths = app.add_subcommand("paths", "maximum disjoint A->B path system");
    cmd_paths->add_option("graph", graph_path, "graph JSON file")->required();

    CLI::App* cmd_seps = app.add_subcommand("separations", "enumerate the separation lattice");
    cmd_seps->add_option("graph", graph_path)->required();
    cmd_seps->add_flag("--em", em_only, "restrict to the Erdős–Menger family");
    cmd_seps->add_option("--hasse", hasse_path, "write a DOT Hasse diagram here");
    cmd_seps->add_option("--guard", guard, "enumeration guard (relevant vertices)");

    std::string s_arg, t_arg;
    CLI::App* cmd_order = app.add_subcommand("order", "compare two minimal separations under ⊴");
    cmd_order->add_option("graph", graph_path)->required();
    cmd_order->add_option("S", s_arg, "JSON array of vertex labels")->required();
    cmd_order->add_option("T", t_arg, "JSON array of vertex labels")->required();

    // the set arguments are JSON arrays; they are taken verbatim from the
    // remaining positionals because bracketed values have list meaning to the
    // option parser
    CLI::App* cmd_inf = app.add_subcommand("inf", "infimum of minimal separations");
    cmd_inf->add_option("graph", graph_path)->required();
    cmd_inf->allow_extras();

    CLI::App* cmd_sup = app.add_subcommand("sup", "supremum of minimal separations");
    cmd_sup->add_option("graph", graph_path)->required();
    cmd_sup->allow_extras();

    CLI::App* cmd_blowup = app.add_subcommand("blowup", "copy blow-up of a digraph");
    cmd_blowup->add_option("graph", graph_path)->required();
    cmd_blowup->add_option("copies", copies, "number of copies")->required();
    cmd_blowup
        ->add_option("--witness", witness_args,
                     "separation (JSON array) and separator copy count: emit the orthogonality "
                     "witness in the asymmetric blow-up")
        ->expected(2)
        ->allow_extra_args(false);

    CLI::App* cmd_repr = app.add_subcommand("represent",
                                            "realize a distributive lattice as an Erdős–Menger "
                                            "separation lattice");
    cmd_repr->add_option("lattice", lattice_path, "lattice JSON file")->required();

    CLI::App* cmd_fig1 = app.add_subcommand("fig1", "windowed two-column counterexample report");
    cmd_fig1->add_option("n", half_width, "window half-width (>= 3)")->required();
    cmd_fig1->add_option("--dot", dot_path, "write the window graph as DOT here");

    CLI::App* cmd_verify = app.add_subcommand("verify", "oracle-vs-main consistency report");
    cmd_verify->add_option("graph", graph_path)->required();
    cmd_verify->add_option("--guard", guard, "oracle guard (vertices)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_paths->parsed()) {
        const seplat::Digraph d = load_graph(graph_path);
        std::cout << seplat::path_system_to_json(d, seplat::max_disjoint_paths(d));
        return 0;
    }

    if (cmd_seps->parsed()) {
        const seplat::Digraph d = load_graph(graph_path);
        const seplat::SeparationLattice lattice =
            em_only ? seplat::em_family(d, guard) : seplat::enumerate_minimal_separations(d, guard);
        if (!hasse_path.empty()) spill(hasse_path, seplat::hasse_dot(lattice, d));
        std::cout << seplat::separation_lattice_to_json(lattice, d);
        return 0;
    }

    if (cmd_order->parsed()) {
        const seplat::Digraph d = load_graph(graph_path);
        const seplat::VertexSet s = seplat::vertex_set_from_json(d, s_arg);
        const seplat::VertexSet t = seplat::vertex_set_from_json(d, t_arg);
        const bool by_definition = seplat::leq(d, s, t);
        const bool by_dual = seplat::leq_dual(d, s, t);
        nlohmann::json out;
        out["S"] = set_json(d, s);
        out["T"] = set_json(d, t);
        out["leq"] = by_definition;
        out["leq_dual"] = by_dual;
        out["agree"] = by_definition == by_dual;
        emit(out);
        return by_definition == by_dual ? 0 : kExitMismatch;
    }

    if (cmd_inf->parsed() || cmd_sup->parsed()) {
        const seplat::Digraph d = load_graph(graph_path);
        const std::vector<std::string> raw_sets =
            (cmd_inf->parsed() ? cmd_inf : cmd_sup)->remaining();
        std::vector<seplat::VertexSet> family;
        family.reserve(raw_sets.size());
        for (const std::string& arg : raw_sets)
            family.push_back(seplat::vertex_set_from_json(d, arg));
        const seplat::VertexSet bound =
            cmd_inf->parsed() ? seplat::infimum(d, family) : seplat::supremum(d, family);
        nlohmann::json out;
        out[cmd_inf->parsed() ? "inf" : "sup"] = bound_certificate(d, bound);
        emit(out);
        return 0;
    }

    if (cmd_blowup->parsed()) {
        const seplat::Digraph d = load_graph(graph_path);
        if (witness_args.empty()) {
            const seplat::BlowUp blowup(d, copies);
            nlohmann::json out = nlohmann::json::parse(seplat::digraph_to_json(blowup.product()));
            if (copies == 1) std::cerr << "{\"note\": \"copies = 1 reproduces the base graph\"}\n";
            emit(out);
            return 0;
        }
        const seplat::VertexSet separator = seplat::vertex_set_from_json(d, witness_args[0]);
        const int separator_copies = std::stoi(witness_args[1]);
        const seplat::AsymmetricBlowUp blowup(d, separator, separator_copies);
        const seplat::OrthogonalityWitness witness = blowup.witness();
        nlohmann::json out = nlohmann::json::parse(seplat::witness_to_json(blowup.product(), witness));
        out["graph"] = nlohmann::json::parse(seplat::digraph_to_json(blowup.product()));
        emit(out);
        return 0;
    }

    if (cmd_repr->parsed()) {
        const seplat::FiniteLattice l = seplat::finite_lattice_from_json(slurp(lattice_path));
        const seplat::DistributiveRepresentation rep = seplat::represent_distributive(l);
        std::cout << seplat::representation_to_json(rep, l);
        return 0;
    }

    if (cmd_fig1->parsed()) {
        const seplat::Figure1Report report = seplat::figure1_check(half_width);
        if (!dot_path.empty())
            spill(dot_path, seplat::digraph_to_dot(seplat::Figure1Window(half_width).graph()));
        std::cout << seplat::figure1_to_json(report);
        return report.all_pass ? 0 : kExitMismatch;
    }

    if (cmd_verify->parsed()) {
        const seplat::Digraph d = load_graph(graph_path);
        const seplat::oracle::VerifyReport report = seplat::oracle::verify(d, guard);
        std::cout << seplat::verify_to_json(report);
        return report.ok() ? 0 : kExitMismatch;
    }

    return kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const seplat::GuardError& error) {
        std::cerr << nlohmann::json{{"error", error.what()}}.dump() << "\n";
        return kExitGuard;
    } catch (const seplat::VerificationError& error) {
        std::cerr << nlohmann::json{{"error", error.what()}}.dump() << "\n";
        return kExitMismatch;
    } catch (const std::exception& error) {
        std::cerr << nlohmann::json{{"error", error.what()}}.dump() << "\n";
        return kExitInput;
    }
}
