// End-to-end checks of the installed command surface: spawns the real binary
// and inspects exit codes and JSON output.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

#define EXPECT(cond, what)                                                       \
    do {                                                                         \
        if (!(cond)) {                                                           \
            std::cerr << "[FAIL] " << __LINE__ << ": " << what << "\n";          \
            ++failures;                                                          \
        }                                                                        \
    } while (0)

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string err_path = "cli_test_stderr.tmp";
    const std::string command =
        std::string(SEPLAT_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    const int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = raw < 0 ? raw : WEXITSTATUS(raw);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

const char* kDiamond =
    R"({"vertices":["a","x","y","b"],"edges":[["a","x"],["a","y"],["x","b"],["y","b"]],"A":["a"],"B":["b"]})";
const char* kPar2 =
    R"({"vertices":["a1","a2","x","y","b1","b2"],)"
    R"("edges":[["a1","x"],["x","b1"],["a2","y"],["y","b2"]],"A":["a1","a2"],"B":["b1","b2"]})";

} // namespace

int main() {
    write_file("g_diamond.json", kDiamond);
    write_file("g_par2.json", kPar2);

    {
        const RunResult r = run("paths g_diamond.json");
        EXPECT(r.exit_code == 0, "paths exit");
        const auto parsed = nlohmann::json::parse(r.out);
        EXPECT(parsed["paths"].size() == 1, "one disjoint path in the diamond");
    }
    {
        const RunResult r = run("separations g_diamond.json");
        EXPECT(r.exit_code == 0, "separations exit");
        EXPECT(nlohmann::json::parse(r.out)["elements"].size() == 3, "three minimal separations");
    }
    {
        const RunResult r = run("separations g_diamond.json --em --hasse hasse.tmp.dot");
        EXPECT(r.exit_code == 0, "separations --em exit");
        EXPECT(nlohmann::json::parse(r.out)["elements"].size() == 2, "two EM separations");
        EXPECT(slurp("hasse.tmp.dot").find("digraph hasse") == 0, "hasse dot written");
        std::remove("hasse.tmp.dot");
    }
    {
        const RunResult a = run("separations g_par2.json");
        const RunResult b = run("separations g_par2.json");
        EXPECT(a.out == b.out, "byte-identical output across runs");
    }
    {
        const RunResult r = run(R"(order g_diamond.json '["a"]' '["x","y"]')");
        EXPECT(r.exit_code == 0, "order exit");
        const auto parsed = nlohmann::json::parse(r.out);
        EXPECT(parsed["leq"] == true, "order verdict");
        EXPECT(parsed["leq_dual"] == true, "dual verdict");
        EXPECT(parsed["agree"] == true, "cross-check agreement");
    }
    {
        const RunResult r = run(R"(inf g_par2.json '["x","b2"]' '["b1","y"]')");
        EXPECT(r.exit_code == 0, "inf exit");
        const auto parsed = nlohmann::json::parse(r.out);
        EXPECT(parsed["inf"]["set"] == nlohmann::json::parse(R"(["x","y"])"), "inf value");
        EXPECT(parsed["inf"]["is_minimal_separation"] == true, "inf certificate");
    }
    {
        const RunResult r = run(R"(sup g_par2.json '["x","b2"]' '["b1","y"]')");
        const auto parsed = nlohmann::json::parse(r.out);
        EXPECT(parsed["sup"]["set"] == nlohmann::json::parse(R"(["b1","b2"])"), "sup value");
    }
    {
        const RunResult r = run("blowup g_diamond.json 2");
        EXPECT(r.exit_code == 0, "blowup exit");
        const auto parsed = nlohmann::json::parse(r.out);
        EXPECT(parsed["vertices"].size() == 8, "blowup vertex count");
        EXPECT(parsed["edges"].size() == 16, "blowup edge count");
    }
    {
        const RunResult r = run(R"(blowup g_diamond.json 2 --witness '["x","y"]' 1)");
        EXPECT(r.exit_code == 0, "blowup witness exit");
        const auto parsed = nlohmann::json::parse(r.out);
        EXPECT(parsed["separation"].size() == 2, "witness separation size");
        EXPECT(parsed["paths"].size() == 2, "witness path count");
    }
    {
        write_file("l_chain3.json",
                   R"({"elements":["0","m","1"],)"
                   R"("leq":[[true,true,true],[false,true,true],[false,false,true]]})");
        const RunResult r = run("represent l_chain3.json");
        EXPECT(r.exit_code == 0, "represent exit");
        const auto parsed = nlohmann::json::parse(r.out);
        EXPECT(parsed["isomorphism"].size() == 3, "isomorphism certificate size");
        std::remove("l_chain3.json");
    }
    {
        write_file("l_n5.json",
                   R"({"elements":["0","a","b","c","1"],"leq":[)"
                   R"([true,true,true,true,true],)"
                   R"([false,true,false,false,true],)"
                   R"([false,false,true,true,true],)"
                   R"([false,false,false,true,true],)"
                   R"([false,false,false,false,true]]})");
        const RunResult r = run("represent l_n5.json");
        EXPECT(r.exit_code == 2, "non-distributive lattice refused");
        EXPECT(r.err.find("violates the law") != std::string::npos, "violating triple reported");
        std::remove("l_n5.json");
    }
    {
        const RunResult r = run("fig1 5");
        EXPECT(r.exit_code == 0, "fig1 exit");
        const auto parsed = nlohmann::json::parse(r.out);
        EXPECT(parsed["all_pass"] == true, "fig1 all claims pass");
        EXPECT(parsed["claims"].size() == 4, "fig1 claim count");
    }
    {
        const RunResult r = run("fig1 5 --dot fig1.tmp.dot");
        EXPECT(r.exit_code == 0, "fig1 --dot exit");
        EXPECT(slurp("fig1.tmp.dot").find("digraph g") == 0, "window dot written");
        std::remove("fig1.tmp.dot");
    }
    {
        const RunResult r = run("fig1 2");
        EXPECT(r.exit_code == 2, "fig1 window too small");
    }
    {
        const RunResult r = run("verify g_par2.json");
        EXPECT(r.exit_code == 0, "verify exit");
        EXPECT(nlohmann::json::parse(r.out)["mismatches"] == 0, "verify clean");
    }
    {
        write_file("bad.json", R"({"vertices":["a"],"edges":[],"A":["a"]})");
        const RunResult r = run("separations bad.json");
        EXPECT(r.exit_code == 2, "schema violation exits 2");
        EXPECT(nlohmann::json::parse(r.err).contains("error"), "machine-readable error");
        std::remove("bad.json");
    }
    {
        write_file("wide.json", [] {
            nlohmann::json g;
            for (int i = 0; i < 9; ++i) {
                g["vertices"].push_back("s" + std::to_string(i));
                g["vertices"].push_back("t" + std::to_string(i));
                g["edges"].push_back({"s" + std::to_string(i), "t" + std::to_string(i)});
                g["A"].push_back("s" + std::to_string(i));
                g["B"].push_back("t" + std::to_string(i));
            }
            return g.dump();
        }());
        const RunResult r = run("separations wide.json");
        EXPECT(r.exit_code == 3, "guard refusal exits 3");
        std::remove("wide.json");
    }
    {
        const RunResult r = run(R"(order g_diamond.json '["x"]' '["a"]')");
        EXPECT(r.exit_code == 2, "precondition failure exits 2");
    }

    std::remove("g_diamond.json");
    std::remove("g_par2.json");
    if (failures == 0) std::cout << "cli: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
