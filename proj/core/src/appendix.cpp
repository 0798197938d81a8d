#include "seplat/appendix.hpp"

#include <algorithm>

#include "seplat/errors.hpp"
#include "seplat/separations.hpp"

namespace seplat {

Figure1Window::Figure1Window(int half_width) : half_width_(half_width) {
    if (half_width_ < 3)
        throw InputError("figure1 window needs half-width >= 3 for the interior claims");
    const int n = half_width_;

    std::vector<std::string> labels;
    auto add = [&](const std::string& name) {
        labels.push_back(name);
        return static_cast<Vertex>(labels.size() - 1);
    };
    a_.assign(2 * n + 1, -1);
    b_.assign(2 * n + 1, -1);
    for (int i = -n; i <= n; ++i) a_[i + n] = add("a" + std::to_string(i));
    u_ = add("u");
    v_ = add("v");
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue; // the figure has no b_0
        b_[i + n] = add("b" + std::to_string(i));
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.emplace_back(a(0), u_);
    edges.emplace_back(a(0), v_);
    edges.emplace_back(u_, b(1));
    edges.emplace_back(v_, b(-1));
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(a(i), b(i));
        if (i + 1 <= n) edges.emplace_back(a(i), b(i + 1));
        edges.emplace_back(a(-i), b(-i));
        if (i + 1 <= n) edges.emplace_back(a(-i), b(-i - 1));
    }

    VertexSet sources(a_.begin(), a_.end());
    VertexSet sinks;
    for (int i = -n; i <= n; ++i)
        if (i != 0) sinks.push_back(b(i));

    graph_ = Digraph::from_indexed(std::move(labels), edges, std::move(sources), std::move(sinks));
}

Vertex Figure1Window::a(int i) const {
    if (i < -half_width_ || i > half_width_) throw InputError("a index outside the window");
    return a_[i + half_width_];
}

Vertex Figure1Window::b(int i) const {
    if (i == 0 || i < -half_width_ || i > half_width_) throw InputError("b index outside the window");
    return b_[i + half_width_];
}

VertexSet Figure1Window::s() const {
    std::vector<Vertex> out{u_};
    for (int i = 1; i <= half_width_; ++i) {
        out.push_back(a(i));
        out.push_back(b(-i));
    }
    return normalized(std::move(out));
}

VertexSet Figure1Window::t() const {
    std::vector<Vertex> out{v_};
    for (int i = 1; i <= half_width_; ++i) {
        out.push_back(a(-i));
        out.push_back(b(i));
    }
    return normalized(std::move(out));
}

VertexSet Figure1Window::inf_st() const {
    std::vector<Vertex> out{u_, v_};
    for (int i = 1; i <= half_width_; ++i) {
        out.push_back(a(i));
        out.push_back(a(-i));
    }
    return normalized(std::move(out));
}

PathSystem Figure1Window::s_witness() const {
    std::vector<Path> paths{{a(0), u_, b(1)}};
    for (int i = 1; i <= half_width_; ++i) {
        paths.push_back({a(-i), b(-i)});
        if (i + 1 <= half_width_) paths.push_back({a(i), b(i + 1)});
    }
    return PathSystem::checked(graph_, std::move(paths));
}

PathSystem Figure1Window::t_witness() const {
    std::vector<Path> paths{{a(0), v_, b(-1)}};
    for (int i = 1; i <= half_width_; ++i) {
        paths.push_back({a(i), b(i)});
        if (i + 1 <= half_width_) paths.push_back({a(-i), b(-i - 1)});
    }
    return PathSystem::checked(graph_, std::move(paths));
}

int Figure1Window::index_of(Vertex vertex) const {
    if (vertex == u_ || vertex == v_) return 0;
    const std::string& name = graph_.label(vertex);
    return std::abs(std::stoi(name.substr(1)));
}

namespace {

bool interior_minimality(const Figure1Window& window, const VertexSet& separation,
                         std::string& detail) {
    const int interior = window.half_width() - 1;
    for (Vertex s : separation) {
        if (window.index_of(s) > interior) continue;
        VertexSet rest = separation;
        rest.erase(std::find(rest.begin(), rest.end(), s));
        const auto path = ab_path_avoiding(window.graph(), rest);
        if (!path || std::find(path->begin(), path->end(), s) == path->end()) {
            detail = "no private path at " + window.graph().label(s);
            return false;
        }
    }
    return true;
}

bool interior_orthogonality(const Figure1Window& window, const VertexSet& separation,
                            const PathSystem& system, std::string& detail) {
    const int interior = window.half_width() - 1;
    for (const Path& p : system.paths) {
        int hits = 0;
        for (Vertex x : p)
            if (contains(separation, x)) ++hits;
        if (hits != 1) {
            detail = "a witness path meets the separation " + std::to_string(hits) + " times";
            return false;
        }
    }
    for (Vertex s : separation) {
        if (window.index_of(s) > interior) continue;
        int on = 0;
        for (const Path& p : system.paths)
            if (std::find(p.begin(), p.end(), s) != p.end()) ++on;
        if (on != 1) {
            detail = window.graph().label(s) + " lies on " + std::to_string(on) + " witness paths";
            return false;
        }
    }
    return true;
}

} // namespace

Figure1Report figure1_check(int half_width) {
    const Figure1Window window(half_width);
    const Digraph& d = window.graph();
    Figure1Report report;
    report.half_width = half_width;
    report.interior_range = half_width - 1;

    const VertexSet s = window.s();
    const VertexSet t = window.t();

    {
        Figure1Claim claim{"separations-minimal", true, ""};
        if (!is_separation(d, s)) {
            claim.pass = false;
            claim.detail = "S misses a window path";
        }
        if (claim.pass && !is_separation(d, t)) {
            claim.pass = false;
            claim.detail = "T misses a window path";
        }
        std::string why;
        if (claim.pass && !interior_minimality(window, s, why)) {
            claim.pass = false;
            claim.detail = "S: " + why;
        }
        if (claim.pass && !interior_minimality(window, t, why)) {
            claim.pass = false;
            claim.detail = "T: " + why;
        }
        if (claim.pass)
            claim.detail = "both separate; private paths exist for |i| <= " +
                           std::to_string(report.interior_range);
        report.claims.push_back(std::move(claim));
    }

    {
        Figure1Claim claim{"witness-systems-orthogonal", true, ""};
        std::string why;
        // PathSystem::checked has already certified disjointness and the
        // A->B path property for both systems.
        const PathSystem ws = window.s_witness();
        const PathSystem wt = window.t_witness();
        if (!interior_orthogonality(window, s, ws, why)) {
            claim.pass = false;
            claim.detail = "S system: " + why;
        }
        if (claim.pass && !interior_orthogonality(window, t, wt, why)) {
            claim.pass = false;
            claim.detail = "T system: " + why;
        }
        if (claim.pass)
            claim.detail = std::to_string(ws.size()) + " + " + std::to_string(wt.size()) +
                           " disjoint paths, one separation vertex each";
        report.claims.push_back(std::move(claim));
    }

    {
        Figure1Claim claim{"infimum-formula", false, ""};
        report.window_inf = infimum(d, {s, t});
        if (report.window_inf == window.inf_st()) {
            claim.pass = true;
            claim.detail = "inf{S,T} = " + d.format_set(report.window_inf);
        } else {
            claim.detail = "formula yields " + d.format_set(report.window_inf) + ", expected " +
                           d.format_set(window.inf_st());
        }
        report.claims.push_back(std::move(claim));
    }

    {
        Figure1Claim claim{"infimum-not-erdos-menger", true, ""};
        const auto paths = enumerate_ab_paths(d, static_cast<std::size_t>(d.order()));
        for (const Path& p : paths) {
            const bool through_u = std::find(p.begin(), p.end(), window.u()) != p.end();
            const bool through_v = std::find(p.begin(), p.end(), window.v()) != p.end();
            if ((through_u || through_v) && p.front() != window.a(0)) {
                claim.pass = false;
                claim.detail = "a path through u or v starts away from a0";
                break;
            }
        }
        if (claim.pass)
            claim.detail = "every path through u or v starts at a0, so no disjoint system is "
                           "orthogonal to a set containing both";
        report.claims.push_back(std::move(claim));
    }

    report.all_pass = true;
    for (const Figure1Claim& claim : report.claims) report.all_pass = report.all_pass && claim.pass;
    return report;
}

} // namespace seplat
