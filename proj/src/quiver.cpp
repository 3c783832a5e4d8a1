#include "comax/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace comax {

namespace {

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-'))
            return false;
    return true;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

} // namespace

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return int(i);
    return -1;
}

bool Quiver::is_sink(int v) const {
    for (const Arrow& a : arrows)
        if (a.src == v) return false;
    return true;
}

bool Quiver::is_acyclic() const {
    // Kahn peeling on out-degrees.
    const int n = int(vertices.size());
    std::vector<int> outdeg(n, 0);
    for (const Arrow& a : arrows) ++outdeg[a.src];
    std::vector<bool> removed(n, false);
    int left = n;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (removed[v] || outdeg[v] != 0) continue;
            removed[v] = true;
            --left;
            progress = true;
            for (const Arrow& a : arrows)
                if (a.tgt == v && !removed[a.src]) --outdeg[a.src];
        }
    }
    return left == 0;
}

std::string path_label(const Quiver& q, const Path& p) {
    if (p.trivial()) return q.vertices[p.start];
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[p.arrows[i]].label;
    }
    return s;
}

Quiver parse_quiver(const std::string& text) {
    Quiver q;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool seen_vertices = false, in_arrows = false;
    std::set<std::string> vnames, anames;

    auto parse_arrow = [&](const std::vector<std::string>& ts, int line) {
        // <label>: <src> -> <tgt>
        require(ts.size() == 4 && ts[2] == "->" && !ts[0].empty() && ts[0].back() == ':',
                ErrorKind::ParseError,
                "line " + std::to_string(line) + ": expected '<label>: <src> -> <tgt>'");
        std::string label = ts[0].substr(0, ts[0].size() - 1);
        require(valid_label(label), ErrorKind::ParseError,
                "line " + std::to_string(line) + ": bad arrow label '" + label + "'");
        require(!anames.count(label) && !vnames.count(label), ErrorKind::DuplicateLabel,
                "line " + std::to_string(line) + ": duplicate label '" + label + "'");
        int s = q.vertex_index(ts[1]), t = q.vertex_index(ts[3]);
        require(s >= 0, ErrorKind::DanglingEndpoint,
                "line " + std::to_string(line) + ": unknown source vertex '" + ts[1] + "'");
        require(t >= 0, ErrorKind::DanglingEndpoint,
                "line " + std::to_string(line) + ": unknown target vertex '" + ts[3] + "'");
        anames.insert(label);
        q.arrows.push_back({label, s, t});
    };

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto ts = tokens(line);
        if (ts.empty()) continue;
        if (!seen_vertices) {
            require(ts[0] == "vertices:", ErrorKind::ParseError,
                    "line " + std::to_string(lineno) + ": expected 'vertices:'");
            for (size_t i = 1; i < ts.size(); ++i) {
                require(valid_label(ts[i]), ErrorKind::ParseError,
                        "line " + std::to_string(lineno) + ": bad vertex label '" + ts[i] + "'");
                require(vnames.insert(ts[i]).second, ErrorKind::DuplicateLabel,
                        "line " + std::to_string(lineno) + ": duplicate vertex '" + ts[i] + "'");
                q.vertices.push_back(ts[i]);
            }
            seen_vertices = true;
        } else if (!in_arrows) {
            require(ts[0] == "arrows:", ErrorKind::ParseError,
                    "line " + std::to_string(lineno) + ": expected 'arrows:'");
            in_arrows = true;
            if (ts.size() > 1) parse_arrow(std::vector<std::string>(ts.begin() + 1, ts.end()), lineno);
        } else {
            parse_arrow(ts, lineno);
        }
    }
    require(seen_vertices, ErrorKind::ParseError, "missing 'vertices:' header");
    require(!q.vertices.empty(), ErrorKind::ParseError, "quiver needs at least one vertex");
    return q;
}

std::string serialize_quiver(const Quiver& q) {
    std::string out = "vertices:";
    for (const auto& v : q.vertices) out += " " + v;
    out += "\narrows:\n";
    for (const Arrow& a : q.arrows)
        out += a.label + ": " + q.vertices[a.src] + " -> " + q.vertices[a.tgt] + "\n";
    return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::optional<int> max_len) {
    const bool acyclic = q.is_acyclic();
    require(acyclic || max_len.has_value(), ErrorKind::CyclicWithoutBound,
            "quiver has a directed cycle; a length bound is required");

    std::vector<Path> out;
    std::vector<Path> frontier;
    for (int v = 0; v < int(q.vertices.size()); ++v) frontier.push_back(Path{v, v, {}});
    int len = 0;
    while (!frontier.empty()) {
        // frontier is lex-sorted within its length by construction
        out.insert(out.end(), frontier.begin(), frontier.end());
        ++len;
        if (max_len && len > *max_len) break;
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (int ai = 0; ai < int(q.arrows.size()); ++ai) {
                if (q.arrows[ai].src != p.end) continue;
                Path np = p;
                np.arrows.push_back(ai);
                np.end = q.arrows[ai].tgt;
                next.push_back(np);
            }
        std::sort(next.begin(), next.end(), [](const Path& a, const Path& b) {
            return a.arrows < b.arrows;
        });
        frontier = std::move(next);
    }
    return out;
}

std::map<int, int> sinks_and_path_counts(const Quiver& q) {
    require(q.is_acyclic(), ErrorKind::CyclicQuiver, "path counts need an acyclic quiver");
    std::vector<Path> all = enumerate_paths(q);
    std::map<int, int> counts;
    for (int v = 0; v < int(q.vertices.size()); ++v)
        if (q.is_sink(v)) counts[v] = 0;
    for (const Path& p : all) {
        auto it = counts.find(p.end);
        if (it != counts.end()) ++it->second;
    }
    return counts;
}

} // namespace comax
