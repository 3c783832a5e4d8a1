#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "comax/errors.hpp"

namespace comax {

struct Arrow {
    std::string label;
    int src = 0;
    int tgt = 0;
    bool operator==(const Arrow&) const = default;
};

/// Finite directed graph. Vertex/arrow order is the file order and fixes the
/// basis order of everything built downstream.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    bool operator==(const Quiver&) const = default;
    int vertex_index(const std::string& label) const;
    bool is_acyclic() const;
    bool is_sink(int v) const;
};

/// Composable arrow sequence; an empty sequence is the trivial path at a
/// vertex. Arrows compose left to right: tgt of each = src of the next.
struct Path {
    int start = 0;
    int end = 0;
    std::vector<int> arrows;

    int length() const { return int(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
    bool operator==(const Path&) const = default;
};

std::string path_label(const Quiver& q, const Path& p);

/// Text format:
///   # comment
///   vertices: a b c
///   arrows:
///   x: a -> b
Quiver parse_quiver(const std::string& text);
std::string serialize_quiver(const Quiver& q);

/// All paths of length <= max_len (all paths when acyclic and no bound),
/// ordered by (length, trivials by vertex index, then lex on arrow indices).
std::vector<Path> enumerate_paths(const Quiver& q, std::optional<int> max_len = std::nullopt);

/// For each sink, the number n_i of paths ending there (trivial included).
std::map<int, int> sinks_and_path_counts(const Quiver& q);

} // namespace comax
