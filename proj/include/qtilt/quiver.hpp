#pragma once

/*
 * Quivers, paths and quiver presentations.
 *
 * Composition convention used across the whole engine: paths read left to
 * right, so for arrows a: i -> j and b: j -> l the path "a b" runs i -> l
 * (traverse a, then b).  Consequently the indecomposable projective attached
 * to vertex i has, at vertex j, the paths from i to j as its basis.
 */

#include <qtilt/rational.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qtilt {

struct Arrow {
    std::string label;
    int src = 0, tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;  // stable labels, input order preserved
    std::vector<Arrow> arrows;

    int vertex_count() const { return int(vertices.size()); }

    int vertex_index(const std::string& label) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == label) return int(i);
        throw Error("unknown vertex '" + label + "'");
    }

    int arrow_index(const std::string& label) const {
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].label == label) return int(i);
        throw Error("unknown arrow '" + label + "'");
    }

    void validate() const {
        if (vertices.empty()) throw Error("quiver needs at least one vertex");
        for (size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i].empty()) throw Error("empty vertex label");
            for (size_t j = i + 1; j < vertices.size(); ++j)
                if (vertices[i] == vertices[j])
                    throw Error("duplicate vertex label '" + vertices[i] + "'");
        }
        for (size_t i = 0; i < arrows.size(); ++i) {
            const Arrow& a = arrows[i];
            if (a.label.empty()) throw Error("empty arrow label");
            if (a.src < 0 || a.src >= vertex_count() || a.tgt < 0 || a.tgt >= vertex_count())
                throw Error("arrow '" + a.label + "' references a missing vertex");
            for (size_t j = i + 1; j < arrows.size(); ++j)
                if (a.label == arrows[j].label)
                    throw Error("duplicate arrow label '" + a.label + "'");
        }
    }

    Quiver opposite() const {
        Quiver op;
        op.vertices = vertices;
        for (const Arrow& a : arrows) op.arrows.push_back({a.label, a.tgt, a.src});
        return op;
    }
};

// A path is a composable arrow sequence (left to right).  Trivial paths have
// an empty sequence and src == tgt.
struct Path {
    int src = 0, tgt = 0;
    std::vector<int> arrows;

    int length() const { return int(arrows.size()); }
    bool operator==(const Path& o) const {
        return src == o.src && tgt == o.tgt && arrows == o.arrows;
    }
    bool operator<(const Path& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (src != o.src) return src < o.src;
        if (arrows != o.arrows) return arrows < o.arrows;
        return tgt < o.tgt;
    }
};

inline Path trivial_path(int v) { return Path{v, v, {}}; }

inline Path compose_paths(const Path& p, const Path& q) {
    if (p.tgt != q.src) throw Error("paths are not composable");
    Path r{p.src, q.tgt, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

inline std::string path_to_string(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e(" + q.vertices[p.src] + ")";
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += ' ';
        s += q.arrows[p.arrows[i]].label;
    }
    return s;
}

// All paths of length <= max_len, ordered by (length, start vertex, arrow
// sequence) — a deterministic order every later basis inherits.  The count
// guard catches runaway growth on cyclic quivers long before memory does.
inline std::vector<Path> paths_up_to(const Quiver& q, int max_len, size_t count_cap = 200000) {
    std::vector<Path> all;
    std::vector<Path> frontier;
    for (int v = 0; v < q.vertex_count(); ++v) frontier.push_back(trivial_path(v));
    all = frontier;
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].src == p.tgt) {
                    Path np{p.src, q.arrows[a].tgt, p.arrows};
                    np.arrows.push_back(int(a));
                    next.push_back(std::move(np));
                }
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        if (all.size() > count_cap)
            throw Error("path space exceeds the configured cap (quiver is far from admissible)");
        frontier = std::move(next);
    }
    return all;
}

// One admissible relation: a rational combination of parallel paths of
// length >= 2.
struct Relation {
    std::vector<std::pair<Rat, Path>> terms;

    int max_length() const {
        int m = 0;
        for (const auto& [c, p] : terms) m = std::max(m, p.length());
        return m;
    }
};

struct QuiverPresentation {
    Quiver quiver;
    std::vector<Relation> relations;

    void validate() const {
        quiver.validate();
        for (const Relation& r : relations) {
            if (r.terms.empty()) throw Error("empty relation");
            int s = r.terms[0].second.src, t = r.terms[0].second.tgt;
            for (const auto& [c, p] : r.terms) {
                if (c == 0) throw Error("zero coefficient in relation");
                if (p.length() < 2)
                    throw Error("relation term of length < 2 (presentation not admissible)");
                if (p.src != s || p.tgt != t)
                    throw Error("relation mixes non-parallel paths");
                for (int a : p.arrows)
                    if (a < 0 || a >= int(quiver.arrows.size()))
                        throw Error("relation references a missing arrow");
            }
        }
    }

    QuiverPresentation opposite() const {
        QuiverPresentation op;
        op.quiver = quiver.opposite();
        for (const Relation& r : relations) {
            Relation ro;
            for (const auto& [c, p] : r.terms) {
                Path rp{p.tgt, p.src, p.arrows};
                std::reverse(rp.arrows.begin(), rp.arrows.end());
                ro.terms.emplace_back(c, std::move(rp));
            }
            op.relations.push_back(std::move(ro));
        }
        return op;
    }
};

inline std::string relation_to_string(const Quiver& q, const Relation& r) {
    std::string s;
    for (size_t i = 0; i < r.terms.size(); ++i) {
        const auto& [c, p] = r.terms[i];
        Rat a = c;
        if (i == 0) {
            if (a < 0) { s += "- "; a = -a; }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) s += rat_to_string(a) + "·";
        s += path_to_string(q, p);
    }
    return s;
}

}  // namespace qtilt
