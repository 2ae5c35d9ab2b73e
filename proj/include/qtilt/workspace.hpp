// Line-oriented workspace files: a quiver with optional relations, named
// modules, and an optional support pair.  Sections are "[quiver]",
// "[relations]", "[module NAME]" and "[pair]"; entries are "key = value"
// lines, arrows are "label: src -> tgt", matrices are semicolon-separated
// rows of rational literals, and relations are signed rational combinations
// of arrow labels with juxtaposition meaning left-to-right composition.
// Parse errors carry line numbers.
#pragma once

#include <qtilt/representation.hpp>
#include <qtilt/tau_tilting.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qtilt {

struct PairSpec {
    std::vector<std::string> t_names;
    std::vector<std::string> excluded;  // vertex labels of the P part
};

struct Workspace {
    QuiverPresentation pres;
    std::shared_ptr<const AlgebraContext> ctx;
    std::map<std::string, Representation> modules;
    std::optional<PairSpec> pair;
};

namespace detail {

inline std::string ws_trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> ws_split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<std::string> ws_tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// Comma- or whitespace-separated list.
inline std::vector<std::string> ws_list(const std::string& s) {
    std::vector<std::string> out;
    for (const std::string& part : ws_split(s, ','))
        for (const std::string& t : ws_tokens(part)) out.push_back(t);
    return out;
}

[[noreturn]] inline void ws_fail(int line, const std::string& what) {
    throw Error("line " + std::to_string(line) + ": " + what);
}

// Non-throwing label lookups (Quiver's own accessors throw on a miss).
inline int ws_find_vertex(const Quiver& q, const std::string& label) {
    for (size_t i = 0; i < q.vertices.size(); ++i)
        if (q.vertices[i] == label) return int(i);
    return -1;
}

inline int ws_find_arrow(const Quiver& q, const std::string& label) {
    for (size_t i = 0; i < q.arrows.size(); ++i)
        if (q.arrows[i].label == label) return int(i);
    return -1;
}

// "key = value" split; returns false if there is no '='.
inline bool ws_keyval(const std::string& s, std::string& key, std::string& val) {
    size_t eq = s.find('=');
    if (eq == std::string::npos) return false;
    key = ws_trim(s.substr(0, eq));
    val = ws_trim(s.substr(eq + 1));
    return true;
}

inline Mat ws_parse_matrix(const std::string& text, int rows, int cols, int line) {
    Mat m(rows, cols);
    std::string body = ws_trim(text);
    if (body.empty()) return m;  // zero matrix
    std::vector<std::string> rlist = ws_split(body, ';');
    if (int(rlist.size()) != rows)
        ws_fail(line, "expected " + std::to_string(rows) + " matrix row(s), got " +
                          std::to_string(rlist.size()));
    for (int r = 0; r < rows; ++r) {
        std::vector<std::string> entries = ws_tokens(ws_trim(rlist[r]));
        if (int(entries.size()) != cols)
            ws_fail(line, "expected " + std::to_string(cols) + " entries in matrix row " +
                              std::to_string(r + 1) + ", got " + std::to_string(entries.size()));
        for (int c = 0; c < cols; ++c) {
            try {
                m.at(r, c) = parse_rational(entries[c]);
            } catch (const Error&) {
                ws_fail(line, "bad rational entry '" + entries[c] + "'");
            }
        }
    }
    return m;
}

// A relation line: terms separated by + or -, each an optional rational
// coefficient (joined with '·' or '*') followed by arrow labels composed
// left to right.
inline Relation ws_parse_relation(const Quiver& q, const std::string& s, int line) {
    // Separate the coefficient joiners and signs into their own tokens.
    std::string prep;
    size_t i = 0;
    while (i < s.size()) {
        // '·' is a two-byte UTF-8 sequence.
        if (i + 1 < s.size() && (unsigned char)s[i] == 0xC2 && (unsigned char)s[i + 1] == 0xB7) {
            prep += ' ';
            i += 2;
            continue;
        }
        char c = s[i];
        if (c == '*') {
            prep += ' ';
        } else if (c == '+' || c == '-') {
            prep += ' ';
            prep += c;
            prep += ' ';
        } else {
            prep += c;
        }
        ++i;
    }
    std::vector<std::string> toks = ws_tokens(prep);
    if (toks.empty()) ws_fail(line, "empty relation");

    Relation rel;
    Rat sign = 1;
    std::optional<Rat> coeff;
    std::vector<int> arrows;
    auto flush = [&]() {
        if (arrows.empty()) {
            if (coeff) ws_fail(line, "dangling coefficient in relation");
            return;
        }
        Path p{q.arrows[arrows[0]].src, q.arrows[arrows[0]].src, {}};
        for (int a : arrows) {
            if (q.arrows[a].src != p.tgt && !p.arrows.empty())
                ws_fail(line, "arrows '" + q.arrows[a].label + "' do not compose");
            if (p.arrows.empty()) p.src = q.arrows[a].src;
            p.arrows.push_back(a);
            p.tgt = q.arrows[a].tgt;
        }
        rel.terms.emplace_back(sign * coeff.value_or(1), p);
        coeff.reset();
        arrows.clear();
    };
    for (const std::string& t : toks) {
        if (t == "+" || t == "-") {
            flush();
            sign = (t == "+") ? 1 : -1;
            continue;
        }
        int a = ws_find_arrow(q, t);
        if (a >= 0) {
            arrows.push_back(a);
            continue;
        }
        try {
            Rat c = parse_rational(t);
            if (coeff || !arrows.empty()) ws_fail(line, "misplaced coefficient '" + t + "'");
            coeff = c;
        } catch (const Error&) {
            ws_fail(line, "unknown arrow '" + t + "'");
        }
    }
    flush();
    if (rel.terms.empty()) ws_fail(line, "empty relation");
    return rel;
}

}  // namespace detail

inline Workspace parse_workspace(const std::string& text) {
    struct RawLine {
        int no;
        std::string body;
    };
    struct Section {
        int no;
        std::string header;
        std::vector<RawLine> lines;
    };
    std::vector<Section> sections;
    {
        std::istringstream in(text);
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = detail::ws_trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') detail::ws_fail(no, "unterminated section header");
                sections.push_back({no, detail::ws_trim(line.substr(1, line.size() - 2)), {}});
            } else {
                if (sections.empty()) detail::ws_fail(no, "content before the first section");
                sections.back().lines.push_back({no, line});
            }
        }
    }

    Workspace ws;
    // Pass 1: the quiver.
    bool have_quiver = false;
    for (const Section& sec : sections) {
        if (sec.header != "quiver") continue;
        if (have_quiver) detail::ws_fail(sec.no, "duplicate [quiver] section");
        have_quiver = true;
        for (const RawLine& rl : sec.lines) {
            std::string key, val;
            size_t colon = rl.body.find(':');
            if (detail::ws_keyval(rl.body, key, val) &&
                (colon == std::string::npos || rl.body.find('=') < colon)) {
                if (key != "vertices") detail::ws_fail(rl.no, "unknown quiver entry '" + key + "'");
                for (const std::string& v : detail::ws_list(val)) {
                    if (detail::ws_find_vertex(ws.pres.quiver, v) >= 0)
                        detail::ws_fail(rl.no, "duplicate vertex '" + v + "'");
                    ws.pres.quiver.vertices.push_back(v);
                }
                continue;
            }
            if (colon == std::string::npos)
                detail::ws_fail(rl.no, "expected 'label: src -> tgt' or 'vertices = ...'");
            std::string label = detail::ws_trim(rl.body.substr(0, colon));
            std::string rest = rl.body.substr(colon + 1);
            size_t ar = rest.find("->");
            if (ar == std::string::npos) detail::ws_fail(rl.no, "expected 'src -> tgt'");
            std::string src = detail::ws_trim(rest.substr(0, ar));
            std::string tgt = detail::ws_trim(rest.substr(ar + 2));
            if (label.empty() || src.empty() || tgt.empty())
                detail::ws_fail(rl.no, "malformed arrow line");
            if (detail::ws_find_arrow(ws.pres.quiver, label) >= 0)
                detail::ws_fail(rl.no, "duplicate arrow label '" + label + "'");
            int si = detail::ws_find_vertex(ws.pres.quiver, src);
            int ti = detail::ws_find_vertex(ws.pres.quiver, tgt);
            if (si < 0) detail::ws_fail(rl.no, "unknown vertex '" + src + "'");
            if (ti < 0) detail::ws_fail(rl.no, "unknown vertex '" + tgt + "'");
            ws.pres.quiver.arrows.push_back({label, si, ti});
        }
    }
    if (!have_quiver) throw Error("workspace has no [quiver] section");

    // Pass 2: relations.
    for (const Section& sec : sections) {
        if (sec.header != "relations") continue;
        for (const RawLine& rl : sec.lines)
            ws.pres.relations.push_back(detail::ws_parse_relation(ws.pres.quiver, rl.body, rl.no));
    }

    ws.ctx = AlgebraContext::create(ws.pres);

    // Pass 3: modules.
    for (const Section& sec : sections) {
        if (sec.header.rfind("module", 0) != 0) continue;
        std::vector<std::string> ht = detail::ws_tokens(sec.header);
        if (ht.size() != 2) detail::ws_fail(sec.no, "expected '[module NAME]'");
        const std::string name = ht[1];
        if (ws.modules.count(name)) detail::ws_fail(sec.no, "duplicate module '" + name + "'");

        Representation m;
        m.ctx = ws.ctx.get();
        const Quiver& q = ws.pres.quiver;
        bool have_dims = false;
        std::map<std::string, std::pair<std::string, int>> raw_mats;
        for (const RawLine& rl : sec.lines) {
            std::string key, val;
            if (!detail::ws_keyval(rl.body, key, val))
                detail::ws_fail(rl.no, "expected 'key = value'");
            if (key == "dims") {
                std::vector<std::string> ds = detail::ws_list(val);
                if (int(ds.size()) != q.vertex_count())
                    detail::ws_fail(rl.no, "expected " + std::to_string(q.vertex_count()) +
                                               " dimensions");
                for (const std::string& d : ds) {
                    try {
                        Rat r = parse_rational(d);
                        if (r < 0 || r.get_den() != 1) throw Error("bad");
                        m.dims.push_back(int(r.get_num().get_si()));
                    } catch (const Error&) {
                        detail::ws_fail(rl.no, "bad dimension '" + d + "'");
                    }
                }
                have_dims = true;
            } else {
                if (detail::ws_find_arrow(q, key) < 0)
                    detail::ws_fail(rl.no, "unknown arrow '" + key + "'");
                if (raw_mats.count(key)) detail::ws_fail(rl.no, "duplicate matrix for '" + key + "'");
                raw_mats[key] = {val, rl.no};
            }
        }
        if (!have_dims) detail::ws_fail(sec.no, "module '" + name + "' has no dims line");
        for (const Arrow& a : q.arrows) {
            auto it = raw_mats.find(a.label);
            if (it == raw_mats.end())
                m.arrows.push_back(Mat(m.dims[a.src], m.dims[a.tgt]));  // zero
            else
                m.arrows.push_back(detail::ws_parse_matrix(it->second.first, m.dims[a.src],
                                                           m.dims[a.tgt], it->second.second));
        }
        try {
            validate_representation(m);
        } catch (const Error& e) {
            detail::ws_fail(sec.no, "module '" + name + "': " + e.what());
        }
        ws.modules.emplace(name, std::move(m));
    }

    // Pass 4: the pair.
    for (const Section& sec : sections) {
        if (sec.header != "pair") continue;
        if (ws.pair) detail::ws_fail(sec.no, "duplicate [pair] section");
        PairSpec ps;
        for (const RawLine& rl : sec.lines) {
            std::string key, val;
            if (!detail::ws_keyval(rl.body, key, val))
                detail::ws_fail(rl.no, "expected 'key = value'");
            if (key == "T") {
                ps.t_names = detail::ws_list(val);
            } else if (key == "support_excluded") {
                ps.excluded = detail::ws_list(val);
                for (const std::string& v : ps.excluded)
                    if (detail::ws_find_vertex(ws.pres.quiver, v) < 0)
                        detail::ws_fail(rl.no, "unknown vertex '" + v + "'");
            } else {
                detail::ws_fail(rl.no, "unknown pair entry '" + key + "'");
            }
        }
        ws.pair = std::move(ps);
    }
    return ws;
}

// Named module lookup: explicit [module] sections first, then the canonical
// families P<vertex>, S<vertex>, I<vertex>.
inline Representation resolve_module(const Workspace& ws, const std::string& name) {
    auto it = ws.modules.find(name);
    if (it != ws.modules.end()) return it->second;
    if (name.size() >= 2) {
        const std::string label = name.substr(1);
        int v = detail::ws_find_vertex(ws.pres.quiver, label);
        if (v >= 0) {
            if (name[0] == 'P') return projective_module(*ws.ctx, v);
            if (name[0] == 'S') return simple_module(*ws.ctx, v);
            if (name[0] == 'I') return injective_module(*ws.ctx, v);
        }
    }
    throw Error("unknown module '" + name + "'");
}

inline SupportTauTiltingPair resolve_pair(const Workspace& ws) {
    if (!ws.pair) throw Error("workspace has no [pair] section");
    SupportTauTiltingPair pair;
    for (const std::string& n : ws.pair->t_names) pair.t.push_back(resolve_module(ws, n));
    for (const std::string& v : ws.pair->excluded)
        pair.p_vertices.push_back(ws.pres.quiver.vertex_index(v));
    return pair;
}

// Canonical text rendering of a presentation (arrow lines sorted by label).
inline std::string render_presentation(const QuiverPresentation& pres) {
    std::ostringstream out;
    out << "[quiver]\n";
    out << "vertices =";
    for (const std::string& v : pres.quiver.vertices) out << " " << v;
    out << "\n";
    std::vector<std::string> lines;
    for (const Arrow& a : pres.quiver.arrows)
        lines.push_back(a.label + ": " + pres.quiver.vertices[a.src] + " -> " +
                        pres.quiver.vertices[a.tgt]);
    std::sort(lines.begin(), lines.end());
    for (const std::string& l : lines) out << l << "\n";
    if (!pres.relations.empty()) {
        out << "[relations]\n";
        for (const Relation& r : pres.relations)
            out << relation_to_string(pres.quiver, r) << "\n";
    }
    return out.str();
}

}  // namespace qtilt
