#pragma once

/*
 * Finite-dimensional right modules over a path-algebra quotient, presented as
 * quiver representations: a dimension vector and one matrix per arrow.
 *
 * Conventions (fixed project-wide):
 *   - module elements at a vertex are ROW vectors; an arrow a: s -> t acts on
 *     the right, v |-> v * M_a, with M_a of shape dims[s] x dims[t];
 *   - paths compose left to right, so a path acts by the product of its arrow
 *     matrices in path order;
 *   - morphisms are per-vertex matrices F_v (dims_M[v] x dims_N[v]) applied on
 *     the right, and "f then g" composes as F_v * G_v;
 *   - P(v) = e_v A has the paths starting at v as its basis, so its dimension
 *     at w counts paths v -> w; I(v) is the dual of the opposite projective.
 *
 * An AlgebraContext owns a path algebra together with its opposite; duals swap
 * the two sides, which is how injectives, transposes and the translate are
 * reached.
 */

#include <qtilt/algebra.hpp>

#include <memory>
#include <utility>
#include <vector>

namespace qtilt {

class AlgebraContext {
  public:
    static std::shared_ptr<const AlgebraContext> create(const QuiverPresentation& pres,
                                                        const PathAlgebraOptions& opts = {}) {
        std::shared_ptr<AlgebraContext> primal(new AlgebraContext(pres, opts));
        primal->op_owned_.reset(new AlgebraContext(pres.opposite(), opts));
        primal->op_ = primal->op_owned_.get();
        primal->op_owned_->op_ = primal.get();
        return primal;
    }

    const PathAlgebra& pa() const { return pa_; }
    const Quiver& quiver() const { return pa_.pres.quiver; }
    int vertex_count() const { return pa_.vertex_count(); }
    const AlgebraContext& op() const { return *op_; }

    AlgebraContext(const AlgebraContext&) = delete;
    AlgebraContext& operator=(const AlgebraContext&) = delete;

  private:
    AlgebraContext(const QuiverPresentation& pres, const PathAlgebraOptions& opts)
        : pa_(algebra_from_presentation(pres, opts)) {}

    PathAlgebra pa_;
    std::unique_ptr<AlgebraContext> op_owned_;
    const AlgebraContext* op_ = nullptr;
};

struct Representation {
    const AlgebraContext* ctx = nullptr;
    std::vector<int> dims;
    std::vector<Mat> arrows;  // arrows[a]: dims[src] x dims[tgt]

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }
    bool operator==(const Representation& o) const {
        return ctx == o.ctx && dims == o.dims && arrows == o.arrows;
    }
};

inline Representation zero_representation(const AlgebraContext& ctx) {
    Representation r;
    r.ctx = &ctx;
    r.dims.assign(ctx.vertex_count(), 0);
    r.arrows.assign(ctx.quiver().arrows.size(), Mat(0, 0));
    return r;
}

inline Mat act_path(const Representation& m, const Path& p) {
    Mat r = Mat::identity(m.dims[p.src]);
    for (int a : p.arrows) r = r * m.arrows[a];
    return r;
}

// Shape and relation checks; every representation builder runs this.
inline void validate_representation(const Representation& m) {
    const Quiver& q = m.ctx->quiver();
    if (int(m.dims.size()) != q.vertex_count() || int(m.arrows.size()) != int(q.arrows.size()))
        throw Error("representation: shape mismatch");
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (m.arrows[a].rows() != m.dims[q.arrows[a].src] ||
            m.arrows[a].cols() != m.dims[q.arrows[a].tgt])
            throw Error("representation: arrow matrix shape mismatch");
    for (const Relation& rel : m.ctx->pa().pres.relations) {
        int s = rel.terms[0].second.src, t = rel.terms[0].second.tgt;
        Mat sum(m.dims[s], m.dims[t]);
        for (const auto& [c, p] : rel.terms) sum = sum + act_path(m, p) * c;
        if (!sum.is_zero()) throw Error("representation: relation not satisfied");
    }
}

// ---------------------------------------------------------------------------
// Morphisms.
// ---------------------------------------------------------------------------
struct ModuleMap {
    std::vector<Mat> parts;  // parts[v]: dims_M[v] x dims_N[v]
};

inline ModuleMap zero_map(const Representation& m, const Representation& n) {
    ModuleMap f;
    for (size_t v = 0; v < m.dims.size(); ++v) f.parts.emplace_back(m.dims[v], n.dims[v]);
    return f;
}

inline ModuleMap identity_map(const Representation& m) {
    ModuleMap f;
    for (int d : m.dims) f.parts.push_back(Mat::identity(d));
    return f;
}

inline bool is_module_map(const Representation& m, const Representation& n, const ModuleMap& f) {
    if (f.parts.size() != m.dims.size()) return false;
    for (size_t v = 0; v < m.dims.size(); ++v)
        if (f.parts[v].rows() != m.dims[v] || f.parts[v].cols() != n.dims[v]) return false;
    const Quiver& q = m.ctx->quiver();
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        if (!(m.arrows[a] * f.parts[t] == f.parts[s] * n.arrows[a])) return false;
    }
    return true;
}

// f then g.
inline ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h;
    for (size_t v = 0; v < f.parts.size(); ++v) h.parts.push_back(f.parts[v] * g.parts[v]);
    return h;
}

inline ModuleMap map_add(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h;
    for (size_t v = 0; v < f.parts.size(); ++v) h.parts.push_back(f.parts[v] + g.parts[v]);
    return h;
}

inline ModuleMap map_scale(const ModuleMap& f, const Rat& c) {
    ModuleMap h;
    for (const Mat& p : f.parts) h.parts.push_back(p * c);
    return h;
}

inline bool map_is_zero(const ModuleMap& f) {
    for (const Mat& p : f.parts)
        if (!p.is_zero()) return false;
    return true;
}

// Basis of Hom(M, N): solve the intertwining equations M_a F_t = F_s N_a.
// Unknowns are ordered by (vertex, row, col), the kernel basis is canonical,
// so the result is deterministic.
inline std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
    const Quiver& q = m.ctx->quiver();
    int nv = q.vertex_count();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    int unknowns = offset[nv];
    if (unknowns == 0) return {};

    std::vector<Vec> eqs;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        // (M_a F_t - F_s N_a)[i][j] = 0 for i < dims_M[s], j < dims_N[t].
        for (int i = 0; i < m.dims[s]; ++i)
            for (int j = 0; j < n.dims[t]; ++j) {
                Vec row(unknowns);
                for (int k = 0; k < m.dims[t]; ++k)
                    row[offset[t] + k * n.dims[t] + j] += m.arrows[a].at(i, k);
                for (int k = 0; k < n.dims[s]; ++k)
                    row[offset[s] + i * n.dims[s] + k] -= n.arrows[a].at(k, j);
                eqs.push_back(std::move(row));
            }
    }
    std::vector<Vec> sols = kernel_basis(mat_from_rows(eqs, unknowns));

    std::vector<ModuleMap> out;
    for (const Vec& x : sols) {
        ModuleMap f;
        for (int v = 0; v < nv; ++v) {
            Mat part(m.dims[v], n.dims[v]);
            for (int i = 0; i < m.dims[v]; ++i)
                for (int j = 0; j < n.dims[v]; ++j) part.at(i, j) = x[offset[v] + i * n.dims[v] + j];
            f.parts.push_back(std::move(part));
        }
        out.push_back(std::move(f));
    }
    return out;
}

inline int hom_dim(const Representation& m, const Representation& n) {
    return int(hom_space(m, n).size());
}

// Flat coordinates of a map inside the product of per-vertex matrix spaces
// (used to span subspaces of Hom).
inline Vec flatten_map(const ModuleMap& f) {
    Vec v;
    for (const Mat& p : f.parts)
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) v.push_back(p.at(i, j));
    return v;
}

// ---------------------------------------------------------------------------
// Direct sums.
// ---------------------------------------------------------------------------
struct DirectSum {
    Representation rep;
    std::vector<ModuleMap> incl;  // summand -> sum
    std::vector<ModuleMap> proj;  // sum -> summand
};

inline DirectSum direct_sum(const std::vector<const Representation*>& parts) {
    if (parts.empty()) throw Error("direct_sum: needs at least one summand");
    const AlgebraContext* ctx = parts[0]->ctx;
    const Quiver& q = ctx->quiver();
    int nv = q.vertex_count();

    DirectSum out;
    out.rep.ctx = ctx;
    out.rep.dims.assign(nv, 0);
    std::vector<std::vector<int>> offsets(parts.size(), std::vector<int>(nv, 0));
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k]->ctx != ctx) throw Error("direct_sum: mixed algebras");
        for (int v = 0; v < nv; ++v) {
            offsets[k][v] = out.rep.dims[v];
            out.rep.dims[v] += parts[k]->dims[v];
        }
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        Mat big(out.rep.dims[s], out.rep.dims[t]);
        for (size_t k = 0; k < parts.size(); ++k) {
            const Mat& blk = parts[k]->arrows[a];
            for (int i = 0; i < blk.rows(); ++i)
                for (int j = 0; j < blk.cols(); ++j)
                    big.at(offsets[k][s] + i, offsets[k][t] + j) = blk.at(i, j);
        }
        out.rep.arrows.push_back(std::move(big));
    }
    for (size_t k = 0; k < parts.size(); ++k) {
        ModuleMap in, pr;
        for (int v = 0; v < nv; ++v) {
            Mat i(parts[k]->dims[v], out.rep.dims[v]), p(out.rep.dims[v], parts[k]->dims[v]);
            for (int r = 0; r < parts[k]->dims[v]; ++r) {
                i.at(r, offsets[k][v] + r) = 1;
                p.at(offsets[k][v] + r, r) = 1;
            }
            in.parts.push_back(std::move(i));
            pr.parts.push_back(std::move(p));
        }
        out.incl.push_back(std::move(in));
        out.proj.push_back(std::move(pr));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical modules.
// ---------------------------------------------------------------------------
inline Representation simple_module(const AlgebraContext& ctx, int v) {
    Representation r = zero_representation(ctx);
    r.dims[v] = 1;
    const Quiver& q = ctx.quiver();
    for (size_t a = 0; a < q.arrows.size(); ++a)
        r.arrows[a] = Mat(r.dims[q.arrows[a].src], r.dims[q.arrows[a].tgt]);
    return r;
}

// P(v) = e_v A: the basis at vertex w is the list pa.peirce[v][w] of normal
// paths v -> w, in basis order; arrows act by right multiplication in the
// algebra.
inline Representation projective_module(const AlgebraContext& ctx, int v) {
    const PathAlgebra& pa = ctx.pa();
    const Quiver& q = ctx.quiver();
    Representation r;
    r.ctx = &ctx;
    r.dims.assign(q.vertex_count(), 0);
    for (int w = 0; w < q.vertex_count(); ++w) r.dims[w] = int(pa.peirce[v][w].size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        Mat m(r.dims[s], r.dims[t]);
        for (int i = 0; i < r.dims[s]; ++i) {
            Vec prod = pa.alg.table[pa.peirce[v][s][i]][pa.arrow_basis[a]];
            for (int j = 0; j < r.dims[t]; ++j) m.at(i, j) = prod[pa.peirce[v][t][j]];
        }
        r.arrows.push_back(std::move(m));
    }
    validate_representation(r);
    return r;
}

// Row index of the generator e_v inside P(v) at vertex v.
inline int projective_generator_row(const AlgebraContext& ctx, int v) {
    const PathAlgebra& pa = ctx.pa();
    const std::vector<int>& list = pa.peirce[v][v];
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == pa.vertex_basis[v]) return int(i);
    throw Error("projective generator not found");
}

// Dual module: a representation over the opposite algebra, with transposed
// matrices attached to the reversed arrows (same arrow indices).
inline Representation dual(const Representation& m) {
    const AlgebraContext& dctx = m.ctx->op();
    Representation r;
    r.ctx = &dctx;
    r.dims = m.dims;
    for (const Mat& a : m.arrows) r.arrows.push_back(a.transpose());
    validate_representation(r);
    return r;
}

// Dual of a morphism: f: M -> N over A gives dual(f): dual(N) -> dual(M).
inline ModuleMap dual_map(const ModuleMap& f) {
    ModuleMap g;
    for (const Mat& p : f.parts) g.parts.push_back(p.transpose());
    return g;
}

inline Representation injective_module(const AlgebraContext& ctx, int v) {
    return dual(projective_module(ctx.op(), v));
}

// ---------------------------------------------------------------------------
// Sub- and quotient structures.
// ---------------------------------------------------------------------------
struct SubRep {
    Representation rep;
    ModuleMap incl;  // rep -> ambient
};

struct QuotRep {
    Representation rep;
    ModuleMap proj;     // ambient -> rep
    ModuleMap section;  // rep -> ambient (linear section, not a module map)
};

// Kernel of f: M -> N as a subrepresentation of M.
inline SubRep kernel_subrep(const Representation& m, const Representation& n, const ModuleMap& f) {
    const Quiver& q = m.ctx->quiver();
    SubRep out;
    out.rep.ctx = m.ctx;
    std::vector<Mat> basis(m.dims.size());
    for (size_t v = 0; v < m.dims.size(); ++v) {
        std::vector<Vec> rows = kernel_basis(f.parts[v].transpose());  // x with x*F = 0
        basis[v] = mat_from_rows(rows, m.dims[v]);
        out.rep.dims.push_back(basis[v].rows());
        out.incl.parts.push_back(basis[v]);
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        auto x = express_rows(basis[s] * m.arrows[a], basis[t]);
        if (!x) throw Error("kernel is not a subrepresentation");  // cannot happen for a map
        out.rep.arrows.push_back(std::move(*x));
    }
    validate_representation(out.rep);
    return out;
}

// Image of f: M -> N as a subrepresentation of N.
inline SubRep image_subrep(const Representation& m, const Representation& n, const ModuleMap& f) {
    const Quiver& q = n.ctx->quiver();
    (void)m;
    SubRep out;
    out.rep.ctx = n.ctx;
    std::vector<Mat> basis(n.dims.size());
    for (size_t v = 0; v < n.dims.size(); ++v) {
        basis[v] = row_basis(f.parts[v]);
        out.rep.dims.push_back(basis[v].rows());
        out.incl.parts.push_back(basis[v]);
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        auto x = express_rows(basis[s] * n.arrows[a], basis[t]);
        if (!x) throw Error("image is not a subrepresentation");  // cannot happen for a map
        out.rep.arrows.push_back(std::move(*x));
    }
    validate_representation(out.rep);
    return out;
}

// Cokernel of f: M -> N as a quotient of N.
inline QuotRep cokernel_rep(const Representation& m, const Representation& n, const ModuleMap& f) {
    const Quiver& q = n.ctx->quiver();
    (void)m;
    QuotRep out;
    out.rep.ctx = n.ctx;
    std::vector<RowQuotient> quo(n.dims.size());
    for (size_t v = 0; v < n.dims.size(); ++v) {
        quo[v] = quotient_mod_rows(f.parts[v], n.dims[v]);
        out.rep.dims.push_back(quo[v].dim);
        out.proj.parts.push_back(quo[v].proj);
        out.section.parts.push_back(quo[v].section());
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        out.rep.arrows.push_back(out.section.parts[s] * n.arrows[a] * quo[t].proj);
    }
    validate_representation(out.rep);
    if (!is_module_map(n, out.rep, out.proj)) throw Error("cokernel projection is not a map");
    return out;
}

// Radical rad M = sum of arrow images, per vertex (row bases).
inline std::vector<Mat> radical_rows(const Representation& m) {
    const Quiver& q = m.ctx->quiver();
    std::vector<std::vector<Vec>> acc(m.dims.size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Mat& ma = m.arrows[a];
        for (int i = 0; i < ma.rows(); ++i) acc[q.arrows[a].tgt].push_back(ma.row(i));
    }
    std::vector<Mat> out;
    for (size_t v = 0; v < m.dims.size(); ++v)
        out.push_back(row_basis(mat_from_rows(acc[v], m.dims[v])));
    return out;
}

// ---------------------------------------------------------------------------
// Projective sums with recorded layout, Yoneda coordinates for maps out of
// them, and element matrices for maps between them.  Hom(P(v), X) = X_v via
// f |-> image of the generator; Hom(P(v), P(w)) = e_w A e_v via the same.
// ---------------------------------------------------------------------------
struct ProjSum {
    const AlgebraContext* ctx = nullptr;
    std::vector<int> vertices;              // summand k is P(vertices[k])
    Representation rep;
    std::vector<std::vector<int>> offsets;  // offsets[k][w]: first row of summand k at w

    int summands() const { return int(vertices.size()); }
};

inline ProjSum projective_sum(const AlgebraContext& ctx, const std::vector<int>& verts) {
    ProjSum out;
    out.ctx = &ctx;
    out.vertices = verts;
    if (verts.empty()) {
        out.rep = zero_representation(ctx);
        return out;
    }
    std::vector<Representation> parts;
    for (int v : verts) parts.push_back(projective_module(ctx, v));
    std::vector<const Representation*> ptrs;
    for (const auto& p : parts) ptrs.push_back(&p);
    DirectSum ds = direct_sum(ptrs);
    out.rep = ds.rep;
    int nv = ctx.vertex_count();
    out.offsets.assign(verts.size(), std::vector<int>(nv, 0));
    std::vector<int> running(nv, 0);
    for (size_t k = 0; k < verts.size(); ++k)
        for (int w = 0; w < nv; ++w) {
            out.offsets[k][w] = running[w];
            running[w] += parts[k].dims[w];
        }
    return out;
}

// Dimension of Hom(P, N) in Yoneda coordinates: sum of N's dimensions at the
// summand vertices.
inline int yoneda_dim(const ProjSum& p, const Representation& n) {
    int s = 0;
    for (int v : p.vertices) s += n.dims[v];
    return s;
}

// The map P -> N whose k-th summand sends the generator of P(v_k) to the row
// vector packed at position k of `coords`.
inline ModuleMap yoneda_map(const ProjSum& p, const Representation& n, const Vec& coords) {
    const AlgebraContext& ctx = *p.ctx;
    const PathAlgebra& pa = ctx.pa();
    int nv = ctx.vertex_count();
    ModuleMap f;
    for (int w = 0; w < nv; ++w) f.parts.emplace_back(p.rep.dims[w], n.dims[w]);
    int pos = 0;
    for (int k = 0; k < p.summands(); ++k) {
        int v = p.vertices[k];
        // generator image x in N_v
        std::vector<Rat> x(coords.begin() + pos, coords.begin() + pos + n.dims[v]);
        pos += n.dims[v];
        for (int w = 0; w < nv; ++w) {
            const std::vector<int>& paths = pa.peirce[v][w];
            for (size_t i = 0; i < paths.size(); ++i) {
                Mat action = act_path(n, pa.basis[paths[i]]);  // N_v x N_w
                for (int j = 0; j < n.dims[w]; ++j) {
                    Rat s = 0;
                    for (int r = 0; r < n.dims[v]; ++r) s += x[r] * action.at(r, j);
                    f.parts[w].at(p.offsets[k][w] + int(i), j) = s;
                }
            }
        }
    }
    return f;
}

// Inverse of yoneda_map: read off the generator rows.
inline Vec yoneda_coords_of(const ProjSum& p, const Representation& n, const ModuleMap& f) {
    Vec coords;
    for (int k = 0; k < p.summands(); ++k) {
        int v = p.vertices[k];
        int row = p.offsets[k][v] + projective_generator_row(*p.ctx, v);
        for (int j = 0; j < n.dims[v]; ++j) coords.push_back(f.parts[v].at(row, j));
    }
    return coords;
}

// Element matrix of a map between projective sums: entry (k, l) lies in
// e_{w_l} A e_{v_k} = Hom(P(v_k), P(w_l)), stored as algebra coordinates.
inline std::vector<std::vector<Vec>> elements_of_map(const ProjSum& src, const ProjSum& tgt,
                                                     const ModuleMap& f) {
    const PathAlgebra& pa = src.ctx->pa();
    std::vector<std::vector<Vec>> el(src.summands(), std::vector<Vec>(tgt.summands()));
    for (int k = 0; k < src.summands(); ++k) {
        int v = src.vertices[k];
        int row = src.offsets[k][v] + projective_generator_row(*src.ctx, v);
        for (int l = 0; l < tgt.summands(); ++l) {
            int w = tgt.vertices[l];
            Vec e(pa.alg.dim);
            // image of the generator inside summand l at vertex v: coefficients
            // over the paths w -> v.
            const std::vector<int>& paths = pa.peirce[w][v];
            for (size_t i = 0; i < paths.size(); ++i)
                e[paths[i]] = f.parts[v].at(row, tgt.offsets[l][v] + int(i));
            el[k][l] = std::move(e);
        }
    }
    return el;
}

inline ModuleMap map_from_elements(const ProjSum& src, const ProjSum& tgt,
                                   const std::vector<std::vector<Vec>>& el) {
    const AlgebraContext& ctx = *src.ctx;
    const PathAlgebra& pa = ctx.pa();
    int nv = ctx.vertex_count();
    ModuleMap f;
    for (int w = 0; w < nv; ++w) f.parts.emplace_back(src.rep.dims[w], tgt.rep.dims[w]);
    for (int k = 0; k < src.summands(); ++k) {
        int v = src.vertices[k];
        for (int l = 0; l < tgt.summands(); ++l) {
            int w = tgt.vertices[l];
            const Vec& e = el[k][l];  // element of e_w A e_v
            // P(v) basis path p (v -> u)  |->  e * p, read over paths w -> u.
            for (int u = 0; u < nv; ++u) {
                const std::vector<int>& srows = pa.peirce[v][u];
                const std::vector<int>& tcols = pa.peirce[w][u];
                for (size_t i = 0; i < srows.size(); ++i) {
                    Vec prod(pa.alg.dim);
                    for (int b = 0; b < pa.alg.dim; ++b) {
                        if (e[b] == 0) continue;
                        const Vec& t = pa.alg.table[b][srows[i]];
                        for (int m2 = 0; m2 < pa.alg.dim; ++m2)
                            if (t[m2] != 0) prod[m2] += e[b] * t[m2];
                    }
                    for (size_t j = 0; j < tcols.size(); ++j)
                        f.parts[u].at(src.offsets[k][u] + int(i), tgt.offsets[l][u] + int(j)) =
                            prod[tcols[j]];
                }
            }
        }
    }
    return f;
}

// Reverse a path of the primal algebra into the opposite algebra, as algebra
// coordinates there.  Element-level bridge used by transpose and the
// translate: e_w A e_v  <->  e^op_v A^op e^op_w.
inline Vec op_element(const AlgebraContext& ctx, const Vec& x) {
    const PathAlgebra& pa = ctx.pa();
    const PathAlgebra& opa = ctx.op().pa();
    Vec out(opa.alg.dim);
    for (int i = 0; i < pa.alg.dim; ++i) {
        if (x[i] == 0) continue;
        const Path& p = pa.basis[i];
        Path rev;
        rev.src = p.tgt;
        rev.tgt = p.src;
        rev.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
        Vec nf = opa.normal_form(rev);
        for (int j = 0; j < opa.alg.dim; ++j)
            if (nf[j] != 0) out[j] += x[i] * nf[j];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Projective covers and minimal presentations.
// ---------------------------------------------------------------------------
struct ProjCover {
    ProjSum p;
    ModuleMap onto;  // p.rep -> M, surjective with superfluous kernel
};

inline ProjCover projective_cover(const Representation& m) {
    const AlgebraContext& ctx = *m.ctx;
    int nv = ctx.vertex_count();
    std::vector<Mat> rad = radical_rows(m);

    // Top generators: complete each radical row space to the full fiber.
    std::vector<int> verts;
    std::vector<Vec> gens;
    for (int v = 0; v < nv; ++v) {
        Mat fresh = row_complement(rad[v], Mat::identity(m.dims[v]));
        for (int i = 0; i < fresh.rows(); ++i) {
            verts.push_back(v);
            gens.push_back(fresh.row(i));
        }
    }
    ProjCover out;
    out.p = projective_sum(ctx, verts);
    Vec coords;
    for (size_t k = 0; k < verts.size(); ++k)
        for (const Rat& c : gens[k]) coords.push_back(c);
    out.onto = yoneda_map(out.p, m, coords);
    if (!is_module_map(out.p.rep, m, out.onto)) throw Error("projective cover is not a map");
    for (int v = 0; v < nv; ++v)
        if (rank(out.onto.parts[v]) != m.dims[v]) throw Error("projective cover not surjective");
    return out;
}

struct ProjPresentation {
    ProjSum p0, p1;
    ModuleMap d0;  // p0.rep -> M
    ModuleMap d1;  // p1.rep -> p0.rep, image = ker d0, contained in rad p0
};

inline ProjPresentation min_proj_presentation(const Representation& m) {
    ProjPresentation out;
    ProjCover c0 = projective_cover(m);
    out.p0 = std::move(c0.p);
    out.d0 = std::move(c0.onto);
    SubRep ker = kernel_subrep(out.p0.rep, m, out.d0);
    // Minimality tripwire: the kernel of a projective cover lies in the radical.
    std::vector<Mat> rad = radical_rows(out.p0.rep);
    for (size_t v = 0; v < ker.rep.dims.size(); ++v)
        if (ker.incl.parts[v].rows() != 0 && !rows_contained(ker.incl.parts[v], rad[v]))
            throw Error("cover kernel not superfluous");
    ProjCover c1 = projective_cover(ker.rep);
    out.p1 = std::move(c1.p);
    out.d1 = compose(c1.onto, ker.incl);
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism testing.  Same dimension vector plus an invertible element of
// Hom(M, N); combinations are probed deterministically, which identifies an
// isomorphism with certainty when one of the probes works and (for the module
// categories handled here) reports reliably in the failing direction too,
// since random combinations of a spanning hom basis are generically
// invertible when any isomorphism exists.
// ---------------------------------------------------------------------------
inline bool map_invertible(const Representation& m, const ModuleMap& f) {
    for (size_t v = 0; v < m.dims.size(); ++v)
        if (rank(f.parts[v]) != m.dims[v]) return false;
    return true;
}

inline bool is_isomorphic(const Representation& m, const Representation& n) {
    if (m.ctx != n.ctx) throw Error("is_isomorphic: mixed algebras");
    if (m.dims != n.dims) return false;
    if (m.total_dim() == 0) return true;
    std::vector<ModuleMap> hom = hom_space(m, n);
    if (hom.empty()) return false;
    for (const ModuleMap& f : hom)
        if (map_invertible(m, f)) return true;
    // Deterministic pseudo-random combinations with growing coefficients.
    unsigned state = 0x9e3779b9u;
    auto next = [&state]() {
        state = state * 1664525u + 1013904223u;
        return state;
    };
    for (int attempt = 0; attempt < 24; ++attempt) {
        int range = 3 + attempt;
        ModuleMap f = map_scale(hom[0], Rat(int(next() % (2 * range + 1)) - range));
        for (size_t i = 1; i < hom.size(); ++i)
            f = map_add(f, map_scale(hom[i], Rat(int(next() % (2 * range + 1)) - range)));
        if (map_invertible(m, f)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Dynkin test via the Tits form: the symmetrized Euler matrix is positive
// definite exactly for (disjoint unions of) ADE quivers, which is the finite
// representation type condition the knitting procedure requires.
// ---------------------------------------------------------------------------
inline bool is_dynkin(const Quiver& q) {
    int n = q.vertex_count();
    Mat c(n, n);
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    for (const Arrow& a : q.arrows) {
        if (a.src == a.tgt) return false;  // loop: not positive definite
        c.at(a.src, a.tgt) -= 1;
        c.at(a.tgt, a.src) -= 1;
    }
    // Leading principal minors of the symmetrized form must be positive.
    for (int k = 1; k <= n; ++k) {
        Mat sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = c.at(i, j);
        // Determinant sign via echelon form of the transpose-stable matrix:
        // use Bareiss through echelon_form on an augmented copy.
        // Minors of a symmetric matrix: compute the determinant directly.
        Rat det = 1;
        Mat g = sub;
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int r = col; r < k; ++r)
                if (g.at(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return false;  // singular minor
            if (piv != col) {
                for (int c2 = 0; c2 < k; ++c2) std::swap(g.at(piv, c2), g.at(col, c2));
                det = -det;
            }
            det *= g.at(col, col);
            for (int r = col + 1; r < k; ++r) {
                Rat f = g.at(r, col) / g.at(col, col);
                for (int c2 = col; c2 < k; ++c2) g.at(r, c2) -= f * g.at(col, c2);
            }
        }
        if (det <= 0) return false;
    }
    return true;
}

}  // namespace qtilt
