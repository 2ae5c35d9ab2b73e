#pragma once

/*
 * Homological machinery over a path-algebra quotient:
 *
 *   - minimal projective resolutions (iterated minimal covers);
 *   - Ext^n(M, N) as explicit cocycle classes: representatives are maps
 *     P_n -> N in Yoneda coordinates, with pushforward along maps N -> N'
 *     and pullback along maps M' -> M via comparison chain lifts;
 *   - the transpose Tr (minimal presentation, element matrices flipped to the
 *     opposite algebra), giving tau = D Tr and tau^{-1} = Tr D;
 *   - tau^{-1} on morphisms, through lifts along the dual presentations --
 *     canonical here because the algebras it is applied to are hereditary,
 *     where minimal injective copresentations are exact coresolutions;
 *   - projectively/injectively stable Hom dimensions;
 *   - projective and global dimension, and the knitting of all
 *     indecomposables for Dynkin quivers by tau^{-1}-orbits of projectives.
 */

#include <qtilt/representation.hpp>

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace qtilt {

// ---------------------------------------------------------------------------
// Minimal projective resolutions.
// ---------------------------------------------------------------------------
struct Resolution {
    Representation m;                // the resolved module
    std::vector<ProjSum> terms;      // P_0, P_1, ...
    std::vector<ModuleMap> diff;     // diff[0]: P_0 -> m, diff[i]: P_i -> P_{i-1}
    bool complete = false;           // the last kernel vanished
};

inline Resolution min_resolution(const Representation& m, int max_terms) {
    Resolution res;
    res.m = m;
    Representation cur = m;
    ModuleMap incl_prev;  // kernel -> previous term
    for (int i = 0; i < max_terms; ++i) {
        ProjCover cov = projective_cover(cur);
        res.diff.push_back(i == 0 ? cov.onto : compose(cov.onto, incl_prev));
        SubRep ker = kernel_subrep(cov.p.rep, cur, cov.onto);
        // Minimality tripwire: kernels of minimal covers are superfluous.
        std::vector<Mat> rad = radical_rows(cov.p.rep);
        for (size_t v = 0; v < ker.rep.dims.size(); ++v)
            if (ker.incl.parts[v].rows() != 0 && !rows_contained(ker.incl.parts[v], rad[v]))
                throw Error("resolution: cover kernel not superfluous");
        res.terms.push_back(std::move(cov.p));
        if (ker.rep.is_zero()) {
            res.complete = true;
            break;
        }
        cur = ker.rep;
        incl_prev = ker.incl;
    }
    return res;
}

// Projective dimension within a bound; -1 for the zero module, nullopt when
// the resolution does not terminate within the bound.
inline std::optional<int> proj_dim(const Representation& m, int bound) {
    if (m.is_zero()) return -1;
    Resolution res = min_resolution(m, bound + 2);
    if (!res.complete) return std::nullopt;
    int pd = -1;
    for (size_t i = 0; i < res.terms.size(); ++i)
        if (!res.terms[i].rep.is_zero()) pd = int(i);
    return pd;
}

inline std::optional<int> global_dimension(const AlgebraContext& ctx, int bound = 16) {
    int g = 0;
    for (int v = 0; v < ctx.vertex_count(); ++v) {
        auto pd = proj_dim(simple_module(ctx, v), bound);
        if (!pd) return std::nullopt;
        g = std::max(g, *pd);
    }
    return g;
}

inline bool is_hereditary(const AlgebraContext& ctx) {
    auto g = global_dimension(ctx, 8);
    return g && *g <= 1;
}

// ---------------------------------------------------------------------------
// Ext spaces with explicit representatives.
//
// C_i = Hom(P_i, N) in Yoneda coordinates; D_i: C_i -> C_{i+1} is composition
// with the differential.  Ext^n = ker D_n / im D_{n-1}; class representatives
// are a deterministic complement of the coboundaries inside the cocycles.
// ---------------------------------------------------------------------------
struct ExtSpace {
    Resolution res;            // resolution of the source module
    Representation target;
    int degree = 0;
    int dim = 0;
    std::vector<ModuleMap> reps;  // representative cocycles P_degree -> target
    Mat basis_mat;                // rows: coboundary basis, then class reps
    int cobound_rank = 0;
    Mat d_n;                      // cocycle condition (row vector times d_n = 0)

    ModuleMap rep_of(const Vec& cls) const {
        if (int(cls.size()) != dim) throw Error("ext class: coordinate length mismatch");
        const ProjSum& pn = res.terms[degree];
        ModuleMap f = zero_map(pn.rep, target);
        for (int i = 0; i < dim; ++i)
            if (cls[i] != 0) f = map_add(f, map_scale(reps[i], cls[i]));
        return f;
    }

    Vec coords_of(const ModuleMap& cocycle) const {
        const ProjSum& pn = res.terms[degree];
        Vec x = yoneda_coords_of(pn, target, cocycle);
        if (x.empty()) return Vec(dim);
        // Cocycle membership.
        Mat xr(1, int(x.size()));
        xr.set_row(0, x);
        if (d_n.rows() == int(x.size()) && d_n.cols() > 0 && !(xr * d_n).is_zero())
            throw Error("ext coordinates requested for a non-cocycle");
        if (basis_mat.rows() == 0) return Vec(dim);
        auto expr = express_rows(xr, basis_mat);
        if (!expr) throw Error("ext coordinates: cocycle outside the computed space");
        Vec cls(dim);
        for (int i = 0; i < dim; ++i) cls[i] = expr->at(0, cobound_rank + i);
        return cls;
    }
};

inline ExtSpace ext_space(const Resolution& res, const Representation& target, int degree) {
    if (degree < 0) throw Error("ext degree must be nonnegative");
    if (degree >= int(res.terms.size()) && !res.complete)
        throw Error("ext: resolution too short");
    ExtSpace es;
    es.res = res;
    es.target = target;
    es.degree = degree;

    auto coords_dim = [&](int i) {
        return i < int(res.terms.size()) ? yoneda_dim(res.terms[i], target) : 0;
    };
    // Degree beyond a finite resolution: zero space.
    if (degree >= int(res.terms.size())) {
        es.res.terms.resize(degree + 1, ProjSum{res.terms[0].ctx ? res.terms[0].ctx
                                                                 : target.ctx,
                                                {},
                                                zero_representation(*target.ctx),
                                                {}});
        es.basis_mat = Mat(0, 0);
        return es;
    }

    int sn = coords_dim(degree);
    int snext = coords_dim(degree + 1);

    // D_degree: composition with diff[degree + 1].
    es.d_n = Mat(sn, snext);
    if (snext > 0) {
        const ProjSum& pn = res.terms[degree];
        const ProjSum& pn1 = res.terms[degree + 1];
        for (int j = 0; j < sn; ++j) {
            Vec unit(sn);
            unit[j] = 1;
            ModuleMap f = yoneda_map(pn, target, unit);
            Vec img = yoneda_coords_of(pn1, target, compose(res.diff[degree + 1], f));
            es.d_n.set_row(j, img);
        }
    }

    // Cocycles: left kernel of D_degree.
    std::vector<Vec> z = (snext == 0) ? std::vector<Vec>{} : kernel_basis(es.d_n.transpose());
    Mat zmat(0, sn);
    if (snext == 0) {
        zmat = Mat::identity(sn);  // everything is a cocycle
    } else {
        zmat = mat_from_rows(z, sn);
    }

    // Coboundaries: image of D_{degree-1}.
    Mat bmat(0, sn);
    if (degree >= 1 && sn > 0) {
        int sprev = coords_dim(degree - 1);
        const ProjSum& pprev = res.terms[degree - 1];
        const ProjSum& pn = res.terms[degree];
        std::vector<Vec> rows;
        for (int j = 0; j < sprev; ++j) {
            Vec unit(sprev);
            unit[j] = 1;
            ModuleMap f = yoneda_map(pprev, target, unit);
            rows.push_back(yoneda_coords_of(pn, target, compose(res.diff[degree], f)));
        }
        bmat = row_basis(mat_from_rows(rows, sn));
    }

    Mat reps_mat = row_complement(bmat, zmat);
    es.dim = reps_mat.rows();
    es.cobound_rank = bmat.rows();
    es.basis_mat = bmat.rows() == 0 ? reps_mat
                                    : (reps_mat.rows() == 0 ? bmat : vstack(bmat, reps_mat));
    for (int i = 0; i < es.dim; ++i)
        es.reps.push_back(yoneda_map(res.terms[degree], target, reps_mat.row(i)));
    return es;
}

inline int ext_dim(const Representation& m, const Representation& n, int degree, int bound = 16) {
    if (m.is_zero() || n.is_zero()) return 0;
    Resolution res = min_resolution(m, std::max(degree + 2, bound));
    return ext_space(res, n, degree).dim;
}

// Pushforward along g: target -> target' (same resolution on the source side).
inline Vec ext_push(const ExtSpace& src, const Vec& cls, const ModuleMap& g,
                    const ExtSpace& dst) {
    if (src.degree != dst.degree) throw Error("ext push: degree mismatch");
    return dst.coords_of(compose(src.rep_of(cls), g));
}

// ---------------------------------------------------------------------------
// Comparison chain lifts: given h: M' -> M and minimal resolutions of both,
// produce L_i: P'_i -> P_i with L_0 then d_0 = d'_0 then h and
// L_i then d_i = d'_i then L_{i-1}.  Solvability is projectivity; failure to
// solve is therefore a hard error.
// ---------------------------------------------------------------------------
inline std::vector<ModuleMap> chain_lift(const Resolution& src, const Resolution& dst,
                                         const ModuleMap& h, int upto) {
    std::vector<ModuleMap> lifts;
    ProjSum dst_zero;  // stands in for terms past a finished destination resolution
    for (int i = 0; i <= upto; ++i) {
        if (i >= int(src.terms.size()))
            break;  // source resolution already finished: nothing left to lift
        bool dst_done = i >= int(dst.terms.size());
        if (dst_done && !dst.complete) throw Error("chain lift: destination resolution too short");
        if (dst_done) {
            // The only lift into a zero term is zero; exactness makes the
            // square commute (the composite lands in a vanishing image).
            const ProjSum& ps = src.terms[i];
            dst_zero = projective_sum(*ps.ctx, {});
            ModuleMap z = zero_map(ps.rep, dst_zero.rep);
            const Representation& codomain = (i == 0) ? dst.m : dst.terms[i - 1].rep;
            ModuleMap rhs = (i == 0) ? compose(src.diff[0], h) : compose(src.diff[i], lifts[i - 1]);
            if (!map_is_zero(rhs))
                throw Error("chain lift: nonzero composite against a finished resolution");
            (void)codomain;
            lifts.push_back(std::move(z));
            continue;
        }
        const ProjSum& ps = src.terms[i];
        const ProjSum& pd = dst.terms[i];
        const Representation& codomain = (i == 0) ? dst.m : dst.terms[i - 1].rep;
        ModuleMap rhs = (i == 0) ? compose(src.diff[0], h) : compose(src.diff[i], lifts[i - 1]);

        int nx = yoneda_dim(ps, pd.rep);
        int ny = yoneda_dim(ps, codomain);
        Mat phi(nx, ny);
        for (int j = 0; j < nx; ++j) {
            Vec unit(nx);
            unit[j] = 1;
            ModuleMap cand = yoneda_map(ps, pd.rep, unit);
            phi.set_row(j, yoneda_coords_of(ps, codomain, compose(cand, dst.diff[i])));
        }
        Vec rhsc = yoneda_coords_of(ps, codomain, rhs);
        auto x = solve(phi.transpose(), rhsc);
        if (!x) throw Error("chain lift: no solution (should be impossible)");
        lifts.push_back(yoneda_map(ps, pd.rep, *x));
    }
    return lifts;
}

// Pullback along h: M' -> M of a class over M to a class over M'.
inline Vec ext_pull(const ExtSpace& over_m, const Vec& cls, const Resolution& res_mprime,
                    const ModuleMap& h, const ExtSpace& over_mprime) {
    if (over_m.degree != over_mprime.degree) throw Error("ext pull: degree mismatch");
    bool all_zero = true;
    for (const Rat& c : cls)
        if (c != 0) all_zero = false;
    if (all_zero) return Vec(over_mprime.dim);
    int n = over_m.degree;
    std::vector<ModuleMap> lifts = chain_lift(res_mprime, over_m.res, h, n);
    if (int(lifts.size()) <= n) {
        // Source resolution ended before degree n: the pulled class is zero.
        return Vec(over_mprime.dim);
    }
    return over_mprime.coords_of(compose(lifts[n], over_m.rep_of(cls)));
}

// ---------------------------------------------------------------------------
// Transpose and the Auslander-Reiten translate.
// ---------------------------------------------------------------------------
namespace detail {

// Flip a map between projective sums to the other side of the algebra:
// the element matrix is transposed and each entry rewritten in the opposite
// algebra.  Hom(P(v), P(w)) = e_w A e_v  <->  e^op_v A^op e^op_w.
struct FlippedMap {
    ProjSum src, tgt;  // over the opposite context
    ModuleMap d;
};

inline FlippedMap flip_presentation_map(const ProjSum& p1, const ProjSum& p0,
                                        const ModuleMap& d1) {
    const AlgebraContext& octx = p0.ctx->op();
    FlippedMap out;
    out.src = projective_sum(octx, p0.vertices);
    out.tgt = projective_sum(octx, p1.vertices);
    auto el = elements_of_map(p1, p0, d1);
    std::vector<std::vector<Vec>> tel(out.src.summands(), std::vector<Vec>(out.tgt.summands()));
    for (int k = 0; k < p1.summands(); ++k)
        for (int l = 0; l < p0.summands(); ++l) tel[l][k] = op_element(*p0.ctx, el[k][l]);
    out.d = map_from_elements(out.src, out.tgt, tel);
    return out;
}

}  // namespace detail

// Transpose Tr M, a module over the opposite algebra: cokernel of the flipped
// minimal presentation map.  Tr of a projective is zero by minimality.
inline Representation transpose_rep(const Representation& m) {
    ProjPresentation pr = min_proj_presentation(m);
    detail::FlippedMap f = detail::flip_presentation_map(pr.p1, pr.p0, pr.d1);
    return cokernel_rep(f.src.rep, f.tgt.rep, f.d).rep;
}

inline Representation tau(const Representation& m) { return dual(transpose_rep(m)); }

inline Representation tau_inv(const Representation& m) { return transpose_rep(dual(m)); }

// Minimal injective copresentation 0 -> M -> I0 -> I1, obtained by dualizing
// the minimal projective presentation of D(M) over the opposite algebra.
struct InjCopresentation {
    ProjSum op_q0, op_q1;    // opposite-side projective sums; duals below
    Representation i0, i1;   // the injective terms (primal modules)
    ModuleMap into;          // M -> i0, the injective envelope
    ModuleMap d;             // i0 -> i1
};

inline InjCopresentation min_inj_copresentation(const Representation& m) {
    Representation dm = dual(m);
    ProjPresentation pr = min_proj_presentation(dm);
    InjCopresentation out;
    out.op_q0 = pr.p0;
    out.op_q1 = pr.p1;
    out.i0 = dual(pr.p0.rep);
    out.i1 = dual(pr.p1.rep);
    out.into = dual_map(pr.d0);  // dual(dm) = m exactly
    out.d = dual_map(pr.d1);
    if (!is_module_map(m, out.i0, out.into)) throw Error("injective envelope is not a map");
    if (!is_module_map(out.i0, out.i1, out.d)) throw Error("copresentation map is not a map");
    return out;
}

// tau^{-1} by the inverse Nakayama route: nu^{-1} turns the minimal injective
// copresentation I(v)-terms into the matching projectives (carried by the
// same connecting elements), and tau^{-1} M is the cokernel.  The transpose
// route below reaches the same map without the double-dual round trip; both
// are exercised and compared by the tests.
inline Representation tau_inv_nakayama(const Representation& m) {
    InjCopresentation cop = min_inj_copresentation(m);
    ModuleMap delta = dual_map(cop.d);  // the opposite-side map op_q1 -> op_q0
    detail::FlippedMap f = detail::flip_presentation_map(cop.op_q1, cop.op_q0, delta);
    return cokernel_rep(f.src.rep, f.tgt.rep, f.d).rep;
}

// ---------------------------------------------------------------------------
// tau^{-1} with functorial data: the copresentation is flipped by the inverse
// Nakayama correspondence (same elements, injectives replaced by projectives)
// and tau^{-1} M is the cokernel.  Over a hereditary algebra the minimal
// injective copresentation is an exact coresolution, so the induced map on
// cokernels is independent of the lift choices and tau^{-1} is a functor on
// the relevant hom spaces; the engine only calls tau_inv_map over hereditary
// contexts.
// ---------------------------------------------------------------------------
struct TauInvData {
    Representation source;
    ProjPresentation op_pres;   // of dual(source), over the opposite algebra
    ProjSum x0, x1;             // primal projective sums (inverse Nakayama images)
    ModuleMap d;                // x0.rep -> x1.rep
    QuotRep coker;              // result = coker.rep
    Representation result;
};

inline TauInvData tau_inv_data(const Representation& m) {
    TauInvData out;
    out.source = m;
    Representation dm = dual(m);
    out.op_pres = min_proj_presentation(dm);
    detail::FlippedMap f =
        detail::flip_presentation_map(out.op_pres.p1, out.op_pres.p0, out.op_pres.d1);
    out.x0 = std::move(f.src);
    out.x1 = std::move(f.tgt);
    out.d = std::move(f.d);
    out.coker = cokernel_rep(out.x0.rep, out.x1.rep, out.d);
    out.result = out.coker.rep;
    return out;
}

// tau^{-1} of f: M -> N, as a map tau_inv_data(M).result -> tau_inv_data(N).result.
inline ModuleMap tau_inv_map(const TauInvData& dm, const TauInvData& dn, const ModuleMap& f) {
    // Dualize f and lift over the opposite presentations: dual(f): D(N) -> D(M).
    const ModuleMap df = dual_map(f);

    // Lifts L_i: q_i(DN) -> q_i(DM) with L_i then d_i = d'_i then (previous).
    auto lift_step = [](const ProjSum& ps, const ProjSum& pd, const Representation& codomain,
                        const ModuleMap& target_d, const ModuleMap& rhs) {
        int nx = yoneda_dim(ps, pd.rep);
        Mat phi(nx, yoneda_dim(ps, codomain));
        for (int j = 0; j < nx; ++j) {
            Vec unit(nx);
            unit[j] = 1;
            ModuleMap cand = yoneda_map(ps, pd.rep, unit);
            phi.set_row(j, yoneda_coords_of(ps, codomain, compose(cand, target_d)));
        }
        Vec rhsc = yoneda_coords_of(ps, codomain, rhs);
        auto x = solve(phi.transpose(), rhsc);
        if (!x) throw Error("tau_inv_map: lift failed");
        return yoneda_map(ps, pd.rep, *x);
    };

    Representation ddm = dual(dm.source);  // = D(M), the codomain of df's lift square
    ModuleMap l0 = lift_step(dn.op_pres.p0, dm.op_pres.p0, ddm, dm.op_pres.d0,
                             compose(dn.op_pres.d0, df));
    ModuleMap l1 = lift_step(dn.op_pres.p1, dm.op_pres.p1, dm.op_pres.p0.rep, dm.op_pres.d1,
                             compose(dn.op_pres.d1, l0));

    // Flip the lifts to the primal side: q_i(DN) -> q_i(DM) becomes
    // x_i(M) -> x_i(N) with opposite elements, matching the flipped terms.
    auto flip_lift = [](const ProjSum& from_op, const ProjSum& to_op, const ModuleMap& l,
                        const ProjSum& from_pr, const ProjSum& to_pr) {
        auto el = elements_of_map(from_op, to_op, l);
        const AlgebraContext& octx = *from_op.ctx;  // opposite context
        std::vector<std::vector<Vec>> tel(from_pr.summands(),
                                          std::vector<Vec>(to_pr.summands()));
        for (int k = 0; k < from_op.summands(); ++k)
            for (int l2 = 0; l2 < to_op.summands(); ++l2)
                tel[l2][k] = op_element(octx, el[k][l2]);
        return map_from_elements(from_pr, to_pr, tel);
    };
    // l0: q0(DN) -> q0(DM); flipped: x0(M) -> x0(N).
    ModuleMap t0 = flip_lift(dn.op_pres.p0, dm.op_pres.p0, l0, dm.x0, dn.x0);
    ModuleMap t1 = flip_lift(dn.op_pres.p1, dm.op_pres.p1, l1, dm.x1, dn.x1);

    // Commutation tripwire: d_M then t1 = t0 then d_N, which makes the map on
    // cokernels well defined.
    ModuleMap lhs = compose(dm.d, t1), rhs = compose(t0, dn.d);
    for (size_t v = 0; v < lhs.parts.size(); ++v)
        if (!(lhs.parts[v] == rhs.parts[v]))
            throw Error("tau_inv_map: flipped lifts do not commute");

    // Induced map on cokernels: section, then t1, then projection.
    ModuleMap induced = compose(dm.coker.section, compose(t1, dn.coker.proj));
    if (!is_module_map(dm.result, dn.result, induced))
        throw Error("tau_inv_map: induced map is not a morphism");
    return induced;
}

// ---------------------------------------------------------------------------
// Stable hom dimensions.
// ---------------------------------------------------------------------------

// dim of Hom(M, N) modulo maps factoring through a projective
// (equivalently, through the projective cover of N).
inline int stable_hom_dim_mod_proj(const Representation& m, const Representation& n) {
    std::vector<ModuleMap> hom = hom_space(m, n);
    if (hom.empty()) return 0;
    ProjCover cov = projective_cover(n);
    std::vector<ModuleMap> through = hom_space(m, cov.p.rep);
    std::vector<Vec> rows;
    for (const ModuleMap& g : through) rows.push_back(flatten_map(compose(g, cov.onto)));
    int amb = int(flatten_map(hom[0]).size());
    return int(hom.size()) - rank(mat_from_rows(rows, amb));
}

// dim of Hom(M, N) modulo maps factoring through an injective
// (equivalently, through the injective envelope of M).
inline int stable_hom_dim_mod_inj(const Representation& m, const Representation& n) {
    std::vector<ModuleMap> hom = hom_space(m, n);
    if (hom.empty()) return 0;
    InjCopresentation cop = min_inj_copresentation(m);
    std::vector<ModuleMap> through = hom_space(cop.i0, n);
    std::vector<Vec> rows;
    for (const ModuleMap& g : through) rows.push_back(flatten_map(compose(cop.into, g)));
    int amb = int(flatten_map(hom[0]).size());
    return int(hom.size()) - rank(mat_from_rows(rows, amb));
}

// ---------------------------------------------------------------------------
// All indecomposables of a Dynkin-quiver hereditary algebra, knitted as the
// tau^{-1}-orbits of the indecomposable projectives.  Deterministic order:
// by projective, then by power of tau^{-1}; deduplication by dimension
// vector, which identifies indecomposables uniquely in Dynkin type.
// ---------------------------------------------------------------------------
inline std::vector<Representation> knit_indecomposables(const AlgebraContext& ctx) {
    if (!is_dynkin(ctx.quiver()))
        throw Error("indecomposable knitting requires a Dynkin quiver");
    if (!ctx.pa().pres.relations.empty())
        throw Error("indecomposable knitting requires a hereditary algebra");
    std::vector<Representation> out;
    std::set<std::vector<int>> seen;
    for (int v = 0; v < ctx.vertex_count(); ++v) {
        Representation cur = projective_module(ctx, v);
        while (!cur.is_zero()) {
            if (seen.insert(cur.dims).second) out.push_back(cur);
            cur = tau_inv(cur);
        }
    }
    return out;
}

}  // namespace qtilt
