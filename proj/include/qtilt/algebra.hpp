#pragma once

/*
 * Finite-dimensional algebras as explicit multiplication tables, plus the two
 * directions of the presentation dictionary:
 *
 *   algebra_from_presentation : admissible quiver presentation -> table
 *   extract_relations         : basic table algebra -> minimal presentation
 *
 * Quotients kQ/I are computed by pure degreewise linear algebra (no Groebner
 * machinery).  The ideal span is materialized inside the space of paths of
 * length <= L for a cap L that the construction grows until it can certify
 *   (1) every path of length N..L lies in the span (so J^N is inside I), and
 *   (2) L >= 2N + (longest relation term),
 * at which point the truncated computation is exact: any ideal element
 * supported below length N equals, modulo paths of length >= N (all dead by
 * (1)), a combination of products p*r*q with p, q shorter than N, and (2)
 * keeps every term of those products inside the enumerated window.  Failing
 * to certify within the hard cap raises the admissibility error.
 */

#include <qtilt/matrix.hpp>
#include <qtilt/quiver.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace qtilt {

// ---------------------------------------------------------------------------
// StructureAlgebra: a finite-dimensional associative algebra with a chosen
// basis, a full multiplication table, and a complete set of primitive
// orthogonal idempotents (each an index set into the basis).  Optional
// per-basis grading (degree 0/1) and (row, col) block tags record the
// matrix-algebra shape of the constructions that produce them.
// ---------------------------------------------------------------------------
struct StructureAlgebra {
    int dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<Vec>> table;  // table[i][j] = coords of b_i * b_j
    std::vector<std::vector<int>> idempotents;
    std::vector<std::string> idempotent_labels;
    std::vector<int> grading;                    // empty = ungraded
    std::vector<std::pair<int, int>> blocks;     // empty = untagged

    Vec zero() const { return Vec(dim); }

    Vec basis_vec(int i) const {
        Vec v(dim);
        v[i] = 1;
        return v;
    }

    Vec idempotent_element(int s) const {
        Vec v(dim);
        for (int i : idempotents[s]) v[i] = 1;
        return v;
    }

    Vec unit() const {
        Vec v(dim);
        for (const auto& e : idempotents)
            for (int i : e) v[i] = 1;
        return v;
    }

    Vec multiply(const Vec& x, const Vec& y) const {
        Vec r(dim);
        for (int i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim; ++j) {
                if (y[j] == 0) continue;
                const Vec& t = table[i][j];
                Rat c = x[i] * y[j];
                for (int m = 0; m < dim; ++m)
                    if (t[m] != 0) r[m] += c * t[m];
            }
        }
        return r;
    }

    // Matrix of left multiplication by x in column semantics:
    // coords(x*y) = L(x) * coords(y).
    Mat left_mult(const Vec& x) const {
        Mat l(dim, dim);
        for (int j = 0; j < dim; ++j) {
            Vec col = multiply(x, basis_vec(j));
            for (int i = 0; i < dim; ++i) l.at(i, j) = col[i];
        }
        return l;
    }
};

// Exhaustive construction-time checks: associativity on all basis triples,
// idempotent completeness/orthogonality, and consistency of grading and
// block tags with the table.
inline void validate_structure(const StructureAlgebra& a) {
    if (int(a.basis_labels.size()) != a.dim || int(a.table.size()) != a.dim)
        throw Error("structure algebra: table shape mismatch");
    for (const auto& row : a.table) {
        if (int(row.size()) != a.dim) throw Error("structure algebra: table shape mismatch");
        for (const Vec& v : row)
            if (int(v.size()) != a.dim) throw Error("structure algebra: table shape mismatch");
    }
    if (!a.grading.empty() && int(a.grading.size()) != a.dim)
        throw Error("structure algebra: grading length mismatch");
    if (!a.blocks.empty() && int(a.blocks.size()) != a.dim)
        throw Error("structure algebra: block tag length mismatch");

    // Associativity, (b_i b_j) b_k == b_i (b_j b_k), via the table only.
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            const Vec& ij = a.table[i][j];
            for (int k = 0; k < a.dim; ++k) {
                Vec lhs(a.dim), rhs(a.dim);
                for (int m = 0; m < a.dim; ++m) {
                    if (ij[m] != 0)
                        for (int t = 0; t < a.dim; ++t) lhs[t] += ij[m] * a.table[m][k][t];
                    if (a.table[j][k][m] != 0)
                        for (int t = 0; t < a.dim; ++t) rhs[t] += a.table[j][k][m] * a.table[i][m][t];
                }
                if (lhs != rhs)
                    throw Error("structure algebra: associativity fails on basis triple (" +
                                a.basis_labels[i] + ", " + a.basis_labels[j] + ", " +
                                a.basis_labels[k] + ")");
            }
        }

    // Idempotents: orthogonal, idempotent, summing to a two-sided unit.
    if (a.idempotents.empty()) throw Error("structure algebra: no idempotents recorded");
    for (size_t s = 0; s < a.idempotents.size(); ++s)
        for (size_t t = 0; t < a.idempotents.size(); ++t) {
            Vec p = a.multiply(a.idempotent_element(int(s)), a.idempotent_element(int(t)));
            Vec want = (s == t) ? a.idempotent_element(int(s)) : a.zero();
            if (p != want) throw Error("structure algebra: idempotents not orthogonal");
        }
    Vec one = a.unit();
    for (int i = 0; i < a.dim; ++i) {
        if (a.multiply(one, a.basis_vec(i)) != a.basis_vec(i) ||
            a.multiply(a.basis_vec(i), one) != a.basis_vec(i))
            throw Error("structure algebra: idempotents do not sum to a unit");
    }

    // Grading: degree-1 times degree-1 vanishes, and products are homogeneous.
    if (!a.grading.empty()) {
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                int d = a.grading[i] + a.grading[j];
                const Vec& p = a.table[i][j];
                for (int m = 0; m < a.dim; ++m) {
                    if (p[m] == 0) continue;
                    if (d >= 2) throw Error("structure algebra: degree-2 product not zero");
                    if (a.grading[m] != d)
                        throw Error("structure algebra: product not degree-homogeneous");
                }
            }
    }

    // Block tags: products compose like matrix entries (row = source side).
    if (!a.blocks.empty()) {
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                const Vec& p = a.table[i][j];
                bool composable = a.blocks[i].second == a.blocks[j].first;
                for (int m = 0; m < a.dim; ++m) {
                    if (p[m] == 0) continue;
                    if (!composable)
                        throw Error("structure algebra: non-composable blocks multiply nonzero");
                    if (a.blocks[m] != std::make_pair(a.blocks[i].first, a.blocks[j].second))
                        throw Error("structure algebra: product lands in the wrong block");
                }
            }
    }
}

// ---------------------------------------------------------------------------
// Jacobson radical via the trace form of the regular representation (exact
// over Q): rad A = { x : tr(L_{xy}) = 0 for all y }.  The nilpotency of the
// computed span is verified, and the nilpotency index is a byproduct.
// ---------------------------------------------------------------------------
inline std::vector<Vec> radical_basis(const StructureAlgebra& a) {
    Vec tr(a.dim);
    for (int m = 0; m < a.dim; ++m) {
        for (int j = 0; j < a.dim; ++j) tr[m] += a.table[m][j][j];
    }
    Mat g(a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Rat s = 0;
            const Vec& t = a.table[i][j];
            for (int m = 0; m < a.dim; ++m)
                if (t[m] != 0) s += t[m] * tr[m];
            g.at(i, j) = s;
        }
    std::vector<Vec> rad = kernel_basis(g);

    // Nilpotency check: powers of the span must reach zero.
    Mat power = mat_from_rows(rad, a.dim);
    Mat radm = power;
    for (int step = 0; step < a.dim + 1 && power.rows() != 0; ++step) {
        std::vector<Vec> next;
        for (int i = 0; i < power.rows(); ++i)
            for (int j = 0; j < radm.rows(); ++j)
                next.push_back(a.multiply(power.row(i), radm.row(j)));
        Mat nm = row_basis(mat_from_rows(next, a.dim));
        if (nm.rows() >= power.rows() && nm.rows() != 0 && step == a.dim)
            throw Error("radical candidate is not nilpotent");
        power = nm;
    }
    if (power.rows() != 0) throw Error("radical candidate is not nilpotent");
    return rad;
}

// dim rad^k for k = 1.. until the power vanishes.
inline std::vector<int> radical_filtration(const StructureAlgebra& a) {
    std::vector<Vec> rad = radical_basis(a);
    Mat radm = mat_from_rows(rad, a.dim);
    Mat power = radm;
    std::vector<int> dims;
    while (power.rows() != 0) {
        dims.push_back(power.rows());
        std::vector<Vec> next;
        for (int i = 0; i < power.rows(); ++i)
            for (int j = 0; j < radm.rows(); ++j)
                next.push_back(a.multiply(power.row(i), radm.row(j)));
        power = row_basis(mat_from_rows(next, a.dim));
    }
    return dims;
}

namespace detail {

// e_s * x * e_t for coordinate vectors.
inline Vec peirce_project(const StructureAlgebra& a, int s, int t, const Vec& x) {
    return a.multiply(a.idempotent_element(s), a.multiply(x, a.idempotent_element(t)));
}

// Per-(s,t) bases of rad and rad^2, shared by the Gabriel quiver and the
// relation extraction.
struct RadicalLayers {
    std::vector<Vec> rad;
    std::vector<std::vector<Mat>> rad_st;    // row bases
    std::vector<std::vector<Mat>> rad2_st;
    int nilpotency = 1;  // smallest n with rad^n = 0
};

inline RadicalLayers radical_layers(const StructureAlgebra& a) {
    RadicalLayers out;
    out.rad = radical_basis(a);
    std::vector<int> filt = radical_filtration(a);
    out.nilpotency = int(filt.size()) + 1;

    Mat radm = mat_from_rows(out.rad, a.dim);
    std::vector<Vec> sq;
    for (int i = 0; i < radm.rows(); ++i)
        for (int j = 0; j < radm.rows(); ++j) sq.push_back(a.multiply(radm.row(i), radm.row(j)));
    Mat rad2 = mat_from_rows(sq, a.dim);

    int n = int(a.idempotents.size());
    out.rad_st.assign(n, std::vector<Mat>(n));
    out.rad2_st.assign(n, std::vector<Mat>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            std::vector<Vec> pr, pr2;
            for (int i = 0; i < radm.rows(); ++i) pr.push_back(peirce_project(a, s, t, radm.row(i)));
            for (int i = 0; i < rad2.rows(); ++i) pr2.push_back(peirce_project(a, s, t, rad2.row(i)));
            out.rad_st[s][t] = row_basis(mat_from_rows(pr, a.dim));
            out.rad2_st[s][t] = row_basis(mat_from_rows(pr2, a.dim));
        }
    return out;
}

inline std::string generated_arrow_label(int counter) {
    static const char* letters = "abcdefghijklmnopqrstuvwxyz";
    if (counter < 26) return std::string(1, letters[counter]);
    return std::string(1, letters[counter % 26]) + std::to_string(counter / 26);
}

}  // namespace detail

// Gabriel quiver of a basic algebra: one vertex per idempotent, and
// dim e_s (rad/rad^2) e_t arrows s -> t.  Arrow labels are generated
// deterministically in (s, t) order.
inline Quiver gabriel_quiver(const StructureAlgebra& a) {
    detail::RadicalLayers layers = detail::radical_layers(a);
    Quiver q;
    q.vertices = a.idempotent_labels;
    int n = int(a.idempotents.size());
    int counter = 0;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            int k = layers.rad_st[s][t].rows() - layers.rad2_st[s][t].rows();
            for (int i = 0; i < k; ++i)
                q.arrows.push_back({detail::generated_arrow_label(counter++), s, t});
        }
    q.validate();
    return q;
}

// A presentation extracted from a table algebra, bundled with the data the
// extraction produces along the way.
struct ExtractedPresentation {
    QuiverPresentation pres;
    std::vector<Vec> arrow_lifts;                       // element of a per arrow
    std::vector<std::pair<int, int>> relation_degree_dims;  // (degree, #minimal generators)
    int nilpotency_bound = 1;
};

// Minimal admissible presentation of a basic algebra: arrows lift a basis of
// rad/rad^2, the kernel of the induced surjection kQ' -> a is computed
// degreewise, and minimal generators are the complement of the subideal
// generated below the current degree.
inline ExtractedPresentation extract_relations(const StructureAlgebra& a) {
    detail::RadicalLayers layers = detail::radical_layers(a);
    const int n = int(a.idempotents.size());
    const int nilp = layers.nilpotency;

    ExtractedPresentation out;
    out.nilpotency_bound = nilp;
    Quiver& q = out.pres.quiver;
    q.vertices = a.idempotent_labels;
    int counter = 0;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            Mat lifts = row_complement(layers.rad2_st[s][t], layers.rad_st[s][t]);
            for (int i = 0; i < lifts.rows(); ++i) {
                q.arrows.push_back({detail::generated_arrow_label(counter++), s, t});
                out.arrow_lifts.push_back(lifts.row(i));
            }
        }
    q.validate();

    // phi evaluates paths of the new quiver inside a.
    std::vector<Path> paths = paths_up_to(q, nilp);
    std::map<Path, Vec> phi;
    for (const Path& p : paths) {
        if (p.length() == 0) {
            phi[p] = a.idempotent_element(p.src);
            continue;
        }
        Path prefix = p;
        prefix.arrows.pop_back();
        prefix.tgt = prefix.arrows.empty() ? prefix.src : q.arrows[prefix.arrows.back()].tgt;
        phi[p] = a.multiply(phi.at(prefix), out.arrow_lifts[p.arrows.back()]);
    }

    // Per-block path lists, refreshed per degree.
    auto block_paths = [&](int s, int t, int maxlen) {
        std::vector<Path> list;
        for (const Path& p : paths)
            if (p.src == s && p.tgt == t && p.length() <= maxlen) list.push_back(p);
        return list;
    };

    // Kernel bases per block and degree; kernels[d][{s,t}] has vectors over
    // block_paths(s, t, d).
    std::map<std::pair<int, int>, std::vector<Vec>> prev_kernel;

    for (int d = 2; d <= nilp; ++d) {
        std::map<std::pair<int, int>, std::vector<Vec>> kernel_d;
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                std::vector<Path> cols = block_paths(s, t, d);
                if (cols.empty()) continue;
                Mat m(a.dim, int(cols.size()));
                for (size_t c = 0; c < cols.size(); ++c) {
                    const Vec& v = phi.at(cols[c]);
                    for (int r = 0; r < a.dim; ++r) m.at(r, int(c)) = v[r];
                }
                std::vector<Vec> ker = kernel_basis(m);
                if (!ker.empty()) kernel_d[{s, t}] = std::move(ker);
            }

        // Subideal generated by kernels of lower degree: all p * x * q whose
        // longest term stays within degree d.
        std::map<std::pair<int, int>, std::vector<Vec>> generated;
        for (const auto& [st, kers] : prev_kernel) {
            auto [ks, kt] = st;
            std::vector<Path> kcols = block_paths(ks, kt, d - 1);
            for (const Vec& x : kers) {
                int xmax = 0;
                for (size_t c = 0; c < kcols.size(); ++c)
                    if (c < x.size() && x[c] != 0) xmax = std::max(xmax, kcols[c].length());
                for (const Path& p : paths) {
                    if (p.tgt != ks || p.length() + xmax > d) continue;
                    for (const Path& qq : paths) {
                        if (qq.src != kt || p.length() + xmax + qq.length() > d) continue;
                        std::vector<Path> tcols = block_paths(p.src, qq.tgt, d);
                        Vec v(tcols.size());
                        for (size_t c = 0; c < kcols.size(); ++c) {
                            if (c >= x.size() || x[c] == 0) continue;
                            Path prod = compose_paths(compose_paths(p, kcols[c]), qq);
                            auto it = std::find(tcols.begin(), tcols.end(), prod);
                            if (it == tcols.end()) throw Error("relation extraction: missing path");
                            v[it - tcols.begin()] += x[c];
                        }
                        generated[{p.src, qq.tgt}].push_back(std::move(v));
                    }
                }
            }
        }

        // New minimal generators at this degree (deterministic block order).
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                auto it = kernel_d.find({s, t});
                if (it == kernel_d.end()) continue;
                std::vector<Path> cols = block_paths(s, t, d);
                Mat gen(0, int(cols.size()));
                if (auto g = generated.find({s, t}); g != generated.end())
                    gen = row_basis(mat_from_rows(g->second, int(cols.size())));
                Mat fresh = row_complement(gen, mat_from_rows(it->second, int(cols.size())));
                for (int r = 0; r < fresh.rows(); ++r) {
                    Relation rel;
                    Rat lead = 0;
                    for (size_t c = 0; c < cols.size(); ++c) {
                        Rat coeff = fresh.at(r, int(c));
                        if (coeff == 0) continue;
                        if (cols[c].length() < 2)
                            throw Error("relation extraction: kernel met the radical basis");
                        if (lead == 0) lead = coeff;
                        rel.terms.emplace_back(coeff, cols[c]);
                    }
                    for (auto& [c, p] : rel.terms) c /= lead;  // leading coefficient 1
                    out.pres.relations.push_back(std::move(rel));
                    if (!out.relation_degree_dims.empty() &&
                        out.relation_degree_dims.back().first == d)
                        out.relation_degree_dims.back().second += 1;
                    else
                        out.relation_degree_dims.emplace_back(d, 1);
                }

                // Grow the running kernel: the degree-d kernel subsumes the
                // lower one once embedded, so just store it.
                prev_kernel[{s, t}] = it->second;
            }
    }

    out.pres.validate();
    return out;
}

// ---------------------------------------------------------------------------
// Structural fingerprint: dimension, vertex count, arrow-count matrix,
// per-degree minimal relation counts, radical filtration.  Comparison
// canonicalizes the arrow matrix over vertex permutations, since extracted
// presentations label vertices in construction order.
// ---------------------------------------------------------------------------
struct StructuralSignature {
    int dim = 0;
    int vertex_count = 0;
    std::vector<std::vector<int>> arrow_counts;
    std::vector<std::pair<int, int>> relation_degree_dims;
    std::vector<int> radical_filtration_dims;

    std::string to_string() const {
        std::string s = "dim=" + std::to_string(dim) + " vertices=" + std::to_string(vertex_count);
        s += " arrows=[";
        for (int r = 0; r < vertex_count; ++r)
            for (int c = 0; c < vertex_count; ++c)
                s += std::to_string(arrow_counts[r][c]) + (r == vertex_count - 1 && c == vertex_count - 1 ? "" : " ");
        s += "] relations=[";
        for (size_t i = 0; i < relation_degree_dims.size(); ++i)
            s += (i ? " " : "") + std::to_string(relation_degree_dims[i].first) + ":" +
                 std::to_string(relation_degree_dims[i].second);
        s += "] radical=[";
        for (size_t i = 0; i < radical_filtration_dims.size(); ++i)
            s += (i ? " " : "") + std::to_string(radical_filtration_dims[i]);
        s += "]";
        return s;
    }
};

inline StructuralSignature structural_signature(const StructureAlgebra& a) {
    StructuralSignature sig;
    sig.dim = a.dim;
    sig.vertex_count = int(a.idempotents.size());
    ExtractedPresentation ex = extract_relations(a);
    sig.relation_degree_dims = ex.relation_degree_dims;
    sig.radical_filtration_dims = radical_filtration(a);
    sig.arrow_counts.assign(sig.vertex_count, std::vector<int>(sig.vertex_count, 0));
    for (const Arrow& ar : ex.pres.quiver.arrows) sig.arrow_counts[ar.src][ar.tgt] += 1;
    return sig;
}

// Lexicographically minimal arrow matrix over all vertex permutations.
inline std::vector<std::vector<int>> canonical_arrow_matrix(
    const std::vector<std::vector<int>>& m) {
    int n = int(m.size());
    if (n > 8) throw Error("canonical arrow matrix: too many vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> best;
    do {
        std::vector<std::vector<int>> cand(n, std::vector<int>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) cand[r][c] = m[perm[r]][perm[c]];
        if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool signatures_match(const StructuralSignature& a, const StructuralSignature& b) {
    return a.dim == b.dim && a.vertex_count == b.vertex_count &&
           a.relation_degree_dims == b.relation_degree_dims &&
           a.radical_filtration_dims == b.radical_filtration_dims &&
           canonical_arrow_matrix(a.arrow_counts) == canonical_arrow_matrix(b.arrow_counts);
}

// ---------------------------------------------------------------------------
// algebra_from_presentation: the path-algebra quotient with its normal-form
// path basis and multiplication table, plus the lookup structure the module
// categories are built on.
// ---------------------------------------------------------------------------
struct PathAlgebraOptions {
    int length_cap = 40;   // hard ceiling for the certification loop
    bool validate = true;  // exhaustive table checks at construction
};

struct PathAlgebra {
    QuiverPresentation pres;
    int nilpotency_bound = 1;          // smallest N with J^N inside I
    std::vector<Path> basis;           // normal-form paths, length < N
    std::vector<int> basis_src, basis_tgt;
    std::vector<int> arrow_basis;      // basis index of each arrow
    std::vector<int> vertex_basis;     // basis index of each trivial path
    StructureAlgebra alg;
    std::vector<std::vector<std::vector<int>>> peirce;  // [s][t] -> basis indices

    int vertex_count() const { return pres.quiver.vertex_count(); }

    // Normal form of an arbitrary enumerated path; zero vector when the path
    // dies in the quotient.
    Vec normal_form(const Path& p) const {
        auto it = path_col_.find(p);
        if (it == path_col_.end()) {
            // Paths beyond the enumeration window factor through J^N.
            if (p.length() >= nilpotency_bound) return alg.zero();
            throw Error("normal form requested for an unknown path");
        }
        return reduce_col_[it->second];
    }

    // Construction-time storage (reduction of every enumerated path).
    std::map<Path, int> path_col_;
    std::vector<Vec> reduce_col_;  // per enumerated path: coords over basis
};

inline PathAlgebra algebra_from_presentation(const QuiverPresentation& pres,
                                             const PathAlgebraOptions& opts = {}) {
    pres.validate();
    const Quiver& q = pres.quiver;

    int rel_max = 0;
    for (const Relation& r : pres.relations) rel_max = std::max(rel_max, r.max_length());

    int cap = std::max(4, rel_max + 2);
    std::vector<Path> paths;
    std::map<Path, int> col_of;
    Echelon span;
    int nilp = -1;

    while (true) {
        paths = paths_up_to(q, cap);
        col_of.clear();
        for (size_t i = 0; i < paths.size(); ++i) col_of[paths[i]] = int(i);

        // Ideal span: every p * r * q whose longest term fits under the cap.
        std::vector<Vec> rows;
        for (const Relation& r : pres.relations) {
            int rmax = r.max_length();
            int rs = r.terms[0].second.src, rt = r.terms[0].second.tgt;
            for (const Path& p : paths) {
                if (p.tgt != rs || p.length() + rmax > cap) continue;
                for (const Path& qq : paths) {
                    if (qq.src != rt || p.length() + rmax + qq.length() > cap) continue;
                    Vec v(paths.size());
                    for (const auto& [c, term] : r.terms)
                        v[col_of.at(compose_paths(compose_paths(p, term), qq))] += c;
                    rows.push_back(std::move(v));
                }
            }
        }
        span = echelon_form(mat_from_rows(rows, int(paths.size())));

        // Membership of unit path vectors: reduce against the span.
        auto path_in_span = [&](int col) {
            Vec v(paths.size());
            v[col] = 1;
            for (int i = 0; i < span.rank; ++i) {
                Rat c = v[span.pivots[i]];
                if (c == 0) continue;
                for (int j = span.pivots[i]; j < int(paths.size()); ++j)
                    v[j] -= c * span.rref.at(i, j);
            }
            for (const Rat& x : v)
                if (x != 0) return false;
            return true;
        };

        // Smallest N such that every path of length N..cap is in the span.
        std::vector<bool> len_dead(cap + 1, true);
        for (size_t i = 0; i < paths.size(); ++i)
            if (paths[i].length() >= 1 && !path_in_span(int(i))) len_dead[paths[i].length()] = false;
        nilp = -1;
        for (int nlen = cap; nlen >= 1; --nlen) {
            if (!len_dead[nlen]) break;
            nilp = nlen;
        }

        if (nilp > 0 && cap >= 2 * nilp + rel_max) break;
        int next = nilp > 0 ? std::max(2 * nilp + rel_max, cap + 1) : 2 * cap;
        if (next > opts.length_cap)
            throw Error("arrow ideal not nilpotent modulo relations up to the length cap");
        cap = next;
    }

    PathAlgebra pa;
    pa.pres = pres;
    pa.nilpotency_bound = nilp;

    // Basis: non-pivot columns of length < N.  All pivot columns of the span
    // have length >= 2 (relation terms do), so trivial paths and arrows are
    // always basis elements, as admissibility demands.
    std::vector<bool> is_pivot(paths.size(), false);
    for (int p : span.pivots) is_pivot[p] = true;
    std::vector<int> col_to_basis(paths.size(), -1);
    for (size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].length() >= nilp || is_pivot[i]) continue;
        col_to_basis[i] = int(pa.basis.size());
        pa.basis.push_back(paths[i]);
    }
    const int dim = int(pa.basis.size());

    // Reduction of every enumerated path to basis coordinates.
    pa.path_col_ = col_of;
    pa.reduce_col_.assign(paths.size(), Vec(dim));
    for (size_t i = 0; i < paths.size(); ++i) {
        Vec v(paths.size());
        v[int(i)] = 1;
        for (int r = 0; r < span.rank; ++r) {
            Rat c = v[span.pivots[r]];
            if (c == 0) continue;
            for (int j = span.pivots[r]; j < int(paths.size()); ++j)
                v[j] -= c * span.rref.at(r, j);
        }
        Vec coords(dim);
        for (size_t j = 0; j < paths.size(); ++j) {
            if (v[j] == 0) continue;
            if (col_to_basis[j] < 0) {
                if (paths[j].length() < nilp)
                    throw Error("path reduction escaped the basis");  // cannot happen
                continue;  // tail in J^N, dead
            }
            coords[col_to_basis[j]] = v[j];
        }
        pa.reduce_col_[i] = std::move(coords);
    }

    // Assemble the table algebra.
    StructureAlgebra& alg = pa.alg;
    alg.dim = dim;
    for (const Path& p : pa.basis) {
        alg.basis_labels.push_back(path_to_string(q, p));
        pa.basis_src.push_back(p.src);
        pa.basis_tgt.push_back(p.tgt);
    }
    alg.table.assign(dim, std::vector<Vec>(dim, Vec(dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (pa.basis[i].tgt != pa.basis[j].src) continue;
            Path prod = compose_paths(pa.basis[i], pa.basis[j]);
            auto it = col_of.find(prod);
            if (it == col_of.end()) continue;  // beyond the window: inside J^N
            alg.table[i][j] = pa.reduce_col_[it->second];
        }
    pa.arrow_basis.assign(q.arrows.size(), -1);
    pa.vertex_basis.assign(q.vertex_count(), -1);
    for (int i = 0; i < dim; ++i) {
        const Path& p = pa.basis[i];
        if (p.length() == 0) pa.vertex_basis[p.src] = i;
        if (p.length() == 1) pa.arrow_basis[p.arrows[0]] = i;
    }
    for (int v = 0; v < q.vertex_count(); ++v) {
        alg.idempotents.push_back({pa.vertex_basis[v]});
        alg.idempotent_labels.push_back(q.vertices[v]);
    }
    pa.peirce.assign(q.vertex_count(),
                     std::vector<std::vector<int>>(q.vertex_count()));
    for (int i = 0; i < dim; ++i) pa.peirce[pa.basis_src[i]][pa.basis_tgt[i]].push_back(i);

    if (opts.validate) validate_structure(alg);
    return pa;
}

}  // namespace qtilt
