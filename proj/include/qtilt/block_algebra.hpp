#pragma once

/*
 * Assembly of a StructureAlgebra from block data: a family of "parts" (one
 * primitive idempotent each), class-space dimensions for every (source part,
 * target part) block, a composition callback on class coordinates, and the
 * coordinates of each identity.  Used for endomorphism algebras of module
 * sums, of two-term complexes, and for the extension algebras built on top of
 * them.
 *
 * Inside each diagonal block the basis is changed so that the identity class
 * is the first basis vector; this makes every idempotent a single basis
 * element.  Off-diagonal blocks keep their unit class bases.
 */

#include <qtilt/algebra.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qtilt {

struct BlockAlgebraSpec {
    std::vector<std::string> part_labels;
    std::vector<std::vector<int>> block_dims;  // [s][t]
    // compose(s, t, w, u, v): class coordinates of (u in block (s,t)) then
    // (v in block (t,w)), expressed in block (s,w).
    std::function<Vec(int, int, int, const Vec&, const Vec&)> compose;
    std::vector<Vec> identity;                 // coords of id_s in block (s,s)
    // Optional: degree of each class coordinate of each block (blocks may mix
    // degrees).  Diagonal identities must be degree-homogeneous.
    std::vector<std::vector<std::vector<int>>> elem_degree;
    std::vector<int> part_group;               // optional: (row,col) tags from groups
};

struct BlockAlgebra {
    StructureAlgebra alg;
    // basis_of[s][t]: global indices of block (s,t)'s basis elements, and
    // block_basis[s][t]: their class-coordinate rows (identity-first on the
    // diagonal).
    std::vector<std::vector<std::vector<int>>> basis_of;
    std::vector<std::vector<Mat>> block_basis;

    int block_dim(int s, int t) const { return int(basis_of[s][t].size()); }

    // Global coordinates of a class vector living in block (s,t).
    Vec embed(int s, int t, const Vec& cls) const {
        auto x = express_rows(mat_from_rows({cls}, block_basis[s][t].cols()),
                              block_basis[s][t]);
        if (!x) throw Error("block algebra: class outside the block basis");
        Vec out(alg.dim);
        for (size_t k = 0; k < basis_of[s][t].size(); ++k)
            out[basis_of[s][t][k]] = x->at(0, int(k));
        return out;
    }
};

inline BlockAlgebra assemble_block_algebra(const BlockAlgebraSpec& spec, bool validate = true) {
    const int parts = int(spec.part_labels.size());
    BlockAlgebra out;
    out.basis_of.assign(parts, std::vector<std::vector<int>>(parts));
    out.block_basis.assign(parts, std::vector<Mat>(parts));

    StructureAlgebra& a = out.alg;
    std::vector<std::pair<int, int>> elem_block;  // block of each basis element

    for (int s = 0; s < parts; ++s)
        for (int t = 0; t < parts; ++t) {
            int bd = spec.block_dims[s][t];
            Mat rows(0, bd);
            if (s == t) {
                if (int(spec.identity[s].size()) != bd)
                    throw Error("block algebra: identity coordinate length mismatch");
                Mat idrow = mat_from_rows({spec.identity[s]}, bd);
                if (idrow.is_zero()) throw Error("block algebra: zero identity class");
                rows = vstack(idrow, row_complement(idrow, Mat::identity(bd)));
            } else if (bd > 0) {
                rows = Mat::identity(bd);
            }
            out.block_basis[s][t] = rows;
            for (int k = 0; k < rows.rows(); ++k) {
                out.basis_of[s][t].push_back(a.dim);
                std::string label;
                if (s == t && k == 0) {
                    label = "e(" + spec.part_labels[s] + ")";
                } else {
                    label = spec.part_labels[s] + "->" + spec.part_labels[t] + "[" +
                            std::to_string(s == t ? k - 1 : k) + "]";
                }
                a.basis_labels.push_back(label);
                elem_block.emplace_back(s, t);
                if (!spec.elem_degree.empty()) {
                    const std::vector<int>& dg = spec.elem_degree[s][t];
                    if (int(dg.size()) != bd)
                        throw Error("block algebra: elem_degree size mismatch");
                    std::optional<int> deg;
                    for (int c = 0; c < bd; ++c) {
                        if (rows.at(k, c) == 0) continue;
                        if (deg && *deg != dg[c])
                            throw Error("block algebra: basis class mixes degrees");
                        deg = dg[c];
                    }
                    a.grading.push_back(deg.value_or(0));
                }
                if (!spec.part_group.empty())
                    a.blocks.emplace_back(spec.part_group[s], spec.part_group[t]);
                a.dim += 1;
            }
        }

    a.table.assign(a.dim, std::vector<Vec>(a.dim, Vec(a.dim)));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            auto [s, t] = elem_block[i];
            auto [t2, w] = elem_block[j];
            if (t != t2) continue;
            int ki = i - out.basis_of[s][t][0];
            int kj = j - out.basis_of[t][w][0];
            Vec c = spec.compose(s, t, w, out.block_basis[s][t].row(ki),
                                 out.block_basis[t][w].row(kj));
            if (int(c.size()) != spec.block_dims[s][w])
                throw Error("block algebra: composition returned wrong block size");
            bool nonzero = false;
            for (const Rat& x : c)
                if (x != 0) nonzero = true;
            if (nonzero) a.table[i][j] = out.embed(s, w, c);
        }

    for (int s = 0; s < parts; ++s) {
        a.idempotents.push_back({out.basis_of[s][s][0]});
        a.idempotent_labels.push_back(spec.part_labels[s]);
    }
    if (validate) validate_structure(a);
    return out;
}

}  // namespace qtilt
