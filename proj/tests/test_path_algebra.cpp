#include <catch2/catch_amalgamated.hpp>
#include <qtilt/algebra.hpp>

#include <algorithm>

using namespace qtilt;

namespace {

QuiverPresentation star_quiver() {
    // 1 -a-> 3, 2 -b-> 3, 3 -c-> 4 (underlying graph D4).
    QuiverPresentation p;
    p.quiver.vertices = {"1", "2", "3", "4"};
    p.quiver.arrows = {{"a", 0, 2}, {"b", 1, 2}, {"c", 2, 3}};
    return p;
}

QuiverPresentation linear_a3(bool with_relation) {
    QuiverPresentation p;
    p.quiver.vertices = {"1", "2", "3"};
    p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    if (with_relation) {
        Relation r;
        r.terms.emplace_back(1, Path{0, 2, {0, 1}});
        p.relations.push_back(r);
    }
    return p;
}

QuiverPresentation cyclic_a3(bool rad_square_zero) {
    QuiverPresentation p;
    p.quiver.vertices = {"1", "2", "3"};
    p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
    if (rad_square_zero) {
        auto rel = [](int a1, int a2, int s, int t) {
            Relation r;
            r.terms.emplace_back(1, Path{s, t, {a1, a2}});
            return r;
        };
        p.relations.push_back(rel(0, 1, 0, 2));
        p.relations.push_back(rel(1, 2, 1, 0));
        p.relations.push_back(rel(2, 0, 2, 1));
    }
    return p;
}

int basis_index_of_path(const PathAlgebra& pa, const Path& p) {
    for (size_t i = 0; i < pa.basis.size(); ++i)
        if (pa.basis[i] == p) return int(i);
    return -1;
}

}  // namespace

TEST_CASE("path basis of the star quiver") {
    PathAlgebra pa = algebra_from_presentation(star_quiver());
    // 4 trivial paths, 3 arrows, and the two length-2 paths a c and b c.
    CHECK(pa.alg.dim == 9);
    CHECK(pa.nilpotency_bound == 3);

    int ac = basis_index_of_path(pa, Path{0, 3, {0, 2}});
    int bc = basis_index_of_path(pa, Path{1, 3, {1, 2}});
    REQUIRE(ac >= 0);
    REQUIRE(bc >= 0);

    // a * c is the composed path; c * a does not compose (tgt c != src a).
    Vec prod = pa.alg.multiply(pa.alg.basis_vec(pa.arrow_basis[0]),
                               pa.alg.basis_vec(pa.arrow_basis[2]));
    CHECK(prod == pa.alg.basis_vec(ac));
    Vec dead = pa.alg.multiply(pa.alg.basis_vec(pa.arrow_basis[2]),
                               pa.alg.basis_vec(pa.arrow_basis[0]));
    CHECK(dead == pa.alg.zero());

    // Unit and idempotents.
    for (int i = 0; i < pa.alg.dim; ++i) {
        Vec b = pa.alg.basis_vec(i);
        CHECK(pa.alg.multiply(pa.alg.unit(), b) == b);
        CHECK(pa.alg.multiply(b, pa.alg.unit()) == b);
    }

    // Peirce blocks partition the basis: block (s, t) holds paths s -> t.
    int covered = 0;
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
            for (int i : pa.peirce[s][t]) {
                CHECK(pa.basis[i].src == s);
                CHECK(pa.basis[i].tgt == t);
                ++covered;
            }
    CHECK(covered == pa.alg.dim);
}

TEST_CASE("monomial relation cuts the quotient basis") {
    PathAlgebra pa = algebra_from_presentation(linear_a3(true));
    CHECK(pa.alg.dim == 5);  // e1 e2 e3 a b, path ab killed
    // In the quotient a * b = 0.
    Vec prod = pa.alg.multiply(pa.alg.basis_vec(pa.arrow_basis[0]),
                               pa.alg.basis_vec(pa.arrow_basis[1]));
    CHECK(prod == pa.alg.zero());
    // Without the relation the path survives.
    PathAlgebra free = algebra_from_presentation(linear_a3(false));
    CHECK(free.alg.dim == 6);
}

TEST_CASE("cyclic quiver without relations is rejected") {
    CHECK_THROWS_AS(algebra_from_presentation(cyclic_a3(false)), Error);
    // With rad^2 = 0 it is a perfectly good 6-dimensional algebra.
    PathAlgebra pa = algebra_from_presentation(cyclic_a3(true));
    CHECK(pa.alg.dim == 6);
    CHECK(pa.nilpotency_bound == 2);
}

TEST_CASE("presentation extraction round-trips") {
    for (const QuiverPresentation& pres :
         {star_quiver(), linear_a3(true), cyclic_a3(true)}) {
        PathAlgebra pa = algebra_from_presentation(pres);
        ExtractedPresentation ep = extract_relations(pa.alg);
        CHECK(ep.pres.quiver.vertex_count() == pres.quiver.vertex_count());
        CHECK(ep.pres.quiver.arrows.size() == pres.quiver.arrows.size());
        CHECK(ep.pres.relations.size() == pres.relations.size());
        // Rebuilding from the extracted presentation gives the same dimension
        // and the same structural signature.
        PathAlgebra back = algebra_from_presentation(ep.pres);
        CHECK(back.alg.dim == pa.alg.dim);
        CHECK(signatures_match(structural_signature(back.alg), structural_signature(pa.alg)));
    }
}

TEST_CASE("extraction reports minimal generator degrees") {
    PathAlgebra one = algebra_from_presentation(linear_a3(true));
    ExtractedPresentation e1 = extract_relations(one.alg);
    REQUIRE(e1.relation_degree_dims.size() == 1);
    CHECK(e1.relation_degree_dims[0] == std::make_pair(2, 1));

    PathAlgebra cyc = algebra_from_presentation(cyclic_a3(true));
    ExtractedPresentation e2 = extract_relations(cyc.alg);
    REQUIRE(e2.relation_degree_dims.size() == 1);
    CHECK(e2.relation_degree_dims[0] == std::make_pair(2, 3));
}

TEST_CASE("signatures are relabeling-invariant and separate algebras") {
    // The same star algebra with permuted vertex order and renamed arrows.
    QuiverPresentation q2;
    q2.quiver.vertices = {"x", "y", "z", "w"};
    q2.quiver.arrows = {{"u", 2, 1}, {"v", 1, 0}, {"t", 3, 1}};
    // x<-v y<-u z, w -t-> y: out-neighbors y->x, z->y, w->y: same shape as the
    // star (two sources into a middle vertex, middle into a sink) up to names.
    PathAlgebra p1 = algebra_from_presentation(star_quiver());
    PathAlgebra p2 = algebra_from_presentation(q2);
    CHECK(signatures_match(structural_signature(p1.alg), structural_signature(p2.alg)));

    PathAlgebra other = algebra_from_presentation(linear_a3(true));
    CHECK_FALSE(signatures_match(structural_signature(p1.alg), structural_signature(other.alg)));
}

TEST_CASE("structure table validation catches corruption") {
    PathAlgebra pa = algebra_from_presentation(linear_a3(true));
    StructureAlgebra bad = pa.alg;
    // Break associativity: make a * b nonzero while keeping everything else.
    bad.table[pa.arrow_basis[0]][pa.arrow_basis[1]][pa.vertex_basis[0]] = 1;
    CHECK_THROWS_AS(validate_structure(bad), Error);
}
