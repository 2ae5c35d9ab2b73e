#include <catch2/catch_amalgamated.hpp>
#include <qtilt/representation.hpp>

#include <random>

using namespace qtilt;

namespace {

std::shared_ptr<const AlgebraContext> star_ctx() {
    QuiverPresentation p;
    p.quiver.vertices = {"1", "2", "3", "4"};
    p.quiver.arrows = {{"a", 0, 2}, {"b", 1, 2}, {"c", 2, 3}};
    return AlgebraContext::create(p);
}

std::shared_ptr<const AlgebraContext> a2_ctx() {
    QuiverPresentation p;
    p.quiver.vertices = {"1", "2"};
    p.quiver.arrows = {{"a", 0, 1}};
    return AlgebraContext::create(p);
}

// Arbitrary matrices form a representation of a relation-free path algebra.
Representation random_module(const AlgebraContext& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, 3), entry(-4, 4);
    Representation m;
    m.ctx = &ctx;
    const Quiver& q = ctx.quiver();
    for (int v = 0; v < q.vertex_count(); ++v) m.dims.push_back(d(rng));
    for (const Arrow& a : q.arrows) {
        Mat mat(m.dims[a.src], m.dims[a.tgt]);
        for (int r = 0; r < mat.rows(); ++r)
            for (int c = 0; c < mat.cols(); ++c) mat.at(r, c) = entry(rng);
        m.arrows.push_back(std::move(mat));
    }
    validate_representation(m);
    return m;
}

std::vector<int> dims_of(const Representation& r) { return r.dims; }

}  // namespace

TEST_CASE("projectives and injectives of the star algebra") {
    auto ctx = star_ctx();
    CHECK(dims_of(projective_module(*ctx, 0)) == std::vector<int>{1, 0, 1, 1});
    CHECK(dims_of(projective_module(*ctx, 1)) == std::vector<int>{0, 1, 1, 1});
    CHECK(dims_of(projective_module(*ctx, 2)) == std::vector<int>{0, 0, 1, 1});
    CHECK(dims_of(projective_module(*ctx, 3)) == std::vector<int>{0, 0, 0, 1});

    CHECK(dims_of(injective_module(*ctx, 0)) == std::vector<int>{1, 0, 0, 0});  // I1 = S1
    CHECK(dims_of(injective_module(*ctx, 1)) == std::vector<int>{0, 1, 0, 0});  // I2 = S2
    CHECK(dims_of(injective_module(*ctx, 2)) == std::vector<int>{1, 1, 1, 0});
    CHECK(dims_of(injective_module(*ctx, 3)) == std::vector<int>{1, 1, 1, 1});

    CHECK(is_isomorphic(injective_module(*ctx, 0), simple_module(*ctx, 0)));
}

TEST_CASE("Yoneda: Hom(P(v), M) has dimension dim M_v") {
    auto ctx = star_ctx();
    std::mt19937_64 rng(20240901);
    std::vector<Representation> projs;
    for (int v = 0; v < 4; ++v) projs.push_back(projective_module(*ctx, v));
    for (int trial = 0; trial < 100; ++trial) {
        Representation m = random_module(*ctx, rng);
        for (int v = 0; v < 4; ++v) CHECK(hom_dim(projs[v], m) == m.dims[v]);
    }
}

TEST_CASE("hom dimensions between canonical modules") {
    auto ctx = a2_ctx();
    Representation p1 = projective_module(*ctx, 0);
    Representation p2 = projective_module(*ctx, 1);
    Representation s1 = simple_module(*ctx, 0);
    // Hom(P(v), P(w)) = paths w -> v.
    CHECK(hom_dim(p1, p2) == 0);
    CHECK(hom_dim(p2, p1) == 1);
    CHECK(hom_dim(p1, p1) == 1);
    CHECK(hom_dim(p1, s1) == 1);
    CHECK(hom_dim(s1, p1) == 0);
    CHECK(hom_dim(s1, p2) == 0);

    // Composition P2 -> P1 -> S1 is zero (the image of P2 is the radical).
    ModuleMap inc = hom_space(p2, p1)[0];
    ModuleMap quo = hom_space(p1, s1)[0];
    CHECK(map_is_zero(compose(inc, quo)));
}

TEST_CASE("hom bases are deterministic") {
    auto ctx = star_ctx();
    Representation p1 = projective_module(*ctx, 0);
    Representation i4 = injective_module(*ctx, 3);
    auto b1 = hom_space(p1, i4);
    auto b2 = hom_space(p1, i4);
    REQUIRE(b1.size() == b2.size());
    for (size_t i = 0; i < b1.size(); ++i)
        CHECK(flatten_map(b1[i]) == flatten_map(b2[i]));
}

TEST_CASE("duality swaps the two sides") {
    auto ctx = star_ctx();
    for (int v = 0; v < 4; ++v) {
        Representation m = projective_module(*ctx, v);
        Representation dd = dual(dual(m));
        CHECK(dd.ctx == m.ctx);
        CHECK(is_isomorphic(dd, m));
        // D(P^op(v)) is the injective at v over the primal algebra.
        Representation dp = dual(projective_module(ctx->op(), v));
        CHECK(is_isomorphic(dp, injective_module(*ctx, v)));
    }
    // Dual reverses hom dimensions.
    Representation p1 = projective_module(*ctx, 0);
    Representation p3 = projective_module(*ctx, 2);
    CHECK(hom_dim(p3, p1) == hom_dim(dual(p1), dual(p3)));
}

TEST_CASE("direct sums and isomorphism tests") {
    auto ctx = star_ctx();
    Representation p1 = projective_module(*ctx, 0);
    Representation s1 = simple_module(*ctx, 0);
    DirectSum ab = direct_sum({&p1, &s1});
    DirectSum ba = direct_sum({&s1, &p1});
    CHECK(is_isomorphic(ab.rep, ba.rep));
    CHECK_FALSE(is_isomorphic(ab.rep, p1));
    CHECK_FALSE(is_isomorphic(p1, projective_module(*ctx, 1)));

    // Inclusions followed by projections are identities / zero.
    CHECK_FALSE(map_is_zero(compose(ab.incl[0], ab.proj[0])));
    CHECK(map_is_zero(compose(ab.incl[0], ab.proj[1])));
}

TEST_CASE("minimal projective presentations") {
    auto ctx = star_ctx();
    // S3 has presentation P4 -> P3 -> S3 (radical of P3 is S4).
    ProjPresentation pr = min_proj_presentation(simple_module(*ctx, 2));
    CHECK(pr.p0.vertices == std::vector<int>{2});
    CHECK(pr.p1.vertices == std::vector<int>{3});
    // Projectives have no first syzygy.
    ProjPresentation pp = min_proj_presentation(projective_module(*ctx, 0));
    CHECK(pp.p0.vertices == std::vector<int>{0});
    CHECK(pp.p1.vertices.empty());
}

TEST_CASE("Dynkin recognition") {
    auto star = star_ctx();
    CHECK(is_dynkin(star->quiver()));

    QuiverPresentation cyc;
    cyc.quiver.vertices = {"1", "2", "3"};
    cyc.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
    CHECK_FALSE(is_dynkin(cyc.quiver));

    QuiverPresentation kron;
    kron.quiver.vertices = {"1", "2"};
    kron.quiver.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    CHECK_FALSE(is_dynkin(kron.quiver));
}
