#include "doctest.h"

#include "gpa/endo.hpp"
#include "gpa/numeric.hpp"

using namespace gpa;

namespace {

std::shared_ptr<FinDimAlgebra<Rat>> build(const IntMatrix& C,
                                          const std::vector<int>& d) {
    auto cd = validate_gcm(C, d);
    auto pres = quiver_presentation(cd, AlgebraKind::Preprojective);
    auto rs = RewriteSystem<Rat>::complete(pres, default_degree_bound(cd));
    return FinDimAlgebra<Rat>::assemble(rs);
}

const IntMatrix kB2 = {{2, -1}, {-2, 2}};
const IntMatrix kA2 = {{2, -1}, {-1, 2}};

// slow independent Hom solver: block matrices commuting with every arrow
int hom_dim_direct(const ModuleRep<Rat>& M, const ModuleRep<Rat>& N) {
    int n = M.A->n;
    std::vector<int> off{0};
    for (int v = 0; v < n; ++v)
        off.push_back(off.back() + N.dims[v] * M.dims[v]);
    int unknowns = off.back();
    if (unknowns == 0)
        return 0;
    std::vector<Vec<Rat>> eqs;
    for (size_t a = 0; a < M.act.size(); ++a) {
        const Arrow& ar = M.A->pres.arrows[a];
        int i = ar.src, j = ar.tgt;
        // phi_j M_a - N_a phi_i = 0, one equation per (row of N_j, col of M_i)
        for (int r = 0; r < N.dims[j]; ++r)
            for (int c = 0; c < M.dims[i]; ++c) {
                Vec<Rat> eq(unknowns, Rat(0));
                for (int k = 0; k < M.dims[j]; ++k)
                    eq[off[j] + r * M.dims[j] + k] += M.act[a].at(k, c);
                for (int k = 0; k < N.dims[i]; ++k)
                    eq[off[i] + k * M.dims[i] + c] -= N.act[a].at(r, k);
                if (!vec_is_zero(eq))
                    eqs.push_back(std::move(eq));
            }
    }
    Echelon<Rat> span(unknowns);
    for (auto& e : eqs)
        span.insert(std::move(e));
    return unknowns - span.dim();
}

} // namespace

TEST_CASE("projective modules") {
    auto A1 = build({{2}}, {3});
    auto P = ModuleRep<Rat>::projective(A1, 0);
    CHECK(P.dims == std::vector<int>{3});

    auto B2 = build(kB2, {2, 1});
    auto P1 = ModuleRep<Rat>::projective(B2, 0);
    auto P2 = ModuleRep<Rat>::projective(B2, 1);
    CHECK(P1.total_dim() + P2.total_dim() == B2->dim());

    auto A2 = build(kA2, {1, 1});
    auto Q = ModuleRep<Rat>::projective(A2, 0);
    CHECK(Q.dims == std::vector<int>{1, 1});
}

TEST_CASE("generalized simples") {
    auto B2 = build(kB2, {2, 1});
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    auto E2 = ModuleRep<Rat>::generalized_simple(B2, 1);
    CHECK(E1.total_dim() == 2);
    CHECK(E2.total_dim() == 1);
    // construction already asserts that all relations act as zero
    auto S2 = ModuleRep<Rat>::simple(B2, 1);
    CHECK(is_isomorphic(E2, S2)); // c_2 = 1 makes them coincide
}

TEST_CASE("locally free rank") {
    auto B2 = build(kB2, {2, 1});
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    CHECK(locally_free_rank(E1).r == std::vector<int>{1, 0});

    auto S1 = ModuleRep<Rat>::simple(B2, 0);
    CHECK_THROWS_AS(locally_free_rank(S1), NotLocallyFree);
    CHECK_FALSE(try_locally_free(S1).locally_free);
    CHECK(try_locally_free(S1).failing_vertex == 0);

    auto Pi = ModuleRep<Rat>::regular(B2);
    auto rk = locally_free_rank(Pi);
    CHECK(2 * rk.r[0] + 1 * rk.r[1] == B2->dim());

    auto Z = ModuleRep<Rat>::zero(B2);
    CHECK(locally_free_rank(Z).r == std::vector<int>{0, 0});
}

TEST_CASE("hom dimensions: projective Yoneda and disjoint simples") {
    auto B2 = build(kB2, {2, 1});
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    auto E2 = ModuleRep<Rat>::generalized_simple(B2, 1);
    auto Pi = ModuleRep<Rat>::regular(B2);
    for (int i = 0; i < 2; ++i) {
        auto P = ModuleRep<Rat>::projective(B2, i);
        CHECK(hom_dim(P, E1) == E1.dims[i]);
        CHECK(hom_dim(P, Pi) == Pi.dims[i]);
    }
    CHECK(hom_dim(E1, E2) == 0);
    CHECK(hom_dim(E2, E1) == 0);
    CHECK(hom_dim(Pi, Pi) == B2->dim());
}

TEST_CASE("presentation-based hom agrees with the direct solver") {
    auto B2 = build(kB2, {2, 1});
    std::vector<ModuleRep<Rat>> mods;
    mods.push_back(ModuleRep<Rat>::regular(B2));
    mods.push_back(ModuleRep<Rat>::projective(B2, 0));
    mods.push_back(ModuleRep<Rat>::projective(B2, 1));
    mods.push_back(ModuleRep<Rat>::generalized_simple(B2, 0));
    mods.push_back(ModuleRep<Rat>::generalized_simple(B2, 1));
    mods.push_back(ModuleRep<Rat>::simple(B2, 0));
    for (const auto& M : mods)
        for (const auto& N : mods) {
            CHECK(hom_dim(M, N) == hom_dim_direct(M, N));
            // assembled block maps really are module maps
            for (const auto& phi : hom_space(M, N))
                for (size_t a = 0; a < M.act.size(); ++a) {
                    const Arrow& ar = M.A->pres.arrows[a];
                    CHECK(phi[ar.tgt] * M.act[a] == N.act[a] * phi[ar.src]);
                }
        }
}

TEST_CASE("duality is an involution and preserves freeness") {
    auto B2 = build(kB2, {2, 1});
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    auto D = E1.dual();
    CHECK(D.A == B2->opposite());
    CHECK(D.dims == E1.dims);
    auto DD = D.dual();
    CHECK(DD.A == B2);
    CHECK(is_isomorphic(DD, E1));
    CHECK(locally_free_rank(D).r == std::vector<int>{1, 0});

    // dual of the left regular module is isomorphic to the right regular
    // module: the algebra is self-injective
    auto Pi = ModuleRep<Rat>::regular(B2);
    auto PiOp = ModuleRep<Rat>::regular(B2->opposite());
    CHECK(is_isomorphic(Pi.dual(), PiOp));
}

TEST_CASE("tau of projectives vanishes; tau of the simple in the symmetric "
          "rank-two case is the other simple") {
    auto A2 = build(kA2, {1, 1});
    for (int i = 0; i < 2; ++i) {
        auto P = ModuleRep<Rat>::projective(A2, i);
        CHECK(tau(P).is_zero());
        CHECK(is_tau_rigid(P));
    }
    auto S1 = ModuleRep<Rat>::simple(A2, 0);
    auto S2 = ModuleRep<Rat>::simple(A2, 1);
    auto T = tau(S1);
    CHECK(is_isomorphic(T, S2));

    auto B2 = build(kB2, {2, 1});
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    CHECK(is_tau_rigid(E1));
    auto Pi = ModuleRep<Rat>::regular(B2);
    auto PiPi = direct_sum(std::vector<const ModuleRep<Rat>*>{&Pi, &Pi});
    CHECK(is_tau_rigid(PiPi));
}

TEST_CASE("tau matches the hom/ext pairing on small modules") {
    auto B2 = build(kB2, {2, 1});
    std::vector<ModuleRep<Rat>> mods;
    mods.push_back(ModuleRep<Rat>::generalized_simple(B2, 0));
    mods.push_back(ModuleRep<Rat>::generalized_simple(B2, 1));
    mods.push_back(ModuleRep<Rat>::simple(B2, 0));
    for (const auto& M : mods) {
        auto t = tau(M);
        // dim Hom(M, tau M) >= dim Ext^1(M, M), with the gap spanned by
        // maps factoring through projectives; for these modules no such
        // maps exist, so the dimensions agree on the nose
        CHECK(hom_dim(M, t) == ext1_dim(M, M));
    }
}

TEST_CASE("ext1: vanishing against projectives and symmetry for locally "
          "free pairs") {
    auto B2 = build(kB2, {2, 1});
    auto Pi = ModuleRep<Rat>::regular(B2);
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    auto E2 = ModuleRep<Rat>::generalized_simple(B2, 1);
    CHECK(ext1_dim(Pi, E1) == 0);
    CHECK(ext1_dim(Pi, E2) == 0);
    CHECK(ext1_dim(Pi, Pi) == 0);
    std::vector<const ModuleRep<Rat>*> fam{&Pi, &E1, &E2};
    for (auto* M : fam)
        for (auto* N : fam)
            CHECK(ext1_dim(*M, *N) == ext1_dim(*N, *M));
}

TEST_CASE("tensor and tor against the regular module") {
    auto B2 = build(kB2, {2, 1});
    auto op = B2->opposite();
    auto Pi = ModuleRep<Rat>::regular(B2);
    auto PiOp = ModuleRep<Rat>::regular(op);
    CHECK(tensor_dim(PiOp, Pi) == B2->dim());
    CHECK(tor1_dim(PiOp, Pi) == 0);
    auto E1op = ModuleRep<Rat>::generalized_simple(op, 0);
    CHECK(tensor_dim(E1op, Pi) == 2); // c_1 = 2
    CHECK(tor1_dim(E1op, Pi) == 0);
    auto E2op = ModuleRep<Rat>::generalized_simple(op, 1);
    CHECK(tensor_dim(E2op, Pi) == 1);
}

TEST_CASE("tensor dimension agrees with the cokernel of the presentation") {
    auto A2 = build(kA2, {1, 1});
    auto op = A2->opposite();
    auto N = ModuleRep<Rat>::regular(A2);
    for (int i = 0; i < 2; ++i) {
        auto Mop = ModuleRep<Rat>::generalized_simple(op, i);
        // coker route: P1 -> P0 -> M -> 0 tensored with N
        auto pm = make_presentation(Mop);
        std::vector<int> coff{0}, roff{0};
        for (int a : pm.p1)
            coff.push_back(coff.back() + N.dims[a]);
        for (int b : pm.p0)
            roff.push_back(roff.back() + N.dims[b]);
        Mat<Rat> t1(roff.back(), coff.back());
        for (size_t a = 0; a < pm.p1.size(); ++a)
            for (size_t b = 0; b < pm.p0.size(); ++b) {
                Mat<Rat> blk =
                    N.element_action(pm.d1[a][b], pm.p0[b], pm.p1[a]);
                for (int r = 0; r < blk.rows; ++r)
                    for (int c = 0; c < blk.cols; ++c)
                        t1.at(roff[b] + r, coff[a] + c) = blk.at(r, c);
            }
        int coker = roff.back() - rank_of(t1);
        CHECK(tensor_dim(Mop, N) == coker);
    }
}

TEST_CASE("socle") {
    auto B2 = build(kB2, {2, 1});
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    auto s = socle(E1);
    CHECK(s.mod.dims == std::vector<int>{1, 0});
    auto S1 = ModuleRep<Rat>::simple(B2, 0);
    CHECK(socle(S1).mod.dims == S1.dims);
    // right-regular socle is one simple per vertex for the self-injective
    // basic algebra
    auto PiOp = ModuleRep<Rat>::regular(B2->opposite());
    CHECK(socle(PiOp).mod.dims == std::vector<int>{1, 1});
    // dual of a right generalized simple has simple socle at its vertex
    auto E1op = ModuleRep<Rat>::generalized_simple(B2->opposite(), 0);
    CHECK(socle(E1op).mod.dims == std::vector<int>{1, 0});
}

TEST_CASE("annihilators") {
    auto B2 = build(kB2, {2, 1});
    auto Pi = ModuleRep<Rat>::regular(B2);
    CHECK(annihilator(Pi).dim() == 0);
    auto Z = ModuleRep<Rat>::zero(B2);
    CHECK(annihilator(Z).dim() == B2->dim());
    // E_i = Pi / I_i acts faithfully through the quotient, so the
    // annihilator has codimension equal to dim E_i... as a two-sided ideal
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    CHECK(annihilator(E1).dim() == B2->dim() - 2);
    auto E2 = ModuleRep<Rat>::generalized_simple(B2, 1);
    CHECK(annihilator(E2).dim() == B2->dim() - 1);
}

TEST_CASE("isomorphism testing") {
    auto B2 = build(kB2, {2, 1});
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    auto E2 = ModuleRep<Rat>::generalized_simple(B2, 1);
    CHECK(is_isomorphic(E1, E1));
    CHECK_FALSE(is_isomorphic(E1, E2));
    auto P1 = ModuleRep<Rat>::projective(B2, 0);
    CHECK_FALSE(is_isomorphic(P1, E1));
    // same dimension vector, different modules: E1 + E1 vs a free rank
    // structure; make two copies of E1 and compare against itself
    auto twoE1 =
        direct_sum(std::vector<const ModuleRep<Rat>*>{&E1, &E1});
    auto twoE1b =
        direct_sum(std::vector<const ModuleRep<Rat>*>{&E1, &E1});
    CHECK(is_isomorphic(twoE1, twoE1b));
}

TEST_CASE("summand counting") {
    auto B2 = build(kB2, {2, 1});
    auto Pi = ModuleRep<Rat>::regular(B2);
    auto c = num_indec_summands(Pi);
    CHECK(c.with_multiplicity == 2);
    CHECK(c.distinct == 2);
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    auto c1 = num_indec_summands(E1);
    CHECK(c1.with_multiplicity == 1);
    CHECK(c1.distinct == 1);
    auto twoE1 = direct_sum(std::vector<const ModuleRep<Rat>*>{&E1, &E1});
    auto c2 = num_indec_summands(twoE1);
    CHECK(c2.with_multiplicity == 2);
    CHECK(c2.distinct == 1);
    auto P1 = ModuleRep<Rat>::projective(B2, 0);
    auto mix = direct_sum(std::vector<const ModuleRep<Rat>*>{&P1, &E1});
    auto c3 = num_indec_summands(mix);
    CHECK(c3.with_multiplicity == 2);
    CHECK(c3.distinct == 2);
    CHECK(num_indec_summands(ModuleRep<Rat>::zero(B2)).with_multiplicity == 0);
}

TEST_CASE("fac membership") {
    auto B2 = build(kB2, {2, 1});
    auto Pi = ModuleRep<Rat>::regular(B2);
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    CHECK(in_fac(E1, Pi));
    CHECK(in_fac(Pi, Pi));
    CHECK_FALSE(in_fac(Pi, E1));
    CHECK(in_fac(ModuleRep<Rat>::zero(B2), E1));
}

TEST_CASE("auslander-reiten pairing: ext1 equals stable hom into tau") {
    // over a self-injective algebra, dim Ext^1(M, N) equals the dimension
    // of Hom(N, tau M) modulo the maps that factor through the projective
    // cover of tau M; this ties ext1, tau and hom together through an
    // independent identity
    auto B2 = build(kB2, {2, 1});
    std::vector<ModuleRep<Rat>> mods;
    mods.push_back(ModuleRep<Rat>::generalized_simple(B2, 0));
    mods.push_back(ModuleRep<Rat>::generalized_simple(B2, 1));
    mods.push_back(ModuleRep<Rat>::simple(B2, 0));
    mods.push_back(ModuleRep<Rat>::projective(B2, 0));
    auto stable_hom_into = [&](const ModuleRep<Rat>& N,
                               const ModuleRep<Rat>& T) {
        if (T.is_zero() || N.is_zero())
            return 0;
        auto full = hom_space(N, T);
        if (full.empty())
            return 0;
        // maps factoring through a projective factor through the cover
        auto info = detail_mod::top_generators(T);
        auto cover = detail_mod::build_cover(T, info);
        auto P0 = detail_mod::free_module(N.A, info.verts);
        auto up = hom_space(N, P0);
        int flat = 0;
        for (int v = 0; v < N.A->n; ++v)
            flat += T.dims[v] * N.dims[v];
        Echelon<Rat> span(flat);
        int factoring = 0;
        for (const auto& psi : up) {
            Vec<Rat> vec;
            for (int v = 0; v < N.A->n; ++v) {
                Mat<Rat> comp = cover.blocks[v] * psi[v];
                vec.insert(vec.end(), comp.a.begin(), comp.a.end());
            }
            if (span.insert(std::move(vec)))
                ++factoring;
        }
        return static_cast<int>(full.size()) - factoring;
    };
    for (const auto& M : mods)
        for (const auto& N : mods) {
            auto T = tau(M);
            CHECK(ext1_dim(M, N) == stable_hom_into(N, T));
        }
}

TEST_CASE("local views expose valid nilpotent loop actions") {
    auto B2 = build(kB2, {2, 1});
    auto Pi = ModuleRep<Rat>::regular(B2);
    for (int i = 0; i < 2; ++i) {
        auto v = local_view(Pi, i);
        CHECK(v.order == B2->pres.cartan.D[i]);
        CHECK(v.valid());
    }
}

TEST_CASE("minimal presentations: projectives and generalized simples") {
    auto B2 = build(kB2, {2, 1});
    for (int i = 0; i < 2; ++i) {
        auto P = ModuleRep<Rat>::projective(B2, i);
        auto pm = make_presentation(P);
        CHECK(pm.p0 == std::vector<int>{i});
        CHECK(pm.p1.empty()); // projectives have no relations
        // the cover of the generalized simple is the projective at its
        // vertex, with kernel of codimension c_i
        auto E = ModuleRep<Rat>::generalized_simple(B2, i);
        auto pe = make_presentation(E);
        CHECK(pe.p0 == std::vector<int>{i});
        CHECK_FALSE(pe.p1.empty());
    }
}

TEST_CASE("projectivity detected through ext vanishing against simples") {
    auto B2 = build(kB2, {2, 1});
    std::vector<ModuleRep<Rat>> simples;
    for (int i = 0; i < 2; ++i)
        simples.push_back(ModuleRep<Rat>::simple(B2, i));
    auto is_projective = [&](const ModuleRep<Rat>& M) {
        for (const auto& S : simples)
            if (ext1_dim(M, S) != 0)
                return false;
        return true;
    };
    auto P1 = ModuleRep<Rat>::projective(B2, 0);
    auto E1 = ModuleRep<Rat>::generalized_simple(B2, 0);
    CHECK(is_projective(P1));
    CHECK_FALSE(is_projective(E1));
    CHECK(tau(P1).is_zero());
    CHECK_FALSE(tau(E1).is_zero());
}
