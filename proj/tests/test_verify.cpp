#include "doctest.h"

#include "gpa/numeric.hpp"
#include "gpa/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

using namespace gpa;

namespace {

const IntMatrix kB2 = {{2, -1}, {-2, 2}};
const IntMatrix kA2 = {{2, -1}, {-1, 2}};

template <class F>
std::shared_ptr<const FinDimAlgebra<F>> build(const CartanData& cd) {
    auto pres = quiver_presentation(cd, AlgebraKind::Preprojective);
    auto rs = RewriteSystem<F>::complete(pres, default_degree_bound(cd));
    return FinDimAlgebra<F>::assemble(rs);
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/gpa_test_") + name;
}

} // namespace

TEST_CASE("config parsing") {
    auto j = nlohmann::json::parse(R"({
        "cartan": [[2,-1],[-2,2]],
        "symmetrizer": "minimal",
        "orientation": [[2,1]],
        "field": {"prime": 2305843009213693951},
        "max_degree": 40
    })");
    auto cfg = parse_config(j);
    CHECK(cfg.sym_kind == SymmetrizerSpec::Minimal);
    CHECK_FALSE(cfg.default_orientation);
    CHECK(cfg.orientation ==
          std::vector<std::pair<int, int>>{{1, 0}});
    CHECK_FALSE(cfg.field.rational);
    CHECK(cfg.max_degree == 40);
    auto cd = resolve_cartan(cfg);
    CHECK(cd.D == std::vector<int>{2, 1});
    CHECK(cd.omega == std::vector<std::pair<int, int>>{{1, 0}});

    auto j2 = nlohmann::json::parse(
        R"({"cartan": [[2,-1],[-2,2]], "symmetrizer": {"multiplier": 3}})");
    auto cfg2 = parse_config(j2);
    CHECK(resolve_cartan(cfg2).D == std::vector<int>{6, 3});

    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(R"({"x": 1})")),
                    ConfigError);
    // structurally valid config, mathematically invalid symmetrizer
    CHECK_THROWS_AS(
        resolve_cartan(parse_config(nlohmann::json::parse(
            R"({"cartan": [[2,-1],[-2,2]], "symmetrizer": [1,1]})"))),
        ConfigError);
}

TEST_CASE("instance hash distinguishes instances and fields") {
    auto cd1 = validate_gcm(kB2, {2, 1});
    auto cd2 = validate_gcm(kB2, {4, 2});
    FieldSpec rat;
    FieldSpec fp{false, 2305843009213693951ULL};
    CHECK(instance_hash(cd1, rat) != instance_hash(cd2, rat));
    CHECK(instance_hash(cd1, rat) != instance_hash(cd1, fp));
    CHECK(instance_hash(cd1, rat) == instance_hash(cd1, rat));
}

TEST_CASE("cache round trip is bit exact") {
    auto cd = validate_gcm(kB2, {2, 1});
    FieldSpec field;
    auto A = build<Rat>(cd);
    auto path = tmp_path("cache_roundtrip.json");
    save_cache(path, *A, cd, field);
    auto B = load_cache<Rat>(path, cd, field);
    CHECK(B->dim() == A->dim());
    for (int i = 0; i < A->dim(); ++i) {
        CHECK(A->basis[i] == B->basis[i]);
        for (int j = 0; j < A->dim(); ++j)
            CHECK(A->mult_basis(i, j) == B->mult_basis(i, j));
    }
    // saving the loaded algebra reproduces the identical file
    auto path2 = tmp_path("cache_roundtrip2.json");
    save_cache(path2, *B, cd, field);
    std::ifstream f1(path), f2(path2);
    std::string s1((std::istreambuf_iterator<char>(f1)),
                   std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)),
                   std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
}

TEST_CASE("cache refuses a wrong instance and a corrupted table") {
    auto cd = validate_gcm(kB2, {2, 1});
    FieldSpec field;
    auto A = build<Rat>(cd);
    auto path = tmp_path("cache_guard.json");
    save_cache(path, *A, cd, field);

    auto other = validate_gcm(kB2, {4, 2});
    CHECK_THROWS_AS(load_cache<Rat>(path, other, field), CacheError);

    // corrupt one multiplication coefficient
    nlohmann::json j;
    {
        std::ifstream in(path);
        in >> j;
    }
    bool flipped = false;
    for (auto& entry : j["table"]) {
        for (auto& pr : entry[2]) {
            std::string c = pr[1].get<std::string>();
            if (c == "1") {
                pr[1] = "-1";
                flipped = true;
                break;
            }
        }
        if (flipped)
            break;
    }
    REQUIRE(flipped);
    auto bad = tmp_path("cache_corrupt.json");
    {
        std::ofstream out(bad);
        out << j.dump(2) << "\n";
    }
    CHECK_THROWS_AS(load_cache<Rat>(bad, cd, field), CacheError);
}

TEST_CASE("verification suites pass on the rank-two instances") {
    for (auto& [C, d] : std::vector<std::pair<IntMatrix, std::vector<int>>>{
             {kB2, {2, 1}}, {kA2, {1, 1}}}) {
        auto cd = validate_gcm(C, d);
        auto inst = prepare_instance<Rat>(cd, FieldSpec{}, build<Rat>(cd));
        for (const auto& rep : verify_all(inst)) {
            CHECK(rep.ok());
            for (const auto& c : rep.checks)
                CHECK(c.status != "skipped");
        }
    }
}

TEST_CASE("verification refuses non-Dynkin input") {
    auto cd = validate_gcm({{2, -2}, {-2, 2}}, {1, 1});
    CHECK_THROWS_AS(
        prepare_instance<Rat>(cd, FieldSpec{}, nullptr),
        NotDynkin);
}

TEST_CASE("reports are deterministic up to timing") {
    auto cd = validate_gcm(kB2, {2, 1});
    auto A = build<Rat>(cd);
    auto inst = prepare_instance<Rat>(cd, FieldSpec{}, A);
    auto strip = [](nlohmann::json j) {
        for (auto& c : j["checks"])
            c.erase("wall_ms");
        return j.dump();
    };
    auto r1 = verify_theorem_b(inst);
    auto r2 = verify_theorem_b(inst);
    CHECK(strip(r1.to_json()) == strip(r2.to_json()));
}

TEST_CASE("sampling restricts the sweep deterministically") {
    auto cd = validate_gcm(kB2, {2, 1});
    auto A = build<Rat>(cd);
    VerifyOptions opt;
    opt.sample = true;
    opt.sample_seed = 7;
    opt.sample_size = 4;
    auto inst = prepare_instance<Rat>(cd, FieldSpec{}, A, opt);
    CHECK(inst.elements.size() == 4);
    // identity and longest element are always present
    bool has_e = false, has_w0 = false;
    for (int w : inst.elements) {
        has_e |= w == inst.W.identity();
        has_w0 |= w == inst.W.longest();
    }
    CHECK(has_e);
    CHECK(has_w0);
    auto inst2 = prepare_instance<Rat>(cd, FieldSpec{}, A, opt);
    CHECK(inst.elements == inst2.elements);
    CHECK(verify_theorem_a(inst).ok());
}

TEST_CASE("prime field mode verifies the golden instance end to end") {
    Fp::set_modulus(2305843009213693951ULL);
    auto cd = validate_gcm(kB2, {2, 1});
    auto A = build<Fp>(cd);
    CHECK(A->dim() == 10);
    FieldSpec field{false, Fp::P};
    auto inst = prepare_instance<Fp>(cd, field, A);
    for (const auto& rep : verify_all(inst))
        CHECK(rep.ok());
    // cache round trip over the prime field
    auto path = tmp_path("cache_fp.json");
    save_cache(path, *A, cd, field);
    auto B = load_cache<Fp>(path, cd, field);
    CHECK(B->dim() == 10);
}

TEST_CASE("sampled verification on the rank-three weighted instance") {
    auto cd = validate_gcm({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, {2, 2, 1});
    auto A = build<Rat>(cd);
    CHECK(A->dim() == 35);
    VerifyOptions opt;
    opt.sample = true;
    opt.sample_seed = 11;
    opt.sample_size = 10;
    opt.jobs = 2;
    auto inst = prepare_instance<Rat>(cd, FieldSpec{}, A, opt);
    CHECK(inst.W.size() == 48);
    for (const auto& rep : verify_all(inst))
        CHECK(rep.ok());
}

TEST_CASE("prime field summand counting goes through the splitting path") {
    Fp::set_modulus(2305843009213693951ULL);
    auto cd = validate_gcm(kB2, {2, 1});
    auto A = build<Fp>(cd);
    auto Pi = ModuleRep<Fp>::regular(A);
    auto c = num_indec_summands(Pi); // two distinct blocks: needs roots in F_p
    CHECK(c.with_multiplicity == 2);
    CHECK(c.distinct == 2);
    auto E1 = ModuleRep<Fp>::generalized_simple(A, 0);
    auto two = direct_sum(std::vector<const ModuleRep<Fp>*>{&E1, &E1});
    auto c2 = num_indec_summands(two);
    CHECK(c2.with_multiplicity == 2);
    CHECK(c2.distinct == 1);
}

TEST_CASE("disconnected Dynkin input verifies componentwise") {
    auto cd = validate_gcm({{2, 0}, {0, 2}}, {1, 2});
    CHECK_FALSE(classify(cd).connected);
    auto A = build<Rat>(cd);
    CHECK(A->dim() == 3); // K x K[eps]/(eps^2)
    auto inst = prepare_instance<Rat>(cd, FieldSpec{}, A);
    CHECK(inst.W.size() == 4);
    for (const auto& rep : verify_all(inst))
        CHECK(rep.ok());
}

TEST_CASE("explicit orientations flow through the whole pipeline") {
    auto cfg = parse_config(nlohmann::json::parse(
        R"({"cartan": [[2,-1],[-2,2]], "symmetrizer": [2,1],
            "orientation": [[2,1]]})"));
    auto cd = resolve_cartan(cfg);
    CHECK(cd.sign(1, 0) == 1);
    auto A = build<Rat>(cd);
    CHECK(A->dim() == 10);
    auto inst = prepare_instance<Rat>(cd, FieldSpec{}, A);
    for (const auto& rep : verify_all(inst))
        CHECK(rep.ok());
}

TEST_CASE("the transposed rank-two matrix behaves symmetrically") {
    // same valued graph with the roles of the vertices exchanged
    auto cd = validate_gcm({{2, -2}, {-1, 2}}, {1, 2});
    auto A = build<Rat>(cd);
    CHECK(A->dim() == 10);
    auto inst = prepare_instance<Rat>(cd, FieldSpec{}, A);
    for (const auto& rep : verify_all(inst))
        CHECK(rep.ok());
}

TEST_CASE("the silent twist: one flipped mesh sign on the rank-two "
          "instance changes the algebra but not the verified structure") {
    // documentation of a genuine phenomenon: this corruption produces a
    // commutative corner where the true algebra has an anticommutative
    // one, yet every lattice-level and homological check still passes;
    // the acceptance suite uses a detectable corruption instead
    auto cd = validate_gcm(kB2, {2, 1});
    auto pres = quiver_presentation(cd, AlgebraKind::Preprojective);
    for (auto& r : pres.relations)
        if (r.name == "mesh(1)") {
            REQUIRE(r.terms.size() == 2);
            r.terms[1].coeff *= -1;
        }
    auto rs = RewriteSystem<Rat>::complete(pres, default_degree_bound(cd));
    std::shared_ptr<const FinDimAlgebra<Rat>> A =
        FinDimAlgebra<Rat>::assemble(rs);
    CHECK(A->dim() == 10);
    // eps1 and a12*a21 commute here, while they anticommute in the true
    // algebra: multiply the corner elements both ways
    auto e = [&](int k) { return A->basis_vec(k); };
    int eps = -1, ab = -1;
    for (int k = 0; k < A->dim(); ++k) {
        if (A->pres.render_word(A->basis[k]) == "eps1")
            eps = k;
        if (A->pres.render_word(A->basis[k]) == "a12*a21")
            ab = k;
    }
    REQUIRE(eps >= 0);
    REQUIRE(ab >= 0);
    CHECK(A->mult(e(eps), e(ab)) == A->mult(e(ab), e(eps)));
    auto W = WeylGroup::generate(cd);
    CHECK_NOTHROW(sttilt_lattice(A, W, {.validate_pairs = true,
                                        .validate_order = true}));
}

#ifdef GPA_BIN_PATH
TEST_CASE("cli exit codes: pass, usage error, non-Dynkin refusal") {
    auto cfg_ok = tmp_path("cli_b2.json");
    {
        std::ofstream out(cfg_ok);
        out << R"({"cartan": [[2,-1],[-2,2]], "symmetrizer": [2,1]})";
    }
    auto cfg_eu = tmp_path("cli_euclid.json");
    {
        std::ofstream out(cfg_eu);
        out << R"({"cartan": [[2,-2],[-2,2]], "symmetrizer": [1,1]})";
    }
    std::string bin = GPA_BIN_PATH;
    auto run = [&](const std::string& args) {
        int rc = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(rc);
    };
    CHECK(run("verify --config " + cfg_ok + " --suite annihilators") == 0);
    CHECK(run("inspect --config " + cfg_eu) == 0); // inspect only classifies
    CHECK(run("build --config " + cfg_eu) == 2);   // refuses to build
    CHECK(run("verify --config " + cfg_eu) == 2);
    CHECK(run("verify --config /nonexistent.json") == 2);
    CHECK(run("verify") == 2);

    // corrupted cache refuses with exit 2
    auto cache = tmp_path("cli_cache.json");
    CHECK(run("build --config " + cfg_ok + " --cache " + cache) == 0);
    {
        std::ifstream in(cache);
        nlohmann::json j;
        in >> j;
        j["instance_hash"] = "0000000000000000";
        std::ofstream out(cache);
        out << j.dump();
    }
    CHECK(run("verify --config " + cfg_ok + " --cache " + cache) == 2);
}
#endif
