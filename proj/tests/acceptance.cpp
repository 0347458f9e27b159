// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is exhaustive over the stated instances; all
// tolerances are exact (integer/rational arithmetic throughout).

#include "gpa/numeric.hpp"
#include "gpa/verify.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

using namespace gpa;

namespace {

struct Criterion {
    int id;
    std::string description;
    std::function<bool(std::string&)> run;
};

struct NamedInstance {
    std::string name;
    IntMatrix C;
    std::vector<int> d;
};

const IntMatrix kA1 = {{2}};
const IntMatrix kA2 = {{2, -1}, {-1, 2}};
const IntMatrix kB2 = {{2, -1}, {-2, 2}};
const IntMatrix kG2 = {{2, -1}, {-3, 2}};
const IntMatrix kA3 = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};

std::vector<NamedInstance> sweep_instances() {
    return {
        {"A1(c=1)", kA1, {1}},       {"A1(c=2)", kA1, {2}},
        {"A1(c=3)", kA1, {3}},       {"A2(min)", kA2, {1, 1}},
        {"A2(2x)", kA2, {2, 2}},     {"B2(min)", kB2, {2, 1}},
        {"B2(2x)", kB2, {4, 2}},     {"G2(min)", kG2, {3, 1}},
        {"A3(min)", kA3, {1, 1, 1}},
    };
}

struct Built {
    CartanData cd;
    std::shared_ptr<const FinDimAlgebra<Rat>> A;
    WeylGroup W;
    SttiltLattice<Rat> lattice;
};

Built build(const IntMatrix& C, const std::vector<int>& d) {
    auto cd = validate_gcm(C, d);
    auto pres = quiver_presentation(cd, AlgebraKind::Preprojective);
    auto rs = RewriteSystem<Rat>::complete(pres, default_degree_bound(cd));
    auto A = FinDimAlgebra<Rat>::assemble(rs);
    auto W = WeylGroup::generate(cd);
    SttiltOptions opt;
    opt.validate_pairs = false;
    auto lat = sttilt_lattice<Rat>(A, W, opt);
    return {cd, A, std::move(W), std::move(lat)};
}

// --------------------------------------------------------------------------

bool criterion1_golden(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    auto inst = build(kB2, {2, 1});
    const auto& W = inst.W;
    if (W.size() != 8) {
        note = "|W| != 8";
        return false;
    }
    // validate the full pair structure on the lattice
    SttiltOptions opt;
    opt.validate_pairs = true;
    opt.validate_order = true;
    auto lat = sttilt_lattice<Rat>(inst.A, W, opt);

    std::map<std::string, std::string> labels;
    for (int w = 0; w < W.size(); ++w)
        labels[W.word_name(w)] = lat.node(w).label();
    std::map<std::string, std::string> expect = {
        {"e", "Pi"},           {"s1", "I1e1+Pi e2"},
        {"s2", "Pi e1+I2e2"},  {"s1s2", "I1e1+E2"},
        {"s2s1", "E1+I2e2"},   {"s1s2s1", "E2"},
        {"s2s1s2", "E1"},      {"s1s2s1s2", "0"},
    };
    if (labels != expect) {
        note = "node labels differ from the expected picture";
        return false;
    }
    // labeled Hasse quiver: edges (w, w s_i) carry the mutation index i
    std::set<std::tuple<std::string, std::string, int>> edges;
    for (const auto& [u, v, i] : lat.edges)
        edges.insert({labels[W.word_name(u)], labels[W.word_name(v)], i + 1});
    std::set<std::tuple<std::string, std::string, int>> expect_edges = {
        {"Pi", "I1e1+Pi e2", 1},        {"Pi", "Pi e1+I2e2", 2},
        {"I1e1+Pi e2", "I1e1+E2", 2},   {"Pi e1+I2e2", "E1+I2e2", 1},
        {"I1e1+E2", "E2", 1},           {"E1+I2e2", "E1", 2},
        {"E2", "0", 2},                 {"E1", "0", 1},
    };
    if (edges != expect_edges) {
        note = "Hasse edges differ from the expected picture";
        return false;
    }
    auto mirr = W.meet_irreducibles();
    if (mirr.size() != 6) {
        note = "mirr(W) size != 6";
        return false;
    }
    auto fam = itrigid_set(lat);
    if (fam.size() != 6) {
        note = "rigid family size != 6";
        return false;
    }
    // member-by-member isomorphism in the listed order
    auto E1 = ModuleRep<Rat>::generalized_simple(inst.A, 0);
    auto E2 = ModuleRep<Rat>::generalized_simple(inst.A, 1);
    auto P1 = ModuleRep<Rat>::projective(inst.A, 0);
    auto P2 = ModuleRep<Rat>::projective(inst.A, 1);
    auto I1e1 =
        IdealSubspace<Rat>::idempotent(inst.A, 0).column(0).left_module();
    auto I2e2 =
        IdealSubspace<Rat>::idempotent(inst.A, 1).column(1).left_module();
    std::map<std::string, const ModuleRep<Rat>*> expect_mod = {
        {"s1", &P2},     {"s2", &P1},     {"s1s2", &I1e1},
        {"s2s1", &I2e2}, {"s1s2s1", &E2}, {"s2s1s2", &E1},
    };
    for (const auto& m : fam) {
        auto it = expect_mod.find(W.word_name(m.w));
        if (it == expect_mod.end() || !is_isomorphic(m.module, *it->second)) {
            note = "rigid member at " + W.word_name(m.w) +
                   " does not match the listed module";
            return false;
        }
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    note = "runtime " + std::to_string(secs) + " s";
    return secs < 10.0;
}

bool criterion2_theorem_a(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& ni : sweep_instances()) {
        auto inst = build(ni.C, ni.d);
        auto vi = prepare_instance<Rat>(inst.cd, FieldSpec{}, inst.A);
        auto rep = verify_theorem_a(vi);
        if (!rep.ok()) {
            note = ni.name + ": " + rep.summary_table();
            return false;
        }
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    note = "9 instances, runtime " + std::to_string(secs) + " s";
    return secs < 600.0;
}

bool criterion3_theorem_b(std::string& note) {
    for (const auto& ni : sweep_instances()) {
        auto inst = build(ni.C, ni.d);
        auto vi = prepare_instance<Rat>(inst.cd, FieldSpec{}, inst.A);
        auto rep = verify_theorem_b(vi);
        if (!rep.ok()) {
            note = ni.name + ": " + rep.summary_table();
            return false;
        }
    }
    note = "9 instances";
    return true;
}

bool criterion4_word_independence(std::string& note) {
    for (const auto& ni : std::vector<NamedInstance>{
             {"B2(min)", kB2, {2, 1}}, {"A2(min)", kA2, {1, 1}}}) {
        auto inst = build(ni.C, ni.d);
        for (int w = 0; w < inst.W.size(); ++w) {
            try {
                auto ideal = ideal_of_weyl<Rat>(inst.A, inst.W, w, true);
                if (ideal != inst.lattice.node(w).ideal) {
                    note = ni.name + ": prefix product disagrees at " +
                           inst.W.word_name(w);
                    return false;
                }
            } catch (const WordMismatch& e) {
                note = ni.name + ": " + e.what();
                return false;
            }
        }
    }
    return true;
}

bool criterion5_mutation(std::string& note) {
    int subspace_cases = 0, iso_only_cases = 0;
    for (const auto& ni : std::vector<NamedInstance>{
             {"B2(min)", kB2, {2, 1}}, {"A2(min)", kA2, {1, 1}}}) {
        auto inst = build(ni.C, ni.d);
        for (int w = 0; w < inst.W.size(); ++w)
            for (int i = 0; i < inst.W.rank(); ++i) {
                auto rep = mutation_check(inst.lattice, w, i);
                if (!rep.ok()) {
                    note = ni.name + ": mutation fails at (" +
                           inst.W.word_name(w) + ", s" +
                           std::to_string(i + 1) + ")";
                    return false;
                }
                if (rep.ascent) {
                    if (rep.subspace_equal)
                        ++subspace_cases;
                    else
                        ++iso_only_cases;
                }
            }
    }
    note = std::to_string(subspace_cases) + " ascents by subspace equality, " +
           std::to_string(iso_only_cases) + " by isomorphism only";
    return true;
}

bool criterion6_homological(std::string& note) {
    // exhaustive homological suite on the golden instance
    {
        auto inst = build(kB2, {2, 1});
        auto vi = prepare_instance<Rat>(inst.cd, FieldSpec{}, inst.A);
        auto rep = verify_homological(vi);
        if (!rep.ok()) {
            note = "B2(min): " + rep.summary_table();
            return false;
        }
    }
    // self-injectivity on every Dynkin instance of the sweep
    for (const auto& ni : sweep_instances()) {
        auto inst = build(ni.C, ni.d);
        auto reg = ModuleRep<Rat>::regular(inst.A);
        auto regop = ModuleRep<Rat>::regular(inst.A->opposite());
        if (!is_isomorphic(reg.dual(), regop)) {
            note = ni.name + ": the algebra is not self-injective";
            return false;
        }
    }
    return true;
}

bool criterion7_oracle(std::string& note) {
    struct Row {
        std::string name;
        IntMatrix C;
        std::vector<int> d;
    };
    for (const auto& r : std::vector<Row>{{"A1(c=1)", kA1, {1}},
                                          {"A1(c=2)", kA1, {2}},
                                          {"A1(c=3)", kA1, {3}},
                                          {"A2(min)", kA2, {1, 1}},
                                          {"B2(min)", kB2, {2, 1}}}) {
        auto cd = validate_gcm(r.C, r.d);
        auto pres = quiver_presentation(cd, AlgebraKind::Preprojective);
        auto rs = RewriteSystem<Rat>::complete(pres, default_degree_bound(cd));
        auto A = FinDimAlgebra<Rat>::assemble(rs);
        auto oracle = testing::brute_force_dimension<Rat>(pres);
        if (A->dim() != oracle.dim) {
            note = r.name + ": engine " + std::to_string(A->dim()) +
                   " vs oracle " + std::to_string(oracle.dim);
            return false;
        }
    }
    note = "5 instances, exact agreement";
    return true;
}

bool criterion8_annihilators(std::string& note) {
    for (const auto& ni : std::vector<NamedInstance>{
             {"B2(min)", kB2, {2, 1}}, {"A2(min)", kA2, {1, 1}}}) {
        auto inst = build(ni.C, ni.d);
        auto vi = prepare_instance<Rat>(inst.cd, FieldSpec{}, inst.A);
        auto rep = verify_annihilators(vi);
        if (!rep.ok()) {
            note = ni.name + ": " + rep.summary_table();
            return false;
        }
    }
    return true;
}

bool criterion9_negative_controls(std::string& note) {
    // (a) non-Dynkin input is refused
    auto eu = validate_gcm({{2, -2}, {-2, 2}}, {1, 1});
    bool refused = false;
    try {
        WeylGroup::generate(eu);
    } catch (const NotFinite&) {
        refused = true;
    }
    if (!refused) {
        note = "Euclidean input was not refused by the Weyl generator";
        return false;
    }
    refused = false;
    try {
        prepare_instance<Rat>(eu, FieldSpec{}, nullptr);
    } catch (const NotDynkin&) {
        refused = true;
    }
    if (!refused) {
        note = "Euclidean input was not refused by the verifier";
        return false;
    }

    // (b) a corrupted mesh sign must trip at least one structural check:
    // flip the first term of the three-term mesh at vertex 1 of G2
    auto cd = validate_gcm(kG2, {3, 1});
    auto pres = quiver_presentation(cd, AlgebraKind::Preprojective);
    bool flipped = false;
    for (auto& r : pres.relations)
        if (r.name == "mesh(1)" && r.terms.size() >= 3) {
            r.terms[0].coeff *= -1;
            flipped = true;
            break;
        }
    if (!flipped) {
        note = "could not locate the mesh term to corrupt";
        return false;
    }
    int detected = 0;
    try {
        auto rs = RewriteSystem<Rat>::complete(pres, default_degree_bound(cd));
        std::shared_ptr<const FinDimAlgebra<Rat>> A =
            FinDimAlgebra<Rat>::assemble(rs);
        auto W = WeylGroup::generate(cd);
        SttiltOptions opt;
        opt.validate_pairs = true;
        opt.validate_order = true;
        auto lat = sttilt_lattice<Rat>(A, W, opt);
        // lattice validation did not complain; run the sweeps
        for (int w = 0; w < W.size() && detected == 0; ++w) {
            if (!try_locally_free(lat.node(w).module).locally_free)
                ++detected;
            auto tp = torsion_pair_report(lat, w);
            if (!tp.ok())
                ++detected;
        }
    } catch (const Error&) {
        ++detected; // structural validation rejected the corrupted algebra
    }
    if (detected == 0) {
        note = "corrupted relation went undetected";
        return false;
    }
    note = "refusal and corruption detection both fired";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1,
         "golden rank-two instance: |W| = 8, labeled lattice matches the "
         "expected picture, six rigid modules member-by-member",
         criterion1_golden},
        {2, "every ideal and nonzero column locally free across the sweep",
         criterion2_theorem_a},
        {3,
         "injectivity, weak-order/factor anti-isomorphism, both dualities, "
         "exact dimension bookkeeping across the sweep",
         criterion3_theorem_b},
        {4, "all reduced words give the identical echelonized ideal",
         criterion4_word_independence},
        {5, "mutation formula and length/product equivalences at every pair",
         criterion5_mutation},
        {6, "homological suite: Ext/Tor vanishing, tensor dichotomy, Ext "
            "symmetry, self-injectivity",
         criterion6_homological},
        {7, "rewriting dimension equals brute-force oracle dimension",
         criterion7_oracle},
        {8, "annihilator identity and unique faithful node",
         criterion8_annihilators},
        {9, "negative controls: refusal and corruption sensitivity",
         criterion9_negative_controls},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string note;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n",
                    ok ? "PASS" : "FAIL", c.id, c.description.c_str(), secs,
                    note.empty() ? "" : " -- ", note.c_str());
        if (!ok)
            ++failures;
    }
    if (failures) {
        std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
