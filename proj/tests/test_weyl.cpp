#include "doctest.h"

#include "gpa/weyl.hpp"

#include <set>

using namespace gpa;

namespace {

WeylGroup make(const IntMatrix& C, const std::vector<int>& d) {
    return WeylGroup::generate(validate_gcm(C, d));
}

const IntMatrix kB2 = {{2, -1}, {-2, 2}};
const IntMatrix kA2 = {{2, -1}, {-1, 2}};
const IntMatrix kG2 = {{2, -1}, {-3, 2}};
const IntMatrix kA3 = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};

} // namespace

TEST_CASE("group orders match the classical values") {
    CHECK(make({{2}}, {1}).size() == 2);
    CHECK(make(kA2, {1, 1}).size() == 6);
    CHECK(make(kB2, {2, 1}).size() == 8);
    CHECK(make(kG2, {3, 1}).size() == 12);
    CHECK(make(kA3, {1, 1, 1}).size() == 24);
}

TEST_CASE("generation refuses non-Dynkin input") {
    auto cd = validate_gcm({{2, -2}, {-2, 2}}, {1, 1});
    CHECK_THROWS_AS(WeylGroup::generate(cd), NotFinite);
}

TEST_CASE("lengths, longest element and the involution w0") {
    auto W = make(kB2, {2, 1});
    CHECK(W.length(W.longest()) == 4);
    CHECK(W.product(W.longest(), W.longest()) == W.identity());
    CHECK(W.positive_root_count() == 4);

    auto A2 = make(kA2, {1, 1});
    CHECK(A2.length(A2.longest()) == 3);
    auto A3 = make(kA3, {1, 1, 1});
    CHECK(A3.length(A3.longest()) == 6);
    auto G2 = make(kG2, {3, 1});
    CHECK(G2.length(G2.longest()) == 6);
}

TEST_CASE("duality of lengths against w0") {
    for (auto W : {make(kB2, {2, 1}), make(kA2, {1, 1}), make(kA3, {1, 1, 1})})
        for (int w = 0; w < W.size(); ++w)
            CHECK(W.length(W.product(W.longest(), w)) ==
                  W.length(W.longest()) - W.length(w));
}

TEST_CASE("length changes by exactly one under a generator") {
    auto W = make(kA3, {1, 1, 1});
    for (int w = 0; w < W.size(); ++w)
        for (int i = 0; i < W.rank(); ++i) {
            int d = W.length(W.right(w, i)) - W.length(w);
            CHECK((d == 1 || d == -1));
        }
}

TEST_CASE("length is subadditive") {
    auto W = make(kB2, {2, 1});
    for (int u = 0; u < W.size(); ++u)
        for (int v = 0; v < W.size(); ++v)
            CHECK(W.length(W.product(u, v)) <= W.length(u) + W.length(v));
}

TEST_CASE("reduced words of the longest element") {
    auto B2 = make(kB2, {2, 1});
    auto words = B2.reduced_words(B2.longest());
    CHECK(words == std::set<std::vector<int>>{{0, 1, 0, 1}, {1, 0, 1, 0}});

    auto A2 = make(kA2, {1, 1});
    CHECK(A2.reduced_words(A2.longest()) ==
          std::set<std::vector<int>>{{0, 1, 0}, {1, 0, 1}});
    CHECK(A2.reduced_words(A2.identity()) ==
          std::set<std::vector<int>>{{}});
}

TEST_CASE("every reduced word multiplies back to the same element") {
    for (auto W : {make(kB2, {2, 1}), make(kA2, {1, 1})}) {
        for (int w = 0; w < W.size(); ++w) {
            for (const auto& word : W.reduced_words(w)) {
                CHECK(static_cast<int>(word.size()) == W.length(w));
                int x = W.identity();
                for (int i : word)
                    x = W.right(x, i);
                CHECK(x == w);
            }
        }
    }
}

TEST_CASE("weak order: covers, comparability, bounds") {
    auto W = make(kB2, {2, 1});
    auto edges = W.hasse_edges();
    CHECK(edges.size() == 8); // 8 covers in the rank-two octagon

    // u <= v iff some saturated ascent chain joins them; cross-check the
    // length criterion against reachability along Hasse edges
    auto reachable = [&](int u, int v) {
        if (u == v)
            return true;
        std::set<int> frontier = {u};
        for (int step = 0; step < W.size(); ++step) {
            std::set<int> next;
            for (int x : frontier)
                for (const auto& [a, b, i] : edges)
                    if (a == x)
                        next.insert(b);
            if (next.count(v))
                return true;
            frontier = next;
            if (frontier.empty())
                break;
        }
        return false;
    };
    for (int u = 0; u < W.size(); ++u)
        for (int v = 0; v < W.size(); ++v)
            CHECK(W.leq_right(u, v) == reachable(u, v));

    for (int w = 0; w < W.size(); ++w) {
        CHECK(W.leq_right(W.identity(), w));
        CHECK(W.leq_right(w, W.longest()));
    }
}

TEST_CASE("the symmetric rank-two weak order is the hexagon") {
    auto W = make(kA2, {1, 1});
    CHECK(W.size() == 6);
    // covers: two out of e, one out of each length-1 and length-2 element
    CHECK(W.hasse_edges().size() == 6);
}

TEST_CASE("weak order is a lattice on desk instances") {
    for (auto W :
         {make(kA2, {1, 1}), make(kB2, {2, 1}), make(kA3, {1, 1, 1})}) {
        auto leq = [&](int a, int b) { return W.leq_right(a, b); };
        for (int u = 0; u < W.size(); ++u) {
            for (int v = 0; v < W.size(); ++v) {
                int meets = 0, joins = 0;
                for (int m = 0; m < W.size(); ++m) {
                    bool lower = leq(m, u) && leq(m, v);
                    bool upper = leq(u, m) && leq(v, m);
                    if (lower) {
                        bool maximal = true;
                        for (int x = 0; x < W.size(); ++x)
                            if (leq(x, u) && leq(x, v) && leq(m, x) && x != m)
                                maximal = false;
                        if (maximal)
                            ++meets;
                    }
                    if (upper) {
                        bool minimal = true;
                        for (int x = 0; x < W.size(); ++x)
                            if (leq(u, x) && leq(v, x) && leq(x, m) && x != m)
                                minimal = false;
                        if (minimal)
                            ++joins;
                    }
                }
                CHECK(meets == 1);
                CHECK(joins == 1);
            }
        }
    }
}

TEST_CASE("the materialized poset carries bounds and covers") {
    auto W = make(kB2, {2, 1});
    auto P = weak_order(W);
    CHECK(P.size() == 8);
    CHECK(P.hasse.size() == 8);
    CHECK(P.minimum() == W.identity());
    CHECK(P.maximum() == W.longest());
    for (const auto& [u, v, i] : P.hasse) {
        CHECK(P.leq(u, v));
        CHECK(P.group->length(v) == P.group->length(u) + 1);
        CHECK(P.group->right(u, i) == v);
    }
}

TEST_CASE("meet irreducibles") {
    auto B2 = make(kB2, {2, 1});
    auto mi = B2.meet_irreducibles();
    CHECK(mi.size() == 6);
    std::set<std::string> names;
    for (int w : mi)
        names.insert(B2.word_name(w));
    CHECK(names == std::set<std::string>{"s1", "s2", "s1s2", "s2s1", "s1s2s1",
                                         "s2s1s2"});

    auto A1 = make({{2}}, {1});
    CHECK(A1.meet_irreducibles() == std::vector<int>{0}); // just e

    auto A2 = make(kA2, {1, 1});
    CHECK(A2.meet_irreducibles().size() == 4);
}

TEST_CASE("length equals the number of inverted positive roots") {
    for (auto& [C, d] : std::vector<std::pair<IntMatrix, std::vector<int>>>{
             {kB2, {2, 1}}, {kA2, {1, 1}}, {kG2, {3, 1}}}) {
        auto cd = validate_gcm(C, d);
        auto W = WeylGroup::generate(cd);
        int n = cd.n;
        // positive roots: closure of the simple roots under the reflections
        std::set<std::vector<int>> roots;
        std::vector<std::vector<int>> queue;
        for (int i = 0; i < n; ++i) {
            std::vector<int> a(n, 0);
            a[i] = 1;
            roots.insert(a);
            queue.push_back(a);
        }
        auto reflect = [&](int i, const std::vector<int>& r) {
            // s_i(alpha_j) = alpha_j - c_ij alpha_i applied to coordinates
            std::vector<int> out = r;
            int pairing = 0;
            for (int j = 0; j < n; ++j)
                pairing += cd.C[i][j] * r[j];
            out[i] -= pairing;
            return out;
        };
        while (!queue.empty()) {
            auto r = queue.back();
            queue.pop_back();
            for (int i = 0; i < n; ++i) {
                auto img = reflect(i, r);
                if (roots.insert(img).second)
                    queue.push_back(img);
            }
        }
        std::vector<std::vector<int>> positive;
        for (const auto& r : roots)
            if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }))
                positive.push_back(r);
        CHECK(static_cast<int>(positive.size()) == W.positive_root_count());
        for (int w = 0; w < W.size(); ++w) {
            int inverted = 0;
            for (const auto& r : positive) {
                const auto& m = W.matrix(w);
                std::vector<int> img(n, 0);
                for (int row = 0; row < n; ++row)
                    for (int col = 0; col < n; ++col)
                        img[row] += m[row * n + col] * r[col];
                bool negative = std::all_of(img.begin(), img.end(),
                                            [](int x) { return x <= 0; });
                if (negative)
                    ++inverted;
            }
            CHECK(inverted == W.length(w));
        }
    }
}

TEST_CASE("dot export lists every element once") {
    auto W = make(kB2, {2, 1});
    auto dot = weak_order_dot(W);
    CHECK(dot.find("label=\"e\"") != std::string::npos);
    CHECK(dot.find("(w0)") != std::string::npos);
    CHECK(dot.find("s1s2s1s2") != std::string::npos);
}
