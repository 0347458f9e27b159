#pragma once

// Finite Weyl group of a Dynkin-type Cartan datum, generated by breadth
// first closure of the simple reflections s_i acting on the root lattice by
// s_i(alpha_j) = alpha_j - c_ij alpha_i. Elements are canonicalized by their
// integer matrix; one reduced word per element is kept from the BFS tree.

#include "gpa/cartan.hpp"

#include <array>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace gpa {

class WeylGroup {
public:
    /// Throws NotFinite unless the input classifies as Dynkin.
    static WeylGroup generate(const CartanData& cd);

    int rank() const { return n_; }
    int size() const { return static_cast<int>(mats_.size()); }
    int identity() const { return 0; }
    int longest() const { return w0_; }

    int length(int w) const { return length_[w]; }
    const std::vector<int>& word(int w) const { return word_[w]; }
    const std::vector<int>& matrix(int w) const { return mats_[w]; }

    /// Index of w * s_i.
    int right(int w, int i) const { return right_[w][i]; }
    /// Index of s_i * w.
    int left(int i, int w) const { return product(right_[0][i], w); }
    int product(int u, int v) const;
    int inverse(int w) const { return inv_[w]; }

    bool is_ascent(int w, int i) const {
        return length_[right_[w][i]] > length_[w];
    }
    std::vector<int> ascents(int w) const;
    std::vector<int> descents(int w) const;

    /// Right weak order: u <= v iff l(u) + l(u^{-1} v) = l(v).
    bool leq_right(int u, int v) const;

    /// All reduced words of w, by descent recursion.
    std::set<std::vector<int>> reduced_words(int w) const;

    /// Elements covered by exactly one element, i.e. with a unique ascent.
    std::vector<int> meet_irreducibles() const;

    /// Hasse covers (w, w s_i, i) of the right weak order.
    std::vector<std::array<int, 3>> hasse_edges() const;

    std::string word_name(int w) const; // "e", "s1", "s1s2", ...

    int positive_root_count() const { return pos_roots_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> mats_; // flattened n x n, row-major
    std::vector<int> length_;
    std::vector<std::vector<int>> word_;
    std::vector<std::vector<int>> right_;
    std::vector<int> inv_;
    int w0_ = -1;
    int pos_roots_ = 0;
};

/// Materialized right weak order: all elements with the cover relations,
/// owning its group so it can be passed around freely.
struct WeakOrderPoset {
    std::shared_ptr<const WeylGroup> group;
    std::vector<std::array<int, 3>> hasse; // (u, u s_i, i)

    int size() const { return group->size(); }
    bool leq(int u, int v) const { return group->leq_right(u, v); }
    int minimum() const { return group->identity(); }
    int maximum() const { return group->longest(); }
};

inline WeakOrderPoset weak_order(const WeylGroup& W) {
    WeakOrderPoset p;
    p.group = std::make_shared<WeylGroup>(W);
    p.hasse = W.hasse_edges();
    return p;
}

std::string weak_order_dot(const WeylGroup& W);

} // namespace gpa
