#include "gpa/weyl.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <sstream>

namespace gpa {

namespace {

using IMat = std::vector<int>; // flattened n x n

IMat reflection_matrix(const CartanData& cd, int i) {
    int n = cd.n;
    IMat m(n * n, 0);
    for (int k = 0; k < n; ++k)
        m[k * n + k] = 1;
    for (int j = 0; j < n; ++j)
        m[i * n + j] -= cd.C[i][j]; // s_i(alpha_j) = alpha_j - c_ij alpha_i
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b, int n) {
    IMat r(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int v = a[i * n + k];
            if (!v)
                continue;
            for (int j = 0; j < n; ++j)
                r[i * n + j] += v * b[k * n + j];
        }
    return r;
}

// closure of the simple roots under the reflections; finite for Dynkin type
int count_positive_roots(const CartanData& cd,
                         const std::vector<IMat>& refl) {
    int n = cd.n;
    std::set<std::vector<int>> roots;
    std::queue<std::vector<int>> q;
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(n, 0);
        a[i] = 1;
        roots.insert(a);
        q.push(a);
    }
    while (!q.empty()) {
        auto r = q.front();
        q.pop();
        for (int i = 0; i < n; ++i) {
            std::vector<int> img(n, 0);
            for (int row = 0; row < n; ++row)
                for (int col = 0; col < n; ++col)
                    img[row] += refl[i][row * n + col] * r[col];
            if (roots.insert(img).second)
                q.push(img);
        }
    }
    int pos = 0;
    for (const auto& r : roots)
        if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }))
            ++pos;
    return pos;
}

} // namespace

WeylGroup WeylGroup::generate(const CartanData& cd) {
    if (classify(cd).tag != CartanTag::Dynkin)
        throw NotFinite("Weyl group is infinite: input is not of Dynkin type");

    WeylGroup W;
    W.n_ = cd.n;
    int n = cd.n;

    std::vector<IMat> refl(n);
    for (int i = 0; i < n; ++i)
        refl[i] = reflection_matrix(cd, i);
    W.pos_roots_ = count_positive_roots(cd, refl);
    int depth_cap = W.pos_roots_ + 1;

    std::map<IMat, int> index;
    IMat id(n * n, 0);
    for (int k = 0; k < n; ++k)
        id[k * n + k] = 1;
    W.mats_.push_back(id);
    W.length_.push_back(0);
    W.word_.push_back({});
    index[id] = 0;

    std::queue<int> q;
    q.push(0);
    W.right_.push_back(std::vector<int>(n, -1));
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        for (int i = 0; i < n; ++i) {
            IMat m = mat_mul(W.mats_[w], refl[i], n);
            auto it = index.find(m);
            int idx;
            if (it == index.end()) {
                idx = static_cast<int>(W.mats_.size());
                index[m] = idx;
                W.mats_.push_back(std::move(m));
                W.length_.push_back(W.length_[w] + 1);
                if (W.length_[idx] > depth_cap)
                    throw NotFinite("BFS depth exceeded the positive root "
                                    "count; group is not finite");
                auto word = W.word_[w];
                word.push_back(i);
                W.word_.push_back(std::move(word));
                W.right_.push_back(std::vector<int>(n, -1));
                q.push(idx);
            } else {
                idx = it->second;
            }
            W.right_[w][i] = idx;
        }
    }

    // inverses: follow the reversed reduced word from the identity
    W.inv_.assign(W.size(), 0);
    for (int w = 0; w < W.size(); ++w) {
        int x = 0;
        const auto& wd = W.word_[w];
        for (auto it = wd.rbegin(); it != wd.rend(); ++it)
            x = W.right_[x][*it];
        W.inv_[w] = x;
    }

    int maxlen = -1;
    int count = 0;
    for (int w = 0; w < W.size(); ++w) {
        if (W.length_[w] > maxlen) {
            maxlen = W.length_[w];
            W.w0_ = w;
            count = 1;
        } else if (W.length_[w] == maxlen) {
            ++count;
        }
    }
    if (count != 1)
        throw Error("longest element is not unique; generation is broken");
    if (W.product(W.w0_, W.w0_) != 0)
        throw Error("w0 is not an involution; generation is broken");
    return W;
}

int WeylGroup::product(int u, int v) const {
    int x = u;
    for (int i : word_[v])
        x = right_[x][i];
    return x;
}

std::vector<int> WeylGroup::ascents(int w) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (is_ascent(w, i))
            out.push_back(i);
    return out;
}

std::vector<int> WeylGroup::descents(int w) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (!is_ascent(w, i))
            out.push_back(i);
    return out;
}

bool WeylGroup::leq_right(int u, int v) const {
    int uv = product(inv_[u], v);
    return length_[u] + length_[uv] == length_[v];
}

std::set<std::vector<int>> WeylGroup::reduced_words(int w) const {
    if (w == 0)
        return {{}};
    std::set<std::vector<int>> out;
    for (int i : descents(w)) {
        for (auto word : reduced_words(right_[w][i])) {
            word.push_back(i);
            out.insert(std::move(word));
        }
    }
    return out;
}

std::vector<int> WeylGroup::meet_irreducibles() const {
    std::vector<int> out;
    for (int w = 0; w < size(); ++w)
        if (ascents(w).size() == 1)
            out.push_back(w);
    return out;
}

std::vector<std::array<int, 3>> WeylGroup::hasse_edges() const {
    std::vector<std::array<int, 3>> edges;
    for (int w = 0; w < size(); ++w)
        for (int i = 0; i < n_; ++i)
            if (is_ascent(w, i))
                edges.push_back({w, right_[w][i], i});
    return edges;
}

std::string WeylGroup::word_name(int w) const {
    if (w == 0)
        return "e";
    std::string s;
    for (int i : word_[w])
        s += "s" + std::to_string(i + 1);
    return s;
}

std::string weak_order_dot(const WeylGroup& W) {
    std::ostringstream os;
    os << "digraph weak_order {\n";
    for (int w = 0; w < W.size(); ++w) {
        os << "  w" << w << " [label=\"" << W.word_name(w);
        if (w == W.longest())
            os << " (w0)";
        os << "\"];\n";
    }
    for (const auto& [u, v, i] : W.hasse_edges())
        os << "  w" << u << " -> w" << v << " [label=\"s" << i + 1
           << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace gpa
