#pragma once

// Finite dimensional left modules over an assembled algebra: per-vertex
// spaces plus one action matrix per quiver generator. Right modules are
// uniformly realized as left modules over the opposite algebra, so there
// is a single code path. Every constructor checks that the defining
// relations act as zero.

#include "gpa/algebra.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace gpa {

/// Per-vertex collection of matrices, the shape of every module map.
template <class F>
using BlockMap = std::vector<Mat<F>>;

template <class F>
class ModuleRep {
public:
    std::shared_ptr<const FinDimAlgebra<F>> A;
    std::vector<int> dims;      // dim of e_i M per vertex
    std::vector<Mat<F>> act;    // per arrow id: M_{src} -> M_{tgt}

    ModuleRep() = default;
    ModuleRep(std::shared_ptr<const FinDimAlgebra<F>> alg,
              std::vector<int> d, std::vector<Mat<F>> a)
        : A(std::move(alg)), dims(std::move(d)), act(std::move(a)),
          cache_(std::make_shared<Cache>()) {
        check_shapes();
        check_relations();
    }

    int total_dim() const {
        int t = 0;
        for (int d : dims)
            t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    static ModuleRep zero(std::shared_ptr<const FinDimAlgebra<F>> A);
    static ModuleRep projective(std::shared_ptr<const FinDimAlgebra<F>> A,
                                int i);
    static ModuleRep
    generalized_simple(std::shared_ptr<const FinDimAlgebra<F>> A, int i);
    static ModuleRep simple(std::shared_ptr<const FinDimAlgebra<F>> A, int i);
    /// The algebra as a left module over itself.
    static ModuleRep regular(std::shared_ptr<const FinDimAlgebra<F>> A);

    /// Action of a basis word (cached) and of a bigraded algebra element.
    const Mat<F>& basis_action(int k) const;
    Mat<F> element_action(const Vec<F>& x, int tgt, int src) const;

    /// Standard duality: a module over the opposite algebra on the dual
    /// spaces, with transposed actions.
    ModuleRep dual() const;

    friend ModuleRep direct_sum(const std::vector<const ModuleRep*>& parts) {
        if (parts.empty())
            throw Error("direct_sum of nothing");
        auto A = parts[0]->A;
        int n = A->n;
        std::vector<int> dims(n, 0);
        for (auto* p : parts) {
            if (p->A != A)
                throw Error("direct_sum across different algebras");
            for (int v = 0; v < n; ++v)
                dims[v] += p->dims[v];
        }
        std::vector<Mat<F>> act;
        for (size_t a = 0; a < A->pres.arrows.size(); ++a) {
            int s = A->pres.arrows[a].src, t = A->pres.arrows[a].tgt;
            Mat<F> m(dims[t], dims[s]);
            int ro = 0, co = 0;
            for (auto* p : parts) {
                const Mat<F>& blk = p->act[a];
                for (int r = 0; r < blk.rows; ++r)
                    for (int c = 0; c < blk.cols; ++c)
                        m.at(ro + r, co + c) = blk.at(r, c);
                ro += p->dims[t];
                co += p->dims[s];
            }
            act.push_back(std::move(m));
        }
        return ModuleRep(A, std::move(dims), std::move(act));
    }

    void check_relations() const;

private:
    struct Cache {
        std::mutex mu;
        std::vector<std::optional<Mat<F>>> word_act;
    };
    std::shared_ptr<Cache> cache_;

    void check_shapes() const {
        if (static_cast<int>(dims.size()) != A->n)
            throw Error("module has wrong vertex count");
        if (act.size() != A->pres.arrows.size())
            throw Error("module has wrong generator count");
        for (size_t a = 0; a < act.size(); ++a) {
            const Arrow& ar = A->pres.arrows[a];
            if (act[a].rows != dims[ar.tgt] || act[a].cols != dims[ar.src])
                throw Error("action matrix shape mismatch on " + ar.name);
        }
    }

    Mat<F> word_action_uncached(const PathWord& w) const {
        Mat<F> m = Mat<F>::identity(dims[w.tgt]);
        for (int id : w.arrows)
            m = m * act[id];
        return m;
    }
};

// ---------------------------------------------------------------------------

template <class F>
void ModuleRep<F>::check_relations() const {
    for (const Relation& rel : A->pres.relations) {
        Mat<F> acc(dims[rel.tgt], dims[rel.src]);
        for (const PathTerm& t : rel.terms) {
            Mat<F> m = word_action_uncached(t.word);
            for (size_t k = 0; k < m.a.size(); ++k)
                acc.a[k] += F(t.coeff) * m.a[k];
        }
        if (!acc.is_zero())
            throw RelationViolation("relation " + rel.name +
                                    " does not act as zero on the module");
    }
}

template <class F>
const Mat<F>& ModuleRep<F>::basis_action(int k) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& slot = cache_->word_act;
    if (slot.empty())
        slot.resize(A->dim());
    if (!slot[k])
        slot[k] = word_action_uncached(A->basis[k]);
    return *slot[k];
}

template <class F>
Mat<F> ModuleRep<F>::element_action(const Vec<F>& x, int tgt, int src) const {
    Mat<F> m(dims[tgt], dims[src]);
    for (int k = 0; k < A->dim(); ++k) {
        if (x[k].is_zero())
            continue;
        if (A->tgt[k] != tgt || A->src[k] != src)
            throw Error("element_action on a non-homogeneous element");
        const Mat<F>& w = basis_action(k);
        for (size_t t = 0; t < m.a.size(); ++t)
            m.a[t] += x[k] * w.a[t];
    }
    return m;
}

template <class F>
ModuleRep<F> ModuleRep<F>::zero(std::shared_ptr<const FinDimAlgebra<F>> A) {
    std::vector<int> dims(A->n, 0);
    std::vector<Mat<F>> act(A->pres.arrows.size(), Mat<F>(0, 0));
    return ModuleRep(A, std::move(dims), std::move(act));
}

template <class F>
ModuleRep<F>
ModuleRep<F>::projective(std::shared_ptr<const FinDimAlgebra<F>> A, int i) {
    // basis: algebra words with source i, grouped by target vertex in basis
    // order; action is left multiplication
    int n = A->n;
    std::vector<std::vector<int>> local(n); // vertex -> basis word indices
    for (int v = 0; v < n; ++v)
        local[v] = A->words_with(v, i);
    std::vector<int> dims(n);
    std::vector<std::vector<int>> pos(n, std::vector<int>(A->dim(), -1));
    for (int v = 0; v < n; ++v) {
        dims[v] = static_cast<int>(local[v].size());
        for (int t = 0; t < dims[v]; ++t)
            pos[v][local[v][t]] = t;
    }
    std::vector<Mat<F>> act;
    for (const Arrow& ar : A->pres.arrows) {
        Mat<F> m(dims[ar.tgt], dims[ar.src]);
        for (int c = 0; c < dims[ar.src]; ++c) {
            int k = local[ar.src][c];
            // arrow image may itself be a combination of basis words
            for (const auto& [aw, ac] : A->arrow_nf[ar.id]) {
                for (const auto& [pk, pc] : A->mult_basis(aw, k)) {
                    int r = pos[ar.tgt][pk];
                    if (r < 0)
                        throw Error("left multiplication left the projective");
                    m.at(r, c) += ac * pc;
                }
            }
        }
        act.push_back(std::move(m));
    }
    return ModuleRep(A, std::move(dims), std::move(act));
}

template <class F>
ModuleRep<F>
ModuleRep<F>::regular(std::shared_ptr<const FinDimAlgebra<F>> A) {
    std::vector<const ModuleRep*> parts;
    std::vector<ModuleRep> held;
    held.reserve(A->n);
    for (int i = 0; i < A->n; ++i)
        held.push_back(projective(A, i));
    for (const auto& m : held)
        parts.push_back(&m);
    return direct_sum(parts);
}

template <class F>
ModuleRep<F>
ModuleRep<F>::generalized_simple(std::shared_ptr<const FinDimAlgebra<F>> A,
                                 int i) {
    int c = A->pres.cartan.D[i];
    std::vector<int> dims(A->n, 0);
    dims[i] = c;
    std::vector<Mat<F>> act;
    for (const Arrow& ar : A->pres.arrows) {
        Mat<F> m(dims[ar.tgt], dims[ar.src]);
        if (ar.loop && ar.i == i) {
            for (int k = 0; k + 1 < c; ++k)
                m.at(k + 1, k) = F(1); // regular nilpotent Jordan block
        }
        act.push_back(std::move(m));
    }
    return ModuleRep(A, std::move(dims), std::move(act));
}

template <class F>
ModuleRep<F> ModuleRep<F>::simple(std::shared_ptr<const FinDimAlgebra<F>> A,
                                  int i) {
    std::vector<int> dims(A->n, 0);
    dims[i] = 1;
    std::vector<Mat<F>> act;
    for (const Arrow& ar : A->pres.arrows)
        act.emplace_back(dims[ar.tgt], dims[ar.src]);
    return ModuleRep(A, std::move(dims), std::move(act));
}

template <class F>
ModuleRep<F> ModuleRep<F>::dual() const {
    auto op = A->opposite();
    std::vector<Mat<F>> dact;
    for (size_t a = 0; a < act.size(); ++a)
        dact.push_back(act[a].transpose());
    return ModuleRep<F>(op, dims, std::move(dact));
}

// ---------------------------------------------------------------------------
// Submodules and quotients. Vertex spans must be action-stable; both
// constructions return the module together with the basis data used.
// ---------------------------------------------------------------------------

template <class F>
struct Submodule {
    ModuleRep<F> mod;
    std::vector<Echelon<F>> span; // rows are local coordinates in the parent
};

template <class F>
Submodule<F> submodule(const ModuleRep<F>& M,
                       std::vector<Echelon<F>> span) {
    int n = M.A->n;
    std::vector<int> dims(n);
    for (int v = 0; v < n; ++v)
        dims[v] = span[v].dim();
    std::vector<Mat<F>> act;
    for (size_t a = 0; a < M.act.size(); ++a) {
        const Arrow& ar = M.A->pres.arrows[a];
        Mat<F> m(dims[ar.tgt], dims[ar.src]);
        for (int c = 0; c < dims[ar.src]; ++c) {
            Vec<F> img = M.act[a].apply(span[ar.src].rows()[c]);
            Vec<F> coords = coordinates_in(span[ar.tgt], std::move(img));
            for (int r = 0; r < dims[ar.tgt]; ++r)
                m.at(r, c) = coords[r];
        }
        act.push_back(std::move(m));
    }
    Submodule<F> out;
    out.mod = ModuleRep<F>(M.A, std::move(dims), std::move(act));
    out.span = std::move(span);
    return out;
}

template <class F>
struct QuotientModule {
    ModuleRep<F> mod;
    std::vector<Echelon<F>> killed;
    std::vector<std::vector<int>> coset_coords; // surviving coordinates per vertex

    /// Projection of a parent-local vector at a vertex.
    Vec<F> project(int v, Vec<F> x) const {
        x = killed[v].reduce(std::move(x));
        Vec<F> out(coset_coords[v].size(), F(0));
        for (size_t t = 0; t < coset_coords[v].size(); ++t)
            out[t] = x[coset_coords[v][t]];
        return out;
    }
};

template <class F>
QuotientModule<F> quotient_module(const ModuleRep<F>& M,
                                  std::vector<Echelon<F>> killed) {
    int n = M.A->n;
    QuotientModule<F> out;
    out.coset_coords.resize(n);
    std::vector<int> dims(n);
    for (int v = 0; v < n; ++v) {
        std::vector<bool> pivot(M.dims[v], false);
        for (int l : killed[v].leads())
            pivot[l] = true;
        for (int c = 0; c < M.dims[v]; ++c)
            if (!pivot[c])
                out.coset_coords[v].push_back(c);
        dims[v] = static_cast<int>(out.coset_coords[v].size());
    }
    out.killed = std::move(killed);
    std::vector<Mat<F>> act;
    for (size_t a = 0; a < M.act.size(); ++a) {
        const Arrow& ar = M.A->pres.arrows[a];
        Mat<F> m(dims[ar.tgt], dims[ar.src]);
        for (int c = 0; c < dims[ar.src]; ++c) {
            Vec<F> lift(M.dims[ar.src], F(0));
            lift[out.coset_coords[ar.src][c]] = F(1);
            Vec<F> img = out.project(ar.tgt, M.act[a].apply(lift));
            for (int r = 0; r < dims[ar.tgt]; ++r)
                m.at(r, c) = img[r];
        }
        act.push_back(std::move(m));
    }
    out.mod = ModuleRep<F>(M.A, std::move(dims), std::move(act));
    return out;
}

/// Kernel of a block map f : M -> N (f_v : M_v -> N_v commuting with the
/// actions); commutation is the caller's responsibility and is implied by
/// the submodule closure check.
template <class F>
Submodule<F> kernel_submodule(const ModuleRep<F>& M, const ModuleRep<F>& N,
                              const BlockMap<F>& f) {
    int n = M.A->n;
    std::vector<Echelon<F>> span;
    for (int v = 0; v < n; ++v) {
        if (f[v].rows != N.dims[v] || f[v].cols != M.dims[v])
            throw Error("kernel_submodule: block shape mismatch");
        Echelon<F> e(M.dims[v]);
        for (auto& x : nullspace(f[v]))
            e.insert(std::move(x));
        span.push_back(std::move(e));
    }
    return submodule(M, std::move(span));
}

/// Per-vertex span of rad * M = sum of images of all generator actions
/// into each vertex.
template <class F>
std::vector<Echelon<F>> radical_span(const ModuleRep<F>& M) {
    int n = M.A->n;
    std::vector<Echelon<F>> rad;
    for (int v = 0; v < n; ++v)
        rad.emplace_back(M.dims[v]);
    for (size_t a = 0; a < M.act.size(); ++a) {
        const Arrow& ar = M.A->pres.arrows[a];
        for (int c = 0; c < M.dims[ar.src]; ++c) {
            Vec<F> col(M.dims[ar.tgt], F(0));
            for (int r = 0; r < M.dims[ar.tgt]; ++r)
                col[r] = M.act[a].at(r, c);
            rad[ar.tgt].insert(std::move(col));
        }
    }
    return rad;
}

/// soc M = { m : rad m = 0 }, the largest semisimple submodule.
template <class F>
Submodule<F> socle(const ModuleRep<F>& M) {
    int n = M.A->n;
    std::vector<Echelon<F>> span;
    for (int v = 0; v < n; ++v) {
        // intersect kernels of all generators out of v
        int rows = 0;
        for (size_t a = 0; a < M.act.size(); ++a)
            if (M.A->pres.arrows[a].src == v)
                rows += M.act[a].rows;
        Mat<F> stack(rows, M.dims[v]);
        int ro = 0;
        for (size_t a = 0; a < M.act.size(); ++a) {
            if (M.A->pres.arrows[a].src != v)
                continue;
            for (int r = 0; r < M.act[a].rows; ++r)
                for (int c = 0; c < M.dims[v]; ++c)
                    stack.at(ro + r, c) = M.act[a].at(r, c);
            ro += M.act[a].rows;
        }
        Echelon<F> e(M.dims[v]);
        for (auto& x : nullspace(stack))
            e.insert(std::move(x));
        span.push_back(std::move(e));
    }
    return submodule(M, std::move(span));
}

// ---------------------------------------------------------------------------
// Locally free modules
// ---------------------------------------------------------------------------

struct RankVector {
    std::vector<int> r;
    friend bool operator==(const RankVector& a, const RankVector& b) {
        return a.r == b.r;
    }
};

/// The loop action on one vertex space, i.e. the module structure over the
/// local truncated polynomial algebra at that vertex.
template <class F>
struct HiModuleView {
    int vertex = 0;
    int order = 1;       // nilpotency order c_i
    Mat<F> nilpotent;    // action of the loop on e_i M

    bool valid() const {
        Mat<F> p = Mat<F>::identity(nilpotent.rows);
        for (int k = 0; k < order; ++k)
            p = p * nilpotent;
        return p.is_zero();
    }
};

template <class F>
HiModuleView<F> local_view(const ModuleRep<F>& M, int i) {
    HiModuleView<F> v;
    v.vertex = i;
    v.order = M.A->pres.cartan.D[i];
    v.nilpotent = M.act[M.A->pres.loop_at(i).id];
    return v;
}

template <class F>
struct FreenessReport {
    bool locally_free = false;
    RankVector rank;
    int failing_vertex = -1;
    std::vector<int> block_sizes; // nilpotent block sizes at the failing vertex
};

/// A module is free over the local loop algebra at vertex i iff every
/// nilpotent block of the loop action has size exactly c_i; the counting
/// criterion c_i * dim ker = dim is cross-checked against the block sizes.
template <class F>
FreenessReport<F> try_locally_free(const ModuleRep<F>& M) {
    FreenessReport<F> rep;
    int n = M.A->n;
    rep.rank.r.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int c = M.A->pres.cartan.D[i];
        const Arrow& loop = M.A->pres.loop_at(i);
        const Mat<F>& E = M.act[loop.id];
        int d = M.dims[i];
        if (d == 0)
            continue;
        // block structure from ranks of powers
        std::vector<int> rk{d};
        Mat<F> p = Mat<F>::identity(d);
        for (int k = 1; k <= c + 1; ++k) {
            p = p * E;
            rk.push_back(rank_of(p));
        }
        if (rk[c] != 0)
            throw Error("loop action is not nilpotent of the local order");
        std::vector<int> sizes;
        for (int k = 1; k <= c; ++k) {
            int count = (rk[k - 1] - rk[k]) - (k < c ? rk[k] - rk[k + 1] : 0);
            for (int t = 0; t < count; ++t)
                sizes.push_back(k);
        }
        int ker = d - rk[1];
        bool count_free = (static_cast<long long>(c) * ker == d);
        bool block_free =
            std::all_of(sizes.begin(), sizes.end(),
                        [c](int s) { return s == c; });
        if (count_free != block_free)
            throw Error("freeness criteria disagree; internal error");
        if (!count_free) {
            rep.locally_free = false;
            rep.failing_vertex = i;
            rep.block_sizes = std::move(sizes);
            return rep;
        }
        rep.rank.r[i] = ker;
    }
    rep.locally_free = true;
    return rep;
}

template <class F>
RankVector locally_free_rank(const ModuleRep<F>& M) {
    auto rep = try_locally_free(M);
    if (!rep.locally_free) {
        std::string sizes;
        for (int s : rep.block_sizes)
            sizes += std::to_string(s) + " ";
        throw NotLocallyFree("not free at vertex " +
                             std::to_string(rep.failing_vertex + 1) +
                             " (block sizes " + sizes + ")");
    }
    return rep.rank;
}

} // namespace gpa
