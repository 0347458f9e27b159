#pragma once

// Structure-constant realization of the finite dimensional quotient. The
// basis is the set of irreducible path words of the completed rewriting
// system, bigraded by (target, source); multiplication tabulates normal
// forms of concatenations. The opposite algebra shares the basis and is
// cached so that op(op(A)) is pointer-identical to A.

#include "gpa/rewrite.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace gpa {

template <class F>
using SparseVec = std::vector<std::pair<int, F>>; // (basis index, coeff)

template <class F>
class FinDimAlgebra
    : public std::enable_shared_from_this<FinDimAlgebra<F>> {
public:
    QuiverPresentation pres;
    int n = 0;                          // vertices
    std::vector<PathWord> basis;        // index 0..n-1 are the e_i, in order
    std::vector<int> src, tgt, deg;     // per basis word
    std::vector<SparseVec<F>> arrow_nf; // arrow id -> element coordinates
    bool opposite_side = false;

    int dim() const { return static_cast<int>(basis.size()); }
    int idempotent(int i) const { return i; }

    const SparseVec<F>& mult_basis(int i, int j) const {
        return table_[static_cast<size_t>(i) * dim() + j];
    }

    /// x * y in the algebra (function-composition order: y acts first).
    Vec<F> mult(const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> out(dim(), F(0));
        for (int i = 0; i < dim(); ++i) {
            if (x[i].is_zero())
                continue;
            for (int j = 0; j < dim(); ++j) {
                if (y[j].is_zero())
                    continue;
                F c = x[i] * y[j];
                for (const auto& [k, v] : mult_basis(i, j))
                    out[k] += c * v;
            }
        }
        return out;
    }

    Vec<F> unit() const {
        Vec<F> u(dim(), F(0));
        for (int i = 0; i < n; ++i)
            u[i] = F(1);
        return u;
    }

    Vec<F> basis_vec(int k) const {
        Vec<F> v(dim(), F(0));
        v[k] = F(1);
        return v;
    }

    /// Indices of basis words with the given source (left-projective span).
    std::vector<int> words_with_src(int i) const {
        std::vector<int> out;
        for (int k = 0; k < dim(); ++k)
            if (src[k] == i)
                out.push_back(k);
        return out;
    }
    std::vector<int> words_with_tgt(int j) const {
        std::vector<int> out;
        for (int k = 0; k < dim(); ++k)
            if (tgt[k] == j)
                out.push_back(k);
        return out;
    }
    std::vector<int> words_with(int t, int s) const {
        std::vector<int> out;
        for (int k = 0; k < dim(); ++k)
            if (tgt[k] == t && src[k] == s)
                out.push_back(k);
        return out;
    }

    std::string render_element(const Vec<F>& x) const {
        std::string s;
        for (int k = 0; k < dim(); ++k) {
            if (x[k].is_zero())
                continue;
            if (!s.empty())
                s += " + ";
            if (!x[k].is_one())
                s += x[k].str() + "*";
            s += pres.render_word(basis[k]);
        }
        return s.empty() ? "0" : s;
    }

    /// Opposite algebra: same basis, reversed multiplication, swapped
    /// bigrading. Cached; op(op(A)) == A as a pointer.
    std::shared_ptr<const FinDimAlgebra> opposite() const;

    static std::shared_ptr<FinDimAlgebra>
    assemble(const RewriteSystem<F>& rs);

    /// Rebuild from serialized parts (cache loading).
    static std::shared_ptr<FinDimAlgebra>
    from_parts(QuiverPresentation pres, std::vector<PathWord> basis,
               std::vector<SparseVec<F>> table,
               std::vector<SparseVec<F>> arrow_nf);

    struct RelationCheck {
        std::string name;
        bool ok = false;
        std::string residual;
    };

    /// Evaluates every defining relation in the algebra; all must vanish.
    /// Throws RelationViolation on failure unless throwing == false.
    std::vector<RelationCheck> check_relations(bool throwing = true) const;

    /// Structural integrity of a deserialized table: bigrading, idempotent
    /// laws, and a full associativity sweep. Throws CacheError.
    void validate_structure() const;

    Vec<F> eval_word(const PathWord& w) const;

private:
    std::vector<SparseVec<F>> table_;
    // forward cache is strong, the back edge is weak: no ownership cycle
    mutable std::shared_ptr<const FinDimAlgebra> op_;
    mutable std::weak_ptr<const FinDimAlgebra> op_back_;
    mutable std::mutex op_mutex_;

    void index_basis();
};

// ---------------------------------------------------------------------------

template <class F>
void FinDimAlgebra<F>::index_basis() {
    src.clear();
    tgt.clear();
    deg.clear();
    for (const PathWord& w : basis) {
        src.push_back(w.src);
        tgt.push_back(w.tgt);
        deg.push_back(w.degree());
    }
    for (int i = 0; i < n; ++i)
        if (deg[i] != 0 || src[i] != i)
            throw Error("basis does not start with the vertex idempotents");
}

template <class F>
std::shared_ptr<FinDimAlgebra<F>>
FinDimAlgebra<F>::assemble(const RewriteSystem<F>& rs) {
    auto A = std::make_shared<FinDimAlgebra<F>>();
    A->pres = rs.presentation();
    A->n = A->pres.n;
    A->basis = rs.irreducible();
    A->index_basis();

    std::map<PathWord, int, DeglexLess> index;
    for (int k = 0; k < A->dim(); ++k)
        index.emplace(A->basis[k], k);

    auto to_sparse = [&](const PathPoly<F>& poly) {
        SparseVec<F> out;
        for (const auto& [w, c] : poly) {
            auto it = index.find(w);
            if (it == index.end())
                throw Error("normal form outside the certified basis");
            out.emplace_back(it->second, c);
        }
        return out;
    };

    A->table_.assign(static_cast<size_t>(A->dim()) * A->dim(), {});
    for (int i = 0; i < A->dim(); ++i) {
        for (int j = 0; j < A->dim(); ++j) {
            if (A->basis[i].src != A->basis[j].tgt)
                continue; // non-composable: product is zero
            PathWord prod;
            prod.src = A->basis[j].src;
            prod.tgt = A->basis[i].tgt;
            prod.arrows = A->basis[i].arrows;
            prod.arrows.insert(prod.arrows.end(), A->basis[j].arrows.begin(),
                               A->basis[j].arrows.end());
            A->table_[static_cast<size_t>(i) * A->dim() + j] =
                to_sparse(rs.normal_form_word(prod));
        }
    }

    A->arrow_nf.clear();
    for (const Arrow& a : A->pres.arrows) {
        PathWord w;
        w.src = a.src;
        w.tgt = a.tgt;
        w.arrows = {a.id};
        A->arrow_nf.push_back(to_sparse(rs.normal_form_word(w)));
    }

    A->check_relations();
    return A;
}

template <class F>
std::shared_ptr<FinDimAlgebra<F>> FinDimAlgebra<F>::from_parts(
    QuiverPresentation pres, std::vector<PathWord> basis,
    std::vector<SparseVec<F>> table, std::vector<SparseVec<F>> arrow_nf) {
    auto A = std::make_shared<FinDimAlgebra<F>>();
    A->pres = std::move(pres);
    A->n = A->pres.n;
    A->basis = std::move(basis);
    A->index_basis();
    if (table.size() != static_cast<size_t>(A->dim()) * A->dim())
        throw CacheError("multiplication table has wrong size");
    if (arrow_nf.size() != A->pres.arrows.size())
        throw CacheError("arrow image list has wrong size");
    A->table_ = std::move(table);
    A->arrow_nf = std::move(arrow_nf);
    A->validate_structure();
    A->check_relations();
    return A;
}

template <class F>
void FinDimAlgebra<F>::validate_structure() const {
    int d = dim();
    // bigrading of every table entry
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& sv = mult_basis(i, j);
            if (src[i] != tgt[j] && !sv.empty())
                throw CacheError("nonzero product of non-composable words");
            for (const auto& [k, c] : sv) {
                if (k < 0 || k >= d || c.is_zero())
                    throw CacheError("malformed table entry");
                if (tgt[k] != tgt[i] || src[k] != src[j])
                    throw CacheError("table entry violates the bigrading");
            }
        }
    // idempotent laws
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k) {
            Vec<F> left = mult(basis_vec(i), basis_vec(k));
            Vec<F> expect(d, F(0));
            if (tgt[k] == i)
                expect[k] = F(1);
            if (left != expect)
                throw CacheError("left idempotent law fails");
            Vec<F> right = mult(basis_vec(k), basis_vec(i));
            Vec<F> expect2(d, F(0));
            if (src[k] == i)
                expect2[k] = F(1);
            if (right != expect2)
                throw CacheError("right idempotent law fails");
        }
    // full associativity sweep
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (src[i] != tgt[j])
                continue;
            for (int k = 0; k < d; ++k) {
                if (src[j] != tgt[k])
                    continue;
                Vec<F> ij(d, F(0));
                for (const auto& [t, c] : mult_basis(i, j))
                    ij[t] = c;
                Vec<F> jk(d, F(0));
                for (const auto& [t, c] : mult_basis(j, k))
                    jk[t] = c;
                if (mult(ij, basis_vec(k)) != mult(basis_vec(i), jk))
                    throw CacheError("associativity fails in the table");
            }
        }
}

template <class F>
Vec<F> FinDimAlgebra<F>::eval_word(const PathWord& w) const {
    Vec<F> acc(dim(), F(0));
    acc[w.tgt] = F(1); // e_tgt
    for (int id : w.arrows) {
        Vec<F> a(dim(), F(0));
        for (const auto& [k, c] : arrow_nf[id])
            a[k] = c;
        acc = mult(acc, a);
    }
    // stray endpoint check: result must land in e_tgt . e_src
    for (int k = 0; k < dim(); ++k)
        if (!acc[k].is_zero() && (tgt[k] != w.tgt || src[k] != w.src))
            throw Error("word evaluation violated the bigrading");
    return acc;
}

template <class F>
std::vector<typename FinDimAlgebra<F>::RelationCheck>
FinDimAlgebra<F>::check_relations(bool throwing) const {
    std::vector<RelationCheck> out;
    for (const Relation& rel : pres.relations) {
        Vec<F> acc(dim(), F(0));
        for (const PathTerm& t : rel.terms) {
            Vec<F> val = eval_word(t.word);
            for (int k = 0; k < dim(); ++k)
                acc[k] += F(t.coeff) * val[k];
        }
        RelationCheck rc;
        rc.name = rel.name;
        rc.ok = vec_is_zero(acc);
        if (!rc.ok)
            rc.residual = render_element(acc);
        out.push_back(rc);
        if (!rc.ok && throwing)
            throw RelationViolation("defining relation " + rel.name +
                                    " does not vanish: " + rc.residual);
    }
    return out;
}

template <class F>
std::shared_ptr<const FinDimAlgebra<F>> FinDimAlgebra<F>::opposite() const {
    std::lock_guard<std::mutex> lock(op_mutex_);
    if (op_)
        return op_;
    if (auto back = op_back_.lock())
        return back;
    auto op = std::make_shared<FinDimAlgebra<F>>();
    op->n = n;
    op->opposite_side = !opposite_side;
    op->basis = basis;

    // reversed presentation: arrows swap endpoints, relation words reverse
    op->pres = pres;
    for (Arrow& a : op->pres.arrows)
        std::swap(a.src, a.tgt);
    for (Relation& r : op->pres.relations) {
        std::swap(r.src, r.tgt);
        for (PathTerm& t : r.terms) {
            std::reverse(t.word.arrows.begin(), t.word.arrows.end());
            std::swap(t.word.src, t.word.tgt);
        }
    }

    for (PathWord& w : op->basis) {
        std::reverse(w.arrows.begin(), w.arrows.end());
        std::swap(w.src, w.tgt);
    }
    op->index_basis();

    op->table_.assign(static_cast<size_t>(dim()) * dim(), {});
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            op->table_[static_cast<size_t>(i) * dim() + j] =
                table_[static_cast<size_t>(j) * dim() + i];
    op->arrow_nf = arrow_nf;

    op->op_back_ = this->shared_from_this();
    op_ = op;
    return op;
}

} // namespace gpa
