#pragma once

// Two-sided ideals of the assembled algebra and the support tau-tilting
// structure they generate: the idempotent ideals, products along reduced
// words, the lattice indexed by the Weyl group, mutations, and the duality
// and annihilator identities. Ideals are canonicalized by reduced echelon
// bases, so equality of subspaces is a syntactic check.

#include "gpa/endo.hpp"
#include "gpa/parallel.hpp"
#include "gpa/weyl.hpp"

#include <array>
#include <map>
#include <sstream>

namespace gpa {

template <class F>
class IdealSubspace {
public:
    std::shared_ptr<const FinDimAlgebra<F>> A;
    Echelon<F> rows;

    IdealSubspace() = default;
    IdealSubspace(std::shared_ptr<const FinDimAlgebra<F>> alg, Echelon<F> e)
        : A(std::move(alg)), rows(std::move(e)) {
        check_homogeneous();
    }

    int dim() const { return rows.dim(); }
    bool is_zero() const { return rows.dim() == 0; }

    friend bool operator==(const IdealSubspace& a, const IdealSubspace& b) {
        return a.A == b.A && a.rows == b.rows;
    }
    friend bool operator!=(const IdealSubspace& a, const IdealSubspace& b) {
        return !(a == b);
    }

    static IdealSubspace zero(std::shared_ptr<const FinDimAlgebra<F>> A) {
        return IdealSubspace(A, Echelon<F>(A->dim()));
    }

    static IdealSubspace full(std::shared_ptr<const FinDimAlgebra<F>> A) {
        Echelon<F> e(A->dim());
        for (int k = 0; k < A->dim(); ++k)
            e.insert(A->basis_vec(k));
        return IdealSubspace(A, std::move(e));
    }

    /// The idempotent ideal generated by 1 - e_i: spanned by all products
    /// of basis words meeting at a vertex other than i.
    static IdealSubspace idempotent(std::shared_ptr<const FinDimAlgebra<F>> A,
                                    int i) {
        Echelon<F> e(A->dim());
        for (int j = 0; j < A->n; ++j) {
            if (j == i)
                continue;
            for (int left : A->words_with_src(j))
                for (int right : A->words_with_tgt(j)) {
                    Vec<F> v(A->dim(), F(0));
                    for (const auto& [k, c] : A->mult_basis(left, right))
                        v[k] += c;
                    e.insert(std::move(v));
                }
        }
        IdealSubspace out(A, std::move(e));
        out.check_two_sided();
        return out;
    }

    friend IdealSubspace product(const IdealSubspace& I,
                                 const IdealSubspace& J) {
        if (I.A != J.A)
            throw Error("ideal product across algebras");
        Echelon<F> e(I.A->dim());
        for (const auto& x : I.rows.rows())
            for (const auto& y : J.rows.rows())
                e.insert(I.A->mult(x, y));
        return IdealSubspace(I.A, std::move(e));
    }

    /// Right column I e_k: the rows with source k.
    IdealSubspace column(int k) const {
        Echelon<F> e(A->dim());
        for (const auto& r : rows.rows())
            if (row_src(r) == k)
                e.insert(r);
        return IdealSubspace(A, std::move(e));
    }

    /// I (1 - e_k): all rows with source other than k.
    IdealSubspace column_complement(int k) const {
        Echelon<F> e(A->dim());
        for (const auto& r : rows.rows())
            if (row_src(r) != k)
                e.insert(r);
        return IdealSubspace(A, std::move(e));
    }

    friend IdealSubspace sum(const IdealSubspace& I, const IdealSubspace& J) {
        Echelon<F> e = I.rows;
        for (const auto& r : J.rows.rows())
            e.insert(r);
        return IdealSubspace(I.A, std::move(e));
    }

    bool contains(const IdealSubspace& other) const {
        return other.rows.contained_in(rows);
    }

    /// The ideal as a left module (vertex spaces graded by word target).
    ModuleRep<F> left_module() const { return to_module(A, false); }

    /// The ideal as a right module, realized over the opposite algebra.
    ModuleRep<F> right_module() const { return to_module(A->opposite(), true); }

    /// Quotient of the regular left module by this ideal.
    ModuleRep<F> quotient_left_module() const {
        return quotient_regular(A, false);
    }
    ModuleRep<F> quotient_right_module() const {
        return quotient_regular(A->opposite(), true);
    }

    void check_two_sided() const {
        for (const auto& r : rows.rows())
            for (int k = 0; k < A->dim(); ++k) {
                if (!rows.contains(A->mult(A->basis_vec(k), r)))
                    throw Error("subspace is not a left ideal");
                if (!rows.contains(A->mult(r, A->basis_vec(k))))
                    throw Error("subspace is not a right ideal");
            }
    }

    std::string fingerprint() const { return rows.fingerprint(); }

private:
    int row_tgt(const Vec<F>& r) const {
        for (int k = 0; k < A->dim(); ++k)
            if (!r[k].is_zero())
                return A->tgt[k];
        return -1;
    }
    int row_src(const Vec<F>& r) const {
        for (int k = 0; k < A->dim(); ++k)
            if (!r[k].is_zero())
                return A->src[k];
        return -1;
    }

    void check_homogeneous() const {
        for (const auto& r : rows.rows()) {
            int t = -1, s = -1;
            for (int k = 0; k < A->dim(); ++k) {
                if (r[k].is_zero())
                    continue;
                if (t < 0) {
                    t = A->tgt[k];
                    s = A->src[k];
                } else if (A->tgt[k] != t || A->src[k] != s) {
                    throw Error("ideal basis row is not bigraded");
                }
            }
        }
    }

    // by_src=false: group rows by target, left module over A;
    // by_src=true: group by source, right module realized over the opposite.
    ModuleRep<F> to_module(std::shared_ptr<const FinDimAlgebra<F>> alg,
                           bool by_src) const {
        int n = A->n;
        std::vector<std::vector<int>> local(n); // vertex -> row indices
        std::vector<int> row_vertex(rows.dim());
        for (int r = 0; r < rows.dim(); ++r) {
            const auto& row = rows.rows()[r];
            int v = by_src ? row_src(row) : row_tgt(row);
            row_vertex[r] = v;
            local[v].push_back(r);
        }
        std::vector<int> dims(n);
        for (int v = 0; v < n; ++v)
            dims[v] = static_cast<int>(local[v].size());
        std::vector<Mat<F>> act;
        for (const Arrow& ar : alg->pres.arrows) {
            Mat<F> m(dims[ar.tgt], dims[ar.src]);
            for (int c = 0; c < dims[ar.src]; ++c) {
                const auto& row = rows.rows()[local[ar.src][c]];
                Vec<F> av(A->dim(), F(0));
                for (const auto& [k, cf] : A->arrow_nf[ar.id])
                    av[k] = cf;
                Vec<F> img = by_src ? A->mult(row, av) : A->mult(av, row);
                Vec<F> coords = coordinates_in(rows, std::move(img));
                std::vector<int> pos(rows.dim(), -1);
                for (int t = 0; t < dims[ar.tgt]; ++t)
                    pos[local[ar.tgt][t]] = t;
                for (int r = 0; r < rows.dim(); ++r) {
                    if (coords[r].is_zero())
                        continue;
                    if (pos[r] < 0)
                        throw Error("ideal action left the vertex grading");
                    m.at(pos[r], c) = coords[r];
                }
            }
            act.push_back(std::move(m));
        }
        return ModuleRep<F>(alg, std::move(dims), std::move(act));
    }

    // Quotient of the regular module of alg by this ideal; the layout must
    // match direct_sum(projective(alg, 0), ..., projective(alg, n-1)).
    ModuleRep<F> quotient_regular(std::shared_ptr<const FinDimAlgebra<F>> alg,
                                  bool by_src) const {
        ModuleRep<F> reg = ModuleRep<F>::regular(alg);
        int n = A->n;
        std::vector<std::vector<int>> layout(n); // vertex -> word ids in order
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < A->dim(); ++k) {
                    bool here = by_src
                                    ? (A->src[k] == v && A->tgt[k] == i)
                                    : (A->tgt[k] == v && A->src[k] == i);
                    if (here)
                        layout[v].push_back(k);
                }
        std::vector<Echelon<F>> killed;
        for (int v = 0; v < n; ++v) {
            Echelon<F> e(reg.dims[v]);
            std::vector<int> pos(A->dim(), -1);
            for (size_t t = 0; t < layout[v].size(); ++t)
                pos[layout[v][t]] = static_cast<int>(t);
            for (const auto& row : rows.rows()) {
                int rv = by_src ? row_src(row) : row_tgt(row);
                if (rv != v)
                    continue;
                Vec<F> loc(reg.dims[v], F(0));
                for (int k = 0; k < A->dim(); ++k)
                    if (!row[k].is_zero())
                        loc[pos[k]] = row[k];
                e.insert(std::move(loc));
            }
            killed.push_back(std::move(e));
        }
        return quotient_module(reg, std::move(killed)).mod;
    }
};

} // namespace gpa
