#pragma once

// Indecomposable summand counting through the endomorphism algebra: the
// radical is the kernel of the trace form (valid in characteristic zero
// and for prime moduli far above every dimension in play), the semisimple
// quotient splits into matrix blocks over the base field for the modules
// this project produces (their endomorphism rings are split because every
// indecomposable in play has simple socle), and the block sizes are read
// off from central primitive idempotents.

#include "gpa/homology.hpp"
#include "gpa/numeric.hpp"

namespace gpa {

// --- dense univariate polynomials, little-endian coefficients ------------

namespace polydet {

template <class F>
std::vector<F> trim(std::vector<F> p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
    return p;
}

template <class F>
std::vector<F> poly_rem(std::vector<F> a, const std::vector<F>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        F c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        a = trim(std::move(a));
    }
    return a;
}

template <class F>
std::vector<F> poly_gcd(std::vector<F> a, std::vector<F> b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        auto r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        F inv = F(1) / a.back();
        for (F& c : a)
            c *= inv;
    }
    return a;
}

template <class F>
std::vector<F> poly_mulmod(const std::vector<F>& a, const std::vector<F>& b,
                           const std::vector<F>& mod) {
    std::vector<F> prod(a.size() + b.size(), F(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] += a[i] * b[j];
    return poly_rem(trim(std::move(prod)), mod);
}

/// Distinct roots in the base field of a squarefree monic polynomial.
inline std::vector<Rat> field_roots(const std::vector<Rat>& monic) {
    // clear denominators, then apply the rational root bound
    Int lead_lcm(1);
    for (const Rat& c : monic)
        lead_lcm = lead_lcm / Int::gcd(lead_lcm, c.den()) * c.den();
    std::vector<Int> ip;
    for (const Rat& c : monic)
        ip.push_back(c.num() * (lead_lcm / c.den()));
    Int a0;
    size_t low = 0;
    while (low < ip.size() && ip[low].is_zero())
        ++low;
    a0 = ip[low];
    Int an = ip.back();
    auto divisors = [](Int x) {
        x = x.abs();
        std::vector<Int> out;
        if (!x.is_small() || x.small() > 2000000)
            throw CharacteristicUnsupported(
                "root bound too large for divisor enumeration");
        long long v = x.small();
        for (long long d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(Int(d));
                out.push_back(Int(v / d));
            }
        return out;
    };
    std::vector<Rat> roots;
    if (low > 0)
        roots.push_back(Rat(0));
    auto horner = [&](const Rat& x) {
        Rat acc(0);
        for (size_t i = monic.size(); i-- > 0;)
            acc = acc * x + monic[i];
        return acc;
    };
    for (const Int& p : divisors(a0))
        for (const Int& q : divisors(an))
            for (int sgn : {1, -1}) {
                Rat cand(sgn > 0 ? p : -p, q);
                if (horner(cand).is_zero()) {
                    bool fresh = true;
                    for (const auto& r : roots)
                        fresh = fresh && !(r == cand);
                    if (fresh)
                        roots.push_back(cand);
                }
            }
    return roots;
}

/// Exact division of monic-divisor polynomials.
template <class F>
std::vector<F> poly_divexact(std::vector<F> a, const std::vector<F>& b) {
    std::vector<F> quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0,
                       F(0));
    while (a.size() >= b.size() && !a.empty()) {
        F c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        quo[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        a = trim(std::move(a));
    }
    if (!a.empty())
        throw Error("poly_divexact: division was not exact");
    return quo;
}

/// Roots in the prime field: gcd with x^p - x isolates the linear part,
/// then Cantor-Zassenhaus splitting with a deterministic seed.
inline std::vector<Fp> field_roots(const std::vector<Fp>& monic) {
    std::vector<Fp> xp = {Fp(1)};
    {
        std::vector<Fp> base = {Fp(0), Fp(1)};
        std::uint64_t e = Fp::P;
        while (e) {
            if (e & 1)
                xp = poly_mulmod(xp, base, monic);
            base = poly_mulmod(base, base, monic);
            e >>= 1;
        }
    }
    if (xp.size() < 2)
        xp.resize(2, Fp(0));
    xp[1] -= Fp(1);
    auto lin = poly_gcd(monic, trim(std::move(xp)));

    std::vector<Fp> roots;
    std::uint64_t state = 88172645463325252ULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    std::vector<std::vector<Fp>> work{lin};
    while (!work.empty()) {
        auto f = trim(std::move(work.back()));
        work.pop_back();
        if (f.size() <= 1)
            continue;
        if (f.size() == 2) {
            roots.push_back(-(f[0] / f[1]));
            continue;
        }
        bool split = false;
        for (int attempt = 0; attempt < 64 && !split; ++attempt) {
            Fp a(static_cast<long long>(next() % Fp::P));
            std::vector<Fp> pw = {Fp(1)};
            std::vector<Fp> base = {a, Fp(1)};
            std::uint64_t e = (Fp::P - 1) / 2;
            while (e) {
                if (e & 1)
                    pw = poly_mulmod(pw, base, f);
                base = poly_mulmod(base, base, f);
                e >>= 1;
            }
            if (pw.empty())
                pw = {Fp(0)};
            pw[0] -= Fp(1);
            auto g = poly_gcd(f, trim(std::move(pw)));
            if (g.size() > 1 && g.size() < f.size()) {
                work.push_back(poly_divexact(f, g));
                work.push_back(std::move(g));
                split = true;
            }
        }
        if (!split)
            throw CharacteristicUnsupported(
                "equal-degree splitting did not converge");
    }
    return roots;
}

} // namespace polydet

// ---------------------------------------------------------------------------

struct SummandCount {
    int with_multiplicity = 0;
    int distinct = 0;
};

/// Number of indecomposable direct summands of M (with multiplicity) and
/// the number of pairwise non-isomorphic ones.
template <class F>
SummandCount num_indec_summands(const ModuleRep<F>& M) {
    SummandCount out;
    if (M.is_zero())
        return out;
    auto ends = hom_space(M, M);
    int h = static_cast<int>(ends.size());
    if (h == 0)
        throw Error("endomorphism algebra of a nonzero module is zero");

    int n = M.A->n;
    auto flatten = [&](const BlockMap<F>& phi) {
        Vec<F> flat;
        for (int v = 0; v < n; ++v)
            flat.insert(flat.end(), phi[v].a.begin(), phi[v].a.end());
        return flat;
    };
    auto compose = [&](const BlockMap<F>& f, const BlockMap<F>& g) {
        BlockMap<F> out;
        for (int v = 0; v < n; ++v)
            out.push_back(f[v] * g[v]);
        return out;
    };
    auto tr = [&](const BlockMap<F>& f) {
        F t(0);
        for (int v = 0; v < n; ++v)
            t += f[v].trace();
        return t;
    };

    // radical = kernel of the trace form on End(M)
    Mat<F> gram(h, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j <= i; ++j) {
            F t = tr(compose(ends[i], ends[j]));
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    auto radcoords = nullspace(gram);

    int flatdim = 0;
    for (int v = 0; v < n; ++v)
        flatdim += M.dims[v] * M.dims[v];

    // coset representatives completing the radical span inside End(M)
    Echelon<F> rad(flatdim);
    for (const auto& rc : radcoords) {
        Vec<F> flat(flatdim, F(0));
        for (int j = 0; j < h; ++j)
            if (!rc[j].is_zero())
                axpy(flat, rc[j], flatten(ends[j]));
        rad.insert(std::move(flat));
    }
    Echelon<F> rep_space = rad;
    std::vector<Vec<F>> reps;
    std::vector<BlockMap<F>> rep_maps;
    for (int j = 0; j < h; ++j) {
        Vec<F> flat = flatten(ends[j]);
        if (rep_space.insert(flat)) {
            reps.push_back(std::move(flat));
            rep_maps.push_back(ends[j]);
        }
    }
    int s = static_cast<int>(reps.size());
    if (s == 1) {
        out.with_multiplicity = 1;
        out.distinct = 1;
        return out;
    }

    // coordinates in the rep basis modulo the radical
    auto rep_coords = [&](const Vec<F>& flat) {
        Mat<F> sys(flatdim, rad.dim() + s);
        for (int c = 0; c < rad.dim(); ++c)
            for (int r = 0; r < flatdim; ++r)
                sys.at(r, c) = rad.rows()[c][r];
        for (int c = 0; c < s; ++c)
            for (int r = 0; r < flatdim; ++r)
                sys.at(r, rad.dim() + c) = reps[c][r];
        auto x = solve(sys, flat);
        if (!x)
            throw Error("endomorphism outside End(M); internal error");
        Vec<F> coords(s, F(0));
        for (int c = 0; c < s; ++c)
            coords[c] = (*x)[rad.dim() + c];
        return coords;
    };

    // structure constants of the semisimple quotient
    std::vector<std::vector<Vec<F>>> mul(s, std::vector<Vec<F>>(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            mul[i][j] = rep_coords(flatten(compose(rep_maps[i], rep_maps[j])));

    // identity in quotient coordinates
    Vec<F> idflat(flatdim, F(0));
    {
        int off = 0;
        for (int v = 0; v < n; ++v) {
            for (int t = 0; t < M.dims[v]; ++t)
                idflat[off + t * M.dims[v] + t] = F(1);
            off += M.dims[v] * M.dims[v];
        }
    }
    Vec<F> one = rep_coords(idflat);

    // center: z with z*b_j - b_j*z = 0 for all j
    Mat<F> cen(s * s, s);
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < s; ++k)
                cen.at(j * s + k, i) = mul[i][j][k] - mul[j][i][k];
    auto center = nullspace(cen);
    int z = static_cast<int>(center.size());

    auto mul_vec = [&](const Vec<F>& x, const Vec<F>& y) {
        Vec<F> out(s, F(0));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                if (x[i].is_zero() || y[j].is_zero())
                    continue;
                F c = x[i] * y[j];
                for (int k = 0; k < s; ++k)
                    out[k] += c * mul[i][j][k];
            }
        return out;
    };

    // find a separating central element: its minimal polynomial must have
    // z distinct roots in the base field
    std::vector<F> lambda;
    Vec<F> zsep;
    for (int attempt = 0; attempt < 32 + z; ++attempt) {
        Vec<F> cand(s, F(0));
        for (int j = 0; j < z; ++j) {
            long long w = 1;
            for (int t = 0; t < j; ++t)
                w *= (attempt + 2);
            axpy(cand, F(w), center[j]);
        }
        // minimal polynomial by linear dependence of powers
        std::vector<Vec<F>> powers{one};
        Echelon<F> span(s);
        span.insert(one);
        std::vector<F> minpoly;
        while (true) {
            Vec<F> nxt = mul_vec(powers.back(), cand);
            if (!span.insert(nxt)) {
                // solve nxt = sum c_i powers[i]
                Mat<F> sys(s, static_cast<int>(powers.size()));
                for (size_t c = 0; c < powers.size(); ++c)
                    for (int r = 0; r < s; ++r)
                        sys.at(r, static_cast<int>(c)) = powers[c][r];
                auto x = solve(sys, nxt);
                if (!x)
                    throw Error("minimal polynomial solve failed");
                minpoly.assign(powers.size() + 1, F(0));
                for (size_t c = 0; c < powers.size(); ++c)
                    minpoly[c] = -(*x)[c];
                minpoly[powers.size()] = F(1);
                break;
            }
            powers.push_back(std::move(nxt));
        }
        if (static_cast<int>(minpoly.size()) - 1 != z)
            continue;
        auto roots = polydet::field_roots(minpoly);
        if (static_cast<int>(roots.size()) == z) {
            lambda = roots;
            zsep = cand;
            break;
        }
    }
    if (lambda.empty())
        throw CharacteristicUnsupported(
            "center of End/rad does not split over the base field");

    // Lagrange idempotents e_i = prod_{j != i} (zsep - lambda_j) / (lambda_i - lambda_j)
    out.distinct = z;
    for (int i = 0; i < z; ++i) {
        Vec<F> e = one;
        for (int j = 0; j < z; ++j) {
            if (i == j)
                continue;
            Vec<F> shifted = zsep;
            for (int k = 0; k < s; ++k)
                shifted[k] -= lambda[j] * one[k];
            for (F& c : shifted)
                c /= (lambda[i] - lambda[j]);
            e = mul_vec(e, shifted);
        }
        // sanity: idempotent
        if (!(mul_vec(e, e) == e))
            throw Error("central idempotent construction failed");
        // block dimension: rank of left multiplication by e on the quotient
        Mat<F> lm(s, s);
        for (int j = 0; j < s; ++j) {
            Vec<F> unit(s, F(0));
            unit[j] = F(1);
            Vec<F> img = mul_vec(e, unit);
            for (int k = 0; k < s; ++k)
                lm.at(k, j) = img[k];
        }
        int bd = rank_of(lm);
        int m = 0;
        while (m * m < bd)
            ++m;
        if (m * m != bd)
            throw CharacteristicUnsupported(
                "semisimple block is not split; summand count unavailable");
        out.with_multiplicity += m;
    }
    return out;
}

} // namespace gpa
