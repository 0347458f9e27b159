#include "gpa/cartan.hpp"

#include "gpa/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace gpa {

namespace {

std::string entry(int i, int j) {
    return "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::vector<int> components(const IntMatrix& C) {
    int n = static_cast<int>(C.size());
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        comp[s] = next;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < n; ++w) {
                if (w != v && C[v][w] < 0 && comp[w] < 0) {
                    comp[w] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

void check_gcm_axioms(const IntMatrix& M) {
    int n = static_cast<int>(M.size());
    if (n == 0)
        throw NotGcm("empty matrix");
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != n)
            throw NotGcm("matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (M[i][i] != 2)
            throw NotGcm("diagonal " + entry(i, i) + " = " +
                         std::to_string(M[i][i]) + ", expected 2");
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (M[i][j] > 0)
                throw NotGcm("off-diagonal " + entry(i, j) + " = " +
                             std::to_string(M[i][j]) + " is positive");
            if ((M[i][j] != 0) != (M[j][i] != 0))
                throw NotGcm("zero pattern asymmetric at " + entry(i, j) +
                             " vs " + entry(j, i));
        }
    }
}

// exact determinant of an integer matrix, fraction-free
Int int_det(std::vector<std::vector<Int>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0)
        return Int(1);
    Int det(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r) {
            if (!m[r][k].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0)
            return Int(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c)
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
            m[r][k] = Int(0);
        }
        prev = m[k][k];
    }
    det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Int principal_minor(const IntMatrix& DC, const std::vector<int>& idx) {
    std::vector<std::vector<Int>> sub(idx.size(),
                                      std::vector<Int>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b)
            sub[a][b] = Int(DC[idx[a]][idx[b]]);
    return int_det(std::move(sub));
}

} // namespace

int CartanData::g(int i, int j) const {
    if (!has_edge(i, j))
        throw Error("g(i,j) queried on a non-edge");
    long long a = std::abs((long long)C[i][j]);
    long long b = std::abs((long long)C[j][i]);
    return static_cast<int>(std::gcd(a, b));
}

int CartanData::f(int i, int j) const {
    return std::abs(C[i][j]) / g(i, j);
}

int CartanData::sign(int i, int j) const {
    for (const auto& [a, b] : omega) {
        if (a == i && b == j)
            return 1;
        if (a == j && b == i)
            return -1;
    }
    return 0;
}

std::vector<std::pair<int, int>> CartanData::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (has_edge(i, j))
                e.emplace_back(i, j);
    return e;
}

std::string to_string(CartanTag t) {
    switch (t) {
    case CartanTag::Dynkin:
        return "Dynkin";
    case CartanTag::Euclidean:
        return "Euclidean";
    default:
        return "Other";
    }
}

CartanData validate_gcm(const IntMatrix& M, const std::vector<int>& D,
                        std::optional<std::vector<std::pair<int, int>>> omega) {
    check_gcm_axioms(M);
    int n = static_cast<int>(M.size());
    if (static_cast<int>(D.size()) != n)
        throw NotSymmetrizer("symmetrizer has length " +
                             std::to_string(D.size()) + ", expected " +
                             std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (D[i] <= 0)
            throw NotSymmetrizer("d(" + std::to_string(i + 1) +
                                 ") = " + std::to_string(D[i]) +
                                 " is not positive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((long long)D[i] * M[i][j] != (long long)D[j] * M[j][i])
                throw NotSymmetrizer("DC asymmetric at " + entry(i, j));

    CartanData cd;
    cd.n = n;
    cd.C = M;
    cd.D = D;

    if (omega) {
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
        for (const auto& [i, j] : *omega) {
            if (i < 0 || i >= n || j < 0 || j >= n)
                throw BadOrientation("orientation pair out of range");
            if (!cd.has_edge(i, j))
                throw BadOrientation("orientation pair (" +
                                     std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) +
                                     ") is not an edge");
            if (seen[i][j] || seen[j][i])
                throw BadOrientation("edge {" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) +
                                     "} oriented twice");
            seen[i][j] = true;
        }
        for (const auto& [i, j] : cd.edges())
            if (!seen[i][j] && !seen[j][i])
                throw BadOrientation("edge {" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + "} not oriented");
        // acyclicity via Kahn's algorithm
        std::vector<int> indeg(n, 0);
        for (const auto& [i, j] : *omega)
            ++indeg[j];
        std::queue<int> q;
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0)
                q.push(v);
        int visited = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            ++visited;
            for (const auto& [i, j] : *omega)
                if (i == v && --indeg[j] == 0)
                    q.push(j);
        }
        if (visited != n)
            throw BadOrientation("orientation contains a directed cycle");
        cd.omega = *omega;
    } else {
        for (const auto& [i, j] : cd.edges())
            cd.omega.emplace_back(i, j);
    }
    return cd;
}

CartanClass classify(const CartanData& cd) {
    int n = cd.n;
    IntMatrix DC(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            DC[i][j] = cd.D[i] * cd.C[i][j];

    CartanClass out;
    auto comp = components(cd.C);
    out.connected = std::all_of(comp.begin(), comp.end(),
                                [](int c) { return c == 0; });

    // positive definite: leading principal minors all positive
    bool pd = true;
    std::vector<int> lead;
    for (int k = 0; k < n; ++k) {
        lead.push_back(k);
        if (principal_minor(DC, lead).sign() <= 0) {
            pd = false;
            break;
        }
    }
    if (pd) {
        out.tag = CartanTag::Dynkin;
        return out;
    }

    // positive semi-definite: every principal minor is non-negative
    bool psd = true;
    for (unsigned mask = 1; mask < (1u << n) && psd; ++mask) {
        std::vector<int> idx;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k))
                idx.push_back(k);
        if (principal_minor(DC, idx).sign() < 0)
            psd = false;
    }
    out.tag = psd ? CartanTag::Euclidean : CartanTag::Other;
    return out;
}

MinimalSymmetrizer minimal_symmetrizer(const IntMatrix& C) {
    check_gcm_axioms(C);
    int n = static_cast<int>(C.size());
    auto comp = components(C);
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;

    std::vector<Rat> w(n);
    std::vector<bool> done(n, false);
    for (int root = 0; root < n; ++root) {
        if (done[root])
            continue;
        w[root] = Rat(1);
        done[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j = 0; j < n; ++j) {
                if (i == j || C[i][j] >= 0)
                    continue;
                // d_i c_ij = d_j c_ji
                Rat wj = w[i] * Rat(C[i][j]) / Rat(C[j][i]);
                if (done[j]) {
                    if (!(w[j] == wj))
                        throw NotSymmetrizer(
                            "matrix is not symmetrizable: inconsistent ratio "
                            "on edge {" +
                            std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + "}");
                } else {
                    w[j] = wj;
                    done[j] = true;
                    q.push(j);
                }
            }
        }
    }

    // per component: clear denominators, then divide by the gcd
    MinimalSymmetrizer out;
    out.connected = ncomp == 1;
    out.d.assign(n, 0);
    for (int c = 0; c < ncomp; ++c) {
        Int lcm(1);
        for (int i = 0; i < n; ++i)
            if (comp[i] == c)
                lcm = lcm / Int::gcd(lcm, w[i].den()) * w[i].den();
        Int g(0);
        std::vector<std::pair<int, Int>> vals;
        for (int i = 0; i < n; ++i) {
            if (comp[i] != c)
                continue;
            Int v = w[i].num() * (lcm / w[i].den());
            g = Int::gcd(g, v);
            vals.emplace_back(i, v);
        }
        for (auto& [i, v] : vals) {
            Int d = v / g;
            if (!d.is_small() || d.small() <= 0)
                throw NotSymmetrizer("minimal symmetrizer out of range");
            out.d[i] = static_cast<int>(d.small());
        }
    }
    return out;
}

CartanData find_euclidean_extension(const CartanData& cd) {
    if (classify(cd).tag != CartanTag::Dynkin)
        throw NotDynkin("euclidean extension requires Dynkin input");
    int n = cd.n;
    long long lcm = 1;
    for (int d : cd.D)
        lcm = std::lcm(lcm, (long long)d);

    const int row_values[4] = {0, -1, -2, -3};
    std::vector<int> row(n, 0);

    for (long long d0 = 1; d0 <= lcm; ++d0) {
        // enumerate candidate rows lexicographically over (0,-1,-2,-3)
        std::vector<int> choice(n, 0);
        while (true) {
            bool viable = true;
            IntMatrix M(n + 1, std::vector<int>(n + 1, 0));
            std::vector<int> D(n + 1, 0);
            M[0][0] = 2;
            D[0] = static_cast<int>(d0);
            for (int i = 0; i < n; ++i) {
                D[i + 1] = cd.D[i];
                for (int j = 0; j < n; ++j)
                    M[i + 1][j + 1] = cd.C[i][j];
            }
            for (int j = 0; j < n && viable; ++j) {
                int c0j = row_values[choice[j]];
                M[0][j + 1] = c0j;
                // symmetrizer forces c_{j0} = d0 * c_{0j} / d_j
                long long num = d0 * c0j;
                if (num % cd.D[j] != 0) {
                    viable = c0j == 0;
                    if (!viable)
                        break;
                }
                M[j + 1][0] = static_cast<int>(num / cd.D[j]);
                if (c0j != 0 && M[j + 1][0] < -3)
                    viable = false;
            }
            if (viable) {
                bool has_edge = false;
                for (int j = 0; j < n; ++j)
                    has_edge |= M[0][j + 1] != 0;
                if (has_edge) {
                    try {
                        CartanData ext = validate_gcm(M, D);
                        CartanClass cls = classify(ext);
                        if (cls.tag == CartanTag::Euclidean && cls.connected)
                            return ext;
                    } catch (const Error&) {
                        // candidate rejected
                    }
                }
            }
            // next lexicographic choice
            int k = n - 1;
            while (k >= 0 && choice[k] == 3)
                choice[k--] = 0;
            if (k < 0)
                break;
            ++choice[k];
        }
    }
    throw NotFound("euclidean extension search exhausted; this indicates a "
                   "bug, an extension always exists for Dynkin input");
}

// ---------------------------------------------------------------------------
// Quiver presentations
// ---------------------------------------------------------------------------

int deglex_cmp(const PathWord& a, const PathWord& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    if (a.arrows != b.arrows)
        return a.arrows < b.arrows ? -1 : 1;
    if (a.src != b.src)
        return a.src < b.src ? -1 : 1;
    return 0;
}

const Arrow& QuiverPresentation::loop_at(int i) const {
    for (const Arrow& a : arrows)
        if (a.loop && a.i == i)
            return a;
    throw Error("no loop at vertex " + std::to_string(i + 1));
}

PathWord QuiverPresentation::word_from_arrows(const std::vector<int>& ids) const {
    if (ids.empty())
        throw Error("word_from_arrows needs at least one arrow");
    PathWord w;
    w.arrows = ids;
    w.tgt = arrows[ids.front()].tgt;
    w.src = arrows[ids.back()].src;
    for (size_t k = 0; k + 1 < ids.size(); ++k) {
        if (arrows[ids[k]].src != arrows[ids[k + 1]].tgt)
            throw Error("non-composable arrow sequence");
    }
    return w;
}

std::string QuiverPresentation::render_word(const PathWord& w) const {
    if (w.empty())
        return "e" + std::to_string(w.src + 1);
    std::string s;
    for (size_t k = 0; k < w.arrows.size(); ++k) {
        if (k)
            s += "*";
        s += arrows[w.arrows[k]].name;
    }
    return s;
}

std::string QuiverPresentation::render_relation(const Relation& r) const {
    std::string s;
    for (size_t k = 0; k < r.terms.size(); ++k) {
        long long c = r.terms[k].coeff;
        if (k == 0) {
            if (c == -1)
                s += "-";
            else if (c != 1)
                s += std::to_string(c) + "*";
        } else {
            s += c < 0 ? " - " : " + ";
            long long a = std::abs(c);
            if (a != 1)
                s += std::to_string(a) + "*";
        }
        s += render_word(r.terms[k].word);
    }
    return s + " = 0";
}

QuiverPresentation quiver_presentation(const CartanData& cd, AlgebraKind kind) {
    QuiverPresentation p;
    p.cartan = cd;
    p.kind = kind;
    p.n = cd.n;

    // loops first, then ordinary arrows sorted by (i, j, g)
    for (int i = 0; i < cd.n; ++i) {
        Arrow a;
        a.id = static_cast<int>(p.arrows.size());
        a.src = a.tgt = i;
        a.loop = true;
        a.i = a.j = i;
        a.name = "eps" + std::to_string(i + 1);
        p.arrows.push_back(a);
    }
    std::vector<std::pair<int, int>> dirs;
    for (const auto& [i, j] : cd.omega) {
        dirs.emplace_back(i, j);
        if (kind == AlgebraKind::Preprojective)
            dirs.emplace_back(j, i);
    }
    std::sort(dirs.begin(), dirs.end());
    for (const auto& [i, j] : dirs) {
        for (int g = 1; g <= cd.g(i, j); ++g) {
            Arrow a;
            a.id = static_cast<int>(p.arrows.size());
            a.src = j;
            a.tgt = i;
            a.loop = false;
            a.i = i;
            a.j = j;
            a.g = g;
            a.name = "a" + std::to_string(i + 1) + std::to_string(j + 1);
            if (cd.g(i, j) > 1)
                a.name += "x" + std::to_string(g);
            p.arrows.push_back(a);
        }
    }

    auto arrow_id = [&](int i, int j, int g) {
        for (const Arrow& a : p.arrows)
            if (!a.loop && a.i == i && a.j == j && a.g == g)
                return a.id;
        throw Error("arrow lookup failed");
    };

    auto loop_power_word = [&](int i, int e) {
        PathWord w;
        w.src = w.tgt = i;
        w.arrows.assign(e, p.arrows[i].id);
        return w;
    };

    // loop nilpotence eps_i^{c_i} = 0
    for (int i = 0; i < cd.n; ++i) {
        Relation r;
        r.name = "nil(" + std::to_string(i + 1) + ")";
        r.src = r.tgt = i;
        r.terms.push_back({1, loop_power_word(i, cd.D[i])});
        p.relations.push_back(std::move(r));
    }

    // straightening eps_i^{f_ji} a_{ij} = a_{ij} eps_j^{f_ij}
    for (const auto& [i, j] : dirs) {
        for (int g = 1; g <= cd.g(i, j); ++g) {
            Relation r;
            r.name = "straighten(" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) +
                     (cd.g(i, j) > 1 ? ",g" + std::to_string(g) : "") + ")";
            r.src = j;
            r.tgt = i;
            PathWord lhs, rhs;
            lhs.src = rhs.src = j;
            lhs.tgt = rhs.tgt = i;
            lhs.arrows.assign(cd.f(j, i), p.arrows[i].id);
            lhs.arrows.push_back(arrow_id(i, j, g));
            rhs.arrows.push_back(arrow_id(i, j, g));
            for (int k = 0; k < cd.f(i, j); ++k)
                rhs.arrows.push_back(p.arrows[j].id);
            r.terms.push_back({1, std::move(lhs)});
            r.terms.push_back({-1, std::move(rhs)});
            p.relations.push_back(std::move(r));
        }
    }

    // signed mesh relation at every vertex (preprojective mode only)
    if (kind == AlgebraKind::Preprojective) {
        for (int i = 0; i < cd.n; ++i) {
            Relation r;
            r.name = "mesh(" + std::to_string(i + 1) + ")";
            r.src = r.tgt = i;
            for (int j = 0; j < cd.n; ++j) {
                if (!cd.has_edge(i, j))
                    continue;
                int sgn = cd.sign(i, j);
                for (int g = 1; g <= cd.g(i, j); ++g) {
                    for (int f = 0; f < cd.f(j, i); ++f) {
                        PathWord w;
                        w.src = w.tgt = i;
                        w.arrows.assign(f, p.arrows[i].id);
                        w.arrows.push_back(arrow_id(i, j, g));
                        w.arrows.push_back(arrow_id(j, i, g));
                        for (int k = 0; k < cd.f(j, i) - 1 - f; ++k)
                            w.arrows.push_back(p.arrows[i].id);
                        r.terms.push_back({sgn, std::move(w)});
                    }
                }
            }
            if (!r.terms.empty())
                p.relations.push_back(std::move(r));
        }
    }
    return p;
}

std::string valued_graph_dot(const CartanData& cd) {
    std::ostringstream os;
    os << "graph valued_graph {\n";
    for (int i = 0; i < cd.n; ++i)
        os << "  v" << i + 1 << " [label=\"" << i + 1 << "\"];\n";
    for (const auto& [i, j] : cd.edges())
        os << "  v" << i + 1 << " -- v" << j + 1 << " [label=\"("
           << std::abs(cd.C[j][i]) << "," << std::abs(cd.C[i][j]) << ")\"];\n";
    os << "}\n";
    return os.str();
}

std::string quiver_dot(const QuiverPresentation& p) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int i = 0; i < p.n; ++i)
        os << "  v" << i + 1 << " [label=\"" << i + 1 << "\"];\n";
    for (const Arrow& a : p.arrows)
        os << "  v" << a.src + 1 << " -> v" << a.tgt + 1 << " [label=\""
           << a.name << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace gpa
