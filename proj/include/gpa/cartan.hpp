#pragma once

// Symmetrizable generalized Cartan matrices, their classification by the
// definiteness of the symmetrized form, and the quiver presentations of the
// associated algebras. Vertices are 0-based internally and 1-based in all
// user-facing output.

#include "gpa/error.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpa {

using IntMatrix = std::vector<std::vector<int>>;

/// Validated Cartan datum: matrix C, symmetrizer D = diag(d), an acyclic
/// orientation of the valued graph, and the derived edge parameters
/// g(i,j) = |gcd(c_ij, c_ji)| and f(i,j) = |c_ij| / g(i,j).
struct CartanData {
    int n = 0;
    IntMatrix C;
    std::vector<int> D;
    std::vector<std::pair<int, int>> omega; // oriented edges (i, j), 0-based

    bool has_edge(int i, int j) const { return i != j && C[i][j] < 0; }
    int g(int i, int j) const;
    int f(int i, int j) const;

    /// +1 if (i,j) is in the orientation, -1 if (j,i) is, 0 if no edge.
    int sign(int i, int j) const;

    std::vector<std::pair<int, int>> edges() const; // i < j, undirected
};

enum class CartanTag { Dynkin, Euclidean, Other };

struct CartanClass {
    CartanTag tag = CartanTag::Other;
    bool connected = false;
};

std::string to_string(CartanTag t);

/// Checks the generalized-Cartan-matrix axioms, the symmetrizer, and the
/// orientation. When no orientation is given, the default
/// { (i,j) : i < j, c_ij < 0 } is used. Throws NotGcm, NotSymmetrizer or
/// BadOrientation with the offending entry named.
CartanData validate_gcm(const IntMatrix& M, const std::vector<int>& D,
                        std::optional<std::vector<std::pair<int, int>>> omega =
                            std::nullopt);

/// Definiteness tag of DC via exact principal minors, plus connectivity of
/// the valued graph.
CartanClass classify(const CartanData& cd);

struct MinimalSymmetrizer {
    std::vector<int> d;
    bool connected = false; // false flags the per-component fallback
};

/// The unique minimal symmetrizer of a connected GCM; for a disconnected
/// matrix the result is minimal per component and flagged as such.
MinimalSymmetrizer minimal_symmetrizer(const IntMatrix& C);

/// Appends one vertex (placed first, displayed as vertex 0 of the affine
/// diagram) so that the extended matrix is connected of Euclidean type and
/// the symmetrizer extends D. Deterministic bounded search; throws NotDynkin
/// or NotFound.
CartanData find_euclidean_extension(const CartanData& cd);

// ---------------------------------------------------------------------------
// Quiver presentations
// ---------------------------------------------------------------------------

struct Arrow {
    int id = 0;
    int src = 0, tgt = 0;
    bool loop = false;
    int i = 0, j = 0, g = 1; // alpha^{(g)}_{ij} : j -> i; for loops i == j
    std::string name;
};

/// A path in the quiver, written in composition order: arrows[0] is applied
/// last. Concatenating p then q (p after q) requires src(p) == tgt(q).
struct PathWord {
    int src = 0, tgt = 0;
    std::vector<int> arrows;

    int degree() const { return static_cast<int>(arrows.size()); }
    bool empty() const { return arrows.empty(); }

    friend bool operator==(const PathWord& a, const PathWord& b) {
        return a.src == b.src && a.tgt == b.tgt && a.arrows == b.arrows;
    }
};

/// Degree-lexicographic order: first by length, then by the arrow id
/// sequence, then by source vertex (which separates the empty paths).
int deglex_cmp(const PathWord& a, const PathWord& b);

struct DeglexLess {
    bool operator()(const PathWord& a, const PathWord& b) const {
        return deglex_cmp(a, b) < 0;
    }
};

struct PathTerm {
    long long coeff = 0;
    PathWord word;
};

/// Formal integer combination of parallel paths (common source and target).
struct Relation {
    std::string name;
    std::vector<PathTerm> terms;
    int src = 0, tgt = 0;
};

enum class AlgebraKind { Preprojective, Hereditary };

struct QuiverPresentation {
    CartanData cartan;
    AlgebraKind kind = AlgebraKind::Preprojective;
    int n = 0;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    const Arrow& loop_at(int i) const;
    PathWord word_from_arrows(const std::vector<int>& ids) const;
    std::string render_word(const PathWord& w) const;
    std::string render_relation(const Relation& r) const;
};

/// Instantiates the defining relations from the Cartan datum: loop
/// nilpotence eps_i^{c_i} = 0, the loop/arrow straightening rules, and (in
/// preprojective mode) the signed mesh relation at every vertex. Relations
/// that are empty sums are omitted.
QuiverPresentation quiver_presentation(const CartanData& cd, AlgebraKind kind);

/// DOT rendering of the valued graph Gamma(C).
std::string valued_graph_dot(const CartanData& cd);

/// DOT rendering of the quiver (double quiver in preprojective mode).
std::string quiver_dot(const QuiverPresentation& p);

} // namespace gpa
