#pragma once

// Noncommutative rewriting for path-algebra quotients. Rules rewrite a
// leading path to a strictly deglex-smaller combination, so reduction never
// increases path length. Completion resolves every overlap ambiguity
// (diamond lemma), then certifies finite dimensionality by finding a degree
// with no irreducible words at all: past that degree every path is
// reducible, so the irreducible words below it form a basis.

#include "gpa/cartan.hpp"
#include "gpa/linalg.hpp"

#include <deque>
#include <map>
#include <utility>
#include <vector>

namespace gpa {

/// Default completion bound: generous for every desk-scale Dynkin instance.
inline int default_degree_bound(const CartanData& cd) {
    int sum = 0;
    for (int d : cd.D)
        sum += d;
    return 4 * sum * cd.n;
}

/// Linear combination of paths, keyed in deglex order.
template <class F>
using PathPoly = std::map<PathWord, F, DeglexLess>;

template <class F>
void poly_add(PathPoly<F>& p, const PathWord& w, const F& c) {
    if (c.is_zero())
        return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

template <class F>
struct RewriteRule {
    PathWord lead;
    std::vector<std::pair<PathWord, F>> rhs; // lead rewrites to this sum
    bool alive = true;
};

template <class F>
class RewriteSystem {
public:
    /// Runs completion on the relations of p. Throws DegreeBoundExceeded if
    /// a rule would exceed max_degree or no empty degree certifies
    /// finiteness below it.
    static RewriteSystem complete(const QuiverPresentation& p, int max_degree);

    PathPoly<F> normal_form(PathPoly<F> poly) const;
    PathPoly<F> normal_form_word(const PathWord& w) const;

    const std::vector<RewriteRule<F>>& rules() const { return rules_; }
    std::vector<const RewriteRule<F>*> live_rules() const;

    /// Irreducible words of degree < certificate_degree, sorted deglex.
    const std::vector<PathWord>& irreducible() const { return basis_; }
    int certificate_degree() const { return cert_degree_; }
    int confluent_up_to() const { return confluent_up_to_; }
    const QuiverPresentation& presentation() const { return pres_; }

private:
    QuiverPresentation pres_;
    std::vector<RewriteRule<F>> rules_;
    std::vector<PathWord> basis_;
    int cert_degree_ = 0;
    int confluent_up_to_ = 0;

    // position of the first rule occurrence in w, scanning left to right
    bool find_redex(const PathWord& w, int& pos, int& rule) const;
    static PathWord splice(const PathWord& w, int pos, int len,
                           const PathWord& replacement);
    void enumerate_basis(int max_degree);
};

// ---------------------------------------------------------------------------

template <class F>
bool RewriteSystem<F>::find_redex(const PathWord& w, int& pos,
                                  int& rule) const {
    int len = w.degree();
    for (int p = 0; p < len; ++p) {
        for (size_t r = 0; r < rules_.size(); ++r) {
            if (!rules_[r].alive)
                continue;
            int rl = rules_[r].lead.degree();
            if (p + rl > len)
                continue;
            if (std::equal(rules_[r].lead.arrows.begin(),
                           rules_[r].lead.arrows.end(),
                           w.arrows.begin() + p)) {
                pos = p;
                rule = static_cast<int>(r);
                return true;
            }
        }
    }
    return false;
}

template <class F>
PathWord RewriteSystem<F>::splice(const PathWord& w, int pos, int len,
                                  const PathWord& replacement) {
    PathWord out;
    out.src = w.src;
    out.tgt = w.tgt;
    out.arrows.reserve(w.arrows.size() - len + replacement.arrows.size());
    out.arrows.insert(out.arrows.end(), w.arrows.begin(),
                      w.arrows.begin() + pos);
    out.arrows.insert(out.arrows.end(), replacement.arrows.begin(),
                      replacement.arrows.end());
    out.arrows.insert(out.arrows.end(), w.arrows.begin() + pos + len,
                      w.arrows.end());
    return out;
}

template <class F>
PathPoly<F> RewriteSystem<F>::normal_form(PathPoly<F> poly) const {
    PathPoly<F> out;
    while (!poly.empty()) {
        auto it = std::prev(poly.end()); // largest term
        PathWord w = it->first;
        F c = it->second;
        poly.erase(it);
        int pos = 0, rule = 0;
        if (!find_redex(w, pos, rule)) {
            poly_add(out, w, c);
            continue;
        }
        const auto& r = rules_[rule];
        for (const auto& [v, d] : r.rhs)
            poly_add(poly, splice(w, pos, r.lead.degree(), v), c * d);
    }
    return out;
}

template <class F>
PathPoly<F> RewriteSystem<F>::normal_form_word(const PathWord& w) const {
    PathPoly<F> p;
    p.emplace(w, F(1));
    return normal_form(std::move(p));
}

template <class F>
std::vector<const RewriteRule<F>*> RewriteSystem<F>::live_rules() const {
    std::vector<const RewriteRule<F>*> out;
    for (const auto& r : rules_)
        if (r.alive)
            out.push_back(&r);
    return out;
}

template <class F>
RewriteSystem<F> RewriteSystem<F>::complete(const QuiverPresentation& p,
                                            int max_degree) {
    RewriteSystem<F> sys;
    sys.pres_ = p;

    std::deque<PathPoly<F>> pending;
    for (const Relation& rel : p.relations) {
        PathPoly<F> poly;
        for (const PathTerm& t : rel.terms)
            poly_add(poly, t.word, F(t.coeff));
        pending.push_back(std::move(poly));
    }

    // ambiguities: (rule a, rule b, position of b's lead in the superposition)
    struct Amb {
        int a, b, pos;
    };
    std::deque<Amb> ambiguities;

    auto queue_overlaps = [&](int a, int b) {
        const PathWord& u = sys.rules_[a].lead;
        const PathWord& v = sys.rules_[b].lead;
        int lu = u.degree(), lv = v.degree();
        // v inside u
        if (lv <= lu) {
            for (int k = 0; k + lv <= lu; ++k) {
                if (a == b && k == 0)
                    continue;
                if (std::equal(v.arrows.begin(), v.arrows.end(),
                               u.arrows.begin() + k))
                    ambiguities.push_back({a, b, k});
            }
        }
        // proper suffix of u = prefix of v
        for (int o = 1; o < std::min(lu, lv); ++o) {
            if (std::equal(v.arrows.begin(), v.arrows.begin() + o,
                           u.arrows.begin() + (lu - o)))
                ambiguities.push_back({a, b, lu - o});
        }
    };

    auto add_rule = [&](PathPoly<F> poly) {
        poly = sys.normal_form(std::move(poly));
        if (poly.empty())
            return;
        auto lead_it = std::prev(poly.end());
        RewriteRule<F> r;
        r.lead = lead_it->first;
        if (r.lead.degree() == 0)
            throw DegreeBoundExceeded(
                "degenerate rule with idempotent leading term");
        if (r.lead.degree() > max_degree)
            throw DegreeBoundExceeded(
                "completion produced a rule of degree " +
                std::to_string(r.lead.degree()) + " > bound " +
                std::to_string(max_degree));
        F inv = F(1) / lead_it->second;
        for (auto it = poly.begin(); it != lead_it; ++it)
            r.rhs.emplace_back(it->first, -(it->second * inv));
        int id = static_cast<int>(sys.rules_.size());
        // retire rules whose lead is now reducible; requeue their content
        for (size_t s = 0; s < sys.rules_.size(); ++s) {
            auto& old = sys.rules_[s];
            if (!old.alive || old.lead.degree() < r.lead.degree())
                continue;
            bool contains = false;
            for (int k = 0; k + r.lead.degree() <= old.lead.degree(); ++k)
                if (std::equal(r.lead.arrows.begin(), r.lead.arrows.end(),
                               old.lead.arrows.begin() + k)) {
                    contains = true;
                    break;
                }
            if (contains) {
                old.alive = false;
                PathPoly<F> back;
                poly_add(back, old.lead, F(1));
                for (const auto& [w, c] : old.rhs)
                    poly_add(back, w, -c);
                pending.push_back(std::move(back));
            }
        }
        sys.rules_.push_back(std::move(r));
        for (size_t s = 0; s < sys.rules_.size(); ++s) {
            if (!sys.rules_[s].alive)
                continue;
            queue_overlaps(id, static_cast<int>(s));
            if (static_cast<int>(s) != id)
                queue_overlaps(static_cast<int>(s), id);
        }
    };

    auto resolve = [&](const Amb& amb) -> PathPoly<F> {
        const auto& ra = sys.rules_[amb.a];
        const auto& rb = sys.rules_[amb.b];
        // superposition word: ra.lead overlaid with rb.lead at amb.pos
        PathWord w = ra.lead;
        int need = amb.pos + rb.lead.degree();
        for (int k = w.degree(); k < need; ++k)
            w.arrows.push_back(rb.lead.arrows[k - amb.pos]);
        w.src = p.arrows[w.arrows.back()].src;
        w.tgt = p.arrows[w.arrows.front()].tgt;
        PathPoly<F> t1, t2;
        for (const auto& [v, d] : ra.rhs)
            poly_add(t1, splice(w, 0, ra.lead.degree(), v), d);
        for (const auto& [v, d] : rb.rhs)
            poly_add(t2, splice(w, amb.pos, rb.lead.degree(), v), d);
        for (const auto& [v, d] : t2)
            poly_add(t1, v, -d);
        return sys.normal_form(std::move(t1));
    };

    while (!pending.empty() || !ambiguities.empty()) {
        if (!pending.empty()) {
            auto poly = std::move(pending.front());
            pending.pop_front();
            add_rule(std::move(poly));
            continue;
        }
        Amb amb = ambiguities.front();
        ambiguities.pop_front();
        if (!sys.rules_[amb.a].alive || !sys.rules_[amb.b].alive)
            continue;
        auto diff = resolve(amb);
        if (!diff.empty())
            add_rule(std::move(diff));
    }

    // final sweep: every ambiguity among live rules must resolve to zero
    for (bool clean = false; !clean;) {
        clean = true;
        ambiguities.clear();
        for (size_t a = 0; a < sys.rules_.size(); ++a) {
            if (!sys.rules_[a].alive)
                continue;
            for (size_t b = 0; b < sys.rules_.size(); ++b) {
                if (!sys.rules_[b].alive)
                    continue;
                queue_overlaps(static_cast<int>(a), static_cast<int>(b));
            }
        }
        while (!ambiguities.empty()) {
            Amb amb = ambiguities.front();
            ambiguities.pop_front();
            if (!sys.rules_[amb.a].alive || !sys.rules_[amb.b].alive)
                continue;
            int sup = std::max(sys.rules_[amb.a].lead.degree(),
                               amb.pos + sys.rules_[amb.b].lead.degree());
            sys.confluent_up_to_ = std::max(sys.confluent_up_to_, sup);
            auto diff = resolve(amb);
            if (!diff.empty()) {
                add_rule(std::move(diff));
                while (!pending.empty()) {
                    auto poly = std::move(pending.front());
                    pending.pop_front();
                    add_rule(std::move(poly));
                }
                clean = false;
                break;
            }
        }
    }

    sys.enumerate_basis(max_degree);
    return sys;
}

template <class F>
void RewriteSystem<F>::enumerate_basis(int max_degree) {
    basis_.clear();
    std::vector<PathWord> current;
    for (int i = 0; i < pres_.n; ++i) {
        PathWord e;
        e.src = e.tgt = i;
        current.push_back(e);
    }
    auto live = live_rules();
    int d = 0;
    while (!current.empty()) {
        for (const auto& w : current)
            basis_.push_back(w);
        ++d;
        if (d > max_degree)
            throw DegreeBoundExceeded(
                "no empty degree at or below the bound " +
                std::to_string(max_degree) +
                "; quotient may be infinite dimensional");
        std::vector<PathWord> next;
        for (const auto& w : current) {
            for (const Arrow& a : pres_.arrows) {
                if (a.src != w.tgt)
                    continue;
                PathWord ext;
                ext.src = w.src;
                ext.tgt = a.tgt;
                ext.arrows.reserve(w.arrows.size() + 1);
                ext.arrows.push_back(a.id);
                ext.arrows.insert(ext.arrows.end(), w.arrows.begin(),
                                  w.arrows.end());
                // the suffix is irreducible, so only prefixes can match
                bool reducible = false;
                for (const auto* r : live) {
                    int rl = r->lead.degree();
                    if (rl > ext.degree())
                        continue;
                    if (std::equal(r->lead.arrows.begin(),
                                   r->lead.arrows.end(), ext.arrows.begin())) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible)
                    next.push_back(std::move(ext));
            }
        }
        current = std::move(next);
    }
    cert_degree_ = d;
    std::sort(basis_.begin(), basis_.end(), DeglexLess{});
}

} // namespace gpa
