#pragma once

// Universal-property check for computed pushouts and pullbacks: every (co)cone
// over a test object must factor through exactly one mediating morphism.
// Morphisms are enumerated by the oracle, never by the library.

#include "oracle.hpp"

#include <indcat/kernel.hpp>
#include <indcat/structures.hpp>
#include <indcat/sweep.hpp>

#include <map>
#include <utility>

namespace oracle {

struct UpStats {
    std::size_t cases = 0, cones = 0, discrepancies = 0;
};

inline Hom hom_of(const indcat::Morphism& m) { return {m.map, m.ymap}; }

/// Test objects up to isomorphism: carrier <= max_n (BINFUNC: |X| + |Y| <= max_n).
inline std::vector<Object> test_objects(const CategoryId& cat, int max_n) {
    std::vector<Object> out;
    for (int n = 0; n <= max_n; ++n) {
        if (cat.tag != Cat::BinFunc) {
            for (Object& o : classes(cat, n)) out.push_back(std::move(o));
            continue;
        }
        for (int ny = n == 0 ? 0 : 1; n + ny <= max_n; ++ny)
            for (Object& o : classes(cat, n, ny)) out.push_back(std::move(o));
    }
    return out;
}

using Key = std::pair<std::vector<int>, std::vector<int>>;
inline Key key(const Hom& h) { return {h.mx, h.my}; }
inline std::pair<Key, Key> key2(const Hom& a, const Hom& b) { return {key(a), key(b)}; }

/// Pushouts (the library's distinguished one) of every generated span with carrier <= max_size.
inline UpStats pushout_property(const CategoryId& cat, int max_size, int test_size) {
    UpStats st;
    const auto qs = test_objects(cat, test_size);
    for (const auto& sp : indcat::spans(cat, max_size)) {
        ++st.cases;
        const auto ca = indcat::by_ids(sp.c, sp.a), cb = indcat::by_ids(sp.c, sp.b);
        const auto sq = indcat::pushout(indcat::Span{sp.c, ca, cb});
        if (!sq) {
            ++st.discrepancies;
            continue;
        }
        const Object& P = sq->M();
        const Hom hca = hom_of(ca), hcb = hom_of(cb), ia = hom_of(sq->top), ib = hom_of(sq->right);
        if (!(compose(ia, hca) == compose(ib, hcb))) {
            ++st.discrepancies;
            continue;
        }
        for (const Object& q : qs) {
            std::map<std::pair<Key, Key>, int> mediators;
            for (const Hom& u : homs(P, q)) ++mediators[key2(compose(u, ia), compose(u, ib))];
            std::map<Key, std::vector<Hom>> by_c;
            for (const Hom& qb : homs(sp.b, q)) by_c[key(compose(qb, hcb))].push_back(qb);
            for (const Hom& qa : homs(sp.a, q)) {
                const auto it = by_c.find(key(compose(qa, hca)));
                if (it == by_c.end()) continue;
                for (const Hom& qb : it->second) {
                    ++st.cones;
                    const auto m = mediators.find(key2(qa, qb));
                    if (m == mediators.end() || m->second != 1) ++st.discrepancies;
                }
            }
        }
    }
    return st;
}

/// Pullbacks of every cospan of subobjects of every object with carrier <= max_size.
inline UpStats pullback_property(const CategoryId& cat, int max_size, int test_size) {
    UpStats st;
    const auto qs = test_objects(cat, test_size);
    for (const Object& m : indcat::enumerate(cat, max_size)) {
        const auto subs = indcat::subobjects(m);
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i; j < subs.size(); ++j) {
                ++st.cases;
                const auto sq = indcat::pullback(subs[i], subs[j]);
                const Hom fa = hom_of(subs[i]), fb = hom_of(subs[j]);
                const Hom pa = hom_of(sq.left), pb = hom_of(sq.bottom);
                if (!(compose(fa, pa) == compose(fb, pb))) {
                    ++st.discrepancies;
                    continue;
                }
                const Object& A = subs[i].src;
                const Object& B = subs[j].src;
                const Object& P = sq.C();
                for (const Object& q : qs) {
                    std::map<std::pair<Key, Key>, int> mediators;
                    for (const Hom& u : homs(q, P)) ++mediators[key2(compose(pa, u), compose(pb, u))];
                    std::map<Key, std::vector<Hom>> by_m;
                    for (const Hom& qb : homs(q, B)) by_m[key(compose(fb, qb))].push_back(qb);
                    for (const Hom& qa : homs(q, A)) {
                        const auto it = by_m.find(key(compose(fa, qa)));
                        if (it == by_m.end()) continue;
                        for (const Hom& qb : it->second) {
                            ++st.cones;
                            const auto med = mediators.find(key2(qa, qb));
                            if (med == mediators.end() || med->second != 1) ++st.discrepancies;
                        }
                    }
                }
            }
    }
    return st;
}

}  // namespace oracle
