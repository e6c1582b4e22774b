#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's morphism, enumeration or (co)limit code; objects are
// read through their raw `data` layout.

#include <indcat/object.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using indcat::Cat;
using indcat::CategoryId;
using indcat::Object;

inline int rel(const Object& o, int i, int j) { return o.data[static_cast<std::size_t>(i * o.n + j)]; }
inline int tri(const Object& o, int i, int j, int k) {
    return o.data[static_cast<std::size_t>((i * o.n + j) * o.n + k)];
}

/// Structure preservation, straight from the definitions.
inline bool preserves(const Object& s, const Object& d, const std::vector<int>& mx, const std::vector<int>& my) {
    const int n = s.n;
    switch (s.cat.tag) {
        case Cat::Set: return true;
        case Cat::Gra:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rel(s, i, j) && (mx[i] == mx[j] || !rel(d, mx[i], mx[j]))) return false;
            return true;
        case Cat::Pos:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rel(s, i, j) && mx[i] != mx[j] && !rel(d, mx[i], mx[j])) return false;
            return true;
        case Cat::BinFunc:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (my[rel(s, i, j)] != rel(d, mx[i], mx[j])) return false;
            return true;
        case Cat::KDist:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rel(s, i, j) != rel(d, mx[i], mx[j])) return false;
            return true;
        case Cat::TwoGraph:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (tri(s, i, j, k)) {
                            const int a = mx[i], b = mx[j], c = mx[k];
                            if (a == b || b == c || a == c || !tri(d, a, b, c)) return false;
                        }
            return true;
        default: return false;
    }
}

/// Odometer over all maps {0..n-1} -> {0..m-1}.
inline void for_each_map(int n, int m, const std::function<void(const std::vector<int>&)>& fn) {
    if (n > 0 && m == 0) return;
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(v);
        int k = 0;
        while (k < n && ++v[k] == m) v[k++] = 0;
        if (k == n) return;
    }
}

struct Hom {
    std::vector<int> mx, my;
    bool operator==(const Hom&) const = default;
};

inline std::vector<Hom> homs(const Object& s, const Object& d) {
    std::vector<Hom> out;
    const bool bf = s.cat.tag == Cat::BinFunc;
    for_each_map(s.n, d.n, [&](const std::vector<int>& mx) {
        if (!bf) {
            if (preserves(s, d, mx, {})) out.push_back({mx, {}});
            return;
        }
        for_each_map(s.ny, d.ny, [&](const std::vector<int>& my) {
            if (preserves(s, d, mx, my)) out.push_back({mx, my});
        });
    });
    return out;
}

inline Hom compose(const Hom& g, const Hom& f) {
    Hom h;
    for (int x : f.mx) h.mx.push_back(g.mx[x]);
    for (int y : f.my) h.my.push_back(g.my[y]);
    return h;
}

// ---------------------------------------------------------------------------
// Labeled structures and isomorphism classes.

inline Object blank(const CategoryId& cat, int n, int ny = 0) {
    Object o;
    o.cat = cat;
    o.n = n;
    o.ny = ny;
    o.carrier.resize(static_cast<std::size_t>(n));
    std::iota(o.carrier.begin(), o.carrier.end(), 0);
    o.ycarrier.resize(static_cast<std::size_t>(ny));
    std::iota(o.ycarrier.begin(), o.ycarrier.end(), 0);
    return o;
}

inline bool valid(const Object& o) {
    const int n = o.n;
    switch (o.cat.tag) {
        case Cat::Set: return true;
        case Cat::Gra:
            for (int i = 0; i < n; ++i) {
                if (rel(o, i, i)) return false;
                for (int j = 0; j < n; ++j)
                    if (rel(o, i, j) != rel(o, j, i)) return false;
            }
            return true;
        case Cat::Pos:
            for (int i = 0; i < n; ++i) {
                if (rel(o, i, i)) return false;
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (rel(o, i, j) && rel(o, j, k) && !rel(o, i, k)) return false;
            }
            return true;
        case Cat::KDist: {
            if (!o.cat.metric) return true;
            const auto& L = o.cat.labels;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (L[rel(o, i, k)] > L[rel(o, i, j)] + L[rel(o, j, k)]) return false;
            return true;
        }
        default: return true;
    }
}

/// Every structure on carrier 0..n-1 (TWOGRAPH and KDIST included), by raw enumeration.
inline std::vector<Object> labeled(const CategoryId& cat, int n, int ny = 0) {
    std::vector<Object> out;
    Object o = blank(cat, n, ny);
    switch (cat.tag) {
        case Cat::Set: out.push_back(o); break;
        case Cat::Gra:
        case Cat::Pos: {
            // GRA: one bit per unordered pair; POS: one bit per ordered pair i != j.
            std::vector<std::pair<int, int>> cells;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (cat.tag == Cat::Gra ? i < j : i != j) cells.push_back({i, j});
            for (long mask = 0; mask < (1L << cells.size()); ++mask) {
                o.data.assign(static_cast<std::size_t>(n * n), 0);
                for (std::size_t c = 0; c < cells.size(); ++c)
                    if ((mask >> c) & 1) {
                        const auto [i, j] = cells[c];
                        o.data[static_cast<std::size_t>(i * n + j)] = 1;
                        if (cat.tag == Cat::Gra) o.data[static_cast<std::size_t>(j * n + i)] = 1;
                    }
                if (valid(o)) out.push_back(o);
            }
            break;
        }
        case Cat::BinFunc:
            for_each_map(n * n, ny, [&](const std::vector<int>& t) {
                o.data = t;
                out.push_back(o);
            });
            break;
        case Cat::KDist:
            for_each_map(n * n, static_cast<int>(cat.labels.size()), [&](const std::vector<int>& t) {
                o.data = t;
                if (valid(o)) out.push_back(o);
            });
            break;
        case Cat::TwoGraph: {
            std::vector<std::array<int, 3>> triples;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k) triples.push_back({i, j, k});
            for (long mask = 0; mask < (1L << triples.size()); ++mask) {
                o.data.assign(static_cast<std::size_t>(n * n * n), 0);
                std::set<std::array<int, 3>> on;
                for (std::size_t t = 0; t < triples.size(); ++t)
                    if ((mask >> t) & 1) {
                        std::array<int, 3> p = triples[t];
                        on.insert(p);
                        do o.data[static_cast<std::size_t>((p[0] * n + p[1]) * n + p[2])] = 1;
                        while (std::next_permutation(p.begin(), p.end()));
                    }
                bool even = true;
                for (int a = 0; a < n && even; ++a)
                    for (int b = a + 1; b < n && even; ++b)
                        for (int c = b + 1; c < n && even; ++c)
                            for (int d = c + 1; d < n && even; ++d) {
                                const int k = int(on.count({a, b, c})) + int(on.count({a, b, d})) +
                                              int(on.count({a, c, d})) + int(on.count({b, c, d}));
                                even = k % 2 == 0;
                            }
                if (even) out.push_back(o);
            }
            break;
        }
        default: break;
    }
    return out;
}

/// Encoding after relabeling X by px and Y by py.
inline std::vector<int> encode(const Object& o, const std::vector<int>& px, const std::vector<int>& py) {
    const int n = o.n;
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv[px[i]] = i;
    std::vector<int> e;
    if (o.cat.tag == Cat::Set) return e;
    if (o.cat.tag == Cat::TwoGraph) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) e.push_back(tri(o, inv[i], inv[j], inv[k]));
        return e;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int v = rel(o, inv[i], inv[j]);
            e.push_back(o.cat.tag == Cat::BinFunc ? py[v] : v);
        }
    return e;
}

inline std::vector<int> canon(const Object& o) {
    std::vector<int> px(static_cast<std::size_t>(o.n)), py(static_cast<std::size_t>(o.ny));
    std::iota(px.begin(), px.end(), 0);
    std::vector<int> best;
    bool first = true;
    do {
        std::iota(py.begin(), py.end(), 0);
        do {
            auto e = encode(o, px, py);
            if (first || e < best) best = std::move(e), first = false;
        } while (o.cat.tag == Cat::BinFunc && std::next_permutation(py.begin(), py.end()));
    } while (std::next_permutation(px.begin(), px.end()));
    return best;
}

/// One representative per isomorphism class among the labeled structures.
inline std::vector<Object> classes(const CategoryId& cat, int n, int ny = 0) {
    std::set<std::vector<int>> seen;
    std::vector<Object> out;
    for (const Object& o : labeled(cat, n, ny))
        if (seen.insert(canon(o)).second) out.push_back(o);
    return out;
}

}  // namespace oracle
