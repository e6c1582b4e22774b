#include <indcat/kernel.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace indcat {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
    /// Class index per element, classes numbered by first element.
    std::vector<int> classes(int& count) {
        std::vector<int> id(parent.size(), -1), out(parent.size());
        count = 0;
        for (std::size_t i = 0; i < parent.size(); ++i) {
            const int r = find(static_cast<int>(i));
            if (id[static_cast<std::size_t>(r)] < 0) id[static_cast<std::size_t>(r)] = count++;
            out[i] = id[static_cast<std::size_t>(r)];
        }
        return out;
    }
};

std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Morphism bil_morphism(const Object& src, const Object& dst, const gf::Mat& a) {
    Morphism m{src, dst, std::vector<int>(static_cast<std::size_t>(src.n * dst.n), 0), {}};
    for (int j = 0; j < src.n; ++j)
        for (int i = 0; i < dst.n; ++i) m.map[static_cast<std::size_t>(j * dst.n + i)] = a(i, j);
    return m;
}

Object bare(const CategoryId& cat, int n, int ny = 0) {
    Object o;
    o.cat = cat;
    o.n = n;
    o.ny = ny;
    o.carrier = iota_vec(n);
    if (cat.tag == Cat::BinFunc) o.ycarrier = iota_vec(ny);
    if (cat.tag == Cat::TwoGraph)
        o.data.assign(static_cast<std::size_t>(n * n * n), 0);
    else if (cat.tag != Cat::Set)
        o.data.assign(static_cast<std::size_t>(n * n), 0);
    return o;
}

bool legs_embed(const std::vector<Morphism>& legs) {
    return std::all_of(legs.begin(), legs.end(), [](const Morphism& m) { return is_embedding(m); });
}

/// Pullback test for a commuting square of embeddings, by comparing sizes.
bool square_pullback(const CommSquare& sq) {
    if (!all_embeddings(sq)) return false;
    const CommSquare p = pullback(sq.top, sq.right);
    return p.C().n == sq.C().n && p.C().ny == sq.C().ny;
}

// --- BIL colimit --------------------------------------------------------------

AmalgamSet bil_colimits(const std::vector<Object>& objects, const std::vector<Arrow>& arrows, std::size_t cap) {
    const CategoryId cat = objects.front().cat;
    const int p = cat.prime;
    std::vector<int> off;
    int total = 0;
    for (const auto& o : objects) {
        off.push_back(total);
        total += o.n;
    }
    int nrel = 0;
    for (const auto& a : arrows) nrel += a.m.src.n;
    gf::Mat rel(total, nrel, p);
    int col = 0;
    for (const auto& a : arrows) {
        const gf::Mat f = matrix(a.m);
        for (int j = 0; j < a.m.src.n; ++j, ++col) {
            rel(off[static_cast<std::size_t>(a.from)] + j, col) = 1;
            for (int i = 0; i < a.m.dst.n; ++i)
                rel(off[static_cast<std::size_t>(a.to)] + i, col) = gf::mod(-f(i, j), p);
        }
    }
    const gf::Quotient q = gf::quotient(total, rel, p);
    AmalgamSet out;
    if (q.dim > cat.maxdim) throw Error(Errc::BoundTooLarge, "BIL amalgam exceeds maxdim");
    std::vector<gf::Mat> leg(objects.size());
    for (std::size_t k = 0; k < objects.size(); ++k) {
        leg[k] = gf::Mat(q.dim, objects[k].n, p);
        for (int j = 0; j < objects[k].n; ++j)
            for (int i = 0; i < q.dim; ++i) leg[k](i, j) = q.project(i, off[k] + j);
    }
    // Unknowns: Gram entries G(i,j) (i <= j only when symmetric).
    const int d = q.dim;
    std::vector<std::pair<int, int>> vars;
    std::map<std::pair<int, int>, int> var_of;
    for (int i = 0; i < d; ++i)
        for (int j = cat.symmetric ? i : 0; j < d; ++j) {
            var_of[{i, j}] = static_cast<int>(vars.size());
            vars.push_back({i, j});
        }
    auto var_index = [&](int i, int j) {
        if (cat.symmetric && j < i) std::swap(i, j);
        return var_of.at({i, j});
    };
    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;
    for (std::size_t k = 0; k < objects.size(); ++k) {
        const Object& o = objects[k];
        for (int r = 0; r < o.n; ++r)
            for (int s = 0; s < o.n; ++s) {
                std::vector<int> row(vars.size(), 0);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        const int c = leg[k](i, r) * leg[k](j, s) % p;
                        if (c == 0) continue;
                        auto& cell = row[static_cast<std::size_t>(var_index(i, j))];
                        cell = (cell + c) % p;
                    }
                rows.push_back(std::move(row));
                rhs.push_back(o.at(r, s));
            }
    }
    gf::Mat sys(static_cast<int>(rows.size()), static_cast<int>(vars.size()), p);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t v = 0; v < vars.size(); ++v) sys(static_cast<int>(r), static_cast<int>(v)) = rows[r][v];
    auto space = gf::solve(sys, rhs);
    if (!space) return out;
    const bool complete = gf::for_each_point(*space, cap, [&](const std::vector<int>& x) {
        Object apex = bare(cat, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) apex.at(i, j) = x[static_cast<std::size_t>(var_index(i, j))];
        Cocone c;
        c.apex = apex;
        for (std::size_t k = 0; k < objects.size(); ++k) c.legs.push_back(bil_morphism(objects[k], apex, leg[k]));
        c.all_embeddings = legs_embed(c.legs);
        out.instances.push_back(std::move(c));
    });
    out.truncated = !complete;
    return out;
}

// --- carrier colimit ------------------------------------------------------------

struct CarrierQuotient {
    int k = 0, ky = 0;
    std::vector<std::vector<int>> xmap, ymap;  // per object
};

CarrierQuotient quotient_carriers(const std::vector<Object>& objects, const std::vector<Arrow>& arrows, UnionFind& ux,
                                  UnionFind& uy, const std::vector<int>& off, const std::vector<int>& yoff) {
    CarrierQuotient q;
    const auto xc = ux.classes(q.k);
    const auto yc = uy.classes(q.ky);
    for (std::size_t o = 0; o < objects.size(); ++o) {
        std::vector<int> xm, ym;
        for (int i = 0; i < objects[o].n; ++i) xm.push_back(xc[static_cast<std::size_t>(off[o] + i)]);
        for (int j = 0; j < objects[o].ny; ++j) ym.push_back(yc[static_cast<std::size_t>(yoff[o] + j)]);
        q.xmap.push_back(std::move(xm));
        q.ymap.push_back(std::move(ym));
    }
    (void)arrows;
    return q;
}

}  // namespace

AmalgamSet colimits(const std::vector<Object>& objects, const std::vector<Arrow>& arrows, std::size_t cap,
                    const std::vector<std::pair<AtomRef, AtomRef>>& glue) {
    if (objects.empty()) throw Error(Errc::PreconditionViolated, "colimit of an empty diagram");
    const CategoryId cat = objects.front().cat;
    if (cat.tag == Cat::GrpWitness) throw Error(Errc::UnsupportedCategory, "GRPWITNESS colimits are witnessed, not computed");
    for (const auto& a : arrows)
        if (!(a.m.src == objects[static_cast<std::size_t>(a.from)]) || !(a.m.dst == objects[static_cast<std::size_t>(a.to)]))
            throw Error(Errc::PreconditionViolated, "arrow endpoints do not match the diagram objects");
    if (cat.tag == Cat::Bil) {
        if (!glue.empty()) throw Error(Errc::UnsupportedCategory, "BIL colimits take no extra identifications");
        return bil_colimits(objects, arrows, cap);
    }

    std::vector<int> off, yoff;
    int total = 0, ytotal = 0;
    for (const auto& o : objects) {
        off.push_back(total);
        yoff.push_back(ytotal);
        total += o.n;
        ytotal += o.ny;
    }
    UnionFind ux(total), uy(ytotal);
    for (const auto& a : arrows) {
        for (int i = 0; i < a.m.src.n; ++i)
            ux.unite(off[static_cast<std::size_t>(a.from)] + i, off[static_cast<std::size_t>(a.to)] + a.m.map[static_cast<std::size_t>(i)]);
        for (int j = 0; j < a.m.src.ny; ++j)
            uy.unite(yoff[static_cast<std::size_t>(a.from)] + j, yoff[static_cast<std::size_t>(a.to)] + a.m.ymap[static_cast<std::size_t>(j)]);
    }
    for (const auto& [x, y] : glue)
        ux.unite(off[static_cast<std::size_t>(x.first)] + x.second, off[static_cast<std::size_t>(y.first)] + y.second);
    AmalgamSet out;
    const std::size_t no = objects.size();

    if (cat.tag == Cat::Pos) {
        // Collapse cycles of the generated preorder until it is antisymmetric.
        while (true) {
            CarrierQuotient q = quotient_carriers(objects, arrows, ux, uy, off, yoff);
            std::vector<std::vector<char>> le(static_cast<std::size_t>(q.k), std::vector<char>(static_cast<std::size_t>(q.k), 0));
            for (std::size_t o = 0; o < no; ++o)
                for (int i = 0; i < objects[o].n; ++i)
                    for (int j = 0; j < objects[o].n; ++j)
                        if (objects[o].at(i, j)) le[static_cast<std::size_t>(q.xmap[o][static_cast<std::size_t>(i)])][static_cast<std::size_t>(q.xmap[o][static_cast<std::size_t>(j)])] = 1;
            for (int m = 0; m < q.k; ++m)
                for (int i = 0; i < q.k; ++i)
                    for (int j = 0; j < q.k; ++j)
                        if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] && le[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
            // representative flattened atom per class
            std::vector<int> rep(static_cast<std::size_t>(q.k), -1);
            for (std::size_t o = 0; o < no; ++o)
                for (int i = 0; i < objects[o].n; ++i) {
                    auto& r = rep[static_cast<std::size_t>(q.xmap[o][static_cast<std::size_t>(i)])];
                    if (r < 0) r = off[o] + i;
                }
            bool merged = false;
            for (int i = 0; i < q.k; ++i)
                for (int j = 0; j < q.k; ++j)
                    if (i != j && le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && le[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                        merged |= ux.unite(rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]);
            if (merged) continue;
            Object apex = bare(cat, q.k);
            for (int i = 0; i < q.k; ++i)
                for (int j = 0; j < q.k; ++j)
                    if (i != j) apex.at(i, j) = le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            Cocone c;
            c.apex = apex;
            for (std::size_t o = 0; o < no; ++o) c.legs.push_back(Morphism{objects[o], apex, q.xmap[o], {}});
            c.all_embeddings = legs_embed(c.legs);
            out.instances.push_back(std::move(c));
            return out;
        }
    }

    if (cat.tag == Cat::BinFunc) {
        // Congruence: equal X pairs force equal Y values.
        CarrierQuotient q;
        while (true) {
            q = quotient_carriers(objects, arrows, ux, uy, off, yoff);
            std::map<std::pair<int, int>, int> value;  // pair -> flattened Y atom
            bool merged = false;
            for (std::size_t o = 0; o < no; ++o)
                for (int i = 0; i < objects[o].n; ++i)
                    for (int j = 0; j < objects[o].n; ++j) {
                        const std::pair<int, int> key{q.xmap[o][static_cast<std::size_t>(i)], q.xmap[o][static_cast<std::size_t>(j)]};
                        const int y = yoff[o] + objects[o].at(i, j);
                        auto [it, fresh] = value.emplace(key, y);
                        if (!fresh) merged |= uy.unite(it->second, y);
                    }
            if (!merged) break;
        }
        std::map<std::pair<int, int>, int> value;
        for (std::size_t o = 0; o < no; ++o)
            for (int i = 0; i < objects[o].n; ++i)
                for (int j = 0; j < objects[o].n; ++j)
                    value[{q.xmap[o][static_cast<std::size_t>(i)], q.xmap[o][static_cast<std::size_t>(j)]}] = q.ymap[o][static_cast<std::size_t>(objects[o].at(i, j))];
        Cocone c;
        c.free_tags.assign(static_cast<std::size_t>(q.ky), {-1, -1});
        int ny = q.ky;
        std::vector<int> table(static_cast<std::size_t>(q.k * q.k));
        for (int a = 0; a < q.k; ++a)
            for (int b = 0; b < q.k; ++b) {
                auto it = value.find({a, b});
                if (it != value.end()) {
                    table[static_cast<std::size_t>(a * q.k + b)] = it->second;
                } else {
                    table[static_cast<std::size_t>(a * q.k + b)] = ny++;
                    c.free_tags.push_back({a, b});
                }
            }
        Object apex = bare(cat, q.k, ny);
        apex.data = table;
        c.apex = apex;
        for (std::size_t o = 0; o < no; ++o) c.legs.push_back(Morphism{objects[o], apex, q.xmap[o], q.ymap[o]});
        c.all_embeddings = legs_embed(c.legs);
        out.instances.push_back(std::move(c));
        return out;
    }

    CarrierQuotient q = quotient_carriers(objects, arrows, ux, uy, off, yoff);
    Object partial = bare(cat, q.k);
    if (cat.tag != Cat::Set) std::fill(partial.data.begin(), partial.data.end(), -1);
    auto put = [&](int& cell, int v) {
        if (cell >= 0 && cell != v) return false;
        cell = v;
        return true;
    };
    for (std::size_t o = 0; o < no; ++o) {
        const Object& ob = objects[o];
        const auto X = [&](int i) { return q.xmap[o][static_cast<std::size_t>(i)]; };
        switch (cat.tag) {
            case Cat::Gra:
                for (int i = 0; i < ob.n; ++i)
                    for (int j = 0; j < ob.n; ++j)
                        if (ob.at(i, j)) {
                            if (X(i) == X(j)) return out;  // would need a loop
                            partial.at(X(i), X(j)) = 1;
                        }
                break;
            case Cat::KDist:
                for (int i = 0; i < ob.n; ++i)
                    for (int j = 0; j < ob.n; ++j)
                        if (!put(partial.at(X(i), X(j)), ob.at(i, j))) return out;
                break;
            case Cat::TwoGraph:
                for (int i = 0; i < ob.n; ++i)
                    for (int j = 0; j < ob.n; ++j)
                        for (int l = 0; l < ob.n; ++l) {
                            if (i == j || j == l || i == l) continue;
                            const int a = X(i), b = X(j), cc = X(l);
                            if (a == b || b == cc || a == cc) {
                                if (ob.at(i, j, l)) return out;
                                continue;
                            }
                            if (!put(partial.at(a, b, cc), ob.at(i, j, l))) return out;
                        }
                break;
            default: break;
        }
    }
    std::vector<Object> apexes;
    if (cat.tag == Cat::Gra) {
        for (auto& v : partial.data)
            if (v < 0) v = 0;
        apexes.push_back(partial);
    } else if (cat.tag == Cat::Set) {
        apexes.push_back(partial);
    } else {
        try {
            apexes = completions(partial, cap);
        } catch (const Error& e) {
            if (e.code() != Errc::BoundTooLarge) throw;
            out.truncated = true;
            return out;
        }
    }
    for (auto& apex : apexes) {
        Cocone c;
        c.apex = apex;
        for (std::size_t o = 0; o < no; ++o) c.legs.push_back(Morphism{objects[o], apex, q.xmap[o], {}});
        c.all_embeddings = legs_embed(c.legs);
        out.instances.push_back(std::move(c));
    }
    std::stable_sort(out.instances.begin(), out.instances.end(),
                     [](const Cocone& a, const Cocone& b) { return a.apex.data < b.apex.data; });
    return out;
}

std::optional<Morphism> mediate(const Cocone& c, const std::vector<Object>& objects, const Object& target,
                                const std::vector<Morphism>& target_legs) {
    const Object& apex = c.apex;
    if (apex.cat.tag == Cat::Bil) {
        // Solve phi . legs = target_legs over the concatenated bases.
        int total = 0;
        for (const auto& o : objects) total += o.n;
        const int p = apex.cat.prime;
        gf::Mat L(apex.n, total, p), T(target.n, total, p);
        int col = 0;
        for (std::size_t k = 0; k < objects.size(); ++k) {
            const gf::Mat l = matrix(c.legs[k]), t = matrix(target_legs[k]);
            for (int j = 0; j < objects[k].n; ++j, ++col) {
                for (int i = 0; i < apex.n; ++i) L(i, col) = l(i, j);
                for (int i = 0; i < target.n; ++i) T(i, col) = t(i, j);
            }
        }
        // phi^T rows: L^T phi^T = T^T, column by column.
        const gf::Mat Lt = gf::transpose(L);
        gf::Mat phi(target.n, apex.n, p);
        for (int r = 0; r < target.n; ++r) {
            std::vector<int> rhs(static_cast<std::size_t>(total));
            for (int j = 0; j < total; ++j) rhs[static_cast<std::size_t>(j)] = T(r, j);
            auto sol = gf::solve(Lt, rhs);
            if (!sol) return std::nullopt;
            for (int i = 0; i < apex.n; ++i) phi(r, i) = sol->particular[static_cast<std::size_t>(i)];
        }
        Morphism m = bil_morphism(apex, target, phi);
        if (!is_morphism(m)) return std::nullopt;
        return m;
    }
    std::vector<int> xm(static_cast<std::size_t>(apex.n), -1), ym(static_cast<std::size_t>(apex.ny), -1);
    auto assign = [](int& cell, int v) {
        if (cell >= 0 && cell != v) return false;
        cell = v;
        return true;
    };
    for (std::size_t k = 0; k < objects.size(); ++k) {
        for (int i = 0; i < objects[k].n; ++i)
            if (!assign(xm[static_cast<std::size_t>(c.legs[k].map[static_cast<std::size_t>(i)])], target_legs[k].map[static_cast<std::size_t>(i)]))
                return std::nullopt;
        for (int j = 0; j < objects[k].ny; ++j)
            if (!assign(ym[static_cast<std::size_t>(c.legs[k].ymap[static_cast<std::size_t>(j)])], target_legs[k].ymap[static_cast<std::size_t>(j)]))
                return std::nullopt;
    }
    if (std::find(xm.begin(), xm.end(), -1) != xm.end()) return std::nullopt;  // not jointly surjective
    for (std::size_t y = 0; y < ym.size(); ++y) {
        if (ym[y] >= 0) continue;
        // Uncovered Y atoms are forced by any X pair that produces them.
        int a = -1, b = -1;
        if (y < c.free_tags.size() && c.free_tags[y].first >= 0) std::tie(a, b) = c.free_tags[y];
        for (int i = 0; i < apex.n && a < 0; ++i)
            for (int j = 0; j < apex.n; ++j)
                if (apex.at(i, j) == static_cast<int>(y)) {
                    a = i;
                    b = j;
                    break;
                }
        if (a < 0) return std::nullopt;
        ym[y] = target.at(xm[static_cast<std::size_t>(a)], xm[static_cast<std::size_t>(b)]);
    }
    Morphism m{apex, target, xm, apex.cat.tag == Cat::BinFunc ? ym : std::vector<int>{}};
    if (!is_morphism(m)) return std::nullopt;
    return m;
}

// ---------------------------------------------------------------------------

bool commutes(const CommSquare& sq) {
    if (!(sq.left.dst == sq.top.src) || !(sq.bottom.dst == sq.right.src) || !(sq.left.src == sq.bottom.src) ||
        !(sq.top.dst == sq.right.dst))
        return false;
    return same_arrow(compose(sq.top, sq.left), compose(sq.right, sq.bottom));
}

CommSquare transpose(const CommSquare& sq) { return CommSquare{sq.bottom, sq.left, sq.right, sq.top}; }

bool all_embeddings(const CommSquare& sq) {
    return is_embedding(sq.left) && is_embedding(sq.bottom) && is_embedding(sq.top) && is_embedding(sq.right);
}

CommSquare Horn::face1() const { return CommSquare{m_a, m_b, a_n1, b_n1}; }
CommSquare Horn::face2() const { return CommSquare{m_a, m_c, a_n2, c_n2}; }
CommSquare Horn::face3() const { return CommSquare{m_b, m_c, b_n3, c_n3}; }

bool commutes(const Horn& h) { return commutes(h.face1()) && commutes(h.face2()) && commutes(h.face3()); }

// ---------------------------------------------------------------------------

CommSquare pullback(const Morphism& fa, const Morphism& fb) {
    if (!(fa.dst == fb.dst)) throw Error(Errc::PreconditionViolated, "pullback: legs have different codomains");
    if (fa.src.cat.tag == Cat::GrpWitness) throw Error(Errc::UnsupportedCategory, "pullback in GRPWITNESS");
    if (!is_embedding(fa) || !is_embedding(fb)) throw Error(Errc::PreconditionViolated, "pullback: legs must be embeddings");
    const Object& M = fa.dst;
    if (M.cat.tag == Cat::Bil) {
        const gf::Mat la = matrix(fa), lb = matrix(fb);
        gf::Mat neg = lb;
        for (auto& v : neg.a) v = gf::mod(-v, neg.p);
        const gf::Mat ker = gf::nullspace(gf::hstack(la, neg));
        const int k = ker.cols;
        gf::Mat xa(fa.src.n, k, M.cat.prime), xb(fb.src.n, k, M.cat.prime);
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < fa.src.n; ++i) xa(i, j) = ker(i, j);
            for (int i = 0; i < fb.src.n; ++i) xb(i, j) = ker(fa.src.n + i, j);
        }
        Object c = bare(M.cat, k);
        c.data = gf::mul(gf::mul(gf::transpose(xa), gram(fa.src)), xa).a;
        return CommSquare{bil_morphism(c, fa.src, xa), bil_morphism(c, fb.src, xb), fa, fb};
    }
    std::vector<int> ia = image_x(fa), ib = image_x(fb), xs;
    std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(xs));
    std::vector<int> ys;
    if (M.cat.tag == Cat::BinFunc) {
        std::vector<int> ya = image_y(fa), yb = image_y(fb);
        std::set_intersection(ya.begin(), ya.end(), yb.begin(), yb.end(), std::back_inserter(ys));
    }
    const Object c = restrict(M, xs, ys);
    auto pre = [](const std::vector<int>& map, int target) {
        return static_cast<int>(std::find(map.begin(), map.end(), target) - map.begin());
    };
    Morphism to_a{c, fa.src, {}, {}}, to_b{c, fb.src, {}, {}};
    for (int x : xs) {
        to_a.map.push_back(pre(fa.map, x));
        to_b.map.push_back(pre(fb.map, x));
    }
    for (int y : ys) {
        to_a.ymap.push_back(pre(fa.ymap, y));
        to_b.ymap.push_back(pre(fb.ymap, y));
    }
    return CommSquare{to_a, to_b, fa, fb};
}

CommSquare pullback(const Cospan& c) { return pullback(c.left, c.right); }

std::vector<Morphism> wide_pullback(const std::vector<Morphism>& legs) {
    if (legs.size() < 2) throw Error(Errc::PreconditionViolated, "wide pullback needs at least two legs");
    CommSquare sq = pullback(legs[0], legs[1]);
    std::vector<Morphism> proj{sq.left, sq.bottom};
    for (std::size_t k = 2; k < legs.size(); ++k) {
        const Morphism into = compose(legs[0], proj[0]);
        CommSquare s = pullback(into, legs[k]);
        for (auto& pr : proj) pr = compose(pr, s.left);
        proj.push_back(s.bottom);
    }
    return proj;
}

AmalgamSet multipushout(const Span& s, std::size_t cap) {
    if (!is_embedding(s.left) || !is_embedding(s.right))
        throw Error(Errc::PreconditionViolated, "multipushout: legs must be embeddings");
    const std::vector<Object> objs{s.left.dst, s.right.dst, s.apex};
    AmalgamSet set = colimits(objs, {Arrow{2, 0, s.left}, Arrow{2, 1, s.right}}, cap);
    for (auto& c : set.instances) {
        // The apex leg is implied; tag on the two visible legs.
        c.all_embeddings = is_embedding(c.legs[0]) && is_embedding(c.legs[1]);
        c.pullback = c.all_embeddings && square_pullback(CommSquare{s.left, s.right, c.legs[0], c.legs[1]});
    }
    return set;
}

std::optional<CommSquare> pushout(const Span& s) {
    if (!pushout_complete(s.apex.cat.tag)) throw Error(Errc::UnsupportedCategory, "pushout: category has only multipushouts");
    AmalgamSet set = multipushout(s);
    if (set.instances.empty()) return std::nullopt;
    const Cocone& c = set.instances.front();
    return CommSquare{s.left, s.right, c.legs[0], c.legs[1]};
}

AmalgamSet horn_multicolimit(const Horn& h, std::size_t cap, const std::vector<std::pair<AtomRef, AtomRef>>& glue) {
    if (!commutes(h)) throw Error(Errc::NotAHorn, "horn faces do not commute");
    // slots: 0 N1, 1 N2, 2 N3, 3 A, 4 B, 5 C, 6 M
    const std::vector<Object> objs{h.N1(), h.N2(), h.N3(), h.A(), h.B(), h.C(), h.M()};
    const std::vector<Arrow> arrows{{6, 3, h.m_a}, {6, 4, h.m_b}, {6, 5, h.m_c}, {3, 0, h.a_n1}, {4, 0, h.b_n1},
                                    {3, 1, h.a_n2}, {5, 1, h.c_n2}, {4, 2, h.b_n3}, {5, 2, h.c_n3}};
    AmalgamSet set = colimits(objs, arrows, cap, glue);
    const Morphism m_n3 = compose(h.b_n3, h.m_b);
    for (auto& c : set.instances) {
        c.all_embeddings = legs_embed(c.legs);
        c.pullback = c.all_embeddings && square_pullback(CommSquare{h.m_a, m_n3, c.legs[3], c.legs[2]});
    }
    return set;
}

// ---------------------------------------------------------------------------

std::pair<Morphism, Morphism> factorize(const Morphism& m) {
    if (!is_morphism(m)) throw Error(Errc::NotAMorphism, "factorize: not a morphism");
    if (m.src.cat.tag == Cat::Bil) return {identity(m.src), m};
    const std::vector<int> xs = image_x(m), ys = image_y(m);
    Morphism mm = inclusion(m.dst, xs, ys);
    if (!is_valid(mm.src)) throw Error(Errc::NotFactorizable, "image structure violates the category invariants");
    auto pos = [](const std::vector<int>& v, int x) { return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin()); };
    Morphism e{m.src, mm.src, {}, {}};
    for (int x : m.map) e.map.push_back(pos(xs, x));
    for (int y : m.ymap) e.ymap.push_back(pos(ys, y));
    return {e, mm};
}

Morphism bil_subspace(const Object& target, const gf::Mat& basis) {
    const gf::Mat b = gf::column_basis(basis);
    Object sub = bare(target.cat, b.cols);
    sub.data = gf::mul(gf::mul(gf::transpose(b), gram(target)), b).a;
    return bil_morphism(sub, target, b);
}

Morphism generated_subobject(const Object& target, const std::vector<Morphism>& maps) {
    if (target.cat.tag == Cat::Bil) {
        gf::Mat all(target.n, 0, target.cat.prime);
        for (const auto& m : maps) all = gf::hstack(all, matrix(m));
        return bil_subspace(target, all);
    }
    std::set<int> xs, ys;
    for (const auto& m : maps) {
        xs.insert(m.map.begin(), m.map.end());
        ys.insert(m.ymap.begin(), m.ymap.end());
    }
    if (target.cat.tag == Cat::BinFunc)
        for (int a : xs)
            for (int b : xs) ys.insert(target.at(a, b));
    return inclusion(target, {xs.begin(), xs.end()}, {ys.begin(), ys.end()});
}

std::optional<Morphism> factor_through(const Morphism& m, const Morphism& sub) {
    if (m.src.cat.tag == Cat::Bil) {
        const gf::Mat s = matrix(sub), a = matrix(m);
        gf::Mat x(sub.src.n, m.src.n, m.src.cat.prime);
        for (int j = 0; j < m.src.n; ++j) {
            std::vector<int> rhs(static_cast<std::size_t>(s.rows));
            for (int i = 0; i < s.rows; ++i) rhs[static_cast<std::size_t>(i)] = a(i, j);
            auto sol = gf::solve(s, rhs);
            if (!sol) return std::nullopt;
            for (int i = 0; i < sub.src.n; ++i) x(i, j) = sol->particular[static_cast<std::size_t>(i)];
        }
        Morphism r = bil_morphism(m.src, sub.src, x);
        if (!is_morphism(r)) return std::nullopt;
        return r;
    }
    Morphism r{m.src, sub.src, {}, {}};
    for (int x : m.map) {
        auto it = std::find(sub.map.begin(), sub.map.end(), x);
        if (it == sub.map.end()) return std::nullopt;
        r.map.push_back(static_cast<int>(it - sub.map.begin()));
    }
    for (int y : m.ymap) {
        auto it = std::find(sub.ymap.begin(), sub.ymap.end(), y);
        if (it == sub.ymap.end()) return std::nullopt;
        r.ymap.push_back(static_cast<int>(it - sub.ymap.begin()));
    }
    if (!is_morphism(r)) return std::nullopt;
    return r;
}

}  // namespace indcat
