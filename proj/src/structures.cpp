#include <indcat/structures.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace indcat {

namespace {

std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Object blank(const CategoryId& cat, int n, int ny = 0) {
    Object o;
    o.cat = cat;
    o.n = n;
    o.ny = ny;
    o.carrier = iota_vec(n);
    if (cat.tag == Cat::BinFunc) o.ycarrier = iota_vec(ny);
    switch (cat.tag) {
        case Cat::Set:
        case Cat::GrpWitness: break;
        case Cat::TwoGraph: o.data.assign(static_cast<std::size_t>(n * n * n), 0); break;
        default: o.data.assign(static_cast<std::size_t>(n * n), 0); break;
    }
    return o;
}

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvariantViolation, what); }

int label_value(const Object& o, int idx) { return o.cat.labels[static_cast<std::size_t>(idx)]; }

bool all_distinct(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) {
        r *= b;
        if (r > (1LL << 40)) return r;
    }
    return r;
}

constexpr long long kGlCap = 70000;

}  // namespace

// ---------------------------------------------------------------------------

Object make_set(int n) { return blank(make_category(Cat::Set), n); }

Object make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Object o = blank(make_category(Cat::Gra), n);
    for (auto [a, b] : edges) {
        if (a == b) bad("graphs are loop-free");
        o.at(a, b) = o.at(b, a) = 1;
    }
    validate(o);
    return o;
}

Object make_poset(int n, const std::vector<std::pair<int, int>>& pairs) {
    Object o = blank(make_category(Cat::Pos), n);
    for (auto [a, b] : pairs) o.at(a, b) = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (o.at(i, k) && o.at(k, j)) o.at(i, j) = 1;
    validate(o);
    return o;
}

Object make_binfunc(int nx, int ny, std::vector<int> table) {
    Object o = blank(make_category(Cat::BinFunc), nx, ny);
    o.data = std::move(table);
    validate(o);
    return o;
}

Object make_twograph(int n, const std::vector<std::array<int, 3>>& triples) {
    Object o = blank(make_category(Cat::TwoGraph), n);
    for (auto t : triples) {
        std::array<int, 3> p = t;
        std::sort(p.begin(), p.end());
        do {
            o.at(p[0], p[1], p[2]) = 1;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    validate(o);
    return o;
}

Object make_kdist(const CategoryId& cat, int n, const std::vector<int>& values) {
    Object o = blank(cat, n);
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto it = std::find(cat.labels.begin(), cat.labels.end(), values[i]);
        if (it == cat.labels.end()) bad("distance value not in the label set");
        o.data[i] = static_cast<int>(it - cat.labels.begin());
    }
    validate(o);
    return o;
}

Object make_bil(const CategoryId& cat, int dim, std::vector<int> g) {
    Object o = blank(cat, dim);
    o.data = std::move(g);
    validate(o);
    return o;
}

Object make_group(Presentation pres) {
    Object o = blank(make_category(Cat::GrpWitness), 0);
    o.pres = std::move(pres);
    validate(o);
    return o;
}

// ---------------------------------------------------------------------------

void validate(const Object& o) {
    check_category(o.cat);
    if (o.n < 0 || o.ny < 0) bad("negative carrier size");
    if (o.cat.tag != Cat::GrpWitness) {
        if (static_cast<int>(o.carrier.size()) != o.n) bad("carrier size mismatch");
        if (!all_distinct(o.carrier)) bad("carrier atoms must be distinct");
    }
    const int n = o.n;
    switch (o.cat.tag) {
        case Cat::Set:
            if (!o.data.empty()) bad("SET objects carry no data");
            break;
        case Cat::Gra:
            if (o.data.size() != static_cast<std::size_t>(n * n)) bad("GRA data size");
            for (int i = 0; i < n; ++i) {
                if (o.at(i, i) != 0) bad("GRA: loops are not allowed");
                for (int j = 0; j < n; ++j) {
                    if (o.at(i, j) != 0 && o.at(i, j) != 1) bad("GRA: adjacency must be 0/1");
                    if (o.at(i, j) != o.at(j, i)) bad("GRA: edge relation must be symmetric");
                }
            }
            break;
        case Cat::Pos:
            if (o.data.size() != static_cast<std::size_t>(n * n)) bad("POS data size");
            for (int i = 0; i < n; ++i) {
                if (o.at(i, i) != 0) bad("POS: strict order must be irreflexive");
                for (int j = 0; j < n; ++j) {
                    if (o.at(i, j) != 0 && o.at(i, j) != 1) bad("POS: relation must be 0/1");
                    if (o.at(i, j) && o.at(j, i)) bad("POS: order must be antisymmetric");
                    for (int k = 0; k < n; ++k)
                        if (o.at(i, j) && o.at(j, k) && !o.at(i, k)) bad("POS: order must be transitive");
                }
            }
            break;
        case Cat::TwoGraph: {
            if (o.data.size() != static_cast<std::size_t>(n * n * n)) bad("TWOGRAPH data size");
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        const int v = o.at(i, j, k);
                        if (v != 0 && v != 1) bad("TWOGRAPH: flags must be 0/1");
                        if ((i == j || j == k || i == k) && v) bad("TWOGRAPH: edges are 3-element sets");
                        if (v != o.at(j, i, k) || v != o.at(i, k, j)) bad("TWOGRAPH: edges are unordered");
                    }
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        for (int d = c + 1; d < n; ++d) {
                            const int s = o.at(a, b, c) + o.at(a, b, d) + o.at(a, c, d) + o.at(b, c, d);
                            if (s % 2 != 0) bad("TWOGRAPH: a 4-subset spans an odd number of edges");
                        }
            break;
        }
        case Cat::BinFunc:
            if (static_cast<int>(o.ycarrier.size()) != o.ny) bad("BINFUNC Y carrier size mismatch");
            if (!all_distinct(o.ycarrier)) bad("BINFUNC Y atoms must be distinct");
            if (o.data.size() != static_cast<std::size_t>(n * n)) bad("BINFUNC table size");
            for (int v : o.data)
                if (v < 0 || v >= o.ny) bad("BINFUNC: table value outside Y");
            break;
        case Cat::KDist: {
            if (o.data.size() != static_cast<std::size_t>(n * n)) bad("KDIST table size");
            const int k = static_cast<int>(o.cat.labels.size());
            for (int v : o.data)
                if (v < 0 || v >= k) bad("KDIST: distance outside the label set");
            if (o.cat.metric)
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        for (int z = 0; z < n; ++z)
                            if (label_value(o, o.at(x, z)) > label_value(o, o.at(x, y)) + label_value(o, o.at(y, z)))
                                bad("KDIST: triangle inequality violated");
            break;
        }
        case Cat::Bil:
            if (n > o.cat.maxdim) bad("BIL: dimension exceeds maxdim");
            if (o.data.size() != static_cast<std::size_t>(n * n)) bad("BIL Gram size");
            for (int v : o.data)
                if (v < 0 || v >= o.cat.prime) bad("BIL: Gram entry outside GF(p)");
            if (o.cat.symmetric)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (o.at(i, j) != o.at(j, i)) bad("BIL: form must be symmetric");
            break;
        case Cat::GrpWitness: {
            const int g = static_cast<int>(o.pres.generators.size());
            for (const auto& r : o.pres.relators)
                for (int l : r)
                    if (l == 0 || l > g || -l > g) bad("GRPWITNESS: relator letter out of range");
            break;
        }
    }
}

bool is_valid(const Object& obj) {
    try {
        validate(obj);
        return true;
    } catch (const Error&) {
        return false;
    }
}

gf::Mat gram(const Object& b) {
    gf::Mat g(b.n, b.n, b.cat.prime);
    g.a = b.data;
    return g;
}

gf::Mat matrix(const Morphism& m) {
    gf::Mat a(m.dst.n, m.src.n, m.src.cat.prime);
    for (int j = 0; j < m.src.n; ++j)
        for (int i = 0; i < m.dst.n; ++i) a(i, j) = m.map[static_cast<std::size_t>(j * m.dst.n + i)];
    return a;
}

// ---------------------------------------------------------------------------
// Canonical forms.

namespace {

std::vector<int> relabeled_key(const Object& o, const std::vector<int>& perm) {
    const int n = o.n;
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<int> key;
    switch (o.cat.tag) {
        case Cat::TwoGraph:
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        key.push_back(o.at(inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)],
                                           inv[static_cast<std::size_t>(c)]));
            break;
        case Cat::BinFunc: {
            std::vector<int> ylab(static_cast<std::size_t>(o.ny), -1);
            int next = 0;
            key.reserve(static_cast<std::size_t>(n * n));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const int y = o.at(inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)]);
                    if (ylab[static_cast<std::size_t>(y)] < 0) ylab[static_cast<std::size_t>(y)] = next++;
                    key.push_back(ylab[static_cast<std::size_t>(y)]);
                }
            break;
        }
        default:
            key.reserve(static_cast<std::size_t>(n * n));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    key.push_back(o.at(inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)]));
            break;
    }
    return key;
}

/// BINFUNC Y relabeling induced by first occurrence in the relabeled table.
std::vector<int> binfunc_yperm(const Object& o, const std::vector<int>& perm) {
    const int n = o.n;
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<int> ylab(static_cast<std::size_t>(o.ny), -1);
    int next = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int y = o.at(inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)]);
            if (ylab[static_cast<std::size_t>(y)] < 0) ylab[static_cast<std::size_t>(y)] = next++;
        }
    for (auto& l : ylab)
        if (l < 0) l = next++;
    return ylab;
}

std::vector<gf::Mat> general_linear(int n, int p) {
    if (ipow(p, static_cast<long long>(n) * n) > kGlCap)
        throw Error(Errc::BoundTooLarge, "GL(" + std::to_string(n) + "," + std::to_string(p) + ") too large to search");
    std::vector<gf::Mat> out;
    for (auto& m : gf::all_matrices(n, n, p))
        if (gf::invertible(m)) out.push_back(std::move(m));
    return out;
}

}  // namespace

std::vector<int> canonical_key(const Object& o) {
    std::vector<int> head{static_cast<int>(o.cat.tag), o.n, o.ny};
    if (o.cat.tag == Cat::Set) return head;
    if (o.cat.tag == Cat::GrpWitness) {
        head.push_back(static_cast<int>(o.pres.generators.size()));
        for (const auto& r : o.pres.relators) {
            head.push_back(static_cast<int>(r.size()));
            head.insert(head.end(), r.begin(), r.end());
        }
        return head;
    }
    std::vector<int> best;
    if (o.cat.tag == Cat::Bil) {
        const gf::Mat g = gram(o);
        for (const auto& pm : general_linear(o.n, o.cat.prime)) {
            auto k = gf::mul(gf::mul(gf::transpose(pm), g), pm).a;
            if (best.empty() || k < best) best = std::move(k);
        }
    } else {
        std::vector<int> perm = iota_vec(o.n);
        bool first = true;
        do {
            auto k = relabeled_key(o, perm);
            if (first || k < best) best = std::move(k);
            first = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    head.insert(head.end(), best.begin(), best.end());
    return head;
}

Object relabel(const Object& o, const std::vector<int>& perm, const std::vector<int>& yperm) {
    Object r = o;
    const int n = o.n;
    for (int i = 0; i < n; ++i) r.carrier[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = o.carrier[static_cast<std::size_t>(i)];
    auto P = [&](int i) { return perm[static_cast<std::size_t>(i)]; };
    switch (o.cat.tag) {
        case Cat::Set:
        case Cat::GrpWitness: break;
        case Cat::TwoGraph:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) r.at(P(i), P(j), P(k)) = o.at(i, j, k);
            break;
        case Cat::BinFunc: {
            std::vector<int> yp = yperm.empty() ? iota_vec(o.ny) : yperm;
            for (int j = 0; j < o.ny; ++j) r.ycarrier[static_cast<std::size_t>(yp[static_cast<std::size_t>(j)])] = o.ycarrier[static_cast<std::size_t>(j)];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) r.at(P(i), P(j)) = yp[static_cast<std::size_t>(o.at(i, j))];
            break;
        }
        case Cat::Bil: throw Error(Errc::UnsupportedCategory, "relabel: BIL bases are changed through GL(n,p)");
        default:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) r.at(P(i), P(j)) = o.at(i, j);
            break;
    }
    return r;
}

Object canonicalize(const Object& o) {
    validate(o);
    if (o.cat.tag == Cat::GrpWitness) return o;
    Object r = o;
    if (o.cat.tag == Cat::Bil) {
        const auto key = canonical_key(o);
        r.data.assign(key.begin() + 3, key.end());
    } else if (o.cat.tag != Cat::Set) {
        std::vector<int> perm = iota_vec(o.n), best_perm = perm;
        std::vector<int> best;
        bool first = true;
        do {
            auto k = relabeled_key(o, perm);
            if (first || k < best) {
                best = std::move(k);
                best_perm = perm;
            }
            first = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::vector<int> yperm;
        if (o.cat.tag == Cat::BinFunc) yperm = binfunc_yperm(o, best_perm);
        r = relabel(o, best_perm, yperm);
    }
    r.carrier = iota_vec(o.n);
    if (o.cat.tag == Cat::BinFunc) r.ycarrier = iota_vec(o.ny);
    return r;
}

// ---------------------------------------------------------------------------
// Completions and enumeration.

namespace {

void complete_twograph(const Object& partial, std::size_t cap, std::vector<Object>& out) {
    const int n = partial.n;
    Object base = partial;
    // Degenerate triples are never edges.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if ((i == j || j == k || i == k) && base.at(i, j, k) < 0) base.at(i, j, k) = 0;
    std::map<std::array<int, 3>, int> var;
    std::vector<std::array<int, 3>> vars;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (base.at(a, b, c) < 0) {
                    var[{a, b, c}] = static_cast<int>(vars.size());
                    vars.push_back({a, b, c});
                }
    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::vector<int> row(vars.size(), 0);
                    int known = 0;
                    for (auto t : {std::array<int, 3>{a, b, c}, std::array<int, 3>{a, b, d},
                                   std::array<int, 3>{a, c, d}, std::array<int, 3>{b, c, d}}) {
                        auto it = var.find(t);
                        if (it != var.end())
                            row[static_cast<std::size_t>(it->second)] = 1;
                        else
                            known += base.at(t[0], t[1], t[2]);
                    }
                    rows.push_back(std::move(row));
                    rhs.push_back(known % 2);
                }
    gf::Mat m(static_cast<int>(rows.size()), static_cast<int>(vars.size()), 2);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    auto space = gf::solve(m, rhs);
    if (!space) return;
    const bool complete = gf::for_each_point(*space, cap + 1, [&](const std::vector<int>& x) {
        Object o = base;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            std::array<int, 3> p = vars[v];
            do {
                o.at(p[0], p[1], p[2]) = x[v];
            } while (std::next_permutation(p.begin(), p.end()));
        }
        out.push_back(std::move(o));
    });
    if (!complete || out.size() > cap) throw Error(Errc::BoundTooLarge, "too many two-graph completions");
}

}  // namespace

std::vector<Object> completions(const Object& partial, std::size_t cap) {
    std::vector<Object> out;
    const int n = partial.n;
    switch (partial.cat.tag) {
        case Cat::Set:
            out.push_back(partial);
            return out;
        case Cat::Bil:
        case Cat::GrpWitness: throw Error(Errc::UnsupportedCategory, "completions: not a relational category");
        case Cat::TwoGraph: complete_twograph(partial, cap, out); return out;
        default: break;
    }
    Object base = partial;
    // Variables: GRA unordered pairs, others ordered cells.
    struct Var {
        int i, j;
    };
    std::vector<Var> vars;
    const Cat tag = partial.cat.tag;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (base.at(i, j) >= 0) continue;
            if ((tag == Cat::Gra || tag == Cat::Pos) && i == j) {
                base.at(i, j) = 0;
                continue;
            }
            if (tag == Cat::Gra && j < i) continue;
            vars.push_back({i, j});
        }
    int arity = 2;
    if (tag == Cat::KDist) arity = static_cast<int>(partial.cat.labels.size());
    if (tag == Cat::BinFunc) arity = partial.ny;
    if (arity == 0 && !vars.empty()) return out;

    Object cur = base;
    std::size_t count = 0;
    auto set_var = [&](const Var& v, int value) {
        cur.at(v.i, v.j) = value;
        if (tag == Cat::Gra) cur.at(v.j, v.i) = value;
    };
    // Cheap incremental pruning for POS antisymmetry and GRA symmetry conflicts.
    auto consistent = [&](const Var& v) {
        if (tag == Cat::Pos) {
            const int a = cur.at(v.i, v.j), b = cur.at(v.j, v.i);
            return !(a == 1 && b == 1);
        }
        if (tag == Cat::Gra) return base.at(v.j, v.i) < 0 || base.at(v.j, v.i) == cur.at(v.i, v.j);
        return true;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == vars.size()) {
            if (is_valid(cur)) {
                if (++count > cap) throw Error(Errc::BoundTooLarge, "too many completions");
                out.push_back(cur);
            }
            return;
        }
        for (int value = 0; value < arity; ++value) {
            set_var(vars[k], value);
            if (consistent(vars[k])) self(self, k + 1);
        }
        set_var(vars[k], -1);
    };
    rec(rec, 0);
    return out;
}

std::vector<Object> extensions(const Object& obj, int k, int ky) {
    Object p = obj;
    const int n = obj.n, m = obj.n + k;
    p.n = m;
    int next = obj.carrier.empty() ? 0 : *std::max_element(obj.carrier.begin(), obj.carrier.end()) + 1;
    for (int i = 0; i < k; ++i) p.carrier.push_back(next++);
    if (obj.cat.tag == Cat::BinFunc) {
        p.ny = obj.ny + ky;
        int ynext = obj.ycarrier.empty() ? 0 : *std::max_element(obj.ycarrier.begin(), obj.ycarrier.end()) + 1;
        for (int i = 0; i < ky; ++i) p.ycarrier.push_back(ynext++);
    }
    switch (obj.cat.tag) {
        case Cat::Set: return {p};
        case Cat::TwoGraph:
            p.data.assign(static_cast<std::size_t>(m * m * m), -1);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) p.at(a, b, c) = obj.at(a, b, c);
            break;
        case Cat::Bil:
        case Cat::GrpWitness: throw Error(Errc::UnsupportedCategory, "extensions: not a relational category");
        default:
            p.data.assign(static_cast<std::size_t>(m * m), -1);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) p.at(a, b) = obj.at(a, b);
            break;
    }
    return completions(p);
}

std::vector<Object> labeled_structures(const CategoryId& cat, int n, int ny) {
    check_category(cat);
    if (cat.tag == Cat::GrpWitness) throw Error(Errc::UnsupportedCategory, "GRPWITNESS has no enumeration");
    if (cat.tag == Cat::Bil) {
        if (ipow(cat.prime, static_cast<long long>(n) * n) > (1LL << 22))
            throw Error(Errc::BoundTooLarge, "too many Gram matrices");
        std::vector<Object> out;
        for (auto& g : gf::all_matrices(n, n, cat.prime)) {
            Object o = blank(cat, n);
            o.data = g.a;
            if (is_valid(o)) out.push_back(std::move(o));
        }
        return out;
    }
    Object p = blank(cat, n, ny);
    std::fill(p.data.begin(), p.data.end(), -1);
    return completions(p);
}

std::vector<Object> enumerate(const CategoryId& cat, int max_size) {
    check_category(cat);
    if (cat.tag == Cat::GrpWitness) throw Error(Errc::UnsupportedCategory, "GRPWITNESS has no enumeration");
    if (max_size < 0 || max_size > size_cap(cat))
        throw Error(Errc::BoundTooLarge, "max_size " + std::to_string(max_size) + " exceeds the cap " +
                                             std::to_string(size_cap(cat)) + " for " + std::string(cat_name(cat.tag)));
    std::map<std::vector<int>, Object> reps;
    auto add = [&](const Object& o) {
        Object c = canonicalize(o);
        auto key = canonical_key(c);
        reps.emplace(std::move(key), std::move(c));
    };
    switch (cat.tag) {
        case Cat::BinFunc:
            for (int nx = 0; nx <= max_size; ++nx)
                for (int ny = nx == 0 ? 0 : 1; ny <= max_size; ++ny)
                    for (const auto& o : labeled_structures(cat, nx, ny)) add(o);
            break;
        case Cat::Bil:
            for (int d = 0; d <= max_size; ++d) {
                if (ipow(cat.prime, static_cast<long long>(d) * d) > kGlCap)
                    throw Error(Errc::BoundTooLarge, "BIL enumeration beyond the GL search cap");
                for (const auto& o : labeled_structures(cat, d)) add(o);
            }
            break;
        default: {
            std::vector<Object> layer{blank(cat, 0)};
            add(layer.front());
            for (int size = 1; size <= max_size; ++size) {
                std::map<std::vector<int>, Object> next;
                for (const auto& r : layer)
                    for (const auto& e : extensions(r, 1)) {
                        Object c = canonicalize(e);
                        auto key = canonical_key(c);
                        next.emplace(std::move(key), std::move(c));
                    }
                layer.clear();
                for (auto& [key, o] : next) {
                    layer.push_back(o);
                    reps.emplace(key, std::move(o));
                }
            }
            break;
        }
    }
    std::vector<Object> out;
    out.reserve(reps.size());
    for (auto& [key, o] : reps) out.push_back(std::move(o));
    // Keys start with (tag, n, ny), so map order is already size-major.
    return out;
}

// ---------------------------------------------------------------------------
// Morphisms.

namespace {

bool bil_preserves(const Morphism& m) {
    const gf::Mat a = matrix(m);
    if (gf::rank(a) != m.src.n) return false;
    return gf::mul(gf::mul(gf::transpose(a), gram(m.dst)), a) == gram(m.src);
}

/// Checks the constraints that involve atom `last` and atoms before it.
bool partial_ok(const Morphism& m, int last) {
    const Object& s = m.src;
    const Object& d = m.dst;
    const auto u = [&](int i) { return m.map[static_cast<std::size_t>(i)]; };
    switch (s.cat.tag) {
        case Cat::Set:
        case Cat::BinFunc: return true;
        case Cat::Gra:
            for (int i = 0; i <= last; ++i)
                if (s.at(i, last) && (u(i) == u(last) || !d.at(u(i), u(last)))) return false;
            return true;
        case Cat::Pos:
            for (int i = 0; i <= last; ++i) {
                if (s.at(i, last) && !(u(i) == u(last) || d.at(u(i), u(last)))) return false;
                if (s.at(last, i) && !(u(i) == u(last) || d.at(u(last), u(i)))) return false;
            }
            return true;
        case Cat::KDist:
            for (int i = 0; i <= last; ++i)
                if (d.at(u(i), u(last)) != s.at(i, last) || d.at(u(last), u(i)) != s.at(last, i)) return false;
            return true;
        case Cat::TwoGraph:
            for (int i = 0; i < last; ++i)
                for (int j = i + 1; j < last; ++j)
                    if (s.at(i, j, last)) {
                        const int a = u(i), b = u(j), c = u(last);
                        if (a == b || b == c || a == c || !d.at(a, b, c)) return false;
                    }
            return true;
        default: return false;
    }
}

bool binfunc_ok(const Morphism& m) {
    const Object& s = m.src;
    const Object& d = m.dst;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (m.ymap[static_cast<std::size_t>(s.at(i, j))] !=
                d.at(m.map[static_cast<std::size_t>(i)], m.map[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

bool injective(const std::vector<int>& v) { return all_distinct(v); }

bool surjective(const std::vector<int>& v, int n) {
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int x : v) hit[static_cast<std::size_t>(x)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

bool is_morphism(const Morphism& m) {
    if (m.src.cat.tag != m.dst.cat.tag) return false;
    if (m.src.cat.tag == Cat::GrpWitness) return false;
    if (m.src.cat.tag == Cat::Bil) {
        if (m.map.size() != static_cast<std::size_t>(m.src.n * m.dst.n)) return false;
        for (int v : m.map)
            if (v < 0 || v >= m.src.cat.prime) return false;
        return bil_preserves(m);
    }
    if (m.map.size() != static_cast<std::size_t>(m.src.n)) return false;
    for (int v : m.map)
        if (v < 0 || v >= m.dst.n) return false;
    if (m.src.cat.tag == Cat::BinFunc) {
        if (m.ymap.size() != static_cast<std::size_t>(m.src.ny)) return false;
        for (int v : m.ymap)
            if (v < 0 || v >= m.dst.ny) return false;
        return binfunc_ok(m);
    }
    for (int i = 0; i < m.src.n; ++i)
        if (!partial_ok(m, i)) return false;
    return true;
}

Flags classify(const Morphism& m) {
    if (!is_morphism(m)) throw Error(Errc::NotAMorphism, "classify: map does not preserve structure");
    Flags f;
    const Object& s = m.src;
    const Object& d = m.dst;
    if (s.cat.tag == Cat::Bil) {
        f.is_mono = f.is_embedding = true;
        f.is_surjection = gf::rank(matrix(m)) == d.n;
        return f;
    }
    const auto u = [&](int i) { return m.map[static_cast<std::size_t>(i)]; };
    f.is_mono = injective(m.map) && (s.cat.tag != Cat::BinFunc || injective(m.ymap));
    f.is_surjection = surjective(m.map, d.n) && (s.cat.tag != Cat::BinFunc || surjective(m.ymap, d.ny));
    bool reflects = true;
    switch (s.cat.tag) {
        case Cat::Gra:
        case Cat::Pos:
            for (int i = 0; i < s.n && reflects; ++i)
                for (int j = 0; j < s.n; ++j)
                    if (d.at(u(i), u(j)) != s.at(i, j)) {
                        reflects = false;
                        break;
                    }
            break;
        case Cat::TwoGraph:
            for (int i = 0; i < s.n && reflects; ++i)
                for (int j = 0; j < s.n && reflects; ++j)
                    for (int k = 0; k < s.n; ++k)
                        if (i != j && j != k && i != k && d.at(u(i), u(j), u(k)) != s.at(i, j, k)) {
                            reflects = false;
                            break;
                        }
            break;
        default: break;
    }
    f.is_embedding = f.is_mono && reflects;
    return f;
}

bool is_embedding(const Morphism& m) { return is_morphism(m) && classify(m).is_embedding; }

bool is_iso(const Morphism& m) {
    if (!is_morphism(m)) return false;
    const Flags f = classify(m);
    return f.is_embedding && f.is_surjection;
}

Morphism make_morphism(const Object& src, const Object& dst, std::vector<int> map, std::vector<int> ymap) {
    Morphism m{src, dst, std::move(map), std::move(ymap)};
    if (!is_morphism(m)) throw Error(Errc::NotAMorphism, "map does not preserve structure");
    return m;
}

Morphism identity(const Object& obj) {
    Morphism m{obj, obj, {}, {}};
    if (obj.cat.tag == Cat::Bil) {
        m.map = gf::identity(obj.n, obj.cat.prime).a;
    } else {
        m.map = iota_vec(obj.n);
        if (obj.cat.tag == Cat::BinFunc) m.ymap = iota_vec(obj.ny);
    }
    return m;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.dst == g.src) &&
        !(f.dst.n == g.src.n && f.dst.ny == g.src.ny && f.dst.data == g.src.data && f.dst.cat == g.src.cat))
        throw Error(Errc::PreconditionViolated, "compose: codomain/domain mismatch");
    Morphism r{f.src, g.dst, {}, {}};
    if (f.src.cat.tag == Cat::Bil) {
        const gf::Mat prod = gf::mul(matrix(g), matrix(f));
        r.map.assign(static_cast<std::size_t>(prod.rows * prod.cols), 0);
        for (int j = 0; j < prod.cols; ++j)
            for (int i = 0; i < prod.rows; ++i) r.map[static_cast<std::size_t>(j * prod.rows + i)] = prod(i, j);
        return r;
    }
    r.map.resize(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) r.map[i] = g.map[static_cast<std::size_t>(f.map[i])];
    r.ymap.resize(f.ymap.size());
    for (std::size_t i = 0; i < f.ymap.size(); ++i) r.ymap[i] = g.ymap[static_cast<std::size_t>(f.ymap[i])];
    return r;
}

bool same_arrow(const Morphism& a, const Morphism& b) { return a.map == b.map && a.ymap == b.ymap; }

std::vector<int> image_x(const Morphism& m) {
    std::vector<int> v = m.map;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> image_y(const Morphism& m) {
    std::vector<int> v = m.ymap;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Object restrict(const Object& obj, const std::vector<int>& xs, const std::vector<int>& ys) {
    if (!carrier_based(obj.cat.tag)) throw Error(Errc::UnsupportedCategory, "restrict: not carrier based");
    const int k = static_cast<int>(xs.size());
    Object r = blank(obj.cat, k);
    for (int i = 0; i < k; ++i) r.carrier[static_cast<std::size_t>(i)] = obj.carrier[static_cast<std::size_t>(xs[static_cast<std::size_t>(i)])];
    const auto X = [&](int i) { return xs[static_cast<std::size_t>(i)]; };
    switch (obj.cat.tag) {
        case Cat::Set: break;
        case Cat::TwoGraph:
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    for (int l = 0; l < k; ++l) r.at(i, j, l) = obj.at(X(i), X(j), X(l));
            break;
        case Cat::BinFunc: {
            r.ny = static_cast<int>(ys.size());
            r.ycarrier.resize(ys.size());
            std::vector<int> pos(static_cast<std::size_t>(obj.ny), -1);
            for (std::size_t j = 0; j < ys.size(); ++j) {
                pos[static_cast<std::size_t>(ys[j])] = static_cast<int>(j);
                r.ycarrier[j] = obj.ycarrier[static_cast<std::size_t>(ys[j])];
            }
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    const int y = pos[static_cast<std::size_t>(obj.at(X(i), X(j)))];
                    if (y < 0) bad("restrict: Y atoms not closed under the table");
                    r.at(i, j) = y;
                }
            break;
        }
        default:
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) r.at(i, j) = obj.at(X(i), X(j));
            break;
    }
    return r;
}

Morphism inclusion(const Object& obj, const std::vector<int>& xs, const std::vector<int>& ys) {
    Object sub = restrict(obj, xs, ys);
    return Morphism{std::move(sub), obj, xs, obj.cat.tag == Cat::BinFunc ? ys : std::vector<int>{}};
}

std::vector<Morphism> subobjects(const Object& obj) {
    std::vector<Morphism> out;
    if (obj.cat.tag == Cat::GrpWitness) throw Error(Errc::UnsupportedCategory, "subobjects of a presentation");
    if (obj.cat.tag == Cat::Bil) {
        const int n = obj.n, p = obj.cat.prime;
        const gf::Mat g = gram(obj);
        for (int k = 0; k <= n; ++k)
            for (auto& r : gf::all_matrices(k, n, p)) {
                gf::Mat e = r;
                if (static_cast<int>(gf::rref(e).size()) != k || !(e == r)) continue;
                const gf::Mat incl = gf::transpose(r);  // n x k
                Object sub = blank(obj.cat, k);
                sub.data = gf::mul(gf::mul(r, g), incl).a;
                Morphism m{sub, obj, {}, {}};
                m.map.assign(static_cast<std::size_t>(n * k), 0);
                for (int j = 0; j < k; ++j)
                    for (int i = 0; i < n; ++i) m.map[static_cast<std::size_t>(j * n + i)] = incl(i, j);
                out.push_back(std::move(m));
            }
        return out;
    }
    const int n = obj.n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> xs;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) xs.push_back(i);
        if (obj.cat.tag != Cat::BinFunc) {
            out.push_back(inclusion(obj, xs));
            continue;
        }
        std::vector<bool> forced(static_cast<std::size_t>(obj.ny), false);
        for (int a : xs)
            for (int b : xs) forced[static_cast<std::size_t>(obj.at(a, b))] = true;
        std::vector<int> optional;
        for (int y = 0; y < obj.ny; ++y)
            if (!forced[static_cast<std::size_t>(y)]) optional.push_back(y);
        for (unsigned ym = 0; ym < (1u << optional.size()); ++ym) {
            std::vector<int> ys;
            for (int y = 0; y < obj.ny; ++y) {
                if (forced[static_cast<std::size_t>(y)]) {
                    ys.push_back(y);
                    continue;
                }
                const auto idx = std::find(optional.begin(), optional.end(), y) - optional.begin();
                if (ym & (1u << idx)) ys.push_back(y);
            }
            out.push_back(inclusion(obj, xs, ys));
        }
    }
    return out;
}

std::vector<Morphism> all_morphisms(const Object& src, const Object& dst, std::size_t cap) {
    std::vector<Morphism> out;
    if (src.cat.tag != dst.cat.tag) return out;
    if (src.cat.tag == Cat::GrpWitness) throw Error(Errc::UnsupportedCategory, "morphisms of presentations");
    if (src.cat.tag == Cat::Bil) {
        for (auto& a : gf::all_matrices(dst.n, src.n, src.cat.prime)) {
            Morphism m{src, dst, {}, {}};
            m.map.assign(static_cast<std::size_t>(src.n * dst.n), 0);
            for (int j = 0; j < src.n; ++j)
                for (int i = 0; i < dst.n; ++i) m.map[static_cast<std::size_t>(j * dst.n + i)] = a(i, j);
            if (bil_preserves(m)) out.push_back(std::move(m));
            if (out.size() > cap) throw Error(Errc::BoundTooLarge, "too many morphisms");
        }
        return out;
    }
    if (dst.n == 0 && src.n > 0) return out;
    Morphism cur{src, dst, std::vector<int>(static_cast<std::size_t>(src.n), 0), {}};
    auto emit = [&]() {
        if (src.cat.tag != Cat::BinFunc) {
            out.push_back(cur);
        } else {
            // v is forced on values hit by the table, free elsewhere.
            std::vector<int> v(static_cast<std::size_t>(src.ny), -1);
            for (int i = 0; i < src.n; ++i)
                for (int j = 0; j < src.n; ++j) {
                    const int y = src.at(i, j);
                    const int t = dst.at(cur.map[static_cast<std::size_t>(i)], cur.map[static_cast<std::size_t>(j)]);
                    if (v[static_cast<std::size_t>(y)] >= 0 && v[static_cast<std::size_t>(y)] != t) return;
                    v[static_cast<std::size_t>(y)] = t;
                }
            std::vector<int> free;
            for (int y = 0; y < src.ny; ++y)
                if (v[static_cast<std::size_t>(y)] < 0) free.push_back(y);
            if (!free.empty() && dst.ny == 0) return;
            std::vector<int> idx(free.size(), 0);
            while (true) {
                for (std::size_t k = 0; k < free.size(); ++k) v[static_cast<std::size_t>(free[k])] = idx[k];
                cur.ymap = v;
                out.push_back(cur);
                if (out.size() > cap) throw Error(Errc::BoundTooLarge, "too many morphisms");
                std::size_t k = 0;
                while (k < idx.size() && ++idx[k] == dst.ny) idx[k++] = 0;
                if (k == idx.size()) break;
            }
            cur.ymap.clear();
        }
        if (out.size() > cap) throw Error(Errc::BoundTooLarge, "too many morphisms");
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == src.n) {
            emit();
            return;
        }
        for (int t = 0; t < dst.n; ++t) {
            cur.map[static_cast<std::size_t>(i)] = t;
            if (partial_ok(cur, i)) self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Morphism> embeddings(const Object& src, const Object& dst) {
    std::vector<Morphism> out;
    for (auto& m : all_morphisms(src, dst))
        if (classify(m).is_embedding) out.push_back(std::move(m));
    return out;
}

}  // namespace indcat
