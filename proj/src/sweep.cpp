#include <indcat/sweep.hpp>

#include <indcat/encoding.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace indcat {

namespace {

int find_id(const std::vector<int>& ids, int id) {
    const auto it = std::find(ids.begin(), ids.end(), id);
    return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
}

void require_carrier(const CategoryId& cat) {
    if (!carrier_based(cat.tag)) throw Error(Errc::UnsupportedCategory, std::string("no sweeps for ") + std::string(cat_name(cat.tag)));
}

std::vector<Object> subs(const Object& o) {
    std::vector<Object> out;
    for (auto& m : subobjects(o)) out.push_back(std::move(m.src));
    return out;
}

Object meet(const Object& a, const Object& b, const Object& amb) { return pullback(by_ids(a, amb), by_ids(b, amb)).left.src; }

int max_id(const Object& o) { return o.carrier.empty() ? -1 : *std::max_element(o.carrier.begin(), o.carrier.end()); }


CommSquare square_by_ids(const Object& c, const Object& a, const Object& b, const Object& m) {
    return CommSquare{by_ids(c, a), by_ids(c, b), by_ids(a, m), by_ids(b, m)};
}

/// Runs `check` on every (sampled) instance; the first Fails in instance order
/// supplies the witness, so the result does not depend on the worker count.
template <typename T>
AxiomResult run_instances(const std::string& name, const std::vector<T>& all, const SweepOptions& opt,
                          const std::function<Verdict(const T&)>& check) {
    AxiomResult r;
    r.axiom = name;
    r.instances = all.size();
    std::vector<std::size_t> idx(all.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (opt.sample > 0 && idx.size() > opt.sample) {
        std::mt19937_64 rng(opt.seed);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(opt.sample);
        std::sort(idx.begin(), idx.end());
    }
    r.checked = idx.size();
    std::vector<Verdict> out(idx.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < idx.size();) {
            try {
                out[k] = check(all[idx[k]]);
            } catch (const Error& e) {
                out[k] = Verdict::unknown(opt.max_size, std::string(errc_name(e.code())) + ": " + e.what());
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(idx.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Verdict acc = Verdict::holds(opt.max_size, "no counterexample up to size " + std::to_string(opt.max_size));
    const Verdict* first_unknown = nullptr;
    for (const auto& v : out) {
        switch (v.status) {
            case Status::Holds: ++r.holds; break;
            case Status::Fails: ++r.fails; break;
            case Status::Unknown:
                ++r.unknown;
                if (!first_unknown) first_unknown = &v;
                break;
        }
        if (v.vacuous) ++r.vacuous;
        if (v.status == Status::Fails && acc.status != Status::Fails) {
            acc = v;
            acc.bound = opt.max_size;
        }
    }
    if (acc.status != Status::Fails && first_unknown) {
        acc = *first_unknown;
        acc.bound = opt.max_size;
    }
    r.verdict = acc;
    return r;
}

// --- instance families ---------------------------------------------------------------

/// (C, A, B, M) with A, B taken inside an enumerated M and C inside their meet.
struct AmbientSquare {
    Object c, a, b, m;
};

std::vector<AmbientSquare> ambient_squares(const CategoryId& cat, int max_size) {
    std::vector<AmbientSquare> out;
    for (const auto& m : enumerate(cat, max_size)) {
        const auto ss = subs(m);
        for (const auto& a : ss)
            for (const auto& b : ss)
                for (const auto& c : subs(meet(a, b, m))) out.push_back({c, a, b, m});
    }
    return out;
}

struct Chain {
    std::vector<Object> m, a, b, c;
};

std::vector<Chain> chains(const CategoryId& cat, int max_size, int len) {
    std::vector<Chain> out;
    for (const auto& top : enumerate(cat, max_size)) {
        // Atom x enters the chain at level e(x) (or never) and belongs to A, B or both.
        const int n = top.n, levels = len + 1, choices = levels * 4;
        std::size_t total = 1;
        for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(choices);
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<int> lvl(static_cast<std::size_t>(n)), mem(static_cast<std::size_t>(n));
            std::size_t c = code;
            for (int i = 0; i < n; ++i) {
                lvl[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(choices)) / 4;
                mem[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(choices)) % 4;
                c /= static_cast<std::size_t>(choices);
            }
            Chain ch;
            for (int l = 0; l < len; ++l) {
                std::vector<int> xm, xa, xb, xc;
                for (int i = 0; i < n; ++i) {
                    if (lvl[static_cast<std::size_t>(i)] > l) continue;
                    const int id = top.carrier[static_cast<std::size_t>(i)];
                    xm.push_back(id);
                    if (mem[static_cast<std::size_t>(i)] & 1) xa.push_back(id);
                    if (mem[static_cast<std::size_t>(i)] & 2) xb.push_back(id);
                    if (mem[static_cast<std::size_t>(i)] == 3) xc.push_back(id);
                }
                ch.m.push_back(sub_by_ids(top, xm));
                ch.a.push_back(sub_by_ids(top, xa));
                ch.b.push_back(sub_by_ids(top, xb));
                ch.c.push_back(sub_by_ids(top, xc));
            }
            out.push_back(std::move(ch));
        }
    }
    return out;
}

Cocone chain_colimit(const std::vector<Object>& xs) {
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        arrows.push_back({static_cast<int>(i), static_cast<int>(i + 1), by_ids(xs[i], xs[i + 1])});
    AmalgamSet s = colimits(xs, arrows);
    if (s.instances.size() != 1) throw Error(Errc::PreconditionViolated, "a chain of embeddings has a unique colimit");
    return s.instances.front();
}

Morphism chain_map(const Cocone& from, const std::vector<Object>& xs, const Cocone& to, const std::vector<Object>& ys) {
    std::vector<Morphism> legs;
    for (std::size_t i = 0; i < xs.size(); ++i) legs.push_back(compose(to.legs[i], by_ids(xs[i], ys[i])));
    auto m = mediate(from, xs, to.apex, legs);
    if (!m) throw Error(Errc::PreconditionViolated, "chain maps do not induce a colimit map");
    return *m;
}

Verdict check_chain(const Chain& ch) {
    for (std::size_t i = 0; i < ch.m.size(); ++i) {
        const CommSquare link = square_by_ids(ch.c[i], ch.a[i], ch.b[i], ch.m[i]);
        if (!pullback_test(link))
            throw Error(Errc::PreconditionViolated, "chain link " + std::to_string(i) + " is not a pullback");
    }
    const Cocone pm = chain_colimit(ch.m), pa = chain_colimit(ch.a), pb = chain_colimit(ch.b), pc = chain_colimit(ch.c);
    const CommSquare lim{chain_map(pc, ch.c, pa, ch.a), chain_map(pc, ch.c, pb, ch.b), chain_map(pa, ch.a, pm, ch.m),
                         chain_map(pb, ch.b, pm, ch.m)};
    if (pullback_test(lim)) return Verdict::holds(0);
    Diagram w = square_diagram(lim);
    w.params["check"] = "union-chain";
    return Verdict::fails(w, "the union of a chain of pullback squares is not a pullback");
}

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Diagram square_witness(const CommSquare& sq, const char* check) {
    Diagram w = square_diagram(sq);
    w.params["check"] = check;
    return w;
}

std::vector<AxiomResult> basic_axioms(const SweepOptions& opt) {
    const auto amb = ambient_squares(opt.cat, opt.max_size);
    std::vector<AxiomResult> out;

    out.push_back(run_instances<AmbientSquare>("invariance", amb, opt, [](const AmbientSquare& s) {
        const CommSquare sq = square_by_ids(s.c, s.a, s.b, s.m);
        const bool pb = pullback_test(sq);
        for (const auto& perm : permutations(s.m.n)) {
            Object moved = relabel(s.m, perm);
            moved.carrier = s.m.carrier;
            moved.ycarrier = s.m.ycarrier;
            std::vector<int> yid(static_cast<std::size_t>(s.m.ny));
            std::iota(yid.begin(), yid.end(), 0);
            const Morphism phi = make_morphism(s.m, moved, perm, yid);
            const CommSquare image{sq.left, sq.bottom, compose(phi, sq.top), compose(phi, sq.right)};
            if (pullback_test(image) != pb) return Verdict::fails(square_witness(image, "pullback"), "isomorphic squares disagree");
        }
        return Verdict::holds(0);
    }));

    struct Mono {
        AmbientSquare s;
        Object b2;
    };
    std::vector<Mono> mono;
    for (const auto& s : amb)
        if (pullback_test(square_by_ids(s.c, s.a, s.b, s.m)))
            for (const auto& b2 : subs(s.b))
                if (within(s.c, b2)) mono.push_back({s, b2});
    out.push_back(run_instances<Mono>("monotonicity", mono, opt, [](const Mono& x) {
        const CommSquare sq = square_by_ids(x.s.c, x.s.a, x.b2, x.s.m);
        if (pullback_test(sq)) return Verdict::holds(0);
        return Verdict::fails(square_witness(sq, "pullback"), "restricting B loses independence");
    }));

    struct Trans {
        Object c, a, b, m, d, n;
    };
    std::vector<Trans> trans;
    for (const auto& n : enumerate(opt.cat, opt.max_size)) {
        const auto ss = subs(n);
        for (const auto& m : ss)
            for (const auto& d : ss)
                for (const auto& b : subs(meet(m, d, n)))
                    for (const auto& a : subs(m))
                        if (within(a, m))
                            for (const auto& c : subs(meet(a, b, n))) trans.push_back({c, a, b, m, d, n});
    }
    out.push_back(run_instances<Trans>("transitivity", trans, opt, [](const Trans& t) {
        const CommSquare first = square_by_ids(t.c, t.a, t.b, t.m), second = square_by_ids(t.b, t.m, t.d, t.n);
        if (!pullback_test(first) || !pullback_test(second)) {
            Verdict v = Verdict::holds(0);
            v.vacuous = true;
            return v;
        }
        const CommSquare pasted = square_by_ids(t.c, t.a, t.d, t.n);
        if (pullback_test(pasted)) return Verdict::holds(0);
        return Verdict::fails(square_witness(pasted, "pullback"), "pasting two pullback squares fails");
    }));

    out.push_back(run_instances<AmbientSquare>("symmetry", amb, opt, [](const AmbientSquare& s) {
        const CommSquare sq = square_by_ids(s.c, s.a, s.b, s.m);
        if (pullback_test(sq) == pullback_test(transpose(sq))) return Verdict::holds(0);
        return Verdict::fails(square_witness(sq, "pullback"), "transpose disagrees");
    }));

    out.push_back(run_instances<SpanCase>("existence", spans(opt.cat, opt.max_size), opt, [](const SpanCase& s) {
        const Span sp{s.c, by_ids(s.c, s.a), by_ids(s.c, s.b)};
        try {
            const CommSquare sq = complete_span(sp);
            if (!pullback_test(sq)) throw Error(Errc::NoIndependentAmalgam, "completion is not a pullback");
            return Verdict::holds(0);
        } catch (const Error& e) {
            if (e.code() != Errc::NoIndependentAmalgam) throw;
            Diagram w;
            w.put("C", s.c);
            w.put("A", s.a);
            w.put("B", s.b);
            w.put("C", "A", sp.left);
            w.put("C", "B", sp.right);
            w.params["check"] = "existence";
            return Verdict::fails(w, e.what());
        }
    }));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Morphism by_ids(const Object& src, const Object& dst) {
    require_carrier(src.cat);
    std::vector<int> map, ymap;
    for (int id : src.carrier) {
        const int j = find_id(dst.carrier, id);
        if (j < 0) throw Error(Errc::NotAMorphism, "atom " + std::to_string(id) + " missing from the target");
        map.push_back(j);
    }
    if (src.cat.tag == Cat::BinFunc)
        for (int id : src.ycarrier) {
            const int j = find_id(dst.ycarrier, id);
            if (j < 0) throw Error(Errc::NotAMorphism, "Y atom " + std::to_string(id) + " missing from the target");
            ymap.push_back(j);
        }
    return make_morphism(src, dst, std::move(map), std::move(ymap));
}

bool within(const Object& small, const Object& big) {
    for (int id : small.carrier)
        if (find_id(big.carrier, id) < 0) return false;
    for (int id : small.ycarrier)
        if (find_id(big.ycarrier, id) < 0) return false;
    return true;
}

std::vector<Object> grow(const Object& base, int k, int ky, int first_id, int first_yid) {
    auto out = extensions(base, k, base.cat.tag == Cat::BinFunc ? ky : 0);
    for (auto& o : out) {
        for (int i = 0; i < k; ++i) o.carrier[static_cast<std::size_t>(base.n + i)] = first_id + i;
        if (o.cat.tag == Cat::BinFunc)
            for (int j = 0; j < ky; ++j) o.ycarrier[static_cast<std::size_t>(base.ny + j)] = first_yid + j;
    }
    return out;
}

std::vector<Object> glue(const std::vector<Object>& pieces, int extra, int extra_y) {
    const CategoryId cat = pieces.at(0).cat;
    require_carrier(cat);
    std::set<int> xs, ys;
    for (const auto& p : pieces) {
        xs.insert(p.carrier.begin(), p.carrier.end());
        ys.insert(p.ycarrier.begin(), p.ycarrier.end());
    }
    Object u;
    u.cat = cat;
    u.carrier.assign(xs.begin(), xs.end());
    for (int i = 0, next = xs.empty() ? 0 : *xs.rbegin() + 1; i < extra; ++i) u.carrier.push_back(next + i);
    u.n = static_cast<int>(u.carrier.size());
    const int n = u.n;
    if (cat.tag == Cat::BinFunc) {
        u.ycarrier.assign(ys.begin(), ys.end());
        for (int i = 0, next = ys.empty() ? 0 : *ys.rbegin() + 1; i < extra_y; ++i) u.ycarrier.push_back(next + i);
        u.ny = static_cast<int>(u.ycarrier.size());
    }
    if (cat.tag == Cat::TwoGraph)
        u.data.assign(static_cast<std::size_t>(n * n * n), -1);
    else if (cat.tag != Cat::Set)
        u.data.assign(static_cast<std::size_t>(n * n), -1);
    auto put = [&](int& cell, int v) {
        if (cell >= 0 && cell != v) return false;
        cell = v;
        return true;
    };
    for (const auto& p : pieces) {
        std::vector<int> at(static_cast<std::size_t>(p.n));
        for (int i = 0; i < p.n; ++i) at[static_cast<std::size_t>(i)] = find_id(u.carrier, p.carrier[static_cast<std::size_t>(i)]);
        auto I = [&](int i) { return at[static_cast<std::size_t>(i)]; };
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j) {
                if (cat.tag == Cat::Set) continue;
                if (cat.tag == Cat::TwoGraph) {
                    for (int k = 0; k < p.n; ++k)
                        if (!put(u.at(I(i), I(j), I(k)), p.at(i, j, k))) return {};
                    continue;
                }
                int v = p.at(i, j);
                if (cat.tag == Cat::BinFunc) v = find_id(u.ycarrier, p.ycarrier[static_cast<std::size_t>(v)]);
                if (!put(u.at(I(i), I(j)), v)) return {};
            }
    }
    return completions(u);
}

Object sub_by_ids(const Object& obj, const std::vector<int>& ids) {
    std::vector<int> xs;
    for (int id : ids) {
        const int i = find_id(obj.carrier, id);
        if (i < 0) throw Error(Errc::NotAMorphism, "sub_by_ids: unknown atom");
        xs.push_back(i);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<int> ys;
    if (obj.cat.tag == Cat::BinFunc) {
        std::set<int> reach;
        for (int i : xs)
            for (int j : xs) reach.insert(obj.at(i, j));
        ys.assign(reach.begin(), reach.end());
    }
    return restrict(obj, xs, ys);
}

std::vector<SpanCase> spans(const CategoryId& cat, int max_size) {
    require_carrier(cat);
    const bool bf = cat.tag == Cat::BinFunc;
    std::vector<SpanCase> out;
    for (const auto& c : enumerate(cat, max_size))
        for (int ka = 0; c.n + ka <= max_size; ++ka)
            for (int kb = 0; c.n + ka + kb <= max_size; ++kb)
                for (int ya = 0; c.ny + ya <= (bf ? max_size : c.ny); ++ya)
                    for (int yb = 0; c.ny + yb <= (bf ? max_size : c.ny); ++yb)
                        for (const auto& a : grow(c, ka, ya, 100, 100)) {
                            if (bf && a.n == 0 && a.ny > 0 && c.n > 0) continue;
                            for (const auto& b : grow(c, kb, yb, 200, 200))
                                if (a.n + b.n - c.n <= max_size && (!bf || a.ny + b.ny - c.ny <= max_size)) out.push_back({c, a, b});
                        }
    return out;
}

std::vector<CommSquare> glued_squares(const CategoryId& cat, int max_size) {
    const bool bf = cat.tag == Cat::BinFunc;
    std::vector<CommSquare> out;
    for (const auto& s : spans(cat, max_size)) {
        const int nx = s.a.n + s.b.n - s.c.n, ny = s.a.ny + s.b.ny - s.c.ny;
        for (int ex = 0; nx + ex <= max_size; ++ex)
            for (int ey = 0; ny + ey <= (bf ? max_size : ny); ++ey)
                for (const auto& m : glue({s.a, s.b}, ex, ey)) out.push_back(square_by_ids(s.c, s.a, s.b, m));
    }
    return out;
}

std::vector<Horn> horns(const CategoryId& cat, int max_size) {
    require_carrier(cat);
    const bool bf = cat.tag == Cat::BinFunc;
    std::vector<Horn> out;
    for (const auto& m : enumerate(cat, max_size)) {
        const int ylim = bf ? max_size - m.ny : 0;
        std::vector<std::vector<Object>> ext(3);
        for (int slot = 0; slot < 3; ++slot)
            for (int k = 0; m.n + k <= max_size; ++k)
                for (int ky = 0; ky <= ylim; ++ky)
                    for (auto& o : grow(m, k, ky, 100 * (slot + 1), 100 * (slot + 1))) ext[static_cast<std::size_t>(slot)].push_back(std::move(o));
        auto faces = [&](const Object& x, const Object& y) {
            std::vector<Object> r;
            const int nx = x.n + y.n - m.n, ny = x.ny + y.ny - m.ny;
            if (nx > max_size || ny > max_size) return r;
            for (int ey = 0; ny + ey <= (bf ? max_size : ny); ++ey)
                for (auto& o : glue({x, y}, 0, ey)) r.push_back(std::move(o));
            return r;
        };
        for (const auto& a : ext[0])
            for (const auto& b : ext[1]) {
                const auto n1s = faces(a, b);
                if (n1s.empty()) continue;
                for (const auto& c : ext[2]) {
                    const auto n2s = faces(a, c), n3s = faces(b, c);
                    for (const auto& n1 : n1s)
                        for (const auto& n2 : n2s)
                            for (const auto& n3 : n3s)
                                out.push_back(Horn{by_ids(m, a), by_ids(m, b), by_ids(m, c), by_ids(a, n1), by_ids(b, n1),
                                                   by_ids(a, n2), by_ids(c, n2), by_ids(b, n3), by_ids(c, n3)});
                }
            }
    }
    return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names{"basic", "base-mono", "uniqueness", "3-amalg", "strongly-squared",
                                                "effective", "sld", "union-chain"};
    return names;
}

std::vector<AxiomResult> run_check(const std::string& axiom, const SweepOptions& opt) {
    check_category(opt.cat);
    require_carrier(opt.cat);
    if (opt.max_size < 0 || opt.max_size > size_cap(opt.cat))
        throw Error(Errc::BoundTooLarge, "max-size exceeds the cap of " + std::to_string(size_cap(opt.cat)) + " for " +
                                             std::string(cat_name(opt.cat.tag)));
    const CategoryId& cat = opt.cat;
    const int max = opt.max_size;
    if (axiom == "basic") return basic_axioms(opt);

    if (axiom == "base-mono") {
        std::vector<BaseMonoProblem> probs;
        for (const auto& m : enumerate(cat, max)) {
            const auto ss = subs(m);
            for (const auto& a : ss)
                for (const auto& d : ss) {
                    const Object c = meet(a, d, m);
                    for (const auto& b : subs(d))
                        if (within(c, b)) probs.push_back({by_ids(c, a), by_ids(c, b), by_ids(b, d), by_ids(a, m), by_ids(d, m)});
                }
        }
        return {run_instances<BaseMonoProblem>("base-mono", probs, opt, check_base_monotonicity_instance)};
    }

    if (axiom == "strongly-squared") {
        std::vector<SixDiagram> six;
        for (const auto& m5 : enumerate(cat, max)) {
            const auto ss = subs(m5);
            for (const auto& m4 : ss)
                for (const auto& m2 : subs(m4))
                    for (const auto& m1 : ss) {
                        const Object m0 = meet(m1, m4, m5);
                        if (!within(m0, m2)) continue;
                        const Object m3 = generated_subobject(m5, {by_ids(m1, m5), by_ids(m2, m5)}).src;
                        six.push_back({by_ids(m0, m1), by_ids(m0, m2), by_ids(m1, m3), by_ids(m2, m3), by_ids(m2, m4),
                                       by_ids(m3, m5), by_ids(m4, m5)});
                    }
        }
        return {run_instances<SixDiagram>("strongly-squared", six, opt, check_strongly_squared_instance)};
    }

    if (axiom == "3-amalg") return {run_instances<Horn>("3-amalg", horns(cat, max), opt, check_3_amalgamation)};

    if (axiom == "uniqueness") {
        const bool bf = cat.tag == Cat::BinFunc;
        std::vector<std::pair<CommSquare, CommSquare>> pairs;
        for (const auto& s : spans(cat, max)) {
            const int nx = s.a.n + s.b.n - s.c.n, ny = s.a.ny + s.b.ny - s.c.ny;
            std::vector<Object> ms;
            for (int ex = 0; nx + ex <= max; ++ex)
                for (int ey = 0; ny + ey <= (bf ? max : ny); ++ey)
                    for (auto& m : glue({s.a, s.b}, ex, ey)) ms.push_back(std::move(m));
            for (std::size_t i = 0; i < ms.size(); ++i)
                for (std::size_t j = i; j < ms.size(); ++j)
                    pairs.push_back({square_by_ids(s.c, s.a, s.b, ms[i]), square_by_ids(s.c, s.a, s.b, ms[j])});
        }
        return {run_instances<std::pair<CommSquare, CommSquare>>(
            "uniqueness", pairs, opt, [](const auto& p) { return check_uniqueness_instance(p.first, p.second); })};
    }

    if (axiom == "effective")
        return {run_instances<CommSquare>("effective", glued_squares(cat, max), opt, is_effective_square)};

    if (axiom == "sld") {
        std::vector<SldProblem> probs;
        for (const auto& sq : glued_squares(cat, max)) {
            const Object& m = sq.M();
            const Morphism c = compose(sq.top, sq.left);
            for (int k = 0; m.n + k <= max; ++k)
                for (const auto& n : grow(m, k, 0, max_id(m) + 400, 400)) {
                    const Morphism f = by_ids(m, n);
                    const Morphism fc = compose(f, c);
                    std::vector<Morphism> cands;
                    for (auto& e : embeddings(sq.B(), n))
                        if (same_arrow(compose(e, sq.bottom), fc)) cands.push_back(std::move(e));
                    // non-decreasing tuples of length lambda
                    std::vector<std::size_t> pick(static_cast<std::size_t>(opt.lambda), 0);
                    if (cands.empty()) continue;
                    while (true) {
                        SldProblem p{sq, f, {}};
                        for (std::size_t i : pick) p.copies.push_back(cands[i]);
                        probs.push_back(std::move(p));
                        int pos = opt.lambda - 1;
                        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == cands.size()) --pos;
                        if (pos < 0) break;
                        const std::size_t v = pick[static_cast<std::size_t>(pos)] + 1;
                        for (int q = pos; q < opt.lambda; ++q) pick[static_cast<std::size_t>(q)] = v;
                    }
                }
        }
        const int bound = opt.bound;
        return {run_instances<SldProblem>("sld", probs, opt, [bound](const SldProblem& p) { return sld_check_bounded(p, bound); })};
    }

    if (axiom == "union-chain") {
        const int len = std::clamp(opt.bound, 1, 4);
        return {run_instances<Chain>("union-chain", chains(cat, max, len), opt, check_chain)};
    }

    throw Error(Errc::ParseError, "unknown axiom '" + axiom + "'");
}

Classification classify_category(const SweepOptions& opt) {
    Classification c;
    for (const char* ax : {"uniqueness", "base-mono", "3-amalg"}) c.battery.push_back(run_check(ax, opt).front());
    const bool uni = c.battery[0].verdict.ok(), bm = c.battery[1].verdict.ok(), am = c.battery[2].verdict.ok();
    if (uni && bm && am)
        c.label = "stable-up-to-bound";
    else if (bm && am)
        c.label = "simple-up-to-bound";
    else if (am)
        c.label = "NSOP₁-like-up-to-bound";
    else
        c.label = "basic-up-to-bound";
    return c;
}

// ---------------------------------------------------------------------------

namespace {

template <typename T>
const T& pick(const std::vector<T>& xs, std::mt19937_64& rng) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

int coin(int lo, int hi, std::mt19937_64& rng) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Horn random_horn(const CategoryId& cat, int max_size, std::mt19937_64& rng) {
    require_carrier(cat);
    const auto base = enumerate(cat, max_size);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Object& m = pick(base, rng);
        const int room = max_size - m.n;
        std::vector<Object> ext;
        for (int slot = 0; slot < 3; ++slot) {
            const auto g = grow(m, coin(0, room, rng), 0, 100 * (slot + 1), 100 * (slot + 1));
            if (g.empty()) break;
            ext.push_back(pick(g, rng));
        }
        if (ext.size() != 3) continue;
        std::vector<Object> faces;
        for (const auto& [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
            if (ext[static_cast<std::size_t>(i)].n + ext[static_cast<std::size_t>(j)].n - m.n > max_size) break;
            const auto g = glue({ext[static_cast<std::size_t>(i)], ext[static_cast<std::size_t>(j)]});
            if (g.empty()) break;
            faces.push_back(pick(g, rng));
        }
        if (faces.size() != 3) continue;
        const Object &a = ext[0], &b = ext[1], &c = ext[2];
        return Horn{by_ids(m, a), by_ids(m, b), by_ids(m, c), by_ids(a, faces[0]), by_ids(b, faces[0]),
                    by_ids(a, faces[1]), by_ids(c, faces[1]), by_ids(b, faces[2]), by_ids(c, faces[2])};
    }
    throw Error(Errc::BoundTooLarge, "random_horn: no horn found");
}

SldProblem random_sld(const CategoryId& cat, int max_size, int lambda, std::mt19937_64& rng) {
    require_carrier(cat);
    const auto base = enumerate(cat, max_size);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Object& c = pick(base, rng);
        const int room = max_size - c.n;
        const int ka = coin(0, room, rng), kb = coin(0, room - ka, rng);
        const auto ga = grow(c, ka, 0, 100, 100), gb = grow(c, kb, 0, 200, 200);
        if (ga.empty() || gb.empty()) continue;
        const Object &a = pick(ga, rng), &b = pick(gb, rng);
        const auto gm = glue({a, b});
        if (gm.empty()) continue;
        const Object& m = pick(gm, rng);
        const auto gn = grow(m, coin(0, std::max(0, max_size - m.n) + 1, rng), 0, 400, 400);
        if (gn.empty()) continue;
        const Object& n = pick(gn, rng);
        const CommSquare sq = square_by_ids(c, a, b, m);
        const Morphism f = by_ids(m, n);
        const Morphism fc = compose(f, compose(sq.top, sq.left));
        std::vector<Morphism> cands;
        for (auto& e : embeddings(b, n))
            if (same_arrow(compose(e, sq.bottom), fc)) cands.push_back(std::move(e));
        SldProblem p{sq, f, {}};
        for (int i = 0; i < lambda; ++i) p.copies.push_back(pick(cands, rng));
        return p;
    }
    throw Error(Errc::BoundTooLarge, "random_sld: no problem found");
}

}  // namespace indcat
