#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "universal.hpp"

#include <indcat/corpus.hpp>
#include <indcat/encoding.hpp>
#include <indcat/engine.hpp>
#include <indcat/group.hpp>
#include <indcat/report.hpp>
#include <indcat/structures.hpp>
#include <indcat/sweep.hpp>

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

namespace oracle {
inline bool operator<(const Hom& a, const Hom& b) { return std::tie(a.mx, a.my) < std::tie(b.mx, b.my); }
}  // namespace oracle

using namespace indcat;

namespace {

std::map<int, std::size_t> counts_by_size(const std::vector<Object>& objs) {
    std::map<int, std::size_t> c;
    for (const auto& o : objs) ++c[o.n];
    return c;
}

std::set<oracle::Hom> as_set(const std::vector<Morphism>& ms) {
    std::set<oracle::Hom> s;
    for (const auto& m : ms) s.insert({m.map, m.ymap});
    return s;
}

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no indcat::Error thrown");
    return Errc::ParseError;
}

bool oracle_embedding(const Object& s, const Object& d, const oracle::Hom& h) {
    auto injective = [](const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()).size() == v.size(); };
    if (!injective(h.mx) || !injective(h.my)) return false;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            if (s.cat.tag == Cat::TwoGraph) {
                for (int k = 0; k < s.n; ++k)
                    if (oracle::tri(s, i, j, k) != oracle::tri(d, h.mx[i], h.mx[j], h.mx[k])) return false;
            } else if (s.cat.tag == Cat::Gra || s.cat.tag == Cat::Pos) {
                if (oracle::rel(s, i, j) != oracle::rel(d, h.mx[i], h.mx[j])) return false;
            }
        }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST_CASE("isomorphism classes match the brute-force oracle") {
    for (Cat c : {Cat::Set, Cat::Gra, Cat::Pos, Cat::TwoGraph}) {
        const auto cat = make_category(c);
        const int top = c == Cat::TwoGraph ? 4 : (c == Cat::Set ? 6 : 5);
        const auto lib = counts_by_size(enumerate(cat, std::min(top, size_cap(cat))));
        for (int n = 0; n <= std::min(top, size_cap(cat)); ++n) {
            CAPTURE(cat_name(c));
            CAPTURE(n);
            CHECK(lib.at(n) == oracle::classes(cat, n).size());
        }
    }
    const auto kd = make_category(Cat::KDist);
    const auto lib = counts_by_size(enumerate(kd, 3));
    for (int n = 0; n <= 3; ++n) CHECK(lib.at(n) == oracle::classes(kd, n).size());
}

TEST_CASE("known counts of graphs, posets and two-graphs") {
    const std::vector<std::size_t> graphs{1, 1, 2, 4, 11, 34, 156}, posets{1, 1, 2, 5, 16, 63, 318}, two{1, 1, 1, 2, 3};
    const auto g = counts_by_size(enumerate(make_category(Cat::Gra), 6));
    const auto p = counts_by_size(enumerate(make_category(Cat::Pos), 6));
    const auto t = counts_by_size(enumerate(make_category(Cat::TwoGraph), 4));
    for (int n = 0; n <= 6; ++n) {
        CHECK(g.at(n) == graphs[n]);
        CHECK(p.at(n) == posets[n]);
    }
    for (int n = 0; n <= 4; ++n) CHECK(t.at(n) == two[n]);
}

TEST_CASE("binary function classes per (|X|, |Y|)") {
    const auto cat = make_category(Cat::BinFunc);
    std::map<std::pair<int, int>, std::size_t> lib;
    for (const auto& o : enumerate(cat, 2)) ++lib[{o.n, o.ny}];
    for (int nx = 0; nx <= 2; ++nx)
        for (int ny = nx == 0 ? 0 : 1; ny <= 2; ++ny) CHECK(lib[{nx, ny}] == oracle::classes(cat, nx, ny).size());
    CHECK(labeled_structures(cat, 2, 3).size() == 81);
}

TEST_CASE("morphisms and embeddings agree with the oracle") {
    for (Cat c : {Cat::Set, Cat::Gra, Cat::Pos, Cat::BinFunc, Cat::KDist, Cat::TwoGraph}) {
        const auto cat = make_category(c);
        const auto objs = enumerate(cat, c == Cat::BinFunc ? 2 : 3);
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < objs.size(); i += 3)
            for (std::size_t j = 0; j < objs.size(); j += 2) {
                const Object& s = objs[i];
                const Object& d = objs[j];
                const auto ref = oracle::homs(s, d);
                std::set<oracle::Hom> ref_set(ref.begin(), ref.end()), ref_emb;
                for (const auto& h : ref)
                    if (oracle_embedding(s, d, h)) ref_emb.insert(h);
                CAPTURE(cat_name(c));
                CHECK(as_set(all_morphisms(s, d)) == ref_set);
                CHECK(as_set(embeddings(s, d)) == ref_emb);
                ++pairs;
            }
        CHECK(pairs > 0);
    }
}

TEST_CASE("factorization is a surjection followed by an embedding") {
    for (Cat c : {Cat::Set, Cat::Gra, Cat::Pos, Cat::BinFunc, Cat::KDist}) {
        const auto objs = enumerate(make_category(c), 2);
        for (const auto& s : objs)
            for (const auto& d : objs)
                for (const auto& m : all_morphisms(s, d)) {
                    const auto [e, mm] = factorize(m);
                    CHECK(same_arrow(compose(mm, e), m));
                    CHECK(classify(e).is_surjection);
                    CHECK(oracle_embedding(mm.src, mm.dst, {mm.map, mm.ymap}));
                }
    }
}

TEST_CASE("canonical keys are relabeling invariant") {
    std::mt19937_64 rng(4);
    for (Cat c : {Cat::Gra, Cat::Pos, Cat::TwoGraph, Cat::KDist, Cat::BinFunc}) {
        for (const auto& o : enumerate(make_category(c), c == Cat::BinFunc ? 2 : 3)) {
            std::vector<int> px(static_cast<std::size_t>(o.n)), py(static_cast<std::size_t>(o.ny));
            std::iota(px.begin(), px.end(), 0);
            std::iota(py.begin(), py.end(), 0);
            std::shuffle(px.begin(), px.end(), rng);
            std::shuffle(py.begin(), py.end(), rng);
            CHECK(canonical_key(relabel(o, px, py)) == canonical_key(o));
        }
    }
}

TEST_CASE("object and morphism records round-trip") {
    for (Cat c : {Cat::Set, Cat::Gra, Cat::Pos, Cat::BinFunc, Cat::KDist, Cat::TwoGraph}) {
        const auto objs = enumerate(make_category(c), 2);
        for (const auto& o : objs) CHECK(object_from_json(to_json(o)) == o);
        for (const auto& m : all_morphisms(objs.back(), objs.back())) CHECK(morphism_from_json(to_json(m)) == m);
    }
    const Object b = make_bil(make_bil(3, 2, false), 2, {1, 0, 2, 1});
    CHECK(object_from_json(to_json(b)) == b);
}

TEST_CASE("invalid data is rejected") {
    CHECK(code_of([] { validate(make_poset(2, {{0, 1}, {1, 0}})); }) == Errc::InvariantViolation);
    CHECK(code_of([] { (void)make_kdist(std::vector<int>{}, false); }) == Errc::InvariantViolation);
    CHECK(code_of([] { (void)make_bil(4, 2, false); }) == Errc::InvariantViolation);
    const Object e = make_graph(2, {{0, 1}});
    const Object p = make_graph(1, {});
    CHECK_FALSE(is_morphism(Morphism{e, p, {0, 0}, {}}));
    CHECK(code_of([&] { (void)classify(Morphism{e, p, {0, 0}, {}}); }) == Errc::NotAMorphism);
    CHECK(code_of([] { (void)load_fixture("no-such"); }) == Errc::UnknownFixture);
    SweepOptions o;
    o.cat = make_category(Cat::Gra);
    o.max_size = 7;
    CHECK(code_of([&] { (void)run_check("3-amalg", o); }) == Errc::BoundTooLarge);
    o.cat = make_bil(2, 2, true);
    o.max_size = 1;
    CHECK(code_of([&] { (void)run_check("3-amalg", o); }) == Errc::UnsupportedCategory);
}

TEST_CASE("pushouts in the carrier categories") {
    // GRA: two edges over a shared vertex, no cross edge between the new vertices.
    Object c = make_graph(1, {});
    Object a = make_graph(2, {{0, 1}});
    a.carrier = {0, 1};
    Object b = make_graph(2, {{0, 1}});
    b.carrier = {0, 2};
    auto sq = pushout(Span{c, by_ids(c, a), by_ids(c, b)});
    REQUIRE(sq);
    CHECK(sq->M().n == 3);
    CHECK(is_pullback_square(*sq).ok());
    // POS: a < c in A and c < b in B close to a < b.
    Object pc = make_poset(1, {});
    pc.carrier = {2};
    Object pa = make_poset(2, {{0, 1}});
    pa.carrier = {0, 2};
    Object pb = make_poset(2, {{0, 1}});
    pb.carrier = {2, 3};
    auto ps = pushout(Span{pc, by_ids(pc, pa), by_ids(pc, pb)});
    REQUIRE(ps);
    const Object& m = ps->M();
    const int ia = ps->top.map[0], ib = ps->right.map[1];
    CHECK(m.at(ia, ib) == 1);
}

TEST_CASE("KDIST multipushouts count |K|^(2mn)") {
    const CategoryId cat = make_category(Cat::KDist);
    Object c = make_kdist(cat, 0, {});
    Object a = make_kdist(cat, 1, {0});
    a.carrier = {1};
    Object b = make_kdist(cat, 1, {1});
    b.carrier = {2};
    const auto set = multipushout(Span{c, by_ids(c, a), by_ids(c, b)});
    CHECK(set.instances.size() == 4);
    for (const auto& sp : spans(cat, 3)) {
        const int m = sp.a.n - sp.c.n, n = sp.b.n - sp.c.n;
        CHECK(multipushout(Span{sp.c, by_ids(sp.c, sp.a), by_ids(sp.c, sp.b)}).instances.size() == (1u << (2 * m * n)));
    }
}

TEST_CASE("square checks on small cases") {
    // GRA single edge over two points: a pullback whose pushout comparison is not an embedding.
    Object c = make_graph(0, {});
    Object a = make_graph(1, {});
    a.carrier = {0};
    Object b = make_graph(1, {});
    b.carrier = {1};
    Object m = make_graph(2, {{0, 1}});
    const CommSquare sq{by_ids(c, a), by_ids(c, b), by_ids(a, m), by_ids(b, m)};
    CHECK(is_pullback_square(sq).ok());
    const Verdict v = is_effective_square(sq);
    CHECK(v.status == Status::Fails);
    REQUIRE(v.witness);
    CHECK(recheck("effective", diagram_from_json(to_json(*v.witness))).status == Status::Fails);
    // Without the edge the square is its own pushout.
    Object m0 = make_graph(2, {});
    CHECK(is_effective_square(CommSquare{by_ids(c, a), by_ids(c, b), by_ids(a, m0), by_ids(b, m0)}).ok());
}

TEST_CASE("verdict merge order") {
    Diagram w;
    const Verdict h = Verdict::holds(2), u = Verdict::unknown(3), f = Verdict::fails(w);
    CHECK(merge(h, u).status == Status::Unknown);
    CHECK(merge(u, f).status == Status::Fails);
    CHECK(merge(f, h).status == Status::Fails);
    CHECK(merge(h, Verdict::holds(4)).bound == 4);
}

TEST_CASE("GF(p) linear algebra") {
    std::mt19937_64 rng(9);
    for (int p : {2, 3, 5})
        for (int t = 0; t < 50; ++t) {
            gf::Mat m(3, 4, p);
            for (auto& x : m.a) x = static_cast<int>(rng() % static_cast<unsigned>(p));
            const gf::Mat k = gf::nullspace(m);
            CHECK(gf::rank(m) + k.cols == 4);
            for (int v : gf::mul(m, k).a) CHECK(v == 0);
            std::vector<int> x(4);
            for (auto& v : x) v = static_cast<int>(rng() % static_cast<unsigned>(p));
            gf::Mat xv(4, 1, p);
            xv.a = x;
            const auto sol = gf::solve(m, gf::mul(m, xv).a);
            REQUIRE(sol);
            gf::Mat s(4, 1, p);
            s.a = sol->particular;
            CHECK(gf::mul(m, s) == gf::mul(m, xv));
        }
}

TEST_CASE("group words, permutations and derivations") {
    const std::vector<std::string> gens{"a", "b"};
    CHECK(grp::reduce(grp::parse_word(gens, "a b b^-1 a^-1")).empty());
    CHECK(grp::format_word(gens, grp::parse_word(gens, "a^2 b")) == "a a b");
    const auto p = grp::parse_perm("(12)(34)", 4);
    CHECK(grp::perm_then(p, p) == grp::perm_identity(4));
    Presentation pres{gens, {grp::parse_word(gens, "a b a^-1 b^-1")}};
    // Inserting a rotation of the relator is one legal step.
    CHECK_NOTHROW(grp::check_derivation(pres, {grp::parse_word(gens, "b a"), grp::parse_word(gens, "b a a^-1 b^-1 a b")}));
    CHECK(code_of([&] { grp::check_derivation(pres, {grp::parse_word(gens, "a"), grp::parse_word(gens, "b")}); }) ==
          Errc::BadDerivationStep);
    grp::Hom h{3, {grp::parse_perm("(12)", 3), grp::parse_perm("(23)", 3)}};
    CHECK(code_of([&] { grp::check_hom(pres, h); }) == Errc::RelatorNotKilled);
    CHECK(grp::generated_subgroup(h.images, 3).size() == 6);
}

TEST_CASE("universal property at small sizes") {
    for (Cat c : {Cat::Set, Cat::Gra, Cat::Pos, Cat::BinFunc}) {
        const auto cat = make_category(c);
        const auto po = oracle::pushout_property(cat, 2, 3);
        const auto pb = oracle::pullback_property(cat, 2, 3);
        CAPTURE(cat_name(c));
        CHECK(po.discrepancies == 0);
        CHECK(pb.discrepancies == 0);
        CHECK(po.cones > 0);
    }
}

TEST_CASE("bounded classification labels") {
    SweepOptions o;
    o.cat = make_category(Cat::Set);
    o.max_size = 3;
    o.jobs = 4;
    CHECK(classify_category(o).label == "stable-up-to-bound");
    o.cat = make_category(Cat::Gra);
    CHECK(classify_category(o).label == "simple-up-to-bound");
    o.cat = make_category(Cat::BinFunc);
    o.max_size = 2;
    CHECK(classify_category(o).label == "NSOP₁-like-up-to-bound");
    CHECK(classify_report(o)["bound"] == 2);
}

TEST_CASE("reports are independent of the worker count") {
    SweepOptions o;
    o.cat = make_category(Cat::Pos);
    o.max_size = 3;
    o.sample = 40;
    o.seed = 12;
    o.jobs = 1;
    json a = check_report("uniqueness", o);
    o.jobs = 3;
    json b = check_report("uniqueness", o);
    a.erase("timing");
    b.erase("timing");
    CHECK(a.dump() == b.dump());
    CHECK(a["schema"] == 1);
    CHECK(report_exit_code(a) == 1);
}

TEST_CASE("fixtures") {
    const auto names = fixture_names();
    CHECK(names.size() == 19);
    for (const auto& n : names) {
        CAPTURE(n);
        const auto r = run_fixture(n);
        CHECK(r.pass);
        CHECK(r.witness_ok);
    }
}
