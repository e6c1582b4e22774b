// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria. An optional argument names the indcat executable for the
// command-line determinism comparison.

#include "universal.hpp"

#include <indcat/corpus.hpp>
#include <indcat/encoding.hpp>
#include <indcat/engine.hpp>
#include <indcat/report.hpp>
#include <indcat/structures.hpp>
#include <indcat/sweep.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace indcat;

namespace {

constexpr double kFixtureSeconds = 60.0;
constexpr double kBasicSeconds = 300.0;
constexpr int kSeededInstances = 120;  // at least 100 required
constexpr int kOracleSize = 4;
constexpr int kOracleSizeBinFunc = 3;  // X carrier; test objects have |X| + |Y| <= 4

int g_failed = 0;

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

void line(int id, const char* name, bool pass, const std::string& detail) {
    if (!pass) ++g_failed;
    std::printf("criterion %d %-32s %s  %s\n", id, name, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

int jobs() {
    if (const char* e = std::getenv("INDCAT_JOBS")) return std::max(1, std::atoi(e));
    return std::max(1u, std::thread::hardware_concurrency());
}

SweepOptions opts(Cat tag, int max_size) {
    SweepOptions o;
    o.cat = make_category(tag);
    o.max_size = max_size;
    o.jobs = jobs();
    return o;
}

AxiomResult sweep(const std::string& axiom, Cat tag, int max_size) { return run_check(axiom, opts(tag, max_size)).front(); }

std::string status(const Verdict& v) { return std::string(status_name(v.status)); }

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

/// Guards a criterion body: an exception is a failed criterion, not a crash.
void run(int id, const char* name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [pass, detail] = body();
        line(id, name, pass, detail);
    } catch (const std::exception& e) {
        line(id, name, false, std::string("exception: ") + e.what());
    }
}

Object with_ids(Object o, std::vector<int> xs, std::vector<int> ys) {
    o.carrier = std::move(xs);
    o.ycarrier = std::move(ys);
    return o;
}

bool iso_objects(const Object& a, const Object& b) { return a.n == b.n && a.ny == b.ny && canonical_key(a) == canonical_key(b); }

// ---------------------------------------------------------------------------

std::pair<bool, std::string> fixtures() {
    Clock t;
    const auto names = fixture_names();
    int pass = 0, reverified = 0, fails = 0;
    for (const auto& n : names) {
        const auto r = run_fixture(n);
        pass += r.pass;
        if (r.actual.status == Status::Fails) {
            ++fails;
            reverified += r.witness_ok;
        }
    }
    const double s = t.seconds();
    const bool ok = names.size() == 19 && pass == 19 && reverified == fails && s < kFixtureSeconds;
    return {ok, fmt("%d/%zu pass, %d/%d Fails witnesses re-verified, %.1fs (limit %.0fs)", pass, names.size(), reverified,
                    fails, s, kFixtureSeconds)};
}

std::pair<bool, std::string> basic() {
    Clock t;
    bool ok = true;
    std::string detail;
    for (Cat c : {Cat::Gra, Cat::Pos, Cat::Set}) {
        auto o = opts(c, 3);
        int held = 0;
        std::size_t inst = 0;
        for (const auto& r : run_check("basic", o)) {
            held += r.verdict.ok() && r.checked == r.instances;
            inst += r.checked;
        }
        ok = ok && held == 5;
        detail += fmt("%s %d/5 (%zu inst) ", std::string(cat_name(c)).c_str(), held, inst);
    }
    const double s = t.seconds();
    return {ok && s < kBasicSeconds, detail + fmt("%.1fs (limit %.0fs)", s, kBasicSeconds)};
}

std::pair<bool, std::string> cubic() {
    const auto gra = sweep("3-amalg", Cat::Gra, 3);
    const auto pos = sweep("3-amalg", Cat::Pos, 3);
    bool pos_witness = false;
    if (pos.verdict.witness) pos_witness = recheck("3-amalg", *pos.verdict.witness).status == Status::Fails;

    // The cyclic horn is among the swept instances and fails there.
    const Fixture cyc = load_fixture("pos-horn-no-cocone");
    const Horn ch = horn_from(cyc.diagram);
    bool cyc_swept = false;
    for (const auto& h : horns(make_category(Cat::Pos), 3)) {
        const std::array<const Object*, 7> x{&h.M(), &h.A(), &h.B(), &h.C(), &h.N1(), &h.N2(), &h.N3()};
        const std::array<const Object*, 7> y{&ch.M(), &ch.A(), &ch.B(), &ch.C(), &ch.N1(), &ch.N2(), &ch.N3()};
        bool same = true;
        for (int i = 0; i < 7 && same; ++i) same = iso_objects(*x[i], *y[i]);
        if (same && check_3_amalgamation(h).status == Status::Fails) {
            cyc_swept = true;
            break;
        }
    }
    const auto cycf = run_fixture("pos-horn-no-cocone");
    const auto grp = run_fixture("grp-horn-fails");
    const bool ok = gra.verdict.ok() && gra.checked == gra.instances && pos.verdict.status == Status::Fails && pos_witness &&
                    cyc_swept && cycf.pass && cycf.actual.status == Status::Fails && grp.pass &&
                    grp.actual.status == Status::Fails && grp.witness_ok;
    return {ok, fmt("gra %s (%zu horns); pos %s (witness re-verified=%d, cyclic horn swept and Fails=%d, fixture %s); grp horn %s",
                    status(gra.verdict).c_str(), gra.checked, status(pos.verdict).c_str(), pos_witness, cyc_swept,
                    status(cycf.actual).c_str(), status(grp.actual).c_str())};
}

/// Per-instance comparison of the two checkers on the translated instance set.
struct Agreement {
    std::size_t instances = 0, disagreements = 0, ss_fails = 0;
    bool target_fails = false;  // an instance isomorphic objectwise to `target` fails
};
Agreement agree(Cat tag, int max_size, const Diagram* target = nullptr) {
    Agreement a;
    const auto cat = make_category(tag);
    for (const Object& m5 : enumerate(cat, max_size)) {
        const auto subs = subobjects(m5);
        for (const auto& e4 : subs)
            for (const auto& e2 : subs) {
                if (!within(e2.src, e4.src)) continue;
                for (const auto& e1 : subs) {
                    const Object m0 = pullback(e1, e4).C();
                    if (!within(m0, e2.src)) continue;
                    const Object& m1 = e1.src;
                    const Object& m2 = e2.src;
                    const Object& m4 = e4.src;
                    const Object m3 = generated_subobject(m5, {e1, e2}).src;
                    const SixDiagram six{by_ids(m0, m1), by_ids(m0, m2), by_ids(m1, m3), by_ids(m2, m3),
                                         by_ids(m2, m4), by_ids(m3, m5), by_ids(m4, m5)};
                    const BaseMonoProblem bm{by_ids(m0, m1), by_ids(m0, m2), by_ids(m2, m4), by_ids(m1, m5), by_ids(m4, m5)};
                    const Status s1 = check_strongly_squared_instance(six).status;
                    const Status s2 = check_base_monotonicity_instance(bm).status;
                    ++a.instances;
                    a.ss_fails += s1 == Status::Fails;
                    if (target && s1 == Status::Fails) {
                        const std::array<const Object*, 6> x{&m0, &m1, &m2, &m3, &m4, &m5};
                        bool same = true;
                        for (int i = 0; i < 6 && same; ++i)
                            same = iso_objects(*x[i], target->obj("M" + std::to_string(i)));
                        a.target_fails = a.target_fails || same;
                    }
                    a.disagreements += s1 != s2;
                }
            }
    }
    return a;
}

std::pair<bool, std::string> strongly_squared() {
    const auto gra = sweep("strongly-squared", Cat::Gra, 3);
    const auto pos = sweep("strongly-squared", Cat::Pos, 3);
    const auto bf = sweep("strongly-squared", Cat::BinFunc, 2);
    const Fixture ex = load_fixture("binfunc-not-strongly-squared");
    bool shape = false;
    if (bf.verdict.witness) {
        const Diagram& w = *bf.verdict.witness;
        const SixDiagram s{w.arrow("M0", "M1"), w.arrow("M0", "M2"), w.arrow("M1", "M3"), w.arrow("M2", "M3"),
                           w.arrow("M2", "M4"), w.arrow("M3", "M5"), w.arrow("M4", "M5")};
        // Shape: a point-free M0, one-point M1, M2, M4 and two-point M3 = M5, with the
        // new value of M3 living in M4 but not in M2.
        bool sized = true;
        for (const char* n : {"M0", "M1", "M2", "M3", "M4", "M5"})
            sized = sized && w.obj(n).n == ex.diagram.obj(n).n && w.obj(n).ny == ex.diagram.obj(n).ny;
        shape = sized && is_eps_pushout(left_square(s)) && is_pullback_square(outer_rectangle(s)).ok() &&
                is_pullback_square(right_square(s)).status == Status::Fails &&
                recheck("strongly-squared", diagram_from_json(to_json(w))).status == Status::Fails;
    }
    const auto ag = agree(Cat::Gra, 3), ap = agree(Cat::Pos, 3), ab = agree(Cat::BinFunc, 2, &ex.diagram), as = agree(Cat::Set, 3);
    const bool ok = gra.verdict.ok() && pos.verdict.ok() && bf.verdict.status == Status::Fails && shape && ag.disagreements == 0 &&
                    ap.disagreements == 0 && ab.disagreements == 0 && as.disagreements == 0 && ab.ss_fails > 0 && ab.target_fails &&
                    ag.instances == gra.instances && ap.instances == pos.instances && ab.instances == bf.instances;
    return {ok, fmt("gra %s, pos %s, binfunc %s (witness has the f0..f4 shape=%d, fixture data among the swept Fails=%d); base-mono disagreements "
                    "gra %zu/%zu pos %zu/%zu binfunc %zu/%zu set %zu/%zu",
                    status(gra.verdict).c_str(), status(pos.verdict).c_str(), status(bf.verdict).c_str(), shape, ab.target_fails,
                    ag.disagreements, ag.instances, ap.disagreements, ap.instances, ab.disagreements, ab.instances,
                    as.disagreements, as.instances)};
}

/// f0 on {a,b} with Y = X0 x X0 plus two tags; A adds c with tagged values, B adds d valued *,
/// and M sends both cross pairs (c,d), (d,c) to the existing tag.
CommSquare binfunc_effective_witness() {
    // X ids: a=0 b=1 c=2 d=3. Y ids: (a,a)=0 (a,b)=1 (b,a)=2 (b,b)=3 heart=4 club=5 star=6.
    const Object c = with_ids(make_binfunc(2, 6, {0, 1, 2, 3}), {0, 1}, {0, 1, 2, 3, 4, 5});
    const Object a = with_ids(make_binfunc(3, 6, {0, 1, 4, 2, 3, 5, 4, 5, 4}), {0, 1, 2}, {0, 1, 2, 3, 4, 5});
    const Object b = with_ids(make_binfunc(3, 7, {0, 1, 6, 2, 3, 6, 6, 6, 6}), {0, 1, 3}, {0, 1, 2, 3, 4, 5, 6});
    const Object m = with_ids(make_binfunc(4, 7, {0, 1, 4, 6, 2, 3, 5, 6, 4, 5, 4, 4, 6, 6, 4, 6}), {0, 1, 2, 3},
                              {0, 1, 2, 3, 4, 5, 6});
    return CommSquare{by_ids(c, a), by_ids(c, b), by_ids(a, m), by_ids(b, m)};
}

std::pair<bool, std::string> effective() {
    const auto set = sweep("effective", Cat::Set, 3);
    const auto gra = sweep("effective", Cat::Gra, 3);
    bool edge = false;
    if (gra.verdict.witness) {
        const Diagram& w = *gra.verdict.witness;
        const Object& M = w.obj("M");
        edge = M.n == 2 && M.at(0, 1) == 1 && w.obj("A").n == 1 && w.obj("B").n == 1 && w.obj("C").n == 0;
    }
    const CommSquare sq = binfunc_effective_witness();
    const bool pb = is_pullback_square(sq).ok();
    const Verdict bv = is_effective_square(sq);
    const bool bf_ok = pb && bv.status == Status::Fails && bv.witness &&
                       recheck("effective", diagram_from_json(to_json(*bv.witness))).status == Status::Fails;
    const auto bsweep = sweep("effective", Cat::BinFunc, 2);
    const bool ok = set.verdict.ok() && set.checked == set.instances && gra.verdict.status == Status::Fails && edge && bf_ok &&
                    bsweep.verdict.status == Status::Fails;
    return {ok, fmt("set %s (%zu squares); gra %s (single-edge witness=%d); binfunc f0/f1 square %s, pullback=%d "
                    "(\"%s\"); binfunc sweep %s",
                    status(set.verdict).c_str(), set.checked, status(gra.verdict).c_str(), edge, status(bv).c_str(), pb,
                    bv.note.c_str(), status(bsweep.verdict).c_str())};
}

std::pair<bool, std::string> multipushout_count() {
    const CategoryId cat = make_category(Cat::KDist);
    const int k = static_cast<int>(cat.labels.size());
    std::size_t spans_tested = 0, unit_spans = 0, wrong_count = 0, no_good = 0;
    for (const auto& sp : spans(cat, 3)) {
        ++spans_tested;
        const int m = sp.a.n - sp.c.n, n = sp.b.n - sp.c.n;
        std::size_t expect = 1;
        for (int i = 0; i < 2 * m * n; ++i) expect *= static_cast<std::size_t>(k);
        const auto set = multipushout(Span{sp.c, by_ids(sp.c, sp.a), by_ids(sp.c, sp.b)});
        if (m == 1 && n == 1) {
            ++unit_spans;
            wrong_count += set.instances.size() != 4;
        }
        wrong_count += set.instances.size() != expect || set.truncated;
        bool good = false;
        for (const auto& c : set.instances) good = good || (c.all_embeddings && c.pullback);
        no_good += !good;
    }
    const bool ok = spans_tested > 0 && unit_spans > 0 && wrong_count == 0 && no_good == 0;
    return {ok, fmt("K={0,1}: %zu spans at size 3 (%zu with m=n=1): count mismatches %zu, spans lacking an "
                    "embedding pullback instance %zu",
                    spans_tested, unit_spans, wrong_count, no_good)};
}

std::pair<bool, std::string> construction_oracles() {
    const CategoryId set = make_category(Cat::Set);
    int horns_ok = 0, sld_ok = 0;
    std::string first;
    for (int seed = 0; seed < kSeededInstances; ++seed) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        try {
            const Horn h = random_horn(set, 3, rng);
            const Cube cube = three_amalg_from_uniqueness(h);
            if (cube_diagonal_ok(cube) && check_3_amalgamation(h).ok())
                ++horns_ok;
            else if (first.empty())
                first = fmt("horn seed %d", seed);
        } catch (const Error& e) {
            if (first.empty()) first = fmt("horn seed %d: %s", seed, e.what());
        }
        try {
            const SldProblem p = random_sld(set, 3, 2, rng);
            const SldWitness w = construct_sld_witness(p);
            if (sld_validate(p, w).ok() && sld_check_bounded(p, 2).ok())
                ++sld_ok;
            else if (first.empty())
                first = fmt("sld seed %d", seed);
        } catch (const Error& e) {
            if (first.empty()) first = fmt("sld seed %d: %s", seed, e.what());
        }
    }
    const int bad = 2 * kSeededInstances - horns_ok - sld_ok;
    return {bad == 0, fmt("SET seeds 0..%d: horns %d/%d, sld (lambda=2) %d/%d, discrepancies %d%s%s", kSeededInstances - 1,
                          horns_ok, kSeededInstances, sld_ok, kSeededInstances, bad, first.empty() ? "" : "; first: ",
                          first.c_str())};
}

std::pair<bool, std::string> universal() {
    std::size_t cases = 0, cones = 0, bad = 0;
    std::string detail;
    for (Cat c : {Cat::Set, Cat::Gra, Cat::Pos, Cat::BinFunc}) {
        const auto cat = make_category(c);
        const int size = c == Cat::BinFunc ? kOracleSizeBinFunc : kOracleSize;
        const auto po = oracle::pushout_property(cat, size, 4);
        const auto pb = oracle::pullback_property(cat, size, 4);
        cases += po.cases + pb.cases;
        cones += po.cones + pb.cones;
        bad += po.discrepancies + pb.discrepancies;
        detail += fmt("%s %zu/%zu ", std::string(cat_name(c)).c_str(), po.discrepancies, pb.discrepancies);
    }
    return {bad == 0 && cones > 0,
            fmt("%zu (co)limits, %zu (co)cones, %zu discrepancies [pushout/pullback: %s]", cases, cones, bad, detail.c_str())};
}

std::string strip_timing(json j) {
    j.erase("timing");
    return j.dump();
}

std::string capture(const std::string& cmd) {
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> p(popen(cmd.c_str(), "r"), pclose);
    if (!p) return "<popen failed>";
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p.get())) > 0) out.append(buf.data(), n);
    return out;
}

std::pair<bool, std::string> determinism(const char* cli) {
    struct Case {
        std::string axiom;
        Cat cat;
        int size;
        std::size_t sample;
        std::uint64_t seed;
    };
    const std::vector<Case> cases{{"3-amalg", Cat::Gra, 3, 0, 1},        {"uniqueness", Cat::Pos, 3, 200, 7},
                                  {"strongly-squared", Cat::BinFunc, 2, 0, 0}, {"sld", Cat::Gra, 2, 50, 3},
                                  {"basic", Cat::TwoGraph, 3, 300, 11}};
    int same = 0, total = 0;
    for (const auto& c : cases) {
        SweepOptions o = opts(c.cat, c.size);
        o.sample = c.sample;
        o.seed = c.seed;
        o.jobs = 1;
        const std::string r1 = strip_timing(check_report(c.axiom, o));
        const std::string r2 = strip_timing(check_report(c.axiom, o));
        o.jobs = 4;
        const std::string r4 = strip_timing(check_report(c.axiom, o));
        total += 2;
        same += (r1 == r2) + (r1 == r4);
    }
    const std::string f1 = strip_timing(fixture_report(fixture_names()));
    const std::string f2 = strip_timing(fixture_report(fixture_names()));
    ++total;
    same += f1 == f2;

    std::string cli_detail = "command line not exercised";
    if (cli) {
        const std::string base = std::string(cli) + " check --category gra --axiom 3-amalg --max-size 3 --seed 1 --no-timing";
        const std::string sampled =
            std::string(cli) + " check --category pos --axiom uniqueness --max-size 3 --sample 100 --seed 5 --no-timing";
        const std::vector<std::string> outs{capture(base + " --jobs 1"), capture(base + " --jobs 1"),
                                            capture(base + " --jobs 4"), capture(sampled + " --jobs 1"),
                                            capture(sampled + " --jobs 4")};
        const bool cli_ok = !outs[0].empty() && outs[0] == outs[1] && outs[0] == outs[2] && !outs[3].empty() && outs[3] == outs[4];
        total += 1;
        same += cli_ok;
        cli_detail = fmt("command line %s", cli_ok ? "identical" : "differs");
    }
    return {same == total, fmt("%d/%d report comparisons byte-identical (two runs, --jobs 1 vs 4); %s", same, total,
                               cli_detail.c_str())};
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    run(1, "fixture-suite", fixtures);
    run(2, "basic-axioms", basic);
    run(3, "cubic-separation", cubic);
    run(4, "strongly-squared-separation", strongly_squared);
    run(5, "effective-union-separation", effective);
    run(6, "multipushout-counting", multipushout_count);
    run(7, "construction-oracles", construction_oracles);
    run(8, "universal-property-oracle", universal);
    run(9, "determinism", [cli] { return determinism(cli); });
    std::printf("%d/9 criteria passed\n", 9 - g_failed);
    return g_failed;
}
