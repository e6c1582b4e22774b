#include <indcat/corpus.hpp>

#include <algorithm>
#include <map>

namespace indcat {

// Generated from fixtures/*.json at build time.
extern const std::vector<std::pair<const char*, const char*>> kFixtureFiles;

namespace {

const std::map<std::string, std::string>& registry() {
    static const std::map<std::string, std::string> reg = [] {
        std::map<std::string, std::string> r;
        for (const auto& [file, text] : kFixtureFiles) r.emplace(json::parse(text).at("name").get<std::string>(), text);
        return r;
    }();
    return reg;
}

Diagram with_check(Diagram w, const std::string& check) {
    w.params["check"] = check;
    return w;
}

Span span_from(const Diagram& d) { return Span{d.obj("C"), d.arrow("C", "A"), d.arrow("C", "B")}; }

Verdict check_pushout(const Diagram& d) {
    const Span s = span_from(d);
    const auto po = pushout(s);
    if (!po) return Verdict::fails(with_check(d, "pushout"), "span has no pushout");
    Cocone c;
    c.apex = po->M();
    c.legs = {po->top, po->right, compose(po->top, po->left)};
    const auto cmp = mediate(c, {s.left.dst, s.right.dst, s.apex}, d.obj("M"),
                             {d.arrow("A", "M"), d.arrow("B", "M"), compose(d.arrow("A", "M"), s.left)});
    if (cmp && is_iso(*cmp)) return Verdict::holds(0, "the given cocone is the computed pushout");
    return Verdict::fails(with_check(d, "pushout"), "the given cocone is not isomorphic to the pushout");
}

Verdict check_pushout_regular(const Diagram& d) {
    const Span s = span_from(d);
    // The legs need not be embeddings, so go through the general colimit.
    const AmalgamSet set = colimits({s.apex, s.left.dst, s.right.dst}, {{0, 1, s.left}, {0, 2, s.right}});
    if (set.instances.empty()) return Verdict::fails(with_check(d, "pushout-regular"), "span has no pushout");
    const Cocone& p = set.instances.front();
    // A leg opposite an embedding must again be an embedding.
    if (is_embedding(s.left) && !is_embedding(p.legs[2]))
        return Verdict::fails(with_check(d, "pushout-regular"), "pushout of C>A along C>B gives a non-embedding B>P");
    if (is_embedding(s.right) && !is_embedding(p.legs[1]))
        return Verdict::fails(with_check(d, "pushout-regular"), "pushout of C>B along C>A gives a non-embedding A>P");
    return Verdict::holds(0, "pushout legs opposite embeddings are embeddings");
}

Verdict check_multipushout_count(const Diagram& d) {
    const Span s = span_from(d);
    const AmalgamSet set = multipushout(s);
    const auto want = d.params.at("count").get<std::size_t>();
    const bool good = std::any_of(set.instances.begin(), set.instances.end(), [](const Cocone& c) { return c.all_embeddings && c.pullback; });
    const std::string got = std::to_string(set.instances.size()) + " instances";
    if (set.instances.size() != want) return Verdict::fails(with_check(d, "multipushout-count"), got + ", expected " + std::to_string(want));
    if (!good) return Verdict::fails(with_check(d, "multipushout-count"), got + ", none an independent square");
    return Verdict::holds(0, got + ", at least one independent square");
}

Verdict check_cocone(const Diagram& d) {
    std::vector<std::string> names;
    std::vector<Object> objs;
    for (const auto& [name, o] : d.objects) {
        names.push_back(name);
        objs.push_back(o);
    }
    auto slot = [&](const std::string& n) { return static_cast<int>(std::find(names.begin(), names.end(), n) - names.begin()); };
    std::vector<Arrow> arrows;
    for (const auto& [key, m] : d.arrows) {
        const auto gt = key.find('>');
        arrows.push_back({slot(key.substr(0, gt)), slot(key.substr(gt + 1)), m});
    }
    const AmalgamSet set = colimits(objs, arrows);
    for (const auto& c : set.instances)
        if (std::all_of(c.legs.begin(), c.legs.end(), [](const Morphism& m) { return is_embedding(m); }))
            return Verdict::holds(0, "a jointly surjective cocone of embeddings exists");
    if (set.truncated) return Verdict::unknown(0, "cocone search truncated");
    return Verdict::fails(with_check(d, "cocone"), "no structure on the glued carrier restricts to every object");
}

Verdict check_sld(const Diagram& d) {
    SldProblem p{square_from(d), d.arrow("M", "N"), {}};
    for (int i = 0; d.arrows.count("B>N#" + std::to_string(i)); ++i) p.copies.push_back(d.arrows.at("B>N#" + std::to_string(i)));
    return sld_check_bounded(p, d.params.value("bound", 3));
}

Verdict check_existence(const Diagram& d) {
    try {
        complete_span(span_from(d));
        return Verdict::holds(0, "span completes to an independent square");
    } catch (const Error& e) {
        if (e.code() != Errc::NoIndependentAmalgam) throw;
        return Verdict::fails(with_check(d, "existence"), e.what());
    }
}

bool group_mode(const Diagram& d) {
    return std::any_of(d.objects.begin(), d.objects.end(), [](const auto& kv) { return kv.second.cat.tag == Cat::GrpWitness; });
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : registry()) out.push_back(name);
    return out;
}

json fixture_source(const std::string& name) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw Error(Errc::UnknownFixture, "no fixture named '" + name + "'");
    return json::parse(it->second);
}

Fixture fixture_from_json(const json& j) {
    Fixture f;
    f.name = j.at("name").get<std::string>();
    f.check = j.at("check").get<std::string>();
    f.expected = parse_status(j.at("expected").get<std::string>());
    f.provenance = j.value("provenance", "");
    f.diagram = diagram_from_json(j.at("diagram"));
    if (j.contains("params"))
        for (const auto& [k, v] : j["params"].items()) f.diagram.params[k] = v;
    return f;
}

Fixture load_fixture(const std::string& name) { return fixture_from_json(fixture_source(name)); }

Verdict recheck(const std::string& check, const Diagram& d) {
    if (check == "pullback" || check == "union-chain") return is_pullback_square(square_from(d));
    if (check == "effective") return is_effective_square(square_from(d));
    if (check == "uniqueness") return check_uniqueness_instance(square_from(d), square_from(d, "C", "A", "B", "Mp"));
    if (check == "base-mono")
        return check_base_monotonicity_instance(
            {d.arrow("C", "A"), d.arrow("C", "B"), d.arrow("B", "D"), d.arrow("A", "M"), d.arrow("D", "M")});
    if (check == "strongly-squared") {
        if (group_mode(d)) return check_strongly_squared_grp(d);
        return check_strongly_squared_instance({d.arrow("M0", "M1"), d.arrow("M0", "M2"), d.arrow("M1", "M3"), d.arrow("M2", "M3"),
                                                d.arrow("M2", "M4"), d.arrow("M3", "M5"), d.arrow("M4", "M5")});
    }
    if (check == "3-amalg") return group_mode(d) ? check_3_amalgamation_grp(d) : check_3_amalgamation(horn_from(d));
    if (check == "sld") return check_sld(d);
    if (check == "existence") return check_existence(d);
    if (check == "pushout") return check_pushout(d);
    if (check == "pushout-regular") return check_pushout_regular(d);
    if (check == "multipushout-count") return check_multipushout_count(d);
    if (check == "cocone") return check_cocone(d);
    throw Error(Errc::MalformedProblem, "unknown check '" + check + "'");
}

FixtureRun run_fixture(const std::string& name) {
    FixtureRun r;
    r.fixture = load_fixture(name);
    r.actual = recheck(r.fixture.check, r.fixture.diagram);
    r.pass = r.actual.status == r.fixture.expected;
    if (r.actual.witness) {
        const Diagram back = diagram_from_json(to_json(*r.actual.witness));
        const std::string check = back.params.value("check", r.fixture.check);
        r.witness_ok = recheck(check, back).status == Status::Fails;
        r.pass = r.pass && r.witness_ok;
    }
    return r;
}

}  // namespace indcat
