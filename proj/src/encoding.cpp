#include <indcat/encoding.hpp>

#include <indcat/group.hpp>

#include <algorithm>
#include <numeric>

namespace indcat {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

/// Positions of the atoms in ascending id order.
std::vector<int> sorted_positions(const std::vector<int>& ids) {
    std::vector<int> pos(ids.size());
    std::iota(pos.begin(), pos.end(), 0);
    std::sort(pos.begin(), pos.end(), [&](int a, int b) { return ids[static_cast<std::size_t>(a)] < ids[static_cast<std::size_t>(b)]; });
    return pos;
}

int index_of(const std::vector<int>& ids, int id) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) parse_fail("atom " + std::to_string(id) + " not in carrier");
    return static_cast<int>(it - ids.begin());
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string(what) + " must be a list");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) parse_fail(std::string(what) + " must hold integers");
        v.push_back(x.get<int>());
    }
    return v;
}

CategoryId category_from_json(const json& j) {
    if (!j.contains("cat") || !j["cat"].is_string()) parse_fail("object needs a \"cat\" string");
    CategoryId cat = make_category(parse_cat(j["cat"].get<std::string>()));
    if (cat.tag == Cat::KDist) {
        if (j.contains("K")) {
            cat.labels = int_list(j["K"], "K");
            std::sort(cat.labels.begin(), cat.labels.end());
        }
        cat.metric = j.value("metric", false);
    }
    if (cat.tag == Cat::Bil) {
        cat.prime = j.value("p", 2);
        cat.maxdim = j.value("maxdim", 4);
        cat.symmetric = j.value("symmetric", false);
    }
    check_category(cat);
    return cat;
}

}  // namespace

json to_json(const Object& o) {
    json j;
    j["cat"] = std::string(cat_name(o.cat.tag));
    if (o.cat.tag == Cat::GrpWitness) {
        j["generators"] = o.pres.generators;
        json rels = json::array();
        for (const auto& r : o.pres.relators) rels.push_back(grp::format_word(o.pres.generators, r));
        j["relators"] = rels;
        return j;
    }
    const auto pos = sorted_positions(o.carrier);
    std::vector<int> ids;
    for (int p : pos) ids.push_back(o.carrier[static_cast<std::size_t>(p)]);
    j["carrier"] = ids;
    const int n = o.n;
    const auto P = [&](int i) { return pos[static_cast<std::size_t>(i)]; };
    json data = json::array();
    switch (o.cat.tag) {
        case Cat::Set: break;
        case Cat::Gra:
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (o.at(P(a), P(b))) data.push_back({ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]});
            break;
        case Cat::Pos:
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (!o.at(P(a), P(b))) continue;
                    bool cover = true;
                    for (int c = 0; c < n && cover; ++c)
                        if (o.at(P(a), P(c)) && o.at(P(c), P(b))) cover = false;
                    if (cover) data.push_back({ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]});
                }
            std::sort(data.begin(), data.end());
            break;
        case Cat::TwoGraph:
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        if (o.at(P(a), P(b), P(c)))
                            data.push_back({ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)], ids[static_cast<std::size_t>(c)]});
            break;
        case Cat::BinFunc: {
            std::vector<int> ysorted = o.ycarrier;
            std::sort(ysorted.begin(), ysorted.end());
            j["ycarrier"] = ysorted;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) data.push_back(o.ycarrier[static_cast<std::size_t>(o.at(P(a), P(b)))]);
            break;
        }
        case Cat::KDist:
            j["K"] = o.cat.labels;
            if (o.cat.metric) j["metric"] = true;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) data.push_back(o.cat.labels[static_cast<std::size_t>(o.at(P(a), P(b)))]);
            break;
        case Cat::Bil:
            j["p"] = o.cat.prime;
            j["maxdim"] = o.cat.maxdim;
            if (o.cat.symmetric) j["symmetric"] = true;
            for (int a = 0; a < n; ++a) {
                json row = json::array();
                for (int b = 0; b < n; ++b) row.push_back(o.at(a, b));
                data.push_back(row);
            }
            break;
        case Cat::GrpWitness: break;
    }
    j["data"] = data;
    return j;
}

Object object_from_json(const json& j) {
    if (!j.is_object()) parse_fail("object record must be a JSON object");
    Object o;
    o.cat = category_from_json(j);
    if (o.cat.tag == Cat::GrpWitness) {
        for (const auto& g : j.at("generators")) o.pres.generators.push_back(g.get<std::string>());
        if (j.contains("relators"))
            for (const auto& r : j["relators"]) o.pres.relators.push_back(grp::parse_word(o.pres.generators, r.get<std::string>()));
        validate(o);
        return o;
    }
    std::vector<int> carrier = j.contains("carrier") ? int_list(j["carrier"], "carrier") : std::vector<int>{};
    std::sort(carrier.begin(), carrier.end());
    o.carrier = carrier;
    o.n = static_cast<int>(carrier.size());
    const int n = o.n;
    const json data = j.value("data", json::array());
    if (!data.is_array()) parse_fail("data must be a list");
    auto idx = [&](const json& x) { return index_of(carrier, x.get<int>()); };
    switch (o.cat.tag) {
        case Cat::Set: break;
        case Cat::Gra:
            o.data.assign(static_cast<std::size_t>(n * n), 0);
            for (const auto& e : data) {
                if (!e.is_array() || e.size() != 2) parse_fail("GRA edges are pairs");
                const int a = idx(e[0]), b = idx(e[1]);
                if (a == b) throw Error(Errc::InvariantViolation, "GRA: loops are not allowed");
                o.at(a, b) = o.at(b, a) = 1;
            }
            break;
        case Cat::Pos:
            o.data.assign(static_cast<std::size_t>(n * n), 0);
            for (const auto& e : data) {
                if (!e.is_array() || e.size() != 2) parse_fail("POS relations are pairs");
                o.at(idx(e[0]), idx(e[1])) = 1;
            }
            for (int k = 0; k < n; ++k)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (o.at(a, k) && o.at(k, b)) o.at(a, b) = 1;
            break;
        case Cat::TwoGraph:
            o.data.assign(static_cast<std::size_t>(n * n * n), 0);
            for (const auto& e : data) {
                if (!e.is_array() || e.size() != 3) parse_fail("TWOGRAPH edges are triples");
                std::array<int, 3> t{idx(e[0]), idx(e[1]), idx(e[2])};
                std::sort(t.begin(), t.end());
                if (t[0] == t[1] || t[1] == t[2]) throw Error(Errc::InvariantViolation, "TWOGRAPH: edges are 3-element sets");
                do {
                    o.at(t[0], t[1], t[2]) = 1;
                } while (std::next_permutation(t.begin(), t.end()));
            }
            break;
        case Cat::BinFunc: {
            std::vector<int> ys = int_list(j.value("ycarrier", json::array()), "ycarrier");
            std::sort(ys.begin(), ys.end());
            o.ycarrier = ys;
            o.ny = static_cast<int>(ys.size());
            if (data.size() != static_cast<std::size_t>(n * n)) parse_fail("BINFUNC table must have n*n entries");
            for (const auto& v : data) o.data.push_back(index_of(ys, v.get<int>()));
            break;
        }
        case Cat::KDist:
            if (data.size() != static_cast<std::size_t>(n * n)) parse_fail("KDIST table must have n*n entries");
            for (const auto& v : data) {
                auto it = std::find(o.cat.labels.begin(), o.cat.labels.end(), v.get<int>());
                if (it == o.cat.labels.end()) throw Error(Errc::InvariantViolation, "KDIST: distance outside the label set");
                o.data.push_back(static_cast<int>(it - o.cat.labels.begin()));
            }
            break;
        case Cat::Bil:
            if (!j.contains("carrier")) {
                o.n = static_cast<int>(data.size());
                o.carrier.resize(static_cast<std::size_t>(o.n));
                std::iota(o.carrier.begin(), o.carrier.end(), 0);
            }
            if (data.size() != static_cast<std::size_t>(o.n)) parse_fail("BIL Gram matrix must be n x n");
            for (const auto& row : data) {
                if (!row.is_array() || row.size() != static_cast<std::size_t>(o.n)) parse_fail("BIL Gram matrix must be n x n");
                for (const auto& v : row) o.data.push_back(gf::mod(v.get<int>(), o.cat.prime));
            }
            break;
        case Cat::GrpWitness: break;
    }
    validate(o);
    return o;
}

json map_to_json(const Morphism& m) {
    json j;
    if (m.src.cat.tag == Cat::Bil) {
        const gf::Mat a = matrix(m);
        json rows = json::array();
        for (int i = 0; i < a.rows; ++i) {
            json row = json::array();
            for (int k = 0; k < a.cols; ++k) row.push_back(a(i, k));
            rows.push_back(row);
        }
        j["map"] = rows;
        return j;
    }
    json map = json::array();
    for (int p : sorted_positions(m.src.carrier))
        map.push_back(m.dst.carrier[static_cast<std::size_t>(m.map[static_cast<std::size_t>(p)])]);
    j["map"] = map;
    if (m.src.cat.tag == Cat::BinFunc) {
        json ymap = json::array();
        for (int p : sorted_positions(m.src.ycarrier))
            ymap.push_back(m.dst.ycarrier[static_cast<std::size_t>(m.ymap[static_cast<std::size_t>(p)])]);
        j["ymap"] = ymap;
    }
    return j;
}

Morphism map_from_json(const json& j, const Object& src, const Object& dst) {
    Morphism m{src, dst, {}, {}};
    if (!j.contains("map")) parse_fail("morphism needs a \"map\"");
    if (src.cat.tag == Cat::Bil) {
        const json& rows = j["map"];
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dst.n)) parse_fail("BIL map must have dst.n rows");
        m.map.assign(static_cast<std::size_t>(src.n * dst.n), 0);
        for (int i = 0; i < dst.n; ++i) {
            const json& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(src.n)) parse_fail("BIL map rows must have src.n entries");
            for (int k = 0; k < src.n; ++k)
                m.map[static_cast<std::size_t>(k * dst.n + i)] = gf::mod(row[static_cast<std::size_t>(k)].get<int>(), src.cat.prime);
        }
        if (!is_morphism(m)) throw Error(Errc::NotAMorphism, "BIL map is not an injective form-preserving map");
        return m;
    }
    const auto targets = int_list(j["map"], "map");
    if (targets.size() != static_cast<std::size_t>(src.n)) parse_fail("map must list one image per source atom");
    std::vector<int> dsorted = dst.carrier;
    std::sort(dsorted.begin(), dsorted.end());
    m.map.assign(static_cast<std::size_t>(src.n), 0);
    const auto spos = sorted_positions(src.carrier);
    const auto dpos = sorted_positions(dst.carrier);
    for (std::size_t k = 0; k < targets.size(); ++k)
        m.map[static_cast<std::size_t>(spos[k])] = dpos[static_cast<std::size_t>(index_of(dsorted, targets[k]))];
    if (src.cat.tag == Cat::BinFunc) {
        const auto yt = int_list(j.value("ymap", json::array()), "ymap");
        if (yt.size() != static_cast<std::size_t>(src.ny)) parse_fail("ymap must list one image per source Y atom");
        std::vector<int> ysorted = dst.ycarrier;
        std::sort(ysorted.begin(), ysorted.end());
        const auto sy = sorted_positions(src.ycarrier);
        const auto dy = sorted_positions(dst.ycarrier);
        m.ymap.assign(static_cast<std::size_t>(src.ny), 0);
        for (std::size_t k = 0; k < yt.size(); ++k)
            m.ymap[static_cast<std::size_t>(sy[k])] = dy[static_cast<std::size_t>(index_of(ysorted, yt[k]))];
    }
    if (!is_morphism(m)) throw Error(Errc::NotAMorphism, "map does not preserve structure");
    return m;
}

json to_json(const Morphism& m) {
    json j = map_to_json(m);
    j["src"] = to_json(m.src);
    j["dst"] = to_json(m.dst);
    return j;
}

Morphism morphism_from_json(const json& j) {
    return map_from_json(j, object_from_json(j.at("src")), object_from_json(j.at("dst")));
}

json to_json(const Diagram& d) {
    json j;
    json objs = json::object();
    for (const auto& [name, o] : d.objects) objs[name] = to_json(o);
    json arrows = json::object();
    for (const auto& [key, m] : d.arrows) arrows[key] = map_to_json(m);
    j["objects"] = objs;
    j["arrows"] = arrows;
    if (!d.params.empty()) j["params"] = d.params;
    return j;
}

Diagram diagram_from_json(const json& j) {
    Diagram d;
    if (!j.is_object() || !j.contains("objects")) parse_fail("diagram needs \"objects\"");
    for (const auto& [name, o] : j["objects"].items()) d.objects[name] = object_from_json(o);
    if (j.contains("arrows"))
        for (const auto& [key, a] : j["arrows"].items()) {
            const auto gt = key.find('>');
            if (gt == std::string::npos) parse_fail("arrow key must be \"X>Y\"");
            const std::string from = key.substr(0, gt);
            std::string to = key.substr(gt + 1);
            // "B>N#0", "B>N#1": parallel arrows into the same object
            if (const auto hash = to.find('#'); hash != std::string::npos) to.resize(hash);
            d.arrows[key] = map_from_json(a, d.obj(from), d.obj(to));
        }
    if (j.contains("params")) d.params = j["params"];
    return d;
}

json to_json(const Verdict& v) {
    json j;
    j["status"] = std::string(status_name(v.status));
    j["bound"] = v.bound;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.vacuous) j["vacuous"] = true;
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

json to_json(const Cocone& c) {
    json j;
    j["apex"] = to_json(c.apex);
    json legs = json::array();
    for (const auto& l : c.legs) legs.push_back(map_to_json(l));
    j["legs"] = legs;
    j["all_embeddings"] = c.all_embeddings;
    j["pullback"] = c.pullback;
    return j;
}

json to_json(const AmalgamSet& s) {
    json j;
    json inst = json::array();
    for (const auto& c : s.instances) inst.push_back(to_json(c));
    j["instances"] = inst;
    j["truncated"] = s.truncated;
    return j;
}

Diagram square_diagram(const CommSquare& sq) {
    Diagram d;
    d.put("C", sq.C());
    d.put("A", sq.A());
    d.put("B", sq.B());
    d.put("M", sq.M());
    d.put("C", "A", sq.left);
    d.put("C", "B", sq.bottom);
    d.put("A", "M", sq.top);
    d.put("B", "M", sq.right);
    return d;
}

CommSquare square_from(const Diagram& d, const std::string& c, const std::string& a, const std::string& b,
                       const std::string& m) {
    return CommSquare{d.arrow(c, a), d.arrow(c, b), d.arrow(a, m), d.arrow(b, m)};
}

Diagram horn_diagram(const Horn& h) {
    Diagram d;
    d.put("M", h.M());
    d.put("A", h.A());
    d.put("B", h.B());
    d.put("C", h.C());
    d.put("N1", h.N1());
    d.put("N2", h.N2());
    d.put("N3", h.N3());
    d.put("M", "A", h.m_a);
    d.put("M", "B", h.m_b);
    d.put("M", "C", h.m_c);
    d.put("A", "N1", h.a_n1);
    d.put("B", "N1", h.b_n1);
    d.put("A", "N2", h.a_n2);
    d.put("C", "N2", h.c_n2);
    d.put("B", "N3", h.b_n3);
    d.put("C", "N3", h.c_n3);
    return d;
}

Horn horn_from(const Diagram& d) {
    return Horn{d.arrow("M", "A"),  d.arrow("M", "B"),  d.arrow("M", "C"),  d.arrow("A", "N1"), d.arrow("B", "N1"),
                d.arrow("A", "N2"), d.arrow("C", "N2"), d.arrow("B", "N3"), d.arrow("C", "N3")};
}

}  // namespace indcat
