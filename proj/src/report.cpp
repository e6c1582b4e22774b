#include <indcat/report.hpp>

#include <algorithm>
#include <sstream>

namespace indcat {

namespace {

json category_json(const CategoryId& c) {
    json j;
    j["cat"] = std::string(cat_name(c.tag));
    if (c.tag == Cat::KDist) {
        j["K"] = c.labels;
        if (c.metric) j["metric"] = true;
    }
    if (c.tag == Cat::Bil) {
        j["p"] = c.prime;
        j["maxdim"] = c.maxdim;
        if (c.symmetric) j["symmetric"] = true;
    }
    return j;
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

}  // namespace

json options_json(const SweepOptions& opt) {
    json j;
    j["category"] = category_json(opt.cat);
    j["max_size"] = opt.max_size;
    j["sample"] = opt.sample;
    j["seed"] = opt.seed;
    j["bound"] = opt.bound;
    j["lambda"] = opt.lambda;
    return j;
}

json result_json(const AxiomResult& r) {
    json j;
    j["axiom"] = r.axiom;
    j["status"] = std::string(status_name(r.verdict.status));
    j["bound"] = r.verdict.bound;
    j["instances"] = r.instances;
    j["checked"] = r.checked;
    j["holds"] = r.holds;
    j["fails"] = r.fails;
    j["unknown"] = r.unknown;
    j["vacuous"] = r.vacuous;
    j["note"] = r.verdict.note;
    if (r.verdict.witness) j["witness"] = to_json(*r.verdict.witness);
    return j;
}

json check_report(const std::string& axiom, const SweepOptions& opt) {
    json j;
    j["schema"] = kReportSchema;
    j["command"] = "check";
    j["axiom"] = axiom;
    j["options"] = options_json(opt);
    j["columns"] = {"axiom", "status", "bound", "instances", "checked", "fails", "unknown", "vacuous", "note"};
    json rows = json::array();
    for (const auto& r : run_check(axiom, opt)) rows.push_back(result_json(r));
    j["rows"] = rows;
    bool failed = false;
    for (const auto& r : rows) failed = failed || r["status"] == "Fails";
    j["pass"] = !failed;
    return j;
}

json classify_report(const SweepOptions& opt) {
    const Classification c = classify_category(opt);
    json j;
    j["schema"] = kReportSchema;
    j["command"] = "classify";
    j["options"] = options_json(opt);
    j["label"] = c.label;
    j["bound"] = opt.max_size;
    j["columns"] = {"axiom", "status", "bound", "instances", "checked", "fails", "unknown", "note"};
    json rows = json::array();
    for (const auto& r : c.battery) rows.push_back(result_json(r));
    j["rows"] = rows;
    j["pass"] = true;
    return j;
}

json fixture_report(const std::vector<std::string>& names) {
    json j;
    j["schema"] = kReportSchema;
    j["command"] = "fixture";
    j["columns"] = {"name", "check", "expected", "actual", "pass", "note"};
    json rows = json::array();
    std::size_t passed = 0;
    for (const auto& name : names) {
        const FixtureRun r = run_fixture(name);
        json row;
        row["name"] = name;
        row["check"] = r.fixture.check;
        row["expected"] = std::string(status_name(r.fixture.expected));
        row["actual"] = std::string(status_name(r.actual.status));
        row["pass"] = r.pass;
        row["witness_reverified"] = r.actual.witness ? json(r.witness_ok) : json(nullptr);
        row["provenance"] = r.fixture.provenance;
        row["note"] = r.actual.note;
        if (r.actual.witness) row["witness"] = to_json(*r.actual.witness);
        rows.push_back(row);
        passed += r.pass ? 1 : 0;
    }
    j["rows"] = rows;
    j["passed"] = passed;
    j["total"] = names.size();
    j["pass"] = passed == names.size();
    return j;
}

json enumerate_report(const CategoryId& cat, int max_size, bool with_objects) {
    if (max_size < 0 || max_size > size_cap(cat))
        throw Error(Errc::BoundTooLarge, "max-size exceeds the cap of " + std::to_string(size_cap(cat)));
    const auto objs = enumerate(cat, max_size);
    json j;
    j["schema"] = kReportSchema;
    j["command"] = "enumerate";
    j["category"] = category_json(cat);
    j["max_size"] = max_size;
    j["columns"] = {"size", "count"};
    std::vector<std::size_t> count(static_cast<std::size_t>(max_size + 1), 0);
    json list = json::array();
    for (const auto& o : objs) {
        ++count[static_cast<std::size_t>(o.n)];
        if (with_objects) list.push_back(to_json(o));
    }
    json rows = json::array();
    for (int s = 0; s <= max_size; ++s) rows.push_back({{"size", s}, {"count", count[static_cast<std::size_t>(s)]}});
    j["rows"] = rows;
    j["total"] = objs.size();
    if (with_objects) j["objects"] = list;
    j["pass"] = true;
    return j;
}

std::string render(const json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    std::vector<std::string> cols;
    for (const auto& c : report.at("columns")) cols.push_back(c.get<std::string>());
    std::vector<std::vector<std::string>> table;
    for (const auto& r : report.at("rows")) {
        std::vector<std::string> line;
        for (const auto& c : cols) line.push_back(r.contains(c) ? cell(r[c]) : "");
        table.push_back(line);
    }
    std::ostringstream out;
    if (format == "tsv") {
        for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "\t" : "") << cols[i];
        out << "\n";
        for (const auto& line : table) {
            for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "\t" : "") << line[i];
            out << "\n";
        }
        return out.str();
    }
    if (format != "table") throw Error(Errc::ParseError, "unknown format '" + format + "'");
    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        width[i] = cols[i].size();
        for (const auto& line : table) width[i] = std::max(width[i], line[i].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            out << line[i];
            if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
        }
        out << "\n";
    };
    emit(cols);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    emit(rule);
    for (const auto& line : table) emit(line);
    if (report.contains("label")) out << "\nlabel: " << report["label"].get<std::string>() << " (max-size " << report["bound"].dump() << ")\n";
    if (report.contains("passed")) out << "\n" << report["passed"].dump() << "/" << report["total"].dump() << " pass\n";
    if (report.contains("timing")) out << "elapsed: " << report["timing"]["seconds"].dump() << "s\n";
    return out.str();
}

int report_exit_code(const json& report) { return report.value("pass", false) ? 0 : 1; }

}  // namespace indcat
