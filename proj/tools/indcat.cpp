#include <indcat/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace indcat;

namespace {

struct CatFlags {
    std::string name;
    std::vector<int> labels;
    bool metric = false;
    int prime = 2;
    int maxdim = 3;
    bool symmetric = false;
};

void add_cat_flags(CLI::App* cmd, CatFlags& f) {
    cmd->add_option("--category", f.name, "set, gra, pos, binfunc, twograph, kdist, bil")->required();
    cmd->add_option("--labels", f.labels, "KDIST label set K (default 0,1)")->delimiter(',');
    cmd->add_flag("--metric", f.metric, "KDIST: require the triangle inequality");
    cmd->add_option("--prime", f.prime, "BIL: field size (2, 3 or 5)");
    cmd->add_option("--maxdim", f.maxdim, "BIL: largest dimension (<= 4)");
    cmd->add_flag("--symmetric", f.symmetric, "BIL: symmetric forms only");
}

CategoryId category_of(const CatFlags& f) {
    const Cat tag = parse_cat(f.name);
    if (tag == Cat::KDist) return make_kdist(f.labels.empty() ? std::vector<int>{0, 1} : f.labels, f.metric);
    if (tag == Cat::Bil) return make_bil(f.prime, f.maxdim, f.symmetric);
    return make_category(tag);
}

int default_jobs() {
    if (const char* env = std::getenv("INDCAT_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"indcat: independence relations in finite categories"};
    app.require_subcommand(1);
    std::string format = "table";
    int jobs = 0;
    bool no_timing = false;
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json, tsv or table")->check(CLI::IsMember({"json", "tsv", "table"}));
        cmd->add_option("--jobs", jobs, "worker threads (default: INDCAT_JOBS or 1)");
        cmd->add_flag("--no-timing", no_timing, "omit timing from the report");
    };

    SweepOptions opt;
    CatFlags cf;
    std::string axiom;
    auto* check = app.add_subcommand("check", "sweep one axiom over all instances up to a size");
    add_cat_flags(check, cf);
    check->add_option("--axiom", axiom)->required()->check(CLI::IsMember(axiom_names()));
    check->add_option("--max-size", opt.max_size, "largest carrier");
    check->add_option("--sample", opt.sample, "check a seeded sample of at most this many instances (0: all)");
    check->add_option("--seed", opt.seed);
    check->add_option("--bound", opt.bound, "search bound (sld extensions, union-chain length)");
    check->add_option("--lambda", opt.lambda, "number of copies for sld");
    common(check);

    bool all = false;
    std::vector<std::string> names;
    auto* fixture = app.add_subcommand("fixture", "run registered fixtures");
    fixture->add_flag("--all", all);
    fixture->add_option("name", names);
    common(fixture);

    CatFlags ccf;
    SweepOptions copt;
    auto* classify = app.add_subcommand("classify", "place a category in the stable/simple/NSOP1-like hierarchy, up to a bound");
    add_cat_flags(classify, ccf);
    classify->add_option("--max-size", copt.max_size);
    common(classify);

    CatFlags ecf;
    int emax = 3;
    bool objects = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "count objects up to isomorphism");
    add_cat_flags(enumerate_cmd, ecf);
    enumerate_cmd->add_option("--max-size", emax);
    enumerate_cmd->add_flag("--objects", objects, "include the canonical objects");
    common(enumerate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (jobs <= 0) jobs = default_jobs();

    try {
        const auto t0 = std::chrono::steady_clock::now();
        json report;
        if (*check) {
            opt.cat = category_of(cf);
            opt.jobs = jobs;
            report = check_report(axiom, opt);
        } else if (*fixture) {
            if (all == !names.empty()) throw Error(Errc::ParseError, "give either --all or fixture names");
            report = fixture_report(all ? fixture_names() : names);
        } else if (*classify) {
            copt.cat = category_of(ccf);
            copt.jobs = jobs;
            report = classify_report(copt);
        } else {
            report = enumerate_report(category_of(ecf), emax, objects);
        }
        if (!no_timing)
            report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
        std::cout << render(report, format);
        return report_exit_code(report);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
