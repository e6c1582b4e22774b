#pragma once

#include <indcat/corpus.hpp>
#include <indcat/sweep.hpp>

#include <string>

// Reports: one JSON document per command (schema 1), plus tsv/table renderings
// of its "rows". Timing lives under "timing" and is the only nondeterministic part.
namespace indcat {

inline constexpr int kReportSchema = 1;

json options_json(const SweepOptions& opt);
json result_json(const AxiomResult& r);

json check_report(const std::string& axiom, const SweepOptions& opt);
json classify_report(const SweepOptions& opt);
json fixture_report(const std::vector<std::string>& names);
json enumerate_report(const CategoryId& cat, int max_size, bool with_objects);

/// json, tsv or table.
std::string render(const json& report, const std::string& format);

/// 0 pass, 1 check failed.
int report_exit_code(const json& report);

}  // namespace indcat
