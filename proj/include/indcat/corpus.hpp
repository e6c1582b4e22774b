#pragma once

#include <indcat/encoding.hpp>
#include <indcat/engine.hpp>

#include <string>
#include <vector>

namespace indcat {

struct Fixture {
    std::string name;
    std::string check;
    Status expected = Status::Holds;
    std::string provenance;
    Diagram diagram;
};

/// Registered fixture names, sorted.
std::vector<std::string> fixture_names();
/// Throws UnknownFixture.
Fixture load_fixture(const std::string& name);
Fixture fixture_from_json(const json& j);
json fixture_source(const std::string& name);

/// Runs a named check on a serialized diagram. Checks: pullback, effective,
/// uniqueness, base-mono, strongly-squared, 3-amalg, sld, existence, pushout,
/// pushout-regular, multipushout-count, cocone, union-chain.
Verdict recheck(const std::string& check, const Diagram& d);

struct FixtureRun {
    Fixture fixture;
    Verdict actual;
    bool pass = false;
    bool witness_ok = true;  // a Fails witness, re-read from JSON, fails again
};
FixtureRun run_fixture(const std::string& name);

}  // namespace indcat
