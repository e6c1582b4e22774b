#pragma once

#include <indcat/object.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace indcat {

/// Named objects and arrows; arrows are keyed "X>Y". `params` carries
/// check-specific extras (words, permutations, bounds).
struct Diagram {
    std::map<std::string, Object> objects;
    std::map<std::string, Morphism> arrows;
    nlohmann::json params = nlohmann::json::object();

    void put(const std::string& name, Object obj) { objects[name] = std::move(obj); }
    void put(const std::string& from, const std::string& to, Morphism m) { arrows[from + ">" + to] = std::move(m); }
    bool has(const std::string& from, const std::string& to) const { return arrows.count(from + ">" + to) != 0; }

    const Object& obj(const std::string& name) const;
    const Morphism& arrow(const std::string& from, const std::string& to) const;
};

enum class Status { Holds, Fails, Unknown };

std::string_view status_name(Status s);
Status parse_status(std::string_view name);

struct Verdict {
    Status status = Status::Unknown;
    int bound = 0;
    std::optional<Diagram> witness;  // present iff Fails
    std::string note;
    bool vacuous = false;

    static Verdict holds(int bound, std::string note = {}) { return {Status::Holds, bound, std::nullopt, std::move(note), false}; }
    static Verdict fails(Diagram w, std::string note = {}, int bound = 0) { return {Status::Fails, bound, std::move(w), std::move(note), false}; }
    static Verdict unknown(int bound, std::string note = {}) { return {Status::Unknown, bound, std::nullopt, std::move(note), false}; }

    bool ok() const { return status == Status::Holds; }
};

/// Fails dominates, then Unknown, then Holds with the larger bound.
Verdict merge(const Verdict& a, const Verdict& b);

}  // namespace indcat
