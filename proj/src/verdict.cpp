#include <indcat/verdict.hpp>

namespace indcat {

const Object& Diagram::obj(const std::string& name) const {
    auto it = objects.find(name);
    if (it == objects.end()) throw Error(Errc::MalformedProblem, "diagram has no object '" + name + "'");
    return it->second;
}

const Morphism& Diagram::arrow(const std::string& from, const std::string& to) const {
    auto it = arrows.find(from + ">" + to);
    if (it == arrows.end()) throw Error(Errc::MalformedProblem, "diagram has no arrow " + from + ">" + to);
    return it->second;
}

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

Status parse_status(std::string_view name) {
    for (Status s : {Status::Holds, Status::Fails, Status::Unknown})
        if (status_name(s) == name) return s;
    throw Error(Errc::ParseError, "unknown verdict status '" + std::string(name) + "'");
}

Verdict merge(const Verdict& a, const Verdict& b) {
    auto rank = [](Status s) { return s == Status::Fails ? 2 : s == Status::Unknown ? 1 : 0; };
    if (rank(a.status) != rank(b.status)) return rank(a.status) > rank(b.status) ? a : b;
    if (a.status == Status::Holds) {
        Verdict r = a.bound >= b.bound ? a : b;
        r.vacuous = a.vacuous && b.vacuous;
        return r;
    }
    return a;
}

}  // namespace indcat
