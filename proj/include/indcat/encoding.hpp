#pragma once

#include <indcat/kernel.hpp>
#include <indcat/verdict.hpp>

#include <json.hpp>

#include <string>

// JSON records for objects, morphisms, diagrams and verdicts. Atom ids are
// external (carrier values); all lists are emitted sorted.
namespace indcat {

using json = nlohmann::json;

json to_json(const Object& obj);
Object object_from_json(const json& j);

/// Standalone morphism record {"src", "dst", "map"[, "ymap"]}.
json to_json(const Morphism& m);
Morphism morphism_from_json(const json& j);

/// Map part only, for arrows inside a diagram.
json map_to_json(const Morphism& m);
Morphism map_from_json(const json& j, const Object& src, const Object& dst);

json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

json to_json(const Verdict& v);

json to_json(const Cocone& c);
json to_json(const AmalgamSet& s);

/// Square (C,A,B,M) and horn (M,A,B,C,N1,N2,N3) diagrams under the standard names.
Diagram square_diagram(const CommSquare& sq);
CommSquare square_from(const Diagram& d, const std::string& c = "C", const std::string& a = "A",
                       const std::string& b = "B", const std::string& m = "M");
Diagram horn_diagram(const Horn& h);
Horn horn_from(const Diagram& d);

}  // namespace indcat
