#pragma once

#include <indcat/engine.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Quantified checks: instance generators plus a deterministic parallel runner.
namespace indcat {

struct SweepOptions {
    CategoryId cat;
    int max_size = 3;
    std::size_t sample = 0;  // 0: exhaustive
    std::uint64_t seed = 0;
    int bound = 3;
    int lambda = 2;
    int jobs = 1;
};

struct AxiomResult {
    std::string axiom;
    Verdict verdict;
    std::size_t instances = 0;  // generated
    std::size_t checked = 0;    // after sampling
    std::size_t holds = 0, fails = 0, unknown = 0, vacuous = 0;
};

/// The axiom names accepted by run_check.
const std::vector<std::string>& axiom_names();

/// `basic` expands to invariance, monotonicity, transitivity, symmetry, existence.
std::vector<AxiomResult> run_check(const std::string& axiom, const SweepOptions& opt);

struct Classification {
    std::string label;
    std::vector<AxiomResult> battery;  // uniqueness, base-mono, 3-amalg
};
Classification classify_category(const SweepOptions& opt);

// --- building blocks -------------------------------------------------------------

/// Maps every atom of `src` to the atom of `dst` with the same id.
Morphism by_ids(const Object& src, const Object& dst);
bool within(const Object& small, const Object& big);

/// `base` plus k fresh X atoms (ids from `first_id`) and ky fresh Y atoms, in every way.
std::vector<Object> grow(const Object& base, int k, int ky, int first_id, int first_yid);

/// Every structure on the union of the pieces' carriers plus `extra` fresh atoms
/// (and `extra_y` fresh Y atoms) that restricts to each piece. Pieces must agree
/// where their carriers overlap.
std::vector<Object> glue(const std::vector<Object>& pieces, int extra = 0, int extra_y = 0);

/// Substructure on the given atom ids (BINFUNC keeps the Y atoms the table reaches).
Object sub_by_ids(const Object& obj, const std::vector<int>& ids);

/// Spans C <- A, B by fresh extensions, all objects of size <= max_size.
struct SpanCase {
    Object c, a, b;
};
std::vector<SpanCase> spans(const CategoryId& cat, int max_size);

/// Pullback squares by gluing A and B over C (plus extra atoms), sizes <= max_size.
std::vector<CommSquare> glued_squares(const CategoryId& cat, int max_size);

/// Horns whose faces are glued over M, all objects of size <= max_size.
std::vector<Horn> horns(const CategoryId& cat, int max_size);

// --- seeded random diagrams --------------------------------------------------------

Horn random_horn(const CategoryId& cat, int max_size, std::mt19937_64& rng);
SldProblem random_sld(const CategoryId& cat, int max_size, int lambda, std::mt19937_64& rng);

}  // namespace indcat
