#pragma once

#include <indcat/kernel.hpp>
#include <indcat/verdict.hpp>

#include <optional>
#include <string>
#include <vector>

namespace indcat {

// --- square predicates -------------------------------------------------------

Verdict is_pullback_square(const CommSquare& sq);
bool pullback_test(const CommSquare& sq);

/// Needs a pushout-complete category.
Verdict is_effective_square(const CommSquare& sq);

/// The comparison from the pushout (images of A and B, for multi categories) onto M is surjective.
bool is_eps_pushout(const CommSquare& sq);

/// An independent square over the span; throws NoIndependentAmalgam.
CommSquare complete_span(const Span& s);

// --- Galois types --------------------------------------------------------------

/// gtp(a, b, c; M) together with its base span c_a: C -> A, c_b: C -> B.
struct GaloisTypeInstance {
    Morphism a, b, c;
    Morphism c_a, c_b;
};

GaloisTypeInstance type_of(const CommSquare& sq);

/// A cospan M -> N <- M' of embeddings over A and B, or Fails with a finite
/// obstruction, or Unknown.
struct TypeAmalgam {
    Verdict verdict;
    std::optional<Morphism> to_n, from_mp;  // M -> N, M' -> N
};
TypeAmalgam find_type_amalgam(const Morphism& a, const Morphism& b, const Morphism& a2, const Morphism& b2);

Verdict galois_type_equal(const GaloisTypeInstance& g1, const GaloisTypeInstance& g2, int bound = 0);

// --- instance checks -----------------------------------------------------------

/// Two pullback squares over a common span; names C, A, B, M, Mp.
Verdict check_uniqueness_instance(const CommSquare& s1, const CommSquare& s2);

/// Names C, A, B, D, M with C>A, C>B, B>D, A>M, D>M.
struct BaseMonoProblem {
    Morphism c_a, c_b, b_d, a_m, d_m;
};
Verdict check_base_monotonicity_instance(const BaseMonoProblem& p);

/// Names M0..M5 with M0>M1, M0>M2, M1>M3, M2>M3, M2>M4, M3>M5, M4>M5.
struct SixDiagram {
    Morphism m01, m02, m13, m23, m24, m35, m45;
};
CommSquare left_square(const SixDiagram& s);
CommSquare right_square(const SixDiagram& s);
CommSquare outer_rectangle(const SixDiagram& s);
Verdict check_strongly_squared_instance(const SixDiagram& s);

/// Throws NotAHorn when a face is not a pullback. `bound` caps the exhaustive
/// search over coarser quotients in multi categories.
Verdict check_3_amalgamation(const Horn& h);

struct Cube {
    Horn horn;
    Object n;
    Morphism n1, n2, n3;
};
/// The legs commute over the horn, are embeddings, and the diagonal is a pullback.
bool cube_diagonal_ok(const Cube& c);

/// Existence twice, transitivity twice, then one uniqueness amalgam.
/// Throws ConstructionStuck naming the step that failed.
Cube three_amalg_from_uniqueness(const Horn& h);

// --- simplified long dividing -----------------------------------------------------

struct SldProblem {
    CommSquare square;  // left c_a, bottom c_b, top a, right b
    Morphism f;         // M -> N
    std::vector<Morphism> copies;  // B -> N
};

/// Throws MalformedProblem when f.c != b_i.c_b.
void check_sld_problem(const SldProblem& p);

struct SldWitness {
    Morphism g;       // N -> N'
    Morphism a_new;   // A -> N'
};
/// Checks the gtp equalities for a candidate cospan.
Verdict sld_validate(const SldProblem& p, const SldWitness& w);

/// Existence on M <- B -> N, then a' = h.a. Throws ConstructionStuck.
SldWitness construct_sld_witness(const SldProblem& p);

/// Construction first, then every extension of N by up to `bound` atoms
/// (carrier categories other than BINFUNC) with every embedding of A.
Verdict sld_check_bounded(const SldProblem& p, int bound);

// --- group witness mode ---------------------------------------------------------

/// Horn in GRPWITNESS mode: params hold the colimit presentation, the forced
/// equation's derivation and the separating hom on N3.
Verdict check_3_amalgamation_grp(const Diagram& d);
/// Six-diagram in GRPWITNESS mode with membership and non-membership certificates.
Verdict check_strongly_squared_grp(const Diagram& d);

}  // namespace indcat
