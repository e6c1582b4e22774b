#pragma once

#include <indcat/structures.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace indcat {

/// left: apex -> L, right: apex -> R.
struct Span {
    Object apex;
    Morphism left, right;
};

/// left: L -> sink, right: R -> sink.
struct Cospan {
    Object sink;
    Morphism left, right;
};

/// left: C -> A, bottom: C -> B, top: A -> M, right: B -> M.
struct CommSquare {
    Morphism left, bottom, top, right;

    const Object& C() const { return left.src; }
    const Object& A() const { return left.dst; }
    const Object& B() const { return bottom.dst; }
    const Object& M() const { return top.dst; }
};

bool commutes(const CommSquare& sq);
CommSquare transpose(const CommSquare& sq);
bool all_embeddings(const CommSquare& sq);

/// Base square M -> A, B, C and the three faces into N1 (A, B), N2 (A, C), N3 (B, C).
struct Horn {
    Morphism m_a, m_b, m_c;
    Morphism a_n1, b_n1;
    Morphism a_n2, c_n2;
    Morphism b_n3, c_n3;

    const Object& M() const { return m_a.src; }
    const Object& A() const { return m_a.dst; }
    const Object& B() const { return m_b.dst; }
    const Object& C() const { return m_c.dst; }
    const Object& N1() const { return a_n1.dst; }
    const Object& N2() const { return a_n2.dst; }
    const Object& N3() const { return b_n3.dst; }

    /// The faces as squares: (M,A,B,N1), (M,A,C,N2), (M,B,C,N3).
    CommSquare face1() const;
    CommSquare face2() const;
    CommSquare face3() const;
};

bool commutes(const Horn& h);

/// An arrow of a finite diagram between object slots.
struct Arrow {
    int from = 0, to = 0;
    Morphism m;
};

struct Cocone {
    Object apex;
    std::vector<Morphism> legs;  // one per diagram object
    bool all_embeddings = false;
    bool pullback = false;  // the shape-specific pullback tag
    /// BINFUNC: Y atoms of the apex that are free tags, with their X pair; (-1,-1) otherwise.
    std::vector<std::pair<int, int>> free_tags;
};

struct AmalgamSet {
    std::vector<Cocone> instances;
    bool truncated = false;
};

/// Jointly surjective cocones over the diagram: the colimit for SET/GRA/POS/BINFUNC
/// (empty if a loop would be forced), and every structure completion of the
/// carrier colimit for TWOGRAPH/KDIST (or of the quotient space for BIL).
/// `glue` lists extra identifications of X atoms, as ((slot, atom), (slot, atom)).
using AtomRef = std::pair<int, int>;
AmalgamSet colimits(const std::vector<Object>& objects, const std::vector<Arrow>& arrows,
                    std::size_t cap = 1u << 16, const std::vector<std::pair<AtomRef, AtomRef>>& glue = {});

/// The unique morphism apex -> target commuting with the legs, if one exists.
std::optional<Morphism> mediate(const Cocone& c, const std::vector<Object>& objects, const Object& target,
                                const std::vector<Morphism>& target_legs);

/// Intersection of images with induced structure; left/bottom are the projections.
CommSquare pullback(const Cospan& c);
CommSquare pullback(const Morphism& to_m_from_a, const Morphism& to_m_from_b);

/// Iterated binary pullback. Returns the apex's projections onto each leg source.
std::vector<Morphism> wide_pullback(const std::vector<Morphism>& legs);

/// Legs (L, R, apex) in that order; the tag says whether the square is a pullback.
AmalgamSet multipushout(const Span& s, std::size_t cap = 1u << 16);

/// The genuine pushout in a pushout-complete category as a square over the span.
std::optional<CommSquare> pushout(const Span& s);

/// Legs ordered N1, N2, N3, A, B, C, M; the tag is the diagonal (M, A, N3, N) pullback.
AmalgamSet horn_multicolimit(const Horn& h, std::size_t cap = 1u << 16,
                             const std::vector<std::pair<AtomRef, AtomRef>>& glue = {});

/// m = mm . e with e surjective and mm an embedding.
std::pair<Morphism, Morphism> factorize(const Morphism& m);

/// The subobject of `target` generated by the images of `maps`.
Morphism generated_subobject(const Object& target, const std::vector<Morphism>& maps);

/// Factors `m` through the embedding `sub` (image of m inside image of sub), if possible.
std::optional<Morphism> factor_through(const Morphism& m, const Morphism& sub);

/// Sub-space embedding from a basis (columns) of a subspace of a BIL object.
Morphism bil_subspace(const Object& target, const gf::Mat& basis);

}  // namespace indcat
