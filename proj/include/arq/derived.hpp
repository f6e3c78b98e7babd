#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arq/ar.hpp"
#include "arq/components.hpp"
#include "arq/rep.hpp"

namespace arq {

/// Stalk complex M[shift] in the bounded derived category of a hereditary
/// category; every object there is a finite sum of such stalks.
struct DerivedObject {
    Rep rep;
    int shift = 0;

    DerivedObject shifted(int k) const { return {rep, shift + k}; }
    /// Display name such as "I(0)[-1]".
    std::string label() const;
};

/// Equality of derived stalks: isomorphic representations, equal shift.
bool same_object(const DerivedObject& a, const DerivedObject& b);

/// Almost split triangle X → Y → Z → X[1] with Y split into stalks.
struct Triangle {
    enum class Family { FromASS, Connecting };
    Family family = Family::FromASS;
    DerivedObject x;
    std::vector<DerivedObject> y;
    DerivedObject z;
    /// The underlying almost split sequence (FromASS only), at shift x.shift.
    std::optional<ARSequence> sequence;

    Triangle shifted(int k) const;
};
std::string to_string(Triangle::Family f);

enum class DerivedUnavailable {
    /// M is pseudo-projective: DTr M is infinite dimensional.
    PseudoProjective,
    /// M = P_x (ending side) or M = I_x (starting side) with x outside Q⁺.
    NotInQPlus,
    /// Starting side at an infinite dimensional representation.
    InfiniteDimStart,
};
std::string to_string(DerivedUnavailable u);

struct TriangleResult {
    std::optional<Triangle> triangle;
    std::optional<DerivedUnavailable> reason;
    std::string detail;
};

/// Almost split triangle ending at (resp. starting at) an indecomposable
/// stalk. Non-projective, non-pseudo-projective M (ending side) and finite
/// dimensional non-injective M (starting side) give shifted almost split
/// sequences; P_x and I_x with x ∈ Q⁺ give the connecting triangle
/// I_x → I_x/S_x ⊕ (rad P_x)[1] → P_x[1] → I_x[1], suitably shifted.
/// @throws ArqError("NotIndecomposable").
TriangleResult derived_ar_triangle(const DerivedObject& obj, Side side);

/// The connecting triangle I_x[s] → (I_x/S_x)[s] ⊕ (rad P_x)[s+1] → P_x[s+1] → I_x[s+1].
/// @throws ArqError("NotInQPlus") when x has infinitely many predecessors.
Triangle connecting_triangle(const QuiverPtr& q, const Vertex& x, int shift = 0);

/// Whether there is an irreducible morphism M → N[1] in the derived category:
/// M ≅ I_x with x ∈ Q⁺ and N a direct summand of rad P_x.
bool derived_irr_shift(const Rep& m, const Rep& n);

/// dim Hom(X[i], Y[j]): Hom(X, Y) if j = i, Ext¹(X, Y) if j = i + 1, else 0.
std::size_t derived_hom_dim(const DerivedObject& x, const DerivedObject& y);

/// Window of the connecting component: the preprojective window at shift 0
/// glued to the (−1)-shifted preinjective windows by arrows I_x[−1] → P_y,
/// one per arrow x → y with x ∈ Q⁺. Orbits are indexed by the vertex x;
/// τ⁻ⁿP_x has power n, τⁿI_x[−1] has power −1−n.
/// @throws ArqError("Disconnected").
ComponentWindow connecting_window(const QuiverPtr& q, std::size_t depth);

struct DerivedCapabilities {
    bool left_ast = false;
    bool right_ast = false;
    bool ast = false;
};
/// Existence of left / right / two-sided almost split triangles in D^b(rep⁺(Q)).
/// @throws ArqError("Disconnected").
DerivedCapabilities derived_capabilities(const QuiverPtr& q);

}  // namespace arq
