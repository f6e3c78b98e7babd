#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arq/ar.hpp"
#include "arq/rep.hpp"

namespace arq {

enum class ShapeTag { NQop, NminusQop, ZQop, ZAinf, NAinf, NminusAinf, Wing, Trivial, Tube, UndeterminedBeyondDepth };
std::string to_string(ShapeTag t);

/// Shape of a component together with a human-readable certificate.
struct Shape {
    ShapeTag tag = ShapeTag::UndeterminedBeyondDepth;
    /// Wing size n (a wing of rank n has n(n+1)/2 cells).
    std::size_t wing = 0;
    std::string certificate;
    /// Rendered tag, e.g. "Wing(3)" or "ZAinf".
    std::string str() const;
};

/// One vertex of an AR-quiver window.
struct Cell {
    int orbit = 0;
    long power = 0;  ///< position in the τ-orbit: τ moves to power − 1
    int shift = 0;   ///< derived shift (connecting windows only)
    Rep rep;
    std::string name;
    std::optional<std::size_t> dim;  ///< total dimension, std::nullopt = ∞
    bool projective = false;
    bool injective = false;
    bool pseudo_projective = false;
    bool infinite_dimensional = false;
    /// Stable identifier "orbit:power".
    std::string id() const;
    /// Display label: name with a shift suffix such as "[-1]".
    std::string label() const;
};

struct GammaArrow {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t multiplicity = 1;
};

struct ComponentWindow {
    enum class Kind { Preprojective, Preinjective, Regular, Connecting } kind = Kind::Preprojective;
    std::vector<Cell> cells;
    std::vector<GammaArrow> arrows;
    /// Pairs (X, τX) of cell indices.
    std::vector<std::pair<std::size_t, std::size_t>> tau_links;
    Shape shape;
    /// The whole component was enumerated (no frontier left).
    bool closed = false;
    std::size_t depth = 0;

    std::optional<std::size_t> find(int orbit, long power) const;
    /// Index of a cell isomorphic to m (same shift), if present.
    std::optional<std::size_t> find_iso(const Rep& m, int shift = 0) const;
};
std::string to_string(ComponentWindow::Kind k);

struct PreprojectiveSeed {};
/// Preinjective component generated by the injectives I_x with x in the
/// given connected component of Q⁺ (index into q_plus(q).components).
struct PreinjectiveSeed {
    std::size_t component = 0;
};
struct RegularSeed {
    Rep rep;
};
using Seed = std::variant<PreprojectiveSeed, PreinjectiveSeed, RegularSeed>;

/// Knits a window of the AR component determined by the seed.
/// For preprojective/preinjective seeds `depth` bounds the τ-power; for a
/// regular seed it bounds the distance from the seed in the AR quiver.
/// `vertices` restricts the P-row / I-row on infinite quivers (default: the
/// structural window widened by depth + 1).
/// @throws ArqError("BadSeed").
ComponentWindow knit_component(const QuiverPtr& q, const Seed& seed, std::size_t depth,
                               std::optional<Window> vertices = std::nullopt);

/// Shape decision for the component containing the indecomposable M.
/// @throws ArqError("NotIndecomposable").
Shape component_shape(const QuiverPtr& q, const Rep& m, std::size_t depth);

/// Regular-component count and breakdown derived from the quiver class and
/// its infinite-path profile.
struct Census {
    std::optional<std::size_t> regular;  ///< std::nullopt = infinitely many
    struct Entry {
        ShapeTag tag;
        std::optional<std::size_t> count;  ///< std::nullopt = infinitely many
    };
    std::vector<Entry> breakdown;
    std::string justification;
};
Census regular_census(const QuiverPtr& q);

/// Shape shared by every regular component, when the quiver determines it.
std::optional<ShapeTag> uniform_regular_shape(const QuiverPtr& q);

struct ARCapabilities {
    bool left = false;
    bool right = false;
    bool both = false;
};
ARCapabilities ar_capabilities(const QuiverPtr& q);

/// Whether Q is a left infinite path (⋯ → 2 → 1 → 0) resp. a double infinite path.
bool is_left_infinite_path(const QuiverPtr& q);
bool is_double_infinite_path(const QuiverPtr& q);

/// Graphviz rendering: solid arrows per multiplicity, dashed τ edges.
std::string export_dot(const ComponentWindow& w, const std::string& title = "component");

}  // namespace arq
