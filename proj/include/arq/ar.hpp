#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arq/rep.hpp"

namespace arq {

enum class Direction { DTr, TrD };

/// Auslander–Reiten translate together with its finiteness verdict.
struct DtrResult {
    /// std::nullopt means the translate is zero (the input is projective,
    /// resp. injective for TrD).
    std::optional<Rep> value;
    bool is_finite_dimensional = true;
    /// The translate is infinite dimensional (the input is pseudo-projective,
    /// resp. pseudo-injective).
    bool is_pseudo = false;
    /// Per tail: eventual dimension of the translate along that tail.
    std::vector<std::size_t> tail_certificate;

    bool is_zero() const { return !value.has_value(); }
};

/// Computes DTr M from a minimal projective presentation through the
/// Nakayama functor, or TrD M through the opposite quiver.
/// @throws ArqError NotFinitelyPresented, UnboundedInteraction.
DtrResult ar_translate(const Rep& m, Direction d);

/// ν applied to the projective ⊕P_{x_i} of a projective representation: the
/// injective ⊕I_{x_i}. @throws ArqError("NotProjective").
Rep nakayama(const Rep& p);

/// ν applied to the presentation map ⊕P_{y_j} → ⊕P_{x_i}: returns the
/// source ⊕I_{y_j}, target ⊕I_{x_i} and the morphism on the window w.
struct NakayamaMap {
    Rep source;
    Rep target;
    Morphism map;
};
NakayamaMap nakayama_map(const QuiverPtr& q, const Presentation& p, const Window& w);

bool is_projective(const Rep& m);
bool is_injective(const Rep& m);

enum class Unavailable { Projective, PseudoProjective, InfiniteDimStart, NotIndecomposable, Injective };
std::string to_string(Unavailable u);

enum class Side { EndingAt, StartingAt };

/// Almost split sequence 0 → left → middle → right → 0. `left`,
/// `middle_sum` and `right` share one window on which `iota` and `pi` live.
struct ARSequence {
    Rep left;
    Rep middle_sum;
    Rep right;
    Morphism iota;
    Morphism pi;
    /// Indecomposable summands of the middle term with their embeddings
    /// into `middle_sum`.
    std::vector<Summand> middle;
};

struct AlmostSplitResult {
    std::optional<ARSequence> sequence;
    std::optional<Unavailable> reason;
    std::string detail;
};

AlmostSplitResult almost_split(const Rep& m, Side side);

struct ExactnessAudit {
    bool ok = true;
    std::vector<std::string> failures;
};
/// Checks morphism squares, dimension additivity, composite zero, ranks,
/// and that the sequence does not split.
ExactnessAudit audit(const ARSequence& s);

enum class MrasSide { Into, OutOf };

/// Minimal right (into M) or left (out of M) almost split morphism, split
/// into indecomposable summands. For Into the maps go summand → target,
/// for OutOf target → summand; all live on `target`'s window.
struct Mras {
    Rep target;
    std::vector<Rep> summands;
    std::vector<Morphism> maps;
};
struct MrasResult {
    std::optional<Mras> value;
    std::optional<Unavailable> reason;
    std::string detail;
};
MrasResult mras(const Rep& m, MrasSide side);

/// Extends a morphism out of `src` to the larger window of `dst_ext`,
/// continuing along tails where `src` continues and by zero elsewhere.
Morphism extend_morphism(const Morphism& h, const Rep& src, const Rep& dst_ext);

/// Quotient of m by the subrepresentation spanned by `bases`, with the
/// projection m → quotient.
std::pair<Rep, Morphism> quotient_rep(const Rep& m, const std::vector<Matrix>& bases);

}  // namespace arq
