#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arq/ar.hpp"
#include "arq/rep.hpp"

namespace arq {

/// Path on a type A quiver in line coordinates: it starts at `start` and
/// runs to `end` (std::nullopt for an infinite path). Right-oriented paths
/// have end ≥ start, left-oriented ones end ≤ start.
struct PathSeg {
    long start = 0;
    std::optional<long> end;
    bool trivial() const { return end && *end == start; }
    bool operator==(const PathSeg&) const = default;
};

/// Vertex interval covered by a finite path (an infinite path is reported
/// as {start, ∞}; use the side of its set to orient it).
StringSpec interval(const PathSeg& p);

enum class StringSide { R, L };
std::string to_string(StringSide s);

/// Members of Q_R or Q_L with starting point in [lo, hi], ordered by start,
/// plus verdicts on whether members exist below or above that range.
struct QRQLSet {
    StringSide side = StringSide::R;
    long lo = 0;
    long hi = 0;
    std::vector<PathSeg> members;
    bool more_below = false;
    bool more_above = false;
};

/// The member of Q_R / Q_L starting at coordinate x, if any.
/// @throws ArqError("WrongType") unless q is of type A∞ or A∞∞.
std::optional<PathSeg> member_at(const QuiverPtr& q, StringSide side, long x);
QRQLSet qr_ql_set(const QuiverPtr& q, StringSide side, long lo, long hi);
/// Default coordinate range: the structural part of the quiver plus one vertex on the right.
std::pair<long, long> default_range(const QuiverPtr& q);

enum class UndefinedReason { Projective, Injective, PseudoProjective, InfiniteDimensional, NotMember };
std::string to_string(UndefinedReason r);

/// Double-hook (q, α, p) of an arrow α : y ← x.
struct DoubleHook {
    StringSpec q;  ///< support of the longest path ending in y not ending with α
    long alpha_src = 0;
    long alpha_dst = 0;
    StringSpec p;  ///< support of the longest path starting in x not starting with α
    bool q_finite() const { return q.lo && q.hi; }
    /// The string p α⁻¹ q as an interval.
    StringSpec string() const;
};
/// @param edge the edge between coordinates `edge` and `edge + 1`.
DoubleHook double_hook(const QuiverPtr& q, long edge);

struct SigmaResult {
    std::optional<PathSeg> value;
    std::optional<UndefinedReason> reason;
    /// Double-hook (σ(p), α, p) witnessing the link when defined.
    std::optional<DoubleHook> witness;
};
/// σ (inverse = false) or σ⁻ of a member p of Q_R / Q_L.
SigmaResult source_translate(const QuiverPtr& q, StringSide side, const PathSeg& p, bool inverse);

/// Which set a string belongs to, if any.
std::optional<std::pair<StringSide, PathSeg>> membership(const QuiverPtr& q, const StringSpec& s);

/// Conventional member names: ε_x, p_{x,y}, p_∞.
std::string member_name(const QuiverPtr& q, const PathSeg& p);
/// σ-chain in dotted-arrow notation, e.g. "ε_5 ⇢ p_{4,3} ⇢ p_∞".
std::string render_sigma_chain(const QuiverPtr& q, const QRQLSet& set);

struct TauStringResult {
    std::optional<StringSpec> value;
    std::optional<UndefinedReason> reason;
    /// Computed through the σ-links of Q_R / Q_L (otherwise by hooks).
    bool via_sigma = false;
};
/// τ (Direction::DTr) or τ⁻ (Direction::TrD) of the string module M(s).
TauStringResult tau_string(const QuiverPtr& q, const StringSpec& s, Direction d);

enum class OrbitKind { Preprojective, Preinjective, OrbitR, OrbitL, RegularNonQuasiSimple, TrivialRegular };
std::string to_string(OrbitKind k);

struct OrbitTag {
    OrbitKind kind = OrbitKind::Preprojective;
    /// Quasi-length for regular modules (1 for quasi-simples).
    int quasi_length = 0;
    /// False when the τ-iteration bound was reached (then quasi_length is a lower bound).
    bool exact = true;
    /// For regular modules on A∞∞: the set whose orbit lies in the same component.
    std::optional<StringSide> side;
};

/// Whether the regular component containing O_R (side R) or O_L (side L)
/// has pseudo-projective resp. infinite dimensional members, decided from
/// the eventual tail orientations of an A∞∞ quiver.
struct SideProfile {
    bool exists = true;  ///< false for a double infinite path's empty set
    bool pseudo_projective = false;
    bool infinite_dimensional = false;
    /// Number of members when the set is finite.
    std::optional<std::size_t> size;
};
SideProfile side_profile(const QuiverPtr& q, StringSide side);
OrbitTag orbit_classify(const QuiverPtr& q, const StringSpec& s);

/// Trichotomy for indecomposables over D∞.
struct DInfVerdict {
    enum class Kind { String, N, NInf, NotIndecomposable } kind = Kind::NotIndecomposable;
    /// Support in canonical coordinates for strings (an absent end is infinite).
    std::optional<long> lo, hi;
    long i = 0;
    long j = 0;
    std::string detail;
};
std::string to_string(DInfVerdict::Kind k);
/// Dimension values by canonical coordinate; `infinite` means the last
/// listed value continues forever along the tail.
DInfVerdict dinf_indec_test(const QuiverPtr& q, const std::vector<std::size_t>& dims, bool infinite);
DInfVerdict dinf_indec_test(const QuiverPtr& q, const Rep& m);

}  // namespace arq
