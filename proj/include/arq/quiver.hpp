#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "arq/field.hpp"

namespace arq {

/// Direction of a tail edge: `Out` points away from the core, `In` towards it.
enum class Dir { Out, In };

Dir flip(Dir d);
std::string to_string(Dir d);
Dir parse_dir(const std::string& s);

/// Eventually periodic orientation of a tail: the prefix followed by the
/// period repeated forever. Letter n gives the direction of tail edge n.
struct OrientationWord {
    std::vector<Dir> prefix;
    std::vector<Dir> period;

    Dir at(std::size_t n) const;
    /// Smallest n such that every letter from n on equals the letter at n,
    /// or std::nullopt when the period is not constant.
    std::optional<std::size_t> constant_onset() const;
    /// @returns the eventual constant direction, if any.
    std::optional<Dir> eventual() const;
    OrientationWord flipped() const;
};

/// Integer naming of tail vertices: Tail(t, i) is called offset + step * i.
struct TailLabels {
    long offset = 0;
    long step = 1;
};

struct TailSpec {
    std::string attach;
    OrientationWord orientation;
    std::optional<TailLabels> labels;
};

struct ArrowSpec {
    std::string from;
    std::string to;
    std::string label;
};

/// Finite description of a (possibly infinite) quiver: a finite acyclic core
/// plus rays with eventually periodic orientation.
struct QuiverSpec {
    std::vector<std::string> core_vertices;
    std::vector<ArrowSpec> core_arrows;
    std::vector<TailSpec> tails;
    /// Canonical tag ("A_inf", "A_biinf", "D_inf") when compiled from a shorthand.
    std::optional<std::string> shorthand;
};

/// Builds the spec of the canonical A∞ quiver 0 - 1 - 2 - ⋯ with the given
/// orientation word (letter n orients the edge n — n+1).
QuiverSpec shorthand_a_inf(const OrientationWord& w);
/// Canonical A∞∞: the right word orients edges n — n+1 (n ≥ 0), the left
/// word orients edges -n — -(n+1), `Out` meaning away from 0.
QuiverSpec shorthand_a_biinf(const OrientationWord& right, const OrientationWord& left);
/// Canonical D∞ with leaves 0, 1, branch vertex 2 and spine 2 - 3 - 4 - ⋯.
/// fork[i] == Out means the arrow 2 → i.
QuiverSpec shorthand_d_inf(Dir fork0, Dir fork1, const OrientationWord& spine);

/// Vertex of a quiver: a core vertex (tail == -1, index = core index) or the
/// tail vertex Tail(tail, index) with index ≥ 1.
struct Vertex {
    int tail = -1;
    std::size_t index = 0;

    static Vertex core(std::size_t i) { return {-1, i}; }
    static Vertex on_tail(int t, std::size_t i) { return {t, i}; }
    bool is_core() const { return tail < 0; }
    auto operator<=>(const Vertex&) const = default;
};

/// Arrow of a quiver: core arrow (tail == -1) or tail edge `index` of `tail`.
struct ArrowId {
    int tail = -1;
    std::size_t index = 0;
    auto operator<=>(const ArrowId&) const = default;
};

/// A path, composed left to right; trivial when `arrows` is empty.
struct Path {
    Vertex source;
    Vertex target;
    std::vector<ArrowId> arrows;
};

/// Certificate of an eventually constant tail.
struct TailWitness {
    int tail = 0;
    std::size_t onset = 0;
};

struct PathProfile {
    bool has_left_infinite = false;
    bool has_right_infinite = false;
    std::vector<TailWitness> right_witnesses;
    std::vector<TailWitness> left_witnesses;
};

/// Per-tail truncation depths.
struct Window {
    std::vector<std::size_t> depth;
    bool contains(const Window& o) const;
    static Window join(const Window& a, const Window& b);
};

struct QuiverClass {
    enum class Tag { FiniteDynkin, FiniteEuclidean, FiniteWild, InfDynkin, InfiniteGeneral };
    Tag tag = Tag::InfiniteGeneral;
    /// "A_3", "E_6", "A_inf", "A_biinf", "D_inf" or empty.
    std::string name;
    std::string to_string() const;
};

class Quiver;
struct QuiverPair;
using QuiverPtr = std::shared_ptr<const Quiver>;

/// Validated quiver; immutable after construction.
class Quiver {
public:
    const QuiverSpec& spec() const { return spec_; }
    const Field& field() const { return field_; }
    /// The opposite quiver; opposite()->opposite() is this very object.
    QuiverPtr opposite() const;
    /// Shared handle to this quiver.
    QuiverPtr self() const;
    /// Same quiver over another field.
    QuiverPtr with_field(const Field& f) const;

    std::size_t num_core() const { return spec_.core_vertices.size(); }
    std::size_t num_tails() const { return spec_.tails.size(); }
    std::size_t num_core_arrows() const { return spec_.core_arrows.size(); }
    std::size_t tail_attach(int t) const { return tail_attach_[static_cast<std::size_t>(t)]; }
    Dir tail_dir(int t, std::size_t n) const { return spec_.tails[static_cast<std::size_t>(t)].orientation.at(n); }
    /// prefix + period length: beyond this depth a tail is purely periodic.
    std::size_t structural_depth(int t) const;
    Window structural_window() const;
    Window uniform_window(std::size_t depth) const;

    std::string vertex_name(const Vertex& v) const;
    std::optional<Vertex> find_vertex(const std::string& name) const;
    /// @throws ArqError("UnknownVertex").
    Vertex vertex(const std::string& name) const;

    Vertex source(const ArrowId& a) const;
    Vertex target(const ArrowId& a) const;
    std::string arrow_label(const ArrowId& a) const;
    std::vector<ArrowId> out_arrows(const Vertex& v) const;
    std::vector<ArrowId> in_arrows(const Vertex& v) const;
    /// Smallest window containing v.
    Window window_of(const Vertex& v) const;
    /// Shared, cached window quiver for w.
    std::shared_ptr<const class WindowQuiver> window_quiver(const Window& w) const;

private:
    friend struct QuiverPair;
    friend QuiverPtr build_quiver(const QuiverSpec& spec, const Field& field);
    Quiver() = default;

    QuiverSpec spec_;
    Field field_;
    std::vector<std::size_t> tail_attach_;
    std::map<std::string, std::size_t> core_index_;
    std::vector<std::size_t> core_src_, core_dst_;
    std::weak_ptr<const QuiverPair> pair_;
    bool is_first_ = true;
    std::shared_ptr<struct WindowCache> cache_;
};

/// Validates the spec and builds the quiver (and its opposite).
/// @throws ArqError CoreCycle, DanglingArrow, EmptyPeriod, InvalidSpec.
QuiverPtr build_quiver(const QuiverSpec& spec, const Field& field = Field::rationals());

/// Finite full subquiver given by a window, with indexed vertices (core
/// first, then tails in order), arrows, adjacency and path tables.
class WindowQuiver {
public:
    struct Arrow {
        std::size_t src;
        std::size_t dst;
        ArrowId id;
    };
    /// A path inside the window as a sequence of window arrow indices.
    struct WPath {
        std::size_t src;
        std::size_t dst;
        std::vector<std::size_t> arrows;
    };

    WindowQuiver(const Quiver& q, Window w);

    const Quiver& quiver() const { return *q_; }
    const Window& window() const { return w_; }
    std::size_t size() const { return vertices_.size(); }
    const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
    std::optional<std::size_t> index(const Vertex& v) const;
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::optional<std::size_t> arrow_index(const ArrowId& a) const;
    const std::vector<std::size_t>& out(std::size_t i) const { return out_[i]; }
    const std::vector<std::size_t>& in(std::size_t i) const { return in_[i]; }
    const std::vector<std::size_t>& topological_order() const { return topo_; }
    /// Index of the outermost vertex of tail t (or the attach vertex when depth 0).
    std::size_t boundary(int t) const;

    /// All paths x ⇝ y in deterministic (length, arrow index) order; includes ε_x.
    const std::vector<WPath>& paths(std::size_t x, std::size_t y) const;
    Path to_path(const WPath& p) const;

private:
    void ensure_paths_from(std::size_t x) const;

    const Quiver* q_;
    Window w_;
    std::vector<Vertex> vertices_;
    std::map<Vertex, std::size_t> index_;
    std::vector<Arrow> arrows_;
    std::map<ArrowId, std::size_t> arrow_index_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::vector<std::size_t> topo_;
    mutable std::vector<std::vector<std::vector<WPath>>> paths_;  // [x][y]
    mutable std::vector<bool> paths_done_;
    mutable std::mutex mutex_;
};

using WindowQuiverPtr = std::shared_ptr<const WindowQuiver>;

/// The set Q(x, y) of paths, deterministic order.
std::vector<Path> paths_between(const QuiverPtr& q, const Vertex& x, const Vertex& y);

PathProfile infinite_path_profile(const Quiver& q);

/// A (possibly infinite) vertex set: explicit membership on a window plus
/// a per-tail verdict for all vertices beyond it.
struct VertexSet {
    Window window;
    std::vector<Vertex> members;  ///< members inside the window, sorted
    std::vector<bool> beyond;     ///< per tail: are all vertices beyond the window members?

    bool contains(const Vertex& v) const;
    bool empty() const;
    bool finite() const;
};

struct QPlus {
    VertexSet vertices;
    std::vector<VertexSet> components;
};

/// Q⁺: vertices ending no left infinite path, with its connected components
/// (ordered by their smallest member).
QPlus q_plus(const Quiver& q);

bool is_connected(const Quiver& q);
/// @throws ArqError("Disconnected").
QuiverClass classify_quiver(const Quiver& q);

/// Integer coordinates on a type A quiver (finite A_n, A∞ or A∞∞): the
/// underlying graph is a line and consecutive vertices get consecutive
/// coordinates. When vertex names are integers compatible with the line they
/// are used as coordinates.
class LineModel {
public:
    explicit LineModel(QuiverPtr q);

    const QuiverPtr& quiver() const { return q_; }
    std::optional<long> lo() const { return lo_; }
    std::optional<long> hi() const { return hi_; }
    bool in_range(long c) const;
    Vertex vertex_at(long c) const;
    long coord(const Vertex& v) const;
    bool has_edge(long c) const { return in_range(c) && in_range(c + 1); }
    /// Orientation of edge c — c+1: true for c → c+1.
    bool right_edge(long c) const;
    /// Coordinates outside [structural_lo, structural_hi] lie on purely
    /// periodic tail parts.
    long structural_lo() const { return slo_; }
    long structural_hi() const { return shi_; }
    /// Period length of the tail beyond structural_hi (resp. below structural_lo).
    std::size_t period_hi() const { return phi_; }
    std::size_t period_lo() const { return plo_; }

private:
    QuiverPtr q_;
    std::vector<Vertex> seq_;
    long base_ = 0;
    int left_tail_ = -1, right_tail_ = -1;
    std::optional<long> lo_, hi_;
    long slo_ = 0, shi_ = 0;
    std::size_t plo_ = 1, phi_ = 1;
};

/// Canonical coordinates on a D∞ quiver: leaves 0 and 1, branch vertex 2,
/// spine 3, 4, ….
class DInfModel {
public:
    explicit DInfModel(QuiverPtr q);
    Vertex vertex_at(long c) const;
    long coord(const Vertex& v) const;
    /// Whether the edge between coordinates a and b (adjacent) points a → b.
    bool points(long a, long b) const;
    const QuiverPtr& quiver() const { return q_; }
    std::size_t structural_depth() const { return sdepth_; }

private:
    QuiverPtr q_;
    std::vector<Vertex> finite_;  // coordinates 0 .. finite_.size()-1
    int tail_ = 0;
    std::size_t sdepth_ = 0;
};

}  // namespace arq
