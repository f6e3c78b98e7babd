#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arq/linalg.hpp"
#include "arq/poly.hpp"
#include "arq/quiver.hpp"

namespace arq {

/// String on a type A quiver, given by its interval of line coordinates; an
/// absent end extends to infinity. Intervals are the normalized form: the
/// walk and its inverse describe the same interval.
struct StringSpec {
    std::optional<long> lo;
    std::optional<long> hi;
    bool operator==(const StringSpec&) const = default;
};

enum class RepKind { Window, Proj, Inj, Simple, String, DInf, Kronecker, Thin };

std::string to_string(RepKind k);

/// Provenance of a representation (which family it belongs to) and its name.
struct RepInfo {
    RepKind kind = RepKind::Window;
    std::optional<Vertex> vertex;
    std::optional<StringSpec> string;
    long i = 0;
    std::optional<long> j;  ///< N_{i,j}; std::nullopt means j = ∞
    Poly poly;
    std::string name;
    /// Known to be indecomposable (families and computed translates).
    bool indecomposable = false;
};

/// A representation stored on a finite window. Beyond the window each tail
/// either continues (`cont`) with the boundary dimension and identity maps,
/// or is zero. Windows always contain the structural window of the quiver.
class Rep {
public:
    Rep() = default;
    /// Zero representation on the given window.
    Rep(QuiverPtr q, const Window& w);

    const QuiverPtr& quiver() const { return q_; }
    const Field& field() const { return q_->field(); }
    const WindowQuiver& wq() const { return *wq_; }
    const std::shared_ptr<const WindowQuiver>& wq_ptr() const { return wq_; }
    const Window& window() const { return wq_->window(); }

    std::size_t dim(std::size_t i) const { return dims_[i]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    /// Dimension at any vertex of the quiver.
    std::size_t dim_at(const Vertex& v) const;
    const Matrix& map(std::size_t a) const { return maps_[a]; }
    bool cont(int t) const { return cont_[static_cast<std::size_t>(t)]; }
    /// Tail t carries nonzero dimension all the way to infinity.
    bool infinite_along(int t) const;
    bool finite_dimensional() const;
    /// Total dimension, std::nullopt when infinite.
    std::optional<std::size_t> total_dim() const;
    bool is_zero() const;

    void set_dim(std::size_t i, std::size_t d);
    void set_map(std::size_t a, Matrix m);
    void set_cont(int t, bool c) { cont_[static_cast<std::size_t>(t)] = c; }

    const RepInfo& info() const { return info_; }
    RepInfo& info() { return info_; }
    const std::string& name() const { return info_.name; }

    /// Same representation on a larger window.
    Rep extended(const Window& w) const;
    /// Finite truncation: extended by `extra` on every tail, continuation dropped.
    Rep truncated(std::size_t extra) const;
    /// Shrinks tails whose outer part is already described by the continuation rule.
    Rep trimmed() const;
    /// Structure map along a window path.
    Matrix path_map(const WindowQuiver::WPath& p) const;
    /// @throws ArqError("InvalidRep") on shape mismatches.
    void validate() const;
    /// Support vertices inside the window.
    std::vector<Vertex> support() const;

private:
    QuiverPtr q_;
    std::shared_ptr<const WindowQuiver> wq_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
    std::vector<bool> cont_;
    RepInfo info_;
};

/// Componentwise morphism between two representations sharing a window.
struct Morphism {
    std::vector<Matrix> at;
};

/// Dimension vector with its eventual behaviour along tails.
struct DimVector {
    Window window;
    std::vector<std::pair<Vertex, std::size_t>> values;
    /// Per tail: (onset index, periodic word) — values at Tail(t, i) for i ≥ onset.
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> tails;
};

/// Subscript rendering: "x" or "{xy}".
std::string subscript(const std::string& s);

// --- standard families ------------------------------------------------------

Rep projective(const QuiverPtr& q, const Vertex& x);
Rep injective(const QuiverPtr& q, const Vertex& x);
Rep simple(const QuiverPtr& q, const Vertex& x);
enum class StandardKind { Proj, Inj, Simple };
Rep standard_rep(const QuiverPtr& q, StandardKind kind, const Vertex& x);

/// Thin representation (dimension 1, identity maps) on a connected support.
/// Tails listed in `infinite_tails` carry the support to infinity from the
/// window boundary on.
Rep thin_rep(const QuiverPtr& q, const Window& w, const std::vector<Vertex>& support,
             const std::vector<int>& infinite_tails);

/// String representation M(w) on a type A quiver.
/// @throws ArqError("InvalidString").
Rep string_rep(const QuiverPtr& q, const StringSpec& s);
/// D∞ family N_{i,j} (j = std::nullopt for N_{i,∞}).
/// @throws ArqError WrongType, NoInfinitePath, InvalidArgument.
Rep dinf_rep(const QuiverPtr& q, long i, std::optional<long> j);
/// Kronecker regular representation M_p for a monic irreducible p.
/// @throws ArqError WrongQuiver, ReduciblePolynomial.
Rep kronecker_regular(const QuiverPtr& q, const Poly& p);
/// Whether q is the Kronecker quiver; on success returns (a, b, alpha, beta).
bool is_kronecker(const Quiver& q);

// --- interrogation ----------------------------------------------------------

DimVector dim_vector(const Rep& m, const Window& w);
DimVector dim_vector(const Rep& m);
/// Equal dimensions at every vertex (including asymptotics).
bool same_dimension_vector(const Rep& a, const Rep& b);
std::string dim_vector_string(const Rep& m);

/// Restriction to a full subquiver, returned as a representation of Q
/// supported on the subquiver.
Rep restrict_rep(const Rep& m, const VertexSet& sigma);
/// Dual representation over the opposite quiver (structure maps transposed).
Rep dualize(const Rep& m);

struct RadTopSoc {
    Rep rad;
    Rep top;
    Rep soc;
};
RadTopSoc rad_top_soc(const Rep& m);

/// Both representations extended to a common window.
std::pair<Rep, Rep> common_window(const Rep& a, const Rep& b, std::size_t extra = 0);
/// Basis of Hom(M, N) computed on the common window + 1 (exact for
/// representations stored in stable form).
std::vector<Morphism> hom_space(const Rep& m, const Rep& n, Rep* m_out = nullptr, Rep* n_out = nullptr);
Morphism compose(const Field& f, const Morphism& g, const Morphism& h);  ///< g ∘ h
bool is_iso_morphism(const Field& f, const Morphism& h);

/// Minimal projective presentation 0 → ⊕P_{y_j} → ⊕P_{x_i} → M → 0.
struct Presentation {
    std::vector<Vertex> tops;
    std::vector<Vertex> syzygies;
    /// coeff[j][i]: coefficients on the paths Q(x_i, y_j), in the
    /// deterministic path order.
    std::vector<std::vector<std::vector<Scalar>>> coeff;
    /// Generator vectors v_i ∈ M(x_i).
    std::vector<std::vector<Scalar>> generators;
    /// Window the computation was carried out on.
    Window window;
};

/// @throws ArqError("NotFinitelyPresented").
Presentation minimal_presentation(const Rep& m);

struct HomExt {
    std::size_t hom = 0;
    std::size_t ext = 0;
};
/// dim Hom(M, N) and dim Ext¹(M, N) from the presentation of M.
/// @throws ArqError NotFinitelyPresented, UnboundedInteraction.
HomExt hom_ext_dims(const Rep& m, const Rep& n);

/// Indecomposable summand together with its embedding (per window vertex)
/// into the decomposed representation; both share that representation's window.
struct Summand {
    Rep rep;
    std::vector<Matrix> embedding;
};
std::vector<Summand> decompose_with_maps(const Rep& m);

/// Hom(M, N) for two representations on the same window, stored stably.
std::vector<Morphism> hom_on_window(const Rep& m, const Rep& n);

/// Indecomposable summands in deterministic order.
/// @throws ArqError("Undecided") when no certificate can be produced.
std::vector<Rep> decompose(const Rep& m);
bool is_indecomposable(const Rep& m);
/// @throws ArqError("Undecided").
bool is_isomorphic(const Rep& a, const Rep& b);

/// Result of the finite presentation criterion.
struct FpCertificate {
    bool ok = false;
    /// Σ: co-finite successor-closed part of the support on which M is projective.
    VertexSet sigma;
    /// Vertices whose restriction is projective there (top of M_Σ).
    std::vector<Vertex> sigma_tops;
    std::optional<Vertex> witness;
};
FpCertificate fp_certificate(const Rep& m);

/// Assigns a readable name (S_x, P_x, I_x, M(p_{a,b}), N_{i,j}, …).
std::string describe(const Rep& m);
/// Sets info().name to describe(m) and returns m.
Rep named(Rep m);

// --- helpers shared with the AR engine --------------------------------------

/// Subrepresentation spanned by per-vertex bases (columns).
Rep subrep(const Rep& m, const std::vector<Matrix>& bases);
/// Recognizes the family of an indecomposable representation (simple,
/// string on type A, N_{i,j} or string on D∞) and records it in info().
void recognize(Rep& m);

}  // namespace arq
