#pragma once

#include <string>

#include "json.hpp"

#include "arq/ar.hpp"
#include "arq/components.hpp"
#include "arq/derived.hpp"
#include "arq/quiver.hpp"
#include "arq/rep.hpp"
#include "arq/strings.hpp"

namespace arq {

using Json = nlohmann::ordered_json;

/// Parses a quiver-spec document. Either an explicit core/tails description
///
///     {"core": {"vertices": [...], "arrows": [{"from", "to", "label"}]},
///      "tails": [{"attach", "prefix": ["out"|"in"], "period": [...],
///                 "labels": {"offset", "step"}}]}
///
/// or a canonical shorthand
///
///     {"shorthand": {"type": "A_inf", "word": {"prefix", "period"}}}
///     {"shorthand": {"type": "A_biinf", "right": {...}, "left": {...}}}
///     {"shorthand": {"type": "D_inf", "fork": ["out"|"in", "out"|"in"], "spine": {...}}}
///
/// @throws ArqError("InvalidSpec").
QuiverSpec spec_from_json(const Json& j);
Json spec_to_json(const QuiverSpec& s);
/// Reads and parses a spec file. @throws ArqError("InvalidSpec"), ArqError("Io").
QuiverSpec load_spec(const std::string& path);

/// Parses the representation mini-language:
///   P(x), I(x), S(x)             projective / injective / simple at vertex x
///   M(a..b), M(-inf..b), M(a..inf)   string on a type A quiver by its vertex interval
///   M(x-y-z)                     string given by a vertex walk
///   M(p_inf), M(p_{4,3}), M(eps_5)   named members of Q_R / Q_L
///   N(i,j), N(i,inf)             the D∞ families
///   K(<poly>)                    Kronecker regular module M_p
/// @throws ArqError("BadRep") on syntax errors, plus the constructors' errors.
Rep parse_rep(const QuiverPtr& q, const std::string& text);

Json to_json(const DimVector& d, const Quiver& q);
Json to_json(const Rep& m);
Json to_json(const ARSequence& s);
Json to_json(const ComponentWindow& w);
Json to_json(const Shape& s);
Json to_json(const Census& c);
Json to_json(const DerivedObject& o);
Json to_json(const Triangle& t);
Json to_json(const QuiverPtr& q, const QRQLSet& s);
Json to_json(const QuiverPtr& q, const PathSeg& p);
Json to_json(const OrbitTag& t);

/// Renders a string interval as "[a, b]" with ∞ ends.
std::string interval_string(const StringSpec& s);

}  // namespace arq
