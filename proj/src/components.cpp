#include "arq/components.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "arq/errors.hpp"
#include "arq/strings.hpp"

namespace arq {

namespace {

bool is_type_a_biinf(const Quiver& q) {
    auto c = classify_quiver(q);
    return c.tag == QuiverClass::Tag::InfDynkin && c.name == "A_biinf";
}

std::optional<Dir> eventual_dir(const Quiver& q, int t) {
    return q.spec().tails[static_cast<std::size_t>(t)].orientation.eventual();
}

/// Name in the command-line mini-language for P/I/S, otherwise the rep name.
std::string mini_name(const Rep& m) {
    const auto& info = m.info();
    if (info.vertex) {
        std::string v = m.quiver()->vertex_name(*info.vertex);
        switch (info.kind) {
            case RepKind::Proj: return "P(" + v + ")";
            case RepKind::Inj: return "I(" + v + ")";
            case RepKind::Simple: return "S(" + v + ")";
            default: break;
        }
    }
    return m.name().empty() ? describe(m) : m.name();
}

Cell make_cell(const Rep& m, int orbit, long power) {
    Cell c;
    c.orbit = orbit;
    c.power = power;
    c.rep = m;
    c.name = m.name().empty() ? describe(m) : m.name();
    c.dim = m.total_dim();
    c.infinite_dimensional = !m.finite_dimensional();
    c.projective = is_projective(m);
    c.injective = !c.infinite_dimensional && is_injective(m);
    return c;
}

/// Collapses parallel Γ-arrows into multiplicities, deterministic order.
void add_arrow(std::map<std::pair<std::size_t, std::size_t>, std::size_t>& acc, std::size_t from, std::size_t to,
               std::size_t mult, bool accumulate) {
    auto& slot = acc[{from, to}];
    slot = accumulate ? slot + mult : std::max(slot, mult);
}

void flush_arrows(ComponentWindow& w, const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& acc) {
    for (const auto& [k, m] : acc) w.arrows.push_back({k.first, k.second, m});
}

std::size_t triangular_root(std::size_t n) {
    std::size_t r = 0;
    while ((r + 1) * (r + 2) / 2 <= n) ++r;
    return r;
}

Window knit_vertices(const QuiverPtr& q, std::size_t depth, const std::optional<Window>& w) {
    if (w) return *w;
    Window s = q->structural_window();
    for (auto& d : s.depth) d += depth + 1;
    return s;
}

ComponentWindow knit_preprojective(const QuiverPtr& q, std::size_t depth, const Window& vw) {
    ComponentWindow w;
    w.kind = ComponentWindow::Kind::Preprojective;
    w.depth = depth;
    auto wq = q->window_quiver(vw);
    std::map<std::pair<long, std::size_t>, std::size_t> at;  // (n, vertex) → cell
    for (std::size_t v = 0; v < wq->size(); ++v) {
        at[{0, v}] = w.cells.size();
        w.cells.push_back(make_cell(projective(q, wq->vertex(v)), static_cast<int>(v), 0));
    }
    bool exhausted = true;
    for (long n = 1;; ++n) {
        bool grew = false;
        for (std::size_t v = 0; v < wq->size(); ++v) {
            auto it = at.find({n - 1, v});
            if (it == at.end()) continue;
            const Cell& prev = w.cells[it->second];
            if (prev.infinite_dimensional || prev.injective) continue;
            if (n > static_cast<long>(depth)) {
                exhausted = false;
                continue;
            }
            auto t = ar_translate(prev.rep, Direction::TrD);
            if (!t.value) {
                w.cells[it->second].injective = true;
                continue;
            }
            std::size_t idx = w.cells.size();
            w.cells.push_back(make_cell(*t.value, static_cast<int>(v), n));
            w.tau_links.emplace_back(idx, it->second);
            at[{n, v}] = idx;
            grew = true;
        }
        if (!grew) break;
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> acc;
    for (const auto& a : wq->arrows()) {
        // Q-arrow x → y: (n, y) → (n, x) and (n, x) → (n+1, y).
        for (const auto& [key, idx] : at) {
            if (key.second != a.dst) continue;
            long n = key.first;
            if (auto x = at.find({n, a.src}); x != at.end()) add_arrow(acc, idx, x->second, 1, true);
        }
        for (const auto& [key, idx] : at) {
            if (key.second != a.src) continue;
            long n = key.first;
            if (auto y = at.find({n + 1, a.dst}); y != at.end()) add_arrow(acc, idx, y->second, 1, true);
        }
    }
    flush_arrows(w, acc);
    w.closed = exhausted && q->num_tails() == 0;
    return w;
}

ComponentWindow knit_preinjective(const QuiverPtr& q, std::size_t component, std::size_t depth, const Window& vw_in) {
    auto qp = q_plus(*q);
    if (component >= qp.components.size())
        throw ArqError("BadSeed", "Q+ has " + std::to_string(qp.components.size()) + " connected components");
    const VertexSet& comp = qp.components[component];
    Window vw = Window::join(vw_in, comp.window);
    ComponentWindow w;
    w.kind = ComponentWindow::Kind::Preinjective;
    w.depth = depth;
    auto wq = q->window_quiver(vw);
    std::map<std::pair<long, std::size_t>, std::size_t> at;  // (n ≥ 0 meaning τⁿ, vertex) → cell
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < wq->size(); ++v)
        if (comp.contains(wq->vertex(v))) members.push_back(v);
    for (auto v : members) {
        at[{0, v}] = w.cells.size();
        w.cells.push_back(make_cell(injective(q, wq->vertex(v)), static_cast<int>(v), 0));
    }
    bool exhausted = true;
    for (long n = 1;; ++n) {
        bool grew = false;
        for (auto v : members) {
            auto it = at.find({n - 1, v});
            if (it == at.end()) continue;
            Cell& prev = w.cells[it->second];
            if (prev.projective || prev.pseudo_projective) continue;
            if (n > static_cast<long>(depth)) {
                exhausted = false;
                continue;
            }
            auto t = ar_translate(prev.rep, Direction::DTr);
            if (!t.value) {
                w.cells[it->second].projective = true;
                continue;
            }
            if (t.is_pseudo) {
                w.cells[it->second].pseudo_projective = true;
                continue;
            }
            std::size_t idx = w.cells.size();
            w.cells.push_back(make_cell(*t.value, static_cast<int>(v), -n));
            w.tau_links.emplace_back(it->second, idx);
            at[{n, v}] = idx;
            grew = true;
        }
        if (!grew) break;
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> acc;
    for (const auto& a : wq->arrows()) {
        // Q-arrow y → x: (−n, x) → (−n, y) and (−n−1, y) → (−n, x).
        std::size_t y = a.src, x = a.dst;
        for (const auto& [key, idx] : at) {
            if (key.second != x) continue;
            long n = key.first;
            if (auto c = at.find({n, y}); c != at.end()) add_arrow(acc, idx, c->second, 1, true);
            if (auto c = at.find({n + 1, y}); c != at.end()) add_arrow(acc, c->second, idx, 1, true);
        }
    }
    flush_arrows(w, acc);
    w.closed = exhausted && comp.finite();
    return w;
}

/// Bidirectional mesh growth from a regular seed.
ComponentWindow knit_regular(const Rep& seed, std::size_t depth) {
    ComponentWindow w;
    w.kind = ComponentWindow::Kind::Regular;
    w.depth = depth;
    std::vector<std::size_t> dist;
    int next_orbit = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> acc;

    auto add = [&](const Rep& m, std::size_t d) -> std::size_t {
        if (auto i = w.find_iso(m)) return *i;
        w.cells.push_back(make_cell(m, next_orbit++, 0));
        dist.push_back(d);
        return w.cells.size() - 1;
    };
    // Puts `lower` at power(upper) − 1 in the orbit of `upper`, merging orbits.
    auto link = [&](std::size_t upper, std::size_t lower) {
        if (std::find(w.tau_links.begin(), w.tau_links.end(), std::make_pair(upper, lower)) == w.tau_links.end())
            w.tau_links.emplace_back(upper, lower);
        int keep = w.cells[upper].orbit, drop = w.cells[lower].orbit;
        long shift = w.cells[upper].power - 1 - w.cells[lower].power;
        if (keep == drop) return;
        for (auto& c : w.cells)
            if (c.orbit == drop) {
                c.orbit = keep;
                c.power += shift;
            }
    };

    add(seed, 0);
    std::vector<bool> expanded;
    for (std::size_t i = 0; i < w.cells.size(); ++i) {
        if (dist[i] >= depth) continue;
        Cell cell = w.cells[i];
        if (!cell.projective) {
            auto r = almost_split(cell.rep, Side::EndingAt);
            if (r.sequence) {
                std::size_t l = add(r.sequence->left, dist[i] + 1);
                link(i, l);
                std::map<std::size_t, std::size_t> mult;
                for (const auto& s : r.sequence->middle) ++mult[add(s.rep, dist[i] + 1)];
                for (auto [y, m] : mult) {
                    add_arrow(acc, y, i, m, false);
                    add_arrow(acc, l, y, m, false);
                }
            } else if (r.reason == Unavailable::PseudoProjective) {
                w.cells[i].pseudo_projective = true;
            }
        }
        if (!cell.infinite_dimensional && !cell.injective) {
            auto r = almost_split(cell.rep, Side::StartingAt);
            if (r.sequence) {
                std::size_t rt = add(r.sequence->right, dist[i] + 1);
                link(rt, i);
                std::map<std::size_t, std::size_t> mult;
                for (const auto& s : r.sequence->middle) ++mult[add(s.rep, dist[i] + 1)];
                for (auto [y, m] : mult) {
                    add_arrow(acc, i, y, m, false);
                    add_arrow(acc, y, rt, m, false);
                }
            }
        }
    }
    w.closed = std::all_of(dist.begin(), dist.end(), [&](std::size_t d) { return d < depth; });
    // Canonical orbit numbering by first appearance, seed at power 0.
    std::map<int, int> renum;
    long base = w.cells[0].power;
    int seed_orbit = w.cells[0].orbit;
    for (auto& c : w.cells) {
        if (!renum.count(c.orbit)) renum[c.orbit] = static_cast<int>(renum.size());
    }
    for (auto& c : w.cells) {
        if (c.orbit == seed_orbit) c.power -= base;
        c.orbit = renum[c.orbit];
    }
    // Re-anchor the other orbits so that their first cell sits at power 0.
    std::map<int, long> first;
    for (const auto& c : w.cells)
        if (c.orbit != 0 && !first.count(c.orbit)) first[c.orbit] = c.power;
    for (auto& c : w.cells)
        if (c.orbit != 0) c.power -= first[c.orbit];
    flush_arrows(w, acc);
    return w;
}

/// Shape of the regular component of an A∞∞ quiver containing O_R / O_L.
Shape side_shape(const QuiverPtr& q, StringSide side) {
    Shape s;
    auto sp = side_profile(q, side);
    std::string which = side == StringSide::R ? "O_R" : "O_L";
    if (is_double_infinite_path(q)) {
        s.tag = ShapeTag::ZAinf;
        s.certificate = "double infinite path: unique regular component containing " + which;
        return s;
    }
    if (sp.pseudo_projective && sp.infinite_dimensional) {
        s.tag = sp.size && *sp.size == 1 ? ShapeTag::Trivial : ShapeTag::Wing;
        s.wing = sp.size.value_or(0);
        s.certificate = "component of " + which + " has pseudo-projective and infinite dimensional members: finite wing";
    } else if (sp.pseudo_projective) {
        s.tag = ShapeTag::NAinf;
        s.certificate = "component of " + which + " has pseudo-projective but no infinite dimensional members";
    } else if (sp.infinite_dimensional) {
        s.tag = ShapeTag::NminusAinf;
        s.certificate = "component of " + which + " has infinite dimensional but no pseudo-projective members";
    } else {
        s.tag = ShapeTag::ZAinf;
        s.certificate = "component of " + which + " is stable with finite dimensional members only";
    }
    return s;
}

}  // namespace

std::string to_string(ShapeTag t) {
    switch (t) {
        case ShapeTag::NQop: return "NQop";
        case ShapeTag::NminusQop: return "NminusQop";
        case ShapeTag::ZQop: return "ZQop";
        case ShapeTag::ZAinf: return "ZAinf";
        case ShapeTag::NAinf: return "NAinf";
        case ShapeTag::NminusAinf: return "NminusAinf";
        case ShapeTag::Wing: return "Wing";
        case ShapeTag::Trivial: return "Trivial";
        case ShapeTag::Tube: return "Tube";
        case ShapeTag::UndeterminedBeyondDepth: return "UndeterminedBeyondDepth";
    }
    return "?";
}

std::string Shape::str() const {
    if (tag == ShapeTag::Wing && wing > 0) return "Wing(" + std::to_string(wing) + ")";
    return to_string(tag);
}

std::string to_string(ComponentWindow::Kind k) {
    switch (k) {
        case ComponentWindow::Kind::Preprojective: return "Preprojective";
        case ComponentWindow::Kind::Preinjective: return "Preinjective";
        case ComponentWindow::Kind::Regular: return "Regular";
        case ComponentWindow::Kind::Connecting: return "Connecting";
    }
    return "?";
}

std::string Cell::id() const { return std::to_string(orbit) + ":" + std::to_string(power); }

std::string Cell::label() const {
    std::string l = mini_name(rep);
    if (shift != 0) l += "[" + std::to_string(shift) + "]";
    return l;
}

std::optional<std::size_t> ComponentWindow::find(int orbit, long power) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].orbit == orbit && cells[i].power == power) return i;
    return std::nullopt;
}

std::optional<std::size_t> ComponentWindow::find_iso(const Rep& m, int shift) const {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        if (c.shift != shift || c.infinite_dimensional != !m.finite_dimensional()) continue;
        if (c.dim != m.total_dim()) continue;
        if (!same_dimension_vector(c.rep, m)) continue;
        if (is_isomorphic(c.rep, m)) return i;
    }
    return std::nullopt;
}

ComponentWindow knit_component(const QuiverPtr& q, const Seed& seed, std::size_t depth, std::optional<Window> vertices) {
    Window vw = knit_vertices(q, depth, vertices);
    ComponentWindow w;
    if (std::holds_alternative<PreprojectiveSeed>(seed)) {
        w = knit_preprojective(q, depth, vw);
        if (w.closed) {
            w.shape.tag = ShapeTag::NQop;
            w.shape.certificate = "finite component with " + std::to_string(w.cells.size()) + " cells";
        } else {
            w.shape.tag = ShapeTag::NQop;
            w.shape.certificate = infinite_path_profile(*q).has_right_infinite
                                      ? "full subquiver of NQop with a right boundary of infinite dimensional cells"
                                      : "left-most section of projectives; shape NQop";
        }
    } else if (auto* pi = std::get_if<PreinjectiveSeed>(&seed)) {
        w = knit_preinjective(q, pi->component, depth, vw);
        if (w.closed && w.cells.size() == 1) {
            w.shape.tag = ShapeTag::Trivial;
            w.shape.certificate = "single injective whose τ is pseudo-projective or zero";
        } else if (w.closed && infinite_path_profile(*q).has_left_infinite) {
            // A finite preinjective component of an infinite quiver closes off at
            // pseudo-projective cells: a wing whose height is its number of τ-layers.
            long lo = 0, hi = 0;
            for (const auto& c : w.cells) lo = std::min(lo, c.power), hi = std::max(hi, c.power);
            w.shape.tag = ShapeTag::Wing;
            w.shape.wing = static_cast<std::size_t>(hi - lo + 1);
            w.shape.certificate = "finite preinjective wing with " + std::to_string(w.cells.size()) + " cells";
        } else {
            w.shape.tag = ShapeTag::NminusQop;
            w.shape.certificate = w.closed ? "finite component with " + std::to_string(w.cells.size()) + " cells"
                                           : "right-most section of injectives; embeds in NminusQop";
        }
    } else {
        const Rep& m = std::get<RegularSeed>(seed).rep;
        if (m.is_zero()) throw ArqError("BadSeed", "zero representation");
        w = knit_regular(m, depth);
        w.shape = component_shape(q, m, depth);
    }
    return w;
}

std::optional<ShapeTag> uniform_regular_shape(const QuiverPtr& q) {
    auto cls = classify_quiver(*q);
    using T = QuiverClass::Tag;
    if (cls.tag == T::FiniteDynkin) return std::nullopt;
    if (cls.tag == T::FiniteEuclidean) return ShapeTag::Tube;
    if (cls.tag == T::FiniteWild) return ShapeTag::ZAinf;
    auto prof = infinite_path_profile(*q);
    if (!prof.has_left_infinite && !prof.has_right_infinite) return ShapeTag::ZAinf;
    if (cls.tag == T::InfDynkin && cls.name == "D_inf")
        return prof.has_left_infinite ? ShapeTag::NAinf : ShapeTag::NminusAinf;
    if (cls.tag == T::InfDynkin && cls.name == "A_biinf") return std::nullopt;
    // All tails eventually pointing outward (resp. inward): every infinite
    // acyclic walk in that direction is an almost-path.
    bool all_out = q->num_tails() > 0, all_in = q->num_tails() > 0;
    for (std::size_t t = 0; t < q->num_tails(); ++t) {
        auto d = eventual_dir(*q, static_cast<int>(t));
        all_out = all_out && d == Dir::Out;
        all_in = all_in && d == Dir::In;
    }
    if (all_out) return ShapeTag::NminusAinf;
    if (all_in) return ShapeTag::NAinf;
    return std::nullopt;
}

Shape component_shape(const QuiverPtr& q, const Rep& m, std::size_t depth) {
    if (!is_indecomposable(m)) throw ArqError("NotIndecomposable", "component_shape needs an indecomposable");
    Shape s;
    // (a) preprojective / preinjective by τ-iteration.
    {
        Rep cur = m;
        for (std::size_t k = 0; k <= depth; ++k) {
            if (is_projective(cur)) {
                s.tag = ShapeTag::NQop;
                s.certificate = "preprojective: τ^" + std::to_string(k) + " M is projective";
                return s;
            }
            if (!cur.finite_dimensional() && k > 0) break;
            auto t = ar_translate(cur, Direction::DTr);
            if (!t.value || t.is_pseudo) break;
            cur = *t.value;
        }
        cur = m;
        for (std::size_t k = 0; k <= depth && cur.finite_dimensional(); ++k) {
            if (is_injective(cur)) {
                s.tag = ShapeTag::NminusQop;
                s.certificate = "preinjective: τ^-" + std::to_string(k) + " M is injective";
                return s;
            }
            auto t = ar_translate(cur, Direction::TrD);
            if (!t.value) break;
            cur = *t.value;
        }
    }
    // (b) exact answer on A∞∞ through the orbit sets.
    Rep named_m = m;
    if (!named_m.info().string) recognize(named_m);
    if (is_type_a_biinf(*q) && named_m.info().string) {
        auto tag = orbit_classify(q, *named_m.info().string);
        if (tag.side) {
            s = side_shape(q, *tag.side);
            return s;
        }
    }
    // (c) explore the component and look for boundary cells.
    ComponentWindow w = knit_regular(m, depth);
    bool pseudo = false, inf = false;
    for (const auto& c : w.cells) {
        pseudo = pseudo || c.pseudo_projective;
        inf = inf || c.infinite_dimensional;
    }
    if (pseudo && inf) {
        // A wing is finite: grow until it closes.
        std::size_t d = depth;
        while (!w.closed && d < 256) w = knit_regular(m, d *= 2);
        s.tag = w.cells.size() == 1 ? ShapeTag::Trivial : ShapeTag::Wing;
        s.wing = triangular_root(w.cells.size());
        s.certificate = "closed component with " + std::to_string(w.cells.size()) +
                        " cells containing pseudo-projective and infinite dimensional members";
        return s;
    }
    if (pseudo) {
        s.tag = ShapeTag::NAinf;
        s.certificate = "pseudo-projective member found, no infinite dimensional member";
        return s;
    }
    if (inf) {
        s.tag = ShapeTag::NminusAinf;
        s.certificate = "infinite dimensional member found, no pseudo-projective member";
        return s;
    }
    if (auto u = uniform_regular_shape(q)) {
        s.tag = *u;
        s.certificate = "every regular component of this quiver has this shape";
        return s;
    }
    s.tag = ShapeTag::UndeterminedBeyondDepth;
    s.certificate = "no boundary cell within depth " + std::to_string(depth);
    return s;
}

Census regular_census(const QuiverPtr& q) {
    auto cls = classify_quiver(*q);
    using T = QuiverClass::Tag;
    Census c;
    auto prof = infinite_path_profile(*q);
    switch (cls.tag) {
        case T::FiniteDynkin:
            c.regular = 0;
            c.justification = "finite Dynkin type: every indecomposable is preprojective";
            return c;
        case T::FiniteEuclidean:
            c.breakdown.push_back({ShapeTag::Tube, std::nullopt});
            c.justification = "Euclidean type: infinitely many homogeneous tubes";
            return c;
        case T::FiniteWild:
            c.breakdown.push_back({ShapeTag::ZAinf, std::nullopt});
            c.justification = "finite wild type: infinitely many regular components of shape ZAinf";
            return c;
        case T::InfDynkin: break;
        case T::InfiniteGeneral: {
            ShapeTag t = ShapeTag::ZAinf;
            std::string why = "no infinite path";
            if (prof.has_left_infinite && prof.has_right_infinite) {
                t = ShapeTag::Wing;
                why = "left and right infinite paths";
            } else if (prof.has_left_infinite) {
                t = ShapeTag::NAinf;
                why = "left but no right infinite paths";
            } else if (prof.has_right_infinite) {
                t = ShapeTag::NminusAinf;
                why = "right but no left infinite paths";
            }
            c.breakdown.push_back({t, std::nullopt});
            c.justification = "infinite, not of infinite Dynkin type, " + why + ": infinitely many regular components of shape " + to_string(t);
            return c;
        }
    }
    if (cls.name == "A_inf") {
        c.regular = 0;
        c.justification = "type A_inf: only preprojective and preinjective components";
        return c;
    }
    if (cls.name == "D_inf") {
        ShapeTag t = prof.has_left_infinite ? ShapeTag::NAinf : prof.has_right_infinite ? ShapeTag::NminusAinf : ShapeTag::ZAinf;
        c.regular = 1;
        c.breakdown.push_back({t, 1});
        c.justification = "type D_inf: exactly one regular component, shape by infinite path profile";
        return c;
    }
    // A∞∞: the components containing O_R and O_L.
    if (is_double_infinite_path(q)) {
        c.regular = 1;
        c.breakdown.push_back({ShapeTag::ZAinf, 1});
        c.justification = "double infinite path: a unique regular component of shape ZAinf";
        return c;
    }
    std::map<ShapeTag, std::size_t> count;
    std::vector<ShapeTag> order;
    for (StringSide side : {StringSide::R, StringSide::L}) {
        Shape s = side_shape(q, side);
        if (!count.count(s.tag)) order.push_back(s.tag);
        ++count[s.tag];
    }
    c.regular = 2;
    for (auto t : order) c.breakdown.push_back({t, count[t]});
    c.justification = "type A_biinf: the regular components containing O_R and O_L";
    return c;
}

bool is_left_infinite_path(const QuiverPtr& q) {
    auto cls = classify_quiver(*q);
    if (cls.tag != QuiverClass::Tag::InfDynkin || cls.name != "A_inf") return false;
    LineModel lm(q);
    // Every edge points towards the end vertex.
    long hi = lm.structural_hi() + static_cast<long>(lm.period_hi()) + 1;
    for (long c = *lm.lo(); c < hi; ++c)
        if (lm.right_edge(c)) return false;
    return true;
}

bool is_double_infinite_path(const QuiverPtr& q) {
    auto cls = classify_quiver(*q);
    if (cls.tag != QuiverClass::Tag::InfDynkin || cls.name != "A_biinf") return false;
    LineModel lm(q);
    long lo = lm.structural_lo() - static_cast<long>(lm.period_lo()) - 1;
    long hi = lm.structural_hi() + static_cast<long>(lm.period_hi()) + 1;
    bool first = lm.right_edge(lo);
    for (long c = lo; c < hi; ++c)
        if (lm.right_edge(c) != first) return false;
    return true;
}

ARCapabilities ar_capabilities(const QuiverPtr& q) {
    if (!is_connected(*q)) throw ArqError("Disconnected", "quiver is not connected");
    auto prof = infinite_path_profile(*q);
    ARCapabilities c;
    c.left = !prof.has_right_infinite;
    c.right = !prof.has_left_infinite || is_left_infinite_path(q) || is_double_infinite_path(q);
    c.both = c.left && c.right;
    return c;
}

std::string export_dot(const ComponentWindow& w, const std::string& title) {
    std::ostringstream o;
    o << "digraph \"" << title << "\" {\n";
    if (!w.cells.empty()) o << "  rankdir=LR;\n";
    for (const auto& c : w.cells) {
        std::string dim = c.dim ? std::to_string(*c.dim) : "∞";
        o << "  \"" << c.id() << "\" [label=\"" << c.label() << "\\n" << dim << "\"];\n";
    }
    for (const auto& a : w.arrows)
        for (std::size_t k = 0; k < a.multiplicity; ++k)
            o << "  \"" << w.cells[a.from].id() << "\" -> \"" << w.cells[a.to].id() << "\";\n";
    for (const auto& [x, tx] : w.tau_links)
        o << "  \"" << w.cells[x].id() << "\" -> \"" << w.cells[tx].id() << "\" [style=dashed, constraint=false];\n";
    o << "}\n";
    return o.str();
}

}  // namespace arq
