#include "arq/derived.hpp"

#include <map>

#include "arq/errors.hpp"

namespace arq {

namespace {

/// The single vertex supporting a one-dimensional top (resp. socle).
std::optional<Vertex> single_vertex(const Rep& r) {
    auto s = r.support();
    if (s.size() != 1 || r.dim_at(s.front()) != 1) return std::nullopt;
    return s.front();
}

std::optional<Vertex> projective_vertex(const Rep& m) {
    if (m.info().kind == RepKind::Proj && m.info().vertex) return m.info().vertex;
    if (!is_projective(m)) return std::nullopt;
    return single_vertex(rad_top_soc(m).top);
}

std::optional<Vertex> injective_vertex(const Rep& m) {
    if (m.info().kind == RepKind::Inj && m.info().vertex) return m.info().vertex;
    if (!m.finite_dimensional() || !is_injective(m)) return std::nullopt;
    return single_vertex(rad_top_soc(m).soc);
}

std::vector<Rep> summands_of(const Rep& m) {
    if (m.is_zero()) return {};
    auto parts = decompose(m);
    for (auto& p : parts) {
        // Prefer the canonical family member, so that names read P_x / I_x.
        if (auto x = projective_vertex(p)) p = projective(m.quiver(), *x);
        else if (auto y = injective_vertex(p)) p = injective(m.quiver(), *y);
        else p = named(p);
    }
    return parts;
}

/// I_x / S_x as a representation.
Rep injective_mod_socle(const Rep& ix, const Vertex& x) {
    const auto& wq = ix.wq();
    std::vector<Matrix> bases;
    for (std::size_t i = 0; i < wq.size(); ++i)
        bases.push_back(wq.vertex(i) == x ? Matrix::identity(ix.dim(i)) : Matrix(ix.dim(i), 0));
    return quotient_rep(ix, bases).first;
}

}  // namespace

std::string DerivedObject::label() const {
    std::string l = rep.name().empty() ? describe(rep) : rep.name();
    if (shift != 0) l += "[" + std::to_string(shift) + "]";
    return l;
}

bool same_object(const DerivedObject& a, const DerivedObject& b) {
    return a.shift == b.shift && is_isomorphic(a.rep, b.rep);
}

Triangle Triangle::shifted(int k) const {
    Triangle t = *this;
    t.x = x.shifted(k);
    t.z = z.shifted(k);
    for (auto& o : t.y) o = o.shifted(k);
    return t;
}

std::string to_string(Triangle::Family f) { return f == Triangle::Family::FromASS ? "FromASS" : "Connecting"; }

std::string to_string(DerivedUnavailable u) {
    switch (u) {
        case DerivedUnavailable::PseudoProjective: return "PseudoProjective";
        case DerivedUnavailable::NotInQPlus: return "NotInQPlus";
        case DerivedUnavailable::InfiniteDimStart: return "InfiniteDimStart";
    }
    return "?";
}

Triangle connecting_triangle(const QuiverPtr& q, const Vertex& x, int shift) {
    if (!q_plus(*q).vertices.contains(x))
        throw ArqError("NotInQPlus", "vertex " + q->vertex_name(x) + " ends a left infinite path");
    Triangle t;
    t.family = Triangle::Family::Connecting;
    Rep ix = injective(q, x);
    Rep px = projective(q, x);
    t.x = {ix, shift};
    for (auto& s : summands_of(injective_mod_socle(ix, x))) t.y.push_back({s, shift});
    for (auto& s : summands_of(rad_top_soc(px).rad)) t.y.push_back({s, shift + 1});
    t.z = {px, shift + 1};
    return t;
}

TriangleResult derived_ar_triangle(const DerivedObject& obj, Side side) {
    const Rep& m = obj.rep;
    if (!is_indecomposable(m)) throw ArqError("NotIndecomposable", "triangle endpoints must be indecomposable");
    const QuiverPtr& q = m.quiver();
    TriangleResult res;
    auto from_ass = [&](const ARSequence& s, int shift) {
        Triangle t;
        t.family = Triangle::Family::FromASS;
        t.x = {named(s.left), shift};
        for (const auto& part : s.middle) t.y.push_back({named(part.rep), shift});
        t.z = {named(s.right), shift};
        t.sequence = s;
        res.triangle = std::move(t);
    };
    if (side == Side::EndingAt) {
        if (auto x = projective_vertex(m)) {
            if (!q_plus(*q).vertices.contains(*x)) {
                res.reason = DerivedUnavailable::NotInQPlus;
                res.detail = "M = P_" + q->vertex_name(*x) + " and the vertex ends a left infinite path";
                return res;
            }
            res.triangle = connecting_triangle(q, *x, obj.shift - 1);
            return res;
        }
        auto a = almost_split(m, Side::EndingAt);
        if (!a.sequence) {
            res.reason = DerivedUnavailable::PseudoProjective;
            res.detail = a.detail.empty() ? "DTr M is infinite dimensional" : a.detail;
            return res;
        }
        from_ass(*a.sequence, obj.shift);
        return res;
    }
    if (!m.finite_dimensional()) {
        res.reason = DerivedUnavailable::InfiniteDimStart;
        res.detail = "M is infinite dimensional";
        return res;
    }
    if (auto x = injective_vertex(m)) {
        // A finite dimensional I_x forces x ∈ Q⁺; the check guards the invariant.
        if (!q_plus(*q).vertices.contains(*x)) {
            res.reason = DerivedUnavailable::NotInQPlus;
            res.detail = "M = I_" + q->vertex_name(*x) + " and the vertex ends a left infinite path";
            return res;
        }
        res.triangle = connecting_triangle(q, *x, obj.shift);
        return res;
    }
    auto a = almost_split(m, Side::StartingAt);
    if (!a.sequence) throw ArqError("Internal", "no almost split sequence at a finite dimensional non-injective: " + a.detail);
    from_ass(*a.sequence, obj.shift);
    return res;
}

bool derived_irr_shift(const Rep& m, const Rep& n) {
    if (!m.finite_dimensional() || !is_indecomposable(m)) return false;
    auto x = injective_vertex(m);
    if (!x || !q_plus(*m.quiver()).vertices.contains(*x)) return false;
    if (n.is_zero() || !is_indecomposable(n)) return false;
    Rep rad = rad_top_soc(projective(m.quiver(), *x)).rad;
    for (const auto& s : summands_of(rad))
        if (same_dimension_vector(s, n) && is_isomorphic(s, n)) return true;
    return false;
}

std::size_t derived_hom_dim(const DerivedObject& x, const DerivedObject& y) {
    if (y.shift == x.shift) return hom_ext_dims(x.rep, y.rep).hom;
    if (y.shift == x.shift + 1) return hom_ext_dims(x.rep, y.rep).ext;
    return 0;
}

ComponentWindow connecting_window(const QuiverPtr& q, std::size_t depth) {
    if (!is_connected(*q)) throw ArqError("Disconnected", "the connecting component needs a connected quiver");
    auto qp = q_plus(*q);
    Window vw = q->structural_window();
    for (auto& d : vw.depth) d += depth + 1;
    for (const auto& c : qp.components) vw = Window::join(vw, c.window);
    auto wq = q->window_quiver(vw);

    ComponentWindow w = knit_component(q, PreprojectiveSeed{}, depth, vw);
    w.kind = ComponentWindow::Kind::Connecting;
    w.closed = false;
    std::map<int, std::size_t> proj_cell, inj_cell;  // orbit (window vertex) → cell
    for (std::size_t i = 0; i < w.cells.size(); ++i)
        if (w.cells[i].power == 0) proj_cell[w.cells[i].orbit] = i;

    for (std::size_t k = 0; k < qp.components.size(); ++k) {
        ComponentWindow pi = knit_component(q, PreinjectiveSeed{k}, depth, vw);
        std::size_t base = w.cells.size();
        for (auto c : pi.cells) {
            c.power -= 1;
            c.shift = -1;
            if (c.power == -1) inj_cell[c.orbit] = w.cells.size();
            w.cells.push_back(std::move(c));
        }
        for (const auto& a : pi.arrows) w.arrows.push_back({a.from + base, a.to + base, a.multiplicity});
        for (const auto& [x, y] : pi.tau_links) w.tau_links.emplace_back(x + base, y + base);
    }
    // Gluing: d_xy arrows I_x[−1] → P_y, and τP_x = I_x[−1] for x ∈ Q⁺.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> glue;
    for (const auto& a : wq->arrows()) {
        auto i = inj_cell.find(static_cast<int>(a.src));
        auto p = proj_cell.find(static_cast<int>(a.dst));
        if (i != inj_cell.end() && p != proj_cell.end()) ++glue[{i->second, p->second}];
    }
    for (const auto& [k, m] : glue) w.arrows.push_back({k.first, k.second, m});
    for (const auto& [orbit, i] : inj_cell)
        if (auto p = proj_cell.find(orbit); p != proj_cell.end()) w.tau_links.emplace_back(p->second, i);

    auto prof = infinite_path_profile(*q);
    if (!prof.has_left_infinite && !prof.has_right_infinite) {
        w.shape = {ShapeTag::ZQop, 0, "no infinite path: the connecting component is ZQop"};
    } else if (!prof.has_left_infinite) {
        w.shape = {ShapeTag::NminusQop, 0, "only right infinite paths: the connecting component is bounded on the right"};
    } else if (!prof.has_right_infinite) {
        w.shape = {ShapeTag::ZQop, 0, "only left infinite paths: a right stable translation subquiver of ZQop"};
    } else {
        w.shape = {ShapeTag::ZQop, 0, "infinite paths on both sides: a translation subquiver of ZQop"};
    }
    return w;
}

DerivedCapabilities derived_capabilities(const QuiverPtr& q) {
    if (!is_connected(*q)) throw ArqError("Disconnected", "derived capabilities need a connected quiver");
    auto prof = infinite_path_profile(*q);
    DerivedCapabilities c;
    c.left_ast = !prof.has_right_infinite;
    c.right_ast = !prof.has_left_infinite;
    c.ast = c.left_ast && c.right_ast;
    return c;
}

}  // namespace arq
