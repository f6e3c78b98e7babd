#include "arq/rep.hpp"

#include <algorithm>
#include <deque>
#include <climits>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "arq/errors.hpp"

namespace arq {

std::string to_string(RepKind k) {
    switch (k) {
        case RepKind::Window: return "window";
        case RepKind::Proj: return "proj";
        case RepKind::Inj: return "inj";
        case RepKind::Simple: return "simple";
        case RepKind::String: return "string";
        case RepKind::DInf: return "dinf";
        case RepKind::Kronecker: return "kronecker";
        case RepKind::Thin: return "thin";
    }
    return "";
}

std::string subscript(const std::string& s) {
    // Multi-byte UTF-8 symbols such as ∞ count as one character.
    std::size_t chars = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++chars;
    return chars <= 1 ? s : "{" + s + "}";
}

// ---------------------------------------------------------------------------
// Rep basics

Rep::Rep(QuiverPtr q, const Window& w) : q_(std::move(q)) {
    Window win = Window::join(w, q_->structural_window());
    wq_ = q_->window_quiver(win);
    dims_.assign(wq_->size(), 0);
    maps_.assign(wq_->arrows().size(), Matrix());
    cont_.assign(q_->num_tails(), false);
}

std::size_t Rep::dim_at(const Vertex& v) const {
    if (auto i = wq_->index(v)) return dims_[*i];
    if (!cont(v.tail)) return 0;
    return dims_[wq_->boundary(v.tail)];
}

bool Rep::infinite_along(int t) const { return cont(t) && dims_[wq_->boundary(t)] > 0; }

bool Rep::finite_dimensional() const {
    for (std::size_t t = 0; t < cont_.size(); ++t)
        if (infinite_along(static_cast<int>(t))) return false;
    return true;
}

std::optional<std::size_t> Rep::total_dim() const {
    if (!finite_dimensional()) return std::nullopt;
    std::size_t s = 0;
    for (auto d : dims_) s += d;
    return s;
}

bool Rep::is_zero() const {
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
}

void Rep::set_dim(std::size_t i, std::size_t d) {
    dims_[i] = d;
    const auto& arrows = wq_->arrows();
    for (std::size_t a : wq_->out(i)) maps_[a] = Matrix(dims_[arrows[a].dst], d);
    for (std::size_t a : wq_->in(i)) maps_[a] = Matrix(d, dims_[arrows[a].src]);
}

void Rep::set_map(std::size_t a, Matrix m) {
    const auto& ar = wq_->arrows()[a];
    if (m.rows() != dims_[ar.dst] || m.cols() != dims_[ar.src])
        throw ArqError("InvalidRep", "structure map has the wrong shape");
    maps_[a] = reduce(field(), m);
}

void Rep::validate() const {
    const auto& arrows = wq_->arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (maps_[a].rows() != dims_[arrows[a].dst] || maps_[a].cols() != dims_[arrows[a].src])
            throw ArqError("InvalidRep", "structure map " + q_->arrow_label(arrows[a].id) + " has the wrong shape");
}

std::vector<Vertex> Rep::support() const {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        if (dims_[i] > 0) s.push_back(wq_->vertex(i));
    return s;
}

Rep Rep::extended(const Window& w) const {
    Window target = Window::join(window(), w);
    if (target.depth == window().depth) return *this;
    Rep r(q_, target);
    r.info_ = info_;
    r.cont_ = cont_;
    const auto& nw = r.wq();
    for (std::size_t i = 0; i < nw.size(); ++i) r.dims_[i] = dim_at(nw.vertex(i));
    const auto& arrows = nw.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (auto old = wq_->arrow_index(arrows[a].id)) {
            r.maps_[a] = maps_[*old];
        } else if (r.dims_[arrows[a].src] > 0 && cont(arrows[a].id.tail)) {
            r.maps_[a] = Matrix::identity(r.dims_[arrows[a].src]);
        } else {
            r.maps_[a] = Matrix(r.dims_[arrows[a].dst], r.dims_[arrows[a].src]);
        }
    }
    return r;
}

Rep Rep::truncated(std::size_t extra) const {
    Window w = window();
    for (auto& d : w.depth) d += extra;
    Rep r = extended(w);
    std::fill(r.cont_.begin(), r.cont_.end(), false);
    return r;
}

Rep Rep::trimmed() const {
    Window w = window();
    const Field& f = field();
    for (std::size_t t = 0; t < w.depth.size(); ++t) {
        int ti = static_cast<int>(t);
        std::size_t sd = q_->structural_depth(ti);
        while (w.depth[t] > sd) {
            std::size_t d = w.depth[t];
            std::size_t b = *wq_->index(Vertex::on_tail(ti, d));
            std::size_t p = d == 1 ? *wq_->index(Vertex::core(q_->tail_attach(ti))) : *wq_->index(Vertex::on_tail(ti, d - 1));
            bool droppable;
            if (cont_[t]) {
                const Matrix& e = maps_[*wq_->arrow_index(ArrowId{ti, d - 1})];
                droppable = dims_[b] == dims_[p] && (dims_[b] == 0 || is_invertible(f, e));
            } else {
                droppable = dims_[b] == 0;
            }
            if (!droppable) break;
            // Remaining outer vertices must also be droppable: check only the boundary
            // since vertices inside are checked on the following iterations.
            w.depth[t] = d - 1;
            if (cont_[t] && dims_[b] == 0) break;
        }
    }
    if (w.depth == window().depth) return *this;
    Rep r(q_, w);
    r.info_ = info_;
    r.cont_ = cont_;
    const auto& nw = r.wq();
    for (std::size_t i = 0; i < nw.size(); ++i) r.dims_[i] = dims_[*wq_->index(nw.vertex(i))];
    for (std::size_t a = 0; a < nw.arrows().size(); ++a) r.maps_[a] = maps_[*wq_->arrow_index(nw.arrows()[a].id)];
    for (std::size_t t = 0; t < r.cont_.size(); ++t)
        if (r.dims_[nw.boundary(static_cast<int>(t))] == 0) r.cont_[t] = false;
    return r;
}

Matrix Rep::path_map(const WindowQuiver::WPath& p) const {
    Matrix m = Matrix::identity(dims_[p.src]);
    for (std::size_t a : p.arrows) m = multiply(field(), maps_[a], m);
    return m;
}

// ---------------------------------------------------------------------------
// Families

namespace {

/// Window on which path counts from/to x are stable beyond every tail boundary.
Window path_window(const Quiver& q, const Vertex& x) {
    Window w = Window::join(q.structural_window(), q.window_of(x));
    for (std::size_t t = 0; t < w.depth.size(); ++t)
        w.depth[t] += q.spec().tails[t].orientation.period.size() + 1;
    return w;
}

std::size_t path_index(const std::vector<WindowQuiver::WPath>& ps, const std::vector<std::size_t>& arrows) {
    for (std::size_t k = 0; k < ps.size(); ++k)
        if (ps[k].arrows == arrows) return k;
    throw ArqError("Internal", "path not found");
}

void finish_family(Rep& r, RepKind kind, const Vertex& x, const std::string& letter) {
    for (std::size_t t = 0; t < r.quiver()->num_tails(); ++t)
        r.set_cont(static_cast<int>(t), r.dim(r.wq().boundary(static_cast<int>(t))) > 0);
    r = r.trimmed();
    r.info().kind = kind;
    r.info().vertex = x;
    r.info().indecomposable = true;
    r.info().name = letter + "_" + subscript(r.quiver()->vertex_name(x));
}

}  // namespace

Rep projective(const QuiverPtr& q, const Vertex& x) {
    Rep r(q, path_window(*q, x));
    const auto& wq = r.wq();
    std::size_t xi = *wq.index(x);
    for (std::size_t z = 0; z < wq.size(); ++z) r.set_dim(z, wq.paths(xi, z).size());
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        Matrix m(r.dim(ar.dst), r.dim(ar.src));
        const auto& from = wq.paths(xi, ar.src);
        const auto& to = wq.paths(xi, ar.dst);
        for (std::size_t k = 0; k < from.size(); ++k) {
            auto ext = from[k].arrows;
            ext.push_back(a);
            m(path_index(to, ext), k) = 1;
        }
        r.set_map(a, m);
    }
    finish_family(r, RepKind::Proj, x, "P");
    return r;
}

Rep injective(const QuiverPtr& q, const Vertex& x) {
    Rep r(q, path_window(*q, x));
    const auto& wq = r.wq();
    std::size_t xi = *wq.index(x);
    for (std::size_t z = 0; z < wq.size(); ++z) r.set_dim(z, wq.paths(z, xi).size());
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        Matrix m(r.dim(ar.dst), r.dim(ar.src));
        const auto& from = wq.paths(ar.src, xi);
        const auto& to = wq.paths(ar.dst, xi);
        for (std::size_t k = 0; k < from.size(); ++k) {
            if (from[k].arrows.empty() || from[k].arrows.front() != a) continue;
            std::vector<std::size_t> rest(from[k].arrows.begin() + 1, from[k].arrows.end());
            m(path_index(to, rest), k) = 1;
        }
        r.set_map(a, m);
    }
    finish_family(r, RepKind::Inj, x, "I");
    return r;
}

Rep simple(const QuiverPtr& q, const Vertex& x) {
    Rep r(q, q->window_of(x));
    r.set_dim(*r.wq().index(x), 1);
    r.info().kind = RepKind::Simple;
    r.info().vertex = x;
    r.info().indecomposable = true;
    r.info().name = "S_" + subscript(q->vertex_name(x));
    return r;
}

Rep standard_rep(const QuiverPtr& q, StandardKind kind, const Vertex& x) {
    switch (kind) {
        case StandardKind::Proj: return projective(q, x);
        case StandardKind::Inj: return injective(q, x);
        case StandardKind::Simple: return simple(q, x);
    }
    return simple(q, x);
}

Rep thin_rep(const QuiverPtr& q, const Window& w, const std::vector<Vertex>& support,
             const std::vector<int>& infinite_tails) {
    Window win = w;
    for (const auto& v : support) win = Window::join(win, q->window_of(v));
    Rep r(q, win);
    const auto& wq = r.wq();
    for (const auto& v : support) r.set_dim(*wq.index(v), 1);
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        if (r.dim(ar.src) == 1 && r.dim(ar.dst) == 1) r.set_map(a, Matrix::identity(1));
    }
    for (int t : infinite_tails) {
        if (r.dim(wq.boundary(t)) == 0) throw ArqError("InvalidRep", "infinite tail not reached by the support");
        r.set_cont(t, true);
    }
    r.info().kind = RepKind::Thin;
    return r;
}

Rep string_rep(const QuiverPtr& q, const StringSpec& s) {
    std::optional<LineModel> lm;
    try {
        lm.emplace(q);
    } catch (const ArqError&) {
        throw ArqError("InvalidString", "string representations need a quiver of type A");
    }
    if (s.lo && s.hi && *s.lo > *s.hi) throw ArqError("InvalidString", "empty interval");
    if ((s.lo && !lm->in_range(*s.lo)) || (s.hi && !lm->in_range(*s.hi)))
        throw ArqError("InvalidString", "string leaves the quiver");
    if ((!s.lo && lm->lo()) || (!s.hi && lm->hi())) throw ArqError("InvalidString", "string leaves the quiver");
    std::vector<int> inf_tails;
    Window w = q->structural_window();
    // An infinite end must be a right infinite path (arrows pointing outward).
    if (!s.hi) {
        long from = std::max(lm->structural_hi(), s.lo ? *s.lo : lm->structural_hi());
        for (long c = from; c < from + static_cast<long>(lm->period_hi()); ++c)
            if (!lm->right_edge(c)) throw ArqError("InvalidString", "illegal ray end: the string would contain a left infinite path or infinitely many sinks");
        inf_tails.push_back(0);
        Vertex v = lm->vertex_at(from);
        w = Window::join(w, q->window_of(v));
    }
    if (!s.lo) {
        long from = std::min(lm->structural_lo(), s.hi ? *s.hi : lm->structural_lo());
        for (long c = from - static_cast<long>(lm->period_lo()); c < from; ++c)
            if (lm->right_edge(c)) throw ArqError("InvalidString", "illegal ray end: the string would contain a left infinite path or infinitely many sinks");
        inf_tails.push_back(1);
        w = Window::join(w, q->window_of(lm->vertex_at(from)));
    }
    long a = s.lo ? *s.lo : lm->structural_lo() - 1;
    long b = s.hi ? *s.hi : lm->structural_hi() + 1;
    if (!s.lo && s.hi) a = std::min(a, *s.hi);
    if (!s.hi && s.lo) b = std::max(b, *s.lo);
    std::vector<Vertex> support;
    for (long c = a; c <= b; ++c) support.push_back(lm->vertex_at(c));
    Rep r = thin_rep(q, w, support, inf_tails);
    r.info().kind = RepKind::String;
    r.info().string = s;
    r.info().indecomposable = true;
    r = r.trimmed();
    r.info().name = describe(r);
    return r;
}

Rep dinf_rep(const QuiverPtr& q, long i, std::optional<long> j) {
    std::optional<DInfModel> dm;
    try {
        dm.emplace(q);
    } catch (const ArqError&) {
        throw ArqError("WrongType", "N_{i,j} is only defined over D_inf quivers");
    }
    if (i < 0 || (j && *j < 1)) throw ArqError("InvalidArgument", "N_{i,j} needs i >= 0 and j >= 1");
    if (!j && q->spec().tails[0].orientation.eventual() != Dir::Out)
        throw ArqError("NoInfinitePath", "N_{i,inf} needs a right infinite path");
    long last = j ? i + 1 + *j : i + 2;
    Window w = q->structural_window();
    w = Window::join(w, q->window_of(dm->vertex_at(last + 1)));
    Rep r(q, w);
    const auto& wq = r.wq();
    auto dim_of = [&](long c) -> std::size_t {
        if (c <= 1) return 1;
        if (c <= i + 1) return 2;
        if (!j || c <= i + 1 + *j) return 1;
        return 0;
    };
    for (std::size_t v = 0; v < wq.size(); ++v) r.set_dim(v, dim_of(dm->coord(wq.vertex(v))));
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        long s = dm->coord(wq.vertex(ar.src)), d = dm->coord(wq.vertex(ar.dst));
        std::size_t ds = r.dim(ar.src), dd = r.dim(ar.dst);
        if (ds == 0 || dd == 0) continue;
        Matrix m(dd, ds);
        if (ds == dd) {
            m = Matrix::identity(ds);
        } else if (std::min(s, d) <= 1) {
            // Leaf maps: leaf 0 is the line (1,0), leaf 1 the line (0,1).
            long leaf = std::min(s, d);
            if (ds == 1) {  // into vertex 2
                m(leaf == 0 ? 0 : 1, 0) = 1;
            } else {  // out of vertex 2, kernel is the leaf line
                m(0, leaf == 0 ? 1 : 0) = 1;
            }
        } else {
            // Boundary between the 2-run and the 1-run: the line (1,1).
            if (ds == 1) {
                m(0, 0) = 1;
                m(1, 0) = 1;
            } else {
                m(0, 0) = 1;
                m(0, 1) = -1;
            }
        }
        r.set_map(a, m);
    }
    if (!j) r.set_cont(0, true);
    r = r.trimmed();
    r.info().kind = RepKind::DInf;
    r.info().i = i;
    r.info().j = j;
    r.info().indecomposable = true;
    r.info().name = "N_{" + std::to_string(i) + "," + (j ? std::to_string(*j) : std::string("∞")) + "}";
    return r;
}

bool is_kronecker(const Quiver& q) {
    if (q.num_core() != 2 || q.num_tails() != 0 || q.num_core_arrows() != 2) return false;
    return q.source({-1, 0}) == q.source({-1, 1}) && q.target({-1, 0}) == q.target({-1, 1});
}

Rep kronecker_regular(const QuiverPtr& q, const Poly& p_in) {
    if (!is_kronecker(*q)) throw ArqError("WrongQuiver", "M_p needs the Kronecker quiver");
    const Field& f = q->field();
    Poly p = p_in;
    for (auto& c : p) c = f.reduce(c);
    p = poly_monic(f, p);
    long d = poly_degree(p);
    if (d < 1) throw ArqError("ReduciblePolynomial", "polynomial must have positive degree");
    auto verdict = is_irreducible(f, p);
    if (!verdict.irreducible) throw ArqError("ReduciblePolynomial", poly_to_string(p) + " is reducible over " + f.name());
    if (verdict.trusted)
        std::cerr << "warning: irreducibility of " << poly_to_string(p) << " over Q is assumed, not proved\n";
    Rep r(q, q->structural_window());
    auto n = static_cast<std::size_t>(d);
    r.set_dim(0, n);
    r.set_dim(1, n);
    Matrix comp(n, n);
    for (std::size_t k = 1; k < n; ++k) comp(k, k - 1) = 1;
    for (std::size_t k = 0; k < n; ++k) comp(k, n - 1) = f.neg(p[k]);
    r.set_map(0, Matrix::identity(n));
    r.set_map(1, comp);
    r.info().kind = RepKind::Kronecker;
    r.info().poly = p;
    r.info().indecomposable = true;
    r.info().name = "M_{" + poly_to_string(p) + "}";
    return r;
}

// ---------------------------------------------------------------------------
// Dimension vectors, restriction, duality

DimVector dim_vector(const Rep& m, const Window& w) {
    DimVector dv;
    dv.window = Window::join(w, m.quiver()->structural_window());
    WindowQuiver wq(*m.quiver(), dv.window);
    for (std::size_t i = 0; i < wq.size(); ++i) dv.values.emplace_back(wq.vertex(i), m.dim_at(wq.vertex(i)));
    for (std::size_t t = 0; t < m.quiver()->num_tails(); ++t) {
        int ti = static_cast<int>(t);
        std::size_t onset = std::max(dv.window.depth[t], m.window().depth[t]) + 1;
        dv.tails.emplace_back(onset, std::vector<std::size_t>{m.dim_at(Vertex::on_tail(ti, onset))});
    }
    return dv;
}

DimVector dim_vector(const Rep& m) { return dim_vector(m, m.window()); }

bool same_dimension_vector(const Rep& a, const Rep& b) {
    Window w = Window::join(a.window(), b.window());
    WindowQuiver wq(*a.quiver(), w);
    for (std::size_t i = 0; i < wq.size(); ++i)
        if (a.dim_at(wq.vertex(i)) != b.dim_at(wq.vertex(i))) return false;
    for (std::size_t t = 0; t < a.quiver()->num_tails(); ++t) {
        Vertex beyond = Vertex::on_tail(static_cast<int>(t), w.depth[t] + 1);
        if (a.dim_at(beyond) != b.dim_at(beyond)) return false;
    }
    return true;
}

std::string dim_vector_string(const Rep& m) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    const auto& wq = m.wq();
    for (std::size_t i = 0; i < wq.size(); ++i) {
        if (m.dim(i) == 0) continue;
        if (!first) os << ",";
        first = false;
        os << m.quiver()->vertex_name(wq.vertex(i)) << ":" << m.dim(i);
    }
    for (std::size_t t = 0; t < m.quiver()->num_tails(); ++t)
        if (m.infinite_along(static_cast<int>(t))) os << (first ? "" : ",") << "t" << t << ":" << m.dim(wq.boundary(static_cast<int>(t))) << "…";
    os << "]";
    return os.str();
}

Rep restrict_rep(const Rep& m, const VertexSet& sigma) {
    Rep e = m.extended(sigma.window);
    Rep r(m.quiver(), e.window());
    const auto& wq = r.wq();
    for (std::size_t i = 0; i < wq.size(); ++i)
        if (sigma.contains(wq.vertex(i))) r.set_dim(i, e.dim(i));
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        if (r.dim(ar.src) > 0 && r.dim(ar.dst) > 0) r.set_map(a, e.map(a));
    }
    for (std::size_t t = 0; t < sigma.beyond.size(); ++t) r.set_cont(static_cast<int>(t), e.cont(static_cast<int>(t)) && sigma.beyond[t]);
    r = r.trimmed();
    r.info().name = describe(r);
    return r;
}

Rep dualize(const Rep& m) {
    QuiverPtr op = m.quiver()->opposite();
    Rep r(op, m.window());
    const auto& wq = r.wq();
    for (std::size_t i = 0; i < wq.size(); ++i) r.set_dim(i, m.dim(i));
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) r.set_map(a, m.map(a).transpose());
    for (std::size_t t = 0; t < op->num_tails(); ++t) r.set_cont(static_cast<int>(t), m.cont(static_cast<int>(t)));
    r.info() = m.info();
    if (m.info().kind == RepKind::Proj) r.info().kind = RepKind::Inj;
    else if (m.info().kind == RepKind::Inj) r.info().kind = RepKind::Proj;
    r.info().name = describe(r);
    return r;
}

// ---------------------------------------------------------------------------
// Radical, top, socle

Rep subrep(const Rep& m, const std::vector<Matrix>& bases) {
    Rep r(m.quiver(), m.window());
    const auto& wq = r.wq();
    const Field& f = m.field();
    for (std::size_t i = 0; i < wq.size(); ++i) r.set_dim(i, bases[i].cols());
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        if (r.dim(ar.src) == 0 || r.dim(ar.dst) == 0) continue;
        auto x = solve(f, bases[ar.dst], multiply(f, m.map(a), bases[ar.src]));
        if (!x) throw ArqError("InvalidRep", "subspaces are not a subrepresentation");
        r.set_map(a, *x);
    }
    return r;
}

RadTopSoc rad_top_soc(const Rep& m_in) {
    Window w = m_in.window();
    for (auto& d : w.depth) d += 1;
    Rep m = m_in.extended(w);
    const auto& wq = m.wq();
    const Field& f = m.field();
    std::vector<Matrix> rad(wq.size()), soc(wq.size());
    Rep top(m.quiver(), m.window());
    for (std::size_t i = 0; i < wq.size(); ++i) {
        Matrix images(m.dim(i), 0);
        for (std::size_t a : wq.in(i)) images = Matrix::hstack(images, m.map(a));
        rad[i] = column_space(f, images);
        Matrix outs(0, m.dim(i));
        for (std::size_t a : wq.out(i)) outs = Matrix::vstack(outs, m.map(a));
        soc[i] = kernel_matrix(f, outs);
        top.set_dim(i, m.dim(i) - rad[i].cols());
    }
    RadTopSoc res{subrep(m, rad), top, subrep(m, soc)};
    for (std::size_t t = 0; t < m.quiver()->num_tails(); ++t) {
        bool constant = m.quiver()->spec().tails[t].orientation.eventual().has_value();
        res.rad.set_cont(static_cast<int>(t), m.cont(static_cast<int>(t)) && constant);
    }
    res.rad = res.rad.trimmed();
    res.top = res.top.trimmed();
    res.soc = res.soc.trimmed();
    res.rad.info().name = describe(res.rad);
    res.top.info().name = describe(res.top);
    res.soc.info().name = describe(res.soc);
    return res;
}

// ---------------------------------------------------------------------------
// Hom spaces

std::pair<Rep, Rep> common_window(const Rep& a, const Rep& b, std::size_t extra) {
    Window w = Window::join(a.window(), b.window());
    for (auto& d : w.depth) d += extra;
    return {a.extended(w), b.extended(w)};
}

std::vector<Morphism> hom_on_window(const Rep& m, const Rep& n) {
    const auto& wq = m.wq();
    const Field& f = m.field();
    // Unknown blocks only where both spaces are nonzero.
    std::vector<std::size_t> offset(wq.size(), 0);
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < wq.size(); ++i) {
        offset[i] = unknowns;
        unknowns += n.dim(i) * m.dim(i);
    }
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        std::size_t y = ar.src, z = ar.dst;
        // N(a) f_y - f_z M(a) = 0, an (n_z x m_y) system.
        if (n.dim(z) == 0 || m.dim(y) == 0) continue;
        if (n.dim(y) * m.dim(y) == 0 && n.dim(z) * m.dim(z) == 0) continue;
        const Matrix& na = n.map(a);
        const Matrix& ma = m.map(a);
        for (std::size_t r = 0; r < n.dim(z); ++r)
            for (std::size_t c = 0; c < m.dim(y); ++c) {
                std::vector<Scalar> row(unknowns);
                bool nonzero = false;
                for (std::size_t k = 0; k < n.dim(y); ++k)
                    if (na(r, k) != 0) {
                        row[offset[y] + k * m.dim(y) + c] = f.add(row[offset[y] + k * m.dim(y) + c], na(r, k));
                        nonzero = true;
                    }
                for (std::size_t k = 0; k < m.dim(z); ++k)
                    if (ma(k, c) != 0) {
                        row[offset[z] + r * m.dim(z) + k] = f.sub(row[offset[z] + r * m.dim(z) + k], ma(k, c));
                        nonzero = true;
                    }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    Matrix sys = rows.empty() ? Matrix(0, unknowns) : Matrix::from_rows(rows, unknowns);
    auto rk = rank_kernel(f, sys);
    std::vector<Morphism> basis;
    for (const auto& v : rk.kernel) {
        Morphism h;
        for (std::size_t i = 0; i < wq.size(); ++i) {
            Matrix b(n.dim(i), m.dim(i));
            for (std::size_t r = 0; r < n.dim(i); ++r)
                for (std::size_t c = 0; c < m.dim(i); ++c) b(r, c) = v[offset[i] + r * m.dim(i) + c];
            h.at.push_back(std::move(b));
        }
        basis.push_back(std::move(h));
    }
    return basis;
}

std::vector<Morphism> hom_space(const Rep& m_in, const Rep& n_in, Rep* m_out, Rep* n_out) {
    auto [m, n] = common_window(m_in, n_in, 1);
    auto basis = hom_on_window(m, n);
    if (m_out) *m_out = m;
    if (n_out) *n_out = n;
    return basis;
}

Morphism compose(const Field& f, const Morphism& g, const Morphism& h) {
    Morphism r;
    for (std::size_t i = 0; i < g.at.size(); ++i) r.at.push_back(multiply(f, g.at[i], h.at[i]));
    return r;
}

bool is_iso_morphism(const Field& f, const Morphism& h) {
    for (const auto& m : h.at)
        if (!is_invertible(f, m)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Presentations

namespace {

bool tail_all_out(const Quiver& q, int t) {
    const auto& o = q.spec().tails[static_cast<std::size_t>(t)].orientation;
    return std::all_of(o.period.begin(), o.period.end(), [](Dir d) { return d == Dir::Out; });
}

/// Standard basis vectors completing the column space of `sub` to the whole space.
std::vector<std::size_t> complement_coordinates(const Field& f, const Matrix& sub, std::size_t n) {
    std::vector<std::size_t> picked;
    Matrix acc = sub;
    std::size_t r = rank(f, acc);
    for (std::size_t k = 0; k < n && r < n; ++k) {
        Matrix e(n, 1);
        e(k, 0) = 1;
        Matrix next = Matrix::hstack(acc, e);
        std::size_t r2 = rank(f, next);
        if (r2 > r) {
            picked.push_back(k);
            acc = std::move(next);
            r = r2;
        }
    }
    return picked;
}

Matrix images_into(const Rep& m, std::size_t i) {
    Matrix images(m.dim(i), 0);
    for (std::size_t a : m.wq().in(i)) images = Matrix::hstack(images, m.map(a));
    return images;
}

}  // namespace

Presentation minimal_presentation(const Rep& m_in) {
    for (std::size_t t = 0; t < m_in.quiver()->num_tails(); ++t)
        if (m_in.infinite_along(static_cast<int>(t)) && !tail_all_out(*m_in.quiver(), static_cast<int>(t)))
            throw ArqError("NotFinitelyPresented",
                           "representation is nonzero along a tail that is not eventually a right infinite path");
    Window w = m_in.window();
    for (auto& d : w.depth) d += 2;
    Rep m = m_in.extended(w);
    const auto& wq = m.wq();
    const Field& f = m.field();
    Presentation pres;
    pres.window = w;
    // Generators: a basis of top(M) lifted by standard basis vectors.
    std::vector<std::size_t> top_idx;
    for (std::size_t i = 0; i < wq.size(); ++i) {
        if (m.dim(i) == 0) continue;
        for (std::size_t k : complement_coordinates(f, images_into(m, i), m.dim(i))) {
            std::vector<Scalar> v(m.dim(i));
            v[k] = 1;
            pres.tops.push_back(wq.vertex(i));
            pres.generators.push_back(v);
            top_idx.push_back(i);
        }
    }
    // P0(z) = ⊕ kQ(x_i, z) and π : P0 → M.
    std::size_t n0 = top_idx.size();
    std::vector<std::vector<std::size_t>> off(wq.size(), std::vector<std::size_t>(n0 + 1, 0));
    std::vector<std::size_t> p0dim(wq.size(), 0);
    for (std::size_t z = 0; z < wq.size(); ++z) {
        for (std::size_t i = 0; i < n0; ++i) {
            off[z][i] = p0dim[z];
            p0dim[z] += wq.paths(top_idx[i], z).size();
        }
        off[z][n0] = p0dim[z];
    }
    std::vector<Matrix> kernel(wq.size());
    for (std::size_t z = 0; z < wq.size(); ++z) {
        Matrix pi(m.dim(z), p0dim[z]);
        for (std::size_t i = 0; i < n0; ++i) {
            const auto& ps = wq.paths(top_idx[i], z);
            Matrix v = Matrix::column_vector(pres.generators[i]);
            for (std::size_t k = 0; k < ps.size(); ++k) pi.set_block(0, off[z][i] + k, multiply(f, m.path_map(ps[k]), v));
        }
        kernel[z] = kernel_matrix(f, pi);
    }
    // P0(a): path u ↦ u·a, block diagonal over the tops.
    auto p0_map = [&](std::size_t a) {
        const auto& ar = wq.arrows()[a];
        Matrix r(p0dim[ar.dst], p0dim[ar.src]);
        for (std::size_t i = 0; i < n0; ++i) {
            const auto& from = wq.paths(top_idx[i], ar.src);
            const auto& to = wq.paths(top_idx[i], ar.dst);
            for (std::size_t k = 0; k < from.size(); ++k) {
                auto ext = from[k].arrows;
                ext.push_back(a);
                for (std::size_t l = 0; l < to.size(); ++l)
                    if (to[l].arrows == ext) r(off[ar.dst][i] + l, off[ar.src][i] + k) = 1;
            }
        }
        return r;
    };
    // Tops of K = ker π give the syzygy generators.
    for (std::size_t y = 0; y < wq.size(); ++y) {
        if (kernel[y].cols() == 0) continue;
        Matrix images(p0dim[y], 0);
        for (std::size_t a : wq.in(y)) images = Matrix::hstack(images, multiply(f, p0_map(a), kernel[wq.arrows()[a].src]));
        Matrix acc = column_space(f, images);
        std::size_t r = acc.cols();
        for (std::size_t c = 0; c < kernel[y].cols(); ++c) {
            Matrix col = kernel[y].select_columns({c});
            Matrix next = Matrix::hstack(acc, col);
            std::size_t r2 = rank(f, next);
            if (r2 == r) continue;
            acc = std::move(next);
            r = r2;
            pres.syzygies.push_back(wq.vertex(y));
            std::vector<std::vector<Scalar>> coeff(n0);
            for (std::size_t i = 0; i < n0; ++i)
                for (std::size_t k = off[y][i]; k < off[y][i + 1]; ++k) coeff[i].push_back(col(k, 0));
            pres.coeff.push_back(std::move(coeff));
        }
    }
    return pres;
}

HomExt hom_ext_dims(const Rep& m, const Rep& n_in) {
    Presentation pres = minimal_presentation(m);
    Rep n = n_in.extended(pres.window);
    const auto& wq = n.wq();
    const Field& f = n.field();
    std::vector<std::size_t> xi, yj;
    std::size_t rows = 0, cols = 0;
    for (const auto& x : pres.tops) {
        xi.push_back(*wq.index(x));
        cols += n.dim(xi.back());
    }
    for (const auto& y : pres.syzygies) {
        yj.push_back(*wq.index(y));
        rows += n.dim(yj.back());
    }
    Matrix phi(rows, cols);
    std::size_t r0 = 0;
    for (std::size_t j = 0; j < yj.size(); ++j) {
        std::size_t c0 = 0;
        for (std::size_t i = 0; i < xi.size(); ++i) {
            const auto& ps = wq.paths(xi[i], yj[j]);
            Matrix block(n.dim(yj[j]), n.dim(xi[i]));
            for (std::size_t k = 0; k < ps.size(); ++k)
                if (pres.coeff[j][i][k] != 0) block = add(f, block, scale(f, pres.coeff[j][i][k], n.path_map(ps[k])));
            phi.set_block(r0, c0, block);
            c0 += n.dim(xi[i]);
        }
        r0 += n.dim(yj[j]);
    }
    std::size_t rk = rank(f, phi);
    return {cols - rk, rows - rk};
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

Poly poly_lcm(const Field& f, const Poly& a, const Poly& b) {
    Poly g = poly_gcd(f, a, b);
    return poly_monic(f, poly_divmod(f, poly_mul(f, a, b), g).first);
}

Poly morphism_minpoly(const Field& f, const Morphism& phi) {
    Poly mu{Scalar(1)};
    for (const auto& m : phi.at)
        if (m.rows() > 0) mu = poly_lcm(f, mu, minimal_polynomial(f, m));
    return mu;
}

Morphism lin_comb(const Field& f, const std::vector<Morphism>& basis, const std::vector<Scalar>& c) {
    Morphism r;
    for (std::size_t v = 0; v < basis[0].at.size(); ++v) {
        Matrix acc(basis[0].at[v].rows(), basis[0].at[v].cols());
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (c[k] != 0) acc = add(f, acc, scale(f, c[k], basis[k].at[v]));
        r.at.push_back(std::move(acc));
    }
    return r;
}

std::vector<Scalar> flatten(const Morphism& h) {
    std::vector<Scalar> v;
    for (const auto& m : h.at)
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

Matrix span_matrix(const std::vector<Morphism>& hs, std::size_t len) {
    Matrix s(len, hs.size());
    for (std::size_t k = 0; k < hs.size(); ++k) {
        auto v = flatten(hs[k]);
        for (std::size_t r = 0; r < len; ++r) s(r, k) = v[r];
    }
    return s;
}

bool in_span(const Field& f, const Matrix& span, const Morphism& h) {
    auto v = flatten(h);
    if (span.cols() == 0) return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
    return solve(f, span, Matrix::column_vector(v)).has_value();
}

Morphism identity_morphism(const Rep& m) {
    Morphism id;
    for (std::size_t i = 0; i < m.wq().size(); ++i) id.at.push_back(Matrix::identity(m.dim(i)));
    return id;
}

/// Tries to split m with ψ = (φ - λ)^N; returns the two pieces' bases.
std::optional<std::pair<std::vector<Matrix>, std::vector<Matrix>>> try_split(const Rep& m, const Morphism& phi) {
    const Field& f = m.field();
    Poly mu = morphism_minpoly(f, phi);
    std::size_t big = 0;
    for (auto d : m.dims()) big = std::max(big, d);
    for (const auto& lambda : field_roots(f, mu)) {
        std::vector<Matrix> ker, im;
        bool all_zero = true, all_iso = true;
        for (std::size_t v = 0; v < phi.at.size(); ++v) {
            std::size_t d = m.dim(v);
            Matrix shifted = subtract(f, phi.at[v], scale(f, lambda, Matrix::identity(d)));
            Matrix psi = power(f, shifted, big);
            if (!psi.is_zero()) all_zero = false;
            if (!is_invertible(f, psi)) all_iso = false;
            ker.push_back(kernel_matrix(f, psi));
            im.push_back(column_space(f, psi));
        }
        if (!all_zero && !all_iso) return std::make_pair(std::move(ker), std::move(im));
    }
    return std::nullopt;
}

bool local_commutative_char_p(const Rep& m, const std::vector<Morphism>& basis) {
    const Field& f = m.field();
    std::size_t d = basis.size();
    std::size_t len = flatten(basis[0]).size();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
            if (flatten(compose(f, basis[a], basis[b])) != flatten(compose(f, basis[b], basis[a]))) return false;
    Matrix span = span_matrix(basis, len);
    auto coords = [&](const Morphism& h) { return *solve(f, span, Matrix::column_vector(flatten(h))); };
    std::size_t big = 1;
    for (auto x : m.dims()) big = std::max(big, x);
    unsigned long e = 1;
    while (e < big) e *= f.characteristic();
    Matrix frob(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        Morphism p;
        for (const auto& x : basis[k].at) p.at.push_back(power(f, x, e));
        frob.set_block(0, k, coords(p));
    }
    Matrix nil = kernel_matrix(f, frob);
    std::size_t q = d - nil.cols();
    if (q == 1) return true;
    Matrix cq = cokernel_basis(f, nil);
    Matrix sq = *solve(f, cq, Matrix::identity(cq.rows()));
    for (std::size_t k = 0; k < d; ++k) {
        Matrix reg(d, d);
        for (std::size_t c = 0; c < d; ++c) reg.set_block(0, c, coords(compose(f, basis[k], basis[c])));
        Matrix induced = multiply(f, cq, multiply(f, reg, sq));
        Poly mu = minimal_polynomial(f, induced);
        if (static_cast<std::size_t>(poly_degree(mu)) == q && is_irreducible(f, mu).irreducible) return true;
    }
    return false;
}

/// Proves End(m) local, or returns false when no certificate applies.
bool local_certificate(const Rep& m, const std::vector<Morphism>& basis) {
    const Field& f = m.field();
    std::size_t d = basis.size();
    std::size_t len = flatten(basis[0]).size();
    std::size_t total = 0;
    for (auto x : m.dims()) total += x;
    // (c) an element generating a field extension of full dimension.
    for (const auto& b : basis) {
        Poly mu = morphism_minpoly(f, b);
        if (static_cast<std::size_t>(poly_degree(mu)) == d && is_irreducible(f, mu).irreducible) return true;
    }
    // (b) every basis element is a scalar plus a nilpotent, and those
    // nilpotent parts span a nilpotent ideal of codimension one.
    std::vector<Morphism> nil;
    bool scalar_plus_nil = true;
    Morphism id = identity_morphism(m);
    for (const auto& b : basis) {
        auto roots = field_roots(f, morphism_minpoly(f, b));
        Poly mu = morphism_minpoly(f, b);
        if (roots.size() != 1 || static_cast<std::size_t>(poly_degree(mu)) > total + 1) {
            scalar_plus_nil = false;
            break;
        }
        Morphism n;
        bool nilpotent = true;
        for (std::size_t v = 0; v < b.at.size(); ++v) {
            Matrix s = subtract(f, b.at[v], scale(f, roots[0], id.at[v]));
            if (!power(f, s, m.dim(v)).is_zero()) nilpotent = false;
            n.at.push_back(std::move(s));
        }
        if (!nilpotent) {
            scalar_plus_nil = false;
            break;
        }
        nil.push_back(std::move(n));
    }
    if (scalar_plus_nil) {
        Matrix span = column_space(f, span_matrix(nil, len));
        if (span.cols() == d - 1) {
            bool closed = true;
            for (const auto& a : nil)
                for (const auto& b : nil)
                    if (closed && !in_span(f, span, compose(f, a, b))) closed = false;
            if (closed) {
                // Powers of the span must vanish.
                std::vector<Morphism> layer = nil;
                for (std::size_t k = 0; k <= total && !layer.empty(); ++k) {
                    std::vector<Morphism> next;
                    for (const auto& a : layer)
                        for (const auto& b : nil) {
                            Morphism c = compose(f, a, b);
                            bool zero = std::all_of(c.at.begin(), c.at.end(), [](const Matrix& x) { return x.is_zero(); });
                            if (!zero) next.push_back(std::move(c));
                        }
                    if (next.size() > 4 * d) {
                        Matrix s = column_space(f, span_matrix(next, len));
                        std::vector<Morphism> reduced;
                        for (std::size_t c = 0; c < s.cols(); ++c) {
                            Morphism h;
                            std::size_t pos = 0;
                            for (const auto& mm : nil[0].at) {
                                Matrix blk(mm.rows(), mm.cols());
                                for (std::size_t r = 0; r < mm.rows(); ++r)
                                    for (std::size_t cc = 0; cc < mm.cols(); ++cc) blk(r, cc) = s(pos++, c);
                                h.at.push_back(std::move(blk));
                            }
                            reduced.push_back(std::move(h));
                        }
                        next = std::move(reduced);
                    }
                    layer = std::move(next);
                }
                if (layer.empty()) return true;
            }
        }
    }
    // (e) commutative algebra in characteristic p: the nilradical is the
    // kernel of a Frobenius power (linear over the prime field), and the
    // quotient must be a field generated by one element.
    if (f.characteristic() > 0 && local_commutative_char_p(m, basis)) return true;
    // (d) the radical of the trace form has codimension one.
    if (f.characteristic() == 0 || f.characteristic() > total) {
        Matrix gram(d, d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                Scalar tr = 0;
                Morphism c = compose(f, basis[a], basis[b]);
                for (const auto& mm : c.at)
                    for (std::size_t k = 0; k < mm.rows(); ++k) tr = f.add(tr, mm(k, k));
                gram(a, b) = tr;
            }
        if (rank(f, gram) == 1) return true;
    }
    return false;
}

void finish_summand(Rep& piece, const Rep& parent) {
    for (std::size_t t = 0; t < parent.quiver()->num_tails(); ++t) {
        int ti = static_cast<int>(t);
        piece.set_cont(ti, parent.cont(ti) && piece.dim(piece.wq().boundary(ti)) > 0);
    }
}

/// Splits m (all pieces stay on m's window); `emb` embeds m into the root.
void decompose_into(const Rep& m, const std::vector<Matrix>& emb, std::vector<Summand>& out, std::mt19937& rng,
                    int depth) {
    if (m.is_zero()) return;
    if (depth > 64) throw ArqError("Undecided", "decomposition recursion too deep");
    // Endomorphisms of a stably stored representation are determined on its window.
    auto basis = hom_on_window(m, m);
    const Field& f = m.field();
    if (basis.size() == 1) {
        out.push_back({m, emb});
        return;
    }
    auto split = [&](const Morphism& phi) {
        auto pieces = try_split(m, phi);
        if (!pieces) return false;
        for (const auto* b : {&pieces->first, &pieces->second}) {
            Rep piece = subrep(m, *b);
            finish_summand(piece, m);
            std::vector<Matrix> e;
            for (std::size_t v = 0; v < emb.size(); ++v) e.push_back(multiply(f, emb[v], (*b)[v]));
            decompose_into(piece, e, out, rng, depth + 1);
        }
        return true;
    };
    for (const auto& b : basis)
        if (split(b)) return;
    std::size_t d = basis.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<Scalar> c(d);
            c[i] = 1;
            c[j] = 1;
            if (split(lin_comb(f, basis, c))) return;
            if (split(compose(f, basis[i], basis[j]))) return;
        }
    std::uniform_int_distribution<int> coin(0, f.characteristic() == 2 ? 1 : 2);
    for (int attempt = 0; attempt < 48; ++attempt) {
        std::vector<Scalar> c(d);
        for (auto& x : c) x = f.reduce(Scalar(coin(rng)));
        if (split(lin_comb(f, basis, c))) return;
    }
    if (local_certificate(m, basis)) {
        out.push_back({m, emb});
        return;
    }
    throw ArqError("Undecided", "could not certify the decomposition of " + dim_vector_string(m));
}

bool summand_less(const Rep& a, const Rep& b) {
    auto ta = a.total_dim(), tb = b.total_dim();
    std::size_t ka = ta ? *ta : SIZE_MAX, kb = tb ? *tb : SIZE_MAX;
    if (ka != kb) return ka < kb;
    return dim_vector_string(a) < dim_vector_string(b);
}

}  // namespace

std::vector<Summand> decompose_with_maps(const Rep& m) {
    std::vector<Summand> pieces;
    std::vector<Matrix> id;
    for (std::size_t i = 0; i < m.wq().size(); ++i) id.push_back(Matrix::identity(m.dim(i)));
    if (m.info().indecomposable) return {{m, id}};
    std::mt19937 rng(20240611u);
    decompose_into(m, id, pieces, rng, 0);
    for (auto& p : pieces) {
        p.rep.info() = RepInfo{};
        p.rep.info().indecomposable = true;
        p.rep.info().name = describe(p.rep);
        recognize(p.rep);
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Summand& a, const Summand& b) { return summand_less(a.rep, b.rep); });
    return pieces;
}

std::vector<Rep> decompose(const Rep& m) {
    if (m.info().indecomposable) return {m};
    std::vector<Rep> out;
    for (auto& s : decompose_with_maps(m)) {
        Rep r = s.rep.trimmed();
        recognize(r);
        out.push_back(std::move(r));
    }
    return out;
}

bool is_indecomposable(const Rep& m) {
    if (m.is_zero()) return false;
    return decompose(m).size() == 1;
}

namespace {

bool iso_indecomposables(const Rep& x, const Rep& y) {
    if (!same_dimension_vector(x, y)) return false;
    const Field& f = x.field();
    auto fs = hom_space(x, y);
    if (fs.empty()) return false;
    auto gs = hom_space(y, x);
    for (const auto& g : gs)
        for (const auto& h : fs)
            if (is_iso_morphism(f, compose(f, g, h))) return true;
    return false;
}

}  // namespace

bool is_isomorphic(const Rep& a, const Rep& b) {
    if (!same_dimension_vector(a, b)) return false;
    if (a.is_zero()) return true;
    auto cls = classify_quiver(*a.quiver());
    bool dynkin = cls.tag == QuiverClass::Tag::FiniteDynkin || cls.tag == QuiverClass::Tag::InfDynkin;
    if (dynkin && a.info().indecomposable && b.info().indecomposable) return true;
    auto da = decompose(a), db = decompose(b);
    if (da.size() != db.size()) return false;
    if (dynkin) {
        // Indecomposables over Dynkin quivers are determined by their dimension vectors.
        std::vector<bool> used(db.size(), false);
        for (const auto& x : da) {
            bool found = false;
            for (std::size_t k = 0; k < db.size() && !found; ++k)
                if (!used[k] && same_dimension_vector(x, db[k])) used[k] = found = true;
            if (!found) return false;
        }
        return true;
    }
    std::vector<bool> used(db.size(), false);
    for (const auto& x : da) {
        bool found = false;
        for (std::size_t k = 0; k < db.size() && !found; ++k)
            if (!used[k] && iso_indecomposables(x, db[k])) used[k] = found = true;
        if (!found) return false;
    }
    return true;
}

FpCertificate fp_certificate(const Rep& m) {
    FpCertificate c;
    const Quiver& q = *m.quiver();
    c.sigma.window = m.window();
    c.sigma.beyond.assign(q.num_tails(), false);
    c.ok = true;
    for (std::size_t t = 0; t < q.num_tails(); ++t) {
        int ti = static_cast<int>(t);
        if (!m.infinite_along(ti)) continue;
        Vertex first = Vertex::on_tail(ti, m.window().depth[t] + 1);
        if (!tail_all_out(q, ti)) {
            c.ok = false;
            if (!c.witness) c.witness = first;
            continue;
        }
        c.sigma.beyond[t] = true;
        c.sigma_tops.push_back(first);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Recognition and names

namespace {

std::optional<LineModel> line_model(const QuiverPtr& q) {
    try {
        return LineModel(q);
    } catch (const ArqError&) {
        return std::nullopt;
    }
}

std::optional<DInfModel> dinf_model(const QuiverPtr& q) {
    try {
        return DInfModel(q);
    } catch (const ArqError&) {
        return std::nullopt;
    }
}

bool maps_nonzero(const Rep& m) {
    for (std::size_t a = 0; a < m.wq().arrows().size(); ++a) {
        const auto& ar = m.wq().arrows()[a];
        if (m.dim(ar.src) > 0 && m.dim(ar.dst) > 0 && m.map(a).is_zero()) return false;
    }
    return true;
}

std::string string_name(const Rep& m, const LineModel& lm, const StringSpec& s) {
    const Quiver& q = *m.quiver();
    if (s.lo && s.hi && *s.lo == *s.hi) return "S_" + subscript(q.vertex_name(lm.vertex_at(*s.lo)));
    // Directed path: every edge of the interval points the same way.
    long a = s.lo ? *s.lo : lm.structural_lo() - 1;
    long b = s.hi ? *s.hi : lm.structural_hi() + 1;
    if (!s.lo) a = std::min(a, b - 1);
    if (!s.hi) b = std::max(b, a + 1);
    bool all_right = true, all_left = true;
    for (long c = a; c < b; ++c) (lm.right_edge(c) ? all_left : all_right) = false;
    if (all_right || all_left) {
        std::optional<long> start = all_right ? s.lo : s.hi;
        std::optional<long> end = all_right ? s.hi : s.lo;
        if (start && !end) {
            // Maximal infinite path: nothing points into its start along the line.
            long st = *start;
            bool extendable = all_right ? (lm.has_edge(st - 1) && lm.right_edge(st - 1))
                                        : (lm.has_edge(st) && !lm.right_edge(st));
            if (!extendable) return "M(p_∞)";
            return "M(p_{" + q.vertex_name(lm.vertex_at(st)) + ",∞})";
        }
        if (start && end)
            return "M(p_{" + q.vertex_name(lm.vertex_at(*start)) + "," + q.vertex_name(lm.vertex_at(*end)) + "})";
    }
    std::string w = "M(";
    if (!s.lo) w += "⋯";
    for (long c = a; c <= b; ++c) {
        w += q.vertex_name(lm.vertex_at(c));
        if (c < b) w += lm.right_edge(c) ? "→" : "←";
    }
    if (!s.hi) w += "⋯";
    return w + ")";
}

}  // namespace

void recognize(Rep& m) {
    if (m.is_zero()) return;
    auto supp = m.support();
    if (supp.size() == 1 && m.finite_dimensional() && m.dim(*m.wq().index(supp[0])) == 1) {
        m.info().kind = RepKind::Simple;
        m.info().vertex = supp[0];
        if (auto lm = line_model(m.quiver())) {
            long c = lm->coord(supp[0]);
            m.info().string = StringSpec{c, c};
        }
        m.info().name = describe(m);
        return;
    }
    const auto& wq = m.wq();
    if (is_kronecker(*m.quiver())) {
        // Homogeneous regular: α invertible and β α⁻¹ with irreducible minimal polynomial of full degree.
        const Field& f = m.field();
        std::size_t n = m.dim(0);
        if (n == 0 || m.dim(1) != n || !is_invertible(f, m.map(0))) return;
        Poly mu = minimal_polynomial(f, multiply(f, m.map(1), inverse(f, m.map(0))));
        // Cyclic β α⁻¹: for an indecomposable this is the tube module M_{q^k}.
        if (static_cast<std::size_t>(poly_degree(mu)) != n) return;
        m.info().kind = RepKind::Kronecker;
        m.info().poly = mu;
        m.info().name = describe(m);
        return;
    }
    if (auto lm = line_model(m.quiver())) {
        bool thin = std::all_of(m.dims().begin(), m.dims().end(), [](std::size_t d) { return d <= 1; });
        if (!thin || !maps_nonzero(m)) return;
        long lo = LONG_MAX, hi = LONG_MIN;
        for (const auto& v : supp) {
            long c = lm->coord(v);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (static_cast<long>(supp.size()) != hi - lo + 1) return;
        StringSpec s{lo, hi};
        if (m.quiver()->num_tails() > 0 && m.infinite_along(0) && lm->coord(wq.vertex(wq.boundary(0))) == hi) s.hi.reset();
        if (m.quiver()->num_tails() > 1 && m.infinite_along(1) && lm->coord(wq.vertex(wq.boundary(1))) == lo) s.lo.reset();
        m.info().kind = RepKind::String;
        m.info().string = s;
        m.info().name = describe(m);
        return;
    }
    if (auto dm = dinf_model(m.quiver())) {
        std::map<long, std::size_t> by;
        for (std::size_t i = 0; i < wq.size(); ++i) by[dm->coord(wq.vertex(i))] = m.dim(i);
        if (by[0] != 1 || by[1] != 1) return;
        long c = 2, i = 0;
        while (by.count(c) && by[c] == 2) {
            ++c;
            ++i;
        }
        long j = 0;
        while (by.count(c) && by[c] == 1) {
            ++c;
            ++j;
        }
        bool rest_zero = true;
        for (auto it = by.lower_bound(c); it != by.end(); ++it)
            if (it->second != 0) rest_zero = false;
        if (!rest_zero) return;
        bool infinite = m.quiver()->num_tails() > 0 && m.infinite_along(0);
        if (!infinite && j == 0) return;
        if (infinite && by.count(c) == 0 && j == 0) return;
        m.info().kind = RepKind::DInf;
        m.info().i = i;
        if (infinite) m.info().j.reset();
        else m.info().j = j;
        m.info().name = describe(m);
    }
}

std::string describe(const Rep& m) {
    const auto& info = m.info();
    const Quiver& q = *m.quiver();
    switch (info.kind) {
        case RepKind::Proj: return "P_" + subscript(q.vertex_name(*info.vertex));
        case RepKind::Inj: return "I_" + subscript(q.vertex_name(*info.vertex));
        case RepKind::Simple: return "S_" + subscript(q.vertex_name(*info.vertex));
        case RepKind::Kronecker: return "M_{" + poly_to_string(info.poly) + "}";
        case RepKind::DInf:
            return "N_{" + std::to_string(info.i) + "," + (info.j ? std::to_string(*info.j) : std::string("∞")) + "}";
        case RepKind::String:
            if (auto lm = line_model(m.quiver())) return string_name(m, *lm, *info.string);
            break;
        default: break;
    }
    if (m.is_zero()) return "0";
    return "M" + dim_vector_string(m);
}

Rep named(Rep m) {
    m.info().name = describe(m);
    return m;
}

}  // namespace arq
