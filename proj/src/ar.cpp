#include "arq/ar.hpp"

#include <map>

#include "arq/errors.hpp"

namespace arq {

std::string to_string(Unavailable u) {
    switch (u) {
        case Unavailable::Projective: return "Projective";
        case Unavailable::PseudoProjective: return "PseudoProjective";
        case Unavailable::InfiniteDimStart: return "InfiniteDimStart";
        case Unavailable::NotIndecomposable: return "NotIndecomposable";
        case Unavailable::Injective: return "Injective";
    }
    return "";
}

namespace {

using PathIndex = std::map<std::vector<std::size_t>, std::size_t>;

PathIndex index_paths(const std::vector<WindowQuiver::WPath>& ps) {
    PathIndex idx;
    for (std::size_t k = 0; k < ps.size(); ++k) idx.emplace(ps[k].arrows, k);
    return idx;
}

std::vector<std::size_t> concat(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Window grown(const Quiver& q, Window w, std::size_t factor) {
    for (std::size_t t = 0; t < w.depth.size(); ++t) w.depth[t] += factor * (q.spec().tails[t].orientation.period.size() + 1);
    return w;
}

/// Offsets of the summands of ⊕_k kQ(z, v_k) (incoming = true) or
/// ⊕_k kQ(v_k, z) at every window vertex.
struct SumLayout {
    std::vector<std::size_t> idx;                 // window indices of the v_k
    std::vector<std::vector<std::size_t>> off;    // off[z][k], with off[z][n] = total
};

SumLayout layout(const WindowQuiver& wq, const std::vector<Vertex>& vs, bool incoming) {
    SumLayout l;
    for (const auto& v : vs) l.idx.push_back(*wq.index(v));
    l.off.assign(wq.size(), std::vector<std::size_t>(vs.size() + 1, 0));
    for (std::size_t z = 0; z < wq.size(); ++z)
        for (std::size_t k = 0; k < vs.size(); ++k)
            l.off[z][k + 1] = l.off[z][k] + (incoming ? wq.paths(z, l.idx[k]) : wq.paths(l.idx[k], z)).size();
    return l;
}

/// ⊕_k I_{v_k} on the window of wq: I_v(z) = kQ(z, v)*, a(ξ)(w') = ξ(a·w').
Rep injective_sum(const QuiverPtr& q, const Window& w, const std::vector<Vertex>& vs) {
    Rep r(q, w);
    const auto& wq = r.wq();
    SumLayout l = layout(wq, vs, true);
    for (std::size_t z = 0; z < wq.size(); ++z) r.set_dim(z, l.off[z][vs.size()]);
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        Matrix m(r.dim(ar.dst), r.dim(ar.src));
        for (std::size_t k = 0; k < vs.size(); ++k) {
            auto from = index_paths(wq.paths(ar.src, l.idx[k]));
            const auto& to = wq.paths(ar.dst, l.idx[k]);
            for (std::size_t p = 0; p < to.size(); ++p) {
                auto it = from.find(concat({a}, to[p].arrows));
                if (it != from.end()) m(l.off[ar.dst][k] + p, l.off[ar.src][k] + it->second) = 1;
            }
        }
        r.set_map(a, m);
    }
    return r;
}

/// Marks continuation where the representation is nonzero at the boundary,
/// after checking that it is stable there.
bool settle_tails(Rep& r) {
    const Quiver& q = *r.quiver();
    const auto& wq = r.wq();
    for (std::size_t t = 0; t < q.num_tails(); ++t) {
        int ti = static_cast<int>(t);
        std::size_t b = wq.boundary(ti);
        if (r.dim(b) == 0) {
            r.set_cont(ti, false);
            continue;
        }
        std::size_t depth = r.window().depth[t];
        if (!q.spec().tails[t].orientation.eventual() || depth < 1) return false;
        std::size_t inner = depth == 1 ? *wq.index(Vertex::core(q.tail_attach(ti))) : *wq.index(Vertex::on_tail(ti, depth - 1));
        if (r.dim(inner) != r.dim(b)) return false;
        if (!is_invertible(r.field(), r.map(*wq.arrow_index(ArrowId{ti, depth - 1})))) return false;
        r.set_cont(ti, true);
    }
    return true;
}

DtrResult finish_translate(Rep value, const Rep& m) {
    DtrResult res;
    res.tail_certificate.assign(value.quiver()->num_tails(), 0);
    if (value.is_zero()) return res;
    value = value.trimmed();
    value.info() = RepInfo{};
    value.info().indecomposable = m.info().indecomposable;
    value.info().name = describe(value);
    if (value.info().indecomposable) recognize(value);
    for (std::size_t t = 0; t < res.tail_certificate.size(); ++t) {
        int ti = static_cast<int>(t);
        if (value.infinite_along(ti)) res.tail_certificate[t] = value.dim(value.wq().boundary(ti));
    }
    res.is_finite_dimensional = value.finite_dimensional();
    res.is_pseudo = !res.is_finite_dimensional;
    res.value = std::move(value);
    return res;
}

DtrResult dtr(const Rep& m) {
    Presentation pres = minimal_presentation(m);
    if (pres.syzygies.empty()) return finish_translate(Rep(m.quiver(), m.window()), m);
    const QuiverPtr& q = m.quiver();
    for (std::size_t factor = 1; factor <= 6; ++factor) {
        Window w = grown(*q, pres.window, factor);
        auto nm = nakayama_map(q, pres, w);
        std::vector<Matrix> ker;
        for (std::size_t z = 0; z < nm.map.at.size(); ++z) ker.push_back(kernel_matrix(q->field(), nm.map.at[z]));
        Rep k = subrep(nm.source, ker);
        if (settle_tails(k)) return finish_translate(std::move(k), m);
    }
    throw ArqError("UnboundedInteraction", "translate does not stabilize along a tail");
}

Morphism transpose_all(const Morphism& h) {
    Morphism r;
    for (const auto& m : h.at) r.at.push_back(m.transpose());
    return r;
}

}  // namespace

NakayamaMap nakayama_map(const QuiverPtr& q, const Presentation& p, const Window& w) {
    NakayamaMap nm{injective_sum(q, w, p.syzygies), injective_sum(q, w, p.tops), {}};
    const auto& wq = nm.source.wq();
    const Field& f = q->field();
    SumLayout ly = layout(wq, p.syzygies, true), lx = layout(wq, p.tops, true);
    for (std::size_t z = 0; z < wq.size(); ++z) {
        Matrix m(nm.target.dim(z), nm.source.dim(z));
        for (std::size_t j = 0; j < p.syzygies.size(); ++j) {
            auto into_y = index_paths(wq.paths(z, ly.idx[j]));
            for (std::size_t i = 0; i < p.tops.size(); ++i) {
                const auto& us = wq.paths(lx.idx[i], ly.idx[j]);
                const auto& ws = wq.paths(z, lx.idx[i]);
                for (std::size_t k = 0; k < us.size(); ++k) {
                    const Scalar& c = p.coeff[j][i][k];
                    if (c == 0) continue;
                    // ν(u) sends w* to w'* whenever w = w'·u.
                    for (std::size_t r = 0; r < ws.size(); ++r) {
                        auto it = into_y.find(concat(ws[r].arrows, us[k].arrows));
                        if (it == into_y.end()) continue;
                        Scalar& e = m(lx.off[z][i] + r, ly.off[z][j] + it->second);
                        e = f.add(e, c);
                    }
                }
            }
        }
        nm.map.at.push_back(std::move(m));
    }
    return nm;
}

Rep nakayama(const Rep& p) {
    Presentation pres = minimal_presentation(p);
    if (!pres.syzygies.empty()) throw ArqError("NotProjective", "input is not projective");
    const QuiverPtr& q = p.quiver();
    for (std::size_t factor = 1; factor <= 6; ++factor) {
        Rep r = injective_sum(q, grown(*q, pres.window, factor), pres.tops);
        if (!settle_tails(r)) continue;
        r = r.trimmed();
        if (pres.tops.size() == 1) {
            r.info().kind = RepKind::Inj;
            r.info().vertex = pres.tops[0];
            r.info().indecomposable = true;
        }
        r.info().name = describe(r);
        return r;
    }
    throw ArqError("UnboundedInteraction", "injective does not stabilize along a tail");
}

bool is_projective(const Rep& m) {
    try {
        return minimal_presentation(m).syzygies.empty();
    } catch (const ArqError& e) {
        if (e.name() == "NotFinitelyPresented") return false;
        throw;
    }
}

bool is_injective(const Rep& m) { return is_projective(dualize(m)); }

DtrResult ar_translate(const Rep& m, Direction d) {
    if (d == Direction::DTr) return dtr(m);
    Rep dual = dualize(m);
    DtrResult r = dtr(dual);
    if (r.value) {
        Rep back = dualize(*r.value);
        back.info() = RepInfo{};
        back.info().indecomposable = m.info().indecomposable;
        back.info().name = describe(back);
        if (back.info().indecomposable) recognize(back);
        r.value = std::move(back);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Almost split sequences

std::pair<Rep, Morphism> quotient_rep(const Rep& m, const std::vector<Matrix>& bases) {
    const auto& wq = m.wq();
    const Field& f = m.field();
    Rep r(m.quiver(), m.window());
    Morphism proj;
    std::vector<Matrix> section;
    for (std::size_t z = 0; z < wq.size(); ++z) {
        Matrix c = cokernel_basis(f, bases[z]);
        r.set_dim(z, c.rows());
        section.push_back(c.rows() == 0 ? Matrix(m.dim(z), 0) : *solve(f, c, Matrix::identity(c.rows())));
        proj.at.push_back(std::move(c));
    }
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        if (r.dim(ar.src) == 0 || r.dim(ar.dst) == 0) continue;
        r.set_map(a, multiply(f, proj.at[ar.dst], multiply(f, m.map(a), section[ar.src])));
    }
    for (std::size_t t = 0; t < m.quiver()->num_tails(); ++t) {
        int ti = static_cast<int>(t);
        r.set_cont(ti, m.cont(ti) && r.dim(wq.boundary(ti)) > 0);
    }
    r.info().name = describe(r);
    return {r, proj};
}

namespace {

bool known_indecomposable(const Rep& m) { return m.info().indecomposable || is_indecomposable(m); }

/// Radical of End(L) for a local endomorphism algebra.
std::vector<Morphism> endo_radical(const Rep& l, const std::vector<Morphism>& basis) {
    const Field& f = l.field();
    std::size_t d = basis.size();
    std::size_t total = 0;
    for (auto x : l.dims()) total += x;
    std::vector<std::vector<Scalar>> coeffs;
    if (f.characteristic() == 0 || f.characteristic() > total) {
        // The trace form's radical is the Jacobson radical here.
        Matrix gram(d, d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                Scalar tr = 0;
                Morphism c = compose(f, basis[a], basis[b]);
                for (const auto& mm : c.at)
                    for (std::size_t k = 0; k < mm.rows(); ++k) tr = f.add(tr, mm(k, k));
                gram(a, b) = tr;
            }
        coeffs = rank_kernel(f, gram).kernel;
    } else {
        // Nilpotent parts b - λ·1 of the basis elements.
        std::vector<Morphism> nil;
        for (const auto& b : basis) {
            Poly mu{Scalar(1)};
            for (const auto& m : b.at)
                if (m.rows() > 0) {
                    Poly p = minimal_polynomial(f, m);
                    Poly g = poly_gcd(f, mu, p);
                    mu = poly_monic(f, poly_divmod(f, poly_mul(f, mu, p), g).first);
                }
            auto roots = field_roots(f, mu);
            if (roots.size() != 1) continue;
            Morphism n;
            for (std::size_t v = 0; v < b.at.size(); ++v)
                n.at.push_back(subtract(f, b.at[v], scale(f, roots[0], Matrix::identity(b.at[v].rows()))));
            nil.push_back(std::move(n));
        }
        return nil;
    }
    std::vector<Morphism> rad;
    for (const auto& c : coeffs) {
        Morphism h;
        for (std::size_t v = 0; v < basis[0].at.size(); ++v) {
            Matrix acc(basis[0].at[v].rows(), basis[0].at[v].cols());
            for (std::size_t k = 0; k < d; ++k)
                if (c[k] != 0) acc = add(f, acc, scale(f, c[k], basis[k].at[v]));
            h.at.push_back(std::move(acc));
        }
        rad.push_back(std::move(h));
    }
    return rad;
}

AlmostSplitResult ending_at(const Rep& m_in, bool allow_infinite_left = false) {
    AlmostSplitResult res;
    if (m_in.is_zero() || !known_indecomposable(m_in)) {
        res.reason = Unavailable::NotIndecomposable;
        res.detail = "representation is not indecomposable";
        return res;
    }
    Presentation pres = minimal_presentation(m_in);
    if (pres.syzygies.empty()) {
        res.reason = Unavailable::Projective;
        res.detail = "representation is projective";
        return res;
    }
    Rep mi = m_in;
    mi.info().indecomposable = true;
    DtrResult tr = ar_translate(mi, Direction::DTr);
    if (tr.is_pseudo && !allow_infinite_left) {
        res.reason = Unavailable::PseudoProjective;
        res.detail = "DTr is infinite dimensional";
        return res;
    }
    const Rep& l0 = *tr.value;
    const QuiverPtr& q = m_in.quiver();
    const Field& f = q->field();
    Window w = Window::join(pres.window, l0.window());
    for (auto& d : w.depth) d += 1;
    Rep l = l0.extended(w), m = m_in.extended(w);
    const auto& wq = m.wq();
    SumLayout lx = layout(wq, pres.tops, false), ly = layout(wq, pres.syzygies, false);
    std::size_t nx = pres.tops.size(), ny = pres.syzygies.size();

    // Ext¹(M, L) = coker(Φ : ⊕L(x_i) → ⊕L(y_j)).
    std::vector<std::size_t> lxo(nx + 1, 0), lyo(ny + 1, 0);
    for (std::size_t i = 0; i < nx; ++i) lxo[i + 1] = lxo[i] + l.dim(lx.idx[i]);
    for (std::size_t j = 0; j < ny; ++j) lyo[j + 1] = lyo[j] + l.dim(ly.idx[j]);
    Matrix phi(lyo[ny], lxo[nx]);
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) {
            const auto& us = wq.paths(lx.idx[i], ly.idx[j]);
            Matrix block(l.dim(ly.idx[j]), l.dim(lx.idx[i]));
            for (std::size_t k = 0; k < us.size(); ++k)
                if (pres.coeff[j][i][k] != 0) block = add(f, block, scale(f, pres.coeff[j][i][k], l.path_map(us[k])));
            phi.set_block(lyo[j], lxo[i], block);
        }
    Matrix coker = cokernel_basis(f, phi);
    if (coker.rows() == 0) throw ArqError("Internal", "Ext(M, DTr M) vanishes");

    // Pick g spanning the socle of Ext as an End(L)-module.
    auto endo = hom_on_window(l, l);
    auto rad = endo_radical(l, endo);
    Matrix stacked(0, lyo[ny]);
    for (const auto& psi : rad) {
        Matrix big(lyo[ny], lyo[ny]);
        for (std::size_t j = 0; j < ny; ++j) big.set_block(lyo[j], lyo[j], psi.at[ly.idx[j]]);
        stacked = Matrix::vstack(stacked, multiply(f, coker, big));
    }
    std::optional<Matrix> g;
    for (const auto& v : rank_kernel(f, stacked).kernel) {
        Matrix col = Matrix::column_vector(v);
        if (!multiply(f, coker, col).is_zero()) {
            g = col;
            break;
        }
    }
    if (!g) throw ArqError("Internal", "no almost split class found");

    // Pushout E = (L ⊕ P0) / {(-g(p), f(p)) : p ∈ P1}.
    Rep e(q, w);
    Morphism iota, pi;
    std::vector<Matrix> section, p0maps;
    std::vector<Matrix> cok(wq.size());
    for (std::size_t z = 0; z < wq.size(); ++z) {
        std::size_t dl = l.dim(z), d0 = lx.off[z][nx], d1 = ly.off[z][ny];
        Matrix gz(dl, d1), fz(d0, d1), piz(m.dim(z), d0);
        for (std::size_t j = 0; j < ny; ++j) {
            Matrix gj = g->block(lyo[j], 0, lyo[j + 1] - lyo[j], 1);
            const auto& ws = wq.paths(ly.idx[j], z);
            for (std::size_t r = 0; r < ws.size(); ++r) {
                std::size_t col = ly.off[z][j] + r;
                gz.set_block(0, col, multiply(f, l.path_map(ws[r]), gj));
                for (std::size_t i = 0; i < nx; ++i) {
                    const auto& us = wq.paths(lx.idx[i], ly.idx[j]);
                    auto to = index_paths(wq.paths(lx.idx[i], z));
                    for (std::size_t k = 0; k < us.size(); ++k) {
                        const Scalar& c = pres.coeff[j][i][k];
                        if (c == 0) continue;
                        auto it = to.find(concat(us[k].arrows, ws[r].arrows));
                        if (it == to.end()) throw ArqError("Internal", "path outside the window");
                        Scalar& x = fz(lx.off[z][i] + it->second, col);
                        x = f.add(x, c);
                    }
                }
            }
        }
        for (std::size_t i = 0; i < nx; ++i) {
            const auto& us = wq.paths(lx.idx[i], z);
            Matrix v = Matrix::column_vector(pres.generators[i]);
            for (std::size_t k = 0; k < us.size(); ++k) piz.set_block(0, lx.off[z][i] + k, multiply(f, m.path_map(us[k]), v));
        }
        Matrix b = Matrix::vstack(scale(f, Scalar(-1), gz), fz);
        cok[z] = cokernel_basis(f, b);
        e.set_dim(z, cok[z].rows());
        section.push_back(cok[z].rows() == 0 ? Matrix(dl + d0, 0) : *solve(f, cok[z], Matrix::identity(cok[z].rows())));
        Matrix incl(dl + d0, dl);
        incl.set_block(0, 0, Matrix::identity(dl));
        iota.at.push_back(multiply(f, cok[z], incl));
        Matrix proj(m.dim(z), dl + d0);
        proj.set_block(0, dl, piz);
        pi.at.push_back(multiply(f, proj, section[z]));
    }
    for (std::size_t a = 0; a < wq.arrows().size(); ++a) {
        const auto& ar = wq.arrows()[a];
        std::size_t y = ar.src, z = ar.dst;
        if (e.dim(y) == 0 || e.dim(z) == 0) continue;
        std::size_t d0y = lx.off[y][nx], d0z = lx.off[z][nx];
        Matrix p0(d0z, d0y);
        for (std::size_t i = 0; i < nx; ++i) {
            const auto& from = wq.paths(lx.idx[i], y);
            auto to = index_paths(wq.paths(lx.idx[i], z));
            for (std::size_t k = 0; k < from.size(); ++k) {
                auto it = to.find(concat(from[k].arrows, {a}));
                if (it != to.end()) p0(lx.off[z][i] + it->second, lx.off[y][i] + k) = 1;
            }
        }
        Matrix big(l.dim(z) + d0z, l.dim(y) + d0y);
        big.set_block(0, 0, l.map(a));
        big.set_block(l.dim(z), l.dim(y), p0);
        e.set_map(a, multiply(f, cok[z], multiply(f, big, section[y])));
    }
    for (std::size_t t = 0; t < q->num_tails(); ++t) {
        int ti = static_cast<int>(t);
        e.set_cont(ti, (m.cont(ti) || l.cont(ti)) && e.dim(wq.boundary(ti)) > 0);
    }
    e.info().name = describe(e);
    ARSequence s{l, e, m, iota, pi, decompose_with_maps(e)};
    res.sequence = std::move(s);
    return res;
}

AlmostSplitResult starting_at(const Rep& n) {
    AlmostSplitResult res;
    if (n.is_zero() || !known_indecomposable(n)) {
        res.reason = Unavailable::NotIndecomposable;
        res.detail = "representation is not indecomposable";
        return res;
    }
    if (!n.finite_dimensional()) {
        res.reason = Unavailable::InfiniteDimStart;
        res.detail = "representation is infinite dimensional";
        return res;
    }
    Rep dual = dualize(n);
    dual.info().indecomposable = true;
    AlmostSplitResult d = ending_at(dual, true);
    if (!d.sequence) {
        res.reason = d.reason == Unavailable::Projective ? Unavailable::Injective : d.reason;
        res.detail = d.reason == Unavailable::Projective ? "representation is injective" : d.detail;
        return res;
    }
    const ARSequence& s = *d.sequence;
    Rep left = dualize(s.right), right = dualize(s.left), mid = dualize(s.middle_sum);
    left.info() = n.info();
    left.info().indecomposable = true;
    right.info() = RepInfo{};
    right.info().indecomposable = true;
    right.info().name = describe(right);
    recognize(right);
    mid.info() = RepInfo{};
    mid.info().name = describe(mid);
    ARSequence r{left, mid, right, transpose_all(s.pi), transpose_all(s.iota), decompose_with_maps(mid)};
    res.sequence = std::move(r);
    return res;
}

/// Projections onto the summands of a decomposition.
std::vector<Morphism> summand_projections(const Field& f, const std::vector<Summand>& parts, std::size_t nv) {
    std::vector<Morphism> out(parts.size());
    for (std::size_t z = 0; z < nv; ++z) {
        Matrix all(parts.empty() ? 0 : parts[0].embedding[z].rows(), 0);
        for (const auto& p : parts) all = Matrix::hstack(all, p.embedding[z]);
        Matrix inv = all.rows() == 0 ? Matrix(0, 0) : inverse(f, all);
        std::size_t r0 = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            std::size_t c = parts[k].embedding[z].cols();
            out[k].at.push_back(inv.block(r0, 0, c, all.rows()));
            r0 += c;
        }
    }
    return out;
}

}  // namespace

Morphism extend_morphism(const Morphism& h, const Rep& src, const Rep& dst_ext) {
    const auto& old = src.wq();
    const auto& nw = dst_ext.wq();
    Morphism r;
    for (std::size_t z = 0; z < nw.size(); ++z) {
        const Vertex& v = nw.vertex(z);
        if (auto i = old.index(v)) {
            r.at.push_back(h.at[*i]);
            continue;
        }
        const Matrix& edge = h.at[old.boundary(v.tail)];
        std::size_t rows = edge.rows(), cols = edge.cols();
        r.at.push_back(src.cont(v.tail) ? edge : Matrix(rows, cols));
    }
    return r;
}

AlmostSplitResult almost_split(const Rep& m, Side side) {
    return side == Side::EndingAt ? ending_at(m) : starting_at(m);
}

ExactnessAudit audit(const ARSequence& s) {
    ExactnessAudit a;
    const Field& f = s.right.field();
    const auto& wq = s.middle_sum.wq();
    auto fail = [&](const std::string& msg) {
        a.ok = false;
        a.failures.push_back(msg);
    };
    if (s.left.window().depth != s.middle_sum.window().depth || s.right.window().depth != s.middle_sum.window().depth) {
        fail("terms live on different windows");
        return a;
    }
    const Quiver& q = *s.right.quiver();
    for (std::size_t z = 0; z < wq.size(); ++z) {
        std::string v = q.vertex_name(wq.vertex(z));
        std::size_t dl = s.left.dim(z), de = s.middle_sum.dim(z), dr = s.right.dim(z);
        if (dl + dr != de) fail("dimensions do not add up at " + v);
        if (!multiply(f, s.pi.at[z], s.iota.at[z]).is_zero()) fail("composite is not zero at " + v);
        if (rank(f, s.iota.at[z]) != dl) fail("first map is not injective at " + v);
        if (rank(f, s.pi.at[z]) != dr) fail("second map is not surjective at " + v);
    }
    for (std::size_t k = 0; k < wq.arrows().size(); ++k) {
        const auto& ar = wq.arrows()[k];
        if (multiply(f, s.middle_sum.map(k), s.iota.at[ar.src]) != multiply(f, s.iota.at[ar.dst], s.left.map(k)))
            fail("first map is not a morphism at arrow " + q.arrow_label(ar.id));
        if (multiply(f, s.right.map(k), s.pi.at[ar.src]) != multiply(f, s.pi.at[ar.dst], s.middle_sum.map(k)))
            fail("second map is not a morphism at arrow " + q.arrow_label(ar.id));
    }
    if (!a.ok) return a;
    // Non-split: no h : right → middle with π∘h = 1 (computed one step
    // beyond the window so that continuations are respected).
    Rep rx, ex;
    auto homs = hom_space(s.right, s.middle_sum, &rx, &ex);
    Morphism pix = extend_morphism(s.pi, s.middle_sum, rx);
    const auto& wx = rx.wq();
    std::vector<Scalar> target;
    for (std::size_t z = 0; z < wx.size(); ++z) {
        Matrix id = Matrix::identity(rx.dim(z));
        for (std::size_t r = 0; r < id.rows(); ++r)
            for (std::size_t c = 0; c < id.cols(); ++c) target.push_back(id(r, c));
    }
    Matrix sys(target.size(), homs.size());
    for (std::size_t k = 0; k < homs.size(); ++k) {
        std::size_t row = 0;
        Morphism c = compose(f, pix, homs[k]);
        for (const auto& m : c.at)
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t cc = 0; cc < m.cols(); ++cc) sys(row++, k) = m(r, cc);
    }
    if (solve(f, sys, Matrix::column_vector(target))) fail("sequence splits");
    return a;
}

MrasResult mras(const Rep& m, MrasSide side) {
    MrasResult res;
    const Field& f = m.field();
    if (side == MrasSide::Into) {
        if (is_projective(m)) {
            // rad P ↪ P.
            Window w = m.window();
            for (auto& d : w.depth) d += 1;
            Rep t = m.extended(w);
            std::vector<Matrix> rad;
            for (std::size_t z = 0; z < t.wq().size(); ++z) {
                Matrix images(t.dim(z), 0);
                for (std::size_t a : t.wq().in(z)) images = Matrix::hstack(images, t.map(a));
                rad.push_back(column_space(f, images));
            }
            Rep r = subrep(t, rad);
            for (std::size_t tt = 0; tt < t.quiver()->num_tails(); ++tt) {
                int ti = static_cast<int>(tt);
                r.set_cont(ti, t.cont(ti) && r.dim(r.wq().boundary(ti)) > 0);
            }
            Mras out{t, {}, {}};
            for (auto& s : decompose_with_maps(r)) {
                Morphism h;
                for (std::size_t z = 0; z < rad.size(); ++z) h.at.push_back(multiply(f, rad[z], s.embedding[z]));
                Rep piece = s.rep.trimmed();
                recognize(piece);
                out.summands.push_back(std::move(piece));
                out.maps.push_back(std::move(h));
            }
            res.value = std::move(out);
            return res;
        }
        auto as = almost_split(m, Side::EndingAt);
        if (!as.sequence) {
            res.reason = as.reason;
            res.detail = as.detail;
            return res;
        }
        Mras out{as.sequence->right, {}, {}};
        for (const auto& s : as.sequence->middle) {
            Morphism h;
            for (std::size_t z = 0; z < s.embedding.size(); ++z) h.at.push_back(multiply(f, as.sequence->pi.at[z], s.embedding[z]));
            Rep piece = s.rep.trimmed();
            recognize(piece);
            out.summands.push_back(std::move(piece));
            out.maps.push_back(std::move(h));
        }
        res.value = std::move(out);
        return res;
    }
    if (is_injective(m)) {
        if (!m.finite_dimensional()) {
            res.reason = Unavailable::InfiniteDimStart;
            res.detail = "injective representation is infinite dimensional";
            return res;
        }
        // I ↠ I / soc I.
        std::vector<Matrix> soc;
        for (std::size_t z = 0; z < m.wq().size(); ++z) {
            Matrix outs(0, m.dim(z));
            for (std::size_t a : m.wq().out(z)) outs = Matrix::vstack(outs, m.map(a));
            soc.push_back(kernel_matrix(f, outs));
        }
        auto [qr, proj] = quotient_rep(m, soc);
        auto parts = decompose_with_maps(qr);
        auto projs = summand_projections(f, parts, m.wq().size());
        Mras out{m, {}, {}};
        for (std::size_t k = 0; k < parts.size(); ++k) {
            Rep piece = parts[k].rep.trimmed();
            recognize(piece);
            out.summands.push_back(std::move(piece));
            out.maps.push_back(compose(f, projs[k], proj));
        }
        res.value = std::move(out);
        return res;
    }
    auto as = almost_split(m, Side::StartingAt);
    if (!as.sequence) {
        res.reason = as.reason;
        res.detail = as.detail;
        return res;
    }
    auto projs = summand_projections(f, as.sequence->middle, as.sequence->middle_sum.wq().size());
    Mras out{as.sequence->left, {}, {}};
    for (std::size_t k = 0; k < projs.size(); ++k) {
        Rep piece = as.sequence->middle[k].rep.trimmed();
        recognize(piece);
        out.summands.push_back(std::move(piece));
        out.maps.push_back(compose(f, projs[k], as.sequence->iota));
    }
    res.value = std::move(out);
    return res;
}

}  // namespace arq
