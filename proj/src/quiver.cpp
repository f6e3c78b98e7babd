#include "arq/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <set>

#include "arq/errors.hpp"

namespace arq {

Dir flip(Dir d) { return d == Dir::Out ? Dir::In : Dir::Out; }

std::string to_string(Dir d) { return d == Dir::Out ? "out" : "in"; }

Dir parse_dir(const std::string& s) {
    if (s == "out") return Dir::Out;
    if (s == "in") return Dir::In;
    throw ArqError("InvalidSpec", "orientation letter must be 'out' or 'in', got '" + s + "'");
}

Dir OrientationWord::at(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    return period[(n - prefix.size()) % period.size()];
}

std::optional<std::size_t> OrientationWord::constant_onset() const {
    for (Dir d : period)
        if (d != period.front()) return std::nullopt;
    std::size_t onset = prefix.size();
    while (onset > 0 && prefix[onset - 1] == period.front()) --onset;
    return onset;
}

std::optional<Dir> OrientationWord::eventual() const {
    if (!constant_onset()) return std::nullopt;
    return period.front();
}

OrientationWord OrientationWord::flipped() const {
    OrientationWord w;
    for (Dir d : prefix) w.prefix.push_back(flip(d));
    for (Dir d : period) w.period.push_back(flip(d));
    return w;
}

bool Window::contains(const Window& o) const {
    for (std::size_t t = 0; t < depth.size(); ++t)
        if (o.depth[t] > depth[t]) return false;
    return true;
}

Window Window::join(const Window& a, const Window& b) {
    Window w = a;
    for (std::size_t t = 0; t < w.depth.size(); ++t) w.depth[t] = std::max(a.depth[t], b.depth[t]);
    return w;
}

std::string QuiverClass::to_string() const {
    switch (tag) {
        case Tag::FiniteDynkin: return "FiniteDynkin(" + name + ")";
        case Tag::FiniteEuclidean: return "FiniteEuclidean";
        case Tag::FiniteWild: return "FiniteWild";
        case Tag::InfDynkin: return "InfDynkin(" + name + ")";
        case Tag::InfiniteGeneral: return "InfiniteGeneral";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Shorthands

QuiverSpec shorthand_a_inf(const OrientationWord& w) {
    QuiverSpec s;
    s.core_vertices = {"0"};
    s.tails.push_back({"0", w, TailLabels{0, 1}});
    s.shorthand = "A_inf";
    return s;
}

QuiverSpec shorthand_a_biinf(const OrientationWord& right, const OrientationWord& left) {
    QuiverSpec s;
    s.core_vertices = {"0"};
    s.tails.push_back({"0", right, TailLabels{0, 1}});
    s.tails.push_back({"0", left, TailLabels{0, -1}});
    s.shorthand = "A_biinf";
    return s;
}

QuiverSpec shorthand_d_inf(Dir fork0, Dir fork1, const OrientationWord& spine) {
    QuiverSpec s;
    s.core_vertices = {"0", "1", "2"};
    s.core_arrows.push_back(fork0 == Dir::Out ? ArrowSpec{"2", "0", "a0"} : ArrowSpec{"0", "2", "a0"});
    s.core_arrows.push_back(fork1 == Dir::Out ? ArrowSpec{"2", "1", "a1"} : ArrowSpec{"1", "2", "a1"});
    s.tails.push_back({"2", spine, TailLabels{2, 1}});
    s.shorthand = "D_inf";
    return s;
}

// ---------------------------------------------------------------------------
// Quiver

struct QuiverPair {
    Quiver first;
    Quiver second;
};

struct WindowCache {
    std::mutex mutex;
    std::map<std::vector<std::size_t>, std::shared_ptr<const WindowQuiver>> entries;
};

namespace {

std::optional<long> parse_long(const std::string& s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::string tail_default_name(int t, std::size_t i) { return "t" + std::to_string(t) + "." + std::to_string(i); }

QuiverSpec opposite_spec(const QuiverSpec& s) {
    QuiverSpec o = s;
    for (auto& a : o.core_arrows) std::swap(a.from, a.to);
    for (auto& t : o.tails) t.orientation = t.orientation.flipped();
    return o;
}

}  // namespace

QuiverPtr build_quiver(const QuiverSpec& spec, const Field& field) {
    // Validation is performed on the spec once; the opposite inherits it.
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < spec.core_vertices.size(); ++i) {
        const auto& n = spec.core_vertices[i];
        if (n.empty()) throw ArqError("InvalidSpec", "empty vertex name");
        if (!idx.emplace(n, i).second) throw ArqError("InvalidSpec", "duplicate vertex '" + n + "'");
    }
    std::vector<std::size_t> src, dst;
    for (const auto& a : spec.core_arrows) {
        auto s = idx.find(a.from), d = idx.find(a.to);
        if (s == idx.end()) throw ArqError("DanglingArrow", "arrow endpoint '" + a.from + "' is not a vertex");
        if (d == idx.end()) throw ArqError("DanglingArrow", "arrow endpoint '" + a.to + "' is not a vertex");
        if (s->second == d->second) throw ArqError("CoreCycle", "loop at " + a.from);
        src.push_back(s->second);
        dst.push_back(d->second);
    }
    std::vector<std::size_t> attach;
    for (std::size_t t = 0; t < spec.tails.size(); ++t) {
        const auto& ts = spec.tails[t];
        auto it = idx.find(ts.attach);
        if (it == idx.end()) throw ArqError("DanglingArrow", "tail attach point '" + ts.attach + "' is not a vertex");
        if (ts.orientation.period.empty()) throw ArqError("EmptyPeriod", "tail " + std::to_string(t) + " has an empty period");
        if (ts.labels && ts.labels->step == 0) throw ArqError("InvalidSpec", "tail label step must be nonzero");
        attach.push_back(it->second);
    }
    // Oriented cycle detection on the core (tails are lines and cannot close cycles).
    const std::size_t n = spec.core_vertices.size();
    std::vector<int> color(n, 0);
    std::vector<std::size_t> stack;
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) -> bool {
        color[v] = 1;
        stack.push_back(v);
        for (std::size_t a = 0; a < src.size(); ++a) {
            if (src[a] != v) continue;
            if (color[dst[a]] == 1) {
                std::string w;
                auto from = std::find(stack.begin(), stack.end(), dst[a]);
                for (auto p = from; p != stack.end(); ++p) w += spec.core_vertices[*p] + " -> ";
                w += spec.core_vertices[dst[a]];
                throw ArqError("CoreCycle", w);
            }
            if (color[dst[a]] == 0 && dfs(dst[a])) return true;
        }
        stack.pop_back();
        color[v] = 2;
        return false;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (color[v] == 0) dfs(v);
    // Integer tail labels must not collide with other names.
    std::set<std::string> names(spec.core_vertices.begin(), spec.core_vertices.end());
    for (std::size_t t = 0; t < spec.tails.size(); ++t) {
        const auto& l = spec.tails[t].labels;
        if (!l) continue;
        for (std::size_t i = 1; i <= 1000; ++i) {
            std::string nm = std::to_string(l->offset + l->step * static_cast<long>(i));
            if (!names.insert(nm).second)
                throw ArqError("InvalidSpec", "tail label '" + nm + "' collides with another vertex name");
        }
    }

    auto pair = std::make_shared<QuiverPair>();
    Quiver* qs[2] = {&pair->first, &pair->second};
    QuiverSpec specs[2] = {spec, opposite_spec(spec)};
    for (int k = 0; k < 2; ++k) {
        Quiver& q = *qs[k];
        q.spec_ = specs[k];
        q.field_ = field;
        q.tail_attach_ = attach;
        q.core_index_ = idx;
        q.core_src_ = k == 0 ? src : dst;
        q.core_dst_ = k == 0 ? dst : src;
        q.is_first_ = k == 0;
        q.pair_ = pair;
        q.cache_ = std::make_shared<WindowCache>();
    }
    return QuiverPtr(pair, &pair->first);
}

QuiverPtr Quiver::opposite() const {
    auto p = pair_.lock();
    return QuiverPtr(p, is_first_ ? &p->second : &p->first);
}

QuiverPtr Quiver::self() const {
    auto p = pair_.lock();
    return QuiverPtr(p, is_first_ ? &p->first : &p->second);
}

QuiverPtr Quiver::with_field(const Field& f) const {
    if (f == field_) return self();
    return build_quiver(spec_, f);
}

std::size_t Quiver::structural_depth(int t) const {
    const auto& o = spec_.tails[static_cast<std::size_t>(t)].orientation;
    return o.prefix.size() + o.period.size();
}

Window Quiver::structural_window() const {
    Window w;
    for (std::size_t t = 0; t < num_tails(); ++t) w.depth.push_back(structural_depth(static_cast<int>(t)));
    return w;
}

Window Quiver::uniform_window(std::size_t depth) const {
    Window w;
    w.depth.assign(num_tails(), depth);
    return w;
}

std::string Quiver::vertex_name(const Vertex& v) const {
    if (v.is_core()) return spec_.core_vertices[v.index];
    const auto& l = spec_.tails[static_cast<std::size_t>(v.tail)].labels;
    if (l) return std::to_string(l->offset + l->step * static_cast<long>(v.index));
    return tail_default_name(v.tail, v.index);
}

std::optional<Vertex> Quiver::find_vertex(const std::string& name) const {
    if (auto it = core_index_.find(name); it != core_index_.end()) return Vertex::core(it->second);
    if (auto n = parse_long(name)) {
        for (std::size_t t = 0; t < num_tails(); ++t) {
            const auto& l = spec_.tails[t].labels;
            if (!l) continue;
            long d = *n - l->offset;
            if (d % l->step == 0 && d / l->step >= 1)
                return Vertex::on_tail(static_cast<int>(t), static_cast<std::size_t>(d / l->step));
        }
    }
    if (name.size() > 1 && name[0] == 't') {
        auto dot = name.find('.');
        if (dot != std::string::npos) {
            auto t = parse_long(name.substr(1, dot - 1));
            auto i = parse_long(name.substr(dot + 1));
            if (t && i && *t >= 0 && static_cast<std::size_t>(*t) < num_tails() && *i >= 1)
                return Vertex::on_tail(static_cast<int>(*t), static_cast<std::size_t>(*i));
        }
    }
    return std::nullopt;
}

Vertex Quiver::vertex(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw ArqError("UnknownVertex", "no vertex named '" + name + "'");
    return *v;
}

Vertex Quiver::source(const ArrowId& a) const {
    if (a.tail < 0) return Vertex::core(core_src_[a.index]);
    Vertex inner = a.index == 0 ? Vertex::core(tail_attach(a.tail)) : Vertex::on_tail(a.tail, a.index);
    Vertex outer = Vertex::on_tail(a.tail, a.index + 1);
    return tail_dir(a.tail, a.index) == Dir::Out ? inner : outer;
}

Vertex Quiver::target(const ArrowId& a) const {
    if (a.tail < 0) return Vertex::core(core_dst_[a.index]);
    Vertex inner = a.index == 0 ? Vertex::core(tail_attach(a.tail)) : Vertex::on_tail(a.tail, a.index);
    Vertex outer = Vertex::on_tail(a.tail, a.index + 1);
    return tail_dir(a.tail, a.index) == Dir::Out ? outer : inner;
}

std::string Quiver::arrow_label(const ArrowId& a) const {
    if (a.tail < 0) {
        const auto& l = spec_.core_arrows[a.index].label;
        return l.empty() ? "a" + std::to_string(a.index) : l;
    }
    return vertex_name(source(a)) + "->" + vertex_name(target(a));
}

std::vector<ArrowId> Quiver::out_arrows(const Vertex& v) const {
    std::vector<ArrowId> r;
    auto consider = [&](const ArrowId& a) {
        if (source(a) == v) r.push_back(a);
    };
    if (v.is_core()) {
        for (std::size_t a = 0; a < core_src_.size(); ++a)
            if (core_src_[a] == v.index) r.push_back({-1, a});
        for (std::size_t t = 0; t < num_tails(); ++t)
            if (tail_attach_[t] == v.index) consider({static_cast<int>(t), 0});
    } else {
        consider({v.tail, v.index - 1});
        consider({v.tail, v.index});
    }
    return r;
}

std::vector<ArrowId> Quiver::in_arrows(const Vertex& v) const {
    std::vector<ArrowId> r;
    auto consider = [&](const ArrowId& a) {
        if (target(a) == v) r.push_back(a);
    };
    if (v.is_core()) {
        for (std::size_t a = 0; a < core_dst_.size(); ++a)
            if (core_dst_[a] == v.index) r.push_back({-1, a});
        for (std::size_t t = 0; t < num_tails(); ++t)
            if (tail_attach_[t] == v.index) consider({static_cast<int>(t), 0});
    } else {
        consider({v.tail, v.index - 1});
        consider({v.tail, v.index});
    }
    return r;
}

Window Quiver::window_of(const Vertex& v) const {
    Window w = uniform_window(0);
    if (!v.is_core()) w.depth[static_cast<std::size_t>(v.tail)] = v.index;
    return w;
}

std::shared_ptr<const WindowQuiver> Quiver::window_quiver(const Window& w) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& slot = cache_->entries[w.depth];
    if (!slot) slot = std::make_shared<const WindowQuiver>(*this, w);
    return slot;
}

// ---------------------------------------------------------------------------
// WindowQuiver

WindowQuiver::WindowQuiver(const Quiver& q, Window w) : q_(&q), w_(std::move(w)) {
    if (w_.depth.size() != q_->num_tails()) throw ArqError("InvalidWindow", "window has wrong number of tails");
    for (std::size_t i = 0; i < q_->num_core(); ++i) vertices_.push_back(Vertex::core(i));
    for (std::size_t t = 0; t < q_->num_tails(); ++t)
        for (std::size_t i = 1; i <= w_.depth[t]; ++i) vertices_.push_back(Vertex::on_tail(static_cast<int>(t), i));
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = i;
    for (std::size_t a = 0; a < q_->num_core_arrows(); ++a) {
        ArrowId id{-1, a};
        arrows_.push_back({index_.at(q_->source(id)), index_.at(q_->target(id)), id});
    }
    for (std::size_t t = 0; t < q_->num_tails(); ++t)
        for (std::size_t n = 0; n < w_.depth[t]; ++n) {
            ArrowId id{static_cast<int>(t), n};
            arrows_.push_back({index_.at(q_->source(id)), index_.at(q_->target(id)), id});
        }
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        arrow_index_[arrows_[a].id] = a;
        out_[arrows_[a].src].push_back(a);
        in_[arrows_[a].dst].push_back(a);
    }
    std::vector<std::size_t> indeg(vertices_.size());
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if ((indeg[v] = in_[v].size()) == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::size_t v = ready.front();
        ready.pop_front();
        topo_.push_back(v);
        for (std::size_t a : out_[v])
            if (--indeg[arrows_[a].dst] == 0) ready.push_back(arrows_[a].dst);
    }
    paths_.assign(vertices_.size(), {});
    paths_done_.assign(vertices_.size(), false);
}

std::optional<std::size_t> WindowQuiver::index(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> WindowQuiver::arrow_index(const ArrowId& a) const {
    auto it = arrow_index_.find(a);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
}

std::size_t WindowQuiver::boundary(int t) const {
    std::size_t d = w_.depth[static_cast<std::size_t>(t)];
    if (d == 0) return index_.at(Vertex::core(q_->tail_attach(t)));
    return index_.at(Vertex::on_tail(t, d));
}

void WindowQuiver::ensure_paths_from(std::size_t x) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (paths_done_[x]) return;
    auto& table = paths_[x];
    table.assign(vertices_.size(), {});
    // Breadth-first by length; within a length, lexicographic on arrow index.
    std::vector<WPath> layer{{x, x, {}}};
    while (!layer.empty()) {
        std::vector<WPath> next;
        for (const auto& p : layer) {
            table[p.dst].push_back(p);
            for (std::size_t a : out_[p.dst]) {
                WPath e = p;
                e.arrows.push_back(a);
                e.dst = arrows_[a].dst;
                next.push_back(std::move(e));
            }
        }
        std::sort(next.begin(), next.end(), [](const WPath& a, const WPath& b) { return a.arrows < b.arrows; });
        layer = std::move(next);
    }
    paths_done_[x] = true;
}

const std::vector<WindowQuiver::WPath>& WindowQuiver::paths(std::size_t x, std::size_t y) const {
    ensure_paths_from(x);
    return paths_[x][y];
}

Path WindowQuiver::to_path(const WPath& p) const {
    Path r{vertices_[p.src], vertices_[p.dst], {}};
    for (std::size_t a : p.arrows) r.arrows.push_back(arrows_[a].id);
    return r;
}

std::vector<Path> paths_between(const QuiverPtr& q, const Vertex& x, const Vertex& y) {
    Window w = Window::join(q->window_of(x), q->window_of(y));
    WindowQuiver wq(*q, w);
    auto ix = wq.index(x), iy = wq.index(y);
    std::vector<Path> r;
    for (const auto& p : wq.paths(*ix, *iy)) r.push_back(wq.to_path(p));
    return r;
}

// ---------------------------------------------------------------------------
// Infinite paths and Q⁺

PathProfile infinite_path_profile(const Quiver& q) {
    PathProfile p;
    for (std::size_t t = 0; t < q.num_tails(); ++t) {
        const auto& o = q.spec().tails[t].orientation;
        auto onset = o.constant_onset();
        if (!onset) continue;
        TailWitness w{static_cast<int>(t), *onset};
        if (o.period.front() == Dir::Out) {
            p.has_right_infinite = true;
            p.right_witnesses.push_back(w);
        } else {
            p.has_left_infinite = true;
            p.left_witnesses.push_back(w);
        }
    }
    return p;
}

bool VertexSet::contains(const Vertex& v) const {
    if (!v.is_core() && v.index > window.depth[static_cast<std::size_t>(v.tail)])
        return beyond[static_cast<std::size_t>(v.tail)];
    return std::binary_search(members.begin(), members.end(), v);
}

bool VertexSet::empty() const {
    return members.empty() && std::none_of(beyond.begin(), beyond.end(), [](bool b) { return b; });
}

bool VertexSet::finite() const {
    return std::none_of(beyond.begin(), beyond.end(), [](bool b) { return b; });
}

QPlus q_plus(const Quiver& q) {
    Window w = q.structural_window();
    for (auto& d : w.depth) d += 1;
    WindowQuiver wq(q, w);
    const std::size_t n = wq.size();
    std::vector<bool> bad(n, false);
    std::vector<bool> bad_beyond(q.num_tails(), false);
    std::deque<std::size_t> queue;
    auto mark = [&](std::size_t v) {
        if (!bad[v]) {
            bad[v] = true;
            queue.push_back(v);
        }
    };
    // Every vertex of an eventually-In tail past its onset ends a left
    // infinite path; so does everything reachable from the onset vertex.
    for (const auto& wt : infinite_path_profile(q).left_witnesses) {
        bad_beyond[static_cast<std::size_t>(wt.tail)] = true;
        for (std::size_t i = std::max<std::size_t>(wt.onset, 1); i <= w.depth[static_cast<std::size_t>(wt.tail)]; ++i)
            mark(*wq.index(Vertex::on_tail(wt.tail, i)));
        if (wt.onset == 0) mark(*wq.index(Vertex::core(q.tail_attach(wt.tail))));
    }
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t a : wq.out(v)) mark(wq.arrows()[a].dst);
    }
    // Reachability that hits the window boundary of an eventually-Out tail
    // continues forever.
    for (std::size_t t = 0; t < q.num_tails(); ++t) {
        auto ev = q.spec().tails[t].orientation.eventual();
        if (ev == Dir::Out && bad[wq.boundary(static_cast<int>(t))]) bad_beyond[t] = true;
    }

    QPlus res;
    res.vertices.window = w;
    res.vertices.beyond.resize(q.num_tails());
    for (std::size_t t = 0; t < q.num_tails(); ++t) res.vertices.beyond[t] = !bad_beyond[t];
    for (std::size_t v = 0; v < n; ++v)
        if (!bad[v]) res.vertices.members.push_back(wq.vertex(v));
    std::sort(res.vertices.members.begin(), res.vertices.members.end());

    // Connected components of the good part (undirected).
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return wq.vertex(a) < wq.vertex(b); });
    for (std::size_t s : order) {
        if (bad[s] || comp[s] >= 0) continue;
        std::deque<std::size_t> dq{s};
        comp[s] = ncomp;
        while (!dq.empty()) {
            std::size_t v = dq.front();
            dq.pop_front();
            auto visit = [&](std::size_t u) {
                if (!bad[u] && comp[u] < 0) {
                    comp[u] = ncomp;
                    dq.push_back(u);
                }
            };
            for (std::size_t a : wq.out(v)) visit(wq.arrows()[a].dst);
            for (std::size_t a : wq.in(v)) visit(wq.arrows()[a].src);
        }
        ++ncomp;
    }
    for (int c = 0; c < ncomp; ++c) {
        VertexSet vs;
        vs.window = w;
        vs.beyond.assign(q.num_tails(), false);
        for (std::size_t v = 0; v < n; ++v)
            if (comp[v] == c) vs.members.push_back(wq.vertex(v));
        std::sort(vs.members.begin(), vs.members.end());
        for (std::size_t t = 0; t < q.num_tails(); ++t)
            if (!bad_beyond[t] && comp[wq.boundary(static_cast<int>(t))] == c) vs.beyond[t] = true;
        res.components.push_back(std::move(vs));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

/// Undirected simple-graph view of the core plus tail attachments.
struct CoreGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> adj;  // with multiplicity
    std::vector<std::size_t> tails_at;
};

CoreGraph core_graph(const Quiver& q) {
    CoreGraph g;
    g.n = q.num_core();
    g.adj.assign(g.n, {});
    g.tails_at.assign(g.n, 0);
    for (std::size_t a = 0; a < q.num_core_arrows(); ++a) {
        auto s = q.source({-1, a}).index, d = q.target({-1, a}).index;
        g.adj[s].push_back(d);
        g.adj[d].push_back(s);
    }
    for (std::size_t t = 0; t < q.num_tails(); ++t) g.tails_at[q.tail_attach(static_cast<int>(t))]++;
    return g;
}

bool graph_connected(const CoreGraph& g) {
    if (g.n == 0) return true;
    std::vector<bool> seen(g.n, false);
    std::deque<std::size_t> dq{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!dq.empty()) {
        auto v = dq.front();
        dq.pop_front();
        for (auto u : g.adj[v])
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                dq.push_back(u);
            }
    }
    return count == g.n;
}

/// Sign class of the Tits form: 1 positive definite, 0 positive
/// semidefinite (singular), -1 indefinite.
int tits_form_class(const CoreGraph& g) {
    const std::size_t n = g.n;
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 2;
        for (auto j : g.adj[i]) m[i][j] -= 1;
    }
    std::vector<bool> done(n, false);
    bool singular = false;
    for (std::size_t step = 0; step < n; ++step) {
        std::optional<std::size_t> piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (m[i][i] < 0) return -1;
            if (m[i][i] > 0 && !piv) piv = i;
        }
        if (!piv) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && m[i][j] != 0) return -1;
            singular = true;
            break;
        }
        std::size_t p = *piv;
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || m[i][p] == 0) continue;
            Scalar factor = m[i][p] / m[p][p];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= factor * m[p][j];
        }
    }
    return singular ? 0 : 1;
}

std::string dynkin_name(const CoreGraph& g) {
    std::size_t n = g.n;
    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v)
        if (g.adj[v].size() >= 3) branch.push_back(v);
    if (branch.empty()) return "A_" + std::to_string(n);
    std::size_t c = branch.front();
    std::vector<std::size_t> arms;
    for (auto start : g.adj[c]) {
        std::size_t len = 0, prev = c, cur = start;
        while (true) {
            ++len;
            std::optional<std::size_t> next;
            for (auto u : g.adj[cur])
                if (u != prev) next = u;
            if (!next) break;
            prev = cur;
            cur = *next;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D_" + std::to_string(arms[2] + 3);
    if (arms[1] == 2 && arms[2] == 2) return "E_6";
    if (arms[1] == 2 && arms[2] == 3) return "E_7";
    return "E_8";
}

bool has_multi_edge(const CoreGraph& g) {
    for (std::size_t v = 0; v < g.n; ++v) {
        std::set<std::size_t> s(g.adj[v].begin(), g.adj[v].end());
        if (s.size() != g.adj[v].size()) return true;
    }
    return false;
}

}  // namespace

bool is_connected(const Quiver& q) { return graph_connected(core_graph(q)); }

QuiverClass classify_quiver(const Quiver& q) {
    CoreGraph g = core_graph(q);
    if (!graph_connected(g) || g.n == 0) throw ArqError("Disconnected", "the quiver is not connected");
    QuiverClass c;
    if (q.num_tails() == 0) {
        int k = tits_form_class(g);
        if (k == 1) {
            c.tag = QuiverClass::Tag::FiniteDynkin;
            c.name = dynkin_name(g);
        } else {
            c.tag = k == 0 ? QuiverClass::Tag::FiniteEuclidean : QuiverClass::Tag::FiniteWild;
        }
        return c;
    }
    c.tag = QuiverClass::Tag::InfiniteGeneral;
    bool tree = q.num_core_arrows() + 1 == g.n && !has_multi_edge(g);
    if (!tree) return c;
    std::vector<std::size_t> deg(g.n);
    std::size_t over2 = 0, eq3 = 0;
    for (std::size_t v = 0; v < g.n; ++v) {
        deg[v] = g.adj[v].size() + g.tails_at[v];
        if (deg[v] > 2) ++over2;
        if (deg[v] == 3) ++eq3;
    }
    if (over2 == 0) {
        c.tag = QuiverClass::Tag::InfDynkin;
        c.name = q.num_tails() == 1 ? "A_inf" : "A_biinf";
        return c;
    }
    if (q.num_tails() == 1 && over2 == 1 && eq3 == 1) {
        std::size_t b = 0;
        while (deg[b] != 3) ++b;
        std::size_t leaves = 0;
        for (auto u : g.adj[b])
            if (deg[u] == 1) ++leaves;
        if (leaves >= 2) {
            c.tag = QuiverClass::Tag::InfDynkin;
            c.name = "D_inf";
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Coordinates

namespace {

std::optional<ArrowId> arrow_between(const Quiver& q, const Vertex& a, const Vertex& b) {
    for (const auto& id : q.out_arrows(a))
        if (q.target(id) == b) return id;
    return std::nullopt;
}

}  // namespace

LineModel::LineModel(QuiverPtr q) : q_(std::move(q)) {
    CoreGraph g = core_graph(*q_);
    auto cls = classify_quiver(*q_);
    bool type_a = (cls.tag == QuiverClass::Tag::FiniteDynkin && cls.name.rfind("A_", 0) == 0) ||
                  (cls.tag == QuiverClass::Tag::InfDynkin && cls.name != "D_inf");
    if (!type_a) throw ArqError("WrongType", "quiver is not of type A");
    // Order the core path starting at the appropriate end.
    std::size_t start = 0;
    if (q_->num_tails() == 2) {
        start = q_->tail_attach(1);
    } else {
        std::vector<std::size_t> ends;
        for (std::size_t v = 0; v < g.n; ++v)
            if (g.adj[v].size() <= 1) ends.push_back(v);
        start = ends.front();
        if (q_->num_tails() == 1 && g.n > 1 && start == q_->tail_attach(0)) start = ends.back();
    }
    std::vector<std::size_t> order{start};
    std::size_t prev = start;
    while (order.size() < g.n) {
        std::size_t cur = order.back();
        for (auto u : g.adj[cur])
            if (u != prev || order.size() == 1) {
                if (std::find(order.begin(), order.end(), u) == order.end()) {
                    prev = cur;
                    order.push_back(u);
                    break;
                }
            }
    }
    auto ints = [&](const std::vector<std::size_t>& ord, int step) -> std::optional<long> {
        std::optional<long> first;
        for (std::size_t k = 0; k < ord.size(); ++k) {
            auto v = parse_long(q_->spec().core_vertices[ord[k]]);
            if (!v) return std::nullopt;
            if (!first) first = *v;
            if (*v != *first + step * static_cast<long>(k)) return std::nullopt;
        }
        return first;
    };
    if (auto b = ints(order, 1)) {
        base_ = *b;
    } else if (q_->num_tails() == 0) {
        std::reverse(order.begin(), order.end());
        if (auto b2 = ints(order, 1)) base_ = *b2;
        else std::reverse(order.begin(), order.end());
    }
    for (auto v : order) seq_.push_back(Vertex::core(v));
    long last = base_ + static_cast<long>(seq_.size()) - 1;
    lo_ = base_;
    hi_ = last;
    slo_ = base_;
    shi_ = last;
    if (q_->num_tails() >= 1) {
        right_tail_ = 0;
        hi_.reset();
        shi_ = last + static_cast<long>(q_->structural_depth(0));
        phi_ = q_->spec().tails[0].orientation.period.size();
    }
    if (q_->num_tails() == 2) {
        left_tail_ = 1;
        lo_.reset();
        slo_ = base_ - static_cast<long>(q_->structural_depth(1));
        plo_ = q_->spec().tails[1].orientation.period.size();
    }
}

bool LineModel::in_range(long c) const { return (!lo_ || c >= *lo_) && (!hi_ || c <= *hi_); }

Vertex LineModel::vertex_at(long c) const {
    if (!in_range(c)) throw ArqError("UnknownVertex", "coordinate " + std::to_string(c) + " out of range");
    long last = base_ + static_cast<long>(seq_.size()) - 1;
    if (c < base_) return Vertex::on_tail(left_tail_, static_cast<std::size_t>(base_ - c));
    if (c > last) return Vertex::on_tail(right_tail_, static_cast<std::size_t>(c - last));
    return seq_[static_cast<std::size_t>(c - base_)];
}

long LineModel::coord(const Vertex& v) const {
    long last = base_ + static_cast<long>(seq_.size()) - 1;
    if (v.tail == right_tail_ && !v.is_core()) return last + static_cast<long>(v.index);
    if (v.tail == left_tail_ && !v.is_core()) return base_ - static_cast<long>(v.index);
    for (std::size_t k = 0; k < seq_.size(); ++k)
        if (seq_[k] == v) return base_ + static_cast<long>(k);
    throw ArqError("UnknownVertex", "vertex not on the line");
}

bool LineModel::right_edge(long c) const {
    if (!has_edge(c)) throw ArqError("UnknownVertex", "no edge at coordinate " + std::to_string(c));
    return arrow_between(*q_, vertex_at(c), vertex_at(c + 1)).has_value();
}

DInfModel::DInfModel(QuiverPtr q) : q_(std::move(q)) {
    auto cls = classify_quiver(*q_);
    if (cls.tag != QuiverClass::Tag::InfDynkin || cls.name != "D_inf") throw ArqError("WrongType", "quiver is not of type D_inf");
    CoreGraph g = core_graph(*q_);
    std::size_t b = 0;
    while (g.adj[b].size() + g.tails_at[b] != 3) ++b;
    std::vector<std::size_t> leaves;
    std::optional<std::size_t> spine_next;
    for (auto u : g.adj[b]) {
        if (g.adj[u].size() + g.tails_at[u] == 1 && leaves.size() < 2) leaves.push_back(u);
        else spine_next = u;
    }
    std::sort(leaves.begin(), leaves.end());
    finite_ = {Vertex::core(leaves[0]), Vertex::core(leaves[1]), Vertex::core(b)};
    std::size_t prev = b;
    while (spine_next) {
        std::size_t cur = *spine_next;
        finite_.push_back(Vertex::core(cur));
        spine_next.reset();
        for (auto u : g.adj[cur])
            if (u != prev) spine_next = u;
        prev = cur;
    }
    tail_ = 0;
    sdepth_ = finite_.size() + q_->structural_depth(0);
}

Vertex DInfModel::vertex_at(long c) const {
    if (c < 0) throw ArqError("UnknownVertex", "negative D_inf coordinate");
    if (static_cast<std::size_t>(c) < finite_.size()) return finite_[static_cast<std::size_t>(c)];
    return Vertex::on_tail(tail_, static_cast<std::size_t>(c) - finite_.size() + 1);
}

long DInfModel::coord(const Vertex& v) const {
    if (!v.is_core()) return static_cast<long>(finite_.size() - 1 + v.index);
    for (std::size_t k = 0; k < finite_.size(); ++k)
        if (finite_[k] == v) return static_cast<long>(k);
    throw ArqError("UnknownVertex", "vertex not in D_inf model");
}

bool DInfModel::points(long a, long b) const {
    return arrow_between(*q_, vertex_at(a), vertex_at(b)).has_value();
}

}  // namespace arq
