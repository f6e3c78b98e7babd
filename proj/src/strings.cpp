#include "arq/strings.hpp"

#include <algorithm>

#include "arq/errors.hpp"

namespace arq {

namespace {

LineModel infinite_line(const QuiverPtr& q) {
    auto cls = classify_quiver(*q);
    if (cls.tag != QuiverClass::Tag::InfDynkin || (cls.name != "A_inf" && cls.name != "A_biinf"))
        throw ArqError("WrongType", "Q_R and Q_L are defined for quivers of type A_inf and A_biinf");
    return LineModel(q);
}

/// Whether the arrow between c and c + o (o = ±1) points c → c + o.
bool points_out(const LineModel& lm, long c, long o) { return o > 0 ? lm.right_edge(c) : !lm.right_edge(c - 1); }

/// Walks from c in direction o while the edge to the next vertex points
/// outward (`want_out`) resp. inward. Returns the last vertex reached, or
/// std::nullopt when the walk continues forever along a periodic tail.
std::optional<long> run(const LineModel& lm, long c, long o, bool want_out) {
    long start = c;
    long per = static_cast<long>(o > 0 ? lm.period_hi() : lm.period_lo());
    while (lm.in_range(c + o) && points_out(lm, c, o) == want_out) {
        c += o;
        if (o > 0 && c > std::max(start, lm.structural_hi()) + per) return std::nullopt;
        if (o < 0 && c < std::min(start, lm.structural_lo()) - per) return std::nullopt;
    }
    return c;
}

/// Scan bounds below / above which no new membership pattern can appear.
long scan_floor(const LineModel& lm, long from) {
    long b = std::min(from, lm.structural_lo()) - 2 * static_cast<long>(lm.period_lo()) - 2;
    return lm.lo() ? std::max(b, *lm.lo()) : b;
}
long scan_ceiling(const LineModel& lm, long from) {
    return std::max(from, lm.structural_hi()) + 2 * static_cast<long>(lm.period_hi()) + 2;
}

std::optional<PathSeg> member(const LineModel& lm, StringSide side, long x) {
    if (!lm.in_range(x)) return std::nullopt;
    if (side == StringSide::R) {
        // Starting points: x with an arrow x → x−1, or the end vertex of weight one.
        if (lm.in_range(x - 1) && lm.right_edge(x - 1)) return std::nullopt;
        if (lm.in_range(x + 1) && lm.right_edge(x)) return PathSeg{x, run(lm, x, 1, true)};
        return PathSeg{x, x};
    }
    // Q_L: starting points x with an arrow x → x+1.
    if (!lm.in_range(x + 1) || !lm.right_edge(x)) return std::nullopt;
    if (lm.in_range(x - 1) && !lm.right_edge(x - 1)) return PathSeg{x, run(lm, x, -1, true)};
    return PathSeg{x, x};
}

StringSpec seg_interval(const PathSeg& p) {
    if (!p.end) return StringSpec{p.start, std::nullopt};
    return StringSpec{std::min(p.start, *p.end), std::max(p.start, *p.end)};
}

StringSpec side_interval(StringSide side, const PathSeg& p) {
    if (p.end) return seg_interval(p);
    return side == StringSide::R ? StringSpec{p.start, std::nullopt} : StringSpec{std::nullopt, p.start};
}

void check_string(const LineModel& lm, const StringSpec& s) {
    if ((s.lo && !lm.in_range(*s.lo)) || (s.hi && !lm.in_range(*s.hi)) || (s.lo && s.hi && *s.lo > *s.hi) ||
        (!s.lo && lm.lo()) || (!s.hi && lm.hi()))
        throw ArqError("InvalidArgument", "string outside the quiver");
}

/// Innermost vertex c of the string such that every edge of the string
/// beyond c (in direction o) points outward.
long outward_run_start(const LineModel& lm, const StringSpec& s, long o) {
    long c;
    if (o > 0) c = s.hi ? *s.hi : std::max(s.lo ? *s.lo : lm.structural_hi(), lm.structural_hi()) + 1;
    else c = s.lo ? *s.lo : std::min(s.hi ? *s.hi : lm.structural_lo(), lm.structural_lo()) - 1;
    auto inside = [&](long v) { return (!s.lo || v >= *s.lo) && (!s.hi || v <= *s.hi); };
    while (inside(c - o) && points_out(lm, c - o, o)) c -= o;
    return c;
}

/// New end of the string at side o for τ (cohook added or hook deleted).
/// Returns {end, zero}; end == std::nullopt means the new end is infinite.
struct EndResult {
    std::optional<long> end;
    bool zero = false;
};

EndResult tau_end(const LineModel& lm, const StringSpec& s, long o) {
    std::optional<long> b = o > 0 ? s.hi : s.lo;
    auto inside = [&](long v) { return (!s.lo || v >= *s.lo) && (!s.hi || v <= *s.hi); };
    if (b && lm.in_range(*b + o) && points_out(lm, *b, o)) return {run(lm, *b + o, o, false), false};
    // Delete a hook: the outward run at this end together with the arrow before it.
    long c = outward_run_start(lm, s, o);
    if (!inside(c - o)) return {std::nullopt, true};
    return {c - o, false};
}

EndResult cotau_end(const LineModel& lm, const StringSpec& s, long o) {
    long b = o > 0 ? *s.hi : *s.lo;
    auto inside = [&](long v) { return (!s.lo || v >= *s.lo) && (!s.hi || v <= *s.hi); };
    if (lm.in_range(b + o) && !points_out(lm, b, o)) return {run(lm, b + o, o, true), false};
    // Delete a cohook: the inward run at this end together with the arrow before it.
    long c = b;
    while (inside(c - o) && !points_out(lm, c - o, o)) c -= o;
    if (!inside(c - o)) return {std::nullopt, true};
    return {c - o, false};
}

bool is_biinf(const LineModel& lm) { return !lm.lo() && !lm.hi(); }

}  // namespace

StringSpec interval(const PathSeg& p) { return seg_interval(p); }

std::string to_string(StringSide s) { return s == StringSide::R ? "R" : "L"; }

std::string to_string(UndefinedReason r) {
    switch (r) {
        case UndefinedReason::Projective: return "Projective";
        case UndefinedReason::Injective: return "Injective";
        case UndefinedReason::PseudoProjective: return "PseudoProjective";
        case UndefinedReason::InfiniteDimensional: return "InfiniteDimensional";
        case UndefinedReason::NotMember: return "NotMember";
    }
    return "?";
}

std::string to_string(OrbitKind k) {
    switch (k) {
        case OrbitKind::Preprojective: return "Preprojective";
        case OrbitKind::Preinjective: return "Preinjective";
        case OrbitKind::OrbitR: return "OrbitR";
        case OrbitKind::OrbitL: return "OrbitL";
        case OrbitKind::RegularNonQuasiSimple: return "RegularNonQuasiSimple";
        case OrbitKind::TrivialRegular: return "TrivialRegular";
    }
    return "?";
}

std::string to_string(DInfVerdict::Kind k) {
    switch (k) {
        case DInfVerdict::Kind::String: return "String";
        case DInfVerdict::Kind::N: return "N";
        case DInfVerdict::Kind::NInf: return "NInf";
        case DInfVerdict::Kind::NotIndecomposable: return "NotIndecomposable";
    }
    return "?";
}

StringSpec DoubleHook::string() const {
    std::optional<long> lo, hi;
    auto lower = [](const StringSpec& a) { return a.lo; };
    auto upper = [](const StringSpec& a) { return a.hi; };
    if (alpha_src < alpha_dst) {  // p on the left, q on the right
        lo = lower(p);
        hi = upper(q);
    } else {
        lo = lower(q);
        hi = upper(p);
    }
    return {lo, hi};
}

std::optional<PathSeg> member_at(const QuiverPtr& q, StringSide side, long x) {
    return member(infinite_line(q), side, x);
}

QRQLSet qr_ql_set(const QuiverPtr& q, StringSide side, long lo, long hi) {
    LineModel lm = infinite_line(q);
    QRQLSet out;
    out.side = side;
    if (lm.lo()) lo = std::max(lo, *lm.lo());
    out.lo = lo;
    out.hi = hi;
    for (long x = lo; x <= hi; ++x)
        if (auto m = member(lm, side, x)) out.members.push_back(*m);
    for (long x = lo - 1; x >= scan_floor(lm, lo) && lm.in_range(x); --x)
        if (member(lm, side, x)) {
            out.more_below = true;
            break;
        }
    for (long x = hi + 1; x <= scan_ceiling(lm, hi); ++x)
        if (member(lm, side, x)) {
            out.more_above = true;
            break;
        }
    return out;
}

std::pair<long, long> default_range(const QuiverPtr& q) {
    LineModel lm = infinite_line(q);
    long lo = lm.structural_lo(), hi = lm.structural_hi() + 1;
    if (lm.lo()) lo = std::max(lo, *lm.lo());
    return {lo, hi};
}

DoubleHook double_hook(const QuiverPtr& q, long edge) {
    LineModel lm(q);
    if (!lm.has_edge(edge)) throw ArqError("UnknownVertex", "no edge at coordinate " + std::to_string(edge));
    DoubleHook h;
    bool right = lm.right_edge(edge);
    h.alpha_src = right ? edge : edge + 1;
    h.alpha_dst = right ? edge + 1 : edge;
    long y = h.alpha_dst, x = h.alpha_src;
    long oy = y - x, ox = x - y;
    // q: paths into y from the far side; p: paths out of x to the far side.
    auto qend = run(lm, y, oy, false);
    auto pend = run(lm, x, ox, true);
    auto span = [](long a, std::optional<long> b, long o) {
        if (o > 0) return StringSpec{a, b};
        return StringSpec{b, a};
    };
    h.q = span(y, qend, oy);
    h.p = span(x, pend, ox);
    return h;
}

SigmaResult source_translate(const QuiverPtr& q, StringSide side, const PathSeg& p, bool inverse) {
    LineModel lm = infinite_line(q);
    SigmaResult r;
    auto m = member(lm, side, p.start);
    if (!m || !(*m == p)) {
        r.reason = UndefinedReason::NotMember;
        return r;
    }
    // σ is the predecessor in the order by starting point, σ⁻ the successor.
    bool pred = !inverse;
    if (inverse) {
        // σ⁻ realises τ⁻ on Q_R and σ realises τ⁻ on Q_L: infinite paths have none.
        if (side == StringSide::R && !p.end) {
            r.reason = UndefinedReason::InfiniteDimensional;
            return r;
        }
    } else if (side == StringSide::L && !p.end) {
        // σ_L(p) needs p finite.
        r.reason = UndefinedReason::InfiniteDimensional;
        return r;
    }
    if (!inverse && side == StringSide::L && !lm.in_range(*p.end - 1)) {
        r.reason = UndefinedReason::Injective;
        return r;
    }
    std::optional<PathSeg> found;
    if (pred) {
        for (long x = p.start - 1; x >= scan_floor(lm, p.start) && lm.in_range(x); --x)
            if ((found = member(lm, side, x))) break;
    } else {
        for (long x = p.start + 1; x <= scan_ceiling(lm, p.start); ++x)
            if ((found = member(lm, side, x))) break;
    }
    if (!found) {
        bool tau = (side == StringSide::R) != inverse;  // this link realises τ
        if (tau)
            r.reason = (side == StringSide::R && !lm.in_range(p.start - 1)) ? UndefinedReason::Projective
                                                                              : UndefinedReason::PseudoProjective;
        else
            r.reason = UndefinedReason::Injective;
        return r;
    }
    r.value = found;
    const PathSeg& lower = pred ? *found : p;
    const PathSeg& upper = pred ? p : *found;
    long edge = side == StringSide::R ? upper.start - 1 : lower.start;
    r.witness = double_hook(q, edge);
    return r;
}

std::optional<std::pair<StringSide, PathSeg>> membership(const QuiverPtr& q, const StringSpec& s) {
    LineModel lm = infinite_line(q);
    if (s.lo) {
        if (auto m = member(lm, StringSide::R, *s.lo); m && side_interval(StringSide::R, *m) == s)
            return std::make_pair(StringSide::R, *m);
    }
    if (s.hi) {
        if (auto m = member(lm, StringSide::L, *s.hi); m && side_interval(StringSide::L, *m) == s)
            return std::make_pair(StringSide::L, *m);
    }
    return std::nullopt;
}

std::string member_name(const QuiverPtr& q, const PathSeg& p) {
    LineModel lm(q);
    auto name = [&](long c) { return q->vertex_name(lm.vertex_at(c)); };
    if (p.trivial()) return "ε_" + subscript(name(p.start));
    if (!p.end) return "p_∞";
    return "p_{" + name(p.start) + "," + name(*p.end) + "}";
}

std::string render_sigma_chain(const QuiverPtr& q, const QRQLSet& set) {
    std::vector<std::string> names;
    for (const auto& m : set.members) names.push_back(member_name(q, m));
    bool more_first = set.more_below, more_last = set.more_above;
    std::string arrow = " ⇠ ";
    if (set.side == StringSide::L) {
        // Q_L is drawn with decreasing starting points, arrows pointing to σ.
        std::reverse(names.begin(), names.end());
        std::swap(more_first, more_last);
        arrow = " ⇢ ";
    }
    std::string out;
    if (more_first) out += "⋯";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0 || more_first) out += arrow;
        out += names[i];
    }
    if (more_last) out += arrow + "⋯";
    return out;
}

TauStringResult tau_string(const QuiverPtr& q, const StringSpec& s, Direction d) {
    LineModel lm = infinite_line(q);
    check_string(lm, s);
    TauStringResult r;
    bool inverse = d == Direction::TrD;
    if (auto mem = membership(q, s)) {
        auto sr = source_translate(q, mem->first, mem->second, inverse != (mem->first == StringSide::L));
        r.via_sigma = true;
        r.reason = sr.reason;
        if (sr.value) r.value = side_interval(mem->first, *sr.value);
        return r;
    }
    if (inverse) {
        if (!s.lo || !s.hi) {
            r.reason = UndefinedReason::InfiniteDimensional;
            return r;
        }
        auto hi = cotau_end(lm, s, 1), lo = cotau_end(lm, s, -1);
        if (hi.zero || lo.zero || (lo.end && hi.end && *lo.end > *hi.end)) {
            r.reason = UndefinedReason::Injective;
            return r;
        }
        r.value = StringSpec{lo.end, hi.end};
        return r;
    }
    auto hi = tau_end(lm, s, 1), lo = tau_end(lm, s, -1);
    if (hi.zero || lo.zero || (lo.end && hi.end && *lo.end > *hi.end)) {
        r.reason = UndefinedReason::Projective;
        return r;
    }
    r.value = StringSpec{lo.end, hi.end};
    // A cohook running into infinity gives an infinite dimensional DTr.
    bool grew_infinite = (!lo.end && s.lo) || (!hi.end && s.hi);
    if (grew_infinite) r.reason = UndefinedReason::PseudoProjective;
    return r;
}

OrbitTag orbit_classify(const QuiverPtr& q, const StringSpec& s) {
    LineModel lm = infinite_line(q);
    check_string(lm, s);
    bool biinf = is_biinf(lm);
    OrbitTag tag;
    if (auto mem = membership(q, s)) {
        tag.quasi_length = 1;
        if (!biinf) {
            tag.kind = mem->first == StringSide::R ? OrbitKind::Preprojective : OrbitKind::Preinjective;
            tag.quasi_length = 0;
            return tag;
        }
        tag.kind = mem->first == StringSide::R ? OrbitKind::OrbitR : OrbitKind::OrbitL;
        tag.side = mem->first;
        if (!mem->second.end) {
            auto down = source_translate(q, mem->first, mem->second, false);
            auto up = source_translate(q, mem->first, mem->second, true);
            if (!down.value && !up.value) tag.kind = OrbitKind::TrivialRegular;
        }
        return tag;
    }
    if (biinf) {
        // Modules of the components of O_R / O_L: consecutive members glued along their links.
        for (StringSide side : {StringSide::R, StringSide::L}) {
            std::optional<long> cur = s.lo;
            int count = 0;
            bool ok = true;
            while (ok) {
                std::optional<PathSeg> tile;
                if (side == StringSide::R) {
                    if (!cur) break;
                    tile = member(lm, side, *cur);
                } else {
                    long from = cur ? *cur : scan_floor(lm, s.hi ? *s.hi : lm.structural_lo());
                    long to = s.hi ? *s.hi : scan_ceiling(lm, from);
                    for (long x = from; x <= to && !tile; ++x)
                        if (auto m = member(lm, side, x); m && side_interval(side, *m).lo == cur) tile = m;
                }
                if (!tile) break;
                StringSpec iv = side_interval(side, *tile);
                if (iv.lo != cur) break;
                ++count;
                if (iv.hi == s.hi) {
                    if (count >= 2) {
                        tag.kind = OrbitKind::RegularNonQuasiSimple;
                        tag.quasi_length = count;
                        tag.side = side;
                        return tag;
                    }
                    ok = false;
                } else if (!iv.hi || (s.hi && *iv.hi > *s.hi)) {
                    ok = false;
                } else {
                    cur = *iv.hi + 1;
                }
            }
        }
    }
    constexpr int kDepth = 128;
    StringSpec cur = s;
    for (int k = 0; k < kDepth; ++k) {
        auto t = tau_string(q, cur, Direction::DTr);
        if (t.reason == UndefinedReason::Projective) {
            tag.kind = OrbitKind::Preprojective;
            return tag;
        }
        if (t.reason || !t.value) break;
        cur = *t.value;
    }
    cur = s;
    for (int k = 0; k < kDepth; ++k) {
        auto t = tau_string(q, cur, Direction::TrD);
        if (t.reason == UndefinedReason::Injective) {
            tag.kind = OrbitKind::Preinjective;
            return tag;
        }
        if (t.reason || !t.value) break;
        cur = *t.value;
    }
    tag.kind = OrbitKind::RegularNonQuasiSimple;
    tag.exact = false;
    return tag;
}

SideProfile side_profile(const QuiverPtr& q, StringSide side) {
    LineModel lm = infinite_line(q);
    SideProfile sp;
    if (!is_biinf(lm)) throw ArqError("WrongType", "side profiles are defined on A_biinf quivers");
    // Eventual direction of the edges far right / far left (true: c → c+1).
    auto eventual = [&](bool right) -> std::optional<bool> {
        long base = right ? lm.structural_hi() + 1 : lm.structural_lo() - 1 - static_cast<long>(lm.period_lo());
        long per = static_cast<long>(right ? lm.period_hi() : lm.period_lo());
        bool first = lm.right_edge(base);
        for (long c = base; c < base + per; ++c)
            if (lm.right_edge(c) != first) return std::nullopt;
        return first;
    };
    auto far_right = eventual(true), far_left = eventual(false);
    bool right_out = far_right && *far_right, right_in = far_right && !*far_right;
    bool left_out = far_left && !*far_left, left_in = far_left && *far_left;
    if (side == StringSide::R) {
        sp.pseudo_projective = left_in;
        sp.infinite_dimensional = right_out;
    } else {
        sp.pseudo_projective = right_in;
        sp.infinite_dimensional = left_out;
    }
    long lo = scan_floor(lm, lm.structural_lo()), hi = scan_ceiling(lm, lm.structural_hi());
    std::size_t n = 0;
    for (long x = lo; x <= hi; ++x)
        if (member(lm, side, x)) ++n;
    auto set = qr_ql_set(q, side, lo, hi);
    if (!set.more_below && !set.more_above) sp.size = n;
    sp.exists = n > 0 || set.more_below || set.more_above;
    return sp;
}

DInfVerdict dinf_indec_test(const QuiverPtr& q, const std::vector<std::size_t>& dims_in, bool infinite) {
    DInfModel dm(q);
    DInfVerdict v;
    std::vector<std::size_t> d = dims_in;
    if (d.size() < 3) d.resize(3, 0);
    for (auto x : d)
        if (x > 2) {
            v.detail = "a vertex has dimension > 2";
            return v;
        }
    bool out_tail = q->spec().tails[0].orientation.eventual() == Dir::Out;
    if (infinite && d.back() == 0) infinite = false;
    // Trailing zeros are irrelevant.
    std::size_t n = d.size();
    if (!infinite)
        while (n > 0 && d[n - 1] == 0) --n;
    if (n == 0) {
        v.detail = "zero representation";
        return v;
    }
    if (infinite && !out_tail) {
        v.detail = "support contains a left infinite path";
        return v;
    }
    if (d[0] == 1 && d[1] == 1) {
        // N_{i,j}: both leaves, a run of i twos from the branch vertex, then j ≥ 1 ones.
        std::size_t c = 2;
        long i = 0, j = 0;
        while (c < n && d[c] == 2) ++c, ++i;
        while (c < n && d[c] == 1) ++c, ++j;
        if (c != n || j < 1) {
            v.detail = "not the dimension vector of an indecomposable";
            return v;
        }
        v.kind = infinite ? DInfVerdict::Kind::NInf : DInfVerdict::Kind::N;
        v.i = i;
        v.j = infinite ? 0 : j;
        return v;
    }
    // Thin support on a path of the tree avoiding one leaf.
    for (std::size_t c = 0; c < n; ++c)
        if (d[c] > 1) {
            v.detail = "not the dimension vector of an indecomposable";
            return v;
        }
    std::vector<long> supp;
    for (std::size_t c = 0; c < n; ++c)
        if (d[c]) supp.push_back(static_cast<long>(c));
    // Positions along the path: a leaf sits just before the branch vertex 2.
    auto pos = [](long c) { return c <= 1 ? 1L : c; };
    bool connected = true;
    for (std::size_t k = 1; k < supp.size(); ++k)
        if (pos(supp[k]) != pos(supp[k - 1]) + 1 && !(supp[k - 1] <= 1 && supp[k] == 2)) connected = false;
    if (!connected) {
        v.detail = "support is disconnected";
        return v;
    }
    v.kind = DInfVerdict::Kind::String;
    v.lo = supp.front();
    if (!infinite) v.hi = supp.back();
    return v;
}

DInfVerdict dinf_indec_test(const QuiverPtr& q, const Rep& m) {
    DInfModel dm(q);
    const auto& wq = m.wq();
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < wq.size(); ++v) {
        auto c = static_cast<std::size_t>(dm.coord(wq.vertex(v)));
        if (d.size() <= c) d.resize(c + 1, 0);
        d[c] = m.dim(v);
    }
    DInfVerdict v = dinf_indec_test(q, d, !m.finite_dimensional());
    if (v.kind == DInfVerdict::Kind::NotIndecomposable) return v;
    try {
        if (!is_indecomposable(m)) {
            v = DInfVerdict{};
            v.detail = "decomposes";
        }
    } catch (const ArqError& e) {
        v.detail = std::string("indecomposability undecided: ") + e.what();
    }
    return v;
}

}  // namespace arq
