#include "arq/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "arq/errors.hpp"

namespace arq {

namespace {

OrientationWord word_from_json(const Json& j) {
    OrientationWord w;
    auto letters = [](const Json& arr) {
        std::vector<Dir> out;
        if (!arr.is_array()) throw ArqError("InvalidSpec", "orientation words are arrays of \"out\"/\"in\"");
        for (const auto& l : arr) {
            std::string s = l.get<std::string>();
            if (s != "out" && s != "in") throw ArqError("InvalidSpec", "orientation letter must be out or in, got " + s);
            out.push_back(s == "out" ? Dir::Out : Dir::In);
        }
        return out;
    };
    if (j.contains("prefix")) w.prefix = letters(j.at("prefix"));
    if (!j.contains("period")) throw ArqError("InvalidSpec", "orientation word without a period");
    w.period = letters(j.at("period"));
    return w;
}

Json word_to_json(const OrientationWord& w) {
    Json p = Json::array(), q = Json::array();
    for (auto d : w.prefix) p.push_back(to_string(d));
    for (auto d : w.period) q.push_back(to_string(d));
    return Json{{"prefix", p}, {"period", q}};
}

Dir dir_from_json(const Json& j) {
    std::string s = j.get<std::string>();
    if (s != "out" && s != "in") throw ArqError("InvalidSpec", "fork direction must be out or in, got " + s);
    return s == "out" ? Dir::Out : Dir::In;
}

QuiverSpec shorthand_from_json(const Json& sh) {
    std::string type = sh.at("type").get<std::string>();
    if (type == "A_inf") return shorthand_a_inf(word_from_json(sh.at("word")));
    if (type == "A_biinf") return shorthand_a_biinf(word_from_json(sh.at("right")), word_from_json(sh.at("left")));
    if (type == "D_inf") {
        const auto& f = sh.at("fork");
        if (!f.is_array() || f.size() != 2) throw ArqError("InvalidSpec", "D_inf fork needs two directions");
        return shorthand_d_inf(dir_from_json(f[0]), dir_from_json(f[1]), word_from_json(sh.at("spine")));
    }
    throw ArqError("InvalidSpec", "unknown shorthand type " + type);
}

std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

std::optional<long> parse_bound(const std::string& s) {
    if (s == "inf" || s == "-inf" || s == "+inf" || s == "∞" || s == "-∞") return std::nullopt;
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw ArqError("BadRep", "bad bound " + s);
        return v;
    } catch (const std::logic_error&) {
        throw ArqError("BadRep", "bad bound " + s);
    }
}

/// Canonical form of a member name: "p_inf" → "p_∞", "eps_5" → "ε_5", "p_4,3" → "p_{4,3}".
std::string normalize_member(std::string s) {
    auto replace = [&](const std::string& from, const std::string& to) {
        for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
            s.replace(pos, from.size(), to);
    };
    replace("inf", "∞");
    replace("eps", "ε");
    replace("e_", "ε_");
    replace(" ", "");
    auto us = s.find('_');
    if (us != std::string::npos && s.find(',') != std::string::npos && s.find('{') == std::string::npos)
        s = s.substr(0, us + 1) + "{" + s.substr(us + 1) + "}";
    if (us != std::string::npos && s.find('{') != std::string::npos && s.find(',') == std::string::npos) {
        // "ε_{5}" → "ε_5"
        s.erase(std::remove(s.begin(), s.end(), '{'), s.end());
        s.erase(std::remove(s.begin(), s.end(), '}'), s.end());
    }
    return s;
}

Rep named_member(const QuiverPtr& q, const std::string& text) {
    std::string want = normalize_member(text);
    auto [lo, hi] = default_range(q);
    for (auto side : {StringSide::R, StringSide::L}) {
        auto set = qr_ql_set(q, side, lo - 40, hi + 40);
        for (const auto& p : set.members) {
            if (member_name(q, p) != want) continue;
            StringSpec s;
            if (p.end) s = {std::min(p.start, *p.end), std::max(p.start, *p.end)};
            else if (side == StringSide::R) s = {p.start, std::nullopt};
            else s = {std::nullopt, p.start};
            return string_rep(q, s);
        }
    }
    throw ArqError("BadRep", "no member of Q_R or Q_L is named " + text);
}

Rep string_from_args(const QuiverPtr& q, const std::string& arg) {
    if (auto dots = arg.find(".."); dots != std::string::npos) {
        StringSpec s{parse_bound(trim(arg.substr(0, dots))), parse_bound(trim(arg.substr(dots + 2)))};
        return string_rep(q, s);
    }
    if (arg.find('-', 1) != std::string::npos && arg.find('_') == std::string::npos) {
        // Vertex walk x-y-z; negative names are not supported in this form.
        LineModel lm(q);
        std::vector<long> coords;
        for (const auto& name : split(arg, '-')) coords.push_back(lm.coord(q->vertex(name)));
        for (std::size_t i = 1; i < coords.size(); ++i)
            if (std::abs(coords[i] - coords[i - 1]) != 1)
                throw ArqError("BadRep", "consecutive walk vertices must be adjacent");
        auto [mn, mx] = std::minmax_element(coords.begin(), coords.end());
        if (static_cast<std::size_t>(*mx - *mn + 1) != coords.size())
            throw ArqError("BadRep", "a walk on a type A quiver may not revisit a vertex");
        return string_rep(q, StringSpec{*mn, *mx});
    }
    return named_member(q, arg);
}

}  // namespace

QuiverSpec spec_from_json(const Json& j) {
    try {
        if (j.contains("shorthand") && !j.at("shorthand").is_null() && !j.contains("core"))
            return shorthand_from_json(j.at("shorthand"));
        QuiverSpec s;
        const auto& core = j.at("core");
        for (const auto& v : core.at("vertices")) s.core_vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        if (core.contains("arrows")) {
            std::size_t n = 0;
            for (const auto& a : core.at("arrows")) {
                auto name = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
                ArrowSpec as{name(a.at("from")), name(a.at("to")),
                             a.contains("label") ? a.at("label").get<std::string>() : "a" + std::to_string(n)};
                s.core_arrows.push_back(as);
                ++n;
            }
        }
        if (j.contains("tails")) {
            for (const auto& t : j.at("tails")) {
                TailSpec ts;
                ts.attach = t.at("attach").is_string() ? t.at("attach").get<std::string>() : t.at("attach").dump();
                ts.orientation = word_from_json(t);
                if (t.contains("labels"))
                    ts.labels = TailLabels{t.at("labels").at("offset").get<long>(), t.at("labels").at("step").get<long>()};
                s.tails.push_back(ts);
            }
        }
        if (j.contains("shorthand") && j.at("shorthand").is_string()) s.shorthand = j.at("shorthand").get<std::string>();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ArqError("InvalidSpec", e.what());
    }
}

Json spec_to_json(const QuiverSpec& s) {
    Json arrows = Json::array();
    for (const auto& a : s.core_arrows) arrows.push_back({{"from", a.from}, {"to", a.to}, {"label", a.label}});
    Json tails = Json::array();
    for (const auto& t : s.tails) {
        Json tj = word_to_json(t.orientation);
        tj["attach"] = t.attach;
        if (t.labels) tj["labels"] = {{"offset", t.labels->offset}, {"step", t.labels->step}};
        tails.push_back(tj);
    }
    Json j{{"core", {{"vertices", s.core_vertices}, {"arrows", arrows}}}, {"tails", tails}};
    if (s.shorthand) j["shorthand"] = *s.shorthand;
    return j;
}

QuiverSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArqError("Io", "cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ArqError("InvalidSpec", path + ": " + e.what());
    }
    return spec_from_json(j);
}

Rep parse_rep(const QuiverPtr& q, const std::string& text_in) {
    std::string text = trim(text_in);
    auto open = text.find('('), close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open || close != text.size() - 1)
        throw ArqError("BadRep", "expected F(args), got " + text);
    std::string head = trim(text.substr(0, open));
    std::string arg = trim(text.substr(open + 1, close - open - 1));
    if (head == "P") return projective(q, q->vertex(arg));
    if (head == "I") return injective(q, q->vertex(arg));
    if (head == "S") return simple(q, q->vertex(arg));
    if (head == "M") return named(string_from_args(q, arg));
    if (head == "N") {
        auto parts = split(arg, ',');
        if (parts.size() != 2) throw ArqError("BadRep", "N takes two arguments");
        auto i = parse_bound(parts[0]);
        if (!i) throw ArqError("BadRep", "N(i, j) needs a finite i");
        return dinf_rep(q, *i, parse_bound(parts[1]));
    }
    if (head == "K") return kronecker_regular(q, parse_poly(q->field(), arg));
    throw ArqError("BadRep", "unknown representation family " + head);
}

std::string interval_string(const StringSpec& s) {
    return "[" + (s.lo ? std::to_string(*s.lo) : std::string("-∞")) + ", " +
           (s.hi ? std::to_string(*s.hi) : std::string("∞")) + "]";
}

Json to_json(const DimVector& d, const Quiver& q) {
    Json values = Json::object();
    for (const auto& [v, n] : d.values) values[q.vertex_name(v)] = n;
    Json tails = Json::array();
    for (std::size_t t = 0; t < d.tails.size(); ++t)
        tails.push_back({{"tail", t}, {"onset", d.tails[t].first}, {"period", d.tails[t].second}});
    return Json{{"values", values}, {"tails", tails}};
}

Json to_json(const Rep& m) {
    const auto& info = m.info();
    Json j;
    j["kind"] = to_string(info.kind);
    j["name"] = m.name().empty() ? describe(m) : m.name();
    Json def = Json::object();
    if (info.vertex) def["vertex"] = m.quiver()->vertex_name(*info.vertex);
    if (info.string) {
        def["string"] = {{"lo", info.string->lo ? Json(*info.string->lo) : Json(nullptr)},
                         {"hi", info.string->hi ? Json(*info.string->hi) : Json(nullptr)}};
    }
    if (info.kind == RepKind::DInf) {
        def["i"] = info.i;
        def["j"] = info.j ? Json(*info.j) : Json("inf");
    }
    if (info.kind == RepKind::Kronecker) def["poly"] = poly_to_string(info.poly);
    j["defining"] = def;
    j["finite_dimensional"] = m.finite_dimensional();
    auto td = m.total_dim();
    j["total_dim"] = td ? Json(*td) : Json(nullptr);
    j["dim_vector"] = to_json(dim_vector(m), *m.quiver());
    return j;
}

Json to_json(const ARSequence& s) {
    Json mid = Json::array();
    for (const auto& p : s.middle) mid.push_back(to_json(named(p.rep)));
    return Json{{"left", to_json(named(s.left))}, {"middle", mid}, {"right", to_json(named(s.right))}};
}

Json to_json(const Shape& s) {
    Json j{{"tag", s.str()}, {"certificate", s.certificate}};
    if (s.tag == ShapeTag::Wing) j["wing"] = s.wing;
    return j;
}

Json to_json(const ComponentWindow& w) {
    Json cells = Json::array();
    for (const auto& c : w.cells) {
        cells.push_back({{"id", c.id()},
                         {"orbit", c.orbit},
                         {"power", c.power},
                         {"shift", c.shift},
                         {"name", c.name},
                         {"label", c.label()},
                         {"dim", c.dim ? Json(*c.dim) : Json(nullptr)},
                         {"projective", c.projective},
                         {"injective", c.injective},
                         {"pseudo_projective", c.pseudo_projective},
                         {"infinite_dimensional", c.infinite_dimensional}});
    }
    Json arrows = Json::array();
    for (const auto& a : w.arrows)
        arrows.push_back({{"from", w.cells[a.from].id()}, {"to", w.cells[a.to].id()}, {"multiplicity", a.multiplicity}});
    Json tau = Json::array();
    for (const auto& [x, y] : w.tau_links) tau.push_back({{"from", w.cells[x].id()}, {"to", w.cells[y].id()}});
    return Json{{"kind", to_string(w.kind)}, {"shape", to_json(w.shape)}, {"closed", w.closed}, {"depth", w.depth},
                {"cells", cells},          {"arrows", arrows},          {"tau", tau}};
}

Json to_json(const Census& c) {
    Json j;
    j["regular"] = c.regular ? Json(*c.regular) : Json("infinite");
    bool uniform = !c.breakdown.empty();
    for (const auto& e : c.breakdown) uniform = uniform && e.tag == c.breakdown.front().tag;
    j["shape"] = uniform ? Json(to_string(c.breakdown.front().tag)) : Json(nullptr);
    Json b = Json::array();
    for (const auto& e : c.breakdown)
        b.push_back({{"shape", to_string(e.tag)}, {"count", e.count ? Json(*e.count) : Json("infinite")}});
    j["breakdown"] = b;
    j["justification"] = c.justification;
    return j;
}

Json to_json(const DerivedObject& o) {
    Json j = to_json(o.rep);
    j["shift"] = o.shift;
    j["label"] = o.label();
    return j;
}

Json to_json(const Triangle& t) {
    Json y = Json::array();
    for (const auto& o : t.y) y.push_back(to_json(o));
    return Json{{"family", to_string(t.family)}, {"x", to_json(t.x)}, {"y", y}, {"z", to_json(t.z)}};
}

Json to_json(const QuiverPtr& q, const PathSeg& p) {
    return Json{{"name", member_name(q, p)}, {"start", p.start}, {"end", p.end ? Json(*p.end) : Json(nullptr)}};
}

Json to_json(const QuiverPtr& q, const QRQLSet& s) {
    Json members = Json::array();
    for (const auto& p : s.members) members.push_back(to_json(q, p));
    return Json{{"side", to_string(s.side)},           {"lo", s.lo},
                {"hi", s.hi},                          {"members", members},
                {"more_below", s.more_below},          {"more_above", s.more_above},
                {"chain", render_sigma_chain(q, s)}};
}

Json to_json(const OrbitTag& t) {
    Json j{{"kind", to_string(t.kind)}, {"quasi_length", t.quasi_length}, {"exact", t.exact}};
    j["side"] = t.side ? Json(to_string(*t.side)) : Json(nullptr);
    return j;
}

}  // namespace arq
