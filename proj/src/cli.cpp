#include "arq/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "arq/errors.hpp"
#include "arq/io.hpp"

namespace arq {

namespace {

/// Options shared by the subcommands; each subcommand registers the ones it uses.
struct Options {
    std::string spec;
    std::string format = "json";
    std::string field;
    std::string rep;
    std::string side;
    std::string seed = "preprojective";
    std::string from, to;
    std::size_t depth = 4;
    int shift = 0;
    bool inverse = false;
    std::optional<long> lo, hi;
};

Field resolve_field(const Options& o) {
    if (!o.field.empty()) return Field::parse(o.field);
    if (const char* env = std::getenv("ARQ_FIELD"); env && *env) return Field::parse(env);
    return Field::rationals();
}

QuiverPtr load(const Options& o) { return build_quiver(load_spec(o.spec), resolve_field(o)); }

Rep require_rep(const QuiverPtr& q, const Options& o) {
    if (o.rep.empty()) throw CLI::ValidationError("--rep", "this subcommand needs --rep");
    return named(parse_rep(q, o.rep));
}

Json vertex_set_json(const Quiver& q, const VertexSet& s) {
    Json members = Json::array();
    for (const auto& v : s.members) members.push_back(q.vertex_name(v));
    Json beyond = Json::array();
    for (std::size_t t = 0; t < s.beyond.size(); ++t)
        if (s.beyond[t]) beyond.push_back(t);
    return Json{{"members", members}, {"finite", s.finite()}, {"continues_along_tails", beyond}};
}

Json path_json(const Quiver& q, const Path& p) {
    Json arrows = Json::array();
    for (const auto& a : p.arrows) arrows.push_back(q.arrow_label(a));
    return Json{{"source", q.vertex_name(p.source)}, {"target", q.vertex_name(p.target)}, {"arrows", arrows}};
}

std::string quiver_dot(const QuiverPtr& q, std::size_t depth) {
    auto wq = q->window_quiver(Window::join(q->structural_window(), q->uniform_window(depth)));
    std::ostringstream out;
    out << "digraph \"quiver\" {\n";
    for (std::size_t i = 0; i < wq->size(); ++i) out << "  \"" << q->vertex_name(wq->vertex(i)) << "\";\n";
    for (const auto& a : wq->arrows())
        out << "  \"" << q->vertex_name(wq->vertex(a.src)) << "\" -> \"" << q->vertex_name(wq->vertex(a.dst))
            << "\" [label=\"" << q->arrow_label(a.id) << "\"];\n";
    out << "}\n";
    return out.str();
}

Side parse_side(const std::string& s) {
    if (s == "ending" || s == "ending_at" || s == "end") return Side::EndingAt;
    if (s == "starting" || s == "starting_at" || s == "start") return Side::StartingAt;
    throw CLI::ValidationError("--side", "expected ending or starting, got " + s);
}

/// Renders a result: DOT when available and requested, text when a renderer
/// exists, JSON otherwise.
struct Output {
    Json json;
    std::optional<std::string> text;
    std::optional<std::string> dot;
};

void emit(const Options& o, const Output& r, std::ostream& out) {
    if (o.format == "dot") {
        if (!r.dot) throw CLI::ValidationError("--format", "this subcommand has no DOT rendering");
        out << *r.dot;
    } else if (o.format == "text" && r.text) {
        out << *r.text << "\n";
    } else {
        out << r.json.dump(2) << "\n";
    }
}

Output cmd_validate(const Options& o) {
    auto q = load(o);
    auto prof = infinite_path_profile(*q);
    return {Json{{"valid", true},
                 {"core_vertices", q->num_core()},
                 {"core_arrows", q->num_core_arrows()},
                 {"tails", q->num_tails()},
                 {"infinite", q->num_tails() > 0},
                 {"has_left_infinite_path", prof.has_left_infinite},
                 {"has_right_infinite_path", prof.has_right_infinite}},
            "valid", std::nullopt};
}

Output cmd_classify(const Options& o) {
    auto q = load(o);
    auto c = classify_quiver(*q);
    static const char* tags[] = {"FiniteDynkin", "FiniteEuclidean", "FiniteWild", "InfDynkin", "InfiniteGeneral"};
    return {Json{{"class", c.to_string()}, {"tag", tags[static_cast<int>(c.tag)]}, {"name", c.name}}, c.to_string(),
            std::nullopt};
}

Output cmd_paths(const Options& o) {
    auto q = load(o);
    if (o.from.empty() || o.to.empty()) {
        auto prof = infinite_path_profile(*q);
        Json rw = Json::array(), lw = Json::array();
        for (const auto& w : prof.right_witnesses) rw.push_back({{"tail", w.tail}, {"onset", w.onset}});
        for (const auto& w : prof.left_witnesses) lw.push_back({{"tail", w.tail}, {"onset", w.onset}});
        return {Json{{"has_left_infinite", prof.has_left_infinite},
                     {"has_right_infinite", prof.has_right_infinite},
                     {"right_witnesses", rw},
                     {"left_witnesses", lw}},
                std::nullopt, std::nullopt};
    }
    auto ps = paths_between(q, q->vertex(o.from), q->vertex(o.to));
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(path_json(*q, p));
    return {Json{{"from", o.from}, {"to", o.to}, {"count", ps.size()}, {"paths", arr}}, std::nullopt, std::nullopt};
}

Output cmd_qplus(const Options& o) {
    auto q = load(o);
    auto qp = q_plus(*q);
    Json comps = Json::array();
    for (const auto& c : qp.components) comps.push_back(vertex_set_json(*q, c));
    std::string text;
    for (const auto& c : qp.components) {
        text += text.empty() ? "{" : " {";
        for (std::size_t i = 0; i < c.members.size(); ++i) text += (i ? "," : "") + q->vertex_name(c.members[i]);
        text += c.finite() ? "}" : ",…}";
    }
    return {Json{{"vertices", vertex_set_json(*q, qp.vertices)}, {"components", comps}}, text, std::nullopt};
}

Output cmd_rep(const Options& o) {
    auto q = load(o);
    Rep m = require_rep(q, o);
    Json j = to_json(m);
    j["indecomposable"] = is_indecomposable(m);
    j["projective"] = is_projective(m);
    j["injective"] = m.finite_dimensional() && is_injective(m);
    auto fp = fp_certificate(m);
    j["finitely_presented"] = fp.ok;
    return {j, m.name(), std::nullopt};
}

Output cmd_dims(const Options& o) {
    auto q = load(o);
    Rep m = require_rep(q, o);
    Window w = Window::join(m.window(), q->uniform_window(o.depth));
    return {to_json(dim_vector(m, w), *q), dim_vector_string(m), std::nullopt};
}

Output cmd_translate(const Options& o) {
    auto q = load(o);
    Rep m = require_rep(q, o);
    auto d = o.inverse ? Direction::TrD : Direction::DTr;
    auto r = ar_translate(m, d);
    Json j{{"input", m.name()}, {"direction", o.inverse ? "TrD" : "DTr"}, {"zero", r.is_zero()}, {"pseudo", r.is_pseudo}};
    std::string text;
    if (r.value) {
        Rep v = named(*r.value);
        j["result"] = to_json(v);
        text = v.name();
    } else {
        j["result"] = nullptr;
        text = "0";
    }
    if (r.is_pseudo) text += " (infinite dimensional)";
    return {j, text, std::nullopt};
}

Output cmd_ass(const Options& o) {
    auto q = load(o);
    Rep m = require_rep(q, o);
    auto r = almost_split(m, parse_side(o.side.empty() ? "ending" : o.side));
    if (!r.sequence) {
        throw ArqError(to_string(*r.reason), r.detail.empty() ? "no almost split sequence" : r.detail);
    }
    Json j = to_json(*r.sequence);
    auto a = audit(*r.sequence);
    j["audit"] = {{"ok", a.ok}, {"failures", a.failures}};
    std::string text = named(r.sequence->left).name() + " → ";
    for (std::size_t i = 0; i < r.sequence->middle.size(); ++i)
        text += (i ? " ⊕ " : "") + named(r.sequence->middle[i].rep).name();
    text += " → " + named(r.sequence->right).name();
    return {j, text, std::nullopt};
}

Output cmd_orbit(const Options& o) {
    auto q = load(o);
    Rep m = require_rep(q, o);
    if (!m.info().string) recognize(m);
    if (!m.info().string) throw ArqError("WrongType", "orbit classification needs a string module");
    auto t = orbit_classify(q, *m.info().string);
    Json j = to_json(t);
    j["rep"] = m.name();
    return {j, to_string(t.kind), std::nullopt};
}

Output cmd_sigma(const Options& o) {
    auto q = load(o);
    auto [dlo, dhi] = default_range(q);
    StringSide side = o.side == "L" ? StringSide::L : StringSide::R;
    if (!o.side.empty() && o.side != "L" && o.side != "R") throw CLI::ValidationError("--side", "expected R or L");
    auto set = qr_ql_set(q, side, o.lo.value_or(dlo), o.hi.value_or(dhi));
    Json j = to_json(q, set);
    Json links = Json::array();
    for (const auto& p : set.members) {
        auto s = source_translate(q, side, p, false);
        links.push_back({{"member", member_name(q, p)},
                         {"sigma", s.value ? Json(member_name(q, *s.value)) : Json(nullptr)},
                         {"reason", s.reason ? Json(to_string(*s.reason)) : Json(nullptr)}});
    }
    j["sigma"] = links;
    return {j, render_sigma_chain(q, set), std::nullopt};
}

Output cmd_component(const Options& o) {
    auto q = load(o);
    Seed seed;
    if (o.seed == "preprojective") {
        seed = PreprojectiveSeed{};
    } else if (o.seed.rfind("preinjective", 0) == 0) {
        std::size_t k = 0;
        if (auto colon = o.seed.find(':'); colon != std::string::npos) k = std::stoul(o.seed.substr(colon + 1));
        seed = PreinjectiveSeed{k};
    } else if (o.seed == "regular") {
        seed = RegularSeed{require_rep(q, o)};
    } else {
        throw CLI::ValidationError("--seed", "expected preprojective, preinjective[:k] or regular");
    }
    auto w = knit_component(q, seed, o.depth);
    return {to_json(w), w.shape.str(), export_dot(w)};
}

Output cmd_census(const Options& o) {
    auto q = load(o);
    auto c = regular_census(q);
    Json j = to_json(c);
    std::string text = "regular: " + (c.regular ? std::to_string(*c.regular) : std::string("infinite"));
    for (const auto& e : c.breakdown)
        text += "; " + to_string(e.tag) + " × " + (e.count ? std::to_string(*e.count) : std::string("∞"));
    return {j, text, std::nullopt};
}

Output cmd_caps(const Options& o) {
    auto q = load(o);
    auto c = ar_capabilities(q);
    auto d = derived_capabilities(q);
    Json j{{"rep_plus_left_AR", c.left},
           {"rep_plus_right_AR", c.right},
           {"rep_plus_AR", c.both},
           {"derived", {{"left_AST", d.left_ast}, {"right_AST", d.right_ast}, {"AST", d.ast}}}};
    return {j, std::nullopt, std::nullopt};
}

Output cmd_derived(const Options& o) {
    auto q = load(o);
    Rep m = require_rep(q, o);
    auto r = derived_ar_triangle({m, o.shift}, parse_side(o.side.empty() ? "ending" : o.side));
    if (!r.triangle) throw ArqError(to_string(*r.reason), r.detail);
    const auto& t = *r.triangle;
    std::string text = t.x.label() + " → ";
    for (std::size_t i = 0; i < t.y.size(); ++i) text += (i ? " ⊕ " : "") + t.y[i].label();
    text += " → " + t.z.label() + " → " + t.x.shifted(1).label();
    return {to_json(t), text, std::nullopt};
}

Output cmd_connecting(const Options& o) {
    auto q = load(o);
    auto w = connecting_window(q, o.depth);
    return {to_json(w), w.shape.str(), export_dot(w, "connecting")};
}

Output cmd_export(const Options& o) {
    auto q = load(o);
    return {spec_to_json(q->spec()), std::nullopt, quiver_dot(q, o.depth)};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Auslander-Reiten theory for representations of infinite quivers", "arq"};
    app.require_subcommand(1);
    Options o;
    std::function<Output(const Options&)> action;

    struct Sub {
        const char* name;
        const char* help;
        Output (*fn)(const Options&);
        bool rep, side, depth, seed, range, inverse, shift, endpoints;
    };
    const Sub subs[] = {
        {"validate", "build and validate a quiver spec", cmd_validate, 0, 0, 0, 0, 0, 0, 0, 0},
        {"classify", "Dynkin / Euclidean / wild / infinite Dynkin type", cmd_classify, 0, 0, 0, 0, 0, 0, 0, 0},
        {"paths", "paths between two vertices, or the infinite-path profile", cmd_paths, 0, 0, 0, 0, 0, 0, 0, 1},
        {"qplus", "connected components of Q+", cmd_qplus, 0, 0, 0, 0, 0, 0, 0, 0},
        {"rep", "describe a representation", cmd_rep, 1, 0, 0, 0, 0, 0, 0, 0},
        {"dims", "dimension vector of a representation", cmd_dims, 1, 0, 1, 0, 0, 0, 0, 0},
        {"translate", "Auslander-Reiten translate DTr (or TrD with --inverse)", cmd_translate, 1, 0, 0, 0, 0, 1, 0, 0},
        {"ass", "almost split sequence ending or starting at a representation", cmd_ass, 1, 1, 0, 0, 0, 0, 0, 0},
        {"orbit", "orbit classification of a string module", cmd_orbit, 1, 0, 0, 0, 0, 0, 0, 0},
        {"sigma", "the ordered sets Q_R / Q_L with their source translation", cmd_sigma, 0, 1, 0, 0, 1, 0, 0, 0},
        {"component", "knit a window of an Auslander-Reiten component", cmd_component, 1, 0, 1, 1, 0, 0, 0, 0},
        {"census", "number and shapes of regular components", cmd_census, 0, 0, 0, 0, 0, 0, 0, 0},
        {"caps", "existence of almost split sequences and triangles", cmd_caps, 0, 0, 0, 0, 0, 0, 0, 0},
        {"derived", "almost split triangle at a stalk complex M[shift]", cmd_derived, 1, 1, 0, 0, 0, 0, 1, 0},
        {"connecting", "window of the connecting component of the derived category", cmd_connecting, 0, 0, 1, 0, 0, 0, 0, 0},
        {"export", "normalized quiver spec (JSON) or a DOT drawing of the quiver", cmd_export, 0, 0, 1, 0, 0, 0, 0, 0},
    };
    for (const auto& s : subs) {
        auto* sc = app.add_subcommand(s.name, s.help);
        sc->add_option("spec", o.spec, "quiver spec JSON file")->required();
        sc->add_option("--format", o.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
        sc->add_option("--field", o.field, "Q or Fp:<prime> (overrides ARQ_FIELD)");
        if (s.rep) sc->add_option("--rep", o.rep, "representation, e.g. P(0), M(p_inf), N(2,inf)");
        if (s.side) sc->add_option("--side", o.side, "ending|starting, or R|L for sigma");
        if (s.depth) sc->add_option("--depth", o.depth, "window depth");
        if (s.seed) sc->add_option("--seed", o.seed, "preprojective, preinjective[:k] or regular (with --rep)");
        if (s.range) {
            sc->add_option("--lo", o.lo, "lowest start coordinate");
            sc->add_option("--hi", o.hi, "highest start coordinate");
        }
        if (s.inverse) sc->add_flag("--inverse", o.inverse, "compute TrD instead of DTr");
        if (s.shift) sc->add_option("--shift", o.shift, "derived shift of the stalk");
        if (s.endpoints) {
            sc->add_option("--from", o.from, "source vertex");
            sc->add_option("--to", o.to, "target vertex");
        }
        auto fn = s.fn;
        sc->callback([&action, fn] { action = fn; });
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    try {
        emit(o, action(o), out);
        return 0;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ArqError& e) {
        err << "error: " << e.name() << ": " << e.detail() << "\n";
        return 2;
    }
}

}  // namespace arq
