#include <regex>

#include "doctest.h"

#include "arq/components.hpp"
#include "arq/errors.hpp"
#include "oracles.hpp"

using namespace arq;
namespace orc = arq::oracle;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = 0; (pos = text.find(needle, pos)) != std::string::npos; pos += needle.size()) ++n;
    return n;
}

/// Additive function check at every mesh whose ends both lie in the window.
void check_meshes(const ComponentWindow& w) {
    for (const auto& [x, tx] : w.tau_links) {
        if (!w.cells[x].dim || !w.cells[tx].dim) continue;
        std::size_t middle = 0;
        bool complete = true;
        for (const auto& a : w.arrows)
            if (a.to == x) {
                if (!w.cells[a.from].dim) complete = false;
                else middle += a.multiplicity * *w.cells[a.from].dim;
            }
        std::size_t out_of_tau = 0;
        for (const auto& a : w.arrows)
            if (a.from == tx) out_of_tau += a.multiplicity;
        if (complete && out_of_tau > 0) CHECK(*w.cells[x].dim + *w.cells[tx].dim == middle);
    }
}

}  // namespace

TEST_SUITE("components") {
    TEST_CASE("finite Dynkin preprojective components are complete") {
        for (std::size_t n = 2; n <= 5; ++n) {
            auto q = build_quiver(orc::a_n_spec(n, 0));
            auto w = knit_component(q, PreprojectiveSeed{}, 40);
            CHECK(w.closed);
            CHECK(w.cells.size() == n * (n + 1) / 2);
            check_meshes(w);
        }
        auto d4 = knit_component(orc::load_quiver("d4.json"), PreprojectiveSeed{}, 40);
        CHECK(d4.cells.size() == 12);
        check_meshes(d4);
    }

    TEST_CASE("Kronecker preprojective component has doubled arrows") {
        auto q = orc::load_quiver("kronecker.json");
        auto w = knit_component(q, PreprojectiveSeed{}, 3);
        CHECK(!w.closed);
        CHECK(w.shape.tag == ShapeTag::NQop);
        for (const auto& a : w.arrows) CHECK(a.multiplicity == 2);
        check_meshes(w);
    }

    TEST_CASE("the number of preinjective components equals the number of components of Q+") {
        for (const char* file : {"a3.json", "qf.json", "qc.json", "conn.json", "ainf_out.json", "dinf_left.json"}) {
            auto q = orc::load_quiver(file);
            auto qp = q_plus(*q);
            for (std::size_t k = 0; k < qp.components.size(); ++k) {
                auto w = knit_component(q, PreinjectiveSeed{k}, 3);
                CHECK(!w.cells.empty());
                for (const auto& c : w.cells) CHECK(!c.infinite_dimensional);
            }
            bool threw = false;
            try {
                knit_component(q, PreinjectiveSeed{qp.components.size()}, 3);
            } catch (const ArqError& e) {
                threw = e.name() == "BadSeed";
            }
            CHECK(threw);
        }
    }

    TEST_CASE("QF preinjective wing and its DOT rendering") {
        auto q = orc::load_quiver("qf.json");
        auto w0 = knit_component(q, PreinjectiveSeed{0}, 5);
        CHECK(w0.shape.tag == ShapeTag::Trivial);
        auto dot0 = export_dot(w0);
        CHECK(count(dot0, "[label=") == 1);
        auto w = knit_component(q, PreinjectiveSeed{1}, 5);
        CHECK(w.shape.tag == ShapeTag::Wing);
        auto dot = export_dot(w);
        CHECK(count(dot, "[label=") == 4);
        CHECK(count(dot, "style=dashed") == 1);
        CHECK(count(dot, "->") == 5);
        CHECK(export_dot(ComponentWindow{}, "empty") == "digraph \"empty\" {\n}\n");
    }

    TEST_CASE("regular components of the A_biinf example") {
        auto q = orc::load_quiver("qc.json");
        auto w = knit_component(q, RegularSeed{string_rep(q, StringSpec{5, 5})}, 10);
        CHECK(w.shape.str() == "Wing(3)");
        CHECK(w.cells.size() == 6);
        std::size_t pseudo = 0, inf = 0;
        for (const auto& c : w.cells) pseudo += c.pseudo_projective, inf += c.infinite_dimensional;
        CHECK(pseudo >= 1);
        CHECK(inf >= 1);
        CHECK(component_shape(q, string_rep(q, StringSpec{8, 8}), 5).tag == ShapeTag::ZAinf);
        CHECK(component_shape(q, projective(q, q->vertex("2")), 5).tag == ShapeTag::NQop);
    }

    TEST_CASE("shape decisions through quiver-level certificates") {
        // No infinite path: every regular component is ZA∞.
        auto zig = build_quiver(shorthand_d_inf(Dir::In, Dir::Out, {{}, {Dir::Out, Dir::In}}));
        CHECK(uniform_regular_shape(zig) == ShapeTag::ZAinf);
        CHECK(uniform_regular_shape(orc::load_quiver("dinf_left.json")) == ShapeTag::NAinf);
        CHECK(uniform_regular_shape(orc::load_quiver("dinf_right.json")) == ShapeTag::NminusAinf);
        CHECK(uniform_regular_shape(orc::load_quiver("wild_inf.json")) == ShapeTag::NminusAinf);
    }

    TEST_CASE("census truth table") {
        CHECK(regular_census(orc::load_quiver("ainf_out.json")).regular == 0u);
        CHECK(regular_census(orc::load_quiver("dinf_noinf.json")).regular == 1u);
        auto path = regular_census(build_quiver(shorthand_a_biinf({{}, {Dir::Out}}, {{}, {Dir::In}})));
        REQUIRE(path.breakdown.size() == 1);
        CHECK(path.breakdown[0].tag == ShapeTag::ZAinf);
        auto k = regular_census(orc::load_quiver("kronecker.json"));
        CHECK(!k.regular);
        auto a3 = regular_census(orc::load_quiver("a3.json"));
        CHECK(a3.regular == 0u);
    }

    TEST_CASE("AR capabilities") {
        auto c = ar_capabilities(orc::load_quiver("qf.json"));
        CHECK(c.left);
        CHECK(!c.right);
        CHECK(!c.both);
        CHECK(is_left_infinite_path(build_quiver(shorthand_a_inf({{}, {Dir::In}}))));
        CHECK(is_double_infinite_path(build_quiver(shorthand_a_biinf({{}, {Dir::Out}}, {{}, {Dir::In}}))));
        CHECK(!is_double_infinite_path(orc::load_quiver("qc.json")));
    }
}
