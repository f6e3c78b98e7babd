#include "doctest.h"

#include "arq/derived.hpp"
#include "arq/errors.hpp"
#include "oracles.hpp"

using namespace arq;
namespace orc = arq::oracle;

TEST_SUITE("derived") {
    TEST_CASE("connecting triangles on A_3") {
        auto q = orc::load_quiver("a3.json");
        auto p1 = derived_ar_triangle({projective(q, q->vertex("1")), 0}, Side::EndingAt);
        REQUIRE(p1.triangle);
        CHECK(p1.triangle->family == Triangle::Family::Connecting);
        CHECK(same_object(p1.triangle->x, {injective(q, q->vertex("1")), -1}));
        REQUIRE(p1.triangle->y.size() == 1);
        CHECK(same_object(p1.triangle->y[0], {projective(q, q->vertex("2")), 0}));

        auto p2 = derived_ar_triangle({projective(q, q->vertex("2")), 0}, Side::EndingAt);
        REQUIRE(p2.triangle);
        CHECK(same_object(p2.triangle->x, {injective(q, q->vertex("2")), -1}));
        REQUIRE(p2.triangle->y.size() == 2);
        std::size_t lower = 0;
        for (const auto& y : p2.triangle->y) lower += y.shift == -1;
        CHECK(lower == 1);

        // Starting at an injective gives the same triangle read from the left.
        auto i2 = derived_ar_triangle({injective(q, q->vertex("2")), -1}, Side::StartingAt);
        REQUIRE(i2.triangle);
        CHECK(same_object(i2.triangle->z, {projective(q, q->vertex("2")), 0}));
    }

    TEST_CASE("triangles from almost split sequences are shifted copies") {
        auto q = orc::load_quiver("a3.json");
        auto s2 = simple(q, q->vertex("2"));
        auto t = derived_ar_triangle({s2, 3}, Side::EndingAt);
        REQUIRE(t.triangle);
        CHECK(t.triangle->family == Triangle::Family::FromASS);
        CHECK(t.triangle->z.shift == 3);
        CHECK(t.triangle->x.shift == 3);
        REQUIRE(t.triangle->sequence);
        CHECK(audit(*t.triangle->sequence).ok);
    }

    TEST_CASE("irreducible maps across the shift") {
        auto q = orc::load_quiver("a3.json");
        auto i1 = injective(q, q->vertex("1")), p2 = projective(q, q->vertex("2"));
        CHECK(derived_irr_shift(i1, p2));
        CHECK(!derived_irr_shift(projective(q, q->vertex("1")), p2));
        CHECK(!derived_irr_shift(i1, simple(q, q->vertex("2"))));
    }

    TEST_CASE("Hom between shifted objects") {
        auto q = orc::load_quiver("a3.json");
        auto s1 = simple(q, q->vertex("1")), s2 = simple(q, q->vertex("2"));
        CHECK(derived_hom_dim({s1, 0}, {s1, 0}) == 1);
        CHECK(derived_hom_dim({s1, 0}, {s2, 1}) == 1);
        CHECK(derived_hom_dim({s1, 0}, {s2, 0}) == 0);
        CHECK(derived_hom_dim({s1, 0}, {s1, 2}) == 0);
        CHECK(derived_hom_dim({s1, 1}, {s1, 0}) == 0);
    }

    TEST_CASE("unavailable derived triangles") {
        auto conn = orc::load_quiver("conn.json");
        auto r = derived_ar_triangle({projective(conn, conn->vertex("-1")), 0}, Side::EndingAt);
        CHECK(!r.triangle);
        CHECK(r.reason == DerivedUnavailable::NotInQPlus);
        auto ok = derived_ar_triangle({projective(conn, conn->vertex("0")), 0}, Side::EndingAt);
        REQUIRE(ok.triangle);
        REQUIRE(ok.triangle->y.size() == 1);
        CHECK(same_object(ok.triangle->y[0], {projective(conn, conn->vertex("1")), 0}));

        auto qc = orc::load_quiver("qc.json");
        auto ps = derived_ar_triangle({simple(qc, qc->vertex("5")), 0}, Side::EndingAt);
        CHECK(ps.reason == DerivedUnavailable::PseudoProjective);
        auto inf = derived_ar_triangle({parse_rep(qc, "M(p_inf)"), 0}, Side::StartingAt);
        CHECK(inf.reason == DerivedUnavailable::InfiniteDimStart);
    }

    TEST_CASE("connecting window of A_3") {
        auto q = orc::load_quiver("a3.json");
        auto w = connecting_window(q, 3);
        CHECK(w.cells.size() >= 6);
        // Links crossing the shift join P_x to I_x[-1].
        std::size_t crossing = 0;
        for (const auto& [x, tx] : w.tau_links) {
            if (w.cells[x].shift == w.cells[tx].shift) continue;
            ++crossing;
            CHECK(w.cells[x].projective);
            CHECK(w.cells[x].shift == 0);
            CHECK(w.cells[tx].shift == -1);
            CHECK(w.cells[tx].injective);
        }
        CHECK(crossing == 3);
        for (const auto& c : w.cells) CHECK((c.projective || c.injective || c.shift == 0 || c.shift == -1));
        bool threw = false;
        try {
            connecting_window(build_quiver(orc::finite_spec({"a", "b"}, {})), 2);
        } catch (const ArqError& e) {
            threw = e.name() == "Disconnected";
        }
        CHECK(threw);
    }

    TEST_CASE("derived capabilities") {
        CHECK(derived_capabilities(build_quiver(shorthand_a_inf({{}, {Dir::Out, Dir::In}}))).ast);
        auto r = derived_capabilities(build_quiver(shorthand_a_inf({{}, {Dir::Out}})));
        CHECK(!r.left_ast);
        CHECK(r.right_ast);
        auto l = derived_capabilities(build_quiver(shorthand_a_inf({{}, {Dir::In}})));
        CHECK(l.left_ast);
        CHECK(!l.right_ast);
    }
}
