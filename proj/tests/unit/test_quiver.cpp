#include "doctest.h"

#include "arq/errors.hpp"
#include "arq/quiver.hpp"
#include "oracles.hpp"

using namespace arq;
namespace orc = arq::oracle;

namespace {

std::string error_name(const std::function<void()>& f) {
    try {
        f();
    } catch (const ArqError& e) {
        return e.name();
    }
    return "";
}

std::vector<std::vector<std::string>> component_names(const QuiverPtr& q) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : q_plus(*q).components) {
        std::vector<std::string> names;
        for (const auto& v : c.members) names.push_back(q->vertex_name(v));
        out.push_back(names);
    }
    return out;
}

/// Brute-force Q⁺ test: x has finitely many predecessors iff the number of
/// vertices reaching x stops growing when the window is enlarged.
bool brute_in_q_plus(const QuiverPtr& q, const Vertex& x, std::size_t r) {
    auto count = [&](std::size_t depth) {
        auto wq = q->window_quiver(Window::join(q->structural_window(), q->uniform_window(depth)));
        std::size_t n = 0;
        for (std::size_t i = 0; i < wq->size(); ++i)
            if (!paths_between(q, wq->vertex(i), x).empty()) ++n;
        return n;
    };
    return count(r) == count(2 * r);
}

}  // namespace

TEST_SUITE("quiver") {
    TEST_CASE("build_quiver accepts canonical shorthands and rejects bad specs") {
        auto q = build_quiver(shorthand_a_inf({{}, {Dir::Out}}));
        CHECK(q->vertex_name(q->target(q->out_arrows(q->vertex("0")).front())) == "1");
        CHECK(error_name([] { build_quiver(orc::finite_spec({"a", "b"}, {{"a", "b"}, {"b", "a"}})); }) == "CoreCycle");
        CHECK(error_name([] { build_quiver(orc::finite_spec({"a"}, {{"a", "z"}})); }) == "DanglingArrow");
        QuiverSpec s;
        s.core_vertices = {"a"};
        s.tails.push_back({"a", {{Dir::Out}, {}}, std::nullopt});
        CHECK(error_name([&] { build_quiver(s); }) == "EmptyPeriod");
    }

    TEST_CASE("paths_between counts paths") {
        auto q = build_quiver(shorthand_a_inf({{}, {Dir::Out}}));
        auto ps = paths_between(q, q->vertex("0"), q->vertex("3"));
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].arrows.size() == 3);
        auto eps = paths_between(q, q->vertex("2"), q->vertex("2"));
        REQUIRE(eps.size() == 1);
        CHECK(eps[0].arrows.empty());
        CHECK(paths_between(q, q->vertex("3"), q->vertex("0")).empty());
        auto k = orc::load_quiver("kronecker.json");
        CHECK(paths_between(k, k->vertex("a"), k->vertex("b")).size() == 2);
    }

    TEST_CASE("infinite path profiles") {
        auto out = infinite_path_profile(*build_quiver(shorthand_a_inf({{}, {Dir::Out}})));
        CHECK(!out.has_left_infinite);
        CHECK(out.has_right_infinite);
        auto zig = infinite_path_profile(*build_quiver(shorthand_a_inf({{}, {Dir::Out, Dir::In}})));
        CHECK(!zig.has_left_infinite);
        CHECK(!zig.has_right_infinite);
        auto qc = infinite_path_profile(*orc::load_quiver("qc.json"));
        CHECK(qc.has_left_infinite);
        CHECK(qc.has_right_infinite);

        QuiverSpec s;
        s.core_vertices = {"a"};
        s.tails.push_back({"a", {{}, {Dir::In}}, std::nullopt});
        auto left = build_quiver(s);
        CHECK(infinite_path_profile(*left).has_left_infinite);
        CHECK(q_plus(*left).vertices.empty());
    }

    TEST_CASE("right infinite paths are visible as paths to far tail vertices") {
        for (const char* file : {"qc.json", "qf.json", "ainf_out.json", "dinf_left.json", "dinf_right.json", "wild_inf.json"}) {
            auto q = orc::load_quiver(file);
            bool right = infinite_path_profile(*q).has_right_infinite;
            bool reach_far = false;
            for (std::size_t t = 0; t < q->num_tails(); ++t) {
                bool all = true;
                for (std::size_t n : {10u, 50u, 200u}) {
                    bool any = false;
                    for (std::size_t c = 0; c < q->num_core() && !any; ++c)
                        any = !paths_between(q, Vertex::core(c), Vertex::on_tail(static_cast<int>(t), n)).empty();
                    all = all && any;
                }
                reach_far = reach_far || all;
            }
            CHECK_MESSAGE(reach_far == right, file);
        }
    }

    TEST_CASE("Q+ of the preinjective example quiver") {
        CHECK(component_names(orc::load_quiver("qf.json")) == std::vector<std::vector<std::string>>{{"0"}, {"2", "3", "4"}});
        auto a = build_quiver(shorthand_a_inf({{}, {Dir::Out}}));
        auto qp = q_plus(*a);
        REQUIRE(qp.components.size() == 1);
        CHECK(!qp.components[0].finite());
    }

    TEST_CASE("Q+ agrees with predecessor counting") {
        for (const char* file : {"qc.json", "qf.json", "qb.json", "conn.json", "dinf_left.json", "wild_inf.json"}) {
            auto q = orc::load_quiver(file);
            auto qp = q_plus(*q);
            std::size_t r = 0;
            for (std::size_t t = 0; t < q->num_tails(); ++t) r = std::max(r, 3 * q->structural_depth(static_cast<int>(t)));
            r += q->num_core() + 2;
            auto wq = q->window_quiver(Window::join(q->structural_window(), q->uniform_window(4)));
            for (std::size_t i = 0; i < wq->size(); ++i)
                CHECK_MESSAGE(qp.vertices.contains(wq->vertex(i)) == brute_in_q_plus(q, wq->vertex(i), r),
                              file << " vertex " << q->vertex_name(wq->vertex(i)));
        }
    }

    TEST_CASE("classification") {
        CHECK(classify_quiver(*orc::load_quiver("dinf_noinf.json")).to_string() == "InfDynkin(D_inf)");
        CHECK(classify_quiver(*orc::load_quiver("qc.json")).to_string() == "InfDynkin(A_biinf)");
        CHECK(classify_quiver(*orc::load_quiver("ainf_out.json")).to_string() == "InfDynkin(A_inf)");
        CHECK(classify_quiver(*orc::load_quiver("a3.json")).to_string() == "FiniteDynkin(A_3)");
        CHECK(classify_quiver(*orc::load_quiver("d4.json")).to_string() == "FiniteDynkin(D_4)");
        CHECK(classify_quiver(*orc::load_quiver("kronecker.json")).tag == QuiverClass::Tag::FiniteEuclidean);
        CHECK(classify_quiver(*orc::load_quiver("wild_inf.json")).tag == QuiverClass::Tag::InfiniteGeneral);
        CHECK(classify_quiver(*orc::load_quiver("qf.json")).tag == QuiverClass::Tag::InfiniteGeneral);
        auto disc = build_quiver(orc::finite_spec({"a", "b"}, {}));
        CHECK(error_name([&] { classify_quiver(*disc); }) == "Disconnected");
    }

    TEST_CASE("opposite quiver") {
        auto a = build_quiver(shorthand_a_inf({{}, {Dir::Out}}));
        auto op = a->opposite();
        CHECK(op->spec().tails[0].orientation.period == std::vector<Dir>{Dir::In});
        auto qc = orc::load_quiver("qc.json");
        CHECK(qc->opposite()->opposite().get() == qc.get());
        auto qf = orc::load_quiver("qf.json");
        auto qfo = qf->opposite();
        auto wq = qf->window_quiver(qf->uniform_window(3));
        for (std::size_t i = 0; i < wq->size(); ++i)
            for (std::size_t j = 0; j < wq->size(); ++j) {
                auto x = wq->vertex(i), y = wq->vertex(j);
                CHECK(paths_between(qf, x, y).size() == paths_between(qfo, y, x).size());
            }
    }
}
