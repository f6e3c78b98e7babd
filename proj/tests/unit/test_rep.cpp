#include "doctest.h"

#include "arq/errors.hpp"
#include "arq/rep.hpp"
#include "arq/strings.hpp"
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

}  // namespace

TEST_SUITE("rep") {
    TEST_CASE("standard representations have path-counting dimensions") {
        for (const char* file : {"a3.json", "d4.json", "kronecker.json", "qc.json", "qf.json", "dinf_left.json"}) {
            auto q = orc::load_quiver(file);
            auto wq = q->window_quiver(Window::join(q->structural_window(), q->uniform_window(3)));
            for (std::size_t i = 0; i < wq->size(); ++i) {
                Vertex x = wq->vertex(i);
                Rep p = projective(q, x), s = simple(q, x);
                for (std::size_t j = 0; j < wq->size(); ++j) {
                    Vertex z = wq->vertex(j);
                    CHECK_MESSAGE(p.dim_at(z) == orc::count_paths(q, x, z), file);
                    CHECK(s.dim_at(z) == (z == x ? 1u : 0u));
                }
                if (q_plus(*q).vertices.contains(x)) {
                    Rep in = injective(q, x);
                    CHECK(in.finite_dimensional());
                    for (std::size_t j = 0; j < wq->size(); ++j)
                        CHECK_MESSAGE(in.dim_at(wq->vertex(j)) == orc::count_paths(q, wq->vertex(j), x), file);
                }
            }
        }
    }

    TEST_CASE("string representations are thin on their support") {
        auto q = orc::load_quiver("qc.json");
        Rep m = string_rep(q, StringSpec{3, 6});
        CHECK(m.total_dim() == 4u);
        CHECK(is_indecomposable(m));
        Rep inf = string_rep(q, StringSpec{std::nullopt, 2});
        CHECK(!inf.finite_dimensional());
        CHECK(describe(inf) == "M(p_∞)");
    }

    TEST_CASE("D_inf families are recognized by the indecomposability test") {
        auto q = orc::load_quiver("dinf_noinf.json");
        for (auto [i, j] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {2, 1}, {3, 2}}) {
            Rep n = dinf_rep(q, i, j);
            CHECK(is_indecomposable(n));
            auto v = dinf_indec_test(q, n);
            CHECK(v.kind == DInfVerdict::Kind::N);
            CHECK(v.i == i);
            CHECK(v.j == j);
            // Dimension pattern: the two leaves and the branch, then i twos, then j ones.
            CHECK(n.total_dim() == static_cast<std::size_t>(2 + 2 * i + j));
        }
        CHECK(error_name([&] { dinf_rep(q, 2, std::nullopt); }) == "NoInfinitePath");
        auto qr = orc::load_quiver("dinf_right.json");
        Rep ninf = dinf_rep(qr, 2, std::nullopt);
        CHECK(!ninf.finite_dimensional());
        CHECK(dinf_indec_test(qr, ninf).kind == DInfVerdict::Kind::NInf);
        // A decomposable dimension vector is rejected.
        CHECK(dinf_indec_test(q, {1, 0, 2}, false).kind == DInfVerdict::Kind::NotIndecomposable);
    }

    TEST_CASE("Kronecker regular modules") {
        auto q = orc::load_quiver("kronecker.json", Field::prime(2));
        Rep mx = kronecker_regular(q, parse_poly(q->field(), "x"));
        Rep mx1 = kronecker_regular(q, parse_poly(q->field(), "x+1"));
        Rep m3 = kronecker_regular(q, parse_poly(q->field(), "x^2+x+1"));
        CHECK(is_indecomposable(m3));
        CHECK(!is_isomorphic(mx, mx1));
        CHECK(m3.total_dim() == 4u);
        CHECK(error_name([&] { kronecker_regular(q, parse_poly(q->field(), "x^2+1")); }) == "ReduciblePolynomial");
        CHECK(error_name([&] { kronecker_regular(orc::load_quiver("a3.json"), parse_poly(q->field(), "x")); }) == "WrongQuiver");
    }

    TEST_CASE("decomposition of direct sums") {
        auto q = orc::load_quiver("a3.json");
        auto t = thin_rep(q, q->structural_window(), {q->vertex("1"), q->vertex("3")}, {});
        auto parts = decompose(t);
        REQUIRE(parts.size() == 2);
        CHECK(is_isomorphic(parts[0], simple(q, q->vertex("1"))) != is_isomorphic(parts[0], simple(q, q->vertex("3"))));
        CHECK(!is_indecomposable(t));
        std::mt19937 rng(4);
        for (int k = 0; k < 20; ++k) {
            Rep m = orc::random_rep(q, q->structural_window(), 2, rng);
            std::size_t total = 0;
            for (const auto& p : decompose(m)) total += *p.total_dim();
            CHECK(total == *m.total_dim());
        }
    }

    TEST_CASE("radical, top and socle of projectives and injectives") {
        auto q = orc::load_quiver("d4.json");
        for (const char* v : {"a", "b", "c", "d"}) {
            auto x = q->vertex(v);
            auto rts = rad_top_soc(projective(q, x));
            CHECK(is_isomorphic(rts.top, simple(q, x)));
            auto its = rad_top_soc(injective(q, x));
            CHECK(is_isomorphic(its.soc, simple(q, x)));
        }
    }

    TEST_CASE("duality exchanges injectives and projectives") {
        auto q = orc::load_quiver("qf.json");
        for (const char* v : {"0", "2", "3", "4"}) {
            Rep d = dualize(injective(q, q->vertex(v)));
            auto op = d.quiver();
            CHECK(is_isomorphic(d, projective(op, op->vertex(v))));
        }
    }

    TEST_CASE("finite presentation criterion") {
        auto a = build_quiver(shorthand_a_inf({{}, {Dir::In}}));
        Rep i0 = injective(a, a->vertex("0"));
        CHECK(!fp_certificate(i0).ok);
        CHECK(error_name([&] { minimal_presentation(i0); }) == "NotFinitelyPresented");
        auto qc = orc::load_quiver("qc.json");
        CHECK(fp_certificate(projective(qc, qc->vertex("2"))).ok);
        CHECK(fp_certificate(string_rep(qc, StringSpec{std::nullopt, 2})).ok);
    }

    TEST_CASE("Hom and Ext on A_3") {
        auto q = orc::load_quiver("a3.json");
        auto s1 = simple(q, q->vertex("1")), s2 = simple(q, q->vertex("2"));
        CHECK(hom_ext_dims(s1, s2).ext == 1);
        CHECK(hom_ext_dims(s2, s1).ext == 0);
        CHECK(hom_ext_dims(projective(q, q->vertex("2")), projective(q, q->vertex("1"))).hom == 1);
        CHECK(hom_ext_dims(projective(q, q->vertex("1")), projective(q, q->vertex("2"))).hom == 0);
    }

    TEST_CASE("Hom out of projectives and into injectives over both fields") {
        std::mt19937 rng(21);
        for (Field f : {Field::rationals(), Field::prime(2)}) {
            auto q = orc::load_quiver("qc.json", f);
            Window w = Window::join(q->structural_window(), q->uniform_window(1));
            for (int k = 0; k < 5; ++k) {
                Rep m = orc::random_rep(q, w, 2, rng);
                for (std::size_t i = 0; i < m.wq().size(); ++i) {
                    CHECK(hom_ext_dims(projective(q, m.wq().vertex(i)), m).hom == m.dim(i));
                    CHECK(hom_space(m, injective(q, m.wq().vertex(i))).size() == m.dim(i));
                }
            }
        }
    }
}
