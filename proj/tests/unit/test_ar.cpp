#include "doctest.h"

#include "arq/ar.hpp"
#include "arq/components.hpp"
#include "arq/errors.hpp"
#include "oracles.hpp"

using namespace arq;
namespace orc = arq::oracle;

namespace {

/// Coxeter transformation on dimension vectors of a finite acyclic quiver:
/// Φx = −E⁻¹ Eᵀ x with E the Euler form matrix. For an indecomposable
/// non-projective M, dim τM = Φ(dim M).
std::vector<long> coxeter(const QuiverPtr& q, const std::vector<long>& x) {
    auto wq = q->window_quiver(q->structural_window());
    const std::size_t n = wq->size();
    Field f = Field::rationals();
    Matrix e = Matrix::identity(n);
    for (const auto& a : wq->arrows()) e(a.src, a.dst) -= 1;
    Matrix xv(n, 1);
    for (std::size_t i = 0; i < n; ++i) xv(i, 0) = x[i];
    Matrix z = scale(f, -1, multiply(f, inverse(f, e), multiply(f, e.transpose(), xv)));
    std::vector<long> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(z(i, 0).get_num().get_si());
    return out;
}

std::vector<long> dims_of(const Rep& m) {
    std::vector<long> d;
    auto wq = m.quiver()->window_quiver(m.quiver()->structural_window());
    for (std::size_t i = 0; i < wq->size(); ++i) d.push_back(static_cast<long>(m.dim_at(wq->vertex(i))));
    return d;
}

}  // namespace

TEST_SUITE("ar") {
    TEST_CASE("DTr follows the Coxeter transformation on finite Dynkin quivers") {
        for (QuiverSpec spec : {orc::a_n_spec(3, 0), orc::a_n_spec(4, 5), orc::d4_spec(3), orc::d4_spec(0)}) {
            auto q = build_quiver(spec);
            auto w = knit_component(q, PreprojectiveSeed{}, 30);
            for (const auto& c : w.cells) {
                auto t = ar_translate(c.rep, Direction::DTr);
                if (c.projective) {
                    CHECK(t.is_zero());
                    continue;
                }
                REQUIRE(t.value);
                CHECK(dims_of(*t.value) == coxeter(q, dims_of(c.rep)));
                auto back = ar_translate(*t.value, Direction::TrD);
                REQUIRE(back.value);
                CHECK(is_isomorphic(*back.value, c.rep));
            }
        }
    }

    TEST_CASE("Nakayama functor sends P_x to I_x") {
        for (const char* file : {"a3.json", "d4.json", "qf.json"}) {
            auto q = orc::load_quiver(file);
            for (const auto& v : q_plus(*q).vertices.members)
                CHECK(is_isomorphic(nakayama(projective(q, v)), injective(q, v)));
        }
    }

    TEST_CASE("almost split sequences pass the exactness audit") {
        auto q = orc::load_quiver("qc.json");
        for (const char* r : {"M(p_inf)", "M(p_{4,3})", "S(0)", "M(p_{2,3})"}) {
            auto m = parse_rep(q, r);
            auto a = almost_split(m, Side::EndingAt);
            REQUIRE_MESSAGE(a.sequence, r);
            CHECK_MESSAGE(audit(*a.sequence).ok, r);
            CHECK(is_isomorphic(a.sequence->right, m));
            auto wq = q->window_quiver(Window::join(q->structural_window(), q->uniform_window(4)));
            for (std::size_t i = 0; i < wq->size(); ++i) {
                Vertex v = wq->vertex(i);
                std::size_t mid = 0;
                for (const auto& s : a.sequence->middle) mid += s.rep.dim_at(v);
                CHECK(mid == a.sequence->left.dim_at(v) + a.sequence->right.dim_at(v));
            }
        }
        auto s = almost_split(parse_rep(q, "M(p_{4,3})"), Side::StartingAt);
        REQUIRE(s.sequence);
        CHECK(audit(*s.sequence).ok);
    }

    TEST_CASE("unavailable almost split sequences report the obstruction") {
        auto q = orc::load_quiver("qc.json");
        CHECK(almost_split(projective(q, q->vertex("2")), Side::EndingAt).reason == Unavailable::Projective);
        // S_5 is pseudo-projective: its translate would be infinite dimensional.
        CHECK(almost_split(simple(q, q->vertex("5")), Side::EndingAt).reason == Unavailable::PseudoProjective);
        CHECK(almost_split(parse_rep(q, "M(p_inf)"), Side::StartingAt).reason == Unavailable::InfiniteDimStart);
        auto a3 = orc::load_quiver("a3.json");
        CHECK(almost_split(injective(a3, a3->vertex("2")), Side::StartingAt).reason == Unavailable::Injective);
        auto t = thin_rep(a3, a3->structural_window(), {a3->vertex("1"), a3->vertex("3")}, {});
        CHECK(almost_split(t, Side::EndingAt).reason == Unavailable::NotIndecomposable);
    }

    TEST_CASE("minimal right almost split maps match the middle term") {
        auto q = orc::load_quiver("d4.json");
        auto w = knit_component(q, PreprojectiveSeed{}, 30);
        for (const auto& c : w.cells) {
            if (c.projective) continue;
            auto a = almost_split(c.rep, Side::EndingAt);
            auto m = mras(c.rep, MrasSide::Into);
            REQUIRE(a.sequence);
            REQUIRE(m.value);
            CHECK(m.value->summands.size() == a.sequence->middle.size());
        }
    }

    TEST_CASE("pseudo-projective translates are infinite dimensional") {
        auto q = orc::load_quiver("qc.json");
        auto t = ar_translate(simple(q, q->vertex("5")), Direction::DTr);
        CHECK(t.is_pseudo);
        REQUIRE(t.value);
        CHECK(!t.value->finite_dimensional());
    }
}
