#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arq/ar.hpp"
#include "arq/io.hpp"
#include "arq/quiver.hpp"
#include "arq/rep.hpp"
#include "arq/strings.hpp"

/// Independent reference computations used by the test suites. They rely on
/// brute force and path counting only, never on the AR machinery under test.
namespace arq::oracle {

#ifndef ARQ_DATA_DIR
#define ARQ_DATA_DIR "data"
#endif

inline QuiverPtr load_quiver(const std::string& file, const Field& f = Field::rationals()) {
    return build_quiver(load_spec(std::string(ARQ_DATA_DIR) + "/" + file), f);
}

inline QuiverSpec finite_spec(const std::vector<std::string>& vertices,
                              const std::vector<std::pair<std::string, std::string>>& arrows) {
    QuiverSpec s;
    s.core_vertices = vertices;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        s.core_arrows.push_back({arrows[i].first, arrows[i].second, "a" + std::to_string(i)});
    return s;
}

/// Linear A_n quiver 1 - 2 - ⋯ - n; bit i of `mask` reverses edge i.
inline QuiverSpec a_n_spec(std::size_t n, unsigned mask) {
    std::vector<std::string> v;
    std::vector<std::pair<std::string, std::string>> a;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) {
        auto x = std::to_string(i), y = std::to_string(i + 1);
        a.push_back((mask >> (i - 1)) & 1u ? std::pair{y, x} : std::pair{x, y});
    }
    return finite_spec(v, a);
}

/// D_4 with centre "c" and leaves x, y, z; bit i of `mask` points leaf i into the centre.
inline QuiverSpec d4_spec(unsigned mask) {
    std::vector<std::pair<std::string, std::string>> a;
    const char* leaves[] = {"x", "y", "z"};
    for (unsigned i = 0; i < 3; ++i)
        a.push_back((mask >> i) & 1u ? std::pair<std::string, std::string>{leaves[i], "c"}
                                     : std::pair<std::string, std::string>{"c", leaves[i]});
    return finite_spec({"c", "x", "y", "z"}, a);
}

/// Number of isoclasses of indecomposables found by enumerating every
/// representation over the field (F_2 in practice) with dimension vector
/// bounded by `bound`, keeping the indecomposable ones.
inline std::size_t brute_force_indecomposables(const QuiverPtr& q, const std::vector<std::size_t>& bound) {
    const Window w = q->structural_window();
    auto wq = q->window_quiver(w);
    const auto p = q->field().characteristic();
    std::vector<Rep> classes;
    std::vector<std::size_t> dims(bound.size(), 0);
    std::function<void(std::size_t)> dims_rec = [&](std::size_t v) {
        if (v < dims.size()) {
            for (std::size_t d = 0; d <= bound[v]; ++d) {
                dims[v] = d;
                dims_rec(v + 1);
            }
            return;
        }
        Rep base(q, w);
        std::size_t total = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) base.set_dim(i, dims[i]), total += dims[i];
        if (total == 0) return;
        // Enumerate all structure maps as one big mixed-radix counter.
        std::vector<std::pair<std::size_t, std::size_t>> slots;  // (arrow, entry)
        for (std::size_t a = 0; a < wq->arrows().size(); ++a)
            for (std::size_t e = 0; e < dims[wq->arrows()[a].src] * dims[wq->arrows()[a].dst]; ++e) slots.push_back({a, e});
        std::vector<unsigned long> digit(slots.size(), 0);
        for (;;) {
            Rep m = base;
            for (std::size_t a = 0; a < wq->arrows().size(); ++a) {
                const auto& ar = wq->arrows()[a];
                Matrix mat(dims[ar.dst], dims[ar.src]);
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (slots[s].first == a)
                        mat(slots[s].second / mat.cols(), slots[s].second % mat.cols()) = static_cast<long>(digit[s]);
                m.set_map(a, mat);
            }
            if (is_indecomposable(m)) {
                bool seen = false;
                for (const auto& c : classes)
                    if (c.dims() == m.dims() && is_isomorphic(c, m)) {
                        seen = true;
                        break;
                    }
                if (!seen) classes.push_back(m);
            }
            std::size_t k = 0;
            while (k < digit.size() && ++digit[k] == p) digit[k++] = 0;
            if (k == digit.size()) break;
        }
    };
    dims_rec(0);
    return classes.size();
}

/// Random finite dimensional representation on a window: dimensions in
/// [0, max_dim] on the window vertices, random structure maps, nothing
/// beyond the window.
inline Rep random_rep(const QuiverPtr& q, const Window& w, std::size_t max_dim, std::mt19937& rng) {
    Rep m(q, w);
    for (std::size_t i = 0; i < m.wq().size(); ++i) m.set_dim(i, rng() % (max_dim + 1));
    const long modulus = q->field().is_rational() ? 5 : static_cast<long>(q->field().characteristic());
    for (std::size_t a = 0; a < m.wq().arrows().size(); ++a) {
        const auto& ar = m.wq().arrows()[a];
        Matrix mat(m.dim(ar.dst), m.dim(ar.src));
        for (std::size_t r = 0; r < mat.rows(); ++r)
            for (std::size_t c = 0; c < mat.cols(); ++c) mat(r, c) = static_cast<long>(rng() % modulus) - (q->field().is_rational() ? 2 : 0);
        m.set_map(a, mat);
    }
    for (std::size_t t = 0; t < q->num_tails(); ++t) m.set_cont(static_cast<int>(t), false);
    return m;
}

/// dim P_x(z) = |Q(x, z)| and dim I_x(z) = |Q(z, x)| by explicit path counting.
inline std::size_t count_paths(const QuiverPtr& q, const Vertex& x, const Vertex& z) {
    return paths_between(q, x, z).size();
}

/// Random canonical A∞ / A∞∞ orientation with prefix ≤ 6 and period ≤ 3.
inline OrientationWord random_word(std::mt19937& rng) {
    OrientationWord w;
    auto letters = [&](std::size_t n) {
        std::vector<Dir> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rng() % 2 ? Dir::In : Dir::Out);
        return v;
    };
    w.prefix = letters(rng() % 7);
    w.period = letters(1 + rng() % 3);
    return w;
}

/// Support interval of a Q_R / Q_L member as a string.
inline StringSpec member_interval(StringSide side, const PathSeg& p) {
    if (p.end) return {std::min(p.start, *p.end), std::max(p.start, *p.end)};
    if (side == StringSide::R) return {p.start, std::nullopt};
    return {std::nullopt, p.start};
}

}  // namespace arq::oracle
