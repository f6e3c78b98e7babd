#include "arq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "arq/errors.hpp"

namespace arq {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

long poly_degree(const Poly& p) { return static_cast<long>(poly_trim(p).size()) - 1; }

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.add(i < a.size() ? a[i] : Scalar(0), i < b.size() ? b[i] : Scalar(0));
    return poly_trim(r);
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.sub(i < a.size() ? a[i] : Scalar(0), i < b.size() ? b[i] : Scalar(0));
    return poly_trim(r);
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    return poly_trim(r);
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b_in) {
    Poly b = poly_trim(b_in);
    if (b.empty()) throw ArqError("DivisionByZero", "polynomial division by zero");
    Poly r = poly_trim(a);
    if (r.size() < b.size()) return {{}, r};
    Poly q(r.size() - b.size() + 1);
    Scalar lead_inv = f.inv(b.back());
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        Scalar c = f.mul(r.back(), lead_inv);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, b[i]));
        r = poly_trim(r);
    }
    return {poly_trim(q), r};
}

Poly poly_monic(const Field& f, const Poly& p_in) {
    Poly p = poly_trim(p_in);
    if (p.empty()) return p;
    Scalar inv = f.inv(p.back());
    for (auto& c : p) c = f.mul(c, inv);
    return p;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(f, a, b).second;
        a = b;
        b = r;
    }
    return poly_monic(f, a);
}

Poly poly_powmod(const Field& f, Poly base, mpz_class e, const Poly& mod) {
    Poly result{Scalar(1)};
    base = poly_divmod(f, base, mod).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = poly_divmod(f, poly_mul(f, result, base), mod).second;
        e >>= 1;
        if (e > 0) base = poly_divmod(f, poly_mul(f, base, base), mod).second;
    }
    return result;
}

Poly parse_poly(const Field& f, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ArqError("InvalidPolynomial", "empty polynomial");
    Poly p;
    std::size_t i = 0;
    auto fail = [&]() { throw ArqError("InvalidPolynomial", "cannot parse '" + text + "'"); };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::string coef;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) coef += s[i++];
        if (i < s.size() && s[i] == '*') ++i;
        long deg = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
                if (e.empty()) fail();
                deg = std::stol(e);
            }
        } else if (coef.empty()) {
            fail();
        }
        Scalar c = coef.empty() ? Scalar(1) : Scalar(coef);
        c.canonicalize();
        if (sign < 0) c = -c;
        if (p.size() <= static_cast<std::size_t>(deg)) p.resize(static_cast<std::size_t>(deg) + 1);
        p[static_cast<std::size_t>(deg)] += c;
        if (i < s.size() && s[i] != '+' && s[i] != '-') fail();
    }
    for (auto& c : p) c = f.reduce(c);
    return poly_trim(p);
}

std::string poly_to_string(const Poly& p_in) {
    Poly p = poly_trim(p_in);
    if (p.empty()) return "0";
    std::string out;
    for (long d = static_cast<long>(p.size()) - 1; d >= 0; --d) {
        Scalar c = p[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (c != 1 || d == 0) out += c.get_str();
        if (d >= 1) out += "x";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

std::vector<Scalar> field_roots(const Field& f, const Poly& p_in) {
    Poly p = poly_trim(p_in);
    std::vector<Scalar> roots;
    if (p.size() <= 1) return roots;
    auto eval = [&](const Scalar& x) {
        Scalar acc = 0;
        for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
        return acc;
    };
    if (!f.is_rational()) {
        if (f.characteristic() > 200000) return roots;
        for (unsigned long v = 0; v < f.characteristic(); ++v)
            if (eval(Scalar(v)) == 0) roots.emplace_back(v);
        return roots;
    }
    // Rational root theorem on the integer-scaled polynomial.
    mpz_class l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : p) z.push_back(c.get_num() * (l / c.get_den()));
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    std::set<Scalar> found;
    if (low > 0) found.insert(Scalar(0));
    mpz_class a0 = abs(z[low]), an = abs(z.back());
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> ds;
        if (n > 1000000) return ds;  // keep the search bounded
        for (mpz_class d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        return ds;
    };
    for (const auto& num : divisors(a0))
        for (const auto& den : divisors(an))
            for (int s : {1, -1}) {
                Scalar cand(num * s, den);
                cand.canonicalize();
                if (eval(cand) == 0) found.insert(cand);
            }
    roots.assign(found.begin(), found.end());
    return roots;
}

IrreducibilityVerdict is_irreducible(const Field& f, const Poly& p_in) {
    Poly p = poly_monic(f, p_in);
    long n = poly_degree(p);
    if (n <= 0) return {false, false};
    if (n == 1) return {true, false};
    if (f.is_rational()) {
        if (!field_roots(f, p).empty()) return {false, false};
        return {true, n > 3};
    }
    // Ben-Or: p is irreducible iff gcd(x^{q^i} - x, p) = 1 for i <= n/2.
    mpz_class q(f.characteristic());
    Poly x{Scalar(0), Scalar(1)};
    Poly power = x;
    for (long i = 1; i <= n / 2; ++i) {
        power = poly_powmod(f, power, q, p);
        Poly g = poly_gcd(f, poly_sub(f, power, x), p);
        if (poly_degree(g) > 0) return {false, false};
    }
    return {true, false};
}

Poly minimal_polynomial(const Field& f, const Matrix& a) {
    const std::size_t n = a.rows();
    // Krylov sequence of matrix powers flattened into vectors.
    std::vector<Matrix> powers{Matrix::identity(n)};
    auto flatten = [&](const Matrix& m) {
        std::vector<Scalar> v;
        v.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v.push_back(m(i, j));
        return v;
    };
    for (std::size_t d = 1; d <= n; ++d) {
        powers.push_back(multiply(f, powers.back(), a));
        Matrix sys(n * n, d);
        for (std::size_t k = 0; k < d; ++k) {
            auto v = flatten(powers[k]);
            for (std::size_t i = 0; i < v.size(); ++i) sys(i, k) = v[i];
        }
        auto target = flatten(powers[d]);
        auto sol = solve(f, sys, Matrix::column_vector(target));
        if (sol) {
            Poly m(d + 1);
            for (std::size_t k = 0; k < d; ++k) m[k] = f.neg((*sol)(k, 0));
            m[d] = 1;
            return m;
        }
    }
    return {Scalar(1)};  // n == 0
}

Matrix poly_eval_matrix(const Field& f, const Poly& p, const Matrix& a) {
    Matrix acc(a.rows(), a.cols());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = multiply(f, acc, a);
        acc = add(f, acc, scale(f, p[i], Matrix::identity(a.rows())));
    }
    return acc;
}

}  // namespace arq
