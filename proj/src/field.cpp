#include "arq/field.hpp"

#include "arq/errors.hpp"

namespace arq {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
    if (!is_prime(p)) throw ArqError("InvalidField", "characteristic " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

Field Field::parse(const std::string& spec) {
    if (spec.empty() || spec == "Q") return rationals();
    const std::string prefix = "Fp:";
    if (spec.rfind(prefix, 0) == 0) {
        try {
            return prime(std::stoul(spec.substr(prefix.size())));
        } catch (const std::logic_error&) {
        }
    }
    throw ArqError("InvalidField", "expected Q or Fp:<prime>, got '" + spec + "'");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Scalar Field::reduce(const Scalar& x) const {
    if (p_ == 0) return x;
    mpz_class pz(p_);
    mpz_class num = x.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = x.get_den() % pz;
    if (den == 0) throw ArqError("InvalidScalar", "denominator vanishes modulo " + std::to_string(p_));
    if (den != 1) {
        mpz_class di;
        mpz_invert(di.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
        num = (num * di) % pz;
    }
    return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a + b;
    mpz_class r = a.get_num() + b.get_num();
    if (r >= mpz_class(p_)) r -= p_;
    return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a - b;
    mpz_class r = a.get_num() - b.get_num();
    if (r < 0) r += p_;
    return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % mpz_class(p_);
    return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
    if (p_ == 0) return -a;
    if (a == 0) return a;
    return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
    if (a == 0) throw ArqError("DivisionByZero", "inverse of zero");
    if (p_ == 0) return 1 / a;
    mpz_class r;
    mpz_class pz(p_);
    mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), pz.get_mpz_t());
    return Scalar(r);
}

}  // namespace arq
