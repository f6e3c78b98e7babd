#pragma once

#include <gmpxx.h>

#include <string>

namespace arq {

/// Exact scalar. Over a prime field the value is kept as the canonical
/// integer representative in [0, p).
using Scalar = mpq_class;

/// The scalar field: either the rationals (characteristic 0) or F_p.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }
    /// @param p a prime number (primality is checked).
    static Field prime(unsigned long p);
    /// Parses "Q" or "Fp:<prime>".
    static Field parse(const std::string& spec);

    unsigned long characteristic() const noexcept { return p_; }
    bool is_rational() const noexcept { return p_ == 0; }
    /// @returns "Q" or "Fp:<p>".
    std::string name() const;

    /// Maps an arbitrary rational into the field (reduction mod p).
    Scalar reduce(const Scalar& x) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool operator==(const Field& o) const noexcept { return p_ == o.p_; }
    bool operator!=(const Field& o) const noexcept { return p_ != o.p_; }

private:
    unsigned long p_ = 0;
};

}  // namespace arq
