#pragma once

#include <optional>
#include <vector>

#include "geodesy/errors.hpp"

namespace geodesy {

/// GF(p^m) with elements represented as indices 0..q-1. The index encodes
/// the coefficient tuple of a degree < m polynomial over GF(p) in base p,
/// least-significant coefficient first. For m == 1 this is arithmetic mod p.
class FiniteField {
public:
    /// Builds GF(p^m). For m > 1 a monic irreducible modulus of degree m is
    /// required; when none is supplied, a built-in table covers the orders
    /// {4, 8, 9, 16, 25, 27}. The modulus is given constant term first.
    static FiniteField make(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt);

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    int order() const { return q_; }
    /// Empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;

    /// Coefficient tuple of an element, constant term first, length m.
    std::vector<int> coefficients(int a) const;
    int from_coefficients(const std::vector<int>& coeffs) const;

private:
    FiniteField(int p, int m, std::vector<int> modulus);

    int p_ = 0;
    int m_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> mul_table_; // q*q, row-major
    std::vector<int> add_table_;
};

/// True iff poly (constant first, over GF(p)) has no monic factor of degree
/// 1..deg(poly)/2; trial division, intended for the small degrees used here.
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

bool is_prime(int p);

/// Factors q as p^m with p prime, if possible.
std::optional<std::pair<int, int>> prime_power(int q);

} // namespace geodesy
