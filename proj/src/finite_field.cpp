#include "geodesy/finite_field.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace geodesy {

namespace {

std::string poly_to_string(const std::vector<int>& poly) {
    std::string s = "[";
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(poly[i]);
    }
    return s + "]";
}

// Remainder of polynomial division over GF(p); both constant-first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    while (!a.empty() && a.back() % p == 0) a.pop_back();
    const int db = static_cast<int>(b.size()) - 1;
    const int lead_inv = [&] {
        const int lead = ((b.back() % p) + p) % p;
        for (int i = 1; i < p; ++i)
            if (lead * i % p == 1) return i;
        throw Error(ErrorCode::Internal, "non-invertible leading coefficient");
    }();
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        const int factor = a.back() * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            int& coeff = a[da - db + i];
            coeff = ((coeff - factor * b[i]) % p + p) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// Enumerates monic polynomials of the given degree over GF(p) by index.
std::vector<int> monic_by_index(int degree, int p, long index) {
    std::vector<int> poly(degree + 1, 0);
    for (int i = 0; i < degree; ++i) {
        poly[i] = static_cast<int>(index % p);
        index /= p;
    }
    poly[degree] = 1;
    return poly;
}

const std::map<int, std::vector<int>>& builtin_moduli() {
    // Constant term first. Each entry is verified irreducible on first use.
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1, 1}},       // x^2 + x + 1 over GF(2)
        {8, {1, 1, 0, 1}},    // x^3 + x + 1 over GF(2)
        {9, {1, 0, 1}},       // x^2 + 1 over GF(3)
        {16, {1, 1, 0, 0, 1}},// x^4 + x + 1 over GF(2)
        {25, {1, 1, 1}},      // x^2 + x + 1 over GF(5)
        {27, {1, 2, 0, 1}},   // x^3 + 2x + 1 over GF(3)
    };
    return table;
}

} // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::optional<std::pair<int, int>> prime_power(int q) {
    if (q < 2) return std::nullopt;
    int p = q;
    for (int d = 2; static_cast<long>(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int m = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, m);
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
    const int degree = static_cast<int>(poly.size()) - 1;
    if (degree < 1) return false;
    for (int d = 1; d <= degree / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            const std::vector<int> divisor = monic_by_index(d, p, idx);
            if (poly_mod(poly, divisor, p).empty()) return false;
        }
    }
    return true;
}

FiniteField FiniteField::make(int p, int m, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p))
        throw Error(ErrorCode::Param, "field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorCode::Param, "field degree must be at least 1");

    long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 512)
            throw Error(ErrorCode::Param,
                        "field order " + std::to_string(q) + " exceeds the table-based limit of 512");
    }

    if (m == 1) {
        if (modulus && !modulus->empty())
            throw Error(ErrorCode::Param, "prime fields take no modulus");
        return FiniteField(p, 1, {});
    }

    std::vector<int> mod;
    if (modulus) {
        mod = *modulus;
        for (int& c : mod) c = ((c % p) + p) % p;
        if (static_cast<int>(mod.size()) != m + 1 || mod.back() != 1)
            throw Error(ErrorCode::Param,
                        "modulus " + poly_to_string(*modulus) + " is not a monic degree-" +
                            std::to_string(m) + " polynomial over GF(" + std::to_string(p) + ")");
        if (!is_irreducible_mod_p(mod, p))
            throw Error(ErrorCode::Param,
                        "modulus " + poly_to_string(*modulus) + " is reducible over GF(" +
                            std::to_string(p) + ")");
    } else {
        const auto it = builtin_moduli().find(static_cast<int>(q));
        if (it == builtin_moduli().end())
            throw Error(ErrorCode::Param,
                        "no built-in modulus for order " + std::to_string(q) +
                            "; supply an irreducible degree-" + std::to_string(m) +
                            " modulus explicitly");
        mod = it->second;
    }
    return FiniteField(p, m, std::move(mod));
}

FiniteField::FiniteField(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    long q = 1;
    for (int i = 0; i < m_; ++i) q *= p_;
    q_ = static_cast<int>(q);

    add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a) {
        const std::vector<int> ca = coefficients(a);
        for (int b = 0; b < q_; ++b) {
            const std::vector<int> cb = coefficients(b);
            std::vector<int> sum(m_);
            for (int i = 0; i < m_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
            add_table_[static_cast<std::size_t>(a) * q_ + b] = from_coefficients(sum);

            std::vector<int> prod(2 * m_ - 1, 0);
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
            if (m_ > 1) prod = poly_mod(prod, modulus_, p_);
            prod.resize(m_, 0);
            mul_table_[static_cast<std::size_t>(a) * q_ + b] = from_coefficients(prod);
        }
    }
}

int FiniteField::add(int a, int b) const {
    return add_table_[static_cast<std::size_t>(a) * q_ + b];
}

int FiniteField::neg(int a) const {
    const std::vector<int> ca = coefficients(a);
    std::vector<int> out(m_);
    for (int i = 0; i < m_; ++i) out[i] = (p_ - ca[i]) % p_;
    return from_coefficients(out);
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
    return mul_table_[static_cast<std::size_t>(a) * q_ + b];
}

std::vector<int> FiniteField::coefficients(int a) const {
    std::vector<int> out(m_);
    for (int i = 0; i < m_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

int FiniteField::from_coefficients(const std::vector<int>& coeffs) const {
    int value = 0;
    for (int i = m_ - 1; i >= 0; --i) value = value * p_ + coeffs[i];
    return value;
}

} // namespace geodesy
