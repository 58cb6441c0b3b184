#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace omstat {

// Sparse polynomial in q and t with integer coefficients. Exponents may be negative.
class QTPoly {
public:
    // Keyed by (e_t, e_q), which is the canonical print order.
    using Terms = std::map<std::pair<int, int>, mpz_class>;

    QTPoly() = default;
    QTPoly(long c);  // NOLINT: implicit constants are convenient in formulas
    static QTPoly monomial(const mpz_class& c, int eq, int et = 0);
    static QTPoly q(int e = 1) { return monomial(1, e, 0); }
    static QTPoly t(int e = 1) { return monomial(1, 0, e); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(int eq, int et = 0) const;
    void add_term(const mpz_class& c, int eq, int et = 0);

    int max_q() const;
    int max_t() const;

    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    bool operator==(const QTPoly& o) const { return terms_ == o.terms_; }

    // throws std::domain_error on a negative exponent evaluated at 0
    mpz_class eval_at(long q0, long t0) const;
    QTPoly at_t0() const;
    QTPoly at_q0() const;
    QTPoly swap_qt() const;

    // Terms ordered by e_t then e_q, e.g. "1+2*q+q^2*t".
    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace omstat
