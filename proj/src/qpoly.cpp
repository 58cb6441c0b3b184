#include "omstat/qpoly.hpp"

#include <stdexcept>

namespace omstat {

QTPoly::QTPoly(long c)
{
    if (c != 0) terms_[{0, 0}] = c;
}

QTPoly QTPoly::monomial(const mpz_class& c, int eq, int et)
{
    QTPoly p;
    p.add_term(c, eq, et);
    return p;
}

mpz_class QTPoly::coeff(int eq, int et) const
{
    auto it = terms_.find({et, eq});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void QTPoly::add_term(const mpz_class& c, int eq, int et)
{
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({et, eq}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int QTPoly::max_q() const
{
    int m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first || k.second > m) m = k.second;
        first = false;
    }
    return m;
}

int QTPoly::max_t() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }

QTPoly& QTPoly::operator+=(const QTPoly& o)
{
    for (const auto& [k, c] : o.terms_) add_term(c, k.second, k.first);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o)
{
    for (const auto& [k, c] : o.terms_) add_term(-c, k.second, k.first);
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b)
{
    QTPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ca * cb, ka.second + kb.second, ka.first + kb.first);
    return out;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

mpz_class QTPoly::eval_at(long q0, long t0) const
{
    mpz_class sum = 0;
    for (const auto& [k, c] : terms_) {
        if ((k.first < 0 && t0 == 0) || (k.second < 0 && q0 == 0))
            throw std::domain_error("negative exponent evaluated at zero");
        if ((k.first < 0 && t0 * t0 != 1) || (k.second < 0 && q0 * q0 != 1))
            throw std::domain_error("negative exponent needs a unit argument");
        mpz_class tq, tt;
        mpz_pow_ui(tq.get_mpz_t(), mpz_class(q0).get_mpz_t(), static_cast<unsigned long>(std::abs(k.second)));
        mpz_pow_ui(tt.get_mpz_t(), mpz_class(t0).get_mpz_t(), static_cast<unsigned long>(std::abs(k.first)));
        sum += c * tq * tt;
    }
    return sum;
}

QTPoly QTPoly::at_t0() const
{
    QTPoly out;
    for (const auto& [k, c] : terms_)
        if (k.first == 0) out.terms_.emplace(k, c);
    return out;
}

QTPoly QTPoly::at_q0() const
{
    QTPoly out;
    for (const auto& [k, c] : terms_)
        if (k.second == 0) out.terms_.emplace(k, c);
    return out;
}

QTPoly QTPoly::swap_qt() const
{
    QTPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(std::make_pair(k.second, k.first), c);
    return out;
}

std::string QTPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        const int et = k.first, eq = k.second;
        mpz_class mag = abs(c);
        bool neg = c < 0;
        if (!s.empty())
            s += neg ? "-" : "+";
        else if (neg)
            s += "-";
        std::string mono;
        auto var = [&](const char* v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += '*';
            mono += v;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        var("q", eq);
        var("t", et);
        if (mono.empty())
            s += mag.get_str();
        else if (mag == 1)
            s += mono;
        else
            s += mag.get_str() + "*" + mono;
    }
    return s;
}

}  // namespace omstat
