#include "sodlab/univariate.hpp"

#include <map>
#include <mutex>

#include "sodlab/error.hpp"

namespace sodlab::univariate {

void trim(UPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

UPoly scale(const UPoly& a, const mpq_class& c) {
    if (sgn(c) == 0) return {};
    UPoly out(a);
    for (auto& x : out) x *= c;
    return out;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder) {
    if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    remainder = a;
    trim(remainder);
    quotient.clear();
    if (remainder.size() < b.size()) return;
    quotient.assign(remainder.size() - b.size() + 1, 0);
    const mpq_class& lead = b.back();
    while (!remainder.empty() && remainder.size() >= b.size()) {
        std::size_t shift = remainder.size() - b.size();
        mpq_class c = remainder.back() / lead;
        quotient[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) remainder[shift + j] -= c * b[j];
        remainder.pop_back();
        trim(remainder);
    }
    trim(quotient);
}

UPoly rem(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    return r;
}

UPoly monic(const UPoly& p) {
    if (p.empty()) return p;
    mpq_class lead = p.back();
    return scale(p, 1 / lead);
}

UPoly gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

UPoly derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
    trim(out);
    return out;
}

int distinct_root_count(const UPoly& p) {
    UPoly q(p);
    trim(q);
    if (q.size() <= 1) return 0;
    UPoly g = gcd(q, derivative(q));
    return degree(q) - degree(g);
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    UPoly r0 = m, r1 = rem(a, m);
    UPoly s0, s1{mpq_class(1)};
    if (r1.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    while (!r1.empty()) {
        UPoly q, r;
        divmod(r0, r1, q, r);
        UPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1)
        throw Error(ErrorKind::DivisionByZero, "element is not invertible modulo the given polynomial");
    return rem(scale(s0, 1 / r0[0]), m);
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

UPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic index must be positive");
    static std::mutex mutex;
    static std::map<int, UPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    UPoly num(static_cast<std::size_t>(n) + 1);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        UPoly q, r;
        divmod(num, cyclotomic_polynomial(d), q, r);
        if (!r.empty()) throw Error(ErrorKind::InternalError, "cyclotomic division not exact");
        num = std::move(q);
    }
    std::lock_guard lock(mutex);
    cache.emplace(n, num);
    return num;
}

}  // namespace sodlab::univariate
