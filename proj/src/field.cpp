#include "sw/field.hpp"

#include <map>
#include <mutex>

namespace sw {

uint16_t Gf::pow(uint16_t x, long long e) const {
    if (x == 0) {
        if (e <= 0) throw std::domain_error("Gf::pow: 0^e with e <= 0");
        return 0;
    }
    long long r = (long long)logt[x] * e % (long long)(q - 1);
    if (r < 0) r += q - 1;
    return expt[r];
}

uint32_t Gf::mul_order(uint16_t x) const {
    if (x == 0) throw std::domain_error("Gf::mul_order: zero element");
    uint32_t n = q - 1;
    uint32_t l = logt[x];
    if (l == 0) return 1;
    // order = (q-1)/gcd(l, q-1)
    uint32_t a0 = n, b0 = l;
    while (b0) { uint32_t t = a0 % b0; a0 = b0; b0 = t; }
    return n / a0;
}

int Gf::trace_f2(uint16_t x) const {
    uint16_t s = 0, y = x;
    for (int i = 0; i < a; ++i) {
        s ^= y;
        y = mul(y, y);
    }
    // s lies in GF(2) = {0,1} when x is in the field
    if (s > 1) throw std::logic_error("Gf::trace_f2: trace not in GF(2)");
    return s;
}

namespace {

// polynomial arithmetic over GF(2), coefficients as bits of uint64
uint64_t pmod(uint64_t x, uint64_t m) {
    int dm = 63 - __builtin_clzll(m);
    while (x >= (1ull << dm)) {
        int dx = 63 - __builtin_clzll(x);
        x ^= m << (dx - dm);
    }
    return x;
}

uint64_t pmulmod(uint64_t x, uint64_t y, uint64_t m) {
    uint64_t r = 0;
    while (y) {
        if (y & 1) r ^= x;
        y >>= 1;
        x <<= 1;
        x = pmod(x, m);
    }
    return r;
}

uint64_t ppowmod(uint64_t x, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    x = pmod(x, m);
    while (e) {
        if (e & 1) r = pmulmod(r, x, m);
        x = pmulmod(x, x, m);
        e >>= 1;
    }
    return r;
}

uint64_t pgcd(uint64_t x, uint64_t y) {
    while (y) {
        if (x < y) std::swap(x, y);
        int dx = 63 - __builtin_clzll(x), dy = 63 - __builtin_clzll(y);
        x ^= y << (dx - dy);
    }
    return x;
}

bool irreducible(uint32_t f, int n) {
    // x^(2^n) == x mod f, and x^(2^(n/p)) - x coprime to f for primes p|n
    uint64_t xr = pmod(2, f);
    uint64_t x2 = xr;
    for (int i = 0; i < n; ++i) x2 = pmulmod(x2, x2, f);
    if (x2 != xr) return false;
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        uint64_t xp = 2;
        int k = n / p;
        for (int i = 0; i < k; ++i) xp = pmulmod(xp, xp, f);
        if (pgcd(xp ^ 2ull, f) != 1) return false;
    }
    return true;
}

std::vector<uint32_t> prime_factors(uint64_t n) {
    std::vector<uint32_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back((uint32_t)d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back((uint32_t)n);
    return ps;
}

bool primitive(uint32_t f, int n) {
    uint64_t ord = (1ull << n) - 1;
    for (uint32_t p : prime_factors(ord))
        if (ppowmod(2, ord / p, f) == 1) return false;
    return ppowmod(2, ord, f) == 1;
}

}  // namespace

namespace {

// assumes Conway polynomials of all proper divisors are already in cache
uint32_t conway_search(int n, const std::map<int, uint32_t>& cache) {
    std::vector<int> divs;
    std::vector<uint32_t> sub;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) {
            divs.push_back(d);
            sub.push_back(cache.at(d));
        }

    uint64_t ordn = (1ull << n) - 1;
    for (uint32_t c = 1; c < (1u << n); c += 2) {
        uint32_t f = (1u << n) | c;
        if (!irreducible(f, n)) continue;
        if (!primitive(f, n)) continue;
        bool ok = true;
        for (size_t i = 0; i < divs.size() && ok; ++i) {
            int d = divs[i];
            uint64_t e = ordn / ((1ull << d) - 1);
            uint64_t r = ppowmod(2, e, f);   // image of the subfield generator
            // evaluate the subfield Conway polynomial at r
            uint64_t val = 0, rp = 1;
            for (int k = 0; k <= d; ++k) {
                if ((sub[i] >> k) & 1) val ^= rp;
                rp = pmulmod(rp, r, f);
            }
            if (val != 0) ok = false;
        }
        if (ok) return f;
    }
    throw std::logic_error("conway_poly: no candidate found");
}

}  // namespace

uint32_t conway_poly(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("conway_poly: degree out of range");
    static std::map<int, uint32_t> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    for (int d = 1; d <= n; ++d) {
        if (n % d || cache.count(d)) continue;
        cache[d] = conway_search(d, cache);
    }
    return cache.at(n);
}

Gf gf_from_poly(int n, uint32_t poly) {
    Gf f;
    f.a = n;
    f.q = 1u << n;
    f.poly = poly;
    f.logt.assign(f.q, 0);
    f.expt.assign(2 * (f.q - 1), 0);
    uint32_t v = 1;
    for (uint32_t i = 0; i < f.q - 1; ++i) {
        f.expt[i] = (uint16_t)v;
        f.expt[i + f.q - 1] = (uint16_t)v;
        f.logt[v] = (uint16_t)i;
        v <<= 1;
        if (v & f.q) v ^= poly;
    }
    // x must be primitive for the tables to cover GF(q)^x
    for (uint32_t w = 1; w < f.q; ++w)
        if (f.expt[f.logt[w]] != w) throw std::logic_error("gf_from_poly: polynomial not primitive");
    return f;
}

Field field_create(int a) {
    if (a < 1 || a > 8) throw std::invalid_argument("field_create: need 1 <= a <= 8");
    Field F;
    F.base = gf_from_poly(a, conway_poly(a));
    F.ext = gf_from_poly(2 * a, conway_poly(2 * a));
    uint32_t q = F.base.q;
    F.delta = F.base.gen();                       // order q-1 (delta = 1 when q = 2)
    F.xi = F.ext.expt[q - 1];                     // g^(q-1) has order exactly q+1
    if (q > 2 && F.base.mul_order(F.delta) != q - 1)
        throw std::logic_error("field_create: delta order wrong");
    if (F.ext.mul_order(F.xi) != q + 1)
        throw std::logic_error("field_create: xi order wrong");
    // Conway compatibility makes the log-scaling embedding a ring map;
    // verify additivity on a spanning set.
    for (uint32_t x = 1; x < q; ++x) {
        uint16_t ex = F.embed((uint16_t)x);
        uint16_t e1 = F.embed(1);
        if (F.embed((uint16_t)(x ^ 1)) != (uint16_t)(ex ^ e1))
            throw std::logic_error("field_create: embedding not additive");
    }
    return F;
}

}  // namespace sw
