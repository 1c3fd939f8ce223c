#include "sw/cyc.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace sw {

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    reduce();
}

void Rat::reduce() {
    if (den < 0) {
        den = -den;
        num = -num;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }

std::string Rat::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// integer polynomial division, exact; poly[i] = coeff of x^i
std::vector<long long> poly_div_exact(std::vector<long long> a, const std::vector<long long>& b) {
    int db = (int)b.size() - 1;
    if (b[db] != 1) throw std::logic_error("poly_div_exact: divisor not monic");
    int da = (int)a.size() - 1;
    std::vector<long long> q(da - db + 1, 0);
    for (int i = da; i >= db; --i) {
        long long c = a[i];
        if (!c) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (long long c : a)
        if (c) throw std::logic_error("poly_div_exact: inexact");
    return q;
}

std::vector<long long> cyclotomic_int(uint32_t m, std::map<uint32_t, std::vector<long long>>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<long long> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (uint32_t d = 1; d < m; ++d)
        if (m % d == 0) p = poly_div_exact(p, cyclotomic_int(d, cache));
    cache[m] = p;
    return p;
}

}  // namespace

const CycCtx& CycCtx::get(uint32_t m) {
    static std::map<uint32_t, std::unique_ptr<CycCtx>> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = registry.find(m);
    if (it != registry.end()) return *it->second;

    auto cx = std::make_unique<CycCtx>();
    cx->m = m;
    std::map<uint32_t, std::vector<long long>> cache;
    cx->phim = cyclotomic_int(m, cache);
    cx->phi = (uint32_t)cx->phim.size() - 1;
    uint32_t phi = cx->phi;
    if (m > 1) {
        std::vector<long long> base(phi);
        for (uint32_t i = 0; i < phi; ++i) base[i] = -cx->phim[i];
        cx->red.resize(m - phi);
        cx->red[0] = base;
        for (uint32_t e = phi + 1; e < m; ++e) {
            const auto& prev = cx->red[e - phi - 1];
            std::vector<long long> cur(phi, 0);
            long long top = prev[phi - 1];
            for (uint32_t i = 1; i < phi; ++i) cur[i] = prev[i - 1];
            if (top)
                for (uint32_t i = 0; i < phi; ++i) cur[i] += top * base[i];
            cx->red[e - phi] = std::move(cur);
        }
        // consistency: x^m must reduce to 1
        {
            const auto& prev = cx->red[m - phi - 1];
            std::vector<long long> cur(phi, 0);
            long long top = prev[phi - 1];
            for (uint32_t i = 1; i < phi; ++i) cur[i] = prev[i - 1];
            if (top)
                for (uint32_t i = 0; i < phi; ++i) cur[i] += top * base[i];
            if (cur[0] != 1) throw std::logic_error("CycCtx: x^m != 1 after reduction");
            for (uint32_t i = 1; i < phi; ++i)
                if (cur[i]) throw std::logic_error("CycCtx: x^m != 1 after reduction");
        }
    }
    const CycCtx& ref = *cx;
    registry[m] = std::move(cx);
    return ref;
}

Cyc Cyc::integer(long long c) {
    Cyc r;
    if (c) r.t.push_back({0, c});
    return r;
}

Cyc Cyc::root(uint32_t e, uint32_t m, long long c) {
    Cyc r;
    if (c) r.t.push_back({e % m, c});
    return r;
}

namespace {
void merge_add(std::vector<std::pair<uint32_t, long long>>& out,
               const std::vector<std::pair<uint32_t, long long>>& a,
               const std::vector<std::pair<uint32_t, long long>>& b, long long bs) {
    out.clear();
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            long long c = b[j].second * bs;
            if (c) out.push_back({b[j].first, c});
            ++j;
        } else {
            long long c = a[i].second + b[j].second * bs;
            if (c) out.push_back({a[i].first, c});
            ++i;
            ++j;
        }
    }
}
}  // namespace

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc r;
    merge_add(r.t, t, o.t, 1);
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc r;
    merge_add(r.t, t, o.t, -1);
    return r;
}

Cyc Cyc::operator-() const { return scaled(-1); }

Cyc Cyc::scaled(long long c) const {
    Cyc r;
    if (!c) return r;
    r.t = t;
    for (auto& p : r.t) p.second *= c;
    return r;
}

Cyc Cyc::mul(const Cyc& o, uint32_t m) const {
    std::map<uint32_t, long long> acc;
    for (const auto& [e1, c1] : t)
        for (const auto& [e2, c2] : o.t) {
            uint32_t e = e1 + e2;
            if (e >= m) e -= m;
            acc[e] += c1 * c2;
        }
    Cyc r;
    for (const auto& [e, c] : acc)
        if (c) r.t.push_back({e, c});
    return r;
}

Cyc Cyc::conj(uint32_t m) const {
    Cyc r;
    for (const auto& [e, c] : t) r.t.push_back({e == 0 ? 0 : m - e, c});
    std::sort(r.t.begin(), r.t.end());
    return r;
}

std::vector<long long> Cyc::canonical(const CycCtx& cx) const {
    std::vector<long long> v(cx.phi, 0);
    for (const auto& [e, c] : t) {
        if (e < cx.phi) {
            v[e] += c;
        } else {
            const auto& row = cx.red[e - cx.phi];
            for (uint32_t i = 0; i < cx.phi; ++i) v[i] += c * row[i];
        }
    }
    return v;
}

bool Cyc::is_zero(const CycCtx& cx) const {
    for (long long c : canonical(cx))
        if (c) return false;
    return true;
}

bool Cyc::equals(const Cyc& o, const CycCtx& cx) const { return (*this - o).is_zero(cx); }

std::optional<long long> Cyc::as_integer(const CycCtx& cx) const {
    auto v = canonical(cx);
    for (uint32_t i = 1; i < cx.phi; ++i)
        if (v[i]) return std::nullopt;
    return v[0];
}

Cyc Cyc::divided_by_int(long long d, const CycCtx& cx) const {
    if (!d) throw std::domain_error("Cyc: division by zero");
    auto v = canonical(cx);
    Cyc r;
    for (uint32_t i = 0; i < cx.phi; ++i) {
        if (v[i] % d) throw std::domain_error("Cyc: inexact integer division");
        if (v[i] / d) r.t.push_back({i, v[i] / d});
    }
    return r;
}

std::string Cyc::str() const {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : t) {
        if (!s.empty()) s += c >= 0 ? "+" : "";
        if (e == 0) {
            s += std::to_string(c);
        } else {
            if (c == -1)
                s += "-";
            else if (c != 1)
                s += std::to_string(c) + "*";
            s += "z^" + std::to_string(e);
        }
    }
    return s;
}

}  // namespace sw
