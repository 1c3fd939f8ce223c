#include "sw/qpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace sw {

QPoly QPoly::monomial(int deg, long long c) {
    QPoly p;
    p.num.assign(deg + 1, 0);
    p.num[deg] = c;
    return p;
}

int QPoly::degree() const {
    for (int i = (int)num.size() - 1; i >= 0; --i)
        if (num[i]) return i;
    return -1;
}

bool QPoly::is_zero() const { return degree() < 0; }

void QPoly::normalize() {
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.empty()) {
        den = 1;
        return;
    }
    long long g = den < 0 ? -den : den;
    for (long long c : num) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1) {
        for (auto& c : num) c /= g;
        den /= g;
    }
    if (den < 0) {
        den = -den;
        for (auto& c : num) c = -c;
    }
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.den = den * o.den;
    r.num.assign(std::max(num.size(), o.num.size()), 0);
    for (size_t i = 0; i < num.size(); ++i) r.num[i] += num[i] * o.den;
    for (size_t i = 0; i < o.num.size(); ++i) r.num[i] += o.num[i] * den;
    r.normalize();
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.num) c = -c;
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.den = den * o.den;
    r.num.assign(num.size() + o.num.size() - 1, 0);
    for (size_t i = 0; i < num.size(); ++i) {
        if (!num[i]) continue;
        for (size_t j = 0; j < o.num.size(); ++j) r.num[i + j] += num[i] * o.num[j];
    }
    r.normalize();
    return r;
}

bool QPoly::operator==(const QPoly& o) const { return (*this - o).is_zero(); }

QPoly QPoly::divided_by(const QPoly& o) const {
    if (o.is_zero()) throw std::domain_error("QPoly: division by zero");
    // long division over the rationals with a common denominator trick:
    // (num/den) / (onum/oden) — work with integer polynomials scaled by lead
    QPoly a = *this;
    int do_ = o.degree();
    long long olead = o.num[do_];
    QPoly quot;
    quot.num.assign(std::max(0, a.degree() - do_ + 1), 0);
    quot.den = 1;
    // scale numerators to keep arithmetic integral: multiply a by olead^k
    // and track the denominator exactly via rationals per step instead; the
    // catalog polynomials are small, so do plain rational division.
    std::vector<long long> anum(a.num);
    long long aden = a.den;
    while (true) {
        int da = -1;
        for (int i = (int)anum.size() - 1; i >= 0; --i)
            if (anum[i]) { da = i; break; }
        if (da < do_) {
            for (int i = 0; i <= da; ++i)
                if (anum[i]) throw std::domain_error("QPoly: inexact division");
            break;
        }
        // coefficient = anum[da]/(aden) / (olead/o.den) = anum[da]*o.den / (aden*olead)
        long long cn = anum[da] * o.den;
        long long cd = aden * olead;
        // quot += (cn/cd) q^{da-do}
        QPoly term;
        term.num.assign(da - do_ + 1, 0);
        term.num[da - do_] = cn;
        term.den = cd < 0 ? -cd : cd;
        if (cd < 0) term.num[da - do_] = -cn;
        term.normalize();
        quot = quot + term;
        // a -= term * o
        QPoly ta = term * o;
        QPoly an;
        an.num = anum;
        an.den = aden;
        an = an - ta;
        anum = an.num;
        aden = an.den;
    }
    quot.normalize();
    return quot;
}

long long QPoly::eval_int(long long qv) const {
    long long acc = 0;
    for (int i = (int)num.size() - 1; i >= 0; --i) acc = acc * qv + num[i];
    if (acc % den != 0) throw std::domain_error("QPoly: non-integral value at q=" + std::to_string(qv));
    return acc / den;
}

bool QPoly::integral_at(long long qv) const {
    long long acc = 0;
    for (int i = (int)num.size() - 1; i >= 0; --i) acc = acc * qv + num[i];
    return acc % den == 0;
}

QPoly QPoly::shifted(long long shift) const {
    // p(q + shift) via Horner on polynomial coefficients
    QPoly r;
    r.den = den;
    QPoly x = QPoly::q() + QPoly(shift);
    for (int i = (int)num.size() - 1; i >= 0; --i) {
        QPoly c;
        c.num = {num[i]};
        c.den = 1;
        r = r * x + c;
    }
    r.den *= den;
    r.normalize();
    return r;
}

bool QPoly::positive_for_q_geq(long long threshold) const {
    // sufficient certificate: after substituting q -> q + threshold all
    // coefficients are >= 0 and the value at the threshold is > 0
    QPoly s = shifted(threshold);
    if (s.is_zero()) return false;
    for (long long c : s.num)
        if (c < 0) return false;
    return s.num[0] > 0;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = (int)num.size() - 1; i >= 0; --i) {
        if (!num[i]) continue;
        if (!s.empty() && num[i] > 0) s += "+";
        if (i == 0 || num[i] != 1) {
            if (i > 0 && num[i] == -1)
                s += "-";
            else
                s += std::to_string(num[i]);
        }
        if (i >= 1) s += i == 1 ? "q" : "q^" + std::to_string(i);
    }
    if (den != 1) s = "(" + s + ")/" + std::to_string(den);
    return s;
}

QPoly cyclotomic(int j) {
    if (j < 1 || j > 12) throw std::invalid_argument("cyclotomic: index out of range");
    // Phi_j = (q^j - 1) / prod_{d | j, d < j} Phi_d
    QPoly p = QPoly::monomial(j) - QPoly(1);
    for (int d = 1; d < j; ++d)
        if (j % d == 0) p = p.divided_by(cyclotomic(d));
    return p;
}

}  // namespace sw
