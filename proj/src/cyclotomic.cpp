#include "abelian/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

// Exact division of integer polynomials, quotient known to be integral.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& den) {
    std::vector<Integer> rem = num;
    std::vector<Integer> quo(num.size() - den.size() + 1, Integer(0));
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        Integer c = rem[k + den.size() - 1] / den.back();
        quo[k] = c;
        if (c != 0)
            for (size_t i = 0; i < den.size(); ++i) rem[k + i] -= c * den[i];
    }
    return quo;
}

struct OrderData {
    int phi;
    std::vector<Integer> Phi;  // degree phi, monic
    // x^k mod Phi for k in [phi, kmax], rows of length phi.
    std::vector<std::vector<Rational>> powers;
};

const OrderData& order_data(int n) {
    static std::map<int, OrderData> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    OrderData d;
    d.Phi = cyclotomic_polynomial(n);
    d.phi = static_cast<int>(d.Phi.size()) - 1;
    int kmax = std::max(2 * d.phi - 2, n - 1);
    d.powers.resize(std::max(0, kmax - d.phi + 1));
    // x^phi = -(Phi - x^phi); higher powers by shifting and re-reducing.
    std::vector<Rational> cur(d.phi);
    for (int i = 0; i < d.phi; ++i) cur[i] = Rational(-d.Phi[i]);
    for (int k = d.phi; k <= kmax; ++k) {
        d.powers[k - d.phi] = cur;
        if (k == kmax) break;
        // multiply by x: shift, fold the overflow of degree phi back in
        Rational top = cur[d.phi - 1];
        for (int i = d.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = Rational(0);
        if (sgn(top) != 0)
            for (int i = 0; i < d.phi; ++i) cur[i] += top * Rational(-d.Phi[i]);
    }
    return cache.emplace(n, std::move(d)).first->second;
}

// Reduce a coefficient vector of arbitrary length mod Phi_n.
std::vector<Rational> reduce_mod_phi(int n, const std::vector<Rational>& v) {
    const OrderData& d = order_data(n);
    std::vector<Rational> out(d.phi, Rational(0));
    for (size_t k = 0; k < v.size(); ++k) {
        if (::sgn(v[k]) == 0) continue;
        if (static_cast<int>(k) < d.phi) {
            out[k] += v[k];
        } else {
            const auto& row = d.powers.at(k - d.phi);
            for (int i = 0; i < d.phi; ++i) out[i] += v[k] * row[i];
        }
    }
    return out;
}

}  // namespace

int euler_phi(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
    if (n < 1) throw ParameterError("cyclotomic_polynomial: n must be positive");
    // x^n - 1
    std::vector<Integer> num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    if (n == 1) return num;
    // divide out Phi_d for every proper divisor d | n
    std::vector<Integer> cur = num;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) cur = poly_div_exact(cur, cyclotomic_polynomial(d));
    return cur;
}

Cyclotomic::Cyclotomic(const Rational& r, int order) : order_(order) {
    if (order < 1) throw ParameterError("Cyclotomic: order must be positive");
    coeffs_.assign(euler_phi(order), Rational(0));
    coeffs_[0] = r;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
    if (n < 1) throw ParameterError("root_of_unity: order must be positive");
    long kk = ((k % n) + n) % n;
    std::vector<Rational> v(kk + 1, Rational(0));
    v[kk] = Rational(1);
    return Cyclotomic(n, reduce_mod_phi(n, v));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (::sgn(c) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (::sgn(coeffs_[i]) != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw InvariantError("rational_value on a non-rational cyclotomic");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(int m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw InvariantError("embedded: target order not a multiple");
    long step = m / order_;
    // zeta_n^k = zeta_m^{k * m/n}
    std::vector<Rational> v(static_cast<size_t>(step) * (coeffs_.size() - 1) + 1, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) v[k * step] = coeffs_[k];
    return Cyclotomic(m, reduce_mod_phi(m, v));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return Cyclotomic(order_, std::move(v));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.order_, b.order_);
    if (a.order_ != m) return a.embedded(m) + b.embedded(m);
    if (b.order_ != m) return a + b.embedded(m);
    std::vector<Rational> v = a.coeffs_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs_[i];
    return Cyclotomic(m, std::move(v));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.order_, b.order_);
    if (a.order_ != m || b.order_ != m) return a.embedded(m) * b.embedded(m);
    std::vector<Rational> prod(2 * a.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (::sgn(a.coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (::sgn(b.coeffs_[j]) == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Cyclotomic(m, reduce_mod_phi(m, prod));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    // extended Euclid in Q[x] against Phi_n
    const OrderData& d = order_data(order_);
    std::vector<Rational> r0(d.Phi.size());
    for (size_t i = 0; i < d.Phi.size(); ++i) r0[i] = Rational(d.Phi[i]);
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && ::sgn(r1.back()) == 0) r1.pop_back();
    std::vector<Rational> s0(1, Rational(0)), s1(1, Rational(1));  // cofactors of *this

    auto degree = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
    while (degree(r1) > 0) {
        // r0 = q*r1 + r; update (r0, s0) <- (r1, s1), (r1, s1) <- (r, s0 - q*s1)
        std::vector<Rational> rem = r0;
        std::vector<Rational> q(std::max<size_t>(1, rem.size() - r1.size() + 1), Rational(0));
        for (int k = static_cast<int>(rem.size()) - static_cast<int>(r1.size()); k >= 0; --k) {
            Rational c = rem[k + r1.size() - 1] / r1.back();
            q[k] = c;
            if (::sgn(c) != 0)
                for (size_t i = 0; i < r1.size(); ++i) rem[k + i] -= c * r1[i];
        }
        while (!rem.empty() && ::sgn(rem.back()) == 0) rem.pop_back();
        // snew = s0 - q * s1
        std::vector<Rational> snew(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (::sgn(q[i]) == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(rem);
        s1 = std::move(snew);
        if (r1.empty()) throw InvariantError("cyclotomic inverse: zero divisor encountered");
    }
    // r1 is a nonzero constant: 1/this = s1 / r1
    Rational c = r1[0];
    std::vector<Rational> v(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) v[i] = s1[i] / c;
    return Cyclotomic(order_, reduce_mod_phi(order_, v));
}

Cyclotomic Cyclotomic::conjugated() const {
    std::vector<Rational> v(order_, Rational(0));
    // zeta^k -> zeta^{order-k}
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (::sgn(coeffs_[k]) == 0) continue;
        v[(order_ - static_cast<int>(k)) % order_] += coeffs_[k];
    }
    return Cyclotomic(order_, reduce_mod_phi(order_, v));
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (::sgn(coeffs_[k]) == 0) continue;
        double arg = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
        z += to_double(coeffs_[k]) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    os << "z{" << order_ << "}:[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << abelian::to_string(coeffs_[i]);
    }
    os << "]";
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
    if (s.rfind("z{", 0) != 0) throw ParameterError("bad cyclotomic literal: " + s);
    size_t close = s.find('}');
    size_t open = s.find('[');
    size_t end = s.rfind(']');
    if (close == std::string::npos || open == std::string::npos || end == std::string::npos)
        throw ParameterError("bad cyclotomic literal: " + s);
    int n = std::stoi(s.substr(2, close - 2));
    std::vector<Rational> v;
    std::string body = s.substr(open + 1, end - open - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) v.push_back(rational_from_string(tok));
    if (static_cast<int>(v.size()) != euler_phi(n))
        throw ParameterError("cyclotomic literal has wrong coefficient count: " + s);
    return Cyclotomic(n, std::move(v));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.order_, b.order_);
    if (a.order_ != m || b.order_ != m) return a.embedded(m) == b.embedded(m);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

}  // namespace abelian
