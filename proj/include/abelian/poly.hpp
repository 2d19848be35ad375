#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "abelian/cyclotomic.hpp"
#include "abelian/errors.hpp"
#include "abelian/rational.hpp"

namespace abelian {

// ---------------------------------------------------------------------------
// Variables: two cyclically indexed families x_i, y_i with indices in Z_m.
// ---------------------------------------------------------------------------

enum class Family : unsigned char { X = 0, Y = 1 };

struct Variable {
    Family family;
    int index;    // 0 <= index < modulus
    int modulus;  // m

    Variable(Family f, int idx, int m) : family(f), modulus(m) {
        if (m <= 0) throw ParameterError("Variable: modulus must be positive");
        index = ((idx % m) + m) % m;
    }

    friend bool operator==(const Variable& a, const Variable& b) {
        return a.family == b.family && a.index == b.index && a.modulus == b.modulus;
    }
    // Ascending variable ordering: x_0 < x_1 < ... < y_0 < y_1 < ...
    friend bool operator<(const Variable& a, const Variable& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.index != b.index) return a.index < b.index;
        return a.modulus < b.modulus;
    }
    std::string to_string() const {
        return std::string(family == Family::X ? "x[" : "y[") + std::to_string(index) + "]";
    }
};

inline Variable var_x(int i, int m) { return Variable(Family::X, i, m); }
inline Variable var_y(int i, int m) { return Variable(Family::Y, i, m); }

// Cyclic distance on Z_m: min over representatives of |k - l|.
inline int distance(int k, int l, int m) {
    int d = ((k - l) % m + m) % m;
    return std::min(d, m - d);
}

// ---------------------------------------------------------------------------
// Monomials: sparse exponent maps, no zero exponents stored.
// ---------------------------------------------------------------------------

class Monomial {
  public:
    using Terms = std::vector<std::pair<Variable, int>>;  // sorted ascending by Variable

    Monomial() : degree_(0) {}
    explicit Monomial(const Terms& terms) {
        Terms t = terms;
        std::sort(t.begin(), t.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        degree_ = 0;
        for (const auto& [v, e] : t) {
            if (e < 0) throw InvariantError("Monomial: negative exponent");
            if (e == 0) continue;
            if (!terms_.empty() && terms_.back().first == v)
                terms_.back().second += e;
            else
                terms_.emplace_back(v, e);
            degree_ += e;
        }
    }
    static Monomial one() { return Monomial(); }
    static Monomial of(const Variable& v, int e = 1) { return Monomial(Terms{{v, e}}); }

    const Terms& terms() const { return terms_; }
    int degree() const { return degree_; }
    bool is_one() const { return terms_.empty(); }
    int exponent(const Variable& v) const {
        for (const auto& [w, e] : terms_)
            if (w == v) return e;
        return 0;
    }
    bool is_squarefree() const {
        for (const auto& [v, e] : terms_)
            if (e > 1) return false;
        return true;
    }
    int family_degree(Family f) const {
        int d = 0;
        for (const auto& [v, e] : terms_)
            if (v.family == f) d += e;
        return d;
    }
    Monomial family_part(Family f) const {
        Terms t;
        for (const auto& [v, e] : terms_)
            if (v.family == f) t.emplace_back(v, e);
        Monomial m;
        m.terms_ = std::move(t);
        for (const auto& [v, e] : m.terms_) m.degree_ += e;
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first))
                m.terms_.push_back(*ia++);
            else if (ia == a.terms_.end() || ib->first < ia->first)
                m.terms_.push_back(*ib++);
            else {
                m.terms_.emplace_back(ia->first, ia->second + ib->second);
                ++ia, ++ib;
            }
        }
        m.degree_ = a.degree_ + b.degree_;
        return m;
    }

    bool divides(const Monomial& b) const {
        auto ia = terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != terms_.end()) {
            while (ib != b.terms_.end() && ib->first < ia->first) ++ib;
            if (ib == b.terms_.end() || !(ib->first == ia->first) || ib->second < ia->second)
                return false;
            ++ia;
        }
        return true;
    }

    // Requires divides(b) for b / *this.
    friend Monomial operator/(const Monomial& b, const Monomial& a) {
        Monomial::Terms t;
        auto ia = a.terms_.begin();
        for (const auto& [v, e] : b.terms_) {
            int sub = 0;
            if (ia != a.terms_.end() && ia->first == v) sub = (ia++)->second;
            if (e - sub < 0) throw InvariantError("monomial division not exact");
            if (e - sub > 0) t.emplace_back(v, e - sub);
        }
        if (ia != a.terms_.end()) throw InvariantError("monomial division not exact");
        return Monomial(t);
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial::Terms t;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first))
                t.push_back(*ia++);
            else if (ia == a.terms_.end() || ib->first < ia->first)
                t.push_back(*ib++);
            else {
                t.emplace_back(ia->first, std::max(ia->second, ib->second));
                ++ia, ++ib;
            }
        }
        return Monomial(t);
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first < ib->first)
                ++ia;
            else if (ib->first < ia->first)
                ++ib;
            else
                return false;
        }
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : terms_) {
            if (!s.empty()) s += "*";
            s += v.to_string();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

  private:
    Terms terms_;
    int degree_;
};

// Graded reverse lexicographic comparison with the ascending variable order.
// Returns -1, 0, +1 for a < b, a = b, a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    auto ia = a.terms().rbegin(), ea = a.terms().rend();
    auto ib = b.terms().rbegin(), eb = b.terms().rend();
    while (ia != ea || ib != eb) {
        if (ia == ea) return 1;   // a lacks b's largest remaining variable
        if (ib == eb) return -1;  // b lacks a's largest remaining variable
        if (ib->first < ia->first) return -1;
        if (ia->first < ib->first) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    return 0;
}

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

// Width of a one-family monomial: max cyclic distance between indices used.
int monomial_width(const Monomial& m);

// ---------------------------------------------------------------------------
// Coefficient field operations.
// ---------------------------------------------------------------------------

template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational inv(const Rational& a) { return rational_inverse(a); }
    static Rational from_rational(const Rational& a) { return a; }
    static std::complex<double> complex_value(const Rational& a) { return {to_double(a), 0.0}; }
    // Display: pull signs out of rational coefficients.
    static bool display_negative(const Rational& a) { return sgn(a) < 0; }
    static Rational display_abs(const Rational& a) { return abs(a); }
    static std::string str(const Rational& a) { return to_string(a); }
};

template <>
struct FieldOps<Cyclotomic> {
    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(Rational(1)); }
    static bool is_zero(const Cyclotomic& a) { return a.is_zero(); }
    static Cyclotomic inv(const Cyclotomic& a) { return a.inverse(); }
    static Cyclotomic from_rational(const Rational& a) { return Cyclotomic(a); }
    static std::complex<double> complex_value(const Cyclotomic& a) { return a.to_complex(); }
    static bool display_negative(const Cyclotomic& a) {
        return a.is_rational() && sgn(a.rational_value()) < 0;
    }
    static Cyclotomic display_abs(const Cyclotomic& a) {
        return display_negative(a) ? -a : a;
    }
    static std::string str(const Cyclotomic& a) {
        return a.is_rational() ? to_string(a.rational_value()) : a.to_string();
    }
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over an exact field K.
// ---------------------------------------------------------------------------

template <class K>
class Polynomial {
  public:
    using Ops = FieldOps<K>;
    using TermMap = std::map<Monomial, K, MonomialGreater>;  // leading term first

    Polynomial() = default;
    explicit Polynomial(const K& c) {
        if (!Ops::is_zero(c)) terms_[Monomial::one()] = c;
    }
    explicit Polynomial(const Variable& v) { terms_[Monomial::of(v)] = Ops::one(); }
    Polynomial(const Monomial& m, const K& c) {
        if (!Ops::is_zero(c)) terms_[m] = c;
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const K& c) { return Polynomial(c); }
    static Polynomial variable(const Variable& v) { return Polynomial(v); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int degree() const {
        return terms_.empty() ? -1 : terms_.begin()->first.degree();
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw InvariantError("leading_monomial of zero polynomial");
        return terms_.begin()->first;
    }
    const K& leading_coefficient() const {
        if (terms_.empty()) throw InvariantError("leading_coefficient of zero polynomial");
        return terms_.begin()->second;
    }
    K coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Ops::zero() : it->second;
    }

    void add_term(const Monomial& m, const K& c) {
        if (Ops::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (Ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial p;
        for (const auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial p = a;
        for (const auto& [m, c] : b.terms_) p.add_term(m, c);
        return p;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial p = a;
        for (const auto& [m, c] : b.terms_) p.add_term(m, -c);
        return p;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
        return p;
    }
    friend Polynomial operator*(const K& c, const Polynomial& a) {
        Polynomial p;
        if (Ops::is_zero(c)) return p;
        for (const auto& [m, k] : a.terms_) p.add_term(m, c * k);
        return p;
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return Ops::inv(leading_coefficient()) * *this;
    }

    // Simultaneous substitution of whole polynomials for variables.
    Polynomial substituted(const std::map<Variable, Polynomial>& subs) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial prod = Polynomial::constant(c);
            for (const auto& [v, e] : m.terms()) {
                auto it = subs.find(v);
                if (it == subs.end()) {
                    prod *= Polynomial(Monomial::of(v, e), Ops::one());
                } else {
                    for (int k = 0; k < e; ++k) prod *= it->second;
                }
            }
            out += prod;
        }
        return out;
    }

    // Twisted monomial substitution v -> scalar(v) * target(v); identity off the map.
    Polynomial monomial_substituted(
        const std::map<Variable, std::pair<K, Variable>>& subs) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            K coeff = c;
            Monomial::Terms t;
            for (const auto& [v, e] : m.terms()) {
                auto it = subs.find(v);
                if (it == subs.end()) {
                    t.emplace_back(v, e);
                } else {
                    for (int k = 0; k < e; ++k) coeff *= it->second.first;
                    t.emplace_back(it->second.second, e);
                }
            }
            out.add_term(Monomial(t), coeff);
        }
        return out;
    }

    std::complex<double> evaluate(const std::map<Variable, std::complex<double>>& point) const {
        std::complex<double> total(0.0, 0.0);
        for (const auto& [m, c] : terms_) {
            std::complex<double> v = Ops::complex_value(c);
            for (const auto& [var, e] : m.terms()) {
                auto it = point.find(var);
                if (it == point.end()) throw InvariantError("evaluate: missing variable value");
                for (int k = 0; k < e; ++k) v *= it->second;
            }
            total += v;
        }
        return total;
    }

    // Largest |term value| at the point; scale for relative residuals.
    double evaluate_scale(const std::map<Variable, std::complex<double>>& point) const {
        double scale = 0.0;
        for (const auto& [m, c] : terms_) {
            std::complex<double> v = Ops::complex_value(c);
            for (const auto& [var, e] : m.terms()) {
                auto it = point.find(var);
                if (it == point.end()) throw InvariantError("evaluate: missing variable value");
                for (int k = 0; k < e; ++k) v *= it->second;
            }
            scale = std::max(scale, std::abs(v));
        }
        return scale;
    }

    std::string to_string() const;

  private:
    TermMap terms_;
};

using PolyQ = Polynomial<Rational>;
using PolyC = Polynomial<Cyclotomic>;

// Promote rational-coefficient polynomials into a cyclotomic field.
inline PolyC promoted(const PolyQ& p) {
    PolyC out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, Cyclotomic(c));
    return out;
}

// Strip cyclotomic coefficients that are all rational; nullopt-style via flag.
bool try_rationalize(const PolyC& p, PolyQ& out);

// Text grammar (bit-exact for reports): terms joined by " + " / " - ",
// monomials like x[3]^2*y[1], coefficients as rationals or z{n}:[...].
template <class K>
std::string Polynomial<K>::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = Ops::display_negative(c);
        K a = Ops::display_abs(c);
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        bool unit = (a == Ops::one());
        if (m.is_one()) {
            s += Ops::str(a);
        } else {
            if (!unit) s += Ops::str(a) + "*";
            s += m.to_string();
        }
    }
    return s;
}

PolyQ parse_poly_q(const std::string& text, int modulus);
PolyC parse_poly_c(const std::string& text, int modulus);

}  // namespace abelian
