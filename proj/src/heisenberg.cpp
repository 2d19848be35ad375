#include "abelian/heisenberg.hpp"

#include <numeric>
#include <sstream>

#include "abelian/linalg.hpp"

namespace abelian {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// e^D(x1, y2) = zeta_{d1}^{-x1[0]*y2[0]} * zeta_{d2}^{-x1[1]*y2[1]}
Cyclotomic pairing(int d1, int d2, const std::array<int, 2>& x1, const std::array<int, 2>& y2) {
    Cyclotomic c = Cyclotomic::root_of_unity(d1, -static_cast<long>(x1[0]) * y2[0]);
    return c * Cyclotomic::root_of_unity(d2, -static_cast<long>(x1[1]) * y2[1]);
}

}  // namespace

HeisenbergElement::HeisenbergElement(int d1, int d2, std::array<int, 2> shift,
                                     std::array<int, 2> twist, bool involution, Cyclotomic scalar)
    : d1_(d1), d2_(d2), involution_(involution), scalar_(std::move(scalar)) {
    if (d1 < 1 || d2 < 1 || d2 % d1 != 0)
        throw ParameterError("HeisenbergElement: need 1 <= d1 | d2");
    shift_ = {mod(shift[0], d1), mod(shift[1], d2)};
    twist_ = {mod(twist[0], d1), mod(twist[1], d2)};
}

HeisenbergElement HeisenbergElement::identity(int d1, int d2) {
    return HeisenbergElement(d1, d2, {0, 0}, {0, 0}, false, Cyclotomic(Rational(1)));
}

HeisenbergElement HeisenbergElement::sigma(int n) {
    return HeisenbergElement(1, n, {0, 1}, {0, 0}, false, Cyclotomic(Rational(1)));
}

HeisenbergElement HeisenbergElement::tau(int n) {
    return HeisenbergElement(1, n, {0, 0}, {0, 1}, false, Cyclotomic(Rational(1)));
}

HeisenbergElement HeisenbergElement::iota(int n) {
    return HeisenbergElement(1, n, {0, 0}, {0, 0}, true, Cyclotomic(Rational(1)));
}

HeisenbergElement HeisenbergElement::make(int d1, int d2, std::array<int, 2> shift,
                                          std::array<int, 2> twist, bool involution,
                                          const Cyclotomic& scalar) {
    return HeisenbergElement(d1, d2, shift, twist, involution, scalar);
}

// (a,x1,x2) iota^e * (b,y1,y2) iota^f
//   = (a*b*e^D(x1, (-1)^e y2), x1 + (-1)^e y1, x2 + (-1)^e y2) iota^{e xor f}
HeisenbergElement operator*(const HeisenbergElement& g, const HeisenbergElement& h) {
    if (g.d1_ != h.d1_ || g.d2_ != h.d2_)
        throw InvariantError("Heisenberg product: group order mismatch");
    int s = g.involution_ ? -1 : 1;
    std::array<int, 2> hs = {s * h.shift_[0], s * h.shift_[1]};
    std::array<int, 2> ht = {s * h.twist_[0], s * h.twist_[1]};
    Cyclotomic scalar = g.scalar_ * h.scalar_ * pairing(g.d1_, g.d2_, g.shift_, ht);
    return HeisenbergElement(g.d1_, g.d2_, {g.shift_[0] + hs[0], g.shift_[1] + hs[1]},
                             {g.twist_[0] + ht[0], g.twist_[1] + ht[1]},
                             g.involution_ != h.involution_, std::move(scalar));
}

HeisenbergElement HeisenbergElement::inverse() const {
    // (a, x1, x2)^{-1} = (a^{-1} * e^D(x1, x2)^{-1} ... ) derived from the law:
    // (a,x,y)(b,-x,-y) = (a*b*e^D(x,-y), 0, 0), so b = a^{-1} e^D(x,-y)^{-1}.
    std::array<int, 2> nx = {-shift_[0], -shift_[1]};
    std::array<int, 2> ny = {-twist_[0], -twist_[1]};
    Cyclotomic b = (scalar_ * pairing(d1_, d2_, shift_, ny)).inverse();
    HeisenbergElement base(d1_, d2_, nx, ny, false, std::move(b));
    if (!involution_) return base;
    // (g iota)^{-1} = iota g^{-1} = (negated base) iota
    return HeisenbergElement(d1_, d2_, {-base.shift_[0], -base.shift_[1]},
                             {-base.twist_[0], -base.twist_[1]}, true, base.scalar_);
}

HeisenbergElement HeisenbergElement::power(int k) const {
    HeisenbergElement acc = identity(d1_, d2_);
    HeisenbergElement base = k < 0 ? inverse() : *this;
    for (int i = 0; i < std::abs(k); ++i) acc = acc * base;
    return acc;
}

bool operator==(const HeisenbergElement& g, const HeisenbergElement& h) {
    return g.d1_ == h.d1_ && g.d2_ == h.d2_ && g.shift_ == h.shift_ && g.twist_ == h.twist_ &&
           g.involution_ == h.involution_ && g.scalar_ == h.scalar_;
}

std::string HeisenbergElement::to_string() const {
    std::ostringstream os;
    if (d1_ == 1) {
        os << "sigma^" << shift_[1] << " tau^" << twist_[1];
    } else {
        os << "sigma1^" << shift_[0] << " sigma2^" << shift_[1] << " tau1^" << twist_[0]
           << " tau2^" << twist_[1];
    }
    os << " iota^" << (involution_ ? 1 : 0) << " scalar=" << FieldOps<Cyclotomic>::str(scalar_);
    return os.str();
}

namespace {

// act(g, x_i) = scalar * zeta^{-(i' - a) b} x_{i' - a} with i' = (-1)^e i.
void action_on_index(const HeisenbergElement& g, int i, int n, Cyclotomic& coeff, int& target) {
    int a = g.shift()[1], b = g.twist()[1];
    int ip = g.involution() ? mod(-i, n) : i;
    coeff = g.scalar() * Cyclotomic::root_of_unity(n, -static_cast<long>(ip - a) * b);
    target = mod(ip - a, n);
}

}  // namespace

PolyC act(const HeisenbergElement& g, const PolyC& p, Family fam) {
    if (g.d1() != 1) throw InvariantError("act: polynomial action implemented for d1 = 1");
    int n = g.d2();
    std::map<Variable, std::pair<Cyclotomic, Variable>> subs;
    for (int i = 0; i < n; ++i) {
        Cyclotomic c;
        int t;
        action_on_index(g, i, n, c, t);
        Variable from(fam, i, n), to(fam, t, n);
        subs.emplace(from, std::make_pair(c, to));
    }
    // Validate modulus agreement lazily: any acted variable with a different
    // modulus is a contract violation.
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        for (const auto& [v, e] : m.terms()) {
            (void)e;
            if (v.family == fam && v.modulus != n)
                throw InvariantError("act: variable modulus does not match group order");
        }
    }
    return p.monomial_substituted(subs);
}

PolyC act(const HeisenbergElement& g, const PolyQ& p, Family fam) {
    return act(g, promoted(p), fam);
}

std::vector<Cyclotomic> act_point(const HeisenbergElement& g, const std::vector<Cyclotomic>& v) {
    if (g.d1() != 1) throw InvariantError("act_point: implemented for d1 = 1");
    int n = g.d2();
    if (static_cast<int>(v.size()) != n) throw InvariantError("act_point: length mismatch");
    std::vector<Cyclotomic> w(n);
    for (int j = 0; j < n; ++j) {
        Cyclotomic c;
        int t;
        action_on_index(g, j, n, c, t);
        w[j] = c * v[t];
    }
    return w;
}

std::vector<Cyclotomic> act_point(const HeisenbergElement& g, const std::vector<Rational>& v) {
    std::vector<Cyclotomic> vc(v.size());
    for (size_t i = 0; i < v.size(); ++i) vc[i] = Cyclotomic(v[i]);
    return act_point(g, vc);
}

EigenspaceConstraint eigenspace_constraint(int n, int sign) {
    if (sign != 1 && sign != -1) throw ParameterError("eigenspace sign must be +1 or -1");
    EigenspaceConstraint c{sign, n, {}};
    for (int i = 0; i <= n - i; ++i) {
        int j = mod(-i, n);
        if (i > j) continue;
        c.pairs.emplace_back(i, j);
    }
    return c;
}

std::vector<std::vector<Rational>> eigenspace_basis(int n, int sign) {
    if (sign != 1 && sign != -1) throw ParameterError("eigenspace sign must be +1 or -1");
    std::vector<std::vector<Rational>> basis;
    for (int i = 0; i <= n / 2; ++i) {
        int j = mod(-i, n);
        std::vector<Rational> v(n, Rational(0));
        if (i == j) {
            // fixed coordinate: present only in P^+
            if (sign == 1) {
                v[i] = 1;
                basis.push_back(std::move(v));
            }
            continue;
        }
        v[i] = 1;
        v[j] = sign;
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Coordinates of a polynomial w.r.t. a monomial index map.
std::vector<Cyclotomic> coords_of(const PolyC& p, const std::map<Monomial, int, MonomialGreater>& cols) {
    std::vector<Cyclotomic> v(cols.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = cols.find(m);
        if (it == cols.end()) throw InvariantError("coords_of: monomial outside basis");
        v[it->second] = c;
    }
    return v;
}

}  // namespace

bool is_invariant_ideal(const std::vector<PolyQ>& gens, int n) {
    HeisenbergElement s = HeisenbergElement::sigma(n);
    HeisenbergElement t = HeisenbergElement::tau(n);
    // group generators by degree
    std::map<int, std::vector<PolyC>> by_degree;
    for (const auto& g : gens) {
        if (g.is_zero() || !g.is_homogeneous())
            throw InvariantError("is_invariant_ideal: generators must be nonzero homogeneous");
        by_degree[g.degree()].push_back(promoted(g));
    }
    for (const auto& [deg, polys] : by_degree) {
        (void)deg;
        // collect the monomial support of generators and images
        std::map<Monomial, int, MonomialGreater> cols;
        std::vector<PolyC> images;
        for (const auto& p : polys) {
            images.push_back(act(s, p));
            images.push_back(act(t, p));
        }
        for (const auto& p : polys)
            for (const auto& [m, c] : p.terms()) {
                (void)c;
                cols.emplace(m, 0);
            }
        for (const auto& p : images)
            for (const auto& [m, c] : p.terms()) {
                (void)c;
                cols.emplace(m, 0);
            }
        int idx = 0;
        for (auto& [m, i] : cols) {
            (void)m;
            i = idx++;
        }
        RowSpace<Cyclotomic> space(idx);
        for (const auto& p : polys) space.insert(coords_of(p, cols));
        for (const auto& p : images)
            if (!space.contains(coords_of(p, cols))) return false;
    }
    return true;
}

int orbit_span_dimension(const std::vector<PolyQ>& polys, int n) {
    // Full H_n-orbit: sigma^a tau^b images (central scalars do not change spans).
    std::vector<PolyC> images;
    for (const auto& q : polys) {
        PolyC p = promoted(q);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                HeisenbergElement g =
                    HeisenbergElement::sigma(n).power(a) * HeisenbergElement::tau(n).power(b);
                images.push_back(act(g, p));
            }
        }
    }
    std::map<Monomial, int, MonomialGreater> cols;
    for (const auto& p : images)
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            cols.emplace(m, 0);
        }
    int idx = 0;
    for (auto& [m, i] : cols) {
        (void)m;
        i = idx++;
    }
    RowSpace<Cyclotomic> space(idx);
    for (const auto& p : images) space.insert(coords_of(p, cols));
    return space.dimension();
}

}  // namespace abelian
