#pragma once

#include <array>
#include <string>
#include <vector>

#include "abelian/poly.hpp"

namespace abelian {

// Element of the (extended) Heisenberg group H^e_{d1,d2} in the Schroedinger
// representation. Stored as the group element (scalar, shift, twist) composed
// with iota^e. For d1 = 1 the group is H_n with n = d2 and single indices.
//
// Action on coordinates (d1 = 1):  sigma(x_i) = x_{i-1},  tau(x_i) = zeta^{-i} x_i,
// iota(x_i) = x_{-i}; the central scalar multiplies each acted variable.
class HeisenbergElement {
  public:
    static HeisenbergElement identity(int d1, int d2);
    static HeisenbergElement sigma(int n);  // H_{1,n}
    static HeisenbergElement tau(int n);
    static HeisenbergElement iota(int n);
    static HeisenbergElement make(int d1, int d2, std::array<int, 2> shift,
                                  std::array<int, 2> twist, bool involution,
                                  const Cyclotomic& scalar);

    int d1() const { return d1_; }
    int d2() const { return d2_; }
    const std::array<int, 2>& shift() const { return shift_; }
    const std::array<int, 2>& twist() const { return twist_; }
    bool involution() const { return involution_; }
    const Cyclotomic& scalar() const { return scalar_; }

    friend HeisenbergElement operator*(const HeisenbergElement& g, const HeisenbergElement& h);
    HeisenbergElement inverse() const;
    HeisenbergElement power(int k) const;

    friend bool operator==(const HeisenbergElement& g, const HeisenbergElement& h);

    // Report form: sigma^a tau^b iota^e scalar=...
    std::string to_string() const;

  private:
    HeisenbergElement(int d1, int d2, std::array<int, 2> shift, std::array<int, 2> twist,
                      bool involution, Cyclotomic scalar);

    int d1_, d2_;
    std::array<int, 2> shift_, twist_;
    bool involution_;
    Cyclotomic scalar_;
};

// Substitution action on one variable family (d1 = 1 only; the polynomial's
// modulus must equal the group order). act(g, act(h, p)) == act(g*h, p).
PolyC act(const HeisenbergElement& g, const PolyC& p, Family fam = Family::X);
PolyC act(const HeisenbergElement& g, const PolyQ& p, Family fam = Family::X);

// Dual action on coordinate vectors: evaluating act(g, p) at v equals
// evaluating p at act_point(g, v).
std::vector<Cyclotomic> act_point(const HeisenbergElement& g, const std::vector<Cyclotomic>& v);
std::vector<Cyclotomic> act_point(const HeisenbergElement& g, const std::vector<Rational>& v);

// iota eigenspaces P^+/P^- inside P^{n-1}: constraints x_i = sign * x_{-i}.
struct EigenspaceConstraint {
    int sign;  // +1 or -1
    int modulus;
    // Pairs (i, -i mod n) with i <= -i mod n covering all constraints.
    std::vector<std::pair<int, int>> pairs;
};

EigenspaceConstraint eigenspace_constraint(int n, int sign);

template <class K>
bool in_eigenspace(const std::vector<K>& pt, int sign) {
    int n = static_cast<int>(pt.size());
    for (int i = 0; i < n; ++i) {
        K rhs = pt[(n - i) % n];
        if (sign < 0) rhs = -rhs;
        if (!(pt[i] == rhs)) return false;
    }
    return true;
}

// Spanning vectors of the affine eigenspace (dimension floor(n/2)+1 for +,
// and n - 1 - floor(n/2) for -).
std::vector<std::vector<Rational>> eigenspace_basis(int n, int sign);

// Degree-graded invariance of a generator list under sigma and tau: the image
// of each generator must lie in the linear span of the same-degree generators
// over Q(zeta_n).
bool is_invariant_ideal(const std::vector<PolyQ>& gens, int n);

// Dimension of the linear span of the full H_n-orbit of the given polynomials.
int orbit_span_dimension(const std::vector<PolyQ>& polys, int n);

}  // namespace abelian
