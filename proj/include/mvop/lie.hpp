#pragma once

#include "mvop/report.hpp"

#include <set>
#include <string>
#include <vector>

namespace mvop {

// cD * D + cDd * Ddag + cD2 * (second-order D) + mult(x), all acting on the right.
struct OpElement {
    Q cD, cDd, cD2;
    RPoly mult;

    static OpElement D() { return {Q(1), Q(0), Q(0), {}}; }
    static OpElement Ddag() { return {Q(0), Q(1), Q(0), {}}; }
    static OpElement D2() { return {Q(0), Q(0), Q(1), {}}; }
    static OpElement poly(const RPoly& p) { return {Q(0), Q(0), Q(0), p}; }

    OpElement& operator+=(const OpElement& o);
    OpElement& operator*=(const Q& s);
    friend OpElement operator+(OpElement a, const OpElement& b) { return a += b; }
    friend OpElement operator-(OpElement a, const OpElement& b) { return a += b * Q(-1); }
    friend OpElement operator*(OpElement a, const Q& s) { return a *= s; }
    friend OpElement operator*(const Q& s, OpElement a) { return a *= s; }
    bool operator==(const OpElement& o) const { return cD == o.cD && cDd == o.cDd && cD2 == o.cD2 && mult == o.mult; }
    bool is_zero() const { return cD == 0 && cDd == 0 && cD2 == 0 && mult.is_zero(); }
    std::string str() const;
};

// Generator table: [D,p] = -x p', [Ddag,p] = x p', [D,Ddag] = -x^2 phi'' + (2 - phi') x.
// With extended = true (phi = x only) the second-order D joins with
// [D2,x] = -D + Ddag, [D,D2] = -D + D2 - (1+nu), [Ddag,D2] = Ddag - D2 + (1+nu).
// Throws std::invalid_argument for extended with phi != x, or for [D2, p] with deg p > 1.
OpElement bracket(const OpElement& a, const OpElement& b, const RPoly& phi, bool extended = false,
                  const Q& nu = Q(0));

struct LieAlg {
    std::vector<std::string> labels;
    std::vector<OpElement> basis;
    // c[i][j] = coordinates of [b_i, b_j] in the basis.
    std::vector<std::vector<std::vector<Q>>> c;

    int dim() const { return static_cast<int>(basis.size()); }
    std::vector<Q> bracket_coords(const std::vector<Q>& u, const std::vector<Q>& v) const;
    bool jacobi() const;
    bool antisymmetric() const;
    // Basis of the center, in coordinates.
    std::vector<std::vector<Q>> center() const;
    // Dimensions of g, [g,g], [[g,g],[g,g]], ... until zero or stable.
    std::vector<int> derived_series() const;
};

// Span closure of the generators under bracket. Throws std::length_error when a bracket leaves the
// polynomial degree bound (no closure at this size).
LieAlg generate_algebra(const std::vector<OpElement>& generators, const RPoly& phi, int degree_bound,
                        bool extended = false, const Q& nu = Q(0));
// <1, D, Ddag, x, x phi', x^2 phi'', ...>.
LieAlg g_phi(const RPoly& phi);
// The series sum_{i<=T} x^i/i!.
RPoly truncated_exp(int T);

int k_value(const RPoly& phi);
int dim_formula(const RPoly& phi);
std::set<int> I_phi(const RPoly& phi);
// Requires deg >= 2 for both; throws std::invalid_argument otherwise.
bool iso_test(const RPoly& phi1, const RPoly& phi2);
// True iff spec(b) = lambda * spec(a) as multisets for some lambda != 0; both diagonal.
bool conformal_similar(const MatQ& a, const MatQ& b);
// Spectrum (with multiplicity) of -ad_D restricted to the abelian ideal k, from the computed algebra.
std::vector<Q> canonical_psi(const RPoly& phi);

Report structure_report(const RPoly& phi);
Report extended_algebra_report(const Q& nu);
// Brackets of the generator table against composition of the actual differential operators.
Report verify_bracket_table(const RPoly& phi, const Q& nu, int N);
Report lie_family_report();

json lie_to_json(const LieAlg& g);

}  // namespace mvop
