#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mvop {

using Q = mpq_class;
using Z = mpz_class;

// "p/q", or "p" when q == 1.
std::string to_string(const Q& q);
// Accepts "p", "p/q", "-p/q" (surrounding whitespace allowed). Throws std::invalid_argument.
Q parse_rational(std::string_view s);
std::vector<Q> parse_rational_list(std::string_view s);

// p/q in canonical form (the two-argument mpq constructor does not reduce).
inline Q frac(long p, long q) {
    Q r(p, q);
    r.canonicalize();
    return r;
}

Q pochhammer(const Q& a, long n);
Z factorial(long n);

class RPoly {
public:
    RPoly() = default;
    explicit RPoly(std::vector<Q> coeffs);
    static RPoly constant(const Q& c);
    static RPoly monomial(const Q& c, long k);
    static RPoly x() { return monomial(Q(1), 1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Q coeff(long k) const;
    const std::vector<Q>& coeffs() const { return c_; }

    Q operator()(const Q& x) const;
    RPoly derivative(long times = 1) const;

    RPoly& operator+=(const RPoly& o);
    RPoly& operator-=(const RPoly& o);
    RPoly& operator*=(const Q& s);
    friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
    friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
    friend RPoly operator-(RPoly a) { return a *= Q(-1); }
    friend RPoly operator*(RPoly a, const Q& s) { return a *= s; }
    friend RPoly operator*(const Q& s, RPoly a) { return a *= s; }
    friend RPoly operator*(const RPoly& a, const RPoly& b);
    bool operator==(const RPoly& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Q> c_;
};

// Parses sums of rational multiples of x^k, e.g. "x^3+x^2", "-1/2x^4 + 3*x - 1".
// Throws std::invalid_argument on malformed input.
RPoly parse_poly(std::string_view s);

// Generalised Laguerre L_n^{(alpha)}.
RPoly laguerre_poly(const Q& alpha, long n);
// d/dx L_n^{(alpha)} = -L_{n-1}^{(alpha+1)}; zero for n == 0.
RPoly laguerre_derivative(const Q& alpha, long n);

// Dual Hahn T_k(lambda(x); gamma, delta, M) = 3F2(-k, -x, x+gamma+delta+1; gamma+1, -M; 1).
// Throws std::domain_error when a lower Pochhammer vanishes before the series terminates.
Q dual_hahn(long k, const Q& x, const Q& gamma, const Q& delta, long M);
// Same series with (-x)_m (x+g)_m written through lambda = x(x+g), g = gamma+delta+1.
Q dual_hahn_lambda(long k, const Q& lambda, const Q& gamma, const Q& delta, long M);

// s_{k+1} = lambda s_k + (u_k + v_k) s_k - u_{k-1} v_k s_{k-1}.
Q dual_hahn_recurrence_step(const Q& s_k, const Q& s_km1, long k, const Q& gamma, const Q& delta,
                            long M, const Q& lambda);
// s_0..s_kmax at lambda.
std::vector<Q> dual_hahn_s(long kmax, const Q& lambda, const Q& gamma, const Q& delta, long M);

}  // namespace mvop
