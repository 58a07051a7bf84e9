#pragma once

#include "mvop/scalar.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace mvop {

// Square N x N rational matrix, row-major. Indices are 0-based in code.
class MatQ {
public:
    MatQ() = default;
    explicit MatQ(int n) : n_(n), a_(static_cast<size_t>(n) * n, Q(0)) {}
    static MatQ identity(int n, const Q& s = Q(1));
    static MatQ diag(const std::vector<Q>& d);

    int size() const { return n_; }
    Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    MatQ& operator+=(const MatQ& o);
    MatQ& operator-=(const MatQ& o);
    MatQ& operator*=(const Q& s);
    friend MatQ operator+(MatQ a, const MatQ& b) { return a += b; }
    friend MatQ operator-(MatQ a, const MatQ& b) { return a -= b; }
    friend MatQ operator-(MatQ a) { return a *= Q(-1); }
    friend MatQ operator*(MatQ a, const Q& s) { return a *= s; }
    friend MatQ operator*(const Q& s, MatQ a) { return a *= s; }
    friend MatQ operator*(const MatQ& a, const MatQ& b);
    // a + s*I, handy for the "n + J" style expressions.
    friend MatQ operator+(MatQ a, const Q& s);
    friend MatQ operator+(const Q& s, MatQ a) { return std::move(a) + s; }
    friend MatQ operator-(MatQ a, const Q& s) { return std::move(a) + Q(-s); }
    friend MatQ operator-(const Q& s, MatQ a) { return -std::move(a) + s; }
    bool operator==(const MatQ& o) const { return n_ == o.n_ && a_ == o.a_; }

    MatQ transpose() const;
    bool is_zero() const;
    bool is_diagonal() const;
    bool is_lower_triangular() const;
    bool is_symmetric() const { return *this == transpose(); }
    Q frobenius_sq() const;

    std::vector<Q> leading_minors() const;  // fraction-free (Bareiss) elimination
    Q determinant() const;
    MatQ inverse() const;  // throws std::domain_error when singular

private:
    int n_ = 0;
    std::vector<Q> a_;
};

MatQ commutator(const MatQ& a, const MatQ& b);
MatQ pow(const MatQ& a, int k);

// Inverse of a unit lower-triangular matrix by forward substitution.
MatQ unipotent_inverse(const MatQ& L);

// Matrix polynomial sum_k C_k x^k.
class MatPoly {
public:
    MatPoly() = default;
    explicit MatPoly(int n) : n_(n) {}
    explicit MatPoly(std::vector<MatQ> coeffs);
    static MatPoly constant(const MatQ& m) { return MatPoly(std::vector<MatQ>{m}); }
    static MatPoly monomial(const MatQ& m, int k);
    // Entry (i,j) is p, every other entry zero.
    static MatPoly unit(int n, int i, int j, const RPoly& p);

    int size() const { return n_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    MatQ coeff(int k) const;
    const std::vector<MatQ>& coeffs() const { return c_; }
    RPoly entry(int i, int j) const;
    void set_entry(int i, int j, const RPoly& p);

    MatQ operator()(const Q& x) const;
    MatPoly derivative(int times = 1) const;
    MatPoly transpose() const;
    MatPoly shift_up(int k = 1) const;  // multiply by x^k

    MatPoly& operator+=(const MatPoly& o);
    MatPoly& operator-=(const MatPoly& o);
    MatPoly& operator*=(const Q& s);
    friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
    friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
    friend MatPoly operator-(MatPoly a) { return a *= Q(-1); }
    friend MatPoly operator*(MatPoly a, const Q& s) { return a *= s; }
    friend MatPoly operator*(const Q& s, MatPoly a) { return a *= s; }
    friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator*(const MatQ& m, const MatPoly& p);
    friend MatPoly operator*(const MatPoly& p, const MatQ& m);
    bool operator==(const MatPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    void trim();
    int n_ = 0;
    std::vector<MatQ> c_;
};

MatPoly operator*(const MatPoly& p, const RPoly& s);

// Finite Laurent series sum_k C_k x^k, k possibly negative.
class MatLaurent {
public:
    MatLaurent() = default;
    explicit MatLaurent(int n) : n_(n) {}
    explicit MatLaurent(const MatPoly& p);
    static MatLaurent monomial(const MatQ& m, int k);

    int size() const { return n_; }
    const std::map<int, MatQ>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    MatQ coeff(int k) const;

    MatLaurent derivative() const;
    MatLaurent transpose() const;
    MatLaurent shift(int k) const;  // multiply by x^k

    MatLaurent& operator+=(const MatLaurent& o);
    MatLaurent& operator-=(const MatLaurent& o);
    MatLaurent& operator*=(const Q& s);
    friend MatLaurent operator+(MatLaurent a, const MatLaurent& b) { return a += b; }
    friend MatLaurent operator-(MatLaurent a, const MatLaurent& b) { return a -= b; }
    friend MatLaurent operator*(MatLaurent a, const Q& s) { return a *= s; }
    friend MatLaurent operator*(const MatLaurent& a, const MatLaurent& b);
    bool operator==(const MatLaurent& o) const { return n_ == o.n_ && t_ == o.t_; }

private:
    void add_term(int k, const MatQ& m);
    int n_ = 0;
    std::map<int, MatQ> t_;
};

// A = sum a_k E_{k+1,k};  J = diag(1..N).
MatQ build_A(const std::vector<Q>& a, int N);
MatQ build_J(int N);

// e^{sign * x A} for strictly lower triangular A.
MatPoly exp_nilpotent(const MatQ& A, int sign);

// Unit lower triangular K_n with K_n Lambda_n K_n^{-1} = Gamma_n, where
// Lambda_n = -(n+J) and Gamma_n = A(n+nu+1+J) - n - J:
//   (K_n)_{i,j} = (n+nu+j+1)_{i-j} / (i-j)! * prod_{k=j}^{i-1} a_k   (1-based).
MatQ build_K(long n, const Q& nu, const std::vector<Q>& a, int N);
// The sign-alternating variant (-1)^{i-j} (n+nu+j+1)_{i-1}/(i-j)! prod a_k, kept for comparison.
MatQ build_K_claimed(long n, const Q& nu, const std::vector<Q>& a, int N);

MatQ gamma_matrix(long n, const Q& nu, const MatQ& A);   // A(n+nu+1+J) - n - J
MatQ lambda_matrix(long n, int N);                       // -(n+J)

}  // namespace mvop
