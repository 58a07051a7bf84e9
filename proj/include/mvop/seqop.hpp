#pragma once

#include "mvop/matrix.hpp"

#include <map>
#include <vector>

namespace mvop {

// Difference operator sum_j A_j(n) delta^j acting on sequences from the left.
// Coefficients are tabulated for n = 0..hi; sequences vanish at negative n.
class SeqOp {
public:
    SeqOp() = default;
    SeqOp(int N, int hi) : N_(N), hi_(hi) {}
    static SeqOp identity(int N, int hi);
    static SeqOp shift(int N, int hi, int j);  // delta^j

    int size() const { return N_; }
    int hi() const { return hi_; }
    int min_shift() const;
    int max_shift() const;
    const std::map<int, std::vector<MatQ>>& table() const { return c_; }

    // Zero for n < 0 or an absent shift; throws std::out_of_range for n > hi.
    MatQ at(int j, int n) const;
    void set(int j, int n, const MatQ& m);
    void set_all(int j, const std::vector<MatQ>& by_n);

    SeqOp& operator+=(const SeqOp& o);
    SeqOp& operator-=(const SeqOp& o);
    SeqOp& operator*=(const Q& s);
    friend SeqOp operator+(SeqOp a, const SeqOp& b) { return a += b; }
    friend SeqOp operator-(SeqOp a, const SeqOp& b) { return a -= b; }
    friend SeqOp operator*(SeqOp a, const Q& s) { return a *= s; }
    // Composition: (M1 M2) P = M1 (M2 P). The window shrinks so that every coefficient is known.
    friend SeqOp operator*(const SeqOp& m1, const SeqOp& m2);

    // Coefficient at shift -j is A_j(n-j)^T.
    SeqOp star() const;
    // H(n) A_j(n-j)^T H(n-j)^{-1}; H and Hinv indexed by n.
    SeqOp dagger(const std::vector<MatQ>& H, const std::vector<MatQ>& Hinv) const;

    // Equal coefficients for every shift and every n in [lo, min(hi, other.hi)].
    bool equal_on(const SeqOp& o, int lo, int hi) const;

private:
    void drop_zero_shifts();
    int N_ = 0;
    int hi_ = -1;
    std::map<int, std::vector<MatQ>> c_;
};

// (M.P)(x,n) = sum_j A_j(n) P(x,n+j); P indexed by n, zero at negative n.
MatPoly act_left(const SeqOp& M, const std::vector<MatPoly>& P, int n);

}  // namespace mvop
