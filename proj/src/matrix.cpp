#include "mvop/matrix.hpp"

namespace mvop {

namespace {
void check_same(int a, int b) {
    if (a != b) throw std::invalid_argument("matrix dimension mismatch");
}
}  // namespace

MatQ MatQ::identity(int n, const Q& s) {
    MatQ m(n);
    for (int i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

MatQ MatQ::diag(const std::vector<Q>& d) {
    MatQ m(static_cast<int>(d.size()));
    for (int i = 0; i < m.size(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

MatQ& MatQ::operator+=(const MatQ& o) {
    check_same(n_, o.n_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

MatQ& MatQ::operator-=(const MatQ& o) {
    check_same(n_, o.n_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

MatQ& MatQ::operator*=(const Q& s) {
    for (auto& v : a_) v *= s;
    return *this;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
    check_same(a.n_, b.n_);
    const int n = a.n_;
    MatQ r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Q& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                if (b(k, j) != 0) r(i, j) += aik * b(k, j);
        }
    return r;
}

MatQ operator+(MatQ a, const Q& s) {
    for (int i = 0; i < a.n_; ++i) a(i, i) += s;
    return a;
}

MatQ MatQ::transpose() const {
    MatQ t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool MatQ::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool MatQ::is_diagonal() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

bool MatQ::is_lower_triangular() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

Q MatQ::frobenius_sq() const {
    Q s(0);
    for (const auto& v : a_) s += v * v;
    return s;
}

std::vector<Q> MatQ::leading_minors() const {
    // Bareiss without pivoting: after step k, entry (k,k) is the (k+1)-th leading minor.
    // Stops at the first vanishing minor (later ones are reported as zero).
    std::vector<Q> minors(static_cast<size_t>(n_), Q(0));
    MatQ m = *this;
    Q prev(1);
    for (int k = 0; k < n_; ++k) {
        minors[static_cast<size_t>(k)] = m(k, k);
        if (m(k, k) == 0) break;
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return minors;
}

Q MatQ::determinant() const {
    MatQ m = *this;
    Q prev(1), sign(1);
    for (int k = 0; k < n_; ++k) {
        int p = k;
        while (p < n_ && m(p, k) == 0) ++p;
        if (p == n_) return Q(0);
        if (p != k) {
            for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n_ - 1, n_ - 1);
}

MatQ MatQ::inverse() const {
    // Gauss-Jordan over Q with row pivoting.
    const int n = n_;
    MatQ m = *this, inv = identity(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m(p, j), m(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        Q piv = m(k, k);
        for (int j = 0; j < n; ++j) {
            m(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Q f = m(i, k);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

MatQ commutator(const MatQ& a, const MatQ& b) { return a * b - b * a; }

MatQ pow(const MatQ& a, int k) {
    MatQ r = MatQ::identity(a.size());
    for (int t = 0; t < k; ++t) r = r * a;
    return r;
}

MatQ unipotent_inverse(const MatQ& L) {
    const int n = L.size();
    for (int i = 0; i < n; ++i) {
        if (L(i, i) != 1) throw std::domain_error("unipotent_inverse: diagonal entry not 1");
        for (int j = i + 1; j < n; ++j)
            if (L(i, j) != 0) throw std::domain_error("unipotent_inverse: not lower triangular");
    }
    MatQ X = MatQ::identity(n);
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) {
            Q s(0);
            for (int k = j; k < i; ++k) s += L(i, k) * X(k, j);
            X(i, j) = -s;
        }
    return X;
}

// MatPoly

MatPoly::MatPoly(std::vector<MatQ> coeffs) : n_(coeffs.empty() ? 0 : coeffs.front().size()), c_(std::move(coeffs)) {
    for (const auto& c : c_) check_same(c.size(), n_);
    trim();
}

MatPoly MatPoly::monomial(const MatQ& m, int k) {
    std::vector<MatQ> v(static_cast<size_t>(k + 1), MatQ(m.size()));
    v.back() = m;
    return MatPoly(std::move(v));
}

MatPoly MatPoly::unit(int n, int i, int j, const RPoly& p) {
    MatPoly r(n);
    r.set_entry(i, j, p);
    return r;
}

void MatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

MatQ MatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return MatQ(n_);
    return c_[static_cast<size_t>(k)];
}

RPoly MatPoly::entry(int i, int j) const {
    std::vector<Q> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c(i, j));
    return RPoly(std::move(v));
}

void MatPoly::set_entry(int i, int j, const RPoly& p) {
    const int d = static_cast<int>(p.coeffs().size());
    if (d > static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(d), MatQ(n_));
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) c_[static_cast<size_t>(k)](i, j) = p.coeff(k);
    trim();
}

MatQ MatPoly::operator()(const Q& x) const {
    MatQ r(n_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

MatPoly MatPoly::derivative(int times) const {
    std::vector<MatQ> v = c_;
    for (int t = 0; t < times && !v.empty(); ++t) {
        for (size_t k = 1; k < v.size(); ++k) v[k - 1] = v[k] * Q(static_cast<long>(k));
        v.pop_back();
    }
    MatPoly r(n_);
    r.c_ = std::move(v);
    r.trim();
    return r;
}

MatPoly MatPoly::transpose() const {
    MatPoly r(n_);
    for (const auto& c : c_) r.c_.push_back(c.transpose());
    return r;
}

MatPoly MatPoly::shift_up(int k) const {
    if (c_.empty()) return *this;
    MatPoly r(n_);
    r.c_.assign(static_cast<size_t>(k), MatQ(n_));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
    if (n_ == 0) n_ = o.n_;
    check_same(n_, o.n_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), MatQ(n_));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& o) {
    if (n_ == 0) n_ = o.n_;
    check_same(n_, o.n_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), MatQ(n_));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

MatPoly& MatPoly::operator*=(const Q& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
    check_same(a.n_, b.n_);
    MatPoly r(a.n_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, MatQ(a.n_));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

MatPoly operator*(const MatQ& m, const MatPoly& p) {
    MatPoly r(p.n_);
    for (const auto& c : p.c_) r.c_.push_back(m * c);
    r.trim();
    return r;
}

MatPoly operator*(const MatPoly& p, const MatQ& m) {
    MatPoly r(p.n_);
    for (const auto& c : p.c_) r.c_.push_back(c * m);
    r.trim();
    return r;
}

MatPoly operator*(const MatPoly& p, const RPoly& s) {
    MatPoly r(p.size());
    for (long k = 0; k <= s.degree(); ++k)
        if (s.coeff(k) != 0) r += (p * s.coeff(k)).shift_up(static_cast<int>(k));
    return r;
}

// MatLaurent

MatLaurent::MatLaurent(const MatPoly& p) : n_(p.size()) {
    for (int k = 0; k <= p.degree(); ++k) add_term(k, p.coeff(k));
}

MatLaurent MatLaurent::monomial(const MatQ& m, int k) {
    MatLaurent r(m.size());
    r.add_term(k, m);
    return r;
}

void MatLaurent::add_term(int k, const MatQ& m) {
    if (m.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, m);
        return;
    }
    it->second += m;
    if (it->second.is_zero()) t_.erase(it);
}

MatQ MatLaurent::coeff(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? MatQ(n_) : it->second;
}

MatLaurent MatLaurent::derivative() const {
    MatLaurent r(n_);
    for (const auto& [k, m] : t_)
        if (k != 0) r.add_term(k - 1, m * Q(k));
    return r;
}

MatLaurent MatLaurent::transpose() const {
    MatLaurent r(n_);
    for (const auto& [k, m] : t_) r.t_.emplace(k, m.transpose());
    return r;
}

MatLaurent MatLaurent::shift(int s) const {
    MatLaurent r(n_);
    for (const auto& [k, m] : t_) r.t_.emplace(k + s, m);
    return r;
}

MatLaurent& MatLaurent::operator+=(const MatLaurent& o) {
    if (n_ == 0) n_ = o.n_;
    check_same(n_, o.n_);
    for (const auto& [k, m] : o.t_) add_term(k, m);
    return *this;
}

MatLaurent& MatLaurent::operator-=(const MatLaurent& o) {
    if (n_ == 0) n_ = o.n_;
    check_same(n_, o.n_);
    for (const auto& [k, m] : o.t_) add_term(k, -m);
    return *this;
}

MatLaurent& MatLaurent::operator*=(const Q& s) {
    if (s == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [k, m] : t_) m *= s;
    return *this;
}

MatLaurent operator*(const MatLaurent& a, const MatLaurent& b) {
    check_same(a.n_, b.n_);
    MatLaurent r(a.n_);
    for (const auto& [i, x] : a.t_)
        for (const auto& [j, y] : b.t_) r.add_term(i + j, x * y);
    return r;
}

// Structural matrices

MatQ build_A(const std::vector<Q>& a, int N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (static_cast<int>(a.size()) != N - 1)
        throw std::invalid_argument("expected " + std::to_string(N - 1) + " entries in a, got " +
                                    std::to_string(a.size()));
    MatQ A(N);
    for (int k = 0; k + 1 < N; ++k) A(k + 1, k) = a[static_cast<size_t>(k)];
    return A;
}

MatQ build_J(int N) {
    MatQ J(N);
    for (int k = 0; k < N; ++k) J(k, k) = k + 1;
    return J;
}

MatPoly exp_nilpotent(const MatQ& A, int sign) {
    const int n = A.size();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (A(i, j) != 0) throw std::domain_error("exp_nilpotent: A must be strictly lower triangular");
    std::vector<MatQ> c;
    MatQ term = MatQ::identity(n);
    for (int m = 0; m < n; ++m) {
        c.push_back(term);
        term = term * A * (Q(sign) / (m + 1));
    }
    return MatPoly(std::move(c));
}

namespace {
Q a_prod(const std::vector<Q>& a, int j, int i) {  // prod_{k=j}^{i-1} a_k, 1-based
    Q p(1);
    for (int k = j; k < i; ++k) p *= a[static_cast<size_t>(k - 1)];
    return p;
}
}  // namespace

MatQ build_K(long n, const Q& nu, const std::vector<Q>& a, int N) {
    MatQ K = MatQ::identity(N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j)
            K(i - 1, j - 1) = pochhammer(nu + n + j + 1, i - j) / Q(factorial(i - j)) * a_prod(a, j, i);
    return K;
}

MatQ build_K_claimed(long n, const Q& nu, const std::vector<Q>& a, int N) {
    MatQ K = MatQ::identity(N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) {
            Q v = pochhammer(nu + n + j + 1, i - 1) / Q(factorial(i - j)) * a_prod(a, j, i);
            K(i - 1, j - 1) = (i - j) % 2 ? Q(-v) : v;
        }
    return K;
}

MatQ gamma_matrix(long n, const Q& nu, const MatQ& A) {
    const int N = A.size();
    MatQ J = build_J(N);
    return A * (J + (nu + n + 1)) - J - Q(n);
}

MatQ lambda_matrix(long n, int N) { return -(build_J(N) + Q(n)); }

}  // namespace mvop
