#include "mvop/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mvop {

std::string to_string(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Q parse_rational(std::string_view s) {
    s = strip(s);
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
    Z d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
    Q q(Z(std::string(num)), d);
    q.canonicalize();
    return neg ? Q(-q) : q;
}

std::vector<Q> parse_rational_list(std::string_view s) {
    std::vector<Q> out;
    s = strip(s);
    if (s.empty()) return out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        out.push_back(parse_rational(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Q pochhammer(const Q& a, long n) {
    Q r(1);
    for (long k = 0; k < n; ++k) r *= a + k;
    return r;
}

Z factorial(long n) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// RPoly

RPoly::RPoly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

RPoly RPoly::constant(const Q& c) { return RPoly({c}); }

RPoly RPoly::monomial(const Q& c, long k) {
    std::vector<Q> v(static_cast<size_t>(k + 1), Q(0));
    v.back() = c;
    return RPoly(std::move(v));
}

void RPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Q RPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return Q(0);
    return c_[static_cast<size_t>(k)];
}

Q RPoly::operator()(const Q& x) const {
    Q r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RPoly RPoly::derivative(long times) const {
    std::vector<Q> v = c_;
    for (long t = 0; t < times && !v.empty(); ++t) {
        for (size_t k = 1; k < v.size(); ++k) v[k - 1] = v[k] * static_cast<long>(k);
        v.pop_back();
    }
    return RPoly(std::move(v));
}

RPoly& RPoly::operator+=(const RPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Q(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

RPoly& RPoly::operator-=(const RPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Q(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

RPoly& RPoly::operator*=(const Q& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

RPoly operator*(const RPoly& a, const RPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Q> v(a.c_.size() + b.c_.size() - 1, Q(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return RPoly(std::move(v));
}

std::string RPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Q& c = c_[static_cast<size_t>(k)];
        if (c == 0) continue;
        Q mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = mag == 1 && k > 0;
        if (!unit) os << to_string(mag);
        if (k > 0) {
            if (!unit) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RPoly parse_poly(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty polynomial expression");
    RPoly out;
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad polynomial '" + std::string(s) + "': " + why);
    };
    while (pos < t.size()) {
        Q sign(1);
        if (t[pos] == '+' || t[pos] == '-') {
            if (t[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            fail("expected '+' or '-'");
        }
        size_t start = pos;
        while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/')) ++pos;
        Q coef(1);
        bool has_coef = pos > start;
        if (has_coef) coef = parse_rational(std::string_view(t).substr(start, pos - start));
        long power = 0;
        if (pos < t.size() && t[pos] == '*') {
            if (!has_coef) fail("dangling '*'");
            ++pos;
            if (pos >= t.size() || t[pos] != 'x') fail("expected x after '*'");
        }
        if (pos < t.size() && t[pos] == 'x') {
            ++pos;
            power = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                size_t ps = pos;
                while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
                if (ps == pos) fail("missing exponent");
                power = std::stol(t.substr(ps, pos - ps));
            }
        } else if (!has_coef) {
            fail("empty term");
        }
        out += RPoly::monomial(sign * coef, power);
    }
    return out;
}

RPoly laguerre_poly(const Q& alpha, long n) {
    // L_n^{(a)}(x) = sum_k (-1)^k (a+k+1)_{n-k} / ((n-k)! k!) x^k
    std::vector<Q> v(static_cast<size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        Q c = pochhammer(alpha + k + 1, n - k) / Q(factorial(n - k) * factorial(k));
        v[static_cast<size_t>(k)] = k % 2 ? Q(-c) : c;
    }
    return RPoly(std::move(v));
}

RPoly laguerre_derivative(const Q& alpha, long n) {
    if (n == 0) return {};
    return -laguerre_poly(alpha + 1, n - 1);
}

namespace {

Q dual_hahn_sum(long k, long M, const Q& gamma, auto&& upper_xy) {
    if (k < 0 || k > M) throw std::domain_error("dual_hahn: need 0 <= k <= M");
    Q sum(0), term(1);
    for (long m = 0; m <= k; ++m) {
        if (m > 0) {
            Q den = (gamma + m) * Q(m - 1 - M) * m;
            if (den == 0) throw std::domain_error("dual_hahn: vanishing lower parameter");
            term *= Q(m - 1 - k) * upper_xy(m - 1) / den;
        }
        sum += term;
    }
    return sum;
}

}  // namespace

Q dual_hahn(long k, const Q& x, const Q& gamma, const Q& delta, long M) {
    Q g = gamma + delta + 1;
    return dual_hahn_sum(k, M, gamma, [&](long t) -> Q { return (t - x) * (x + g + t); });
}

Q dual_hahn_lambda(long k, const Q& lambda, const Q& gamma, const Q& delta, long M) {
    Q g = gamma + delta + 1;
    // (-x+t)(x+g+t) = t(t+g) - lambda
    return dual_hahn_sum(k, M, gamma, [&](long t) -> Q { return t * (t + g) - lambda; });
}

Q dual_hahn_recurrence_step(const Q& s_k, const Q& s_km1, long k, const Q& gamma, const Q& delta,
                            long M, const Q& lambda) {
    auto u = [&](long j) -> Q { return (j + gamma + 1) * Q(j - M); };
    auto v = [&](long j) -> Q { return Q(j) * (j - delta - M - 1); };
    Q next = lambda * s_k + (u(k) + v(k)) * s_k;
    if (k > 0) next -= u(k - 1) * v(k) * s_km1;
    return next;
}

std::vector<Q> dual_hahn_s(long kmax, const Q& lambda, const Q& gamma, const Q& delta, long M) {
    std::vector<Q> s{Q(1)};
    for (long k = 0; k < kmax; ++k)
        s.push_back(dual_hahn_recurrence_step(s[k], k > 0 ? s[k - 1] : Q(0), k, gamma, delta, M, lambda));
    return s;
}

}  // namespace mvop
