#include "mvop/seqop.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvop {

SeqOp SeqOp::identity(int N, int hi) { return shift(N, hi, 0); }

SeqOp SeqOp::shift(int N, int hi, int j) {
    SeqOp s(N, hi);
    s.set_all(j, std::vector<MatQ>(static_cast<size_t>(hi + 1), MatQ::identity(N)));
    return s;
}

int SeqOp::min_shift() const { return c_.empty() ? 0 : c_.begin()->first; }
int SeqOp::max_shift() const { return c_.empty() ? 0 : c_.rbegin()->first; }

MatQ SeqOp::at(int j, int n) const {
    if (n > hi_) throw std::out_of_range("SeqOp coefficient outside window");
    auto it = c_.find(j);
    if (n < 0 || it == c_.end()) return MatQ(N_);
    return it->second[static_cast<size_t>(n)];
}

void SeqOp::set(int j, int n, const MatQ& m) {
    if (n < 0 || n > hi_) throw std::out_of_range("SeqOp::set outside window");
    auto& v = c_[j];
    if (v.empty()) v.assign(static_cast<size_t>(hi_ + 1), MatQ(N_));
    v[static_cast<size_t>(n)] = m;
}

void SeqOp::set_all(int j, const std::vector<MatQ>& by_n) {
    if (static_cast<int>(by_n.size()) < hi_ + 1) throw std::invalid_argument("SeqOp::set_all: short table");
    c_[j] = std::vector<MatQ>(by_n.begin(), by_n.begin() + hi_ + 1);
}

void SeqOp::drop_zero_shifts() {
    for (auto it = c_.begin(); it != c_.end();) {
        bool zero = std::all_of(it->second.begin(), it->second.end(), [](const MatQ& m) { return m.is_zero(); });
        it = zero ? c_.erase(it) : std::next(it);
    }
}

SeqOp& SeqOp::operator+=(const SeqOp& o) {
    if (o.N_ != N_) throw std::invalid_argument("SeqOp size mismatch");
    hi_ = std::min(hi_, o.hi_);
    for (auto& [j, v] : c_) v.resize(static_cast<size_t>(hi_ + 1));
    for (const auto& [j, v] : o.c_)
        for (int n = 0; n <= hi_; ++n) {
            auto& dst = c_[j];
            if (dst.empty()) dst.assign(static_cast<size_t>(hi_ + 1), MatQ(N_));
            dst[n] += v[n];
        }
    drop_zero_shifts();
    return *this;
}

SeqOp& SeqOp::operator-=(const SeqOp& o) { return *this += o * Q(-1); }

SeqOp& SeqOp::operator*=(const Q& s) {
    for (auto& [j, v] : c_)
        for (auto& m : v) m *= s;
    drop_zero_shifts();
    return *this;
}

SeqOp operator*(const SeqOp& m1, const SeqOp& m2) {
    int hi = std::min(m1.hi_, m2.hi_ - std::max(0, m1.max_shift()));
    if (hi < 0) throw std::out_of_range("SeqOp composition leaves an empty window");
    SeqOp out(m1.N_, hi);
    for (const auto& [j, v1] : m1.c_)
        for (const auto& [k, v2] : m2.c_)
            for (int n = 0; n <= hi; ++n) {
                if (n + j < 0) continue;
                MatQ t = v1[n] * v2[n + j];
                if (t.is_zero()) continue;
                auto& dst = out.c_[j + k];
                if (dst.empty()) dst.assign(static_cast<size_t>(hi + 1), MatQ(m1.N_));
                dst[n] += t;
            }
    out.drop_zero_shifts();
    return out;
}

SeqOp SeqOp::star() const {
    int hi = hi_ + std::min(0, min_shift());
    SeqOp out(N_, hi);
    for (const auto& [j, v] : c_)
        for (int n = 0; n <= hi; ++n)
            if (n - j >= 0) out.set(-j, n, v[n - j].transpose());
    out.drop_zero_shifts();
    return out;
}

SeqOp SeqOp::dagger(const std::vector<MatQ>& H, const std::vector<MatQ>& Hinv) const {
    SeqOp s = star();
    int hi = std::min({s.hi_, static_cast<int>(H.size()) - 1,
                       static_cast<int>(Hinv.size()) - 1 - std::max(0, s.max_shift())});
    SeqOp out(N_, hi);
    for (const auto& [j, v] : s.c_)
        for (int n = 0; n <= hi; ++n)
            if (n + j >= 0) out.set(j, n, H[n] * v[n] * Hinv[n + j]);
    out.drop_zero_shifts();
    return out;
}

bool SeqOp::equal_on(const SeqOp& o, int lo, int hi) const {
    hi = std::min({hi, hi_, o.hi_});
    int jlo = std::min(min_shift(), o.min_shift()), jhi = std::max(max_shift(), o.max_shift());
    for (int j = jlo; j <= jhi; ++j)
        for (int n = std::max(lo, 0); n <= hi; ++n)
            if (!(at(j, n) == o.at(j, n))) return false;
    return true;
}

MatPoly act_left(const SeqOp& M, const std::vector<MatPoly>& P, int n) {
    MatPoly out(M.size());
    for (const auto& [j, v] : M.table()) {
        int m = n + j;
        if (m < 0) continue;
        if (m >= static_cast<int>(P.size())) throw std::out_of_range("act_left: sequence too short");
        out += M.at(j, n) * P[m];
    }
    return out;
}

}  // namespace mvop
