#include "spinwhit/lie.hpp"

#include <stdexcept>

namespace spinwhit {

CSqrt coeff_a(const GTPattern& pattern, int level, int j) {
    if (level < 1 || level > pattern.rank - 2) {
        throw std::invalid_argument("coefficient level must lie in 1..r-2");
    }
    if (j != 0) {
        GTPattern moved = shifted(pattern, level, j);
        if (!is_valid_pattern(moved)) return CSqrt();
    }
    return gt_coeff_core(pattern, level, j, CoeffMode::Strict);
}

GenMatrix GenMatrix::operator+(const GenMatrix& o) const {
    GenMatrix out(dim_);
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] + o.m_[i];
    return out;
}

GenMatrix GenMatrix::operator-(const GenMatrix& o) const {
    GenMatrix out(dim_);
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] - o.m_[i];
    return out;
}

GenMatrix GenMatrix::operator*(const GenMatrix& o) const {
    GenMatrix out(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const CSqrt& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                const CSqrt& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) = out.at(i, j) + a * b;
            }
        }
    }
    return out;
}

GenMatrix GenMatrix::bracket(const GenMatrix& o) const { return *this * o - o * *this; }

bool GenMatrix::is_zero() const {
    for (const auto& e : m_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool GenMatrix::is_skew_hermitian() const {
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j <= i; ++j) {
            if (!(at(i, j) == -at(j, i).conj())) return false;
        }
    }
    return true;
}

bool GenMatrix::real_part_skew() const {
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j <= i; ++j) {
            if (!(at(i, j).re == -at(j, i).re)) return false;
            if (!(at(i, j).im == at(j, i).im)) return false;
        }
    }
    return true;
}

LieAction::LieAction(const SpinWeight& lambda) : lambda_(lambda) {
    basis_ = enumerate_patterns(lambda);
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i) index_.emplace(basis_[i], i);
}

int LieAction::index_of(const GTPattern& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::logic_error("pattern outside the basis");
    return it->second;
}

const GenMatrix& LieAction::chain_generator(int p) {
    if (p < 1 || p + 1 > lambda_.rank) {
        throw std::invalid_argument("chain generator index out of range");
    }
    return generator(p + 1, p);
}

const GenMatrix& LieAction::generator(int p, int q) {
    if (!(lambda_.rank >= p && p > q && q >= 1)) {
        throw std::invalid_argument("generator needs r >= p > q >= 1");
    }
    auto key = std::make_pair(p, q);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    GenMatrix result(static_cast<int>(basis_.size()));
    if (p == q + 1) {
        const int level = q - 1;
        const int i = (level % 2 == 0) ? level / 2 : (level + 1) / 2;
        for (int col = 0; col < static_cast<int>(basis_.size()); ++col) {
            const GTPattern& pat = basis_[col];
            for (int j = -i; j <= i; ++j) {
                if (level % 2 == 1 && j == 0) continue;
                if (level == 0 && j != 0) continue;
                CSqrt c = level == 0 ? gt_coeff_core(pat, 0, 0, CoeffMode::Strict)
                                     : coeff_a(pat, level, j);
                if (c.is_zero()) continue;
                int row = j == 0 ? col : index_of(shifted(pat, level, j));
                result.at(row, col) = result.at(row, col) + c;
            }
        }
    } else {
        result = generator(p, p - 1).bracket(generator(p - 1, q));
    }
    return cache_.emplace(key, std::move(result)).first->second;
}

Rational LieAction::casimir_scalar() {
    const int n = static_cast<int>(basis_.size());
    GenMatrix total(n);
    for (int p = 2; p <= lambda_.rank; ++p) {
        for (int q = 1; q < p; ++q) {
            const GenMatrix& g = generator(p, q);
            total = total + g * g;
        }
    }
    CSqrt diag = total.at(0, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const CSqrt& e = total.at(i, j);
            if (i == j ? !(e == diag) : !e.is_zero()) {
                throw std::logic_error("squared-generator sum is not scalar");
            }
        }
    }
    if (!diag.im.is_zero() || !diag.re.is_rational()) {
        throw std::logic_error("squared-generator sum is not a rational scalar");
    }
    return diag.re.rational_part();
}

}  // namespace spinwhit
