#include "spinwhit/radial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spinwhit {

namespace {

std::string wrap(const CSqrt& v) {
    std::string s = v.str();
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

std::string RadialTerm::str() const {
    std::vector<std::string> parts;
    if (!d.is_zero()) parts.push_back(wrap(d) + "*Da");
    if (!c.is_zero()) parts.push_back(wrap(c));
    if (!x.is_zero()) parts.push_back(wrap(x) + "*(i x/a)");
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

const RadialTerm* ShiftMatrix::entry(int row, int col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? nullptr : &it->second;
}

int ShiftMatrix::source_index(const PartialGTPattern& p) const {
    auto it = std::lower_bound(source.begin(), source.end(), p,
                               [](const PartialGTPattern& a, const PartialGTPattern& b) {
                                   return a.rows[1] < b.rows[1];
                               });
    if (it == source.end() || !(*it == p)) return -1;
    return static_cast<int>(it - source.begin());
}

int ShiftMatrix::target_index(const PartialGTPattern& p) const {
    auto it = std::lower_bound(target.begin(), target.end(), p,
                               [](const PartialGTPattern& a, const PartialGTPattern& b) {
                                   return a.rows[1] < b.rows[1];
                               });
    if (it == target.end() || !(*it == p)) return -1;
    return static_cast<int>(it - target.begin());
}

int internal_shift_index(int r, int k) {
    if (r % 2 == 0 && std::abs(k) == r / 2 && (r / 2) % 2 == 1) return -k;
    return k;
}

ShiftMatrix shift_matrix(const SpinWeight& lambda, const SpinWeight& gamma, int k) {
    lambda.require_valid();
    gamma.require_valid();
    const int r = lambda.rank;
    const int n = r / 2;
    if (gamma.rank != r - 2) throw std::invalid_argument("gamma must be a Spin(r-2) weight");
    if (r % 2 == 0 ? (k == 0 || std::abs(k) > n) : std::abs(k) > n) {
        throw std::invalid_argument("shift index out of range: " + std::to_string(k));
    }

    ShiftMatrix m;
    m.r = r;
    m.lambda = lambda;
    m.gamma = gamma;
    m.k = k;
    m.internal_k = internal_shift_index(r, k);
    m.lambda_target = lambda;
    if (k != 0) {
        m.lambda_target.entries[static_cast<std::size_t>(std::abs(k)) - 1] +=
            HalfInt::whole(k > 0 ? 1 : -1);
    }
    m.source = enumerate_partial(lambda, gamma);
    m.target_dominant = m.lambda_target.is_valid();
    if (!m.target_dominant) return m;
    m.target = enumerate_partial(m.lambda_target, gamma);

    const int top = r - 1;
    const int inner = r - 2;
    const int shift_const = r % 2 == 0 ? n - 1 : n;
    const int inner_span = r % 2 == 0 ? n - 1 : n;

    for (int col = 0; col < static_cast<int>(m.source.size()); ++col) {
        const PartialGTPattern& q = m.source[static_cast<std::size_t>(col)];
        PartialGTPattern moved = m.internal_k == 0 ? q : shifted(q, top, m.internal_k);
        int row = m.target_index(moved);
        if (row < 0) continue;
        CSqrt lead = gt_coeff_core(q, top, m.internal_k, CoeffMode::MagnitudeOnly);
        if (lead.is_zero()) {
            if (m.internal_k != 0) {
                throw std::logic_error("vanishing leading coefficient on a valid shift");
            }
            continue;  // the k = 0 diagonal sign factor may vanish
        }
        RadialTerm& term = m.entries[{row, col}];
        HalfInt l_top = l_value(q, top, m.internal_k);
        term.d = term.d - lead;
        term.c = term.c + lead * (l_top.to_rational() - shift_const);
        for (int j = -inner_span; j <= inner_span; ++j) {
            if (r % 2 == 1 && j == 0) continue;
            PartialGTPattern s = j == 0 ? q : shifted(q, inner, -j);
            if (!is_valid_partial(s)) continue;
            CSqrt num = gt_coeff_core(s, inner, j, CoeffMode::Strict);
            if (num.is_zero()) continue;
            Rational den = (l_value(s, inner, j) - l_top).to_rational();
            if (den == 0) {
                throw std::logic_error("vanishing denominator in a structurally present term");
            }
            int src_col = m.source_index(s);
            if (src_col < 0) throw std::logic_error("inner source pattern not in basis");
            RadialTerm& cross = m.entries[{row, src_col}];
            cross.x = cross.x + lead * num * (Rational(1) / den);
        }
    }
    // drop exact zeros
    for (auto it = m.entries.begin(); it != m.entries.end();) {
        it = it->second.is_zero() ? m.entries.erase(it) : std::next(it);
    }
    return m;
}

HalfInt u_value(const SpinWeight& lambda, int k) {
    lambda.require_valid();
    const int r = lambda.rank;
    const int n = r / 2;
    if (k == 0 || std::abs(k) > n) {
        throw std::invalid_argument("spectral index out of range: " + std::to_string(k));
    }
    if (r % 2 == 0) {
        int kk = internal_shift_index(r, k);
        SpinWeight dual = lambda.dual();
        int a = std::abs(kk);
        HalfInt l = dual.entries[static_cast<std::size_t>(a) - 1] + (n - a);
        if (kk < 0) l = -l;
        return l + HalfInt::half();
    }
    int a = std::abs(k);
    HalfInt l = lambda.entries[static_cast<std::size_t>(a) - 1] + (n + 1 - a);
    if (k < 0) l = -l + HalfInt::whole(1);
    return l;
}

Rational central_scalar(const InfCharacter& lam, HalfInt u) {
    Rational uu = u.to_rational();
    Rational out = 1;
    for (const HalfInt& e : lam.entries) {
        Rational ee = e.to_rational();
        out *= uu * uu - ee * ee;
    }
    return out;
}

CentralZero central_zero_cases(const InfCharacter& lam, const SpinWeight& lambda, int k) {
    if (lambda.rank != lam.r) throw std::invalid_argument("type and character rank mismatch");
    const int r = lam.r;
    const int n = lam.n();
    const HalfInt half = HalfInt::half();
    bool direct = central_scalar(lam, u_value(lambda, k)) == 0;

    bool closed = false;
    std::string which;
    auto coord = [&](int a) { return lambda.entries[static_cast<std::size_t>(a) - 1]; };
    if (r % 2 == 0) {
        if (std::abs(k) < n) {
            int a = std::abs(k);
            which = k > 0 ? "1" : "2";
            for (int i = 1; i <= n; ++i) {
                HalfInt bound = lam.at(i) - (n - a) + (k > 0 ? -half : half);
                if (coord(a) == bound) closed = true;
            }
        } else {
            which = k > 0 ? "+n" : "-n";
            for (int i = 1; i <= n; ++i) {
                HalfInt off = k > 0 ? -half : half;
                if (coord(n) == lam.at(i) + off || coord(n) == -lam.at(i) + off) closed = true;
            }
        }
    } else {
        int a = std::abs(k);
        which = k > 0 ? "3" : "4";
        for (int i = 1; i <= n + 1; ++i) {
            HalfInt li = i == n + 1 ? lam.at(i).abs() : lam.at(i);
            HalfInt bound = li - (n - a) + HalfInt::whole(k > 0 ? -1 : 0);
            if (coord(a) == bound) closed = true;
        }
    }
    if (closed != direct) {
        throw std::logic_error("closed-form vanishing test disagrees with the scalar product");
    }
    CentralZero out;
    out.zero = direct;
    out.matched_case = direct ? which : "";
    return out;
}

namespace {

struct CaseMatch {
    int case_id;
    int pivot_j;   // inner-row shift from a column to its pivot row preimage
    int order_dir; // +1: ascend the pivot coordinate, -1: descend
};

std::optional<CaseMatch> match_case(const SpinWeight& lambda, const SpinWeight& gamma, int k) {
    const int r = lambda.rank;
    const int n = r / 2;
    auto lam_at = [&](int a) { return lambda.entries[static_cast<std::size_t>(a) - 1]; };
    auto gam_at = [&](int a) { return gamma.entries[static_cast<std::size_t>(a) - 1]; };
    if (r % 2 == 0) {
        if (k >= 2 && k <= n - 1 && gam_at(k - 1) > lam_at(k)) {
            return CaseMatch{1, k, -1};
        }
        if (k <= -2 && k >= -(n - 1) && gam_at(-k - 1) < lam_at(-k)) {
            return CaseMatch{2, k, 1};
        }
        HalfInt last_dual = (n % 2 == 0) ? lam_at(n) : -lam_at(n);
        int sign_n = n % 2 == 0 ? 1 : -1;
        if (last_dual > HalfInt(0) && last_dual > gam_at(n - 1).abs() && k == -sign_n * n) {
            return CaseMatch{3, -(n - 1), 1};
        }
        if (last_dual < HalfInt(0) && -last_dual > gam_at(n - 1).abs() && k == sign_n * n) {
            return CaseMatch{4, -(n - 1), 1};
        }
        return std::nullopt;
    }
    if (k >= 2 && k <= n && gam_at(k - 1) > lam_at(k)) return CaseMatch{5, k, -1};
    if (k <= -2 && k >= -n && gam_at(-k - 1) < lam_at(-k)) return CaseMatch{6, k, 1};
    return std::nullopt;
}

}  // namespace

InjectivityResult injectivity_certificate(const SpinWeight& lambda, const SpinWeight& gamma,
                                          int k) {
    auto matched = match_case(lambda, gamma, k);
    if (!matched) return {};

    InjectivityResult out;
    out.status = InjectivityResult::Status::Certified;
    out.case_id = matched->case_id;

    ShiftMatrix m = shift_matrix(lambda, gamma, k);
    if (m.source.empty()) return out;
    if (!m.target_dominant) {
        throw std::logic_error("matched injectivity case with an absent target type");
    }

    const int r = lambda.rank;
    const std::size_t pivot_pos = static_cast<std::size_t>(std::abs(matched->pivot_j)) - 1;
    auto depth = [&](int col) {
        return matched->order_dir *
               m.source[static_cast<std::size_t>(col)].rows[1][pivot_pos].twice;
    };
    std::vector<int> order(m.source.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return depth(a) < depth(b); });

    for (int col : order) {
        const PartialGTPattern& q = m.source[static_cast<std::size_t>(col)];
        PartialGTPattern pre = shifted(q, r - 2, matched->pivot_j);
        PartialGTPattern pivot_row_pat = shifted(pre, r - 1, m.internal_k);
        int row = m.target_index(pivot_row_pat);
        if (row < 0) throw std::logic_error("pivot row absent from the target basis");
        const RadialTerm* pivot = m.entry(row, col);
        if (pivot == nullptr || pivot->x.is_zero() || !pivot->is_multiplication_only()) {
            throw std::logic_error("pivot entry is not an invertible multiplication");
        }
        for (int other = 0; other < static_cast<int>(m.source.size()); ++other) {
            if (other == col) continue;
            const RadialTerm* e = m.entry(row, other);
            if (e != nullptr && !(depth(other) < depth(col))) {
                throw std::logic_error("elimination order broken: row touches a later column");
            }
        }
        ++out.pivots_checked;
    }
    return out;
}

EmbeddingOde embedding_ode(const SpinWeight& lambda, const SpinWeight& gamma,
                           DiscreteSeries which) {
    const int r = lambda.rank;
    if (r % 2 != 0) throw std::invalid_argument("the embedding equation lives on even ranks");
    const int n = r / 2;
    if (gamma.rank != r - 2) throw std::invalid_argument("gamma must be a Spin(r-2) weight");
    HalfInt g_last = gamma.entries.back();
    if (g_last == HalfInt(0)) {
        throw std::domain_error("the sign criterion needs a nonzero last coordinate");
    }
    HalfInt acc = HalfInt::whole(n - 1);
    for (int p = 1; p <= n; ++p) {
        HalfInt lp = lambda.entries[static_cast<std::size_t>(p) - 1];
        acc += (which == DiscreteSeries::Minus && p == n) ? -lp : lp;
    }
    for (int p = 1; p <= n - 2; ++p) acc -= gamma.entries[static_cast<std::size_t>(p) - 1];
    acc -= g_last.abs();

    EmbeddingOde out;
    out.exponent = acc;
    out.sign = which == DiscreteSeries::Plus ? -g_last.sgn() : g_last.sgn();
    out.admits_moderate_solution = out.sign < 0;
    return out;
}

Rational pfaffian_scalar(const InfCharacter& lam) {
    if (lam.r % 2 == 0) {
        throw std::invalid_argument("the degree-(n+1) scalar exists on odd ranks only");
    }
    const int n = lam.n();
    Rational out = (n + 1) % 2 == 0 ? 1 : -1;
    for (const HalfInt& e : lam.entries) out *= e.to_rational();
    return out;
}

bool SecondOrderTerm::is_zero() const {
    for (const auto& row : c) {
        for (const auto& v : row) {
            if (!v.is_zero()) return false;
        }
    }
    return true;
}

std::string SecondOrderTerm::str() const {
    static const char* names[3][3] = {
        {"", "Da", "Da^2"},
        {"(i x/a)", "(i x/a)*Da", "(i x/a)*Da^2"},
        {"(i x/a)^2", "(i x/a)^2*Da", "(i x/a)^2*Da^2"},
    };
    std::vector<std::string> parts;
    for (int t = 0; t < 3; ++t) {
        for (int s = 0; s < 3; ++s) {
            if (c[t][s].is_zero()) continue;
            std::string mono = names[t][s];
            parts.push_back(mono.empty() ? wrap(c[t][s]) : wrap(c[t][s]) + "*" + mono);
        }
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

bool ComposedMatrix::is_diagonal() const {
    for (const auto& [key, term] : entries) {
        if (key.first != key.second && !term.is_zero()) return false;
    }
    return true;
}

ComposedMatrix compose(const ShiftMatrix& first, const ShiftMatrix& second) {
    if (!(second.target == first.source)) {
        throw std::invalid_argument("composition needs matching middle bases");
    }
    ComposedMatrix out;
    out.source = second.source;
    out.target = first.target;
    for (const auto& [key1, p1] : first.entries) {
        for (const auto& [key2, p2] : second.entries) {
            if (key1.second != key2.first) continue;
            SecondOrderTerm& t = out.entries[{key1.first, key2.second}];
            t.c[0][2] = t.c[0][2] + p1.d * p2.d;
            t.c[0][1] = t.c[0][1] + p1.d * p2.c + p1.c * p2.d;
            t.c[0][0] = t.c[0][0] + p1.c * p2.c;
            t.c[1][1] = t.c[1][1] + p1.d * p2.x + p1.x * p2.d;
            t.c[1][0] = t.c[1][0] + p1.c * p2.x + p1.x * p2.c - p1.d * p2.x;
            t.c[2][0] = t.c[2][0] + p1.x * p2.x;
        }
    }
    for (auto it = out.entries.begin(); it != out.entries.end();) {
        it = it->second.is_zero() ? out.entries.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace spinwhit
