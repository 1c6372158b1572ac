#include "spinwhit/catalog.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace spinwhit {

InfCharacter validate_inf_char(int r, const std::vector<HalfInt>& entries) {
    if (r < 3) throw std::invalid_argument("rank parameter must be at least 3");
    InfCharacter lam;
    lam.r = r;
    lam.entries = entries;
    const int n = lam.n();
    const int want = lam.num_entries();
    if (static_cast<int>(entries.size()) != want) {
        throw std::invalid_argument("infinitesimal character for r=" + std::to_string(r) +
                                    " needs " + std::to_string(want) + " entries, got " +
                                    std::to_string(entries.size()));
    }
    const int gaps = r % 2 == 0 ? n - 1 : n;
    for (int p = 1; p <= gaps; ++p) {
        HalfInt diff = lam.at(p) - lam.at(p + 1);
        if (!diff.is_integer() || diff <= HalfInt(0)) {
            throw std::invalid_argument("Lambda_" + std::to_string(p) + " - Lambda_" +
                                        std::to_string(p + 1) +
                                        " must be a positive integer, got " +
                                        format_half_int(diff));
        }
    }
    if (r % 2 == 0) {
        if (!(lam.at(n) > HalfInt(0))) {
            throw std::invalid_argument("Lambda_" + std::to_string(n) + " must be positive, got " +
                                        format_half_int(lam.at(n)));
        }
    } else {
        HalfInt sum = lam.at(n) + lam.at(n + 1);
        if (!sum.is_integer() || sum <= HalfInt(0)) {
            throw std::invalid_argument("Lambda_" + std::to_string(n) + " + Lambda_" +
                                        std::to_string(n + 1) +
                                        " must be a positive integer, got " +
                                        format_half_int(sum));
        }
        if (lam.at(n + 1) == HalfInt(0)) {
            lam.warnings.push_back("Lambda_" + std::to_string(n + 1) +
                                   " is zero: accepted, borderline for regularity");
        }
    }
    return lam;
}

bool IrrLabel::operator<(const IrrLabel& o) const {
    auto key = [](const IrrLabel& l) {
        switch (l.kind) {
            case Kind::Pi0: return std::pair<int, int>{0, 0};
            case Kind::PBar: return std::pair<int, int>{1, l.i};
            case Kind::Pi1: return std::pair<int, int>{2, 0};
        }
        return std::pair<int, int>{3, 0};
    };
    return key(*this) < key(o);
}

std::string IrrLabel::wire() const {
    switch (kind) {
        case Kind::Pi0: return "pi0";
        case Kind::Pi1: return "pi1";
        case Kind::PBar: return "pbar" + std::to_string(i);
    }
    return "?";
}

IrrLabel IrrLabel::from_wire(const std::string& name) {
    if (name == "pi0") return pi0();
    if (name == "pi1") return pi1();
    if (name.rfind("pbar", 0) == 0) return pbar(std::stoi(name.substr(4)));
    throw std::invalid_argument("unknown module label: " + name);
}

std::vector<IrrLabel> all_labels(const InfCharacter& lam) {
    std::vector<IrrLabel> out;
    const int n = lam.n();
    if (lam.r % 2 == 0) {
        out.push_back(IrrLabel::pi0());
        for (int i = 1; i <= n; ++i) out.push_back(IrrLabel::pbar(i));
        out.push_back(IrrLabel::pi1());
    } else {
        for (int i = 1; i <= n + 1; ++i) out.push_back(IrrLabel::pbar(i));
    }
    return out;
}

bool label_exists(const InfCharacter& lam, const IrrLabel& label) {
    const int n = lam.n();
    if (lam.r % 2 == 0) {
        if (label.kind != IrrLabel::Kind::PBar) return true;
        return label.i >= 1 && label.i <= n;
    }
    return label.kind == IrrLabel::Kind::PBar && label.i >= 1 && label.i <= n + 1;
}

int length_of(const InfCharacter& lam, const IrrLabel& label) {
    if (!label_exists(lam, label)) {
        throw std::invalid_argument("label " + label.wire() + " does not exist for r=" +
                                    std::to_string(lam.r));
    }
    if (label.kind != IrrLabel::Kind::PBar) return 0;
    return lam.n() - label.i + 1;
}

std::vector<std::pair<IrrLabel, int>> irreducibles(const InfCharacter& lam) {
    std::vector<std::pair<IrrLabel, int>> out;
    for (const IrrLabel& l : all_labels(lam)) out.emplace_back(l, length_of(lam, l));
    return out;
}

PsParameters ps_parameters(const InfCharacter& lam, int i) {
    const int n = lam.n();
    const int count = lam.num_entries();
    if (i < 1 || i > count) {
        throw std::invalid_argument("principal series index out of range: " + std::to_string(i));
    }
    std::vector<HalfInt> mu;
    for (int p = 1; p <= count; ++p) {
        if (p == i) continue;
        mu.push_back(lam.at(p));
    }
    // half sum of positive roots of so(r-1)
    const int m = static_cast<int>(mu.size());
    for (int p = 1; p <= m; ++p) {
        if (lam.r % 2 == 0) {
            mu[p - 1] -= HalfInt(2 * n - 1 - 2 * p);  // (2n-1-2p)/2
        } else {
            mu[p - 1] -= HalfInt::whole(n - p);
        }
    }
    return {SpinWeight(lam.r - 1, std::move(mu)), lam.at(i)};
}

KTypeBox kspectrum_box(const InfCharacter& lam, const IrrLabel& label) {
    if (!label_exists(lam, label)) {
        throw std::invalid_argument("label " + label.wire() + " does not exist for r=" +
                                    std::to_string(lam.r));
    }
    const int n = lam.n();
    KTypeBox box;
    box.coord.resize(static_cast<std::size_t>(n));
    auto set = [&](int p, HalfInt lo, HalfInt hi, bool unbounded = false) {
        box.coord[static_cast<std::size_t>(p) - 1] = {lo, hi, unbounded};
    };
    if (lam.r % 2 == 0) {
        const HalfInt half = HalfInt::half();
        if (label.kind == IrrLabel::Kind::Pi0 || label.kind == IrrLabel::Kind::Pi1) {
            for (int p = 1; p <= n; ++p) {
                HalfInt lo = lam.at(p) - (n - p) + half;
                if (p == 1) {
                    set(p, lo, lo, true);
                } else {
                    set(p, lo, lam.at(p - 1) - (n - p) - half);
                }
            }
            if (label.kind == IrrLabel::Kind::Pi1) {
                set(n, -lam.at(n - 1) + half, -lam.at(n) - half);
            }
        } else {
            const int i = label.i;
            for (int p = 1; p <= i - 1; ++p) {
                HalfInt lo = lam.at(p) - (n - p) + half;
                if (p == 1) {
                    set(p, lo, lo, true);
                } else {
                    set(p, lo, lam.at(p - 1) - (n - p) - half);
                }
            }
            for (int p = i; p <= n - 1; ++p) {
                set(p, lam.at(p + 1) - (n - p) + half, lam.at(p) - (n - p) - half);
            }
            set(n, -(lam.at(n) - half), lam.at(n) - half);
        }
    } else {
        const int i = label.i;
        for (int p = 1; p <= std::min(i - 1, n); ++p) {
            HalfInt lo = lam.at(p) - (n - p);
            if (p == 1) {
                set(p, lo, lo, true);
            } else {
                set(p, lo, lam.at(p - 1) - (n - p) - 1);
            }
        }
        for (int p = i; p <= n - 1; ++p) {
            set(p, lam.at(p + 1) - (n - p), lam.at(p) - (n - p) - 1);
        }
        if (i <= n) {
            set(n, lam.at(n + 1).abs(), lam.at(n) - 1);
        }
    }
    return box;
}

bool kspectrum_contains(const InfCharacter& lam, const IrrLabel& label, const SpinWeight& type) {
    if (type.rank != lam.r || !type.is_valid()) return false;
    KTypeBox box = kspectrum_box(lam, label);
    for (std::size_t p = 0; p < box.coord.size(); ++p) {
        if (!box.coord[p].contains(type.entries[p])) return false;
    }
    return true;
}

std::vector<SpinWeight> kspectrum_enumerate(const InfCharacter& lam, const IrrLabel& label,
                                            HalfInt cap) {
    KTypeBox box = kspectrum_box(lam, label);
    const int n = lam.n();
    std::vector<SpinWeight> out;
    std::vector<HalfInt> cur(static_cast<std::size_t>(n));
    std::function<void(int)> rec = [&](int p) {
        if (p > n) {
            SpinWeight w(lam.r, cur);
            if (w.is_valid()) out.push_back(std::move(w));
            return;
        }
        const BoxInterval& iv = box.coord[static_cast<std::size_t>(p) - 1];
        HalfInt hi = iv.unbounded ? cap : iv.hi;
        hi = std::min(hi, p == 1 ? cap : cur[static_cast<std::size_t>(p) - 2]);
        HalfInt lo = iv.lo;
        if (p == n && lam.r % 2 == 0 && p > 1) {
            lo = std::max(lo, -cur[static_cast<std::size_t>(p) - 2]);
        }
        for (HalfInt v = lo; v <= hi; v += HalfInt::whole(1)) {
            cur[static_cast<std::size_t>(p) - 1] = v;
            rec(p + 1);
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

SpinWeight minimal_k_type(const InfCharacter& lam, const IrrLabel& label) {
    KTypeBox box = kspectrum_box(lam, label);
    const int n = lam.n();
    std::vector<HalfInt> entries;
    for (int p = 1; p <= n; ++p) entries.push_back(box.coord[static_cast<std::size_t>(p) - 1].lo);
    if (lam.r % 2 == 0) {
        const BoxInterval& last = box.coord.back();
        if (label.kind == IrrLabel::Kind::Pi1) {
            entries.back() = last.hi;
        } else if (label.kind == IrrLabel::Kind::PBar) {
            // symmetric window: the admissible value of least magnitude,
            // nonnegative on ties
            entries.back() = last.lo.is_integer() ? HalfInt(0) : HalfInt(1);
        }
    }
    SpinWeight out(lam.r, std::move(entries));
    out.require_valid();
    return out;
}

std::string SocleDiagram::str() const {
    std::string out;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (i) out += " | ";
        out += "[";
        for (std::size_t j = 0; j < layers[i].size(); ++j) {
            if (j) out += ",";
            out += layers[i][j].wire();
        }
        out += "]";
    }
    return out;
}

namespace {

SocleDiagram two_layer(std::vector<IrrLabel> socle, std::vector<IrrLabel> upper) {
    SocleDiagram d;
    std::sort(socle.begin(), socle.end());
    std::sort(upper.begin(), upper.end());
    d.layers = {socle, upper};
    for (const IrrLabel& u : upper) {
        for (const IrrLabel& l : socle) d.arrows.emplace_back(u, l);
    }
    return d;
}

}  // namespace

SocleDiagram ps_socle(const InfCharacter& lam, int i) {
    const int n = lam.n();
    const int count = lam.num_entries();
    if (i < 1 || i > count) {
        throw std::invalid_argument("principal series index out of range: " + std::to_string(i));
    }
    if (lam.r % 2 == 0) {
        if (i < n) return two_layer({IrrLabel::pbar(i + 1)}, {IrrLabel::pbar(i)});
        return two_layer({IrrLabel::pi0(), IrrLabel::pi1()}, {IrrLabel::pbar(n)});
    }
    if (i <= n) return two_layer({IrrLabel::pbar(i + 1)}, {IrrLabel::pbar(i)});
    SocleDiagram d;
    d.layers = {{IrrLabel::pbar(n + 1)}};
    return d;
}

}  // namespace spinwhit
