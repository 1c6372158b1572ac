#include "spinwhit/whittaker.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinwhit {

std::string GammaCondition::str() const {
    switch (tag) {
        case Tag::None: return "none";
        case Tag::Even0: return "even0";
        case Tag::Even1: return "even1";
        case Tag::Even0i: return "even0i(" + std::to_string(i) + ")";
        case Tag::Odd0i: return "odd0i(" + std::to_string(i) + ")";
    }
    return "?";
}

namespace {

bool in_window(HalfInt v, HalfInt lo, HalfInt hi) {
    return v >= lo && v <= hi && same_integrality(v, lo);
}

/// gamma entries are 1-based here, matching the window indices.
struct GammaView {
    const SpinWeight& g;
    HalfInt at(int p) const { return g.entries[static_cast<std::size_t>(p) - 1]; }
};

bool even_leading_windows(const InfCharacter& lam, const GammaView& g, int upto) {
    const int n = lam.n();
    const HalfInt half = HalfInt::half();
    for (int p = 1; p <= upto; ++p) {
        if (!in_window(g.at(p), lam.at(p + 1) - (n - p - 1) + half, lam.at(p) - (n - p) + half)) {
            return false;
        }
    }
    return true;
}

bool odd_leading_windows(const InfCharacter& lam, const GammaView& g, int upto) {
    const int n = lam.n();
    for (int p = 1; p <= upto; ++p) {
        if (!in_window(g.at(p), lam.at(p + 1) - (n - p - 1), lam.at(p) - (n - p))) return false;
    }
    return true;
}

std::vector<GammaCondition> all_firing(const InfCharacter& lam, const SpinWeight& gamma) {
    gamma.require_valid();
    if (gamma.rank != lam.r - 2) {
        throw std::invalid_argument("gamma must be a weight of Spin(r-2)");
    }
    const int n = lam.n();
    const HalfInt half = HalfInt::half();
    GammaView g{gamma};
    std::vector<GammaCondition> firing;

    if (lam.r % 2 == 0) {
        HalfInt last = g.at(n - 1);
        if (even_leading_windows(lam, g, n - 2) &&
            in_window(last, lam.at(n) + half, lam.at(n - 1) - half)) {
            firing.push_back({GammaCondition::Tag::Even0, 0});
        }
        if (even_leading_windows(lam, g, n - 2) &&
            in_window(last, -lam.at(n - 1) + half, -lam.at(n) - half)) {
            firing.push_back({GammaCondition::Tag::Even1, 0});
        }
        for (int i = 2; i <= n; ++i) {
            bool ok = even_leading_windows(lam, g, i - 2);
            for (int p = i - 1; ok && p <= n - 2; ++p) {
                ok = in_window(g.at(p), lam.at(p + 2) - (n - p - 1) + half,
                               lam.at(p + 1) - (n - p) + half);
            }
            HalfInt bound = lam.at(n) - half;
            ok = ok && last.abs() <= bound && same_integrality(last, bound);
            if (ok) firing.push_back({GammaCondition::Tag::Even0i, i});
        }
    } else {
        for (int i = 2; i <= n + 1; ++i) {
            bool ok = odd_leading_windows(lam, g, std::min(i - 2, n - 1));
            for (int p = i - 1; ok && p <= n - 2; ++p) {
                ok = in_window(g.at(p), lam.at(p + 2) - (n - p - 1), lam.at(p + 1) - (n - p));
            }
            if (i <= n && n >= 2) {
                ok = ok && in_window(g.at(n - 1), lam.at(n + 1).abs(), lam.at(n) - 1);
            }
            if (ok) firing.push_back({GammaCondition::Tag::Odd0i, i});
        }
    }
    return firing;
}

}  // namespace

GammaCondition classify_gamma(const InfCharacter& lam, const SpinWeight& gamma) {
    auto firing = all_firing(lam, gamma);
    if (firing.empty()) return {};
    if (firing.size() > 1) {
        throw std::logic_error("windows are not exclusive at gamma=" + gamma.str());
    }
    return firing.front();
}

IrrLabel unique_submodule(const InfCharacter& lam, const SpinWeight& gamma) {
    GammaCondition c = classify_gamma(lam, gamma);
    switch (c.tag) {
        case GammaCondition::Tag::Even0: return IrrLabel::pi0();
        case GammaCondition::Tag::Even1: return IrrLabel::pi1();
        case GammaCondition::Tag::Even0i:
        case GammaCondition::Tag::Odd0i: return IrrLabel::pbar(c.i);
        case GammaCondition::Tag::None: break;
    }
    throw std::invalid_argument("the module is zero at gamma=" + gamma.str());
}

std::vector<IrrLabel> candidate_factors(const InfCharacter& lam, const SpinWeight& gamma) {
    GammaCondition c = classify_gamma(lam, gamma);
    const int n = lam.n();
    std::vector<IrrLabel> out;
    switch (c.tag) {
        case GammaCondition::Tag::Even0:
        case GammaCondition::Tag::Even1:
            out = {IrrLabel::pi0(), IrrLabel::pbar(n), IrrLabel::pi1()};
            break;
        case GammaCondition::Tag::Even0i:
            if (c.i < n) {
                out = {IrrLabel::pbar(c.i - 1), IrrLabel::pbar(c.i), IrrLabel::pbar(c.i + 1)};
            } else {
                out = {IrrLabel::pi0(), IrrLabel::pbar(n - 1), IrrLabel::pbar(n),
                       IrrLabel::pi1()};
            }
            break;
        case GammaCondition::Tag::Odd0i:
            if (c.i <= n) {
                out = {IrrLabel::pbar(c.i - 1), IrrLabel::pbar(c.i), IrrLabel::pbar(c.i + 1)};
            } else {
                out = {IrrLabel::pbar(n), IrrLabel::pbar(n + 1)};
            }
            break;
        case GammaCondition::Tag::None:
            throw std::invalid_argument("the module is zero at gamma=" + gamma.str());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<SocleDiagram> socle_filtration(const InfCharacter& lam, const SpinWeight& gamma) {
    GammaCondition c = classify_gamma(lam, gamma);
    if (!c.fires()) return std::nullopt;
    const int n = lam.n();
    SocleDiagram d;
    auto chain3 = [&](IrrLabel socle, IrrLabel mid, IrrLabel top) {
        d.layers = {{socle}, {mid}, {top}};
        d.arrows = {{mid, socle}, {top, mid}};
    };
    auto fan2 = [&](IrrLabel socle, std::vector<IrrLabel> upper) {
        std::sort(upper.begin(), upper.end());
        d.layers = {{socle}, upper};
        for (const IrrLabel& u : upper) d.arrows.emplace_back(u, socle);
    };
    switch (c.tag) {
        case GammaCondition::Tag::Even0:
            chain3(IrrLabel::pi0(), IrrLabel::pbar(n), IrrLabel::pi1());
            break;
        case GammaCondition::Tag::Even1:
            chain3(IrrLabel::pi1(), IrrLabel::pbar(n), IrrLabel::pi0());
            break;
        case GammaCondition::Tag::Even0i:
            if (c.i < n) {
                fan2(IrrLabel::pbar(c.i), {IrrLabel::pbar(c.i - 1), IrrLabel::pbar(c.i + 1)});
            } else {
                fan2(IrrLabel::pbar(n),
                     {IrrLabel::pi0(), IrrLabel::pbar(n - 1), IrrLabel::pi1()});
            }
            break;
        case GammaCondition::Tag::Odd0i:
            if (c.i <= n) {
                fan2(IrrLabel::pbar(c.i), {IrrLabel::pbar(c.i - 1), IrrLabel::pbar(c.i + 1)});
            } else {
                fan2(IrrLabel::pbar(n + 1), {IrrLabel::pbar(n)});
            }
            break;
        case GammaCondition::Tag::None: break;
    }
    return d;
}

bool restriction_contains(const InfCharacter& lam, int k, const SpinWeight& gamma) {
    PsParameters ps = ps_parameters(lam, k);
    return branch_contains(ps.mu, gamma);
}

int zero_shift_exclusion(const GammaCondition& cond, int n, const IrrLabel& from,
                         const IrrLabel& to) {
    if (from == to) return 1;
    auto is = [](const IrrLabel& l, const IrrLabel& m) { return l == m; };
    switch (cond.tag) {
        case GammaCondition::Tag::Even0:
            if (is(from, IrrLabel::pi0()) && is(to, IrrLabel::pbar(n))) return 2;
            if (is(from, IrrLabel::pbar(n)) && is(to, IrrLabel::pi1())) return 3;
            break;
        case GammaCondition::Tag::Even1:
            if (is(from, IrrLabel::pi1()) && is(to, IrrLabel::pbar(n))) return 4;
            if (is(from, IrrLabel::pbar(n)) && is(to, IrrLabel::pi0())) return 5;
            break;
        case GammaCondition::Tag::Even0i:
            if (cond.i < n) {
                if (is(from, IrrLabel::pbar(cond.i)) &&
                    (is(to, IrrLabel::pbar(cond.i - 1)) || is(to, IrrLabel::pbar(cond.i + 1)))) {
                    return 6;
                }
            } else if (is(from, IrrLabel::pbar(n)) &&
                       (is(to, IrrLabel::pbar(n - 1)) || is(to, IrrLabel::pi0()) ||
                        is(to, IrrLabel::pi1()))) {
                return 7;
            }
            break;
        case GammaCondition::Tag::Odd0i:
            if (cond.i <= n) {
                if (is(from, IrrLabel::pbar(cond.i)) &&
                    (is(to, IrrLabel::pbar(cond.i - 1)) || is(to, IrrLabel::pbar(cond.i + 1)))) {
                    return 8;
                }
            } else if (is(from, IrrLabel::pbar(n + 1)) && is(to, IrrLabel::pbar(n))) {
                return 9;
            }
            break;
        case GammaCondition::Tag::None: break;
    }
    return 0;
}

ZeroShift zero_shift_possible(const InfCharacter& lam, const SpinWeight& gamma,
                              const IrrLabel& from, const IrrLabel& to) {
    GammaCondition cond = classify_gamma(lam, gamma);
    auto candidates = candidate_factors(lam, gamma);
    auto member = [&](const IrrLabel& l) {
        return std::find(candidates.begin(), candidates.end(), l) != candidates.end();
    };
    if (!member(from) || !member(to)) {
        throw std::invalid_argument("labels outside the candidate set");
    }
    ZeroShift out;
    int excluded = zero_shift_exclusion(cond, lam.n(), from, to);
    if (excluded != 0) {
        out.possible = false;
        out.excluded_case = excluded;
        return out;
    }
    // constructive confirmation: an adjacent pair of types, with the shift
    // between them certified injective
    HalfInt cap = lam.at(1) + 3;
    for (const SpinWeight& type : kspectrum_enumerate(lam, from, cap)) {
        const int span = lam.r / 2;
        for (int k = -span; k <= span; ++k) {
            if (k == 0 && lam.r % 2 == 0) continue;
            SpinWeight moved = type;
            if (k != 0) {
                moved.entries[static_cast<std::size_t>(std::abs(k)) - 1] +=
                    HalfInt::whole(k > 0 ? 1 : -1);
            }
            if (!moved.is_valid()) continue;
            if (!kspectrum_contains(lam, to, moved)) continue;
            if (kspectrum_contains(lam, from, moved)) continue;
            auto cert = injectivity_certificate(type, gamma, k);
            if (cert.status == InjectivityResult::Status::Certified) {
                out.constructive = true;
                return out;
            }
        }
    }
    out.unknown = true;
    return out;
}

std::optional<Derivation> derive_socle(const InfCharacter& lam, const SpinWeight& gamma) {
    GammaCondition cond = classify_gamma(lam, gamma);
    if (!cond.fires()) return std::nullopt;
    const int n = lam.n();

    Derivation out;
    IrrLabel socle = unique_submodule(lam, gamma);
    std::vector<IrrLabel> candidates = candidate_factors(lam, gamma);
    out.trace.socle_step = {"unique_submodule", socle.wire()};
    std::string cand_list;
    for (const IrrLabel& c : candidates) cand_list += (cand_list.empty() ? "" : ",") + c.wire();
    out.trace.candidate_step = {"candidate_factors", cand_list};
    out.trace.multiplicity_facts.push_back(
        {"socle_multiplicity_one", socle.wire() + " occurs exactly once"});

    std::vector<IrrLabel> pending;
    for (const IrrLabel& c : candidates) {
        if (!(c == socle)) pending.push_back(c);
    }

    SocleDiagram d;
    d.layers.push_back({socle});
    out.trace.parity_layers.push_back(length_of(lam, socle) % 2);

    while (true) {
        int parity = 1 - out.trace.parity_layers.back();
        std::vector<IrrLabel> next;
        for (const IrrLabel& c : pending) {
            if (length_of(lam, c) % 2 == parity) next.push_back(c);
        }
        if (!next.empty()) {
            std::sort(next.begin(), next.end());
            for (const IrrLabel& c : next) {
                out.trace.multiplicity_facts.push_back(
                    {"at_least_one", c.wire() + " must occur; length parity admits layer " +
                                         std::to_string(d.layers.size() + 1)});
                out.trace.multiplicity_facts.push_back(
                    {"floor_multiplicity_one", c.wire() + " placed once in layer " +
                                                   std::to_string(d.layers.size() + 1)});
                pending.erase(std::find(pending.begin(), pending.end(), c));
            }
            d.layers.push_back(next);
            out.trace.parity_layers.push_back(parity);
            if (d.layers.size() > 4) {
                throw std::logic_error("derivation produced more layers than any diagram allows");
            }
            continue;
        }
        // No pending candidate of this parity: a further layer could only be
        // an extra copy of an already placed label.  Show every such copy is
        // blocked from acting onto the current top layer.
        bool blocked = true;
        for (const IrrLabel& c : candidates) {
            if (length_of(lam, c) % 2 != parity) continue;
            for (const IrrLabel& low : d.layers.back()) {
                int ex = zero_shift_exclusion(cond, n, c, low);
                if (ex == 0) {
                    blocked = false;
                } else {
                    out.trace.exclusion_facts.push_back(
                        {"zero_shift_possible",
                         "case " + std::to_string(ex) + " blocks " + c.wire() + " -> " +
                             low.wire() + " above layer " + std::to_string(d.layers.size())});
                }
            }
        }
        if (!blocked) {
            throw std::logic_error("cannot rule out a further layer");
        }
        if (!pending.empty()) {
            throw std::logic_error("derivation terminated with unplaced candidates");
        }
        break;
    }

    for (std::size_t t = 1; t < d.layers.size(); ++t) {
        for (const IrrLabel& u : d.layers[t]) {
            for (const IrrLabel& l : d.layers[t - 1]) {
                if (zero_shift_exclusion(cond, n, u, l) == 0) d.arrows.emplace_back(u, l);
            }
        }
    }
    out.diagram = std::move(d);
    return out;
}

}  // namespace spinwhit
