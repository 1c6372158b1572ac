#include "spinwhit/checks.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace spinwhit::checks {

namespace {

std::vector<Rational> rho_vector(int rank) {
    const int m = rank / 2;
    std::vector<Rational> rho(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        rho[static_cast<std::size_t>(i)] =
            rank % 2 == 0 ? Rational(m - 1 - i) : Rational(2 * (m - i) - 1, 2);
    }
    return rho;
}

}  // namespace

Int weyl_dimension(const SpinWeight& lambda) {
    lambda.require_valid();
    const int m = lambda.rank / 2;
    auto rho = rho_vector(lambda.rank);
    std::vector<Rational> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        v[static_cast<std::size_t>(i)] = lambda.entries[static_cast<std::size_t>(i)].to_rational();
    }
    Rational dim = 1;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            dim *= (v[i] + rho[i] - v[j] - rho[j]) / (rho[i] - rho[j]);
            dim *= (v[i] + rho[i] + v[j] + rho[j]) / (rho[i] + rho[j]);
        }
        if (lambda.rank % 2 == 1) dim *= (v[i] + rho[i]) / rho[i];
    }
    Int num = numerator(dim);
    if (denominator(dim) != 1 || num <= 0) {
        throw std::logic_error("dimension oracle produced a non-integer");
    }
    return num;
}

Rational casimir_eigenvalue(const SpinWeight& lambda) {
    auto rho = rho_vector(lambda.rank);
    Rational out = 0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        Rational v = lambda.entries[i].to_rational();
        out += v * v + 2 * rho[i] * v;
    }
    return out;
}

std::vector<SpinWeight> enumerate_dominant(int rank, HalfInt bound) {
    std::vector<SpinWeight> out;
    const int m = rank / 2;
    if (m == 0) {
        out.emplace_back(rank, std::vector<HalfInt>{});
        return out;
    }
    for (int cls = 0; cls <= 1; ++cls) {
        HalfInt top(bound.twice - (bound.twice - cls) % 2 == 0 ? bound.twice : bound.twice - 1);
        // largest lattice value of this class below the bound
        std::int64_t t = bound.twice;
        if ((t - cls) % 2 != 0) --t;
        std::vector<HalfInt> cur(static_cast<std::size_t>(m));
        std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t hi) {
            if (pos == m) {
                SpinWeight w(rank, cur);
                if (w.is_valid()) out.push_back(std::move(w));
                return;
            }
            bool last = pos == m - 1;
            std::int64_t lo = last && rank % 2 == 0 ? -hi : (rank == 2 ? -t : cls);
            for (std::int64_t v = lo; v <= hi; v += 2) {
                cur[static_cast<std::size_t>(pos)] = HalfInt(v);
                rec(pos + 1, last ? hi : v);
            }
        };
        rec(0, t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

InfCharacter random_inf_char(std::mt19937& rng, int r, int top) {
    const int n = r / 2;
    const int count = r % 2 == 0 ? n : n + 1;
    std::uniform_int_distribution<int> cls_pick(0, 1);
    int cls = cls_pick(rng);
    // positive lattice values of the class, from 1/2 or 1 up to `top`
    std::vector<std::int64_t> pool;
    for (std::int64_t t = cls == 0 ? 2 : 1; t <= 2 * top; t += 2) pool.push_back(t);
    const int positives = r % 2 == 0 ? count : count - 1;
    if (static_cast<int>(pool.size()) < positives) {
        throw std::invalid_argument("bound too small for a regular character");
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::int64_t> picked(pool.begin(), pool.begin() + positives);
    std::sort(picked.rbegin(), picked.rend());
    std::vector<HalfInt> entries;
    for (std::int64_t t : picked) entries.push_back(HalfInt(t));
    if (r % 2 == 1) {
        // trailing entry: any lattice value strictly below the last positive
        // in absolute value (zero allowed for the whole class)
        std::int64_t cap = picked.back();
        std::vector<std::int64_t> small;
        for (std::int64_t t = cls == 0 ? 0 : 1; t < cap; t += 2) {
            small.push_back(t);
            if (t != 0) small.push_back(-t);
        }
        std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
        entries.push_back(HalfInt(small[pick(rng)]));
    }
    return validate_inf_char(r, entries);
}

bool Report::all_pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

namespace {

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string& detail) {
        ++result_.cases;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.detail = detail;
        }
    }

    template <typename F>
    void guarded(F&& f, const std::string& context) {
        ++result_.cases;
        try {
            f();
        } catch (const std::exception& e) {
            if (result_.pass) {
                result_.pass = false;
                result_.detail = context + ": " + e.what();
            }
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

}  // namespace

Report gt_suite(int max_rank, HalfInt max_entry) {
    Report report;

    Check dims("pattern count equals the dimension oracle");
    Check sums("branching sums to the dimension");
    Check duals("duality is a dimension-preserving involution");
    Check partial("partial bases count double branching");
    for (int r = 2; r <= max_rank; ++r) {
        for (const SpinWeight& lam : enumerate_dominant(r, max_entry)) {
            Int d = dimension(lam);
            dims.expect(d == weyl_dimension(lam), "rank " + std::to_string(r) + " " + lam.str());
            if (r >= 3) {
                Int total = 0;
                for (const SpinWeight& mu : branch(lam)) total += dimension(mu);
                sums.expect(total == d, "rank " + std::to_string(r) + " " + lam.str());
            }
            duals.expect(lam.dual().dual() == lam && dimension(lam.dual()) == d, lam.str());
            if (d <= 64) {
                for (const GTPattern& q : enumerate_patterns(lam)) {
                    GTPattern qd = dualize(q);
                    duals.expect(is_valid_pattern(qd) && dualize(qd) == q &&
                                     qd.rows.back() == lam.dual().entries,
                                 "pattern dual at " + lam.str());
                }
            }
            if (r >= 3 && r <= 6) {
                for (const SpinWeight& gam : enumerate_dominant(r - 2, max_entry + 1)) {
                    std::size_t count = enumerate_partial(lam, gam).size();
                    std::size_t via_dual = 0, via_plain = 0;
                    for (const SpinWeight& mu : branch(lam.dual())) {
                        if (branch_contains(mu, gam.dual())) ++via_dual;
                    }
                    for (const SpinWeight& mu : branch(lam)) {
                        if (branch_contains(mu, gam)) ++via_plain;
                    }
                    partial.expect(count == via_dual && count == via_plain,
                                   lam.str() + " / " + gam.str());
                }
            }
        }
    }
    report.add(dims.take());
    report.add(sums.take());
    report.add(duals.take());
    report.add(partial.take());
    return report;
}

Report lie_suite(int max_rank, HalfInt max_entry, HalfInt vanish_entry) {
    Report report;

    Check skew("generators are skew-Hermitian with real shift parts");
    Check brackets("chain brackets close and disjoint generators commute");
    Check casimir("squared-generator sum matches the eigenvalue oracle");
    for (int r = 3; r <= max_rank; ++r) {
        for (const SpinWeight& lam : enumerate_dominant(r, max_entry)) {
            LieAction act(lam);
            for (int p = 2; p <= r; ++p) {
                for (int q = 1; q < p; ++q) {
                    const GenMatrix& g = act.generator(p, q);
                    skew.expect(g.is_skew_hermitian() && g.real_part_skew(),
                                lam.str() + " generator " + std::to_string(p) + "," +
                                    std::to_string(q));
                }
            }
            for (int p = 3; p <= r; ++p) {
                for (int q = 2; q < p; ++q) {
                    for (int s = 1; s < q; ++s) {
                        brackets.expect(act.generator(p, q).bracket(act.generator(q, s)) ==
                                            act.generator(p, s),
                                        lam.str() + " triple " + std::to_string(p) +
                                            std::to_string(q) + std::to_string(s));
                    }
                }
            }
            for (int p = 2; p <= r; ++p) {
                for (int q = 1; q < p; ++q) {
                    for (int s = 2; s <= r; ++s) {
                        for (int t = 1; t < s; ++t) {
                            if (p == s || p == t || q == s || q == t) continue;
                            brackets.expect(
                                act.generator(p, q).bracket(act.generator(s, t)).is_zero(),
                                lam.str() + " disjoint " + std::to_string(p) + std::to_string(q) +
                                    "," + std::to_string(s) + std::to_string(t));
                        }
                    }
                }
            }
            casimir.guarded(
                [&] {
                    if (act.casimir_scalar() != -casimir_eigenvalue(lam)) {
                        throw std::logic_error("scalar mismatch");
                    }
                },
                lam.str());
        }
    }
    report.add(skew.take());
    report.add(brackets.take());
    report.add(casimir.take());

    Check vanish("shift coefficients vanish exactly on invalid shifts");
    for (int r = 3; r <= max_rank; ++r) {
        for (const SpinWeight& lam : enumerate_dominant(r, vanish_entry)) {
            for (const GTPattern& q : enumerate_patterns(lam)) {
                for (int level = 1; level <= r - 2; ++level) {
                    int i = level % 2 == 0 ? level / 2 : (level + 1) / 2;
                    for (int j = -i; j <= i; ++j) {
                        if (j == 0 && level % 2 == 1) continue;
                        vanish.guarded(
                            [&] {
                                CSqrt c = coeff_a(q, level, j);
                                if (j == 0) {
                                    const auto& below = q.rows[static_cast<std::size_t>(level) - 2];
                                    const auto& above = q.rows[static_cast<std::size_t>(level)];
                                    bool sign_zero =
                                        below[static_cast<std::size_t>(i) - 1].twice == 0 ||
                                        above[static_cast<std::size_t>(i)].twice == 0;
                                    if (c.is_zero() != sign_zero || !c.re.is_zero()) {
                                        throw std::logic_error("diagonal coefficient shape");
                                    }
                                    return;
                                }
                                bool valid = is_valid_pattern(shifted(q, level, j));
                                if (c.is_zero() == valid || !c.im.is_zero()) {
                                    throw std::logic_error("vanishing law violated");
                                }
                            },
                            lam.str() + " level " + std::to_string(level) + " j " +
                                std::to_string(j));
                    }
                }
            }
        }
    }
    report.add(vanish.take());
    return report;
}

Report catalog_suite(const std::vector<InfCharacter>& lams, HalfInt cap) {
    Report report;
    Check partition("spectrum boxes partition the principal-series spectra");
    Check disjoint("spectrum boxes are pairwise disjoint");
    Check minimal("minimal types minimize the shifted norm inside the box");
    Check parabolic("minimal-parabolic types are dominant");

    for (const InfCharacter& lam : lams) {
        const int r = lam.r;
        const int n = lam.n();
        const int count = lam.num_entries();
        for (int k = 1; k <= count; ++k) {
            parabolic.expect(ps_parameters(lam, k).mu.is_valid(),
                             lam.str() + " series " + std::to_string(k));
        }
        auto labels = all_labels(lam);
        for (const SpinWeight& type : enumerate_dominant(r, cap)) {
            std::map<int, int> ps_ind;
            for (int k = 1; k <= count; ++k) {
                ps_ind[k] = branch_contains(type, ps_parameters(lam, k).mu) ? 1 : 0;
            }
            std::map<std::string, int> ind;
            int total = 0;
            for (const IrrLabel& l : labels) {
                ind[l.wire()] = kspectrum_contains(lam, l, type) ? 1 : 0;
                total += ind[l.wire()];
            }
            disjoint.expect(total <= 1, lam.str() + " type " + type.str());
            if (r % 2 == 0) {
                for (int k = 1; k < n; ++k) {
                    partition.expect(ps_ind[k] == ind["pbar" + std::to_string(k)] +
                                                      ind["pbar" + std::to_string(k + 1)],
                                     lam.str() + " series " + std::to_string(k) + " at " +
                                         type.str());
                }
                partition.expect(
                    ps_ind[n] == ind["pbar" + std::to_string(n)] + ind["pi0"] + ind["pi1"],
                    lam.str() + " series " + std::to_string(n) + " at " + type.str());
            } else {
                for (int k = 1; k <= n; ++k) {
                    partition.expect(ps_ind[k] == ind["pbar" + std::to_string(k)] +
                                                      ind["pbar" + std::to_string(k + 1)],
                                     lam.str() + " series " + std::to_string(k) + " at " +
                                         type.str());
                }
                partition.expect(ps_ind[n + 1] == ind["pbar" + std::to_string(n + 1)],
                                 lam.str() + " series " + std::to_string(n + 1) + " at " +
                                     type.str());
            }
        }
        auto rho = rho_vector(r);
        auto norm2 = [&](const SpinWeight& w) {
            Rational acc = 0;
            for (std::size_t i = 0; i < rho.size(); ++i) {
                Rational v = w.entries[i].to_rational() + 2 * rho[i];
                acc += v * v;
            }
            return acc;
        };
        for (const IrrLabel& l : labels) {
            SpinWeight m = minimal_k_type(lam, l);
            minimal.expect(kspectrum_contains(lam, l, m), lam.str() + " " + l.wire());
            Rational best = norm2(m);
            bool is_min = true;
            bool tie_elsewhere = false;
            for (const SpinWeight& type : kspectrum_enumerate(lam, l, cap)) {
                Rational v = norm2(type);
                if (v < best) is_min = false;
                if (v == best && !(type == m)) tie_elsewhere = true;
            }
            minimal.expect(is_min, lam.str() + " " + l.wire() + " not minimal");
            if (tie_elsewhere) {
                minimal.expect(m.entries.back() >= HalfInt(0),
                               lam.str() + " " + l.wire() + " tie resolution");
            }
        }
    }
    report.add(partition.take());
    report.add(disjoint.take());
    report.add(minimal.take());
    report.add(parabolic.take());
    return report;
}

Report whittaker_suite(const std::vector<InfCharacter>& lams, HalfInt gamma_bound) {
    Report report;
    Check exclusive("at most one window fires per gamma");
    Check agree("derived filtrations equal the stated filtrations");
    Check structure("diagram structure: socle, multiplicities, arrow parity");
    Check restriction("windows match restriction of the parabolic types");
    Check containment("candidate spectra branch onto gamma");
    Check ode("sign criterion matches the discrete-series windows");

    for (const InfCharacter& lam : lams) {
        const int r = lam.r;
        const int n = lam.n();
        const int count = lam.num_entries();
        for (const SpinWeight& gam : enumerate_dominant(r - 2, gamma_bound)) {
            GammaCondition tag;
            bool threw = false;
            try {
                tag = classify_gamma(lam, gam);
            } catch (const std::exception& e) {
                exclusive.expect(false, lam.str() + " gamma " + gam.str() + ": " + e.what());
                threw = true;
            }
            if (threw) continue;
            exclusive.expect(true, "");

            std::map<int, bool> pair_at;
            for (int i = 2; i <= count; ++i) {
                pair_at[i] = restriction_contains(lam, i, gam) &&
                             restriction_contains(lam, i - 1, gam);
            }
            int tagged_i = (tag.tag == GammaCondition::Tag::Even0i ||
                            tag.tag == GammaCondition::Tag::Odd0i)
                               ? tag.i
                               : 0;
            for (int i = 2; i <= count; ++i) {
                restriction.expect(pair_at[i] == (tagged_i == i),
                                   lam.str() + " gamma " + gam.str() + " i=" + std::to_string(i));
            }
            if (r % 2 == 0) {
                bool ds_tag = tag.tag == GammaCondition::Tag::Even0 ||
                              tag.tag == GammaCondition::Tag::Even1;
                bool top_member = restriction_contains(lam, n, gam);
                restriction.expect(top_member == (ds_tag || tagged_i == n),
                                   lam.str() + " gamma " + gam.str() + " top series");
            }

            auto stated = socle_filtration(lam, gam);
            auto derived = derive_socle(lam, gam);
            agree.expect(stated.has_value() == tag.fires() &&
                             derived.has_value() == tag.fires(),
                         lam.str() + " gamma " + gam.str());
            if (!tag.fires()) continue;
            agree.expect(derived->diagram == *stated, lam.str() + " gamma " + gam.str());
            bool three_even = r % 2 == 0 && stated->layers.size() == 3;
            if (three_even) {
                agree.expect(!derived->trace.exclusion_facts.empty(),
                             lam.str() + " gamma " + gam.str() + " trace lacks exclusions");
            }

            IrrLabel socle = unique_submodule(lam, gam);
            structure.expect(stated->layers.front() == std::vector<IrrLabel>{socle},
                             lam.str() + " gamma " + gam.str() + " socle");
            auto candidates = candidate_factors(lam, gam);
            std::map<std::string, int> mult;
            for (const auto& layer : stated->layers) {
                for (const IrrLabel& l : layer) ++mult[l.wire()];
            }
            bool mult_ok = true;
            for (const auto& [w, m] : mult) mult_ok = mult_ok && m == 1;
            for (const IrrLabel& c : candidates) mult_ok = mult_ok && mult.count(c.wire()) == 1;
            structure.expect(mult_ok && mult.size() == candidates.size(),
                             lam.str() + " gamma " + gam.str() + " multiplicities");
            for (const auto& [upper, lower] : stated->arrows) {
                structure.expect((length_of(lam, upper) - length_of(lam, lower)) % 2 != 0,
                                 lam.str() + " gamma " + gam.str() + " arrow parity");
            }

            HalfInt cap = lam.at(1) + 2;
            for (const IrrLabel& c : candidates) {
                for (const SpinWeight& type : kspectrum_enumerate(lam, c, cap)) {
                    bool found = false;
                    for (const SpinWeight& mu : branch(type)) {
                        if (branch_contains(mu, gam)) {
                            found = true;
                            break;
                        }
                    }
                    containment.expect(found, lam.str() + " gamma " + gam.str() + " type " +
                                                  type.str());
                }
            }

            if (r % 2 == 0 && gam.entries.back() != HalfInt(0)) {
                SpinWeight mirror = gam;
                mirror.entries.back() = -mirror.entries.back();
                GammaCondition mtag = classify_gamma(lam, mirror);
                auto is_ds = [](const GammaCondition& t) {
                    return t.tag == GammaCondition::Tag::Even0 ||
                           t.tag == GammaCondition::Tag::Even1;
                };
                if (is_ds(tag) || is_ds(mtag)) {
                    auto plus = embedding_ode(minimal_k_type(lam, IrrLabel::pi0()), gam,
                                              DiscreteSeries::Plus);
                    auto minus = embedding_ode(minimal_k_type(lam, IrrLabel::pi1()), gam,
                                               DiscreteSeries::Minus);
                    ode.expect(plus.admits_moderate_solution ==
                                   (tag.tag == GammaCondition::Tag::Even0),
                               lam.str() + " gamma " + gam.str() + " plus");
                    ode.expect(minus.admits_moderate_solution ==
                                   (tag.tag == GammaCondition::Tag::Even1),
                               lam.str() + " gamma " + gam.str() + " minus");
                }
            }
        }
    }
    report.add(exclusive.take());
    report.add(agree.take());
    report.add(structure.take());
    report.add(restriction.take());
    report.add(containment.take());
    report.add(ode.take());
    return report;
}

Report radial_suite(const std::vector<InfCharacter>& lams, HalfInt cap, unsigned seed,
                    int samples_per_case) {
    Report report;

    Check central("central-scalar vanishing matches the closed-form cases");
    for (const InfCharacter& lam : lams) {
        const int span = lam.r / 2;
        for (const IrrLabel& l : all_labels(lam)) {
            for (const SpinWeight& type : kspectrum_enumerate(lam, l, cap)) {
                for (int k = -span; k <= span; ++k) {
                    if (k == 0) continue;
                    central.guarded([&] { central_zero_cases(lam, type, k); },
                                    lam.str() + " " + type.str() + " k=" + std::to_string(k));
                }
            }
        }
    }
    report.add(central.take());

    Check structure("shift matrices: vanishing rows and real shift parts");
    std::set<int> ranks;
    for (const InfCharacter& lam : lams) ranks.insert(lam.r);
    for (int r : ranks) {
        for (const SpinWeight& lam : enumerate_dominant(r, HalfInt::whole(2))) {
            for (const SpinWeight& gam : enumerate_dominant(r - 2, HalfInt::whole(2))) {
                const int span = r / 2;
                for (int k = -span; k <= span; ++k) {
                    if (k == 0 && r % 2 == 0) continue;
                    structure.guarded(
                        [&] {
                            ShiftMatrix m = shift_matrix(lam, gam, k);
                            for (int col = 0; col < static_cast<int>(m.source.size()); ++col) {
                                const auto& q = m.source[static_cast<std::size_t>(col)];
                                CSqrt lead =
                                    gt_coeff_core(q, r - 1, m.internal_k, CoeffMode::MagnitudeOnly);
                                bool in_target =
                                    m.target_dominant &&
                                    m.target_index(m.internal_k == 0
                                                       ? q
                                                       : shifted(q, r - 1, m.internal_k)) >= 0;
                                if (k != 0 && lead.is_zero() == in_target) {
                                    throw std::logic_error("leading vanishing law violated");
                                }
                            }
                            if (k != 0) {
                                for (const auto& [pos, term] : m.entries) {
                                    if (!term.d.im.is_zero() || !term.c.im.is_zero()) {
                                        throw std::logic_error("complex transport part");
                                    }
                                }
                            }
                        },
                        lam.str() + "/" + gam.str() + " k=" + std::to_string(k));
                }
            }
        }
    }
    report.add(structure.take());

    Check inject("sampled injectivity certificates with nonzero pivots");
    std::mt19937 rng(seed);
    auto sample_case = [&](int case_id, int r, auto&& make) {
        int found = 0, attempts = 0;
        while (found < samples_per_case && attempts < samples_per_case * 200) {
            ++attempts;
            auto [lambda, gamma, k] = make();
            if (!lambda.is_valid() || !gamma.is_valid()) continue;
            InjectivityResult res;
            try {
                res = injectivity_certificate(lambda, gamma, k);
            } catch (const std::exception& e) {
                inject.expect(false, "case " + std::to_string(case_id) + ": " + e.what());
                return;
            }
            if (res.status != InjectivityResult::Status::Certified || res.case_id != case_id) {
                continue;
            }
            if (res.pivots_checked == 0) continue;  // want populated bases
            ++found;
            if (res.pivots_checked == 1) {
                // one-dimensional source: confirm by direct elimination that a
                // multiplication-only row pins the single coefficient
                ShiftMatrix m = shift_matrix(lambda, gamma, k);
                bool pinned = false;
                for (const auto& [pos, term] : m.entries) {
                    if (term.is_multiplication_only() && !term.x.is_zero()) pinned = true;
                }
                inject.expect(pinned, "case " + std::to_string(case_id) + " direct elimination");
            }
        }
        inject.expect(found == samples_per_case,
                      "case " + std::to_string(case_id) + " found only " +
                          std::to_string(found) + " of " + std::to_string(samples_per_case));
    };
    std::uniform_int_distribution<int> small(0, 5);
    auto rand_weight = [&](int rank, int lo_extra) {
        auto all = enumerate_dominant(rank, HalfInt::whole(4 + lo_extra));
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return all[pick(rng)];
    };
    // positive interior shifts, even rank (r=6, k=2)
    sample_case(1, 6, [&] {
        SpinWeight lam = rand_weight(6, 0);
        SpinWeight gam = rand_weight(4, 1);
        gam.entries[0] = lam.entries[1] + (1 + small(rng) % 3);
        if (gam.entries[0] < gam.entries[1].abs()) gam.entries[1] = HalfInt(0);
        if (!same_integrality(gam.entries[0], gam.entries[1])) {
            gam.entries[1] = gam.entries[0] - gam.entries[0].twice / 2;
        }
        return std::tuple{lam, gam, 2};
    });
    // negative interior shifts, even rank (r=6, k=-2)
    sample_case(2, 6, [&] {
        SpinWeight lam = rand_weight(6, 0);
        if (lam.entries[1] == HalfInt(0)) lam.entries[1] = HalfInt::whole(1);
        if (lam.entries[0] < lam.entries[1]) lam.entries[0] = lam.entries[1] + 1;
        SpinWeight gam = rand_weight(4, 0);
        gam.entries[0] = lam.entries[1] - 1;
        gam.entries[1] = HalfInt(gam.entries[0].twice % 2);
        if (gam.entries[1] > gam.entries[0]) gam.entries[1] = gam.entries[0];
        return std::tuple{lam, gam, -2};
    });
    // boundary shifts, even rank (r in {4,6})
    for (int case_id : {3, 4}) {
        sample_case(case_id, 4, [&, case_id] {
            int r = small(rng) % 2 == 0 ? 4 : 6;
            int n = r / 2;
            SpinWeight lam = rand_weight(r, 0);
            HalfInt dual_sign_last = (n % 2 == 0) ? lam.entries.back() : -lam.entries.back();
            int want = case_id == 3 ? 1 : -1;
            if (dual_sign_last.sgn() != want) {
                lam.entries.back() = -lam.entries.back();
                dual_sign_last = -dual_sign_last;
            }
            if (dual_sign_last.sgn() != want) return std::tuple{lam, lam, 0};  // reject
            SpinWeight gam = rand_weight(r - 2, 0);
            HalfInt bound = dual_sign_last.abs();
            // force |gamma_last| < |dual last|
            while (!gam.entries.empty() && !(gam.entries.back().abs() < bound &&
                                             same_integrality(gam.entries.back(), bound))) {
                if (gam.entries.back().twice == 0 && bound.is_integer()) break;
                gam.entries.back() = HalfInt(gam.entries.back().twice % 2 == bound.twice % 2
                                                 ? gam.entries.back().twice / 2
                                                 : bound.twice - 2);
                if (gam.entries.back().abs() >= bound) {
                    gam.entries.back() = HalfInt(bound.twice - 2);
                }
                break;
            }
            int sign_n = n % 2 == 0 ? 1 : -1;
            int k = case_id == 3 ? -sign_n * n : sign_n * n;
            return std::tuple{lam, gam, k};
        });
    }
    // odd rank (r=5, k=+-2)
    sample_case(5, 5, [&] {
        SpinWeight lam = rand_weight(5, 0);
        SpinWeight gam = rand_weight(3, 1);
        gam.entries[0] = lam.entries[1] + (1 + small(rng) % 3);
        return std::tuple{lam, gam, 2};
    });
    sample_case(6, 5, [&] {
        SpinWeight lam = rand_weight(5, 0);
        if (lam.entries[1] == HalfInt(0)) lam.entries[1] = HalfInt::whole(1);
        if (lam.entries[0] < lam.entries[1]) lam.entries[0] = lam.entries[1] + 1;
        SpinWeight gam = rand_weight(3, 0);
        gam.entries[0] = lam.entries[1] - 1;
        return std::tuple{lam, gam, -2};
    });
    report.add(inject.take());
    return report;
}

namespace {

std::vector<InfCharacter> default_characters(int max_rank) {
    std::vector<InfCharacter> lams;
    auto h = [](std::int64_t t) { return HalfInt(t); };
    if (max_rank >= 4) lams.push_back(validate_inf_char(4, {h(5), h(1)}));
    if (max_rank >= 5) lams.push_back(validate_inf_char(5, {h(4), h(2), h(0)}));
    if (max_rank >= 6) lams.push_back(validate_inf_char(6, {h(7), h(3), h(1)}));
    if (max_rank >= 7) lams.push_back(validate_inf_char(7, {h(7), h(5), h(3), h(1)}));
    return lams;
}

}  // namespace

Report run_suite(const std::string& name, int max_rank, HalfInt max_entry) {
    auto lams = default_characters(max_rank);
    if (name == "gt") return gt_suite(max_rank, max_entry);
    if (name == "lie") return lie_suite(std::min(max_rank, 6), HalfInt(3), max_entry);
    if (name == "catalog") return catalog_suite(lams, HalfInt::whole(6));
    if (name == "whittaker") return whittaker_suite(lams, HalfInt::whole(5));
    if (name == "radial") return radial_suite(lams, HalfInt::whole(5), 20260810u, 8);
    if (name == "all") {
        Report all = gt_suite(std::min(max_rank, 6), max_entry);
        for (auto& r : lie_suite(std::min(max_rank, 5), HalfInt(3), HalfInt::whole(1)).results) {
            all.add(std::move(r));
        }
        for (auto& r : catalog_suite(lams, HalfInt::whole(5)).results) all.add(std::move(r));
        for (auto& r : whittaker_suite(lams, HalfInt::whole(4)).results) all.add(std::move(r));
        for (auto& r : radial_suite(lams, HalfInt::whole(4), 20260810u, 4).results) {
            all.add(std::move(r));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace spinwhit::checks
