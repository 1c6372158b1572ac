#pragma once

#include "spinwhit/catalog.hpp"
#include "spinwhit/radial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinwhit {

/// Which window of the nonvanishing criterion the Spin(r-2) type gamma
/// satisfies: the two signed discrete-series windows (even rank only), the
/// indexed principal-series windows, or none.
struct GammaCondition {
    enum class Tag { None, Even0, Even1, Even0i, Odd0i };
    Tag tag = Tag::None;
    int i = 0;  // window index for Even0i/Odd0i

    bool fires() const { return tag != Tag::None; }
    bool operator==(const GammaCondition&) const = default;
    std::string str() const;
};

/// The unique satisfied window, or None.  Throws std::logic_error if two
/// windows ever fire at once (they are pairwise exclusive).
GammaCondition classify_gamma(const InfCharacter& lam, const SpinWeight& gamma);

/// The filtration of the standard module attached to (eta, Lambda, gamma);
/// nullopt when the module is zero.
std::optional<SocleDiagram> socle_filtration(const InfCharacter& lam, const SpinWeight& gamma);

/// Layer-one label of the filtration; requires a firing condition.
IrrLabel unique_submodule(const InfCharacter& lam, const SpinWeight& gamma);

/// The complete list of module labels that can occur as factors.
std::vector<IrrLabel> candidate_factors(const InfCharacter& lam, const SpinWeight& gamma);

/// Whether gamma occurs in the restriction of the k-th minimal-parabolic type
/// to the stabilizer subgroup, via one branching step from Spin(r-1).
bool restriction_contains(const InfCharacter& lam, int k, const SpinWeight& gamma);

struct ZeroShift {
    bool possible = true;
    int excluded_case = 0;    // 1..9 when excluded
    bool constructive = false;  // an adjacency plus a certified injection was found
    bool unknown = false;       // conservatively reported possible
};
/// Decides whether a nonzero action can send a factor labeled `from` onto a
/// factor labeled `to` one layer below.  The nine excluded configurations are
/// decided by the central-scalar/injectivity argument; non-excluded pairs are
/// confirmed constructively where an adjacent pair of types with a certified
/// injective shift exists, and reported as conservatively possible otherwise.
ZeroShift zero_shift_possible(const InfCharacter& lam, const SpinWeight& gamma,
                              const IrrLabel& from, const IrrLabel& to);

/// Exclusion table only (no constructive search); 0 means not excluded.
int zero_shift_exclusion(const GammaCondition& cond, int n, const IrrLabel& from,
                         const IrrLabel& to);

struct TraceFact {
    std::string via;   // producing operation
    std::string what;  // rendered fact
};

struct DerivationTrace {
    TraceFact socle_step;
    TraceFact candidate_step;
    std::vector<int> parity_layers;         // length parity per layer
    std::vector<TraceFact> exclusion_facts; // applied zero-shift exclusions
    std::vector<TraceFact> multiplicity_facts;
};

struct Derivation {
    SocleDiagram diagram;
    DerivationTrace trace;
};

/// Rebuilds the filtration from first principles: the unique socle with
/// multiplicity one, the candidate list, length parities alternating layer by
/// layer, at least one copy of every candidate, and zero-shift exclusions
/// capping the layer count.  The result must equal socle_filtration.
std::optional<Derivation> derive_socle(const InfCharacter& lam, const SpinWeight& gamma);

}  // namespace spinwhit
