#pragma once

#include "spinwhit/weight.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinwhit {

/// Regular integral infinitesimal character for Spin(r,1).  For r = 2n the
/// entries are Lambda_1 > ... > Lambda_n > 0 with integer gaps; for r = 2n+1
/// there are n+1 entries with integer gaps through Lambda_{n+1} and
/// Lambda_n + Lambda_{n+1} > 0.
struct InfCharacter {
    int r = 3;
    std::vector<HalfInt> entries;
    std::vector<std::string> warnings;

    int n() const { return r / 2; }
    int num_entries() const { return r % 2 == 0 ? r / 2 : r / 2 + 1; }
    HalfInt at(int i) const { return entries.at(static_cast<std::size_t>(i) - 1); }
    std::string str() const { return format_half_int_list(entries); }
};

/// Throws std::invalid_argument naming the violated clause.
InfCharacter validate_inf_char(int r, const std::vector<HalfInt>& entries);

/// The irreducible modules at a fixed regular integral character: two discrete
/// series (even r only) and the unique quotients of the minimal principal
/// series.
struct IrrLabel {
    enum class Kind { Pi0, Pi1, PBar };
    Kind kind = Kind::PBar;
    int i = 1;  // only for PBar

    static IrrLabel pi0() { return {Kind::Pi0, 0}; }
    static IrrLabel pi1() { return {Kind::Pi1, 0}; }
    static IrrLabel pbar(int i) { return {Kind::PBar, i}; }

    bool operator==(const IrrLabel&) const = default;
    /// Canonical order: pi0, then pbar by ascending index, then pi1.
    bool operator<(const IrrLabel& o) const;

    std::string wire() const;  // "pi0", "pi1", "pbar<i>"
    static IrrLabel from_wire(const std::string& name);
};

std::vector<IrrLabel> all_labels(const InfCharacter& lam);
bool label_exists(const InfCharacter& lam, const IrrLabel& label);

/// Length of the module: 0 for the discrete series, n-i+1 for pbar(i).
int length_of(const InfCharacter& lam, const IrrLabel& label);

std::vector<std::pair<IrrLabel, int>> irreducibles(const InfCharacter& lam);

/// Minimal parabolic datum of the i-th principal series: the Spin(r-1) type
/// obtained by dropping Lambda_i and subtracting the half sum of positive
/// roots of so(r-1), paired with the continuous parameter Lambda_i.
struct PsParameters {
    SpinWeight mu;
    HalfInt nu;
};
PsParameters ps_parameters(const InfCharacter& lam, int i);

/// Closed coordinate interval with unit steps; hi is ignored when unbounded.
struct BoxInterval {
    HalfInt lo;
    HalfInt hi;
    bool unbounded = false;

    bool contains(HalfInt v) const {
        return v >= lo && (unbounded || v <= hi) && same_integrality(v, lo);
    }
};

struct KTypeBox {
    std::vector<BoxInterval> coord;
};

KTypeBox kspectrum_box(const InfCharacter& lam, const IrrLabel& label);
bool kspectrum_contains(const InfCharacter& lam, const IrrLabel& label, const SpinWeight& type);
/// All box members with first coordinate at most cap, ascending lexicographic.
std::vector<SpinWeight> kspectrum_enumerate(const InfCharacter& lam, const IrrLabel& label,
                                            HalfInt cap);
/// The box corner closest to the origin shifted by twice the compact half sum;
/// ties on the signed last coordinate resolve to the nonnegative value.
SpinWeight minimal_k_type(const InfCharacter& lam, const IrrLabel& label);

/// Layered diagram with layer 0 the socle and arrows pointing from each layer
/// toward the one below it.
struct SocleDiagram {
    std::vector<std::vector<IrrLabel>> layers;
    std::vector<std::pair<IrrLabel, IrrLabel>> arrows;  // (upper, lower)

    bool operator==(const SocleDiagram&) const = default;
    std::string str() const;
};

/// Socle filtration of the i-th minimal principal series.
SocleDiagram ps_socle(const InfCharacter& lam, int i);

}  // namespace spinwhit
