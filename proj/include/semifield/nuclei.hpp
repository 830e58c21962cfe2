#pragma once

// Nuclei and center of a presemifield via the spread-set idealizer
// characterizations, plus a definition-based oracle on semifields.
//
// Right nucleus: largest field N with N C <= C; middle: C N <= C; left: the
// right-style computation on the dual spread set. The center is cut out of
// the right (or middle) nucleus by the twisted commutation condition
// rho phi = phi (omega^{-1} rho omega) for a fixed invertible omega in C.

#include <array>
#include <string>

#include "semifield/presemifield.hpp"

namespace semifield {

enum class CenterSide { Right, Middle };

struct NucleiOrders {
    long long left = 0;
    long long middle = 0;
    long long right = 0;
    long long center = 0;
    bool operator==(const NucleiOrders&) const = default;
};

struct NucleiReport {
    MapSpace left;
    MapSpace middle;
    MapSpace right;
    MapSpace center;
    NucleiOrders orders;
    /// (p, n, |N_l|, |N_m|, |N_r|, |K|)
    std::array<long long, 6> fingerprint;
};

/// {mu : mu o phi in span(C) for every basis map phi}; automatically the
/// largest field with N C <= C (the field property is re-checked by
/// nuclei_report).
MapSpace right_nucleus(const SpreadSet& c);
/// {mu : phi o mu in span(C) for every basis map phi}.
MapSpace middle_nucleus(const SpreadSet& c);
/// Right-style idealizer of the dual spread set.
MapSpace left_nucleus(const Presemifield& s);

/// Default omega/sigma: the spread map of the smallest-enc nonzero element.
LinMap default_center_pivot(const Presemifield& s);

/// Largest field inside the right (resp. middle) nucleus satisfying the
/// twisted commutation condition for the given invertible spread element.
MapSpace center(const Presemifield& s, const LinMap& omega, CenterSide side);
MapSpace center(const Presemifield& s);

/// Runs all four computations (default pivot, right side for the center) and
/// verifies the field-closure invariants of every space before returning.
NucleiReport nuclei_report(const Presemifield& s);

/// Definition-based oracle: requires a two-sided identity (semifield-ize
/// first otherwise). Nucleus membership is tested by the associativity
/// definition over basis pairs; element sets are converted to map spaces via
/// the spread set. Throws NoIdentity when the input is a proper presemifield.
NucleiReport oracle_nuclei(const Presemifield& s);

/// Exhaustive field-property verification of a candidate nucleus space:
/// every nonzero combination invertible, closed under composition on basis
/// pairs. Throws Internal on violation.
void verify_nucleus_space(const MapSpace& space, const std::string& what);

}  // namespace semifield
