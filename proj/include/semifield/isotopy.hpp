#pragma once

// Isotopy-invariant fingerprints, isotopism verification (pointwise and via
// the spread-set identity C2 = g3 C1 g1^{-1}), Knuth-orbit parameter tables,
// and an exhaustive isotopy decision procedure for tiny orders with the
// F_q-semilinearity restriction as a pruning rule.

#include <array>
#include <optional>
#include <string>

#include "semifield/nuclei.hpp"
#include "semifield/presemifield.hpp"

namespace semifield {

/// Isotopy invariants of a presemifield: (p, n), the four orders, and
/// whether this representative has symmetric structure constants.
struct Fingerprint {
    int p = 0;
    int n = 0;
    NucleiOrders orders;
    bool commutative = false;
    bool operator==(const Fingerprint&) const = default;
};

struct IsotopismTriple {
    LinMap g1, g2, g3;
};

Fingerprint fingerprint(const Presemifield& s);

struct Verdict {
    enum class Kind { NotIsotopic, Unknown };
    Kind kind = Kind::Unknown;
    std::string reason;
};

/// NotIsotopic when p, n or any nucleus/center order differs; Unknown
/// otherwise (equal fingerprints never prove isotopy).
Verdict distinguish(const Presemifield& s1, const Presemifield& s2);
Verdict distinguish(const Fingerprint& f1, const Fingerprint& f2);

/// g1(x) *' g2(y) = g3(x * y) checked on all basis pairs, and independently
/// the spread-set identity with the induced middle map; the two routes must
/// agree (Internal error otherwise).
bool verify_isotopism(const Presemifield& s1, const Presemifield& s2, const IsotopismTriple& t);

struct KnuthOrbitRow {
    std::string derivative;  // "", "d", "t", "dt", "td", "dtd"
    Fingerprint fp;
};

struct KnuthOrbitTable {
    std::array<KnuthOrbitRow, 6> rows;
    /// The chain-nuclei order relations and |K|-constancy, evaluated on the
    /// computed fingerprints.
    bool relations_hold = false;
};

KnuthOrbitTable knuth_orbit_table(const Presemifield& s);

struct BruteResult {
    enum class Kind { Isotopic, NotIsotopic, BudgetExceeded };
    Kind kind = Kind::NotIsotopic;
    std::optional<IsotopismTriple> triple;
    long long pairs_examined = 0;
};

/// Exhaustive search for an isotopism. g1 runs over invertible matrices in
/// row-major encoding order; for each g1 the spread-set identity forces
/// g3 = h g1 phi_{e_1}^{-1} with h a nonzero spread element of s2, so g3
/// candidates are enumerated directly (in g3-encoding order, preserving the
/// plain enumeration order of certified pairs). g2 is always the induced map.
/// When both spread sets are F_q-linear for a common q > p, g1 is restricted
/// to F_q-semilinear maps. budget <= 0 means unlimited.
BruteResult brute_isotopy(const Presemifield& s1, const Presemifield& s2, long long budget = 0);

}  // namespace semifield
