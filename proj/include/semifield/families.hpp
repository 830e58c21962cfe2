#pragma once

// Validated constructors for the commutative presemifield families, each
// implementing its multiplication formula and admissibility conditions.
// Defaults for the free constants (primitive element u, nonsquares j/beta/
// alpha, omega) are the deterministic smallest valid choices; all are
// overridable since the underlying theorems hold for every valid choice.

#include <optional>
#include <string>

#include "semifield/presemifield.hpp"

namespace semifield {
namespace families {

/// Dickson: GF(q^k) x GF(q^k), (a,b)*(c,d) = (ac + j b^s d^s, ad + bc) with
/// sigma = x^{q^sigma_exp} != id and j a nonsquare. q odd, k > 1 odd.
Presemifield dickson(int q, int k, int sigma_exp, std::optional<long long> j_enc = std::nullopt);

/// Generalized twisted field: GF(q^t), x*y = x^A y + x y^A with
/// A = x^{q^n_exp}; Fix(A) = F_q and t/gcd(t, n_exp) odd.
Presemifield gtf(int q, int t, int n_exp);

/// Ganley: GF(3^r) x GF(3^r), (ac - b^9 d - b d^9, ad + bc + b^3 d^3), r >= 3 odd.
Presemifield ganley(int r);

/// Cohen-Ganley: GF(3^s) x GF(3^s), (ac + j bd + j^3 (bd)^9, ad + bc + j (bd)^3),
/// s >= 3, j nonsquare.
Presemifield cohen_ganley(int s, std::optional<long long> j_enc = std::nullopt);

/// Coulter-Matthews / Ding-Yuan: GF(3^e), x^9 y + x y^9 +/- 2 x^3 y^3 - 2xy,
/// e >= 3 odd. plus_sign selects the +2 variant.
Presemifield cmdy(int e, bool plus_sign);

/// Penttila-Williams / Bader-Lunardon-Pinneri: GF(3^5) x GF(3^5),
/// (ac + (bd)^9, ad + bc + (bd)^27).
Presemifield pwblp();

/// Coulter-Henderson-Kosick: GF(3^8) with L(x) = x^{3^5} + x^{3^2}.
Presemifield chk();

/// Zha-Kyureghyan-Wang: GF(q^{3h}), h odd, 0 < n_exp < 3h, gcd(h, n_exp) = 1,
/// and h + n_exp = 0 (mod 3) or q = 1 (mod 3). u primitive, v = u^{q^h - 1}.
Presemifield zkw(int q, int h, int n_exp, std::optional<long long> u_enc = std::nullopt);

/// Bierbrauer: GF(q^{4m}), q = 1 (mod 4), m odd, n_exp even, 0 < n_exp < 4m,
/// gcd(m, n_exp) = 1, 2m/gcd(2m, n_exp) odd.
Presemifield bierbrauer(int q, int m, int n_exp, std::optional<long long> u_enc = std::nullopt);

/// Budaghyan-Helleseth: GF(q^{2l}), l > 1, 0 < d < 2l, gcd(l, d) = 1,
/// l + d odd, beta nonsquare, omega^{q^l} = -omega.
Presemifield bh(int q, int l, int d, std::optional<long long> beta_enc = std::nullopt,
                std::optional<long long> omega_enc = std::nullopt);

/// LMPTB / P(q, l): GF(q^{2l}), l = 2k+1 > 1 odd.
Presemifield lmptb(int q, int l);

/// ZP: GF(q^l) x GF(q^l), (a c^{q^n} + a^{q^n} c + alpha (b d^{q^n} + b^{q^n} d)^sigma, ad + bc)
/// with sigma = x^{q^t}, gcd(l, n, t) = 1, l/gcd(l, n) odd, alpha nonsquare, l > 2.
/// Conditions are taken verbatim from the summary table; treat as experimental.
Presemifield zp(int q, int l, int n_exp, int t_exp, std::optional<long long> alpha_enc = std::nullopt);

/// (p, s, t) -> (q = p^g, h = s/g, n = t/g) with g = gcd(s, t).
struct ZkwParams {
    int q, h, n;
};
ZkwParams zkw_normalize(int p, int s, int t);

/// (p, s, t) -> (q = p^g, m = s/g, n = t/g) with g = gcd(s, t).
struct BierbrauerParams {
    int q, m, n;
};
BierbrauerParams bierbrauer_normalize(int p, int s, int t);

/// (p, m, s) -> (q = p^h, l = m/h, d = s/h) with h = gcd(m, s).
struct BhParams {
    int q, l, d;
};
BhParams bh_normalize(int p, int m, int s);

}  // namespace families
}  // namespace semifield
