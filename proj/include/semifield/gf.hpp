#pragma once

// Exact arithmetic in GF(p^n) over a fixed polynomial basis 1, x, ..., x^{n-1}.
// Sized for desk-scale experiments (p^n up to a few hundred thousand); every
// operation is exact integer arithmetic mod p.

#include <memory>
#include <optional>
#include <vector>

#include "semifield/errors.hpp"

namespace semifield {

/// Element of GF(p^n) as its coordinate vector over F_p, ascending powers.
struct FElem {
    std::vector<int> c;
    bool operator==(const FElem&) const = default;
};

bool is_prime(long long v);

/// Distinct prime factors of v, ascending.
std::vector<long long> prime_factors(long long v);

/// Immutable field context. Copies are cheap (shared internal tables) and all
/// operations are pure, so one context may be used concurrently.
class FieldCtx {
  public:
    /// Builds GF(p^n). When no modulus is supplied, picks the lexicographically
    /// first monic irreducible polynomial of degree n (ascending coefficient
    /// vectors). Irreducibility of a supplied modulus is checked by exhaustive
    /// factor search.
    static FieldCtx create(int p, int n, std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const;
    int n() const;
    long long order() const;
    /// Ascending coefficients, length n+1, monic.
    const std::vector<int>& modulus() const;

    FElem zero() const;
    FElem one() const;
    /// Embeds an integer via the prime subfield.
    FElem from_int(long long v) const;
    FElem basis_elem(int i) const;

    long long enc(const FElem& x) const;
    FElem from_enc(long long e) const;

    FElem add(const FElem& a, const FElem& b) const;
    FElem sub(const FElem& a, const FElem& b) const;
    FElem neg(const FElem& a) const;
    FElem mul(const FElem& a, const FElem& b) const;
    FElem inv(const FElem& a) const;
    /// x^e. Negative e inverts first; 0^0 = 1 by convention.
    FElem pow(const FElem& x, long long e) const;
    bool is_zero(const FElem& a) const;

    /// x^{p^k}; k is reduced mod n.
    FElem frobenius(const FElem& x, int k) const;
    /// tr_{p^n/p}(x) as an integer in [0, p).
    int trace(const FElem& x) const;
    /// Smallest-enc element of multiplicative order p^n - 1.
    FElem primitive_element() const;
    /// Smallest-enc x with x^{(p^n-1)/2} = -1. Odd p only.
    FElem nonsquare_element() const;
    bool is_square(const FElem& x) const;
    /// True iff x lies in the subfield GF(p^d); requires d | n.
    bool in_subfield(const FElem& x, int d) const;
    long long mult_order(const FElem& x) const;

    /// Gram matrix of the trace form tr(xy) on the polynomial basis (n*n,
    /// row-major) and its inverse; the form is non-degenerate.
    const std::vector<int>& gram() const;
    const std::vector<int>& gram_inv() const;
    /// Matrix of x -> x^{p^k} on the polynomial basis (n*n, row-major,
    /// columns are images of basis vectors).
    const std::vector<int>& frob_matrix(int k) const;

    /// Throws DegreeMismatch unless x has exactly n coordinates in [0, p).
    void check(const FElem& x) const;

    bool same_field(const FieldCtx& other) const;

  private:
    struct Data;
    explicit FieldCtx(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// True iff `poly` (ascending, monic) is irreducible over F_p, by exhaustive
/// search for monic factors of degree <= deg/2.
bool poly_irreducible(const std::vector<int>& poly, int p);

}  // namespace semifield
