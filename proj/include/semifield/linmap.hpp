#pragma once

// F_p-linear endomorphisms of an n-dimensional coordinate space: matrix and
// q-polynomial representations, composition, inversion, adjoints with respect
// to a trace form, and deterministic nullspace solving.

#include <optional>
#include <vector>

#include "semifield/fpla.hpp"
#include "semifield/gf.hpp"

namespace semifield {

/// Endomorphism of F_p^n. Column j of `a` is the image of basis vector e_j.
/// `qpoly` optionally tags the map with coefficients (b_0..b_{n-1}) meaning
/// x -> sum b_i x^{p^i} on a field carrier; equality ignores the tag.
struct LinMap {
    int p = 0;
    int n = 0;
    std::vector<int> a;  // n*n row-major
    std::optional<std::vector<FElem>> qpoly;

    int at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
    int& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }

    std::vector<int> apply(const std::vector<int>& x) const;

    bool operator==(const LinMap& o) const { return p == o.p && n == o.n && a == o.a; }
};

LinMap zero_map(int p, int n);
LinMap identity_map(int p, int n);
LinMap map_from_matrix(int p, int n, std::vector<int> rows);

LinMap add(const LinMap& f, const LinMap& g);
LinMap scale(int c, const LinMap& f);
/// (f o g)(x) = f(g(x)).
LinMap compose(const LinMap& f, const LinMap& g);
LinMap invert(const LinMap& f);
int rank(const LinMap& f);
bool is_invertible(const LinMap& f);

/// Row-major base-p integer encoding of the matrix (entry index as digit
/// position); the enumeration order used by the brute-force isotopy search.
long long matrix_encoding(const LinMap& f);
LinMap matrix_from_encoding(int p, int n, long long enc);

/// Map x -> sum coeffs[i] x^{p^i} on the field carrier of ctx.
LinMap from_qpoly(const FieldCtx& ctx, const std::vector<FElem>& coeffs);
/// Scalar multiplication map t_lambda : x -> lambda x.
LinMap scalar_map(const FieldCtx& ctx, const FElem& lambda);
/// Recovers the unique q-polynomial coefficients of an endomorphism.
std::vector<FElem> qpoly_of(const FieldCtx& ctx, const LinMap& f);

/// Adjoint with respect to the symmetric bilinear form with the given Gram
/// matrix: <x, f(y)> = <adjoint(f)(x), y>. A qpoly tag is transported by the
/// coefficient rule b'_{(n-i) mod n} = b_i^{p^{(n-i) mod n}} (trace form).
LinMap adjoint_wrt(const LinMap& f, const std::vector<int>& gram, const std::vector<int>& gram_inv);
/// Adjoint on the field carrier of ctx under the trace form tr(xy).
LinMap adjoint(const FieldCtx& ctx, const LinMap& f);

/// Reduced-echelon basis of {v : rows v = 0} over F_p; deterministic
/// (first-nonzero pivoting, ascending column order).
std::vector<std::vector<int>> nullspace(int p, const fpla::Mat& rows);

/// F_p-span of linearly independent maps, with membership testing against a
/// precomputed reduced echelon form of the flattened basis.
class MapSpace {
  public:
    MapSpace(int p, int n, std::vector<LinMap> basis);

    int p() const { return p_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    long long size() const;
    const std::vector<LinMap>& basis() const { return basis_; }

    /// Coordinates of f in the stored basis, or nullopt if f is outside.
    std::optional<std::vector<int>> membership(const LinMap& f) const;
    bool contains(const LinMap& f) const { return membership(f).has_value(); }
    LinMap combine(const std::vector<int>& coords) const;

    /// Same subspace of End (identical reduced echelon forms).
    bool same_space(const MapSpace& o) const;
    /// { g o mu o g^{-1} : mu in this }.
    MapSpace conjugate(const LinMap& g) const;

  private:
    int p_, n_;
    std::vector<LinMap> basis_;
    fpla::Mat echelon_;      // dim x n^2, RREF
    std::vector<int> pivots_;
    fpla::Mat transform_;    // echelon = transform * flattened basis
};

}  // namespace semifield
