#include "semifield/linmap.hpp"

namespace semifield {

using fpla::norm_mod;

std::vector<int> LinMap::apply(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != n) fail(Errc::DimensionMismatch, "vector length mismatch");
    std::vector<int> y(n, 0);
    for (int c = 0; c < n; ++c) {
        if (x[c] == 0) continue;
        for (int r = 0; r < n; ++r) {
            y[r] = norm_mod(y[r] + static_cast<long long>(x[c]) * at(r, c), p);
        }
    }
    return y;
}

LinMap zero_map(int p, int n) {
    return LinMap{p, n, std::vector<int>(static_cast<size_t>(n) * n, 0), std::nullopt};
}

LinMap identity_map(int p, int n) {
    LinMap f = zero_map(p, n);
    for (int i = 0; i < n; ++i) f.at(i, i) = 1;
    return f;
}

LinMap map_from_matrix(int p, int n, std::vector<int> rows) {
    if (static_cast<int>(rows.size()) != n * n) fail(Errc::DimensionMismatch, "matrix data length mismatch");
    for (int& v : rows) v = norm_mod(v, p);
    return LinMap{p, n, std::move(rows), std::nullopt};
}

namespace {
void require_same_carrier(const LinMap& f, const LinMap& g) {
    if (f.p != g.p || f.n != g.n) fail(Errc::CarrierMismatch, "maps live on different carriers");
}
}  // namespace

LinMap add(const LinMap& f, const LinMap& g) {
    require_same_carrier(f, g);
    LinMap r = zero_map(f.p, f.n);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = norm_mod(f.a[i] + g.a[i], f.p);
    return r;
}

LinMap scale(int c, const LinMap& f) {
    LinMap r = zero_map(f.p, f.n);
    c = norm_mod(c, f.p);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = norm_mod(static_cast<long long>(c) * f.a[i], f.p);
    return r;
}

LinMap compose(const LinMap& f, const LinMap& g) {
    require_same_carrier(f, g);
    int n = f.n, p = f.p;
    LinMap r = zero_map(p, n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            int v = f.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) {
                r.at(i, j) = norm_mod(r.at(i, j) + static_cast<long long>(v) * g.at(k, j), p);
            }
        }
    }
    return r;
}

LinMap invert(const LinMap& f) {
    auto inv = fpla::inverse(fpla::Mat(f.n, f.n, f.a), f.p);
    if (!inv) fail(Errc::Singular, "map is not invertible");
    return LinMap{f.p, f.n, inv->a, std::nullopt};
}

int rank(const LinMap& f) { return fpla::rank(fpla::Mat(f.n, f.n, f.a), f.p); }

bool is_invertible(const LinMap& f) { return rank(f) == f.n; }

long long matrix_encoding(const LinMap& f) {
    long long v = 0;
    for (size_t i = f.a.size(); i-- > 0;) v = v * f.p + f.a[i];
    return v;
}

LinMap matrix_from_encoding(int p, int n, long long enc) {
    LinMap f = zero_map(p, n);
    for (size_t i = 0; i < f.a.size(); ++i) {
        f.a[i] = static_cast<int>(enc % p);
        enc /= p;
    }
    return f;
}

LinMap from_qpoly(const FieldCtx& ctx, const std::vector<FElem>& coeffs) {
    int n = ctx.n();
    if (static_cast<int>(coeffs.size()) != n) fail(Errc::LengthMismatch, "expected n q-polynomial coefficients");
    LinMap f = zero_map(ctx.p(), n);
    for (int j = 0; j < n; ++j) {
        FElem img = ctx.zero();
        for (int i = 0; i < n; ++i) {
            if (ctx.is_zero(coeffs[i])) continue;
            img = ctx.add(img, ctx.mul(coeffs[i], ctx.frobenius(ctx.basis_elem(j), i)));
        }
        for (int r = 0; r < n; ++r) f.at(r, j) = img.c[r];
    }
    f.qpoly = coeffs;
    return f;
}

LinMap scalar_map(const FieldCtx& ctx, const FElem& lambda) {
    std::vector<FElem> coeffs(ctx.n(), ctx.zero());
    coeffs[0] = lambda;
    return from_qpoly(ctx, coeffs);
}

std::vector<FElem> qpoly_of(const FieldCtx& ctx, const LinMap& f) {
    int n = ctx.n();
    int p = ctx.p();
    if (f.n != n || f.p != p) fail(Errc::CarrierMismatch, "map does not act on this field");
    // Unknowns b_{i,c}: coordinate c of coefficient beta_i. Equations: for each
    // basis index j and coordinate r, sum_i coord_r(beta_i e_j^{p^i}) = f[r][j].
    fpla::Mat sys(n * n, n * n);
    std::vector<int> rhs(static_cast<size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            FElem fr = ctx.frobenius(ctx.basis_elem(j), i);
            for (int c = 0; c < n; ++c) {
                FElem w = ctx.mul(ctx.basis_elem(c), fr);
                for (int r = 0; r < n; ++r) {
                    sys.at(j * n + r, i * n + c) = w.c[r];
                }
            }
        }
        for (int r = 0; r < n; ++r) rhs[static_cast<size_t>(j) * n + r] = f.at(r, j);
    }
    auto sol = fpla::solve(std::move(sys), std::move(rhs), p);
    if (!sol) fail(Errc::Internal, "q-polynomial recovery failed");
    std::vector<FElem> coeffs(n, ctx.zero());
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < n; ++c) coeffs[i].c[c] = (*sol)[static_cast<size_t>(i) * n + c];
    }
    return coeffs;
}

LinMap adjoint_wrt(const LinMap& f, const std::vector<int>& gram, const std::vector<int>& gram_inv) {
    int n = f.n, p = f.p;
    if (static_cast<int>(gram.size()) != n * n) fail(Errc::DimensionMismatch, "Gram matrix size mismatch");
    fpla::Mat ft(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) ft.at(r, c) = f.at(c, r);
    }
    fpla::Mat res = fpla::mul(fpla::Mat(n, n, gram_inv), fpla::mul(ft, fpla::Mat(n, n, gram), p), p);
    return LinMap{p, n, res.a, std::nullopt};
}

LinMap adjoint(const FieldCtx& ctx, const LinMap& f) {
    int n = ctx.n();
    if (f.n != n || f.p != ctx.p()) fail(Errc::CarrierMismatch, "map does not act on this field");
    LinMap out = adjoint_wrt(f, ctx.gram(), ctx.gram_inv());
    if (f.qpoly) {
        std::vector<FElem> adj(n, ctx.zero());
        for (int i = 0; i < n; ++i) {
            int j = (n - i) % n;
            adj[j] = ctx.frobenius((*f.qpoly)[i], j);
        }
        out.qpoly = std::move(adj);
    }
    return out;
}

std::vector<std::vector<int>> nullspace(int p, const fpla::Mat& rows) {
    return fpla::nullspace(rows, p);
}

MapSpace::MapSpace(int p, int n, std::vector<LinMap> basis) : p_(p), n_(n), basis_(std::move(basis)) {
    int k = static_cast<int>(basis_.size());
    fpla::Mat flat(k, n * n);
    for (int r = 0; r < k; ++r) {
        const LinMap& m = basis_[r];
        if (m.p != p || m.n != n) fail(Errc::CarrierMismatch, "basis map on wrong carrier");
        for (int i = 0; i < n * n; ++i) flat.at(r, i) = m.a[i];
    }
    echelon_ = flat;
    int rk = fpla::rref_with_transform(echelon_, p, &pivots_, transform_);
    if (rk != k) fail(Errc::DimensionMismatch, "basis maps are linearly dependent");
}

long long MapSpace::size() const {
    long long s = 1;
    for (int i = 0; i < dim(); ++i) s *= p_;
    return s;
}

std::optional<std::vector<int>> MapSpace::membership(const LinMap& f) const {
    if (f.p != p_ || f.n != n_) fail(Errc::CarrierMismatch, "map on wrong carrier");
    std::vector<int> v = f.a;
    int k = dim();
    std::vector<int> ech_coords(k, 0);
    for (int r = 0; r < k; ++r) {
        int c = v[pivots_[r]];
        ech_coords[r] = c;
        if (c == 0) continue;
        for (int i = pivots_[r]; i < n_ * n_; ++i) {
            v[i] = norm_mod(v[i] - static_cast<long long>(c) * echelon_.at(r, i), p_);
        }
    }
    for (int x : v) {
        if (x != 0) return std::nullopt;
    }
    // coords in the original basis via the recorded transform
    std::vector<int> coords(k, 0);
    for (int r = 0; r < k; ++r) {
        if (ech_coords[r] == 0) continue;
        for (int c = 0; c < k; ++c) {
            coords[c] = norm_mod(coords[c] + static_cast<long long>(ech_coords[r]) * transform_.at(r, c), p_);
        }
    }
    return coords;
}

LinMap MapSpace::combine(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != dim()) fail(Errc::LengthMismatch, "coordinate count mismatch");
    LinMap acc = zero_map(p_, n_);
    for (int i = 0; i < dim(); ++i) {
        if (norm_mod(coords[i], p_) == 0) continue;
        acc = add(acc, scale(coords[i], basis_[i]));
    }
    return acc;
}

bool MapSpace::same_space(const MapSpace& o) const {
    return p_ == o.p_ && n_ == o.n_ && echelon_ == o.echelon_;
}

MapSpace MapSpace::conjugate(const LinMap& g) const {
    LinMap gi = invert(g);
    std::vector<LinMap> conj;
    conj.reserve(basis_.size());
    for (const LinMap& m : basis_) conj.push_back(compose(g, compose(m, gi)));
    return MapSpace(p_, n_, std::move(conj));
}

}  // namespace semifield
