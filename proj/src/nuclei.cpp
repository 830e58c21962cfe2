#include "semifield/nuclei.hpp"

namespace semifield {

using fpla::norm_mod;

namespace {

// Linear conditions "v lies in span(C)" on a flattened endomorphism v: for
// every non-pivot column c of the spread echelon E, v[c] = sum_r E_r[c] v[p_r].
// The idealizer systems instantiate v = vec(mu o phi_j) (right) or
// vec(phi_j o mu) (middle) with mu unknown.
enum class Side { Left, Right };  // which side mu composes on

MapSpace idealizer(int p, int n, const std::vector<LinMap>& basis_maps, Side mu_side) {
    // echelon data of the spread space, used as the complement projector
    fpla::Mat ech(static_cast<int>(basis_maps.size()), n * n);
    for (size_t r = 0; r < basis_maps.size(); ++r) {
        for (int i = 0; i < n * n; ++i) ech.at(static_cast<int>(r), i) = basis_maps[r].a[i];
    }
    std::vector<int> pivots;
    fpla::rref(ech, p, &pivots);
    std::vector<int> pivot_row(n * n, -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);

    int conditions_per_map = n * n - static_cast<int>(pivots.size());
    fpla::Mat sys(static_cast<int>(basis_maps.size()) * conditions_per_map, n * n);

    int row = 0;
    for (const LinMap& phi : basis_maps) {
        for (int cc = 0; cc < n * n; ++cc) {
            if (pivot_row[cc] >= 0) continue;
            int a0 = cc / n, b0 = cc % n;
            // coefficient of mu[a][s] in (v[cc] - sum_r E_r[cc] v[pivot_r])
            for (int a = 0; a < n; ++a) {
                for (int s = 0; s < n; ++s) {
                    long long coeff = 0;
                    if (mu_side == Side::Left) {
                        // v = vec(mu o phi): v[a',b'] = sum_s mu[a'][s] phi[s][b']
                        if (a == a0) coeff += phi.at(s, b0);
                        for (size_t r = 0; r < pivots.size(); ++r) {
                            int pr = pivots[r];
                            int ar = pr / n, br = pr % n;
                            if (a == ar) coeff -= static_cast<long long>(ech.at(static_cast<int>(r), cc)) * phi.at(s, br);
                        }
                    } else {
                        // v = vec(phi o mu): v[a',b'] = sum_s phi[a'][s] mu[s][b']
                        if (s == b0) coeff += phi.at(a0, a);
                        for (size_t r = 0; r < pivots.size(); ++r) {
                            int pr = pivots[r];
                            int ar = pr / n, br = pr % n;
                            if (s == br) coeff -= static_cast<long long>(ech.at(static_cast<int>(r), cc)) * phi.at(ar, a);
                        }
                    }
                    sys.at(row, a * n + s) = norm_mod(coeff, p);
                }
            }
            ++row;
        }
    }

    auto null_basis = fpla::nullspace(std::move(sys), p);
    std::vector<LinMap> maps;
    maps.reserve(null_basis.size());
    for (auto& v : null_basis) maps.push_back(map_from_matrix(p, n, std::move(v)));
    return MapSpace(p, n, std::move(maps));
}

}  // namespace

MapSpace right_nucleus(const SpreadSet& c) { return idealizer(c.p(), c.n(), c.basis_maps(), Side::Left); }

MapSpace middle_nucleus(const SpreadSet& c) { return idealizer(c.p(), c.n(), c.basis_maps(), Side::Right); }

MapSpace left_nucleus(const Presemifield& s) {
    SpreadSet dual_spread = s.dual().spread_set();
    return idealizer(s.p(), s.dim(), dual_spread.basis_maps(), Side::Left);
}

LinMap default_center_pivot(const Presemifield& s) {
    std::vector<int> y0(s.dim(), 0);
    y0[0] = 1;  // enc 1, the smallest nonzero encoding
    return s.spread_set().lookup(y0);
}

MapSpace center(const Presemifield& s, const LinMap& omega, CenterSide side) {
    int p = s.p();
    int n = s.dim();
    SpreadSet c = s.spread_set();
    if (!c.space().contains(omega)) fail(Errc::NotInSpreadSet, "pivot must lie in the spread set");
    if (!is_invertible(omega)) fail(Errc::NotInvertible, "pivot must be invertible");
    LinMap omega_inv = invert(omega);

    MapSpace nucleus = (side == CenterSide::Right) ? right_nucleus(c) : middle_nucleus(c);
    int d = nucleus.dim();

    // Conditions inside the nucleus space: for each basis map phi and nucleus
    // basis mu_t, the twisted commutator must vanish.
    fpla::Mat sys(n * n * n, d);
    int row_base = 0;
    for (const LinMap& phi : c.basis_maps()) {
        for (int t = 0; t < d; ++t) {
            const LinMap& mu = nucleus.basis()[t];
            LinMap lhs, rhs;
            if (side == CenterSide::Right) {
                lhs = compose(mu, phi);
                rhs = compose(phi, compose(omega_inv, compose(mu, omega)));
            } else {
                lhs = compose(phi, mu);
                rhs = compose(compose(omega_inv, compose(mu, omega)), phi);
            }
            for (int idx = 0; idx < n * n; ++idx) {
                sys.at(row_base + idx, t) = norm_mod(lhs.a[idx] - rhs.a[idx], p);
            }
        }
        row_base += n * n;
    }

    auto null_basis = fpla::nullspace(std::move(sys), p);
    std::vector<LinMap> maps;
    maps.reserve(null_basis.size());
    for (const auto& coords : null_basis) maps.push_back(nucleus.combine(coords));
    // re-echelon for a canonical basis
    fpla::Mat flat(static_cast<int>(maps.size()), n * n);
    for (size_t r = 0; r < maps.size(); ++r) {
        for (int i = 0; i < n * n; ++i) flat.at(static_cast<int>(r), i) = maps[r].a[i];
    }
    fpla::rref(flat, p, nullptr);
    std::vector<LinMap> canon;
    canon.reserve(maps.size());
    for (size_t r = 0; r < maps.size(); ++r) {
        std::vector<int> m(flat.a.begin() + static_cast<long>(r) * n * n,
                           flat.a.begin() + static_cast<long>(r + 1) * n * n);
        canon.push_back(map_from_matrix(p, n, std::move(m)));
    }
    return MapSpace(p, n, std::move(canon));
}

MapSpace center(const Presemifield& s) { return center(s, default_center_pivot(s), CenterSide::Right); }

void verify_nucleus_space(const MapSpace& space, const std::string& what) {
    if (space.dim() == 0) fail(Errc::Internal, what + ": nucleus space is empty");
    auto witness = first_singular_combination(space.p(), space.n(), space.basis());
    if (witness) {
        fail(Errc::Internal, what + ": nucleus space contains a singular nonzero map");
    }
    for (const LinMap& f : space.basis()) {
        for (const LinMap& g : space.basis()) {
            if (!space.contains(compose(f, g))) {
                fail(Errc::Internal, what + ": nucleus space not closed under composition");
            }
        }
    }
}

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

NucleiReport assemble_report(const Presemifield& s, MapSpace left, MapSpace middle, MapSpace right,
                             MapSpace k) {
    verify_nucleus_space(left, "left");
    verify_nucleus_space(middle, "middle");
    verify_nucleus_space(right, "right");
    verify_nucleus_space(k, "center");
    int n = s.dim();
    if (k.dim() > std::min(right.dim(), middle.dim())) {
        fail(Errc::Internal, "center exceeds a nucleus");
    }
    for (int d : {left.dim(), middle.dim(), right.dim(), k.dim()}) {
        if (d == 0 || n % d != 0) fail(Errc::Internal, "nucleus dimension does not divide n");
    }
    NucleiOrders orders{pow_ll(s.p(), left.dim()), pow_ll(s.p(), middle.dim()),
                        pow_ll(s.p(), right.dim()), pow_ll(s.p(), k.dim())};
    std::array<long long, 6> fp{s.p(), n, orders.left, orders.middle, orders.right, orders.center};
    return NucleiReport{std::move(left), std::move(middle), std::move(right), std::move(k), orders, fp};
}

}  // namespace

NucleiReport nuclei_report(const Presemifield& s) {
    SpreadSet c = s.spread_set();
    MapSpace right = right_nucleus(c);
    MapSpace middle = middle_nucleus(c);
    MapSpace left = left_nucleus(s);
    MapSpace k = center(s);
    return assemble_report(s, std::move(left), std::move(middle), std::move(right), std::move(k));
}

NucleiReport oracle_nuclei(const Presemifield& s) {
    auto ident = s.identity_element();
    if (!ident) fail(Errc::NoIdentity, "oracle needs a two-sided identity; semifield-ize first");

    int n = s.dim();
    int p = s.p();
    long long order = s.order();
    const Carrier& car = s.carrier();

    std::vector<std::vector<int>> basis_vecs(n);
    for (int i = 0; i < n; ++i) {
        basis_vecs[i].assign(n, 0);
        basis_vecs[i][i] = 1;
    }

    // Associativity of (a, b, c) is additive in each slot, so membership is
    // decided on basis pairs of the two quantified slots.
    auto in_left = [&](const std::vector<int>& a) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                auto lhs = s.mult(s.mult(a, basis_vecs[i]), basis_vecs[j]);
                auto rhs = s.mult(a, s.mult(basis_vecs[i], basis_vecs[j]));
                if (lhs != rhs) return false;
            }
        }
        return true;
    };
    auto in_middle = [&](const std::vector<int>& b) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                auto lhs = s.mult(s.mult(basis_vecs[i], b), basis_vecs[j]);
                auto rhs = s.mult(basis_vecs[i], s.mult(b, basis_vecs[j]));
                if (lhs != rhs) return false;
            }
        }
        return true;
    };
    auto in_right = [&](const std::vector<int>& c) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                auto lhs = s.mult(s.mult(basis_vecs[i], basis_vecs[j]), c);
                auto rhs = s.mult(basis_vecs[i], s.mult(basis_vecs[j], c));
                if (lhs != rhs) return false;
            }
        }
        return true;
    };
    auto commutes = [&](const std::vector<int>& a) {
        for (int i = 0; i < n; ++i) {
            if (s.mult(a, basis_vecs[i]) != s.mult(basis_vecs[i], a)) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> left_set, middle_set, right_set, center_set;
    for (long long e = 0; e < order; ++e) {
        std::vector<int> v = car.from_enc(e);
        bool l = in_left(v), m = in_middle(v), r = in_right(v);
        if (l) left_set.push_back(v);
        if (m) middle_set.push_back(v);
        if (r) right_set.push_back(v);
        if (l && m && r && commutes(v)) center_set.push_back(v);
    }

    SpreadSet c = s.spread_set();
    SpreadSet cd = s.dual().spread_set();
    auto to_space = [&](const std::vector<std::vector<int>>& elems, const SpreadSet& sp) {
        fpla::Mat m(static_cast<int>(elems.size()), n);
        for (size_t r = 0; r < elems.size(); ++r) {
            for (int i = 0; i < n; ++i) m.at(static_cast<int>(r), i) = elems[r][i];
        }
        std::vector<int> pivots;
        int rk = fpla::rref(m, p, &pivots);
        std::vector<LinMap> maps;
        maps.reserve(rk);
        for (int r = 0; r < rk; ++r) {
            std::vector<int> coords(n);
            for (int i = 0; i < n; ++i) coords[i] = m.at(r, i);
            maps.push_back(sp.lookup(coords));
        }
        return MapSpace(p, n, std::move(maps));
    };

    // left-nucleus elements act from the left, i.e. inside the dual spread
    MapSpace left = to_space(left_set, cd);
    MapSpace middle = to_space(middle_set, c);
    MapSpace right = to_space(right_set, c);
    MapSpace k = to_space(center_set, c);
    return assemble_report(s, std::move(left), std::move(middle), std::move(right), std::move(k));
}

}  // namespace semifield
