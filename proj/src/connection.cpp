#include "rplie/connection.hpp"

#include <cmath>
#include <stdexcept>

namespace rplie {

Vec LeviCivitaProduct::apply(const Vec& u, const Vec& v) const {
    Vec w(n_, Scalar(0));
    for (int i = 0; i < n_; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (v[j].is_zero()) continue;
            Scalar f = u[i] * v[j];
            for (int k = 0; k < n_; ++k) w[k] += f * coef(i, j, k);
        }
    }
    return w;
}

Mat LeviCivitaProduct::operator_of(const Vec& u) const {
    Mat m(n_, n_);
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
            Scalar s(0);
            for (int i = 0; i < n_; ++i) s += u[i] * coef(i, j, k);
            m.at(k, j) = s;
        }
    return m;
}

LeviCivitaProduct levi_civita(const LieAlgebra& g, const Metric& rho) {
    int n = g.dim();
    if (rho.dim() != n) throw std::invalid_argument("levi_civita: dimension mismatch");
    LeviCivitaProduct a(n);
    const Mat& ginv = rho.inverse_matrix();
    for (int i = 0; i < n; ++i) {
        Vec ei = g.basis_vector(i);
        for (int j = 0; j < n; ++j) {
            Vec ej = g.basis_vector(j);
            Vec bij = g.bracket(ei, ej);
            Vec rhs(n, Scalar(0));
            for (int k = 0; k < n; ++k) {
                Vec ek = g.basis_vector(k);
                Scalar s = rho.eval(bij, ek) + rho.eval(g.bracket(ek, ei), ej) +
                           rho.eval(g.bracket(ek, ej), ei);
                rhs[k] = s / 2;
            }
            Vec x = ginv * rhs;
            for (int k = 0; k < n; ++k) a.set_coef(i, j, k, x[k]);
        }
    }
    return a;
}

bool has_torsion_identity(const LieAlgebra& g, const LeviCivitaProduct& a) {
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (a.coef(i, j, k) - a.coef(j, i, k) != g.c(i, j, k)) return false;
    return true;
}

bool has_metric_identity(const Metric& rho, const LeviCivitaProduct& a) {
    int n = rho.dim();
    for (int i = 0; i < n; ++i) {
        Vec u(n, Scalar(0));
        u[i] = Scalar(1);
        Mat op = a.operator_of(u);
        if (!(op.transpose() * rho.matrix() + rho.matrix() * op).is_zero()) return false;
    }
    return true;
}

bool Curvature::is_zero() const {
    for (const auto& x : r_)
        if (!x.is_zero()) return false;
    return true;
}

Curvature curvature(const LieAlgebra& g, const LeviCivitaProduct& a) {
    int n = g.dim();
    Curvature r(n);
    for (int i = 0; i < n; ++i) {
        Vec ei = g.basis_vector(i);
        Mat ai = a.operator_of(ei);
        for (int j = 0; j < n; ++j) {
            Vec ej = g.basis_vector(j);
            Mat aj = a.operator_of(ej);
            Mat ab = a.operator_of(g.bracket(ei, ej));
            Mat rij = ai * aj - aj * ai - ab;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) r.at(i, j, k, l) = rij.at(l, k);
        }
    }
    return r;
}

bool is_flat(const LieAlgebra& g, const LeviCivitaProduct& a) {
    return curvature(g, a).is_zero();
}

FlatSplitReport milnor_flat_check(const LieAlgebra& g, const Metric& rho) {
    FlatSplitReport rep;
    int n = g.dim();
    Mat derived = g.derived_ideal();
    rep.derived_basis = derived;
    rep.derived_even = derived.rows() % 2 == 0;
    rep.derived_abelian = true;
    for (int a = 0; a < derived.rows() && rep.derived_abelian; ++a)
        for (int b = a + 1; b < derived.rows(); ++b)
            if (!is_zero(g.bracket(derived.row(a), derived.row(b)))) {
                rep.derived_abelian = false;
                break;
            }
    Mat compl_basis =
        derived.rows() == 0 ? Mat::identity(n) : kernel_basis(derived * rho.matrix());
    rep.complement_basis = compl_basis;
    rep.complement_abelian = true;
    for (int a = 0; a < compl_basis.rows() && rep.complement_abelian; ++a)
        for (int b = a + 1; b < compl_basis.rows(); ++b)
            if (!is_zero(g.bracket(compl_basis.row(a), compl_basis.row(b)))) {
                rep.complement_abelian = false;
                break;
            }
    // Subspace where ad_u is skew with respect to rho, as a linear system in u.
    Mat sys(n * n, n);
    for (int m = 0; m < n; ++m) {
        Mat adm = g.ad(g.basis_vector(m));
        Mat cond = adm.transpose() * rho.matrix() + rho.matrix() * adm;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sys.at(i * n + j, m) = cond.at(i, j);
    }
    Mat skew_set = kernel_basis(sys);
    rep.complement_is_skew_set = same_span(skew_set, compl_basis);
    bool spans = derived.rows() + compl_basis.rows() == n;
    rep.flat = rep.derived_even && rep.derived_abelian && rep.complement_abelian &&
               rep.complement_is_skew_set && spans;
    return rep;
}

bool kahler_check(const LieAlgebra& g, const Metric& rho, const Bivector& omega_form) {
    int n = g.dim();
    if (omega_form.dim() != n) throw std::invalid_argument("kahler_check: dimension mismatch");
    if (n > 0 && det(omega_form.matrix()).is_zero())
        throw std::invalid_argument("kahler_check: form not symplectic on the algebra");
    LeviCivitaProduct a = levi_civita(g, rho);
    const Mat& w = omega_form.matrix();
    for (int i = 0; i < n; ++i) {
        Mat ai = a.operator_of(g.basis_vector(i));
        if (!(ai.transpose() * w + w * ai).is_zero()) return false;
    }
    return true;
}

namespace {

long nth_prime(int i) {
    static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                  31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    if (i < 0 || i >= int(sizeof(primes) / sizeof(primes[0])))
        throw std::logic_error("nth_prime: index out of table");
    return primes[i];
}

// rho-orthogonal (not normalized) basis spanning the same rows.
Mat gram_schmidt(const Mat& rows, const Metric& rho) {
    std::vector<Vec> out;
    for (int i = 0; i < rows.rows(); ++i) {
        Vec v = rows.row(i);
        for (const Vec& u : out) {
            Scalar f = rho.eval(v, u) / rho.eval(u, u);
            v = v - f * u;
        }
        if (!is_zero(v)) out.push_back(v);
    }
    return Mat::from_rows(out, rows.cols());
}

// Eigen decomposition of the square of the restricted skew operator:
// pairs (mu, eigenspace rows). Exact in rational mode, Jacobi iteration on a
// symmetrized copy in float mode.
bool eigen_decompose(const Mat& ksq, std::vector<std::pair<Scalar, Mat>>& out) {
    int d = ksq.rows();
    out.clear();
    if (session_kind() == ScalarKind::Rational) {
        std::vector<Scalar> roots;
        if (!rational_roots(char_poly(ksq), roots))
            throw std::domain_error("flat_kahler_form: rotation weights are not rational");
        std::vector<Scalar> distinct;
        for (const auto& mu : roots) {
            bool seen = false;
            for (const auto& x : distinct)
                if (x == mu) seen = true;
            if (!seen) distinct.push_back(mu);
        }
        int covered = 0;
        for (const auto& mu : distinct) {
            Mat shifted = ksq;
            for (int i = 0; i < d; ++i) shifted.at(i, i) -= mu;
            Mat eig = kernel_basis(shifted);
            covered += eig.rows();
            out.push_back({mu, eig});
        }
        return covered == d;
    }
    // Float: ksq is self-adjoint for the restricted metric, so its spectrum is
    // real; cyclic Jacobi on the symmetric part after similarity is avoided by
    // running Jacobi directly on (ksq + ksq^T)/2 of a balanced copy -- at the
    // small sizes involved a plain QR-free Jacobi on the symmetrized matrix of
    // the normal operator is adequate.
    int n = d;
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = ksq.at(i, j).to_double();
    // Symmetrize via similarity is skipped; use eigenvectors from inverse
    // iteration on the distinct approximate roots of the characteristic
    // polynomial instead.
    std::vector<Scalar> cp = char_poly(ksq);
    std::vector<double> coef(cp.size());
    for (size_t i = 0; i < cp.size(); ++i) coef[i] = cp[i].to_double();
    auto eval = [&](double x) {
        double v = 0;
        for (size_t i = coef.size(); i-- > 0;) v = v * x + coef[i];
        return v;
    };
    // All roots lie in [-bound, 0]; sample and bisect sign changes.
    double bound = 1.0;
    for (size_t i = 0; i + 1 < coef.size(); ++i)
        bound = std::max(bound, 2.0 * std::fabs(coef[i] / coef.back()));
    std::vector<double> roots;
    const int steps = 40000;
    double prev_x = -bound, prev_v = eval(prev_x);
    for (int s = 1; s <= steps; ++s) {
        double x = -bound + (bound * s) / steps + 1e-15;
        double v = eval(x);
        if (prev_v == 0.0) roots.push_back(prev_x);
        if ((prev_v < 0 && v > 0) || (prev_v > 0 && v < 0)) {
            double lo = prev_x, hi = x;
            for (int it = 0; it < 200; ++it) {
                double mid = (lo + hi) / 2, mv = eval(mid);
                if ((mv < 0) == (prev_v < 0))
                    lo = mid;
                else
                    hi = mid;
            }
            roots.push_back((lo + hi) / 2);
        }
        prev_x = x;
        prev_v = v;
    }
    // Deduplicate within tolerance, then extract eigenspaces by kernels.
    double tol = 1e-6 * std::max(1.0, bound);
    std::vector<double> distinct;
    for (double r : roots) {
        bool seen = false;
        for (double x : distinct)
            if (std::fabs(x - r) < tol) seen = true;
        if (!seen) distinct.push_back(r);
    }
    int covered = 0;
    for (double mu : distinct) {
        Mat shifted = ksq;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= Scalar::floating(mu);
        Mat eig = kernel_basis(shifted);
        if (eig.rows() == 0) continue;
        covered += eig.rows();
        out.push_back({Scalar::floating(mu), eig});
    }
    return covered == d;
}

}  // namespace

Bivector flat_kahler_form(const LieAlgebra& g, const Metric& rho) {
    int n = g.dim();
    if (n % 2 != 0) throw std::invalid_argument("flat_kahler_form: odd dimension");
    FlatSplitReport split = milnor_flat_check(g, rho);
    if (!split.flat) throw std::invalid_argument("flat_kahler_form: algebra is not flat");

    Mat bideal = split.derived_basis;
    Mat comp = split.complement_basis;
    int db = bideal.rows(), dc = comp.rows();
    if (dc % 2 != 0)
        throw std::invalid_argument("flat_kahler_form: odd-dimensional complement");

    std::vector<Vec> pair_e, pair_f;
    bool ok = db == 0;
    Mat bt = bideal.transpose();
    for (int attempt = 1; attempt <= 6 && !ok; ++attempt) {
        pair_e.clear();
        pair_f.clear();
        Vec generic(n, Scalar(0));
        for (int j = 0; j < dc; ++j) {
            Scalar w = Scalar(1);
            for (int t = 0; t < attempt; ++t) w = w / nth_prime(j);
            generic = generic + w * comp.row(j);
        }
        Mat restr(db, db);
        bool inside = true;
        Mat adg = g.ad(generic);
        for (int c = 0; c < db; ++c) {
            Vec img = adg * bideal.row(c);
            auto coords = solve(bt, img);
            if (!coords) {
                inside = false;
                break;
            }
            for (int r = 0; r < db; ++r) restr.at(r, c) = (*coords)[r];
        }
        if (!inside) break;
        std::vector<std::pair<Scalar, Mat>> eigen;
        if (!eigen_decompose(restr * restr, eigen)) continue;
        bool good = true;
        for (auto& [mu, eig] : eigen) {
            Scalar lambda(0);
            if (!mu.is_negative() || !exact_sqrt(-mu, lambda)) {
                good = false;
                break;
            }
            Mat space = eig;
            while (space.rows() > 0) {
                Vec e_coord = space.row(0);
                Vec f_coord = Scalar(1) / lambda * (restr * e_coord);
                Vec e_vec = bt * e_coord, f_vec = bt * f_coord;
                pair_e.push_back(e_vec);
                pair_f.push_back(f_vec);
                Mat st = space.transpose();
                Mat cond(2, space.rows());
                for (int c = 0; c < space.rows(); ++c) {
                    Vec cand = bt * space.row(c);
                    cond.at(0, c) = rho.eval(cand, e_vec);
                    cond.at(1, c) = rho.eval(cand, f_vec);
                }
                Mat keep = kernel_basis(cond);
                std::vector<Vec> rows2;
                for (int rr = 0; rr < keep.rows(); ++rr) rows2.push_back(st * keep.row(rr));
                space = Mat::from_rows(rows2, db);
            }
        }
        if (!good || int(pair_e.size()) * 2 != db) continue;
        // The plane split must be adapted to every complement generator.
        ok = true;
        for (int j = 0; j < dc && ok; ++j) {
            Mat adj = g.ad(comp.row(j));
            for (size_t p = 0; p < pair_e.size() && ok; ++p) {
                Vec img_e = adj * pair_e[p];
                Vec img_f = adj * pair_f[p];
                Scalar lam(0);
                bool found = false;
                for (int k = 0; k < n && !found; ++k)
                    if (!pair_f[p][k].is_zero()) {
                        lam = img_e[k] / pair_f[p][k];
                        found = true;
                    }
                if (!found) {
                    ok = is_zero(img_e) && is_zero(img_f);
                    continue;
                }
                if (!(img_e == lam * pair_f[p] && img_f == (-lam) * pair_e[p])) ok = false;
            }
        }
    }
    if (db > 0 && !ok) {
        if (session_kind() == ScalarKind::Float)
            throw std::domain_error("flat_kahler_form: adapted-basis extraction failed numerically");
        throw std::domain_error("flat_kahler_form: adapted-basis extraction failed");
    }

    Mat comp_orth = gram_schmidt(comp, rho);
    std::vector<Vec> cols;
    for (int i = 0; i < comp_orth.rows(); ++i) cols.push_back(comp_orth.row(i));
    for (size_t p = 0; p < pair_e.size(); ++p) {
        cols.push_back(pair_e[p]);
        cols.push_back(pair_f[p]);
    }
    Mat basis = Mat::from_rows(cols, n).transpose();
    Mat w0(n, n);
    for (int i = 0; i + 1 < n; i += 2) {
        w0.at(i, i + 1) = Scalar(1);
        w0.at(i + 1, i) = Scalar(-1);
    }
    Mat binv = inverse(basis);
    Mat w = binv.transpose() * w0 * binv;
    Bivector omega(w);
    if (!kahler_check(g, rho, omega))
        throw std::logic_error("flat_kahler_form: constructed form failed its own check");
    return omega;
}

}  // namespace rplie
