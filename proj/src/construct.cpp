#include "rplie/construct.hpp"

#include <sstream>
#include <stdexcept>

namespace rplie {

ConstructionData ConstructionData::zero(LieAlgebra h, Metric rho_h, Bivector omega, int p_dim,
                                        Metric rho_p) {
    ConstructionData d{std::move(h), std::move(rho_h), std::move(omega), LieAlgebra(p_dim),
                       std::move(rho_p),
                       {},
                       {},
                       {}};
    d.mu.assign(p_dim, std::vector<Vec>(p_dim, Vec(d.h.dim(), Scalar(0))));
    d.phi_p.assign(p_dim, Mat(d.h.dim(), d.h.dim()));
    d.phi_h.assign(d.h.dim(), Mat(p_dim, p_dim));
    return d;
}

void ConstructionData::set_mu(int a, int b, const Vec& value) {
    if (a == b) throw std::invalid_argument("set_mu: repeated index");
    mu[a][b] = value;
    Vec neg(value.size());
    for (size_t i = 0; i < value.size(); ++i) neg[i] = -value[i];
    mu[b][a] = neg;
}

Mat ConstructionData::phi_p_of(const Vec& p_elt) const {
    Mat m(h.dim(), h.dim());
    for (int i = 0; i < p.dim(); ++i)
        if (!p_elt[i].is_zero()) m = m + phi_p[i].scaled(p_elt[i]);
    return m;
}

Mat ConstructionData::phi_h_of(const Vec& h_elt) const {
    Mat m(p.dim(), p.dim());
    for (int i = 0; i < h.dim(); ++i)
        if (!h_elt[i].is_zero()) m = m + phi_h[i].scaled(h_elt[i]);
    return m;
}

Vec ConstructionData::mu_of(const Vec& a, const Vec& b) const {
    Vec out(h.dim(), Scalar(0));
    for (int i = 0; i < p.dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < p.dim(); ++j) {
            if (b[j].is_zero()) continue;
            out = out + (a[i] * b[j]) * mu[i][j];
        }
    }
    return out;
}

std::optional<std::string> ConstructionData::invariant_violation() const {
    int dh = h.dim(), dp = p.dim();
    if (rho_h.dim() != dh || omega.dim() != dh) return "h block shapes inconsistent";
    if (rho_p.dim() != dp) return "p metric shape inconsistent";
    if (int(phi_p.size()) != dp || int(phi_h.size()) != dh || int(mu.size()) != dp)
        return "map table sizes inconsistent";
    if (det(omega.matrix()).is_zero()) return "omega degenerate";
    const Mat& w = omega.matrix();
    for (int i = 0; i < dp; ++i) {
        if (phi_p[i].rows() != dh || phi_p[i].cols() != dh) return "phi_p shape";
        if (!(phi_p[i].transpose() * w + w * phi_p[i]).is_zero())
            return "phi_p(a" + std::to_string(i + 1) + ") is not omega-skew";
    }
    const Mat& gp = rho_p.matrix();
    for (int i = 0; i < dh; ++i) {
        if (phi_h[i].rows() != dp || phi_h[i].cols() != dp) return "phi_h shape";
        if (!(phi_h[i].transpose() * gp + gp * phi_h[i]).is_zero())
            return "phi_h(e" + std::to_string(i + 1) + ") is not metric-skew";
    }
    for (int a = 0; a < dp; ++a)
        for (int b = 0; b < dp; ++b) {
            if (int(mu[a][b].size()) != dh) return "mu shape";
            if (!(is_zero(mu[a][b] + mu[b][a]))) return "mu not antisymmetric";
        }
    return std::nullopt;
}

EqproReport check_eqpro(const ConstructionData& d) {
    EqproReport rep;
    int dh = d.h.dim(), dp = d.p.dim();
    auto note = [&](int eq, const std::string& where) {
        if (rep.first_failure.empty())
            rep.first_failure = "equation " + std::to_string(eq) + " at " + where;
    };

    // (1) phi_p(a) acts on h-brackets as a derivation twisted by phi_h.
    rep.eq[0] = true;
    for (int a = 0; a < dp; ++a)
        for (int u = 0; u < dh; ++u)
            for (int v = u + 1; v < dh; ++v) {
                Vec eu = d.h.basis_vector(u), ev = d.h.basis_vector(v);
                Vec lhs = d.phi_p[a] * d.h.bracket(eu, ev);
                Vec rhs = d.h.bracket(eu, d.phi_p[a] * ev) + d.h.bracket(d.phi_p[a] * eu, ev) +
                          d.phi_p_of(d.phi_h[v].col(a)) * eu - d.phi_p_of(d.phi_h[u].col(a)) * ev;
                if (!is_zero(lhs - rhs)) {
                    rep.eq[0] = false;
                    note(1, "(a" + std::to_string(a + 1) + ", e" + std::to_string(u + 1) + ", e" +
                                std::to_string(v + 1) + ")");
                }
            }

    // (2) phi_h(u) acts on p-brackets as a derivation twisted by phi_p.
    rep.eq[1] = true;
    for (int u = 0; u < dh; ++u)
        for (int a = 0; a < dp; ++a)
            for (int b = a + 1; b < dp; ++b) {
                Vec ea = d.p.basis_vector(a), eb = d.p.basis_vector(b);
                Vec lhs = d.phi_h[u] * d.p.bracket(ea, eb);
                Vec rhs = d.p.bracket(ea, d.phi_h[u] * eb) + d.p.bracket(d.phi_h[u] * ea, eb) +
                          d.phi_h_of(d.phi_p[b].col(u)) * ea - d.phi_h_of(d.phi_p[a].col(u)) * eb;
                if (!is_zero(lhs - rhs)) {
                    rep.eq[1] = false;
                    note(2, "(e" + std::to_string(u + 1) + ", a" + std::to_string(a + 1) + ", a" +
                                std::to_string(b + 1) + ")");
                }
            }

    // (3) phi_h is a homomorphism on h.
    rep.eq[2] = true;
    for (int u = 0; u < dh; ++u)
        for (int v = u + 1; v < dh; ++v) {
            Mat lhs = d.phi_h_of(d.h.bracket(d.h.basis_vector(u), d.h.basis_vector(v)));
            Mat rhs = d.phi_h[u] * d.phi_h[v] - d.phi_h[v] * d.phi_h[u];
            if (!(lhs - rhs).is_zero()) {
                rep.eq[2] = false;
                note(3, "(e" + std::to_string(u + 1) + ", e" + std::to_string(v + 1) + ")");
            }
        }

    // (4) phi_p respects p-brackets up to the mu terms.
    rep.eq[3] = true;
    for (int a = 0; a < dp; ++a)
        for (int b = a + 1; b < dp; ++b)
            for (int u = 0; u < dh; ++u) {
                Vec eu = d.h.basis_vector(u);
                Vec ea = d.p.basis_vector(a), eb = d.p.basis_vector(b);
                Vec lhs = d.phi_p_of(d.p.bracket(ea, eb)) * eu;
                Vec rhs = (d.phi_p[a] * (d.phi_p[b] * eu)) - (d.phi_p[b] * (d.phi_p[a] * eu)) +
                          d.h.bracket(eu, d.mu[a][b]) - d.mu_of(ea, d.phi_h[u] * eb) -
                          d.mu_of(d.phi_h[u] * ea, eb);
                if (!is_zero(lhs - rhs)) {
                    rep.eq[3] = false;
                    note(4, "(a" + std::to_string(a + 1) + ", a" + std::to_string(b + 1) + ", e" +
                                std::to_string(u + 1) + ")");
                }
            }

    // (5) cyclic Jacobi of the p-bracket against phi_h of mu.
    rep.eq[4] = true;
    // (6) cyclic compatibility of mu with phi_p and the p-bracket.
    rep.eq[5] = true;
    for (int a = 0; a < dp; ++a)
        for (int b = a + 1; b < dp; ++b)
            for (int c = b + 1; c < dp; ++c) {
                Vec ea = d.p.basis_vector(a), eb = d.p.basis_vector(b), ec = d.p.basis_vector(c);
                Vec lhs5 = d.p.bracket(ea, d.p.bracket(eb, ec)) +
                           d.p.bracket(eb, d.p.bracket(ec, ea)) +
                           d.p.bracket(ec, d.p.bracket(ea, eb));
                Vec rhs5 = d.phi_h_of(d.mu[b][c]) * ea + d.phi_h_of(d.mu[c][a]) * eb +
                           d.phi_h_of(d.mu[a][b]) * ec;
                if (!is_zero(lhs5 - rhs5)) {
                    rep.eq[4] = false;
                    note(5, "(a" + std::to_string(a + 1) + ", a" + std::to_string(b + 1) + ", a" +
                                std::to_string(c + 1) + ")");
                }
                Vec lhs6 = d.phi_p[a] * d.mu[b][c] + d.phi_p[b] * d.mu[c][a] +
                           d.phi_p[c] * d.mu[a][b];
                Vec rhs6 = d.mu_of(d.p.bracket(eb, ec), ea) + d.mu_of(d.p.bracket(ec, ea), eb) +
                           d.mu_of(d.p.bracket(ea, eb), ec);
                if (!is_zero(lhs6 - rhs6)) {
                    rep.eq[5] = false;
                    note(6, "(a" + std::to_string(a + 1) + ", a" + std::to_string(b + 1) + ", a" +
                                std::to_string(c + 1) + ")");
                }
            }
    return rep;
}

AssembledTriple assemble_raw(const ConstructionData& d) {
    int dh = d.h.dim(), dp = d.p.dim(), n = dh + dp;
    LieAlgebra g(n);
    for (int u = 0; u < dh; ++u)
        for (int v = u + 1; v < dh; ++v) {
            Vec br(n, Scalar(0));
            for (int k = 0; k < dh; ++k) br[k] = d.h.c(u, v, k);
            g.set_bracket(u, v, br);
        }
    for (int a = 0; a < dp; ++a)
        for (int b = a + 1; b < dp; ++b) {
            Vec br(n, Scalar(0));
            for (int k = 0; k < dh; ++k) br[k] = d.mu[a][b][k];
            for (int k = 0; k < dp; ++k) br[dh + k] = d.p.c(a, b, k);
            g.set_bracket(dh + a, dh + b, br);
        }
    for (int a = 0; a < dp; ++a)
        for (int u = 0; u < dh; ++u) {
            Vec br(n, Scalar(0));
            Vec hpart = d.phi_p[a].col(u);
            Vec ppart = d.phi_h[u].col(a);
            for (int k = 0; k < dh; ++k) br[k] = hpart[k];
            for (int k = 0; k < dp; ++k) br[dh + k] = -ppart[k];
            g.set_bracket(dh + a, u, br);
        }

    // Bivector whose image block is the inverse of omega (sign fixed so the
    // decomposition recovers omega itself).
    Mat winv = inverse(d.omega.matrix());
    Mat rmat(n, n);
    for (int i = 0; i < dh; ++i)
        for (int j = 0; j < dh; ++j) rmat.at(i, j) = -winv.at(i, j);
    Bivector r{rmat};

    Mat gram(n, n);
    for (int i = 0; i < dh; ++i)
        for (int j = 0; j < dh; ++j) gram.at(i, j) = d.rho_h.matrix().at(i, j);
    for (int i = 0; i < dp; ++i)
        for (int j = 0; j < dp; ++j) gram.at(dh + i, dh + j) = d.rho_p.matrix().at(i, j);
    return {std::move(g), std::move(r), Metric(gram)};
}

AssembledTriple assemble(const ConstructionData& d) {
    if (auto bad = d.invariant_violation())
        throw std::invalid_argument("assemble: " + *bad);
    if (!jacobi(d.h).holds) throw std::invalid_argument("assemble: h fails the Jacobi identity");
    EqproReport eq = check_eqpro(d);
    if (!eq.all())
        throw std::invalid_argument("assemble: compatibility failure, " + eq.first_failure);
    if (!kahler_check(d.h, d.rho_h, d.omega))
        throw std::invalid_argument("assemble: (h, rho_h, omega) is not Kahler");
    return assemble_raw(d);
}

std::vector<Mat> sp_cap_der(const LieAlgebra& h, const Bivector& omega) {
    int n = h.dim();
    if (det(omega.matrix()).is_zero())
        throw std::invalid_argument("sp_cap_der: omega degenerate");
    const Mat& w = omega.matrix();
    auto unknown = [n](int k, int j) { return k * n + j; };
    std::vector<Vec> rows;
    // Derivation equations: D[e_u,e_v] - [D e_u, e_v] - [e_u, D e_v] = 0.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int l = 0; l < n; ++l) {
                Vec row(n * n, Scalar(0));
                for (int m = 0; m < n; ++m) {
                    row[unknown(l, m)] += h.c(u, v, m);
                    row[unknown(m, u)] -= h.c(m, v, l);
                    row[unknown(m, v)] -= h.c(u, m, l);
                }
                rows.push_back(row);
            }
    // Skewness: (D^T W + W D)_{ij} = 0.
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Vec row(n * n, Scalar(0));
            for (int k = 0; k < n; ++k) {
                row[unknown(k, i)] += w.at(k, j);
                row[unknown(k, j)] += w.at(i, k);
            }
            rows.push_back(row);
        }
    Mat kernel = kernel_basis(Mat::from_rows(rows, n * n));
    std::vector<Mat> basis;
    for (int r = 0; r < kernel.rows(); ++r) {
        Mat m(n, n);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) m.at(k, j) = kernel.at(r, unknown(k, j));
        basis.push_back(m);
    }
    return basis;
}

AssembledTriple build_dim1_extension(const LieAlgebra& h, const Metric& rho_h,
                                     const Bivector& omega, const Mat& dmat,
                                     const Scalar& p_metric_value) {
    int n = h.dim();
    if (dmat.rows() != n || dmat.cols() != n)
        throw std::invalid_argument("build_dim1_extension: operator shape");
    const Mat& w = omega.matrix();
    if (!(dmat.transpose() * w + w * dmat).is_zero())
        throw std::invalid_argument("build_dim1_extension: operator is not omega-skew");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Vec eu = h.basis_vector(u), ev = h.basis_vector(v);
            if (!is_zero(dmat * h.bracket(eu, ev) - h.bracket(dmat * eu, ev) -
                         h.bracket(eu, dmat * ev)))
                throw std::invalid_argument("build_dim1_extension: operator is not a derivation");
        }
    Mat pg(1, 1);
    pg.at(0, 0) = p_metric_value;
    ConstructionData d = ConstructionData::zero(h, rho_h, omega, 1, Metric(pg));
    d.phi_p[0] = dmat;
    return assemble(d);
}

CocycleReport check_cocycle(const LieAlgebra& p, const std::vector<Mat>& phi,
                            const std::vector<std::vector<Vec>>& mu) {
    CocycleReport rep;
    int m = p.dim();
    if (int(phi.size()) != m) throw std::invalid_argument("check_cocycle: phi table size");
    auto phi_of = [&](const Vec& x) {
        Mat out = phi.empty() ? Mat(0, 0) : Mat(phi[0].rows(), phi[0].cols());
        for (int i = 0; i < m; ++i)
            if (!x[i].is_zero()) out = out + phi[i].scaled(x[i]);
        return out;
    };
    rep.representation = true;
    for (int a = 0; a < m && rep.representation; ++a)
        for (int b = a + 1; b < m; ++b) {
            Mat lhs = phi_of(p.bracket(p.basis_vector(a), p.basis_vector(b)));
            Mat rhs = phi[a] * phi[b] - phi[b] * phi[a];
            if (!(lhs - rhs).is_zero()) {
                rep.representation = false;
                break;
            }
        }
    if (!rep.representation)
        throw std::invalid_argument("check_cocycle: phi is not a representation");
    auto mu_of = [&](const Vec& x, const Vec& y) {
        Vec out(mu[0][0].size(), Scalar(0));
        for (int i = 0; i < m; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                if (y[j].is_zero()) continue;
                out = out + (x[i] * y[j]) * mu[i][j];
            }
        }
        return out;
    };
    rep.cocycle = true;
    for (int a = 0; a < m && rep.cocycle; ++a)
        for (int b = a + 1; b < m && rep.cocycle; ++b)
            for (int c = b + 1; c < m; ++c) {
                Vec ea = p.basis_vector(a), eb = p.basis_vector(b), ec = p.basis_vector(c);
                Vec lhs = phi[a] * mu[b][c] + phi[b] * mu[c][a] + phi[c] * mu[a][b];
                Vec rhs = mu_of(p.bracket(ea, eb), ec) + mu_of(p.bracket(eb, ec), ea) +
                          mu_of(p.bracket(ec, ea), eb);
                if (!is_zero(lhs - rhs)) {
                    rep.cocycle = false;
                    break;
                }
            }
    return rep;
}

bool check_eqh(const LieAlgebra& p, const Metric& rho_p, const Mat& n_op, const Vec& b0,
               const Scalar& alpha, const Mat& mu0) {
    int m = p.dim();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Vec ea = p.basis_vector(a), eb = p.basis_vector(b);
            Scalar lhs(0);
            Vec nb = n_op * eb, na = n_op * ea;
            for (int k = 0; k < m; ++k) lhs += mu0.at(a, k) * nb[k] + na[k] * mu0.at(k, b);
            Scalar rhs = -rho_p.eval(p.bracket(ea, eb), b0) - alpha * mu0.at(a, b);
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace rplie
