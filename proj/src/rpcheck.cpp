#include "rplie/rpcheck.hpp"

#include <sstream>
#include <stdexcept>

namespace rplie {

namespace {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

Witness make_witness(std::string condition,
                     std::initializer_list<std::pair<std::string, std::string>> fields) {
    Witness w;
    w.condition = std::move(condition);
    for (auto& f : fields) w.fields.push_back(f);
    return w;
}

}  // namespace

Decomposition decompose(const LieAlgebra& g, const Bivector& r, const Metric& rho) {
    int n = g.dim();
    if (r.dim() != n || rho.dim() != n) throw std::invalid_argument("decompose: dimension mismatch");
    Decomposition d;
    d.dim = n;
    Mat sharp = r.sharp_matrix();
    d.kernel_basis = rplie::kernel_basis(sharp);
    d.image_basis = row_space(sharp.transpose());  // column space of r_#
    int rank = d.image_basis.rows();
    if (rank % 2 != 0) throw std::logic_error("decompose: odd rank of an antisymmetric map");
    if (d.kernel_basis.rows() + rank != n) throw std::logic_error("decompose: rank-nullity failed");

    const Mat& dual_gram = rho.inverse_matrix();
    d.kernel_perp_basis = d.kernel_basis.rows() == 0
                              ? Mat::identity(n)
                              : rplie::kernel_basis(d.kernel_basis * dual_gram);
    if (d.kernel_perp_basis.rows() != rank)
        throw std::logic_error("decompose: orthocomplement dimension mismatch");
    d.image_perp_basis = rank == 0 ? Mat::identity(n)
                                   : rplie::kernel_basis(d.image_basis * rho.matrix());

    // tau: the preimage of each image basis vector inside kernel_perp.
    d.tau = Mat(n, rank);
    Mat qp = d.kernel_perp_basis.transpose();  // n x rank
    Mat restricted = sharp * qp;               // n x rank
    for (int a = 0; a < rank; ++a) {
        auto coords = solve(restricted, d.image_basis.row(a));
        if (!coords) throw std::logic_error("decompose: r_# not invertible on the complement");
        Vec t = qp * *coords;
        for (int i = 0; i < n; ++i) d.tau.at(i, a) = t[i];
    }

    // omega on the image; J = -(index raise) o tau, in image coordinates.
    d.omega = Mat(rank, rank);
    const Mat& rmat = r.matrix();
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b) d.omega.at(a, b) = dot(d.tau.col(a), rmat * d.tau.col(b));
    d.j_operator = Mat(rank, rank);
    Mat image_t = d.image_basis.transpose();
    for (int a = 0; a < rank; ++a) {
        Vec jv = Scalar(-1) * (rho.inverse_matrix() * d.tau.col(a));
        auto coords = solve(image_t, jv);
        if (!coords) throw std::logic_error("decompose: J does not preserve the image");
        for (int b = 0; b < rank; ++b) d.j_operator.at(b, a) = (*coords)[b];
    }

    // Section property: r_# o tau = identity on the image.
    for (int a = 0; a < rank; ++a)
        if (!(sharp * d.tau.col(a) == d.image_basis.row(a)))
            throw std::logic_error("decompose: tau is not a section of r_#");
    return d;
}

SymplecticSubalgebraReport check_symplectic_subalgebra(const LieAlgebra& g, const Bivector& r,
                                                       const Metric& rho) {
    SymplecticSubalgebraReport rep;
    Decomposition d = decompose(g, r, rho);
    int rank = d.rank();
    Mat image_t = d.image_basis.transpose();
    rep.is_subalgebra = true;
    std::vector<std::vector<Vec>> bracket_coords(rank, std::vector<Vec>(rank));
    for (int a = 0; a < rank && rep.is_subalgebra; ++a)
        for (int b = a + 1; b < rank; ++b) {
            Vec br = g.bracket(d.image_basis.row(a), d.image_basis.row(b));
            auto coords = solve(image_t, br);
            if (!coords) {
                rep.is_subalgebra = false;
                break;
            }
            bracket_coords[a][b] = *coords;
            Vec neg = -Scalar(1) * *coords;
            bracket_coords[b][a] = neg;
        }
    if (!rep.is_subalgebra) return rep;
    rep.delta_omega_zero = true;
    auto omega_of = [&](int a, const Vec& coords) {
        Scalar s(0);
        for (int b = 0; b < rank; ++b) s += d.omega.at(a, b) * coords[b];
        return s;
    };
    for (int a = 0; a < rank && rep.delta_omega_zero; ++a)
        for (int b = a + 1; b < rank && rep.delta_omega_zero; ++b)
            for (int c = b + 1; c < rank; ++c) {
                Scalar s = omega_of(a, bracket_coords[b][c]) + omega_of(b, bracket_coords[c][a]) +
                           omega_of(c, bracket_coords[a][b]);
                if (!s.is_zero()) {
                    rep.delta_omega_zero = false;
                    break;
                }
            }
    return rep;
}

DirectReport check_direct(const LieAlgebra& g, const Bivector& r, const Metric& rho) {
    DirectReport rep;
    int n = g.dim();
    rep.ybe_zero = yang_baxter_bracket(g, r).is_zero();
    LieAlgebra dual = koszul_dual(g, r);
    LeviCivitaProduct a = levi_civita(dual, rho.dual());
    const Mat& rmat = r.matrix();
    rep.skew_ok = true;
    for (int i = 0; i < n && rep.skew_ok; ++i)
        for (int j = 0; j < n && rep.skew_ok; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar s(0);
                for (int p = 0; p < n; ++p)
                    s += a.coef(i, j, p) * rmat.at(p, k) + rmat.at(j, p) * a.coef(i, k, p);
                if (!s.is_zero()) {
                    rep.skew_ok = false;
                    rep.witness = make_witness(
                        "ii", {{"alpha", "e" + std::to_string(i + 1) + "*"},
                               {"beta", "e" + std::to_string(j + 1) + "*"},
                               {"gamma", "e" + std::to_string(k + 1) + "*"},
                               {"residual", s.str()}});
                    break;
                }
            }
    if (!rep.ybe_zero && !rep.witness) {
        Trivector t = yang_baxter_bracket(g, r);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (!t.at(i, j, k).is_zero() && !rep.witness)
                        rep.witness = make_witness(
                            "c1", {{"alpha", "e" + std::to_string(i + 1) + "*"},
                                   {"beta", "e" + std::to_string(j + 1) + "*"},
                                   {"gamma", "e" + std::to_string(k + 1) + "*"},
                                   {"residual", t.at(i, j, k).str()}});
    }
    rep.ok = rep.ybe_zero && rep.skew_ok;
    return rep;
}

KernelConditionsReport check_kernel_conditions(const LieAlgebra& g, const Bivector& r,
                                               const Metric& rho) {
    KernelConditionsReport rep;
    int n = g.dim();
    Decomposition d = decompose(g, r, rho);
    rep.c1 = yang_baxter_bracket(g, r).is_zero();
    LieAlgebra dual = koszul_dual(g, r);
    LeviCivitaProduct a = levi_civita(dual, rho.dual());

    rep.c2 = true;
    for (int t = 0; t < d.kernel_basis.rows() && rep.c2; ++t) {
        Vec alpha = d.kernel_basis.row(t);
        Mat op = a.operator_of(alpha);
        if (!op.is_zero()) {
            rep.c2 = false;
            for (int j = 0; j < n && !rep.witness; ++j) {
                Vec img = op.col(j);
                if (!is_zero(img))
                    rep.witness = make_witness("c2", {{"alpha", vec_str(alpha)},
                                                      {"beta", "e" + std::to_string(j + 1) + "*"},
                                                      {"residual", vec_str(img)}});
            }
        }
    }

    rep.c3 = true;
    int m = d.kernel_perp_basis.rows();
    const Mat& rmat = r.matrix();
    // A must preserve the orthocomplement of the kernel.
    Mat combined(n, n);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k) combined.at(k, i) = d.kernel_perp_basis.at(i, k);
    for (int i = 0; i < d.kernel_basis.rows(); ++i)
        for (int k = 0; k < n; ++k) combined.at(k, m + i) = d.kernel_basis.at(i, k);
    Mat combined_inv = inverse(combined);
    auto in_perp = [&](const Vec& v) {
        Vec coords = combined_inv * v;
        for (int i = m; i < n; ++i)
            if (!coords[i].is_zero()) return false;
        return true;
    };
    for (int i = 0; i < m && rep.c3; ++i) {
        Vec alpha = d.kernel_perp_basis.row(i);
        Mat op = a.operator_of(alpha);
        for (int j = 0; j < m && rep.c3; ++j) {
            Vec beta = d.kernel_perp_basis.row(j);
            Vec ab = op * beta;
            if (!in_perp(ab)) {
                rep.c3 = false;
                if (!rep.witness)
                    rep.witness = make_witness("c3", {{"alpha", vec_str(alpha)},
                                                      {"beta", vec_str(beta)},
                                                      {"detail", "A_alpha beta leaves the complement"}});
                break;
            }
            for (int k = 0; k < m; ++k) {
                Vec gamma = d.kernel_perp_basis.row(k);
                Scalar s = dot(ab, rmat * gamma) + dot(beta, rmat * (op * gamma));
                if (!s.is_zero()) {
                    rep.c3 = false;
                    if (!rep.witness)
                        rep.witness = make_witness("c3", {{"alpha", vec_str(alpha)},
                                                          {"beta", vec_str(beta)},
                                                          {"gamma", vec_str(gamma)},
                                                          {"residual", s.str()}});
                    break;
                }
            }
        }
    }
    if (!rep.c1 && !rep.witness) {
        Trivector t = yang_baxter_bracket(g, r);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (!t.at(i, j, k).is_zero() && !rep.witness)
                        rep.witness = make_witness(
                            "c1", {{"alpha", "e" + std::to_string(i + 1) + "*"},
                                   {"beta", "e" + std::to_string(j + 1) + "*"},
                                   {"gamma", "e" + std::to_string(k + 1) + "*"},
                                   {"residual", t.at(i, j, k).str()}});
    }
    return rep;
}

KahlerCharacterizationReport check_kahler_characterization(const LieAlgebra& g, const Bivector& r,
                                                           const Metric& rho) {
    KahlerCharacterizationReport rep;
    rep.applicable = yang_baxter_bracket(g, r).is_zero();
    if (!rep.applicable) return rep;
    int n = g.dim();
    Decomposition d = decompose(g, r, rho);
    int rank = d.rank();

    // Kahler restriction to the image.
    if (rank == 0) {
        rep.kahler_sub = true;
    } else {
        Mat image_t = d.image_basis.transpose();
        LieAlgebra sub(rank);
        bool closed = true;
        for (int a = 0; a < rank && closed; ++a)
            for (int b = a + 1; b < rank; ++b) {
                Vec br = g.bracket(d.image_basis.row(a), d.image_basis.row(b));
                auto coords = solve(image_t, br);
                if (!coords) {
                    closed = false;
                    break;
                }
                sub.set_bracket(a, b, *coords);
            }
        if (!closed) {
            rep.kahler_sub = false;
        } else {
            Mat gram(rank, rank);
            for (int a = 0; a < rank; ++a)
                for (int b = 0; b < rank; ++b)
                    gram.at(a, b) = rho.eval(d.image_basis.row(a), d.image_basis.row(b));
            rep.kahler_sub = kahler_check(sub, Metric(gram), Bivector(d.omega));
        }
    }

    // Skewness of the projected adjoint of image elements on the complement.
    int pm = d.image_perp_basis.rows();
    Mat perp_gram(pm, pm);
    for (int a = 0; a < pm; ++a)
        for (int b = 0; b < pm; ++b)
            perp_gram.at(a, b) = rho.eval(d.image_perp_basis.row(a), d.image_perp_basis.row(b));
    // Coordinates in the combined basis [image | image_perp].
    Mat split(n, n);
    for (int a = 0; a < d.rank(); ++a)
        for (int k = 0; k < n; ++k) split.at(k, a) = d.image_basis.at(a, k);
    for (int a = 0; a < pm; ++a)
        for (int k = 0; k < n; ++k) split.at(k, d.rank() + a) = d.image_perp_basis.at(a, k);
    Mat split_inv = inverse(split);

    rep.perp_skew = true;
    for (int s = 0; s < rank && rep.perp_skew; ++s) {
        Mat phi(pm, pm);
        for (int u = 0; u < pm; ++u) {
            Vec br = g.bracket(d.image_basis.row(s), d.image_perp_basis.row(u));
            Vec coords = split_inv * br;
            for (int v = 0; v < pm; ++v) phi.at(v, u) = coords[rank + v];
        }
        if (!(phi.transpose() * perp_gram + perp_gram * phi).is_zero()) rep.perp_skew = false;
    }

    rep.s_perp_sp = true;
    for (int u = 0; u < pm && rep.s_perp_sp; ++u) {
        Mat phi(rank, rank);
        for (int s = 0; s < rank; ++s) {
            Vec br = g.bracket(d.image_perp_basis.row(u), d.image_basis.row(s));
            Vec coords = split_inv * br;
            for (int v = 0; v < rank; ++v) phi.at(v, s) = coords[v];
        }
        if (!(phi.transpose() * d.omega + d.omega * phi).is_zero()) rep.s_perp_sp = false;
    }
    return rep;
}

std::optional<bool> check_biinvariant(const LieAlgebra& g, const Bivector& r, const Metric& rho) {
    if (!rho.is_biinvariant(g)) return std::nullopt;
    Decomposition d = decompose(g, r, rho);
    for (int a = 0; a < d.rank(); ++a)
        for (int b = a + 1; b < d.rank(); ++b)
            if (!is_zero(g.bracket(d.image_basis.row(a), d.image_basis.row(b)))) return false;
    return true;
}

RPReport is_riemann_poisson(const LieAlgebra& g, const Bivector& r, const Metric& rho) {
    RPReport rep;
    rep.dim = g.dim();
    rep.ybe_zero = yang_baxter_bracket(g, r).is_zero();
    rep.direct = check_direct(g, r, rho);
    rep.kernel_conditions = check_kernel_conditions(g, r, rho);
    rep.kahler_characterization = check_kahler_characterization(g, r, rho);
    rep.biinvariant = check_biinvariant(g, r, rho);
    rep.symplectic_subalgebra = check_symplectic_subalgebra(g, r, rho);
    Decomposition d = decompose(g, r, rho);
    rep.rank = d.rank();
    rep.verdict = rep.direct.ok;
    rep.witness = rep.kernel_conditions.witness ? rep.kernel_conditions.witness
                                                : rep.direct.witness;

    bool consistent = rep.direct.ok == rep.kernel_conditions.all();
    if (rep.kahler_characterization.applicable)
        consistent = consistent && rep.direct.ok == rep.kahler_characterization.all();
    consistent = consistent &&
                 rep.kahler_characterization.applicable == rep.ybe_zero &&
                 rep.symplectic_subalgebra.both() == rep.ybe_zero;
    if (rep.biinvariant) consistent = consistent && *rep.biinvariant == rep.direct.ok;
    if (!consistent) {
        if (session_kind() == ScalarKind::Float) {
            rep.inconclusive = true;
            return rep;
        }
        throw InternalInconsistencyError(
            "is_riemann_poisson: characterizations disagree (direct=" +
            std::to_string(rep.direct.ok) +
            ", kernel=" + std::to_string(rep.kernel_conditions.all()) +
            ", kahler=" + std::to_string(rep.kahler_characterization.all()) +
            ", ybe=" + std::to_string(rep.ybe_zero) + ")");
    }
    return rep;
}

}  // namespace rplie
