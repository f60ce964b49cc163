#pragma once

// Brute-force oracles, kept independent of the library's computation paths:
// straight loops over structure constants and a local Gaussian solve.

#include <vector>

#include "rplie/lie.hpp"

namespace oracles {

using rplie::LieAlgebra;
using rplie::Mat;
using rplie::Metric;
using rplie::Scalar;
using rplie::Vec;

// Gaussian elimination with partial pivoting by first nonzero entry; local to
// the tests so library solves are cross-checked by an independent routine.
inline Vec gauss_solve(Mat a, Vec b) {
    int n = a.rows();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) throw std::runtime_error("oracle gauss: singular");
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            std::swap(b[p], b[c]);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c) / a.at(c, c);
            for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
            b[i] -= f * b[c];
        }
    }
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a.at(i, i);
    return x;
}

inline Scalar jacobi_residual(const LieAlgebra& g, int i, int j, int k, int l) {
    Scalar s(0);
    for (int m = 0; m < g.dim(); ++m) {
        s += g.c(i, j, m) * g.c(m, k, l);
        s += g.c(j, k, m) * g.c(m, i, l);
        s += g.c(k, i, m) * g.c(m, j, l);
    }
    return s;
}

inline bool jacobi_holds(const LieAlgebra& g) {
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k)
                for (int l = 0; l < g.dim(); ++l)
                    if (!jacobi_residual(g, i, j, k, l).is_zero()) return false;
    return true;
}

// r_#(e_i*) directly from the defining identity <e_j*, r_#(e_i*)> = r^{ij}.
inline Vec sharp_of_basis(const rplie::Bivector& r, int i) {
    Vec v(r.dim());
    for (int j = 0; j < r.dim(); ++j) v[j] = r.at(i, j);
    return v;
}

inline Scalar yang_baxter_entry(const LieAlgebra& g, const rplie::Bivector& r, int i, int j,
                                int k) {
    Vec si = sharp_of_basis(r, i), sj = sharp_of_basis(r, j), sk = sharp_of_basis(r, k);
    return g.bracket(sj, sk)[i] + g.bracket(sk, si)[j] + g.bracket(si, sj)[k];
}

// Levi-Civita coefficients by solving each Koszul system with the local solver.
inline Vec levi_civita_of(const LieAlgebra& g, const Metric& rho, int i, int j) {
    int n = g.dim();
    Vec ei = g.basis_vector(i), ej = g.basis_vector(j);
    Vec rhs(n);
    for (int k = 0; k < n; ++k) {
        Vec ek = g.basis_vector(k);
        rhs[k] = (rho.eval(g.bracket(ei, ej), ek) + rho.eval(g.bracket(ek, ei), ej) +
                  rho.eval(g.bracket(ek, ej), ei)) /
                 2;
    }
    return gauss_solve(rho.matrix(), rhs);
}

// The parallel-form condition evaluated term by term on basis triples.
inline bool kahler_holds(const LieAlgebra& g, const Metric& rho, const Mat& omega) {
    int n = g.dim();
    std::vector<std::vector<Vec>> a(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = levi_civita_of(g, rho, i, j);
    auto w = [&](const Vec& u, const Vec& v) { return rplie::dot(u, omega * v); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar s = w(a[i][j], g.basis_vector(k)) + w(g.basis_vector(j), a[i][k]);
                if (!s.is_zero()) return false;
            }
    return true;
}

inline bool flat_by_curvature(const LieAlgebra& g, const Metric& rho) {
    int n = g.dim();
    std::vector<std::vector<Vec>> a(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = levi_civita_of(g, rho, i, j);
    auto apply = [&](const Vec& u, const Vec& v) {
        Vec out(n, Scalar(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar f = u[i] * v[j];
                if (f.is_zero()) continue;
                for (int k = 0; k < n; ++k) out[k] += f * a[i][j][k];
            }
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = g.basis_vector(i), ej = g.basis_vector(j), ek = g.basis_vector(k);
                Vec r = apply(ei, apply(ej, ek)) - apply(ej, apply(ei, ek)) -
                        apply(g.bracket(ei, ej), ek);
                if (!rplie::is_zero(r)) return false;
            }
    return true;
}

}  // namespace oracles
