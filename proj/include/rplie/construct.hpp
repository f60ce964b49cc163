#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rplie/connection.hpp"
#include "rplie/lie.hpp"

namespace rplie {

/// Input data for building a metric triple out of a Kahler block h, a
/// Euclidean block p, a p-valued bracket candidate, an h-valued 2-form mu,
/// and the two twisting maps phi_p : p -> sp(h, omega), phi_h : h -> so(p).
struct ConstructionData {
    LieAlgebra h;
    Metric rho_h;
    Bivector omega;  // nondegenerate on h
    LieAlgebra p;    // antisymmetric bracket candidate on p
    Metric rho_p;
    std::vector<std::vector<Vec>> mu;  // mu[a][b] in h coordinates, antisymmetric
    std::vector<Mat> phi_p;            // one endomorphism of h per p basis vector
    std::vector<Mat> phi_h;            // one endomorphism of p per h basis vector

    static ConstructionData zero(LieAlgebra h, Metric rho_h, Bivector omega, int p_dim,
                                 Metric rho_p);

    int h_dim() const { return h.dim(); }
    int p_dim() const { return p.dim(); }
    void set_mu(int a, int b, const Vec& value);  // keeps antisymmetry

    Mat phi_p_of(const Vec& p_elt) const;
    Mat phi_h_of(const Vec& h_elt) const;
    Vec mu_of(const Vec& a, const Vec& b) const;

    /// Shape checks plus the skewness invariants of phi_p and phi_h and
    /// nondegeneracy of omega. Returns a description of the first violation.
    std::optional<std::string> invariant_violation() const;
};

struct EqproReport {
    bool eq[6] = {false, false, false, false, false, false};
    bool all() const {
        for (bool b : eq)
            if (!b) return false;
        return true;
    }
    std::string first_failure;  // which equation, on which basis tuple
};

/// The six compatibility equations making the assembled bracket a Lie
/// bracket; all-true is equivalent to jacobi(assemble_raw(d).algebra).
EqproReport check_eqpro(const ConstructionData& d);

struct AssembledTriple {
    LieAlgebra algebra;
    Bivector r;
    Metric rho;
};

/// Builds the triple without checking any precondition. The bivector is the
/// one whose image block inverts omega, so decompose() recovers omega.
AssembledTriple assemble_raw(const ConstructionData& d);

/// Validates invariants, eqpro and the Kahler property of (h, rho_h, omega),
/// then assembles. Throws std::invalid_argument with the failing equation.
AssembledTriple assemble(const ConstructionData& d);

/// Echelonized basis of the derivations of h that are skew with respect to
/// omega, i.e. sp(h, omega) intersected with Der(h).
std::vector<Mat> sp_cap_der(const LieAlgebra& h, const Bivector& omega);

/// One-dimensional extension of a Kahler block by a derivation D in
/// sp(h, omega) cap Der(h); everything else zero.
AssembledTriple build_dim1_extension(const LieAlgebra& h, const Metric& rho_h,
                                     const Bivector& omega, const Mat& d,
                                     const Scalar& p_metric_value = Scalar(1));

struct CocycleReport {
    bool representation = false;
    bool cocycle = false;
};

/// mu is a module-valued 2-form on p; phi a representation candidate on the
/// module. Throws std::invalid_argument when phi fails the representation
/// property (p must satisfy Jacobi for the notion to make sense).
CocycleReport check_cocycle(const LieAlgebra& p, const std::vector<Mat>& phi,
                            const std::vector<std::vector<Vec>>& mu);

/// Scalar cocycle compatibility for the non-abelian 2-dimensional block:
/// mu0(a, Nb) + mu0(Na, b) = -rho_p([a,b]_p, b0) - alpha mu0(a,b).
bool check_eqh(const LieAlgebra& p, const Metric& rho_p, const Mat& n_op, const Vec& b0,
               const Scalar& alpha, const Mat& mu0);

}  // namespace rplie
