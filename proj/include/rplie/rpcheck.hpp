#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rplie/connection.hpp"
#include "rplie/lie.hpp"

namespace rplie {

/// Derived data of a triple (g, r, rho): the kernel and image of r_#, their
/// orthocomplements, the induced symplectic form on the image, the section
/// tau inverting r_# on the orthocomplement of its kernel, and the operator J
/// linking the form to the metric.
struct Decomposition {
    int dim = 0;
    Mat kernel_basis;        // rows; subspace of the dual space
    Mat kernel_perp_basis;   // rows; orthocomplement for the dual metric
    Mat image_basis;         // rows; subspace of the algebra
    Mat image_perp_basis;    // rows; orthocomplement for the metric
    Mat omega;               // 2-form on the image, in image_basis coordinates
    Mat tau;                 // n x rank: column a = tau(image_basis row a)
    Mat j_operator;          // rank x rank, in image_basis coordinates

    int rank() const { return image_basis.rows(); }
};

Decomposition decompose(const LieAlgebra& g, const Bivector& r, const Metric& rho);

struct Witness {
    std::string condition;
    std::vector<std::pair<std::string, std::string>> fields;
};

struct SymplecticSubalgebraReport {
    bool is_subalgebra = false;
    bool delta_omega_zero = false;
    bool both() const { return is_subalgebra && delta_omega_zero; }
};

/// Image-of-r_# test: closed under the bracket, and the cyclic sum of
/// omega against brackets vanishes. Both true exactly when [r,r] = 0.
SymplecticSubalgebraReport check_symplectic_subalgebra(const LieAlgebra& g, const Bivector& r,
                                                       const Metric& rho);

struct DirectReport {
    bool ok = false;
    bool ybe_zero = false;
    bool skew_ok = false;  // r(A_a b, c) + r(b, A_a c) = 0 on dual basis triples
    std::optional<Witness> witness;
};

/// The defining conditions: [r,r] = 0 and skew-invariance of r under the
/// dual Levi-Civita product.
DirectReport check_direct(const LieAlgebra& g, const Bivector& r, const Metric& rho);

struct KernelConditionsReport {
    bool c1 = false;  // [r,r] = 0
    bool c2 = false;  // A_a = 0 for a in ker r_#
    bool c3 = false;  // A preserves the orthocomplement and is r-skew there
    bool all() const { return c1 && c2 && c3; }
    std::optional<Witness> witness;
};

KernelConditionsReport check_kernel_conditions(const LieAlgebra& g, const Bivector& r,
                                               const Metric& rho);

struct KahlerCharacterizationReport {
    bool applicable = false;  // requires [r,r] = 0
    bool kahler_sub = false;
    bool perp_skew = false;
    bool s_perp_sp = false;
    bool all() const { return kahler_sub && perp_skew && s_perp_sp; }
};

/// The subalgebra characterization: (image, restricted metric, omega) is a
/// Kahler Lie subalgebra and the two projected-adjoint skewness conditions
/// hold across the orthogonal splitting.
KahlerCharacterizationReport check_kahler_characterization(const LieAlgebra& g, const Bivector& r,
                                                           const Metric& rho);

/// Shortcut valid only for bi-invariant metrics: nullopt when the metric is
/// not bi-invariant, otherwise whether the image of r_# is abelian.
std::optional<bool> check_biinvariant(const LieAlgebra& g, const Bivector& r, const Metric& rho);

struct RPReport {
    bool verdict = false;
    bool ybe_zero = false;
    DirectReport direct;
    KernelConditionsReport kernel_conditions;
    KahlerCharacterizationReport kahler_characterization;
    std::optional<bool> biinvariant;
    SymplecticSubalgebraReport symplectic_subalgebra;
    int dim = 0;
    int rank = 0;
    bool inconclusive = false;  // float mode only: characterizations disagreed
    std::optional<Witness> witness;
};

/// Signals disagreement between characterizations in exact mode; an
/// implementation bug, not a property of the input.
struct InternalInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Runs every applicable characterization, asserts their agreement, and
/// returns the combined report. Throws InternalInconsistencyError on
/// disagreement in rational mode; flags the report inconclusive in float mode.
RPReport is_riemann_poisson(const LieAlgebra& g, const Bivector& r, const Metric& rho);

}  // namespace rplie
