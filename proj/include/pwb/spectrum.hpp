#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>
#include <vector>

#include "pwb/geometry.hpp"

namespace pwb {

/// Dirichlet sine basis on the enclosing rectangle plus the step height V0
/// standing in for the billiard's hard walls.
struct BasisSpec {
    int n_max_x = 60;
    int n_max_y = 60;
    double step_height = 0.0;   ///< V0; 0 requests the automatic choice
    double keep_fraction = 0.25;
};

inline int basis_dimension(const BasisSpec& b) { return b.n_max_x * b.n_max_y; }

/// Basis state ordering: k = (nx-1)*n_max_y + (ny-1), modes counted from 1.
inline int basis_index(const BasisSpec& b, int nx, int ny) {
    return (nx - 1) * b.n_max_y + (ny - 1);
}
inline int basis_nx(const BasisSpec& b, int k) { return k / b.n_max_y + 1; }
inline int basis_ny(const BasisSpec& b, int k) { return k % b.n_max_y + 1; }

std::vector<std::string> basis_violations(const BasisSpec& basis);
void validate_basis(const BasisSpec& basis);

/// V0 used when step_height is 0: 100x the Weyl estimate of the top kept
/// energy, 4*pi*keep_fraction*dim/area.
double auto_step_height(const BilliardShape& shape, const BasisSpec& basis);

/// Rectangle kinetic energy pi^2 (nx^2/W^2 + ny^2/H^2) (units m = 1/2, hbar = 1).
double kinetic_energy(const BilliardShape& shape, int nx, int ny);

/// Eigenvalues and (optionally) eigenvectors of H0 in the sine basis.
/// Eigenvectors are shared so that derived spectra (the tau -> infinity
/// perturbation) can reference the same basis without copying.
struct Spectrum {
    Eigen::VectorXd energies; ///< ascending
    std::shared_ptr<const Eigen::MatrixXd> eigenvectors; ///< columns; may be null
    BilliardShape shape;
    BasisSpec basis; ///< step_height resolved to the value actually used
    int stable_count = 0;
    std::vector<int> degenerate_pairs; ///< lower index of each flagged pair

    bool degenerate_flagged() const { return !degenerate_pairs.empty(); }
    int size() const { return static_cast<int>(energies.size()); }
};

/// Assembles the symmetric matrix of H0 = p^2 + V0 * [outside billiard]:
/// kinetic diagonal plus V0 times the overlap of the two sine-product basis
/// functions over the excluded region. The integral over each parabolic
/// strip uses a closed-form inner integral and composite Gauss-Legendre in
/// the transverse direction; panels are doubled until no element moves by
/// more than 1e-8 * V0. The corner excluded by both cuts is subtracted once.
/// Throws quadrature_error if panel doubling fails to converge.
Eigen::MatrixXd build_hamiltonian(const BilliardShape& shape, const BasisSpec& basis);

/// Dense symmetric eigendecomposition (LAPACK dsyevd), ascending eigenvalues.
/// Adjacent levels closer than 1e-12 times the mean absolute energy are
/// flagged as degenerate. Throws solver_error on non-symmetric input or
/// LAPACK failure.
Spectrum eigensolve(const Eigen::MatrixXd& H, bool want_vectors = true);

/// build_hamiltonian + eigensolve + metadata.
Spectrum compute_spectrum(const BilliardShape& shape, const BasisSpec& basis,
                          bool want_vectors = true);

struct StabilityReport {
    Spectrum base;                    ///< base spectrum, stable_count filled in
    std::vector<double> drift;        ///< |E_k - E'_k| per kept-candidate level
    std::vector<double> local_spacing;///< windowed mean spacing per level
    int stable_count = 0;
    bool downgraded = false;          ///< V0 ended up below 50x the top kept level
};

/// Recomputes the spectrum with n_max scaled by `inflation` (same V0) and
/// certifies the longest prefix of levels whose drift stays below 0.1 of the
/// local mean spacing; levels at or above V0/10 are never kept.
StabilityReport stability_check(const BilliardShape& shape, const BasisSpec& basis,
                                double inflation = 1.25);

} // namespace pwb
