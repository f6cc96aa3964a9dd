#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gsee {

// Discrete spectral measure p = sum_j p_j * delta(x - E_j): the energies are
// strictly ascending and the weights form a probability distribution.  This
// is the ground truth object every estimator in the library is run against.
class SpectralMeasure {
public:
    SpectralMeasure(std::vector<double> energies, std::vector<double> weights);

    std::size_t size() const { return energies_.size(); }
    double energy(std::size_t j) const { return energies_[j]; }
    double weight(std::size_t j) const { return weights_[j]; }

    double ground_energy() const { return energies_.front(); }
    double ground_weight() const { return weights_.front(); }

    // Spectral gap E_1 - E_0; throws if the measure has a single level.
    double gap() const;

    double min_energy() const { return energies_.front(); }
    double max_energy() const { return energies_.back(); }

    const std::vector<double>& energies() const { return energies_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> energies_;
    std::vector<double> weights_;
};

// Builds the spectral measure of a dense Hermitian matrix h as seen by the
// state rho (both row-major dim x dim, dim <= 64).  Eigenvalues closer than
// 1e-12 are merged into one level whose weight is the summed projector
// overlap.  Checks performed:
//   - h Hermitian within 1e-10 elementwise,
//   - rho Hermitian with unit trace within 1e-10,
//   - resulting weights sum to 1 within 1e-10 (then normalized exactly),
//   - sum_j p_j E_j consistent with tr(rho h) within 1e-8.
SpectralMeasure from_dense_hamiltonian(const std::vector<std::complex<double>>& h,
                                       const std::vector<std::complex<double>>& rho,
                                       std::size_t dim);

}  // namespace gsee
