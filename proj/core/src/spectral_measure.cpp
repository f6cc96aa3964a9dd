#include "gsee/spectral_measure.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gsee {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

SpectralMeasure::SpectralMeasure(std::vector<double> energies, std::vector<double> weights)
    : energies_(std::move(energies)), weights_(std::move(weights)) {
    if (energies_.empty()) fail("spectral measure needs at least one level");
    if (energies_.size() != weights_.size()) {
        std::ostringstream os;
        os << "energies/weights length mismatch: " << energies_.size() << " vs "
           << weights_.size();
        fail(os.str());
    }
    double total = 0.0;
    for (std::size_t j = 0; j < energies_.size(); ++j) {
        if (!std::isfinite(energies_[j])) fail("non-finite energy");
        if (!std::isfinite(weights_[j]) || weights_[j] < 0.0) {
            fail("weights must be finite and nonnegative");
        }
        if (j > 0 && !(energies_[j] > energies_[j - 1])) {
            fail("energies must be strictly ascending");
        }
        total += weights_[j];
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "weights must sum to 1 (got " << total << ")";
        fail(os.str());
    }
}

double SpectralMeasure::gap() const {
    if (energies_.size() < 2) {
        throw std::logic_error("gap() undefined for a single-level measure");
    }
    return energies_[1] - energies_[0];
}

SpectralMeasure from_dense_hamiltonian(const std::vector<std::complex<double>>& h,
                                       const std::vector<std::complex<double>>& rho,
                                       std::size_t dim) {
    constexpr std::size_t max_dim = 64;
    if (dim == 0 || dim > max_dim) {
        fail("dimension must be in [1, 64]");
    }
    if (h.size() != dim * dim || rho.size() != dim * dim) {
        fail("matrix buffers must hold dim*dim entries");
    }

    using Mat = Eigen::MatrixXcd;
    Mat hm(dim, dim), rm(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            hm(r, c) = h[r * dim + c];
            rm(r, c) = rho[r * dim + c];
        }
    }

    double herm_err = (hm - hm.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > 1e-10) {
        std::ostringstream os;
        os << "hamiltonian not Hermitian (max deviation " << herm_err << ")";
        fail(os.str());
    }
    double rho_herm_err = (rm - rm.adjoint()).cwiseAbs().maxCoeff();
    if (rho_herm_err > 1e-10) fail("state not Hermitian");
    double tr_err = std::abs(rm.trace() - std::complex<double>(1.0, 0.0));
    if (tr_err > 1e-10) fail("state trace must be 1");

    Eigen::SelfAdjointEigenSolver<Mat> solver((hm + hm.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    const auto& evals = solver.eigenvalues();
    const auto& evecs = solver.eigenvectors();

    // Group eigenvalues closer than 1e-12 into one spectral level; the
    // level's weight is the state's total overlap with the eigenspace.
    std::vector<double> energies, weights;
    std::size_t j = 0;
    while (j < dim) {
        std::size_t k = j + 1;
        while (k < dim && evals(k) - evals(j) <= 1e-12) ++k;
        double e = 0.0, w = 0.0;
        for (std::size_t i = j; i < k; ++i) {
            e += evals(i);
            w += std::real(std::complex<double>(
                (evecs.col(i).adjoint() * rm * evecs.col(i))(0, 0)));
        }
        energies.push_back(e / static_cast<double>(k - j));
        // tiny negative overlaps are eigensolver noise
        weights.push_back(w < 0.0 ? 0.0 : w);
        j = k;
    }

    double total = 0.0;
    for (double w : weights) total += w;
    if (std::abs(total - 1.0) > 1e-10) {
        std::ostringstream os;
        os << "projector weights sum to " << total << ", expected 1";
        fail(os.str());
    }
    for (double& w : weights) w /= total;

    // Cross-check the first moment against tr(rho H) computed directly.
    double expect_direct = std::real((rm * hm).trace());
    double expect_levels = 0.0;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        expect_levels += energies[i] * weights[i];
    }
    if (std::abs(expect_direct - expect_levels) > 1e-8) {
        std::ostringstream os;
        os << "energy expectation mismatch: tr(rho H) = " << expect_direct
           << " vs level sum " << expect_levels;
        throw std::runtime_error(os.str());
    }

    return SpectralMeasure(std::move(energies), std::move(weights));
}

}  // namespace gsee
