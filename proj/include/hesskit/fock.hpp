#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace hesskit {

enum class Boundary { open, periodic };

std::int64_t hilbert_dimension(int sites, int particles);

// Half-filled (or general N) occupation-number basis for a chain of `sites`
// sites. States are the bitstrings with exactly `particles` set bits, ordered
// by integer value; bit i is site i.
class FockBasis {
  public:
    FockBasis(int sites, int particles);

    int sites() const { return sites_; }
    int particles() const { return particles_; }
    int dim() const { return static_cast<int>(states_.size()); }
    const std::vector<std::uint32_t>& states() const { return states_; }
    std::uint32_t state(int k) const { return states_[static_cast<std::size_t>(k)]; }
    int index_of(std::uint32_t bits) const;

  private:
    int sites_;
    int particles_;
    std::vector<std::uint32_t> states_;
};

struct HamiltonianParams {
    double hopping = 1.0;      // J
    double interaction = 0.0;  // V1
    Boundary boundary = Boundary::periodic;
};

// Sparse symmetric matrix of the nearest-neighbour spinless-fermion chain in
// the Fock basis: hopping amplitude -J with the ordered-operator sign rule,
// +V1 on the diagonal per adjacent occupied pair.
class SparseHamiltonian {
  public:
    struct Entry {
        int row;
        int col;
        double value;
    };

    SparseHamiltonian(int dim, std::vector<Entry> entries, HamiltonianParams params);

    int dim() const { return dim_; }
    const std::vector<Entry>& entries() const { return entries_; }
    const HamiltonianParams& params() const { return params_; }

    void apply(const double* x, double* y) const;  // y = H x
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd dense() const;
    double inf_norm() const;  // max absolute row sum

  private:
    int dim_;
    std::vector<Entry> entries_;
    HamiltonianParams params_;
};

SparseHamiltonian build_hamiltonian(const FockBasis& basis, double hopping, double interaction,
                                    Boundary boundary);

struct GroundState {
    double energy = 0.0;
    Eigen::VectorXd amplitudes;
    double v1_over_j = 0.0;
};

enum class EigenMethod { automatic, dense, lanczos };

// Lowest eigenpair. Dense symmetric solve up to kDenseDimLimit, Lanczos with
// full reorthogonalization above. Sign convention: the first amplitude whose
// magnitude is non-negligible is made positive.
inline constexpr int kDenseDimLimit = 1500;

GroundState ground_state(const SparseHamiltonian& h, double tol = 1e-10,
                         EigenMethod method = EigenMethod::automatic);

// Staggered density-density structure factor, reported as O = 2 sqrt(S_pi)
// with S_pi = (1/L^2) sum_ij (-1)^(i-j) <(n_i - 1/2)(n_j - 1/2)>. Equals 1 on
// the perfect 1010 pattern and on its cat combination.
double order_parameter(const Eigen::VectorXd& amplitudes, const FockBasis& basis);

}  // namespace hesskit
