#include "hesskit/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "hesskit/errors.hpp"

namespace hesskit {

std::int64_t hilbert_dimension(int sites, int particles) {
    if (particles < 0 || particles > sites || sites < 0) {
        throw InvalidArgument("hilbert_dimension: need 0 <= N <= L, got L=" +
                              std::to_string(sites) + " N=" + std::to_string(particles));
    }
    const int k = std::min(particles, sites - particles);
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (sites - k + i) / i;
    }
    return result;
}

FockBasis::FockBasis(int sites, int particles) : sites_(sites), particles_(particles) {
    if (sites < 1 || sites > 30) {
        throw InvalidArgument("FockBasis: site count out of range: " + std::to_string(sites));
    }
    const std::int64_t dim = hilbert_dimension(sites, particles);
    states_.reserve(static_cast<std::size_t>(dim));
    const std::uint32_t top = std::uint32_t{1} << sites;
    for (std::uint32_t s = 0; s < top; ++s) {
        if (std::popcount(s) == particles) states_.push_back(s);
    }
}

int FockBasis::index_of(std::uint32_t bits) const {
    const auto it = std::lower_bound(states_.begin(), states_.end(), bits);
    if (it == states_.end() || *it != bits) {
        throw InvalidArgument("FockBasis::index_of: bitstring not in basis");
    }
    return static_cast<int>(it - states_.begin());
}

namespace {

// Parity of the occupied count strictly between sites a < b.
int hop_sign(std::uint32_t state, int a, int b) {
    const std::uint32_t between = ((std::uint32_t{1} << b) - 1) & ~((std::uint32_t{1} << (a + 1)) - 1);
    return (std::popcount(state & between) % 2 == 0) ? 1 : -1;
}

}  // namespace

SparseHamiltonian::SparseHamiltonian(int dim, std::vector<Entry> entries, HamiltonianParams params)
    : dim_(dim), entries_(std::move(entries)), params_(params) {}

void SparseHamiltonian::apply(const double* x, double* y) const {
    std::fill(y, y + dim_, 0.0);
    for (const Entry& e : entries_) {
        y[e.row] += e.value * x[e.col];
    }
}

Eigen::VectorXd SparseHamiltonian::apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y(dim_);
    apply(x.data(), y.data());
    return y;
}

Eigen::MatrixXd SparseHamiltonian::dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    for (const Entry& e : entries_) m(e.row, e.col) += e.value;
    return m;
}

double SparseHamiltonian::inf_norm() const {
    std::vector<double> row_sum(static_cast<std::size_t>(dim_), 0.0);
    for (const Entry& e : entries_) row_sum[static_cast<std::size_t>(e.row)] += std::abs(e.value);
    double norm = 0.0;
    for (double s : row_sum) norm = std::max(norm, s);
    return norm;
}

SparseHamiltonian build_hamiltonian(const FockBasis& basis, double hopping, double interaction,
                                    Boundary boundary) {
    if (hopping <= 0.0) {
        throw InvalidArgument("build_hamiltonian: hopping amplitude J must be positive");
    }
    const int sites = basis.sites();
    std::vector<std::pair<int, int>> bonds;
    for (int i = 0; i + 1 < sites; ++i) bonds.emplace_back(i, i + 1);
    if (boundary == Boundary::periodic && sites > 2) bonds.emplace_back(0, sites - 1);

    std::vector<SparseHamiltonian::Entry> entries;
    const int dim = basis.dim();
    for (int k = 0; k < dim; ++k) {
        const std::uint32_t state = basis.state(k);
        int occupied_pairs = 0;
        for (const auto& [a, b] : bonds) {
            const bool na = (state >> a) & 1u;
            const bool nb = (state >> b) & 1u;
            if (na && nb) ++occupied_pairs;
            if (na != nb) {
                const std::uint32_t flipped =
                    state ^ ((std::uint32_t{1} << a) | (std::uint32_t{1} << b));
                const int j = basis.index_of(flipped);
                entries.push_back({j, k, -hopping * hop_sign(state, a, b)});
            }
        }
        if (occupied_pairs > 0) {
            entries.push_back({k, k, interaction * occupied_pairs});
        }
    }
    return SparseHamiltonian(dim, std::move(entries),
                             HamiltonianParams{hopping, interaction, boundary});
}

namespace {

void fix_sign(Eigen::VectorXd& v) {
    const double scale = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12 * scale) {
            if (v[i] < 0.0) v = -v;
            return;
        }
    }
}

GroundState dense_ground_state(const SparseHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.dense());
    if (solver.info() != Eigen::Success) {
        throw NumericalError("ground_state: dense eigensolver failed");
    }
    GroundState gs;
    gs.energy = solver.eigenvalues()(0);
    gs.amplitudes = solver.eigenvectors().col(0);
    gs.amplitudes.normalize();
    fix_sign(gs.amplitudes);
    return gs;
}

// Deterministic pseudo-random start vector (no seed parameter on this path).
Eigen::VectorXd lanczos_start(int dim) {
    Eigen::VectorXd v(dim);
    std::uint64_t x = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < dim; ++i) {
        x += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        v[i] = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
    }
    v.normalize();
    return v;
}

GroundState lanczos_ground_state(const SparseHamiltonian& h, double tol) {
    const int dim = h.dim();
    const int max_steps = std::min(dim, 400);
    const double h_norm = std::max(h.inf_norm(), 1.0);

    std::vector<Eigen::VectorXd> krylov;
    krylov.reserve(static_cast<std::size_t>(max_steps));
    std::vector<double> alpha;
    std::vector<double> beta;  // beta[k] couples step k and k+1

    krylov.push_back(lanczos_start(dim));
    Eigen::VectorXd w(dim);

    for (int step = 0; step < max_steps; ++step) {
        const Eigen::VectorXd& v = krylov.back();
        h.apply(v.data(), w.data());
        const double a = v.dot(w);
        alpha.push_back(a);

        w -= a * v;
        if (step > 0) w -= beta.back() * krylov[krylov.size() - 2];
        // Full reorthogonalization, two passes.
        for (int pass = 0; pass < 2; ++pass) {
            for (const Eigen::VectorXd& q : krylov) w -= q.dot(w) * q;
        }

        const int k = static_cast<int>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
        Eigen::VectorXd off = k > 1 ? Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1)
                                    : Eigen::VectorXd();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, off);
        const double ritz_value = tri.eigenvalues()(0);
        const Eigen::VectorXd y = tri.eigenvectors().col(0);

        const double b = w.norm();
        const double residual_bound = b * std::abs(y(k - 1));
        if (residual_bound <= tol * h_norm || b < 1e-14 * h_norm || k == dim) {
            Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
            for (int i = 0; i < k; ++i) x += y(i) * krylov[static_cast<std::size_t>(i)];
            x.normalize();
            h.apply(x.data(), w.data());
            const double energy = x.dot(w);
            const double residual = (w - energy * x).norm();
            if (residual > tol * h_norm && k < dim) {
                throw NumericalError("ground_state: Lanczos residual " + std::to_string(residual) +
                                     " above tolerance");
            }
            GroundState gs;
            gs.energy = energy;
            gs.amplitudes = std::move(x);
            fix_sign(gs.amplitudes);
            return gs;
        }

        beta.push_back(b);
        krylov.push_back(w / b);
    }
    throw NumericalError("ground_state: Lanczos did not converge in " +
                         std::to_string(max_steps) + " steps");
}

}  // namespace

GroundState ground_state(const SparseHamiltonian& h, double tol, EigenMethod method) {
    if (h.dim() < 1) throw InvalidArgument("ground_state: empty Hamiltonian");
    const bool dense = method == EigenMethod::dense ||
                       (method == EigenMethod::automatic && h.dim() <= kDenseDimLimit);
    GroundState gs = dense ? dense_ground_state(h) : lanczos_ground_state(h, tol);
    gs.v1_over_j = h.params().interaction / h.params().hopping;
    return gs;
}

double order_parameter(const Eigen::VectorXd& amplitudes, const FockBasis& basis) {
    const int sites = basis.sites();
    const int dim = basis.dim();
    if (amplitudes.size() != dim) {
        throw ShapeMismatch("order_parameter: amplitude vector does not match basis");
    }
    // Diagonal observable: S_pi = (1/L^2) sum_s |psi_s|^2 d(s)^2 with
    // d(s) = sum_i (-1)^i n_i(s); the cross terms collapse because every
    // (n_i - 1/2)(n_j - 1/2) is diagonal in the Fock basis.
    double s_pi = 0.0;
    for (int k = 0; k < dim; ++k) {
        const std::uint32_t state = basis.state(k);
        int staggered = 0;
        for (int i = 0; i < sites; ++i) {
            if ((state >> i) & 1u) staggered += (i % 2 == 0) ? 1 : -1;
        }
        s_pi += amplitudes[k] * amplitudes[k] * static_cast<double>(staggered * staggered);
    }
    s_pi /= static_cast<double>(sites) * static_cast<double>(sites);
    return 2.0 * std::sqrt(s_pi);
}

}  // namespace hesskit
