#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hesskit/fock.hpp"

namespace hesskit {

enum class Phase : int { LL = 0, CDW = 1 };

inline constexpr double kTransitionV1 = 1.0;  // label rule: LL iff V1/J < 1

enum class Split { train, test };

struct LabeledSample {
    Split split = Split::train;
    double v1_over_j = 0.0;
    Phase label = Phase::LL;
    int global_sign = 1;
    bool is_ood = false;
    std::vector<double> x;
};

enum class SignMode { all_positive, imbalanced, balanced };

struct DataGenConfig {
    int sites = 12;
    std::vector<double> v1_grid;  // >= 0, strictly increasing
    Boundary boundary = Boundary::periodic;
    SignMode sign_mode = SignMode::all_positive;
    double sign_fraction = 0.05;  // negative-sign share for imbalanced mode
    double ood_fraction = 0.0;    // share of test samples with permuted components
    std::uint64_t rng_seed = 1;
};

// 100 geometric points in [0.05, 20] plus V1 = 0.
std::vector<double> default_v1_grid();

void validate(const DataGenConfig& cfg);

// Ground states along the grid, in grid order. Grid points are independent
// solves and run in parallel.
struct GridPoint {
    double v1_over_j;
    GroundState state;
    double order_param;
};
std::vector<GridPoint> solve_grid(int sites, const std::vector<double>& v1_grid,
                                  Boundary boundary);

// Alternating split (even grid index -> train), then sign flips and OOD
// permutations drawn from rng_seed. OOD permutations touch only interior
// test points so every OOD sample has a V1-neighbour on both sides.
std::vector<LabeledSample> assemble_samples(const std::vector<GridPoint>& grid,
                                            const DataGenConfig& cfg);

std::vector<LabeledSample> make_dataset(const DataGenConfig& cfg);

std::vector<LabeledSample> filter_split(const std::vector<LabeledSample>& samples, Split split);

// One record per line: split v1_over_j label global_sign is_ood amplitudes...
// Lines starting with '#' are comments. Column order is part of the format.
void write_dataset(std::ostream& out, const std::vector<LabeledSample>& samples);
void write_dataset_file(const std::string& path, const std::vector<LabeledSample>& samples);
std::vector<LabeledSample> read_dataset(std::istream& in);
std::vector<LabeledSample> read_dataset_file(const std::string& path);

const char* to_string(Phase p);
const char* to_string(Split s);

}  // namespace hesskit
