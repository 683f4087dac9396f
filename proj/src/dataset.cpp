#include "hesskit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hesskit/errors.hpp"
#include "hesskit/parallel.hpp"
#include "hesskit/rng.hpp"

namespace hesskit {

std::vector<double> default_v1_grid() {
    std::vector<double> grid;
    grid.push_back(0.0);
    const int count = 100;
    const double lo = 0.05;
    const double hi = 20.0;
    const double ratio = std::pow(hi / lo, 1.0 / (count - 1));
    for (int i = 0; i < count; ++i) {
        grid.push_back(lo * std::pow(ratio, i));
    }
    return grid;
}

void validate(const DataGenConfig& cfg) {
    if (cfg.sites < 2 || cfg.sites % 2 != 0) {
        throw InvalidArgument("DataGenConfig: site count must be even and >= 2");
    }
    if (cfg.v1_grid.empty()) throw InvalidArgument("DataGenConfig: empty V1 grid");
    for (std::size_t i = 0; i < cfg.v1_grid.size(); ++i) {
        if (cfg.v1_grid[i] < 0.0) throw InvalidArgument("DataGenConfig: V1 values must be >= 0");
        if (i > 0 && cfg.v1_grid[i] <= cfg.v1_grid[i - 1]) {
            throw InvalidArgument("DataGenConfig: V1 grid must be strictly increasing");
        }
    }
    if (cfg.sign_mode == SignMode::imbalanced &&
        (cfg.sign_fraction <= 0.0 || cfg.sign_fraction > 0.5)) {
        throw InvalidArgument("DataGenConfig: imbalanced sign fraction must be in (0, 0.5]");
    }
    if (cfg.ood_fraction < 0.0 || cfg.ood_fraction >= 1.0) {
        throw InvalidArgument("DataGenConfig: ood_fraction must be in [0, 1)");
    }
}

std::vector<GridPoint> solve_grid(int sites, const std::vector<double>& v1_grid,
                                  Boundary boundary) {
    const FockBasis basis(sites, sites / 2);
    std::vector<GridPoint> points(v1_grid.size());
    parallel_for(v1_grid.size(), [&](std::size_t i) {
        const SparseHamiltonian h = build_hamiltonian(basis, 1.0, v1_grid[i], boundary);
        GridPoint p;
        p.v1_over_j = v1_grid[i];
        p.state = ground_state(h);
        p.order_param = order_parameter(p.state.amplitudes, basis);
        points[i] = std::move(p);
    });
    return points;
}

std::vector<LabeledSample> assemble_samples(const std::vector<GridPoint>& grid,
                                            const DataGenConfig& cfg) {
    validate(cfg);
    std::vector<LabeledSample> samples;
    samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        LabeledSample s;
        s.split = (i % 2 == 0) ? Split::train : Split::test;
        s.v1_over_j = grid[i].v1_over_j;
        s.label = s.v1_over_j < kTransitionV1 ? Phase::LL : Phase::CDW;
        const Eigen::VectorXd& amp = grid[i].state.amplitudes;
        s.x.assign(amp.data(), amp.data() + amp.size());
        samples.push_back(std::move(s));
    }

    Rng rng(cfg.rng_seed);

    // Sign assignment over the full sample list.
    const std::size_t n = samples.size();
    if (cfg.sign_mode != SignMode::all_positive) {
        std::size_t negatives = 0;
        if (cfg.sign_mode == SignMode::balanced) {
            negatives = (n + 1) / 2;
        } else {
            negatives = static_cast<std::size_t>(std::floor(cfg.sign_fraction * n));
        }
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        for (std::size_t k = 0; k < negatives; ++k) {
            LabeledSample& s = samples[order[k]];
            s.global_sign = -1;
            for (double& v : s.x) v = -v;
        }
    }

    // OOD permutations, test split only, endpoints excluded.
    if (cfg.ood_fraction > 0.0) {
        std::vector<std::size_t> test_idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (samples[i].split == Split::test) test_idx.push_back(i);
        }
        if (test_idx.size() > 2) {
            std::vector<std::size_t> interior(test_idx.begin() + 1, test_idx.end() - 1);
            const std::size_t ood_count = std::min(
                interior.size(),
                static_cast<std::size_t>(std::floor(cfg.ood_fraction * test_idx.size())));
            rng.shuffle(interior);
            std::vector<std::size_t> chosen(interior.begin(), interior.begin() + ood_count);
            std::sort(chosen.begin(), chosen.end());
            for (std::size_t idx : chosen) {
                LabeledSample& s = samples[idx];
                s.is_ood = true;
                rng.shuffle(s.x);
            }
        }
    }
    return samples;
}

std::vector<LabeledSample> make_dataset(const DataGenConfig& cfg) {
    validate(cfg);
    return assemble_samples(solve_grid(cfg.sites, cfg.v1_grid, cfg.boundary), cfg);
}

std::vector<LabeledSample> filter_split(const std::vector<LabeledSample>& samples, Split split) {
    std::vector<LabeledSample> out;
    for (const auto& s : samples) {
        if (s.split == split) out.push_back(s);
    }
    return out;
}

const char* to_string(Phase p) { return p == Phase::LL ? "LL" : "CDW"; }
const char* to_string(Split s) { return s == Split::train ? "train" : "test"; }

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_dataset(std::ostream& out, const std::vector<LabeledSample>& samples) {
    out << "# hesskit dataset v1\n";
    out << "# columns: split v1_over_j label global_sign is_ood amplitudes...\n";
    for (const auto& s : samples) {
        out << to_string(s.split) << ' ' << format_double(s.v1_over_j) << ' '
            << to_string(s.label) << ' ' << s.global_sign << ' ' << (s.is_ood ? 1 : 0);
        for (double v : s.x) out << ' ' << format_double(v);
        out << '\n';
    }
}

void write_dataset_file(const std::string& path, const std::vector<LabeledSample>& samples) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open dataset file for writing: " + path);
    write_dataset(out, samples);
}

std::vector<LabeledSample> read_dataset(std::istream& in) {
    std::vector<LabeledSample> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        LabeledSample s;
        std::string split_str, label_str;
        int sign = 0, ood = 0;
        if (!(ls >> split_str >> s.v1_over_j >> label_str >> sign >> ood)) {
            throw ConfigError("dataset parse error: " + line.substr(0, 64));
        }
        if (split_str == "train") {
            s.split = Split::train;
        } else if (split_str == "test") {
            s.split = Split::test;
        } else {
            throw ConfigError("dataset parse error: bad split '" + split_str + "'");
        }
        if (label_str == "LL") {
            s.label = Phase::LL;
        } else if (label_str == "CDW") {
            s.label = Phase::CDW;
        } else {
            throw ConfigError("dataset parse error: bad label '" + label_str + "'");
        }
        s.global_sign = sign;
        s.is_ood = ood != 0;
        double v;
        while (ls >> v) s.x.push_back(v);
        if (s.x.empty()) throw ConfigError("dataset parse error: record without amplitudes");
        samples.push_back(std::move(s));
    }
    return samples;
}

std::vector<LabeledSample> read_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open dataset file: " + path);
    return read_dataset(in);
}

}  // namespace hesskit
