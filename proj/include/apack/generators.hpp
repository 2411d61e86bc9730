#pragma once

#include <cstdint>
#include <random>

#include "apack/graph.hpp"

namespace apack {

/// Uniform draw from [0, bound) by rejection sampling on top of mt19937.
/// mt19937's output stream is pinned by the language standard and the
/// rejection step is spelled out here, so identical seeds give identical
/// graphs on every platform.
std::uint32_t rand_below(std::mt19937& rng, std::uint32_t bound);

/// Erdős–Rényi style graph: each pair becomes an edge with the given
/// probability.
Graph random_density_graph(int n, double density, std::uint32_t seed);

/// Random d-regular simple graph via the configuration model: pair up d
/// stubs per vertex and resample whole matchings until one is free of
/// self-loops and parallel edges. Requires n*d even and d < n.
Graph configuration_model(int n, int degree, std::uint32_t seed);

/// rows x cols grid, vertex id = r*cols + c.
Graph grid_graph(int rows, int cols);

/// The first `count` entries of a seeded Fisher–Yates shuffle of 0..n-1,
/// in shuffle order (callers split and sort as needed).
std::vector<int> sample_distinct(int n, int count, std::mt19937& rng);

}  // namespace apack
