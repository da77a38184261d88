#ifndef CHROMCON_TESTS_BRUTE_HPP
#define CHROMCON_TESTS_BRUTE_HPP

#include <vector>

#include "chromcon/coloring.hpp"
#include "chromcon/graph.hpp"
#include "chromcon/templates.hpp"

// Test-only oracles: direct enumerations, independent of the library's
// search paths.
namespace chromcon::brute {

/// Size of the smallest vertex set whose removal disconnects g, or
/// n+1 when none exists (complete graphs).
int min_cutset_size(const Graph& g);

bool connectivity_at_least(const Graph& g, int kappa);

/// Tries all |C|^n assignments.
bool exists_respecting_coloring(const Graph& g, const Template& t, const ColorSet& c);

int chromatic_number(const Graph& g);

/// All ways of dropping the values into q (possibly empty) labeled parts.
bool partition_feasible(const std::vector<int>& values, int k, int q);

}  // namespace chromcon::brute

#endif
