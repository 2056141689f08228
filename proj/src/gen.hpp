#pragma once

#include <cstdint>
#include <string>

#include "tree.hpp"

namespace hopnav {

// Path 1-2-...-n with unit weights; its tree metric is the uniform line.
WeightedTree uniform_line(long long n);

WeightedTree gen_random_tree(long long n, uint64_t seed, long long max_w, bool float_weights);

// Instance text for the generator kinds uniform-line, random-tree,
// random-points, and random-matrix. Same arguments, same bytes.
std::string gen_instance(const std::string& kind, long long n, uint64_t seed, long long max_w,
                         int dim, bool float_weights);

}  // namespace hopnav
