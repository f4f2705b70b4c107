// Brute-force reference computations, written independently of the main code paths.
#pragma once

#include <cstdint>

#include "klc/check.hpp"

namespace klc {

// random IC problems built from a known answer; solve_ic and a plain linear
// solve over Q of the bar-invariance equations must both recover it
CheckResult oracle_ic_random(int problems, int max_size, std::uint64_t seed);
// rsk on all of S_n: pairs of standard tableaux of one shape, inverse round-trips, n! distinct pairs
CheckResult oracle_rsk_bijective(int n);
// every slide order rectifies a random skew tableau to the same straight tableau, also P(reading word)
CheckResult oracle_jdt_slide_orders(int tableaux, int max_cells, std::uint64_t seed);
// bruhat_leq against subwords of a reduced word, all pairs in S_n
CheckResult oracle_bruhat_subword(int n);
// induced_cell_labels sizes against Littlewood-Richardson numbers counted from skew fillings
CheckResult oracle_lr_counts(int n);

}  // namespace klc
