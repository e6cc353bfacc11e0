#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsk/partition.hpp"
#include "qsk/symfunc.hpp"

namespace qsk {

// Hook length of the cell (row, col), both 1-based, inside `shape`.
int hook_length(const Partition& shape, int row, int col);

// A (k+1)-core: no cell has hook length exactly k+1.
bool is_core(const Partition& c, int k);

// The bijection between k-bounded partitions and (k+1)-cores. Forward
// direction builds the core bottom row up, sliding each row right past the
// cells whose hooks exceed k; backward direction counts, per row, the cells
// with hook length at most k. Both directions are asserted to round-trip.
Partition core_from_bounded(const Partition& lambda, int k);
Partition bounded_from_core(const Partition& c, int k);

// Weak Pieri rule at t=1: all k-bounded mu with |mu| = |lambda| + r whose core
// contains core(lambda) with a horizontal-strip difference covering exactly r
// distinct residues (j-i mod k+1). Sorted output.
std::vector<Partition> weak_pieri_targets(const Partition& lambda, int r, int k);

// Optional on-disk cache of k-Schur tables ("" disables, the default). Files
// are named kschur-n{n}-d{degree}.json and replaced atomically; the cache is
// advisory, recomputation must give identical content.
void set_kschur_cache_dir(const std::string& dir);
std::string kschur_cache_dir();

// All k-Schur functions (k = n-1, t = 1) of the given degree, written in the
// h-generators: invert the k-Kostka matrix built from iterated weak Pieri
// products, asserting unitriangularity under dominance along the way.
const std::map<Partition, HPoly>& kschur_table(int n, int degree);
const HPoly& kschur_in_h(const Partition& lambda, int n);

// s^{(k)}_{lambda u R_i} = s^{(k)}_lambda * s_{R_i}?
bool rectangle_factorization_check(const Partition& lambda, int i, int n);

}  // namespace qsk
