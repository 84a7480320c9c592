#pragma once

#include <functional>
#include <vector>

#include "plancat/fuss_catalan.hpp"
#include "plancat/set_partition.hpp"

// Exhaustive generators for the counted families:
//   nc        non-crossing partitions of [n]
//   nc_p      non-crossing partitions of [p*n] with every block of size p
//   multiple  non-crossing partitions of [p*n] with block sizes multiples of p
//   chains    refinement chains (P1 <= ... <= Pm) of non-crossing partitions
//   double_   chains of length 2 whose first member is a q-partition
//   mtuple    chains of length m whose first member is a p-partition
//
// Generation extends partial diagrams left to right over a stack of open
// blocks, pruning on remaining capacity, so it never touches crossing
// partitions. for_each_* streams in a fixed recursion order; the all_*
// variants materialize sorted by canonical serialization. Streams share no
// state and may run in parallel.

namespace plancat {

using PartitionVisitor = std::function<void(const SetPartition&)>;
using ChainVisitor = std::function<void(const PartitionChain&)>;

void for_each_nc(int n, const PartitionVisitor& visit);
void for_each_nc_p(int p, int n, const PartitionVisitor& visit);
void for_each_multiple(int p, int n, const PartitionVisitor& visit);

std::vector<SetPartition> all_nc(int n);
std::vector<SetPartition> all_nc_p(int p, int n);
std::vector<SetPartition> all_multiple(int p, int n);

// Non-crossing coarsenings of base, base included, sorted by serialization.
std::vector<SetPartition> coarsenings(const SetPartition& base);

void for_each_chain(int n, int m, const ChainVisitor& visit);
void for_each_double(int q, int n, const ChainVisitor& visit);
void for_each_mtuple(int m, int p, int n, const ChainVisitor& visit);

std::vector<PartitionChain> all_chains(int n, int m);
std::vector<PartitionChain> all_double(int q, int n);
std::vector<PartitionChain> all_mtuple(int m, int p, int n);

// Streaming / memoized counts; equal to the lengths of the all_* results.
BigCount count_nc(int n);
BigCount count_nc_p(int p, int n);
BigCount count_multiple(int p, int n);
BigCount count_chains(int n, int m);
BigCount count_double(int q, int n);
BigCount count_mtuple(int m, int p, int n);

// Entry k = number of p-partitions of [p*n] with exactly k boxes, k = 0..n.
std::vector<BigCount> box_histogram(int p, int n);

}  // namespace plancat
