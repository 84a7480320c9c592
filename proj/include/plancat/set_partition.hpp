#pragma once

#include <string>
#include <vector>

// Core value types for set partitions of [n] = {1,...,n} in canonical block
// form, together with the structural predicates and constructions used by the
// rest of the library: planarity, boxes, refinement, the non-crossing join,
// contraction and comb partitions.
//
// All values are immutable after construction and every operation is a pure
// function, so values can be shared freely across threads.

namespace plancat {

// An arc of a standard diagram: endpoints are consecutive elements of a block.
struct Arc {
    int left = 0;
    int right = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A partition of [n] held in canonical form: blocks sorted by their minimum
// element, elements ascending inside each block, union exactly {1,...,n}.
// n = 0 is the void partition (no blocks).
class SetPartition {
  public:
    SetPartition() = default;  // void partition

    // Validates and canonicalizes. Throws std::invalid_argument on empty
    // blocks, duplicated or out-of-range elements, or an incomplete cover.
    static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

    static SetPartition void_partition() { return SetPartition(); }
    static SetPartition identity(int n);      // n singleton blocks
    static SetPartition single_block(int n);  // {1,...,n} (n >= 1)

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[i]; }
    // 0-based index of the block containing element e (1 <= e <= n).
    int block_index_of(int e) const { return block_of_[e]; }

    // Canonical text form: blocks joined by "/", elements by ",".
    // The void partition serializes as the empty string.
    std::string to_string() const;

    // Inverse of to_string for canonical input over [n] where n is the total
    // number of elements mentioned; "" parses to the void partition.
    static SetPartition parse(const std::string& text);

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.blocks_ < b.blocks_;
    }

  private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;  // element -> block index, block_of_[0] unused

    void rebuild_index();
};

// True iff no i<j<k<l exist with {i,k} and {j,l} in two distinct blocks.
bool is_noncrossing(const SetPartition& p);

// Arcs joining consecutive elements of each block, sorted by (left, right).
std::vector<Arc> standard_arcs(const SetPartition& p);

// Number of blocks not nested inside any other block. Requires non-crossing
// input (throws otherwise); the void partition has 0 boxes.
int box_count(const SetPartition& p);

// True iff every block of fine is contained in some block of coarse.
// Throws on ground-set size mismatch.
bool is_refinement(const SetPartition& fine, const SetPartition& coarse);

// The minimal non-crossing partition coarser than both operands (their join
// in the non-crossing lattice). Inputs must be non-crossing over the same n.
SetPartition nc_join(const SetPartition& a, const SetPartition& b);

// Keep elements congruent to 1 mod k, relabel k*j+1 -> j+1, drop emptied
// blocks. Requires k >= 1 and k | n.
SetPartition contract(const SetPartition& p, int k);

// Partition of [total] with blocks {m*k+1, ..., m*k+r} for each group of m
// consecutive elements, all remaining elements singletons. Requires
// 1 <= r <= m and m | total. r = 1 yields the identity partition.
SetPartition comb_partition(int total, int m, int r);

// An ordered refinement chain (P1 <= ... <= Pm) of non-crossing partitions
// over one ground set. Carrier for double and m-tuple planar partitions.
struct PartitionChain {
    std::vector<SetPartition> parts;

    int length() const { return static_cast<int>(parts.size()); }
    int n() const { return parts.empty() ? 0 : parts.front().n(); }

    // Members joined by ";".
    std::string to_string() const;
    static PartitionChain parse(const std::string& text);

    friend bool operator==(const PartitionChain&, const PartitionChain&) = default;
    friend bool operator<(const PartitionChain& a, const PartitionChain& b) {
        return a.parts < b.parts;
    }
};

// Throws std::invalid_argument unless every member is non-crossing over the
// same ground set and each one refines the next.
void validate_chain(const PartitionChain& chain);

// True iff every block of p has exactly size elements.
bool is_uniform_partition(const SetPartition& p, int size);

// True iff every block size of p is a positive multiple of m.
bool has_block_sizes_multiple_of(const SetPartition& p, int m);

}  // namespace plancat
