#include "plancat/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace plancat {

namespace {

// Block-size discipline for one family. extend_cap < 0 means unbounded.
struct SizeRule {
    int extend_cap;      // join allowed while size < extend_cap (if >= 0)
    int close_modulus;   // a finalized block's size must be divisible by this
    int exact_size;      // and equal to this, if >= 0

    bool can_extend(int size) const { return extend_cap < 0 || size < extend_cap; }
    bool can_finalize(int size) const {
        if (exact_size >= 0 && size != exact_size) return false;
        return size % close_modulus == 0;
    }
    // Fewest further points the open blocks still require.
    int deficit(int size) const {
        if (exact_size >= 0) return exact_size - size;
        return (close_modulus - size % close_modulus) % close_modulus;
    }
    // Points beyond the deficits must be consumable by whole future blocks.
    int bundle() const { return exact_size >= 0 ? exact_size : close_modulus; }
};

struct Generator {
    int total;
    SizeRule rule;
    const PartitionVisitor& visit;
    std::vector<std::vector<int>> blocks;
    std::vector<int> stack;  // open block indices, outermost first

    void run() {
        if (total == 0) {
            visit(SetPartition::void_partition());
            return;
        }
        step(1);
    }

    bool feasible(int next) const {
        const int remaining = total - next + 1;
        int need = 0;
        for (int b : stack) need += rule.deficit(static_cast<int>(blocks[b].size()));
        if (need > remaining) return false;
        return (remaining - need) % rule.bundle() == 0;
    }

    void step(int x) {
        if (x > total) {
            for (int b : stack)
                if (!rule.can_finalize(static_cast<int>(blocks[b].size()))) return;
            visit(SetPartition::from_blocks(total, blocks));
            return;
        }
        if (!feasible(x)) return;

        // Open a new block at x.
        blocks.push_back({x});
        stack.push_back(static_cast<int>(blocks.size()) - 1);
        step(x + 1);
        stack.pop_back();
        blocks.pop_back();

        // Join an open block, closing everything nested above it.
        for (int depth = static_cast<int>(stack.size()) - 1; depth >= 0; --depth) {
            const int b = stack[depth];
            bool closable_above = true;
            for (size_t i = depth + 1; i < stack.size(); ++i)
                if (!rule.can_finalize(static_cast<int>(blocks[stack[i]].size()))) {
                    closable_above = false;
                    break;
                }
            if (!closable_above || !rule.can_extend(static_cast<int>(blocks[b].size()))) continue;
            std::vector<int> popped(stack.begin() + depth + 1, stack.end());
            stack.resize(depth + 1);
            blocks[b].push_back(x);
            step(x + 1);
            blocks[b].pop_back();
            stack.insert(stack.end(), popped.begin(), popped.end());
        }
    }
};

void generate(int total, const SizeRule& rule, const PartitionVisitor& visit) {
    Generator gen{total, rule, visit, {}, {}};
    gen.run();
}

std::vector<SetPartition> collect_sorted(const std::function<void(const PartitionVisitor&)>& gen) {
    std::vector<SetPartition> out;
    gen([&](const SetPartition& p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        return a.to_string() < b.to_string();
    });
    return out;
}

void check_params(int p, int n) {
    if (p < 1) throw std::invalid_argument("family parameter p must be >= 1");
    if (n < 0) throw std::invalid_argument("family parameter n must be >= 0");
}

}  // namespace

void for_each_nc(int n, const PartitionVisitor& visit) {
    check_params(1, n);
    generate(n, SizeRule{-1, 1, -1}, visit);
}

void for_each_nc_p(int p, int n, const PartitionVisitor& visit) {
    check_params(p, n);
    generate(p * n, SizeRule{p, 1, p}, visit);
}

void for_each_multiple(int p, int n, const PartitionVisitor& visit) {
    check_params(p, n);
    generate(p * n, SizeRule{-1, p, -1}, visit);
}

std::vector<SetPartition> all_nc(int n) {
    return collect_sorted([&](const PartitionVisitor& v) { for_each_nc(n, v); });
}

std::vector<SetPartition> all_nc_p(int p, int n) {
    return collect_sorted([&](const PartitionVisitor& v) { for_each_nc_p(p, n, v); });
}

std::vector<SetPartition> all_multiple(int p, int n) {
    return collect_sorted([&](const PartitionVisitor& v) { for_each_multiple(p, n, v); });
}

namespace {

bool groups_cross(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        bool inside = false, outside = false;
        for (int e : b) {
            if (e > a[i] && e < a[i + 1]) inside = true;
            if (e < a[i] || e > a[i + 1]) outside = true;
        }
        if (inside && outside) return true;
    }
    return false;
}

bool group_crosses_any(const std::vector<std::vector<int>>& groups, size_t g) {
    for (size_t h = 0; h < groups.size(); ++h)
        if (h != g && (groups_cross(groups[g], groups[h]) || groups_cross(groups[h], groups[g])))
            return true;
    return false;
}

// Assign base blocks (in canonical order) to groups, pruning any prefix whose
// merged groups already cross; leaves of the recursion are exactly the
// non-crossing coarsenings.
void coarsen_rec(const SetPartition& base, size_t next_block, std::vector<std::vector<int>>& groups,
                 std::vector<SetPartition>& out) {
    if (next_block == base.blocks().size()) {
        out.push_back(SetPartition::from_blocks(base.n(), groups));
        return;
    }
    const auto& block = base.block(static_cast<int>(next_block));

    for (size_t g = 0; g < groups.size(); ++g) {
        std::vector<int> saved = groups[g];
        std::vector<int> merged;
        std::merge(saved.begin(), saved.end(), block.begin(), block.end(),
                   std::back_inserter(merged));
        groups[g].swap(merged);
        if (!group_crosses_any(groups, g)) coarsen_rec(base, next_block + 1, groups, out);
        groups[g].swap(saved);
    }

    groups.push_back(block);
    if (!group_crosses_any(groups, groups.size() - 1)) coarsen_rec(base, next_block + 1, groups, out);
    groups.pop_back();
}

}  // namespace

std::vector<SetPartition> coarsenings(const SetPartition& base) {
    if (!is_noncrossing(base)) throw std::invalid_argument("coarsenings requires non-crossing input");
    if (base.n() == 0) return {SetPartition::void_partition()};
    std::vector<std::vector<int>> groups;
    std::vector<SetPartition> out;
    coarsen_rec(base, 0, groups, out);
    std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        return a.to_string() < b.to_string();
    });
    return out;
}

namespace {

void extend_chain(std::vector<SetPartition>& prefix, int levels_left, const ChainVisitor& visit) {
    if (levels_left == 0) {
        visit(PartitionChain{prefix});
        return;
    }
    for (const auto& next : coarsenings(prefix.back())) {
        prefix.push_back(next);
        extend_chain(prefix, levels_left - 1, visit);
        prefix.pop_back();
    }
}

void chains_from_bases(const std::function<void(const PartitionVisitor&)>& bases, int m,
                       const ChainVisitor& visit) {
    if (m < 1) throw std::invalid_argument("chain length must be >= 1");
    bases([&](const SetPartition& p) {
        std::vector<SetPartition> prefix = {p};
        extend_chain(prefix, m - 1, visit);
    });
}

std::vector<PartitionChain> collect_chains(const std::function<void(const ChainVisitor&)>& gen) {
    std::vector<PartitionChain> out;
    gen([&](const PartitionChain& c) { out.push_back(c); });
    std::sort(out.begin(), out.end(), [](const PartitionChain& a, const PartitionChain& b) {
        return a.to_string() < b.to_string();
    });
    return out;
}

}  // namespace

void for_each_chain(int n, int m, const ChainVisitor& visit) {
    check_params(1, n);
    chains_from_bases([&](const PartitionVisitor& v) { for_each_nc(n, v); }, m, visit);
}

void for_each_double(int q, int n, const ChainVisitor& visit) { for_each_mtuple(2, q, n, visit); }

void for_each_mtuple(int m, int p, int n, const ChainVisitor& visit) {
    check_params(p, n);
    chains_from_bases([&](const PartitionVisitor& v) { for_each_nc_p(p, n, v); }, m, visit);
}

std::vector<PartitionChain> all_chains(int n, int m) {
    return collect_chains([&](const ChainVisitor& v) { for_each_chain(n, m, v); });
}

std::vector<PartitionChain> all_double(int q, int n) {
    return collect_chains([&](const ChainVisitor& v) { for_each_double(q, n, v); });
}

std::vector<PartitionChain> all_mtuple(int m, int p, int n) {
    return collect_chains([&](const ChainVisitor& v) { for_each_mtuple(m, p, n, v); });
}

namespace {

BigCount count_stream(const std::function<void(const PartitionVisitor&)>& gen) {
    BigCount count = 0;
    gen([&](const SetPartition&) { ++count; });
    return count;
}

// Number of refinement chains of the given length starting at p, memoized on
// the canonical serialization per level.
BigCount chain_extensions(const SetPartition& p, int length,
                          std::vector<std::map<std::string, BigCount>>& memo) {
    if (length == 1) return 1;
    auto& level = memo[length - 2];
    const std::string key = p.to_string();
    if (auto it = level.find(key); it != level.end()) return it->second;
    BigCount total = 0;
    for (const auto& q : coarsenings(p)) total += chain_extensions(q, length - 1, memo);
    return level.emplace(key, std::move(total)).first->second;
}

BigCount count_chain_family(const std::function<void(const PartitionVisitor&)>& bases, int m) {
    if (m < 1) throw std::invalid_argument("chain length must be >= 1");
    std::vector<std::map<std::string, BigCount>> memo(std::max(0, m - 1));
    BigCount total = 0;
    bases([&](const SetPartition& p) { total += chain_extensions(p, m, memo); });
    return total;
}

}  // namespace

BigCount count_nc(int n) {
    return count_stream([&](const PartitionVisitor& v) { for_each_nc(n, v); });
}

BigCount count_nc_p(int p, int n) {
    return count_stream([&](const PartitionVisitor& v) { for_each_nc_p(p, n, v); });
}

BigCount count_multiple(int p, int n) {
    return count_stream([&](const PartitionVisitor& v) { for_each_multiple(p, n, v); });
}

BigCount count_chains(int n, int m) {
    check_params(1, n);
    return count_chain_family([&](const PartitionVisitor& v) { for_each_nc(n, v); }, m);
}

BigCount count_double(int q, int n) { return count_mtuple(2, q, n); }

BigCount count_mtuple(int m, int p, int n) {
    check_params(p, n);
    return count_chain_family([&](const PartitionVisitor& v) { for_each_nc_p(p, n, v); }, m);
}

std::vector<BigCount> box_histogram(int p, int n) {
    check_params(p, n);
    std::vector<BigCount> histogram(n + 1, BigCount(0));
    for_each_nc_p(p, n, [&](const SetPartition& part) { ++histogram[box_count(part)]; });
    return histogram;
}

}  // namespace plancat
