#include "plancat/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plancat {

void SetPartition::rebuild_index() {
    block_of_.assign(n_ + 1, -1);
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
        for (int e : blocks_[b]) block_of_[e] = b;
}

SetPartition SetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
    if (n < 0) throw std::invalid_argument("ground-set size must be nonnegative");
    std::vector<int> seen(n + 1, 0);
    int covered = 0;
    for (auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("empty block");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 1 || e > n)
                throw std::invalid_argument("element " + std::to_string(e) + " out of range [1.." +
                                            std::to_string(n) + "]");
            if (seen[e]) throw std::invalid_argument("element " + std::to_string(e) + " duplicated");
            seen[e] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("blocks do not cover {1..n}");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SetPartition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    p.rebuild_index();
    return p;
}

SetPartition SetPartition::identity(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n);
    for (int e = 1; e <= n; ++e) blocks.push_back({e});
    return from_blocks(n, std::move(blocks));
}

SetPartition SetPartition::single_block(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return from_blocks(n, {all});
}

std::string SetPartition::to_string() const {
    std::string out;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += '/';
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(blocks_[b][i]);
        }
    }
    return out;
}

SetPartition SetPartition::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
            s.end());
    if (s.empty()) return void_partition();
    std::vector<std::vector<int>> blocks;
    int n = 0;
    std::stringstream block_stream(s);
    std::string block_text;
    while (std::getline(block_stream, block_text, '/')) {
        std::vector<int> block;
        std::stringstream elem_stream(block_text);
        std::string elem_text;
        while (std::getline(elem_stream, elem_text, ',')) {
            if (elem_text.empty()) throw std::invalid_argument("malformed partition text");
            block.push_back(std::stoi(elem_text));
            ++n;
        }
        blocks.push_back(std::move(block));
    }
    return from_blocks(n, std::move(blocks));
}

bool is_noncrossing(const SetPartition& p) {
    const auto arcs = standard_arcs(p);
    // Two blocks cross iff two of their standard arcs interleave.
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            const Arc& a = arcs[i];
            const Arc& b = arcs[j];
            if (a.left < b.left && b.left < a.right && a.right < b.right &&
                p.block_index_of(a.left) != p.block_index_of(b.left))
                return false;
        }
    return true;
}

std::vector<Arc> standard_arcs(const SetPartition& p) {
    std::vector<Arc> arcs;
    for (const auto& block : p.blocks())
        for (size_t i = 0; i + 1 < block.size(); ++i) arcs.push_back({block[i], block[i + 1]});
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

int box_count(const SetPartition& p) {
    if (!is_noncrossing(p)) throw std::invalid_argument("box_count requires a non-crossing partition");
    int boxes = 0;
    int max_seen = 0;  // largest right end among earlier blocks
    for (const auto& block : p.blocks()) {
        if (block.back() > max_seen) {
            ++boxes;  // not nested in any earlier block
            max_seen = block.back();
        }
    }
    return boxes;
}

bool is_refinement(const SetPartition& fine, const SetPartition& coarse) {
    if (fine.n() != coarse.n()) throw std::invalid_argument("refinement check needs equal ground sets");
    for (const auto& block : fine.blocks()) {
        const int target = coarse.block_index_of(block.front());
        for (int e : block)
            if (coarse.block_index_of(e) != target) return false;
    }
    return true;
}

namespace {

// Merge-find over element groups; used by nc_join.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    // a, b sorted and disjoint; crossing iff some consecutive pair of one
    // straddles exactly one endpoint region of the other.
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        // does b have an element inside (a[i], a[i+1]) and one outside [a[i], a[i+1]]?
        bool inside = false, outside = false;
        for (int e : b) {
            if (e > a[i] && e < a[i + 1]) inside = true;
            if (e < a[i] || e > a[i + 1]) outside = true;
        }
        if (inside && outside) return true;
    }
    return false;
}

}  // namespace

SetPartition nc_join(const SetPartition& a, const SetPartition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("nc_join needs equal ground sets");
    if (!is_noncrossing(a) || !is_noncrossing(b))
        throw std::invalid_argument("nc_join requires non-crossing operands");
    const int n = a.n();
    Dsu dsu(n);
    for (const auto& block : a.blocks())
        for (size_t i = 1; i < block.size(); ++i) dsu.unite(block[0], block[i]);
    for (const auto& block : b.blocks())
        for (size_t i = 1; i < block.size(); ++i) dsu.unite(block[0], block[i]);

    // Lattice join first, then merge crossing groups until stable: every such
    // merge is forced in any non-crossing coarsening, so the fixpoint is the
    // minimal one.
    for (;;) {
        std::vector<std::vector<int>> groups(n + 1);
        for (int e = 1; e <= n; ++e) groups[dsu.find(e)].push_back(e);
        std::vector<std::vector<int>*> live;
        for (auto& g : groups)
            if (!g.empty()) live.push_back(&g);
        bool merged = false;
        for (size_t i = 0; i < live.size() && !merged; ++i)
            for (size_t j = i + 1; j < live.size() && !merged; ++j)
                if (blocks_cross(*live[i], *live[j]) || blocks_cross(*live[j], *live[i])) {
                    dsu.unite(live[i]->front(), live[j]->front());
                    merged = true;
                }
        if (!merged) {
            std::vector<std::vector<int>> blocks;
            for (auto* g : live) blocks.push_back(*g);
            return SetPartition::from_blocks(n, std::move(blocks));
        }
    }
}

SetPartition contract(const SetPartition& p, int k) {
    if (k < 1) throw std::invalid_argument("contraction modulus must be positive");
    if (p.n() % k != 0) throw std::invalid_argument("ground-set size not divisible by modulus");
    std::vector<std::vector<int>> blocks;
    for (const auto& block : p.blocks()) {
        std::vector<int> image;
        for (int e : block)
            if ((e - 1) % k == 0) image.push_back((e - 1) / k + 1);
        if (!image.empty()) blocks.push_back(std::move(image));
    }
    return SetPartition::from_blocks(p.n() / k, std::move(blocks));
}

SetPartition comb_partition(int total, int m, int r) {
    if (m < 1 || r < 1 || r > m) throw std::invalid_argument("comb parameters out of range");
    if (total % m != 0) throw std::invalid_argument("comb total not divisible by group size");
    std::vector<std::vector<int>> blocks;
    for (int k = 0; k < total / m; ++k) {
        std::vector<int> block;
        for (int i = 1; i <= r; ++i) block.push_back(m * k + i);
        blocks.push_back(std::move(block));
        for (int i = r + 1; i <= m; ++i) blocks.push_back({m * k + i});
    }
    return SetPartition::from_blocks(total, std::move(blocks));
}

std::string PartitionChain::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ';';
        out += parts[i].to_string();
    }
    return out;
}

PartitionChain PartitionChain::parse(const std::string& text) {
    PartitionChain chain;
    std::string piece;
    std::stringstream stream(text);
    while (std::getline(stream, piece, ';')) chain.parts.push_back(SetPartition::parse(piece));
    if (!text.empty() && text.back() == ';') chain.parts.push_back(SetPartition::void_partition());
    if (text.empty()) chain.parts.push_back(SetPartition::void_partition());
    return chain;
}

void validate_chain(const PartitionChain& chain) {
    if (chain.parts.empty()) throw std::invalid_argument("chain must have at least one member");
    const int n = chain.parts.front().n();
    for (const auto& p : chain.parts) {
        if (p.n() != n) throw std::invalid_argument("chain members disagree on ground set");
        if (!is_noncrossing(p)) throw std::invalid_argument("chain member is crossing");
    }
    for (size_t i = 0; i + 1 < chain.parts.size(); ++i)
        if (!is_refinement(chain.parts[i], chain.parts[i + 1]))
            throw std::invalid_argument("chain member " + std::to_string(i + 1) +
                                        " does not refine its successor");
}

bool is_uniform_partition(const SetPartition& p, int size) {
    for (const auto& block : p.blocks())
        if (static_cast<int>(block.size()) != size) return false;
    return true;
}

bool has_block_sizes_multiple_of(const SetPartition& p, int m) {
    for (const auto& block : p.blocks())
        if (block.size() % m != 0) return false;
    return true;
}

}  // namespace plancat
