#include "voa/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace voa {

namespace {

// Chain sum over legs[pos..] with `incoming` on the open edge; `acc` carries
// the product of the vertex values already fixed. Zero vertices prune the
// whole branch.
void chain_rec(const VoaSpec& spec, const std::vector<int>& legs, std::size_t pos, int incoming,
               const Int& acc, Int& total) {
    const int l = spec.size();
    if (pos + 2 == legs.size()) {
        const long long v = spec.s(spec.dual[incoming], legs[pos], legs[pos + 1]);
        if (v != 0) total += acc * v;
        return;
    }
    for (int edge = 0; edge < l; ++edge) {
        const long long v = spec.s(spec.dual[incoming], legs[pos], edge);
        if (v == 0) continue;
        chain_rec(spec, legs, pos + 1, edge, acc * v, total);
    }
}

Int chain_sum(const VoaSpec& spec, const std::vector<int>& legs) {
    const int l = spec.size();
    if (legs.size() == 3) return Int(spec.s(legs[0], legs[1], legs[2]));
    Int total = 0;
    for (int edge = 0; edge < l; ++edge) {
        const long long v = spec.s(legs[0], legs[1], edge);
        if (v == 0) continue;
        chain_rec(spec, legs, 2, edge, Int(v), total);
    }
    return total;
}

std::vector<int> padded_legs(const VoaSpec& spec, const Insertion& ins) {
    std::vector<int> legs = ins.to_list();
    while (legs.size() < 3) legs.push_back(spec.vacuum);
    return legs;
}

// Enumerates the loop labels, then runs the genus-zero chain on the
// extended leg list.
Int caterpillar_rec(const VoaSpec& spec, std::vector<int>& legs, long long loops) {
    if (loops == 0) return chain_sum(spec, legs);
    Int total = 0;
    for (int mu = 0; mu < spec.size(); ++mu) {
        legs.push_back(mu);
        legs.push_back(spec.dual[mu]);
        total += caterpillar_rec(spec, legs, loops - 1);
        legs.pop_back();
        legs.pop_back();
    }
    return total;
}

class TreeSum {
  public:
    explicit TreeSum(const VoaSpec& spec) : spec_(spec) {}

    Int genus0(const std::vector<int>& legs) {
        if (legs.size() == 3) return Int(spec_.s(legs[0], legs[1], legs[2]));

        std::vector<int> key = legs;
        std::sort(key.begin(), key.end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const std::size_t mid = legs.size() / 2;
        std::vector<int> left(legs.begin(), legs.begin() + mid);
        std::vector<int> right(legs.begin() + mid, legs.end());
        left.push_back(0);
        right.push_back(0);
        Int total = 0;
        for (int mu = 0; mu < spec_.size(); ++mu) {
            left.back() = mu;
            Int lv = genus0(left);
            if (lv == 0) continue;
            right.back() = spec_.dual[mu];
            total += lv * genus0(right);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

  private:
    const VoaSpec& spec_;
    std::map<std::vector<int>, Int> memo_;
};

Int tree_with_loops(const VoaSpec& spec, TreeSum& sum, std::vector<int>& legs, long long loops) {
    if (loops == 0) return sum.genus0(legs);
    Int total = 0;
    for (int mu = 0; mu < spec.size(); ++mu) {
        legs.push_back(mu);
        legs.push_back(spec.dual[mu]);
        total += tree_with_loops(spec, sum, legs, loops - 1);
        legs.pop_back();
        legs.pop_back();
    }
    return total;
}

}  // namespace

Int oracle_caterpillar(const VoaSpec& spec, const Insertion& ins, long long genus) {
    std::vector<int> legs = padded_legs(spec, ins);
    return caterpillar_rec(spec, legs, genus);
}

Int oracle_tree(const VoaSpec& spec, const Insertion& ins, long long genus) {
    std::vector<int> legs = padded_legs(spec, ins);
    TreeSum sum(spec);
    return tree_with_loops(spec, sum, legs, genus);
}

Int rank_oracle(const VoaSpec& spec, const Insertion& ins, long long genus) {
    const Int chain = oracle_caterpillar(spec, ins, genus);
    const Int tree = oracle_tree(spec, ins, genus);
    if (chain != tree)
        throw std::logic_error("oracle decompositions disagree: chain=" + chain.str() +
                               " tree=" + tree.str());
    return chain;
}

double oracle_cost_estimate(const VoaSpec& spec, const Insertion& ins, long long genus) {
    const int l = spec.size();
    // Widest fan-out of the vertex tensor: modules reachable from a fixed pair.
    long long branch = 1;
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b) {
            long long channels = 0;
            for (int c = 0; c < l; ++c)
                if (spec.s(a, b, c) != 0) ++channels;
            branch = std::max(branch, channels);
        }
    const long long legs = std::max<long long>(ins.total(), 3) + 2 * genus;
    double cost = 1.0;
    for (long long e = 0; e < legs - 3; ++e) cost *= static_cast<double>(branch);
    for (long long e = 0; e < genus; ++e) cost *= static_cast<double>(l);
    return cost;
}

}  // namespace voa
