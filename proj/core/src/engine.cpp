#include "voa/engine.hpp"

namespace voa {

int GroupTable::product(const std::vector<int>& elems) const {
    int acc = identity;
    for (int e : elems) acc = mul[acc][e];
    return acc;
}

FaEngine::FaEngine(VoaSpec spec, std::vector<IntMat> fusion, IntMat averaging, bool run_validation)
    : spec_(std::move(spec)), fusion_(std::move(fusion)), averaging_(std::move(averaging)) {
    if (run_validation) validate(spec_);
    if (static_cast<int>(fusion_.size()) != spec_.size() || averaging_.size() != spec_.size())
        throw SpecError("cached fusion data does not match the spec");
}

FaEngine::FaEngine(VoaSpec spec, bool run_validation) : spec_(std::move(spec)) {
    if (run_validation) validate(spec_);
    const int l = spec_.size();
    fusion_.reserve(l);
    for (int w = 0; w < l; ++w) {
        IntMat m(l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) m.at(i, j) = spec_.s(w, i, spec_.dual[j]);
        fusion_.push_back(std::move(m));
    }
    averaging_ = IntMat(l);
    for (int w = 0; w < l; ++w) averaging_ += fusion_[w].scaled(fusion_[spec_.dual[w]].trace());
}

FaMatrix FaEngine::fusion_matrix(int w) const {
    if (w < 0 || w >= size()) throw SpecError("module index out of range: " + std::to_string(w));
    Insertion ins = Insertion::empty(size());
    ins.add(w);
    return FaMatrix{fusion_[w], 0, std::move(ins)};
}

FaMatrix FaEngine::averaging_matrix() const {
    return FaMatrix{averaging_, 1, Insertion::empty(size())};
}

FaMatrix FaEngine::fa_matrix(const Insertion& ins, long long genus) const {
    if (ins.size() != size()) throw SpecError("insertion has wrong module count");
    if (genus < 0) throw SpecError("negative genus");
    IntMat out = IntMat::identity(size());
    for (int w = 0; w < size(); ++w)
        if (ins.counts[w] > 0) out = out * fusion_[w].pow(ins.counts[w]);
    if (genus > 0) out = out * averaging_.pow(genus);
    return FaMatrix{std::move(out), genus, ins};
}

Int FaEngine::rank(const Insertion& ins, long long genus) const {
    if (genus >= 1) return fa_matrix(ins, genus - 1).entries.trace();
    return fa_matrix(ins, 0).entries.at(spec_.vacuum, spec_.dual[spec_.vacuum]);
}

Int FaEngine::rank_with_frame(const Insertion& ins, long long genus, int i, int j) const {
    if (i < 0 || i >= size() || j < 0 || j >= size())
        throw SpecError("frame index out of range");
    return fa_matrix(ins, genus).entries.at(i, j);
}

std::optional<GroupTable> FaEngine::pointed_group() const {
    const int l = size();
    for (const auto& m : fusion_)
        if (!m.is_permutation()) return std::nullopt;

    GroupTable table;
    table.identity = spec_.vacuum;
    table.mul.assign(l, std::vector<int>(l, -1));
    table.inverse = spec_.dual;
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y)
            for (int z = 0; z < l; ++z)
                if (fusion_[x].at(y, z) == 1) table.mul[x][y] = z;

    // Guard against non-group data that happens to yield permutations.
    for (int x = 0; x < l; ++x) {
        if (table.mul[table.identity][x] != x || table.mul[x][table.identity] != x)
            return std::nullopt;
        if (table.mul[x][table.inverse[x]] != table.identity) return std::nullopt;
        for (int y = 0; y < l; ++y) {
            if (table.mul[x][y] != table.mul[y][x]) return std::nullopt;
            for (int z = 0; z < l; ++z)
                if (table.mul[table.mul[x][y]][z] != table.mul[x][table.mul[y][z]])
                    return std::nullopt;
        }
    }
    return table;
}

bool FaEngine::is_order_two(int w) const {
    if (w < 0 || w >= size()) throw SpecError("module index out of range: " + std::to_string(w));
    if (w == spec_.vacuum) return false;
    return fusion_[w] * fusion_[w] == IntMat::identity(size());
}

void FaEngine::require_stable(long long genus, long long n) {
    if (2 * genus - 2 + n <= 0)
        throw DomainError("unstable (g,n) = (" + std::to_string(genus) + "," + std::to_string(n) +
                          ")");
}

}  // namespace voa
