#include "kvb/symmetrize.hpp"

#include <algorithm>
#include <numeric>

#include "kvb/errors.hpp"

namespace kvb {

SymGroupAction::SymGroupAction(std::vector<SlotBlock> blocks) : blocks_(std::move(blocks)) {
    std::erase_if(blocks_, [](const SlotBlock& b) { return b.size == 0; });
}

Integer SymGroupAction::order() const {
    Integer n = 1;
    for (const auto& b : blocks_)
        for (unsigned k = 2; k <= b.size; ++k) n *= k;
    return n;
}

void SymGroupAction::validate(const VarTable& vars) const {
    for (const auto& b : blocks_) {
        if (b.tag >= kMaxTags || b.vertex >= vars.vertices().size() || b.offset + b.size > Var::kMaxSlots)
            throw StructuralError("symmetric group block refers to an unknown variable");
    }
}

namespace {

void add_block_images(VarSubstitution& s, const SlotBlock& b, const std::vector<unsigned>& perm) {
    for (unsigned k = 0; k < b.size; ++k)
        if (perm[k] != k) s.rename(Var::slot(b.tag, b.vertex, b.offset + k), Var::slot(b.tag, b.vertex, b.offset + perm[k]));
}

}  // namespace

void SymGroupAction::for_each(const std::function<void(const VarSubstitution&)>& f) const {
    std::vector<std::vector<unsigned>> perms;
    for (const auto& b : blocks_) {
        perms.emplace_back(b.size);
        std::iota(perms.back().begin(), perms.back().end(), 0u);
    }
    while (true) {
        VarSubstitution s;
        for (size_t i = 0; i < blocks_.size(); ++i) add_block_images(s, blocks_[i], perms[i]);
        f(s);
        size_t i = 0;
        for (; i < blocks_.size(); ++i)
            if (std::next_permutation(perms[i].begin(), perms[i].end())) break;
        if (i == blocks_.size()) return;
    }
}

std::vector<VarSubstitution> SymGroupAction::coset_representatives(
    const std::vector<std::vector<unsigned>>& parts) const {
    if (parts.size() != blocks_.size()) throw StructuralError("coset parts do not match the blocks");
    // For each block, the shuffles: label each position by its part, run
    // over all distinct labelings; slot k of part p goes to the k-th
    // position labelled p.
    std::vector<std::vector<unsigned>> labels;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        unsigned total = 0;
        std::vector<unsigned> lab;
        for (unsigned p = 0; p < parts[i].size(); ++p) {
            lab.insert(lab.end(), parts[i][p], p);
            total += parts[i][p];
        }
        if (total != blocks_[i].size) throw StructuralError("coset parts do not sum to the block size");
        labels.push_back(std::move(lab));
    }
    std::vector<VarSubstitution> out;
    while (true) {
        VarSubstitution s;
        for (size_t i = 0; i < blocks_.size(); ++i) {
            const auto& lab = labels[i];
            std::vector<unsigned> perm(lab.size());
            std::vector<unsigned> start(parts[i].size(), 0);
            for (unsigned p = 1; p < start.size(); ++p) start[p] = start[p - 1] + parts[i][p - 1];
            std::vector<unsigned> seen(parts[i].size(), 0);
            for (unsigned pos = 0; pos < lab.size(); ++pos) perm[start[lab[pos]] + seen[lab[pos]]++] = pos;
            add_block_images(s, blocks_[i], perm);
        }
        out.push_back(std::move(s));
        size_t i = 0;
        for (; i < labels.size(); ++i)
            if (std::next_permutation(labels[i].begin(), labels[i].end())) break;
        if (i == labels.size()) return out;
    }
}

LaurentPoly symmetrize(const LaurentPoly& p, const SymGroupAction& g, const VarTable& vars, SymMode mode,
                       const std::vector<std::vector<unsigned>>& parts) {
    g.validate(vars);
    LaurentPoly out;
    if (mode == SymMode::Orbit) {
        g.for_each([&](const VarSubstitution& s) { out += p.substitute(s); });
    } else {
        for (const auto& s : g.coset_representatives(parts)) out += p.substitute(s);
    }
    return out;
}

RationalFn symmetrize(const RationalFn& p, const SymGroupAction& g, const VarTable& vars, SymMode mode,
                      const std::vector<std::vector<unsigned>>& parts) {
    g.validate(vars);
    std::vector<RationalFn> terms;
    if (mode == SymMode::Orbit) {
        g.for_each([&](const VarSubstitution& s) { terms.push_back(p.substitute(s)); });
    } else {
        for (const auto& s : g.coset_representatives(parts)) terms.push_back(p.substitute(s));
    }
    return RationalFn::sum(terms);
}

bool is_invariant(const LaurentPoly& p, const SymGroupAction& g) {
    bool ok = true;
    g.for_each([&](const VarSubstitution& s) {
        if (ok && p.substitute(s) != p) ok = false;
    });
    return ok;
}

}  // namespace kvb
