#pragma once

#include <functional>
#include <vector>

#include "kvb/laurent_poly.hpp"
#include "kvb/rational_fn.hpp"

namespace kvb {

// Slots offset .. offset+size-1 of the variables s(tag, vertex, *).
struct SlotBlock {
    Tag tag = kTagA;
    unsigned vertex = 0;
    unsigned size = 0;
    unsigned offset = 0;
};

// Product of symmetric groups, one per block.
class SymGroupAction {
public:
    SymGroupAction() = default;
    explicit SymGroupAction(std::vector<SlotBlock> blocks);

    const std::vector<SlotBlock>& blocks() const { return blocks_; }
    Integer order() const;
    // Throws StructuralError if a block names a vertex or tag outside vars.
    void validate(const VarTable& vars) const;

    // Calls f once per group element.
    void for_each(const std::function<void(const VarSubstitution&)>& f) const;
    // Minimal-length representatives of G / H, where H splits every block
    // into consecutive runs of the given sizes (parts[b] sums to block b).
    std::vector<VarSubstitution> coset_representatives(const std::vector<std::vector<unsigned>>& parts) const;

private:
    std::vector<SlotBlock> blocks_;
};

enum class SymMode { Orbit, Coset };

// Orbit mode sums w.p over the whole group. Coset mode sums over
// representatives of G / H with H given by parts.
LaurentPoly symmetrize(const LaurentPoly& p, const SymGroupAction& g, const VarTable& vars, SymMode mode = SymMode::Orbit,
                       const std::vector<std::vector<unsigned>>& parts = {});
RationalFn symmetrize(const RationalFn& p, const SymGroupAction& g, const VarTable& vars, SymMode mode = SymMode::Orbit,
                      const std::vector<std::vector<unsigned>>& parts = {});

bool is_invariant(const LaurentPoly& p, const SymGroupAction& g);

}  // namespace kvb
