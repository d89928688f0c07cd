#pragma once

// Finite right modules and bimodules over finite table rings.
//
// Module elements are indices 0..order-1. Element subsets are byte masks
// (std::vector<char>) because module orders may exceed 64.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "torsionkit/ideal.hpp"
#include "torsionkit/ring.hpp"

namespace torsionkit {

class FiniteModule;
class FiniteBimodule;
using ModulePtr = std::shared_ptr<const FiniteModule>;
using BimodulePtr = std::shared_ptr<const FiniteBimodule>;

/// Subset of module elements; size equals the module order.
using ElementSet = std::vector<char>;

/// Raw tables handed to the module validators.
struct ModuleTables {
    std::string name;
    int order = 0;
    std::vector<int> add;   // order x order
    std::vector<int> act;   // order x ringOrder, (x, r) -> x r
    std::vector<int> lact;  // ringOrder x order, (r, x) -> r x; bimodules only
};

class FiniteModule {
public:
    virtual ~FiniteModule() = default;

    const RingPtr& ring() const { return ring_; }
    int order() const { return order_; }
    const std::string& name() const { return name_; }

    int add(int x, int y) const { return add_[x * order_ + y]; }
    int act(int x, int r) const { return act_[x * ring_->order() + r]; }
    int neg(int x) const { return neg_[x]; }
    int sub(int x, int y) const { return add(x, neg(y)); }
    int zero() const { return zero_; }

protected:
    FiniteModule() = default;
    friend struct ModuleBuilder;

    RingPtr ring_;
    int order_ = 0;
    int zero_ = -1;
    std::string name_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> act_;
    std::vector<std::uint8_t> neg_;
};

class FiniteBimodule : public FiniteModule {
public:
    int lact(int r, int x) const { return lact_[r * order_ + x]; }

    /// The underlying right module (same object, narrowed view).
    ModulePtr as_module(const BimodulePtr& self) const { return self; }

private:
    FiniteBimodule() = default;
    friend struct ModuleBuilder;

    std::vector<std::uint8_t> lact_;
};

/// Validates the right-module axioms over the ring; throws IllFormed with the
/// failing law and witness elements in the message. Deterministic scan order.
ModulePtr validate_module(const ModuleTables& tables, const RingPtr& ring, const Caps& caps = {});

/// Additionally validates the left-module axioms and (r x) s = r (x s).
BimodulePtr validate_bimodule(const ModuleTables& tables, const RingPtr& ring,
                              const Caps& caps = {});

// Corpus constructors.
ModulePtr make_regular_module(const RingPtr& ring, const Caps& caps = {});
ModulePtr make_zero_module(const RingPtr& ring, const Caps& caps = {});
ModulePtr make_direct_sum(const ModulePtr& left, const ModulePtr& right, const Caps& caps = {});
BimodulePtr make_regular_bimodule(const RingPtr& ring, const Caps& caps = {});

/// A right ideal viewed as a module in its own right; elements are the
/// members of the ideal in ascending order.
ModulePtr make_ideal_module(const RingPtr& ring, RightIdeal ideal, const Caps& caps = {});

/// Same, with the left action of the ring; requires the ideal to be two-sided.
BimodulePtr make_ideal_bimodule(const RingPtr& ring, RightIdeal ideal, const Caps& caps = {});

/// A quotient module together with the projection map from the source.
struct QuotientModule {
    ModulePtr module;
    std::vector<int> class_of;  // source element -> quotient element
};

/// R/I with cosets indexed by smallest member (ascending discovery order).
QuotientModule make_cyclic_module(const RingPtr& ring, RightIdeal ideal, const Caps& caps = {});

/// M/N for a submodule N given as an element mask; cosets indexed by smallest
/// member.
QuotientModule quotient_by_submodule(const ModulePtr& module, const ElementSet& submodule,
                                     const Caps& caps = {});

/// ann(x) = { r : x r = 0 }, always a right ideal.
RightIdeal annihilator(const FiniteModule& module, int x);

/// True when `set` contains zero and is closed under addition and the action.
bool is_submodule(const FiniteModule& module, const ElementSet& set);

/// Smallest submodule containing `seed`.
ElementSet submodule_closure(const FiniteModule& module, const ElementSet& seed);

/// Number of elements in the set.
int set_size(const ElementSet& set);

}  // namespace torsionkit
