#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "satsemi/semigroup.hpp"

namespace satsemi {

  // A vertex of the tree on Sat(F): the parent of S is S \ {m(S)} and the
  // root is Delta(F+1). The minimal generating set is carried along so that
  // children can be derived without re-sieving.
  struct TreeNode {
    NumericalSemigroup semigroup;
    GeneratorSet       msg;
    std::size_t        depth = 0;  // small_count(semigroup) - 1
  };

  TreeNode root_node(Element frobenius);

  // SG(S) from the cached msg of a MED semigroup: Ap(S, m) is msg \ {m}
  // plus 0, and its maximal elements give PF(S).
  std::vector<Element> special_gaps_from_msg(NumericalSemigroup const& s, GeneratorSet const& msg);

  // theta(S) = { x in SG(S) : x < m(S), x != F, S ∪ {x} saturated }.
  std::vector<Element> child_candidates(TreeNode const& node);

  // Saturation of S ∪ {x} decided on the window {m(S), ..., m(S) + x} only.
  // Requires S saturated, x in SG(S), x < m(S) and x != F; throws
  // PreconditionViolated otherwise.
  bool extension_is_saturated(NumericalSemigroup const& s, Element x);

  // msg(S ∪ {x}) = {x} ∪ { min { a in msg(S) : a = i mod x } : 0 < i < x }.
  // Throws ResidueClassMissing if some nonzero residue has no generator.
  GeneratorSet child_msg(NumericalSemigroup const& s, GeneratorSet const& msg, Element x);

  std::vector<TreeNode> children(TreeNode const& node);

  // Breadth-first walk over the tree, one depth layer at a time. Each layer
  // is sorted canonically, so the walk does not depend on the number of
  // worker threads.
  class SatTreeLayers {
   public:
    explicit SatTreeLayers(Element frobenius, unsigned jobs = 1);

    Element frobenius() const noexcept {
      return frobenius_;
    }
    std::size_t depth() const noexcept {
      return depth_;
    }
    std::vector<TreeNode> const& layer() const noexcept {
      return layer_;
    }
    bool done() const noexcept {
      return layer_.empty();
    }
    // Replace the current layer by its children; the previous layer is
    // released. Returns false once the new layer is empty.
    bool advance();

   private:
    Element               frobenius_;
    unsigned              jobs_;
    std::size_t           depth_ = 0;
    std::vector<TreeNode> layer_;
  };

  // Calls visit(layer) for every nonempty layer in increasing depth.
  void walk_sat(Element                                             frobenius,
                std::function<void(std::vector<TreeNode> const&)> const& visit,
                unsigned                                            jobs = 1);

  // Sat(F): layers of increasing depth, each layer in canonical order.
  std::vector<NumericalSemigroup> enumerate_sat(Element frobenius, unsigned jobs = 1);

  // Sat(F, g) = { S in Sat(F) : g(S) = g }; empty outside the attainable
  // genus range.
  std::vector<NumericalSemigroup> enumerate_sat_genus(Element  frobenius,
                                                      Element  genus,
                                                      unsigned jobs = 1);

  // S, S \ {m(S)}, ... down to Delta(F(S)+1).
  std::vector<NumericalSemigroup> chain(NumericalSemigroup const& s);

}  // namespace satsemi
