#include "satsemi/sat_tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "satsemi/extremal.hpp"

namespace satsemi {

  namespace {

    // Saturation of S ∪ {x} on the window {m, ..., m + x}. Below m only x
    // is new, so d_{S ∪ {x}}(t) = gcd(x, d_S(t)) for members t >= m.
    bool window_test(NumericalSemigroup const& s, Element x) {
      auto const m = s.multiplicity();
      Element    d = 0;
      for (Element t = m; t <= m + x; ++t) {
        if (!s.contains(t)) {
          continue;
        }
        d = std::gcd(d, t);
        if (!s.contains(t + std::gcd(d, x))) {
          return false;
        }
      }
      return true;
    }

    std::vector<Element> candidates_unchecked(NumericalSemigroup const& s,
                                              GeneratorSet const&       msg) {
      auto const           m = s.multiplicity();
      std::vector<Element> result;
      for (auto x : special_gaps_from_msg(s, msg)) {
        if (x < m && x != s.frobenius() && window_test(s, x)) {
          result.push_back(x);
        }
      }
      return result;
    }

    void expand_range(std::vector<TreeNode> const& layer,
                      std::size_t                  first,
                      std::size_t                  last,
                      std::vector<TreeNode>&       out) {
      for (std::size_t i = first; i < last; ++i) {
        auto kids = children(layer[i]);
        std::move(kids.begin(), kids.end(), std::back_inserter(out));
      }
    }

  }  // namespace

  TreeNode root_node(Element frobenius) {
    auto                 root = NumericalSemigroup::ordinary(frobenius);
    std::vector<Element> msg;
    for (Element x = frobenius + 1; x <= 2 * frobenius + 1; ++x) {
      msg.push_back(x);
    }
    return TreeNode{std::move(root), GeneratorSet(std::move(msg)), 0};
  }

  std::vector<Element> special_gaps_from_msg(NumericalSemigroup const& s,
                                             GeneratorSet const&       msg) {
    auto const m = s.multiplicity();
    if (msg.empty() || msg.front() != m || static_cast<Element>(msg.size()) != m) {
      throw Error(ErrorCode::PreconditionViolated,
                  "cached generators do not describe a MED semigroup");
    }
    AperyTable table{m, std::vector<Element>(static_cast<std::size_t>(m), 0)};
    for (auto a : msg) {
      if (a != m) {
        table.entries[static_cast<std::size_t>(a % m)] = a;
      }
    }
    std::vector<Element> pf;
    for (auto w : apery_maximals(table)) {
      pf.push_back(w - m);
    }
    std::vector<Element> result;
    for (auto x : pf) {
      if (!std::binary_search(pf.begin(), pf.end(), 2 * x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<Element> child_candidates(TreeNode const& node) {
    return candidates_unchecked(node.semigroup, node.msg);
  }

  bool extension_is_saturated(NumericalSemigroup const& s, Element x) {
    if (!is_saturated(s)) {
      throw Error(ErrorCode::PreconditionViolated, "the semigroup is not saturated");
    }
    if (x >= s.multiplicity() || x == s.frobenius()) {
      throw Error(ErrorCode::PreconditionViolated,
                  std::to_string(x) + " must be below the multiplicity and differ from F");
    }
    auto sg = special_gaps(s);
    if (!std::binary_search(sg.begin(), sg.end(), x)) {
      throw Error(ErrorCode::PreconditionViolated, std::to_string(x) + " is not a special gap");
    }
    return window_test(s, x);
  }

  GeneratorSet child_msg(NumericalSemigroup const& s, GeneratorSet const& msg, Element x) {
    if (x <= 0 || x >= s.multiplicity()) {
      throw Error(ErrorCode::PreconditionViolated,
                  std::to_string(x) + " must be a positive integer below the multiplicity");
    }
    constexpr Element    none = -1;
    std::vector<Element> alpha(static_cast<std::size_t>(x), none);
    for (auto a : msg) {
      auto& slot = alpha[static_cast<std::size_t>(a % x)];
      if (slot == none) {  // msg is ascending, so the first hit is the least
        slot = a;
      }
    }
    alpha[0] = x;
    for (Element i = 1; i < x; ++i) {
      if (alpha[static_cast<std::size_t>(i)] == none) {
        throw Error(ErrorCode::ResidueClassMissing,
                    "no generator is congruent to " + std::to_string(i) + " mod "
                        + std::to_string(x));
      }
    }
    return GeneratorSet(std::move(alpha));
  }

  std::vector<TreeNode> children(TreeNode const& node) {
    std::vector<TreeNode> result;
    for (auto x : child_candidates(node)) {
      result.push_back(TreeNode{node.semigroup.with_element(x),
                                child_msg(node.semigroup, node.msg, x),
                                node.depth + 1});
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // SatTreeLayers
  ////////////////////////////////////////////////////////////////////////

  SatTreeLayers::SatTreeLayers(Element frobenius, unsigned jobs)
      : frobenius_(frobenius), jobs_(std::max(1U, jobs)) {
    if (frobenius < 1) {
      throw Error(ErrorCode::OutOfRange, "the Frobenius number must be positive");
    }
    layer_.push_back(root_node(frobenius));
  }

  bool SatTreeLayers::advance() {
    std::vector<TreeNode> next;
    auto const            n       = layer_.size();
    auto const            workers = std::min<std::size_t>(jobs_, n);
    if (workers <= 1) {
      expand_range(layer_, 0, n, next);
    } else {
      std::vector<std::vector<TreeNode>> parts(workers);
      std::vector<std::thread>           threads;
      auto const                         chunk = (n + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        auto first = std::min(n, w * chunk);
        auto last  = std::min(n, first + chunk);
        threads.emplace_back(
            [this, first, last, &parts, w] { expand_range(layer_, first, last, parts[w]); });
      }
      for (auto& t : threads) {
        t.join();
      }
      for (auto& part : parts) {
        std::move(part.begin(), part.end(), std::back_inserter(next));
      }
    }
    std::sort(next.begin(), next.end(), [](TreeNode const& a, TreeNode const& b) {
      return a.semigroup < b.semigroup;
    });
    layer_ = std::move(next);
    ++depth_;
    return !layer_.empty();
  }

  void walk_sat(Element                                                   frobenius,
                std::function<void(std::vector<TreeNode> const&)> const& visit,
                unsigned                                                  jobs) {
    SatTreeLayers layers(frobenius, jobs);
    do {
      visit(layers.layer());
    } while (layers.advance());
  }

  std::vector<NumericalSemigroup> enumerate_sat(Element frobenius, unsigned jobs) {
    std::vector<NumericalSemigroup> result;
    walk_sat(
        frobenius,
        [&result](std::vector<TreeNode> const& layer) {
          for (auto const& node : layer) {
            result.push_back(node.semigroup);
          }
        },
        jobs);
    return result;
  }

  std::vector<NumericalSemigroup> enumerate_sat_genus(Element  frobenius,
                                                      Element  genus,
                                                      unsigned jobs) {
    if (frobenius < 1) {
      throw Error(ErrorCode::OutOfRange, "the Frobenius number must be positive");
    }
    if (genus > frobenius || 2 * genus < frobenius + 1
        || genus < min_genus(frobenius)) {
      return {};
    }
    SatTreeLayers layers(frobenius, jobs);
    auto const    target = static_cast<std::size_t>(frobenius - genus);
    while (layers.depth() < target && layers.advance()) {
    }
    std::vector<NumericalSemigroup> result;
    if (layers.depth() == target) {
      for (auto const& node : layers.layer()) {
        result.push_back(node.semigroup);
      }
    }
    return result;
  }

  std::vector<NumericalSemigroup> chain(NumericalSemigroup const& s) {
    std::vector<NumericalSemigroup> result{s};
    while (!result.back().is_ordinary()) {
      result.push_back(remove_multiplicity(result.back()));
    }
    return result;
  }

}  // namespace satsemi
