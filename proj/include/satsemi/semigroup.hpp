#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "satsemi/errors.hpp"

namespace satsemi {

  using Element = std::int64_t;

  // Strictly ascending list of positive integers. Construction sorts and
  // removes duplicates; nonpositive entries are rejected.
  class GeneratorSet {
   public:
    using const_iterator = std::vector<Element>::const_iterator;

    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Element> elements);
    GeneratorSet(std::initializer_list<Element> elements);

    std::span<Element const> elements() const noexcept {
      return elements_;
    }
    std::vector<Element> const& to_vector() const noexcept {
      return elements_;
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    bool empty() const noexcept {
      return elements_.empty();
    }
    Element operator[](std::size_t i) const {
      return elements_[i];
    }
    Element front() const {
      return elements_.front();
    }
    Element back() const {
      return elements_.back();
    }
    const_iterator begin() const noexcept {
      return elements_.cbegin();
    }
    const_iterator end() const noexcept {
      return elements_.cend();
    }

    friend bool operator==(GeneratorSet const&, GeneratorSet const&) = default;

   private:
    std::vector<Element> elements_;
  };

  // Ap(S, n): entries[i] is the least member of S congruent to i mod n.
  struct AperyTable {
    Element              modulus = 0;
    std::vector<Element> entries;

    // True iff w is one of the entries.
    bool contains(Element w) const noexcept;

    friend bool operator==(AperyTable const&, AperyTable const&) = default;
  };

  // A numerical semigroup S other than N, stored as its Frobenius number F
  // together with a membership bitmap over {0, ..., F+1}. Every integer
  // above F+1 is implicitly a member. Values are immutable.
  class NumericalSemigroup {
   public:
    // {0} ∪ small ∪ {F+1, ->}; throws NotClosed / FrobeniusViolated /
    // OutOfRange if that set is not a numerical semigroup with Frobenius
    // number F.
    static NumericalSemigroup from_small_elements(Element                 frobenius,
                                                  std::span<Element const> small);
    static NumericalSemigroup from_small_elements(Element                        frobenius,
                                                  std::initializer_list<Element> small) {
      return from_small_elements(frobenius, std::span<Element const>(small.begin(), small.size()));
    }

    // <gens>; throws GcdNotOne when gcd(gens) != 1 and NotRepresentable
    // when the result is N.
    static NumericalSemigroup from_generators(GeneratorSet const& gens);

    // Delta(F+1) = {0, F+1, ->}, the minimum of Sat(F).
    static NumericalSemigroup ordinary(Element frobenius);

    Element frobenius() const noexcept {
      return frobenius_;
    }

    bool contains(Element x) const noexcept {
      if (x < 0) {
        return false;
      }
      if (x > frobenius_ + 1) {
        return true;
      }
      auto i = static_cast<std::size_t>(x);
      return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    Element     multiplicity() const noexcept;
    std::size_t genus() const noexcept;
    // Number of members below F, 0 included.
    std::size_t small_count() const noexcept;
    // Members s with 0 < s < F, ascending.
    std::vector<Element> small_elements() const;
    std::vector<Element> gaps() const;
    bool                 is_ordinary() const noexcept;

    // S ∪ {x}; x must be a gap other than F whose addition keeps the set
    // closed (i.e. a special gap).
    NumericalSemigroup with_element(Element x) const;
    // S \ {x} for a minimal generator x < F.
    NumericalSemigroup without_element(Element x) const;

    std::span<std::uint64_t const> words() const noexcept {
      return words_;
    }

    std::size_t hash() const noexcept;

    friend bool operator==(NumericalSemigroup const&, NumericalSemigroup const&) = default;

    // Canonical order: Frobenius number, then number of small elements,
    // then lexicographic on the ascending small-element list.
    friend std::strong_ordering operator<=>(NumericalSemigroup const& a,
                                            NumericalSemigroup const& b) noexcept;

   private:
    NumericalSemigroup(Element frobenius, std::vector<std::uint64_t> words)
        : frobenius_(frobenius), words_(std::move(words)) {}

    friend NumericalSemigroup intersect(NumericalSemigroup const&, NumericalSemigroup const&);

    Element                    frobenius_;
    std::vector<std::uint64_t> words_;
  };

  inline Element frobenius(NumericalSemigroup const& s) noexcept {
    return s.frobenius();
  }
  inline std::size_t genus(NumericalSemigroup const& s) noexcept {
    return s.genus();
  }
  inline Element multiplicity(NumericalSemigroup const& s) noexcept {
    return s.multiplicity();
  }
  inline std::size_t small_count(NumericalSemigroup const& s) noexcept {
    return s.small_count();
  }

  Element gcd(std::span<Element const> values) noexcept;

  // msg(S) by sieving: a positive member is a minimal generator iff it is
  // not the sum of two positive members. All minimal generators are below
  // F + m(S) + 1.
  GeneratorSet minimal_generators(NumericalSemigroup const& s);

  // For MED semigroups msg(S) = (Ap(S, m) \ {0}) ∪ {m}. The caller
  // guarantees S is MED (every saturated semigroup is).
  GeneratorSet med_minimal_generators(NumericalSemigroup const& s);

  std::size_t embedding_dimension(NumericalSemigroup const& s);

  AperyTable apery(NumericalSemigroup const& s, Element n);

  // Maximal elements of an Apéry table with respect to <=_S, using
  // w maximal iff w + w' is not in the table for all nonzero w'.
  std::vector<Element> apery_maximals(AperyTable const& table);

  std::vector<Element> pseudo_frobenius(NumericalSemigroup const& s);
  std::vector<Element> special_gaps(NumericalSemigroup const& s);
  // Same set computed by testing x + s and 2x directly on the bitmap.
  std::vector<Element> special_gaps_by_scan(NumericalSemigroup const& s);

  // gcd of all members of S that are <= s; s must be a positive member.
  Element d_of(NumericalSemigroup const& s, Element member);

  bool is_saturated(NumericalSemigroup const& s) noexcept;
  bool is_med(NumericalSemigroup const& s);

  NumericalSemigroup intersect(NumericalSemigroup const& s, NumericalSemigroup const& t);

  // S \ {m(S)}; throws WouldChangeFrobenius on Delta(F+1).
  NumericalSemigroup remove_multiplicity(NumericalSemigroup const& s);

}  // namespace satsemi

template <>
struct std::hash<satsemi::NumericalSemigroup> {
  std::size_t operator()(satsemi::NumericalSemigroup const& s) const noexcept {
    return s.hash();
  }
};
