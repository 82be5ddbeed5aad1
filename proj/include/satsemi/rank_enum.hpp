#pragma once

#include <span>
#include <vector>

#include "satsemi/semigroup.hpp"

namespace satsemi {

  // (d_1, ..., d_k) with d_1 > ... > d_k, d_{i+1} | d_i and d_k not
  // dividing F. F is supplied by the caller.
  struct SatSequence {
    std::vector<Element> ds;

    std::size_t length() const noexcept {
      return ds.size();
    }

    friend bool operator==(SatSequence const&, SatSequence const&)  = default;
    friend auto operator<=>(SatSequence const&, SatSequence const&) = default;
  };

  // A Sat(F)-sequence together with positive coefficients t_1..t_p such
  // that sum t_i d_i < F and gcd(d_i / d_{i+1}, t_{i+1}) = 1. It describes
  // the generator set { d_1, t_1 d_1 + t_2 d_2, ..., sum t_i d_i }.
  struct RankWitness {
    SatSequence          seq;
    std::vector<Element> ts;

    friend bool operator==(RankWitness const&, RankWitness const&) = default;
  };

  bool is_sat_sequence(Element frobenius, std::span<Element const> ds);

  // L(F, p): Sat(F)-sequences of length p with d_1 + ... + d_p < F, built
  // from factors a_1, ..., a_p >= 2 with a_1 not dividing F as
  // (a_1 ... a_p, a_1 ... a_{p-1}, ..., a_1). Sorted lexicographically.
  std::vector<SatSequence> list_sequences(Element frobenius, std::size_t p);

  // Sat(F) has an element of Sat(F)-rank p iff a (2^p - 1) < F, where a is
  // the least non-divisor of F.
  bool feasible_rank(Element frobenius, std::size_t p);

  // All nonnegative (x_1, ..., x_p) with sum c_i x_i = k, lexicographic.
  std::vector<std::vector<Element>> diophantine_solutions(std::span<Element const> coeffs,
                                                          Element                  k);

  // C(d_1, ..., d_p): every positive coefficient tuple of a RankWitness
  // over seq. Substituting x_i = t_i - 1 turns the bound into
  // sum d_i x_i = k * d_p for k in 0 ..= (F - 1 - sum d_i) / d_p, each of
  // which is a Diophantine equation in the coefficients d_i / d_p.
  // Throws NotASatSequence. Sorted lexicographically.
  std::vector<std::vector<Element>> coefficient_tuples(Element frobenius, SatSequence const& seq);

  // The generator set { d_1, t_1 d_1 + t_2 d_2, ... } of a witness.
  std::vector<Element> witness_generators(Element frobenius, RankWitness const& w);

  NumericalSemigroup witness_to_semigroup(Element frobenius, RankWitness const& w);

  // Witnesses with t_1 = 1. Every rank-p member of Sat(F) arises from
  // exactly one of them; t_1 > 1 only re-encodes one of these (the second
  // generator absorbs (t_1 - 1) d_1).
  std::vector<RankWitness> canonical_witnesses(Element frobenius, std::size_t p);

  // { S in Sat(F) : rank(S) = p } in canonical order; p = 0 gives
  // {Delta(F+1)}.
  std::vector<NumericalSemigroup> enumerate_rank(Element     frobenius,
                                                 std::size_t p,
                                                 unsigned    jobs = 1);

}  // namespace satsemi
