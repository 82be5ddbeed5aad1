#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"
#include "support/print.hpp"

#include "satsemi/oracle.hpp"
#include "satsemi/rank_enum.hpp"
#include "satsemi/sat_generators.hpp"
#include "support/brute.hpp"

using satsemi::Element;
using satsemi::Error;
using satsemi::ErrorCode;
using satsemi::NumericalSemigroup;
using satsemi::RankWitness;
using satsemi::SatSequence;
using V = std::vector<Element>;

namespace {

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no satsemi::Error thrown");
    return ErrorCode::PreconditionViolated;
  }

  std::vector<NumericalSemigroup> rank_slice(Element f, std::size_t p) {
    std::vector<NumericalSemigroup> out;
    for (auto const& s : satsemi::oracle::brute_force_sat(f)) {
      if (satsemi::rank(s) == p) {
        out.push_back(s);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("Sat(F)-sequences", "[rank]") {
  CHECK(satsemi::is_sat_sequence(7, V{4, 2}));
  CHECK(satsemi::is_sat_sequence(51, V{8, 4, 2}));
  CHECK_FALSE(satsemi::is_sat_sequence(8, V{4, 2}));
  CHECK_FALSE(satsemi::is_sat_sequence(7, V{6, 4}));
  CHECK_FALSE(satsemi::is_sat_sequence(7, V{2, 2}));
  CHECK_FALSE(satsemi::is_sat_sequence(7, V{}));
  CHECK_FALSE(satsemi::is_sat_sequence(7, V{0}));
}

TEST_CASE("list_sequences", "[rank]") {
  CHECK(satsemi::list_sequences(7, 2) == std::vector{SatSequence{{4, 2}}});
  CHECK(satsemi::list_sequences(7, 1)
        == std::vector{SatSequence{{2}}, SatSequence{{3}}, SatSequence{{4}}, SatSequence{{5}},
                       SatSequence{{6}}});
  CHECK(satsemi::list_sequences(7, 3).empty());
  CHECK(satsemi::list_sequences(18, 3).empty());
  CHECK(code_of([] { satsemi::list_sequences(7, 0); }) == ErrorCode::PreconditionViolated);
  CHECK(satsemi::list_sequences(7, 70).empty());
}

TEST_CASE("list_sequences matches a direct search", "[rank][property]") {
  for (Element f = 1; f <= 60; ++f) {
    for (std::size_t p = 1; p <= 4; ++p) {
      std::vector<SatSequence> expected;
      // all strictly decreasing divisor chains with sum < F
      std::vector<V> frontier;
      for (Element d = 1; d < f; ++d) {
        frontier.push_back({d});
      }
      for (std::size_t len = 1; len < p; ++len) {
        std::vector<V> next;
        for (auto const& v : frontier) {
          for (Element d = 1; d < v.back(); ++d) {
            if (v.back() % d == 0) {
              auto w = v;
              w.push_back(d);
              next.push_back(w);
            }
          }
        }
        frontier = std::move(next);
      }
      for (auto const& v : frontier) {
        Element sum = 0;
        for (auto x : v) {
          sum += x;
        }
        if (sum < f && satsemi::is_sat_sequence(f, v)) {
          expected.push_back(SatSequence{v});
        }
      }
      std::sort(expected.begin(), expected.end());
      CHECK(satsemi::list_sequences(f, p) == expected);
    }
  }
}

TEST_CASE("feasible_rank", "[rank]") {
  CHECK_FALSE(satsemi::feasible_rank(18, 3));
  CHECK(satsemi::feasible_rank(7, 2));
  CHECK_FALSE(satsemi::feasible_rank(7, 3));
  CHECK(satsemi::feasible_rank(15, 3));
  CHECK(satsemi::feasible_rank(1, 0));
  CHECK_FALSE(satsemi::feasible_rank(1, 1));
  CHECK_FALSE(satsemi::feasible_rank(100, 80));
  for (Element f = 1; f <= 200; ++f) {
    for (std::size_t p = 1; p <= 5; ++p) {
      CHECK(satsemi::feasible_rank(f, p) == !satsemi::list_sequences(f, p).empty());
    }
  }
}

TEST_CASE("Diophantine solutions match an exhaustive search", "[rank][property]") {
  std::vector<V> systems{{1}, {3}, {2, 1}, {4, 2, 1}, {3, 1}, {6, 3, 1}, {5, 5}, {4, 6, 9, 2}, {2, 3, 5, 7}};
  for (auto const& c : systems) {
    for (Element k = 0; k <= 40; ++k) {
      INFO("coeffs=" << ::Catch::Detail::stringify(c) << " k=" << k);
      CHECK(satsemi::diophantine_solutions(c, k) == brute::diophantine(c, k));
    }
  }
  CHECK(satsemi::diophantine_solutions(V{}, 0) == std::vector<V>{V{}});
  CHECK(satsemi::diophantine_solutions(V{}, 3).empty());
  CHECK(satsemi::diophantine_solutions(V{2}, -1).empty());
  CHECK(code_of([] { satsemi::diophantine_solutions(V{2, 0}, 4); })
        == ErrorCode::PreconditionViolated);
}

TEST_CASE("coefficient tuples", "[rank]") {
  CHECK(satsemi::coefficient_tuples(7, SatSequence{{4, 2}}) == std::vector<V>{{1, 1}});
  CHECK(satsemi::coefficient_tuples(7, SatSequence{{2}}) == std::vector<V>{{1}, {2}, {3}});
  CHECK(satsemi::coefficient_tuples(7, SatSequence{{6}}) == std::vector<V>{{1}});
  CHECK(code_of([] { satsemi::coefficient_tuples(8, SatSequence{{4, 2}}); })
        == ErrorCode::NotASatSequence);
  CHECK(code_of([] { satsemi::coefficient_tuples(7, SatSequence{{4, 3}}); })
        == ErrorCode::NotASatSequence);
  CHECK(satsemi::coefficient_tuples(9, SatSequence{{8, 4}}).empty());
}

TEST_CASE("coefficient tuples match the defining conditions", "[rank][property]") {
  for (Element f = 1; f <= 40; ++f) {
    for (std::size_t p = 1; p <= 3; ++p) {
      for (auto const& seq : satsemi::list_sequences(f, p)) {
        std::vector<V> expected;
        // odometer over 1 <= t_i <= F
        V t(p, 1);
        while (true) {
          Element sum = 0;
          for (std::size_t i = 0; i < p; ++i) {
            sum += t[i] * seq.ds[i];
          }
          bool ok = sum < f;
          for (std::size_t i = 1; i < p && ok; ++i) {
            ok = std::gcd(seq.ds[i - 1] / seq.ds[i], t[i]) == 1;
          }
          if (ok) {
            expected.push_back(t);
          }
          std::size_t i = p;
          while (i > 0 && t[i - 1] == f) {
            t[--i] = 1;
          }
          if (i == 0) {
            break;
          }
          ++t[i - 1];
        }
        CHECK(satsemi::coefficient_tuples(f, seq) == expected);
      }
    }
  }
}

TEST_CASE("witnesses", "[rank]") {
  RankWitness w{SatSequence{{8, 4, 2}}, {1, 5, 7}};
  CHECK(satsemi::witness_generators(51, w) == V{8, 28, 42});
  auto s = satsemi::witness_to_semigroup(51, w);
  CHECK(s.small_elements() == V{8, 16, 24, 28, 32, 36, 40, 42, 44, 46, 48, 50});
  CHECK(satsemi::rank(s) == 3);

  CHECK(satsemi::witness_to_semigroup(7, RankWitness{SatSequence{{4, 2}}, {1, 1}})
        == NumericalSemigroup::from_small_elements(7, {4, 6}));

  CHECK(code_of([] { satsemi::witness_generators(8, RankWitness{SatSequence{{4, 2}}, {1, 1}}); })
        == ErrorCode::NotASatSequence);
  CHECK(code_of([] { satsemi::witness_generators(7, RankWitness{SatSequence{{4, 2}}, {1, 2}}); })
        == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { satsemi::witness_generators(51, RankWitness{SatSequence{{8, 4, 2}}, {1, 4, 7}}); })
        == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { satsemi::witness_generators(7, RankWitness{SatSequence{{4, 2}}, {1}}); })
        == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { satsemi::witness_generators(7, RankWitness{SatSequence{{2}}, {0}}); })
        == ErrorCode::PreconditionViolated);
}

TEST_CASE("t_1 > 1 re-encodes a canonical witness", "[rank][property]") {
  for (Element f = 3; f <= 30; ++f) {
    for (std::size_t p = 1; p <= 3; ++p) {
      for (auto const& seq : satsemi::list_sequences(f, p)) {
        for (auto const& ts : satsemi::coefficient_tuples(f, seq)) {
          auto s = satsemi::witness_to_semigroup(f, RankWitness{seq, ts});
          CHECK(satsemi::rank(s) == p);
          if (p == 1) {
            CHECK(s.small_elements().front() == seq.ds[0]);
          } else if (ts[0] > 1) {
            auto moved = ts;
            moved[1] += (ts[0] - 1) * seq.ds[0] / seq.ds[1];
            moved[0] = 1;
            CHECK(satsemi::witness_to_semigroup(f, RankWitness{seq, moved}) == s);
          }
        }
      }
    }
  }
}

TEST_CASE("canonical witnesses are injective", "[rank][property]") {
  for (Element f = 1; f <= 40; ++f) {
    for (std::size_t p = 1; p <= 4; ++p) {
      std::set<NumericalSemigroup> images;
      auto const                   ws = satsemi::canonical_witnesses(f, p);
      for (auto const& w : ws) {
        CHECK(w.ts.front() == 1);
        CHECK(images.insert(satsemi::witness_to_semigroup(f, w)).second);
      }
      CHECK(images.size() == satsemi::enumerate_rank(f, p).size());
    }
  }
}

TEST_CASE("the all-ones tuple is always admissible", "[rank][property]") {
  for (Element f = 1; f <= 80; ++f) {
    for (std::size_t p = 1; p <= 4; ++p) {
      for (auto const& seq : satsemi::list_sequences(f, p)) {
        auto tuples = satsemi::coefficient_tuples(f, seq);
        REQUIRE_FALSE(tuples.empty());
        CHECK(tuples.front() == V(p, 1));
        V partial;
        Element sum = 0;
        for (auto d : seq.ds) {
          partial.push_back(sum += d);
        }
        auto s = satsemi::witness_to_semigroup(f, RankWitness{seq, V(p, 1)});
        CHECK(satsemi::minimal_system(s).elements == partial);
      }
    }
  }
}

TEST_CASE("rank enumeration", "[rank]") {
  CHECK(satsemi::enumerate_rank(7, 0) == std::vector{NumericalSemigroup::ordinary(7)});
  CHECK(satsemi::enumerate_rank(7, 1).size() == 5);
  CHECK(satsemi::enumerate_rank(7, 2)
        == std::vector{NumericalSemigroup::from_small_elements(7, {4, 6})});
  CHECK(satsemi::enumerate_rank(7, 3).empty());
  CHECK(satsemi::enumerate_rank(18, 3).empty());
  CHECK(satsemi::enumerate_rank(30, 2, 4) == satsemi::enumerate_rank(30, 2, 1));
}

TEST_CASE("rank partition of Sat(F)", "[rank][oracle]") {
  std::map<Element, std::map<std::size_t, std::size_t>> const frozen{
      {7, {{0, 1}, {1, 5}, {2, 1}}},
      {11, {{0, 1}, {1, 9}, {2, 6}}},
      {15, {{0, 1}, {1, 11}, {2, 12}, {3, 1}}},
      {16, {{0, 1}, {1, 11}, {2, 6}}},
  };
  for (Element f = 1; f <= 16; ++f) {
    auto const  total = satsemi::oracle::brute_force_sat(f).size();
    std::size_t sum   = 0;
    for (std::size_t p = 0; p <= static_cast<std::size_t>(f); ++p) {
      auto got = satsemi::enumerate_rank(f, p);
      CHECK(got == rank_slice(f, p));
      CHECK(satsemi::feasible_rank(f, p) == !got.empty());
      if (auto it = frozen.find(f); it != frozen.end()) {
        auto jt = it->second.find(p);
        CHECK(got.size() == (jt == it->second.end() ? 0 : jt->second));
      }
      sum += got.size();
    }
    CHECK(sum == total);
  }
}
