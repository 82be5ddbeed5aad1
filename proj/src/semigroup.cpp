#include "satsemi/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

namespace satsemi {

  namespace {

    std::vector<std::uint64_t> empty_words(Element frobenius) {
      auto bits = static_cast<std::size_t>(frobenius) + 2;
      return std::vector<std::uint64_t>((bits + 63) / 64, 0);
    }

    void set_bit(std::vector<std::uint64_t>& words, Element x) {
      auto i = static_cast<std::size_t>(x);
      words[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void clear_bit(std::vector<std::uint64_t>& words, Element x) {
      auto i = static_cast<std::size_t>(x);
      words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::string str(Element x) {
      return std::to_string(x);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GeneratorSet
  ////////////////////////////////////////////////////////////////////////

  GeneratorSet::GeneratorSet(std::vector<Element> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (!elements_.empty() && elements_.front() <= 0) {
      throw Error(ErrorCode::OutOfRange,
                  "generators must be positive, found " + str(elements_.front()));
    }
  }

  GeneratorSet::GeneratorSet(std::initializer_list<Element> elements)
      : GeneratorSet(std::vector<Element>(elements)) {}

  bool AperyTable::contains(Element w) const noexcept {
    if (w < 0 || modulus <= 0) {
      return false;
    }
    return entries[static_cast<std::size_t>(w % modulus)] == w;
  }

  ////////////////////////////////////////////////////////////////////////
  // NumericalSemigroup
  ////////////////////////////////////////////////////////////////////////

  NumericalSemigroup NumericalSemigroup::from_small_elements(Element                  frobenius,
                                                             std::span<Element const> small) {
    if (frobenius < 1) {
      throw Error(ErrorCode::NotRepresentable,
                  "Frobenius number must be positive, found " + str(frobenius));
    }
    auto words = empty_words(frobenius);
    set_bit(words, 0);
    set_bit(words, frobenius + 1);
    for (auto s : small) {
      if (s == frobenius) {
        throw Error(ErrorCode::FrobeniusViolated,
                    "the Frobenius number " + str(frobenius) + " cannot be a member");
      }
      if (s <= 0 || s > frobenius) {
        throw Error(ErrorCode::OutOfRange,
                    "small element " + str(s) + " is not in [1, " + str(frobenius - 1) + "]");
      }
      set_bit(words, s);
    }
    NumericalSemigroup result(frobenius, std::move(words));
    auto               members = result.small_elements();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i; j < members.size(); ++j) {
        auto sum = members[i] + members[j];
        if (sum > frobenius + 1) {
          break;
        }
        if (!result.contains(sum)) {
          throw Error(ErrorCode::NotClosed,
                      str(members[i]) + " + " + str(members[j]) + " = " + str(sum)
                          + " is missing");
        }
      }
    }
    return result;
  }

  NumericalSemigroup NumericalSemigroup::from_generators(GeneratorSet const& gens) {
    if (gens.empty() || gcd(gens.elements()) != 1) {
      throw Error(ErrorCode::GcdNotOne, "generators do not have gcd 1");
    }
    Element const m = gens.front();
    if (m == 1) {
      throw Error(ErrorCode::NotRepresentable, "the generators produce N");
    }
    // Shortest paths over residues mod m give Ap(<gens>, m).
    constexpr Element    unreached = -1;
    std::vector<Element> w(static_cast<std::size_t>(m), unreached);
    using Entry = std::pair<Element, Element>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    w[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
      auto [dist, r] = queue.top();
      queue.pop();
      if (dist != w[static_cast<std::size_t>(r)]) {
        continue;
      }
      for (auto g : gens) {
        auto next = (r + g) % m;
        auto cand = dist + g;
        auto& cur = w[static_cast<std::size_t>(next)];
        if (cur == unreached || cand < cur) {
          cur = cand;
          queue.emplace(cand, next);
        }
      }
    }
    Element frobenius = *std::max_element(w.begin(), w.end()) - m;
    auto    words     = empty_words(frobenius);
    for (Element x = 0; x <= frobenius + 1; ++x) {
      if (x >= w[static_cast<std::size_t>(x % m)]) {
        set_bit(words, x);
      }
    }
    return NumericalSemigroup(frobenius, std::move(words));
  }

  NumericalSemigroup NumericalSemigroup::ordinary(Element frobenius) {
    return from_small_elements(frobenius, std::span<Element const>{});
  }

  Element NumericalSemigroup::multiplicity() const noexcept {
    // bit 0 is always set; look for the next one
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto word = words_[k];
      if (k == 0) {
        word &= ~std::uint64_t{1};
      }
      if (word != 0) {
        return static_cast<Element>(k * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      }
    }
    return frobenius_ + 1;  // unreachable: F+1 is always set
  }

  std::size_t NumericalSemigroup::small_count() const noexcept {
    std::size_t count = 0;
    for (auto word : words_) {
      count += static_cast<std::size_t>(std::popcount(word));
    }
    return count - 1;  // F+1 is set, F is not
  }

  std::size_t NumericalSemigroup::genus() const noexcept {
    return static_cast<std::size_t>(frobenius_) + 1 - small_count();
  }

  std::vector<Element> NumericalSemigroup::small_elements() const {
    std::vector<Element> result;
    for (Element x = 1; x < frobenius_; ++x) {
      if (contains(x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<Element> NumericalSemigroup::gaps() const {
    std::vector<Element> result;
    for (Element x = 1; x <= frobenius_; ++x) {
      if (!contains(x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  bool NumericalSemigroup::is_ordinary() const noexcept {
    return small_count() == 1;
  }

  NumericalSemigroup NumericalSemigroup::with_element(Element x) const {
    if (x == frobenius_) {
      throw Error(ErrorCode::FrobeniusViolated, "cannot add the Frobenius number");
    }
    if (x <= 0 || x > frobenius_) {
      throw Error(ErrorCode::OutOfRange, str(x) + " is not a gap");
    }
    if (contains(x)) {
      throw Error(ErrorCode::PreconditionViolated, str(x) + " is already a member");
    }
    if (!contains(2 * x)) {
      throw Error(ErrorCode::NotClosed, str(x) + " + " + str(x) + " is missing");
    }
    for (Element s = 1; s + x <= frobenius_ + 1; ++s) {
      if (contains(s) && !contains(s + x)) {
        throw Error(ErrorCode::NotClosed,
                    str(x) + " + " + str(s) + " = " + str(s + x) + " is missing");
      }
    }
    auto words = words_;
    set_bit(words, x);
    return NumericalSemigroup(frobenius_, std::move(words));
  }

  NumericalSemigroup NumericalSemigroup::without_element(Element x) const {
    if (!contains(x) || x == 0) {
      throw Error(ErrorCode::NotAMember, str(x) + " is not a positive member");
    }
    if (x > frobenius_) {
      throw Error(ErrorCode::WouldChangeFrobenius,
                  "removing " + str(x) + " changes the Frobenius number");
    }
    for (Element a = 1; 2 * a <= x; ++a) {
      if (contains(a) && contains(x - a)) {
        throw Error(ErrorCode::NotClosed, str(x) + " is not a minimal generator");
      }
    }
    auto words = words_;
    clear_bit(words, x);
    return NumericalSemigroup(frobenius_, std::move(words));
  }

  std::size_t NumericalSemigroup::hash() const noexcept {
    std::size_t h = std::hash<Element>{}(frobenius_);
    for (auto word : words_) {
      h ^= std::hash<std::uint64_t>{}(word) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::strong_ordering operator<=>(NumericalSemigroup const& a,
                                   NumericalSemigroup const& b) noexcept {
    if (auto c = a.frobenius_ <=> b.frobenius_; c != 0) {
      return c;
    }
    if (auto c = a.small_count() <=> b.small_count(); c != 0) {
      return c;
    }
    // Equal sizes: the first differing position decides, and the set that
    // contains it has the smaller element there.
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      auto diff = a.words_[k] ^ b.words_[k];
      if (diff != 0) {
        auto low = diff & (~diff + 1);
        return (a.words_[k] & low) ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  Element gcd(std::span<Element const> values) noexcept {
    Element d = 0;
    for (auto v : values) {
      d = std::gcd(d, v);
    }
    return d;
  }

  GeneratorSet minimal_generators(NumericalSemigroup const& s) {
    auto const           m = s.multiplicity();
    std::vector<Element> result;
    for (Element x = m; x <= s.frobenius() + m; ++x) {
      if (!s.contains(x)) {
        continue;
      }
      bool decomposable = false;
      for (Element a = m; a <= x - m; ++a) {
        if (s.contains(a) && s.contains(x - a)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) {
        result.push_back(x);
      }
    }
    return GeneratorSet(std::move(result));
  }

  GeneratorSet med_minimal_generators(NumericalSemigroup const& s) {
    auto table   = apery(s, s.multiplicity());
    auto entries = std::move(table.entries);
    entries[0]   = s.multiplicity();
    return GeneratorSet(std::move(entries));
  }

  std::size_t embedding_dimension(NumericalSemigroup const& s) {
    return minimal_generators(s).size();
  }

  AperyTable apery(NumericalSemigroup const& s, Element n) {
    if (n <= 0 || !s.contains(n)) {
      throw Error(ErrorCode::NotAMember, str(n) + " is not a positive member");
    }
    AperyTable table{n, std::vector<Element>(static_cast<std::size_t>(n))};
    for (Element i = 0; i < n; ++i) {
      Element w = i;
      while (!s.contains(w)) {
        w += n;
      }
      table.entries[static_cast<std::size_t>(i)] = w;
    }
    return table;
  }

  std::vector<Element> apery_maximals(AperyTable const& table) {
    std::vector<Element> result;
    for (auto w : table.entries) {
      bool maximal = true;
      for (auto other : table.entries) {
        if (other != 0 && table.contains(w + other)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        result.push_back(w);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Element> pseudo_frobenius(NumericalSemigroup const& s) {
    auto table  = apery(s, s.multiplicity());
    auto result = apery_maximals(table);
    for (auto& w : result) {
      w -= table.modulus;
    }
    return result;
  }

  std::vector<Element> special_gaps(NumericalSemigroup const& s) {
    auto                 pf = pseudo_frobenius(s);
    std::vector<Element> result;
    for (auto x : pf) {
      if (!std::binary_search(pf.begin(), pf.end(), 2 * x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<Element> special_gaps_by_scan(NumericalSemigroup const& s) {
    std::vector<Element> result;
    for (Element x = 1; x <= s.frobenius(); ++x) {
      if (s.contains(x) || !s.contains(2 * x)) {
        continue;
      }
      bool pseudo = true;
      for (Element t = 1; t <= s.frobenius() + 1; ++t) {
        if (s.contains(t) && !s.contains(x + t)) {
          pseudo = false;
          break;
        }
      }
      if (pseudo) {
        result.push_back(x);
      }
    }
    return result;
  }

  Element d_of(NumericalSemigroup const& s, Element member) {
    if (member <= 0 || !s.contains(member)) {
      throw Error(ErrorCode::NotAMember, str(member) + " is not a positive member");
    }
    Element d = 0;
    for (Element y = s.multiplicity(); y <= member && d != 1; ++y) {
      if (s.contains(y)) {
        d = std::gcd(d, y);
      }
    }
    return d;
  }

  bool is_saturated(NumericalSemigroup const& s) noexcept {
    Element d = 0;
    for (Element x = 1; x <= s.frobenius() + 1; ++x) {
      if (!s.contains(x)) {
        continue;
      }
      d = std::gcd(d, x);
      if (!s.contains(x + d)) {
        return false;
      }
    }
    return true;
  }

  bool is_med(NumericalSemigroup const& s) {
    return static_cast<Element>(embedding_dimension(s)) == s.multiplicity();
  }

  NumericalSemigroup intersect(NumericalSemigroup const& s, NumericalSemigroup const& t) {
    auto frobenius = std::max(s.frobenius(), t.frobenius());
    auto words     = empty_words(frobenius);
    for (Element x = 0; x <= frobenius + 1; ++x) {
      if (s.contains(x) && t.contains(x)) {
        set_bit(words, x);
      }
    }
    return NumericalSemigroup(frobenius, std::move(words));
  }

  NumericalSemigroup remove_multiplicity(NumericalSemigroup const& s) {
    if (s.is_ordinary()) {
      throw Error(ErrorCode::WouldChangeFrobenius,
                  "Delta(" + str(s.frobenius() + 1) + ") has no parent");
    }
    return s.without_element(s.multiplicity());
  }

}  // namespace satsemi
