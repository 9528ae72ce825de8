#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "qd/errors.hpp"

namespace qd {

// Multiset of singularity orders of a meromorphic quadratic differential,
// stored canonically in non-increasing order. Entry meaning: k >= 1 a zero of
// order k, k == 0 a marked point, k == -1 a simple pole. Construction
// enforces: every entry >= -1, total sum divisible by 4, total sum >= -4.
class SingularityPattern {
 public:
  SingularityPattern() = default;  // the empty pattern (genus 1)
  explicit SingularityPattern(std::vector<int> orders);

  // Text syntax: comma-separated integers with exponent sugar "k^m",
  // e.g. "3,1,-1^8". Whitespace is ignored; an empty string is the empty
  // pattern.
  static SingularityPattern parse(std::string_view text);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t size() const { return orders_.size(); }
  bool empty() const { return orders_.empty(); }
  int sum() const { return sum_; }

  std::size_t count_of(int order) const;
  bool contains(int order) const { return count_of(order) > 0; }

  // Expanded comma-separated rendering in canonical order ("6,2,-1,-1").
  std::string to_string() const;

  friend bool operator==(const SingularityPattern&,
                         const SingularityPattern&) = default;
  // Lexicographic on the canonical (non-increasing) sequence.
  friend std::strong_ordering operator<=>(const SingularityPattern& a,
                                          const SingularityPattern& b) {
    return a.orders_ <=> b.orders_;
  }

 private:
  std::vector<int> orders_;
  int sum_ = 0;
};

// Genus from Gauss-Bonnet: 4g - 4 = sum of orders.
int genus_of(const SingularityPattern& pattern);

struct Stratum {
  SingularityPattern pattern;
  int genus = 1;

  static Stratum of(SingularityPattern pattern);
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

// Complex dimension 2g + n - 2, where n counts all entries including marked
// points.
int dimension(const Stratum& stratum);
int dimension(const SingularityPattern& pattern);

// Same multiset with all marked points (0 entries) removed.
SingularityPattern strip_marked(const SingularityPattern& pattern);

// True exactly for the four exceptional patterns (after stripping marked
// points): empty, {1,-1}, {4}, {1,3}. Every other valid stratum is non-empty.
bool is_empty(const SingularityPattern& pattern);

// When the pattern is empty, names which exceptional stratum it is, e.g.
// "1,3"; empty string otherwise.
std::string empty_stratum_name(const SingularityPattern& pattern);

// Zero data of the Abelian differential living on the canonical orientation
// double cover: one zero of order k+1 over each odd entry k, two zeros of
// order k/2 over each even entry k. Order-0 contributions are counted in
// marked_count instead of zero_orders.
struct AbelianPattern {
  std::vector<int> zero_orders;  // non-increasing, entries >= 1
  int marked_count = 0;
  int genus = 0;

  friend bool operator==(const AbelianPattern&, const AbelianPattern&) = default;
};

// Purely arithmetic: does not consult is_empty (callers surface both).
AbelianPattern canonical_double_cover(const SingularityPattern& pattern);

// Replaces the entry at `index` (into the canonical order) by two parts
// summing to it. For an odd entry the parts may be any values in
// {-1,1,2,3,...}; for an even entry both parts must be even (hence >= 2).
SingularityPattern break_zero_two(const SingularityPattern& pattern,
                                  std::size_t index, int part1, int part2);

// Replaces an odd entry by three odd parts summing to it.
SingularityPattern break_zero_three(const SingularityPattern& pattern,
                                    std::size_t index, int part1, int part2,
                                    int part3);

// All zero-free patterns of the given genus with at most max_points entries,
// in increasing lexicographic order of the canonical sequence. The empty
// pattern is excluded. max_order caps the largest entry.
std::vector<SingularityPattern> enumerate_strata(
    int genus, int max_points,
    int max_order = std::numeric_limits<int>::max());

}  // namespace qd
