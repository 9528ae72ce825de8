#include "qd/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace qd {

SingularityPattern::SingularityPattern(std::vector<int> orders)
    : orders_(std::move(orders)) {
  std::sort(orders_.begin(), orders_.end(), std::greater<int>());
  sum_ = std::accumulate(orders_.begin(), orders_.end(), 0);
  if (((sum_ % 4) + 4) % 4 != 0)
    fail(ErrorCode::SumNotDivisibleBy4,
         "pattern sum " + std::to_string(sum_) + " is not divisible by 4");
  if (sum_ < -4)
    fail(ErrorCode::SumBelowMinusFour,
         "pattern sum " + std::to_string(sum_) + " is below -4");
  for (int k : orders_)
    if (k < -1)
      fail(ErrorCode::EntryBelowMinusOne,
           "order " + std::to_string(k) + " is below -1");
}

SingularityPattern SingularityPattern::parse(std::string_view text) {
  std::vector<int> orders;
  std::string token;
  auto flush = [&token, &orders]() {
    if (token.empty()) fail(ErrorCode::PatternSyntax, "empty pattern entry");
    long long order = 0;
    long long repeat = 1;
    auto caret = token.find('^');
    auto read = [](std::string_view s) -> long long {
      if (s.empty()) fail(ErrorCode::PatternSyntax, "empty number");
      std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
      if (i == s.size()) fail(ErrorCode::PatternSyntax, "bare sign");
      long long v = 0;
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
          fail(ErrorCode::PatternSyntax,
               "bad character in pattern entry '" + std::string(s) + "'");
        if (v > 100000000) fail(ErrorCode::PatternSyntax, "entry too large");
        v = v * 10 + (s[i] - '0');
      }
      return s[0] == '-' ? -v : v;
    };
    if (caret == std::string::npos) {
      order = read(token);
    } else {
      order = read(std::string_view(token).substr(0, caret));
      repeat = read(std::string_view(token).substr(caret + 1));
      if (repeat < 1)
        fail(ErrorCode::PatternSyntax, "exponent must be at least 1");
      if (repeat > 10000) fail(ErrorCode::PatternSyntax, "exponent too large");
    }
    for (long long i = 0; i < repeat; ++i)
      orders.push_back(static_cast<int>(order));
    token.clear();
  };

  bool any = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
    any = true;
  }
  if (any) flush();
  return SingularityPattern(std::move(orders));
}

std::size_t SingularityPattern::count_of(int order) const {
  return static_cast<std::size_t>(
      std::count(orders_.begin(), orders_.end(), order));
}

std::string SingularityPattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(orders_[i]);
  }
  return out;
}

int genus_of(const SingularityPattern& pattern) {
  return (pattern.sum() + 4) / 4;
}

Stratum Stratum::of(SingularityPattern pattern) {
  int g = genus_of(pattern);
  return Stratum{std::move(pattern), g};
}

int dimension(const Stratum& stratum) {
  return 2 * stratum.genus + static_cast<int>(stratum.pattern.size()) - 2;
}

int dimension(const SingularityPattern& pattern) {
  return 2 * genus_of(pattern) + static_cast<int>(pattern.size()) - 2;
}

SingularityPattern strip_marked(const SingularityPattern& pattern) {
  std::vector<int> kept;
  kept.reserve(pattern.size());
  for (int k : pattern.orders())
    if (k != 0) kept.push_back(k);
  return SingularityPattern(std::move(kept));
}

namespace {

// The four empty strata of Masur-Smillie, in canonical order.
const std::vector<std::vector<int>> kEmptyStrata = {
    {}, {1, -1}, {4}, {3, 1}};

}  // namespace

bool is_empty(const SingularityPattern& pattern) {
  SingularityPattern bare = strip_marked(pattern);
  return std::find(kEmptyStrata.begin(), kEmptyStrata.end(), bare.orders()) !=
         kEmptyStrata.end();
}

std::string empty_stratum_name(const SingularityPattern& pattern) {
  if (!is_empty(pattern)) return "";
  SingularityPattern bare = strip_marked(pattern);
  return bare.empty() ? "empty" : bare.to_string();
}

AbelianPattern canonical_double_cover(const SingularityPattern& pattern) {
  AbelianPattern cover;
  int odd_count = 0;
  for (int k : pattern.orders()) {
    if (k % 2 != 0) {
      ++odd_count;
      int up = k + 1;  // one ramified preimage
      if (up == 0)
        ++cover.marked_count;  // simple pole lifts to a regular point
      else
        cover.zero_orders.push_back(up);
    } else {
      int up = k / 2;  // two unramified preimages
      if (up == 0)
        cover.marked_count += 2;
      else {
        cover.zero_orders.push_back(up);
        cover.zero_orders.push_back(up);
      }
    }
  }
  if (odd_count % 2 != 0)
    fail(ErrorCode::OddCountNotEven,
         "valid patterns have an even number of odd entries");
  cover.genus = 2 * genus_of(pattern) - 1 + odd_count / 2;
  std::sort(cover.zero_orders.begin(), cover.zero_orders.end(),
            std::greater<int>());
  int zero_sum = std::accumulate(cover.zero_orders.begin(),
                                 cover.zero_orders.end(), 0);
  if (zero_sum != 2 * cover.genus - 2)
    fail(ErrorCode::GaussBonnetMismatch,
         "double cover zeros sum to " + std::to_string(zero_sum) +
             ", expected " + std::to_string(2 * cover.genus - 2));
  return cover;
}

namespace {

std::vector<int> replace_entry(const SingularityPattern& pattern,
                               std::size_t index,
                               const std::vector<int>& parts) {
  if (index >= pattern.size())
    fail(ErrorCode::IndexOutOfRange,
         "index " + std::to_string(index) + " into pattern of size " +
             std::to_string(pattern.size()));
  std::vector<int> orders = pattern.orders();
  orders.erase(orders.begin() + static_cast<std::ptrdiff_t>(index));
  orders.insert(orders.end(), parts.begin(), parts.end());
  return orders;
}

void check_part_range(int part) {
  if (part == 0)
    fail(ErrorCode::ZeroPartNotAllowed, "parts may not be marked points");
  if (part < -1)
    fail(ErrorCode::EntryBelowMinusOne,
         "part " + std::to_string(part) + " is below -1");
}

}  // namespace

SingularityPattern break_zero_two(const SingularityPattern& pattern,
                                  std::size_t index, int part1, int part2) {
  if (index >= pattern.size())
    fail(ErrorCode::IndexOutOfRange,
         "index " + std::to_string(index) + " into pattern of size " +
             std::to_string(pattern.size()));
  int k = pattern.orders()[index];
  if (part1 + part2 != k)
    fail(ErrorCode::PartSumMismatch,
         "parts sum to " + std::to_string(part1 + part2) + ", entry is " +
             std::to_string(k));
  check_part_range(part1);
  check_part_range(part2);
  if (k % 2 == 0 && (part1 % 2 != 0 || part2 % 2 != 0))
    fail(ErrorCode::ParityViolation, "even entry requires even parts");
  return SingularityPattern(replace_entry(pattern, index, {part1, part2}));
}

SingularityPattern break_zero_three(const SingularityPattern& pattern,
                                    std::size_t index, int part1, int part2,
                                    int part3) {
  if (index >= pattern.size())
    fail(ErrorCode::IndexOutOfRange,
         "index " + std::to_string(index) + " into pattern of size " +
             std::to_string(pattern.size()));
  int k = pattern.orders()[index];
  if (k % 2 == 0)
    fail(ErrorCode::ParityViolation, "entry must be odd to break in three");
  if (part1 % 2 == 0 || part2 % 2 == 0 || part3 % 2 == 0)
    fail(ErrorCode::ParityViolation, "all three parts must be odd");
  if (part1 + part2 + part3 != k)
    fail(ErrorCode::PartSumMismatch,
         "parts sum to " + std::to_string(part1 + part2 + part3) +
             ", entry is " + std::to_string(k));
  for (int p : {part1, part2, part3}) check_part_range(p);
  return SingularityPattern(
      replace_entry(pattern, index, {part1, part2, part3}));
}

namespace {

// Partitions of `total` into at most `max_parts` parts, each in
// [1, max_part], emitted non-increasing.
void each_partition(int total, int max_parts, int max_part,
                    std::vector<int>& prefix,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (total == 0) {
    emit(prefix);
    return;
  }
  if (max_parts == 0) return;
  int high = std::min(total, max_part);
  for (int part = high; part >= 1; --part) {
    prefix.push_back(part);
    each_partition(total - part, max_parts - 1, part, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SingularityPattern> enumerate_strata(int genus, int max_points,
                                                 int max_order) {
  if (max_points < 1)
    fail(ErrorCode::ParameterOutOfRange, "max_points must be at least 1");
  std::vector<SingularityPattern> out;
  if (genus < 0) return out;
  int target = 4 * genus - 4;
  for (int poles = 0; poles <= max_points; ++poles) {
    int positive_sum = target + poles;
    if (positive_sum < 0) continue;
    if (positive_sum == 0) {
      if (poles > 0) out.emplace_back(std::vector<int>(poles, -1));
      continue;
    }
    std::vector<int> prefix;
    each_partition(positive_sum, max_points - poles, max_order, prefix,
                   [&](const std::vector<int>& parts) {
                     std::vector<int> orders = parts;
                     orders.insert(orders.end(), poles, -1);
                     out.emplace_back(std::move(orders));
                   });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qd
