#include "binrej/words.hpp"

#include <algorithm>
#include <limits>

#include "binrej/errors.hpp"

namespace binrej {

LatticeWord::LatticeWord(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (Step s : steps_) {
    switch (s) {
      case Step::Up: ++counts_.up; break;
      case Step::Down: ++counts_.down; break;
      case Step::Flat: ++counts_.flat; break;
    }
  }
}

std::string LatticeWord::to_string(std::string_view alphabet) const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) {
    out.push_back(s == Step::Up ? alphabet[0] : s == Step::Down ? alphabet[1] : alphabet[2]);
  }
  return out;
}

LatticeWord LatticeWord::parse(std::string_view text, std::string_view alphabet) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == alphabet[0]) {
      steps.push_back(Step::Up);
    } else if (c == alphabet[1]) {
      steps.push_back(Step::Down);
    } else if (c == alphabet[2]) {
      steps.push_back(Step::Flat);
    } else {
      throw ContractViolation(std::string("LatticeWord::parse: unexpected letter '") + c + "'");
    }
  }
  return LatticeWord(std::move(steps));
}

LatticeWord shuffle_multiset(const StepCounts& counts, UniformSource& src) {
  if (counts.up < 0 || counts.down < 0 || counts.flat < 0) {
    throw ContractViolation("shuffle_multiset: negative letter count");
  }
  std::int64_t up = counts.up;
  std::int64_t down = counts.down;
  std::int64_t flat = counts.flat;
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(counts.length()));
  for (std::int64_t left = counts.length(); left > 0; --left) {
    const auto remaining = static_cast<std::uint64_t>(left);
    const auto r = static_cast<std::int64_t>(remaining > src.watermark() ? src.random_halves(remaining)
                                                                        : src.random(remaining));
    if (r < up) {
      steps.push_back(Step::Up);
      --up;
    } else if (r < up + down) {
      steps.push_back(Step::Down);
      --down;
    } else {
      steps.push_back(Step::Flat);
      --flat;
    }
  }
  return LatticeWord(std::move(steps));
}

// With P_j the j-th prefix sum and h = P_L, start p is good iff P_p < P_j for
// every j > p (the part before the wrap) and P_p - h < P_j for every j < p
// (the part after it).
std::vector<std::size_t> good_rotations(const LatticeWord& word) {
  const std::int64_t h = word.height();
  if (h < 1) throw ContractViolation("good_rotations requires a positive total height");
  const std::size_t len = word.size();
  std::vector<std::int64_t> prefix(len + 1, 0);
  for (std::size_t j = 0; j < len; ++j) prefix[j + 1] = prefix[j] + static_cast<std::int64_t>(word[j]);

  std::vector<std::int64_t> suffix_min(len + 1, std::numeric_limits<std::int64_t>::max());
  for (std::size_t j = len; j-- > 0;) suffix_min[j] = std::min(suffix_min[j + 1], prefix[j + 1]);

  std::vector<std::size_t> good;
  good.reserve(static_cast<std::size_t>(h));
  std::int64_t earlier_min = std::numeric_limits<std::int64_t>::max();
  for (std::size_t p = 0; p < len; ++p) {
    if (prefix[p] < suffix_min[p] && prefix[p] - h < earlier_min) good.push_back(p);
    earlier_min = std::min(earlier_min, prefix[p]);
  }
  return good;
}

std::vector<std::size_t> good_rotations_brute_force(const LatticeWord& word) {
  if (word.height() < 1) throw ContractViolation("good_rotations requires a positive total height");
  const std::size_t len = word.size();
  std::vector<std::size_t> good;
  for (std::size_t p = 0; p < len; ++p) {
    std::int64_t sum = 0;
    bool ok = true;
    for (std::size_t t = 0; t < len && ok; ++t) {
      sum += static_cast<std::int64_t>(word[(p + t) % len]);
      ok = sum > 0;
    }
    if (ok) good.push_back(p);
  }
  return good;
}

LatticeWord rotate(const LatticeWord& word, std::size_t start) {
  std::vector<Step> steps(word.steps());
  if (!steps.empty()) std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(start % steps.size()), steps.end());
  return LatticeWord(std::move(steps));
}

LatticeWord cycle_to_factor(const LatticeWord& word, std::size_t rotation_choice) {
  const auto good = good_rotations(word);
  if (good.size() != static_cast<std::size_t>(word.height())) {
    throw InvariantFailure("cycle lemma: found " + std::to_string(good.size()) + " good rotations for height " +
                           std::to_string(word.height()));
  }
  if (rotation_choice >= good.size()) throw ContractViolation("cycle_to_factor: rotation index out of range");
  const std::size_t start = good[rotation_choice];
  if (word[start] != Step::Up) throw InvariantFailure("cycle lemma: good rotation does not start with Up");
  std::vector<Step> steps;
  steps.reserve(word.size() - 1);
  for (std::size_t t = 1; t < word.size(); ++t) steps.push_back(word[(start + t) % word.size()]);
  return LatticeWord(std::move(steps));
}

LatticeWord cycle_to_factor(const LatticeWord& word, UniformSource& src) {
  const std::int64_t h = word.height();
  if (h < 1) throw ContractViolation("cycle_to_factor requires a positive total height");
  const std::size_t choice = h == 1 ? 0 : static_cast<std::size_t>(src.random(static_cast<std::uint64_t>(h)));
  return cycle_to_factor(word, choice);
}

bool validate_factor(const LatticeWord& word, std::int64_t expected_height) {
  std::int64_t height = 0;
  for (Step s : word.steps()) {
    height += static_cast<std::int64_t>(s);
    if (height < 0) return false;
  }
  return height == expected_height;
}

}  // namespace binrej
