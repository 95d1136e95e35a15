#include "billiards/sequence.hpp"

#include <algorithm>
#include <set>

#include "billiards/errors.hpp"

namespace billiards {

SequenceVerdict validate_sequence(const std::vector<int>& labels, int k) {
  if (k < 3) throw ValidationError("side count must be at least 3");
  if (labels.empty()) throw ValidationError("billiard sequence is empty");
  for (int a : labels)
    if (a < 1 || a > k)
      throw ValidationError("label " + std::to_string(a) + " outside 1.." +
                            std::to_string(k));
  int n = static_cast<int>(labels.size());
  for (int j = 0; j < n; ++j) {
    if (labels[j] == labels[(j + 1) % n]) {
      SequenceVerdict v;
      v.valid = false;
      v.rule = 'a';
      v.message = "rule (a): consecutive labels coincide at position " +
                  std::to_string(j + 1);
      return v;
    }
  }
  std::set<int> distinct(labels.begin(), labels.end());
  if (distinct.size() == 2) {
    int lo = *distinct.begin();
    int hi = *distinct.rbegin();
    int diff = (hi - lo) % k;
    if (diff == 1 || diff == k - 1) {
      SequenceVerdict v;
      v.valid = false;
      v.rule = 'b';
      v.message = "rule (b): only two labels and the sides " +
                  std::to_string(lo) + "," + std::to_string(hi) +
                  " are neighbours";
      return v;
    }
  }
  return {};
}

std::vector<int> canonical_rotation(std::vector<int> labels) {
  int n = static_cast<int>(labels.size());
  int best = 0;
  for (int s = 1; s < n; ++s) {
    for (int j = 0; j < n; ++j) {
      int a = labels[(best + j) % n];
      int b = labels[(s + j) % n];
      if (a != b) {
        if (b < a) best = s;
        break;
      }
    }
  }
  std::rotate(labels.begin(), labels.begin() + best, labels.end());
  return labels;
}

BilliardSequence::BilliardSequence(std::vector<int> labels, int k) : k_(k) {
  SequenceVerdict v = validate_sequence(labels, k);
  if (!v.valid) throw ValidationError(v.message);
  labels_ = canonical_rotation(std::move(labels));
}

BilliardSequence shift(const BilliardSequence& seq, int i) {
  std::vector<int> out = seq.labels();
  int k = seq.k();
  int off = (i % k + k) % k;
  for (int& a : out) a = (a - 1 + off) % k + 1;
  return BilliardSequence(std::move(out), k);
}

BilliardSequence doubled(const BilliardSequence& seq) {
  std::vector<int> out = seq.labels();
  out.insert(out.end(), seq.labels().begin(), seq.labels().end());
  return BilliardSequence(std::move(out), seq.k());
}

}  // namespace billiards
