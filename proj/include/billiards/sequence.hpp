#pragma once

#include <string>
#include <vector>

namespace billiards {

// Verdict of the combinatorial validity rules for billiard sequences in a
// k-gon:
//   (a) consecutive labels, read cyclically, never coincide;
//   (b) a sequence with exactly two distinct labels may not use labels of
//       neighbouring sides (labels differing by +-1 mod k).
struct SequenceVerdict {
  bool valid = true;
  char rule = 0;  // 'a' or 'b' when invalid
  std::string message;
};

// Checks the rules; labels outside 1..k or an empty sequence throw
// ValidationError.
SequenceVerdict validate_sequence(const std::vector<int>& labels, int k);

// Cyclic word of side labels. Stored in its lexicographically least
// rotation, so equality and hashing see cyclic words; construction rejects
// invalid sequences.
class BilliardSequence {
 public:
  BilliardSequence(std::vector<int> labels, int k);

  int k() const { return k_; }
  int length() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const BilliardSequence& a, const BilliardSequence& b) {
    return a.k_ == b.k_ && a.labels_ == b.labels_;
  }

 private:
  int k_;
  std::vector<int> labels_;
};

// Lexicographically least cyclic rotation.
std::vector<int> canonical_rotation(std::vector<int> labels);

// Relabeling a_j -> a_j + i (mod k, labels 1..k); shift by k is the
// identity. In a regular polygon this realizes the rotation by 2*pi*i/k.
BilliardSequence shift(const BilliardSequence& seq, int i);

// The word repeated twice; covers the same curve with doubled length.
BilliardSequence doubled(const BilliardSequence& seq);

}  // namespace billiards
