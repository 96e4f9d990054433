#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Braid words, their Artin action on the free group, and the combinatorics
// of braid closures (components, linking number).  Everything here is exact
// integer bookkeeping; no floating point.

namespace cassonlin {

struct BraidLetter {
  int index;  // generator index, 1 <= index <= strand_count - 1
  int sign;   // +1 or -1
  bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
 public:
  BraidWord(int strand_count, std::vector<BraidLetter> letters);

  int strand_count() const { return strand_count_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  // Reversed letters with flipped signs; the group inverse.
  BraidWord inverse() const;

  // Concatenation; strand counts must agree.
  BraidWord operator*(const BraidWord& o) const;

  std::string str() const;

 private:
  int strand_count_;
  std::vector<BraidLetter> letters_;
};

// Grammar: word := term (space* term)*, term := "s" index ("^" signed_int)?.
// Exponents are expanded into repeated letters.  Throws SyntaxError on
// malformed input and IndexError when an index is out of 1..strand_count-1.
BraidWord parse_braid(std::string_view text, int strand_count);

// Freely reduced word in the free group F_n.  A letter is a nonzero int
// whose absolute value is the generator index and whose sign the exponent.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(int index, int exponent = 1);

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  bool operator==(const FreeWord&) const = default;

  bool is_identity() const { return w_.empty(); }
  std::size_t length() const { return w_.size(); }
  const std::vector<int>& letters() const { return w_; }

  // Generators named x, y for rank <= 2, else x1, x2, ...
  std::string str(int n_generators) const;

 private:
  void push(int letter);  // appends with free cancellation
  std::vector<int> w_;
};

// Images of the free generators x_1..x_n under an endomorphism of F_n.
struct BraidAutomorphism {
  int strand_count = 0;
  std::vector<FreeWord> images;

  bool operator==(const BraidAutomorphism&) const = default;
};

BraidAutomorphism identity_automorphism(int strand_count);

// Substitutes images[g-1] for each generator g occurring in w.
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images);

// Right action: first, then next.
BraidAutomorphism compose(const BraidAutomorphism& first, const BraidAutomorphism& next);

// The Artin action of a braid word as a right action on F_n, built letter
// by letter from the single-generator rule
//   s_i:      x_i -> x_{i+1},            x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
//   s_i^-1:   x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
// which fixes the product x_1 ... x_n.
BraidAutomorphism artin_action(const BraidWord& b);

// Permutation of strand positions top to bottom: entry p of the result is
// the strand (top position label) found at bottom position p+1.
std::vector<int> braid_permutation(const BraidWord& b);

// Partition of strands 1..n into closure components, each sorted, the list
// sorted by smallest member.
std::vector<std::vector<int>> closure_components(const BraidWord& b);

// Linking number of the two components of the closure: half the signed
// count of crossings between strands of different components.  Throws
// NotTwoComponents unless the closure has exactly two components.
int linking_number(const BraidWord& b);

}  // namespace cassonlin
