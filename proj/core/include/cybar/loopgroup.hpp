#pragma once

// Kan loop group of a reduced simplicial set as a free simplicial group on
// word representatives. Degreewise groups are infinite, so identities are
// checked by sampling random words.

#include <cstdint>
#include <string>
#include <vector>

#include "cybar/simplicial.hpp"

namespace cybar {

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of a free group, always kept reduced.
class GroupWord {
 public:
  GroupWord() = default;
  /// Reduces the given letters.
  explicit GroupWord(const std::vector<Letter>& letters);
  static GroupWord generator(int g) { return GroupWord({Letter{g, 1}}); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }

  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  /// `g1 g2^-1 g1`, generators named by `names`; the empty word is `1`.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
std::vector<Letter> reduce(const std::vector<Letter>& letters);

/// Parses `g1 g2^-1 g1` against a roster of generator names; `1` is the
/// empty word.
GroupWord parse_word(const std::string& text, const std::vector<std::string>& names);

/// Degreewise free groups with structure maps given on generators and
/// extended homomorphically. Degeneracies exist up to degree truncation - 1.
class FreeSimplicialGroup {
 public:
  FreeSimplicialGroup(int truncation, std::vector<std::vector<std::string>> generators);

  int truncation() const noexcept { return truncation_; }
  const std::vector<std::string>& generators(int degree) const;

  const GroupWord& face_of_generator(int degree, int i, int g) const;
  const GroupWord& degeneracy_of_generator(int degree, int j, int g) const;
  void set_face(int degree, int i, int g, GroupWord image);
  void set_degeneracy(int degree, int j, int g, GroupWord image);

  GroupWord face(int degree, int i, const GroupWord& w) const;
  GroupWord degeneracy(int degree, int j, const GroupWord& w) const;

  /// Header line carried by every report on this group.
  std::string description;

 private:
  int truncation_;
  std::vector<std::vector<std::string>> generators_;
  // [degree][i][generator]
  std::vector<std::vector<std::vector<GroupWord>>> faces_;
  std::vector<std::vector<std::vector<GroupWord>>> degeneracies_;
};

/// Generators in degree n are the (n+1)-simplices of X outside the image of
/// s_0. Requires X reduced and truncation + 1 <= X.truncation().
FreeSimplicialGroup kan_loop_group(const SimplicialSet& x, int truncation);

struct LoopCheckReport {
  std::string header;
  std::size_t samples = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Random words of length <= 6 in every degree; checks the simplicial
/// identities and that faces and degeneracies respect products and inverses.
LoopCheckReport sample_identity_check(const FreeSimplicialGroup& g, std::size_t samples, std::uint64_t seed);

}  // namespace cybar
