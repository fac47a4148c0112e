#pragma once

// Alcove walks: words in c_i^+-, f_i^+- followed by t_tau.  A word is a walk
// for an orientation and start alcove when each step is allowed by the side
// of the current alcove's type-i wall: negative side admits c_i^+ and f_i^-,
// positive side admits c_i^- and f_i^+.  Crossings move to the neighbouring
// alcove, foldings stay.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke_walks/alcove.hpp"

namespace hw {

struct Step {
  enum class Kind : std::uint8_t { crossing, folding };
  Kind kind = Kind::crossing;
  std::int8_t sign = 1;  // +1 or -1
  std::int8_t type = 0;

  static Step c(int i, int sign) { return {Kind::crossing, static_cast<std::int8_t>(sign), static_cast<std::int8_t>(i)}; }
  static Step f(int i, int sign) { return {Kind::folding, static_cast<std::int8_t>(sign), static_cast<std::int8_t>(i)}; }
  bool crossing() const { return kind == Kind::crossing; }

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

/// "c0+", "f2-".
std::string to_string(const Step& s);
/// Inverse of to_string; throws std::invalid_argument.
Step parse_step(const std::string& s);

struct WalkWord {
  std::vector<Step> steps;
  int omega = 0;  // index into AffineWeylGroup::omega()

  int crossings() const;
  friend bool operator==(const WalkWord&, const WalkWord&) = default;
  friend auto operator<=>(const WalkWord&, const WalkWord&) = default;
};

/// "c0+ c1+ | tau1"; the Omega part is omitted when trivial.
std::string to_string(const WalkWord& w);
/// Space separated steps, optionally followed by "| tau<k>".
WalkWord parse_walk_word(const std::string& s);

/// -1 when `word` is a walk, otherwise the first offending position.
int first_violation(const AffineWeylGroup& g, const WalkWord& word, const Orientation& o, const AffineElement& start);

/// Alcove reached by the crossings, times tau.  Does not check validity.
AffineElement path_end(const AffineWeylGroup& g, const WalkWord& word, const AffineElement& start);

/// A word checked to be a walk for (orientation, start).
class Walk {
 public:
  /// Throws std::invalid_argument if the word violates the side condition.
  Walk(const AffineWeylGroup& g, WalkWord word, Orientation o, std::optional<AffineElement> start = std::nullopt);

  const WalkWord& word() const { return word_; }
  const Orientation& orientation() const { return orientation_; }
  const AffineElement& start() const { return start_; }
  const AffineElement& end() const { return end_; }
  bool non_folded() const { return word_.crossings() == static_cast<int>(word_.steps.size()); }

 private:
  WalkWord word_;
  Orientation orientation_;
  AffineElement start_, end_;
};

/// The unique non-folded walk along the gallery of `word`.
Walk non_folded_walk(const AffineWeylGroup& g, const Word& word, const Orientation& o,
                     const std::optional<AffineElement>& start = std::nullopt);

/// Integer combination of walks sharing orientation and start.
struct WalkCombination {
  Orientation orientation;
  AffineElement start;
  std::map<WalkWord, std::int64_t> terms;
};

/// Rewrites an arbitrary word as a combination of walks, fixing the leftmost
/// violation first with c^- = c^+ + f^-, f^+ = -f^- (or their mirror images).
WalkCombination straighten(const AffineWeylGroup& g, const WalkWord& word, const Orientation& o,
                           const std::optional<AffineElement>& start = std::nullopt);

/// A walk of the given length from the base alcove: each step picks a type
/// uniformly and folds with probability `fold_probability`; the sign is then
/// forced by the side condition.
Walk random_walk(const AffineWeylGroup& g, const Orientation& o, int length, std::uint64_t seed,
                 double fold_probability = 0.3);

/// The basis word of a walk: every crossing made positive, every folding
/// negative.
WalkWord basis_word(const WalkWord& w);

/// p followed by q moved to end(p).  Both must be non-folded, q must start at
/// the base alcove and the orientation must be translation invariant.  Throws
/// std::invalid_argument when the product is not a walk.
Walk concatenate(const AffineWeylGroup& g, const Walk& p, const Walk& q);

}  // namespace hw
