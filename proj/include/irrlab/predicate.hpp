#pragma once

#include <memory>
#include <string>
#include <vector>

#include "irrlab/finspace.hpp"

namespace irrlab::enumerate {

// Boolean combinations of profile flags, for counterexample search.
//
// Grammar:  expr   := term ('|' term)*
//           term   := factor ('&' factor)*
//           factor := '!' factor | '(' expr ')' | flag
// '&&', '||', 'and', 'or', 'not', '~' are accepted as spellings.
//
// Flags: p1..p6, irreducible, connected, nonempty, discrete,
// totallyDisconnected, pointwise, locallyIrreducible, irrLocallyFinite,
// t0, true, false.
class Predicate {
 public:
  // Throws std::invalid_argument on syntax errors or unknown flags.
  static Predicate parse(const std::string& expr);

  bool eval(const finspace::FiniteSpace& space,
            const finspace::PropertyProfile& profile) const;

  const std::string& text() const { return text_; }

  static std::vector<std::string> known_flags();

  struct Node;  // expression tree; opaque outside the parser

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace irrlab::enumerate
