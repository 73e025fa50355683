#pragma once

#include <string>

namespace hk {

/// How a coefficient is rendered inside a pretty-printed polynomial.
struct CoeffText {
  bool negative = false;  // sign pulled out in front of the term
  std::string magnitude;  // text of |c|, or of c itself when negative is false
  bool atomic = true;     // false when it needs parentheses before `*X`
};

}  // namespace hk
