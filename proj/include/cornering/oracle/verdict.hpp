#pragma once

#include <string>

namespace cornering::oracle {

/// Unequal means the bounded closure was exhausted without meeting the target;
/// Inconclusive means a bound cut the search short.
enum class Verdict { Equal, Unequal, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Unequal: return "unequal";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace cornering::oracle
