#pragma once

namespace ptq {

enum class Direction { raise, lower };

struct LadderAction {
  double coefficient = 0.0;
  int target_n = 0;
};

}  // namespace ptq
