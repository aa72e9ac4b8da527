#pragma once

#include "rangeforms/bench.hpp"

// Peak heap bytes seen through the replacement operator new.
class HeapCounter : public rangeforms::AllocationProbe {
 public:
  void reset() override;
  std::size_t peak_bytes() const override;
};
