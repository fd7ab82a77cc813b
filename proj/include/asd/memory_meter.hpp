#pragma once

#include <array>
#include <cassert>
#include <cstdint>

namespace asd {

/// Accounting categories for algorithm state, in units of one stored symbol
/// or one stored machine integer.
enum class Mem : int {
  kStreamBuffer = 0,   // buffered online symbols
  kFrontierState = 1,  // D/T tables, recursion summaries, mapping tuples
  kScratchOffline = 2  // temporary rows for exact DP over offline data
};

/// Tracks current and peak logical memory per category for one run.
class MemoryMeter {
 public:
  void charge(Mem category, std::uint64_t units) {
    Gauge& g = gauges_[index(category)];
    g.current += units;
    if (g.current > g.peak) g.peak = g.current;
  }

  void release(Mem category, std::uint64_t units) {
    Gauge& g = gauges_[index(category)];
    assert(g.current >= units);
    g.current -= units;
  }

  std::uint64_t current(Mem category) const { return gauges_[index(category)].current; }
  std::uint64_t peak(Mem category) const { return gauges_[index(category)].peak; }

  void reset() { gauges_ = {}; }

 private:
  struct Gauge {
    std::uint64_t current = 0;
    std::uint64_t peak = 0;
  };

  static constexpr int index(Mem category) { return static_cast<int>(category); }

  std::array<Gauge, 3> gauges_{};
};

/// RAII charge: released in full when the scope ends.
class MeterScope {
 public:
  MeterScope(MemoryMeter& meter, Mem category, std::uint64_t units = 0)
      : meter_(&meter), category_(category), units_(units) {
    meter_->charge(category_, units_);
  }

  MeterScope(const MeterScope&) = delete;
  MeterScope& operator=(const MeterScope&) = delete;

  ~MeterScope() { meter_->release(category_, units_); }

  void add(std::uint64_t units) {
    meter_->charge(category_, units);
    units_ += units;
  }

  void drop(std::uint64_t units) {
    assert(units_ >= units);
    meter_->release(category_, units);
    units_ -= units;
  }

  std::uint64_t held() const { return units_; }

 private:
  MemoryMeter* meter_;
  Mem category_;
  std::uint64_t units_;
};

}  // namespace asd
