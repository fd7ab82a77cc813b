#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "asd/errors.hpp"
#include "asd/symbol.hpp"

namespace asd {

/// The single-pass string. Symbols are delivered in order, each exactly once;
/// after the last position next() returns nullopt forever. Any attempt to go
/// back over delivered symbols raises SinglePassViolation.
class OnlineStream {
 public:
  /// Pull source for streamed inputs; returns nullopt on end of data.
  using Pull = std::function<std::optional<Symbol>()>;

  explicit OnlineStream(std::vector<Symbol> symbols)
      : length_(symbols.size()), buffer_(std::move(symbols)) {}

  /// Streamed source with a declared length. If the source runs dry before
  /// `length` symbols, next() raises ModelViolation.
  OnlineStream(std::uint64_t length, Pull pull) : length_(length), pull_(std::move(pull)) {}

  OnlineStream(OnlineStream&&) = default;
  OnlineStream& operator=(OnlineStream&&) = default;
  OnlineStream(const OnlineStream&) = delete;
  OnlineStream& operator=(const OnlineStream&) = delete;

  std::optional<Symbol> next() {
    if (cursor_ > length_) return std::nullopt;
    Symbol s;
    if (pull_) {
      std::optional<Symbol> got = pull_();
      if (!got) throw ModelViolation("online stream ended before its declared length");
      s = *got;
    } else {
      s = buffer_[cursor_ - 1];
    }
    ++cursor_;
    return s;
  }

  /// Only legal on an untouched stream; anything else would re-deliver.
  void rewind() {
    if (cursor_ > 1) throw SinglePassViolation("rewind after delivery would repeat the pass");
  }

  std::uint64_t length() const { return length_; }

  /// 1-based position of the next unread symbol.
  std::uint64_t cursor() const { return cursor_; }

  std::uint64_t delivered() const { return cursor_ - 1; }
  bool exhausted() const { return cursor_ > length_; }

  /// Reads exactly `count` symbols into a fresh buffer; the caller meters it.
  std::vector<Symbol> take(std::uint64_t count) {
    std::vector<Symbol> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      std::optional<Symbol> s = next();
      if (!s) throw ModelViolation("online stream ended inside a window");
      out.push_back(*s);
    }
    return out;
  }

 private:
  std::uint64_t length_;
  std::uint64_t cursor_ = 1;
  std::vector<Symbol> buffer_;
  Pull pull_;
};

}  // namespace asd
