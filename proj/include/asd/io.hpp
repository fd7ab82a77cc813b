#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "asd/online_stream.hpp"
#include "asd/symbol.hpp"

namespace asd {

enum class AlphabetMode {
  kByte,  // one symbol per raw byte
  kInt    // ASCII whitespace-separated unsigned decimal integers
};

/// Loads a whole file as symbols (offline side, and the exact subcommand).
std::vector<Symbol> load_symbols(const std::string& path, AlphabetMode mode);

/// Byte-mode file size (symbol count).
std::uint64_t byte_file_length(const std::string& path);

class OnlineFileSource;

struct OpenedStream {
  OnlineStream stream;
  std::shared_ptr<OnlineFileSource> source;
};

/// Opens a file as a single-pass stream of `declared_length` symbols, read
/// incrementally (no whole-file preload). Byte mode checks the declared
/// length against the file size up front; int mode surfaces a short file as
/// ModelViolation during the pass and surplus tokens via has_trailing_input
/// once the stream is exhausted.
OpenedStream open_online_stream(const std::string& path, AlphabetMode mode,
                                std::uint64_t declared_length);

class OnlineFileSource {
 public:
  virtual ~OnlineFileSource() = default;
  virtual bool has_trailing_input() = 0;
};

}  // namespace asd
