#include "asd/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "asd/errors.hpp"

namespace asd {

namespace {

std::ifstream open_or_throw(const std::string& path, std::ios::openmode mode) {
  std::ifstream in(path, mode);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return in;
}

Symbol symbol_from_code(std::uint64_t code) {
  if (code > kMaxAlphabetCode) throw ConfigError("alphabet code collides with the sentinel range");
  return Symbol{static_cast<std::uint32_t>(code)};
}

}  // namespace

std::vector<Symbol> load_symbols(const std::string& path, AlphabetMode mode) {
  std::ifstream in = open_or_throw(path, std::ios::binary);
  if (mode == AlphabetMode::kByte) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return symbols_from_bytes(buf.str());
  }
  std::vector<Symbol> out;
  std::uint64_t code;
  while (in >> code) out.push_back(symbol_from_code(code));
  if (!in.eof()) throw ConfigError("malformed integer token in '" + path + "'");
  return out;
}

std::uint64_t byte_file_length(const std::string& path) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec) throw ConfigError("cannot stat '" + path + "'");
  return size;
}

namespace {

class ByteFileSource : public OnlineFileSource {
 public:
  explicit ByteFileSource(const std::string& path) : in_(open_or_throw(path, std::ios::binary)) {}

  std::optional<Symbol> pull() {
    char c;
    if (!in_.get(c)) return std::nullopt;
    return Symbol{static_cast<std::uint8_t>(c)};
  }

  bool has_trailing_input() override { return in_.peek() != std::ifstream::traits_type::eof(); }

 private:
  std::ifstream in_;
};

class IntFileSource : public OnlineFileSource {
 public:
  explicit IntFileSource(const std::string& path)
      : path_(path), in_(open_or_throw(path, std::ios::in)) {}

  std::optional<Symbol> pull() {
    std::uint64_t code;
    if (in_ >> code) return symbol_from_code(code);
    if (!in_.eof()) throw ConfigError("malformed integer token in '" + path_ + "'");
    return std::nullopt;
  }

  bool has_trailing_input() override {
    std::uint64_t code;
    return static_cast<bool>(in_ >> code);
  }

 private:
  std::string path_;
  std::ifstream in_;
};

}  // namespace

OpenedStream open_online_stream(const std::string& path, AlphabetMode mode,
                                std::uint64_t declared_length) {
  if (mode == AlphabetMode::kByte) {
    if (byte_file_length(path) != declared_length)
      throw ModelViolation("offline and online strings must have equal length");
    auto src = std::make_shared<ByteFileSource>(path);
    return OpenedStream{OnlineStream(declared_length, [src] { return src->pull(); }), src};
  }
  auto src = std::make_shared<IntFileSource>(path);
  return OpenedStream{OnlineStream(declared_length, [src] { return src->pull(); }), src};
}

}  // namespace asd
