#include "asd/padding.hpp"

#include <cmath>
#include <memory>

#include "asd/errors.hpp"

namespace asd {

std::uint64_t padded_length(std::uint64_t n, std::uint64_t block) {
  if (block == 0) throw ConfigError("padding block must be positive");
  return (n + block - 1) / block * block;
}

std::uint64_t window_size_for(std::uint64_t n) {
  if (n == 0) return 1;
  auto w = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (w * w < n) ++w;
  while (w > 1 && (w - 1) * (w - 1) >= n) --w;
  return w;
}

namespace {

Symbol offline_pad(PadMode mode) { return mode == PadMode::kEd ? kPadSame : kPadDistinctOffline; }
Symbol online_pad(PadMode mode) { return mode == PadMode::kEd ? kPadSame : kPadDistinctOnline; }

}  // namespace

PaddedPair pad_pair(std::vector<Symbol> offline, std::vector<Symbol> online, PadMode mode,
                    std::uint64_t block) {
  if (offline.size() != online.size())
    throw ModelViolation("offline and online strings must have equal length");
  const std::uint64_t n = offline.size();
  const std::uint64_t target = padded_length(n, block);
  offline.insert(offline.end(), target - n, offline_pad(mode));
  online.insert(online.end(), target - n, online_pad(mode));
  return PaddedPair{OfflineText(std::move(offline)), OnlineStream(std::move(online)), n, target};
}

OfflineText pad_offline(const OfflineText& text, PadMode mode, std::uint64_t block) {
  const std::uint64_t target = padded_length(text.size(), block);
  return text.padded_with(offline_pad(mode), target - text.size());
}

OnlineStream pad_online(OnlineStream&& stream, PadMode mode, std::uint64_t block) {
  const std::uint64_t n = stream.length();
  const std::uint64_t target = padded_length(n, block);
  const Symbol pad = online_pad(mode);
  auto inner = std::make_shared<OnlineStream>(std::move(stream));
  return OnlineStream(target, [inner, pad, n]() -> std::optional<Symbol> {
    if (inner->cursor() <= n) return inner->next();
    return pad;
  });
}

}  // namespace asd
