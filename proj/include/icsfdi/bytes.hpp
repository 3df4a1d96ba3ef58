#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icsfdi {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

enum class Endian { LE, BE };

// Lowercase hex, no separators.
std::string hex_encode(ByteView data);

// Throws FormatError on odd length or non-hex characters.
Bytes hex_decode(std::string_view hex);

// Reads `width` bytes (1..8) starting at `offset` as an unsigned integer.
std::uint64_t read_uint(ByteView data, std::size_t offset, int width, Endian e);

// Writes the low `width` bytes of `value` at `offset`.
void write_uint(std::span<std::uint8_t> data, std::size_t offset, int width,
                Endian e, std::uint64_t value);

// Value reinterpreted with its byte order flipped (width 1 is a no-op).
std::uint64_t byteswap_value(std::uint64_t value, int width);

// FNV-1a, used for content hashes in reports and determinism checks.
std::uint64_t fnv1a64(ByteView data);
std::uint64_t fnv1a64(std::string_view data);

// SplitMix64 step; used to derive independent RNG streams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace icsfdi
