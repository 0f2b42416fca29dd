#include "localcert/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace localcert {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Gamma codes longer than this are rejected; values never exceed 2^32.
constexpr int kMaxGammaZeros = 32;

}  // namespace

BitString BitString::from_binary(std::string_view bits) {
  BitString out;
  out.bits_.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bit_length) {
  const std::size_t nibbles = (bit_length + 3) / 4;
  // Accept byte-padded input as produced by to_hex().
  if (hex.size() != nibbles && hex.size() != ((bit_length + 7) / 8) * 2) {
    throw std::invalid_argument("hex length does not match bit length");
  }
  BitString out;
  out.bits_.reserve(bit_length);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const int v = hex_value(hex[i]);
    if (v < 0) throw std::invalid_argument("invalid hex digit");
    for (int b = 3; b >= 0; --b) {
      const bool bit = ((v >> b) & 1) != 0;
      if (out.size() < bit_length) {
        out.push_back(bit);
      } else if (bit) {
        throw std::invalid_argument("non-zero padding bits in hex string");
      }
    }
  }
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::prefix(std::size_t length) const {
  return substr(0, length);
}

BitString BitString::substr(std::size_t pos, std::size_t length) const {
  BitString out;
  if (pos >= bits_.size()) return out;
  const std::size_t end = pos + std::min(length, bits_.size() - pos);
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                   bits_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

std::string BitString::to_binary() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::string BitString::to_hex() const {
  std::string s;
  const std::size_t bytes = (bits_.size() + 7) / 8;
  s.reserve(bytes * 2);
  for (std::size_t byte = 0; byte < bytes; ++byte) {
    unsigned v = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      const std::size_t i = byte * 8 + k;
      v = (v << 1) | ((i < bits_.size() && bits_[i]) ? 1u : 0u);
    }
    s.push_back(kHexDigits[v >> 4]);
    s.push_back(kHexDigits[v & 0xF]);
  }
  return s;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a.bits_[i] <=> b.bits_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BitString concat(const BitString& a, const BitString& b) {
  BitString out = a;
  out.append(b);
  return out;
}

int bit_width_for(std::uint64_t max_value) {
  return static_cast<int>(std::bit_width(max_value));
}

int gamma_length(std::uint64_t value) {
  return 2 * (static_cast<int>(std::bit_width(value + 1)) - 1) + 1;
}

void BitWriter::write_fixed(std::uint64_t value, int width) {
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("value does not fit in fixed width");
  }
  for (int b = width - 1; b >= 0; --b) out_.push_back(((value >> b) & 1) != 0);
}

void BitWriter::write_varint(std::uint64_t value) {
  const std::uint64_t x = value + 1;
  const int width = static_cast<int>(std::bit_width(x));
  for (int i = 1; i < width; ++i) out_.push_back(false);
  write_fixed(x, width);
}

void BitWriter::write_sized(const BitString& bits) {
  write_varint(bits.size());
  out_.append(bits);
}

std::optional<bool> BitReader::read_bit() {
  if (pos_ >= bits_->size()) return std::nullopt;
  return (*bits_)[pos_++];
}

std::optional<std::uint64_t> BitReader::read_fixed(int width) {
  if (width < 0 || static_cast<std::size_t>(width) > remaining()) return std::nullopt;
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v = (v << 1) | ((*bits_)[pos_++] ? 1u : 0u);
  return v;
}

std::optional<std::uint64_t> BitReader::read_varint() {
  int zeros = 0;
  while (true) {
    auto bit = read_bit();
    if (!bit) return std::nullopt;
    if (*bit) break;
    if (++zeros > kMaxGammaZeros) return std::nullopt;
  }
  auto rest = read_fixed(zeros);
  if (!rest) return std::nullopt;
  const std::uint64_t x = (std::uint64_t{1} << zeros) | *rest;
  return x - 1;
}

std::optional<BitString> BitReader::read_bits(std::size_t length) {
  if (length > remaining()) return std::nullopt;
  BitString out = bits_->substr(pos_, length);
  pos_ += length;
  return out;
}

std::optional<BitString> BitReader::read_sized() {
  auto len = read_varint();
  if (!len) return std::nullopt;
  return read_bits(*len);
}

std::vector<BitString> enumerate_bitstrings(int max_bits) {
  if (max_bits < 0) return {};
  if (max_bits > 24) throw std::invalid_argument("enumeration width too large");
  std::vector<BitString> out;
  out.reserve((std::size_t{2} << max_bits) - 1);
  for (int len = 0; len <= max_bits; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      BitWriter w;
      w.write_fixed(v, len);
      out.push_back(std::move(w).take());
    }
  }
  return out;
}

}  // namespace localcert
