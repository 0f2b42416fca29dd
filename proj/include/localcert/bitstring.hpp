#ifndef LOCALCERT_BITSTRING_HPP
#define LOCALCERT_BITSTRING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace localcert {

/// Arbitrary-length bit sequence used for labels, certificates and wire
/// encodings. Equality is bit-exact: the empty string and "0" differ.
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1' characters. Throws std::invalid_argument on
  /// any other character.
  static BitString from_binary(std::string_view bits);

  /// Parses `bit_length` bits from MSB-first packed hex. Padding bits in the
  /// last nibble must be zero.
  static BitString from_hex(std::string_view hex, std::size_t bit_length);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void append(const BitString& other);

  BitString prefix(std::size_t length) const;
  BitString substr(std::size_t pos, std::size_t length) const;

  std::string to_binary() const;
  std::string to_hex() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  /// Shorter strings first, then lexicographic: the certificate enumeration order.
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

 private:
  std::vector<std::uint8_t> bits_;
};

BitString concat(const BitString& a, const BitString& b);

/// Number of bits needed to write any value in [0, max_value].
int bit_width_for(std::uint64_t max_value);

/// Length of the Elias-gamma code for `value` (encoded as value + 1).
int gamma_length(std::uint64_t value);

class BitWriter {
 public:
  void write_bit(bool bit) { out_.push_back(bit); }
  /// Writes `value` in exactly `width` bits, MSB first.
  void write_fixed(std::uint64_t value, int width);
  /// Elias-gamma code of value + 1, so zero is representable.
  void write_varint(std::uint64_t value);
  void write_bits(const BitString& bits) { out_.append(bits); }
  /// varint length followed by the raw bits.
  void write_sized(const BitString& bits);

  const BitString& bits() const& noexcept { return out_; }
  BitString take() && { return std::move(out_); }

 private:
  BitString out_;
};

/// Reader over a BitString. Every read returns nullopt past the end or on a
/// malformed varint; callers treat that as a decode failure.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(&bits) {}

  std::optional<bool> read_bit();
  std::optional<std::uint64_t> read_fixed(int width);
  std::optional<std::uint64_t> read_varint();
  std::optional<BitString> read_bits(std::size_t length);
  std::optional<BitString> read_sized();

  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bits_->size() - pos_; }
  bool at_end() const noexcept { return pos_ == bits_->size(); }

 private:
  const BitString* bits_;
  std::size_t pos_ = 0;
};

/// All bit strings of length 0..max_bits, shortest first and lexicographic
/// within a length.
std::vector<BitString> enumerate_bitstrings(int max_bits);

}  // namespace localcert

#endif  // LOCALCERT_BITSTRING_HPP
