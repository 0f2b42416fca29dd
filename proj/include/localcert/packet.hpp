#ifndef LOCALCERT_PACKET_HPP
#define LOCALCERT_PACKET_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "localcert/bitstring.hpp"
#include "localcert/graph.hpp"

namespace localcert {

/// (D, L, C, origin, d): the claimed neighborhood, label and base certificate
/// of `origin`, held at distance d from it.
struct Packet {
  VertexId origin = 0;
  int d = 0;
  std::vector<VertexId> neighbors;  // D, strictly ascending
  BitString label;                  // L
  BitString cert;                   // C

  friend bool operator==(const Packet&, const Packet&) = default;
  friend auto operator<=>(const Packet&, const Packet&) = default;
};

/// Strictly ascending list of packets.
using PacketSet = std::vector<Packet>;

/// Sorts and removes exact duplicates.
PacketSet canonical(PacketSet packets);

/// Identifier width ceil(log2(n + 1)).
int packet_id_bits(std::size_t n);
/// Distance width ceil(log2(delta + 1)).
int packet_distance_bits(int delta);

/// Layout: [count : varint] then per packet
///   [origin : id][d : dist][|D| : varint][D ids][|L| : varint][L][|C| : varint][C]
/// Throws InputError if the set is not canonical or a field is out of range.
BitString encode_packets(const PacketSet& packets, std::size_t n, int delta);

/// Inverse of encode_packets. Anything that encode_packets could not have
/// produced (truncation, trailing bits, ids outside 1..n, d > delta, unsorted
/// D or packets) decodes to the empty set.
PacketSet decode_packets(const BitString& bits, std::size_t n, int delta);

/// First packet with the given origin, or nullptr.
const Packet* find_packet(const PacketSet& packets, VertexId origin);

}  // namespace localcert

#endif  // LOCALCERT_PACKET_HPP
