#include "localcert/packet.hpp"

#include <algorithm>

namespace localcert {

PacketSet canonical(PacketSet packets) {
  for (auto& p : packets) {
    std::sort(p.neighbors.begin(), p.neighbors.end());
    p.neighbors.erase(std::unique(p.neighbors.begin(), p.neighbors.end()), p.neighbors.end());
  }
  std::sort(packets.begin(), packets.end());
  packets.erase(std::unique(packets.begin(), packets.end()), packets.end());
  return packets;
}

int packet_id_bits(std::size_t n) { return bit_width_for(n); }

int packet_distance_bits(int delta) { return bit_width_for(static_cast<std::uint64_t>(delta)); }

BitString encode_packets(const PacketSet& packets, std::size_t n, int delta) {
  const int w = packet_id_bits(n);
  const int dw = packet_distance_bits(delta);
  BitWriter out;
  out.write_varint(packets.size());
  for (std::size_t i = 0; i < packets.size(); ++i) {
    const Packet& p = packets[i];
    if (i > 0 && !(packets[i - 1] < p)) throw InputError("packet set is not canonical");
    if (p.origin < 1 || p.origin > n) throw InputError("packet origin out of range");
    if (p.d < 0 || p.d > delta) throw InputError("packet distance out of range");
    out.write_fixed(p.origin, w);
    out.write_fixed(static_cast<std::uint64_t>(p.d), dw);
    out.write_varint(p.neighbors.size());
    for (std::size_t j = 0; j < p.neighbors.size(); ++j) {
      const VertexId x = p.neighbors[j];
      if (x < 1 || x > n) throw InputError("packet neighbor out of range");
      if (j > 0 && p.neighbors[j - 1] >= x) throw InputError("packet neighbors not ascending");
      out.write_fixed(x, w);
    }
    out.write_sized(p.label);
    out.write_sized(p.cert);
  }
  return std::move(out).take();
}

PacketSet decode_packets(const BitString& bits, std::size_t n, int delta) {
  const int w = packet_id_bits(n);
  const int dw = packet_distance_bits(delta);
  BitReader in(bits);
  const auto count = in.read_varint();
  // Every packet needs at least w + dw + 3 bits, which bounds the count.
  if (!count || *count > in.remaining() / static_cast<std::size_t>(w + dw + 3)) return {};
  PacketSet out;
  out.reserve(*count);
  for (std::uint64_t i = 0; i < *count; ++i) {
    Packet p;
    const auto origin = in.read_fixed(w);
    const auto d = in.read_fixed(dw);
    const auto degree = in.read_varint();
    if (!origin || !d || !degree) return {};
    if (*origin < 1 || *origin > n || *d > static_cast<std::uint64_t>(delta)) return {};
    if (*degree > n) return {};
    p.origin = static_cast<VertexId>(*origin);
    p.d = static_cast<int>(*d);
    for (std::uint64_t j = 0; j < *degree; ++j) {
      const auto x = in.read_fixed(w);
      if (!x || *x < 1 || *x > n) return {};
      if (!p.neighbors.empty() && p.neighbors.back() >= *x) return {};
      p.neighbors.push_back(static_cast<VertexId>(*x));
    }
    auto label = in.read_sized();
    auto cert = in.read_sized();
    if (!label || !cert) return {};
    p.label = std::move(*label);
    p.cert = std::move(*cert);
    if (!out.empty() && !(out.back() < p)) return {};
    out.push_back(std::move(p));
  }
  if (!in.at_end()) return {};
  return out;
}

const Packet* find_packet(const PacketSet& packets, VertexId origin) {
  for (const auto& p : packets) {
    if (p.origin == origin) return &p;
  }
  return nullptr;
}

}  // namespace localcert
