#ifndef LOCALCERT_CERTIFICATE_ASSIGNMENT_HPP
#define LOCALCERT_CERTIFICATE_ASSIGNMENT_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "localcert/bitstring.hpp"

namespace localcert {

/// P : V -> {0,1}*, indexed by vertex identifier 1..n.
class CertificateAssignment {
 public:
  CertificateAssignment() = default;
  explicit CertificateAssignment(std::size_t n) : certs_(n) {}
  explicit CertificateAssignment(std::vector<BitString> certs) : certs_(std::move(certs)) {}

  std::size_t order() const noexcept { return certs_.size(); }

  const BitString& at(std::uint32_t v) const {
    if (v < 1 || v > certs_.size()) throw std::out_of_range("certificate index");
    return certs_[v - 1];
  }
  BitString& at(std::uint32_t v) {
    if (v < 1 || v > certs_.size()) throw std::out_of_range("certificate index");
    return certs_[v - 1];
  }
  const BitString& operator[](std::uint32_t v) const { return certs_[v - 1]; }
  BitString& operator[](std::uint32_t v) { return certs_[v - 1]; }

  /// Maximum certificate length in bits.
  std::size_t size_bits() const noexcept {
    std::size_t s = 0;
    for (const auto& c : certs_) s = std::max(s, c.size());
    return s;
  }

  const std::vector<BitString>& all() const noexcept { return certs_; }

  friend bool operator==(const CertificateAssignment&, const CertificateAssignment&) = default;

 private:
  std::vector<BitString> certs_;
};

}  // namespace localcert

#endif  // LOCALCERT_CERTIFICATE_ASSIGNMENT_HPP
