#ifndef LOCALCERT_REGISTRY_HPP
#define LOCALCERT_REGISTRY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "localcert/certification.hpp"

namespace localcert {

/// Builds a scheme from its name. Wrappers nest by prefix, e.g.
/// "reduce:1:tree-dist:2" or "wrap-l:wrap-u:kcolor:2". Throws InputError on
/// an unknown or malformed name.
Scheme make_scheme(std::string_view name);

struct SchemeEntry {
  std::string pattern;
  std::string description;
};

std::vector<SchemeEntry> list_schemes();

}  // namespace localcert

#endif  // LOCALCERT_REGISTRY_HPP
