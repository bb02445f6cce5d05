#include "hodgeheat/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodgeheat {

Simplex Simplex::of(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw std::invalid_argument("negative vertex id in simplex");
    if (i > 0 && v[i] == v[i - 1])
      throw std::invalid_argument("duplicate vertex " + std::to_string(v[i]) +
                                  " in simplex");
  }
  return Simplex(std::move(v));
}

std::string Simplex::key() const {
  std::string out;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(verts[i]);
  }
  return out;
}

Simplex Simplex::parse_key(const std::string& key) {
  std::vector<int> v;
  if (key.empty()) return Simplex{};
  size_t pos = 0;
  while (pos <= key.size()) {
    size_t comma = key.find(',', pos);
    std::string tok = key.substr(pos, comma == std::string::npos
                                          ? std::string::npos
                                          : comma - pos);
    if (tok.empty()) throw std::invalid_argument("bad simplex key '" + key + "'");
    v.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Simplex::of(std::move(v));
}

Simplex Simplex::face_dropping(int pos) const {
  std::vector<int> v;
  v.reserve(verts.size() - 1);
  for (int i = 0; i < nverts(); ++i)
    if (i != pos) v.push_back(verts[i]);
  return Simplex(std::move(v));
}

bool Simplex::contains_vertex(int v) const {
  return std::binary_search(verts.begin(), verts.end(), v);
}

}  // namespace hodgeheat
