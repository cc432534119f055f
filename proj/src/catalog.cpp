#include "qgroth/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgroth {

const std::vector<FamilyInfo>& family_infos() {
  static const std::vector<FamilyInfo> infos = {
      {"G", "G", false},
      {"H", "\\mathcal{H}", false},
      {"S", "\\mathfrak{S}", false},
      {"Gx", "G", true},
      {"Hx", "\\mathcal{H}", true},
      {"Sx", "\\mathfrak{S}", true},
      {"qG", "\\widetilde{G}", false},
      {"qH", "\\widetilde{\\mathcal{H}}", false},
      {"qS", "\\widetilde{\\mathfrak{S}}", false},
      {"qGx", "\\widetilde{G}", true},
      {"qHx", "\\widetilde{\\mathcal{H}}", true},
      {"qSx", "\\widetilde{\\mathfrak{S}}", true},
      {"bG", "\\widetilde{\\mathbf{G}}", false},
      {"bH", "\\widetilde{\\mathbf{H}}", false},
  };
  return infos;
}

const FamilyInfo& family_info(const std::string& id) {
  for (const auto& f : family_infos()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown family: " + id);
}

MultiPoly family_member(const std::string& id, const Permutation& w) {
  const FamilyInfo& info = family_info(id);
  std::string base = info.single ? id.substr(0, id.size() - 1) : id;
  MultiPoly f;
  if (base == "G") f = grothendieck_double(w);
  else if (base == "H") f = dual_grothendieck_double(w);
  else if (base == "S") f = schubert_double(w);
  else if (base == "qG") f = quantum_grothendieck_double(w);
  else if (base == "qH") f = quantum_dual_grothendieck_double(w);
  else if (base == "qS") f = quantum_schubert_double(w);
  else if (base == "bG") f = bold_grothendieck(w);
  else if (base == "bH") f = bold_dual_grothendieck(w);
  return info.single ? single(f) : f;
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v = classical_identity_ids();
    const auto& q = quantum_identity_ids();
    v.insert(v.end(), q.begin(), q.end());
    return v;
  }();
  return ids;
}

bool is_classical_identity(const std::string& id) {
  const auto& c = classical_identity_ids();
  return std::find(c.begin(), c.end(), id) != c.end();
}

bool is_identity(const std::string& id) {
  const auto& all = identity_ids();
  return std::find(all.begin(), all.end(), id) != all.end();
}

VerificationReport verify(const std::string& id, int n, const CheckOptions& opts) {
  if (is_classical_identity(id)) return verify_classical(id, n, opts);
  return verify_quantum(id, n, opts);
}

}  // namespace qgroth
