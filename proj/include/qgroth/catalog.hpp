#pragma once

// Uniform access to the polynomial families and identity checks by the
// string ids used on the command line.

#include <string>
#include <vector>

#include "qgroth/classical.hpp"
#include "qgroth/quantum.hpp"

namespace qgroth {

struct FamilyInfo {
  std::string id;      // "G", "Gx", "qH", ...
  std::string latex;   // "G", "\\widetilde{\\mathcal{H}}", ...
  bool single;         // y = 0 specialization
};

/// G H S (double), Gx Hx Sx (y = 0), qG qH qS (quantum double),
/// qGx qHx qSx (quantum, y = 0), bG bH (bold quantum).
const std::vector<FamilyInfo>& family_infos();
const FamilyInfo& family_info(const std::string& id);
MultiPoly family_member(const std::string& id, const Permutation& w);

/// Classical ids followed by quantum ids.
const std::vector<std::string>& identity_ids();
bool is_classical_identity(const std::string& id);
bool is_identity(const std::string& id);

VerificationReport verify(const std::string& id, int n, const CheckOptions& opts = {});

}  // namespace qgroth
