#pragma once

#include "hopfring/verifier.hpp"

#include <string>

namespace hopf {

// JSON snapshot of one group's tables: header fields (group, primes), the
// per-prime presentations with psi/bockstein actions as expanded term lists,
// and the integral layer (free generators, relations, stated coproducts,
// primitives). Carries enough structure to rebuild GroupData exactly.
std::string export_group_json(const GroupData& gd);

// Inverse of export_group_json; throws CorruptData on schema violations.
GroupData import_group_json(const std::string& text);

std::string report_json(const std::vector<CheckReport>& reports);

} // namespace hopf
