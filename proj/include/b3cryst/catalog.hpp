#pragma once

#include "b3cryst/finite_image.hpp"

#include <optional>
#include <string>
#include <vector>

namespace b3cryst {

/// Reference fingerprints for the holonomy groups that occur in this
/// artifact: S4, A4, A5, S3 and the cyclic groups up to Z/12. Each entry is
/// computed by brute force over explicit permutations, independent of the
/// matrix-group pipeline, so a catalog match is a genuine cross-check.
struct CatalogEntry {
  std::string name;
  GroupFingerprint fingerprint;
};

const std::vector<CatalogEntry>& group_catalog();

/// Name of the unique catalog group with this fingerprint, if any.
std::optional<std::string> match_catalog(const GroupFingerprint& f);

/// Fingerprints in the catalog are pairwise distinct (checked by tests and
/// the verification suite before relying on matches).
bool catalog_fingerprints_distinct();

}  // namespace b3cryst
