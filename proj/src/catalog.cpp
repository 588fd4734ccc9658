#include "b3cryst/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace b3cryst {

namespace {

using Perm = std::vector<int>;

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

bool is_even(const Perm& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

GroupFingerprint fingerprint_of(const std::vector<Perm>& group) {
  GroupFingerprint f;
  f.order = group.size();
  Perm id(group[0].size());
  std::iota(id.begin(), id.end(), 0);
  for (const Perm& p : group) {
    int o = 1;
    Perm q = p;
    while (q != id) {
      q = compose_perm(q, p);
      ++o;
    }
    ++f.order_histogram[o];
  }
  for (const Perm& p : group) {
    bool central = true;
    for (const Perm& q : group)
      if (compose_perm(p, q) != compose_perm(q, p)) {
        central = false;
        break;
      }
    if (central) ++f.center_order;
  }
  return f;
}

std::vector<Perm> symmetric(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> alternating(int n) {
  std::vector<Perm> out;
  for (const Perm& p : symmetric(n))
    if (is_even(p)) out.push_back(p);
  return out;
}

std::vector<Perm> cyclic(int n) {
  std::vector<Perm> out;
  for (int k = 0; k < n; ++k) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + k) % n;
    out.push_back(p);
  }
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  cat.push_back({"S4", fingerprint_of(symmetric(4))});
  cat.push_back({"A4", fingerprint_of(alternating(4))});
  cat.push_back({"A5", fingerprint_of(alternating(5))});
  cat.push_back({"S3", fingerprint_of(symmetric(3))});
  for (int n = 1; n <= 12; ++n)
    cat.push_back({"Z/" + std::to_string(n), fingerprint_of(cyclic(n))});
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& group_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

std::optional<std::string> match_catalog(const GroupFingerprint& f) {
  for (const CatalogEntry& e : group_catalog())
    if (e.fingerprint == f) return e.name;
  return std::nullopt;
}

bool catalog_fingerprints_distinct() {
  const auto& cat = group_catalog();
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j)
      if (cat[i].fingerprint == cat[j].fingerprint) return false;
  return true;
}

}  // namespace b3cryst
