#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/classification.hpp"
#include "loopforge/code_io.hpp"
#include "loopforge/golden.hpp"
#include "loopforge/repsolver.hpp"

namespace loopforge {

enum class ClaimStatus { Pass, Erratum, Fail };

inline std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Erratum: return "ERRATUM";
    case ClaimStatus::Fail: return "FAIL";
  }
  return "?";
}

struct ClaimResult {
  std::string id;
  std::string title;
  ClaimStatus status = ClaimStatus::Pass;
  std::vector<std::string> notes;
  double seconds = 0;

  void fail(std::string note) {
    status = ClaimStatus::Fail;
    notes.push_back(std::move(note));
  }
};

struct ClaimInfo {
  std::string_view id;
  std::string_view title;
};

inline const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> claims{
      {"thm2.1", "rank-3 vectors form 5 GL3(2) orbits with the listed representatives"},
      {"thm2.3", "rank-4 vectors form 16 GL4(2) orbits with the listed representatives"},
      {"thm3.4", "listed rank-3 bases are the unique minimal representations"},
      {"cor3.5", "rank-3 minimal degrees and types"},
      {"thm3.6", "listed rank-4 bases are the unique minimal representations"},
      {"cor4.4", "rank-4 minimal degrees and types"},
      {"example-v16", "weight profile u solves to v and assembles the printed generators"},
  };
  return claims;
}

/// Result of checking one listed basis against its claimed loop.
struct BasisCheck {
  bool doubly_even = false;
  std::optional<LoopClassId> found;
  bool classified = false;
  int degree = 0;
  bool degree_ok = false;
  bool equivalent = false;

  bool ok() const { return doubly_even && classified && degree_ok && equivalent; }

  std::string describe() const {
    std::string out;
    auto add = [&](const std::string& s) { out += (out.empty() ? "" : "; ") + s; };
    if (!doubly_even) add("not doubly even");
    if (doubly_even && !classified) add("classified as " + (found ? found->to_string() : std::string("associative")));
    if (!degree_ok) add("degree " + std::to_string(degree));
    if (!equivalent) add("not equivalent to the computed minimum");
    return out.empty() ? "ok" : out;
  }
};

inline BasisCheck check_listed_basis(const BinaryCodeBasis& basis, LoopClassId claimed, int claimed_degree,
                                     const MinimalReport& computed) {
  BasisCheck c;
  c.doubly_even = is_doubly_even(basis);
  if (c.doubly_even) {
    const auto cv = char_vector_of(basis);
    if (cv.nonassociative()) c.found = canonicalize(cv).id;
  }
  c.classified = c.found == claimed;
  c.degree = basis.length();
  c.degree_ok = c.degree == claimed_degree;
  for (const auto& rep : computed.representations)
    if (rep.basis.length() == basis.length() && codes_equivalent(rep.basis, basis)) c.equivalent = true;
  return c;
}

/// Minimal reports for every rank-3 and rank-4 class, computed once.
class MinimalTables {
 public:
  explicit MinimalTables(int jobs = 1) : jobs_(jobs) {}

  const MinimalReport& get(LoopClassId id) {
    auto it = cache_.find(id);
    if (it == cache_.end()) {
      EnumerationOptions opts;
      opts.jobs = jobs_;
      it = cache_.emplace(id, minimal_representations(representative(id), opts)).first;
    }
    return it->second;
  }

 private:
  int jobs_;
  std::map<LoopClassId, MinimalReport> cache_;
};

namespace detail {

inline void check_orbits(ClaimResult& r, int n, bool perturbed) {
  std::vector<std::string> expected(representative_short_forms(n).begin(), representative_short_forms(n).end());
  if (perturbed) expected[0][0] = expected[0][0] == '1' ? '0' : '1';
  const auto blocks = orbit_partition(n);
  const int want = LoopClassId::class_count(n);
  if (static_cast<int>(blocks.size()) != want)
    r.fail(std::to_string(blocks.size()) + " orbits, expected " + std::to_string(want));
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.members.size();
  const std::size_t want_total = n == 3 ? golden::rank3_nonassociative_count : golden::rank4_nonassociative_count;
  if (total != want_total) r.fail(std::to_string(total) + " vectors, expected " + std::to_string(want_total));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    int hits = 0;
    for (const auto& text : expected) {
      const auto cv = parse_char_vector(text, n);
      if (std::find(blocks[k].members.begin(), blocks[k].members.end(), cv) != blocks[k].members.end()) ++hits;
    }
    if (hits != 1)
      r.fail("orbit " + std::to_string(k + 1) + " of size " + std::to_string(blocks[k].members.size()) + " holds " +
             std::to_string(hits) + " listed representatives");
  }
}

inline void check_table(ClaimResult& r, const std::vector<golden::DegreeType>& table, MinimalTables& tables,
                        bool perturbed) {
  for (std::size_t k = 0; k < table.size(); ++k) {
    auto row = table[k];
    std::string type(row.type);
    if (perturbed && k == 0) type = "(1)";
    const auto& report = tables.get(row.loop);
    if (report.degree != row.degree)
      r.fail(row.loop.to_string() + ": degree " + std::to_string(report.degree) + ", expected " +
             std::to_string(row.degree));
    if (report.representations.empty()) {
      r.fail(row.loop.to_string() + ": no representation");
      continue;
    }
    const auto got = report.representations.front().type().to_string();
    if (got != type) r.fail(row.loop.to_string() + ": type " + got + ", expected " + type);
  }
}

inline void check_bases(ClaimResult& r, const std::vector<golden::ListedBasis>& bases,
                        const std::vector<golden::DegreeType>& table, MinimalTables& tables, bool perturbed) {
  for (std::size_t k = 0; k < bases.size(); ++k) {
    const auto& listed = bases[k];
    const int degree = table[k].degree + (perturbed && k == 0 ? 1 : 0);
    const auto& report = tables.get(listed.loop);
    const std::string name = "V" + std::to_string(listed.loop.index) + " (" + listed.loop.to_string() + ")";
    if (report.representations.size() != 1)
      r.fail(name + ": " + std::to_string(report.representations.size()) + " inequivalent minimal representations");
    const auto check = check_listed_basis(golden::make_basis(listed.generators), listed.loop, degree, report);
    if (check.ok()) continue;
    if (!listed.erratum.empty() && !listed.corrected.empty() &&
        check_listed_basis(golden::make_basis(listed.corrected), listed.loop, degree, report).ok()) {
      if (r.status == ClaimStatus::Pass) r.status = ClaimStatus::Erratum;
      r.notes.push_back(name + " as listed: " + check.describe() + " (" + std::string(listed.erratum) +
                        "); corrected basis passes");
      continue;
    }
    r.fail(name + ": " + check.describe());
  }
}

inline void check_example(ClaimResult& r, bool perturbed) {
  std::vector<int> u(golden::example_profile.begin(), golden::example_profile.end());
  std::vector<int> v(golden::example_sizes.begin(), golden::example_sizes.end());
  if (perturbed) v[0] += 1;
  try {
    const auto x = solve_system_rank4(profile_from_listing(4, u));
    if (x.listing() != v) r.fail("solution differs from the listed v");
    const auto text = serialize_generators(assemble_representation(x));
    if (text != golden::example_generators) r.fail("generators differ:\n" + text);
  } catch (const Error& e) {
    r.fail(e.what());
  }
}

}  // namespace detail

inline ClaimResult verify_claim(std::string_view id, MinimalTables& tables, bool perturbed = false) {
  ClaimResult r;
  r.id = std::string(id);
  for (const auto& c : claim_catalog())
    if (c.id == id) r.title = std::string(c.title);
  if (r.title.empty()) throw Error(ErrorKind::Parse, "unknown claim '" + std::string(id) + "'");
  const auto start = std::chrono::steady_clock::now();
  if (id == "thm2.1") detail::check_orbits(r, 3, perturbed);
  if (id == "thm2.3") detail::check_orbits(r, 4, perturbed);
  if (id == "thm3.4") detail::check_bases(r, golden::rank3_bases(), golden::rank3_minimal(), tables, perturbed);
  if (id == "cor3.5") detail::check_table(r, golden::rank3_minimal(), tables, perturbed);
  if (id == "thm3.6") detail::check_bases(r, golden::rank4_bases(), golden::rank4_minimal(), tables, perturbed);
  if (id == "cor4.4") detail::check_table(r, golden::rank4_minimal(), tables, perturbed);
  if (id == "example-v16") detail::check_example(r, perturbed);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct VerifyOptions {
  std::vector<std::string> only;
  std::vector<std::string> perturb;
  int jobs = 1;
};

inline std::vector<ClaimResult> verify_claims(const VerifyOptions& opts) {
  auto listed = [](const std::vector<std::string>& v, std::string_view id) {
    return std::find(v.begin(), v.end(), id) != v.end();
  };
  auto known = [](std::string_view id) {
    const auto& cat = claim_catalog();
    return std::any_of(cat.begin(), cat.end(), [&](const ClaimInfo& c) { return c.id == id; });
  };
  for (const auto* ids : {&opts.only, &opts.perturb})
    for (const auto& id : *ids)
      if (!known(id)) throw Error(ErrorKind::Parse, "unknown claim '" + id + "'");
  MinimalTables tables(opts.jobs);
  std::vector<ClaimResult> out;
  for (const auto& c : claim_catalog()) {
    if (!opts.only.empty() && !listed(opts.only, c.id)) continue;
    out.push_back(verify_claim(c.id, tables, listed(opts.perturb, c.id)));
  }
  return out;
}

}  // namespace loopforge
