#ifndef QH_HYPERCENTER_HPP
#define QH_HYPERCENTER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qh/class_of_groups.hpp"
#include "qh/lattice.hpp"
#include "qh/perm_group.hpp"

namespace qh {

struct CorpusEntry {
  std::string id;
  PermGroup group;
};

struct ClimbStep {
  SubgroupRef term;           // the minimal normal subgroup M over the current Z
  std::uint64_t factor_order; // |M / Z|
  bool central;               // verdict for M / Z; the climb moves to M only when true
};

struct HypercenterResult {
  std::string group_id;
  std::string class_name;
  SubgroupRef z;
  /// Lifted steps, followed by the rejected candidates over the final Z.
  std::vector<ClimbStep> climb_trace;
};

/// Greedy climb: lift the least X-central minimal normal subgroup of G/Z until none is left.
HypercenterResult hypercenter(const PermGroup& g, const ClassOfGroups& x, std::string group_id = {});

/// Product of all normal subgroups whose chief factors below them are all X-central.
SubgroupRef hypercenter_oracle(const PermGroup& g, const ClassOfGroups& x);

/// Intersection of all X-maximal subgroups.
SubgroupRef intersection_of_class_maximal(const PermGroup& g, const ClassOfGroups& x);
SubgroupRef intersection_of_class_maximal(const SubgroupLattice& l, const ClassOfGroups& x);

/// Greatest normal subgroup on whose chief factors every element acts by inner automorphisms.
SubgroupRef inner_induction_hypercenter(const PermGroup& g);

/// 1 = Z_0 <= Z_1 <= ... up to the first repeated term.
std::vector<SubgroupRef> upper_central_series(const PermGroup& g);

struct VerificationReport {
  std::string group_id;
  std::uint64_t order = 0;
  std::string class_name;
  std::uint64_t z_order = 0;
  std::uint64_t int_order = 0;
  bool equal = false;
  /// Z lies in every X-maximal subgroup.
  bool lemma_a = false;
  std::vector<Permutation> z_generators;
  std::vector<Permutation> int_generators;
  /// Symmetric difference of Z and Int when they differ.
  std::vector<Permutation> witness;
  std::optional<std::uint64_t> upper_central_order;
  std::optional<std::uint64_t> inner_induction_order;
  /// The check the suite asserts for this group.
  bool passed = false;
  std::optional<std::string> error;
  double millis = 0;
};

/// Z and Int for the quasi-class F*; passes when they agree and Z is in every F*-maximal subgroup.
std::vector<VerificationReport> verify_theorem1(std::span<const CorpusEntry> corpus,
                                                const ClassOfGroups& f, unsigned jobs = 1);
/// F = N.
std::vector<VerificationReport> verify_corollary(std::span<const CorpusEntry> corpus, unsigned jobs = 1);
/// Int_N = Z_N = last term of the upper central series.
std::vector<VerificationReport> verify_baer(std::span<const CorpusEntry> corpus, unsigned jobs = 1);
/// Inner-induction hypercenter = Z_{N*}.
std::vector<VerificationReport> verify_remark4(std::span<const CorpusEntry> corpus, unsigned jobs = 1);
/// Z and Int for Nca, reported without asserting either outcome.
std::vector<VerificationReport> compare_nca(std::span<const CorpusEntry> corpus, unsigned jobs = 1);

nlohmann::ordered_json to_json(const VerificationReport& r, bool timings = true);
nlohmann::ordered_json to_json(const HypercenterResult& r, std::uint64_t group_order);

std::vector<std::string> cycle_strings(std::span<const Permutation> perms);

} // namespace qh

#endif // QH_HYPERCENTER_HPP
