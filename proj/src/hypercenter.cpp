#include "qh/hypercenter.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "qh/chief.hpp"
#include "qh/errors.hpp"
#include "qh/formations.hpp"

namespace qh {

namespace {

// Lifts the least minimal normal subgroup over Z that passes `ok` until none does.
ElementSet climb(const PermGroup& g, const std::function<bool(const ChiefFactor&)>& ok,
                 std::vector<ClimbStep>* trace) {
  const ElementSpace& space = g.elements();
  ElementSet z = space.trivial_set();
  const ElementSet top = space.full_set();
  while (z != top) {
    std::vector<ClimbStep> rejected;
    bool lifted = false;
    for (const auto& m : minimal_normal_over(space, z)) {
      ChiefFactor cf = make_chief_factor(g, z, m);
      if (ok(cf)) {
        if (trace)
          trace->push_back({cf.upper(), cf.order(), true});
        z = m;
        lifted = true;
        break;
      }
      if (trace)
        rejected.push_back({cf.upper(), cf.order(), false});
    }
    if (!lifted) {
      if (trace)
        trace->insert(trace->end(), rejected.begin(), rejected.end());
      break;
    }
  }
  return z;
}

ElementSet intersect_nodes(const SubgroupLattice& l, const std::vector<std::size_t>& nodes) {
  ElementSet out = l.node_set(l.whole_index());
  for (std::size_t i : nodes)
    out &= l.node_set(i);
  return out;
}

template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

using Extra = std::function<void(VerificationReport&, const PermGroup&, const ElementSet& z)>;

// Z and Int for X plus the containment of Z in every X-maximal subgroup.
VerificationReport compare_sides(const CorpusEntry& entry, const ClassOfGroups& x,
                                 const Extra& extra) {
  auto start = std::chrono::steady_clock::now();
  const PermGroup& g = entry.group;
  VerificationReport r;
  r.group_id = entry.id;
  r.order = g.order();
  r.class_name = x.name;
  try {
    const ElementSpace& space = g.elements();
    HypercenterResult hz = hypercenter(g, x, entry.id);
    ElementSet z = element_set(hz.z);
    auto l = all_subgroups(g);
    auto maxes = maximal_nodes(l, x.member);
    ElementSet in = intersect_nodes(l, maxes);

    r.z_order = z.count();
    r.int_order = in.count();
    r.equal = z == in;
    r.lemma_a = true;
    for (std::size_t m : maxes)
      r.lemma_a = r.lemma_a && z.is_subset_of(l.node_set(m));
    r.z_generators = hz.z.generators();
    r.int_generators = subgroup_from_set(g, in).generators();
    if (!r.equal)
      r.witness = space.to_permutations(((z - in) | (in - z)).to_vector());
    r.passed = r.equal && r.lemma_a;
    if (extra)
      extra(r, g, z);
  } catch (const ResourceError& e) {
    r.error = e.what();
    r.passed = false;
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

std::vector<VerificationReport> run_suite(std::span<const CorpusEntry> corpus,
                                          const ClassOfGroups& x, unsigned jobs,
                                          const Extra& extra) {
  std::vector<VerificationReport> out(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) { out[i] = compare_sides(corpus[i], x, extra); });
  return out;
}

} // namespace

HypercenterResult hypercenter(const PermGroup& g, const ClassOfGroups& x, std::string group_id) {
  HypercenterResult r{std::move(group_id), x.name, SubgroupRef::trivial(g), {}};
  ElementSet z = climb(g, [&](const ChiefFactor& cf) { return is_class_central(cf, x); },
                       &r.climb_trace);
  r.z = subgroup_from_set(g, z);
  return r;
}

SubgroupRef hypercenter_oracle(const PermGroup& g, const ClassOfGroups& x) {
  const ElementSpace& space = g.elements();
  std::map<std::pair<std::vector<ElementIndex>, std::vector<ElementIndex>>, bool> memo;
  auto central = [&](const ChiefFactor& cf) {
    auto key = std::make_pair(cf.lower_set().to_vector(), cf.upper_set().to_vector());
    auto it = memo.find(key);
    if (it == memo.end())
      it = memo.emplace(std::move(key), is_class_central(cf, x)).first;
    return it->second;
  };
  std::vector<ElementIndex> gens;
  for (const auto& n : normal_subgroups(space)) {
    bool hypercentral = true;
    for (const auto& cf : chief_factors_below(g, n))
      if (!central(cf)) {
        hypercentral = false;
        break;
      }
    if (hypercentral)
      for (ElementIndex s : space.generating_set(n))
        gens.push_back(s);
  }
  return subgroup_from_set(g, space.closure(gens));
}

SubgroupRef intersection_of_class_maximal(const SubgroupLattice& l, const ClassOfGroups& x) {
  return subgroup_from_set(l.ambient(), intersect_nodes(l, maximal_nodes(l, x.member)));
}

SubgroupRef intersection_of_class_maximal(const PermGroup& g, const ClassOfGroups& x) {
  return intersection_of_class_maximal(all_subgroups(g), x);
}

SubgroupRef inner_induction_hypercenter(const PermGroup& g) {
  return subgroup_from_set(g, climb(g, acts_by_inner_automorphisms, nullptr));
}

std::vector<SubgroupRef> upper_central_series(const PermGroup& g) {
  const ElementSpace& space = g.elements();
  std::vector<SubgroupRef> out{SubgroupRef::trivial(g)};
  ElementSet z = space.trivial_set();
  for (;;) {
    ElementSet next = space.empty_set();
    for (ElementIndex x = 0; x < space.size(); ++x) {
      bool in = true;
      for (ElementIndex s : space.generator_indices())
        if (!z.test(space.commutator(x, s))) {
          in = false;
          break;
        }
      if (in)
        next.set(x);
    }
    if (next == z)
      return out;
    z = std::move(next);
    out.push_back(subgroup_from_set(g, z));
  }
}

std::vector<VerificationReport> verify_theorem1(std::span<const CorpusEntry> corpus,
                                                const ClassOfGroups& f, unsigned jobs) {
  return run_suite(corpus, classes::quasi(f), jobs, {});
}

std::vector<VerificationReport> verify_corollary(std::span<const CorpusEntry> corpus, unsigned jobs) {
  return verify_theorem1(corpus, classes::nilpotent(), jobs);
}

std::vector<VerificationReport> verify_baer(std::span<const CorpusEntry> corpus, unsigned jobs) {
  return run_suite(corpus, classes::nilpotent(), jobs,
                   [](VerificationReport& r, const PermGroup& g, const ElementSet& z) {
                     SubgroupRef top = upper_central_series(g).back();
                     r.upper_central_order = top.order();
                     r.passed = r.passed && element_set(top) == z;
                   });
}

std::vector<VerificationReport> verify_remark4(std::span<const CorpusEntry> corpus, unsigned jobs) {
  return run_suite(corpus, classes::quasinilpotent(), jobs,
                   [](VerificationReport& r, const PermGroup& g, const ElementSet& z) {
                     SubgroupRef inner = inner_induction_hypercenter(g);
                     r.inner_induction_order = inner.order();
                     r.passed = element_set(inner) == z;
                   });
}

std::vector<VerificationReport> compare_nca(std::span<const CorpusEntry> corpus, unsigned jobs) {
  return run_suite(corpus, classes::nca(), jobs,
                   [](VerificationReport& r, const PermGroup&, const ElementSet&) {
                     r.passed = true;
                   });
}

std::vector<std::string> cycle_strings(std::span<const Permutation> perms) {
  std::vector<std::string> out;
  for (const auto& p : perms)
    out.push_back(p.to_cycle_string());
  return out;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["group_id"] = r.group_id;
  j["order"] = r.order;
  j["class"] = r.class_name;
  if (r.error) {
    j["error"] = *r.error;
    j["passed"] = r.passed;
  } else {
    j["z_order"] = r.z_order;
    j["int_order"] = r.int_order;
    j["equal"] = r.equal;
    j["z_generators"] = cycle_strings(r.z_generators);
    j["int_generators"] = cycle_strings(r.int_generators);
    j["lemma_a"] = r.lemma_a;
    if (r.upper_central_order)
      j["upper_central_order"] = *r.upper_central_order;
    if (r.inner_induction_order)
      j["inner_induction_order"] = *r.inner_induction_order;
    j["passed"] = r.passed;
    if (!r.equal)
      j["witness"] = cycle_strings(r.witness);
  }
  if (timings)
    j["millis"] = r.millis;
  return j;
}

nlohmann::ordered_json to_json(const HypercenterResult& r, std::uint64_t group_order) {
  nlohmann::ordered_json j;
  j["group_id"] = r.group_id;
  j["order"] = group_order;
  j["class"] = r.class_name;
  j["z_order"] = r.z.order();
  j["z_generators"] = cycle_strings(r.z.generators());
  auto trace = nlohmann::ordered_json::array();
  for (const auto& step : r.climb_trace)
    trace.push_back({{"term_order", step.term.order()},
                     {"factor_order", step.factor_order},
                     {"central", step.central}});
  j["trace"] = std::move(trace);
  return j;
}

} // namespace qh
