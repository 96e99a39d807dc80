#include "qh/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qh/bounds.hpp"
#include "qh/chief.hpp"
#include "qh/errors.hpp"
#include "qh/formations.hpp"
#include "qh/groups.hpp"
#include "qh/lattice.hpp"

namespace qh {

namespace {

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos)
      break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  return trim(line.substr(0, line.find('#')));
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
    return std::nullopt;
  return v;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

Permutation parse_generator(std::string_view s, std::size_t degree, std::size_t line) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
      ++i;
  };
  skip_space();
  while (i < s.size()) {
    if (s[i] != '(')
      fail_at(line, "bad cycle syntax near '" + std::string(s.substr(i)) + "'");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ','))
        ++i;
      if (i >= s.size())
        fail_at(line, "unterminated cycle");
      if (s[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9')
        ++j;
      auto value = parse_uint(s.substr(i, j - i));
      if (!value)
        fail_at(line, "bad cycle syntax near '" + std::string(s.substr(i)) + "'");
      if (*value >= degree)
        fail_at(line, "point " + std::to_string(*value) + " out of range for degree " +
                          std::to_string(degree));
      if (used[*value])
        fail_at(line, "point " + std::to_string(*value) + " appears twice");
      used[*value] = true;
      cycle.push_back(static_cast<Point>(*value));
      i = j;
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

PermGroup parse_group_file(std::string_view text) {
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = strip_comment(raw);
    if (line.empty())
      continue;
    if (!degree) {
      auto w = words(line);
      if (w.size() != 2 || w[0] != "degree")
        fail_at(line_no, "expected 'degree <n>' before any generator");
      auto n = parse_uint(w[1]);
      if (!n || *n == 0)
        fail_at(line_no, "degree must be a positive integer");
      degree = *n;
      continue;
    }
    gens.push_back(parse_generator(line, *degree, line_no));
  }
  if (!degree)
    throw InputError("missing 'degree <n>' line");
  return PermGroup(*degree, std::move(gens));
}

PermGroup load_group_file(const std::filesystem::path& path) {
  try {
    return parse_group_file(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_group_file(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators())
    out += p.to_cycle_string() + "\n";
  return out;
}

std::vector<CorpusEntry> builtin_corpus(std::string_view name) {
  if (name != "smoke" && name != "standard" && name != "extended")
    throw InputError("unknown corpus '" + std::string(name) +
                     "' (expected smoke, standard, extended or a corpus file)");
  std::vector<CorpusEntry> c;
  for (std::uint32_t n = 1; n <= 8; ++n)
    c.push_back({"C" + std::to_string(n), groups::cyclic(n)});
  c.push_back({"S3", groups::symmetric(3)});
  c.push_back({"S4", groups::symmetric(4)});
  c.push_back({"Q8", groups::quaternion()});
  c.push_back({"D8", groups::dihedral(8)});
  if (name == "smoke")
    return c;

  c.push_back({"A4", groups::alternating(4)});
  c.push_back({"A5", groups::alternating(5)});
  c.push_back({"S5", groups::symmetric(5)});
  c.push_back({"SL(2,3)", groups::special_linear_2(3)});
  c.push_back({"SL(2,5)", groups::special_linear_2(5)});
  for (std::uint32_t order = 10; order <= 24; order += 2)
    c.push_back({"D" + std::to_string(order), groups::dihedral(order)});
  c.push_back({"C2xA5", direct_product(groups::cyclic(2), groups::alternating(5))});
  c.push_back({"A5xS3", direct_product(groups::alternating(5), groups::symmetric(3))});
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t rank = 2; rank <= 3; ++rank)
      c.push_back({"C" + std::to_string(p) + "^" + std::to_string(rank),
                   groups::elementary_abelian(p, rank)});
  if (name == "standard")
    return c;

  const std::size_t base = c.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i; j < base; ++j) {
      if (c[i].group.order() * c[j].group.order() > bounds().lattice)
        continue;
      if (c[i].group.order() == 1 || c[j].group.order() == 1)
        continue;
      c.push_back({"P(" + c[i].id + "," + c[j].id + ")", direct_product(c[i].group, c[j].group)});
    }
  return c;
}

std::vector<CorpusEntry> parse_corpus_file(std::string_view text,
                                           const std::filesystem::path& base_dir) {
  std::vector<CorpusEntry> out;
  std::map<std::string, std::size_t> by_id;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = strip_comment(raw);
    if (line.empty())
      continue;
    auto w = words(line);
    if (w.size() < 2)
      fail_at(line_no, "expected '<id> <constructor> <args...>'");
    const std::string& id = w[0];
    const std::string& ctor = w[1];
    if (by_id.contains(id))
      fail_at(line_no, "duplicate group id '" + id + "'");
    auto arg = [&](std::size_t k) -> std::uint32_t {
      if (w.size() <= k + 2)
        fail_at(line_no, ctor + ": missing argument");
      auto v = parse_uint(w[k + 2]);
      if (!v || *v > 1000000)
        fail_at(line_no, ctor + ": bad integer '" + w[k + 2] + "'");
      return static_cast<std::uint32_t>(*v);
    };
    auto expect_args = [&](std::size_t n) {
      if (w.size() != n + 2)
        fail_at(line_no, ctor + " takes " + std::to_string(n) + " argument(s)");
    };
    try {
      PermGroup g;
      if (ctor == "cyclic") {
        expect_args(1);
        g = groups::cyclic(arg(0));
      } else if (ctor == "symmetric") {
        expect_args(1);
        g = groups::symmetric(arg(0));
      } else if (ctor == "alternating") {
        expect_args(1);
        g = groups::alternating(arg(0));
      } else if (ctor == "dihedral") {
        expect_args(1);
        g = groups::dihedral(arg(0));
      } else if (ctor == "quaternion") {
        expect_args(0);
        g = groups::quaternion();
      } else if (ctor == "sl2") {
        expect_args(1);
        g = groups::special_linear_2(arg(0));
      } else if (ctor == "elementary_abelian") {
        expect_args(2);
        g = groups::elementary_abelian(arg(0), arg(1));
      } else if (ctor == "a5_wreath_c2") {
        expect_args(0);
        g = groups::a5_wreath_c2();
      } else if (ctor == "file") {
        expect_args(1);
        g = load_group_file(base_dir / w[2]);
      } else if (ctor == "product") {
        expect_args(2);
        for (std::size_t k : {2u, 3u})
          if (!by_id.contains(w[k]))
            fail_at(line_no, "product: unknown group id '" + w[k] + "'");
        g = direct_product(out[by_id[w[2]]].group, out[by_id[w[3]]].group);
      } else {
        fail_at(line_no, "unknown constructor '" + ctor + "'");
      }
      by_id[id] = out.size();
      out.push_back({id, std::move(g)});
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.starts_with("line "))
        throw;
      fail_at(line_no, msg);
    }
  }
  return out;
}

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  bool failed = false;
  bool resource_limited = false;
};

std::vector<CorpusEntry> select_groups(const CliConfig& config) {
  std::vector<CorpusEntry> out;
  if (config.corpus) {
    const std::string& c = *config.corpus;
    if (c == "smoke" || c == "standard" || c == "extended") {
      out = builtin_corpus(c);
    } else {
      std::filesystem::path path(c);
      try {
        out = parse_corpus_file(read_file(path), path.parent_path());
      } catch (const InputError& e) {
        std::string msg = e.what();
        if (msg.starts_with("cannot read"))
          throw InputError("unknown corpus '" + c +
                           "' (expected smoke, standard, extended or a corpus file)");
        throw InputError(path.string() + ": " + msg);
      }
    }
  }
  std::set<std::string> ids;
  for (const auto& e : out)
    ids.insert(e.id);
  for (const auto& file : config.group_files) {
    std::filesystem::path path(file);
    std::string id = path.stem().string();
    if (!ids.insert(id).second)
      throw InputError("duplicate group id '" + id + "' (from " + file + ")");
    out.push_back({id, load_group_file(path)});
  }
  if (out.empty())
    throw InputError("no groups selected (use --corpus or --group)");
  return out;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Runs one per-group record, turning resource errors into an error record.
template <typename F>
void per_group(const CorpusEntry& e, const CliConfig& config, std::ostream& out, Outcome& outcome,
               F&& body) {
  auto start = std::chrono::steady_clock::now();
  Json j;
  try {
    j = body();
  } catch (const ResourceError& err) {
    j = Json();
    j["group_id"] = e.id;
    j["order"] = e.group.order();
    j["error"] = err.what();
    outcome.resource_limited = true;
  }
  if (config.timings)
    j["millis"] = millis_since(start);
  out << j.dump() << '\n';
}

Json info_record(const CorpusEntry& e, const CliConfig& config) {
  const PermGroup& g = e.group;
  Json j;
  j["group_id"] = e.id;
  j["order"] = g.order();
  j["degree"] = g.degree();
  j["center_order"] = center(g).order();
  auto series = chief_series(g);
  Json factors = Json::array();
  for (const auto& cf : series.factors)
    factors.push_back({{"order", cf.order()}, {"abelian", cf.is_abelian()}, {"central", cf.is_central()}});
  j["chief_factors"] = std::move(factors);
  j["nilpotent"] = is_nilpotent(g);
  j["quasinilpotent"] = is_quasinilpotent(g);
  j["nca"] = is_nca_member(g);
  j["abelian"] = is_abelian(g);
  if (config.class_selector) {
    auto x = classes::parse(*config.class_selector);
    j["class"] = x.name;
    j["member"] = x(g);
  }
  return j;
}

using Suite = std::function<std::vector<VerificationReport>(std::span<const CorpusEntry>, unsigned)>;

// Runs the suite a chunk of `jobs` groups at a time so records stream out in corpus order.
int run_suite(const Suite& suite, std::span<const CorpusEntry> corpus, const CliConfig& config,
              std::ostream& out, std::ostream& err) {
  std::optional<VerificationReport> first_failure;
  bool resource_limited = false;
  for (std::size_t start = 0; start < corpus.size(); start += config.jobs) {
    auto chunk = corpus.subspan(start, std::min<std::size_t>(config.jobs, corpus.size() - start));
    for (const auto& r : suite(chunk, config.jobs)) {
      out << to_json(r, config.timings).dump() << '\n' << std::flush;
      if (r.error)
        resource_limited = true;
      else if (!r.passed && !first_failure)
        first_failure = r;
    }
  }
  if (first_failure) {
    const auto& r = *first_failure;
    err << "verification failed for " << r.group_id << " (class " << r.class_name
        << "): |Z| = " << r.z_order << ", |Int| = " << r.int_order;
    if (r.upper_central_order)
      err << ", |Z_inf| = " << *r.upper_central_order;
    if (r.inner_induction_order)
      err << ", |inner-induction hypercenter| = " << *r.inner_induction_order;
    if (!r.lemma_a)
      err << ", Z not contained in every class-maximal subgroup";
    if (!r.witness.empty())
      err << ", witness " << r.witness.front();
    err << '\n';
    return exit_verification_failure;
  }
  return resource_limited ? exit_resource_bound : exit_ok;
}

void reject_class(const CliConfig& config) {
  if (config.class_selector)
    throw InputError(config.command + " does not take --class");
}

int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const std::string& cmd = config.command;
  auto corpus = select_groups(config);
  Outcome outcome;

  if (cmd == "info") {
    if (config.class_selector)
      classes::parse(*config.class_selector);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (config.emit_generators) {
        if (i > 0)
          out << '\n';
        out << "# " << corpus[i].id << '\n' << format_group_file(corpus[i].group);
        continue;
      }
      per_group(corpus[i], config, out, outcome, [&] { return info_record(corpus[i], config); });
    }
  } else if (cmd == "hypercenter") {
    auto x = classes::parse(config.class_selector.value_or("N"));
    for (const auto& e : corpus)
      per_group(e, config, out, outcome,
                [&] { return to_json(hypercenter(e.group, x, e.id), e.group.order()); });
  } else if (cmd == "intersection") {
    auto x = classes::parse(config.class_selector.value_or("N"));
    for (const auto& e : corpus)
      per_group(e, config, out, outcome, [&] {
        auto in = intersection_of_class_maximal(e.group, x);
        Json j;
        j["group_id"] = e.id;
        j["order"] = e.group.order();
        j["class"] = x.name;
        j["int_order"] = in.order();
        j["int_generators"] = cycle_strings(in.generators());
        return j;
      });
  } else if (cmd == "s-critical") {
    auto x = classes::parse(config.class_selector.value_or("N"));
    for (const auto& e : corpus)
      per_group(e, config, out, outcome, [&] {
        Json j;
        j["group_id"] = e.id;
        j["order"] = e.group.order();
        j["class"] = x.name;
        j["s_critical"] = is_s_critical(e.group, x);
        return j;
      });
  } else if (cmd == "verify-corollary") {
    auto f = classes::parse(config.class_selector.value_or("N"));
    if (!f.contains_nilpotent)
      err << "warning: class " << f.name
          << " does not contain every nilpotent group; the quasi-class is computed pointwise\n";
    return run_suite([&](auto c, unsigned j) { return verify_theorem1(c, f, j); }, corpus, config,
                     out, err);
  } else if (cmd == "verify-baer") {
    reject_class(config);
    return run_suite(verify_baer, corpus, config, out, err);
  } else if (cmd == "verify-remark4") {
    reject_class(config);
    return run_suite(verify_remark4, corpus, config, out, err);
  } else if (cmd == "compare-nca") {
    reject_class(config);
    return run_suite(compare_nca, corpus, config, out, err);
  } else {
    throw InputError("unknown command '" + cmd + "'");
  }
  return outcome.resource_limited ? exit_resource_bound : exit_ok;
}

} // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Bounds b = bounds();
    if (config.enumeration_bound)
      b.enumeration = *config.enumeration_bound;
    if (config.lattice_bound)
      b.lattice = *config.lattice_bound;
    if (config.semidirect_bound)
      b.semidirect = *config.semidirect_bound;
    ScopedBounds guard(b);
    if (config.jobs == 0)
      throw InputError("--jobs must be positive");
    if (config.output) {
      std::ofstream file(*config.output);
      if (!file)
        throw InputError("cannot write " + *config.output);
      return dispatch(config, file, err);
    }
    return dispatch(config, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return exit_input_error;
  } catch (const ResourceError& e) {
    err << "resource bound: " << e.what() << '\n';
    return exit_resource_bound;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypercenters and intersections of class-maximal subgroups of finite permutation groups"};
  app.require_subcommand(1);
  CliConfig config;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"info", "order, center, chief series and class memberships"},
      {"hypercenter", "Z_X(G) with the climb trace"},
      {"intersection", "Int_X(G), the intersection of all X-maximal subgroups"},
      {"verify-baer", "Int_N(G) = Z_N(G) = top of the upper central series"},
      {"verify-corollary", "Int_F*(G) = Z_F*(G) (F = N unless --class is given)"},
      {"verify-remark4", "inner-induction hypercenter = Z_N*(G)"},
      {"compare-nca", "report Z and Int for Nca without asserting either"},
      {"s-critical", "groups outside X whose maximal subgroups all lie in X"},
  };
  std::string class_selector, corpus, output;
  std::uint64_t enumeration = 0, lattice = 0, semidirect = 0;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--corpus", corpus, "smoke, standard, extended, or a corpus file");
    sub->add_option("--group", config.group_files, "group definition file (repeatable)");
    if (name != "verify-baer" && name != "verify-remark4" && name != "compare-nca")
      sub->add_option("--class", class_selector, "N, Np:<prime>, N*, Nca, abelian or all");
    sub->add_option("--enumeration-bound", enumeration, "max group order for element enumeration");
    sub->add_option("--lattice-bound", lattice, "max group order for subgroup lattices");
    sub->add_option("--semidirect-bound", semidirect, "max order of factor semidirect products");
    sub->add_option("--output", output, "write records to this file");
    sub->add_flag("--no-timings", "omit millis fields");
    sub->add_option("--jobs", config.jobs, "worker threads for verification suites");
    if (name == "info")
      sub->add_flag("--emit-generators", config.emit_generators,
                    "print groups in the group definition format");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  CLI::App* sub = app.get_subcommands().front();
  config.command = sub->get_name();
  auto given = [&](const std::string& opt) {
    auto* o = sub->get_option_no_throw(opt);
    return o && o->count() > 0;
  };
  if (given("--class"))
    config.class_selector = class_selector;
  if (given("--corpus"))
    config.corpus = corpus;
  if (given("--output"))
    config.output = output;
  if (given("--enumeration-bound"))
    config.enumeration_bound = enumeration;
  if (given("--lattice-bound"))
    config.lattice_bound = lattice;
  if (given("--semidirect-bound"))
    config.semidirect_bound = semidirect;
  config.timings = !given("--no-timings");
  return run(config, out, err);
}

} // namespace qh
