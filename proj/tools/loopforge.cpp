#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopforge/char_vector.hpp"
#include "loopforge/classification.hpp"
#include "loopforge/code_io.hpp"
#include "loopforge/code_loop.hpp"
#include "loopforge/render.hpp"
#include "loopforge/repsolver.hpp"
#include "loopforge/verify.hpp"

using namespace loopforge;
using json = nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerify = 3;

struct Config {
  int rank = 0;
  std::string lambda;
  std::string loop;
  std::string code;
  std::string format = "text";
  std::string style = "ascii";
  std::string output;
  int max_class_size = kReducedClassBound;
  int jobs = 0;
  std::vector<std::string> only;
  std::vector<std::string> perturb;
  bool strict = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  if (const char* env = std::getenv("LOOPFORGE_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError("LOOPFORGE_JOBS must be an integer");
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

EnumerationOptions enum_options(const Config& c) {
  EnumerationOptions o;
  o.max_class_size = c.max_class_size;
  o.jobs = c.jobs;
  return o;
}

int target_count(const Config& c) { return !c.lambda.empty() + !c.loop.empty() + !c.code.empty(); }

void require_one_target(const Config& c) {
  if (target_count(c) != 1) throw UsageError("give exactly one of --loop, --lambda, --code");
}

BinaryCodeBasis load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

CharVector parse_lambda(const Config& c) {
  const auto cv = parse_char_vector(c.lambda, c.rank);
  if (c.rank != 0 && cv.rank() != c.rank) throw Error(ErrorKind::Parse, "--rank disagrees with --lambda");
  return cv;
}

/// Characteristic vector of the target, normalized so that searches apply.
CharVector target_vector(const Config& c) {
  require_one_target(c);
  CharVector cv = !c.loop.empty() ? representative(LoopClassId::parse(c.loop))
                  : !c.code.empty() ? char_vector_of(load_code(c.code))
                                    : parse_lambda(c);
  if (cv.rank() == 4 && cv.nonassociative() && !has_short_form(cv)) {
    cv = normalize_rank4(cv).vector;
    std::cerr << "note: target normalized to " << format_char_vector(cv) << '\n';
  }
  return cv;
}

json generators_json(const BinaryCodeBasis& b) {
  json gens = json::array();
  for (const auto& g : b.generators()) gens.push_back(g.positions());
  return gens;
}

json rep_json(const std::string& loop, const ReducedRepresentation& r) {
  json sizes = json::object();
  for (Subset s : labeling_order(r.sizes.rank()))
    if (r.sizes[s] > 0) sizes[subset_label(s)] = r.sizes[s];
  return {{"loop", loop},
          {"degree", r.degree()},
          {"type", r.type().sizes},
          {"sizes", sizes},
          {"generators", generators_json(r.basis)}};
}

std::string loop_name(const CharVector& cv) {
  try {
    return canonicalize(cv).id.to_string();
  } catch (const Error&) {
    return format_char_vector(cv);
  }
}

// --- subcommands ---------------------------------------------------------

int cmd_classify(const Config& c, std::ostream& out) {
  require_one_target(c);
  std::optional<BinaryCodeBasis> basis;
  CharVector cv(3);
  if (!c.code.empty()) {
    basis = load_code(c.code);
    cv = char_vector_of(*basis);
  } else if (!c.lambda.empty()) {
    cv = parse_lambda(c);
  } else {
    cv = representative(LoopClassId::parse(c.loop));
  }
  const auto can = canonicalize(cv);
  if (c.format == "json") {
    json j{{"loop", can.id.to_string()},
           {"lambda", format_char_vector_full(cv)},
           {"representative", format_char_vector(can.representative)},
           {"witness", can.witness.to_string()}};
    if (basis) j["degree"] = basis->length();
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "loop,lambda,representative,witness\n"
        << can.id.to_string() << ',' << format_char_vector_full(cv) << ',' << format_char_vector(can.representative)
        << ',' << can.witness.to_string() << '\n';
  } else {
    out << can.id.to_string() << '\n'
        << "  lambda          " << format_char_vector_full(cv) << '\n'
        << "  representative  " << format_char_vector(can.representative) << '\n'
        << "  witness         " << can.witness.to_string() << '\n';
  }
  return 0;
}

int cmd_orbits(const Config& c, std::ostream& out) {
  if (c.rank != 3 && c.rank != 4) throw UsageError("orbits needs --rank 3 or --rank 4");
  const auto sizes = representative_orbit_sizes(c.rank);
  const int count = LoopClassId::class_count(c.rank);
  int total = 0;
  json rows = json::array();
  if (c.format == "csv") out << "loop,representative,orbit_size\n";
  for (int i = 1; i <= count; ++i) {
    const LoopClassId id{c.rank, i};
    const auto rep = format_char_vector(representative(id));
    const int size = sizes[static_cast<std::size_t>(i - 1)];
    total += size;
    if (c.format == "csv") out << id.to_string() << ',' << rep << ',' << size << '\n';
    if (c.format == "text") out << id.to_string() << "  " << rep << "  " << size << '\n';
    if (c.format == "json") rows.push_back({{"loop", id.to_string()}, {"representative", rep}, {"orbit_size", size}});
  }
  if (c.format == "json") {
    out << json{{"rank", c.rank}, {"orbits", rows}, {"total", total}}.dump() << '\n';
  } else if (c.format == "text") {
    out << count << " orbits, " << total << " vectors\n";
  }
  return 0;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  const auto cv = target_vector(c);
  const auto loop = loop_name(cv);
  const auto reps = enumerate_reduced(cv, enum_options(c));
  int best = 0;
  for (const auto& r : reps) best = best == 0 ? r.degree() : std::min(best, r.degree());
  if (c.format == "csv") out << "loop,degree,type,sizes\n";
  for (const auto& r : reps) {
    if (c.format == "json") {
      out << rep_json(loop, r).dump() << '\n';
    } else {
      std::string listing;
      for (int v : r.sizes.listing()) listing += (listing.empty() ? "" : " ") + std::to_string(v);
      const std::string lead = std::to_string(r.sizes[full_subset(cv.rank())]);
      if (c.format == "csv") out << loop << ',' << r.degree() << ',' << r.type().to_string() << ",\"" << lead << ' '
                                 << listing << "\"\n";
      else out << loop << "  degree " << r.degree() << "  " << r.type().to_string() << "  [" << lead << "; " << listing
               << "]\n";
    }
  }
  if (c.format == "json") {
    out << json{{"summary", true},
                {"loop", loop},
                {"count", reps.size()},
                {"min_degree", best},
                {"max_class_size", c.max_class_size}}
               .dump()
        << '\n';
  } else if (c.format == "text") {
    out << reps.size() << " reduced representations, minimum degree " << best << '\n';
  }
  return 0;
}

void print_minimal(const Config& c, const MinimalReport& r, std::ostream& out) {
  const auto loop = r.loop ? r.loop->to_string() : format_char_vector(r.target);
  if (c.format == "json") {
    for (const auto& rep : r.representations) out << rep_json(loop, rep).dump() << '\n';
    out << json{{"summary", true},
                {"loop", loop},
                {"degree", r.degree},
                {"classes", r.representations.size()},
                {"attaining", r.attaining_count},
                {"reduced", r.reduced_count},
                {"max_class_size", r.max_class_size}}
               .dump()
        << '\n';
    return;
  }
  if (c.format == "csv") {
    for (const auto& rep : r.representations) out << loop << ',' << r.degree << ',' << rep.type().to_string() << '\n';
    return;
  }
  out << loop << ": degree " << r.degree << ", " << r.representations.size()
      << (r.representations.size() == 1 ? " class" : " classes") << " up to equivalence (" << r.attaining_count << " of "
      << r.reduced_count << " reduced, class sizes <= " << r.max_class_size << ")\n";
  for (const auto& rep : r.representations) {
    out << "  type " << rep.type().to_string() << '\n';
    for (const auto& g : rep.basis.generators()) out << "    (" << format_positions_compact(g) << ")\n";
  }
}

int cmd_minimal(const Config& c, std::ostream& out) {
  if (c.format == "csv") out << "loop,degree,type\n";
  if (target_count(c) == 0) {
    std::vector<int> ranks = c.rank == 0 ? std::vector<int>{3, 4} : std::vector<int>{c.rank};
    for (int n : ranks) {
      if (n != 3 && n != 4) throw UsageError("minimal needs --rank 3 or --rank 4");
      for (int i = 1; i <= LoopClassId::class_count(n); ++i)
        print_minimal(c, minimal_representations(representative({n, i}), enum_options(c)), out);
    }
    return 0;
  }
  print_minimal(c, minimal_representations(target_vector(c), enum_options(c)), out);
  return 0;
}

BinaryCodeBasis target_basis(const Config& c) {
  require_one_target(c);
  if (!c.code.empty()) return load_code(c.code);
  const auto report = minimal_representations(target_vector(c), enum_options(c));
  if (report.representations.empty()) throw Error(ErrorKind::InfeasibleProfile, "no reduced representation");
  return report.representations.front().basis;
}

int cmd_loop(const Config& c, std::ostream& out) {
  const auto basis = target_basis(c);
  const CodeLoop loop(basis);
  if (c.format == "csv") {
    out << loop.to_csv();
    return 0;
  }
  const bool moufang = loop.is_moufang();
  const auto center = loop.center();
  const auto cv = char_vector_of(loop);
  const auto name = cv.nonassociative() ? loop_name(cv) : std::string("associative");
  if (c.format == "json") {
    json elements = json::array();
    json table = json::array();
    for (int x = 0; x < loop.order(); ++x) {
      elements.push_back(loop.label(loop.element(x)));
      json row = json::array();
      for (int y = 0; y < loop.order(); ++y) row.push_back(loop.mul(x, y));
      table.push_back(row);
    }
    json centre = json::array();
    for (const auto& e : center) centre.push_back(loop.label(e));
    out << json{{"loop", name},
                {"order", loop.order()},
                {"lambda", format_char_vector_full(cv)},
                {"moufang", moufang},
                {"associative", loop.is_associative()},
                {"center", centre},
                {"elements", elements},
                {"table", table}}
               .dump()
        << '\n';
    return 0;
  }
  out << "L(V) of order " << loop.order() << ", rank " << loop.rank() << ", degree " << basis.length() << '\n'
      << "  lambda       " << format_char_vector_full(cv) << '\n'
      << "  class        " << name << '\n'
      << "  moufang      " << (moufang ? "yes" : "no") << '\n'
      << "  associative  " << (loop.is_associative() ? "yes" : "no") << '\n'
      << "  center       " << center.size() << " elements:";
  for (const auto& e : center) out << ' ' << loop.label(e);
  out << '\n';
  return 0;
}

int cmd_render(const Config& c, std::ostream& out) {
  if (c.style != "ascii" && c.style != "svg") throw UsageError("--style must be ascii or svg");
  out << render_classes(target_basis(c), c.style == "svg" ? RenderStyle::Svg : RenderStyle::Ascii);
  return 0;
}

int cmd_verify(const Config& c, std::ostream& out) {
  VerifyOptions opts;
  opts.only = c.only;
  opts.perturb = c.perturb;
  opts.jobs = c.jobs;
  const auto results = verify_claims(opts);
  bool failed = false;
  std::size_t errata = 0;
  for (const auto& r : results) {
    failed |= r.status == ClaimStatus::Fail || (c.strict && r.status == ClaimStatus::Erratum);
    if (r.status == ClaimStatus::Erratum) errata += r.notes.size();
    if (c.format == "json") {
      out << json{{"claim", r.id},
                  {"status", to_string(r.status)},
                  {"title", r.title},
                  {"notes", r.notes},
                  {"seconds", r.seconds}}
                 .dump()
          << '\n';
    } else if (c.format == "csv") {
      out << r.id << ',' << to_string(r.status) << ',' << r.notes.size() << '\n';
    } else {
      out << to_string(r.status) << "  " << r.id << "  " << r.title << '\n';
      for (const auto& n : r.notes) out << "    " << n << '\n';
    }
  }
  if (c.format == "text") {
    if (failed) {
      out << "verification failed\n";
    } else if (errata > 0) {
      out << "no unexplained failures; " << errata << " listed bases are known errata\n";
    } else {
      out << "all claims hold\n";
    }
  }
  return failed ? kExitVerify : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Code loops: classification, minimal representations and verification"};
  app.require_subcommand(1);
  Config c;

  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--rank", c.rank, "Rank (3 or 4)")->check(CLI::Range(3, 4));
    sub->add_option("--lambda", c.lambda, "Characteristic vector: short form or full:<bits>");
    sub->add_option("--loop", c.loop, "Loop id such as C4_16");
    sub->add_option("--code", c.code, "Code file");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", c.output, "Write primary output to a file");
    sub->add_option("--jobs", c.jobs, "Worker threads (default: LOOPFORGE_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-class-size", c.max_class_size, "Largest class size searched")->check(CLI::PositiveNumber);
  };

  struct Entry {
    CLI::App* app;
    int (*run)(const Config&, std::ostream&);
  };
  std::vector<Entry> entries;
  auto sub = [&](const char* name, const char* help, int (*run)(const Config&, std::ostream&), bool target) {
    auto* s = app.add_subcommand(name, help);
    if (target) add_target(s);
    add_common(s);
    entries.push_back({s, run});
    return s;
  };
  sub("classify", "Identify the loop of a characteristic vector or code", cmd_classify, true);
  sub("orbits", "List the GL(n,2) orbits of nonassociative vectors", cmd_orbits, true);
  sub("enumerate", "Stream every reduced representation", cmd_enumerate, true);
  sub("minimal", "Minimal representations of one loop, or all of a rank", cmd_minimal, true);
  sub("loop", "Build L(V) and report Moufang checks, or dump its table", cmd_loop, true);
  auto* render = sub("render", "Draw the position classes of a representation", cmd_render, true);
  render->add_option("--style", c.style, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  auto* verify = sub("verify-paper", "Check the embedded reference results", cmd_verify, false);
  verify->add_option("--only", c.only, "Restrict to these claim ids");
  verify->add_flag("--strict", c.strict, "Count known errata as failures");
  verify->add_option("--perturb", c.perturb, "Alter one golden value of these claims (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c.jobs == 0) c.jobs = default_jobs();
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!c.output.empty()) {
      file.open(c.output);
      if (!file) throw UsageError("cannot write " + c.output);
      out = &file;
    }
    for (const auto& e : entries)
      if (e.app->parsed()) return e.run(c, *out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
