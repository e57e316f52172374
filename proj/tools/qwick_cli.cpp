// Command-line front end: diagram listings, symbolic expansions and oracle
// verification reports.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or domain error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwick/diagram.hpp"
#include "qwick/errors.hpp"
#include "qwick/expansion.hpp"
#include "qwick/serialize.hpp"
#include "qwick/verify.hpp"
#include "qwick/wick.hpp"

namespace {

using namespace qwick;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr const char* kCapEnv = "QWICK_ENUM_CAP";

struct RunConfig {
  std::optional<int> n;
  std::string blocks;
  std::string q = "1/3";
  bool q_given = false;
  int dim = 2;
  std::optional<int> level;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool free = false;
  std::optional<std::size_t> cap;
  // command specific
  std::string direction = "to-normal";
  std::string eps;
  bool complete_only = false;
  bool operator_form = false;
  bool expectation = false;
  std::string theorem;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + what + " '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

std::size_t effective_cap(const RunConfig& cfg) {
  if (cfg.cap) return *cfg.cap;
  if (const char* env = std::getenv(kCapEnv)) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + kCapEnv + " '" + env + "'");
    }
  }
  return kDefaultEnumerationCap;
}

int require_n(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("--n is required");
  if (*cfg.n < 0) throw UsageError("--n must be non-negative");
  return *cfg.n;
}

void emit_expansion(const RunConfig& cfg, Json envelope, const Expansion& e) {
  if (cfg.format == "csv") {
    std::cout << to_csv(e);
  } else if (cfg.format == "pretty") {
    std::cout << to_pretty(e);
  } else {
    envelope["expansion"] = to_json(e);
    std::cout << envelope.dump(2) << "\n";
  }
}

int cmd_diagrams(const RunConfig& cfg) {
  const std::size_t cap = effective_cap(cfg);
  GroundSet ground = cfg.blocks.empty() ? GroundSet(require_n(cfg))
                                        : GroundSet::with_blocks(parse_int_list(cfg.blocks, "blocks"));
  std::vector<FeynmanDiagram> diagrams;
  if (ground.has_blocks()) {
    diagrams = enumerate_nonlinking(ground, cfg.complete_only, cap);
  } else {
    diagrams = cfg.complete_only ? enumerate_complete(ground, cap) : enumerate_diagrams(ground, cap);
  }

  struct Counts {
    long total = 0, complete = 0, complete_nc = 0, nc = 0, snc = 0, gf = 0;
  } counts;
  QPolynomial generating;
  Json listing = Json::array();
  std::ostringstream csv, pretty;
  csv << "pairs,c,d,tc,g,a,complete,noncrossing,strongly_noncrossing,gap_free\n";
  for (const FeynmanDiagram& d : diagrams) {
    const CrossingStats s = crossing_stats(d);
    const DiagramClass cls = classify(d);
    ++counts.total;
    counts.nc += cls.noncrossing;
    counts.snc += cls.strongly_noncrossing;
    counts.gf += cls.gap_free;
    if (d.complete()) {
      ++counts.complete;
      counts.complete_nc += cls.noncrossing;
      generating += QPolynomial::q_power(s.crossings);
    }
    if (cfg.format == "json") {
      listing.push_back({{"diagram", to_json(d)}, {"stats", to_json(s)}, {"class", to_json(cls)},
                         {"complete", d.complete()}});
    }
    std::string pairs;
    for (const Pair& p : d.pairs()) {
      pairs += (pairs.empty() ? "" : " ") + std::string("(") + std::to_string(p.left) + "," +
               std::to_string(p.right) + ")";
    }
    csv << pairs << "," << s.crossings << "," << s.degenerate_crossings << "," << s.total_crossings
        << "," << s.gap << "," << s.a << "," << d.complete() << "," << cls.noncrossing << ","
        << cls.strongly_noncrossing << "," << cls.gap_free << "\n";
    pretty << "{" << pairs << "}  c=" << s.crossings << " d=" << s.degenerate_crossings
           << " tc=" << s.total_crossings << " g=" << s.gap << " a=" << s.a
           << (cls.gap_free ? " GF" : cls.strongly_noncrossing ? " SNC" : cls.noncrossing ? " NC" : "")
           << "\n";
  }

  if (cfg.format == "csv") {
    std::cout << csv.str();
  } else if (cfg.format == "pretty") {
    std::cout << pretty.str() << "total " << counts.total << ", complete " << counts.complete
              << ", complete-NC " << counts.complete_nc << ", NC " << counts.nc << ", SNC "
              << counts.snc << ", GF " << counts.gf << "\n"
              << "sum over complete diagrams of q^c: " << generating.to_string() << "\n";
  } else {
    Json summary{{"total", counts.total},           {"complete", counts.complete},
                 {"complete_noncrossing", counts.complete_nc}, {"noncrossing", counts.nc},
                 {"strongly_noncrossing", counts.snc}, {"gap_free", counts.gf},
                 {"crossing_polynomial", to_json(generating)}};
    Json out{{"command", "diagrams"}, {"size", ground.size()},
             {"blocks", ground.has_blocks() ? Json(ground.blocks()) : Json(nullptr)},
             {"diagrams", listing}, {"summary", summary}};
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_moments(const RunConfig& cfg) {
  const std::size_t cap = effective_cap(cfg);
  if (!cfg.eps.empty()) {
    SignSequence eps(parse_int_list(cfg.eps, "sign sequence"));
    const CatalanCheck check = catalan_check(eps);
    Expansion e = m_epsilon_expansion(eps, cap);
    if (cfg.free) e = specialize_free(e);
    emit_expansion(cfg,
                   {{"command", "moments"}, {"eps", eps.entries()}, {"catalan", check.catalan},
                    {"sigma", check.sigma}, {"free", cfg.free}},
                   e);
    return 0;
  }
  const int n = require_n(cfg);
  emit_expansion(cfg, {{"command", "moments"}, {"n", n}, {"free", cfg.free}},
                 cfg.free ? free_moment(n, cap) : moment_expansion(n, cap));
  return 0;
}

int cmd_wick(const RunConfig& cfg) {
  const std::size_t cap = effective_cap(cfg);
  const int n = require_n(cfg);
  if (cfg.operator_form) {
    Json out{{"command", "wick"}, {"n", n}, {"operator_form", to_json(wick_operator_form(n, cap))}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  Expansion e;
  if (cfg.direction == "to-normal") {
    e = cfg.free ? free_wick_to_normal(n, cap) : wick_to_normal(n, cap);
  } else if (cfg.direction == "to-wick") {
    e = cfg.free ? free_normal_to_wick(n, cap) : normal_to_wick(n, cap);
  } else {
    throw UsageError("--direction must be to-normal or to-wick");
  }
  emit_expansion(cfg, {{"command", "wick"}, {"direction", cfg.direction}, {"n", n}, {"free", cfg.free}},
                 e);
  return 0;
}

int cmd_product(const RunConfig& cfg) {
  const std::size_t cap = effective_cap(cfg);
  if (cfg.blocks.empty()) throw UsageError("--blocks is required");
  const std::vector<int> blocks = parse_int_list(cfg.blocks, "blocks");
  const GroundSet ground = GroundSet::with_blocks(blocks);
  Expansion e;
  if (cfg.expectation) {
    e = cfg.free ? free_product_expectation(blocks, cap) : product_expectation(blocks, cap);
  } else {
    e = cfg.free ? free_product_expansion(blocks, cap) : product_expansion(blocks, cap);
  }
  Json labels = Json::array();
  for (Position p = 1; p <= ground.size(); ++p) {
    auto [block, index] = ground.lex_label(p);
    labels.push_back({{"label", p}, {"block", block}, {"index", index}});
  }
  emit_expansion(cfg,
                 {{"command", "product"}, {"blocks", blocks},
                  {"kind", cfg.expectation ? "expectation" : "expansion"}, {"free", cfg.free},
                  {"labels", labels}},
                 e);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyConfig vc;
  vc.n = cfg.n;
  if (!cfg.blocks.empty()) vc.blocks = {parse_int_list(cfg.blocks, "blocks")};
  if (cfg.q_given) vc.qs = {parse_rational(cfg.q)};
  vc.dims = {cfg.dim};
  vc.level = cfg.level;
  vc.seed = cfg.seed;
  vc.cap = effective_cap(cfg);
  const std::vector<VerifyRecord> records = run_verify(cfg.theorem, vc);

  long passed = 0;
  for (const VerifyRecord& r : records) passed += r.pass;
  const long failed = static_cast<long>(records.size()) - passed;

  if (cfg.format == "csv") {
    std::cout << "theorem,status,instance\n";
    for (const VerifyRecord& r : records) {
      Json inst = r.instance;
      std::cout << r.theorem << "," << (r.pass ? "pass" : "fail") << ",\"" << inst.dump() << "\"\n";
    }
  } else if (cfg.format == "pretty") {
    for (const VerifyRecord& r : records) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.theorem << " " << r.instance.dump() << "\n";
      if (!r.pass) std::cout << "  witness: " << r.witness.dump() << "\n";
    }
    std::cout << cfg.theorem << ": " << passed << " passed, " << failed << " failed\n";
  } else {
    Json list = Json::array();
    for (const VerifyRecord& r : records) list.push_back(to_json(r));
    Json out{{"command", "verify"}, {"theorem", cfg.theorem}, {"seed", cfg.seed},
             {"records", list}, {"summary", {{"pass", passed}, {"fail", failed}}}};
    std::cout << out.dump(2) << "\n";
  }
  return failed == 0 ? 0 : kExitFailure;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "Number of variables / ground set size");
  cmd->add_option("--blocks", cfg.blocks, "Block sizes, e.g. 2,1,3");
  cmd->add_option("--q", cfg.q, "Deformation parameter as num/den")
      ->check(
          [](const std::string& s) {
            try {
              parse_rational(s);
              return std::string();
            } catch (const qwick::Error& e) {
              return std::string(e.what());
            }
          },
          "RATIONAL")
      ->each([&](const std::string&) { cfg.q_given = true; });
  cmd->add_option("--dim", cfg.dim, "One-particle dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--level", cfg.level, "Fock truncation level")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Seed for random vectors");
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_flag("--free", cfg.free, "Use the q = 0 (free) diagram classes");
  cmd->add_option("--cap", cfg.cap, "Enumeration cap (default 12, or $QWICK_ENUM_CAP)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic q-Gaussian moments and Wick products via Feynman diagrams"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* diagrams = app.add_subcommand("diagrams", "List Feynman diagrams with crossing statistics");
  add_common(diagrams, cfg);
  diagrams->add_flag("--complete", cfg.complete_only, "Only complete diagrams");

  auto* moments = app.add_subcommand("moments", "Vacuum moments E(xi_1 ... xi_n) or m(eps)");
  add_common(moments, cfg);
  moments->add_option("--eps", cfg.eps, "Sign sequence such as -1,-1,1,1");

  auto* wick = app.add_subcommand("wick", "Wick <-> normal product conversions");
  add_common(wick, cfg);
  wick->add_option("--direction", cfg.direction, "to-normal or to-wick");
  wick->add_flag("--operator-form", cfg.operator_form, "Emit the creator/annihilator form");

  auto* product = app.add_subcommand("product", "Products of Wick products over blocks");
  add_common(product, cfg);
  product->add_flag("--expectation", cfg.expectation, "Emit E(Y_1 ... Y_t) instead");

  auto* verify = app.add_subcommand("verify", "Check a theorem against the Fock-space oracle");
  add_common(verify, cfg);
  verify->add_option("theorem", cfg.theorem, "One of t2.1 c2.2 wick2-vs-recursion wick-vector "
                                              "t3.3 t3.4 roundtrip free gram")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*diagrams) return cmd_diagrams(cfg);
    if (*moments) return cmd_moments(cfg);
    if (*wick) return cmd_wick(cfg);
    if (*product) return cmd_product(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
