#include "qwick/verify.hpp"

#include <algorithm>
#include <numeric>

#include "qwick/errors.hpp"
#include "qwick/wick.hpp"

namespace qwick {

const std::vector<std::string>& verify_theorem_ids() {
  static const std::vector<std::string> ids{"t2.1", "c2.2",  "wick2-vs-recursion", "wick-vector", "t3.3",
                                            "t3.4", "roundtrip", "free", "gram"};
  return ids;
}

Assignment random_assignment(int count, int dim, std::mt19937_64& rng) {
  Assignment out;
  for (Label l = 1; l <= count; ++l) {
    OneParticleVector f;
    for (int k = 0; k < dim; ++k) f.coords.emplace_back(static_cast<long>(rng() % 7) - 3);
    out.emplace(l, std::move(f));
  }
  return out;
}

std::vector<OneParticleVector> assigned_vectors(const Assignment& assignment, int count) {
  std::vector<OneParticleVector> out;
  for (Label l = 1; l <= count; ++l) out.push_back(assignment.at(l));
  return out;
}

Json to_json(const VerifyRecord& r) {
  return {{"theorem", r.theorem},
          {"instance", r.instance},
          {"status", r.pass ? "pass" : "fail"},
          {"witness", r.witness}};
}

namespace {

Json vectors_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [label, f] : a) {
    Json coords = Json::array();
    for (const Rational& c : f.coords) coords.push_back(c.get_str());
    out[std::to_string(label)] = coords;
  }
  return out;
}

std::vector<Label> labels_upto(int n) {
  std::vector<Label> l(n);
  std::iota(l.begin(), l.end(), 1);
  return l;
}

std::vector<Rational> default_q_grid() {
  return {Rational(0), Rational(1, 3), Rational(-1, 3), Rational(1, 2)};
}

std::vector<std::vector<int>> default_blocks() {
  return {{1, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 2, 2}, {2, 2, 2}};
}

class Runner {
 public:
  Runner(std::string theorem, const VerifyConfig& config)
      : theorem_(std::move(theorem)), config_(config), rng_(config.seed) {
    qs_ = config.qs.empty() ? default_q_grid() : config.qs;
    if (config_.dims.empty()) config_.dims = {2};
  }

  std::vector<VerifyRecord> run() {
    if (theorem_ == "t2.1") {
      theorem_2_1();
    } else if (theorem_ == "c2.2") {
      moments();
    } else if (theorem_ == "wick2-vs-recursion") {
      recursion();
    } else if (theorem_ == "wick-vector") {
      wick_vector();
    } else if (theorem_ == "t3.3") {
      products(false);
    } else if (theorem_ == "t3.4") {
      products(true);
    } else if (theorem_ == "roundtrip") {
      roundtrip();
    } else if (theorem_ == "free") {
      free_case();
    } else if (theorem_ == "gram") {
      gram();
    } else {
      throw DomainError("unknown theorem id '" + theorem_ + "'");
    }
    return std::move(records_);
  }

 private:
  int n_or(int fallback) const { return config_.n.value_or(fallback); }

  FockParams params(int dim, int needed, const Rational& q) const {
    return {dim, config_.level.value_or(std::max(needed, 1)), q};
  }

  // Assignments for one instance, cycling over the configured dimensions.
  std::vector<std::pair<int, Assignment>> draw(int count) {
    std::vector<std::pair<int, Assignment>> out;
    for (int a = 0; a < config_.assignments; ++a) {
      int dim = config_.dims[a % config_.dims.size()];
      out.emplace_back(dim, random_assignment(count, dim, rng_));
    }
    return out;
  }

  void record(Json instance, bool pass, Json witness = nullptr) {
    records_.push_back({theorem_, std::move(instance), pass, pass ? Json(nullptr) : std::move(witness)});
  }

  void theorem_2_1() {
    const int max_len = n_or(8);
    for (int len = 2; len <= max_len; len += 2) {
      for (const SignSequence& eps : catalan_sequences(len)) {
        const Expansion sym = m_epsilon_expansion(eps, config_.cap);
        const bool degree_ok = sym.max_q_degree() < len * len;
        for (const Rational& q : qs_) {
          for (const auto& [dim, assignment] : draw(len)) {
            const FockParams p = params(dim, len, q);
            const Rational oracle =
                vacuum_expectation(OperatorWord::from_signs(eps), assignment, p);
            const Rational symbolic = evaluate_expectation(sym, assignment, p);
            Json inst{{"eps", eps.entries()}, {"q", q.get_str()}, {"dim", dim}};
            record(inst, degree_ok && oracle == symbolic,
                   {{"eps", eps.entries()}, {"q", q.get_str()}, {"vectors", vectors_json(assignment)},
                    {"oracle", oracle.get_str()}, {"diagram_sum", symbolic.get_str()},
                    {"max_q_degree", sym.max_q_degree()}});
          }
        }
      }
    }
  }

  void moments() {
    const int max_n = n_or(8);
    for (int n = 1; n <= max_n; ++n) {
      const Expansion sym = moment_expansion(n, config_.cap);
      const bool shape_ok = (n % 2 == 1) ? sym.is_zero() : sym.max_q_degree() < n * n;
      for (const Rational& q : qs_) {
        for (const auto& [dim, assignment] : draw(n)) {
          const FockParams p = params(dim, n, q);
          // Oracle: phi = a+ + a-, so the moment is the sum of m(eps) over
          // all 2^n sign words.
          Rational oracle = 0;
          for (unsigned mask = 0; mask < (1U << n); ++mask) {
            std::vector<int> signs(n);
            for (int k = 0; k < n; ++k) signs[k] = (mask >> k) & 1U ? -1 : 1;
            oracle += vacuum_expectation(OperatorWord::from_signs(SignSequence(signs)), assignment, p);
          }
          const Rational direct = vacuum_expectation(labels_upto(n), assignment, p);
          const Rational symbolic = evaluate_expectation(sym, assignment, p);
          Json inst{{"n", n}, {"q", q.get_str()}, {"dim", dim}};
          record(inst, shape_ok && oracle == symbolic && direct == symbolic,
                 {{"n", n}, {"q", q.get_str()}, {"vectors", vectors_json(assignment)},
                  {"oracle_words", oracle.get_str()}, {"oracle_fields", direct.get_str()},
                  {"diagram_sum", symbolic.get_str()}});
        }
      }
    }
  }

  void recursion() {
    const int max_n = n_or(7);
    for (int n = 1; n <= max_n; ++n) {
      const Expansion formula = wick_to_normal(n, config_.cap);
      const Expansion recursive = wick_recursive(n, config_.cap);
      record({{"n", n}}, formula == recursive,
             {{"n", n}, {"diagram_formula", to_json(formula)}, {"recursion", to_json(recursive)}});
    }
  }

  void wick_vector() {
    const int max_n = n_or(6);
    for (int n = 0; n <= max_n; ++n) {
      const WickOperatorForm form = wick_operator_form(n, config_.cap);
      const Expansion normal = wick_to_normal(n, config_.cap);
      for (const Rational& q : qs_) {
        for (const auto& [dim, assignment] : draw(n)) {
          const FockParams p = params(dim, n, q);
          const FockVector expected = FockVector::elementary_tensor(assigned_vectors(assignment, n));
          const FockVector via_form = apply_wick_form(form, assignment, FockVector::vacuum(), p);
          const FockVector via_normal = evaluate_on_vacuum(normal, assignment, p);
          Json inst{{"n", n}, {"q", q.get_str()}, {"dim", dim}};
          record(inst, via_form == expected && via_normal == expected,
                 {{"n", n}, {"q", q.get_str()}, {"vectors", vectors_json(assignment)},
                  {"expected", to_json(expected)}, {"operator_form", to_json(via_form)},
                  {"normal_expansion", to_json(via_normal)}});
        }
      }
    }
  }

  // Y_1 ... Y_t Omega with each Y_p applied through its creator/annihilator form.
  static FockVector wick_blocks_on_vacuum(const std::vector<int>& blocks,
                                          const Assignment& assignment, const FockParams& p) {
    std::vector<std::vector<Label>> labels;
    Label next = 1;
    for (int b : blocks) {
      labels.emplace_back();
      for (int k = 0; k < b; ++k) labels.back().push_back(next++);
    }
    FockVector v = FockVector::vacuum();
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
      v = apply_wick_form(wick_operator_form(*it, it->size()), assignment, v, p);
    }
    return v;
  }

  void products(bool full_product) {
    const auto block_list = config_.blocks.empty() ? default_blocks() : config_.blocks;
    for (const auto& blocks : block_list) {
      const int total = std::accumulate(blocks.begin(), blocks.end(), 0);
      const Expansion sym = full_product ? product_expansion(blocks, config_.cap)
                                         : product_expectation(blocks, config_.cap);
      for (const Rational& q : qs_) {
        for (const auto& [dim, assignment] : draw(total)) {
          const FockParams p = params(dim, total, q);
          const FockVector lhs = wick_blocks_on_vacuum(blocks, assignment, p);
          Json inst{{"blocks", blocks}, {"q", q.get_str()}, {"dim", dim}};
          Json witness{{"blocks", blocks}, {"q", q.get_str()}, {"vectors", vectors_json(assignment)}};
          if (full_product) {
            const FockVector rhs = evaluate_on_vacuum(sym, assignment, p);
            // The vacuum coefficient also has to match the expectation formula.
            const Rational expectation =
                evaluate_expectation(product_expectation(blocks, config_.cap), assignment, p);
            witness["product_on_vacuum"] = to_json(lhs);
            witness["wick_expansion_on_vacuum"] = to_json(rhs);
            witness["expectation_formula"] = expectation.get_str();
            record(inst, lhs == rhs && lhs.vacuum_coefficient() == expectation, witness);
          } else {
            const Rational oracle = lhs.vacuum_coefficient();
            const Rational symbolic = evaluate_expectation(sym, assignment, p);
            witness["oracle"] = oracle.get_str();
            witness["diagram_sum"] = symbolic.get_str();
            record(inst, oracle == symbolic, witness);
          }
        }
      }
    }
  }

  void roundtrip() {
    const int max_n = n_or(6);
    for (int n = 1; n <= max_n; ++n) {
      const Expansion wick = normal_to_wick(n, config_.cap);
      WickRule rule;
      for (const auto& [key, poly] : wick.terms()) {
        if (key.word.kind == WordKind::wick) {
          rule.emplace(key.word.indices, wick_to_normal(key.word.indices, config_.cap));
        }
      }
      const Expansion back = substitute_wick(wick, rule);
      const Expansion bare = Expansion::word(labels_upto(n));
      record({{"n", n}}, back == bare, {{"n", n}, {"substituted", to_json(back)}});
    }
  }

  void free_case() {
    const int max_n = n_or(6);
    auto check = [&](Json inst, const Expansion& filtered, const Expansion& general) {
      const Expansion specialized = specialize_free(general);
      // specialize_free must agree with evaluating every coefficient at q = 0.
      Expansion at_zero;
      for (const auto& [key, poly] : general.terms()) at_zero.add(key, QPolynomial(poly.eval(0)));
      record(inst, filtered == specialized && specialized == at_zero,
             {{"instance", inst}, {"diagram_filtered", to_json(filtered)},
              {"specialized", to_json(specialized)}});
    };
    for (int n = 1; n <= max_n; ++n) {
      check({{"formula", "moment"}, {"n", n}}, free_moment(n, config_.cap),
            moment_expansion(n, config_.cap));
      check({{"formula", "wick_to_normal"}, {"n", n}}, free_wick_to_normal(n, config_.cap),
            wick_to_normal(n, config_.cap));
      check({{"formula", "normal_to_wick"}, {"n", n}}, free_normal_to_wick(n, config_.cap),
            normal_to_wick(n, config_.cap));
    }
    const auto block_list = config_.blocks.empty() ? default_blocks() : config_.blocks;
    for (const auto& blocks : block_list) {
      check({{"formula", "product_expectation"}, {"blocks", blocks}},
            free_product_expectation(blocks, config_.cap), product_expectation(blocks, config_.cap));
      check({{"formula", "product_expansion"}, {"blocks", blocks}},
            free_product_expansion(blocks, config_.cap), product_expansion(blocks, config_.cap));
    }
  }

  void gram() {
    const std::vector<Rational> qs =
        config_.qs.empty() ? std::vector<Rational>{Rational(-3, 4), Rational(-1, 3), Rational(0),
                                                   Rational(1, 3), Rational(3, 4)}
                           : config_.qs;
    for (const Rational& q : qs) {
      if (!(q > -1 && q < 1)) {
        throw DomainError("gram check needs -1 < q < 1, got q = " + q.get_str());
      }
    }
    const int max_degree = n_or(3);
    const int max_dim = *std::max_element(config_.dims.begin(), config_.dims.end());
    for (const Rational& q : qs) {
      for (int dim = 1; dim <= max_dim; ++dim) {
        for (int degree = 1; degree <= max_degree; ++degree) {
          const GramReport report = gram_check(degree, {dim, degree, q});
          Json minors = Json::array();
          for (const Rational& m : report.leading_minors) minors.push_back(m.get_str());
          record({{"degree", degree}, {"dim", dim}, {"q", q.get_str()}}, report.positive_definite,
                 {{"degree", degree}, {"dim", dim}, {"q", q.get_str()}, {"leading_minors", minors}});
        }
      }
    }
  }

  std::string theorem_;
  VerifyConfig config_;
  std::mt19937_64 rng_;
  std::vector<Rational> qs_;
  std::vector<VerifyRecord> records_;
};

}  // namespace

std::vector<VerifyRecord> run_verify(const std::string& theorem, const VerifyConfig& config) {
  return Runner(theorem, config).run();
}

}  // namespace qwick
