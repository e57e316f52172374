#include "qwick/serialize.hpp"

#include <sstream>

#include "qwick/errors.hpp"

namespace qwick {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw DomainError("expected an integer or integer string in JSON");
}

const char* kind_name(WordKind k) { return k == WordKind::wick ? "wick" : "normal"; }

std::string cov_text(const CovarianceMonomial& cov) {
  std::string s;
  for (const auto& [i, j] : cov.factors()) {
    if (!s.empty()) s += "*";
    s += "c(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s;
}

std::string word_text(const VariableWord& w) {
  std::string s;
  for (Label l : w.indices) {
    if (!s.empty()) s += " ";
    s += "xi" + std::to_string(l);
  }
  if (w.kind == WordKind::wick && !w.empty()) s = ":" + s + ":";
  return s;
}

}  // namespace

Json to_json(const QPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back({{"exp", e}, {"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}});
  }
  return out;
}

Json to_json(const Expansion& e) {
  Json out = Json::array();
  for (const auto& [key, poly] : e.terms()) {
    Json cov = Json::array();
    for (const auto& [i, j] : key.cov.factors()) cov.push_back({i, j});
    out.push_back({{"cov", cov},
                   {"word", key.word.indices},
                   {"kind", kind_name(key.word.kind)},
                   {"poly", to_json(poly)}});
  }
  return out;
}

Json to_json(const FeynmanDiagram& d) {
  Json pairs = Json::array();
  for (const Pair& p : d.pairs()) pairs.push_back({p.left, p.right});
  Json blocks = d.ground().has_blocks() ? Json(d.ground().blocks()) : Json(nullptr);
  return {{"size", d.ground().size()}, {"blocks", blocks}, {"pairs", pairs}};
}

Json to_json(const CrossingStats& s) {
  Json per_pair = Json::array();
  for (const PairStats& p : s.per_pair) {
    per_pair.push_back({{"pair", {p.pair.left, p.pair.right}},
                        {"c_l", p.left_crossings},
                        {"c_r", p.right_crossings},
                        {"gap", p.gap},
                        {"a", p.a()}});
  }
  return {{"c", s.crossings},
          {"d", s.degenerate_crossings},
          {"tc", s.total_crossings},
          {"g", s.gap},
          {"a", s.a},
          {"per_pair", per_pair}};
}

Json to_json(const DiagramClass& c) {
  return {{"noncrossing", c.noncrossing},
          {"strongly_noncrossing", c.strongly_noncrossing},
          {"gap_free", c.gap_free}};
}

Json to_json(const WickOperatorForm& form) {
  Json out = Json::array();
  for (const WickSummand& s : form.summands) {
    Json word = Json::array();
    for (const OperatorLetter& l : s.word.letters) word.push_back({l.sign, l.index});
    out.push_back({{"word", word}, {"qpow", s.q_power}});
  }
  return out;
}

Json to_json(const FockVector& v) {
  Json out = Json::object();
  for (const auto& [w, c] : v.entries()) {
    std::string key;
    for (std::size_t k = 0; k < w.size(); ++k) key += (k ? "," : "") + std::to_string(w[k] + 1);
    out[key] = c.get_str();
  }
  return out;
}

QPolynomial qpoly_from_json(const Json& j) {
  QPolynomial p;
  for (const Json& t : j) {
    Rational c(integer_from_json(t.at("num")), integer_from_json(t.at("den")));
    if (c.get_den() == 0) throw DomainError("zero denominator in JSON polynomial");
    c.canonicalize();
    p += QPolynomial::monomial(t.at("exp").get<unsigned>(), c);
  }
  return p;
}

Expansion expansion_from_json(const Json& j) {
  Expansion e;
  for (const Json& t : j) {
    std::vector<std::pair<Label, Label>> factors;
    for (const Json& f : t.at("cov")) factors.emplace_back(f.at(0).get<Label>(), f.at(1).get<Label>());
    const std::string kind = t.at("kind").get<std::string>();
    if (kind != "normal" && kind != "wick") throw DomainError("unknown word kind '" + kind + "'");
    VariableWord word{t.at("word").get<std::vector<Label>>(),
                      kind == "wick" ? WordKind::wick : WordKind::normal};
    e.add({CovarianceMonomial(std::move(factors)), std::move(word)}, qpoly_from_json(t.at("poly")));
  }
  return e;
}

std::string to_pretty(const Expansion& e) {
  if (e.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [key, poly] : e.terms()) {
    std::string coeff = poly.to_string();
    if (poly.terms().size() > 1) coeff = "(" + coeff + ")";
    std::string rest = cov_text(key.cov);
    const std::string word = word_text(key.word);
    if (!word.empty()) rest += rest.empty() ? word : " " + word;
    if (rest.empty()) {
      out << coeff << "\n";
    } else if (coeff == "1") {
      out << rest << "\n";
    } else if (coeff == "-1") {
      out << "-" << rest << "\n";
    } else {
      out << coeff << " * " << rest << "\n";
    }
  }
  return out.str();
}

std::string to_csv(const Expansion& e) {
  std::ostringstream out;
  out << "cov,word,kind,exp,num,den\n";
  for (const auto& [key, poly] : e.terms()) {
    std::string cov;
    for (const auto& [i, j] : key.cov.factors()) {
      cov += (cov.empty() ? "" : " ") + std::to_string(i) + "-" + std::to_string(j);
    }
    std::string word;
    for (Label l : key.word.indices) word += (word.empty() ? "" : " ") + std::to_string(l);
    for (const auto& [exp, c] : poly.terms()) {
      out << cov << "," << word << "," << kind_name(key.word.kind) << "," << exp << ","
          << c.get_num().get_str() << "," << c.get_den().get_str() << "\n";
    }
  }
  return out.str();
}

}  // namespace qwick
