#pragma once

#include <string>

#include <json.hpp>

#include "qwick/diagram.hpp"
#include "qwick/expansion.hpp"
#include "qwick/fock.hpp"
#include "qwick/qpoly.hpp"
#include "qwick/wick.hpp"

namespace qwick {

using Json = nlohmann::json;

// Rationals serialize as JSON integers when they fit in 64 bits and as
// decimal strings otherwise; the readers accept both.

/// [{exp, num, den}, ...] in increasing exponent order.
Json to_json(const QPolynomial& p);
/// [{cov: [[i,j],...], word: [...], kind: "normal"|"wick", poly: [...]}, ...]
/// in canonical term order.
Json to_json(const Expansion& e);
/// {size, blocks, pairs: [[i,j],...]}; blocks is null without a block
/// structure.
Json to_json(const FeynmanDiagram& d);
Json to_json(const CrossingStats& s);
Json to_json(const DiagramClass& c);
/// [{word: [[sign, idx], ...], qpow}, ...]
Json to_json(const WickOperatorForm& form);
/// {"<letters>": coefficient, ...} with 1-based letters joined by ',';
/// the vacuum is the key "".
Json to_json(const FockVector& v);

QPolynomial qpoly_from_json(const Json& j);
Expansion expansion_from_json(const Json& j);

/// Multiline "coefficient * covariances * word" rendering, one term per line.
std::string to_pretty(const Expansion& e);
/// Header "cov,word,kind,exp,num,den" then one row per (term, exponent).
std::string to_csv(const Expansion& e);

}  // namespace qwick
