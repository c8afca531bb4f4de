#pragma once

// JSON shapes:
//   partition      [5,3,2]
//   ideal          {"rank": r, "generators": [[...], ...]}
//   rational       [num, den]   (numbers, or decimal strings beyond 64 bits)
//   polynomial     [{"exponents": [[i,j,e], ...], "coeff": [num,den] | [re,im]}, ...]
//                  with 1-based matrix indices.

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "stratmod/ideal.hpp"
#include "stratmod/kernel_coeffs.hpp"
#include "stratmod/polynomial.hpp"

namespace stratmod::io {

using json = nlohmann::json;

inline json to_json(const Partition &p) { return json(p.parts()); }

inline json to_json(const std::vector<Partition> &ps) {
  json out = json::array();
  for (const auto &p : ps)
    out.push_back(to_json(p));
  return out;
}

inline json to_json(const IdealSupport &ideal) {
  return json{{"rank", ideal.rank()}, {"generators", to_json(ideal.generators())}};
}

inline json big_to_json(const BigInt &x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return json(x.convert_to<std::int64_t>());
  return json(x.str());
}

inline json to_json(const Rational &q) {
  return json::array({big_to_json(numerator_of(q)), big_to_json(denominator_of(q))});
}

inline json scalar_json(const Rational &q) { return to_json(q); }
inline json scalar_json(const Complex &c) { return json::array({c.real(), c.imag()}); }

template <class S>
json to_json(const Polynomial<S> &f) {
  const TriplePars &pars = f.pars();
  json out = json::array();
  for (const auto &[e, c] : f.terms()) {
    json ex = json::array();
    for (std::size_t i = 0; i < pars.r(); ++i)
      for (std::size_t j = 0; j < pars.s(); ++j)
        if (auto k = e[pars.var(i, j)])
          ex.push_back(json::array({i + 1, j + 1, k}));
    out.push_back(json{{"exponents", ex}, {"coeff", scalar_json(c)}});
  }
  return out;
}

inline json to_json(const KernelExpansion &k) {
  json coeffs = json::object();
  for (const auto &[mu, c] : k.coefficients)
    coeffs[to_json(mu).dump()] = to_json(c);
  return json{{"rank_context", k.rank_context}, {"weight_bound", k.weight_bound},
              {"coefficients", coeffs}};
}

inline std::vector<Int> int_list_from_json(const json &j) {
  if (!j.is_array())
    throw DomainError("expected a JSON array of integers, got " + j.dump());
  std::vector<Int> out;
  for (const auto &x : j) {
    if (!x.is_number_integer())
      throw DomainError("expected an integer, got " + x.dump());
    out.push_back(x.get<Int>());
  }
  return out;
}

inline Partition partition_from_json(const json &j) { return Partition(int_list_from_json(j)); }

inline std::vector<Partition> partitions_from_json(const json &j) {
  if (!j.is_array())
    throw DomainError("expected a JSON array of partitions, got " + j.dump());
  std::vector<Partition> out;
  for (const auto &x : j)
    out.push_back(partition_from_json(x));
  return out;
}

inline IdealSupport ideal_from_json(const json &j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("generators"))
    throw DomainError("ideal JSON needs \"rank\" and \"generators\"");
  auto gens = partitions_from_json(j.at("generators"));
  return IdealSupport::minimal_full_set(j.at("rank").get<std::size_t>(), gens);
}

inline json parse_json(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

// "5,3,2", "[5,3,2]" or "" (the rank-0 tuple).
inline std::vector<Int> parse_int_list(const std::string &text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t.push_back(c);
  if (!t.empty() && t.front() == '[')
    return int_list_from_json(parse_json(t));
  std::vector<Int> out;
  if (t.empty())
    return out;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    auto comma = t.find(',', pos);
    std::string tok = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception &) {
      throw DomainError("malformed integer '" + tok + "' in '" + text + "'");
    }
    if (used != tok.size())
      throw DomainError("malformed integer '" + tok + "' in '" + text + "'");
    out.push_back(v);
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

inline Partition parse_partition(const std::string &text) { return Partition(parse_int_list(text)); }

} // namespace stratmod::io
