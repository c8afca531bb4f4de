#pragma once

// Command-line adapter. Every subcommand parses its flags into library types,
// calls one library entry point, and returns a single JSON document.
// Exit codes: 0 success, 2 invalid input, 1 computation failure.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stratmod/determinantal.hpp"
#include "stratmod/io.hpp"
#include "stratmod/kernel_coeffs.hpp"
#include "stratmod/peter_weyl.hpp"

namespace stratmod::cli {

using io::json;

struct Result {
  int exit_code = 0;
  json output;

  std::string render(bool pretty) const { return pretty ? output.dump(2) : output.dump(); }
};

inline json error_object(const std::string &kind, const std::string &message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

namespace detail {

inline std::size_t checked_size(Int v, const char *flag) {
  if (v < 0)
    throw DomainError(std::string(flag) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

inline std::vector<Partition> parse_gens(const std::string &text) {
  return io::partitions_from_json(io::parse_json(text));
}

// "e<j>" (diagonal tripotent of rank j), "zero", or a JSON matrix whose
// entries are integers or "p/q" strings.
inline RationalMatrix parse_point(const std::string &text, const TriplePars &pars) {
  if (text == "zero" || text == "0")
    return RationalMatrix(pars.r(), pars.s());
  if (text.size() >= 2 && text[0] == 'e') {
    std::size_t used = 0;
    long long j = -1;
    try {
      j = std::stoll(text.substr(1), &used);
    } catch (const std::exception &) {
      throw DomainError("malformed point '" + text + "'");
    }
    if (used != text.size() - 1 || j < 0)
      throw DomainError("malformed point '" + text + "'");
    return diagonal_tripotent<Rational>(static_cast<std::size_t>(j), pars);
  }
  json m = io::parse_json(text);
  if (!m.is_array() || m.size() != pars.r())
    throw DomainError("point must be an r x s JSON matrix");
  RationalMatrix out(pars.r(), pars.s());
  for (std::size_t i = 0; i < pars.r(); ++i) {
    if (!m[i].is_array() || m[i].size() != pars.s())
      throw DomainError("point must be an r x s JSON matrix");
    for (std::size_t j = 0; j < pars.s(); ++j) {
      const json &x = m[i][j];
      if (x.is_number_integer())
        out(i, j) = Rational(x.get<Int>());
      else if (x.is_string())
        out(i, j) = parse_rational(x.get<std::string>());
      else
        throw DomainError("matrix entries must be integers or \"p/q\" strings");
    }
  }
  return out;
}

} // namespace detail

inline Result run(const std::vector<std::string> &args) {
  CLI::App app{"Partition-ideal calculus on rectangular matrix spaces", "stratmod"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  // Raw flag storage; validated after parsing.
  Int rank = 0, ell = 0, n = 0, r = 0, s = 0, step = 0, weight_bound = 0, samples = 20;
  std::optional<std::uint64_t> seed;
  std::string gens, nu, listed, lambda, point, coeffs = "flat", cparam, aparam = "2";
  double tol = 1e-9;

  auto *minimal_set = app.add_subcommand("minimal-set", "Minimal full generating set of an ideal");
  minimal_set->add_option("--rank", rank, "Rank r")->required();
  minimal_set->add_option("--gens", gens, "JSON list of partitions")->required();

  auto *determinantal = app.add_subcommand("determinantal", "Minimal generators of a joint symbolic power");
  determinantal->add_option("--nu", nu, "Vanishing orders n_1 >= ... >= n_r")->required();
  determinantal->add_option("--listed", listed, "JSON list of partitions to compare against");

  auto *step1 = app.add_subcommand("step1", "Generators of the order-n ideal of the rank <= l matrices");
  step1->add_option("--l", ell, "Stratum rank l < r")->required();
  step1->add_option("--n", n, "Vanishing order")->required();
  step1->add_option("--r", r, "Rank r")->required();

  auto *localize_cmd = app.add_subcommand("localize", "Support of the normal projection at a rank-l tripotent");
  localize_cmd->add_option("--rank", rank, "Rank r")->required();
  localize_cmd->add_option("--gens", gens, "JSON list of partitions")->required();
  localize_cmd->add_option("--l", ell, "Tripotent rank")->required();

  auto *max_fibre = app.add_subcommand("max-fibre", "Peter-Weyl summands of the fibre at the origin");
  max_fibre->add_option("--rank", rank, "Rank r")->required();
  max_fibre->add_option("--gens", gens, "JSON list of partitions")->required();
  max_fibre->add_option("--s", s, "Columns s; with --seed, adds component dimensions");
  max_fibre->add_option("--seed", seed, "Seed for the dimension oracle");

  auto *vorder = app.add_subcommand("vanishing-order", "Exact vanishing order of N^lambda at a point");
  vorder->add_option("--lambda", lambda, "Partition")->required();
  vorder->add_option("--point", point, "e<j>, zero, or a JSON matrix")->required();
  vorder->add_option("--r", r, "Rows r")->required();
  vorder->add_option("--s", s, "Columns s")->required();

  auto *vkernel = app.add_subcommand("verify-kernel", "Check the determinant shift identities for E^lambda");
  vkernel->add_option("--lambda", lambda, "Partition")->required();
  vkernel->add_option("--n", n, "Shift n")->required();
  vkernel->add_option("--r", r, "Rows r")->required();
  vkernel->add_option("--s", s, "Columns s")->required();
  vkernel->add_option("--seed", seed, "Random seed")->required();
  vkernel->add_option("--samples", samples, "Number of random sample points");
  vkernel->add_option("--tol", tol, "Relative rank threshold");

  auto *kexp = app.add_subcommand("k-expansion", "Exact coefficients of the stratified kernel K^s");
  kexp->add_option("--lambda", lambda, "Partition")->required();
  kexp->add_option("--s", step, "Step index s in [1, t]")->required();
  kexp->add_option("--N", weight_bound, "Weight bound on output keys")->required();
  kexp->add_option("--coeffs", coeffs, "flat | pochhammer");
  kexp->add_option("--c", cparam, "Parameter c of the pochhammer weights a_mu = 1/(c)_mu");
  kexp->add_option("--a", aparam, "Multiplicity a (default 2)");

  auto *pwdim = app.add_subcommand("peter-weyl-dim", "Certified dimension of P^lambda");
  pwdim->add_option("--lambda", lambda, "Partition")->required();
  pwdim->add_option("--r", r, "Rows r")->required();
  pwdim->add_option("--s", s, "Columns s")->required();
  pwdim->add_option("--seed", seed, "Random seed")->required();
  pwdim->add_option("--tol", tol, "Relative rank threshold");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    return {0, json{{"help", app.help()}}};
  } catch (const CLI::ParseError &e) {
    return {2, error_object("usage", e.what())};
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json inputs = json::object();
  for (const CLI::Option *opt : app.get_subcommands().front()->get_options())
    if (opt->count() > 0 && opt->get_name() != "--help")
      inputs[opt->get_name()] = opt->results().size() == 1 ? json(opt->results()[0]) : json(opt->results());

  auto report = [&](json body) {
    body["command"] = command;
    body["inputs"] = inputs;
    return Result{0, std::move(body)};
  };

  // Validation and computation are split so input errors never reach compute.
  std::function<Result()> compute;
  try {
    if (command == "minimal-set") {
      auto ideal = IdealSupport::minimal_full_set(detail::checked_size(rank, "--rank"),
                                                  detail::parse_gens(gens));
      compute = [=] {
        json body = io::to_json(ideal);
        body["zero_ideal"] = ideal.is_zero();
        return report(body);
      };
    } else if (command == "determinantal") {
      SymbolicPowerSpec spec(io::parse_int_list(nu));
      std::optional<std::vector<Partition>> user_list;
      if (!listed.empty())
        user_list = detail::parse_gens(listed);
      compute = [=] {
        auto ref = user_list ? *user_list : published_minimal_set(spec);
        auto cmp = compare_with_listed(spec, ref);
        json body = io::to_json(cmp.generators);
        body["paper_listed"] = io::to_json(cmp.listed);
        body["paper_listed_subset_ok"] = cmp.listed_subset_ok;
        body["extra_minimal"] = io::to_json(cmp.extra_minimal);
        body["listed_not_minimal"] = io::to_json(cmp.listed_not_minimal);
        body["discrepancy"] = !cmp.extra_minimal.empty() || !cmp.listed_not_minimal.empty();
        return report(body);
      };
    } else if (command == "step1") {
      auto l = detail::checked_size(ell, "--l");
      auto rr = detail::checked_size(r, "--r");
      if (l >= rr)
        throw DomainError("--l must be < --r");
      if (n < 0)
        throw DomainError("--n must be nonnegative");
      compute = [=] { return report(io::to_json(step1_generators(l, n, rr))); };
    } else if (command == "localize") {
      auto ideal = IdealSupport::minimal_full_set(detail::checked_size(rank, "--rank"),
                                                  detail::parse_gens(gens));
      auto l = detail::checked_size(ell, "--l");
      if (l > ideal.rank())
        throw DomainError("--l exceeds the rank");
      compute = [=] { return report(io::to_json(localize(ideal, l))); };
    } else if (command == "max-fibre") {
      auto ideal = IdealSupport::minimal_full_set(detail::checked_size(rank, "--rank"),
                                                  detail::parse_gens(gens));
      bool with_dims = max_fibre->get_option("--s")->count() > 0;
      if (with_dims && !seed)
        throw DomainError("--seed is required when --s requests dimensions");
      std::optional<TriplePars> pars;
      if (with_dims)
        pars = TriplePars(ideal.rank(), detail::checked_size(s, "--s"));
      compute = [=] {
        json body{{"rank", ideal.rank()}, {"summands", io::to_json(maximal_fibre(ideal))}};
        if (pars) {
          json dims = json::array();
          std::size_t total = 0;
          for (const auto &g : maximal_fibre(ideal)) {
            auto b = span_basis(g, *pars, *seed);
            dims.push_back(b.dim);
            total += b.dim;
          }
          body["dims"] = dims;
          body["total_dim"] = total;
        }
        return report(body);
      };
    } else if (command == "vanishing-order") {
      TriplePars pars(detail::checked_size(r, "--r"), detail::checked_size(s, "--s"));
      Partition lam = io::parse_partition(lambda);
      if (lam.rank() != pars.r())
        throw RankMismatch("--lambda must have r parts");
      RationalMatrix zeta = detail::parse_point(point, pars);
      std::optional<std::size_t> tripotent_rank;
      if (point.size() >= 2 && point[0] == 'e')
        tripotent_rank = static_cast<std::size_t>(std::stoll(point.substr(1)));
      compute = [=] {
        auto order = vanishing_order(conical_poly<Rational>(lam, pars), zeta);
        json body{{"order", order}};
        if (tripotent_rank) {
          auto expected = order_on_stratum(lam, *tripotent_rank);
          body["tail_sum"] = expected;
          body["agrees"] = static_cast<Int>(order) == expected;
        }
        return report(body);
      };
    } else if (command == "verify-kernel") {
      TriplePars pars(detail::checked_size(r, "--r"), detail::checked_size(s, "--s"));
      Partition lam = io::parse_partition(lambda);
      if (lam.rank() != pars.r())
        throw RankMismatch("--lambda must have r parts");
      if (n < 0 || lam.last() < n)
        throw DomainError("--lambda must contain n^(r)");
      if (samples < 1)
        throw DomainError("--samples must be positive");
      if (!(tol > 0))
        throw DomainError("--tol must be positive");
      auto smp = static_cast<std::size_t>(samples);
      SpanOptions opt;
      opt.tol = tol;
      compute = [=] {
        auto rep = verify_shift_identity(lam, n, pars, *seed, smp, opt);
        return report(json{{"c_constant", io::to_json(rep.c_constant)},
                           {"d_lambda", rep.d_lambda},
                           {"d_lower", rep.d_lower},
                           {"residual20", rep.residual20},
                           {"residual21", rep.residual21},
                           {"residual22", rep.residual22},
                           {"certificates",
                            {{"seed", *seed},
                             {"samples", smp},
                             {"tol", opt.tol},
                             {"stable_samples", opt.stable_samples},
                             {"span_samples_lambda", rep.span_samples_lambda},
                             {"span_samples_lower", rep.span_samples_lower}}}});
      };
    } else if (command == "k-expansion") {
      Partition lam = io::parse_partition(lambda);
      Rational a = parse_rational(aparam);
      if (step < 1 || static_cast<std::size_t>(step) > step_form(lam).size())
        throw DomainError("--s must lie in [1, t] where t is the number of steps of --lambda");
      if (weight_bound < 0)
        throw DomainError("--N must be nonnegative");
      CoefficientFn fn;
      if (coeffs == "flat") {
        fn = flat_coefficients();
      } else if (coeffs == "pochhammer") {
        if (cparam.empty())
          throw DomainError("--coeffs pochhammer needs --c");
        fn = pochhammer_coefficients(parse_rational(cparam), a);
      } else {
        throw DomainError("--coeffs must be flat or pochhammer");
      }
      auto st = static_cast<std::size_t>(step);
      compute = [=] { return report(io::to_json(k_s_expansion(fn, lam, st, weight_bound, a))); };
    } else if (command == "peter-weyl-dim") {
      TriplePars pars(detail::checked_size(r, "--r"), detail::checked_size(s, "--s"));
      Partition lam = io::parse_partition(lambda);
      if (lam.rank() != pars.r())
        throw RankMismatch("--lambda must have r parts");
      if (!(tol > 0))
        throw DomainError("--tol must be positive");
      SpanOptions opt;
      opt.tol = tol;
      compute = [=] {
        auto b = span_basis(lam, pars, *seed, opt);
        return report(json{{"d_lambda", b.dim},
                           {"certificates",
                            {{"seed", b.seed},
                             {"tol", b.tol},
                             {"stable_samples", b.stable_samples},
                             {"samples", b.samples},
                             {"residual", b.residual}}}});
      };
    }
  } catch (const Error &e) {
    return {2, error_object(e.kind(), e.what())};
  } catch (const std::exception &e) {
    return {2, error_object("validation", e.what())};
  }

  try {
    return compute();
  } catch (const ConvergenceError &e) {
    return {1, error_object(e.kind(), e.what())};
  } catch (const Error &e) {
    return {2, error_object(e.kind(), e.what())};
  }
}

// argv-style entry point; writes one JSON document to out.
inline int main_entry(int argc, char **argv, std::ostream &out) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Result res = run(args);
  bool pretty = std::find(args.begin(), args.end(), "--pretty") != args.end();
  out << res.render(pretty) << '\n';
  return res.exit_code;
}

} // namespace stratmod::cli
