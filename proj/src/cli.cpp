/*
 * Copyright 2026 The hyperpf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hyperpf/cli.hpp"

#include <CLI11.hpp>

#include <vector>

#include "hyperpf/compose.hpp"
#include "hyperpf/error.hpp"
#include "hyperpf/hyperpfaffian.hpp"
#include "hyperpf/involution.hpp"
#include "hyperpf/random.hpp"
#include "hyperpf/spec_file.hpp"

namespace hyperpf::cli {

namespace {

void guard_partitions(int n, int k, bool force) {
  const Integer count = partition_count(n, k);
  if (!force && count > kPartitionGuard) {
    throw SizeLimitExceeded("Pi_{" + std::to_string(n) + "," + std::to_string(k) + "} has " +
                            count.get_str() + " partitions; pass --force to run anyway");
  }
}

/// Runs `body`, mapping input errors to exit code 2.
template <class Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

std::vector<Rational> random_point(int n, Lcg& rng) {
  std::vector<Rational> point;
  for (int i = 0; i < n; ++i) point.emplace_back(rng.uniform(-30, 30));
  return point;
}

std::string render_point(const std::vector<Rational>& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(point[i]);
  }
  return out + ")";
}

}  // namespace

int cmd_compute(const std::filesystem::path& input, const std::string& method, bool force,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SkewSpec spec = read_spec_file(input);
    Polynomial result;
    if (method == "definition") {
      guard_partitions(spec.n(), spec.k(), force);
      result = pf_definition(skew_function(spec));
    } else if (method == "exterior") {
      guard_partitions(spec.n(), spec.k(), force);
      result = pf_exterior(skew_function(spec));
    } else if (method == "theorem") {
      if (!spec.has_theorem_degree()) {
        err << "error: method 'theorem' needs degree "
            << theorem_degree(spec.n(), spec.k()) << ", spec has degree " << spec.degree()
            << '\n';
        return kUsage;
      }
      result = pf_closed_form(spec);
    } else {
      err << "error: unknown method '" << method << "'\n";
      return kUsage;
    }
    out << result.to_string() << '\n';
    return kOk;
  });
}

int cmd_verify(const VerifyOptions& options, bool force, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const int n = options.n;
    const int k = options.k;
    check_shape(n, k);
    if (options.trials < 0 || options.points < 1) {
      throw InvalidArgument("trials must be >= 0 and points >= 1");
    }
    std::string mode = options.mode.empty() ? (n <= 8 ? "symbolic" : "points") : options.mode;
    if (mode != "symbolic" && mode != "points") {
      throw InvalidArgument("unknown mode '" + mode + "'");
    }
    if (mode == "symbolic" && n > 8 && !force) {
      throw SizeLimitExceeded("symbolic verification above n = 8 needs --force");
    }
    guard_partitions(n, k, force);

    Lcg rng(options.seed);
    for (int t = 1; t <= options.trials; ++t) {
      const SkewSpec spec = random_spec(n, k, rng);
      if (mode == "symbolic") {
        const SkewFunction<Polynomial> f = skew_function(spec);
        const Polynomial definition = pf_definition(f);
        const Polynomial exterior = pf_exterior(f);
        const Polynomial closed = pf_closed_form(spec);
        if (definition != exterior || definition != closed) {
          out << "MISMATCH in trial " << t << "\nspec: " << write_spec_json(spec)
              << "\ndefinition: " << definition.to_string()
              << "\nexterior: " << exterior.to_string()
              << "\ntheorem: " << closed.to_string() << '\n';
          return kViolated;
        }
      } else {
        for (int q = 1; q <= options.points; ++q) {
          const std::vector<Rational> point = random_point(n, rng);
          const SkewFunction<Rational> f = skew_function_at(spec, point);
          const Rational definition = pf_definition(f);
          const Rational exterior = pf_exterior(f);
          const Rational closed = pf_closed_form_at(spec, point);
          if (definition != exterior || definition != closed) {
            out << "MISMATCH in trial " << t << " at point " << render_point(point)
                << "\nspec: " << write_spec_json(spec) << "\ndefinition: " << to_string(definition)
                << "\nexterior: " << to_string(exterior) << "\ntheorem: " << to_string(closed)
                << '\n';
            return kViolated;
          }
        }
      }
      out << "trial " << t << ": definition = exterior = theorem\n";
    }
    out << "verified n=" << n << " k=" << k << " mode=" << mode << " trials=" << options.trials;
    if (mode == "points") out << " points=" << options.points;
    out << '\n';
    return kOk;
  });
}

int cmd_coeffs(int n, int k, bool force, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_shape(n, k);
    if (n > 16 && !force) {
      throw SizeLimitExceeded("listing R_{n,k} above n = 16 needs --force");
    }
    std::size_t total = 0;
    std::size_t negative = 0;
    for_each_composition_set(n, k, [&](const CompositionSet& beta) {
      const int sign = beta_sign(beta);
      out << (sign > 0 ? '+' : '-');
      for (const Composition& r : beta.compositions()) out << " a_{" << r.to_string() << '}';
      out << '\n';
      ++total;
      if (sign < 0) ++negative;
    });
    out << "# " << total << " terms, " << negative << " negative\n";
    return kOk;
  });
}

int cmd_torelli(int n, bool force, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Rational constant = torelli_constant(n);
    guard_partitions(n, 2, force);
    Polynomial f = 1;
    const Polynomial difference = Polynomial::variable(2) - Polynomial::variable(1);
    for (int i = 1; i < n; ++i) f *= difference;
    const Polynomial pfaffian = pf_definition(skew_function(f, n, 2));
    const Polynomial expected = constant * vandermonde(static_cast<unsigned>(n));
    if (pfaffian != expected) {
      out << "constant = " << to_string(constant) << ", MISMATCH\n"
          << "pfaffian: " << pfaffian.to_string() << '\n';
      return kViolated;
    }
    out << "constant = " << to_string(constant) << ", verified\n";
    return kOk;
  });
}

int cmd_involution(int n, int k, bool force, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InvolutionReport r = check_involution(n, k, force);
    out << "|W| = " << r.total << ", |W^r| = " << r.repeated << ", |W^d| = " << r.distinct
        << " (n!|R| = " << r.expected_distinct.get_str() << ")\n";
    if (!r.ok()) {
      out << "involution checks FAILED:"
          << (r.involutive ? "" : " not-involutive") << (r.fixed_point_free ? "" : " fixed-point")
          << (r.stays_repeated ? "" : " leaves-W^r") << (r.sign_reversing ? "" : " sign")
          << (r.preserves_coefficient ? "" : " coefficient")
          << (r.preserves_monomial ? "" : " monomial")
          << (r.sign_factorization ? "" : " sign-factorization") << (r.bijective ? "" : " bijection")
          << (r.repeated_sum_vanishes ? "" : " W^r-sum") << '\n';
      return kViolated;
    }
    out << "W^r sum = 0, φ²=id on " << r.repeated << " elements, verified\n";
    return kOk;
  });
}

int cmd_compose(int k, int n, int p, int trials, std::uint64_t seed, bool force,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_composition_shape(k, n, p);
    guard_partitions(p, k, force);
    guard_partitions(p, n, force);
    const Rational constant = composition_constant(k, n, p);
    Lcg rng(seed);
    for (int t = 1; t <= trials; ++t) {
      const SkewFunction<Rational> f = random_skew_function(p, k, rng);
      const CompositionReport<Rational> report = verify_composition(f, n);
      if (!report.holds) {
        out << "constant = " << to_string(constant) << ", MISMATCH in trial " << t
            << ": Pf(g) = " << to_string(report.lhs) << ", constant*Pf(f) = "
            << to_string(report.rhs) << '\n';
        return kViolated;
      }
    }
    out << "constant = " << to_string(constant) << ", verified\n";
    return kOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hyperpfaffian evaluation and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool force = false;
  app.add_flag("--force", force, "Run enumerations beyond the default size guards");

  std::string input;
  std::string method;
  auto* compute = app.add_subcommand("compute", "Hyperpfaffian of a spec file");
  compute->add_option("--input", input, "JSON spec file")->required();
  compute->add_option("--method", method, "definition | exterior | theorem")->required();

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Cross-check the three algorithms on random specs");
  verify->add_option("--n", verify_options.n)->required();
  verify->add_option("--k", verify_options.k)->required();
  verify->add_option("--trials", verify_options.trials);
  verify->add_option("--seed", verify_options.seed);
  verify->add_option("--mode", verify_options.mode, "symbolic | points");
  verify->add_option("--points", verify_options.points);

  int n = 0;
  int k = 0;
  int p = 0;
  int trials = 5;
  std::uint64_t seed = 1;
  auto* coeffs = app.add_subcommand("coeffs", "List the signed terms of the closed-form constant");
  coeffs->add_option("--n", n)->required();
  coeffs->add_option("--k", k)->required();

  auto* torelli = app.add_subcommand("torelli", "Check the Torelli Pfaffian constant");
  torelli->add_option("--n", n)->required();

  auto* involution = app.add_subcommand("involution", "Exhaustive sign-reversing involution suite");
  involution->add_option("--n", n)->required();
  involution->add_option("--k", k)->required();

  auto* compose = app.add_subcommand("compose", "Check the hyperpfaffian composition identity");
  compose->add_option("--k", k)->required();
  compose->add_option("--n", n)->required();
  compose->add_option("--p", p)->required();
  compose->add_option("--trials", trials);
  compose->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (compute->parsed()) return cmd_compute(input, method, force, out, err);
  if (verify->parsed()) return cmd_verify(verify_options, force, out, err);
  if (coeffs->parsed()) return cmd_coeffs(n, k, force, out, err);
  if (torelli->parsed()) return cmd_torelli(n, force, out, err);
  if (involution->parsed()) return cmd_involution(n, k, force, out, err);
  if (compose->parsed()) return cmd_compose(k, n, p, trials, seed, force, out, err);
  return kUsage;
}

}  // namespace hyperpf::cli
