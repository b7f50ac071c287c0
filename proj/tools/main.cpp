// Copyright 2026 The ekernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ekernel: command-line front end.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad configuration
// or arguments, 3 tolerance not reached, 4 estimator precondition or
// convergence failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ekernel/analysis.hpp"
#include "ekernel/density_io.hpp"
#include "ekernel/kernel.hpp"
#include "ekernel/parallel.hpp"
#include "suites.hpp"

namespace {

using ekernel::Complex;
using ekernel::Error;
using ekernel::ErrorCode;
using ekernel::tools::format_double;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kConfig = 2;
constexpr int kTolNotReached = 3;
constexpr int kEstimator = 4;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kNonConvergent:
    case ErrorCode::kPreconditionFailed:
    case ErrorCode::kRegimeUnverified:
      return kEstimator;
    default:
      return kConfig;
  }
}

// "x,y" or "x".
Complex parse_point(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad point: " + text);
    }
    parts.push_back(v);
  }
  if (parts.empty() || parts.size() > 2) throw Error(ErrorCode::kInvalidArgument, "bad point: " + text);
  const Complex z(parts[0], parts.size() == 2 ? parts[1] : 0.0);
  ekernel::require_finite(z, "point");
  return z;
}

void require_tol(double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential kernel E_g(lambda, w): evaluation and verification"};
  app.require_subcommand(1);

  std::string density_path;
  std::string lambda_text;
  std::string w_text = "0";
  double tol = 1e-6;
  unsigned threads = 1;
  std::uint64_t seed = 1;

  auto* eval = app.add_subcommand("eval", "Evaluate E_g(lambda, w)");
  eval->add_option("density", density_path, "Density config (JSON)")->required();
  eval->add_option("--lambda", lambda_text, "lambda as x,y")->required();
  eval->add_option("--w", w_text, "w as x,y")->required();
  eval->add_option("--tol", tol, "Quadrature tolerance on the exponent");

  std::string bounds_text = "-1,1,-1,1";
  int n = 2;
  std::string out_path;
  auto* grid = app.add_subcommand("grid", "Tabulate E_g(., w) on an n x n grid as CSV");
  grid->add_option("density", density_path, "Density config (JSON)")->required();
  grid->add_option("--w", w_text, "w as x,y")->required();
  grid->add_option("--bounds", bounds_text, "xmin,xmax,ymin,ymax");
  grid->add_option("--n", n, "Nodes per axis (>= 2)");
  grid->add_option("--tol", tol, "Quadrature tolerance");
  grid->add_option("--out", out_path, "Output path (default stdout)");
  grid->add_option("--threads", threads, "Worker threads (results do not depend on it)");

  std::string suite;
  std::optional<double> verify_tol;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(ekernel::tools::suite_names()));
  verify->add_option("--tol", verify_tol, "Override every quadrature tolerance");
  verify->add_option("--threads", threads, "Worker threads (results do not depend on it)");
  verify->add_option("--seed", seed, "Seed for random and Swiss-cheese fixtures");

  std::string mode;
  auto* estimate = app.add_subcommand("estimate", "Local density or Lipschitz exponent at w");
  estimate->add_option("density", density_path, "Density config (JSON)")->required();
  estimate->add_option("--w", w_text, "w as x,y")->required();
  estimate->add_option("--mode", mode, "gamma or lipschitz")
      ->required()
      ->check(CLI::IsMember({"gamma", "lipschitz"}));
  estimate->add_option("--tol", tol, "Quadrature tolerance");
  estimate->add_option("--threads", threads, "Worker threads (results do not depend on it)");

  int holes = 3;
  double budget = 0.3;
  auto* cheese = app.add_subcommand("cheese", "Print a Swiss-cheese density config");
  cheese->add_option("--seed", seed, "Generator seed");
  cheese->add_option("--holes", holes, "Number of holes");
  cheese->add_option("--budget", budget, "Bound on the sum of hole radii (< 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*eval) {
      const auto g = ekernel::load_density_file(density_path);
      const Complex lambda = parse_point(lambda_text);
      const Complex w = parse_point(w_text);
      require_tol(tol);
      const auto v = ekernel::eval_E(g, lambda, w, tol);
      if (v.diagonal_case == ekernel::DiagonalCase::kDiagonalDivergent) {
        std::cout << "value 0 (diagonal divergent)\n";
      } else {
        std::cout << "value " << format_double(v.value.real()) << " " << format_double(v.value.imag())
                  << "\n";
      }
      std::cout << "diagonal_case " << ekernel::to_string(v.diagonal_case) << "\n"
                << "error_estimate " << format_double(v.error_estimate) << "\n";
      if (!v.converged) {
        std::cerr << "tolerance not reached\n";
        return kTolNotReached;
      }
      return kOk;
    }

    if (*grid) {
      const auto g = ekernel::load_density_file(density_path);
      const Complex w = parse_point(w_text);
      require_tol(tol);
      std::vector<double> b;
      std::stringstream ss(bounds_text);
      for (std::string item; std::getline(ss, item, ',');) b.push_back(std::stod(item));
      if (b.size() != 4 || !(b[1] > b[0]) || !(b[3] > b[2])) {
        throw Error(ErrorCode::kInvalidArgument, "bounds must be xmin,xmax,ymin,ymax");
      }
      if (n < 2) throw Error(ErrorCode::kInvalidArgument, "n must be at least 2");
      const std::size_t nn = static_cast<std::size_t>(n);
      std::vector<Complex> nodes(nn * nn);
      for (std::size_t j = 0; j < nn; ++j) {
        for (std::size_t i = 0; i < nn; ++i) {
          const double x = b[0] + (b[1] - b[0]) * static_cast<double>(i) / static_cast<double>(nn - 1);
          const double y = b[2] + (b[3] - b[2]) * static_cast<double>(j) / static_cast<double>(nn - 1);
          nodes[j * nn + i] = Complex(x, y);
        }
      }
      std::vector<ekernel::KernelValue> vals(nodes.size());
      ekernel::parallel_for(nodes.size(), threads,
                            [&](std::size_t k) { vals[k] = ekernel::eval_E(g, nodes[k], w, tol); });
      std::ostringstream csv;
      csv << "x,y,re_E,im_E,abs_E,err\n";
      bool converged = true;
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto& v = vals[k];
        converged = converged && v.converged;
        csv << format_double(nodes[k].real()) << ',' << format_double(nodes[k].imag()) << ','
            << format_double(v.value.real()) << ',' << format_double(v.value.imag()) << ','
            << format_double(std::abs(v.value)) << ',' << format_double(v.error_estimate) << '\n';
      }
      if (out_path.empty()) {
        std::cout << csv.str();
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + out_path);
        f << csv.str();
      }
      return converged ? kOk : kTolNotReached;
    }

    if (*verify) {
      if (verify_tol && !(*verify_tol > 0.0)) {
        std::cerr << "tolerance " << format_double(*verify_tol) << " cannot be reached\n";
        return kTolNotReached;
      }
      const auto report = ekernel::tools::run_suite(suite, {verify_tol, threads, seed});
      std::cout << ekernel::tools::format_report(report);
      if (!report.pass()) return kCheckFailed;
      return report.converged ? kOk : kTolNotReached;
    }

    if (*estimate) {
      const auto g = ekernel::load_density_file(density_path);
      const Complex w = parse_point(w_text);
      require_tol(tol);
      const auto sched = ekernel::RadialSchedule::defaults_for(g);
      if (mode == "gamma") {
        const auto e = ekernel::estimate_density(g, w, sched, tol);
        std::cout << "gamma " << format_double(e.gamma) << "\n";
      } else {
        const auto e = ekernel::estimate_lipschitz_exponent(g, w, sched, 8, tol, threads);
        std::cout << "slope " << format_double(e.fit.slope) << "\n"
                  << "intercept " << format_double(e.fit.intercept) << "\n"
                  << "rms " << format_double(e.fit.rms) << "\n";
      }
      return kOk;
    }

    if (*cheese) {
      std::cout << ekernel::to_json(ekernel::swiss_cheese(seed, holes, budget)) << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << ekernel::to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kOk;
}
