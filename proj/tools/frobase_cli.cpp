// Copyright 2026 frobase developers
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

// Command-line front end; talks to the core exclusively through the C API.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "frobase.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;

int status_to_exit(frb_status s) {
  switch (s) {
    case FRB_OK: return kExitPass;
    case FRB_E_INPUT: return kExitInputError;
    case FRB_E_VERIFY:
    case FRB_E_INTERNAL: return kExitVerifyFailure;
  }
  return kExitVerifyFailure;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(kExitInputError);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CtxDeleter {
  void operator()(frb_ctx* c) const { frb_ctx_free(c); }
};
struct FrobDeleter {
  void operator()(frb_frobenius* f) const { frb_frobenius_free(f); }
};
struct CovDeleter {
  void operator()(frb_covering* c) const { frb_covering_free(c); }
};

using CtxPtr = std::unique_ptr<frb_ctx, CtxDeleter>;
using FrobPtr = std::unique_ptr<frb_frobenius, FrobDeleter>;
using CovPtr = std::unique_ptr<frb_covering, CovDeleter>;

FrobPtr parse_frobenius(frb_ctx* ctx, const std::string& path) {
  const std::string text = read_file(path);
  frb_frobenius* f = nullptr;
  if (frb_frobenius_parse(ctx, text.c_str(), &f) != FRB_OK) {
    std::cerr << "error: " << path << ": " << frb_last_error(ctx) << "\n";
    std::exit(kExitInputError);
  }
  return FrobPtr(f);
}

CovPtr parse_covering(frb_ctx* ctx, const std::string& path) {
  const std::string text = read_file(path);
  frb_covering* c = nullptr;
  if (frb_covering_parse(ctx, text.c_str(), &c) != FRB_OK) {
    std::cerr << "error: " << path << ": " << frb_last_error(ctx) << "\n";
    std::exit(kExitInputError);
  }
  return CovPtr(c);
}

int emit(frb_ctx* ctx, frb_status status, char* report) {
  if (report != nullptr) {
    std::fputs(report, stdout);
    frb_string_free(report);
  }
  if (status != FRB_OK) std::cerr << "error: " << frb_last_error(ctx) << "\n";
  return status_to_exit(status);
}

double default_tol() {
  if (const char* env = std::getenv("FROBASE_TOL")) {
    try {
      return std::stod(env);
    } catch (...) {
      std::cerr << "error: FROBASE_TOL is not a number\n";
      std::exit(kExitInputError);
    }
  }
  return 1e-9;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frobase: verified computations with Frobenius structures over finite base spaces"};
  app.require_subcommand(1);

  double tol = default_tol();
  uint64_t seed = 7;
  std::string format = "json";
  app.add_option("--tol", tol, "verification tolerance")->capture_default_str();
  app.add_option("--seed", seed, "seed for all randomized procedures")->capture_default_str();
  app.add_option("--format", format, "output format: json or md")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();

  std::string path, path2, path3, laws;
  std::string sizes = "small";
  int rounds = 20;

  auto* verify = app.add_subcommand("verify", "check the Frobenius law suite of a structure");
  verify->add_option("path", path, "structure JSON file")->required();
  verify->add_option("--laws", laws, "comma-separated laws that must pass");

  auto* classify = app.add_subcommand("classify", "Artin-Wedderburn block sizes per point");
  classify->add_option("path", path, "structure JSON file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Gelfand spectrum of a commutative structure");
  spectrum->add_option("path", path, "structure JSON file")->required();

  auto* fromcov = app.add_subcommand("from-covering", "Frobenius structure of a finite covering");
  fromcov->add_option("path", path, "covering JSON file")->required();

  auto* rebase = app.add_subcommand("rebase", "rebase over the center, with transitivity report");
  rebase->add_option("path", path, "structure JSON file")->required();

  auto* cpcheck = app.add_subcommand("cp-check", "complete positivity of a morphism");
  cpcheck->add_option("source", path, "source structure JSON file")->required();
  cpcheck->add_option("target", path2, "target structure JSON file")->required();
  cpcheck->add_option("morphism", path3, "morphism JSON file")->required();

  auto* coherence = app.add_subcommand("coherence", "seeded bicategory coherence checks");
  coherence->add_option("--rounds", rounds, "number of seeded instances")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "run the seeded property suite");
  selftest->add_option("--sizes", sizes, "small or full")
      ->check(CLI::IsMember({"small", "full"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  CtxPtr ctx(frb_ctx_new());
  const int markdown = format == "md" ? 1 : 0;
  const auto started = std::chrono::steady_clock::now();
  int exit_code = kExitPass;

  if (*verify) {
    FrobPtr f = parse_frobenius(ctx.get(), path);
    char* report = nullptr;
    exit_code = emit(ctx.get(), frb_verify(ctx.get(), f.get(), tol,
                                           laws.empty() ? nullptr : laws.c_str(), markdown,
                                           &report),
                     report);
  } else if (*classify) {
    FrobPtr f = parse_frobenius(ctx.get(), path);
    char* report = nullptr;
    exit_code = emit(ctx.get(), frb_classify(ctx.get(), f.get(), tol, seed, &report), report);
  } else if (*spectrum) {
    FrobPtr f = parse_frobenius(ctx.get(), path);
    char* report = nullptr;
    exit_code = emit(ctx.get(), frb_spectrum(ctx.get(), f.get(), tol, seed, &report), report);
  } else if (*fromcov) {
    CovPtr c = parse_covering(ctx.get(), path);
    char* report = nullptr;
    exit_code = emit(ctx.get(), frb_from_covering(ctx.get(), c.get(), &report), report);
  } else if (*rebase) {
    FrobPtr f = parse_frobenius(ctx.get(), path);
    char* report = nullptr;
    exit_code = emit(ctx.get(), frb_rebase(ctx.get(), f.get(), tol, seed, &report), report);
  } else if (*cpcheck) {
    FrobPtr f1 = parse_frobenius(ctx.get(), path);
    FrobPtr f2 = parse_frobenius(ctx.get(), path2);
    const std::string mor = read_file(path3);
    char* report = nullptr;
    exit_code = emit(ctx.get(), frb_cp_check(ctx.get(), f1.get(), f2.get(), mor.c_str(), tol,
                                             seed, &report),
                     report);
  } else if (*coherence) {
    char* report = nullptr;
    exit_code = emit(ctx.get(), frb_coherence(ctx.get(), seed, rounds, &report), report);
  } else if (*selftest) {
    char* report = nullptr;
    exit_code = emit(ctx.get(),
                     frb_selftest(ctx.get(), seed, sizes.c_str(), tol, markdown, &report), report);
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  // Wall clock stays out of stdout so reports are byte-identical per seed.
  std::cerr << "# wall-clock: " << elapsed.count() << " ms\n";
  return exit_code;
}
