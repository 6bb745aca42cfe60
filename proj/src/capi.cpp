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

#include "frobase.h"

#include <cstring>
#include <sstream>
#include <string>

#include "frobase/bimod.hpp"
#include "frobase/cpstar.hpp"
#include "frobase/json_io.hpp"
#include "frobase/selftest.hpp"

using namespace frobase;

struct frb_ctx {
  std::string last_error;
};

struct frb_frobenius {
  FrobeniusStructure value;
};

struct frb_covering {
  Covering value;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
frb_status guarded(frb_ctx* ctx, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    if (ctx) ctx->last_error = e.what();
    return FRB_E_INPUT;
  } catch (const VerificationError& e) {
    if (ctx) ctx->last_error = e.what();
    return FRB_E_VERIFY;
  } catch (const std::exception& e) {
    if (ctx) ctx->last_error = e.what();
    return FRB_E_INTERNAL;
  }
}

std::vector<Law> parse_laws(const char* laws) {
  if (laws == nullptr || *laws == '\0')
    return {Law::Unit, Law::Associativity, Law::Frobenius};
  std::vector<Law> out;
  std::stringstream ss(laws);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool found = false;
    for (Law l : all_laws())
      if (law_name(l) == item) {
        out.push_back(l);
        found = true;
      }
    if (!found) throw InputError("unknown law '" + item + "'");
  }
  return out;
}

std::string render_report(const Json& j, int markdown) {
  if (!markdown) return j.dump(2) + "\n";
  std::ostringstream out;
  out << "# " << j.value("command", "report") << "\n\n```json\n" << j.dump(2) << "\n```\n";
  return out.str();
}

}  // namespace

extern "C" {

frb_ctx* frb_ctx_new(void) { return new frb_ctx(); }

void frb_ctx_free(frb_ctx* ctx) { delete ctx; }

const char* frb_last_error(const frb_ctx* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

const char* frb_version(void) { return version_string(); }

void frb_string_free(char* s) { delete[] s; }

frb_status frb_frobenius_parse(frb_ctx* ctx, const char* json, frb_frobenius** out) {
  return guarded(ctx, [&]() {
    if (json == nullptr || out == nullptr) throw InputError("null argument");
    auto holder = new frb_frobenius{frobenius_from_json(parse_json(json))};
    *out = holder;
    return FRB_OK;
  });
}

void frb_frobenius_free(frb_frobenius* f) { delete f; }

frb_status frb_covering_parse(frb_ctx* ctx, const char* json, frb_covering** out) {
  return guarded(ctx, [&]() {
    if (json == nullptr || out == nullptr) throw InputError("null argument");
    auto holder = new frb_covering{covering_from_json(parse_json(json))};
    *out = holder;
    return FRB_OK;
  });
}

void frb_covering_free(frb_covering* c) { delete c; }

frb_status frb_verify(frb_ctx* ctx, const frb_frobenius* f, double tol, const char* laws,
                      int markdown, char** report) {
  return guarded(ctx, [&]() {
    if (f == nullptr || report == nullptr) throw InputError("null argument");
    const std::vector<Law> requested = parse_laws(laws);
    const LawReport lr = verify_laws(f->value, tol);
    Json j = law_report_to_json(lr);
    j["command"] = "verify";
    Json names = Json::array();
    for (Law l : requested) names.push_back(law_name(l));
    j["requested"] = std::move(names);
    std::string failed;
    for (Law l : requested)
      if (!lr.passes(l)) {
        failed = law_name(l);
        break;
      }
    j["failed"] = failed;
    *report = dup_string(render_report(j, markdown));
    if (!failed.empty()) {
      if (ctx) ctx->last_error = "law '" + failed + "' failed";
      return FRB_E_VERIFY;
    }
    return FRB_OK;
  });
}

frb_status frb_classify(frb_ctx* ctx, const frb_frobenius* f, double tol, uint64_t seed,
                        char** report) {
  return guarded(ctx, [&]() {
    if (f == nullptr || report == nullptr) throw InputError("null argument");
    const auto sizes = classify_fibers(f->value, seed, tol);
    Json per_point = Json::object();
    for (int t = 0; t < f->value.carrier.points(); ++t)
      per_point[f->value.carrier.base().label(t)] = sizes[t];
    Json j{{"command", "classify"}, {"seed", seed}, {"tolerance", tol},
           {"blocks", std::move(per_point)}};
    *report = dup_string(render_report(j, 0));
    return FRB_OK;
  });
}

frb_status frb_spectrum(frb_ctx* ctx, const frb_frobenius* f, double tol, uint64_t seed,
                        char** report) {
  return guarded(ctx, [&]() {
    if (f == nullptr || report == nullptr) throw InputError("null argument");
    const SpectrumResult sr = spectrum(f->value, seed, tol);
    Json chars = Json::object();
    for (int t = 0; t < f->value.carrier.points(); ++t) {
      Json rows = Json::array();
      const Mat& ch = sr.characters[t];
      for (Eigen::Index r = 0; r < ch.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < ch.cols(); ++c)
          row.push_back(Json::array({ch(r, c).real(), ch(r, c).imag()}));
        rows.push_back(std::move(row));
      }
      chars[f->value.carrier.base().label(t)] = std::move(rows);
    }
    Json j{{"command", "spectrum"}, {"seed", seed}, {"tolerance", tol},
           {"covering", to_json(sr.covering)}, {"characters", std::move(chars)}};
    *report = dup_string(render_report(j, 0));
    return FRB_OK;
  });
}

frb_status frb_from_covering(frb_ctx* ctx, const frb_covering* p, char** frobenius_json) {
  return guarded(ctx, [&]() {
    if (p == nullptr || frobenius_json == nullptr) throw InputError("null argument");
    const FrobeniusStructure f = frobenius_from_covering(p->value);
    *frobenius_json = dup_string(to_json(f).dump(2) + "\n");
    return FRB_OK;
  });
}

frb_status frb_rebase(frb_ctx* ctx, const frb_frobenius* f, double tol, uint64_t seed,
                      char** report) {
  return guarded(ctx, [&]() {
    if (f == nullptr || report == nullptr) throw InputError("null argument");
    const RebasedStructure rebased = rebase_over_center(f->value, seed, tol);
    const TransitivityReport tr = check_transitivity(f->value, tol, seed);
    Json j{{"command", "rebase"},
           {"seed", seed},
           {"tolerance", tol},
           {"new_base", to_json(rebased.new_base)},
           {"covering", to_json(rebased.covering_to_old)},
           {"structure", to_json(rebased.structure)},
           {"transitivity",
            Json{{"side_i", tr.side_i},
                 {"side_ii", tr.side_ii},
                 {"verdicts_agree", tr.side_i == tr.side_ii},
                 {"base_laws", law_report_to_json(tr.base_laws)},
                 {"rebased_laws", tr.rebase_ok ? law_report_to_json(tr.rebased_laws) : Json()},
                 {"center_specialisable", tr.center_specialisable}}}};
    *report = dup_string(render_report(j, 0));
    return FRB_OK;
  });
}

frb_status frb_cp_check(frb_ctx* ctx, const frb_frobenius* source, const frb_frobenius* target,
                        const char* morphism_json, double tol, uint64_t seed, char** report) {
  return guarded(ctx, [&]() {
    if (source == nullptr || target == nullptr || morphism_json == nullptr || report == nullptr)
      throw InputError("null argument");
    const BundleMorphism f = morphism_from_json(parse_json(morphism_json),
                                                source->value.carrier, target->value.carrier);
    CpContext cp_ctx(source->value, target->value, seed, tol);
    const CpVerdict verdict = is_completely_positive(cp_ctx, f, tol);
    const auto witness = cpstar_witness(cp_ctx, f, tol);

    Json spectra = Json::array();
    for (const Vec& s : verdict.spectra) {
      Json row = Json::array();
      for (Eigen::Index i = 0; i < s.size(); ++i) row.push_back(s[i].real());
      spectra.push_back(std::move(row));
    }
    Json j{{"command", "cp-check"},
           {"seed", seed},
           {"tolerance", tol},
           {"completely_positive", verdict.completely_positive},
           {"min_choi_eigenvalue", verdict.min_eigenvalue},
           {"hermiticity_defect", verdict.hermiticity_defect},
           {"witness_exists", witness.has_value()},
           {"witness_residual", witness ? witness->factorization_residual : -1.0},
           {"choi_spectra", std::move(spectra)}};
    *report = dup_string(render_report(j, 0));
    return FRB_OK;
  });
}

frb_status frb_coherence(frb_ctx* ctx, uint64_t seed, int rounds, char** report) {
  return guarded(ctx, [&]() {
    if (report == nullptr) throw InputError("null argument");
    Rng rng(seed);
    Json results = Json::array();
    double worst = 0.0;
    for (int i = 0; i < rounds; ++i) {
      std::vector<std::string> la, lb, lc;
      const int na = rng.integer(1, 3), nb = rng.integer(1, 3), nc = rng.integer(1, 3);
      for (int k = 0; k < na; ++k) la.push_back("a" + std::to_string(k));
      for (int k = 0; k < nb; ++k) lb.push_back("b" + std::to_string(k));
      for (int k = 0; k < nc; ++k) lc.push_back("c" + std::to_string(k));
      const BaseSpace a(la), b(lb), c(lc);
      Eigen::MatrixXi de(na, nb), df(nb, nc), dg(nc, na);
      for (int r = 0; r < na; ++r)
        for (int s = 0; s < nb; ++s) de(r, s) = rng.integer(0, 3);
      for (int r = 0; r < nb; ++r)
        for (int s = 0; s < nc; ++s) df(r, s) = rng.integer(0, 3);
      for (int r = 0; r < nc; ++r)
        for (int s = 0; s < na; ++s) dg(r, s) = rng.integer(0, 3);
      const CoherenceReport rep =
          coherence_check(Cell1(a, b, de), Cell1(b, c, df), Cell1(c, a, dg), rng.next());
      worst = std::max({worst, rep.pentagon_residual, rep.triangle_residual,
                        rep.unitarity_residual, rep.interchange_residual});
      results.push_back(Json{{"pentagon", rep.pentagon_residual},
                             {"triangle", rep.triangle_residual},
                             {"unitarity", rep.unitarity_residual},
                             {"interchange", rep.interchange_residual}});
    }
    Json j{{"command", "coherence"}, {"seed", seed}, {"rounds", rounds},
           {"results", std::move(results)}, {"max_residual", worst}};
    *report = dup_string(render_report(j, 0));
    if (worst >= 1e-12) {
      if (ctx) ctx->last_error = "coherence residual " + std::to_string(worst);
      return FRB_E_VERIFY;
    }
    return FRB_OK;
  });
}

frb_status frb_selftest(frb_ctx* ctx, uint64_t seed, const char* sizes, double tol, int markdown,
                        char** report) {
  return guarded(ctx, [&]() {
    if (report == nullptr) throw InputError("null argument");
    const std::string size_str = sizes ? sizes : "small";
    if (size_str != "small" && size_str != "full")
      throw InputError("sizes must be 'small' or 'full'");
    const std::string json_report = selftest_report(seed, size_str, tol, false);
    const int failures = selftest_failures(json_report);
    *report = dup_string(markdown ? selftest_report(seed, size_str, tol, true) : json_report);
    if (failures != 0) {
      if (ctx) ctx->last_error = std::to_string(failures) + " selftest checks failed";
      return FRB_E_VERIFY;
    }
    return FRB_OK;
  });
}

}  // extern "C"
