// Copyright 2026 The parrysa Authors.
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

#include "parrysa/parrysa.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "parrysa/attractors.hpp"
#include "parrysa/format.hpp"
#include "parrysa/lyndon.hpp"
#include "parrysa/numeration.hpp"
#include "parrysa/report.hpp"
#include "parrysa/sweep.hpp"
#include "parrysa/words.hpp"

struct psa_param {
  parrysa::ParamWord word;
};

namespace {

using parrysa::ErrorCode;

thread_local std::string last_error;

// Largest prefix on which qn reports checks P_n tightness.
constexpr std::uint64_t kTightnessLimit = std::uint64_t{1} << 16;

psa_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return PSA_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDomain: return PSA_ERR_DOMAIN;
    case ErrorCode::kPrecondition: return PSA_ERR_PRECONDITION;
    case ErrorCode::kCapReached: return PSA_ERR_CAP_REACHED;
    case ErrorCode::kInternal: return PSA_ERR_INTERNAL;
  }
  return PSA_ERR_INTERNAL;
}

psa_status fail(psa_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
psa_status guarded(Fn&& fn) {
  try {
    fn();
    return PSA_OK;
  } catch (const parrysa::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PSA_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(PSA_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) {
    throw parrysa::Error(ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T, typename Array, typename Src>
void fill_array(const Src& src, Array* out) {
  out->data = nullptr;
  out->len = src.size();
  if (src.empty()) return;
  out->data = static_cast<T*>(std::malloc(src.size() * sizeof(T)));
  if (out->data == nullptr) throw std::bad_alloc();
  for (std::size_t i = 0; i < src.size(); ++i) out->data[i] = static_cast<T>(src[i]);
}

std::span<const parrysa::Letter> letters(const uint32_t* w, size_t len) {
  if (len > 0) require(w != nullptr, "word");
  return {w, len};
}

void emit(const parrysa::Json& j, char** out) { *out = copy_string(j.dump()); }

}  // namespace

extern "C" {

const char* psa_version(void) { return "0.1.0"; }

const char* psa_last_error(void) { return last_error.c_str(); }

const char* psa_status_name(psa_status status) {
  switch (status) {
    case PSA_OK: return "ok";
    case PSA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PSA_ERR_DOMAIN: return "domain error";
    case PSA_ERR_PRECONDITION: return "precondition failed";
    case PSA_ERR_CAP_REACHED: return "inconclusive (cap)";
    case PSA_ERR_INTERNAL: return "internal error";
    case PSA_ERR_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown";
}

void psa_string_free(char* s) { std::free(s); }

void psa_u32_array_free(psa_u32_array* a) {
  if (a == nullptr) return;
  std::free(a->data);
  a->data = nullptr;
  a->len = 0;
}

void psa_u64_array_free(psa_u64_array* a) {
  if (a == nullptr) return;
  std::free(a->data);
  a->data = nullptr;
  a->len = 0;
}

psa_status psa_param_parse(const char* text, psa_param** out) {
  return guarded([&] {
    require(text != nullptr, "text");
    require(out != nullptr, "out");
    *out = new psa_param{parrysa::parse_params(text)};
  });
}

psa_status psa_param_create(const uint32_t* digits, size_t k, psa_param** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    const auto d = letters(digits, k);
    *out = new psa_param{parrysa::ParamWord(parrysa::Word(d.begin(), d.end()))};
  });
}

void psa_param_free(psa_param* c) { delete c; }

size_t psa_param_k(const psa_param* c) { return c == nullptr ? 0 : c->word.k(); }

psa_status psa_param_format(const psa_param* c, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    *out = copy_string(parrysa::format_digits(c->word.digits()));
  });
}

psa_status psa_digits_parse(const char* text, psa_u32_array* out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "argument");
    fill_array<uint32_t>(parrysa::parse_digits(text), out);
  });
}

psa_status psa_digits_format(const uint32_t* digits, size_t len, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = copy_string(parrysa::format_digits(letters(digits, len)));
  });
}

psa_status psa_word_un(const psa_param* c, size_t n, psa_u32_array* out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    fill_array<uint32_t>(parrysa::word_un(c->word, n), out);
  });
}

psa_status psa_prefix(const psa_param* c, uint64_t m, psa_u32_array* out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    fill_array<uint32_t>(parrysa::prefix(c->word, m), out);
  });
}

psa_status psa_length_un(const psa_param* c, size_t n, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    *out = copy_string(parrysa::length_un(c->word, n).str());
  });
}

psa_status psa_words_json(const psa_param* c, size_t upto, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    emit(parrysa::words_report(c->word, upto), out);
  });
}

psa_status psa_rep(const psa_param* c, const char* n, psa_u32_array* out) {
  return guarded([&] {
    require(c != nullptr && n != nullptr && out != nullptr, "argument");
    fill_array<uint32_t>(parrysa::rep(c->word, parrysa::parse_natural(n)), out);
  });
}

psa_status psa_greedy_rep(const psa_param* c, const char* n, psa_u32_array* out) {
  return guarded([&] {
    require(c != nullptr && n != nullptr && out != nullptr, "argument");
    fill_array<uint32_t>(parrysa::greedy_rep(c->word, parrysa::parse_natural(n)), out);
  });
}

psa_status psa_val(const psa_param* c, const uint32_t* digits, size_t len,
                   int checked, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    const auto d = letters(digits, len);
    const parrysa::BigInt v =
        checked ? parrysa::val(c->word, d) : parrysa::val_unchecked(c->word, d);
    *out = copy_string(v.str());
  });
}

psa_status psa_is_greedy(const psa_param* c, int* out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    *out = parrysa::is_greedy(c->word) ? 1 : 0;
  });
}

psa_status psa_automaton_dot(const psa_param* c, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    *out = copy_string(parrysa::build_automaton(c->word).to_dot());
  });
}

psa_status psa_enumerate_json(const psa_param* c, size_t count, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    parrysa::Json j = parrysa::report_header("enumerate", c->word);
    parrysa::Json words = parrysa::Json::array();
    for (const auto& w : parrysa::enumerate_language(c->word, count)) {
      words.push_back(parrysa::format_digits(w));
    }
    j["words"] = std::move(words);
    emit(j, out);
  });
}

psa_status psa_automatic_letter(const psa_param* c, const char* n, uint32_t* out) {
  return guarded([&] {
    require(c != nullptr && n != nullptr && out != nullptr, "argument");
    *out = parrysa::automatic_letter(c->word, parrysa::parse_natural(n));
  });
}

psa_status psa_reduce_parry_json(const psa_param* c, size_t sigma_len, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    const auto reduction = parrysa::reduce_parry(c->word);
    parrysa::Json j = parrysa::report_header("reduce", c->word);
    j["reduction"] = parrysa::to_json(reduction);
    j["sigma_prefix"] = parrysa::format_digits(
        parrysa::sigma_project(reduction, parrysa::prefix(c->word, sigma_len)));
    emit(j, out);
  });
}

psa_status psa_duval_json(const uint32_t* w, size_t len, int inverse_order,
                          char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    const auto ord = inverse_order ? parrysa::Order::kInverse : parrysa::Order::kStandard;
    const auto word = letters(w, len);
    const auto fact = parrysa::duval_factorization(word, ord);
    parrysa::Json j;
    j["schema"] = parrysa::kSchemaVersion;
    j["command"] = "duval";
    j["word"] = parrysa::format_digits(word);
    j["order"] = inverse_order ? "inverse" : "standard";
    parrysa::Json factors = parrysa::Json::array();
    for (const auto& f : fact.factors) factors.push_back(parrysa::format_digits(f));
    j["factors"] = std::move(factors);
    j["anti_lyndon"] = parrysa::is_anti_lyndon(word);
    j["longest_anti_lyndon_prefix"] =
        parrysa::format_digits(parrysa::longest_anti_lyndon_prefix(word));
    emit(j, out);
  });
}

psa_status psa_is_anti_lyndon(const uint32_t* w, size_t len, int* out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = parrysa::is_anti_lyndon(letters(w, len)) ? 1 : 0;
  });
}

psa_status psa_is_attractor(const uint32_t* w, size_t len, const uint64_t* positions,
                            size_t count, int* out) {
  return guarded([&] {
    require(out != nullptr, "out");
    if (count > 0) require(positions != nullptr, "positions");
    const auto gamma = parrysa::make_attractor(
        std::vector<parrysa::Position>(positions, positions + count), len);
    *out = parrysa::is_attractor(letters(w, len), gamma) ? 1 : 0;
  });
}

psa_status psa_attractor_for_prefix(const psa_param* c, uint64_t m, int verify,
                                    psa_u64_array* out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    const auto a = parrysa::attractor_for_prefix(c->word, m, verify != 0);
    fill_array<uint64_t>(a.attractor.positions, out);
  });
}

psa_status psa_smallest_attractor(const uint32_t* w, size_t len, size_t cap,
                                  psa_u64_array* out) {
  return guarded([&] {
    require(out != nullptr, "out");
    const auto e = parrysa::smallest_attractor(
        letters(w, len), cap == 0 ? parrysa::kDefaultExactCap : cap);
    fill_array<uint64_t>(e.witness.positions, out);
  });
}

psa_status psa_p_n(const psa_param* c, size_t n, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    *out = copy_string(parrysa::p_n(c->word, n).str());
  });
}

psa_status psa_q_n(const psa_param* c, size_t n, int direct, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    const auto q = direct ? parrysa::q_n_direct(c->word, n) : parrysa::q_n_formula(c->word, n);
    *out = copy_string(q.str());
  });
}

psa_status psa_attractor_json(const psa_param* c, uint64_t m, int minimal,
                              int verify, int zero_based, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    parrysa::Json j = parrysa::report_header("attractor", c->word);
    if (minimal) {
      const auto w = parrysa::prefix(c->word, m);
      const auto e = parrysa::smallest_attractor(w);
      j["attractor"] = parrysa::to_json(e.witness, zero_based != 0);
      j["attractor"]["rule"] = "exact_minimum";
    } else {
      const auto a = parrysa::attractor_for_prefix(c->word, m, verify != 0);
      j["attractor"] = parrysa::to_json(a, zero_based != 0);
    }
    j["verified"] = verify != 0;
    emit(j, out);
  });
}

psa_status psa_check_json(const psa_param* c, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    emit(parrysa::check_report(c->word), out);
  });
}

psa_status psa_ijl_json(const psa_param* c, size_t n_max, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    parrysa::Json j = parrysa::report_header("ijl", c->word);
    parrysa::Json rows = parrysa::Json::array();
    for (const auto& row : parrysa::ijl_sequences(c->word, n_max)) {
      rows.push_back(parrysa::to_json(row));
    }
    j["rows"] = std::move(rows);
    emit(j, out);
  });
}

psa_status psa_profile_json(const psa_param* c, uint64_t m_max, size_t cap,
                            int zero_based, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    parrysa::Json j = parrysa::report_header("profile", c->word);
    j["profile"] = parrysa::to_json(
        parrysa::profile(c->word, m_max, cap == 0 ? parrysa::kDefaultExactCap : cap),
        zero_based != 0);
    emit(j, out);
  });
}

psa_status psa_conjecture_json(const psa_param* c, uint64_t m_max, size_t cap,
                               char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    parrysa::Json j = parrysa::report_header("conjecture", c->word);
    j["conjecture"] = parrysa::to_json(parrysa::conjecture_test(
        c->word, m_max, cap == 0 ? parrysa::kDefaultExactCap : cap));
    emit(j, out);
  });
}

psa_status psa_qn_json(const psa_param* c, size_t n_max, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "argument");
    parrysa::Json j = parrysa::report_header("qn", c->word);
    const auto u = parrysa::length_table(c->word, n_max + 1);
    parrysa::Json rows = parrysa::Json::array();
    for (size_t n = 0; n <= n_max; ++n) {
      parrysa::Json row;
      row["n"] = n;
      row["U"] = parrysa::to_json(u[n]);
      row["P"] = parrysa::to_json(parrysa::p_n(c->word, n));
      row["Q"] = parrysa::to_json(parrysa::q_n_formula(c->word, n));
      try {
        row["Q_direct"] = parrysa::to_json(parrysa::q_n_direct(c->word, n));
      } catch (const parrysa::Error& e) {
        if (e.code() != ErrorCode::kCapReached) throw;
        row["Q_direct"] = nullptr;
      }
      // Observed only: does Gamma_n already fail one letter below P_n?
      const parrysa::BigInt below = parrysa::p_n(c->word, n) - 1;
      if (below >= u[n] && below <= kTightnessLimit) {
        const auto m = static_cast<std::uint64_t>(below);
        const auto gamma = parrysa::make_attractor(
            parrysa::gamma_n(c->word, static_cast<std::int64_t>(n)), m);
        row["P_tight"] = !parrysa::is_attractor(parrysa::prefix(c->word, m), gamma);
      } else {
        row["P_tight"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    emit(j, out);
  });
}

psa_status psa_sweep(const psa_sweep_spec* spec, psa_format format, char** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "argument");
    parrysa::SweepSpec s;
    s.k_min = spec->k_min;
    s.k_max = spec->k_max;
    s.digit_max = spec->digit_max;
    s.only_greedy = spec->only_greedy != 0;
    s.only_minimal_family = spec->only_minimal_family != 0;
    s.m_max = spec->m_max;
    s.jobs = spec->jobs;
    if (spec->exact_cap != 0) s.exact_cap = spec->exact_cap;
    const auto rows = parrysa::run_sweep(s);
    if (format == PSA_FORMAT_JSON) {
      emit(parrysa::sweep_json(s, rows), out);
    } else {
      *out = copy_string(parrysa::sweep_csv(rows));
    }
  });
}

}  // extern "C"
