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

// parrysa: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 usage or malformed input, 2 any other error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parrysa/parrysa.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitError = 2;

class CliError : public std::runtime_error {
 public:
  CliError(psa_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  int exit_code() const {
    return status_ == PSA_ERR_INVALID_ARGUMENT ? kExitUsage : kExitError;
  }

 private:
  psa_status status_;
};

void check(psa_status status) {
  if (status != PSA_OK) throw CliError(status, psa_last_error());
}

struct ParamDeleter {
  void operator()(psa_param* p) const { psa_param_free(p); }
};
using Param = std::unique_ptr<psa_param, ParamDeleter>;

Param parse_param(const std::string& text) {
  psa_param* raw = nullptr;
  check(psa_param_parse(text.c_str(), &raw));
  return Param(raw);
}

std::string take(char* s) {
  std::string out(s);
  psa_string_free(s);
  return out;
}

std::vector<uint32_t> take(psa_u32_array a) {
  std::vector<uint32_t> out(a.data, a.data + a.len);
  psa_u32_array_free(&a);
  return out;
}

std::string digits_text(const std::vector<uint32_t>& d) {
  char* s = nullptr;
  check(psa_digits_format(d.data(), d.size(), &s));
  return take(s);
}

std::vector<uint32_t> parse_digit_word(const std::string& text) {
  psa_u32_array a{};
  check(psa_digits_parse(text.c_str(), &a));
  return take(a);
}

Json parse_json(char* s) { return Json::parse(take(s)); }

std::string positions_text(const Json& positions) {
  std::string out = "{";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(positions[i].get<uint64_t>());
  }
  return out + "}";
}

std::string flag(const Json& b) { return b.get<bool>() ? "true" : "false"; }

struct Options {
  std::string out_path;
  bool json = false;
};

void emit(const Options& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out_path);
  if (!file) throw CliError(PSA_ERR_INVALID_ARGUMENT, "cannot open " + opts.out_path);
  file << text;
}

void emit_json(const Options& opts, const Json& j) { emit(opts, j.dump(2) + "\n"); }

// "2..3" or "3"
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CliError(PSA_ERR_INVALID_ARGUMENT, "malformed range \"" + text + "\"");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String attractors and numeration for simple-Parry morphisms"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opts;
  app.add_option("--out", opts.out_path, "Write output to a file instead of stdout");
  app.add_flag("--json", opts.json, "Emit a JSON report (schema 1)");

  std::string c_text;
  std::string n_text;
  std::string digits;
  std::uint64_t m = 0;
  std::size_t count = 0;
  std::size_t cap = 0;
  bool greedy = false;
  bool unchecked = false;
  bool dot = false;
  bool minimal = false;
  bool zero_based = false;
  bool verify = false;
  bool inverse = false;

  auto* words = app.add_subcommand("words", "Print u_n and U_n, or a prefix of u");
  words->add_option("c", c_text, "Parameter word")->required();
  auto* upto_opt = words->add_option("--upto", count, "Last n of the table");
  auto* prefix_opt = words->add_option("--prefix", m, "Print the length-m prefix");
  upto_opt->excludes(prefix_opt);

  auto* rep_cmd = app.add_subcommand("rep", "Representation of n");
  rep_cmd->add_option("c", c_text)->required();
  rep_cmd->add_option("n", n_text)->required();
  rep_cmd->add_flag("--greedy", greedy, "Also print the integer-greedy representation");

  auto* val_cmd = app.add_subcommand("val", "Value of a digit word");
  val_cmd->add_option("c", c_text)->required();
  val_cmd->add_option("digits", digits)->required();
  val_cmd->add_flag("--unchecked", unchecked, "Skip the language membership check");

  auto* automaton = app.add_subcommand("automaton", "Numeration automaton");
  automaton->add_option("c", c_text)->required();
  automaton->add_flag("--dot", dot, "DOT output (default)");

  auto* enumerate = app.add_subcommand("enumerate", "First words of the numeration language");
  enumerate->add_option("c", c_text)->required();
  enumerate->add_option("count", count)->required();

  auto* letter = app.add_subcommand("letter", "Letter u_n read by the automaton");
  letter->add_option("c", c_text)->required();
  letter->add_option("n", n_text)->required();

  auto* attractor = app.add_subcommand("attractor", "Attractor of the length-m prefix");
  attractor->add_option("c", c_text)->required();
  attractor->add_option("m", m)->required();
  attractor->add_flag("--minimal", minimal, "Exact minimum attractor");
  attractor->add_flag("--zero-based", zero_based, "Print 0-based positions");
  attractor->add_flag("--verify", verify, "Check the result against all factors");

  auto* profile = app.add_subcommand("profile", "Exact attractor profile s(m)");
  profile->add_option("c", c_text)->required();
  profile->add_option("mmax", m)->required();
  profile->add_option("--cap", cap, "Exact-search cap");
  profile->add_flag("--zero-based", zero_based);

  auto* conjecture = app.add_subcommand("conjecture", "Compare s(m) with the conjectured formula");
  conjecture->add_option("c", c_text)->required();
  conjecture->add_option("mmax", m)->required();
  conjecture->add_option("--cap", cap, "Exact-search cap");

  auto* check_cmd = app.add_subcommand("check", "Greediness conditions and reduction");
  check_cmd->add_option("c", c_text)->required();

  auto* reduce = app.add_subcommand("reduce", "Parry reduction and sigma projection");
  reduce->add_option("c", c_text)->required();
  std::size_t sigma_len = 20;
  reduce->add_option("--sigma", sigma_len, "Length of the projected prefix");

  auto* ijl = app.add_subcommand("ijl", "The (ell_n, i_n, j_n) table");
  ijl->add_option("c", c_text)->required();
  count = 0;
  std::size_t n_max = 6;
  ijl->add_option("--nmax", n_max, "Last row");

  auto* qn = app.add_subcommand("qn", "U_n, P_n and Q_n by formula and by comparison");
  qn->add_option("c", c_text)->required();
  qn->add_option("--nmax", n_max, "Last row");

  auto* duval = app.add_subcommand("duval", "Lyndon factorization of a digit word");
  duval->alias("lyndon");
  duval->add_option("word", digits)->required();
  duval->add_flag("--inverse", inverse, "Use the inverse order (anti-Lyndon factors)");

  auto* sweep = app.add_subcommand("sweep", "Evaluate a family of parameter words");
  std::string k_range = "2..3";
  std::uint32_t digit_max = 2;
  std::uint64_t sweep_mmax = 40;
  std::size_t jobs = 1;
  std::vector<std::string> filters;
  std::string format = "csv";
  sweep->add_option("--k", k_range, "Range of k, as a..b");
  sweep->add_option("--digit-max", digit_max, "Largest digit");
  sweep->add_option("--mmax", sweep_mmax, "Prefix bound for the conjecture column");
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--filter", filters, "greedy, minimal-family")
      ->delimiter(',')
      ->check(CLI::IsMember({"greedy", "minimal-family"}));
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (words->parsed()) {
      const Param c = parse_param(c_text);
      if (*prefix_opt) {
        psa_u32_array a{};
        check(psa_prefix(c.get(), m, &a));
        const std::string text = digits_text(take(a));
        if (opts.json) {
          char* fmt = nullptr;
          check(psa_param_format(c.get(), &fmt));
          emit_json(opts, Json{{"schema", 1},
                               {"command", "words"},
                               {"c", take(fmt)},
                               {"m", m},
                               {"prefix", text}});
        } else {
          emit(opts, text + "\n");
        }
      } else {
        char* s = nullptr;
        check(psa_words_json(c.get(), *upto_opt ? count : 5, &s));
        const Json j = parse_json(s);
        if (opts.json) {
          emit_json(opts, j);
        } else {
          std::ostringstream out;
          for (const auto& row : j["words"]) {
            out << "u_" << row["n"].get<std::size_t>() << " = "
                << row["u"].get<std::string>() << "  U_" << row["n"].get<std::size_t>()
                << " = " << row["U"].get<std::string>() << "\n";
          }
          emit(opts, out.str());
        }
      }
    } else if (rep_cmd->parsed()) {
      const Param c = parse_param(c_text);
      psa_u32_array a{};
      check(psa_rep(c.get(), n_text.c_str(), &a));
      const std::string r = digits_text(take(a));
      std::string g;
      if (greedy) {
        psa_u32_array b{};
        check(psa_greedy_rep(c.get(), n_text.c_str(), &b));
        g = digits_text(take(b));
      }
      if (opts.json) {
        Json j{{"schema", 1}, {"command", "rep"}, {"c", c_text}, {"n", n_text}, {"rep", r}};
        if (greedy) j["greedy"] = g;
        emit_json(opts, j);
      } else {
        emit(opts, greedy ? r + "\t" + g + "\n" : r + "\n");
      }
    } else if (val_cmd->parsed()) {
      const Param c = parse_param(c_text);
      const auto d = parse_digit_word(digits);
      char* s = nullptr;
      check(psa_val(c.get(), d.data(), d.size(), unchecked ? 0 : 1, &s));
      const std::string v = take(s);
      if (opts.json) {
        emit_json(opts, Json{{"schema", 1}, {"command", "val"}, {"c", c_text},
                             {"digits", digits}, {"value", v}});
      } else {
        emit(opts, v + "\n");
      }
    } else if (automaton->parsed()) {
      const Param c = parse_param(c_text);
      char* s = nullptr;
      check(psa_automaton_dot(c.get(), &s));
      emit(opts, take(s));
    } else if (enumerate->parsed()) {
      const Param c = parse_param(c_text);
      char* s = nullptr;
      check(psa_enumerate_json(c.get(), count, &s));
      const Json j = parse_json(s);
      if (opts.json) {
        emit_json(opts, j);
      } else {
        std::string out;
        for (const auto& w : j["words"]) out += w.get<std::string>() + "\n";
        emit(opts, out);
      }
    } else if (letter->parsed()) {
      const Param c = parse_param(c_text);
      uint32_t value = 0;
      check(psa_automatic_letter(c.get(), n_text.c_str(), &value));
      if (opts.json) {
        emit_json(opts, Json{{"schema", 1}, {"command", "letter"}, {"c", c_text},
                             {"n", n_text}, {"letter", value}});
      } else {
        emit(opts, std::to_string(value) + "\n");
      }
    } else if (attractor->parsed()) {
      const Param c = parse_param(c_text);
      char* s = nullptr;
      check(psa_attractor_json(c.get(), m, minimal, verify, zero_based, &s));
      const Json j = parse_json(s);
      if (opts.json) {
        emit_json(opts, j);
      } else {
        emit(opts, positions_text(j["attractor"]["positions"]) + "\n");
      }
    } else if (profile->parsed()) {
      const Param c = parse_param(c_text);
      char* s = nullptr;
      check(psa_profile_json(c.get(), m, cap, zero_based, &s));
      const Json j = parse_json(s);
      if (opts.json) {
        emit_json(opts, j);
      } else {
        std::ostringstream out;
        out << "m\ts(m)\twitness\n";
        for (const auto& e : j["profile"]["entries"]) {
          out << e["m"].get<uint64_t>() << "\t" << e["size"].get<std::size_t>() << "\t"
              << positions_text(e["witness"]) << "\n";
        }
        if (j["profile"]["truncated"].get<bool>()) out << "# truncated at the exact-search cap\n";
        emit(opts, out.str());
      }
    } else if (conjecture->parsed()) {
      const Param c = parse_param(c_text);
      char* s = nullptr;
      check(psa_conjecture_json(c.get(), m, cap, &s));
      const Json j = parse_json(s);
      if (opts.json) {
        emit_json(opts, j);
      } else {
        std::ostringstream out;
        out << "m\tobserved\tpredicted\n";
        for (const auto& r : j["conjecture"]["rows"]) {
          out << r["m"].get<uint64_t>() << "\t" << r["observed"].get<std::size_t>() << "\t"
              << r["predicted"].get<std::size_t>()
              << (r["agree"].get<bool>() ? "" : "\tDISAGREE") << "\n";
        }
        out << "verdict: "
            << (j["conjecture"]["agree_all"].get<bool>() ? "agree" : "disagree");
        if (j["conjecture"]["truncated"].get<bool>()) out << " (truncated at cap)";
        out << "\n";
        emit(opts, out.str());
      }
    } else if (check_cmd->parsed()) {
      const Param c = parse_param(c_text);
      char* s = nullptr;
      check(psa_check_json(c.get(), &s));
      const Json j = parse_json(s);
      if (opts.json) {
        emit_json(opts, j);
      } else {
        const Json& cond = j["conditions"];
        std::ostringstream out;
        out << "frac_power: " << flag(cond["frac_power"]) << "\n"
            << "dstar_le_a: " << flag(cond["dstar_le_a"]) << "\n"
            << "max_conjugate: " << flag(cond["max_conjugate"]) << "\n"
            << "greedy: " << flag(cond["greedy"]) << "\n";
        if (!j["reduction"].is_null()) {
          const Json& red = j["reduction"];
          out.precision(12);
          out << "reduction: c'=" << red["cprime"].get<std::string>()
              << " root=" << red["root"].get<std::string>()
              << " power=" << red["power"].get<std::size_t>()
              << " beta=" << red["beta"].get<double>() << "\n";
          const Json& fam = j["minimal_family"];
          out << "minimal_family: " << flag(fam["in_family"]) << "\n";
        }
        emit(opts, out.str());
      }
    } else if (reduce->parsed()) {
      const Param c = parse_param(c_text);
      char* s = nullptr;
      check(psa_reduce_parry_json(c.get(), sigma_len, &s));
      const Json j = parse_json(s);
      if (opts.json) {
        emit_json(opts, j);
      } else {
        const Json& red = j["reduction"];
        std::ostringstream out;
        out.precision(12);
        out << "c'=" << red["cprime"].get<std::string>()
            << " power=" << red["power"].get<std::size_t>()
            << " beta=" << red["beta"].get<double>() << "\n"
            << "sigma: " << j["sigma_prefix"].get<std::string>() << "\n";
        emit(opts, out.str());
      }
    } else if (ijl->parsed()) {
      const Param c = parse_param(c_text);
      char* s = nullptr;
      check(psa_ijl_json(c.get(), n_max, &s));
      const Json j = parse_json(s);
      if (opts.json) {
        emit_json(opts, j);
      } else {
        std::ostringstream out;
        out << "n\tell\t{i,j}\n";
        for (const auto& r : j["rows"]) {
          out << r["n"].get<std::size_t>() << "\t" << r["ell"].get<uint32_t>() << "\t{"
              << r["i"].get<std::size_t>() << "," << r["j"].get<std::size_t>() << "}\n";
        }
        emit(opts, out.str());
      }
    } else if (qn->parsed()) {
      const Param c = parse_param(c_text);
      char* s = nullptr;
      check(psa_qn_json(c.get(), n_max, &s));
      const Json j = parse_json(s);
      if (opts.json) {
        emit_json(opts, j);
      } else {
        std::ostringstream out;
        out << "n\tU\tP\tQ\tQ_direct\tP_tight\n";
        for (const auto& r : j["rows"]) {
          out << r["n"].get<std::size_t>() << "\t" << r["U"].get<std::string>() << "\t"
              << r["P"].get<std::string>() << "\t" << r["Q"].get<std::string>() << "\t"
              << (r["Q_direct"].is_null() ? "cap" : r["Q_direct"].get<std::string>())
              << "\t" << (r["P_tight"].is_null() ? "-" : flag(r["P_tight"])) << "\n";
        }
        emit(opts, out.str());
      }
    } else if (duval->parsed()) {
      const auto w = parse_digit_word(digits);
      char* s = nullptr;
      check(psa_duval_json(w.data(), w.size(), inverse, &s));
      const Json j = parse_json(s);
      if (opts.json) {
        emit_json(opts, j);
      } else {
        std::string out;
        for (const auto& f : j["factors"]) {
          out += "(" + f.get<std::string>() + ")";
        }
        emit(opts, out + "\n");
      }
    } else if (sweep->parsed()) {
      const auto [k_min, k_max] = parse_range(k_range);
      psa_sweep_spec spec{};
      spec.k_min = k_min;
      spec.k_max = k_max;
      spec.digit_max = digit_max;
      spec.m_max = sweep_mmax;
      spec.jobs = jobs;
      for (const auto& f : filters) {
        if (f == "greedy") spec.only_greedy = 1;
        if (f == "minimal-family") spec.only_minimal_family = 1;
      }
      const bool as_json = opts.json || format == "json";
      char* s = nullptr;
      check(psa_sweep(&spec, as_json ? PSA_FORMAT_JSON : PSA_FORMAT_CSV, &s));
      if (as_json) {
        emit_json(opts, parse_json(s));
      } else {
        emit(opts, take(s));
      }
    }
  } catch (const CliError& e) {
    std::cerr << "parrysa: " << e.what() << "\n";
    return e.exit_code();
  }
  return 0;
}
