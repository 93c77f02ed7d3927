// tlh: command-line front end for the torus link homology library.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlh/tlh.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  std::string format = "human";
  std::optional<int> expand;
  std::string cache;
};

tlh::Format parse_format(const std::string& s) {
  if (s == "json") return tlh::Format::json;
  if (s == "latex") return tlh::Format::latex;
  return tlh::Format::human;
}

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

unsigned worker_threads() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const char* env = std::getenv("TLH_THREADS");
  if (env == nullptr) return hw;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || cap <= 0) {
    throw tlh::DomainError("TLH_THREADS must be a positive integer, got '" + std::string(env) + "'");
  }
  return static_cast<unsigned>(cap);
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string stats_json(const tlh::MemoStats& st) {
  return "{\"entries\":" + std::to_string(st.entries) + ",\"hits\":" + std::to_string(st.hits) +
         ",\"misses\":" + std::to_string(st.misses) + ",\"max_depth\":" + std::to_string(st.max_depth) + "}";
}

std::string stats_human(const tlh::MemoStats& st) {
  return "memo: entries=" + std::to_string(st.entries) + " hits=" + std::to_string(st.hits) +
         " misses=" + std::to_string(st.misses) + " max_depth=" + std::to_string(st.max_depth);
}

std::string render_poly(const tlh::LaurentPoly& p, tlh::Format f) {
  switch (f) {
    case tlh::Format::json:
      return tlh::render_json(p);
    case tlh::Format::latex:
      return tlh::render_latex(p);
    case tlh::Format::human:
      break;
  }
  return tlh::render_human(p);
}

// Shared state for one computing command: memo table, optional cache file,
// evaluation options and the pieces of the output envelope.
class Session {
 public:
  Session(std::string command, const CommonFlags& flags)
      : command_(std::move(command)), flags_(flags), format_(parse_format(flags.format)) {
    options_.threads = worker_threads();
    if (!flags_.cache.empty() && std::filesystem::exists(flags_.cache)) {
      const auto report = memo_.load(flags_.cache);
      if (!report.accepted) {
        std::cerr << "warning: ignoring cache " << flags_.cache << ": " << report.reason << "\n";
      }
    }
  }

  tlh::MemoTable& memo() { return memo_; }
  const tlh::EvalOptions& options() const { return options_; }
  tlh::Format format() const { return format_; }

  void param(const std::string& key, const std::string& json_value) {
    params_.push_back({key, json_value});
  }

  /// Extra JSON field placed between the result and the expansion.
  void field(const std::string& key, const std::string& json_value) { fields_.push_back({key, json_value}); }

  /// Text-mode lines around the result; LaTeX output turns them into comments.
  void line_before(const std::string& text) { before_.push_back(note(text)); }
  void line_after(const std::string& text) { after_.push_back(note(text)); }
  void raw_after(const std::string& text) { after_.push_back(text); }

  std::string note(const std::string& text) const {
    return format_ == tlh::Format::latex ? "% " + text : text;
  }

  int finish(const tlh::GradedSeries& result, const std::string& result_prefix = {}) {
    const double ms = timer_.elapsed_ms();
    if (!flags_.cache.empty()) memo_.save(flags_.cache);
    std::optional<tlh::LaurentPoly> expansion;
    if (flags_.expand) expansion = tlh::expand_series(result, *flags_.expand);
    const auto st = memo_.stats();

    if (format_ == tlh::Format::json) {
      std::string out = "{\"command\":" + quote(command_) + ",\"params\":{";
      for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) out += ',';
        out += quote(params_[i].first) + ':' + params_[i].second;
      }
      out += "},\"result\":" + tlh::render_json(result);
      for (const auto& [k, v] : fields_) out += ',' + quote(k) + ':' + v;
      if (expansion) {
        out += ",\"expansion\":{\"max_q_degree\":" + std::to_string(*flags_.expand) +
               ",\"terms\":" + tlh::render_json(*expansion) + "}";
      }
      out += ",\"memo\":" + stats_json(st) + ",\"timing_ms\":" + format_ms(ms) + "}";
      std::cout << out << "\n";
      return kExitOk;
    }

    for (const auto& line : before_) std::cout << line << "\n";
    std::cout << result_prefix << tlh::render(result, format_) << "\n";
    for (const auto& line : after_) std::cout << line << "\n";
    if (expansion) {
      std::cout << (format_ == tlh::Format::latex ? "% " : "") << "expansion to q-degree " << *flags_.expand
                << ":\n"
                << render_poly(*expansion, format_) << "\n";
    }
    std::cerr << stats_human(st) << "\ntime: " << format_ms(ms) << " ms\n";
    return kExitOk;
  }

 private:
  std::string command_;
  CommonFlags flags_;
  tlh::Format format_;
  tlh::MemoTable memo_;
  tlh::EvalOptions options_;
  Timer timer_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::string> before_;
  std::vector<std::string> after_;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--expand", flags.expand, "Also print the expansion up to this q-degree")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "latex"}));
  cmd->add_option("--cache", flags.cache, "Load and save the memo table in FILE");
}

std::string monomial_text(const tlh::Monomial& m) {
  return tlh::render_human(tlh::LaurentPoly::monomial(m));
}

std::string sigma_json(const tlh::SigmaSeq& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

int run_check_command(const std::string& suite, const tlh::CheckParams& params, const std::string& format) {
  Timer timer;
  const tlh::CheckReport report = tlh::run_check(suite, params);
  const double ms = timer.elapsed_ms();
  const bool pass = report.all_pass();
  if (format == "json") {
    std::string out = "{\"command\":\"check\",\"params\":{\"suite\":" + quote(suite) +
                      ",\"r\":" + std::to_string(params.r) + ",\"len\":" +
                      (params.len ? std::to_string(*params.len) : "null") +
                      ",\"depth\":" + std::to_string(params.depth) + ",\"seed\":" + std::to_string(params.seed) +
                      "},\"cases\":[";
    for (std::size_t i = 0; i < report.cases.size(); ++i) {
      const auto& c = report.cases[i];
      out += std::string(i ? "," : "") + "{\"name\":" + quote(c.name) + ",\"pass\":" + (c.pass ? "true" : "false") +
             ",\"detail\":" + quote(c.detail) + "}";
    }
    out += std::string("],\"pass\":") + (pass ? "true" : "false") + ",\"timing_ms\":" + format_ms(ms) + "}";
    std::cout << out << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& c : report.cases) {
      passed += c.pass ? 1 : 0;
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
      std::cout << "\n";
    }
    std::cout << suite << ": " << passed << "/" << report.cases.size() << " passed\n";
    std::cerr << "time: " << format_ms(ms) << " ms\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triply graded homology of torus links via the p(v, w) recursion"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tlh 1.0.0");

  CommonFlags common;

  auto* torus = app.add_subcommand("torus", "Homology of the positive torus link T(m, n)");
  int tm = 0, tn = 0;
  bool normalized = false;
  torus->add_option("m", tm)->required();
  torus->add_option("n", tn)->required();
  torus->add_flag("--normalized", normalized, "Apply the (Q^-4 A T)^s normalization shift");
  add_common(torus, common);

  auto* pair = app.add_subcommand("pair", "Evaluate p(v, w) for 0/1 strings");
  std::string pv, pw;
  pair->add_option("v", pv)->required();
  pair->add_option("w", pw)->required();
  add_common(pair, common);

  auto* colored = app.add_subcommand("colored", "Sym^l-colored homology of T(m, n), up to a monomial");
  int cm = 0, cn = 0, cl = 0;
  std::string order = "both";
  colored->add_option("m", cm)->required();
  colored->add_option("n", cn)->required();
  colored->add_option("l", cl)->required();
  colored->add_option("--order", order, "Sequence ordering")
      ->check(CLI::IsMember({"theorem", "example", "both"}));
  add_common(colored, common);

  auto* sigma = app.add_subcommand("sigma", "f(sigma) = p(v(sigma), w(sigma)) for a sequence in {0..r}");
  int sr = 0;
  std::string slist;
  bool use_g = false, with_stats = false;
  sigma->add_option("r", sr)->required();
  sigma->add_option("sigma", slist, "Comma-separated entries, e.g. 3,0,1,5")->required();
  sigma->add_flag("--g", use_g, "Print g(sigma) = p(v(sigma), w(sigma)0) instead");
  sigma->add_flag("--stats", with_stats, "Also print inv, c and rev");
  add_common(sigma, common);

  auto* check = app.add_subcommand("check", "Run a verification suite");
  std::string suite;
  tlh::CheckParams cparams;
  std::string check_format = "human";
  check->add_option("suite", suite)->required()->check(
      CLI::IsMember(std::vector<std::string>(tlh::kCheckSuites.begin(), tlh::kCheckSuites.end())));
  check->add_option("--r", cparams.r, "Largest r")->check(CLI::PositiveNumber);
  check->add_option("--len", cparams.len, "Size bound; the meaning depends on the suite")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--depth", cparams.depth, "Expansion depth in q")->check(CLI::NonNegativeNumber);
  check->add_option("--seed", cparams.seed, "Random seed");
  check->add_option("--format", check_format)->check(CLI::IsMember({"human", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) {
      cparams.threads = worker_threads();
      return run_check_command(suite, cparams, check_format);
    }

    if (*torus) {
      Session session("torus", common);
      session.param("m", std::to_string(tm));
      session.param("n", std::to_string(tn));
      session.param("normalized", normalized ? "true" : "false");
      const tlh::TorusLinkSpec spec{tm, tn};
      const auto result = normalized ? tlh::normalized_homology(spec, session.memo(), session.options())
                                     : tlh::torus_link_homology(spec, session.memo(), session.options());
      return session.finish(result);
    }

    if (*pair) {
      Session session("pair", common);
      session.param("v", quote(pv));
      session.param("w", quote(pw));
      tlh::pair_validate(pv, pw);
      return session.finish(tlh::eval_p({tlh::BitString(pv), tlh::BitString(pw)}, session.memo(),
                                        session.options()));
    }

    if (*colored) {
      Session session("colored", common);
      session.param("m", std::to_string(cm));
      session.param("n", std::to_string(cn));
      session.param("l", std::to_string(cl));
      session.param("order", quote(order));
      tlh::validate_colored(cm, cn, cl);
      if (order != "both") {
        const auto o = order == "theorem" ? tlh::ColoredOrder::theorem : tlh::ColoredOrder::example;
        return session.finish(tlh::colored_torus_homology(cm, cn, cl, o, session.memo(), session.options()));
      }
      const auto both = tlh::colored_torus_homology_both(cm, cn, cl, session.memo(), session.options());
      const auto& ratio = both.example_over_theorem;
      if (session.format() == tlh::Format::json) {
        session.field("example", tlh::render_json(both.example));
        session.field("example_over_theorem",
                      ratio ? "[" + std::to_string(ratio->qexp) + "," + std::to_string(ratio->aexp) + "," +
                                  std::to_string(ratio->texp) + "]"
                            : "null");
      } else {
        session.line_before("theorem ordering (" + tlh::colored_pair(cm, cn, cl, tlh::ColoredOrder::theorem).key() +
                            "):");
        session.line_after("example ordering (" + tlh::colored_pair(cm, cn, cl, tlh::ColoredOrder::example).key() +
                           "):");
        session.raw_after(tlh::render(both.example, session.format()));
        session.line_after("example/theorem = " + (ratio ? monomial_text(*ratio) : "not a monomial multiple"));
      }
      return session.finish(both.theorem);
    }

    if (*sigma) {
      Session session("sigma", common);
      const tlh::SigmaSeq s(sr, tlh::parse_int_sequence(slist));
      session.param("r", std::to_string(sr));
      session.param("sigma", sigma_json(s));
      session.param("g", use_g ? "true" : "false");
      const auto v = tlh::v_of_sigma(s);
      const auto w = tlh::w_of_sigma(s);
      const auto value = use_g ? tlh::g_sigma(s, session.memo(), session.options())
                               : tlh::f_sigma(s, session.memo(), session.options());
      session.field("v", quote(v.str()));
      session.field("w", quote(w.str()));
      session.line_before("v = " + v.str());
      session.line_before("w = " + w.str());
      if (with_stats) {
        const auto inv = tlh::inversions(s.entries());
        const auto c = tlh::c_statistic(s);
        const auto r = tlh::rev(s);
        session.field("stats", "{\"inv\":" + std::to_string(inv) + ",\"c\":" + std::to_string(c) +
                                   ",\"rev\":" + sigma_json(r) + "}");
        session.line_before("inv = " + std::to_string(inv));
        session.line_before("c = " + std::to_string(c));
        session.line_before("rev = (" + r.str() + ")");
      }
      return session.finish(value, use_g ? "g = " : "f = ");
    }
  } catch (const tlh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
