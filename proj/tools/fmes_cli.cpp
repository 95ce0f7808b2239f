#include "fmes/balanced.hpp"
#include "fmes/expression.hpp"
#include "fmes/qseries.hpp"
#include "fmes/qshuffle.hpp"
#include "fmes/swap.hpp"
#include "fmes/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace fmes;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, resource = 3 };

struct Settings {
  int max_weight = 6;
  int q_order = 25;
  int engine_max_weight = 8;
  int threads = 0;
  std::string cache_dir;
  bool json = false;
  bool csv = false;
  bool balanced = false;
};

struct Failure : std::runtime_error {
  int code;
  Failure(const std::string& what, int c) : std::runtime_error(what), code(c) {}
};

Element read_input(const std::string& text, const Settings& s) {
  return evaluate(parse_expression(text), s.engine_max_weight);
}

void emit(const std::string& input, const Element& x, const Settings& s) {
  if (s.balanced) {
    const BElement b = phi_inverse(x);
    if (s.json) {
      nlohmann::ordered_json j{{"input", input}, {"result", to_string(b)}, {"terms", nlohmann::ordered_json::array()}};
      for (const auto& [w, c] : b) j["terms"].push_back({{"word", to_string(w)}, {"coefficient", to_string(c)}});
      std::cout << j.dump(2) << '\n';
    } else if (s.csv) {
      std::cout << "word,coefficient\n";
      for (const auto& [w, c] : b) std::cout << '"' << to_string(w) << "\"," << to_string(c) << '\n';
    } else {
      std::cout << to_string(b) << '\n';
    }
    return;
  }
  if (s.json) {
    nlohmann::ordered_json j{{"input", input}, {"result", to_string(x)}, {"terms", nlohmann::ordered_json::array()}};
    for (const auto& [w, c] : x) j["terms"].push_back({{"word", to_string(w)}, {"coefficient", to_string(c)}});
    std::cout << j.dump(2) << '\n';
  } else if (s.csv) {
    std::cout << "word,coefficient\n";
    for (const auto& [w, c] : x) std::cout << '"' << to_string(w) << "\"," << to_string(c) << '\n';
  } else {
    std::cout << to_string(x) << '\n';
  }
}

QuotientEngine make_engine(const Settings& s) {
  EngineOptions o;
  o.max_weight = s.engine_max_weight;
  if (!s.cache_dir.empty()) o.cache_dir = fs::path(s.cache_dir);
  return QuotientEngine(o);
}

IdealKind ideal_from(const std::string& name) {
  if (name == "fmes") return IdealKind::swap;
  if (name == "zf") return IdealKind::combined;
  if (auto k = parse_ideal_kind(name)) return *k;
  throw Failure("unknown ideal '" + name + "'", usage);
}

int run_dims(const std::string& ideal, const Settings& s) {
  QuotientEngine engine = make_engine(s);
  const auto rows = dimension_table(engine, ideal, s.max_weight);
  if (s.json) {
    std::cout << dims_json(ideal, rows);
  } else if (s.csv) {
    std::cout << "weight,words,dim\n";
    for (const auto& r : rows) std::cout << r.weight << ',' << r.words << ',' << r.dim << '\n';
  } else {
    for (const auto& r : rows) std::cout << "k=" << r.weight << "  words=" << r.words << "  dim=" << r.dim << '\n';
  }
  return ok;
}

int run_qexpand(const std::string& text, const Settings& s) {
  const Element x = read_input(text, s);
  const QSeries g = g_series(x, s.q_order);
  if (s.json) {
    nlohmann::ordered_json j{{"input", text}, {"order", s.q_order}, {"coefficients", nlohmann::ordered_json::array()}};
    for (const auto& c : g.coefficients()) j["coefficients"].push_back(to_string(c));
    std::cout << j.dump(2) << '\n';
  } else {
    if (s.csv) std::cout << "n,coefficient\n";
    for (int n = 0; n <= g.order(); ++n) std::cout << n << (s.csv ? "," : ": ") << to_string(g[n]) << '\n';
  }
  return ok;
}

int run_verify(const std::string& suite, const Settings& s, bool timing) {
  if (!is_suite(suite)) throw Failure("unknown suite '" + suite + "'", usage);
  QuotientEngine engine = make_engine(s);
  const auto report = run_suite(suite, engine, VerifyOptions{s.max_weight, s.q_order});
  if (s.json) {
    std::cout << report_json(report, timing);
  } else if (s.csv) {
    std::cout << "id,status,residual\n";
    for (const auto& c : report.checks) std::cout << c.id << ',' << to_string(c.status) << ",\"" << c.residual << "\"\n";
  } else {
    std::cout << report_text(report);
  }
  return report.passed() ? ok : check_failed;
}

int run_cache(const Settings& s, bool clear, bool stats, bool warm) {
  if (s.cache_dir.empty()) throw Failure("cache requires --cache-dir", usage);
  const fs::path dir(s.cache_dir);
  if (clear && fs::exists(dir)) {
    std::size_t removed = 0;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".basis") removed += fs::remove(e.path());
    std::cout << "removed " << removed << " files\n";
  }
  if (warm) {
    QuotientEngine engine = make_engine(s);
    for (int k = 0; k <= s.max_weight; ++k)
      for (auto kind : {IdealKind::swap, IdealKind::constant_term, IdealKind::combined}) engine.basis(kind, k);
    const auto st = engine.stats();
    std::cout << "built " << st.built << ", loaded " << st.loaded << ", rejected " << st.rejected << '\n';
  }
  if (stats || (!clear && !warm)) {
    std::size_t files = 0;
    std::uintmax_t bytes = 0;
    if (fs::exists(dir))
      for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".basis") {
          ++files;
          bytes += e.file_size();
        }
    if (s.json) {
      std::cout << nlohmann::ordered_json{{"dir", dir.string()}, {"files", files}, {"bytes", bytes}}.dump(2) << '\n';
    } else {
      std::cout << dir.string() << ": " << files << " files, " << bytes << " bytes\n";
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formal multiple Eisenstein series toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "INI or TOML file with option defaults; command-line flags take precedence");

  Settings s;
  app.add_option("--max-weight", s.max_weight, "Weight bound for dims, verify and cache")->check(CLI::Range(0, 12));
  app.add_option("--q-order", s.q_order, "Order of q-expansions")->check(CLI::Range(0, 400));
  app.add_option("--engine-max-weight", s.engine_max_weight, "Largest weight the quotient engine builds")
      ->check(CLI::Range(0, 12));
  app.add_option("--threads", s.threads, "OpenMP threads (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--cache-dir", s.cache_dir, "Directory for cached echelon bases");
  auto* json = app.add_flag("--json", s.json, "JSON output");
  app.add_flag("--csv", s.csv, "CSV output")->excludes(json);
  app.add_flag("--balanced", s.balanced, "Read and print elements in the balanced alphabet");

  std::vector<std::string> factors;
  auto* mul = app.add_subcommand("mul", "Stuffle product of expressions");
  mul->add_option("expr", factors, "Factors")->required();

  std::string expr;
  auto* swap_cmd = app.add_subcommand("swap", "Apply the swap involution");
  swap_cmd->add_option("expr", expr)->required();

  std::string op = "D";
  auto* derive = app.add_subcommand("derive", "Apply a derivation");
  derive->add_option("--op", op)->check(CLI::IsMember({"D", "W", "omega", "delta", "t"}));
  derive->add_option("expr", expr)->required();

  std::string ideal = "fmes";
  auto* nf = app.add_subcommand("nf", "Normal form in a quotient");
  nf->add_option("--ideal", ideal)->check(CLI::IsMember({"fmes", "zf", "swap", "constant_term", "combined"}));
  nf->add_option("expr", expr)->required();

  auto* dims = app.add_subcommand("dims", "Dimension table");
  dims->add_option("--ideal", ideal)->check(CLI::IsMember({"fmes", "zf", "eds"}));

  auto* qexpand = app.add_subcommand("qexpand", "q-expansion of the g-series of an expression");
  qexpand->add_option("expr", expr)->required();

  std::string suite = "all";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify->add_flag("--timing", timing, "Include timings in JSON output");

  bool clear = false, stats = false, warm = false;
  auto* cache = app.add_subcommand("cache", "Inspect or manage the basis cache");
  cache->add_option("--dir", s.cache_dir, "Cache directory");
  cache->add_flag("--clear", clear, "Remove cached bases");
  cache->add_flag("--stats", stats, "Report cache contents");
  cache->add_flag("--warm", warm, "Build all bases up to --max-weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }
  if (s.threads > 0) omp_set_num_threads(s.threads);

  try {
    if (s.balanced && (qexpand->parsed() || dims->parsed() || verify->parsed() || cache->parsed()))
      throw Failure("--balanced applies to element commands only", usage);
    if (*mul) {
      Element x = unit_element();
      for (const auto& f : factors) {
        x = stuffle(x, read_input(f, s));
        if (max_weight(x) > s.engine_max_weight) throw CutoffExceeded("product exceeds the engine weight limit");
      }
      emit(CLI::detail::join(factors, " * "), x, s);
    } else if (*swap_cmd) {
      emit(expr, fmes::swap(read_input(expr, s)), s);
    } else if (*derive) {
      const Element y = apply_operator(op, read_input(expr, s));
      if (max_weight(y) > s.engine_max_weight) throw CutoffExceeded("result exceeds the engine weight limit");
      emit(expr, y, s);
    } else if (*nf) {
      QuotientEngine engine = make_engine(s);
      const Element x = read_input(expr, s);
      emit(expr, engine.normal_form(x, ideal_from(ideal), std::max(max_weight(x), 0)), s);
    } else if (*dims) {
      return run_dims(ideal, s);
    } else if (*qexpand) {
      return run_qexpand(expr, s);
    } else if (*verify) {
      return run_verify(suite, s, timing);
    } else if (*cache) {
      return run_cache(s, clear, stats, warm);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return resource;
  } catch (const CutoffExceeded& e) {
    std::cerr << "cutoff exceeded: " << e.what() << '\n';
    return resource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return usage;
  }
  return ok;
}
