#include "levellab/bounds/bounds.hpp"
#include "levellab/construct/constructions.hpp"
#include "levellab/construct/recipe.hpp"
#include "levellab/error.hpp"
#include "levellab/inverse/inverse_module.hpp"
#include "levellab/lab/classify.hpp"
#include "levellab/lab/scan.hpp"
#include "levellab/lab/store.hpp"
#include "levellab/macaulay/macaulay.hpp"
#include "levellab/poly/form_io.hpp"
#include "levellab/rng.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace levellab;

namespace {

enum Exit { kOk = 0, kError = 1, kUsage = 2, kCounterexample = 3, kVerifyFailed = 4 };

struct Globals {
  std::uint64_t prime = poly::kDefaultPrime;
  bool prime_given = false;
  std::uint64_t seed = 1;
  std::size_t trials = 5;
  std::string store;
  bool exact_rational = false;
  double seconds = 10.0;
  std::size_t threads = 0;
};

lab::Budget budget_of(const Globals& g) {
  lab::Budget b;
  b.trials = g.trials;
  b.exact_rational = g.exact_rational;
  b.per_vector = std::chrono::milliseconds(static_cast<std::int64_t>(g.seconds * 1000));
  return b;
}

// Store path: --store wins, then LEVELLAB_STORE. Nothing is written otherwise.
std::optional<std::string> store_path(const Globals& g) {
  if (!g.store.empty()) return g.store;
  if (const char* env = std::getenv("LEVELLAB_STORE"); env && *env) return std::string(env);
  return std::nullopt;
}

std::int64_t to_i64(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError(0, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(used, "trailing characters in '" + s + "'");
  return v;
}

BigInt to_big(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw ParseError(0, "expected an integer, got '" + s + "'");
  }
}

std::vector<std::int64_t> to_list(const std::string& list) {
  std::vector<std::int64_t> out;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(to_i64(token));
  return out;
}

std::vector<std::size_t> to_sizes(const std::string& list) {
  std::vector<std::size_t> out;
  for (auto v : to_list(list)) {
    if (v < 1) throw InvalidArgument("parts must be positive");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

void need(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw CLI::ValidationError("bound", "usage: bound " + usage);
}

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ",") + v.str();
  return out;
}

std::string join(const std::vector<std::int64_t>& values) {
  return levellab::to_string(std::span<const std::int64_t>(values));
}

int run_bound(const std::string& kind, const std::vector<std::string>& a) {
  if (kind == "upper") {
    need(a, 2, "upper <n> <d>");
    std::cout << macaulay::macaulay_upper_bound(to_big(a[0]), to_i64(a[1])) << '\n';
  } else if (kind == "bg") {
    need(a, 2, "bg <h_d> <d>");
    std::cout << bounds::bg_min_prev(to_big(a[0]), to_i64(a[1])) << '\n';
  } else if (kind == "ci") {
    need(a, 3, "ci <h_d> <d> <r>");
    const auto range = bounds::ci_prev_range(to_big(a[0]), to_i64(a[1]), to_i64(a[2]));
    std::cout << (range.empty() ? "empty " : "") << range.to_string() << '\n';
  } else if (kind == "ia2") {
    need(a, 2, "ia2 <h> <d0,...,de>");
    const auto d = to_list(a[1]);
    std::cout << join(bounds::ia2_lower_bound(HVector::parse(a[0]), d)) << '\n';
  } else if (kind == "za") {
    need(a, 2, "za <h> <c>");
    const auto h = HVector::parse(a[0]);
    const auto q = bounds::za_lower_bound(h, h.last(), to_i64(a[1]));
    std::string exact;
    for (const auto& v : q.exact) exact += (exact.empty() ? "" : ",") + levellab::to_string(v);
    std::cout << "exact " << exact << "\nceil " << join(q.ceilings) << '\n';
  } else if (kind == "thm3") {
    need(a, 3, "thm3 <r> <a> <t>");
    std::cout << (bounds::thm3_step(to_i64(a[0]), to_i64(a[1]), to_i64(a[2])) ? "true" : "false") << '\n';
  } else if (kind == "cor3") {
    need(a, 3, "cor3 <r> <a> <t>");
    std::cout << bounds::cor3_interval(to_i64(a[0]), to_i64(a[1]), to_i64(a[2])).to_string() << '\n';
  } else if (kind == "thm33") {
    need(a, 3, "thm33 <r> <a> <t>");
    std::cout << bounds::thm33_interval(to_i64(a[0]), to_i64(a[1]), to_i64(a[2])).to_string() << '\n';
  } else if (kind == "prop2") {
    need(a, 1, "prop2 <t>");
    std::cout << bounds::prop2_min_r(to_big(a[0])) << '\n';
  } else if (kind == "prop2-range") {
    need(a, 1, "prop2-range <r>");
    std::cout << bounds::prop2_t_range(to_i64(a[0])).to_string() << '\n';
  } else if (kind == "prop-e") {
    need(a, 2, "prop-e <r> <e>");
    std::cout << bounds::prop_e_t_range(to_i64(a[0]), to_i64(a[1])).to_string() << '\n';
  } else if (kind == "ee") {
    need(a, 1, "ee <h>");
    const auto h = HVector::parse(a[0]);
    std::cout << "margins " << join(bounds::thm_ee_margins(h)) << '\n'
              << (bounds::thm_ee_step(h) ? "true" : "false") << '\n';
  } else if (kind == "eecor") {
    need(a, 1, "eecor <h>");
    std::cout << bounds::eecor_interval(HVector::parse(a[0])).to_string() << '\n';
  } else if (kind == "gor") {
    need(a, 1, "gor <h>");
    const auto g = bounds::thm_gor_interval(HVector::parse(a[0]));
    std::string degrees;
    for (auto d : g.degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
    std::cout << "degrees " << degrees << '\n' << g.range.to_string() << '\n';
  } else if (kind == "corgor") {
    need(a, 2, "corgor <r> <a>");
    std::cout << bounds::corgor_interval(to_i64(a[0]), to_i64(a[1])).to_string() << '\n';
  } else if (kind == "si-closure") {
    need(a, 3, "si-closure <low> <high> <i>");
    std::cout << (bounds::si_interval_closure(HVector::parse(a[0]), HVector::parse(a[1]),
                                              static_cast<std::size_t>(to_i64(a[2])))
                      ? "true"
                      : "false")
              << '\n';
  } else {
    throw CLI::ValidationError("bound", "unknown bound '" + kind + "'");
  }
  return kOk;
}

void write_module(const inverse::InverseModule& m, const std::vector<std::string>& comments,
                  const std::string& out_path) {
  poly::GeneratorFile file;
  file.nvars = m.r();
  file.degree = m.e();
  file.field = m.field();
  file.generators = m.generators();
  file.comments = comments;
  file.comments.push_back("h=" + inverse::h_vector(m).h.to_string());
  const std::string text = poly::format_generator_file(file);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write " + out_path);
  out << text;
}

inverse::InverseModule load_module(const std::string& path, const Globals& g) {
  const auto file = poly::read_generator_file(
      path, g.prime_given ? std::optional<std::uint64_t>(g.prime) : std::nullopt);
  return inverse::InverseModule(file.nvars, file.degree, file.generators, file.field);
}

void print_classification(const lab::Classification& c) {
  std::cout << "h " << c.h.to_string() << '\n' << "status " << lab::to_string(c.status) << '\n';
  if (c.status == lab::Status::NonLevel) {
    std::cout << "condition " << c.condition << '\n' << "detail " << c.detail << '\n';
  }
  if (c.certificate) {
    const auto& cert = *c.certificate;
    std::cout << "recipe " << cert.recipe << '\n'
              << "prime " << cert.prime << '\n'
              << "seed " << cert.seed << '\n'
              << "char " << cert.characteristic << '\n';
  }
  for (const auto& d : c.diagnostics) std::cout << "note " << d << '\n';
}

void record(const Globals& g, const lab::Classification& c) {
  const auto path = store_path(g);
  if (!path) return;
  if (auto rec = lab::make_record(c)) lab::store_append(*path, *rec);
}

// "1,3,*,3" with the placeholder at `at` (or none) becomes a base vector.
HVector scan_base(const std::string& text, std::optional<std::size_t>& at, std::int64_t fill) {
  std::string filled;
  std::size_t index = 0;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token == "*" || token == "_") {
      if (at && *at != index) throw InvalidArgument("placeholder at degree " + std::to_string(index) +
                                                    " but --at is " + std::to_string(*at));
      at = index;
      token = std::to_string(fill);
    }
    filled += (filled.empty() ? "" : ",") + token;
    ++index;
  }
  if (!at) throw InvalidArgument("no scan degree: give --at or a '*' placeholder");
  return HVector::parse(filled);
}

int print_scan(const Globals& g, const lab::ScanReport& report) {
  std::string degrees;
  for (auto d : report.degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
  std::cout << "base " << report.base.to_string() << "\ndegrees " << degrees << "\nrange "
            << report.from << ".." << report.to << '\n';
  for (const auto& e : report.entries) {
    const auto& c = e.classification;
    std::cout << e.value << ' ' << lab::to_string(c.status);
    if (c.certificate) std::cout << ' ' << c.certificate->recipe;
    if (c.status == lab::Status::NonLevel) std::cout << ' ' << c.condition;
    std::cout << '\n';
    record(g, c);
  }
  for (const auto& gap : report.gaps) {
    std::cout << "gap " << gap.from << ".." << gap.to << ' ' << lab::to_string(gap.kind) << '\n';
  }
  if (report.has_counterexample()) {
    std::cout << "counterexample: certified non-level values between level ones\n";
    return kCounterexample;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"levellab: Hilbert functions of level algebras through inverse systems"};
  app.require_subcommand(1);
  Globals g;

  auto* prime = app.add_option("--prime", g.prime, "prime for F_p (default 2^31-1)");
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--trials", g.trials, "seeds per recipe")->check(CLI::PositiveNumber);
  app.add_option("--store", g.store, "result store (default $LEVELLAB_STORE)");
  app.add_flag("--exact-rational", g.exact_rational, "recheck certificates over Q");
  app.add_option("--seconds", g.seconds, "time budget per vector");
  app.add_option("--threads", g.threads, "scan worker threads (0 = hardware)");
  app.fallthrough();

  std::string file, h, kind, out;
  std::vector<std::string> args;
  std::size_t count = 0, type = 0, to_degree = 0;
  std::optional<std::size_t> at;
  std::int64_t from = 0, to = 0;

  auto* hvec = app.add_subcommand("hvec", "h-vector of the module in a generator file");
  hvec->add_option("file", file)->required();

  auto* expand = app.add_subcommand("expand", "i-binomial expansion of n");
  expand->add_option("n", args)->required()->expected(2);

  auto* bound = app.add_subcommand("bound", "bound and interval formulas");
  bound->add_option("kind", kind)->required();
  bound->add_option("args", args);

  auto* oseq = app.add_subcommand("osequence", "Macaulay growth check");
  oseq->add_option("hvector", h)->required();

  auto* si = app.add_subcommand("si", "SI-sequence check");
  si->add_option("hvector", h)->required();

  auto* construct_cmd = app.add_subcommand("construct", "build a module: powers|compressed|socle2|socle3");
  construct_cmd->add_option("kind", kind)->required();
  construct_cmd->add_option("args", args);
  construct_cmd->add_option("-o,--output", out, "generator file to write");

  auto* augment = app.add_subcommand("augment", "adjoin a sum of general powers");
  augment->add_option("file", file)->required();
  augment->add_option("--count", count)->required();
  augment->add_option("-o,--output", out);

  auto* quotient = app.add_subcommand("quotient", "generic subquotient of type c");
  quotient->add_option("file", file)->required();
  quotient->add_option("--type", type)->required();
  quotient->add_option("-o,--output", out);

  auto* truncate = app.add_subcommand("truncate", "derivatives of degree e' as generators");
  truncate->add_option("file", file)->required();
  truncate->add_option("--to", to_degree)->required();
  truncate->add_option("-o,--output", out);

  auto* classify = app.add_subcommand("classify", "level / non-level / unknown");
  classify->add_option("hvector", h)->required();

  auto* scan_ic = app.add_subcommand("scan-ic", "vary one entry");
  auto* scan_gic = app.add_subcommand("scan-gic", "vary entries i and e-i together");
  for (auto* s : {scan_ic, scan_gic}) {
    s->add_option("hvector", h, "base vector; '*' marks the scanned entry")->required();
    s->add_option("--at", at);
    s->add_option("--from", from)->required();
    s->add_option("--to", to)->required();
  }

  auto* verify = app.add_subcommand("verify", "replay every record of a store");
  verify->add_option("file", file)->required();

  auto* report = app.add_subcommand("report", "summarize a store");
  report->add_option("store", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kUsage;
  }
  g.prime_given = prime->count() > 0;

  try {
    const poly::PrimeField field(g.prime);

    if (*hvec) {
      const auto m = load_module(file, g);
      const auto profile = inverse::h_vector(m);
      std::cout << "h " << profile.h.to_string() << '\n'
                << "type " << m.generators().size() << '\n'
                << "independent " << (profile.independent() ? "yes" : "no") << '\n'
                << "gorenstein " << (profile.independent() && profile.h.last() == 1 ? "yes" : "no")
                << '\n';
    } else if (*expand) {
      const auto e = macaulay::binomial_expansion(to_big(args[0]), to_i64(args[1]));
      std::cout << args[0] << " = " << e.to_string() << '\n';
    } else if (*bound) {
      return run_bound(kind, args);
    } else if (*oseq) {
      const auto values = HVector::parse(h);
      if (const auto v = macaulay::first_growth_violation(values.entries())) {
        std::cout << "no: growth " << v->degree << "->" << v->degree + 1 << ": " << v->value
                  << " exceeds bound " << v->bound << '\n';
      } else {
        std::cout << "yes\n";
      }
    } else if (*si) {
      std::cout << (macaulay::is_si_sequence(HVector::parse(h)) ? "yes" : "no") << '\n';
    } else if (*construct_cmd) {
      construct::Recipe recipe;
      const auto arg = [&](std::size_t k) { return to_i64(args.at(k)); };
      if (kind == "powers" && args.size() == 3) {
        recipe = {"powers", {arg(0), arg(1), arg(2)}, {}};
      } else if (kind == "compressed" && args.size() == 3) {
        recipe = {"compressed", {arg(0), arg(1), arg(2)}, {}};
      } else if (kind == "socle2" && args.size() == 2) {
        recipe = {"socle2", {arg(0), arg(1)}, {}};
      } else if (kind == "socle3" && args.size() == 2) {
        recipe = {"socle3", {arg(0)}, {}};
        for (auto p : to_sizes(args[1])) recipe.params.push_back(static_cast<std::int64_t>(p));
      } else {
        throw CLI::ValidationError("construct",
                                   "usage: construct powers <r> <e> <m> | compressed <r> <e> <t> | "
                                   "socle2 <r> <t> | socle3 <r> <m1,...,mt>");
      }
      const auto m = construct::realize(recipe, g.seed, field);
      write_module(m, {"recipe=" + recipe.to_string(), "seed=" + std::to_string(g.seed)}, out);
    } else if (*augment) {
      Rng rng(g.seed);
      const auto m = construct::augment_with_powers(load_module(file, g), count, rng);
      write_module(m, {"augmented count=" + std::to_string(count), "seed=" + std::to_string(g.seed)}, out);
    } else if (*quotient) {
      Rng rng(g.seed);
      const auto q = inverse::generic_subquotient(load_module(file, g), type, rng);
      write_module(q.module, {"quotient type=" + std::to_string(type), "seed=" + std::to_string(g.seed)}, out);
    } else if (*truncate) {
      const auto m = inverse::truncate_level(load_module(file, g), static_cast<std::uint32_t>(to_degree));
      write_module(m, {"truncated to=" + std::to_string(to_degree)}, out);
    } else if (*classify) {
      const auto c = lab::classify(HVector::parse(h), budget_of(g), g.seed, field);
      print_classification(c);
      record(g, c);
    } else if (*scan_ic || *scan_gic) {
      const HVector base = scan_base(h, at, from);
      lab::ScanOptions options;
      options.budget = budget_of(g);
      options.seed = g.seed;
      options.field = field;
      options.threads = g.threads;
      const auto r = *scan_ic ? lab::scan_ic(base, *at, from, to, options)
                              : lab::scan_gic(base, *at, from, to, options);
      return print_scan(g, r);
    } else if (*verify) {
      const auto records = lab::store_load(file);
      std::size_t failed = 0;
      for (std::size_t k = 0; k < records.size(); ++k) {
        const auto result = lab::store_verify(records[k]);
        if (!result.ok) ++failed;
        std::cout << "record " << k + 1 << ' ' << records[k].h.to_string() << ' '
                  << (result.ok ? "ok" : "FAILED: " + result.message) << '\n';
      }
      std::cout << records.size() - failed << "/" << records.size() << " verified\n";
      return failed == 0 ? kOk : kVerifyFailed;
    } else if (*report) {
      const auto records = lab::store_load(file);
      std::map<std::string, std::size_t> counts;
      for (const auto& rec : records) {
        ++counts[lab::to_string(rec.status)];
        std::cout << rec.h.to_string() << ' ' << lab::to_string(rec.status) << ' '
                  << (rec.certificate ? rec.certificate->recipe : rec.condition) << '\n';
      }
      std::cout << "records " << records.size();
      for (const auto& [status, k] : counts) std::cout << ' ' << status << '=' << k;
      std::cout << '\n';
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error[" << to_string(e.category()) << "]: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << '\n';
    return kError;
  }
  return kOk;
}
