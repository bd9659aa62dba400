// cmachine: command-line front end.
//
// exit codes: 0 ok, 1 usage error, 2 data error, 3 oracle/verification
// mismatch, 4 resource limit (state budget, iteration budget)

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmachine/cmachine.hpp"

using namespace cmachine;

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kMismatch = 3, kResource = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kCheckpointMinTerms = 500;

struct EnumerateArgs {
  std::string engine, basis_file, method = "machine", checkpoint, output;
  int n = -1, cross_check = -1, checkpoint_every = 50;
  bool json = false;
};

struct GuessArgs {
  std::string terms_file, engine, system, verify_file;
  int terms = -1, order = -1;
  std::vector<int> algebraic, ade;
  bool egf = false, growth = false;
};

struct BijectionArgs {
  std::vector<std::string> from, to;
  std::string perm;
  int length = -1;
  bool check_lrmax = false;
};

struct IterateArgs {
  std::string system;
  int order = -1;
  bool json = false, compare_engine = false;
};

std::ostream& out_stream(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw io::DataError("cannot write " + path);
  return file;
}

void cross_check(const CountSeries& counts, const PatternSet& generated, int m) {
  if (m > kDefaultBruteForceGuard)
    throw UsageError("--cross-check is limited to n <= " + std::to_string(kDefaultBruteForceGuard));
  if (m > static_cast<int>(counts.max_index())) throw UsageError("--cross-check exceeds --n");
  const auto oracle = enumerate_av(generated, m);
  if (auto bad = first_mismatch(counts.prefix(static_cast<std::size_t>(m)), oracle))
    throw Mismatch("oracle mismatch at n=" + std::to_string(*bad) + ": got " + counts.at(*bad).get_str() +
                   ", brute force " + oracle.at(*bad).get_str());
  std::cerr << "cross-check: agrees with brute force for n <= " << m << "\n";
}

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.n < 0) throw UsageError("--n must be nonnegative");
  if (a.engine.empty() == a.basis_file.empty()) throw UsageError("give exactly one of --engine or --basis");
  CountSeries counts;
  PatternSet generated;
  if (!a.engine.empty()) {
    const auto& info = engines::find_engine(a.engine);
    generated = info.generated();
    engines::RunOptions opts;
    if (!a.checkpoint.empty()) {
      if (a.n + 1 >= kCheckpointMinTerms) {
        opts.checkpoint_path = a.checkpoint;
        opts.checkpoint_every = a.checkpoint_every;
      } else {
        std::cerr << "note: checkpointing is only used for runs of " << kCheckpointMinTerms
                  << " terms or more; ignoring --checkpoint\n";
      }
    }
    counts = engines::run_named(a.engine, a.n, opts).counts;
  } else {
    const PatternSet basis = io::read_basis(a.basis_file);
    generated = one_skew_basis(basis);
    if (a.method == "machine")
      counts = machine_class_counts(basis, a.n, state_budget_from_env());
    else
      counts = enumerate_av(generated, a.n);
  }
  if (a.cross_check >= 0) cross_check(counts, generated, a.cross_check);
  std::ofstream file;
  io::write_terms(out_stream(a.output, file), counts, a.json);
  return kOk;
}

CountSeries guess_source(const GuessArgs& a) {
  const int sources = !a.terms_file.empty() + !a.engine.empty() + !a.system.empty();
  if (sources != 1) throw UsageError("give exactly one of --terms-file, --engine, --system");
  if (!a.terms_file.empty()) return io::read_terms(a.terms_file);
  if (!a.engine.empty()) {
    if (a.terms < 1) throw UsageError("--engine needs --terms N (number of terms)");
    return engines::engine_counts(a.engine, a.terms - 1);
  }
  if (a.order < 0) throw UsageError("--system needs --order N");
  const auto r = series::iterate_system(a.system, a.order);
  CountSeries s;
  for (const auto& q : r.primary.coeffs()) s.coeffs.push_back(q.get_num());
  return s;
}

int cmd_guess(const GuessArgs& a) {
  if (a.algebraic.empty() && a.ade.empty() && a.verify_file.empty() && !a.growth)
    throw UsageError("nothing to do: give --algebraic, --ade, --verify or --growth");
  const CountSeries terms = guess_source(a);
  if (terms.empty()) throw io::DataError("no terms");
  const auto series = series::RationalSeries::from_counts(terms, a.egf);
  int status = kOk;
  try {
    if (!a.algebraic.empty()) {
      auto g = series::guess_algebraic(series, a.algebraic[0], a.algebraic[1]);
      if (g) {
        std::cout << series::to_json(*g.relation).dump() << "\n# " << series::pretty(*g.relation) << "\n";
      } else {
        std::cout << "no relation within bounds (" << g.searched << ")\n";
      }
    }
    if (!a.ade.empty()) {
      auto g = series::guess_ade(series, a.ade[0], a.ade[1]);
      if (g) {
        std::cout << series::to_json(*g.relation).dump() << "\n# " << series::pretty(*g.relation) << " (" << g.searched
                  << ")\n";
      } else {
        std::cout << "no relation within bounds (" << g.searched << ")\n";
      }
    }
  } catch (const series::InsufficientTerms& e) {
    throw io::DataError(e.what());
  }
  if (!a.verify_file.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(io::read_file(a.verify_file));
    } catch (const nlohmann::json::exception& e) {
      throw io::DataError(std::string("relation file is not JSON: ") + e.what());
    }
    bool ok = false;
    try {
      if (j.value("type", "algebraic") == "ade")
        ok = series::verify_ade(series, series::ade_relation_from_json(j));
      else
        ok = series::verify_relation(series, series::poly_relation_from_json(j));
    } catch (const nlohmann::json::exception& e) {
      throw io::DataError(std::string("malformed relation: ") + e.what());
    }
    std::cout << (ok ? "verified" : "FAILED") << " through order " << series.order() << "\n";
    if (!ok) status = kMismatch;
  }
  if (a.growth) {
    auto r = series::growth_estimate(terms);
    std::cout << "growth estimate " << r.estimate << " (ratio " << r.ratio << ", n-th root " << r.root << ", aitken "
              << r.aitken << ", " << r.trend << ")\n";
  }
  return status;
}

int cmd_bijection(const BijectionArgs& a) {
  const auto from = PatternSet::parse(a.from);
  const auto to = PatternSet::parse(a.to);
  if (a.perm.empty() == (a.length < 0)) throw UsageError("give exactly one of --perm or --length");
  auto lrmax_ok = [](const Permutation& p, const Permutation& q) {
    return left_to_right_maxima(p) == left_to_right_maxima(q);
  };
  if (!a.perm.empty()) {
    const auto pi = parse_permutation(a.perm);
    if (!canonical_sequence(pi, from)) throw io::DataError(pi.to_string() + " is not generable by the source machine");
    const auto img = transport(pi, from, to);
    if (!img) throw io::DataError("ambiguous replay for " + pi.to_string());
    std::cout << pi.to_string() << " -> " << img->to_string() << "\n";
    if (a.check_lrmax && !lrmax_ok(pi, *img)) throw Mismatch("left-to-right maxima not preserved");
    return kOk;
  }
  const auto source = list_av(one_skew_basis(from), a.length);
  const auto target_count = enumerate_av(one_skew_basis(to), a.length).at(static_cast<std::size_t>(a.length));
  std::set<Permutation> images;
  for (const auto& pi : source) {
    const auto img = transport(pi, from, to);
    if (!img) throw Mismatch("no image for " + pi.to_string());
    if (!avoids_all(*img, one_skew_basis(to))) throw Mismatch("image of " + pi.to_string() + " outside target class");
    if (a.check_lrmax && !lrmax_ok(pi, *img))
      throw Mismatch("left-to-right maxima not preserved for " + pi.to_string());
    images.insert(*img);
    std::cout << pi.to_string() << " -> " << img->to_string() << "\n";
  }
  if (images.size() != source.size() || BigInt(static_cast<unsigned long>(images.size())) != target_count)
    throw Mismatch("not a bijection at length " + std::to_string(a.length));
  std::cerr << "bijection on " << source.size() << " permutations of length " << a.length
            << (a.check_lrmax ? ", left-to-right maxima preserved" : "") << "\n";
  return kOk;
}

int cmd_iterate(const IterateArgs& a) {
  if (a.order < 0) throw UsageError("--order must be nonnegative");
  const auto r = series::iterate_system(a.system, a.order);
  CountSeries s;
  for (const auto& q : r.primary.coeffs()) s.coeffs.push_back(q.get_num());
  if (a.compare_engine) {
    const auto e = engines::engine_counts(a.system, a.order);
    if (auto bad = first_mismatch(s, e))
      throw Mismatch("system and engine differ at n=" + std::to_string(*bad));
    std::cerr << "agrees with engine through order " << a.order << "\n";
  }
  io::write_terms(std::cout, s, a.json);
  std::cerr << "settled after " << r.iterations << " iterations\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting permutation classes generated by C-machines"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "print counting sequence terms a_0..a_n");
  en->add_option("--engine", ea.engine, "specialized engine name");
  en->add_option("--basis", ea.basis_file, "JSON basis file of the container class");
  en->add_option("--method", ea.method, "for --basis: machine (default) or brute")
      ->check(CLI::IsMember({"machine", "brute"}));
  en->add_option("--n", ea.n, "largest n")->required();
  en->add_flag("--json", ea.json, "JSON array of decimal strings");
  en->add_option("--cross-check", ea.cross_check, "compare with brute force up to this n");
  en->add_option("--checkpoint", ea.checkpoint, "checkpoint file (engine runs of 500+ terms)");
  en->add_option("--checkpoint-every", ea.checkpoint_every, "levels between checkpoints")->check(CLI::PositiveNumber);
  en->add_option("-o,--output", ea.output, "write terms here instead of stdout");

  GuessArgs ga;
  auto* gu = app.add_subcommand("guess", "guess or verify relations satisfied by a generating function");
  gu->add_option("--terms-file", ga.terms_file, "terms, one per line or JSON array");
  gu->add_option("--engine", ga.engine, "take terms from an engine");
  gu->add_option("--terms", ga.terms, "number of engine terms");
  gu->add_option("--system", ga.system, "take terms from an iterated system");
  gu->add_option("--order", ga.order, "iteration order for --system");
  gu->add_option("--algebraic", ga.algebraic, "d_x d_f")->expected(2);
  gu->add_option("--ade", ga.ade, "k d")->expected(2);
  gu->add_flag("--egf", ga.egf, "use a_n/n! as coefficients");
  gu->add_option("--verify", ga.verify_file, "relation JSON to check");
  gu->add_flag("--growth", ga.growth, "print a growth-rate estimate");

  BijectionArgs ba;
  auto* bi = app.add_subcommand("bijection", "map permutations between two machines");
  bi->add_option("--from", ba.from, "container basis of the source machine")->required();
  bi->add_option("--to", ba.to, "container basis of the target machine")->required();
  bi->add_option("--perm", ba.perm, "one permutation");
  bi->add_option("--length", ba.length, "map every permutation of this length");
  bi->add_flag("--check-lrmax", ba.check_lrmax, "check left-to-right maxima are kept");

  IterateArgs ia;
  auto* it = app.add_subcommand("iterate", "iterate a built-in functional-equation system");
  it->add_option("--system", ia.system, "system id")->required();
  it->add_option("--order", ia.order, "truncation order")->required();
  it->add_flag("--json", ia.json, "JSON array of decimal strings");
  it->add_flag("--compare-engine", ia.compare_engine, "check against the engine of the same name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*en) return cmd_enumerate(ea);
    if (*gu) return cmd_guess(ga);
    if (*bi) return cmd_bijection(ba);
    if (*it) return cmd_iterate(ia);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const StateBudgetExceeded& e) {
    std::cerr << "resource limit: " << e.what() << " (raise CMACHINE_STATE_BUDGET)\n";
    return kResource;
  } catch (const series::NoConvergence& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const io::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
