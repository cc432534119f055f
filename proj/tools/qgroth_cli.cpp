// Command-line front end: compute, table, verify, reduce, quantize.
//
// Exit codes: 0 success (verify: every report passed or was skipped),
// 1 at least one failed identity, 2 bad arguments.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qgroth/catalog.hpp"

namespace {

using namespace qgroth;
using nlohmann::json;

constexpr int kDefaultCap = 4;
constexpr int kQuantumCauchyCap = 3;
constexpr int kForcedCap = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Specialization {
  std::optional<long> beta;
  std::vector<long> q;
  bool y0 = false;

  MultiPoly apply(const MultiPoly& f) const {
    MultiPoly r = specialize(f, beta, q.empty() ? std::nullopt : std::optional(q));
    return y0 ? kill(r, VarKind::Y) : r;
  }
};

std::string label(const Permutation& w) {
  if (w.is_identity()) return "id";
  return word_str(reduced_words(w, 1).front());
}

std::string latex_name(const FamilyInfo& info, const Permutation& w) {
  std::string args = info.single ? "(x)" : "(x,y)";
  std::string idx = w.is_identity() ? "{\\rm id}" : label(w);
  return info.latex + "_{" + idx + "}" + args;
}

json record(const std::string& family, const Permutation& w, const MultiPoly& f) {
  return {{"family", family},
          {"n", w.n()},
          {"perm", w.oneline()},
          {"word", reduced_words(w, 1).front()},
          {"poly", to_json(f)}};
}

void check_family(const std::string& family) {
  try {
    (void)family_info(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Permutation selector(int n, const std::optional<std::string>& word,
                     const std::optional<std::string>& perm) {
  if (word && perm) throw UsageError("give either --word or --perm, not both");
  if (!word && !perm) throw UsageError("one of --word or --perm is required");
  try {
    if (word) return perm_from_word(parse_word(*word), n);
    Permutation p = parse_perm(*perm);
    if (p.n() != n) throw UsageError("--perm rank does not match --n");
    return p;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_rank(int n) {
  if (n < 1 || n > kMaxRank) {
    throw UsageError("--n must lie in 1.." + std::to_string(kMaxRank));
  }
}

int cmd_compute(int n, const std::string& family, const std::optional<std::string>& word,
                const std::optional<std::string>& perm, const std::string& format,
                const Specialization& spec) {
  check_rank(n);
  check_family(family);
  const Permutation w = selector(n, word, perm);
  const MultiPoly f = spec.apply(family_member(family, w));
  if (format == "json") {
    std::cout << record(family, w, f).dump() << "\n";
  } else if (format == "latex") {
    std::cout << latex_name(family_info(family), w) << " = " << to_latex(f) << "\n";
  } else {
    std::cout << to_text(f) << "\n";
  }
  return 0;
}

int cmd_table(int n, const std::string& family, const std::string& format,
              const Specialization& spec) {
  check_rank(n);
  check_family(family);
  const FamilyInfo& info = family_info(family);
  const auto perms = enumerate_sn(n);
  if (format == "json") {
    json rows = json::array();
    for (const auto& w : perms) rows.push_back(record(family, w, spec.apply(family_member(family, w))));
    std::cout << rows.dump(1) << "\n";
  } else if (format == "latex") {
    std::cout << "\\begin{align*}\n";
    for (std::size_t i = 0; i < perms.size(); ++i) {
      std::cout << latex_name(info, perms[i]) << " &= "
                << to_latex(spec.apply(family_member(family, perms[i])))
                << (i + 1 < perms.size() ? " \\\\\n" : "\n");
    }
    std::cout << "\\end{align*}\n";
  } else {
    for (const auto& w : perms) {
      std::cout << label(w) << "\t" << to_text(spec.apply(family_member(family, w))) << "\n";
    }
  }
  return 0;
}

int rank_cap(const std::string& id) {
  return id == "quantum_cauchy" ? kQuantumCauchyCap : kDefaultCap;
}

unsigned worker_count() {
  if (const char* env = std::getenv("QGROTH_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

int cmd_verify(int n, std::vector<std::string> ids, bool all, bool force, unsigned seed) {
  if (n < 1 || n > kForcedCap) throw UsageError("--n must lie in 1.." + std::to_string(kForcedCap));
  if (all && !ids.empty()) throw UsageError("give identity ids or --all, not both");
  if (!all && ids.empty()) throw UsageError("no identity ids given (use --all for the catalog)");
  for (const auto& id : ids) {
    if (!is_identity(id)) throw UsageError("unknown identity id: " + id);
    if (!force && n > rank_cap(id)) {
      throw UsageError(id + " is capped at n=" + std::to_string(rank_cap(id)) +
                       " (use --force-n)");
    }
  }
  if (all) ids = identity_ids();

  CheckOptions opts;
  opts.seed = seed;
  std::vector<std::promise<VerificationReport>> slots(ids.size());
  std::vector<std::future<VerificationReport>> results;
  for (auto& s : slots) results.push_back(s.get_future());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) {
      VerificationReport r;
      if (!force && n > rank_cap(ids[i])) {
        r.id = ids[i];
        r.n = n;
        r.status = Status::Skipped;
        r.detail = {{"reason", "rank cap " + std::to_string(rank_cap(ids[i])) + "; use --force-n"}};
      } else {
        r = verify(ids[i], n, opts);
      }
      slots[i].set_value(std::move(r));
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(ids.size()));
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  bool failed = false;
  for (auto& f : results) {
    const VerificationReport r = f.get();
    failed |= r.status == Status::Fail;
    std::cout << r.to_json().dump() << std::endl;
  }
  for (auto& t : pool) t.join();
  return failed ? 1 : 0;
}

Ideal parse_ideal(const std::string& s) {
  if (s == "I") return Ideal::I;
  if (s == "J_signed") return Ideal::JSigned;
  if (s == "J_unsigned") return Ideal::JUnsigned;
  throw UsageError("unknown ideal: " + s);
}

MultiPoly parse_or_usage(const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void emit(const MultiPoly& f, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(f).dump() << "\n";
  } else if (format == "latex") {
    std::cout << to_latex(f) << "\n";
  } else {
    std::cout << to_text(f) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and quantum double Grothendieck and Schubert polynomials"};
  app.require_subcommand(1);

  int n = 3;
  std::string family = "G";
  std::optional<std::string> word, perm;
  std::string format = "text";
  Specialization spec;
  std::vector<long> q_values;
  std::optional<long> beta_value;

  auto add_family_options = [&](CLI::App* sub) {
    sub->add_option("--n", n, "rank")->required();
    sub->add_option("--family", family, "G H S Gx Hx Sx qG qH qS qGx qHx qSx bG bH")->required();
    sub->add_option("--format", format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--beta", beta_value, "specialize beta to an integer");
    sub->add_option("--q", q_values, "specialize q_1,q_2,... to integers")->delimiter(',');
    sub->add_flag("--y0", spec.y0, "set y = 0");
  };

  CLI::App* compute = app.add_subcommand("compute", "print one family member");
  add_family_options(compute);
  compute->add_option("--word", word, "reduced word, e.g. 121 (empty for id)");
  compute->add_option("--perm", perm, "one-line permutation, e.g. 3,2,1");

  CLI::App* table = app.add_subcommand("table", "print all n! family members");
  add_family_options(table);

  std::vector<std::string> ids;
  bool all = false;
  bool force = false;
  unsigned seed = CheckOptions{}.seed;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run identity checks; JSON lines");
  verify_cmd->add_option("--n", n, "rank")->required();
  verify_cmd->add_option("ids", ids, "identity ids");
  verify_cmd->add_flag("--all", all, "run the whole catalog");
  verify_cmd->add_flag("--force-n", force, "lift the default rank caps");
  verify_cmd->add_option("--seed", seed, "seed for randomized checks");

  std::string ideal = "I";
  std::string poly;
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "normal form modulo I_n or J_n");
  reduce_cmd->add_option("--n", n, "rank")->required();
  reduce_cmd->add_option("--ideal", ideal, "I, J_signed or J_unsigned");
  reduce_cmd->add_option("--poly", poly, "polynomial, e.g. \"x1^2 + x1*x2\"")->required();
  reduce_cmd->add_option("--format", format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  CLI::App* quantize_cmd = app.add_subcommand("quantize", "quantized polynomial f~");
  quantize_cmd->add_option("--n", n, "rank")->required();
  quantize_cmd->add_option("--poly", poly, "polynomial in x (coefficients may use y, b, q)")
      ->required();
  quantize_cmd->add_option("--format", format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  spec.beta = beta_value;
  if (q_values.size() == 1 && n > 2) q_values.assign(n - 1, q_values.front());
  spec.q = q_values;
  try {
    if (*compute) return cmd_compute(n, family, word, perm, format, spec);
    if (*table) return cmd_table(n, family, format, spec);
    if (*verify_cmd) return cmd_verify(n, ids, all, force, seed);
    if (*reduce_cmd) {
      check_rank(n);
      emit(normal_form(parse_or_usage(poly), NormalFormContext(n, parse_ideal(ideal))), format);
      return 0;
    }
    if (*quantize_cmd) {
      check_rank(n);
      emit(quantize(parse_or_usage(poly), n).fq, format);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
    return 3;
  }
  return 2;
}
