// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance             run every criterion
//   acceptance --only N    run criterion N
//   acceptance --basis-n4  include S_4 in the basis determinant check
//
// Exit status is 0 when every selected criterion passes.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "../operator_properties.hpp"
#include "../support.hpp"

namespace {

using namespace qgroth;
using nlohmann::json;

// Runtime limits in milliseconds.
constexpr double kGoldenLimitMs = 1000.0;
constexpr double kCauchyN4LimitMs = 60'000.0;
constexpr double kQuantumCauchyN3LimitMs = 60'000.0;
constexpr double kOrthogonalityN4LimitMs = 120'000.0;

// Counts.
constexpr int kQuantumGoldenMinimum = 11;
constexpr std::size_t kOperatorAssertionsMinimum = 1000;
constexpr int kQuantizeRoundTrips = 100;
constexpr int kInterpolationSamplesN3 = 50;
constexpr int kInterpolationSamplesN4 = 10;
constexpr unsigned kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

std::string ms_str(double ms) {
  std::ostringstream s;
  s.precision(ms < 10 ? 2 : 0);
  s << std::fixed << ms << " ms";
  return s.str();
}

// Runs verify() and folds the report into the outcome.
VerificationReport check(Outcome& o, const std::string& id, int n, const CheckOptions& opts = {}) {
  const VerificationReport r = verify(id, n, opts);
  o.require(r.passed(), id + " n=" + std::to_string(n) + " " + r.counterexample.dump());
  return r;
}

void golden_classical(Outcome& o) {
  Stopwatch sw;
  const auto& F = classical_families(3);
  int matched = 0;
  for (const auto& e : testing::classical_golden()) {
    const Permutation w = perm_from_word(e.word, 3);
    const MultiPoly& got = e.family == "G" ? F.G.at(w) : F.H.at(w);
    const MultiPoly printed = parse_poly(e.printed);
    if (got == printed) {
      ++matched;
    } else {
      o.note << "\n    " << testing::golden_name(e) << ": computed - printed = " << to_text(got - printed);
    }
  }
  const double ms = sw.ms();
  o.note << " " << matched << "/12 exact, " << ms_str(ms);
  o.require(matched == 12, "all 12 entries");
  o.require(ms < kGoldenLimitMs, "runtime < " + ms_str(kGoldenLimitMs));
}

void golden_quantum(Outcome& o) {
  Stopwatch sw;
  const auto& Q = quantum_families(3);
  int matched = 0;
  std::ostringstream diffs;
  for (const auto& e : testing::quantum_golden()) {
    const Permutation w = perm_from_word(e.word, 3);
    const MultiPoly& got = e.family == "qG" ? Q.G.at(w) : Q.H.at(w);
    const MultiPoly printed = parse_poly(e.printed);
    if (got == printed) {
      ++matched;
    } else {
      diffs << "\n    " << testing::golden_name(e) << ": computed " << to_text(got)
            << "\n      printed  " << to_text(printed)
            << "\n      computed - printed = " << to_text(got - printed);
    }
  }
  const double ms = sw.ms();
  o.note << " " << matched << "/12 exact (minimum " << kQuantumGoldenMinimum << "), " << ms_str(ms);
  o.require(matched >= kQuantumGoldenMinimum, "at least " + std::to_string(kQuantumGoldenMinimum) + " entries");
  o.require(ms < kGoldenLimitMs, "runtime < " + ms_str(kGoldenLimitMs));
  o.note << diffs.str();
}

void cauchy(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = check(o, "cauchy", n);
    o.note << " n=" << n << ": " << status_name(r.status) << " " << ms_str(r.ms) << ";";
    if (n == 4) o.require(r.ms <= kCauchyN4LimitMs, "n=4 runtime <= " + ms_str(kCauchyN4LimitMs));
  }
}

void quantum_cauchy(Outcome& o) {
  for (int n = 2; n <= 3; ++n) {
    const auto r = check(o, "quantum_cauchy", n);
    o.note << " n=" << n << ": " << status_name(r.status) << " " << ms_str(r.ms) << ";";
    if (n == 3) o.require(r.ms <= kQuantumCauchyN3LimitMs, "n=3 runtime <= " + ms_str(kQuantumCauchyN3LimitMs));
  }
}

void operator_evaluation(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = check(o, "theorem1", n);
    o.note << " theorem1 n=" << n << ": " << status_name(r.status) << ";";
  }
  for (int n = 2; n <= 3; ++n) {
    const auto r = check(o, "corollary1", n);
    o.note << " corollary1 n=" << n << ": " << status_name(r.status) << ";";
  }
}

void orthogonality(Outcome& o) {
  for (int n = 3; n <= 4; ++n) {
    const auto r = check(o, "orthogonality", n);
    o.note << " n=" << n << ": " << status_name(r.status) << " " << ms_str(r.ms) << ";";
    if (n == 4) o.require(r.ms <= kOrthogonalityN4LimitMs, "n=4 runtime <= " + ms_str(kOrthogonalityN4LimitMs));
  }
}

void pieri(Outcome& o) {
  for (int n = 3; n <= 4; ++n) {
    const auto r = check(o, "pieri_simple", n);
    o.note << " simple n=" << n << ": " << status_name(r.status) << ";";
  }
  const auto r = check(o, "pieri_double", 3);
  o.note << " double n=3: " << status_name(r.status) << " detail " << r.detail.dump();
  if (r.passed() && r.detail.value("holding_convention", json()) != "J_signed") {
    o.note << " [convention finding: the signed convention fails]";
  }
}

void interpolation(Outcome& o) {
  CheckOptions three;
  three.interpolation_samples = kInterpolationSamplesN3;
  CheckOptions four;
  four.interpolation_samples = kInterpolationSamplesN4;
  const auto a = check(o, "interpolation", 3, three);
  const auto b = check(o, "interpolation", 4, four);
  o.note << " n=3 " << kInterpolationSamplesN3 << " samples: " << status_name(a.status) << "; n=4 "
         << kInterpolationSamplesN4 << " samples: " << status_name(b.status);
}

void involution(Outcome& o) {
  const auto r = check(o, "involution", 3);
  o.note << " n=3: " << status_name(r.status) << "; holding conventions "
         << r.detail.value("holding_conventions", json::array()).dump();
}

void operator_suite(Outcome& o) {
  const auto t = testing::run_operator_properties(kSeed);
  o.note << " " << t.assertions << " assertions, " << t.failures << " failures";
  for (const auto& f : t.first_failures) o.note << "\n    " << f;
  o.require(t.failures == 0, "zero failures");
  o.require(t.assertions >= kOperatorAssertionsMinimum,
            "at least " + std::to_string(kOperatorAssertionsMinimum) + " assertions");
}

void quantization(Outcome& o) {
  std::mt19937 rng(kSeed);
  int roundtrips = 0;
  for (int k = 0; k < kQuantizeRoundTrips; ++k) {
    const int n = 2 + k % 2;
    const MultiPoly f = testing::random_poly(rng, n, 4, {VarKind::X}, 6);
    const Quantization qz = quantize(f, n);
    if (evaluate_operator(qz.F, n) == f) {
      ++roundtrips;
    } else {
      o.require(false, "roundtrip " + to_text(f));
    }
  }
  int elementary_ok = 0, elementary_total = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i <= n; ++i) {
      ++elementary_total;
      const bool ok = evaluate_operator(OperatorPoly{quantum_elementary(n, i)}, n) ==
                      elementary(i, alphabet(VarKind::X, n));
      elementary_ok += ok;
      o.require(ok, "e~_" + std::to_string(i) + "(X)(1) at n=" + std::to_string(n));
    }
  }
  int schubert_ok = 0;
  const auto& C = classical_families(3);
  const auto& Q = quantum_families(3);
  for (const auto& w : enumerate_sn(3)) {
    const bool ok = quantize(single(C.S.at(w)), 3).fq == single(Q.S.at(w));
    schubert_ok += ok;
    o.require(ok, "quantize(S_w(x)) w=" + w.str());
  }
  o.note << " roundtrip " << roundtrips << "/" << kQuantizeRoundTrips << "; e~_i(X)(1)=e_i "
         << elementary_ok << "/" << elementary_total << "; quantize(S_w(x))=S~_w(x,0) "
         << schubert_ok << "/6";
}

void normal_forms(Outcome& o, bool basis_n4) {
  int generators = 0, idempotent = 0, support = 0;
  std::mt19937 rng(kSeed);
  for (int n = 1; n <= 4; ++n) {
    const auto stairs = staircase(n);
    const std::set<Monomial> allowed(stairs.begin(), stairs.end());
    for (Ideal c : {Ideal::I, Ideal::JSigned, Ideal::JUnsigned}) {
      const NormalFormContext ctx(n, c);
      std::vector<MultiPoly> gens = ctx.ideal_generators();
      gens.insert(gens.end(), ctx.generators().begin(), ctx.generators().end());
      for (const auto& g : gens) {
        const bool ok = ctx.reduce(g).is_zero();
        generators += ok;
        o.require(ok, ideal_name(c) + " generator " + to_text(g));
      }
      for (int k = 0; k < 20; ++k) {
        const MultiPoly f = testing::random_poly(rng, n, 6, {VarKind::X, VarKind::Y, VarKind::Beta});
        const MultiPoly r = ctx.reduce(f);
        const bool idem = ctx.reduce(r) == r;
        idempotent += idem;
        o.require(idem, "idempotence " + to_text(f));
        bool on_stairs = true;
        for (const auto& t : r.terms()) on_stairs &= allowed.count(t.mono.restricted(VarKind::X)) > 0;
        support += on_stairs;
        o.require(on_stairs, "staircase support " + to_text(f));
      }
    }
  }
  o.note << " generators reduced to 0: " << generators << "; idempotent: " << idempotent
         << "; staircase support: " << support << ";";
  const int top = basis_n4 ? 4 : 3;
  for (int n = 1; n <= top; ++n) {
    std::vector<MultiPoly> polys;
    for (const auto& w : enumerate_sn(n)) polys.push_back(single(classical_families(n).G.at(w)));
    const MultiPoly det = bareiss_determinant(coefficient_matrix(polys, staircase(n), VarKind::X));
    const bool unit = det == constant(1) || det == constant(-1);
    o.note << " det(G_w(x)) n=" << n << ": " << to_text(det) << ";";
    o.require(unit, "basis determinant +-1 at n=" + std::to_string(n));
  }
}

MultiPoly degenerate(const MultiPoly& f, bool q0, bool b0, bool y0) {
  MultiPoly r = specialize(f, b0 ? std::optional<long>(0) : std::nullopt,
                           q0 ? std::optional(std::vector<long>(kMaxRank - 1, 0)) : std::nullopt);
  return y0 ? single(r) : r;
}

void degenerations(Outcome& o) {
  const auto& C = classical_families(3);
  const auto& Q = quantum_families(3);
  int lattice = 0;
  for (int mask = 0; mask < 8; ++mask) {
    const bool q0 = mask & 1, b0 = mask & 2, y0 = mask & 4;
    for (const auto& w : enumerate_sn(3)) {
      // Each family and its image one step down the lattice.
      const std::vector<std::pair<const MultiPoly*, const MultiPoly*>> pairs = {
          {&Q.G.at(w), q0 ? (b0 ? &C.S.at(w) : &C.G.at(w)) : (b0 ? &Q.S.at(w) : &Q.G.at(w))},
          {&Q.H.at(w), q0 ? (b0 ? &C.S.at(w) : &C.H.at(w)) : (b0 ? &Q.S.at(w) : &Q.H.at(w))},
          {&Q.S.at(w), q0 ? &C.S.at(w) : &Q.S.at(w)},
          {&C.G.at(w), b0 ? &C.S.at(w) : &C.G.at(w)},
          {&C.H.at(w), b0 ? &C.S.at(w) : &C.H.at(w)},
      };
      for (const auto& [from, to] : pairs) {
        const bool ok = degenerate(*from, q0, b0, y0) == degenerate(*to, q0, b0, y0);
        lattice += ok;
        o.require(ok, "lattice w=" + w.str() + " mask=" + std::to_string(mask));
      }
    }
  }
  // Single-alphabet families are the y = 0 specializations.
  for (const auto& fam : {"G", "H", "S", "qG", "qH", "qS"}) {
    for (const auto& w : enumerate_sn(3)) {
      const bool ok = family_member(std::string(fam) + "x", w) == single(family_member(fam, w));
      lattice += ok;
      o.require(ok, std::string(fam) + "x w=" + w.str());
    }
  }
  o.note << " lattice checks " << lattice << ";";
  for (int n = 2; n <= 4; ++n) check(o, "closed_forms", n);
  for (int n = 3; n <= 4; ++n) {
    check(o, "moebius", n);
    check(o, "inversion", n);
    check(o, "duality", n);
  }
  check(o, "dominant", 4);
  for (int n = 2; n <= 3; ++n) check(o, "stability", n);
  check(o, "corollary2", 3);
  check(o, "classical_limit", 3);
  o.note << " closed_forms n=2..4, moebius/inversion/duality n=3,4, dominant S_4,"
            " stability n=2,3, corollary2 n=3, classical_limit n=3";
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool basis_n4 = false;
  app.add_option("--only", only, "run a single criterion (1-13)")->check(CLI::Range(1, 13));
  app.add_flag("--basis-n4", basis_n4, "include n=4 in the basis determinant");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "golden classical S_3 table", golden_classical},
      {2, "golden quantum S_3 table", golden_quantum},
      {3, "Cauchy formula n=2,3,4", cauchy},
      {4, "quantum Cauchy identity n=2,3", quantum_cauchy},
      {5, "quantum Schubert and dual classes evaluated at X", operator_evaluation},
      {6, "orthogonality S_3, S_4", orthogonality},
      {7, "Pieri rules", pieri},
      {8, "interpolation formula", interpolation},
      {9, "involution congruence S_3", involution},
      {10, "operator property suite", operator_suite},
      {11, "quantization", quantization},
      {12, "normal forms and basis", [&](Outcome& o) { normal_forms(o, basis_n4); }},
      {13, "degenerations", degenerations},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    Outcome o;
    Stopwatch sw;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << " ("
              << ms_str(sw.ms()) << "):" << o.note.str() << std::endl;
    all_pass &= o.pass;
  }
  return all_pass ? 0 : 1;
}
