// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is
// exact (integer ranks, torsion orders, determinants); the only tolerance is
// the wall-clock bound on criterion 1.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>
#include <sys/wait.h>

#include "coxtop/coefficients.hpp"
#include "coxtop/coxeter.hpp"
#include "coxtop/hc.hpp"
#include "coxtop/realization.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coxtop;

namespace {

constexpr double kCriterion1Seconds = 60.0;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "first failure: " << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << std::fixed
            << std::setprecision(2) << secs << "s)";
  const auto detail = out.detail.str();
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
}

GroupEntry free_entry(long r) { return GroupEntry{r, {}, {}}; }

GradedAbelianGroup graded(const std::map<int, long>& ranks) {
  GradedAbelianGroup g;
  for (const auto& [k, r] : ranks) g.set(k, free_entry(r));
  return g;
}

ChamberSystem thin_of(const CoxeterMatrix& M) { return thin_building(M, M.all()); }

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(COXTOP_CLI) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  out += "\n<exit " + std::to_string(WIFEXITED(raw) ? WEXITSTATUS(raw) : -1) + ">";
  return out;
}

}  // namespace

int main() {
  criterion(1, "thin decomposition witnesses and rank D^T = #{w : In(w) = T}", [](Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<const char*, const char*>> systems = {
        {"A1", "gens s"},
        {"A1xA1", "gens s t"},
        {"A2", "gens s t\ns t 3"},
        {"B2", "gens s t\ns t 4"},
        {"I2(5)", "gens s t\ns t 5"},
        {"I2(6)", "gens s t\ns t 6"},
        {"A3", "gens s t u\ns t 3\nt u 3"},
        {"B3", "gens s t u\ns t 4\nt u 3"},
        {"A1xA2", "gens r s t\ns t 3"},
        {"H3", "gens s t u\ns t 5\nt u 3"},
    };
    for (const auto& [name, text] : systems) {
      const auto M = parse_coxeter_matrix(text);
      const CoefficientSystem A(thin_of(M));
      const auto w = verify_decomposition(A, GenSet());
      o.require(w.square && (w.determinant == 1 || w.determinant == -1), std::string(name) + " witness");
      const oracle::FloatGroup ref(M, 1000);
      o.require(ref.complete && ref.size() == A.chambers().size(), std::string(name) + " oracle order");
      for (GenSet T : A.poset().members()) {
        const auto d = A.d_quotient(T);
        o.require(d.is_free() && d.free_rank == Rank(static_cast<long>(ref.count_with_descents(T.bits()))),
                  std::string(name) + " rank D^" + M.name(T));
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < kCriterion1Seconds, "runtime above one minute");
  });

  criterion(2, "thick decomposition witnesses, rank sums equal |Phi|", [](Outcome& o) {
    const auto fano = projective_plane_building(2);
    const auto a1 = thin_of(parse_coxeter_matrix("gens r"));
    const std::vector<std::pair<std::string, ChamberSystem>> cases = {
        {"digon(2,3)", digon_building(2, 3)},
        {"digon(3,3)", digon_building(3, 3)},
        {"Fano", fano},
        {"Fano x A1", product_building(fano, a1)},
    };
    // |Phi| from the constructions: p*q, 7 points on 3 lines each, 21*2
    const std::vector<std::size_t> expected_size = {6, 9, 21, 42};
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto& [name, Phi] = cases[i];
      o.require(Phi.size() == expected_size[i], name + " chamber count");
      const CoefficientSystem A(Phi);
      for (GenSet T : A.poset().members()) {
        const auto w = verify_decomposition(A, T);
        o.require(w.square && (w.determinant == 1 || w.determinant == -1),
                  name + " witness at T = " + A.matrix().name(T));
        std::size_t sum = 0;
        for (const auto& piece : w.pieces) sum += piece.second;
        o.require(sum == A.rank(T), name + " rank sum at T = " + A.matrix().name(T));
      }
      std::size_t total = 0;
      for (const auto& piece : verify_decomposition(A, GenSet()).pieces) total += piece.second;
      o.require(total == Phi.size(), name + " rank sum equals |Phi|");
    }
  });

  criterion(3, "H*(Delta; I(A)) concentrated in the top degree and equal to D^{}", [](Outcome& o) {
    const std::vector<std::tuple<std::string, ChamberSystem, long>> cases = {
        {"thin A2", thin_of(test::matrix("a2")), 1},  // one element without descents
        {"digon(3,3)", digon_building(3, 3), 4},      // (p-1)(q-1)
        {"Fano", projective_plane_building(2), 8},    // q^3
    };
    for (const auto& [name, Phi, rank] : cases) {
      const CoefficientSystem A(Phi);
      const int n = A.matrix().rank() - 1;
      const auto h = coefficient_cohomology(classical_chamber(A.matrix()), SimplicialComplex(), A, true);
      o.require(h.entries().size() == 1 && h.entries().begin()->first == n, name + " concentration");
      o.require(h.at(n) == A.d_quotient(GenSet()), name + " H^n = D^{}");
      o.require(h.at(n) == free_entry(rank), name + " rank " + std::to_string(rank) + ", no torsion");
    }
  });

  criterion(4, "realized cohomology equals the decomposition formula", [](Outcome& o) {
    const std::vector<std::pair<std::string, ChamberSystem>> cases = {
        {"thin A2", thin_of(test::matrix("a2"))},
        {"digon(3,3)", digon_building(3, 3)},
        {"Fano", projective_plane_building(2)},
    };
    for (const auto& [name, Phi] : cases) {
      const CoefficientSystem A(Phi);
      for (const bool use_k : {false, true}) {
        const auto X = use_k ? davis_chamber(A.matrix()) : classical_chamber(A.matrix());
        const auto c = formula_cross_check(A, X);
        o.require(c.equal, name + (use_k ? " with K" : " with Delta") + ": " + c.realized.str() + " vs " +
                               c.formula.str());
      }
    }
    const auto fano = projective_plane_building(2);
    const auto R = realize(fano, classical_chamber(fano.type()));
    o.require(realization_cohomology(R) == graded({{0, 1}, {1, 8}}), "Fano with Delta is (Z, Z^8)");
    o.require(oracle::betti(R.complex) == std::vector<std::size_t>{1, 8}, "Heawood Betti numbers by F_p ranks");
  });

  criterion(5, "sigma formulas for every T and U on thin A2 and Fano", [](Outcome& o) {
    for (const auto& [name, Phi] : std::vector<std::pair<std::string, ChamberSystem>>{
             {"thin A2", thin_of(test::matrix("a2"))}, {"Fano", projective_plane_building(2)}}) {
      const CoefficientSystem A(Phi);
      const auto& M = A.matrix();
      int pairs = 0;
      for (GenSet T : A.poset().members())
        for (GenSet U : all_subsets(M.all() - T)) {
          ++pairs;
          o.require(sigma_formula_check(A, T, U).passed(), name + " T=" + M.name(T) + " U=" + M.name(U));
        }
      o.require(pairs == 9, name + " pair count");
    }
  });

  criterion(6, "Coxeter complexes are spheres", [](Outcome& o) {
    o.require(realization_cohomology(coxeter_complex(test::matrix("a2"))) == graded({{0, 1}, {1, 1}}), "A2");
    o.require(realization_cohomology(coxeter_complex(test::matrix("b2"))) == graded({{0, 1}, {1, 1}}), "B2");
    o.require(realization_cohomology(coxeter_complex(test::matrix("a3"))) == graded({{0, 1}, {2, 1}}), "A3");
  });

  criterion(7, "vcd", [](Outcome& o) {
    o.require(vcd(test::matrix("freeprod3")).value == 1, "free product of three Z/2");
    o.require(vcd(test::matrix("dinf")).value == 1, "infinite dihedral");
    o.require(vcd(test::matrix("triangle333")).value == 2, "(3,3,3) triangle");
    o.require(vcd(test::matrix("square")).value == 2, "D_inf x D_inf");
  });

  criterion(8, "duality", [](Outcome& o) {
    const auto a = duality_check(test::matrix("freeprod3"));
    o.require(a.is_duality && a.n == 1, "free product of three Z/2");
    const auto b = duality_check(test::matrix("triangle333"));
    o.require(b.is_duality && b.n == 2, "(3,3,3) triangle");
    const auto c = duality_check(test::matrix("mixed"));
    o.require(!c.is_duality && c.offending.has_value(), "mixed concentration");
  });

  criterion(9, "classification agrees with the cosine Gram test on all rank <= 4 matrices", [](Outcome& o) {
    const std::array<int, 6> values = {2, 3, 4, 5, 6, kInfinity};
    const std::vector<std::string> labels = {"a", "b", "c", "d"};
    long matrices = 0;
    long subsets = 0;
    for (int n = 1; n <= 4; ++n) {
      const int pairs = n * (n - 1) / 2;
      long combos = 1;
      for (int i = 0; i < pairs; ++i) combos *= 6;
      for (long code = 0; code < combos; ++code) {
        CoxeterMatrix M(std::vector<std::string>(labels.begin(), labels.begin() + n));
        long c = code;
        for (int s = 0; s < n; ++s)
          for (int t = s + 1; t < n; ++t) {
            M.set(s, t, values[static_cast<std::size_t>(c % 6)]);
            c /= 6;
          }
        ++matrices;
        for (GenSet T : all_subsets(M.all())) {
          if (T.empty()) continue;
          ++subsets;
          if (is_spherical(M, T) != cosine_gram_definite(M, T)) {
            o.require(false, M.to_text() + " T=" + M.name(T));
            return;
          }
        }
      }
    }
    o.detail << matrices << " matrices, " << subsets << " subsets";
  });

  criterion(10, "growth series against brute-force descent counts", [](Outcome& o) {
    const auto M = test::matrix("freeprod3");
    const std::vector<std::uint64_t> expected = {0, 1, 2, 4, 8, 16, 32, 64, 128};
    const auto series = thin_multiplicity_series(M, M.subset("s"), 8);
    o.require(series == expected, "free product T = {s}");
    const oracle::FloatGroup ref(M, 9);
    o.require(series == ref.series(M.subset("s").bits(), 8), "float oracle, T = {s}");
    for (const char* name : {"freeprod3", "triangle333", "square", "dinf", "mixed", "a2", "a3", "h3"}) {
      const auto G = test::matrix(name);
      std::vector<std::uint64_t> identity_only(9, 0);
      identity_only[0] = 1;
      o.require(thin_multiplicity_series(G, GenSet(), 8) == identity_only, std::string(name) + " T = {}");
    }
  });

  criterion(11, "filtration ranks sum to |Phi|; graded rows sum to H*(U(Phi, K))", [](Outcome& o) {
    const auto fano = projective_plane_building(2);
    const std::vector<std::pair<std::string, ChamberSystem>> cases = {
        {"thin A2", thin_of(test::matrix("a2"))},
        {"digon(2,3)", digon_building(2, 3)},
        {"digon(3,3)", digon_building(3, 3)},
        {"Fano", fano},
        {"Fano x A1", product_building(fano, thin_of(parse_coxeter_matrix("gens r")))},
    };
    for (const auto& [name, Phi] : cases) {
      const CoefficientSystem A(Phi);
      const auto f = filtration_ranks(A);
      std::size_t total = 0;
      for (auto r : f.graded_ranks) total += r;
      o.require(f.matches && total == Phi.size(), name + " graded ranks sum");
      GradedAbelianGroup sum;
      for (const auto& row : graded_module_report(A)) sum = sum + row.groups;
      o.require(sum == realization_cohomology(realize(Phi, davis_chamber(Phi.type()))), name + " graded rows");
    }
  });

  criterion(12, "repeated CLI runs give byte-identical output", [](Outcome& o) {
    auto d = [](const std::string& f) { return test::data_path(f); };
    const std::vector<std::string> suite = {
        "spherical-subsets " + d("h3.cox") + " --json",
        "nerve " + d("square.cox") + " --json",
        "davis-chamber " + d("triangle333.cox") + " --json",
        "cohomology " + d("a2.cox") + " --chamber-file " + d("fano.bld") + " --model delta --augmented --json",
        "cohomology " + d("triangle333.cox") + " --model K --T s --json",
        "realize " + d("fano.bld") + " --model delta --json",
        "coxeter-complex " + d("a3.cox") + " --json",
        "decompose " + d("fano.bld") + " --json",
        "verify-decomposition " + d("digon33.bld") + " --json",
        "sigma-check " + d("thin_a2.bld") + " --json",
        "hc " + d("freeprod3.cox") + " --json --N 6",
        "hc " + d("a2.cox") + " --chamber-file " + d("fano.bld") + " --json",
        "vcd " + d("square.cox") + " --json",
        "duality " + d("mixed.cox") + " --json",
        "growth " + d("freeprod3.cox") + " --T s --N 8 --json",
        "filtration " + d("fano.bld") + " --json",
        "verify-building " + d("fano.bld") + " --json",
        "metric-flag " + d("h3.cox") + " --json",
        "emit-building projective:2",
    };
    std::string first;
    std::string second;
    for (const auto& args : suite) first += run_cli(args) + "\n";
    for (const auto& args : suite) second += run_cli(args) + "\n";
    o.require(first.find("<exit 0>") != std::string::npos, "suite ran");
    std::size_t pos = 0;
    int bad_exit = 0;
    while ((pos = first.find("<exit ", pos)) != std::string::npos) {
      if (first.compare(pos, 8, "<exit 0>") != 0) ++bad_exit;
      ++pos;
    }
    o.require(bad_exit == 0, std::to_string(bad_exit) + " commands exited nonzero");
    o.require(first == second, "outputs differ between runs");
    o.detail << suite.size() << " commands, " << first.size() << " bytes";
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
