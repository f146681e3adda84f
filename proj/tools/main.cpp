#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "plethysm/hwv.hpp"
#include "plethysm/json_io.hpp"

// Exit codes: 0 success, 1 a check that should hold mathematically failed,
// 2 malformed or out-of-range input (nothing written to stdout).

namespace {

using namespace plethysm;
using nlohmann::json;

void emit(const json& doc) { std::cout << doc.dump(2) << std::endl; }

// expansions beyond this many representatives need --force
const BigInt kExpansionGuard = BigInt(20000000);

struct MultArgs {
  int k = 0, d = 0;
  std::string lambda;
  bool oracle = false;
};

int cmd_mult(const MultArgs& a, int n_override, bool force) {
  Partition lam = Partition::parse(a.lambda);
  if (lam.weight() != static_cast<long long>(a.k) * a.d) {
    std::cerr << "mult: |lambda| must equal k*d\n";
    return 2;
  }
  auto tabs = enumerate_pieri_tableaux(a.k, a.d, lam);
  json doc = {{"k", a.k},
              {"d", a.d},
              {"lambda", lam.parts()},
              {"a", tabs.size()}};
  int rc = 0;
  if (a.oracle) {
    Partition mu = lam.conjugate();
    int n = n_override > 0 ? n_override : std::max(a.k, lam.part(1));
    long long dim = hwv_space_dim(a.k, a.d, mu, n);
    auto table = decompose_tuple_power(a.k, a.d, n, Functor::wedge, force);
    BigInt om = table.multiplicity(mu);
    bool match = BigInt(static_cast<long long>(tabs.size())) == BigInt(dim) &&
                 BigInt(static_cast<long long>(tabs.size())) == om;
    doc["oracle"] = {{"n", n},
                     {"hwv_dim", dim},
                     {"tensor_power_multiplicity", om.str()},
                     {"match", match}};
    if (!match) rc = 1;
  }
  emit(doc);
  return rc;
}

struct BasisArgs {
  int k = 0, d = 0;
  std::string lambda, out;
};

int cmd_hwv_basis(const BasisArgs& a) {
  Partition lam = Partition::parse(a.lambda);
  if (lam.weight() != static_cast<long long>(a.k) * a.d) {
    std::cerr << "hwv-basis: |lambda| must equal k*d\n";
    return 2;
  }
  auto tabs = enumerate_pieri_tableaux(a.k, a.d, lam);
  std::vector<TensorVector> ws;
  std::vector<std::pair<SimpleTensor, int>> rs;
  for (const auto& t : tabs) {
    ws.push_back(build_wT(t));
    rs.push_back(build_rT(t));
  }
  // tableaux are sorted decreasing, so the pairing matrix must vanish
  // strictly above the diagonal and carry ones on it
  bool unitriangular = true;
  for (size_t i = 0; i < tabs.size() && unitriangular; ++i)
    for (size_t j = i; j < tabs.size(); ++j) {
      BigInt p = dual_pairing(rs[i], ws[j]);
      if (p != BigInt(i == j ? 1 : 0)) {
        unitriangular = false;
        break;
      }
    }
  json basis = json::array();
  for (size_t i = 0; i < tabs.size(); ++i)
    basis.push_back({{"tableau", to_json(tabs[i])}, {"w", to_json(ws[i])}});
  json doc = {{"k", a.k},
              {"d", a.d},
              {"lambda", lam.parts()},
              {"count", tabs.size()},
              {"unitriangular", unitriangular},
              {"basis", basis}};
  if (a.out.empty()) {
    emit(doc);
  } else {
    std::ofstream f(a.out);
    if (!f) {
      std::cerr << "hwv-basis: cannot write " << a.out << "\n";
      return 2;
    }
    f << doc.dump(2) << "\n";
    emit({{"count", tabs.size()},
          {"unitriangular", unitriangular},
          {"out", a.out}});
  }
  return unitriangular ? 0 : 1;
}

struct WeintraubArgs {
  int k = 0;
  std::string lambda;
  bool trace = false, skip_expand = false;
};

int cmd_weintraub(const WeintraubArgs& a, bool force) {
  Partition lam = Partition::parse(a.lambda);
  if (lam.empty() || !lam.is_even() || a.k < 2 || a.k % 2 != 0 ||
      lam.weight() % a.k != 0) {
    std::cerr << "weintraub: needs a nonempty even partition and an even k "
                 "dividing |lambda|\n";
    return 2;
  }
  if (lam.length() > lam.weight() / a.k) {
    std::cerr << "weintraub: lambda needs at most |lambda|/k parts; "
                 "longer duals never occur in the symmetric power\n";
    return 2;
  }
  AlgoResult res = run_algorithm(lam, a.k);
  int d = static_cast<int>(lam.weight() / a.k);
  if (a.trace) {
    emit({{"steps", to_json(res.log)}, {"tableau", to_json(res.tableau)}});
    return 0;
  }
  json doc = {{"lambda", lam.parts()},
              {"k", a.k},
              {"d", d},
              {"steps", to_json(res.log)},
              {"tableau", to_json(res.tableau)}};
  if (a.skip_expand) {
    doc["skipped_expansion"] = true;
    emit(doc);
    return 0;
  }
  BigInt reps = expansion_size(res.tableau);
  if (reps > kExpansionGuard && !force) {
    std::cerr << "weintraub: expansion has " << reps.str()
              << " representatives; rerun with --force or --skip-expand\n";
    return 2;
  }
  TensorVector p = expand_P(res.tableau);
  HighestWeightReport hw = verify_highest_weight(p, lam);
  QCertificate q = q_coefficient(p, res.tableau);
  doc["expansion"] = {{"representatives", reps.str()},
                      {"terms", p.term_count()}};
  doc["highest_weight"] = to_json(hw);
  doc["q"] = to_json(q);
  bool pass = hw.pass() && q.positive && q.all_paired;
  doc["pass"] = pass;
  emit(doc);
  return pass ? 0 : 1;
}

struct OracleArgs {
  int k = 0, d = 0;
  std::string functor = "wedge";
  bool duality = false, tuple = false;
};

int cmd_oracle(const OracleArgs& a, int n_override, bool force) {
  Functor f = a.functor == "sym" ? Functor::sym : Functor::wedge;
  int n = n_override > 0 ? n_override : a.k * a.d;
  if (a.duality) {
    if (n < a.k * a.d) {
      std::cerr << "oracle: duality needs n >= k*d\n";
      return 2;
    }
    if (a.k % 2 != 0) {
      std::cerr << "oracle: duality needs even k\n";
      return 2;
    }
    DecompositionTable wedge, sym;
    bool ok = duality_check(a.k, a.d, n, &wedge, &sym);
    emit({{"duality", ok}, {"wedge", to_json(wedge)}, {"sym", to_json(sym)}});
    return ok ? 0 : 1;
  }
  DecompositionTable table = a.tuple ? decompose_tuple_power(a.k, a.d, n, f, force)
                                     : decompose(a.k, a.d, n, f, force);
  emit(to_json(table));
  return 0;
}

struct AsymArgs {
  int d = 0, kmax = 0;
  std::string lambda;
};

int cmd_asym(const AsymArgs& a) {
  Partition lam = Partition::parse(a.lambda);
  if (a.d < 1 || a.kmax < std::max(1, lam.part(1))) {
    std::cerr << "asym: needs d >= 1 and kmax >= lambda_1\n";
    return 2;
  }
  StabilizationRow row = stabilization_check(lam, a.d, a.kmax);
  emit(to_json(row));
  return row.stabilized && row.nondecreasing && row.bijection_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"highest weight vectors and multiplicities for S^d(Wedge^k W)"};
  app.require_subcommand(1);

  int n_override = 0;
  bool force = false;
  app.add_option("--n", n_override, "ambient dimension override")
      ->check(CLI::PositiveNumber);
  app.add_flag("--force", force, "lift desk-scale size guards");

  MultArgs mult;
  auto* sub_mult = app.add_subcommand(
      "mult", "count the highest weight basis vectors of weight lambda*");
  sub_mult->fallthrough();
  sub_mult->add_option("--k", mult.k, "")->required()->check(CLI::PositiveNumber);
  sub_mult->add_option("--d", mult.d, "")->required()->check(CLI::PositiveNumber);
  sub_mult->add_option("--lambda", mult.lambda, "")->required();
  sub_mult->add_flag("--oracle", mult.oracle,
                     "cross-check against the kernel and tensor-power oracles");

  BasisArgs basis;
  auto* sub_basis = app.add_subcommand(
      "hwv-basis", "emit the w_T basis with its unitriangular certificate");
  sub_basis->fallthrough();
  sub_basis->add_option("--k", basis.k, "")->required()->check(CLI::PositiveNumber);
  sub_basis->add_option("--d", basis.d, "")->required()->check(CLI::PositiveNumber);
  sub_basis->add_option("--lambda", basis.lambda, "")->required();
  sub_basis->add_option("--out", basis.out, "write the full basis to this file");

  WeintraubArgs wein;
  auto* sub_wein = app.add_subcommand(
      "weintraub", "construct and verify the even-partition witness vector");
  sub_wein->fallthrough();
  sub_wein->add_option("--lambda", wein.lambda, "")->required();
  sub_wein->add_option("--k", wein.k, "")->required()->check(CLI::PositiveNumber);
  sub_wein->add_flag("--trace", wein.trace, "emit only the step log and tableau");
  sub_wein->add_flag("--skip-expand", wein.skip_expand,
                     "stop after the symbolic tableau");

  OracleArgs orac;
  auto* sub_orac = app.add_subcommand(
      "oracle", "brute-force decomposition into Schur modules");
  sub_orac->fallthrough();
  sub_orac->add_option("--k", orac.k, "")->required()->check(CLI::PositiveNumber);
  sub_orac->add_option("--d", orac.d, "")->required()->check(CLI::PositiveNumber);
  sub_orac->add_option("--functor", orac.functor, "wedge or sym")
      ->check(CLI::IsMember({"wedge", "sym"}));
  sub_orac->add_flag("--duality", orac.duality,
                     "compare both functors under conjugation");
  sub_orac->add_flag("--tuple", orac.tuple,
                     "decompose the ordered tensor power instead");

  AsymArgs asym;
  auto* sub_asym = app.add_subcommand(
      "asym", "stable multiplicities of augmented shapes");
  sub_asym->fallthrough();
  sub_asym->add_option("--lambda", asym.lambda, "")->required();
  sub_asym->add_option("--d", asym.d, "")->required()->check(CLI::PositiveNumber);
  sub_asym->add_option("--kmax", asym.kmax, "")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (sub_mult->parsed()) return cmd_mult(mult, n_override, force);
    if (sub_basis->parsed()) return cmd_hwv_basis(basis);
    if (sub_wein->parsed()) return cmd_weintraub(wein, force);
    if (sub_orac->parsed()) return cmd_oracle(orac, n_override, force);
    if (sub_asym->parsed()) return cmd_asym(asym);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
