// Acceptance suite: one line per criterion, exact checks throughout.
// Exit status 0 only if every criterion passes.

#include "weyltk/bruteforce.hpp"
#include "weyltk/fixtures.hpp"
#include "weyltk/isometry.hpp"
#include "weyltk/pipeline.hpp"
#include "weyltk/representations.hpp"
#include "weyltk/springer.hpp"
#include "weyltk/vandermonde.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace weyltk;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title << " ("
              << ms << " ms)";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

std::vector<GroupKind> kinds_for(const PartitionSeq& p) {
    std::vector<GroupKind> ks{GroupKind::SP, GroupKind::SO_ODD};
    if (p.kappa_sigma() == 0) ks.push_back(GroupKind::SO_EVEN);
    return ks;
}

} // namespace

int main() {
    criterion(1, "three-way label agreement (procedure / closed form / truncated induction), n <= 6",
              [](std::string& detail) {
                  int cases = 0, bad = 0;
                  for (int n = 1; n <= 6; ++n) {
                      for (const auto& parts : partitions_of(n)) {
                          PartitionSeq p(parts);
                          for (GroupKind kind : kinds_for(p)) {
                              auto t = verify_label_triple(p, kind);
                              ++cases;
                              if (!t.pass) {
                                  ++bad;
                                  detail += p.to_string() + "/" + to_string(kind) + " ";
                              }
                          }
                      }
                  }
                  detail += std::to_string(cases) + " cases, " + std::to_string(bad) +
                            " mismatches";
                  return bad == 0;
              });

    criterion(2, "symplectic and odd-orthogonal labels coincide, n <= 6", [](std::string& detail) {
        int cases = 0, bad = 0;
        for (int n = 1; n <= 6; ++n)
            for (const auto& parts : partitions_of(n)) {
                ++cases;
                if (!sp_so_labels_agree(PartitionSeq(parts))) ++bad;
            }
        detail = std::to_string(cases) + " partitions, " + std::to_string(bad) + " mismatches";
        return bad == 0;
    });

    criterion(3, "closed forms and corner recursions match the defining induction, n <= 6",
              [](std::string& detail) {
                  int checks = 0;
                  bool ok = true;
                  // fixed small-rank forms
                  for (int c = 1; c <= 3; ++c) {
                      int n = 2 * c;
                      Embedding sym = Embedding::dense(Factor{Family::B, n}, {Factor{Family::S, n}});
                      Embedding mixed = Embedding::dense(
                          Factor{Family::B, n}, {Factor{Family::B, c}, Factor{Family::D, c}});
                      Embedding even = Embedding::dense(
                          Factor{Family::D, n}, {Factor{Family::D, c}, Factor{Family::D, c}});
                      ok = ok && j_induce(sym, sign_reps_for(sym)) == j_closed_even_rank(c);
                      ok = ok && j_induce(mixed, sign_reps_for(mixed)) == j_closed_even_rank(c);
                      ok = ok && j_induce(even, sign_reps_for(even)) == j_closed_even_pair(c);
                      checks += 3;
                  }
                  for (int c = 0; c <= 2; ++c) {
                      int n = 2 * c + 1;
                      Embedding sym = Embedding::dense(Factor{Family::B, n}, {Factor{Family::S, n}});
                      Embedding mixed = Embedding::dense(
                          Factor{Family::B, n}, {Factor{Family::B, c}, Factor{Family::D, c + 1}});
                      ok = ok && j_induce(sym, sign_reps_for(sym)) == j_closed_odd_rank(c);
                      ok = ok && j_induce(mixed, sign_reps_for(mixed)) == j_closed_odd_rank(c);
                      checks += 2;
                  }
                  // tower forms and one-step corner recursions
                  for (int n = 1; n <= 6; ++n) {
                      for (const auto& parts : partitions_of(n)) {
                          PartitionSeq p(parts);
                          {
                              Embedding e = tower_symmetric(p);
                              ok = ok && j_induce(e, sign_reps_for(e)) ==
                                             j_closed_form(p, JTowerVariant::SymmetricTower);
                              ++checks;
                          }
                          {
                              Embedding e = tower_mixed_corner(p);
                              ok = ok && j_induce(e, sign_reps_for(e)) ==
                                             j_closed_form(p, JTowerVariant::MixedCornerTower);
                              ++checks;
                          }
                          if (p.sigma() % 2 == 0) {
                              Embedding e = tower_even_corner(p);
                              ok = ok && j_induce(e, sign_reps_for(e)) ==
                                             j_closed_form(p, JTowerVariant::EvenCornerTower);
                              ++checks;
                          }
                          if (p.part(1) > 1) {
                              auto bp = conjugate_counts(p);
                              int bpk = bp.back();
                              PartitionSeq lowered = lower_top_parts(p);
                              {
                                  IrrLabel inner =
                                      j_closed_form(lowered, JTowerVariant::SymmetricTower);
                                  Embedding step = Embedding::dense(
                                      Factor{Family::B, n},
                                      {Factor{Family::S, bpk}, Factor{Family::B, n - bpk}});
                                  ok = ok && j_induce(step, {IrrLabel::sign(LabelKind::S, bpk),
                                                             inner}) ==
                                                 j_closed_form(p, JTowerVariant::SymmetricTower);
                                  ++checks;
                              }
                              if (p.sigma() % 2 == 0) {
                                  IrrLabel inner =
                                      j_closed_form(lowered, JTowerVariant::EvenCornerTower);
                                  Embedding step = Embedding::dense(
                                      Factor{Family::D, n},
                                      {Factor{Family::S, bpk}, Factor{Family::D, n - bpk}});
                                  ok = ok && j_induce(step, {IrrLabel::sign(LabelKind::S, bpk),
                                                             inner}) ==
                                                 j_closed_form(p, JTowerVariant::EvenCornerTower);
                                  ++checks;
                              }
                          }
                      }
                  }
                  detail = std::to_string(checks) + " identities";
                  return ok;
              });

    criterion(4, "exact witness suite (orthogonality, flags, position, centralizer), n <= 3 x 5 seeds",
              [](std::string& detail) {
                  RatField Q;
                  int cases = 0;
                  for (int n = 1; n <= 3; ++n) {
                      for (const auto& parts : partitions_of(n)) {
                          PartitionSeq p(parts);
                          for (GroupKind kind : kinds_for(p)) {
                              for (unsigned long seed = 1; seed <= 5; ++seed) {
                                  auto lambdas = random_lambdas(p, kind, Q, seed);
                                  auto w = build_class_rep(p, kind, lambdas, Q);
                                  if (!verify_orthogonality(w, Q)) return false;
                                  auto flags = build_flags(w, Q); // throws on pattern failure
                                  if (relative_position(flags, Q) != w_min_rep(p, kind))
                                      return false;
                                  auto [formula, kernel] = centralizer_dim(w, Q);
                                  if (formula != kernel || formula != d_min(p, kind)) return false;
                                  ++cases;
                              }
                          }
                      }
                  }
                  detail = std::to_string(cases) + " witnesses";
                  return cases > 0;
              });

    criterion(5, "determinant identities: symbolic m <= 3, 20 random points for m = 4, 5",
              [](std::string& detail) {
                  int checks = 0;
                  for (int m = 1; m <= 3; ++m) {
                      if (!vandermonde_check(m, true).pass) return false;
                      if (!vandermonde_check_bordered(m, true).pass) return false;
                      checks += 2;
                  }
                  for (int m = 4; m <= 5; ++m) {
                      auto r = vandermonde_check(m, false);
                      auto rb = vandermonde_check_bordered(m, false);
                      if (!r.pass || r.points_checked < 20) return false;
                      if (!rb.pass || rb.points_checked < 20) return false;
                      checks += 2;
                  }
                  detail = std::to_string(checks) + " identities";
                  return true;
              });

    criterion(6, "conjugate-square-sum identity for all partitions of n <= 10",
              [](std::string& detail) {
                  int cases = 0;
                  for (int n = 1; n <= 10; ++n)
                      for (const auto& parts : partitions_of(n)) {
                          if (!bar_square_identity(PartitionSeq(parts))) return false;
                          ++cases;
                      }
                  detail = std::to_string(cases) + " partitions";
                  return true;
              });

    criterion(7, "minimal-length representatives equal the exhaustive class minimum, n <= 5",
              [](std::string& detail) {
                  int cases = 0;
                  for (int n = 1; n <= 5; ++n) {
                      auto groupB = enumerate_group_b(n);
                      for (const auto& parts : partitions_of(n)) {
                          PartitionSeq p(parts);
                          SignedCycleType type;
                          type.neg = parts;
                          long minB = -1, minD = -1;
                          for (const auto& w : groupB) {
                              if (!(w.cycle_type() == type)) continue;
                              long lb = length_b(w);
                              if (minB < 0 || lb < minB) minB = lb;
                              if (p.kappa_sigma() == 0 && w.is_even()) {
                                  long ld = length_d(w);
                                  if (minD < 0 || ld < minD) minD = ld;
                              }
                          }
                          auto wb = w_min_rep(p, GroupKind::SP);
                          if (length_b(wb) != d_min(p, GroupKind::SP) || minB != length_b(wb))
                              return false;
                          ++cases;
                          if (p.kappa_sigma() == 0) {
                              auto wd = w_min_rep(p, GroupKind::SO_EVEN);
                              if (length_d(wd) != d_min(p, GroupKind::SO_EVEN) ||
                                  minD != length_d(wd))
                                  return false;
                              ++cases;
                          }
                      }
                  }
                  detail = std::to_string(cases) + " classes";
                  return true;
              });

    criterion(8, "graded class function: the two evaluations agree elementwise on the small groups",
              [](std::string& detail) {
                  // pi_class_function cross-checks both routes on every element
                  // and throws on any disagreement
                  long elements = 0;
                  auto runOn = [&](const std::string& type, const std::vector<int>& nodes) {
                      SubsystemData sd = subsystem_for(root_data(type), nodes);
                      auto cf = pi_class_function(sd);
                      elements += static_cast<long>(cf.group.elements.size());
                  };
                  runOn("A1", {1});
                  runOn("A2", {1, 2});
                  runOn("B2", {1, 2});
                  runOn("B2", {0, 1}); // orthogonal pair of reflections
                  runOn("B3", {1, 2, 3});
                  detail = std::to_string(elements) + " elements cross-checked";
                  return elements == 2 + 6 + 8 + 4 + 48;
              });

    criterion(9, "count polynomial equals the exhaustive pair count at q = 5, 7, 9",
              [](std::string& detail) {
                  const auto& a1 = root_data("A1");
                  SubsystemData torus = subsystem_for(a1, {});
                  auto rep = pipeline_count(a1, "Phi2", torus, PipelineData::builtin_type_a(1));
                  if (!rep.csmall || !rep.m_kc || *rep.m_kc != 1) return false;
                  if (rep.P != group_order_polynomial(a1)) return false;
                  struct Probe {
                      int q;
                      std::vector<long> rep;
                  };
                  // diag(a, a^{-1}) with a of multiplicative order > 2; for the
                  // 9-element field the entries are field codes and the chosen
                  // pair is (x, 2x) with x^2 = -1
                  std::vector<Probe> probes{{5, {2, 0, 0, 3}}, {7, {2, 0, 0, 4}}, {9, {3, 0, 0, 6}}};
                  for (const auto& probe : probes) {
                      long long brute = sl2_pair_count(probe.q, probe.rep, "s");
                      if (rep.P.eval_int(probe.q) != brute) {
                          detail = "mismatch at q=" + std::to_string(probe.q);
                          return false;
                      }
                  }
                  detail = "P(5)=" + rep.P.eval_int(5).str() + ", P(7)=" + rep.P.eval_int(7).str() +
                           ", P(9)=" + rep.P.eval_int(9).str() + ", m=1";
                  return true;
              });

    criterion(10, "shipped exceptional tables: dimension and label checks on every row",
              [](std::string& detail) {
                  int rows = 0;
                  for (const std::string type : {"G2", "F4", "E6", "E7", "E8"}) {
                      auto rep = check_table_fixture(type);
                      if (!rep.all_pass()) {
                          detail = type + " failed";
                          return false;
                      }
                      rows += static_cast<int>(rep.rows.size());
                  }
                  detail = std::to_string(rows) + " rows across 5 types";
                  return rows == 3 + 9 + 5 + 12 + 30;
              });

    criterion(11, "exceptional-type count polynomials and labels are external data only",
              [](std::string& detail) {
                  // Out of desk-scale scope by design: Hecke character values and
                  // Fourier matrices for the exceptional types, the chi columns of
                  // the shipped tables, and the rank-8 exceptional class statement
                  // are not recomputed here.  The data path is exercised by an
                  // exact round-trip instead.
                  PipelineData d;
                  d.type = "E8";
                  d.provenance = "synthetic";
                  d.irr_labels = {"1_0", "50_56"};
                  d.class_labels = {"Phi2^8", "Phi30"};
                  d.A = {{QPoly::from_coeff_strings({"0", "1"}), QPoly::from_coeff_strings({"-1"})},
                         {QPoly::from_coeff_strings({"2", "0", "3"}), QPoly::zero()}};
                  d.phi = {{Int(1), Int(0)}, {Int(1), Int(1)}};
                  std::string dir = "/tmp/weyltk_acceptance_data";
                  (void)system(("mkdir -p " + dir + "/2").c_str());
                  d.save(dir);
                  PipelineData d2 = PipelineData::load(dir, "E8");
                  d2.save(dir + "/2");
                  PipelineData d3 = PipelineData::load(dir + "/2", "E8");
                  bool same = d2.irr_labels == d.irr_labels && d2.class_labels == d.class_labels &&
                              d2.A == d.A && d2.phi == d.phi && d3.A == d2.A && d3.phi == d2.phi;
                  // byte-exact file comparison
                  auto slurp = [](const std::string& path) {
                      std::ifstream f(path);
                      return std::string((std::istreambuf_iterator<char>(f)),
                                         std::istreambuf_iterator<char>());
                  };
                  same = same && slurp(dir + "/E8_A.json") == slurp(dir + "/2/E8_A.json");
                  same = same && !slurp(dir + "/E8_A.json").empty();
                  detail = "format round-trip only; no exceptional values recomputed";
                  return same;
              });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
