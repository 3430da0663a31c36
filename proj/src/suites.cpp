#include "purespin/suites.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "purespin/clifford.hpp"
#include "purespin/connection.hpp"
#include "purespin/pure.hpp"
#include "purespin/rng.hpp"

namespace purespin::suites {
namespace {

// Merge per-trial reports check by check: any failure wins (first witness,
// tagged with its trial index), else pass if any trial passed, else skip.
void aggregate_trials(Report& out, const std::vector<Report>& trials) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const Report& r : trials)
    for (const CheckResult& c : r.checks)
      if (seen.insert(c.name).second) order.push_back(c.name);

  for (const std::string& name : order) {
    int passes = 0;
    bool failed = false;
    std::string fail_witness;
    std::string skip_why;
    for (std::size_t t = 0; t < trials.size(); ++t)
      for (const CheckResult& c : trials[t].checks) {
        if (c.name != name) continue;
        if (c.status == Status::fail) {
          if (!failed) {
            failed = true;
            fail_witness = "trial " + std::to_string(t);
            if (!c.witness.empty()) fail_witness += ": " + c.witness;
          }
        } else if (c.status == Status::pass) {
          ++passes;
        } else if (skip_why.empty()) {
          skip_why = c.witness;
        }
      }
    if (failed)
      out.add(name, false, fail_witness);
    else if (passes > 0)
      out.add(name, true);
    else
      out.add_skip(name,
                   skip_why.empty() ? "hypothesis unmet in all trials" : skip_why);
  }
}

template <typename Fn>
std::vector<Report> run_trials(int trials, Fn&& body) {
  std::vector<Report> out(std::size_t(std::max(trials, 0)));
  std::vector<std::string> errors(out.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < trials; ++t) {
    try {
      out[std::size_t(t)] = body(t);
    } catch (const std::exception& e) {
      errors[std::size_t(t)] = e.what();
    }
  }
  for (int t = 0; t < trials; ++t)
    if (!errors[std::size_t(t)].empty()) {
      Report r;
      r.add("no_exceptions", false,
            "trial " + std::to_string(t) + ": " + errors[std::size_t(t)]);
      out[std::size_t(t)] = std::move(r);
    }
  return out;
}

std::vector<Scalar> spinor_coords(const Spinor& s) { return s.coords(); }

std::string gauge_failures(const TwistorGauge& g) {
  std::string out;
  for (const CheckResult& c : g.constraints.checks)
    if (c.status == Status::fail) {
      if (!out.empty()) out += "; ";
      out += c.name;
      if (!c.witness.empty()) out += ": " + c.witness;
    }
  return out;
}

// Zero the base-sector slots and install the residual pattern on the dual
// rows: off-span slots zeroed, the diagonal family made uniform per column.
// For base dimension 3 optionally keep one antisymmetric degree of freedom.
void enforce_gauge_pattern(FrameConnection& c, Rng& rng, bool antisym3) {
  const int n = c.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int d = b + 1; d <= n; ++d) c.set_omega(a, b, d, Scalar(0));
  if (antisym3 && n == 3) {
    const Scalar w = rng.small_nonzero_scalar();
    c.set_omega(1, 2, 3, w);
    c.set_omega(2, 3, 1, w);
    c.set_omega(3, 1, 2, w);
  }
  for (int i = 1; i <= n; ++i)
    for (int b = 1; b <= n; ++b)
      for (int d = b + 1; d <= n; ++d)
        if (i != b && i != d) c.set_omega(i + n, b, d, Scalar(0));
  for (int k = 1; k <= n; ++k) {
    const Scalar vk = rng.small_scalar();
    for (int i = 1; i <= n; ++i)
      if (i != k) c.set_omega(i + n, i, k, vk);
  }
}

// Slot-level counterpart of the sampling probe: base sector zero, dual rows
// vanishing off the pair, diagonal family uniform per column.
bool gauge_slots_clear(const FrameConnection& c) {
  const int n = c.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int d = b + 1; d <= n; ++d)
        if (!c.omega(a, b, d).is_zero()) return false;
  for (int i = 1; i <= n; ++i)
    for (int b = 1; b <= n; ++b)
      for (int d = b + 1; d <= n; ++d)
        if (i != b && i != d && !c.omega(i + n, b, d).is_zero()) return false;
  for (int k = 1; k <= n; ++k) {
    bool have = false;
    Scalar ref(0);
    for (int i = 1; i <= n; ++i) {
      if (i == k) continue;
      if (!have) {
        ref = c.omega(i + n, i, k);
        have = true;
      } else if (!(c.omega(i + n, i, k) == ref)) {
        return false;
      }
    }
  }
  return true;
}

void append_prefixed(Report& out, const Report& r, const std::string& prefix) {
  for (const CheckResult& c : r.checks) {
    CheckResult copy = c;
    copy.name = prefix + c.name;
    out.checks.push_back(std::move(copy));
  }
}

SpinorJet constant_unit(int n) { return SpinorJet::constant(Spinor::unit(n)); }

}  // namespace

Report pairing_example() {
  Report rep;
  rep.suite = "pairing-example";
  rep.n = 2;
  const int n = 2;
  const Spinor one = Spinor::unit(n);
  const Spinor t1 = Spinor::blade(n, 0b01);
  const Spinor t2 = Spinor::blade(n, 0b10);
  const Spinor t12 = Spinor::blade(n, 0b11);
  auto F = [&](int a) { return frame_vector(n, a); };

  rep.add("action_e_on_unit", clifford_action(F(1), one).is_zero() &&
                                  clifford_action(F(2), one).is_zero());
  rep.add("action_e_on_lines",
          clifford_action(F(1), t1) == one && clifford_action(F(2), t2) == one &&
              clifford_action(F(1), t2).is_zero() &&
              clifford_action(F(2), t1).is_zero());
  rep.add("action_e1_on_top", clifford_action(F(1), t12) == t2);
  rep.add("action_t_on_unit", clifford_action(F(3), one) == t1 &&
                                  clifford_action(F(4), one) == t2);
  rep.add("action_t1_on_t2", clifford_action(F(3), t2) == t12);
  rep.add("action_t1_on_top", clifford_action(F(3), t12).is_zero());

  rep.add("pairing_unit_top", spinor_inner(one, t12) == Scalar(1));
  rep.add("pairing_top_unit", spinor_inner(t12, one) == Scalar(-1));
  rep.add("pairing_low", spinor_inner(t1, t2) == Scalar(1));
  rep.add("pairing_low_swapped", spinor_inner(t2, t1) == Scalar(-1));
  {
    bool zeros_ok = true;
    const Spinor basis[4] = {one, t1, t2, t12};
    const bool nonzero[4][4] = {{false, false, false, true},
                                {false, false, true, false},
                                {false, true, false, false},
                                {true, false, false, false}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!nonzero[i][j] && !spinor_inner(basis[i], basis[j]).is_zero())
          zeros_ok = false;
    rep.add("pairing_zeros", zeros_ok);
  }
  {
    Rng rng(mix_seed(1, 0));
    bool skew = true;
    for (int i = 0; i < 30 && skew; ++i) {
      const Spinor a = random_spinor(n, rng);
      const Spinor b = random_spinor(n, rng);
      skew = spinor_inner(a, b) == Scalar(-1) * spinor_inner(b, a);
    }
    rep.add("pairing_skew_symmetric", skew);
  }
  {
    const CliffordOp vol = pseudo_scalar(n);
    rep.add("chirality_assignments",
            vol.apply(one) == one && vol.apply(t12) == t12 &&
                vol.apply(t1) == Scalar(-1) * t1 &&
                vol.apply(t2) == Scalar(-1) * t2);
  }
  {
    const IsotropicSubspace base =
        IsotropicSubspace::from_vectors(n, {F(1), F(2)});
    rep.add("unit_annihilator_is_base_span",
            annihilator(one) == base && is_pure(one));
  }
  return rep;
}

Report subspace_example() {
  Report rep;
  rep.suite = "subspace-example";
  rep.n = 3;
  const int n = 3;
  auto F = [&](int a) { return frame_vector(n, a); };
  const IsotropicSubspace I1 = IsotropicSubspace::from_vectors(n, {F(1)});
  const IsotropicSubspace I2 = IsotropicSubspace::from_vectors(n, {F(1), F(5)});
  const IsotropicSubspace I3 =
      IsotropicSubspace::from_vectors(n, {F(1), F(5), F(6)});

  const SpinorSubspace L1 = pure_subspace(I1);
  const SpinorSubspace L2 = pure_subspace(I2);
  const SpinorSubspace L3 = pure_subspace(I3);

  const Spinor one = Spinor::unit(n);
  const Spinor t2 = Spinor::blade(n, 0b010);
  const Spinor t3 = Spinor::blade(n, 0b100);
  const Spinor t23 = Spinor::blade(n, 0b110);

  rep.add("chain_one_dim", L1.dim() == 4);
  rep.add("chain_one_span",
          L1 == SpinorSubspace::from_spinors(n, {one, t2, t3, t23}));
  rep.add("chain_two_dim", L2.dim() == 2);
  rep.add("chain_two_span", L2 == SpinorSubspace::from_spinors(n, {t2, t23}));
  rep.add("chain_three_dim", L3.dim() == 1);
  rep.add("chain_three_span", L3 == SpinorSubspace::from_spinors(n, {t23}));

  rep.add("chain_round_trip", common_annihilator(L1) == I1.space() &&
                                  common_annihilator(L2) == I2.space() &&
                                  common_annihilator(L3) == I3.space());
  rep.add("maximal_member_is_pure", is_pure(t23));
  return rep;
}

Report theorem1(int n, std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "theorem1";
  rep.n = n;
  rep.seed = seed;
  const int combos = (n + 1) * (n + 1);
  const std::vector<Report> reports = run_trials(trials, [&](int t) {
    const int idx = t % combos;
    const int k1 = idx % (n + 1);
    const int k2 = idx / (n + 1);
    const int kind = (t / combos) % 3;
    IsotropicSubspace I1 = IsotropicSubspace::zero(n);
    IsotropicSubspace I2 = IsotropicSubspace::zero(n);
    if (kind == 0) {
      I1 = random_isotropic(n, k1, mix_seed(seed, std::uint64_t(2 * t)));
      I2 = random_isotropic(n, k2, mix_seed(seed, std::uint64_t(2 * t + 1)));
    } else {
      Rng rng(mix_seed(seed, 0x517000u + std::uint64_t(t)));
      const Matrix rot = random_metric_rotation(n, rng);
      I1 = transform_span(n, rot, 1, k1);
      if (kind == 1) {
        const int start2 = k2 == 0 ? 1 : 1 + (t % (n - k2 + 1));
        I2 = transform_span(n, rot, start2, k2);
      } else {
        I2 = transform_span(n, rot, 1, std::min(k1, k2));
      }
    }
    Report r = theorem1_report(I1, I2);
    r.add("parity_corollary", corollary_parity_check(I1, I2));
    return r;
  });
  aggregate_trials(rep, reports);
  if (trials >= combos)
    rep.add("pair_coverage", true);
  else
    rep.add_skip("pair_coverage", "fewer trials than dimension pairs");
  return rep;
}

Report dimension_law(std::uint64_t seed) {
  Report rep;
  rep.suite = "dimension-law";
  rep.seed = seed;
  bool span_ok = true;
  bool dim_ok = true;
  std::string span_witness;
  std::string dim_witness;
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i < 5; ++i) {
        const IsotropicSubspace I = random_isotropic(
            n, k, mix_seed(seed, std::uint64_t(n) * 1000 + std::uint64_t(k) * 10 +
                                     std::uint64_t(i)));
        const std::string where = "n=" + std::to_string(n) +
                                  " k=" + std::to_string(k) +
                                  " instance=" + std::to_string(i);
        if (span_ok && I.dim() != std::size_t(k)) {
          span_ok = false;
          span_witness = where;
        }
        const SpinorSubspace L = pure_subspace(I);
        if (dim_ok && L.dim() != (std::size_t(1) << (n - k))) {
          dim_ok = false;
          dim_witness = where + " dim=" + std::to_string(L.dim());
        }
      }
  rep.add("generator_dimension", span_ok, span_witness);
  rep.add("annihilated_dimension", dim_ok, dim_witness);
  return rep;
}

Report clifford_laws(int n, std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "clifford-laws";
  rep.n = n;
  rep.seed = seed;
  const std::uint32_t full = (1u << n) - 1;
  const std::vector<Report> reports = run_trials(trials, [&](int t) {
    Rng rng(mix_seed(seed, std::uint64_t(t)));
    const PhaseVector v = random_phase_vector(n, rng);
    const PhaseVector u = random_phase_vector(n, rng);
    const Spinor phi = random_spinor(n, rng);
    const Spinor psi = random_spinor(n, rng);
    Report r;
    const Spinor anti = clifford_action(v, clifford_action(u, phi)) +
                        clifford_action(u, clifford_action(v, phi));
    r.add("anticommutator_is_metric", anti == (Scalar(2) * metric(v, u)) * phi);
    r.add("operator_matches_action",
          operator_of(v).apply(phi) == clifford_action(v, phi));
    r.add("pairing_adjoint",
          spinor_inner(clifford_action(v, phi), psi) ==
              spinor_inner(phi, clifford_action(v, psi)));
    r.add("pairing_adjoint_reversal",
          spinor_inner(clifford_action(v, clifford_action(u, phi)), psi) ==
              spinor_inner(phi, clifford_action(u, clifford_action(v, psi))));
    const std::vector<PhaseVector> vs{v, u};
    r.add("wedge_identity",
          antisym_product(vs) == operator_of(v) * operator_of(u) -
                                     metric(v, u) * CliffordOp::identity_op(n));
    r.add("pairing_definition",
          spinor_inner(phi, psi) == wedge(reverse(phi), psi).coeff(full));
    const Scalar eps = spinor_inner(Spinor::blade(n, full), Spinor::unit(n));
    r.add("pairing_symmetry_sign",
          spinor_inner(psi, phi) == eps * spinor_inner(phi, psi));
    return r;
  });
  aggregate_trials(rep, reports);

  const CliffordOp vol = pseudo_scalar(n);
  rep.add("volume_squares_to_identity",
          vol * vol == CliffordOp::identity_op(n));
  {
    Rng rng(mix_seed(seed, 0xF00Du));
    bool anti_ok = true;
    for (int i = 0; i < 10 && anti_ok; ++i) {
      const CliffordOp ov = operator_of(random_phase_vector(n, rng));
      anti_ok = vol * ov == Scalar(-1) * (ov * vol);
    }
    rep.add("volume_anticommutes", anti_ok);
    bool chir_ok = true;
    for (int i = 0; i < 10 && chir_ok; ++i) {
      const Spinor phi = random_spinor(n, rng);
      const auto [even, odd] = chirality_split(phi);
      chir_ok = even + odd == phi && vol.apply(even) == even &&
                vol.apply(odd) == Scalar(-1) * odd;
    }
    rep.add("chirality_split_eigenvalues", chir_ok);
  }
  return rep;
}

Report connection_suite(int n, std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "connection";
  rep.n = n;
  rep.seed = seed;
  const std::vector<Report> reports = run_trials(trials, [&](int t) {
    Rng rng(mix_seed(seed, std::uint64_t(t)));
    FrameConnection c = random_connection(n, rng);
    auto random_jet = [&] {
      SpinorJet j(n);
      j.value = random_spinor(n, rng);
      for (auto& d : j.derivs) d = random_spinor(n, rng, true);
      return j;
    };
    const SpinorJet j1 = random_jet();
    const SpinorJet j2 = random_jet();
    Report r;
    r.add("frame_compatibility", check_omega_relation(c));

    {
      const PhaseVector v = random_phase_vector(n, rng);
      SpinorJet vj(n);
      vj.value = clifford_action(v, j1.value);
      for (int a = 1; a <= 2 * n; ++a)
        vj.derivs[std::size_t(a - 1)] =
            clifford_action(v, j1.derivs[std::size_t(a - 1)]);
      bool ok = true;
      for (int a = 1; a <= 2 * n && ok; ++a)
        ok = covariant_derivative(c, vj, a) ==
             clifford_action(nabla_vector(c, a, v), j1.value) +
                 clifford_action(v, covariant_derivative(c, j1, a));
      r.add("leibniz_clifford", ok);
    }

    {
      std::vector<Scalar> lam(std::size_t(2 * n));
      for (auto& s : lam) s = rng.small_scalar();
      const FrameConnection cs = scaling_transform(c, lam);
      const SpinorJet js = scale_jet(j1, lam);
      bool ok = true;
      for (int a = 1; a <= 2 * n && ok; ++a)
        ok = covariant_derivative(cs, js, a) == covariant_derivative(c, j1, a);
      r.add("scaling_covariance", ok);
    }

    {
      const Scalar p = spinor_inner(j1.value, j2.value);
      bool gauge_blind = true;
      for (int a = 1; a <= 2 * n && gauge_blind; ++a)
        gauge_blind = (c.A(a) * p).is_zero();
      r.add("pairing_leibniz_iff_gauge_blind",
            leibniz_inner_check(c, j1, j2) == gauge_blind);

      FrameConnection c0 = c;
      for (int a = 1; a <= 2 * n; ++a) c0.set_A(a, Scalar(0));
      r.add("pairing_leibniz_gauge_free", leibniz_inner_check(c0, j1, j2));

      FrameConnection cg = c;
      cg.set_A(1, Scalar(1));
      const SpinorJet u1 = constant_unit(n);
      const SpinorJet u2 =
          SpinorJet::constant(Spinor::blade(n, (1u << n) - 1));
      r.add("pairing_leibniz_detects_gauge", !leibniz_inner_check(cg, u1, u2));
    }

    {
      CurvatureData cd(n);
      auto f_low_up = [&](int a, int b, int d) {
        return c.omega_ud(a, b, d) - c.omega_ud(b, a, d);
      };
      for (int a = 1; a <= 2 * n; ++a)
        for (int b = a + 1; b <= 2 * n; ++b) {
          for (int cu = 1; cu <= 2 * n; ++cu) {
            const int f = frame_partner(n, cu);
            for (int du = 1; du <= 2 * n; ++du) {
              Scalar sum(0);
              for (int d = 1; d <= 2 * n; ++d) {
                sum += c.omega_ud(b, f, d) * c.omega_ud(a, d, du) -
                       c.omega_ud(a, f, d) * c.omega_ud(b, d, du);
                sum -= f_low_up(a, b, d) * c.omega_ud(d, f, du);
              }
              cd.set_riemann(a, b, cu, du, Scalar(2) * sum);
            }
          }
          Scalar fab(0);
          for (int d = 1; d <= 2 * n; ++d) fab -= c.A(d) * f_low_up(a, b, d);
          cd.set_F(a, b, fab);
        }
      const Spinor psi = random_spinor(n, rng);
      bool ok = true;
      for (int a = 1; a <= 2 * n && ok; ++a)
        for (int b = a + 1; b <= 2 * n && ok; ++b) {
          Spinor rhs = omega_apply(c, a, omega_apply(c, b, psi)) -
                       omega_apply(c, b, omega_apply(c, a, psi));
          for (int d = 1; d <= 2 * n; ++d) {
            const Scalar fd = f_low_up(a, b, d);
            if (!fd.is_zero()) rhs -= fd * omega_apply(c, d, psi);
          }
          ok = curvature_action(cd, a, b, psi) == rhs;
        }
      r.add("curvature_commutator", ok);
    }

    {
      Spinor tr(n);
      for (int a = 1; a <= 2 * n; ++a)
        tr += Scalar(2) *
              clifford_action(frame_vector(n, a),
                              twistor_component(c, j1, frame_partner(n, a)));
      r.add("twistor_trace_free", tr.is_zero());

      const Spinor dslash = dirac(c, j1);
      const Scalar inv{Rational(1, 2 * n)};
      bool ok = true;
      for (int a = 1; a <= 2 * n && ok; ++a)
        ok = covariant_derivative(c, j1, a) ==
             twistor_component(c, j1, a) +
                 inv * clifford_action(frame_vector(n, a), dslash);
      r.add("twistor_recombination", ok);
    }

    {
      const SpinorJet uj = constant_unit(n);
      bool ok = true;
      for (int a = 1; a <= 2 * n && ok; ++a) {
        Scalar s0 = c.A(a);
        for (int j = 1; j <= n; ++j) s0 += c.omega(a, j, j + n);
        Spinor expect(n);
        expect.add_term(0, s0);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const Scalar w = c.omega(a, i, j);
            if (w.is_zero()) continue;
            expect += w * wedge(Spinor::blade(n, 1u << (j - 1)),
                                Spinor::blade(n, 1u << (i - 1)));
          }
        ok = covariant_derivative(c, uj, a) == expect;
      }
      r.add("unit_derivative_display", ok);
    }
    return r;
  });
  aggregate_trials(rep, reports);
  return rep;
}

Report twistor_oracle(int n, std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "twistor-oracle";
  rep.n = n;
  rep.seed = seed;
  const std::vector<Report> reports = run_trials(trials, [&](int t) {
    Rng rng(mix_seed(seed, std::uint64_t(t)));
    const FrameConnection c = random_connection(n, rng);
    const SpinorJet uj = constant_unit(n);
    bool base_ok = true;
    bool dual_ok = true;
    for (int j = 1; j <= n; ++j) {
      const auto [ce, ct] = twistor_closed_form(c, j);
      if (!(ce == twistor_component(c, uj, j))) base_ok = false;
      if (!(ct == twistor_component(c, uj, j + n))) dual_ok = false;
    }
    Report r;
    r.add("closed_form_base_directions", base_ok);
    r.add("closed_form_dual_directions", dual_ok);
    return r;
  });
  aggregate_trials(rep, reports);
  return rep;
}

Report gauge_profiles(std::uint64_t seed) {
  Report rep;
  rep.suite = "gauge-profiles";
  rep.seed = seed;

  auto apply_gauge = [](const FrameConnection& c,
                        const std::vector<Scalar>& A) {
    FrameConnection out = c;
    for (int a = 1; a <= 2 * out.n(); ++a)
      out.set_A(a, A[std::size_t(a - 1)]);
    return out;
  };
  auto all_components_vanish = [](const FrameConnection& c) {
    const SpinorJet uj = constant_unit(c.n());
    for (int a = 1; a <= 2 * c.n(); ++a)
      if (!twistor_component(c, uj, a).is_zero()) return false;
    return true;
  };

  for (int n : {2, 3, 4}) {
    Rng rng(mix_seed(seed, 0x6A00u + std::uint64_t(n)));
    FrameConnection c = random_connection(n, rng);
    enforce_gauge_pattern(c, rng, true);
    const TwistorGauge g = twistor_gauge(c);
    const std::string dim = std::to_string(2 * n);
    rep.add("profile_dim" + dim + "_satisfiable", g.satisfiable,
            gauge_failures(g));
    rep.add("profile_dim" + dim + "_twistor_vanishes",
            g.satisfiable && all_components_vanish(apply_gauge(c, g.A)));
  }

  auto violation_checks = [&](const std::string& label,
                              const FrameConnection& v) {
    const int n = v.n();
    const TwistorGauge g = twistor_gauge(v);
    rep.add(label + "_rejected", !g.satisfiable);
    rep.add(label + "_nonzero_with_forced_gauge",
            !all_components_vanish(apply_gauge(v, g.A)));
    bool sweep_ok = true;
    int bad_sample = -1;
    for (int s = 0; s < 50 && sweep_ok; ++s) {
      Rng srng(mix_seed(seed, 0xBAD000u + std::uint64_t(1000 * n + s)));
      std::vector<Scalar> A(std::size_t(2 * n));
      for (auto& x : A) x = srng.small_scalar();
      sweep_ok = !all_components_vanish(apply_gauge(v, A));
      if (!sweep_ok) bad_sample = s;
    }
    rep.add(label + "_no_gauge_rescue", sweep_ok,
            sweep_ok ? "" : "sample " + std::to_string(bad_sample));
  };

  {
    Rng rng(mix_seed(seed, 0x6B02u));
    FrameConnection v = random_connection(2, rng);
    enforce_gauge_pattern(v, rng, false);
    v.set_omega(1, 1, 2, Scalar(1));
    violation_checks("violation_dim4_base_sector", v);
  }
  {
    Rng rng(mix_seed(seed, 0x6B04u));
    FrameConnection v = random_connection(4, rng);
    enforce_gauge_pattern(v, rng, false);
    v.set_omega(1, 2, 3, Scalar(1));
    v.set_omega(2, 3, 1, Scalar(1));
    v.set_omega(3, 1, 2, Scalar(1));
    violation_checks("violation_dim8_base_sector", v);
  }
  for (int n : {3, 4}) {
    Rng rng(mix_seed(seed, 0x6B10u + std::uint64_t(n)));
    FrameConnection v = random_connection(n, rng);
    enforce_gauge_pattern(v, rng, n == 3);
    v.set_omega(1 + n, 2, 3, Scalar(1));
    violation_checks("violation_dim" + std::to_string(2 * n) + "_dual_rows",
                     v);
  }

  {
    FrameConnection c(3);
    c.set_omega(1, 2, 3, Scalar(1));
    c.set_omega(2, 3, 1, Scalar(1));
    c.set_omega(3, 1, 2, Scalar(1));
    const TwistorGauge g = twistor_gauge(c);
    rep.add("dim6_twisting_profile_admits_gauge", g.satisfiable,
            gauge_failures(g));
    rep.add("dim6_twisting_profile_vanishes",
            g.satisfiable && all_components_vanish(apply_gauge(c, g.A)));
    const EquivalencePair p = integrability_check(c, 3);
    rep.add("dim6_twisting_profile_not_integrable",
            !p.geometric && !p.spinorial);
  }
  {
    FrameConnection c(3);
    c.set_omega(4, 2, 3, Scalar(1));
    const EquivalencePair p = integrability_check(c, 3);
    rep.add("dim6_integrable_profile", p.geometric && p.spinorial);
    violation_checks("dim6_integrable_no_gauge", c);
  }
  return rep;
}

Report integrability(int n, std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "integrability";
  rep.n = n;
  rep.seed = seed;
  const std::vector<Report> reports = run_trials(trials, [&](int t) {
    const int k = 1 + (t % n);
    const int kind = (t / n) % 3;
    Rng rng(mix_seed(seed, std::uint64_t(t)));
    const FrameConnection c = kind == 0 ? random_connection(n, rng)
                              : kind == 1
                                  ? random_connection_integrable(n, k, rng)
                                  : random_connection_geodesic(n, k, rng);
    const EquivalencePair p = integrability_check(c, k);
    Report r;
    r.add("bracket_vs_spinor_equivalence", p.geometric == p.spinorial,
          "k=" + std::to_string(k) +
              " geometric=" + (p.geometric ? "1" : "0") +
              " spinorial=" + (p.spinorial ? "1" : "0"));
    if (kind == 1) {
      r.add("constructed_integrable_detected", p.geometric && p.spinorial);
      std::vector<PhaseVector> gens;
      for (int a = 1; a <= k; ++a) gens.push_back(frame_vector(n, a));
      const SpinorSubspace L =
          pure_subspace(IsotropicSubspace::from_vectors(n, gens));
      bool member_ok = true;
      for (int al = 1; al <= k && member_ok; ++al)
        for (int be = 1; be <= k && member_ok; ++be)
          for (std::size_t i = 0; i < L.dim() && member_ok; ++i) {
            const Spinor s = clifford_action(
                frame_vector(n, al), omega_apply(c, be, L.basis_spinor(i)));
            member_ok = contains_vector(L.space(), spinor_coords(s));
          }
      r.add("derivative_stays_annihilated", member_ok);
    }
    if (kind == 2) {
      const EquivalencePair q = totally_geodesic_check(c, k);
      r.add("geodesic_generator_agreement", q.geometric == q.spinorial);
    }
    return r;
  });
  aggregate_trials(rep, reports);

  {
    bool ok = true;
    std::string witness;
    const int rounds = std::max(1, trials / 4);
    for (int t = 0; t < rounds && ok; ++t) {
      Rng rng(mix_seed(seed, 0xCAFE00u + std::uint64_t(t)));
      const FrameConnection c =
          t % 2 == 0 ? random_connection(n, rng)
                     : random_connection_integrable(n, n, rng);
      bool proportional = true;
      for (int a = 1; a <= n && proportional; ++a) {
        const Spinor w = omega_apply(c, a, Spinor::unit(n));
        for (const auto& [mask, coeff] : w.terms())
          if (mask != 0) {
            proportional = false;
            (void)coeff;
          }
      }
      const EquivalencePair p = integrability_check(c, n);
      ok = proportional == p.geometric && p.geometric == p.spinorial;
      if (!ok) witness = "round " + std::to_string(t);
    }
    rep.add("maximal_span_scaling_equivalence", ok, witness);
  }
  return rep;
}

Report geodesic(int n, std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "geodesic";
  rep.n = n;
  rep.seed = seed;
  const std::vector<Report> reports = run_trials(trials, [&](int t) {
    const int k = 1 + (t % n);
    const int kind = (t / n) % 3;
    Rng rng(mix_seed(seed, std::uint64_t(t)));
    const FrameConnection c = kind == 0 ? random_connection(n, rng)
                              : kind == 1
                                  ? random_connection_geodesic(n, k, rng)
                                  : random_connection_integrable(n, k, rng);
    const EquivalencePair p = totally_geodesic_check(c, k);
    Report r;
    r.add("geodesic_vs_spinor_equivalence", p.geometric == p.spinorial,
          "k=" + std::to_string(k) +
              " geometric=" + (p.geometric ? "1" : "0") +
              " spinorial=" + (p.spinorial ? "1" : "0"));
    if (kind == 1)
      r.add("constructed_geodesic_detected", p.geometric && p.spinorial);
    if (k == n) {
      const EquivalencePair q = integrability_check(c, n);
      r.add("maximal_integrable_implies_geodesic",
            !q.geometric || p.geometric);
    }
    return r;
  });
  aggregate_trials(rep, reports);

  {
    bool ok = true;
    std::string witness;
    const int rounds = std::max(1, trials / 4);
    for (int t = 0; t < rounds && ok; ++t) {
      Rng rng(mix_seed(seed, 0xD00D00u + std::uint64_t(t)));
      FrameConnection c = random_connection(n, rng);
      if (t % 3 == 1) {
        enforce_gauge_pattern(c, rng, false);
      } else if (t % 3 == 2) {
        enforce_gauge_pattern(c, rng, false);
        c.set_omega(1, 1, 2, Scalar(1));
      }
      const bool probe =
          condition_geom_check(c, 8, mix_seed(seed, 0xD11D00u + std::uint64_t(t)));
      ok = probe == gauge_slots_clear(c);
      if (!ok) witness = "round " + std::to_string(t);
    }
    rep.add("sampling_probe_matches_slots", ok, witness);
  }
  return rep;
}

Report weyl_pure(int n, std::uint64_t seed, int trials) {
  Report rep;
  rep.suite = "weyl-purity";
  rep.n = n;
  rep.seed = seed;
  const std::vector<Report> reports = run_trials(trials, [&](int t) {
    Rng rng(mix_seed(seed, std::uint64_t(t)));
    Report r;
    if (n <= 3) {
      const Spinor w = random_weyl_spinor(n, rng, t % 2 == 0);
      r.add("chiral_implies_pure", is_pure(w));
    }
    const IsotropicSubspace I =
        random_isotropic(n, n, mix_seed(seed, 0x9E0D00u + std::uint64_t(t)));
    const SpinorSubspace L = pure_subspace(I);
    bool line_ok = L.dim() == 1;
    if (line_ok) {
      const Spinor s = L.basis_spinor(0);
      const auto [even, odd] = chirality_split(s);
      line_ok = (even.is_zero() || odd.is_zero()) && is_pure(s);
    }
    r.add("pure_line_is_chiral", line_ok);
    return r;
  });
  aggregate_trials(rep, reports);

  if (n >= 2) {
    const Spinor mix =
        Spinor::unit(n) + Spinor::blade(n, (1u << n) - 1);
    if (n >= 3)
      rep.add("unit_plus_top_blade_not_pure", !is_pure(mix));
    else
      rep.add("unit_plus_top_blade_pure", is_pure(mix));
  }
  return rep;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  auto run = [&](int index, const std::string& label, double budget,
                 auto&& make) {
    CriterionResult cr;
    cr.index = index;
    cr.label = label;
    cr.budget = budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Report rep = make();
      cr.pass = rep.all_ok();
      if (!cr.pass) {
        std::size_t extra = 0;
        for (const CheckResult& c : rep.checks)
          if (c.status == Status::fail) {
            if (cr.detail.empty()) {
              cr.detail = c.name;
              if (!c.witness.empty()) cr.detail += " :: " + c.witness;
            } else {
              ++extra;
            }
          }
        if (extra > 0) cr.detail += " (+" + std::to_string(extra) + " more)";
      }
    } catch (const std::exception& e) {
      cr.pass = false;
      cr.detail = std::string("exception: ") + e.what();
    }
    cr.seconds = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    if (cr.budget > 0 && cr.seconds > cr.budget) {
      cr.pass = false;
      if (!cr.detail.empty()) cr.detail += "; ";
      cr.detail += "over time budget";
    }
    out.push_back(std::move(cr));
  };

  run(1, "action and pairing goldens at base dimension 2", 1.0,
      [&] { return pairing_example(); });
  run(2, "annihilated subspace goldens at base dimension 3", 1.0,
      [&] { return subspace_example(); });
  run(3, "duality sweep, 100 subspace pairs each at n=2..5", 300.0, [&] {
    Report all;
    for (int n = 2; n <= 5; ++n)
      append_prefixed(all, theorem1(n, mix_seed(seed, std::uint64_t(n)), 100),
                      "n" + std::to_string(n) + "_");
    return all;
  });
  run(4, "annihilated dimension law over all (n,k)", 0.0,
      [&] { return dimension_law(seed); });
  run(5, "algebra laws, 100 trials each at n=1..4", 120.0, [&] {
    Report all;
    for (int n = 1; n <= 4; ++n)
      append_prefixed(
          all, clifford_laws(n, mix_seed(seed, 0x50u + std::uint64_t(n)), 100),
          "n" + std::to_string(n) + "_");
    return all;
  });
  run(6, "connection identities, 100 seeds each at n=2,3", 120.0, [&] {
    Report all;
    for (int n = 2; n <= 3; ++n)
      append_prefixed(
          all,
          connection_suite(n, mix_seed(seed, 0x60u + std::uint64_t(n)), 100),
          "n" + std::to_string(n) + "_");
    return all;
  });
  run(7, "twistor closed forms, 100 seeds each at n=2..5", 300.0, [&] {
    Report all;
    for (int n = 2; n <= 5; ++n)
      append_prefixed(
          all, twistor_oracle(n, mix_seed(seed, 0x70u + std::uint64_t(n)), 100),
          "n" + std::to_string(n) + "_");
    return all;
  });
  run(8, "gauge profiles and violations at dimensions 4, 6, 8", 0.0,
      [&] { return gauge_profiles(seed); });
  run(9, "distribution equivalences, 200 seeds each at n=2..4", 180.0, [&] {
    Report all;
    for (int n = 2; n <= 4; ++n) {
      append_prefixed(
          all, integrability(n, mix_seed(seed, 0x90u + std::uint64_t(n)), 200),
          "n" + std::to_string(n) + "_");
      append_prefixed(
          all, geodesic(n, mix_seed(seed, 0xA0u + std::uint64_t(n)), 200),
          "n" + std::to_string(n) + "_geo_");
    }
    return all;
  });
  run(10, "chirality and purity boundary, 200 samples at n=2,3", 0.0, [&] {
    Report all;
    append_prefixed(all, weyl_pure(2, mix_seed(seed, 0xB2u), 200), "n2_");
    append_prefixed(all, weyl_pure(3, mix_seed(seed, 0xB3u), 200), "n3_");
    append_prefixed(all, weyl_pure(4, mix_seed(seed, 0xB4u), 25), "n4_");
    return all;
  });
  return out;
}

std::string criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.index << ": "
     << r.label << " (" << std::fixed << std::setprecision(2) << r.seconds
     << "s";
  if (r.budget > 0)
    os << " / budget " << std::setprecision(0) << r.budget << "s";
  os << ")";
  if (!r.detail.empty()) os << " :: " << r.detail;
  return os.str();
}

}  // namespace purespin::suites
