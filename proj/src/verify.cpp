#include "mhz/verify.hpp"

#include "mhz/bernoulli.hpp"
#include "mhz/parallel.hpp"

#include <cmath>
#include <sstream>

namespace mhz::verify {

bool Suite::ok() const {
  for (const Case& c : cases)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json suite_json(const Suite& suite) {
  nlohmann::ordered_json j;
  j["suite"] = suite.name;
  j["pass"] = suite.ok();
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const Case& c : suite.cases) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  if (!suite.extra.is_null()) j["extra"] = suite.extra;
  return j;
}

namespace {

Case check(const std::string& name, bool pass, const std::string& detail = "") {
  return Case{name, pass, detail};
}

std::string point_str(const std::vector<long>& N) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < N.size(); ++i) out << (i ? "," : "") << N[i];
  out << ")";
  return out.str();
}

std::vector<std::vector<long>> box(int n, long bound) {
  std::vector<std::vector<long>> points;
  std::vector<long> N(n, 0);
  for (;;) {
    points.push_back(N);
    int pos = 0;
    while (pos < n && N[pos] == bound) N[pos++] = 0;
    if (pos == n) break;
    ++N[pos];
  }
  return points; // odometer order; first coordinate fastest
}

std::vector<Rat> alpha_prefix(const std::vector<Rat>& full, int n) {
  return std::vector<Rat>(full.begin(), full.begin() + n);
}

} // namespace

Suite classical_n1() {
  Suite suite{"classical-n1"};
  const std::vector<Rat> alphas = {Rat(1), Rat(1, 2), Rat(1, 3), Rat(5, 2)};
  for (const Rat& a : alphas) {
    bool all_ok = true;
    std::string first_bad;
    for (long N = 0; N <= 20; ++N) {
      Rat expected =
          -poly1_eval(bernoulli_polynomial(static_cast<unsigned long>(N + 1)), a) /
          Rat(N + 1);
      EvalReport got = zeta_value(AlphaVec({a}), MultiIndex({N}), Variant::corrected);
      if (got.polar || *got.value != expected) {
        all_ok = false;
        if (first_bad.empty()) first_bad = "N=" + std::to_string(N);
      }
    }
    suite.cases.push_back(check("alpha=" + rat_str(a) + ", N<=20", all_ok, first_bad));
  }
  auto spot = [](long N, const Rat& expected) {
    EvalReport r = zeta_value(AlphaVec({Rat(1)}), MultiIndex({N}), Variant::corrected);
    return !r.polar && *r.value == expected;
  };
  suite.cases.push_back(check("zeta(0)=-1/2, zeta(-1)=-1/12, zeta(-2)=0",
                              spot(0, Rat(-1, 2)) && spot(1, Rat(-1, 12)) &&
                                  spot(2, Rat(0))));
  return suite;
}

Suite oracle_grid() {
  Suite suite{"oracle-grid"};
  const std::vector<std::vector<Rat>> alphas = {
      {Rat(1), Rat(1)}, {Rat(1), Rat(3, 2)}, {Rat(1, 2), Rat(1)}};
  for (const auto& av : alphas) {
    AlphaVec alpha(av);
    std::vector<std::vector<long>> points;
    for (long N1 = 0; N1 <= 6; ++N1)
      for (long N2 = 0; N2 <= 6; ++N2)
        if ((N1 + N2) % 2 == 1) points.push_back({N1, N2});
    std::vector<int> bad(points.size(), 0);
    parallel_for(static_cast<long>(points.size()), [&](long i) {
      MultiIndex N(points[i]);
      EvalReport z = zeta_value(alpha, N, Variant::corrected);
      if (z.polar || *z.value != oracle_zeta(alpha, N)) bad[i] = 1;
    });
    std::string detail;
    bool all_ok = true;
    for (size_t i = 0; i < points.size(); ++i)
      if (bad[i]) {
        all_ok = false;
        if (detail.empty()) detail = "first mismatch at N=" + point_str(points[i]);
      }
    suite.cases.push_back(check(
        "alpha=(" + rat_str(av[0]) + "," + rat_str(av[1]) + "), odd sums, N<=6",
        all_ok, detail));
  }

  // degeneracy: the n=1 oracle IS the classical formula
  bool degen = true;
  for (const Rat& a : {Rat(1), Rat(1, 2), Rat(7, 3)})
    for (long N = 0; N <= 8; ++N) {
      Rat expected =
          -poly1_eval(bernoulli_polynomial(static_cast<unsigned long>(N + 1)), a) /
          Rat(N + 1);
      if (oracle_zeta(AlphaVec({a}), MultiIndex({N})) != expected) degen = false;
    }
  suite.cases.push_back(check("n=1 oracle reproduces the classical formula", degen));

  // informational only: iterated-limit vs evaluator at irregular points
  nlohmann::ordered_json irregular = nlohmann::ordered_json::array();
  for (const auto& av : alphas) {
    AlphaVec alpha(av);
    for (long N1 = 0; N1 <= 4; ++N1)
      for (long N2 = 0; N2 <= 4; ++N2) {
        if ((N1 + N2) % 2 == 1) continue;
        MultiIndex N({N1, N2});
        Rat z = *zeta_value(alpha, N, Variant::corrected).value;
        Rat o = oracle_zeta(alpha, N, true);
        nlohmann::ordered_json row;
        row["alpha"] = {rat_str(av[0]), rat_str(av[1])};
        row["N"] = N.entries;
        row["evaluator"] = rat_str(z);
        row["iterated_limit"] = rat_str(o);
        row["agree"] = (z == o);
        irregular.push_back(row);
      }
  }
  suite.extra["irregular_points_informational"] = irregular;
  return suite;
}

MultiPoly random_multipoly(std::mt19937& rng, int nvars, unsigned max_degree,
                           long coef_bound) {
  std::uniform_int_distribution<int> term_count(1, 6);
  std::uniform_int_distribution<long> num(-coef_bound, coef_bound);
  std::uniform_int_distribution<long> den(1, coef_bound);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  MultiPoly p(nvars);
  int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    // split a random total degree across the variables
    unsigned total = deg(rng);
    Exponents e(nvars, 0);
    for (unsigned unit = 0; unit < total; ++unit)
      e[std::uniform_int_distribution<int>(0, nvars - 1)(rng)] += 1;
    long p_num = num(rng);
    if (p_num == 0) p_num = 1;
    p.add_term(e, rat(p_num, den(rng)));
  }
  return p;
}

Suite bernoulli_roundtrip(unsigned seed, int count) {
  Suite suite{"bernoulli-roundtrip"};
  std::mt19937 rng(seed);
  int failed = -1;
  for (int i = 0; i < count; ++i) {
    int nvars = std::uniform_int_distribution<int>(1, 3)(rng);
    MultiPoly p = random_multipoly(rng, nvars, 8, 100);
    if (cube_integrate_shifted(bernoullize(p)) != p) {
      failed = i;
      break;
    }
  }
  suite.cases.push_back(check(
      std::to_string(count) + " random round trips, nvars<=3, degree<=8",
      failed < 0, failed < 0 ? "" : "instance " + std::to_string(failed)));

  bool linear = true, leading = true;
  for (int i = 0; i < 25; ++i) {
    int nvars = std::uniform_int_distribution<int>(1, 3)(rng);
    MultiPoly p = random_multipoly(rng, nvars, 6, 50);
    MultiPoly q = random_multipoly(rng, nvars, 6, 50);
    Rat c = rat(std::uniform_int_distribution<long>(-9, 9)(rng), 1 + i % 4);
    if (bernoullize(p.scaled(c) + q) != bernoullize(p).scaled(c) + bernoullize(q))
      linear = false;
    if (cube_integrate_shifted(p.scaled(c) + q) !=
        cube_integrate_shifted(p).scaled(c) + cube_integrate_shifted(q))
      linear = false;
    // top-degree terms survive the substitution unchanged
    MultiPoly b = bernoullize(p);
    unsigned d = p.total_degree();
    if (b.total_degree() != d) leading = false;
    for (const auto& [e, coef] : p.terms()) {
      unsigned sum = 0;
      for (unsigned x : e) sum += x;
      if (sum == d && b.coefficient(e) != coef) leading = false;
    }
  }
  suite.cases.push_back(check("linearity of both transforms", linear));
  suite.cases.push_back(check("degree and leading terms preserved", leading));
  return suite;
}

Suite pipeline_agreement() {
  Suite suite{"pipeline-agreement"};
  const std::vector<std::vector<Rat>> alpha_full = {
      {Rat(1), Rat(1), Rat(1)},
      {Rat(1), Rat(3, 2), Rat(2)},
      {Rat(1, 2), Rat(1, 2), Rat(1, 2)}};
  for (int n = 1; n <= 3; ++n) {
    auto points = box(n, 3);
    struct Task {
      AlphaVec alpha;
      MultiIndex N;
      Variant variant;
    };
    std::vector<Task> tasks;
    for (const auto& full : alpha_full)
      for (const auto& N : points)
        for (Variant v : {Variant::corrected, Variant::paper})
          tasks.push_back({AlphaVec(alpha_prefix(full, n)), MultiIndex(N), v});
    std::vector<int> bad(tasks.size(), 0);
    parallel_for(static_cast<long>(tasks.size()), [&](long i) {
      const Task& t = tasks[i];
      EvalReport pipeline = zeta_value(t.alpha, t.N, t.variant);
      EvalReport direct = zeta_value_direct(t.alpha, t.N, t.variant);
      Rat y0 = y_shifted_poly(t.alpha, t.N, t.variant)
                   .eval(std::vector<Rat>(t.N.dim(), Rat(0)));
      bool ok = !pipeline.polar && !direct.polar &&
                *pipeline.value == *direct.value &&
                pipeline.term_count == direct.term_count &&
                y0 == *y_value(t.alpha, t.N, t.variant).value;
      if (!ok) bad[i] = 1;
    });
    bool all_ok = true;
    std::string detail;
    for (size_t i = 0; i < tasks.size(); ++i)
      if (bad[i]) {
        all_ok = false;
        if (detail.empty())
          detail = std::string("first mismatch at N=") + point_str(tasks[i].N.entries) +
                   " variant=" + variant_name(tasks[i].variant);
      }
    suite.cases.push_back(check("n=" + std::to_string(n) +
                                    ": double sum = pipeline, both variants, N<=3",
                                all_ok, detail));
  }
  return suite;
}

Suite variant_arbitration(double eps, long cutoff) {
  Suite suite{"variant-arbitration"};
  Tolerance tol{eps, cutoff};
  struct Point {
    std::vector<long> s;
    std::vector<Rat> alpha;
  };
  std::vector<Point> grid;
  for (const auto& s : {std::vector<long>{3, 2}, {4, 3}, {2, 2}})
    for (const auto& a :
         {std::vector<Rat>{Rat(1), Rat(3, 2)}, {Rat(1), Rat(5, 4)}})
      grid.push_back({s, a});

  struct Row {
    double quad = 0, corrected = 0, paper = 0;
    bool corrected_ok = false, paper_ok = false, paper_converged = false;
  };
  std::vector<Row> rows(grid.size());
  parallel_for(static_cast<long>(grid.size()), [&](long i) {
    AlphaVec alpha(grid[i].alpha);
    SignatureS s(grid[i].s);
    QuadResult q = y_numeric(alpha, s, tol);
    KSeriesSum corr = y_series_numeric(alpha, s, Variant::corrected, tol);
    KSeriesSum pap = y_series_numeric(alpha, s, Variant::paper, tol);
    rows[i] = {q.value,
               corr.value,
               pap.value,
               std::fabs(corr.value - q.value) <= eps,
               std::fabs(pap.value - q.value) <= eps,
               pap.converged};
  });

  bool corrected_everywhere = true, paper_nowhere = true;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (size_t i = 0; i < grid.size(); ++i) {
    corrected_everywhere = corrected_everywhere && rows[i].corrected_ok;
    paper_nowhere = paper_nowhere && !rows[i].paper_ok;
    nlohmann::ordered_json row;
    row["s"] = grid[i].s;
    row["alpha"] = {rat_str(grid[i].alpha[0]), rat_str(grid[i].alpha[1])};
    row["quadrature"] = rows[i].quad;
    row["corrected"] = rows[i].corrected;
    row["paper"] = rows[i].paper;
    row["delta_corrected"] = std::fabs(rows[i].corrected - rows[i].quad);
    row["delta_paper"] = std::fabs(rows[i].paper - rows[i].quad);
    row["paper_series_converged"] = rows[i].paper_converged;
    row["verdict"] = rows[i].corrected_ok && !rows[i].paper_ok ? "corrected"
                     : rows[i].paper_ok && !rows[i].corrected_ok
                         ? "paper"
                         : "inconclusive";
    table.push_back(row);
  }
  suite.extra["arbitration"] = table;
  suite.cases.push_back(check("corrected series matches quadrature at every grid point",
                              corrected_everywhere));
  suite.cases.push_back(
      check("paper series matches nowhere on the grid", paper_nowhere));

  bool controls = true;
  for (const Rat& a : {Rat(1), Rat(3, 2)}) {
    AlphaVec alpha = AlphaVec::broadcast(a, 2);
    SignatureS s32({3, 2});
    double expected = to_double(Rat(1) / (Rat(3) * pow_rat(a, 3)));
    if (std::fabs(y_numeric(alpha, s32, tol).value - expected) > eps) controls = false;
    KSeriesSum collapse = y_series_numeric(alpha, s32, Variant::corrected, tol);
    if (!collapse.converged || std::fabs(collapse.value - expected) > 1e-12)
      controls = false;
  }
  suite.cases.push_back(check("equal-shift control 1/(3 alpha^3)", controls));
  return suite;
}

Suite specialization() {
  Suite suite{"specialization"};
  for (int n = 1; n <= 3; ++n) {
    bool hurwitz_ok = true, mzv_ok = true;
    for (const auto& N_entries : box(n, 3)) {
      MultiIndex N(N_entries);
      for (Variant v : {Variant::corrected, Variant::paper}) {
        for (const Rat& a : {Rat(1), Rat(1, 2), Rat(2)}) {
          EvalReport special = zeta_hurwitz_special(a, N, v);
          EvalReport general = zeta_value(AlphaVec::broadcast(a, n), N, v);
          if (special.polar != general.polar ||
              (!special.polar && *special.value != *general.value))
            hurwitz_ok = false;
        }
        EvalReport m = mzv_nonpositive(N, v);
        EvalReport general = zeta_value(AlphaVec::broadcast(Rat(1), n), N, v);
        if (m.polar != general.polar || (!m.polar && *m.value != *general.value))
          mzv_ok = false;
      }
    }
    suite.cases.push_back(check(
        "n=" + std::to_string(n) + ": equal-shift specialization", hurwitz_ok));
    suite.cases.push_back(
        check("n=" + std::to_string(n) + ": all-ones specialization", mzv_ok));
  }
  return suite;
}

Suite raabe_suite(double eps, long cutoff, unsigned seed) {
  Suite suite{"raabe"};
  Tolerance tol{eps, cutoff};
  struct Combo {
    std::vector<Rat> alpha;
    std::vector<long> s;
  };
  const std::vector<Combo> combos = {{{Rat(1)}, {3}},
                                     {{Rat(1, 2)}, {3}},
                                     {{Rat(1)}, {2}},
                                     {{Rat(1, 2)}, {2}},
                                     {{Rat(1), Rat(1)}, {3, 2}}};
  std::vector<RaabeCheck> results(combos.size());
  parallel_for(static_cast<long>(combos.size()), [&](long i) {
    results[i] =
        raabe_numeric_check(AlphaVec(combos[i].alpha), SignatureS(combos[i].s), tol);
  });
  for (size_t i = 0; i < combos.size(); ++i) {
    std::ostringstream name;
    name << "n=" << combos[i].alpha.size() << " s=" << point_str(combos[i].s)
         << " alpha=(";
    for (size_t j = 0; j < combos[i].alpha.size(); ++j)
      name << (j ? "," : "") << rat_str(combos[i].alpha[j]);
    name << ")";
    std::ostringstream detail;
    detail << "lhs=" << results[i].lhs << " rhs=" << results[i].rhs
           << " margin=" << results[i].margin;
    suite.cases.push_back(check(name.str(), results[i].pass, detail.str()));
  }

  // exact form: integrating the bernoullized polynomial over a shifted unit
  // cube recovers the original polynomial
  bool exact_ok = true;
  const std::vector<Rat> alpha_full = {Rat(1), Rat(3, 2), Rat(2)};
  for (int n = 1; n <= 3; ++n)
    for (const auto& N_entries : box(n, 2))
      for (Variant v : {Variant::corrected, Variant::paper}) {
        MultiPoly p = y_shifted_poly(AlphaVec(alpha_prefix(alpha_full, n)),
                                     MultiIndex(N_entries), v);
        if (cube_integrate_shifted(bernoullize(p)) != p) exact_ok = false;
      }
  suite.cases.push_back(
      check("polynomial-level identity on evaluator output", exact_ok));

  std::mt19937 rng(seed);
  bool random_ok = true;
  for (int i = 0; i < 25; ++i) {
    int nvars = std::uniform_int_distribution<int>(1, 3)(rng);
    MultiPoly p = random_multipoly(rng, nvars, 8, 100);
    if (cube_integrate_shifted(bernoullize(p)) != p) random_ok = false;
  }
  suite.cases.push_back(check("seeded random round trips", random_ok));
  return suite;
}

Suite pole_scan() {
  Suite suite{"pole-scan"};
  struct Fixture {
    long points, t_sum, term_sum;
    Rat fingerprint;
  };
  const Fixture expected[3] = {{5, 5, 20, Rat(-23, 40)},
                               {25, 100, 1450, Rat(-54151, 277200)},
                               {125, 2875, 147300, Rat(-122050979, 1397088000)}};
  for (int n = 1; n <= 3; ++n) {
    auto points = box(n, 4);
    std::vector<long> t_counts(points.size(), 0), term_counts(points.size(), 0);
    std::vector<int> polar_flags(points.size(), 0), finite_flags(points.size(), 0);
    std::vector<Rat> values(points.size(), Rat(0));
    parallel_for(static_cast<long>(points.size()), [&](long i) {
      MultiIndex N(points[i]);
      PolarScan scan = is_polar(N);
      polar_flags[i] = scan.polar ? 1 : 0;
      t_counts[i] = static_cast<long>(enumerate_T(N).size());
      EvalReport z = zeta_value(AlphaVec::broadcast(Rat(1), n), N, Variant::corrected);
      finite_flags[i] = (!z.polar && z.value.has_value()) ? 1 : 0;
      term_counts[i] = z.term_count;
      if (z.value) values[i] = *z.value;
    });
    long polar_total = 0, t_sum = 0, term_sum = 0;
    Rat fingerprint(0);
    bool finite_all = true;
    for (size_t i = 0; i < points.size(); ++i) {
      polar_total += polar_flags[i];
      t_sum += t_counts[i];
      term_sum += term_counts[i];
      fingerprint += values[i];
      finite_all = finite_all && finite_flags[i];
    }
    const Fixture& f = expected[n - 1];
    suite.cases.push_back(check("n=" + std::to_string(n) +
                                    ": no polar points in the box, entries<=4",
                                polar_total == 0));
    suite.cases.push_back(check(
        "n=" + std::to_string(n) + ": every value finite", finite_all));
    std::ostringstream detail;
    detail << "points=" << points.size() << " sum|T|=" << t_sum
           << " sum_terms=" << term_sum << " sum_values=" << rat_str(fingerprint);
    suite.cases.push_back(
        check("n=" + std::to_string(n) + ": frozen scan fixture",
              static_cast<long>(points.size()) == f.points && t_sum == f.t_sum &&
                  term_sum == f.term_sum && fingerprint == f.fingerprint,
              detail.str()));
  }
  return suite;
}

Suite regression_constants() {
  Suite suite{"regression-constants"};
  auto zeta = [](std::vector<Rat> a, std::vector<long> N, Variant v) {
    return *zeta_value(AlphaVec(std::move(a)), MultiIndex(std::move(N)), v).value;
  };
  const Variant C = Variant::corrected, P = Variant::paper;

  suite.cases.push_back(
      check("zeta((1,1),(0,0)) = -1/6", zeta({Rat(1), Rat(1)}, {0, 0}, C) == Rat(-1, 6)));

  bool symbolic = true;
  for (const Rat& a : {Rat(1), Rat(1, 2), Rat(2)}) {
    Rat expected = (poly1_eval(bernoulli_polynomial(2), a) -
                    poly1_eval(bernoulli_polynomial(1), a)) /
                   2;
    if (zeta({a, a}, {0, 0}, C) != expected) symbolic = false;
  }
  suite.cases.push_back(
      check("zeta((a,a),(0,0)) = (B2(a)-B1(a))/2 at a in {1,1/2,2}", symbolic));

  suite.cases.push_back(check(
      "oracle((1,1),(0,1)) = 0 (pre-build frozen)",
      oracle_zeta(AlphaVec({Rat(1), Rat(1)}), MultiIndex({0, 1})) == Rat(0)));
  suite.cases.push_back(check(
      "zeta((1,3/2),(0,1)) = -1/48, equal to its oracle value",
      zeta({Rat(1), Rat(3, 2)}, {0, 1}, C) == Rat(-1, 48) &&
          oracle_zeta(AlphaVec({Rat(1), Rat(3, 2)}), MultiIndex({0, 1})) ==
              Rat(-1, 48)));
  suite.cases.push_back(check("zeta((1,3/2),(0,0)) = 1/12",
                              zeta({Rat(1), Rat(3, 2)}, {0, 0}, C) == Rat(1, 12)));
  suite.cases.push_back(check("zeta((1/2,1/2),(0,0)) = -1/24",
                              zeta({Rat(1, 2), Rat(1, 2)}, {0, 0}, C) == Rat(-1, 24)));
  suite.cases.push_back(
      check("variant discrimination at ((1/2,1/2),(0,1)): 1/48 vs 0",
            zeta({Rat(1, 2), Rat(1, 2)}, {0, 1}, C) == Rat(1, 48) &&
                zeta({Rat(1, 2), Rat(1, 2)}, {0, 1}, P) == Rat(0)));
  suite.cases.push_back(
      check("all-ones n=3 at (0,0,0): corrected -1/12, paper -1/4",
            zeta({Rat(1), Rat(1), Rat(1)}, {0, 0, 0}, C) == Rat(-1, 12) &&
                zeta({Rat(1), Rat(1), Rat(1)}, {0, 0, 0}, P) == Rat(-1, 4)));
  suite.cases.push_back(check("zeta((1,1,1),(0,0,1)) = 1/120",
                              zeta({Rat(1), Rat(1), Rat(1)}, {0, 0, 1}, C) ==
                                  Rat(1, 120)));
  suite.cases.push_back(check(
      "zeta((1,3/2,2),(1,0,2)) = -367/241920",
      zeta({Rat(1), Rat(3, 2), Rat(2)}, {1, 0, 2}, C) == Rat(-367, 241920)));
  suite.cases.push_back(check("zeta((2,2),(3,4)) = 1/480",
                              zeta({Rat(2), Rat(2)}, {3, 4}, C) == Rat(1, 480)));
  suite.cases.push_back(check("zeta((1,5/4),(2,1)) = 1/480",
                              zeta({Rat(1), Rat(5, 4)}, {2, 1}, C) == Rat(1, 480)));
  // observed iterated-limit agreement at one irregular point; recorded as a
  // constant, deliberately not generalized
  suite.cases.push_back(check(
      "iterated limit at irregular (1,1),(0,0) equals -1/6",
      oracle_zeta(AlphaVec({Rat(1), Rat(1)}), MultiIndex({0, 0}), true) ==
          Rat(-1, 6)));
  suite.cases.push_back(check("paper-variant all-ones value at (0,0) is 1/3",
                              zeta({Rat(1), Rat(1)}, {0, 0}, P) == Rat(1, 3)));
  return suite;
}

} // namespace mhz::verify
