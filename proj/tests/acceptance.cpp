// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every comparison is exact; there are no numeric tolerances anywhere.

#include <bit>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <iostream>
#include <set>
#include <sstream>

#include "discarr/discriminantal.hpp"
#include "discarr/gallery.hpp"
#include "discarr_tools/commands.hpp"
#include "support.hpp"

using namespace discarr;
using namespace discarr::testing;

namespace {

struct Check {
  std::ostringstream detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << what;
      ok = false;
    }
  }
};

IndexMatching M(std::array<IndexMatching::Pair, 3> p) { return IndexMatching(p); }

std::vector<Arrangement> gallery_k(std::size_t k) {
  std::vector<Arrangement> out;
  for (const auto& name : gallery_names()) {
    Arrangement a = gallery_item(name);
    if (a.k() == k) out.push_back(std::move(a));
  }
  return out;
}

// 1. Octahedral: 12 quadral points, 6 involutions, type 1^2 4^1, m = 12.
void octahedral_counts(Check& c) {
  const Arrangement a = octahedral();
  const auto q = quadral_points(a);
  const auto inv = find_involutions(a);
  const TypeReport t = arrangement_type(a);
  c.expect(q.size() == 12, "quadral count " + std::to_string(q.size()));
  c.expect(inv.size() == 6, "involution count " + std::to_string(inv.size()));
  c.expect(t.type == PartitionType::parse("1^2 4^1"), "type " + t.type.to_string());
  c.expect(t.m_a == 12 && 2 * m_of_type(t.type) == 12, "m(A) " + std::to_string(t.m_a));
  c.detail << "quadral=" << q.size() << " involutions=" << inv.size() << " type=" << t.type.to_string()
           << " m=" << t.m_a;
}

// 2. Dodecahedral: the ten listed matchings and dependencies, five nonzero others.
void dodecahedral_table(Check& c) {
  const Arrangement a = dodecahedral();
  const std::vector<std::pair<IndexMatching, std::vector<std::pair<int, IndexSet>>>> table{
      {M({{{1, 2}, {3, 5}, {4, 6}}}), {{1, {1, 2, 3, 5}}, {-1, {1, 2, 4, 6}}, {-1, {3, 4, 5, 6}}}},
      {M({{{1, 2}, {3, 6}, {4, 5}}}), {{1, {1, 2, 3, 6}}, {-1, {1, 2, 4, 5}}, {-1, {3, 4, 5, 6}}}},
      {M({{{1, 3}, {2, 6}, {4, 5}}}), {{1, {1, 2, 3, 6}}, {1, {1, 3, 4, 5}}, {1, {2, 4, 5, 6}}}},
      {M({{{1, 3}, {2, 4}, {5, 6}}}), {{1, {1, 3, 5, 6}}, {-1, {1, 2, 3, 4}}, {-1, {2, 4, 5, 6}}}},
      {M({{{1, 4}, {2, 3}, {5, 6}}}), {{1, {1, 4, 5, 6}}, {-1, {1, 2, 3, 4}}, {-1, {2, 3, 5, 6}}}},
      {M({{{1, 4}, {2, 5}, {3, 6}}}), {{1, {1, 3, 4, 6}}, {-1, {1, 2, 4, 5}}, {-1, {2, 3, 5, 6}}}},
      {M({{{1, 5}, {2, 3}, {4, 6}}}), {{1, {1, 4, 5, 6}}, {-1, {1, 2, 3, 5}}, {-1, {2, 3, 4, 6}}}},
      {M({{{1, 5}, {2, 6}, {3, 4}}}), {{1, {2, 3, 4, 6}}, {-1, {1, 2, 5, 6}}, {-1, {1, 3, 4, 5}}}},
      {M({{{1, 6}, {2, 4}, {3, 5}}}), {{1, {1, 2, 4, 6}}, {-1, {1, 3, 5, 6}}, {-1, {2, 3, 4, 5}}}},
      {M({{{1, 6}, {2, 5}, {3, 4}}}), {{1, {1, 3, 4, 6}}, {-1, {1, 2, 5, 6}}, {-1, {2, 3, 4, 5}}}},
  };
  std::set<IndexMatching> listed;
  int zero_deps = 0;
  for (const auto& [m, terms] : table) {
    listed.insert(m);
    Vector sum = zero_vector(a.field(), 6);
    for (const auto& [coef, L] : terms)
      sum = add(sum, scaled(discriminantal_normal(a, L), FieldElement::from_integer(a.field(), coef)));
    c.expect(is_zero_vector(sum), "dependency for " + m.to_string() + " is nonzero");
    c.expect(good6_condition(a, m).is_zero(), "determinant for " + m.to_string() + " is nonzero");
    zero_deps += is_zero_vector(sum);
  }
  int nonzero_others = 0;
  for (const auto& m : matchings_of({1, 2, 3, 4, 5, 6}))
    if (!listed.count(m)) nonzero_others += !good6_condition(a, m).is_zero();
  const auto detected = good6_points(a);
  c.expect(std::set<IndexMatching>(detected.begin(), detected.end()) == listed, "detected set differs");
  c.expect(nonzero_others == 5, "other matchings vanish");
  c.detail << "detected=" << detected.size() << " dependencies_zero=" << zero_deps
           << " other_nonzero=" << nonzero_others;
}

// 3. Classification table over the published fields, certificates for the starred types.
void classification(Check& c) {
  const std::vector<std::string> fields{"QQ", "QQ", "QQ", "QQ", "QQ", "QQ", "*", "QQ(sqrt(5))", "*", "QQ(sqrt(-3))", "*"};
  std::ostringstream row;
  for (std::size_t i = 0; i < 11; ++i) {
    const PartitionType& nu = PartitionType::all()[i];
    const ClassificationResult r = classify_type(nu);
    const std::string field = r.witness ? r.witness->field.name() : "*";
    row << (i ? "," : "") << field;
    c.expect(field == fields[i], nu.to_string() + " over " + field);
    if (r.witness) {
      c.expect(arrangement_type(r.witness->arrangement).type == nu, nu.to_string() + " witness misclassified");
      c.expect(is_generic(r.witness->arrangement), nu.to_string() + " witness not generic");
    } else {
      c.expect(r.certified_none, nu.to_string() + " not certified");
    }
  }
  // The 2^3 reduction: y = x, z = x^2 and 2x(x - 1) = 0, whose roots violate genericity.
  const ClassificationResult two = classify_type(PartitionType::parse("2^3"));
  const MPoly x = MPoly::var(MPoly::kX);
  c.expect(two.reduced.size() == 2 && two.reduced[0] == std::make_pair(int(MPoly::kY), x) &&
               two.reduced[1] == std::make_pair(int(MPoly::kZ), x * x),
           "2^3 reduced form");
  c.expect(two.residual && two.residual->monic() == RationalPoly({0, -1, 1}), "2^3 residual");
  c.expect(two.rejected_roots == std::vector<Rational>{0, 1}, "2^3 rejected roots");
  const RationalPoly golden({-1, 1, 1}), eisenstein({1, -1, 1});
  c.expect(is_irreducible_over_q(golden) && is_irreducible_over_q(eisenstein), "quadratics reducible");
  const auto ext = [](const char* t) { return classify_type(PartitionType::parse(t)).extension_polynomial; };
  c.expect(ext("1^1 5^1") && ext("1^1 5^1")->monic() == golden, "1^1 5^1 extension");
  c.expect(ext("3^2") && ext("3^2")->monic() == eisenstein, "3^2 extension");
  const int code = tools::cmd_table("classification", 0).exit_code;
  c.expect(code == 0, "table classification exit " + std::to_string(code));
  c.detail << "fields=" << row.str() << " 2^3: y=x, z=x^2, " << two.residual->to_string('x') << "=0; table exit "
           << code;
}

// 4. F_4: every matching satisfies the cross-product condition; type 6^1.
void f4_maximum(Check& c) {
  const Arrangement a = f4_arrangement();
  int zero = 0;
  for (const auto& m : matchings_of({1, 2, 3, 4, 5, 6})) zero += good6_condition(a, m).is_zero();
  const TypeReport t = arrangement_type(a);
  c.expect(zero == 15, "vanishing matchings " + std::to_string(zero));
  c.expect(t.m_a == 15, "m(A) " + std::to_string(t.m_a));
  c.expect(t.type == PartitionType::parse("6^1"), "type " + t.type.to_string());
  c.detail << "vanishing=" << zero << " m=" << t.m_a << " type=" << t.type.to_string();
}

// 5. F_5 reaches m(A) = 20; nothing else exceeds it.
void f5_bound(Check& c) {
  const std::size_t m5 = quadral_points(f5_arrangement()).size();
  c.expect(m5 == 20 && 2 * m_of_type(PartitionType::parse("1^1 5^1")) == 20, "F5 m(A) " + std::to_string(m5));
  std::size_t worst = 0, checked = 0;
  for (const auto& a : gallery_k(2))
    if (a.n() == 6) {
      worst = std::max(worst, quadral_points(a).size());
      ++checked;
    }
  for (std::uint64_t s = 0; s < 200; ++s) {
    worst = std::max(worst, quadral_points(random_generic(6, 2, s, 3)).size());
    ++checked;
  }
  c.expect(worst <= 20, "m(A) = " + std::to_string(worst) + " > 20");
  c.detail << "F5 m=" << m5 << " max over " << checked << " others=" << worst;
}

// 6. |induced edges| equals m(nu) for all 203 set partitions.
void mformula(Check& c) {
  const std::vector<int> published{0, 1, 3, 2, 6, 4, 3, 10, 7, 6, 15};
  for (std::size_t i = 0; i < 11; ++i)
    c.expect(m_of_type(PartitionType::all()[i]) == published[i], PartitionType::all()[i].to_string());
  const auto parts = all_set_partitions();
  std::size_t agree = 0;
  for (const auto& v : parts) {
    const PartitionType t = PartitionType::of(v);
    std::size_t i = 0;
    while (!(PartitionType::all()[i] == t)) ++i;
    agree += std::popcount(induced_edges(v)) == published[i];
  }
  c.expect(parts.size() == 203 && agree == 203, "partitions agreeing " + std::to_string(agree));
  c.detail << agree << "/" << parts.size() << " partitions";
}

// 7. Regular polygons: counts at least the bounds, every prediction detected.
void polygons(Check& c) {
  for (int n = 6; n <= 10; ++n) {
    const Arrangement a = regular_polygon(n);
    const auto pred = predicted_polygon_sets(n);
    const auto q = quadral_points(a);
    const std::set<FourSet> qs(q.begin(), q.end());
    std::vector<QuintFamily> qq;
    if (n >= 7) qq = quintuple_points(a);
    const std::set<QuintFamily> qqs(qq.begin(), qq.end());
    c.expect(static_cast<long>(q.size()) >= polygon_quadral_bound(n), "quadral below bound at n=" + std::to_string(n));
    c.expect(static_cast<long>(qq.size()) >= polygon_quint_bound(n), "quint below bound at n=" + std::to_string(n));
    for (const auto& f : pred.foursets)
      c.expect(qs.count(f) && ceva_value(a, f).is_one(), "missed " + f.to_string() + " at n=" + std::to_string(n));
    for (const auto& f : pred.quints)
      c.expect(qqs.count(f) && quint_value(a, f).holds(), "missed " + f.to_string() + " at n=" + std::to_string(n));
    c.detail << "n=" << n << ":" << q.size() << ">=" << polygon_quadral_bound(n) << "," << qq.size()
             << ">=" << polygon_quint_bound(n) << (n < 10 ? " " : "");
  }
}

// 8. Property sweeps over the gallery and 200 seeded random arrangements per k.
void properties(Check& c) {
  std::size_t arrangements = 0, quadral_pairs = 0, rank_checks = 0, crossratio_checks = 0;
  const auto foursets6 = all_foursets(6);
  const auto quints7 = all_quints(7);
  const auto matchings6 = all_six_matchings(6);

  auto sweep_k2 = [&](const Arrangement& a) {
    ++arrangements;
    const auto d = build_discriminantal(a);
    const auto q = quadral_points(a);
    const std::set<FourSet> qs(q.begin(), q.end());
    for (const auto& f : q) c.expect(qs.count(f.complement()) > 0, "complement missing for " + f.to_string());
    c.expect(q.size() % 2 == 0, "odd quadral count");
    quadral_pairs += q.size() / 2;
    const auto candidates = a.n() == 6 ? foursets6 : all_foursets(static_cast<int>(a.n()));
    if (a.n() <= 7)
      for (const auto& f : candidates) {
        c.expect(qs.count(f) == (family_rank(d, as_vector(f.sets())) == 3), "Ceva/rank mismatch " + f.to_string());
        ++rank_checks;
      }
    if (a.n() >= 7) {
      const auto found = quintuple_points(a);
      c.expect(quint_closure_checks(found).empty(), "quintuple closure violated");
      if (a.n() == 7) {
        const std::set<QuintFamily> fs(found.begin(), found.end());
        for (const auto& f : quints7) {
          c.expect(fs.count(f) == (family_rank(d, as_vector(f.sets())) == 4), "quint/rank mismatch " + f.to_string());
          ++rank_checks;
        }
      }
    }
  };
  auto sweep_k3 = [&](const Arrangement& a) {
    ++arrangements;
    const auto d = build_discriminantal(a);
    const auto g = good6_points(a);
    const std::set<IndexMatching> gs(g.begin(), g.end());
    c.expect(pappus_closure_check(g).empty(), "Pappus closure violated");
    for (const auto& m : matchings6) {
      c.expect(gs.count(m) == (family_rank(d, as_vector(Good6Partition{m}.sets())) == 2),
               "good6/rank mismatch " + m.to_string());
      ++rank_checks;
    }
  };

  for (const auto& a : gallery_k(2)) sweep_k2(a);
  for (const auto& a : gallery_k(3)) sweep_k3(a);
  for (std::uint64_t s = 0; s < 200; ++s) {
    sweep_k2(random_generic(s % 2 ? 7 : 6, 2, s, 2));
    sweep_k3(random_generic(6, 3, s, 2));
  }
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Arrangement a = random_generic(6, 2, 5000 + s, 50);
    for (const auto& f : foursets6) {
      c.expect(crossratio_form(a, f) == -ceva_value(a, f), "cross-ratio form differs from -Ceva");
      ++crossratio_checks;
    }
  }
  c.detail << arrangements << " arrangements, " << quadral_pairs << " complement pairs, " << rank_checks
           << " rank equivalences, " << crossratio_checks << " cross-ratio identities";
}

// 9. nvg flats against a very generic reference agree with the detectors at n = 6.
void lattice_crosscheck(Check& c) {
  std::vector<std::pair<std::string, Arrangement>> items{
      {"octahedral", octahedral()}, {"dodecahedral", dodecahedral()}, {"f4", f4_arrangement()}};
  for (const auto& nu : PartitionType::all())
    if (auto w = classification_witness(nu)) items.emplace_back("witness " + nu.to_string(), *w);
  std::map<std::size_t, Lattice> refs;
  for (std::size_t k : {2u, 3u}) refs.emplace(k, intersection_lattice(build_discriminantal(reference_very_generic(6, k, 0))));
  std::size_t total = 0;
  for (const auto& [name, a] : items) {
    const auto d = build_discriminantal(a);
    std::set<std::vector<IndexSet>> lattice_side, detector_side;
    for (const auto& f : nvg_flats(d, refs.at(a.k()))) lattice_side.insert(support_sets(d, f));
    if (a.k() == 2)
      for (const auto& f : quadral_points(a)) detector_side.insert(as_vector(f.sets()));
    else
      for (const auto& m : good6_points(a)) {
        auto s = as_vector(Good6Partition{m}.sets());
        std::sort(s.begin(), s.end());
        detector_side.insert(s);
      }
    c.expect(lattice_side == detector_side, name + " disagrees");
    total += lattice_side.size();
  }
  std::size_t ref_nvg = 0;
  for (std::size_t k : {2u, 3u})
    for (std::uint64_t s = 1; s <= 5; ++s)
      ref_nvg += nvg_flats(build_discriminantal(reference_very_generic(6, k, s)), refs.at(k)).size();
  c.expect(ref_nvg == 0, "reference arrangements have nvg flats");
  c.detail << items.size() << " arrangements, " << total << " nvg flats matched, reference nvg=" << ref_nvg;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"octahedral quadral points and involutions", octahedral_counts},
      {"dodecahedral good 6-partitions and dependencies", dodecahedral_table},
      {"classification of six planes", classification},
      {"F4 arrangement reaches 15", f4_maximum},
      {"F5 arrangement meets m(A) <= 20", f5_bound},
      {"m(nu) over all set partitions", mformula},
      {"regular polygon bounds and predictions", polygons},
      {"property sweeps", properties},
      {"lattice cross-check at n = 6", lattice_crosscheck},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !c.ok;
    std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << c.detail.str() << "] (" << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
