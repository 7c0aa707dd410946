// One line per acceptance criterion. Tolerances, seeds, boxes and time
// limits are pinned below; the exit status is nonzero when any line fails.

#include "msregion/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

using namespace msr;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = MSR_SOURCE_DIR;
const fs::path kNetworks = kSource / "data" / "networks";
const fs::path kGolden = kSource / "tests" / "golden";

constexpr std::uint64_t kSeed = 42;
constexpr double kBoundaryTol = 1e-6;          // relative distance to a condition's zero set
constexpr SampleBox kSweepBox{1.0 / 64, 64.0};  // [2^-6, 2^6]
constexpr std::size_t kSweepSamples = 1000;
constexpr std::size_t kProbeSamples = 4000;
constexpr std::size_t kNotMsDraws = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& out;
  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    if (out.pass) out.detail.clear();
    if (!out.detail.empty()) out.detail += "; ";
    out.pass = false;
    if (out.detail.size() < 400) out.detail += what;
  }
};

ReactionNetwork load(const std::string& name) {
  std::ifstream in(kNetworks / (name + ".crn"));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Rational> rationals(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// p == s * q for some rational s > 0
bool positively_proportional(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero() || p.size() != q.size()) return false;
  const auto& [m, c] = *p.terms().begin();
  auto it = q.terms().find(m);
  if (it == q.terms().end()) return false;
  Rational s = c / it->second;
  return sign(s) > 0 && p == s * q;
}

const std::vector<std::string> kReference = {"running",    "five_reactions",  "flow_n2_l1",     "flow_n3_l1",
                                             "flow_n3_l2", "flow_n5_l4", "three_reactions", "four_reactions"};

// ---------------------------------------------------------------------------

Outcome running_example_witness() {
  Outcome out;
  Check check{out};
  auto w = witness_at(load("running"), {1, 1, make_rational(5, 2)});
  check(w.states.certified && !w.states.infinite && w.states.count == 2,
        "expected exactly two certified steady states, got " + std::to_string(w.states.count));
  std::set<std::vector<Rational>> got;
  for (const auto& s : w.states.witnesses) {
    check(s.exact, "steady state is not exact");
    got.insert(s.x);
  }
  std::set<std::vector<Rational>> want = {{make_rational(1, 2), Rational(2)}, {Rational(2), make_rational(1, 2)}};
  check(got == want, "steady states differ from (1/2, 2) and (2, 1/2)");
  if (out.pass) out.detail = "(1/2, 2) and (2, 1/2), exact";
  return out;
}

Outcome reference_inequalities() {
  Outcome out;
  Check check{out};
  const std::vector<std::pair<std::string, std::vector<std::string>>> expected = {
      {"running", {"k1*c^2 - 4*k2"}},
      {"five_reactions", {"k2^2*k5 - 4*k1*k3*k6"}},
      {"flow_n2_l1", {"k2^2 - 4*k1*k3"}},
      {"flow_n3_l1", {"4*k2^3 - 27*k1^2*k3"}},
      {"flow_n3_l2", {"4*k2^3 - 27*k1^2*k3*2"}},
      {"flow_n5_l4", {"4^4*k2^5 - 5^5*k1^4*k3*4"}},
      {"three_reactions", {"4*k2^3 - 27*k1^2*k3"}},
      {"four_reactions", {"k1L - k1R", "k2R^2 - 4*(k1L - k1R)*k3L"}},
  };
  std::size_t matched = 0;
  for (const auto& [name, polys] : expected) {
    auto reg = build_regions(load(name)).enabling;
    check(reg.conjuncts.size() == 1, name + ": expected a single conjunct");
    if (reg.conjuncts.size() != 1) continue;
    for (const auto& text : polys) {
      Poly want = parse_poly(text, reg.ambient);
      bool found = std::any_of(reg.conjuncts[0].begin(), reg.conjuncts[0].end(), [&](const SignCondition& c) {
        return c.rel == Relation::Positive && positively_proportional(c.poly, want);
      });
      check(found, name + ": no condition proportional to " + text + " > 0");
      matched += found;
    }
  }
  std::size_t golden = 0;
  for (const auto& entry : fs::directory_iterator(kNetworks)) {
    std::string name = entry.path().stem().string();
    AnalyzeOptions opt;
    opt.verify = false;
    std::string got = analyze(load(name), opt).dump(2) + "\n";
    fs::path file = kGolden / (name + ".json");
    check(fs::exists(file), "missing golden file " + file.filename().string());
    check(!fs::exists(file) || slurp(file) == got, "golden mismatch for " + name);
    ++golden;
  }
  check(golden >= kReference.size() + 1, "expected at least one golden file per reference network");
  if (out.pass) out.detail = std::to_string(matched) + " inequalities matched, " + std::to_string(golden) + " golden files byte-equal";
  return out;
}

Outcome region_oracle_equivalence() {
  Outcome out;
  Check check{out};
  auto nets = kReference;
  nets.push_back("split_sign_patterns");
  std::size_t checked = 0, rejected = 0, uncertified = 0, members = 0;
  for (std::size_t i = 0; i < nets.size(); ++i) {
    auto net = load(nets[i]);
    auto reg = build_regions(net).enabling;
    auto s = region_oracle_sweep(net, reg, kSweepSamples, kSeed + i, kSweepBox, kBoundaryTol);
    check(s.disagreements == 0, nets[i] + ": " + std::to_string(s.disagreements) + " disagreements");
    check(s.uncertified == 0, nets[i] + ": " + std::to_string(s.uncertified) + " uncertified oracle calls");
    checked += s.checked;
    rejected += s.near_boundary;
    uncertified += s.uncertified;
    members += s.members;
  }
  if (out.pass)
    out.detail = std::to_string(nets.size()) + " networks, " + std::to_string(checked) + " points checked (" +
                 std::to_string(members) + " members), " + std::to_string(rejected) + " boundary-rejected, 0 disagreements";
  return out;
}

Outcome trichotomy_vs_sturm() {
  Outcome out;
  Check check{out};
  std::size_t cases = 0, d_zero = 0;
  auto compare = [&](unsigned n, unsigned k, const Rational& b, const Rational& c) {
    TrinomialForm t(n, k, b, c);
    unsigned tri = trinomial_positive_roots(t), sturm = sturm_count_positive(t.polynomial());
    ++cases;
    d_zero += sign(trinomial_D(t)) == 0;
    check(tri == sturm, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " b=" + to_string(b) + " c=" +
                            to_string(c) + ": trichotomy " + std::to_string(tri) + ", Sturm " + std::to_string(sturm));
  };
  const std::vector<Rational> grid = {make_rational(1, 4), make_rational(1, 2), 1, 2, 4};
  for (unsigned n = 2; n <= 8; ++n)
    for (unsigned k = 1; k < n; ++k)
      for (const auto& b : grid)
        for (const auto& c : grid) compare(n, k, b, c);
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<unsigned> deg(2, 12);
  std::uniform_int_distribution<long> num(1, 200), den(1, 50);
  for (int i = 0; i < 10000; ++i) {
    unsigned n = deg(rng);
    unsigned k = std::uniform_int_distribution<unsigned>(1, n - 1)(rng);
    compare(n, k, make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  }
  if (out.pass) out.detail = std::to_string(cases) + " instances agree (" + std::to_string(d_zero) + " with D = 0)";
  return out;
}

Outcome swan_vs_resultant() {
  Outcome out;
  Check check{out};
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<unsigned> deg(2, 6);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 30);
  auto nonzero = [&] {
    long p = 0;
    while (p == 0) p = num(rng);
    return make_rational(p, den(rng));
  };
  for (int i = 0; i < 2000; ++i) {
    unsigned n = deg(rng);
    unsigned k = std::uniform_int_distribution<unsigned>(1, n - 1)(rng);
    Rational a = nonzero(), b = nonzero();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[0] = b;
    coeffs[k] = a;
    coeffs[n] = 1;
    Rational swan = trinomial_discriminant(n, k, a, b), sylvester = discriminant(UniPoly(coeffs));
    check(swan == sylvester, "x^" + std::to_string(n) + " + (" + to_string(a) + ")x^" + std::to_string(k) + " + (" +
                                 to_string(b) + "): " + to_string(swan) + " vs " + to_string(sylvester));
  }
  if (out.pass) out.detail = "2000 random trinomials, exact equality";
  return out;
}

Outcome connectivity_verdicts() {
  Outcome out;
  Check check{out};
  for (const auto& name : kReference) {
    auto net = load(name);
    auto rp = build_regions(net);
    check(connectivity_verdict(rp.allowing, net).value == Verdict::Connected, name + ": allowing region not Connected");
    check(connectivity_verdict(rp.enabling, net).value == Verdict::Connected, name + ": enabling region not Connected");
  }
  auto split = load("split_sign_patterns");
  auto rp = build_regions(split);
  auto cv = connectivity_verdict(rp.allowing, split);
  check(cv.value == Verdict::Disconnected, "split_sign_patterns: verdict " + verdict_name(cv.value));
  std::set<std::vector<Rational>> want = {rationals({1, 3, 4, 1, 1, 2}), rationals({3, 1, 1, 4, 2, 1})};
  std::set<std::vector<Rational>> got(cv.witnesses.begin(), cv.witnesses.end());
  check(got == want, "split_sign_patterns: witnesses differ from (1,3,4,1,1,2) and (3,1,1,4,2,1)");
  auto sys = system_for(split, rp.allowing);
  for (const auto& w : want) {
    auto res = count_positive_steady_states(sys, w, {});
    check(res.certified && !res.infinite && res.count == 2, "split_sign_patterns: witness does not give exactly 2 steady states");
  }

  // probe boxes are pinned per network
  auto probe_count = [&](const std::string& name, double lo, double hi) {
    auto reg = build_regions(load(name)).enabling;
    ProbeConfig cfg;
    cfg.box = default_box(reg, lo, hi);
    cfg.n_samples = kProbeSamples;
    cfg.seed = kSeed;
    return probe(reg, cfg);
  };
  auto a = probe_count("split_sign_patterns", 1.0 / 8, 8);
  auto b = probe_count("three_reactions", 1.0 / 16, 16);
  check(a.component_count == 2, "split_sign_patterns probe: " + std::to_string(a.component_count) + " components");
  check(b.component_count == 1, "three_reactions probe: " + std::to_string(b.component_count) + " components");
  if (out.pass)
    out.detail = "8 networks Connected, split_sign_patterns Disconnected with oracle-checked witnesses; probe components 2 (raw " +
                 std::to_string(a.raw_component_count) + ", " + std::to_string(a.accepted) + " accepted) and 1";
  return out;
}

Outcome classification_corpus() {
  Outcome out;
  Check check{out};

  // one species, three reactions m -> p with m, p <= 6
  std::vector<std::pair<unsigned, unsigned>> rx;
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned p = 0; p <= 6; ++p)
      if (m != p) rx.emplace_back(m, p);
  std::vector<Rational> grid;
  for (int j = -6; j <= 6; ++j) grid.push_back(j < 0 ? make_rational(1, 1L << -j) : Rational(1L << j));
  std::size_t nets = 0, classified_ms = 0, grid_hits = 0, grid_misses = 0;
  for (std::size_t i = 0; i < rx.size(); ++i)
    for (std::size_t j = i + 1; j < rx.size(); ++j)
      for (std::size_t l = j + 1; l < rx.size(); ++l) {
        std::vector<Reaction> rs;
        for (auto idx : {i, j, l}) {
          Complex y, yp;
          y.coeffs = {rx[idx].first};
          yp.coeffs = {rx[idx].second};
          rs.push_back({y, yp, "k" + std::to_string(rs.size() + 1)});
        }
        ReactionNetwork net({"A"}, rs);
        ++nets;
        bool ms = classify_one_species(net).multistationary;
        classified_ms += ms;
        // Sturm search over the grid; Descartes bounds the count from above
        bool hit = false;
        for (const auto& k1 : grid) {
          for (const auto& k2 : grid) {
            for (const auto& k3 : grid) {
              std::vector<Rational> c(7, Rational(0));
              const Rational* ks[] = {&k1, &k2, &k3};
              for (int r = 0; r < 3; ++r) {
                unsigned m = rs[r].reactant.coeffs[0], p = rs[r].product.coeffs[0];
                c[m] += *ks[r] * (static_cast<long>(p) - static_cast<long>(m));
              }
              UniPoly f(c);
              if (f.is_zero() || descartes_sign_changes(f) < 2) continue;
              if (sturm_count_positive(f) >= 2) {
                hit = true;
                break;
              }
            }
            if (hit) break;
          }
          if (hit) break;
        }
        grid_hits += hit;
        check(!hit || ms, print_network(net) + ": grid finds two roots but classified not multistationary");
        if (!ms) continue;
        grid_misses += !hit;
        auto reg = build_regions(net).enabling;
        bool witnessed = !reg.witnesses.empty();
        if (witnessed) {
          auto res = count_positive_steady_states(system_for(net, reg), reg.witnesses[0], {});
          witnessed = res.certified && !res.infinite && res.count == 2;
        }
        check(witnessed, print_network(net) + ": witness constructor failed");
      }

  // curated two-species corpus
  std::ifstream in(kSource / "tests" / "acceptance" / "two_species_corpus.txt");
  std::string line;
  std::map<std::string, std::size_t> by_case;
  std::size_t corpus = 0, oracle_points = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    std::string label = line.substr(0, line.find_last_not_of(' ', bar - 1) + 1);
    std::string text = line.substr(bar + 1);
    std::replace(text.begin(), text.end(), ',', '\n');
    auto net = parse_network(text);
    ++corpus;
    auto v = classify(net);
    check(v.case_name() == label, line + ": classified " + v.case_name());
    by_case[label]++;
    auto rp = build_regions(net);
    if (label == "not_multistationary") {
      auto s = region_oracle_sweep(net, rp.enabling, kNotMsDraws, kSeed, kSweepBox, 0.0);
      check(s.checked == kNotMsDraws && s.disagreements == 0 && s.members == 0,
            line + ": oracle found " + std::to_string(s.disagreements) + " multistationary draws");
      oracle_points += s.checked;
    } else {
      auto w = find_witness(net, kSeed, kSweepBox);
      bool ok = w.has_value();
      if (ok && label.starts_with("zigzag")) ok = w->states.certified && !w->states.infinite && w->states.count == 2;
      check(ok, line + ": no oracle-confirmed witness");
      ++oracle_points;
    }
  }
  std::set<std::string> labels;
  in.clear();
  in.seekg(0);
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') labels.insert(line.substr(0, line.find(' ')));
  for (int f = 1; f <= 4; ++f) {
    check(labels.count("zigzag_" + std::to_string(f)) == 1, "corpus lacks zigzag form " + std::to_string(f));
    check(labels.count("degenerate_case_" + std::to_string(f)) == 1, "corpus lacks degenerate case " + std::to_string(f));
  }
  check(corpus >= 30, "corpus has fewer than 30 networks");
  check(by_case["not_multistationary"] >= 10, "corpus has fewer than 10 non-multistationary networks");
  if (out.pass)
    out.detail = std::to_string(nets) + " one-species networks (" + std::to_string(classified_ms) + " multistationary, " +
                 std::to_string(grid_hits) + " grid hits, " + std::to_string(grid_misses) +
                 " found only by the witness constructor); " + std::to_string(corpus) + " two-species networks, " +
                 std::to_string(oracle_points) + " oracle confirmations";
  return out;
}

Outcome desk_scale() {
  Outcome out;
  Check check{out};
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(kNetworks)) {
    auto net = load(entry.path().stem().string());
    check(net.species_count() <= 2 && net.reaction_count() <= 6, entry.path().filename().string() + " exceeds desk scale");
    ++count;
  }
  if (out.pass)
    out.detail = "all " + std::to_string(count) + " networks (<= 2 species, <= 6 reactions) run at full scale above";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "running-example witness", 1, running_example_witness},
      {2, "reference inequalities and golden JSON", 1, reference_inequalities},
      {3, "region-oracle equivalence sweep", 30, region_oracle_equivalence},
      {4, "trichotomy vs Sturm", 60, trichotomy_vs_sturm},
      {5, "Swan vs resultant discriminant", 30, swan_vs_resultant},
      {6, "connectivity verdicts and probe", 60, connectivity_verdicts},
      {7, "classification corpus", 120, classification_corpus},
      {8, "desk scale", 1, desk_scale},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.limit_s;
    bool pass = o.pass && in_time;
    if (!in_time) o.detail += " (over the time limit)";
    failed += !pass;
    std::printf("criterion %d %s: %s [%.2f s / %.0f s] %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs, c.limit_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
