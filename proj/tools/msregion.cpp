#include "msregion/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace msr;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kUnsupported = 3, kInconsistent = 4 };

ReactionNetwork load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str());
}

std::pair<double, double> parse_box(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--box expects lo:hi");
  double lo = to_double(parse_rational(text.substr(0, colon)));
  double hi = to_double(parse_rational(text.substr(colon + 1)));
  if (!(lo > 0 && lo < hi)) throw std::invalid_argument("--box needs 0 < lo < hi");
  return {lo, hi};
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string json_scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string point_text(const Json& pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + json_scalar(pt[i]);
  return s + ")";
}

void print_region_text(std::ostream& out, const Json& r) {
  out << "  " << r["kind"].get<std::string>() << " region over (";
  for (std::size_t i = 0; i < r["ambient"].size(); ++i) out << (i ? ", " : "") << r["ambient"][i].get<std::string>();
  out << ")  [" << r["case_tag"].get<std::string>() << "]\n";
  auto conj = [&](const Json& list, const char* indent) {
    if (list.empty()) out << indent << "all of the domain\n";
    for (const auto& c : list) out << indent << c["text"].get<std::string>() << "\n";
  };
  if (r["empty"].get<bool>()) {
    out << "    empty\n";
  } else if (r.contains("any_of")) {
    for (std::size_t i = 0; i < r["any_of"].size(); ++i) {
      out << "    part " << i + 1 << ":\n";
      conj(r["any_of"][i], "      ");
    }
  } else {
    conj(r["conditions"], "    ");
  }
  if (r.contains("cutoff")) out << "    cutoff h = " << r["cutoff"].get<std::string>() << "\n";
  if (r.contains("connectivity")) {
    const auto& c = r["connectivity"];
    out << "    connectivity: " << c["value"].get<std::string>() << " (" << c["justification"].get<std::string>()
        << ")";
    if (!c["detail"].get<std::string>().empty()) out << ": " << c["detail"].get<std::string>();
    out << "\n";
  }
}

void print_states_text(std::ostream& out, const Json& s) {
  if (s["infinite"].get<bool>()) {
    out << "  infinitely many positive steady states\n";
    return;
  }
  out << "  " << s["count"] << " positive steady state(s)" << (s["certified"].get<bool>() ? "" : " (uncertified)")
      << (s["boundary"].get<bool>() ? " with a multiple root" : "") << "\n";
  for (const auto& st : s["states"]) {
    if (st["exact"].get<bool>())
      out << "    " << point_text(st["x"]) << "\n";
    else
      out << "    ~" << point_text(st["approx"]) << "\n";
  }
}

void print_probe_text(std::ostream& out, const Json& p) {
  out << "probe (evidence, seed " << p["seed"] << "): " << p["accepted_samples"] << " of " << p["requested_samples"]
      << " samples accepted, " << p["component_count"] << " component(s) (" << p["raw_component_count"]
      << " before bridging, " << p["edge_count"] << " edges)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multistationarity regions for small mass-action networks"};
  app.require_subcommand(1);
  std::string format = "json";
  std::uint64_t seed = 42;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for randomized steps");

  std::string file, kind = "enabling", box_text = "1/64:64", at, poly, csv;
  std::size_t samples = 0;
  bool no_verify = false, with_probe = false;
  double radius = 1.0;

  auto* parse = app.add_subcommand("parse", "Parse a network and print a summary");
  parse->add_option("file", file)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Classification, regions, connectivity and a self-check");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_flag("--no-verify", no_verify, "Skip the region versus oracle self-check");
  analyze_cmd->add_option("--samples", samples, "Self-check samples (default 100)");
  analyze_cmd->add_option("--box", box_text, "Sampling interval lo:hi");
  analyze_cmd->add_flag("--probe", with_probe, "Add a sampling probe of the allowing region");

  auto* region_cmd = app.add_subcommand("region", "Print one region");
  region_cmd->add_option("file", file)->required();
  region_cmd->add_option("--kind", kind)->check(CLI::IsMember({"allowing", "enabling"}));

  auto* witness_cmd = app.add_subcommand("witness", "Rates and totals with several positive steady states");
  witness_cmd->add_option("file", file)->required();
  witness_cmd->add_option("--at", at, "Evaluate at a given point: rates, then totals (comma separated)");
  witness_cmd->add_option("--box", box_text, "Search interval lo:hi");

  auto* probe_cmd = app.add_subcommand("probe", "Sampling-based connectivity evidence");
  probe_cmd->add_option("file", file)->required();
  probe_cmd->add_option("--kind", kind)->check(CLI::IsMember({"allowing", "enabling"}));
  probe_cmd->add_option("--samples", samples, "Number of samples (default 4000)");
  probe_cmd->add_option("--box", box_text, "Sampling interval lo:hi");
  probe_cmd->add_option("--radius", radius, "Link radius in sampling coordinates");
  probe_cmd->add_option("--csv", csv, "Write accepted samples with component labels");

  auto* roots = app.add_subcommand("count-roots", "Positive roots by Descartes, Sturm and the trinomial rule");
  roots->add_option("--poly", poly)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  const bool text = format == "text";
  Json out;
  std::ostringstream human;
  try {
    if (*parse) {
      auto net = load(file);
      out = network_json(net);
      out["schema_version"] = kSchemaVersion;
      out["printed"] = print_network(net);
      human << print_network(net);
      const auto& d = out["dimensions"];
      human << "species " << d["species"] << ", reactions " << d["reactions"] << ", stoichiometric dimension "
            << d["stoichiometric"] << ", conservation laws " << d["conservation_laws"] << "\n";
    } else if (*analyze_cmd) {
      auto net = load(file);
      AnalyzeOptions opt;
      opt.verify = !no_verify;
      if (samples) opt.verify_samples = samples;
      opt.seed = seed;
      auto [lo, hi] = parse_box(box_text);
      opt.box = {lo, hi};
      opt.probe = with_probe;
      out = analyze(net, opt);
      const auto& cl = out["classification"];
      human << "multistationary: " << (cl["multistationary"].get<bool>() ? "yes" : "no") << "  ["
            << cl["case"].get<std::string>() << "]\n";
      print_region_text(human, out["regions"]["allowing"]);
      print_region_text(human, out["regions"]["enabling"]);
      if (!out["self_check"].is_null())
        human << "self-check: " << out["self_check"]["checked"] << " points, " << out["self_check"]["disagreements"]
              << " disagreements\n";
      if (!out["witness"].is_null()) {
        human << "witness " << point_text(out["witness"]["point"]) << ":\n";
        print_states_text(human, out["witness"]["steady_states"]);
      }
      if (out.contains("probe")) print_probe_text(human, out["probe"]);
    } else if (*region_cmd) {
      auto net = load(file);
      auto rp = build_regions(net);
      const Region& r = kind == "allowing" ? rp.allowing : rp.enabling;
      auto cv = connectivity_verdict(r, net);
      out = region_json(r, &cv);
      out["schema_version"] = kSchemaVersion;
      print_region_text(human, out);
    } else if (*witness_cmd) {
      auto net = load(file);
      std::optional<WitnessResult> w;
      if (!at.empty()) {
        w = witness_at(net, parse_point(at));
      } else {
        auto [lo, hi] = parse_box(box_text);
        w = find_witness(net, seed, {lo, hi});
      }
      out["schema_version"] = kSchemaVersion;
      out["seed"] = seed;
      if (w) {
        Json point = Json::array();
        for (const auto& q : w->point) point.push_back(rational_json(q));
        out["point"] = point;
        out["source"] = w->source;
        out["steady_states"] = steady_states_json(w->states);
        human << "point " << point_text(point) << " (" << w->source << ")\n";
        print_states_text(human, out["steady_states"]);
      } else {
        out["point"] = nullptr;
        human << "no multistationary point found\n";
      }
    } else if (*probe_cmd) {
      auto net = load(file);
      auto rp = build_regions(net);
      const Region& r = kind == "allowing" ? rp.allowing : rp.enabling;
      auto cv = connectivity_verdict(r, net);
      ProbeConfig cfg;
      auto [lo, hi] = parse_box(box_text);
      cfg.box = default_box(r, lo, hi);
      if (samples) cfg.n_samples = samples;
      cfg.seed = seed;
      cfg.link_radius = radius;
      auto rep = probe(r, cfg);
      out["schema_version"] = kSchemaVersion;
      out["analytic"] = connectivity_json(cv);
      out["probe"] = probe_json(rep, r);
      human << "analytic: " << verdict_name(cv.value) << " (" << (cv.justification.empty() ? "none" : cv.justification)
            << ")\n";
      print_probe_text(human, out["probe"]);
      if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) throw std::invalid_argument("cannot write " + csv);
        write_probe_csv(f, rep, r);
      }
    } else if (*roots) {
      out = count_roots_report(poly);
      human << out["poly"].get<std::string>() << ": descartes " << out["descartes"] << ", sturm " << out["sturm"];
      if (!out["trichotomy"].is_null())
        human << ", trichotomy " << out["trichotomy"]["count"] << " (D = " << json_scalar(out["trichotomy"]["D"]) << ")";
      human << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (text)
    std::cout << human.str();
  else
    std::cout << out.dump(2) << "\n";
  return kOk;
}
