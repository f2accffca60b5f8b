// webcalc: command-line front end for the web calculus library.
//
// Exit status: 0 on success, 1 when a certificate fails its check, 2 on bad
// input (unreadable file, malformed JSON, invalid web).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "webcalc/io.hpp"
#include "webcalc/lemmas.hpp"
#include "webcalc/menger.hpp"
#include "webcalc/separation.hpp"
#include "webcalc/waves.hpp"

namespace {

using nlohmann::json;
using namespace webcalc;

constexpr int kOk = 0;
constexpr int kCertificateFailure = 1;
constexpr int kInputError = 2;

struct Output {
  bool dot = false;
  std::string dot_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Web load_web(const std::string& path) {
  WebDocument doc = parse_web(read_file(path));
  const WebRepairs& r = doc.built.repairs;
  if (!r.empty()) {
    std::cerr << "note: " << path << " repaired:";
    if (!r.self_loops.empty()) std::cerr << " " << r.self_loops.size() << " self-loop(s)";
    if (!r.into_sources.empty()) std::cerr << " " << r.into_sources.size() << " edge(s) into A";
    if (!r.out_of_sinks.empty()) std::cerr << " " << r.out_of_sinks.size() << " edge(s) out of B";
    if (r.duplicate_edges) std::cerr << " " << r.duplicate_edges << " duplicate edge(s)";
    if (!r.pruned_sources.empty()) {
      std::cerr << " pruned sources " << to_string(r.pruned_sources);
    }
    std::cerr << "\n";
  }
  return std::move(doc.built.web);
}

json path_json(const Path& p) { return json(p.vertices()); }

json warp_json(const Warp& w) {
  json out = json::array();
  for (auto& p : w.paths()) out.push_back(path_json(p));
  return out;
}

json set_json(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

void emit(const Output& out, const std::string& text, const Web& web,
          const DotHighlight& highlight) {
  std::cout << text;
  if (!out.dot) return;
  const std::string dot = to_dot(web, highlight);
  if (out.dot_file.empty()) {
    std::cout << dot;
  } else {
    std::ofstream file(out.dot_file, std::ios::binary);
    if (!file) throw InputError("cannot write " + out.dot_file);
    file << dot;
  }
}

DotHighlight highlight_warp(const Warp& w, const VertexSet& vertices,
                            std::string title) {
  return {w.edges(), vertices, std::move(title)};
}

int fail_certificate(const std::string& why) {
  std::cerr << "certificate check failed: " << why << "\n";
  return kCertificateFailure;
}

int run_menger(const std::string& file, const std::string& verify,
               const Output& out) {
  const Web web = load_web(file);
  if (!verify.empty()) {
    const MengerStructure claimed = parse_menger(read_file(verify));
    std::string why;
    if (!menger_certificate_check(web, claimed, &why)) return fail_certificate(why);
    std::cout << "certificate ok: " << claimed.paths.size() << " paths\n";
    return kOk;
  }
  const MengerStructure s = menger_structure(web);
  std::string why;
  if (!menger_certificate_check(web, s, &why)) return fail_certificate(why);
  const std::string text = emit_menger(s);
  if (parse_menger(text) != s) return fail_certificate("output does not round-trip");
  emit(out, text, web, highlight_warp(s.paths, s.separator, "menger"));
  return kOk;
}

int run_wave(const std::string& file, bool maximal, const Output& out) {
  const Web web = load_web(file);
  const Wave w = maximal ? maximal_wave(web) : blocking_wave(web);
  if (!is_wave(web, w.warp)) return fail_certificate(w.warp.to_string() + " is not a wave");
  if (maximal && !is_loose(wave_quotient(w))) {
    return fail_certificate("quotient over " + w.warp.to_string() + " is not loose");
  }
  const VertexSet rf = wave_roof(w);
  json j;
  j["kind"] = maximal ? "maximal" : "blocking";
  j["wave"] = warp_json(w.warp);
  j["terminals"] = set_json(w.warp.terminals());
  j["roofed"] = set_json(rf);
  j["hindrance"] = is_hindrance(web, w.warp);
  emit(out, j.dump(2) + "\n", web,
       highlight_warp(w.warp, w.warp.terminals(), maximal ? "maximal wave" : "blocking wave"));
  return kOk;
}

int run_link(const std::string& file, const Output& out) {
  const Web web = load_web(file);
  json j;
  if (const auto link = linkage(web)) {
    bool ok = is_warp_in(web, *link) && link->initials() == web.sources();
    for (auto& p : link->paths()) ok = ok && web.sinks().contains(p.terminal());
    if (!ok) return fail_certificate(link->to_string() + " is not a linkage of A");
    j["linkable"] = true;
    j["linkage"] = warp_json(*link);
    emit(out, j.dump(2) + "\n", web, highlight_warp(*link, {}, "linkage"));
    return kOk;
  }
  const Wave m = trim_wave(maximal_wave(web));
  if (!is_hindrance(web, m.warp)) {
    return fail_certificate("no linkage, yet " + m.warp.to_string() +
                            " is not a hindrance");
  }
  j["linkable"] = false;
  j["hindrance"] = warp_json(m.warp);
  j["unlinked_sources"] = set_json(set_difference(web.sources(), m.warp.initials()));
  emit(out, j.dump(2) + "\n", web,
       highlight_warp(m.warp, set_difference(web.sources(), m.warp.initials()),
                      "hindrance"));
  return kOk;
}

int run_konig(const std::string& file, const Output& out) {
  const BipartiteGraph g = parse_bipartite(read_file(file));
  const KonigResult r = konig(g);
  std::string why;
  if (!konig_certificate_check(g, r, &why)) return fail_certificate(why);
  const HallResult hall = hall_check(g);
  if (!hall.matchable &&
      neighbourhood(g, hall.deficient).size() >= hall.deficient.size()) {
    return fail_certificate("Hall witness " + to_string(hall.deficient) +
                            " is not deficient");
  }
  json j = json::parse(emit_konig(r));
  j["left_saturating"] = hall.matchable;
  if (!hall.matchable) {
    j["deficient"] = set_json(hall.deficient);
    j["deficient_neighbours"] = set_json(hall.neighbours);
  }
  std::vector<Vertex> vs(g.left.begin(), g.left.end());
  vs.insert(vs.end(), g.right.begin(), g.right.end());
  const Web drawn = make_web(vs, std::vector<Edge>(g.edges.begin(), g.edges.end()),
                             std::vector<Vertex>(g.left.begin(), g.left.end()),
                             std::vector<Vertex>(g.right.begin(), g.right.end()))
                        .web;
  emit(out, j.dump(2) + "\n", drawn, {r.matching, r.cover, "konig"});
  return kOk;
}

int run_check(const std::string& file, const lemmas::Options& options,
              const Output& out) {
  const Web web = load_web(file);
  const lemmas::Report report = lemmas::lemma_suite(web, options);
  emit(out, report.to_text(), web, {{}, {}, "lemma suite"});
  return report.passed() ? kOk : kCertificateFailure;
}

int run_gen(std::size_t n, double p, std::uint64_t seed, const Output& out) {
  const Web web = random_web(n, p, seed);
  WebMetadata meta;
  meta.name = "random-n" + std::to_string(n);
  meta.seed = seed;
  const std::string text = emit_web(web, meta);
  if (!(parse_web(text, RepairMode::kStrict).built.web == web)) {
    return fail_certificate("generated web does not round-trip");
  }
  emit(out, text, web, {{}, {}, *meta.name});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite web calculus: Menger structures, waves, linkages"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--dot", out.dot, "Also print a Graphviz rendering with the certificate highlighted");
  app.add_option("--dot-file", out.dot_file, "Write the rendering to this file instead of stdout");

  std::string file;
  std::string verify;
  auto* menger = app.add_subcommand("menger", "Disjoint A-B paths with a one-per-path separator");
  menger->add_option("file", file, "Web JSON")->required();
  menger->add_option("--verify", verify, "Check this certificate instead of computing one");

  bool maximal = false;
  auto* wave = app.add_subcommand("wave", "A wave and the set it roofs");
  wave->add_option("file", file, "Web JSON")->required();
  wave->add_flag("--maximal", maximal, "Maximal wave (default: one blocking step)");

  auto* link = app.add_subcommand("link", "A linkage of A, or a hindrance");
  link->add_option("file", file, "Web JSON")->required();

  auto* konig_cmd = app.add_subcommand("konig", "Maximum matching and minimum cover");
  konig_cmd->add_option("file", file, "Bipartite graph JSON")->required();

  lemmas::Options options;
  std::vector<std::string> families;
  auto* check = app.add_subcommand("check", "Run the lemma suite on a web");
  check->add_option("file", file, "Web JSON")->required();
  check->add_option("--family", families, "Restrict to these families")
      ->check(CLI::IsMember(lemmas::family_names()));
  check->add_option("--seed", options.seed, "Sampling seed");
  check->add_option("--samples", options.samples, "Samples per sampled lemma");

  std::size_t n = 8;
  double p = 0.3;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Random web");
  gen->add_option("-n", n, "Number of vertices");
  gen->add_option("-p", p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  options.families.insert(families.begin(), families.end());
  if (!out.dot_file.empty()) out.dot = true;

  try {
    if (*menger) return run_menger(file, verify, out);
    if (*wave) return run_wave(file, maximal, out);
    if (*link) return run_link(file, out);
    if (*konig_cmd) return run_konig(file, out);
    if (*check) return run_check(file, options, out);
    if (*gen) return run_gen(n, p, seed, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCertificateFailure;
  }
  return kInputError;
}
