#include "xq/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "xq/monoid.hpp"
#include "xq/sphere.hpp"

namespace xq {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

StructureFile load(const std::string& path) { return parse_structure(read_file(path)); }

Report check_structure(const NamedStructure& s, const SamplingOptions& opts) {
  return std::visit(
      [&](const auto& v) -> Report {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Group>) {
          Report rep("group");
          rep.pass("group.valid", std::string("a well-formed ") + to_string(v.kind()) + " group of rank " +
                                      std::to_string(v.rank()));
          return rep;
        } else if constexpr (std::is_same_v<T, PreCrossedModule>) {
          return s.kind == "crossed" ? check_crossed(v, opts) : check_precrossed(v, opts);
        } else if constexpr (std::is_same_v<T, CrossedComplex3>) {
          return xc3_check(v, opts);
        } else if constexpr (std::is_same_v<T, QuadraticModule>) {
          return qm_check(v, opts);
        } else if constexpr (std::is_same_v<T, ReducedQuadraticModule>) {
          return rqm_check(v, opts);
        } else {
          return rqc4_check(v, opts);
        }
      },
      s.value);
}

Report check_bundle(const Bundle& b, const SamplingOptions& opts) {
  Report rep("bundle");
  rep.sampling = opts;
  for (const auto& [name, s] : b.structures) rep.merge(check_structure(s, opts), name + ": ");
  for (const auto& [name, m] : b.morphisms) {
    const NamedStructure& src = b.structure(m.source);
    const NamedStructure& tgt = b.structure(m.target);
    if (const auto* q = std::get_if<QCMorphism>(&m.map))
      rep.merge(qcm_check(*q, std::get<ReducedQuadraticComplex4>(src.value),
                          std::get<ReducedQuadraticComplex4>(tgt.value), opts),
                name + ": ");
    else
      rep.merge(xc3_morphism_check(std::get<Xc3Morphism>(m.map), std::get<CrossedComplex3>(src.value),
                                   std::get<CrossedComplex3>(tgt.value), opts),
                name + ": ");
  }
  return rep;
}

MorphismEntry resolve_morphism(const Bundle& b, const std::string& ref) {
  if (auto it = b.morphisms.find(ref); it != b.morphisms.end()) return it->second;
  if (!std::filesystem::exists(ref))
    throw UsageError("\"" + ref + "\" is neither a morphism of the bundle nor a file");
  const StructureFile f = load(ref);
  if (f.kind != "rq_morphism" && f.kind != "xc3_morphism")
    throw UsageError(ref + " is a " + f.kind + " file, not a morphism");
  return decode_morphism(b, f.kind, f.body, "");
}

std::string format_rq_witness(const QCHomotopy& h, const ReducedQuadraticComplex4& s,
                              const ReducedQuadraticComplex4& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.alpha2.size(); ++i)
    os << (i ? ", " : "") << "α₂(" << s.q2().generator_name(i) << ") = " << t.q3().format(h.alpha2[i]);
  os << "; α₃ = ";
  if (h.alpha3.is_zero()) {
    os << "0";
  } else {
    for (std::size_t j = 0; j < s.q3().rank(); ++j)
      os << (j ? ", " : "") << "α₃(" << s.q3().generator_name(j) << ") = " << t.q4().format(h.alpha3.image(j));
  }
  return os.str();
}

std::string format_xc3_witness(const Xc3Homotopy& h, const CrossedComplex3& s, const CrossedComplex3& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.alpha.size(); ++i)
    os << (i ? ", " : "") << "α(" << s.m2().generator_name(i) << ") = " << t.m3().format(h.alpha[i]);
  return os.str();
}

Json retraction_json(const Retraction& r) {
  return {{"a", encode_integer(r.a)}, {"b", encode_integer(r.b)}, {"r", encode_integer(r.r)}};
}

std::string retraction_label(const Retraction& r) {
  return "(a,b,r) = (" + to_string(r.a) + "," + to_string(r.b) + "," + to_string(r.r) + ")";
}

Json axioms_json() {
  Json out = Json::array();
  for (const auto& a : axiom_manifest()) out.push_back({{"id", a.id}, {"statement", a.statement}});
  return out;
}

void print_axioms(std::ostream& out) {
  out << "axiom manifest (trusted topological input):\n";
  for (const auto& a : axiom_manifest()) out << "  [" << a.id << "] " << a.statement << "\n";
}

void print_derivation(std::ostream& out, const SelfmapCount& c) {
  out << "derivation:\n";
  for (const auto& line : c.derivation) out << "  " << line << "\n";
}

struct CaseRun {
  ReducedQuadraticComplex4 d = build_sphere_D();
  ReducedQuadraticComplex4 q = build_cylinder_Q();
  Classification classification;
  SelfmapCount count;
};

CaseRun run_case(std::size_t ab_range, std::size_t r_bound) {
  CaseRun c;
  c.classification = classify_retractions(enumerate_retractions(c.q, c.d, ab_range, r_bound), c.q, c.d, r_bound);
  c.count = assemble_selfmap_count(c.classification.classes.size());
  return c;
}

Json count_json(const SelfmapCount& c) {
  return {{"count", encode_integer(c.count)},
          {"monoid_size", encode_integer(c.monoid_size)},
          {"consistent", c.consistent},
          {"derivation", c.derivation},
          {"axioms", axioms_json()}};
}

Json classification_json(const CaseRun& c, const HomologyConstraints& hc, std::size_t ab_range,
                         std::size_t r_bound) {
  const auto& cl = c.classification;
  const auto& rs = cl.retractions;
  Json classes = Json::array(), witnesses = Json::array(), obstructions = Json::array(), all = Json::array();
  for (const auto& r : rs) all.push_back(retraction_json(r));
  for (const auto& cls : cl.classes) {
    Json members = Json::array();
    for (std::size_t m : cls.members) members.push_back(encode_integer(rs[m].r));
    classes.push_back({{"a", encode_integer(cls.a)},
                       {"b", encode_integer(cls.b)},
                       {"representative", retraction_json(rs[cls.representative])},
                       {"members_r", members}});
  }
  for (const auto& w : cl.witnesses) {
    Json entry = encode_rq_homotopy(w.homotopy);
    entry["from"] = retraction_json(rs[w.from]);
    entry["to"] = retraction_json(rs[w.to]);
    entry["text"] = format_rq_witness(w.homotopy, c.q, c.d);
    witnesses.push_back(entry);
  }
  for (const auto& o : cl.obstructions)
    obstructions.push_back(
        {{"from", retraction_json(rs[o.from])}, {"to", retraction_json(rs[o.to])}, {"reason", o.reason}});
  Json hcj = Json::array();
  for (const auto& s : hc.solutions)
    hcj.push_back({{"a", encode_integer(s.a)}, {"b", encode_integer(s.b)}, {"k", encode_integer(s.k)}});
  Json report = count_json(c.count);
  report["parameters"] = {{"ab_range", ab_range}, {"r_bound", r_bound}};
  report["homology_constraints"] = hcj;
  report["retractions"] = all;
  report["classes"] = classes;
  report["witnesses"] = witnesses;
  report["obstructions"] = obstructions;
  return report;
}

std::string pad(const std::string& s, std::size_t width) {
  // Pads by code points so that primes and subscripts line up.
  std::size_t cps = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++cps;
  return s + std::string(width > cps ? width - cps : 0, ' ');
}

}  // namespace

Json classification_report(std::size_t ab_range, std::size_t r_bound) {
  if (ab_range < 1 || r_bound < 1) throw std::invalid_argument("bounds must be at least 1");
  return classification_json(run_case(ab_range, r_bound), solve_homology_constraints(ab_range), ab_range,
                             r_bound);
}

Json check_report(const std::string& text, const SamplingOptions& opts) {
  const StructureFile f = parse_structure(text);
  Report rep(f.kind);
  if (f.kind == "bundle")
    rep = check_bundle(decode_bundle(f.body, ""), opts);
  else if (f.kind == "rq_morphism" || f.kind == "xc3_morphism" || f.kind == "rq_homotopy" ||
           f.kind == "xc3_homotopy")
    throw std::invalid_argument("a " + f.kind + " file is checked against a bundle");
  else
    rep = check_structure(NamedStructure{f.kind, decode_structure(f.kind, f.body, "")}, opts);
  rep.sampling = opts;
  return report_to_json(rep);
}

std::uint64_t sampling_seed_from_env() {
  const char* v = std::getenv("XQ_SEED");
  if (!v || !*v) return 1;
  try {
    std::size_t used = 0;
    const unsigned long long s = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument("trailing characters");
    return s;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("XQ_SEED must be a non-negative integer, got \"") + v + "\"");
  }
}

Bundle case_study_bundle() {
  Bundle b;
  const ReducedQuadraticComplex4 d = build_sphere_D();
  const ReducedQuadraticComplex4 q = build_cylinder_Q();
  b.structures.emplace("D", NamedStructure{"rqc4", d});
  b.structures.emplace("Q", NamedStructure{"rqc4", q});
  b.morphisms.emplace("pr1", MorphismEntry{"Q", "D", retraction_candidate(q, d, 1, 0, 0)});
  b.morphisms.emplace("pr2", MorphismEntry{"Q", "D", retraction_candidate(q, d, 0, 1, 0)});
  b.morphisms.emplace("pr1_r7", MorphismEntry{"Q", "D", retraction_candidate(q, d, 1, 0, 7)});
  return b;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"xq: exact algebra of crossed and quadratic modules", "xq"};
  app.require_subcommand(1);

  std::string file, out_path, f_ref, g_ref, witness_path, save_witness, export_dir;
  std::size_t depth = 200, bound = 10, ab_range = 3, r_bound = 10, count_ab = 2, count_r = 1, range = 5;
  bool table = false;

  auto* check = app.add_subcommand("check", "check every axiom of a structure file");
  check->add_option("file", file, "structure file")->required();
  check->add_option("--depth", depth, "random samples per sampled axiom")->capture_default_str();
  check->add_option("--out", out_path, "write the report as JSON");

  auto* hom = app.add_subcommand("homotopic", "decide whether two morphisms of a bundle are homotopic");
  hom->add_option("bundle", file, "bundle file")->required();
  hom->add_option("--f", f_ref, "morphism name in the bundle or morphism file")->required();
  hom->add_option("--g", g_ref, "morphism name in the bundle or morphism file")->required();
  hom->add_option("--bound", bound, "coefficient bound for enumeration")->capture_default_str();
  hom->add_option("--out", out_path, "write the result as JSON");
  hom->add_option("--save-witness", save_witness, "write the homotopy as a witness file");
  hom->add_option("--check-witness", witness_path, "verify a witness file instead of solving");

  auto* s2 = app.add_subcommand("s2xs2", "self-maps of S²×S² fixing the diagonal");
  s2->require_subcommand(1);
  auto* classify = s2->add_subcommand("classify", "classify retractions Q → D up to homotopy");
  classify->add_option("--ab-range", ab_range, "bound on |a|, |b|")->capture_default_str();
  classify->add_option("--r-bound", r_bound, "bound on |r|")->capture_default_str();
  classify->add_option("--out", out_path, "write the report as JSON");
  auto* monoid = s2->add_subcommand("monoid", "the monoid Mbar and its units");
  monoid->add_flag("--table", table, "print the 4×4 and 16×16 composition tables");
  monoid->add_option("--out", out_path, "write the report as JSON");
  auto* count = s2->add_subcommand("count", "count the self-maps");
  count->add_option("--ab-range", count_ab, "bound on |a|, |b| for the classification")->capture_default_str();
  count->add_option("--r-bound", count_r, "bound on |r| for the classification")->capture_default_str();
  count->add_option("--out", out_path, "write the report as JSON");
  auto* constraints = s2->add_subcommand("constraints", "solve the homology constraints");
  constraints->add_option("--range", range, "bound on |a|, |b|")->capture_default_str();
  auto* exporter = s2->add_subcommand("export", "write D, Q and the case-study bundle as JSON");
  exporter->add_option("dir", export_dir, "output directory")->required();

  std::vector<std::string> argv_store = {"xq"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    SamplingOptions opts;
    opts.seed = sampling_seed_from_env();
    opts.depth = depth;

    if (check->parsed()) {
      const StructureFile f = load(file);
      Report rep(f.kind);
      if (f.kind == "bundle") {
        rep = check_bundle(decode_bundle(f.body, ""), opts);
      } else if (f.kind == "rq_morphism" || f.kind == "xc3_morphism" || f.kind == "rq_homotopy" ||
                 f.kind == "xc3_homotopy") {
        throw UsageError("a " + f.kind + " file refers to a bundle; check it with `xq homotopic`");
      } else {
        rep = check_structure(NamedStructure{f.kind, decode_structure(f.kind, f.body, "")}, opts);
      }
      rep.sampling = opts;
      out << file << " (" << f.kind << ")\n";
      rep.print(out);
      if (!out_path.empty()) write_file(out_path, canonical_dump(report_to_json(rep)));
      return rep.passed() ? 0 : 1;
    }

    if (hom->parsed()) {
      const StructureFile f = load(file);
      if (f.kind != "bundle") throw UsageError(file + " is a " + f.kind + " file, not a bundle");
      const Bundle b = decode_bundle(f.body, "");
      const MorphismEntry mf = resolve_morphism(b, f_ref);
      const MorphismEntry mg = resolve_morphism(b, g_ref);
      if (mf.source != mg.source || mf.target != mg.target)
        throw UsageError("f and g must have the same source and target");
      const NamedStructure& src = b.structure(mf.source);
      const NamedStructure& tgt = b.structure(mf.target);
      out << "f = " << f_ref << ", g = " << g_ref << " (" << mf.source << " → " << mf.target << ")\n";
      Json result = {{"f", f_ref}, {"g", g_ref}, {"source", mf.source}, {"target", mf.target}, {"bound", bound}};

      if (const auto* qf = std::get_if<QCMorphism>(&mf.map)) {
        const auto& qg = std::get<QCMorphism>(mg.map);
        const auto& s = std::get<ReducedQuadraticComplex4>(src.value);
        const auto& t = std::get<ReducedQuadraticComplex4>(tgt.value);
        if (!witness_path.empty()) {
          const StructureFile wf = load(witness_path);
          if (wf.kind != "rq_homotopy") throw UsageError(witness_path + " is not an rq_homotopy file");
          const QCHomotopy h = decode_rq_homotopy(wf.body, s, t, "");
          const Report rep = verify_rq_homotopy(*qf, qg, s, t, h, opts);
          out << "witness: " << format_rq_witness(h, s, t) << "\n";
          rep.print(out);
          if (!out_path.empty()) write_file(out_path, canonical_dump(report_to_json(rep)));
          return rep.passed() ? 0 : 1;
        }
        const auto found = rq_homotopic(*qf, qg, s, t, bound);
        out << "method: " << found.method << " (exact; the bound " << bound << " is not needed)\n";
        result["method"] = found.method;
        result["complete"] = found.complete;
        if (found.witness) {
          out << "homotopic: yes\n"
              << "witness: " << format_rq_witness(*found.witness, s, t) << "\n";
          Json w = encode_rq_homotopy(*found.witness);
          result["witness"] = w;
          if (!save_witness.empty()) write_file(save_witness, serialize_structure(make_structure_file("rq_homotopy", w)));
        } else {
          out << "homotopic: no\n"
              << "obstruction: " << found.obstruction << "\n";
          result["obstruction"] = found.obstruction;
          if (found.failing_generator) result["failing_generator"] = s.q2().generator_name(*found.failing_generator);
        }
        result["homotopic"] = found.witness.has_value();
        if (!out_path.empty()) write_file(out_path, canonical_dump(result));
        return found.witness ? 0 : 1;
      }

      const auto& xf = std::get<Xc3Morphism>(mf.map);
      const auto& xg = std::get<Xc3Morphism>(mg.map);
      const auto& s = std::get<CrossedComplex3>(src.value);
      const auto& t = std::get<CrossedComplex3>(tgt.value);
      if (!witness_path.empty()) {
        const StructureFile wf = load(witness_path);
        if (wf.kind != "xc3_homotopy") throw UsageError(witness_path + " is not an xc3_homotopy file");
        const Xc3Homotopy h = decode_xc3_homotopy(wf.body, s, t, "");
        const Report rep = verify_xc3_homotopy(xf, xg, s, t, h, opts);
        rep.print(out);
        if (!out_path.empty()) write_file(out_path, canonical_dump(report_to_json(rep)));
        return rep.passed() ? 0 : 1;
      }
      const auto found = xc3_homotopic(xf, xg, s, t, bound);
      out << "method: " << found.method << (found.complete ? " (exact)" : " (bounded search, incomplete)") << "\n";
      result["method"] = found.method;
      result["complete"] = found.complete;
      if (found.witness) {
        out << "homotopic: yes\nwitness: " << format_xc3_witness(*found.witness, s, t) << "\n";
        Json w = encode_xc3_homotopy(*found.witness);
        result["witness"] = w;
        if (!save_witness.empty()) write_file(save_witness, serialize_structure(make_structure_file("xc3_homotopy", w)));
      } else {
        out << "homotopic: no\nobstruction: " << found.obstruction << "\n";
        result["obstruction"] = found.obstruction;
        if (found.failing_generator) result["failing_generator"] = s.m2().generator_name(*found.failing_generator);
      }
      result["homotopic"] = found.witness.has_value();
      if (!out_path.empty()) write_file(out_path, canonical_dump(result));
      return found.witness ? 0 : 1;
    }

    if (classify->parsed()) {
      if (ab_range < 1 || r_bound < 1) throw UsageError("--ab-range and --r-bound must be at least 1");
      const HomologyConstraints hc = solve_homology_constraints(ab_range);
      const CaseRun c = run_case(ab_range, r_bound);
      const auto& cl = c.classification;
      const auto& rs = cl.retractions;
      out << "homology constraints (|a|,|b| ≤ " << ab_range << "):";
      for (const auto& s : hc.solutions) out << " (" << s.a << "," << s.b << "," << s.k << ")";
      out << "\nretractions Q → D with |a|,|b| ≤ " << ab_range << ", |r| ≤ " << r_bound << ": " << rs.size()
          << "\nhomotopy classes: " << cl.classes.size() << "\n";
      for (std::size_t k = 0; k < cl.classes.size(); ++k) {
        const auto& cls = cl.classes[k];
        out << "  class " << k + 1 << ": (a,b) = (" << cls.a << "," << cls.b << "), representative r = "
            << rs[cls.representative].r << ", " << cls.members.size() << " members\n";
      }
      out << "witnesses (representative → member):\n";
      for (const auto& w : cl.witnesses)
        out << "  " << retraction_label(rs[w.from]) << " → " << retraction_label(rs[w.to]) << ": "
            << format_rq_witness(w.homotopy, c.q, c.d) << "\n";
      out << "obstructions between classes:\n";
      for (const auto& o : cl.obstructions)
        out << "  " << retraction_label(rs[o.from]) << " vs " << retraction_label(rs[o.to]) << ": " << o.reason << "\n";
      print_axioms(out);
      print_derivation(out, c.count);
      out << "count: " << c.count.count << "\n";
      if (!out_path.empty()) write_file(out_path, canonical_dump(classification_json(c, hc, ab_range, r_bound)));
      return cl.classes.size() == 2 && c.count.consistent ? 0 : 1;
    }

    if (monoid->parsed()) {
      const Report rep = mbar_check_structure();
      if (table) {
        out << "M (row m, column m' ↦ m m'):\n" << pad("", 5);
        for (MonoidElement m : kMonoidElements) out << pad(to_string(m), 5);
        out << "\n";
        for (MonoidElement m : kMonoidElements) {
          out << pad(to_string(m), 5);
          for (MonoidElement n : kMonoidElements) out << pad(to_string(monoid_mul(m, n)), 5);
          out << "\n";
        }
        out << "\nMbar = M × (Z₂ ⊕ Z₂), (m,v) ∘ (m',v') = (m m', m_* v' + m'^* v):\n";
        const auto all = mbar_elements();
        out << pad("", 12);
        for (const auto& u : all) out << pad(to_string(u), 12);
        out << "\n";
        for (const auto& u : all) {
          out << pad(to_string(u), 12);
          for (const auto& v : all) out << pad(to_string(mbar_compose(u, v)), 12);
          out << "\n";
        }
        out << "\n";
      }
      out << "units:";
      for (const auto& u : mbar_units()) out << " " << to_string(u);
      out << "\n";
      rep.print(out);
      if (!out_path.empty()) write_file(out_path, canonical_dump(report_to_json(rep)));
      return rep.passed() ? 0 : 1;
    }

    if (count->parsed()) {
      if (count_ab < 1 || count_r < 1) throw UsageError("--ab-range and --r-bound must be at least 1");
      const CaseRun c = run_case(count_ab, count_r);
      out << "homotopy classes of retractions Q → D: " << c.classification.classes.size() << "\n";
      print_derivation(out, c.count);
      print_axioms(out);
      out << "count: " << c.count.count << "\n";
      if (!out_path.empty()) {
        Json report = count_json(c.count);
        report["classes"] = c.classification.classes.size();
        write_file(out_path, canonical_dump(report));
      }
      return c.count.consistent ? 0 : 1;
    }

    if (constraints->parsed()) {
      if (range < 1) throw UsageError("--range must be at least 1");
      const HomologyConstraints hc = solve_homology_constraints(range);
      out << "solutions (a, b, k) with |a|,|b| ≤ " << range << ":\n";
      for (const auto& s : hc.solutions) out << "  (" << s.a << ", " << s.b << ", " << s.k << ")\n";
      out << "certificate:\n";
      for (const auto& line : hc.certificate) out << "  " << line << "\n";
      return 0;
    }

    if (exporter->parsed()) {
      std::filesystem::create_directories(export_dir);
      const auto dir = std::filesystem::path(export_dir);
      write_file((dir / "sphere_D.json").string(),
                 serialize_structure(make_structure_file("rqc4", encode_rqc4(build_sphere_D()))));
      write_file((dir / "cylinder_Q.json").string(),
                 serialize_structure(make_structure_file("rqc4", encode_rqc4(build_cylinder_Q()))));
      write_file((dir / "case.json").string(),
                 serialize_structure(make_structure_file("bundle", encode_bundle(case_study_bundle()))));
      out << "wrote sphere_D.json, cylinder_Q.json, case.json to " << export_dir << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace xq
