#include "nk/cli.hpp"

#include "nk/linalg.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace nk {

namespace fs = std::filesystem;
using nlohmann::json;

SearchOptions parse_search_spec(const std::vector<std::string>& tokens) {
  SearchOptions o;
  std::optional<std::string> cls;
  bool have_k = false;
  for (const auto& tok : tokens) {
    if (tok == "search") continue;
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw JobError(kExitInput, "search parameter '" + tok + "' is not key=value");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    try {
      if (key == "k" || key == "degree") {
        o.degree = std::stoul(val);
        have_k = true;
      } else if (key == "class" || key == "cycle_type") {
        cls = val;
      } else if (key == "limit") {
        o.limit = std::stoul(val);
      } else {
        throw JobError(kExitInput, "unknown search parameter '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw JobError(kExitInput, "bad value in search parameter '" + tok + "'");
    }
  }
  if (!have_k) throw JobError(kExitInput, "search needs k=<degree>");
  if (o.degree < 1 || o.degree > 8) throw JobError(kExitInput, "search degree must be between 1 and 8");
  if (cls) {
    try {
      o.cycle_type = parse_cycle_type(*cls, o.degree);
    } catch (const std::exception& e) {
      throw JobError(kExitInput, e.what());
    }
  }
  return o;
}

Presentation load_job_presentation(const JobSpec& job) {
  if (!job.presentation_path.empty() && !job.braid.empty())
    throw JobError(kExitInput, "give either a presentation file or a braid, not both");
  if (!job.braid.empty()) return braid_to_wirtinger(parse_braid(job.braid));
  if (job.presentation_path.empty()) throw JobError(kExitInput, "no presentation given (--presentation or --braid)");
  if (!fs::exists(job.presentation_path))
    throw JobError(kExitInput, "cannot open presentation file '" + job.presentation_path + "'");
  return load_presentation(job.presentation_path);
}

namespace {

struct LabelledRep {
  std::string label;
  std::string text;
  MatrixRep rep;
};

std::vector<LabelledRep> job_representations(const JobSpec& job, const Presentation& p,
                                             std::vector<std::string>& notes) {
  std::vector<LabelledRep> out;
  const int sources = !job.rep_path.empty() + job.trivial_rep + !job.search.empty();
  if (sources > 1) throw JobError(kExitInput, "give one representation source");
  if (!job.rep_path.empty()) {
    if (!fs::exists(job.rep_path)) throw JobError(kExitInput, "cannot open representation file '" + job.rep_path + "'");
    RepresentationFile rf = load_representation(job.rep_path, p);
    const std::string label = fs::path(job.rep_path).filename().string();
    if (rf.perm) {
      if (!rf.perm->verified)
        throw JobError(kExitVerification, "permutation representation does not satisfy the relators");
      out.push_back({label, to_text(*rf.perm, p), perm_to_matrix(*rf.perm, job.convention)});
    } else {
      if (!verify_rep(p, *rf.matrix))
        throw JobError(kExitVerification, "matrix representation does not satisfy the relators");
      out.push_back({label, to_text(*rf.matrix, p), *rf.matrix});
    }
  } else if (!job.search.empty()) {
    const SearchOptions o = parse_search_spec(job.search);
    const auto found = search_permutation_reps(p, o);
    if (found.empty()) notes.push_back("no representation found; only the trivial lower bound applies");
    for (std::size_t i = 0; i < found.size(); ++i)
      out.push_back({"search #" + std::to_string(i + 1), to_text(found[i], p), perm_to_matrix(found[i], job.convention)});
  } else {
    out.push_back({"trivial", "trivial 1-dimensional", MatrixRep::trivial(p.generator_count())});
  }
  return out;
}

ExitCode classify(const std::exception& e) {
  if (dynamic_cast<const ChainLawError*>(&e)) return kExitInternal;
  if (auto* j = dynamic_cast<const JobError*>(&e)) return j->code();
  if (dynamic_cast<const UndefinedInvariant*>(&e)) return kExitVerification;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const PresentationError*>(&e)) return kExitInput;
  if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) return kExitInput;
  if (dynamic_cast<const json::exception*>(&e)) return kExitInput;
  if (dynamic_cast<const std::logic_error*>(&e)) return kExitInternal;
  return kExitInput;
}

}  // namespace

JobResult run_job(const JobSpec& job) {
  JobResult res;
  try {
    res.report.input = job.name.empty() ? (job.braid.empty() ? job.presentation_path : "braid " + job.braid) : job.name;
    res.report.presentation = load_job_presentation(job);
    const Presentation& p = *res.report.presentation;
    res.report.conventions.matrix_convention = to_string(job.convention);
    res.report.conventions.drop_gen = job.drop_gen;
    res.report.conventions.drop_rel = job.drop_rel;
    res.report.conventions.copies = job.copies;
    res.report.upper = job.upper;

    std::vector<std::string> notes;
    const auto reps = job_representations(job, p, notes);
    ProfileOptions popt;
    popt.primes = job.primes;
    popt.drop_gen = job.drop_gen;
    popt.drop_rel = job.drop_rel;
    popt.reduction = job.reduction;
    for (const auto& lr : reps) {
      ReportEntry e;
      e.label = lr.label;
      e.representation = lr.text;
      e.dimension = lr.rep.dimension();
      const TwistedComplex c = build_complex(p, lr.rep);
      if (job.novikov) {
        e.profile = connected_sum_scale(compute_profile(c, popt), job.copies);
        e.bound = mn_lower_bound(e.profile, e.dimension);
      } else {
        e.profile.n = e.dimension;
        e.bound = mn_lower_bound(e.profile, e.dimension);
        e.bound.provenance = "profile not computed";
      }
      if (job.alexander) {
        try {
          e.alexander = twisted_alexander(c, job.drop_gen, job.drop_rel);
        } catch (const UndefinedInvariant& ex) {
          e.alexander_error = ex.what();
        }
      }
      res.report.entries.push_back(std::move(e));
    }
    res.report.notes = notes;
  } catch (const std::exception& e) {
    res.code = classify(e);
    res.error = e.what();
  }
  return res;
}

std::vector<JobSpec> parse_manifest(const std::string& text, const std::string& base_dir) {
  const json m = json::parse(text);
  if (!m.is_array()) throw JobError(kExitInput, "manifest must be a JSON array");
  auto resolve = [&](const std::string& path) {
    if (path.empty() || fs::path(path).is_absolute()) return path;
    return (fs::path(base_dir) / path).string();
  };
  std::vector<JobSpec> jobs;
  for (const auto& j : m) {
    JobSpec s;
    s.name = j.value("name", "");
    s.presentation_path = resolve(j.value("presentation", ""));
    s.braid = j.value("braid", "");
    s.rep_path = resolve(j.value("rep", ""));
    s.trivial_rep = j.value("trivial_rep", false);
    if (j.contains("search")) {
      std::istringstream in(j["search"].get<std::string>());
      std::string tok;
      while (in >> tok) s.search.push_back(tok);
    }
    if (j.contains("convention")) s.convention = parse_convention(j["convention"].get<std::string>());
    if (j.contains("ops")) {
      const auto ops = j["ops"].get<std::vector<std::string>>();
      s.alexander = std::find(ops.begin(), ops.end(), "alexander") != ops.end();
      s.novikov = std::find(ops.begin(), ops.end(), "novikov") != ops.end() ||
                  std::find(ops.begin(), ops.end(), "bound") != ops.end();
    }
    if (j.contains("primes")) s.primes = j["primes"].get<std::vector<std::uint64_t>>();
    if (j.contains("drop_gen")) s.drop_gen = j["drop_gen"].get<std::size_t>() - 1;
    if (j.contains("drop_rel")) s.drop_rel = j["drop_rel"].get<std::size_t>() - 1;
    s.copies = j.value("copies", std::size_t{1});
    if (j.contains("upper")) s.upper = parse_upper_bound(j["upper"].get<std::string>());
    jobs.push_back(std::move(s));
  }
  return jobs;
}

std::vector<BatchRow> run_batch(const std::vector<JobSpec>& jobs, std::size_t workers) {
  std::vector<BatchRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      JobResult r = run_job(jobs[i]);
      BatchRow& row = rows[i];
      row.name = jobs[i].name.empty() ? r.report.input : jobs[i].name;
      row.code = r.code;
      row.error = r.error;
      row.representations = r.report.entries.size();
      if (r.code != kExitOk) continue;
      const MNBound best = best_bound(r.report);
      row.mn_lower = best.mn_lb;
      for (const auto& e : r.report.entries) {
        if (!row.b1 || e.profile.q1_lower > row.q1_lower || e.bound.mn_lb > row.mn_lower) {
          row.b1 = e.profile.b1;
          row.q1_lower = std::max(row.q1_lower, e.profile.q1_lower);
        }
        if (e.alexander) row.monic = row.monic.value_or(true) && is_monic(*e.alexander);
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

json to_json(const std::vector<BatchRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"name", r.name},
                   {"status", r.code == kExitOk ? "ok" : "failed"},
                   {"exit_code", static_cast<int>(r.code)},
                   {"error", r.error.empty() ? json(nullptr) : json(r.error)},
                   {"representations", r.representations},
                   {"b1", r.b1 ? json(*r.b1) : json(nullptr)},
                   {"q1_lower", r.q1_lower},
                   {"mn_lower", r.mn_lower},
                   {"monic", r.monic ? json(*r.monic) : json(nullptr)}});
  }
  return {{"schema", "novikov-knot/v1"}, {"summary", arr}};
}

std::string to_text(const std::vector<BatchRow>& rows) {
  std::ostringstream os;
  os << "name\tstatus\treps\tb1\tq1>=\tMN>=\tmonic\n";
  for (const auto& r : rows) {
    os << r.name << '\t' << (r.code == kExitOk ? "ok" : "failed(" + std::to_string(r.code) + ")") << '\t'
       << r.representations << '\t' << (r.b1 ? std::to_string(*r.b1) : "-") << '\t' << r.q1_lower << '\t'
       << r.mn_lower << '\t' << (r.monic ? (*r.monic ? "yes" : "no") : "-");
    if (!r.error.empty()) os << '\t' << r.error;
    os << '\n';
  }
  return os.str();
}

std::size_t default_workers() {
  if (const char* env = std::getenv("NOVIKOV_KNOT_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---- command line -----------------------------------------------------------------------

namespace {

struct Output {
  std::string out_path;
  bool text = false;
};

void emit(const Output& o, const json& j, const std::string& text, std::ostream& out) {
  if (!o.out_path.empty()) {
    if (o.out_path == "-") {
      out << j.dump(2) << '\n';
    } else {
      std::ofstream f(o.out_path);
      if (!f) throw JobError(kExitInput, "cannot write '" + o.out_path + "'");
      f << j.dump(2) << '\n';
    }
  }
  if (o.out_path.empty() || o.text) out << text;
}

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::logic_error&) {
      throw JobError(kExitInput, "bad prime '" + tok + "'");
    }
    if (!is_prime(out.back())) throw JobError(kExitInput, tok + " is not prime");
  }
  return out;
}

std::string alexander_text(const Report& r) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    os << "[" << e.label << "]\n";
    if (!e.alexander) {
      os << "  " << e.alexander_error << '\n';
      continue;
    }
    const auto& a = *e.alexander;
    const bool monic = is_monic(a);
    os << "  numerator:   " << a.numerator.to_string() << '\n';
    os << "  denominator: " << a.denominator.to_string() << '\n';
    os << "  normalized:  " << display(a) << '\n';
    os << "  verdict:     " << (monic ? "monic" : "not monic") << '\n';
    os << "  fibring:     "
       << (monic ? "no obstruction from this representation" : "not fibred (non-monic twisted Alexander invariant)")
       << '\n';
  }
  return os.str();
}

json alexander_json(const Report& r) {
  json full = to_json(r);
  json entries = json::array();
  for (const auto& e : full["entries"]) entries.push_back({{"label", e["label"]}, {"alexander", e["alexander"]}});
  full["entries"] = entries;
  full.erase("best");
  full.erase("conclusion");
  return full;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Novikov homology and twisted Alexander invariants of knots"};
  app.name("novikov-knot");
  app.require_subcommand(1);

  Output output;
  JobSpec job;
  std::string conv = "as-given";
  int drop_gen = 0, drop_rel = 0;
  std::string primes, upper;

  auto add_input = [&](CLI::App* sc) {
    sc->add_option("--presentation,-p", job.presentation_path, "presentation file");
    sc->add_option("--braid,-b", job.braid, "braid word 'k: l1 l2 ...'");
  };
  auto add_output = [&](CLI::App* sc) {
    sc->add_option("--out,-o", output.out_path, "write JSON here ('-' for stdout)");
    sc->add_flag("--text", output.text, "print the human-readable report as well");
  };
  auto add_reps = [&](CLI::App* sc) {
    sc->add_option("--rep,-r", job.rep_path, "representation file");
    sc->add_flag("--trivial-rep", job.trivial_rep, "trivial 1-dimensional representation");
    sc->add_option("--search-reps", job.search, "search S_k: k=5 class=3cycle limit=10")->expected(1, -1);
    sc->add_option("--convention", conv, "as-given | transposed");
  };
  auto add_drops = [&](CLI::App* sc) {
    sc->add_option("--drop-gen", drop_gen, "generator block removed from the minor (1-based)");
    sc->add_option("--drop-rel", drop_rel, "relator block removed from the minor (1-based)");
  };

  auto* parse = app.add_subcommand("parse", "parse and validate a presentation or braid");
  std::string parse_file;
  parse->add_option("file", parse_file, "presentation file");
  add_input(parse);
  add_output(parse);

  auto* reps = app.add_subcommand("reps", "search or verify permutation representations");
  std::vector<std::string> reps_args;
  std::string verify_path;
  reps->add_option("args", reps_args, "search k=5 class=3cycle [limit=N]");
  reps->add_option("--verify", verify_path, "representation file to verify");
  add_input(reps);
  add_output(reps);

  auto* alex = app.add_subcommand("alexander", "twisted Alexander invariant and monicness");
  add_input(alex);
  add_reps(alex);
  add_drops(alex);
  add_output(alex);

  auto* nov = app.add_subcommand("novikov", "Novikov profile, certificates and Morse-Novikov bound");
  bool no_reduction = false, no_alexander = false;
  add_input(nov);
  add_reps(nov);
  add_drops(nov);
  add_output(nov);
  nov->add_option("--primes", primes, "primes for the mod-ell bound, comma separated");
  nov->add_option("--copies", job.copies, "scale to the n-fold connected sum")->check(CLI::PositiveNumber);
  nov->add_option("--upper", upper, "known upper bound with citation, e.g. \"2 (handle construction)\"");
  nov->add_flag("--no-reduction", no_reduction, "skip unit-pivot reduction");
  nov->add_flag("--no-alexander", no_alexander, "skip the twisted Alexander invariant");

  auto* bnd = app.add_subcommand("bound", "Morse-Novikov bound from a saved profile or report");
  std::string profile_path;
  bnd->add_option("--profile", profile_path, "report or profile JSON")->required();
  bnd->add_option("--copies", job.copies, "scale to the n-fold connected sum")->check(CLI::PositiveNumber);
  bnd->add_option("--upper", upper, "known upper bound with citation");
  add_output(bnd);

  auto* batch = app.add_subcommand("batch", "run a JSON manifest of jobs");
  std::string manifest_path;
  std::size_t workers = 0;
  batch->add_option("manifest", manifest_path, "manifest JSON")->required();
  batch->add_option("--workers", workers, "worker threads (default NOVIKOV_KNOT_WORKERS or all cores)");
  add_output(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (!upper.empty()) job.upper = parse_upper_bound(upper);
    job.convention = parse_convention(conv);
    if (!primes.empty()) job.primes = parse_primes(primes);
    if (drop_gen < 0 || drop_rel < 0) throw JobError(kExitInput, "drop indices are 1-based");
    if (drop_gen > 0) job.drop_gen = static_cast<std::size_t>(drop_gen - 1);
    if (drop_rel > 0) job.drop_rel = static_cast<std::size_t>(drop_rel - 1);

    if (parse->parsed()) {
      if (!parse_file.empty()) job.presentation_path = parse_file;
      const Presentation p = load_job_presentation(job);
      const ValidationReport v = validate(p);
      std::ostringstream os;
      os << to_text(p);
      for (const auto& w : v.warnings) os << "# warning: " << w << '\n';
      json j{{"schema", "novikov-knot/v1"},
             {"generators", p.names()},
             {"relators", json::array()},
             {"redundant", p.redundant_relators()},
             {"xi", p.xi()},
             {"meridian", p.meridian() ? json(p.name(*p.meridian())) : json(nullptr)},
             {"wirtinger", p.is_wirtinger_type()},
             {"warnings", v.warnings},
             {"text", to_text(p)}};
      for (const auto& w : p.relators()) j["relators"].push_back(p.word_to_string(w));
      emit(output, j, os.str(), out);
      return v.ok() ? kExitOk : kExitInput;
    }

    if (reps->parsed()) {
      const Presentation p = load_job_presentation(job);
      if (!verify_path.empty()) {
        if (!fs::exists(verify_path)) throw JobError(kExitInput, "cannot open representation file '" + verify_path + "'");
        const RepresentationFile rf = load_representation(verify_path, p);
        const bool ok = rf.perm ? rf.perm->verified : verify_rep(p, *rf.matrix);
        emit(output, {{"schema", "novikov-knot/v1"}, {"verified", ok}}, ok ? "verified\n" : "NOT verified\n", out);
        return ok ? kExitOk : kExitVerification;
      }
      const SearchOptions o = parse_search_spec(reps_args);
      const auto found = search_permutation_reps(p, o);
      json arr = json::array();
      std::ostringstream os;
      os << found.size() << " representation(s) up to conjugation\n";
      for (std::size_t i = 0; i < found.size(); ++i) {
        json imgs = json::object();
        for (std::size_t g = 0; g < found[i].images.size(); ++g)
          imgs[p.name(static_cast<GeneratorId>(g))] = found[i].images[g].to_cycles();
        arr.push_back({{"degree", found[i].degree}, {"verified", found[i].verified}, {"images", imgs}});
        os << "\n# representation " << i + 1 << '\n' << to_text(found[i], p);
      }
      emit(output, {{"schema", "novikov-knot/v1"}, {"representations", arr}}, os.str(), out);
      return kExitOk;
    }

    if (alex->parsed() || nov->parsed()) {
      job.novikov = nov->parsed();
      job.alexander = alex->parsed() || !no_alexander;
      job.reduction = !no_reduction;
      const JobResult r = run_job(job);
      if (r.code != kExitOk) {
        err << "error: " << r.error << '\n';
        return r.code;
      }
      if (alex->parsed()) {
        emit(output, alexander_json(r.report), alexander_text(r.report), out);
        for (const auto& e : r.report.entries)
          if (!e.alexander) return kExitVerification;
      } else {
        emit(output, to_json(r.report), to_text(r.report), out);
      }
      return kExitOk;
    }

    if (bnd->parsed()) {
      std::ifstream f(profile_path);
      if (!f) throw JobError(kExitInput, "cannot open '" + profile_path + "'");
      const json j = json::parse(f);
      NovikovProfile prof;
      if (j.contains("entries")) {
        if (j["entries"].empty()) throw JobError(kExitVerification, "report has no representations");
        std::optional<MNBound> best;
        for (const auto& e : j["entries"]) {
          NovikovProfile cand = profile_from_json(e.at("profile"));
          MNBound b = mn_lower_bound(cand, cand.n);
          if (!best || b.mn_lb > best->mn_lb || (b.mn_lb == best->mn_lb && b.raw > best->raw)) {
            best = b;
            prof = cand;
          }
        }
      } else {
        prof = profile_from_json(j);
      }
      const NovikovProfile scaled = connected_sum_scale(prof, job.copies);
      const MNBound b = with_upper(mn_lower_bound(scaled, scaled.n), job.upper);
      std::ostringstream os;
      os << "copies: " << job.copies << "\nq1 >= " << scaled.q1_lower << ", b1 = " << scaled.b1 << ", n = " << scaled.n
         << "\nMN >= " << b.mn_lb << " (raw " << b.raw.get_str() << ")\n";
      if (b.upper) {
        os << "bracket: [" << b.mn_lb << ", " << b.upper->value << "]";
        if (!b.upper->note.empty()) os << "  upper: " << b.upper->note;
        os << '\n';
        if (b.contradiction) os << "CONTRADICTION: upper bound below the certified lower bound\n";
      }
      json jo{{"schema", "novikov-knot/v1"}, {"copies", job.copies}, {"profile", to_json(scaled)}, {"bound", to_json(b)}};
      emit(output, jo, os.str(), out);
      return b.contradiction ? kExitVerification : kExitOk;
    }

    if (batch->parsed()) {
      std::ifstream f(manifest_path);
      if (!f) throw JobError(kExitInput, "cannot open manifest '" + manifest_path + "'");
      std::stringstream ss;
      ss << f.rdbuf();
      const auto jobs = parse_manifest(ss.str(), fs::path(manifest_path).parent_path().string());
      const auto rows = run_batch(jobs, workers ? workers : default_workers());
      emit(output, to_json(rows), to_text(rows), out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return classify(e);
  }
  return kExitOk;
}

}  // namespace nk
