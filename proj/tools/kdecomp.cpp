// kdecomp — command-line front end for the finite-semiring ideal toolkit.
//
// Subcommands: check, ideals, closure, classify, decompose, primes, verify,
// verify-all, enumerate, natpoly. Reports are line-oriented plain text with
// a stable field order (--json emits the same data as one JSON document).
// Exit codes: 0 = all checks pass, 1 = a mathematical finding with witness,
// 2 = input or usage error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kdecomp/classify.hpp"
#include "kdecomp/decompose.hpp"
#include "kdecomp/enumerate.hpp"
#include "kdecomp/errors.hpp"
#include "kdecomp/ideal.hpp"
#include "kdecomp/natpoly.hpp"
#include "kdecomp/semiring.hpp"
#include "kdecomp/srs.hpp"
#include "kdecomp/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace kdecomp;

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(v));
  return std::string(buf);
}

std::uint64_t fnv1a64_bytes(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

std::string flag_bits(const StructuralFlags& f) {
  std::string s;
  s += f.additively_cancellative ? '1' : '0';
  s += f.yoked ? '1' : '0';
  s += f.zerosumfree ? '1' : '0';
  s += f.is_ring ? '1' : '0';
  return s;
}

std::string flags_line(const StructuralFlags& f) {
  std::ostringstream out;
  out << "flags cancellative=" << bool_word(f.additively_cancellative)
      << " yoked=" << bool_word(f.yoked)
      << " zerosumfree=" << bool_word(f.zerosumfree)
      << " ring=" << bool_word(f.is_ring);
  return out.str();
}

json flags_json(const StructuralFlags& f) {
  return json{{"cancellative", f.additively_cancellative},
              {"yoked", f.yoked},
              {"zerosumfree", f.zerosumfree},
              {"ring", f.is_ring}};
}

json mask_json(SubsetMask mask) {
  json arr = json::array();
  for (ElementIndex e : mask_elements(mask)) arr.push_back(e);
  return arr;
}

SubsetMask parse_set_arg(const std::string& arg, int order) {
  SubsetMask mask = 0;
  std::stringstream ss(arg);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, ',')) {
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw InputError("--set: empty element in '" + arg + "'");
    }
    tok = tok.substr(first, last - first + 1);
    int value = 0;
    try {
      std::size_t pos = 0;
      value = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("--set: '" + tok + "' is not an element index");
    }
    if (value < 0 || value >= order) {
      throw InputError("--set: element " + std::to_string(value) +
                       " out of range for order " + std::to_string(order));
    }
    mask |= SubsetMask{1} << value;
    any = true;
  }
  if (!any) throw InputError("--set: empty set");
  return mask;
}

// ---------------------------------------------------------------------------
// Report assembly. Text bodies are built line by line; the JSON payload is
// filled in parallel so --json carries the same data.

struct Report {
  std::string command;
  std::optional<std::pair<std::string, std::string>> input;  // path, digest
  std::vector<std::string> lines;
  json payload = json::object();
  int finding_count = 0;

  void add(const std::string& line) { lines.push_back(line); }
  void finding(const std::string& id, const std::string& subject,
               const std::string& detail) {
    add("finding " + id + " subject " + subject + " detail " + detail);
    ++finding_count;
  }
};

struct GlobalOptions {
  bool json_output = false;
  bool timing = false;
  std::string out_path;  // duplicate the report into this file
};

std::string render_report(const Report& r, const GlobalOptions& g,
                          double wall_ms) {
  if (g.json_output) {
    json doc;
    doc["command"] = r.command;
    if (r.input) {
      doc["input"] = json{{"path", r.input->first},
                          {"digest", r.input->second}};
    }
    for (const auto& item : r.payload.items()) doc[item.key()] = item.value();
    if (g.timing) doc["wall_ms"] = wall_ms;
    doc["result"] = r.finding_count == 0 ? "pass" : "fail";
    doc["finding_count"] = r.finding_count;
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "command " << r.command << "\n";
  if (r.input) {
    out << "input " << r.input->first << " digest " << r.input->second
        << "\n";
  }
  for (const std::string& line : r.lines) out << line << "\n";
  if (g.timing) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", wall_ms);
    out << "wall_ms " << buf << "\n";
  }
  out << "result " << (r.finding_count == 0 ? "pass" : "fail") << " findings "
      << r.finding_count << "\n";
  return out.str();
}

Semiring load_input(const std::string& path, Report& report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  report.input = {path, hex16(fnv1a64_bytes(content))};
  return parse_srs_string(content, path);
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

void run_check(const Semiring& s, Report& r) {
  const StructuralFlags& f = s->flags();
  const IdealLattice& lat = s->lattice();
  r.add("semiring " + s->name() + " order " + std::to_string(s->order()));
  r.add(flags_line(f));
  r.add("hash " + hex16(s->structure_hash()));
  r.add("ideals " + std::to_string(lat.ideals.size()) + " k_ideals " +
        std::to_string(lat.k_ideals.size()));
  r.payload["semiring"] = s->name();
  r.payload["order"] = s->order();
  r.payload["flags"] = flags_json(f);
  r.payload["hash"] = hex16(s->structure_hash());
  r.payload["ideal_count"] = lat.ideals.size();
  r.payload["k_ideal_count"] = lat.k_ideals.size();
}

void run_ideals(const Semiring& s, bool k_only, Report& r) {
  const IdealLattice& lat = s->lattice();
  const std::vector<SubsetMask>& masks = k_only ? lat.k_ideals : lat.ideals;
  json arr = json::array();
  for (SubsetMask m : masks) {
    r.add(mask_to_string(m));
    arr.push_back(mask_json(m));
  }
  r.payload["semiring"] = s->name();
  r.payload["order"] = s->order();
  r.payload["k_only"] = k_only;
  r.payload["ideals"] = std::move(arr);
}

void run_closure(const Semiring& s, SubsetMask set, Report& r) {
  Ideal ideal(s, set);
  Ideal closed = k_closure(ideal);
  r.add("set " + mask_to_string(set));
  r.add("k_closure " + closed.to_string());
  r.add(std::string("already_k ") + bool_word(ideal.is_k()));
  r.payload["set"] = mask_json(set);
  r.payload["k_closure"] = mask_json(closed.bits());
  r.payload["already_k"] = ideal.is_k();
}

void run_classify(const Semiring& s, SubsetMask set, Report& r) {
  Ideal ideal(s, set);
  IdealClass c = classify_ideal(ideal);
  std::ostringstream line;
  line << "proper=" << bool_word(c.proper) << " prime=" << bool_word(c.prime)
       << " primary=" << bool_word(c.primary) << " radical="
       << mask_to_string(c.radical_bits) << " k_irreducible="
       << (c.k_irreducible ? bool_word(*c.k_irreducible) : "na");
  r.add(line.str());
  r.payload["set"] = mask_json(set);
  r.payload["proper"] = c.proper;
  r.payload["is_k"] = c.is_k;
  r.payload["prime"] = c.prime;
  r.payload["primary"] = c.primary;
  r.payload["radical"] = mask_json(c.radical_bits);
  if (c.k_irreducible) {
    r.payload["k_irreducible"] = *c.k_irreducible;
  } else {
    r.payload["k_irreducible"] = nullptr;
  }
}

void add_associated_primes(const std::vector<AssociatedPrime>& primes,
                           Report& r, json* arr) {
  for (const AssociatedPrime& p : primes) {
    r.add("associated_prime " + p.prime.to_string() + " witness " +
          std::to_string(p.witness));
    if (arr) {
      arr->push_back(json{{"prime", mask_json(p.prime.bits())},
                          {"witness", p.witness}});
    }
  }
}

void run_decompose(const Semiring& s, SubsetMask set, Report& r) {
  Ideal ideal(s, set);
  DecompositionResult d = primary_decomposition(ideal);
  r.add("input " + mask_to_string(set));
  json comps = json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    r.add("component " + d.components[i].to_string() + " radical " +
          d.radicals[i].to_string());
    comps.push_back(json{{"component", mask_json(d.components[i].bits())},
                         {"radical", mask_json(d.radicals[i].bits())}});
  }
  r.add(std::string("reduced ") + bool_word(d.reduced));
  std::vector<AssociatedPrime> primes = associated_primes(ideal);
  json prime_arr = json::array();
  add_associated_primes(primes, r, &prime_arr);
  r.payload["input"] = mask_json(set);
  r.payload["components"] = std::move(comps);
  r.payload["reduced"] = d.reduced;
  r.payload["associated_primes"] = std::move(prime_arr);
}

void run_primes(const Semiring& s, const std::optional<SubsetMask>& set,
                Report& r) {
  if (set) {
    Ideal ideal(s, *set);
    r.add("input " + mask_to_string(*set));
    std::vector<AssociatedPrime> primes = associated_primes(ideal);
    json arr = json::array();
    add_associated_primes(primes, r, &arr);
    r.add("count " + std::to_string(primes.size()));
    r.payload["input"] = mask_json(*set);
    r.payload["associated_primes"] = std::move(arr);
    return;
  }
  json arr = json::array();
  int count = 0;
  for (const Ideal& ideal : all_k_ideals(s)) {
    if (!is_prime(ideal)) continue;
    r.add("prime " + ideal.to_string());
    arr.push_back(mask_json(ideal.bits()));
    ++count;
  }
  r.add("count " + std::to_string(count));
  r.payload["primes"] = std::move(arr);
}

json finding_json(const Finding& f) {
  return json{{"id", f.id}, {"subject", f.subject}, {"detail", f.detail}};
}

void add_verify_body(const VerificationReport& v, Report& r) {
  r.add("semiring " + v.semiring_name + " order " + std::to_string(v.order));
  r.add("hash " + hex16(v.digest));
  r.add(flags_line(v.flags));
  r.add(std::string("lemma_hypotheses ") +
        bool_word(v.lemma_hypotheses_satisfied));
  {
    std::ostringstream line;
    line << "counts ideals " << v.ideal_count << " k_ideals "
         << v.k_ideal_count << " proper_k " << v.proper_k_ideal_count
         << " primary " << v.primary_count << " prime " << v.prime_count
         << " k_irreducible " << v.k_irreducible_count;
    r.add(line.str());
  }
  {
    std::ostringstream line;
    line << "checks closure " << v.closure_checks << " radical "
         << v.radical_checks << " colon " << v.colon_checks
         << " decompositions " << v.decomposition_count << " uniqueness "
         << v.uniqueness_checks << " traces " << v.trace_count;
    r.add(line.str());
  }
  r.add("sums checked " + std::to_string(v.k_ideal_sums_checked) + " not_k " +
        std::to_string(v.k_ideal_sums_not_k));
  r.add("radical_of_k_not_k " + std::to_string(v.radical_of_k_not_k));
  json steps = json::array();
  for (const FlaggedStepStats& st : v.step_stats) {
    std::string line = "step " + st.id + " held " + std::to_string(st.held) +
                       " failed " + std::to_string(st.failed);
    if (st.failed > 0) line += " first " + st.first_failure;
    r.add(line);
    steps.push_back(json{{"id", st.id},
                         {"held", st.held},
                         {"failed", st.failed},
                         {"first_failure", st.first_failure}});
  }
  json findings = json::array();
  for (const Finding& f : v.findings) {
    r.finding(f.id, f.subject, f.detail);
    findings.push_back(finding_json(f));
  }
  json notes = json::array();
  for (const Finding& f : v.notes) {
    r.add("note " + f.id + " subject " + f.subject + " detail " + f.detail);
    notes.push_back(finding_json(f));
  }
  r.payload["semiring"] = v.semiring_name;
  r.payload["order"] = v.order;
  r.payload["hash"] = hex16(v.digest);
  r.payload["flags"] = flags_json(v.flags);
  r.payload["lemma_hypotheses"] = v.lemma_hypotheses_satisfied;
  r.payload["counts"] = json{{"ideals", v.ideal_count},
                             {"k_ideals", v.k_ideal_count},
                             {"proper_k", v.proper_k_ideal_count},
                             {"primary", v.primary_count},
                             {"prime", v.prime_count},
                             {"k_irreducible", v.k_irreducible_count}};
  r.payload["checks"] = json{{"closure", v.closure_checks},
                             {"radical", v.radical_checks},
                             {"colon", v.colon_checks},
                             {"decompositions", v.decomposition_count},
                             {"uniqueness", v.uniqueness_checks},
                             {"traces", v.trace_count}};
  r.payload["sums"] = json{{"checked", v.k_ideal_sums_checked},
                           {"not_k", v.k_ideal_sums_not_k}};
  r.payload["radical_of_k_not_k"] = v.radical_of_k_not_k;
  r.payload["steps"] = std::move(steps);
  r.payload["findings"] = std::move(findings);
  r.payload["notes"] = std::move(notes);
}

void run_verify_all(int order, int jobs, Report& r) {
  json rows = json::array();
  int count = 0;
  int total_findings = 0;
  std::vector<Semiring> batch;

  auto emit = [&](const VerificationReport& v) {
    r.add("semiring " + v.semiring_name + " findings " +
          std::to_string(v.findings.size()));
    json row_findings = json::array();
    for (const Finding& f : v.findings) {
      r.finding(f.id, f.subject, f.detail);
      row_findings.push_back(finding_json(f));
    }
    // r.finding already counts; keep the census total separately.
    total_findings += static_cast<int>(v.findings.size());
    rows.push_back(json{{"name", v.semiring_name},
                        {"findings", std::move(row_findings)}});
    ++count;
  };

  auto flush = [&] {
    if (batch.empty()) return;
    if (jobs <= 1 || batch.size() == 1) {
      for (const Semiring& s : batch) emit(verify_semiring(s));
    } else {
      std::vector<std::future<VerificationReport>> futures;
      futures.reserve(batch.size());
      for (const Semiring& s : batch) {
        futures.push_back(std::async(std::launch::async,
                                     [s] { return verify_semiring(s); }));
      }
      for (auto& f : futures) emit(f.get());
    }
    batch.clear();
  };

  EnumerationOptions options;
  options.up_to_iso = true;
  enumerate_semirings(order, options, [&](const Semiring& s) {
    batch.push_back(s);
    if (static_cast<int>(batch.size()) >= std::max(1, jobs)) flush();
  });
  flush();

  r.add("census order " + std::to_string(order) + " count " +
        std::to_string(count) + " findings " +
        std::to_string(total_findings));
  r.payload["order"] = order;
  r.payload["jobs"] = jobs;
  r.payload["semirings"] = std::move(rows);
  r.payload["count"] = count;
}

void run_enumerate(int order, bool iso, const std::string& out_dir,
                   Report& r) {
  namespace fs = std::filesystem;
  if (!out_dir.empty()) fs::create_directories(out_dir);

  std::ostringstream tsv;
  tsv << "name\tflags\tk_ideals\n";
  json rows = json::array();
  int count = 0;

  EnumerationOptions options;
  options.up_to_iso = iso;
  enumerate_semirings(order, options, [&](const Semiring& s) {
    const std::string bits = flag_bits(s->flags());
    const std::size_t k_count = s->lattice().k_ideals.size();
    std::string row =
        s->name() + "\t" + bits + "\t" + std::to_string(k_count);
    r.add(row);
    tsv << row << "\n";
    rows.push_back(json{{"name", s->name()},
                        {"flags", bits},
                        {"k_ideals", k_count}});
    if (!out_dir.empty()) {
      std::ofstream srs(fs::path(out_dir) / (s->name() + ".srs"),
                        std::ios::binary);
      if (!srs) throw InputError("cannot write into '" + out_dir + "'");
      srs << to_srs(*s);
    }
    ++count;
  });

  if (!out_dir.empty()) {
    std::ofstream census(fs::path(out_dir) / "census.tsv", std::ios::binary);
    if (!census) throw InputError("cannot write into '" + out_dir + "'");
    census << tsv.str();
    r.add("out_dir " + out_dir);
    r.payload["out_dir"] = out_dir;
  }
  r.add("total " + std::to_string(count));
  r.payload["order"] = order;
  r.payload["iso"] = iso;
  r.payload["semirings"] = std::move(rows);
  r.payload["total"] = count;
}

void run_natpoly_golan(Report& r) {
  PrincipalNotKCertificate cert = principal_not_k_witness();
  const bool u_in = principal_membership(cert.u, cert.g).has_value();
  const bool v_in = principal_membership(cert.v, cert.g).has_value();
  const bool sum_ok = poly_add(cert.w, cert.v) == cert.u;
  const bool w_in = principal_membership(cert.w, cert.g).has_value();
  std::string why;
  const bool valid = cert.validate(&why);

  r.add("g " + cert.g.to_string());
  r.add("u " + cert.u.to_string());
  r.add("v " + cert.v.to_string());
  r.add("w " + cert.w.to_string());
  r.add("u_cofactor " + cert.u_cofactor.to_string());
  r.add("v_cofactor " + cert.v_cofactor.to_string());
  r.add(std::string("u_in_principal ") + bool_word(u_in));
  r.add(std::string("v_in_principal ") + bool_word(v_in));
  r.add(std::string("u_equals_w_plus_v ") + bool_word(sum_ok));
  r.add(std::string("w_in_principal ") + bool_word(w_in));
  if (valid) {
    r.add("certificate valid");
  } else {
    r.finding("certificate-invalid", "golan", why);
  }
  r.payload["demo"] = "golan";
  r.payload["g"] = cert.g.to_string();
  r.payload["u"] = cert.u.to_string();
  r.payload["v"] = cert.v.to_string();
  r.payload["w"] = cert.w.to_string();
  r.payload["u_cofactor"] = cert.u_cofactor.to_string();
  r.payload["v_cofactor"] = cert.v_cofactor.to_string();
  r.payload["u_in_principal"] = u_in;
  r.payload["v_in_principal"] = v_in;
  r.payload["u_equals_w_plus_v"] = sum_ok;
  r.payload["w_in_principal"] = w_in;
  r.payload["certificate_valid"] = valid;
}

void run_natpoly_yoked(Report& r) {
  const NatPoly f({2, 9, 5});
  const NatPoly g({5, 3, 11});
  std::optional<NatPoly> h = yoked_pair_check(f, g);

  r.add("f " + f.to_string());
  r.add("g " + g.to_string());
  r.add(std::string("yoked ") + bool_word(h.has_value()));
  if (h) {
    r.add("difference " + h->to_string());
    const bool forward = poly_add(f, *h) == g;
    r.add(std::string("identity ") + (forward ? "f+h=g" : "g+h=f"));
    r.finding("yoked-pair-unexpected", "yoked",
              "the pair is yoked with difference " + h->to_string());
  } else {
    r.add("difference none");
  }
  r.payload["demo"] = "yoked";
  r.payload["f"] = f.to_string();
  r.payload["g"] = g.to_string();
  r.payload["yoked"] = h.has_value();
  if (h) {
    r.payload["difference"] = h->to_string();
  } else {
    r.payload["difference"] = nullptr;
  }
}

void run_natpoly_sums(Report& r) {
  SumNotKCertificate cert = sum_not_k_witness(2, 3);
  std::string why;
  const bool valid = cert.validate(&why);

  auto decomposition = [&](std::uint64_t i, std::uint64_t j) {
    std::ostringstream out;
    out << i << "*" << cert.a << " + " << j << "*" << cert.b;
    return out.str();
  };
  r.add("a " + std::to_string(cert.a));
  r.add("b " + std::to_string(cert.b));
  r.add("x " + std::to_string(cert.x) + " = " +
        decomposition(cert.x_i, cert.x_j));
  r.add("y " + std::to_string(cert.y));
  r.add("x_plus_y " + std::to_string(cert.x + cert.y) + " = " +
        decomposition(cert.sum_i, cert.sum_j));
  if (valid) {
    r.add("certificate valid");
  } else {
    r.finding("certificate-invalid", "sums", why);
  }
  r.payload["demo"] = "sums";
  r.payload["a"] = cert.a;
  r.payload["b"] = cert.b;
  r.payload["x"] = cert.x;
  r.payload["y"] = cert.y;
  r.payload["x_decomposition"] = json{{"i", cert.x_i}, {"j", cert.x_j}};
  r.payload["sum_decomposition"] = json{{"i", cert.sum_i}, {"j", cert.sum_j}};
  r.payload["certificate_valid"] = valid;
}

void run_natpoly_check(std::uint64_t a, std::uint64_t bound, Report& r) {
  BoundedSubtractivityReport rep = principal_k_check(a, bound);
  r.add("a " + std::to_string(rep.a));
  r.add("bound " + std::to_string(rep.bound));
  r.add("pairs_checked " + std::to_string(rep.pairs_checked));
  r.add(std::string("subtractive ") + bool_word(rep.passed));
  if (!rep.passed) {
    r.finding("principal-not-subtractive", "a=" + std::to_string(rep.a),
              "x=" + std::to_string(rep.counterexample_x) +
                  " y=" + std::to_string(rep.counterexample_y));
  }
  r.payload["a"] = rep.a;
  r.payload["bound"] = rep.bound;
  r.payload["pairs_checked"] = rep.pairs_checked;
  r.payload["subtractive"] = rep.passed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite commutative semiring ideal toolkit"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_flag("--json", global.json_output,
               "emit the report as a single JSON document");
  app.add_flag("--timing", global.timing,
               "append wall-clock time to the report");

  std::string file;
  std::string set_arg;
  std::string out_arg;
  bool k_only = false;
  int order = 0;
  bool iso = false;
  int jobs = 1;
  std::string demo;
  std::vector<std::uint64_t> lemma_args;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_arg, "duplicate the report into FILE");
  };

  CLI::App* check = app.add_subcommand("check", "validate a semiring file");
  check->add_option("file", file, "semiring table file")->required();
  add_out(check);

  CLI::App* ideals = app.add_subcommand("ideals", "list ideals");
  ideals->add_option("file", file, "semiring table file")->required();
  ideals->add_flag("--k-only", k_only, "only subtractive ideals");
  add_out(ideals);

  CLI::App* closure = app.add_subcommand("closure", "k-closure of an ideal");
  closure->add_option("file", file, "semiring table file")->required();
  closure->add_option("--set", set_arg, "ideal elements, e.g. 0,3")
      ->required();
  add_out(closure);

  CLI::App* classify = app.add_subcommand("classify", "classify an ideal");
  classify->add_option("file", file, "semiring table file")->required();
  classify->add_option("--set", set_arg, "ideal elements, e.g. 0,2")
      ->required();
  add_out(classify);

  CLI::App* decompose =
      app.add_subcommand("decompose", "reduced primary decomposition");
  decompose->add_option("file", file, "semiring table file")->required();
  decompose->add_option("--set", set_arg, "proper k-ideal elements")
      ->required();
  add_out(decompose);

  CLI::App* primes = app.add_subcommand(
      "primes", "prime k-ideals, or associated primes of --set");
  primes->add_option("file", file, "semiring table file")->required();
  primes->add_option("--set", set_arg, "k-ideal elements");
  add_out(primes);

  CLI::App* verify =
      app.add_subcommand("verify", "full theorem sweep for one semiring");
  verify->add_option("file", file, "semiring table file")->required();
  add_out(verify);

  CLI::App* verify_all =
      app.add_subcommand("verify-all", "theorem sweep over the whole census");
  verify_all->add_option("--order", order, "semiring order")->required();
  verify_all->add_option("--jobs", jobs, "worker pool size")
      ->envname("KDECOMP_JOBS");
  add_out(verify_all);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "enumerate semirings of one order");
  enumerate->add_option("--order", order, "semiring order")->required();
  enumerate->add_flag("--iso", iso, "one semiring per isomorphism class");
  enumerate->add_option("--out", out_arg,
                        "directory for .srs files and census.tsv");

  CLI::App* natpoly = app.add_subcommand(
      "natpoly", "certificates over the natural numbers and their "
                 "polynomials");
  natpoly->add_option("--demo", demo, "one of: golan, yoked, sums")
      ->check(CLI::IsMember({"golan", "yoked", "sums"}));
  natpoly
      ->add_option("--check-lemma210", lemma_args,
                   "bounded subtractivity check: A BOUND")
      ->expected(2);
  add_out(natpoly);

  for (CLI::App* sub : {check, ideals, closure, classify, decompose, primes,
                        verify, verify_all, enumerate, natpoly}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  if (natpoly->parsed() && demo.empty() == lemma_args.empty()) {
    std::cerr << "error: natpoly: exactly one of --demo or --check-lemma210 "
                 "is required\n";
    return 2;
  }

  Report report;
  report.command = "kdecomp";
  for (int i = 1; i < argc; ++i) report.command += std::string(" ") + argv[i];

  const auto start = std::chrono::steady_clock::now();
  try {
    if (check->parsed()) {
      run_check(load_input(file, report), report);
    } else if (ideals->parsed()) {
      run_ideals(load_input(file, report), k_only, report);
    } else if (closure->parsed()) {
      Semiring s = load_input(file, report);
      run_closure(s, parse_set_arg(set_arg, s->order()), report);
    } else if (classify->parsed()) {
      Semiring s = load_input(file, report);
      run_classify(s, parse_set_arg(set_arg, s->order()), report);
    } else if (decompose->parsed()) {
      Semiring s = load_input(file, report);
      run_decompose(s, parse_set_arg(set_arg, s->order()), report);
    } else if (primes->parsed()) {
      Semiring s = load_input(file, report);
      std::optional<SubsetMask> set;
      if (!set_arg.empty()) set = parse_set_arg(set_arg, s->order());
      run_primes(s, set, report);
    } else if (verify->parsed()) {
      Semiring s = load_input(file, report);
      add_verify_body(verify_semiring(s), report);
    } else if (verify_all->parsed()) {
      if (jobs < 1) throw InputError("--jobs must be at least 1");
      run_verify_all(order, jobs, report);
    } else if (enumerate->parsed()) {
      run_enumerate(order, iso, out_arg, report);
    } else if (natpoly->parsed()) {
      if (demo == "golan") {
        run_natpoly_golan(report);
      } else if (demo == "yoked") {
        run_natpoly_yoked(report);
      } else if (demo == "sums") {
        run_natpoly_sums(report);
      } else {
        run_natpoly_check(lemma_args[0], lemma_args[1], report);
      }
    }
  } catch (const TheoremViolation& e) {
    report.finding("irreducible-not-primary", "decomposition", e.what());
  } catch (const GroupNotPrimary& e) {
    report.finding("group-not-primary", "reduction", e.what());
  } catch (const StepFailed& e) {
    report.finding("proof-step-failed", e.step(), e.what());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  const auto stop = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  const std::string rendered = render_report(report, global, wall_ms);
  std::cout << rendered;
  const std::string out_path =
      enumerate->parsed() ? std::string() : out_arg;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report to '" << out_path << "'\n";
      return 2;
    }
    out << rendered;
  }
  return report.finding_count == 0 ? 0 : 1;
}
