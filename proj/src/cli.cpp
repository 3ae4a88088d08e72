#include "orthocusp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "orthocusp/andreev.hpp"
#include "orthocusp/bounds.hpp"
#include "orthocusp/cusplink.hpp"
#include "orthocusp/enum3.hpp"
#include "orthocusp/error.hpp"
#include "orthocusp/nikulin.hpp"

namespace orthocusp::cli {

namespace fs = std::filesystem;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Human lines or key=value records, never both.
class Sink {
 public:
  Sink(std::ostream& os, bool machine) : os_(os), machine_(machine) {}
  void line(const std::string& s) {
    if (!machine_) os_ << s << '\n';
  }
  template <class T>
  void kv(const std::string& key, const T& value) {
    if (machine_) os_ << key << '=' << value << '\n';
  }
  bool machine() const { return machine_; }

 private:
  std::ostream& os_;
  bool machine_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

core::Polyhedron3 load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return core::parse_poly3(text);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }
std::string okfail(bool b) { return b ? "OK" : "FAIL"; }

std::string render(const andreev::Witness& w) {
  std::string s = "{" + join(w.faces) + "}";
  if (w.vertex >= 0) s += "@v" + std::to_string(w.vertex);
  return s;
}

std::string label(const std::string& id) {
  return id.size() == 1 ? "(" + id + ")" : id;
}

int report_conditions(Sink& out, const andreev::ConditionReport& r) {
  for (const auto& c : r.conditions) {
    std::string s = label(c.id) + " " + (c.ok() ? "ok" : "FAIL") + ": " + c.description;
    std::string ws;
    for (const auto& w : c.witnesses) ws += (ws.empty() ? "" : " ") + render(w);
    if (!c.ok()) s += " -- " + ws;
    out.line(s);
    out.kv("condition." + c.id, c.ok() ? "ok" : "fail");
    if (!c.ok()) out.kv("condition." + c.id + ".witnesses", ws);
  }
  if (r.excluded_family) out.line("tetrahedron or triangular prism: outside the theorem");
  out.line("verdict: " + andreev::to_string(r.verdict));
  out.kv("excluded_family", yes(r.excluded_family));
  out.kv("verdict", andreev::to_string(r.verdict));
  return r.verdict == andreev::Verdict::pass ? exit_ok : exit_check_failed;
}

// Refuses invalid polyhedra before the condition checks, which assume validity.
bool report_invalid(Sink& out, const core::Polyhedron3& p) {
  const auto v = core::validate(p);
  if (v.valid()) return false;
  for (const auto& i : v.violations) {
    out.line("invalid " + i.kind + ": " + i.witness);
    out.kv("violation." + i.kind, i.witness);
  }
  out.line("verdict: invalid input");
  out.kv("verdict", "invalid");
  return true;
}

// ---------------------------------------------------------------------------

int cmd_validate(Sink& out, const std::vector<std::string>& files, bool right_angled) {
  bool all_ok = true;
  for (const auto& path : files) {
    const auto p = load(path);
    std::optional<core::DegreeProfile> profile;
    if (right_angled) profile = core::DegreeProfile::right_angled();
    const auto r = core::validate(p, profile);
    const std::string key = "file[" + path + "]";
    out.line(path + ": V=" + std::to_string(p.vertex_count()) + " E=" +
             std::to_string(p.edge_count()) + " F=" + std::to_string(p.face_count()) +
             " cusps=" + std::to_string(p.ideal_count()));
    out.kv(key + ".vertices", p.vertex_count());
    out.kv(key + ".edges", p.edge_count());
    out.kv(key + ".faces", p.face_count());
    out.kv(key + ".cusps", p.ideal_count());
    for (const auto& i : r.violations) {
      out.line("  violation " + i.kind + ": " + i.witness);
      out.kv(key + ".violation." + i.kind, i.witness);
    }
    for (const auto& d : r.degree_violations) {
      const std::string s = std::string(d.ideal ? "cusp " : "vertex ") + std::to_string(d.vertex) +
                            " has degree " + std::to_string(d.degree) + ", expected " +
                            std::to_string(d.required);
      out.line("  degree: " + s);
      out.kv(key + ".degree", s);
    }
    for (const auto& i : r.notes) {
      out.line("  note " + i.kind + ": " + i.witness);
      out.kv(key + ".note." + i.kind, i.witness);
    }
    const bool ok = right_angled ? r.ok() : r.valid();
    out.line(std::string("  ") + (ok ? "valid" : "INVALID"));
    out.kv(key + ".status", ok ? "valid" : "invalid");
    all_ok = all_ok && ok;
  }
  return all_ok ? exit_ok : exit_check_failed;
}

int cmd_andreev(Sink& out, const std::string& file, const std::string& angles_file, bool right) {
  const auto p = load(file);
  if (report_invalid(out, p)) return exit_check_failed;
  andreev::AngleAssignment angles;
  if (right) {
    angles = andreev::AngleAssignment::all_right(p);
  } else {
    try {
      angles = andreev::parse_angles(read_file(angles_file));
    } catch (const ParseError& e) {
      throw IoError(angles_file + ": " + e.what());
    }
  }
  return report_conditions(out, andreev::check_andreev(p, angles));
}

int cmd_right_angled(Sink& out, const std::string& file) {
  const auto p = load(file);
  if (report_invalid(out, p)) return exit_check_failed;
  return report_conditions(out, andreev::check_right_angled(p));
}

int cmd_nikulin_formula(Sink& out, int n, int k, int l) {
  const Rational r = nikulin::nikulin_rhs(n, k, l);
  out.line(to_string(r));
  out.kv("n", n);
  out.kv("k", k);
  out.kv("l", l);
  out.kv("bound", to_string(r));
  return exit_ok;
}

// Boundary equality is printed but only a strict excess or a failed small
// inequality counts as a failure (the (1,0) pair sits on the bound for every
// 3-polyhedron).
int cmd_nikulin_file(Sink& out, const std::string& file) {
  const auto p = load(file);
  if (report_invalid(out, p)) return exit_check_failed;
  const FaceLattice lattice = core::to_face_lattice(p);
  bool ok = true;
  const auto audit = nikulin::audit(lattice);
  for (const auto& r : audit.records) {
    const std::string tag = "a_" + std::to_string(r.k) + "^" + std::to_string(r.l);
    const char* state = r.strict_ok ? "below" : (r.average == r.bound ? "boundary" : "EXCEEDS");
    out.line(tag + " = " + to_string(r.average) + ", bound " + to_string(r.bound) + ": " + state);
    out.kv(tag + ".average", to_string(r.average));
    out.kv(tag + ".bound", to_string(r.bound));
    out.kv(tag + ".state", state);
    if (r.average > r.bound) ok = false;
  }
  const auto small = nikulin::check_small(lattice);
  for (const auto& q : small.inequalities) {
    out.line(q.name + ": " + q.lhs.str() + " vs " + q.rhs.str() + " " + (q.ok ? "ok" : "FAIL"));
    out.kv(q.name, q.ok ? "ok" : "fail");
  }
  ok = ok && small.ok();
  out.line(std::string("nikulin: ") + okfail(ok));
  out.kv("status", okfail(ok));
  return ok ? exit_ok : exit_check_failed;
}

// ---------------------------------------------------------------------------
// enumeration cache

std::string hex_to_bytes(const std::string& hex) {
  if (hex.size() % 2) throw PreconditionError("odd-length code");
  std::string bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const auto digit = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      throw PreconditionError("bad hex digit");
    };
    bytes.push_back(static_cast<char>(digit(hex[i]) * 16 + digit(hex[i + 1])));
  }
  return bytes;
}

std::string filter_name(enum3::Filter f) {
  return f == enum3::Filter::right_angled ? "right-angled" : "all-almost-simple";
}

fs::path run_directory(const std::string& out_dir, const enum3::EnumSpec& spec) {
  if (!out_dir.empty()) return out_dir;
  return fs::path(cache_root()) / ("f" + std::to_string(spec.max_faces) + "-c" +
                                   std::to_string(spec.num_cusps) + "-" + filter_name(spec.filter));
}

void write_cache(const fs::path& dir, const enum3::EnumReport& report) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("t_", 0) == 0 && entry.path().extension() == ".poly3") fs::remove(entry.path());
  }
  std::ofstream index(dir / "index.txt");
  if (!index) throw IoError("cannot write " + (dir / "index.txt").string());
  for (const auto& t : report.types) {
    const fs::path path = dir / type_file_name(t.code);
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path.string());
    f << core::format_poly3(t.polyhedron, "faces " + std::to_string(t.faces) + ", code " + t.code.hex());
    index << t.code.hex() << '\n';
  }
}

int check_cache(Sink& out, const fs::path& dir, const enum3::EnumSpec& spec) {
  const std::string text = read_file((dir / "index.txt").string());
  std::vector<std::string> codes;
  std::istringstream in(text);
  for (std::string s; std::getline(in, s);)
    if (!s.empty()) codes.push_back(s);

  std::vector<std::string> problems;
  if (!std::is_sorted(codes.begin(), codes.end())) problems.push_back("index not sorted");
  if (std::adjacent_find(codes.begin(), codes.end()) != codes.end())
    problems.push_back("index has repeated codes");

  std::set<std::string> expected_files;
  std::map<int, long> per_faces;
  for (const auto& hex : codes) {
    core::CanonicalCode code;
    try {
      code.bytes = hex_to_bytes(hex);
    } catch (const PreconditionError&) {
      problems.push_back("malformed index line " + hex);
      continue;
    }
    const std::string name = type_file_name(code);
    expected_files.insert(name);
    core::Polyhedron3 p;
    try {
      p = core::parse_poly3(read_file((dir / name).string()));
    } catch (const std::exception& e) {
      problems.push_back(name + ": " + e.what());
      continue;
    }
    if (core::canonical_code(p).hex() != hex) problems.push_back(name + ": code mismatch");
    if (!core::validate(p, core::DegreeProfile::right_angled()).ok())
      problems.push_back(name + ": not almost simple");
    if (p.ideal_count() != spec.num_cusps) problems.push_back(name + ": wrong cusp count");
    if (p.face_count() > spec.max_faces) problems.push_back(name + ": over the face budget");
    if (spec.filter == enum3::Filter::right_angled &&
        andreev::check_right_angled(p).verdict != andreev::Verdict::pass)
      problems.push_back(name + ": fails check_right_angled");
    ++per_faces[p.face_count()];
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("t_", 0) == 0 && entry.path().extension() == ".poly3" && !expected_files.count(name))
      problems.push_back(name + ": not in index");
  }
  for (const auto& [f, c] : per_faces) {
    out.line("F=" + std::to_string(f) + " " + std::to_string(c));
    out.kv("cached.F" + std::to_string(f), c);
  }
  for (const auto& p : problems) {
    out.line("problem: " + p);
    out.kv("problem", p);
  }
  out.line("cache " + std::string(problems.empty() ? "OK" : "FAIL") + ": " +
           std::to_string(codes.size()) + " types");
  out.kv("cache", problems.empty() ? "ok" : "fail");
  out.kv("types", codes.size());
  return problems.empty() ? exit_ok : exit_check_failed;
}

int cmd_enumerate(Sink& out, const enum3::EnumSpec& spec, const std::string& out_dir, bool verify) {
  const fs::path dir = run_directory(out_dir, spec);
  out.line("faces<=" + std::to_string(spec.max_faces) + " cusps=" + std::to_string(spec.num_cusps) +
           " filter=" + filter_name(spec.filter));
  out.kv("max_faces", spec.max_faces);
  out.kv("cusps", spec.num_cusps);
  out.kv("filter", filter_name(spec.filter));
  if (verify) return check_cache(out, dir, spec);

  const auto report = enum3::enumerate(spec);
  for (const auto& [f, c] : report.accepted) {
    std::string s = "F=" + std::to_string(f) + " " + std::to_string(c);
    const long np = report.non_polyhedral.at(f);
    if (np) s += " (not 3-connected: " + std::to_string(np) + ", passing " +
                 std::to_string(report.non_polyhedral_passing.at(f)) + ")";
    out.line(s);
    out.kv("count.F" + std::to_string(f), c);
    out.kv("candidates.F" + std::to_string(f), report.candidates.at(f));
    out.kv("non3connected.F" + std::to_string(f), np);
    out.kv("non3connected_passing.F" + std::to_string(f), report.non_polyhedral_passing.at(f));
  }
  if (spec.num_cusps == 2) {
    std::map<int, long> by_t;
    for (const auto& t : report.types) ++by_t[t.both_cusp_faces];
    for (const auto& [t, c] : by_t) {
      out.line("t=" + std::to_string(t) + " " + std::to_string(c));
      out.kv("class.t" + std::to_string(t), c);
    }
  }
  out.line("total " + std::to_string(report.types.size()));
  out.kv("total", report.types.size());
  write_cache(dir, report);
  out.line("cache " + dir.string());
  out.kv("cache", dir.string());
  return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

bool verify_tables(Sink& out) {
  using cusplink::SecondCusp;
  struct Item {
    const char* name;
    SecondCusp which;
    std::vector<cusplink::TripleRow> rows;
  };
  const std::vector<Item> items = {{"table1", SecondCusp::face2, cusplink::table1()},
                                   {"table2", SecondCusp::edge, cusplink::table2()},
                                   {"case41", SecondCusp::face3, cusplink::case41_rows()}};
  bool ok = true;
  for (const auto& it : items) {
    const auto r = cusplink::verify_table(it.which, it.rows);
    out.line(std::string(it.name) + ": " + std::to_string(r.rows) + " rows " + okfail(r.ok()) + ", " +
             std::to_string(r.distinct_faces) + " distinct faces avoiding " +
             cusplink::carrier(it.which).to_string());
    for (const auto& p : r.problems) out.line("  " + p);
    out.kv(std::string(it.name) + ".rows", r.rows);
    out.kv(std::string(it.name) + ".distinct_faces", r.distinct_faces);
    out.kv(std::string(it.name) + ".status", okfail(r.ok()));
    ok = ok && r.ok();
  }
  return ok;
}

bool verify_lemma31(Sink& out, int workers) {
  const auto r = enum3::verify_lemma31(workers);
  out.line(r.summary());
  out.line("face sizes: " + join(r.face_sizes));
  out.line("quadrilaterals non-adjacent: " + yes(r.quads_non_adjacent));
  out.line("equals contracted dodecahedron: " + yes(r.matches_contracted_dodecahedron));
  out.line("right-angled check: " + std::string(r.passes_right_angled ? "pass" : "fail"));
  out.line("lemma31: " + okfail(r.ok()));
  out.kv("lemma31.below_twelve", r.below_twelve());
  out.kv("lemma31.at_twelve", r.at_twelve());
  out.kv("lemma31.face_sizes", join(r.face_sizes));
  out.kv("lemma31.cusp_face_sizes", join(r.cusp_face_sizes));
  out.kv("lemma31.quads_non_adjacent", yes(r.quads_non_adjacent));
  out.kv("lemma31.contracted_dodecahedron", yes(r.matches_contracted_dodecahedron));
  out.kv("lemma31.right_angled", yes(r.passes_right_angled));
  out.kv("lemma31.status", okfail(r.ok()));
  return r.ok();
}

bool verify_minima(Sink& out, int budget, int workers) {
  const auto r = enum3::two_cusp_minima(budget, workers);
  for (const auto& [t, floor] : r.floor) {
    const auto s = r.smallest(t);
    std::string line = "t=" + std::to_string(t) + ": floor " + std::to_string(floor) + ", ";
    line += s ? "smallest F=" + std::to_string(*s) : "none with F<=" + std::to_string(budget);
    out.line(line);
    out.kv("minima.t" + std::to_string(t) + ".floor", floor);
    out.kv("minima.t" + std::to_string(t) + ".smallest", s ? std::to_string(*s) : "none");
  }
  for (const auto& v : r.violations) {
    out.line("  violation: " + v);
    out.kv("minima.violation", v);
  }
  out.line("minima (budget " + std::to_string(budget) + "): " + okfail(r.ok()));
  out.kv("minima.budget", budget);
  out.kv("minima.status", okfail(r.ok()));
  return r.ok();
}

bool verify_n7(Sink& out) {
  const auto c = bounds::n7_certificate();
  bool ok = c.steps.size() == 16 && c.bound == 17;
  for (const auto& s : c.steps) {
    out.line("m=" + std::to_string(s.m) + ": 240-15(m-1)=" + s.one_cusp_faces.str() +
             ", polynomial(2,m)=" + s.polynomial.str() + (s.ruled_out ? " ruled out" : " OPEN"));
    out.kv("n7.m" + std::to_string(s.m) + ".one_cusp_faces", s.one_cusp_faces.str());
    out.kv("n7.m" + std::to_string(s.m) + ".polynomial", s.polynomial.str());
    ok = ok && s.ruled_out;
  }
  for (long l = 2; l <= 40 && ok; ++l)
    for (long m = l; m <= 40; ++m)
      if (2 * bounds::n7_preform(l, m) != Rational(bounds::n7_polynomial(l, m))) ok = false;
  out.line("2*preform = polynomial on 2<=l<=m<=40: " + yes(ok));
  out.line("c(Q^7) >= " + std::to_string(c.bound));
  out.line("n7: " + okfail(ok));
  out.kv("n7.bound", c.bound);
  out.kv("n7.status", okfail(ok));
  return ok;
}

bool verify_fixtures(Sink& out) {
  const std::vector<std::pair<const char*, core::Polyhedron3>> fixtures = {
      {"tetrahedron", core::tetrahedron()},   {"triangular-prism", core::triangular_prism()},
      {"square-pyramid", core::square_pyramid()}, {"cube", core::cube()},
      {"dodecahedron", core::dodecahedron()}, {"contracted-dodecahedron", core::contracted_dodecahedron()}};
  bool ok = true;
  for (const auto& [name, p] : fixtures) {
    const bool valid = core::validate(p).valid();
    ok = ok && valid;
    out.line(std::string("fixture ") + name + ": " + (valid ? "valid" : "INVALID"));
    out.kv(std::string("fixture.") + name, valid ? "valid" : "invalid");
  }
  return ok;
}

bool verify_pins(Sink& out) {
  const bool six = nikulin::nikulin_rhs(6, 3, 2) == 12;
  const bool seven = nikulin::nikulin_rhs(7, 3, 2) == 9;
  out.line("nikulin(6,3,2) = " + to_string(nikulin::nikulin_rhs(6, 3, 2)) + " " + okfail(six));
  out.line("nikulin(7,3,2) = " + to_string(nikulin::nikulin_rhs(7, 3, 2)) + " " + okfail(seven));
  out.kv("pin.nikulin_6_3_2", okfail(six));
  out.kv("pin.nikulin_7_3_2", okfail(seven));
  return six && seven;
}

void render_bounds(Sink& out, const bounds::BoundsCertificate& cert, bool certificate) {
  for (const auto& e : cert.entries) {
    out.line("n=" + std::to_string(e.n) + " c>=" + std::to_string(e.bound));
    out.kv("bound.n" + std::to_string(e.n), e.bound);
    if (certificate)
      for (std::size_t i = 0; i < e.trail.size(); ++i) {
        out.line("  " + e.trail[i]);
        out.kv("trail.n" + std::to_string(e.n) + "." + std::to_string(i), e.trail[i]);
      }
  }
}

int cmd_verify(Sink& out, const std::string& what, int budget, int workers) {
  if (what == "lemma31") return verify_lemma31(out, workers) ? exit_ok : exit_check_failed;
  if (what == "tables") return verify_tables(out) ? exit_ok : exit_check_failed;
  if (what == "minima") return verify_minima(out, budget, workers) ? exit_ok : exit_check_failed;
  if (what == "n7") return verify_n7(out) ? exit_ok : exit_check_failed;

  std::vector<std::pair<std::string, bool>> stages;
  stages.emplace_back("fixtures", verify_fixtures(out));
  stages.emplace_back("tables", verify_tables(out));
  stages.emplace_back("lemma31", verify_lemma31(out, workers));
  stages.emplace_back("minima", verify_minima(out, budget, workers));
  stages.emplace_back("nikulin", verify_pins(out));
  const auto cert = bounds::main_bounds();
  render_bounds(out, cert, false);
  stages.emplace_back("bounds", cert.ok());
  bool all = true;
  for (const auto& [name, ok] : stages) {
    out.line("stage " + name + ": " + okfail(ok));
    out.kv("stage." + name, okfail(ok));
    all = all && ok;
  }
  out.line("all: " + okfail(all));
  out.kv("all", okfail(all));
  return all ? exit_ok : exit_check_failed;
}

int cmd_bounds(Sink& out, bool certificate) {
  const auto cert = bounds::main_bounds();
  render_bounds(out, cert, certificate);
  return cert.ok() ? exit_ok : exit_check_failed;
}

}  // namespace

std::string cache_root() {
  if (const char* env = std::getenv("ORTHOCUSP_CACHE"); env && *env) return env;
  return ".orthocusp-cache";
}

std::string code_hash(const core::CanonicalCode& code) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : code.bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

std::string type_file_name(const core::CanonicalCode& code) { return "t_" + code_hash(code) + ".poly3"; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial checks for right-angled hyperbolic polyhedra with cusps", "orthocusp"};
  app.require_subcommand(1);
  app.fallthrough();

  bool machine = false;
  int workers = 0;
  app.add_flag("--machine", machine, "emit key=value records instead of text");
  app.add_option("--workers", workers, "worker threads for enumeration (default: all cores)")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> files;
  bool profile = false;
  auto* validate = app.add_subcommand("validate", "structural checks on POLY3 files");
  validate->add_option("files", files, "POLY3 files")->required();
  validate->add_flag("--right-angled-profile", profile,
                     "also require finite vertices of degree 3 and cusps of degree 4");

  std::string file, angles_file;
  bool right = false;
  auto* andreev_cmd = app.add_subcommand("andreev", "acute-angle realizability conditions");
  andreev_cmd->add_option("file", file, "POLY3 file")->required();
  auto* angles_opt = andreev_cmd->add_option("--angles", angles_file, "angle file (angle: u v p q)");
  auto* right_opt = andreev_cmd->add_flag("--right-angled", right, "every dihedral angle pi/2");
  angles_opt->excludes(right_opt);

  auto* ra = app.add_subcommand("right-angled", "right-angled conditions on a POLY3 file");
  ra->add_option("file", file, "POLY3 file")->required();

  int n = 0, k = 0, l = 0;
  auto* nik = app.add_subcommand("nikulin", "face-average bound, or audit of a POLY3 file");
  auto* n_opt = nik->add_option("--n", n, "dimension");
  auto* k_opt = nik->add_option("--k", k, "face dimension k");
  auto* l_opt = nik->add_option("--l", l, "face dimension l < k");
  auto* nfile_opt = nik->add_option("file", file, "POLY3 file to audit");
  n_opt->excludes(nfile_opt);

  enum3::EnumSpec spec;
  bool realizable = false, verify_cache = false;
  std::string out_dir;
  auto* en = app.add_subcommand("enumerate", "generate combinatorial types with cusps");
  en->add_option("--faces", spec.max_faces, "face budget")->required()->check(CLI::PositiveNumber);
  en->add_option("--cusps", spec.num_cusps, "number of cusps (0, 1 or 2)")
      ->required()
      ->check(CLI::Range(0, 2));
  en->add_flag("--realizable", realizable, "keep only types passing the right-angled conditions");
  en->add_option("--out", out_dir, "output directory (default: $ORTHOCUSP_CACHE/<run>)");
  en->add_flag("--check-cache", verify_cache, "verify an existing cache instead of regenerating");
  en->add_option("--cap", spec.hard_cap, "face budget cap")->capture_default_str();

  std::string what;
  int budget = 10;
  auto* ver = app.add_subcommand("verify", "run a verification stage");
  ver->add_option("stage", what, "lemma31, tables, minima, n7 or all")
      ->required()
      ->check(CLI::IsMember({"lemma31", "tables", "minima", "n7", "all"}));
  ver->add_option("--budget", budget, "face budget for the two-cusp minima")
      ->capture_default_str()
      ->check(CLI::Range(4, 13));

  bool certificate = false;
  auto* bnd = app.add_subcommand("bounds", "lower bounds on the number of cusps");
  bnd->add_flag("--certificate", certificate, "print the arithmetic trail");

  std::vector<const char*> argv{"orthocusp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Sink sink(out, machine);
  try {
    if (*validate) return cmd_validate(sink, files, profile);
    if (*andreev_cmd) {
      if (!right && angles_file.empty()) {
        err << "andreev: give --angles FILE or --right-angled\n";
        return exit_usage;
      }
      return cmd_andreev(sink, file, angles_file, right);
    }
    if (*ra) return cmd_right_angled(sink, file);
    if (*nik) {
      if (!file.empty()) return cmd_nikulin_file(sink, file);
      if (!*n_opt || !*k_opt || !*l_opt) {
        err << "nikulin: give --n --k --l or a POLY3 file\n";
        return exit_usage;
      }
      return cmd_nikulin_formula(sink, n, k, l);
    }
    if (*en) {
      spec.filter = realizable ? enum3::Filter::right_angled : enum3::Filter::all_almost_simple;
      spec.workers = workers;
      if (spec.max_faces > spec.hard_cap) {
        err << "enumerate: --faces " << spec.max_faces << " exceeds cap " << spec.hard_cap << "\n";
        return exit_usage;
      }
      return cmd_enumerate(sink, spec, out_dir, verify_cache);
    }
    if (*ver) return cmd_verify(sink, what, budget, workers);
    if (*bnd) return cmd_bounds(sink, certificate);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace orthocusp::cli
