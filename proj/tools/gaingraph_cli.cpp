#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaingraph/analysis.hpp"
#include "gaingraph/bounds.hpp"
#include "gaingraph/coefficients.hpp"
#include "gaingraph/elementary.hpp"
#include "gaingraph/errors.hpp"
#include "gaingraph/generate.hpp"
#include "gaingraph/io.hpp"
#include "gaingraph/linalg.hpp"

namespace gg = gaingraph;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  double tol = 1e-9;
  int max_n = 14;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool degrees = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gg::ParseError(path + ": cannot open file");
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

// FNV-1a over the raw input bytes; ties a report to the exact file contents.
std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

gg::GraphDocument load_doc(const std::string& path, const Options& opt, std::string* digest) {
  std::string text = read_file(path);
  if (digest) *digest = fnv1a_hex(text);
  gg::GraphDocument doc = gg::parse_document(text, gg::GraphFormat::kAuto, path);
  if (opt.degrees)
    for (gg::GraphRecord& rec : doc.edges) rec.theta_pi /= 180.0;
  return doc;
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar_array(const ordered_json& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const ordered_json& e) { return !e.is_object() && !e.is_array(); });
}

void render_text(const ordered_json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << prefix << key << ":\n";
      render_text(value, prefix + "  ", out);
    } else if (value.is_array() && !is_scalar_array(value)) {
      out << prefix << key << ":\n";
      for (const auto& element : value) {
        out << prefix << "  -\n";
        render_text(element, prefix + "    ", out);
      }
    } else if (value.is_array()) {
      out << prefix << key << ": [";
      bool first = true;
      for (const auto& element : value) {
        if (!first) out << ", ";
        out << scalar_text(element);
        first = false;
      }
      out << "]\n";
    } else {
      out << prefix << key << ": " << scalar_text(value) << "\n";
    }
  }
}

// Accumulates a report plus its pass/fail verdicts; the exit code is 1 as
// soon as any recorded assertion fails.
struct ReportBuilder {
  ordered_json body = ordered_json::object();
  ordered_json assertions = ordered_json::array();
  bool ok = true;

  void assert_that(const std::string& name, bool passed,
                   const ordered_json& details = ordered_json()) {
    ordered_json a;
    a["name"] = name;
    a["passed"] = passed;
    if (details.is_object())
      for (const auto& [k, v] : details.items()) a[k] = v;
    assertions.push_back(a);
    ok = ok && passed;
  }

  void skip(const std::string& name, const std::string& why) {
    ordered_json a;
    a["name"] = name;
    a["skipped"] = why;
    assertions.push_back(a);
  }

  int finish(const Options& opt) {
    body["assertions"] = assertions;
    body["all_passed"] = ok;
    if (opt.format == "json")
      std::cout << body.dump(2) << "\n";
    else
      render_text(body, "", std::cout);
    return ok ? 0 : 1;
  }
};

ordered_json header(const std::string& command, const Options& opt) {
  ordered_json j;
  j["command"] = command;
  j["tol"] = opt.tol;
  return j;
}

void describe_input(ordered_json& body, const std::string& path, const std::string& digest,
                    const gg::GraphDocument& doc, const gg::GainGraph& g) {
  body["input"] = path;
  body["digest"] = digest;
  if (!doc.name.empty()) body["name"] = doc.name;
  body["n"] = g.vertex_count();
  body["m"] = g.edge_count();
}

std::vector<double> angles_of(const gg::SwitchingFunction& zeta) {
  std::vector<double> out;
  out.reserve(zeta.size());
  for (gg::UnitGain z : zeta) out.push_back(z.theta_pi());
  return out;
}

double coefficient_scale(const gg::RealPolynomial& p) {
  double scale = 1.0;
  for (double c : p.coefficients()) scale = std::max(scale, std::fabs(c));
  return scale;
}

// Rotate the smallest vertex to the front and fix the direction so reported
// cycle gains do not depend on traversal order.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() >= 3 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

bool same_angles(const gg::GainGraph& a, const gg::GainGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (int i = 0; i < a.edge_count(); ++i) {
    const gg::GainEdge& x = a.edges()[static_cast<size_t>(i)];
    const gg::GainEdge& y = b.edges()[static_cast<size_t>(i)];
    if (x.u != y.u || x.v != y.v || x.gain.theta_pi() != y.gain.theta_pi()) return false;
  }
  return true;
}

int cmd_spectrum(const std::string& path, const Options& opt) {
  std::string digest;
  gg::GraphDocument doc = load_doc(path, opt, &digest);
  gg::GainGraph g = doc.to_graph();
  gg::Spectrum spec = gg::eigenvalues(gg::adjacency_matrix(g));

  ReportBuilder rb;
  rb.body = header("spectrum", opt);
  describe_input(rb.body, path, digest, doc, g);
  rb.body["eigenvalues"] = spec.values();
  if (spec.size() > 0) {
    rb.body["lambda_max"] = spec.lambda_max();
    rb.body["lambda_min"] = spec.lambda_min();
    rb.body["spectral_radius"] = spec.spectral_radius();
  }
  rb.body["spectrum_symmetric"] = gg::spectrum_symmetric(spec, opt.tol);

  double scale = std::max(1.0, 2.0 * g.edge_count());
  rb.assert_that("eigenvalue sum matches the zero trace", std::fabs(spec.sum()) <= opt.tol * scale,
                 {{"sum", spec.sum()}});
  rb.assert_that("eigenvalue square sum matches twice the edge count",
                 std::fabs(spec.sum_squares() - 2.0 * g.edge_count()) <= opt.tol * scale,
                 {{"sum_squares", spec.sum_squares()}});
  return rb.finish(opt);
}

int cmd_charpoly(const std::string& path, const Options& opt) {
  std::string digest;
  gg::GraphDocument doc = load_doc(path, opt, &digest);
  gg::GainGraph g = doc.to_graph();
  gg::RealPolynomial numeric = gg::char_poly_numeric(g);
  gg::RealPolynomial combinatorial = gg::char_coeffs_combinatorial(g, opt.max_n);
  double diff = numeric.max_coefficient_difference(combinatorial);
  double threshold = opt.tol * coefficient_scale(combinatorial);

  ReportBuilder rb;
  rb.body = header("charpoly", opt);
  describe_input(rb.body, path, digest, doc, g);
  rb.body["numeric_coefficients"] = numeric.coefficients();
  rb.body["combinatorial_coefficients"] = combinatorial.coefficients();
  rb.body["max_discrepancy"] = diff;
  rb.body["polynomial"] = combinatorial.str();
  rb.assert_that("numeric coefficients match combinatorial", diff <= threshold,
                 {{"threshold", threshold}});
  return rb.finish(opt);
}

int cmd_permpoly(const std::string& path, const Options& opt) {
  std::string digest;
  gg::GraphDocument doc = load_doc(path, opt, &digest);
  gg::GainGraph g = doc.to_graph();
  gg::RealPolynomial numeric = gg::perm_poly_numeric(g, std::min(opt.max_n, gg::kPermPolyCap));
  gg::RealPolynomial combinatorial = gg::perm_coeffs_combinatorial(g, opt.max_n);
  double diff = numeric.max_coefficient_difference(combinatorial);
  double threshold = opt.tol * coefficient_scale(combinatorial);

  ReportBuilder rb;
  rb.body = header("permpoly", opt);
  describe_input(rb.body, path, digest, doc, g);
  rb.body["numeric_coefficients"] = numeric.coefficients();
  rb.body["combinatorial_coefficients"] = combinatorial.coefficients();
  rb.body["max_discrepancy"] = diff;
  rb.body["polynomial"] = combinatorial.str();
  rb.assert_that("numeric coefficients match combinatorial", diff <= threshold,
                 {{"threshold", threshold}});
  return rb.finish(opt);
}

int cmd_balance(const std::string& path, const Options& opt) {
  std::string digest;
  gg::GraphDocument doc = load_doc(path, opt, &digest);
  gg::GainGraph g = doc.to_graph();

  ReportBuilder rb;
  rb.body = header("balance", opt);
  describe_input(rb.body, path, digest, doc, g);

  auto potential = gg::balance_potential(g);
  rb.body["balanced"] = static_cast<bool>(potential);
  rb.body["antibalanced"] = gg::is_balanced(gg::negated(g));

  gg::SpanningForest forest = gg::spanning_forest(g);
  bool all_neutral = true;
  ordered_json cycles = ordered_json::array();
  for (int e : forest.cotree_edges) {
    std::vector<int> cycle = canonical_cycle(gg::fundamental_cycle(g, forest, e));
    gg::UnitGain gain = gg::cycle_gain(g, cycle);
    all_neutral = all_neutral && gain.is_neutral(1e-12);
    ordered_json c;
    c["vertices"] = cycle;
    c["gain_theta_pi"] = gain.theta_pi();
    c["gain_re"] = gain.re();
    c["gain_im"] = gain.im();
    cycles.push_back(c);
  }
  rb.body["fundamental_cycles"] = cycles;

  if (potential) {
    rb.body["potential_theta_pi"] = angles_of(*potential);
    bool reproduces = true;
    for (const gg::GainEdge& e : g.edges()) {
      gg::UnitGain expect = (*potential)[static_cast<size_t>(e.u)].inverse() *
                            (*potential)[static_cast<size_t>(e.v)];
      reproduces = reproduces && expect.approx_equal(e.gain, 1e-9);
    }
    rb.assert_that("potential reproduces every gain", reproduces);
  }
  rb.assert_that("balance agrees with the fundamental cycle gains",
                 static_cast<bool>(potential) == all_neutral);
  return rb.finish(opt);
}

int cmd_bounds(const std::string& path, const Options& opt) {
  std::string digest;
  gg::GraphDocument doc = load_doc(path, opt, &digest);
  gg::GainGraph g = doc.to_graph();
  gg::BoundsReport r = gg::bounds_report(g, opt.tol);

  ReportBuilder rb;
  rb.body = header("bounds", opt);
  describe_input(rb.body, path, digest, doc, g);
  rb.body["lambda_1"] = r.lambda_1;
  rb.body["lambda_n"] = r.lambda_n;
  rb.body["sigma"] = r.sigma;
  rb.body["lambda_1_interval"] = {r.lambda_1_interval.lo, r.lambda_1_interval.hi};
  rb.body["lambda_n_interval"] = {r.lambda_n_interval.lo, r.lambda_n_interval.hi};
  rb.body["triangle_lower_bound"] = r.triangle_lower_bound;
  rb.body["degree_pair_lower_bound"] = r.degree_pair_lower_bound;
  rb.assert_that("all bounds satisfied", r.all_satisfied);
  return rb.finish(opt);
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const Options& opt) {
  std::string digest_a, digest_b;
  gg::GraphDocument doc_a = load_doc(path_a, opt, &digest_a);
  gg::GraphDocument doc_b = load_doc(path_b, opt, &digest_b);
  gg::GainGraph a = doc_a.to_graph();
  gg::GainGraph b = doc_b.to_graph();

  ReportBuilder rb;
  rb.body = header("compare", opt);
  ordered_json first, second;
  describe_input(first, path_a, digest_a, doc_a, a);
  describe_input(second, path_b, digest_b, doc_b, b);
  rb.body["first"] = first;
  rb.body["second"] = second;

  bool same_size = a.vertex_count() == b.vertex_count();
  bool cospectral = false;
  if (same_size) {
    gg::Spectrum sa = gg::eigenvalues(gg::adjacency_matrix(a));
    gg::Spectrum sb = gg::eigenvalues(gg::adjacency_matrix(b));
    cospectral = gg::spectra_equal(sa, sb, opt.tol);
  }
  rb.body["spectra_equal"] = cospectral;

  bool same_structure = same_size && a.edge_count() == b.edge_count();
  if (same_structure)
    for (int i = 0; i < a.edge_count() && same_structure; ++i) {
      const gg::GainEdge& x = a.edges()[static_cast<size_t>(i)];
      const gg::GainEdge& y = b.edges()[static_cast<size_t>(i)];
      same_structure = x.u == y.u && x.v == y.v;
    }
  rb.body["same_underlying_graph"] = same_structure;

  if (same_structure) {
    auto witness = gg::switching_equivalent(a, b);
    rb.body["switching_equivalent"] = static_cast<bool>(witness);
    if (witness) {
      rb.body["switching_witness_theta_pi"] = angles_of(*witness);
      gg::GainGraph image = gg::switched(a, *witness);
      bool transforms = true;
      for (int i = 0; i < b.edge_count(); ++i) {
        const gg::GainEdge& x = image.edges()[static_cast<size_t>(i)];
        const gg::GainEdge& y = b.edges()[static_cast<size_t>(i)];
        transforms = transforms && x.gain.approx_equal(y.gain, 1e-9);
      }
      rb.assert_that("witness transforms the first graph into the second", transforms);
    }
  } else {
    rb.body["switching_equivalent"] = false;
  }
  return rb.finish(opt);
}

int cmd_check(const std::string& path, const Options& opt) {
  std::string digest;
  gg::GraphDocument doc = load_doc(path, opt, &digest);
  gg::GainGraph g = doc.to_graph();
  const int n = g.vertex_count();

  ReportBuilder rb;
  rb.body = header("check", opt);
  describe_input(rb.body, path, digest, doc, g);

  gg::ComplexMatrix a = gg::adjacency_matrix(g);
  rb.assert_that("adjacency matrix is hermitian",
                 a.hermitian_defect() <= 1e-10 * std::max(1.0, a.max_abs()));

  gg::Spectrum spec = gg::eigenvalues(a);
  rb.body["eigenvalues"] = spec.values();

  {
    gg::GraphDocument snapshot = gg::GraphDocument::from_graph(g);
    gg::GainGraph via_json =
        gg::parse_document(gg::serialize_document(snapshot, gg::GraphFormat::kJson),
                           gg::GraphFormat::kJson)
            .to_graph();
    gg::GainGraph via_text =
        gg::parse_document(gg::serialize_document(snapshot, gg::GraphFormat::kEdgeList),
                           gg::GraphFormat::kEdgeList)
            .to_graph();
    rb.assert_that("serializer round trips are exact",
                   same_angles(g, via_json) && same_angles(g, via_text));
  }

  if (n >= 2) {
    gg::BoundsReport br = gg::bounds_report(g, opt.tol);
    rb.assert_that("edge-count, triangle and degree-pair bounds hold", br.all_satisfied,
                   {{"lambda_1", br.lambda_1},
                    {"lambda_n", br.lambda_n},
                    {"triangle_lower_bound", br.triangle_lower_bound},
                    {"degree_pair_lower_bound", br.degree_pair_lower_bound}});
    gg::ExtremeBounds wb = gg::wolkowicz_bounds(a);
    rb.assert_that("mean-spread intervals enclose the extreme eigenvalues",
                   wb.lambda_1.contains(spec.lambda_max(), opt.tol) &&
                       wb.lambda_n.contains(spec.lambda_min(), opt.tol));

    // Interlacing on one seeded principal submatrix.
    std::mt19937_64 rng(opt.seed);
    int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    std::vector<int> keep(static_cast<size_t>(n));
    std::iota(keep.begin(), keep.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(keep[static_cast<size_t>(i)], keep[rng() % static_cast<std::uint64_t>(i + 1)]);
    keep.resize(static_cast<size_t>(r));
    std::sort(keep.begin(), keep.end());
    gg::Spectrum sub = gg::eigenvalues(a.principal_submatrix(keep));
    bool interlaced = true;
    for (int i = 0; i < r; ++i) {
      double hi = spec.values()[static_cast<size_t>(i)];
      double lo = spec.values()[static_cast<size_t>(i + n - r)];
      double mu = sub.values()[static_cast<size_t>(i)];
      interlaced = interlaced && mu <= hi + opt.tol && mu >= lo - opt.tol;
    }
    ordered_json details;
    details["submatrix"] = keep;
    rb.assert_that("principal submatrix eigenvalues interlace", interlaced, details);
  } else {
    rb.skip("eigenvalue bounds", "need at least two vertices");
  }

  if (n <= opt.max_n) {
    gg::RealPolynomial comb = gg::char_coeffs_combinatorial(g, opt.max_n);
    gg::RealPolynomial numeric = gg::char_poly_numeric(g);
    double diff = numeric.max_coefficient_difference(comb);
    rb.assert_that("characteristic coefficients: combinatorial matches numeric",
                   diff <= opt.tol * coefficient_scale(comb), {{"max_discrepancy", diff}});

    double det_num = 1.0;
    for (double v : spec.values()) det_num *= v;
    double det_comb = gg::det_combinatorial(g, opt.max_n);
    rb.assert_that("determinant matches the top coefficient",
                   std::fabs(det_num - det_comb) <=
                       opt.tol * std::max(1.0, std::fabs(det_comb)),
                   {{"determinant", det_comb}});

    gg::RealPolynomial pcomb = gg::perm_coeffs_combinatorial(g, opt.max_n);
    if (n <= gg::kPermPolyCap) {
      gg::RealPolynomial pnum = gg::perm_poly_numeric(g);
      double pdiff = pnum.max_coefficient_difference(pcomb);
      rb.assert_that("permanental coefficients: combinatorial matches numeric",
                     pdiff <= opt.tol * coefficient_scale(pcomb), {{"max_discrepancy", pdiff}});
    } else {
      rb.skip("permanental coefficients: combinatorial matches numeric",
              "order exceeds the dense permanental cap");
    }
    if (n <= gg::kPermanentCap) {
      std::complex<double> per = gg::permanent(a);
      double per_comb = gg::per_combinatorial(g, opt.max_n);
      rb.assert_that("permanent matches the top coefficient",
                     std::fabs(per.imag()) <= 1e-9 &&
                         std::fabs(per.real() - per_comb) <=
                             opt.tol * std::max(1.0, std::fabs(per_comb)),
                     {{"permanent", per_comb}});
    } else {
      rb.skip("permanent matches the top coefficient", "order exceeds the permanent cap");
    }
  } else {
    rb.skip("coefficient cross-checks", "order exceeds the enumeration cap");
  }

  if (n >= 1 && gg::is_connected(g)) {
    double char_tol = std::max(opt.tol, 1e-8);
    gg::BalanceReport balance = gg::rho_comparison(g, char_tol);
    rb.body["balanced"] = balance.balanced;
    rb.body["antibalanced"] = balance.antibalanced;
    rb.assert_that("spectral radius equality characterizes balance or antibalance",
                   balance.radius_equal_numeric == (balance.balanced || balance.antibalanced),
                   {{"rho", balance.rho_phi}, {"rho_underlying", balance.rho_g}});
    rb.assert_that("cospectrality with the underlying graph characterizes balance",
                   gg::cospectrality_check(g, char_tol) == balance.balanced);
  } else {
    rb.skip("balance characterizations", "graph is not connected");
  }

  if (n <= opt.max_n) {
    gg::SymmetryReport sym = gg::symmetry_analysis(g, std::max(opt.tol, 1e-9), opt.max_n);
    rb.body["spectrum_symmetric"] = sym.spectrum_symmetric;
    rb.body["bipartite"] = sym.bipartite;
    rb.assert_that("spectrum symmetry is consistent with odd cycle structure", sym.consistent);
  } else {
    rb.skip("spectrum symmetry analysis", "order exceeds the enumeration cap");
  }

  return rb.finish(opt);
}

int cmd_generate(const std::string& family, int n, int q, double edge_prob,
                 const std::string& gains, double theta, const std::string& out_path,
                 const std::string& name, const Options& opt) {
  gg::GenerateOptions gen;
  if (family == "gnp")
    gen.family = gg::Family::kGnp;
  else if (family == "tree")
    gen.family = gg::Family::kTree;
  else if (family == "cycle")
    gen.family = gg::Family::kCycle;
  else if (family == "complete")
    gen.family = gg::Family::kComplete;
  else if (family == "complete-bipartite")
    gen.family = gg::Family::kCompleteBipartite;
  else if (family == "star-of-triangles")
    gen.family = gg::Family::kStarOfTriangles;
  else
    throw std::invalid_argument("generate: unknown family '" + family + "'");

  if (gains == "uniform")
    gen.gain_mode = gg::GainMode::kUniform;
  else if (gains == "fourth-roots")
    gen.gain_mode = gg::GainMode::kFourthRoots;
  else if (gains == "constant")
    gen.gain_mode = gg::GainMode::kConstant;
  else
    throw std::invalid_argument("generate: unknown gain mode '" + gains + "'");

  gen.n = n;
  gen.q = q;
  gen.edge_prob = edge_prob;
  gen.constant_theta_pi = opt.degrees ? theta / 180.0 : theta;
  gen.seed = opt.seed;

  gg::GainGraph g = gg::generate_graph(gen);
  gg::GraphDocument doc = gg::GraphDocument::from_graph(g, name);
  gg::save_document(doc, out_path, gg::GraphFormat::kAuto);

  ReportBuilder rb;
  rb.body = header("generate", opt);
  rb.body["family"] = family;
  rb.body["gain_mode"] = gains;
  rb.body["seed"] = opt.seed;
  rb.body["n"] = g.vertex_count();
  rb.body["m"] = g.edge_count();
  rb.body["output"] = out_path;
  rb.body["digest"] = fnv1a_hex(read_file(out_path));
  rb.assert_that("written file loads back identically",
                 same_angles(g, gg::load_graph(out_path)));
  return rb.finish(opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral analysis of complex unit gain graphs"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "numeric tolerance")->capture_default_str();
    sub->add_option("--max-n", opt.max_n, "cap for subgraph enumeration")->capture_default_str();
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    sub->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_flag("--degrees", opt.degrees, "angles in input are degrees instead of units of pi");
  };
  add_common(&app);

  std::string file_a, file_b, out_path, name;
  std::string family = "gnp", gains = "uniform";
  int gen_n = 6, gen_q = 0;
  double edge_prob = 0.5, theta = 0.0;

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of the gain adjacency matrix");
  CLI::App* charpoly =
      app.add_subcommand("charpoly", "characteristic polynomial, numeric and combinatorial");
  CLI::App* permpoly =
      app.add_subcommand("permpoly", "permanental polynomial, numeric and combinatorial");
  CLI::App* balance = app.add_subcommand("balance", "balance test with certificates");
  CLI::App* bounds = app.add_subcommand("bounds", "eigenvalue bounds against the spectrum");
  CLI::App* compare = app.add_subcommand("compare", "cospectrality and switching equivalence");
  CLI::App* check = app.add_subcommand("check", "run every self-check on one graph");
  CLI::App* generate = app.add_subcommand("generate", "write a random graph file");

  for (CLI::App* sub : {spectrum, charpoly, permpoly, balance, bounds, check}) {
    sub->add_option("file", file_a, "graph file (JSON or edge list)")->required();
    add_common(sub);
  }
  compare->add_option("first", file_a, "first graph file")->required();
  compare->add_option("second", file_b, "second graph file")->required();
  add_common(compare);

  generate->add_option("--family", family, "gnp|tree|cycle|complete|complete-bipartite|star-of-triangles")
      ->capture_default_str();
  generate->add_option("-n,--n", gen_n, "vertex count (triangle count for the star family)")
      ->capture_default_str();
  generate->add_option("-q,--q", gen_q, "second part size for complete-bipartite");
  generate->add_option("-p,--edge-prob", edge_prob, "edge probability for gnp")
      ->capture_default_str();
  generate->add_option("--gains", gains, "uniform|fourth-roots|constant")->capture_default_str();
  generate->add_option("--theta", theta, "angle for constant gains, in units of pi")
      ->capture_default_str();
  generate->add_option("--out", out_path, "output file (.json or edge list)")->required();
  generate->add_option("--name", name, "optional document name");
  add_common(generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(spectrum)) return cmd_spectrum(file_a, opt);
    if (app.got_subcommand(charpoly)) return cmd_charpoly(file_a, opt);
    if (app.got_subcommand(permpoly)) return cmd_permpoly(file_a, opt);
    if (app.got_subcommand(balance)) return cmd_balance(file_a, opt);
    if (app.got_subcommand(bounds)) return cmd_bounds(file_a, opt);
    if (app.got_subcommand(compare)) return cmd_compare(file_a, file_b, opt);
    if (app.got_subcommand(check)) return cmd_check(file_a, opt);
    if (app.got_subcommand(generate))
      return cmd_generate(family, gen_n, gen_q, edge_prob, gains, theta, out_path, name, opt);
  } catch (const gg::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const gg::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "assertion failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
