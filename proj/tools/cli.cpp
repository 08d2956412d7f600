#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "carlitz/elliptic.hpp"
#include "carlitz/operators.hpp"
#include "carlitz/polynomials.hpp"
#include "carlitz/spectral.hpp"

namespace carlitz::cli {

namespace {

using nlohmann::json;

// Shortest decimal that round-trips to the same double.
std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<double> parse_k_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    try {
      v = std::stod(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value in --k list: " + item);
    }
    if (!(v > 0.0) || !(v < 1.0)) {
      throw std::invalid_argument("--k values must lie in (0,1)");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--k requires at least one value");
  return out;
}

std::vector<std::string> parse_tag_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      for (Tag t : all_tags()) out.push_back(tag_name(t));
      continue;
    }
    parse_tag(item);  // validates
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("--tag requires at least one value");
  return out;
}

json report_to_json(const SpectralReport& rep) {
  json eigen = json::array();
  for (const EigenRecord& r : rep.eigen) {
    json e;
    e["m"] = r.m;
    e["closed_form"] = r.closed_form;
    e["numeric"] = r.numeric;
    e["rel_err"] = r.rel_err;
    if (std::isfinite(r.eigvec_residual)) e["eigvec_residual"] = r.eigvec_residual;
    if (std::isfinite(r.norm_gap)) e["norm_gap"] = r.norm_gap;
    eigen.push_back(e);
  }
  json j;
  j["tag"] = tag_name(rep.tag);
  j["k"] = rep.k;
  j["truncation"] = rep.truncation;
  j["eigenvalues"] = eigen;
  j["commutator_residual"] = rep.commutator_residual;
  j["trace_gap"] = rep.trace_gap;
  j["pass"] = rep.pass;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  return j;
}

void write_matrix_csv(std::ostream& os, const std::string& tag, double k,
                      std::size_t N, const std::vector<double>& M) {
  os << "# tag=" << tag << " k=" << shortest(k) << " N=" << N << "\n";
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (j) os << ',';
      os << shortest(M[i * N + j]);
    }
    os << "\n";
  }
}

int cmd_ctx(const RunConfig& cfg, std::ostream& os) {
  if (cfg.format == "csv") {
    os << "k,K,Kprime,E,q\n";
    for (double k : cfg.k_values) {
      const EllipticContext c = make_context(k);
      os << shortest(c.k) << ',' << shortest(c.K) << ',' << shortest(c.Kprime)
         << ',' << shortest(c.Eint) << ',' << shortest(c.q) << "\n";
    }
    return 0;
  }
  json arr = json::array();
  for (double k : cfg.k_values) {
    const EllipticContext c = make_context(k);
    json j;
    j["k"] = c.k;
    j["K"] = c.K;
    j["Kprime"] = c.Kprime;
    j["E"] = c.Eint;
    j["q"] = c.q;
    arr.push_back(j);
  }
  os << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return 0;
}

int cmd_hankel(const RunConfig& cfg, std::ostream& os) {
  json arr = json::array();
  for (double k : cfg.k_values) {
    for (const std::string& name : cfg.tags) {
      const Tag t = parse_tag(name);
      const WeightedHankelOperator H = build_hankel(t, k, cfg.truncation);
      if (cfg.format == "csv") {
        write_matrix_csv(os, name, k, H.N, H.dense());
        continue;
      }
      json j;
      j["tag"] = name;
      j["k"] = k;
      j["truncation"] = H.N;
      j["moments"] = H.h;
      j["weights"] = H.w;
      arr.push_back(j);
    }
  }
  if (cfg.format == "json") os << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return 0;
}

int cmd_jacobi(const RunConfig& cfg, std::ostream& os) {
  json arr = json::array();
  for (double k : cfg.k_values) {
    for (const std::string& name : cfg.tags) {
      const Tag t = parse_tag(name);
      const JacobiOperator J = build_jacobi(t, k, cfg.truncation);
      if (cfg.format == "csv") {
        std::vector<double> M(J.N * J.N, 0.0);
        for (std::size_t i = 0; i < J.N; ++i) {
          M[i * J.N + i] = J.beta[i];
          if (i + 1 < J.N) {
            M[i * J.N + i + 1] = J.alpha[i];
            M[(i + 1) * J.N + i] = J.alpha[i];
          }
        }
        write_matrix_csv(os, name, k, J.N, M);
        continue;
      }
      json j;
      j["tag"] = name;
      j["k"] = k;
      j["truncation"] = J.N;
      j["alpha"] = J.alpha;
      j["beta"] = J.beta;
      arr.push_back(j);
    }
  }
  if (cfg.format == "json") os << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return 0;
}

int cmd_poly(const RunConfig& cfg, std::ostream& os) {
  json arr = json::array();
  for (double k : cfg.k_values) {
    const EllipticContext ctx = make_context(k);
    for (const std::string& name : cfg.tags) {
      const Tag t = parse_tag(name);
      const FamilySpec spec{family_of(t), k};
      json points = json::array();
      if (cfg.format == "csv") {
        os << "# tag=" << name << " k=" << shortest(k) << " N=" << cfg.truncation
           << "\n";
      }
      for (std::size_t m = 0; m <= cfg.m_max; ++m) {
        if (spec.id == Family::g && m == 0) continue;
        const SpectralPoint pt = spectral_point(spec, ctx, m);
        const OrthonormalSequence seq =
            orthonormal_sequence(spec, pt.lambda, cfg.truncation);
        if (cfg.format == "csv") {
          os << m << ',' << shortest(pt.lambda) << ',' << shortest(pt.mass);
          for (std::size_t n = 0; n < seq.trusted; ++n) {
            os << ',' << shortest(seq.value[n]);
          }
          os << "\n";
          continue;
        }
        json p;
        p["m"] = m;
        p["lambda"] = pt.lambda;
        p["mass"] = pt.mass;
        p["trusted"] = seq.trusted;
        p["values"] = std::vector<double>(seq.value.begin(),
                                          seq.value.begin() + seq.trusted);
        points.push_back(p);
      }
      if (cfg.format == "json") {
        json j;
        j["tag"] = name;
        j["family"] = family_name(spec.id);
        j["k"] = k;
        j["truncation"] = cfg.truncation;
        j["points"] = points;
        arr.push_back(j);
      }
    }
  }
  if (cfg.format == "json") os << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return 0;
}

int cmd_spectrum_or_verify(const RunConfig& cfg, std::ostream& os,
                           std::ostream& err, bool is_verify) {
  VerifyConfig vc;
  vc.m_count = cfg.m_max;
  vc.tol_eigenvalue = cfg.tol;
  vc.tol_commutator = cfg.tol;
  if (!is_verify) vc.truncation = cfg.truncation;

  json arr = json::array();
  bool all_pass = true;
  std::string first_failure;
  // Deterministic order: canonical tag order within each k.
  for (double k : cfg.k_values) {
    for (Tag t : all_tags()) {
      bool wanted = false;
      for (const std::string& name : cfg.tags) {
        if (name == tag_name(t)) wanted = true;
      }
      if (!wanted) continue;
      const SpectralReport rep = verify(t, k, vc);
      if (!rep.pass) {
        all_pass = false;
        if (first_failure.empty()) {
          first_failure = std::string(tag_name(t)) + " k=" + shortest(k) +
                          ": " + rep.failure;
        }
      }
      if (cfg.format == "csv") {
        os << "# tag=" << tag_name(t) << " k=" << shortest(k)
           << " N=" << rep.truncation << " pass=" << (rep.pass ? 1 : 0)
           << " commutator=" << shortest(rep.commutator_residual)
           << " trace_gap=" << shortest(rep.trace_gap) << "\n";
        for (const EigenRecord& r : rep.eigen) {
          os << r.m << ',' << shortest(r.closed_form) << ','
             << shortest(r.numeric) << ',' << shortest(r.rel_err) << "\n";
        }
      } else {
        arr.push_back(report_to_json(rep));
      }
    }
  }
  if (cfg.format == "json") os << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  if (is_verify && !all_pass) {
    err << "verification failed: " << first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

RunConfig parse(int argc, const char* const* argv) {
  CLI::App app{"Spectral laboratory for elliptic Hankel and Jacobi matrix operators"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string k_arg = "0.5";
  std::string tag_arg = "all";

  const auto add_common = [&](CLI::App* sub, bool with_tags) {
    sub->add_option("--k", k_arg, "comma separated moduli in (0,1)");
    if (with_tags) {
      sub->add_option("--tag", tag_arg, "p|q|r|s|f|g|qp|sp|fp|fpp|gp|all (comma list)");
    }
    sub->add_option("--n", cfg.truncation, "truncation order (>= 2)");
    sub->add_option("--m-max", cfg.m_max, "number of spectral indices");
    sub->add_option("--tol", cfg.tol, "verification tolerance");
    sub->add_option("--format", cfg.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
  };

  add_common(app.add_subcommand("ctx", "print elliptic constants"), false);
  add_common(app.add_subcommand("hankel", "emit a weighted Hankel truncation"), true);
  add_common(app.add_subcommand("jacobi", "emit a Jacobi truncation"), true);
  add_common(app.add_subcommand("poly", "orthonormal values at spectral points"), true);
  add_common(app.add_subcommand("spectrum", "closed-form vs numeric spectrum"), true);
  add_common(app.add_subcommand("verify", "full verification suite"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream oss;
    if (e.get_exit_code() != 0) {
      oss << "usage error: " << e.what();
      throw std::invalid_argument(oss.str());
    }
    // --help and friends land here.
    std::exit(0);
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.k_values = parse_k_list(k_arg);
  cfg.tags = parse_tag_list(tag_arg);
  if (cfg.truncation < 2) throw std::invalid_argument("--n must be >= 2");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "cannot open output file: " << cfg.out << "\n";
      return 1;
    }
    os = &file;
  }
  try {
    if (cfg.command == "ctx") return cmd_ctx(cfg, *os);
    if (cfg.command == "hankel") return cmd_hankel(cfg, *os);
    if (cfg.command == "jacobi") return cmd_jacobi(cfg, *os);
    if (cfg.command == "poly") return cmd_poly(cfg, *os);
    if (cfg.command == "spectrum") return cmd_spectrum_or_verify(cfg, *os, err, false);
    if (cfg.command == "verify") return cmd_spectrum_or_verify(cfg, *os, err, true);
  } catch (const std::exception& e) {
    err << cfg.command << " failed: " << e.what() << "\n";
    return 1;
  }
  err << "unknown command: " << cfg.command << "\n";
  return 2;
}

int main_entry(int argc, const char* const* argv) {
  try {
    const RunConfig cfg = parse(argc, argv);
    return run(cfg, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace carlitz::cli
