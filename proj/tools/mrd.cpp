// Command-line front end for the mrd library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mrd/compress.hpp"
#include "mrd/error.hpp"
#include "mrd/gfexpr.hpp"
#include "mrd/identities.hpp"
#include "mrd/multiriordan.hpp"
#include "mrd/riordan.hpp"
#include "mrd/serialize.hpp"

namespace {

using namespace mrd;
using io::json;

enum class Format { text, csv, json };

struct Output {
  Format format = Format::text;

  void emit(const json& j, const std::string& text, const std::string& csv) const {
    switch (format) {
      case Format::text: std::cout << text; break;
      case Format::csv: std::cout << csv; break;
      case Format::json: std::cout << j.dump(2) << '\n'; break;
    }
  }
};

/// Inline (--g/--f) or file (--spec) description of an array.
struct SpecArgs {
  std::string g;
  std::vector<std::string> f;
  bool type = false;
  std::size_t ell = 0;
  std::size_t order = 0;
  std::string file;

  void attach(CLI::App* app, const std::string& suffix = "") {
    app->add_option("--g" + suffix, g, "generating function g");
    app->add_option("--f" + suffix, f, "multiplier f (repeat for multiple arrays)");
    app->add_flag("--type" + suffix, type, "square type array (multipliers with nonzero constant term)");
    app->add_option("--ell" + suffix, ell, "number of multipliers");
    app->add_option("--spec" + suffix, file, "JSON spec file");
    if (suffix.empty()) app->add_option("--order", order, "truncation order");
  }
};

using AnySpec = std::variant<RationalRiordan, RationalMultiRiordan>;

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::InvalidSpec, "cannot open spec file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    raise(ErrorKind::InvalidSpec, "spec file '" + path + "' is not valid JSON: " + e.what());
  }
}

AnySpec resolve(const SpecArgs& a, std::size_t order) {
  if (a.order > 0) order = a.order;
  std::vector<RationalSeries> f;
  RationalSeries g;
  bool type = a.type;
  std::size_t ell = a.ell;
  if (!a.file.empty()) {
    const json j = load_file(a.file);
    if (!j.contains("g") || !j.contains("f") || !j["f"].is_array())
      raise(ErrorKind::InvalidSpec, "spec file needs \"g\" and an array \"f\"");
    if (j.contains("order") && a.order == 0) order = j["order"].get<std::size_t>();
    if (j.contains("kind")) type = j["kind"].get<std::string>() == "type";
    if (j.contains("ell")) ell = j["ell"].get<std::size_t>();
    g = io::series_from_json(j["g"], order);
    for (const auto& fi : j["f"]) f.push_back(io::series_from_json(fi, order));
  } else {
    if (a.g.empty() || a.f.empty()) raise(ErrorKind::InvalidSpec, "a spec needs --g and at least one --f");
    g = gf::eval(a.g, order);
    for (const auto& fi : a.f) f.push_back(gf::eval(fi, order));
  }
  if (ell == 0) ell = f.size();
  if (ell != f.size())
    raise(ErrorKind::InvalidSpec,
          "--ell " + std::to_string(ell) + " given with " + std::to_string(f.size()) + " multiplier(s)");
  if (f.size() == 1) return type ? RationalRiordan::type(g, f[0]) : RationalRiordan::proper(g, f[0]);
  return type ? RationalMultiRiordan::type(g, f) : RationalMultiRiordan::proper(g, f);
}

std::size_t ell_of(const SpecArgs& a) { return std::max<std::size_t>(1, a.ell ? a.ell : a.f.size()); }

std::string spec_text(const AnySpec& spec) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        os << "kind: " << to_string(s.kind()) << '\n' << "g: " << io::series_text(s.g()) << '\n';
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, RationalRiordan>) {
          os << "f: " << io::series_text(s.f()) << '\n';
        } else {
          for (std::size_t i = 0; i < s.ell(); ++i) os << "f" << i + 1 << ": " << io::series_text(s.f(i)) << '\n';
        }
      },
      spec);
  return os.str();
}

std::string spec_csv(const AnySpec& spec) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        os << "g," << io::series_csv(s.g()) << '\n';
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, RationalRiordan>) {
          os << "f," << io::series_csv(s.f()) << '\n';
        } else {
          for (std::size_t i = 0; i < s.ell(); ++i) os << "f" << i + 1 << ',' << io::series_csv(s.f(i)) << '\n';
        }
      },
      spec);
  return os.str();
}

json spec_json(const AnySpec& spec) {
  return std::visit([](const auto& s) { return io::to_json(s); }, spec);
}

void emit_matrix(const Output& out, const RationalMatrix& m) {
  out.emit(io::to_json(m), io::matrix_text(m), io::matrix_csv(m));
}

void emit_series(const Output& out, const RationalSeries& s) {
  out.emit(io::to_json(s), io::series_text(s) + '\n', io::series_csv(s) + '\n');
}

void emit_spec(const Output& out, const AnySpec& spec) { out.emit(spec_json(spec), spec_text(spec), spec_csv(spec)); }

RationalMatrix matrix_of(const AnySpec& spec, std::size_t rows, std::size_t cols) {
  return std::visit(
      [&](const auto& s) -> RationalMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, RationalRiordan>)
          return build(s, rows, cols);
        else
          return mbuild(s, rows, cols);
      },
      spec);
}

/// A- and Z-data of either kind of array, in the multiple-array layout (ell = 1 for classical).
SeqChar<Rational> seqchar_of(const AnySpec& spec, std::size_t terms) {
  if (const auto* m = std::get_if<RationalMultiRiordan>(&spec)) return mseq(*m);
  const auto& r = std::get<RationalRiordan>(spec);
  SeqChar<Rational> out;
  out.ell = 1;
  out.a = a_sequence(r, terms);
  out.z.push_back(z_sequence(r, terms));
  return out;
}

const RationalMultiRiordan& require_multi(const AnySpec& spec, const char* command) {
  const auto* m = std::get_if<RationalMultiRiordan>(&spec);
  if (!m) raise(ErrorKind::InvalidSpec, std::string(command) + " needs a multiple array (two or more --f)");
  return *m;
}

std::vector<Rational> parse_sequence(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    try {
      out.push_back(parse_rational(item.substr(b, e - b + 1)));
    } catch (const std::invalid_argument&) {
      raise(ErrorKind::InvalidSpec, "bad sequence entry '" + item + "'");
    }
  }
  return out;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownFunction:
    case ErrorKind::ArityError:
    case ErrorKind::InvalidSpec:
    case ErrorKind::KindMismatch:
    case ErrorKind::EllMismatch:
    case ErrorKind::ResidueOutOfRange:
    case ErrorKind::GradingViolation:
    case ErrorKind::IndexOutOfRange:
      return 2;
    case ErrorKind::BudgetExceeded:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riordan, Riordan-type and multiple Riordan array toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  std::size_t rows = 10, cols = 10, terms = 10, size = 10, depth = 3, max_order = 4;
  std::size_t budget = default_minor_budget;
  std::size_t order = 10;

  std::string expr;
  auto* eval_cmd = app.add_subcommand("eval", "print the coefficients of a generating function");
  eval_cmd->add_option("expr", expr, "expression")->required();
  eval_cmd->add_option("--order", order, "truncation order")->capture_default_str();

  SpecArgs spec, spec2;
  auto* build_cmd = app.add_subcommand("build", "build a block of an array");
  spec.attach(build_cmd);
  build_cmd->add_option("--rows", rows)->capture_default_str();
  build_cmd->add_option("--cols", cols)->capture_default_str();

  auto* mul_cmd = app.add_subcommand("mul", "group product of two proper specs (second one via --g2/--f2/--spec2)");
  spec.attach(mul_cmd);
  spec2.attach(mul_cmd, "2");

  auto* inv_cmd = app.add_subcommand("inv", "group inverse of a proper spec");
  spec.attach(inv_cmd);

  std::string which;
  auto* seq_cmd = app.add_subcommand("seq", "A- and Z-sequence characterization");
  spec.attach(seq_cmd);
  seq_cmd->add_option("--which", which, "A, Z (classical) or Z0..Z(L-1)");
  seq_cmd->add_option("--terms", terms)->capture_default_str();

  auto* prod_cmd = app.add_subcommand("prodmat", "production matrix of a proper array");
  spec.attach(prod_cmd);
  prod_cmd->add_option("--size", size)->capture_default_str();

  auto* comp_cmd = app.add_subcommand("compress", "compression of a multiple array");
  spec.attach(comp_cmd);
  comp_cmd->add_option("--rows", rows)->capture_default_str();
  comp_cmd->add_option("--cols", cols)->capture_default_str();

  bool compressed = false;
  auto* tp_cmd = app.add_subcommand("tp", "exhaustive minor test of an array block");
  spec.attach(tp_cmd);
  tp_cmd->add_option("--max-order", max_order)->capture_default_str();
  tp_cmd->add_option("--rows", rows)->capture_default_str();
  tp_cmd->add_option("--cols", cols, "defaults to --rows");
  tp_cmd->add_flag("--compressed", compressed, "test the compression instead of the array");
  tp_cmd->add_option("--budget", budget)->capture_default_str();

  std::string seq_text, seq_expr;
  auto* pf_cmd = app.add_subcommand("pf", "finite Polya-frequency test of a sequence");
  pf_cmd->add_option("--seq", seq_text, "comma-separated rationals");
  pf_cmd->add_option("--expr", seq_expr, "generating function of the sequence");
  pf_cmd->add_option("--depth", depth)->capture_default_str();
  pf_cmd->add_option("--terms", terms)->capture_default_str();
  pf_cmd->add_option("--budget", budget)->capture_default_str();

  auto* id_cmd = app.add_subcommand("identity", "identity reports");
  id_cmd->require_subcommand(1);
  std::size_t m = 2, n = 3, s = 3, ell = 2;
  long p = 1;
  std::string x = "1";
  auto* umbral_cmd = id_cmd->add_subcommand("umbral", "umbral power-sum identities");
  umbral_cmd->add_option("--m", m)->capture_default_str();
  umbral_cmd->add_option("--n", n)->capture_default_str();
  umbral_cmd->add_option("--x", x, "rational p/q")->capture_default_str();
  auto* riosum_cmd = id_cmd->add_subcommand("riosum", "Riordan-sum identities for a proper spec");
  spec.attach(riosum_cmd);
  riosum_cmd->add_option("--m", m)->capture_default_str();
  riosum_cmd->add_option("--n", n)->capture_default_str();
  riosum_cmd->add_option("--s", s)->capture_default_str();
  auto* grunert_cmd = id_cmd->add_subcommand("grunert", "Grunert formula and power-sum series");
  grunert_cmd->add_option("--expr", expr, "series f")->required();
  grunert_cmd->add_option("--m", m)->capture_default_str();
  grunert_cmd->add_option("--order", order)->capture_default_str();
  auto* fuss_cmd = id_cmd->add_subcommand("fuss", "Fuss-Catalan Riordan-sum identity");
  fuss_cmd->add_option("--ell", ell)->capture_default_str();
  fuss_cmd->add_option("--p", p)->capture_default_str();
  fuss_cmd->add_option("--m", m)->capture_default_str();
  fuss_cmd->add_option("--n", n)->capture_default_str();
  fuss_cmd->add_option("--s", s)->capture_default_str();

  auto* grammar_cmd = app.add_subcommand("grammar", "print the expression grammar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  try {
    if (*grammar_cmd) {
      out.emit(json{{"grammar", gf::grammar}}, std::string(gf::grammar) + '\n', std::string(gf::grammar) + '\n');
    } else if (*eval_cmd) {
      emit_series(out, gf::eval(expr, order));
    } else if (*build_cmd) {
      emit_matrix(out, matrix_of(resolve(spec, rows + cols), rows, cols));
    } else if (*mul_cmd) {
      const AnySpec a = resolve(spec, 24), b = resolve(spec2, spec.order ? spec.order : 24);
      if (a.index() != b.index()) raise(ErrorKind::EllMismatch, "operands have different numbers of multipliers");
      if (const auto* ra = std::get_if<RationalRiordan>(&a))
        emit_spec(out, mul(*ra, std::get<RationalRiordan>(b)));
      else
        emit_spec(out, mmul(std::get<RationalMultiRiordan>(a), std::get<RationalMultiRiordan>(b)));
    } else if (*inv_cmd) {
      const AnySpec a = resolve(spec, 24);
      if (const auto* ra = std::get_if<RationalRiordan>(&a))
        emit_spec(out, inv(*ra));
      else
        emit_spec(out, minv(std::get<RationalMultiRiordan>(a)));
    } else if (*seq_cmd) {
      const std::size_t l = ell_of(spec);
      const AnySpec a = resolve(spec, terms + 2 * l + 2);
      const SeqChar<Rational> sc = seqchar_of(a, terms);
      auto cut = [&](const RationalSeries& series) {
        if (series.order() + 1 < terms)
          raise(ErrorKind::InsufficientTruncation,
                "only " + std::to_string(series.order() + 1) + " terms are exact; raise --order");
        return series.truncated(terms - 1);
      };
      if (which.empty()) {
        SeqChar<Rational> shown{sc.ell, cut(sc.a), {}};
        for (const auto& z : sc.z) shown.z.push_back(cut(z));
        std::string text = "A: " + io::series_text(shown.a) + '\n';
        std::string csv = "A," + io::series_csv(shown.a) + '\n';
        for (std::size_t i = 0; i < shown.z.size(); ++i) {
          const std::string name = sc.ell == 1 ? "Z" : "Z" + std::to_string(i);
          text += name + ": " + io::series_text(shown.z[i]) + '\n';
          csv += name + ',' + io::series_csv(shown.z[i]) + '\n';
        }
        out.emit(io::to_json(shown), text, csv);
      } else if (which == "A") {
        emit_series(out, cut(sc.a));
      } else if (which == "Z" && sc.ell == 1) {
        emit_series(out, cut(sc.z[0]));
      } else if (which.size() > 1 && which[0] == 'Z' && which.find_first_not_of("0123456789", 1) == std::string::npos) {
        const std::size_t idx = std::stoul(which.substr(1));
        if (idx >= sc.z.size())
          raise(ErrorKind::IndexOutOfRange, "--which " + which + " but the array has " + std::to_string(sc.z.size()) +
                                                " Z-sequence(s)");
        emit_series(out, cut(sc.z[idx]));
      } else {
        raise(ErrorKind::InvalidSpec, "--which must be A, Z or Z0..Z(L-1)");
      }
    } else if (*prod_cmd) {
      const std::size_t l = ell_of(spec);
      const AnySpec a = resolve(spec, size + 2 * l + 2);
      if (const auto* r = std::get_if<RationalRiordan>(&a)) detail::require_kind(*r, ArrayKind::proper, "prodmat");
      if (const auto* mr = std::get_if<RationalMultiRiordan>(&a))
        detail::require_kind(*mr, ArrayKind::proper, "prodmat");
      emit_matrix(out, production_matrix(seqchar_of(a, size), size));
    } else if (*comp_cmd) {
      const std::size_t l = ell_of(spec);
      const AnySpec a = resolve(spec, (rows + cols) * l);
      const RationalMultiRiordan& mr = require_multi(a, "compress");
      if (mr.kind() == ArrayKind::type) {
        emit_matrix(out, compress_type(mr, rows, cols));
      } else {
        const CompressedSpec<Rational> c = compress_spec(mr);
        const RationalMatrix mat = compress(mr, rows, cols);
        json j = {{"ell", c.ell}, {"ghat", io::to_json(c.ghat)}, {"fhat", json::array()}, {"matrix", io::to_json(mat)}};
        std::string text = io::matrix_text(mat) + "ghat: " + io::series_text(c.ghat) + '\n';
        for (std::size_t i = 0; i < c.fhat.size(); ++i) {
          j["fhat"].push_back(io::to_json(c.fhat[i]));
          text += "fhat" + std::to_string(i + 1) + ": " + io::series_text(c.fhat[i]) + '\n';
        }
        out.emit(j, text, io::matrix_csv(mat));
      }
    } else if (*tp_cmd) {
      if (tp_cmd->count("--cols") == 0) cols = rows;
      const std::size_t l = ell_of(spec);
      const AnySpec a = resolve(spec, compressed ? (rows + cols) * l : rows + cols);
      const RationalMatrix mat = compressed ? compress(require_multi(a, "tp --compressed"), rows, cols)
                                            : matrix_of(a, rows, cols);
      const auto report = tp_check(mat, max_order, budget);
      out.emit(io::to_json(report), io::tp_text(report), io::tp_text(report));
    } else if (*pf_cmd) {
      std::vector<Rational> seq;
      if (!seq_expr.empty()) {
        const RationalSeries series = gf::eval(seq_expr, terms == 0 ? 0 : terms - 1);
        seq.assign(series.coefficients().begin(), series.coefficients().end());
      } else if (!seq_text.empty()) {
        seq = parse_sequence(seq_text);
      } else {
        raise(ErrorKind::InvalidSpec, "pf needs --seq or --expr");
      }
      const auto report = pf_check(seq, depth, terms, budget);
      out.emit(io::to_json(report), io::tp_text(report), io::tp_text(report));
    } else if (*id_cmd) {
      IdentityReport report;
      if (*umbral_cmd) {
        Rational xv;
        try {
          xv = parse_rational(x);
        } catch (const std::invalid_argument&) {
          raise(ErrorKind::InvalidSpec, "--x must be a rational p/q");
        }
        report = umbral_check(m, n, xv);
      } else if (*riosum_cmd) {
        const AnySpec a = resolve(spec, s + n + 2);
        const auto* r = std::get_if<RationalRiordan>(&a);
        if (!r) raise(ErrorKind::InvalidSpec, "riosum needs a classical spec (one --f)");
        report = riosum_check(*r, m, n, s);
      } else if (*grunert_cmd) {
        report = grunert_check(gf::eval(expr, order), m, order);
      } else {
        report = fuss_identity_check(ell, p, m, n, s);
      }
      out.emit(io::to_json(report), io::identity_text(report), io::identity_csv(report));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (!e.expected().empty()) {
      std::cerr << "expected one of:";
      for (const auto& x_ : e.expected()) std::cerr << ' ' << x_;
      std::cerr << '\n';
    }
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
