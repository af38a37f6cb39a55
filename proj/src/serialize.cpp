#include "mrd/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "mrd/gfexpr.hpp"

namespace mrd::io {

std::vector<std::string> strings(const RationalSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coefficients()) out.push_back(to_string(c));
  return out;
}

json to_json(const RationalSeries& s) { return {{"order", s.order()}, {"coeffs", strings(s)}}; }

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

namespace {

json strided(const RationalSeries& s, std::size_t ell) {
  json out = json::array();
  for (std::size_t n = 0; n <= s.order(); n += ell) out.push_back(to_string(s[n]));
  return out;
}

}  // namespace

json to_json(const SeqChar<Rational>& seq) {
  json z = json::array();
  for (const auto& s : seq.z) z.push_back(strided(s, seq.ell));
  return {{"ell", seq.ell}, {"stride", seq.ell}, {"A", strided(seq.a, seq.ell)}, {"Z", std::move(z)}};
}

json to_json(const TPReport<Rational>& report) {
  json witness = nullptr;
  if (report.witness)
    witness = {{"rows", report.witness->rows},
               {"cols", report.witness->cols},
               {"value", to_string(report.witness->value)}};
  return {{"order", report.max_order},
          {"block", report.block},
          {"ok", report.ok()},
          {"minors", report.minors_checked},
          {"witness", std::move(witness)}};
}

json to_json(const IdentityReport& report) {
  json points = json::array();
  for (const auto& p : report.points)
    points.push_back({{"label", p.label}, {"lhs", to_string(p.lhs)}, {"rhs", to_string(p.rhs)}, {"holds", p.holds()}});
  return {{"name", report.name}, {"holds", report.holds()}, {"points", std::move(points)}};
}

json to_json(const RationalRiordan& spec) {
  return {{"kind", to_string(spec.kind())}, {"ell", 1}, {"g", to_json(spec.g())}, {"f", json::array({to_json(spec.f())})}};
}

json to_json(const RationalMultiRiordan& spec) {
  json f = json::array();
  for (const auto& fi : spec.multipliers()) f.push_back(to_json(fi));
  return {{"kind", to_string(spec.kind())}, {"ell", spec.ell()}, {"g", to_json(spec.g())}, {"f", std::move(f)}};
}

RationalSeries series_from_json(const json& j, std::size_t order) {
  if (j.is_string()) return gf::eval(j.get<std::string>(), order);
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    raise(ErrorKind::InvalidSpec, "a series must be an expression string or an object with \"coeffs\"");
  RationalSeries::Coefficients c;
  for (const auto& v : j["coeffs"]) {
    if (v.is_number_integer()) {
      c.emplace_back(v.get<long>());
    } else if (v.is_string()) {
      try {
        c.push_back(parse_rational(v.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        raise(ErrorKind::InvalidSpec, std::string("bad coefficient: ") + e.what());
      }
    } else {
      raise(ErrorKind::InvalidSpec, "coefficients must be \"p/q\" strings or integers");
    }
  }
  return RationalSeries(std::move(c));
}

std::string series_text(const RationalSeries& s) {
  std::string out;
  for (const auto& c : strings(s)) out += (out.empty() ? "" : ", ") + c;
  return out;
}

std::string series_csv(const RationalSeries& s) {
  std::string out;
  for (const auto& c : strings(s)) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string matrix_text(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
  std::size_t width = 1;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      cells[r].push_back(to_string(m(r, c)));
      width = std::max(width, cells[r].back().size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ' ';
      os << std::string(width - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
  return os.str();
}

std::string matrix_csv(const RationalMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? "," : "") << to_string(m(r, c));
    os << '\n';
  }
  return os.str();
}

std::string tp_text(const TPReport<Rational>& report) {
  std::ostringstream os;
  os << "minors of order <= " << report.max_order << " on " << report.block << " rows: " << report.minors_checked
     << " checked, ";
  if (report.ok()) {
    os << "all nonnegative\n";
  } else {
    auto join = [](const std::vector<std::size_t>& v) {
      std::string s;
      for (auto i : v) s += (s.empty() ? "" : ",") + std::to_string(i);
      return s;
    };
    os << "violation rows {" << join(report.witness->rows) << "} cols {" << join(report.witness->cols)
       << "} value " << to_string(report.witness->value) << '\n';
  }
  return os.str();
}

std::string identity_text(const IdentityReport& report) {
  std::ostringstream os;
  for (const auto& p : report.points)
    os << (p.holds() ? "ok   " : "FAIL ") << p.label << "  " << to_string(p.lhs) << " = " << to_string(p.rhs) << '\n';
  os << report.name << ": " << (report.holds() ? "holds" : "fails") << " at " << report.points.size()
     << " point(s)\n";
  return os.str();
}

std::string identity_csv(const IdentityReport& report) {
  std::ostringstream os;
  for (const auto& p : report.points)
    os << '"' << p.label << '"' << ',' << to_string(p.lhs) << ',' << to_string(p.rhs) << ',' << (p.holds() ? "ok" : "fail") << '\n';
  return os.str();
}

}  // namespace mrd::io
