#include "isoharmonic/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isoharmonic::io {

namespace {

EndpointType endpoint_from(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "l" || s == "left") return EndpointType::left;
  if (s == "r" || s == "right") return EndpointType::right;
  throw std::invalid_argument("sigma entries must be \"l\" or \"r\"");
}

void dump_rec(const json& j, int indent, int level, std::string& out) {
  const std::string pad = indent > 0 ? std::string(std::size_t(indent * (level + 1)), ' ') : "";
  const std::string pad_close = indent > 0 ? std::string(std::size_t(indent * level), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad + json(it.key()).dump() + (indent > 0 ? ": " : ":");
        dump_rec(it.value(), indent, level + 1, out);
      }
      out += nl + pad_close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      if (flat) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) out += ", ";
          dump_rec(j[k], indent, level + 1, out);
        }
        out += "]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) {
          out += ",";
          out += nl;
        }
        out += pad;
        dump_rec(j[k], indent, level + 1, out);
      }
      out += nl + pad_close + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "1e999" : "-1e999";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump(const json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out;
}

json to_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

json to_json(const Eigen::VectorXi& v) { return json(std::vector<int>(v.data(), v.data() + v.size())); }

Eigen::VectorXd vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of numbers");
  Eigen::VectorXd v(Eigen::Index(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v[Eigen::Index(k)] = j[k].get<double>();
  return v;
}

TCurveConfig config_from_json(const json& j) {
  const Eigen::VectorXd x = vector_from_json(j.at("x"));
  const Eigen::VectorXd u = vector_from_json(j.at("u"));
  const double y0 = j.at("y0").get<double>();
  const int g = int(x.size());
  const Eigen::VectorXd c1 = j.contains("c1") ? vector_from_json(j["c1"]) : Eigen::VectorXd::Zero(g);
  const Eigen::VectorXd c2 = j.contains("c2") ? vector_from_json(j["c2"]) : Eigen::VectorXd::Zero(g);
  std::vector<EndpointType> sigma;
  if (j.contains("sigma"))
    for (const auto& s : j["sigma"]) sigma.push_back(endpoint_from(s));
  else
    sigma = infer_sigma(x, u);
  cplx t = 1.0;
  if (j.contains("t")) t = cplx(j["t"].at(0).get<double>(), j["t"].at(1).get<double>());
  ValidationResult vr = validate_config(g, x, u, y0, c1, c2, sigma, t);
  if (!vr.ok()) {
    std::string msg = "invalid config:";
    for (const auto& v : vr.violations) msg += " " + v + ";";
    fail(ErrorKind::argument, msg);
  }
  return *vr.config;
}

json to_json(const TCurveConfig& c) {
  json j;
  j["x"] = to_json(c.x);
  j["u"] = to_json(c.u);
  j["y0"] = c.y0;
  j["c1"] = to_json(c.c_hat1);
  j["c2"] = to_json(c.c_hat2);
  json s = json::array();
  for (EndpointType e : c.sigma) s.push_back(e == EndpointType::left ? "l" : "r");
  j["sigma"] = s;
  j["t"] = {c.t.real(), c.t.imag()};
  return j;
}

IntervalSystem intervals_from_json(const json& j) { return IntervalSystem::from_endpoints(vector_from_json(j.at("endpoints"))); }

json to_json(const IntervalSystem& E) { return json{{"endpoints", to_json(E.c)}}; }

BilliardConfig billiard_from_json(const json& j) {
  BilliardConfig c{vector_from_json(j.at("b")), vector_from_json(j.at("alpha"))};
  validate_billiard(c);
  return c;
}

json to_json(const BilliardConfig& c) { return json{{"b", to_json(c.b)}, {"alpha", to_json(c.alpha)}}; }

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << format_double(r[k]);
    os << "\n";
  }
}

}  // namespace isoharmonic::io
