#include "billiards/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void write(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
  const std::string close(static_cast<size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        append_escaped(out, it.key());
        out += ": ";
        write(out, it.value(), indent, depth + 1);
      }
      out += '\n' + close + '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const Json& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write(out, v, indent, depth + 1);
      }
      out += '\n' + close + ']';
      return;
    }
    case Json::value_t::string:
      append_escaped(out, j.get<std::string>());
      return;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      return;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case Json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  out += '\n';
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed JSON at byte " + std::to_string(e.byte) +
                          ": " + e.what());
  }
}

Json polygon_to_json(const IdealPolygon& P) {
  Json j;
  j["k"] = P.side_count();
  Json theta = Json::array();
  for (int v = 1; v <= P.side_count(); ++v) theta.push_back(P.vertex(v).theta);
  j["theta"] = theta;
  return j;
}

IdealPolygon polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("theta"))
    throw ValidationError("polygon JSON needs fields k and theta");
  int k = j.at("k").get<int>();
  std::vector<double> theta = j.at("theta").get<std::vector<double>>();
  if (static_cast<int>(theta.size()) != k)
    throw ValidationError("polygon JSON: theta length differs from k");
  return IdealPolygon(theta);
}

Json chart_to_json(const ModuliChart& chart) {
  Json j;
  j["k"] = chart.k;
  j["free_gaps"] = chart.free_gaps;
  return j;
}

ModuliChart chart_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("free_gaps"))
    throw ValidationError("chart JSON needs fields k and free_gaps");
  ModuliChart c{j.at("k").get<int>(),
                j.at("free_gaps").get<std::vector<double>>()};
  return c;
}

Json trajectory_to_json(const Trajectory& t) {
  Json j;
  j["k"] = t.sequence.k();
  j["sequence"] = t.sequence.labels();
  j["length"] = t.length;
  Json hits = Json::array();
  for (const BoundaryCoordinate& h : t.hits) {
    Json e;
    e["side"] = h.side;
    e["t"] = h.t;
    hits.push_back(e);
  }
  j["hits"] = hits;
  return j;
}

Json family_to_json(const CyclicFamily& fam) {
  Json j;
  Json lens = Json::array();
  Json members = Json::array();
  for (const Trajectory& t : fam.trajectories) {
    lens.push_back(t.length);
    members.push_back(trajectory_to_json(t));
  }
  j["lengths"] = lens;
  j["average_length"] = fam.average_length;
  j["trajectories"] = members;
  return j;
}

namespace {

const char* face_name(FaceType t) {
  switch (t) {
    case FaceType::a: return "a";
    case FaceType::b: return "b";
    case FaceType::c: return "c";
    default: return "violation";
  }
}

}  // namespace

Json filling_to_json(const FillingReport& r) {
  Json j;
  j["connected"] = r.connected;
  j["fills"] = r.fills;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["face_count"] = r.face_count;
  Json faces = Json::array();
  for (const FaceInfo& f : r.faces) {
    Json e;
    e["type"] = face_name(f.type);
    e["boundary_runs"] = f.boundary_runs;
    e["ideal_vertices"] = f.ideal_vertices;
    e["contains_whole_side"] = f.contains_whole_side;
    e["edge_count"] = f.edge_count;
    faces.push_back(e);
  }
  j["faces"] = faces;
  j["degeneracies"] = r.degeneracies;
  return j;
}

Json minimization_to_json(const MinimizationResult& r) {
  Json j;
  j["chart_min"] = chart_to_json(r.chart_min);
  j["value"] = r.value;
  j["grad_norm"] = r.grad_norm;
  j["hess_min_eig"] = r.hess_min_eig;
  j["distance_to_regular"] = r.distance_to_regular;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["evaluations"] = r.evaluations;
  return j;
}

Json regular_report_to_json(const RegularMinimumReport& r) {
  Json j;
  j["minimization"] = minimization_to_json(r.minimization);
  j["grad_norm_regular"] = r.grad_norm_regular;
  j["hess_min_eig_regular"] = r.hess_min_eig_regular;
  j["passes"] = r.passes;
  j["failing_check"] = r.failing_check;
  return j;
}

}  // namespace billiards
