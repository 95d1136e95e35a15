#include "billiards/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "billiards/errors.hpp"
#include "billiards/filling.hpp"
#include "billiards/json_io.hpp"
#include "billiards/optimize.hpp"
#include "billiards/rectangles.hpp"
#include "billiards/render.hpp"

namespace billiards {

namespace {

IdealPolygon resolve_polygon(const RunConfig& cfg) {
  if (!cfg.polygon_file.empty()) {
    std::ifstream in(cfg.polygon_file);
    if (!in) throw ValidationError("cannot open " + cfg.polygon_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return polygon_from_json(parse_json(buf.str()));
  }
  if (!cfg.chart.empty() || cfg.k == 3) {
    if (cfg.k < 3) throw ValidationError("--chart requires --k");
    return from_chart(ModuliChart{cfg.k, cfg.chart});
  }
  if (cfg.k >= 3) return regular_polygon(cfg.k);
  throw ValidationError("no polygon: pass --polygon, --chart or --k");
}

int polygon_k(const RunConfig& cfg, const IdealPolygon& P) {
  if (cfg.k != 0 && cfg.k != P.side_count())
    throw ValidationError("--k disagrees with the polygon");
  return P.side_count();
}

BilliardSequence resolve_sequence(const RunConfig& cfg, int k) {
  if (cfg.seq.empty()) throw ValidationError("--seq is required");
  return BilliardSequence(cfg.seq, k);
}

OptimizerConfig resolve_optimizer(const RunConfig& cfg) {
  OptimizerConfig oc;
  oc.seed = cfg.seed;
  if (cfg.tol_f) oc.tol_f = *cfg.tol_f;
  if (cfg.tol_x) oc.tol_x = *cfg.tol_x;
  if (cfg.fd_step) oc.fd_step = *cfg.fd_step;
  return oc;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "validate") {
    if (cfg.k < 3) throw ValidationError("validate needs --k");
    if (cfg.seq.empty()) throw ValidationError("validate needs --seq");
    SequenceVerdict v = validate_sequence(cfg.seq, cfg.k);
    Json j;
    j["valid"] = v.valid;
    if (!v.valid) {
      j["rule"] = std::string(1, v.rule);
      j["message"] = v.message;
    }
    out << dump_json(j);
    if (!v.valid) throw ValidationError(v.message);
    return 0;
  }

  if (cfg.command == "trace") {
    IdealPolygon P = resolve_polygon(cfg);
    BilliardSequence a = resolve_sequence(cfg, polygon_k(cfg, P));
    Trajectory t = trajectory(P, a);
    Json j = trajectory_to_json(t);
    j["polygon"] = polygon_to_json(P);
    out << dump_json(j);
    return 0;
  }

  if (cfg.command == "avg-length") {
    IdealPolygon P = resolve_polygon(cfg);
    BilliardSequence a = resolve_sequence(cfg, polygon_k(cfg, P));
    CyclicFamily fam = cyclic_family(P, a);
    Json j;
    j["k"] = P.side_count();
    j["sequence"] = a.labels();
    j["family"] = family_to_json(fam);
    out << dump_json(j);
    return 0;
  }

  if (cfg.command == "minimize") {
    if (cfg.k < 3) throw ValidationError("minimize needs --k");
    BilliardSequence a = resolve_sequence(cfg, cfg.k);
    RegularMinimumReport rep =
        verify_regular_minimum(cfg.k, a, resolve_optimizer(cfg));
    out << dump_json(regular_report_to_json(rep));
    return 0;
  }

  if (cfg.command == "filling") {
    IdealPolygon P = resolve_polygon(cfg);
    BilliardSequence a = resolve_sequence(cfg, polygon_k(cfg, P));
    FillingReport rep = fills(P, cyclic_family(P, a));
    out << dump_json(filling_to_json(rep));
    return 0;
  }

  if (cfg.command == "euclid") {
    Json scan = Json::array();
    std::vector<double> grid;
    for (int t = -20; t <= 20; ++t) grid.push_back(std::pow(10.0, 0.1 * t));
    for (double c : grid) {
      Json row;
      row["c"] = c;
      row["L"] = closed_form_length(cfg.n, cfg.m, c);
      scan.push_back(row);
    }
    RectangleMinimum mn = minimize_c(cfg.n, cfg.m);
    ScanVerdict v = inequality_scan(cfg.n, cfg.m, grid);
    Json j;
    j["n"] = cfg.n;
    j["m"] = cfg.m;
    j["c_star"] = mn.c_star;
    j["value"] = mn.value;
    j["degenerate"] = mn.degenerate;
    j["all_hold"] = v.all_hold;
    j["worst_margin"] = v.worst_margin;
    j["scan"] = scan;
    out << dump_json(j);
    return 0;
  }

  if (cfg.command == "render") {
    IdealPolygon P = resolve_polygon(cfg);
    BilliardSequence a = resolve_sequence(cfg, polygon_k(cfg, P));
    if (cfg.format != "svg" && cfg.format != "json")
      throw ValidationError("unknown format " + cfg.format);
    CyclicFamily fam = cyclic_family(P, a);
    if (cfg.format == "json") {
      Json j;
      j["svg"] = render_svg(P, fam);
      out << dump_json(j);
    } else {
      out << render_svg(P, fam);
    }
    return 0;
  }

  throw ValidationError("unknown command " + cfg.command);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ostringstream doc;
  int status = 0;
  try {
    status = dispatch(cfg, doc);
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << "\n";
    status = 2;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    status = 1;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    status = 1;
  }

  if (cfg.out_path.empty()) {
    out << doc.str();
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << cfg.out_path << "\n";
      return status == 0 ? 1 : status;
    }
    f << doc.str();
  }
  return status;
}

}  // namespace billiards
