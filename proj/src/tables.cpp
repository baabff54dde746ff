#include "ekr/tables.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "ekr/error.hpp"

namespace ekr {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw ConfigError("unsupported format '" + std::string(name) + "', supported formats: json|csv|text");
}

namespace {

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string complex_text(CharValue v) {
  // Clean up -0 and rounding noise so identical runs print identical text.
  const auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", clean(v.real()), clean(v.imag()));
  return buf;
}

}  // namespace

std::string render(const Table& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& row : table.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = row.at(i);
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_escape(table.columns[i]);
      os << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        os << '\n';
      }
      break;
    }
    case Format::Text: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
      const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          os << cells[i];
          if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        os << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(cell_text(c));
        line(cells);
      }
      break;
    }
  }
  return os.str();
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {"classes",  "irreps",   "eta",        "derangements",
                                                 "sigma",    "spectrum", "characters", "eigentable"};
  return names;
}

json rational_json(const Rational& r) {
  const auto part = [](const mpz_class& z) -> json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return {{"num", part(r.get_num())}, {"den", part(r.get_den())}};
}

Table make_table(const Context& ctx, std::string_view which) {
  const EkrConfig& cfg = ctx.config();
  Table t;
  if (which == "classes") {
    t.columns = {"class", "kind", "param1", "param2", "size", "order"};
    for (const auto& c : class_inventory(ctx)) {
      t.rows.push_back({to_string(c), to_string(c.kind), c.p1, c.p2, c.size, element_order(ctx, c)});
    }
  } else if (which == "irreps") {
    t.columns = {"irrep", "family", "r", "s", "dim"};
    for (const auto& l : irrep_inventory(ctx)) t.rows.push_back({to_string(l), to_string(l.family), l.r, l.s, l.dim});
  } else if (which == "eta") {
    t.columns = {"class", "kind", "param1", "param2", "size", "eta", "eta_burnside", "eta_kernel", "derangement", "in_H"};
    const auto classes = class_inventory(ctx);
    for (const auto& r : eta_reports(ctx, classes)) {
      t.rows.push_back({to_string(r.cls), to_string(r.cls.kind), r.cls.p1, r.cls.p2, r.cls.size, r.eta_closed,
                        r.eta_burnside, r.eta_kernel, is_derangement(ctx, r.cls), class_in_h(ctx, r.cls)});
    }
  } else if (which == "derangements") {
    t.columns = {"family", "class", "kind", "param1", "param2", "size"};
    const auto inv = derangement_inventory(ctx, class_inventory(ctx));
    for (int fam = 0; fam < 4; ++fam) {
      for (const auto& c : inv.families[static_cast<std::size_t>(fam)]) {
        t.rows.push_back({"c" + std::to_string(fam + 1), to_string(c), to_string(c.kind), c.p1, c.p2, c.size});
      }
    }
  } else if (which == "sigma") {
    t.columns = {"kind", "r", "s", "direct", "closed"};
    for (SigmaKind kind : {SigmaKind::C, SigmaKind::D, SigmaKind::E1, SigmaKind::E2}) {
      for (const auto& [r, s] : sigma_indices(cfg, kind)) {
        const std::int64_t direct = round_checked(sigma_direct(ctx, kind, r, s), 1e-9 * cfg.m, "sigma");
        const auto closed = sigma_closed(cfg, kind, r, s);
        t.rows.push_back({to_string(kind), r, s, direct, closed ? json(*closed) : json("zero-case")});
      }
    }
  } else if (which == "spectrum" || which == "eigentable") {
    const auto classes = class_inventory(ctx);
    const auto irreps = irrep_inventory(ctx);
    const auto inv = derangement_inventory(ctx, classes);
    const BabaiTable babai = babai_table(ctx, inv, irreps);
    if (which == "spectrum") {
      t.columns = {"theta", "theta_decimal", "multiplicity"};
      const auto spec = weighted_spectrum(cfg, irreps, babai, weight_vector(cfg));
      for (const auto& [theta, mult] : spec.distinct) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", to_double(theta));
        t.rows.push_back({to_string(theta), std::string(buf), mult});
      }
    } else {
      t.columns = {"row", "case", "gamma1", "gamma2", "gamma3", "gamma4", "irreps", "multiplicity"};
      for (const auto& row : eigen_table(ctx, irreps, babai)) {
        t.rows.push_back({row.row + 1, row.label, to_string(row.values[0]), to_string(row.values[1]),
                          to_string(row.values[2]), to_string(row.values[3]), row.irrep_count, row.multiplicity});
      }
    }
  } else if (which == "characters") {
    const auto classes = class_inventory(ctx);
    const auto irreps = irrep_inventory(ctx);
    t.columns = {"irrep"};
    for (const auto& c : classes) t.columns.push_back(to_string(c));
    const Eigen::MatrixXcd table = character_table(ctx, irreps, classes);
    for (std::size_t a = 0; a < irreps.size(); ++a) {
      std::vector<json> row{to_string(irreps[a])};
      for (std::size_t b = 0; b < classes.size(); ++b) {
        row.emplace_back(complex_text(table(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))));
      }
      t.rows.push_back(std::move(row));
    }
  } else {
    std::string known;
    for (const auto& n : table_names()) known += (known.empty() ? "" : "|") + n;
    throw ConfigError("unknown table '" + std::string(which) + "', expected one of " + known);
  }
  return t;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json certificate_json(const Certificate& cert, bool with_timestamp) {
  json j;
  j["q"] = cert.config.q;
  j["ell"] = cert.config.ell;
  j["m"] = cert.config.m;
  j["group_order"] = cert.group_order;
  j["theta1"] = rational_json(cert.theta1);
  j["theta2"] = rational_json(cert.theta2);
  j["hoffman_bound"] = rational_json(cert.hoffman_bound);
  j["h_order"] = cert.h_order;
  j["verdict"] = cert.verdict;
  json checks = json::array();
  json diagnostics = json::array();
  for (const auto& c : cert.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}});
    if (!c.passed) diagnostics.push_back({{"check", c.name}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["diagnostics"] = diagnostics;
  json w = json::array();
  for (int i = 0; i < 4; ++i) w.push_back(rational_json(cert.weights.w(i)));
  j["weights"] = {{"w", w}, {"prefactor", rational_json(cert.weights.prefactor)}};
  j["provenance"] = cert.provenance;
  j["tool_version"] = EKR_VERSION;
  if (with_timestamp) j["timestamp"] = utc_timestamp();
  return j;
}

}  // namespace ekr
