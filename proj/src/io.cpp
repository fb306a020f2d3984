#include "covol/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace covol {

namespace {

std::string fmt_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", std::clamp(digits, 1, 17), v);
  return buf;
}

std::string fmt_log10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const std::vector<std::string> kRecordFields = {
    "space_id", "N", "d", "alpha_G", "C1", "C2", "r", "k",
    "integration_limit", "bound_log10", "bound_scientific", "mode"};

std::vector<std::string> record_values(const OutputRecord& r, int digits) {
  return {r.space_id,
          std::to_string(r.N),
          std::to_string(r.d),
          std::to_string(r.alpha_G),
          fmt_double(r.C1, digits),
          fmt_double(r.C2, digits),
          fmt_double(r.r, digits),
          fmt_double(r.k, digits),
          fmt_double(r.integration_limit, digits),
          fmt_log10(r.bound_log10),
          r.bound_scientific,
          r.mode};
}

std::string render_table(const std::vector<std::string>& head,
                         const std::vector<std::vector<std::string>>& rows, bool header) {
  std::vector<std::size_t> width(head.size(), 0);
  if (header)
    for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = c < row.size() ? row[c] : std::string{};
      out << cell;
      if (c + 1 < width.size()) out << std::string(width[c] - cell.size() + 2, ' ');
    }
    out << '\n';
  };
  if (header) emit(head);
  for (const auto& row : rows) emit(row);
  return out.str();
}

std::string render_csv(const std::vector<std::string>& head,
                       const std::vector<std::vector<std::string>>& rows, bool header) {
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << csv_quote(row[c]);
    }
    out << '\n';
  };
  if (header) emit(head);
  for (const auto& row : rows) emit(row);
  return out.str();
}

nlohmann::json record_json(const OutputRecord& r, int digits) {
  nlohmann::json j;
  j["space_id"] = r.space_id;
  j["N"] = r.N;
  j["d"] = r.d;
  j["alpha_G"] = r.alpha_G;
  j["C1"] = std::stod(fmt_double(r.C1, digits));
  j["C2"] = std::stod(fmt_double(r.C2, digits));
  j["r"] = std::stod(fmt_double(r.r, digits));
  j["k"] = std::stod(fmt_double(r.k, digits));
  j["integration_limit"] = std::stod(fmt_double(r.integration_limit, digits));
  j["bound_log10"] = std::stod(fmt_log10(r.bound_log10));
  j["bound_scientific"] = r.bound_scientific;
  j["mode"] = r.mode;
  return j;
}

// --- structured file parsing -------------------------------------------------

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, const std::string& context) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::runtime_error(context + ": expected an integer, got '" + tok + "'");
  return v;
}

Rational parse_rational(const std::string& tok, const std::string& context) {
  const auto slash = tok.find('/');
  if (slash == std::string::npos) return Rational(parse_int(tok, context));
  const long long num = parse_int(tok.substr(0, slash), context);
  const long long den = parse_int(tok.substr(slash + 1), context);
  if (den == 0) throw std::runtime_error(context + ": zero denominator in '" + tok + "'");
  return Rational(num, den);
}

struct SpaceSection {
  std::map<std::string, std::string> keys;
  std::string where;
};

struct RootsSection {
  std::string space_id;
  int dim = 0;
  std::vector<std::vector<Rational>> gram;
  std::vector<RestrictedRootSystem::Root> roots;
  std::string where;
};

void commit_space(const SpaceSection& sec, SpaceRegistry& registry) {
  auto need = [&](const std::string& key) -> const std::string& {
    const auto it = sec.keys.find(key);
    if (it == sec.keys.end())
      throw std::runtime_error(sec.where + ": [space] section missing key '" + key + "'");
    return it->second;
  };
  SymmetricSpaceSpec s;
  s.id = need("id");
  s.N = parse_int(need("N"), sec.where);
  s.d = parse_int(need("d"), sec.where);
  s.alpha_G = parse_int(need("alpha_G"), sec.where);
  const auto cls = catalog::constants_class_from_string(need("constants_class"));
  if (!cls)
    throw std::runtime_error(sec.where + ": unknown constants_class '" + need("constants_class") +
                             "' (expected EQUAL_SQRT2, ONE_SQRT2 or H3_SPECIAL)");
  s.constants_class = *cls;
  if (s.N < 2 || s.d <= s.N)
    throw std::runtime_error(sec.where + ": need d > N >= 2 for space " + s.id);
  if (s.alpha_G < 2 || s.alpha_G % 2 != 0)
    throw std::runtime_error(sec.where + ": alpha_G must be an even integer >= 2 for " + s.id);

  const bool has_kvol = std::any_of(sec.keys.begin(), sec.keys.end(),
                                    [](const auto& kv) { return kv.first.starts_with("kvol_"); });
  if (has_kvol) {
    ExactVolumeExpression e;
    if (const auto it = sec.keys.find("kvol_pow2"); it != sec.keys.end())
      e.pow2 = parse_int(it->second, sec.where);
    if (const auto it = sec.keys.find("kvol_pow_pi"); it != sec.keys.end())
      e.pow_pi = parse_rational(it->second, sec.where);
    if (const auto it = sec.keys.find("kvol_sqrt"); it != sec.keys.end())
      e.sqrt_int = parse_int(it->second, sec.where);
    if (const auto it = sec.keys.find("kvol_scalar"); it != sec.keys.end())
      e.rational_scalar = parse_rational(it->second, sec.where);
    if (const auto it = sec.keys.find("kvol_factorials"); it != sec.keys.end())
      for (const auto& tok : split_ws(it->second))
        e.factorial_denominators.push_back(static_cast<unsigned>(parse_int(tok, sec.where)));
    if (!e.rational_scalar.is_positive() || e.sqrt_int < 1)
      throw std::runtime_error(sec.where + ": k_volume must be positive for " + s.id);
    s.k_volume = std::move(e);
  }
  s.bound_supported = s.k_volume.has_value();
  registry.register_space(std::move(s));
}

void commit_roots(RootsSection& sec, SpaceRegistry& registry) {
  if (sec.space_id.empty())
    throw std::runtime_error(sec.where + ": [roots] section missing key 'space'");
  if (sec.dim < 1) throw std::runtime_error(sec.where + ": [roots] section missing key 'dim'");
  if (static_cast<int>(sec.gram.size()) != sec.dim)
    throw std::runtime_error(sec.where + ": expected " + std::to_string(sec.dim) +
                             " gram_row lines for " + sec.space_id);
  RestrictedRootSystem rrs;
  rrs.ambient_dim = sec.dim;
  rrs.gram = std::move(sec.gram);
  rrs.roots = std::move(sec.roots);
  if (rrs.roots.empty())
    throw std::runtime_error(sec.where + ": no roots listed for " + sec.space_id);
  registry.register_root_system(sec.space_id, std::move(rrs));
}

}  // namespace

OutputRecord make_output_record(const BoundResult& result, const SymmetricSpaceSpec& space,
                                int digits) {
  OutputRecord r;
  r.space_id = result.space_id;
  r.N = space.N;
  r.d = space.d;
  r.alpha_G = space.alpha_G;
  r.C1 = result.profile.c1;
  r.C2 = result.profile.c2;
  r.r = result.r_used;
  r.k = result.k_used;
  r.integration_limit = result.limit_used;
  r.bound_log10 = result.bound.log10();
  r.bound_scientific = result.bound.scientific(digits);
  r.mode = to_string(result.mode);
  return r;
}

std::string format_records(const std::vector<OutputRecord>& records, OutputFormat format,
                           int digits, bool header) {
  std::vector<RecordOrError> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back({r, r.space_id, {}});
  return format_rows(rows, format, digits, header);
}

std::string format_rows(const std::vector<RecordOrError>& rows, OutputFormat format, int digits,
                        bool header) {
  if (format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      if (row.record) {
        arr.push_back(record_json(*row.record, digits));
      } else {
        arr.push_back({{"space_id", row.space_id}, {"error", row.error}});
      }
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    if (row.record) {
      cells.push_back(record_values(*row.record, digits));
    } else {
      std::vector<std::string> c(kRecordFields.size());
      c[0] = row.space_id;
      c.back() = "error: " + row.error;
      cells.push_back(std::move(c));
    }
  }
  return format == OutputFormat::Csv ? render_csv(kRecordFields, cells, header)
                                     : render_table(kRecordFields, cells, header);
}

std::string format_list(const std::vector<ListRow>& rows, OutputFormat format, bool header) {
  const std::vector<std::string> head = {"id", "N", "d", "alpha_G", "constants_class"};
  if (format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"id", r.id},
                     {"N", r.N},
                     {"d", r.d},
                     {"alpha_G", r.alpha_G},
                     {"constants_class", r.constants_class}});
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows)
    cells.push_back({r.id, std::to_string(r.N), std::to_string(r.d), std::to_string(r.alpha_G),
                     r.constants_class});
  return format == OutputFormat::Csv ? render_csv(head, cells, header)
                                     : render_table(head, cells, header);
}

std::optional<SymmetricSpaceSpec> SpaceRegistry::find(std::string_view id) const {
  if (auto s = catalog::find_space(id)) return s;
  for (const auto& s : spaces_)
    if (s.id == id) return s;
  return std::nullopt;
}

void SpaceRegistry::register_space(SymmetricSpaceSpec space) {
  if (space.id.empty()) throw std::runtime_error("cannot register a space without an id");
  if (find(space.id))
    throw std::runtime_error("space id '" + space.id + "' already exists");
  spaces_.push_back(std::move(space));
}

void SpaceRegistry::register_root_system(const std::string& space_id, RestrictedRootSystem rrs) {
  roots_[space_id] = std::move(rrs);
}

void load_structured_file(const std::string& path, SpaceRegistry& registry) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);

  enum class Mode { None, Space, Roots };
  Mode mode = Mode::None;
  SpaceSection space;
  RootsSection roots;
  int lineno = 0;

  auto flush = [&]() {
    if (mode == Mode::Space) commit_space(space, registry);
    if (mode == Mode::Roots) commit_roots(roots, registry);
    space = {};
    roots = {};
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string where = path + ":" + std::to_string(lineno);
    std::string line = trim(raw);
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    if (line == "[space]" || line == "[roots]") {
      flush();
      mode = line == "[space]" ? Mode::Space : Mode::Roots;
      (mode == Mode::Space ? space.where : roots.where) = where;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(where + ": expected 'key = value' or a section header");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (mode == Mode::Space) {
      if (!space.keys.emplace(key, value).second)
        throw std::runtime_error(where + ": duplicate key '" + key + "'");
    } else if (mode == Mode::Roots) {
      if (key == "space") {
        roots.space_id = value;
      } else if (key == "dim") {
        roots.dim = static_cast<int>(parse_int(value, where));
      } else if (key == "gram_row") {
        std::vector<Rational> row;
        for (const auto& tok : split_ws(value)) row.push_back(parse_rational(tok, where));
        roots.gram.push_back(std::move(row));
      } else if (key == "root") {
        auto toks = split_ws(value);
        RestrictedRootSystem::Root root;
        // trailing "mult m" is optional
        if (toks.size() >= 2 && toks[toks.size() - 2] == "mult") {
          root.multiplicity = static_cast<int>(parse_int(toks.back(), where));
          toks.resize(toks.size() - 2);
        }
        if (root.multiplicity < 1) throw std::runtime_error(where + ": multiplicity must be >= 1");
        for (const auto& tok : toks) root.coords.push_back(parse_rational(tok, where));
        if (root.coords.empty()) throw std::runtime_error(where + ": empty root vector");
        roots.roots.push_back(std::move(root));
      } else {
        throw std::runtime_error(where + ": unknown key '" + key + "' in [roots] section");
      }
    } else {
      throw std::runtime_error(where + ": data before any [space]/[roots] section");
    }
  }
  flush();
}

OutputFormat output_format_from_string(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + std::string(text) +
                              "' (expected table, json or csv)");
}

}  // namespace covol
