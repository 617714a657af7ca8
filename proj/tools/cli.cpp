#include "cli.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "qfcodes/json.hpp"
#include "qfcodes/minimality.hpp"

namespace qfc::cli {

namespace fs = std::filesystem;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeLimit:
      return kBudget;
    case ErrorKind::InternalInconsistency:
      return kMismatch;
    default:
      return kInvalid;
  }
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidInput, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

Elem parse_element(const FieldContext& f, std::string_view s, std::string_view what) {
  const std::uint64_t v = parse_uint(s, what);
  if (v >= f.order()) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " " + std::to_string(v) + " is not an element of F_" +
                                             std::to_string(f.order()));
  }
  return static_cast<Elem>(v);
}

}  // namespace

void apply_coefficients(QuadForm& q, std::string_view spec) {
  const FieldContext& F = q.field();
  std::map<std::pair<unsigned, unsigned>, bool> seen;
  for (std::string_view term : split(spec, ';')) {
    term = trim(term);
    if (term.empty()) continue;
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::InvalidInput, "coefficient needs 'i,j:c'");
    const auto idx = split(term.substr(0, colon), ',');
    if (idx.size() != 2) throw Error(ErrorKind::InvalidInput, "coefficient needs two indices");
    const auto i = parse_uint(idx[0], "index"), j = parse_uint(idx[1], "index");
    if (i < 1 || j < i || j > q.variables()) {
      throw Error(ErrorKind::InvalidInput, "indices must satisfy 1 <= i <= j <= m");
    }
    if (!seen.emplace(std::pair{unsigned(i), unsigned(j)}, true).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate coefficient " + std::to_string(i) + "," + std::to_string(j));
    }
    q.set_coefficient(static_cast<unsigned>(i - 1), static_cast<unsigned>(j - 1),
                      parse_element(F, term.substr(colon + 1), "coefficient"));
  }
}

FormClass parse_canonical(const FieldContext& f, std::string_view spec, unsigned m) {
  std::optional<unsigned> r;
  std::optional<FormType> type;
  std::optional<std::string_view> mu;
  for (std::string_view kv : split(spec, ',')) {
    kv = trim(kv);
    if (kv.empty()) continue;
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::InvalidInput, "canonical spec needs key=value");
    const auto key = trim(kv.substr(0, eq)), value = trim(kv.substr(eq + 1));
    if (key == "r") {
      r = static_cast<unsigned>(parse_uint(value, "rank"));
    } else if (key == "type") {
      if (value == "I") type = FormType::I;
      else if (value == "II") type = FormType::II;
      else if (value == "III") type = FormType::III;
      else throw Error(ErrorKind::InvalidInput, "type must be I, II or III");
    } else if (key == "mu") {
      mu = value;
    } else {
      throw Error(ErrorKind::InvalidInput, "unknown canonical key '" + std::string(key) + "'");
    }
  }
  if (!r || !type) throw Error(ErrorKind::InvalidInput, "canonical spec needs r and type");
  if (*r > m) throw Error(ErrorKind::InvalidInput, "rank exceeds m");
  switch (*type) {
    case FormType::I:
      if (*r % 2 != 0) throw Error(ErrorKind::InvalidInput, "type I needs even rank");
      break;
    case FormType::III:
      if (*r % 2 != 0 || *r == 0) throw Error(ErrorKind::InvalidInput, "type III needs even rank >= 2");
      break;
    case FormType::II:
      if (*r % 2 == 0) throw Error(ErrorKind::InvalidInput, "type II needs odd rank");
      break;
  }
  if (*type != FormType::II) {
    if (mu) throw Error(ErrorKind::InvalidInput, "mu applies to type II only");
    return *type == FormType::I ? FormClass::hyperbolic(*r) : FormClass::elliptic(*r);
  }
  int eta_mu = 1;
  if (mu && *mu == "gamma") {
    eta_mu = -1;
  } else if (mu) {
    const Elem e = parse_element(f, *mu, "mu");
    if (e == 0) throw Error(ErrorKind::InvalidInput, "mu must be nonzero");
    eta_mu = f.eta(e);
  }
  return FormClass::odd(*r, eta_mu);
}

QuadForm build_form(const RunConfig& cfg) {
  const int sources = !cfg.coeffs.empty() + !cfg.canonical.empty() + !cfg.trace.empty();
  if (sources != 1) {
    throw Error(ErrorKind::InvalidInput, "give exactly one of --coeffs, --canonical, --trace");
  }
  if (cfg.m == 0) throw Error(ErrorKind::InvalidInput, "--m must be at least 1");
  FieldPtr F = make_field(cfg.p, cfg.e);
  if (!cfg.canonical.empty()) {
    return standard_form(F, parse_canonical(*F, cfg.canonical, cfg.m), cfg.m);
  }
  if (!cfg.coeffs.empty()) {
    QuadForm q(F, cfg.m);
    apply_coefficients(q, cfg.coeffs);
    return q;
  }
  const ExtContext ext = ExtContext::make(F, cfg.m, cfg.max_points);
  std::vector<ExtElem> coeffs;
  for (std::string_view c : split(cfg.trace, ',')) {
    const std::uint64_t v = parse_uint(c, "trace coefficient");
    if (v >= ext.size()) throw Error(ErrorKind::InvalidInput, "trace coefficient outside F_{q^m}");
    coeffs.push_back(v);
  }
  const auto basis = ext.polynomial_basis();
  return form_from_function(ext, trace_quadratic(ext, std::move(coeffs)), basis);
}

std::vector<Elem> parse_values(const FieldContext& f, std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw Error(ErrorKind::InvalidInput, "--a is required");
  std::vector<Elem> out;
  if (spec == "all-nonzero") {
    for (Elem a = 1; a < f.order(); ++a) out.push_back(a);
  } else {
    out.push_back(parse_element(f, spec, "a"));
  }
  return out;
}

ConventionPolicy parse_policy(std::string_view s) {
  if (s == "paper") return ConventionPolicy::Paper;
  if (s == "reflected") return ConventionPolicy::Reflected;
  if (s == "adjudicate") return ConventionPolicy::Adjudicate;
  throw Error(ErrorKind::InvalidInput, "convention must be paper, reflected or adjudicate");
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

class Deadline {
 public:
  explicit Deadline(double seconds) : seconds_(seconds), start_(std::chrono::steady_clock::now()) {}
  bool passed() const {
    if (seconds_ <= 0) return false;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() > seconds_;
  }

 private:
  double seconds_;
  std::chrono::steady_clock::time_point start_;
};

void require_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv") throw Error(ErrorKind::InvalidInput, "format must be json or csv");
}

int report_exit(const VerificationReport& r) {
  if (!r.predicted_available()) return kInvalid;
  return r.verified() ? kVerified : kMismatch;
}

int report_exit(const Json& j) {
  if (!j.at("unsupported").is_null()) return kInvalid;
  return j.at("verified").get<bool>() ? kVerified : kMismatch;
}

struct CellResult {
  std::string json;
  int code = kVerified;
};

fs::path cache_path(const std::string& dir, const std::string& key) {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
  return fs::path(dir) / name.str();
}

// One verify record, served from the cache when possible.
CellResult verify_cached(const QuadForm& q, Elem a, ConventionPolicy policy, const RunConfig& cfg,
                         const EnumerationOptions& opts) {
  std::string key;
  if (!cfg.cache_dir.empty()) {
    key = "verify-v1|" + form_to_json(q).dump() + "|a=" + std::to_string(a) + "|" + to_string(policy);
    std::ifstream in(cache_path(cfg.cache_dir, key));
    std::string line;
    if (in && std::getline(in, line)) {
      try {
        return {line, report_exit(Json::parse(line))};
      } catch (const std::exception&) {
        // unreadable entry: recompute and overwrite
      }
    }
  }
  const VerificationReport r = verify(q, a, policy, opts);
  CellResult out{report_to_json(r).dump(), report_exit(r)};
  if (!cfg.cache_dir.empty()) {
    fs::create_directories(cfg.cache_dir);
    const fs::path path = cache_path(cfg.cache_dir, key);
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream f(tmp);
      f << out.json << "\n";
    }
    fs::rename(tmp, path);
  }
  return out;
}

std::string class_sign(const FormClass& c) {
  return std::to_string(c.type == FormType::II ? c.eta_mu : c.epsilon);
}

}  // namespace

int run_classify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  const QuadForm q = build_form(cfg);
  const Standardization s = standardize(q);
  if (cfg.format == "csv") {
    out << "rank,type,epsilon,eta_mu\n";
    const FormClass& c = s.form_class;
    out << c.rank << "," << to_string(c.type) << "," << (c.type == FormType::II ? "" : std::to_string(c.epsilon))
        << "," << (c.type == FormType::II ? std::to_string(c.eta_mu) : "") << "\n";
  } else {
    out << classify_to_json(q, s).dump() << "\n";
  }
  return kVerified;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  const QuadForm q = build_form(cfg);
  const auto values = parse_values(q.field(), cfg.a);
  const ConventionPolicy policy = parse_policy(cfg.convention);
  const EnumerationOptions opts{{cfg.max_points}, cfg.workers};
  const Deadline deadline(cfg.time_budget);

  int code = kVerified;
  if (cfg.format == "csv") out << "a,weight,brute,predicted\n";
  for (Elem a : values) {
    if (deadline.passed()) {
      std::cerr << "time budget exhausted before a = " << a << "\n";
      return kBudget;
    }
    if (cfg.format == "csv") {
      const VerificationReport r = verify(q, a, policy, opts);
      const std::string csv = wd_to_csv(r.brute_wd, r.predicted_wd);
      for (std::string_view row : split(csv, '\n')) {
        if (row.empty() || row.starts_with("weight")) continue;
        out << a << "," << row << (r.predicted_wd ? "" : ",") << "\n";
      }
      code = std::max(code, report_exit(r));
    } else {
      const CellResult cell = verify_cached(q, a, policy, cfg, opts);
      out << cell.json << "\n";
      code = std::max(code, cell.code);
    }
  }
  return code;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  const ConventionPolicy policy = parse_policy(cfg.convention);

  struct Cell {
    FieldPtr field;
    unsigned m;
    FormClass cls;
    Elem a;
  };
  std::vector<Cell> cells;
  for (unsigned q : cfg.q_list) {
    const auto [p, e] = split_prime_power(q);
    FieldPtr F = make_field(p, e);
    for (unsigned m = 1; m <= cfg.m_max; ++m) {
      for (const FormClass& c : all_classes(m)) {
        if (c.rank == 0) continue;
        for (Elem a = 1; a < F->order(); ++a) cells.push_back({F, m, c, a});
      }
    }
  }

  const EnumerationOptions opts{{cfg.max_points}, 1};
  const Deadline deadline(cfg.time_budget);
  std::vector<std::optional<CellResult>> results(cells.size());
  std::vector<std::optional<VerificationReport>> reports(cfg.format == "csv" ? cells.size() : 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};

  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      if (deadline.passed()) {
        out_of_time = true;
        return;
      }
      const Cell& c = cells[i];
      const QuadForm q = standard_form(c.field, c.cls, c.m);
      try {
        if (cfg.format == "csv") {
          reports[i] = verify(q, c.a, policy, opts);
          results[i] = CellResult{"", report_exit(*reports[i])};
        } else {
          results[i] = verify_cached(q, c.a, policy, cfg, opts);
        }
      } catch (const Error& err) {
        Json params{{"p", c.field->characteristic()}, {"e", c.field->degree()}, {"m", c.m},
                    {"form", form_to_json(q)}, {"a", c.a}};
        Json rec{{"kind", "error"},
                 {"params", params},
                 {"class", class_to_json(c.cls)},
                 {"error", {{"kind", to_string(err.kind())}, {"message", err.what()}}}};
        results[i] = CellResult{rec.dump(), exit_code(err.kind())};
      }
    }
  };
  const unsigned n_workers = std::max(1U, cfg.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t passed = 0, failed = 0, skipped = 0;
  if (cfg.format == "csv") out << "q,m,rank,type,sign,a,n,verified,paper,reflected\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!results[i]) {
      ++skipped;
      continue;
    }
    (results[i]->code == kVerified ? passed : failed) += 1;
    if (cfg.format == "csv") {
      const Cell& c = cells[i];
      if (!reports[i]) continue;
      const VerificationReport& r = *reports[i];
      auto word = [](const ConventionOutcome& o) { return o.match ? "match" : "mismatch"; };
      out << c.field->order() << "," << c.m << "," << c.cls.rank << "," << to_string(c.cls.type) << ","
          << class_sign(c.cls) << "," << c.a << "," << r.n << "," << (r.verified() ? "true" : "false") << ","
          << word(r.paper) << "," << word(r.reflected) << "\n";
    } else {
      out << results[i]->json << "\n";
    }
  }
  if (cfg.format == "json") {
    Json summary{{"kind", "summary"},
                 {"cells", cells.size()},
                 {"passed", passed},
                 {"failed", failed},
                 {"skipped", skipped},
                 {"budget_exceeded", out_of_time.load()}};
    out << summary.dump() << "\n";
  }
  if (out_of_time) return kBudget;
  return failed == 0 ? kVerified : kMismatch;
}

int run_minimal(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  const QuadForm q = build_form(cfg);
  const FieldContext& F = q.field();
  const auto values = parse_values(F, cfg.a);
  const FormClass cls = classify(q);
  const EnumerationLimits limits{cfg.max_points};

  int code = kVerified;
  if (cfg.format == "csv") {
    out << "a,w_min,w_max,ratio_test,parameter_condition,cover_mode,covering_codewords,pairs_checked\n";
  }
  for (Elem a : values) {
    MinimalityReport rep{minimality_ratio(F, cls, q.variables(), a), std::nullopt};
    std::optional<std::string> skipped;
    BigInt n = predicted_length(F, cls, q.variables(), a);
    try {
      const DefiningSet d = defining_set(q, a, limits);
      rep.cover = exhaustive_minimality(d, {cfg.pair_budget, cfg.seed, 64, limits});
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::SizeLimit) throw;
      skipped = err.what();
    }
    if (rep.ratio.all_minimal && rep.cover && !rep.cover->all_minimal()) code = std::max<int>(code, kMismatch);

    if (cfg.format == "csv") {
      out << a << "," << rep.ratio.w_min << "," << rep.ratio.w_max << ","
          << (rep.ratio.all_minimal ? "all-minimal" : "not-satisfied") << ","
          << (rep.ratio.parameter_condition ? "true" : "false") << ","
          << (rep.cover ? (rep.cover->exhaustive ? "exhaustive" : "sampled") : "skipped") << ","
          << (rep.cover ? std::to_string(rep.cover->covering_codewords) : "") << ","
          << (rep.cover ? std::to_string(rep.cover->pairs_checked) : "") << "\n";
      continue;
    }
    Json params{{"p", F.characteristic()}, {"e", F.degree()}, {"m", q.variables()}, {"form", form_to_json(q)},
                {"a", a}};
    Json mj = minimality_to_json(rep);
    mj["cover_skipped"] = skipped ? Json(*skipped) : Json(nullptr);
    Json rec{{"kind", "minimal"}, {"params", params}, {"class", class_to_json(cls)}, {"n", big_to_json(n)},
             {"minimality", mj}};
    out << rec.dump() << "\n";
  }
  return code;
}

}  // namespace qfc::cli
