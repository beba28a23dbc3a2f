#include "dilog7/report.hpp"

#include <atomic>
#include <ctime>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace dilog7 {

namespace {

std::string utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<IdentityId> selected(const RunConfig& config) {
  if (config.all || config.identities.empty()) return all_identities();
  // keep enum order, drop duplicates
  std::vector<IdentityId> out;
  for (IdentityId id : all_identities()) {
    for (IdentityId want : config.identities) {
      if (want == id) {
        out.push_back(id);
        break;
      }
    }
  }
  return out;
}

}  // namespace

ReportDocument run_verifications(const RunConfig& config) {
  PrecisionContext ctx = make_context(config.digits);
  int required = config.required_digits.value_or(config.digits - 10);
  if (config.required_digits && *config.required_digits >= config.digits) {
    throw ConfigError("required digits must be below the context digits");
  }

  std::vector<IdentityId> ids = selected(config);

  ReportDocument doc;
  doc.tool = kToolName;
  doc.version = kToolVersion;
  doc.timestamp = utc_now();
  doc.config = config;
  doc.reports.resize(ids.size());

  int jobs = config.jobs;
  if (jobs < 1) jobs = 1;
  if (jobs > static_cast<int>(ids.size())) jobs = static_cast<int>(ids.size());

  std::atomic<std::size_t> next{0};
  std::vector<std::string> worker_errors(ids.size());
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= ids.size()) return;
      try {
        doc.reports[i] = verify(ids[i], ctx, required, config.max_levels);
      } catch (const std::exception& e) {
        IdentityReport r;
        r.id = ids[i];
        r.required_digits = required;
        r.error = e.what();
        doc.reports[i] = std::move(r);
      }
    }
  };

  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  doc.overall_pass = true;
  for (const IdentityReport& r : doc.reports) {
    if (!r.error.empty()) doc.execution_error = true;
    if (!r.passed) doc.overall_pass = false;
  }
  return doc;
}

std::string to_json(const ReportDocument& doc) {
  nlohmann::ordered_json j;
  j["tool"] = doc.tool;
  j["version"] = doc.version;
  j["timestamp"] = doc.timestamp;
  nlohmann::ordered_json cfg;
  cfg["digits"] = doc.config.digits;
  cfg["required"] = doc.config.required_digits.value_or(doc.config.digits - 10);
  cfg["max_levels"] = doc.config.max_levels;
  cfg["jobs"] = doc.config.jobs;
  nlohmann::ordered_json sel = nlohmann::ordered_json::array();
  for (const IdentityReport& r : doc.reports) sel.push_back(to_string(r.id));
  cfg["identities"] = sel;
  j["config"] = cfg;

  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const IdentityReport& r : doc.reports) {
    nlohmann::ordered_json e;
    e["id"] = to_string(r.id);
    e["kind"] = kind(r.id) == IdentityKind::kTheorem ? "theorem" : "conjecture";
    if (r.error.empty()) {
      e["lhs"] = r.lhs.str(doc.config.digits);
      e["rhs"] = r.rhs.str(doc.config.digits);
      e["digits_agreed"] = r.digits_agreed;
    } else {
      e["error"] = r.error;
    }
    e["required"] = r.required_digits;
    e["passed"] = r.passed;
    e["wall_ms"] = r.wall.count();
    reports.push_back(std::move(e));
  }
  j["reports"] = reports;
  j["overall"] = doc.overall_pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string to_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << doc.tool << " " << doc.version << " verification report (" << doc.timestamp << ")\n";
  os << "digits=" << doc.config.digits
     << " required=" << doc.config.required_digits.value_or(doc.config.digits - 10)
     << " max_levels=" << doc.config.max_levels << " jobs=" << doc.config.jobs << "\n\n";
  for (const IdentityReport& r : doc.reports) {
    os << to_string(r.id) << " ["
       << (kind(r.id) == IdentityKind::kTheorem ? "theorem" : "conjecture") << "] ";
    if (r.error.empty()) {
      os << "digits_agreed=" << r.digits_agreed << " required=" << r.required_digits << " "
         << (r.passed ? "PASS" : "FAIL");
    } else {
      os << "ERROR required=" << r.required_digits << " (" << r.error << ")";
    }
    os << " [" << r.wall.count() << " ms]\n";
    if (r.error.empty()) {
      os << "  lhs = " << r.lhs.str(doc.config.digits) << "\n";
      os << "  rhs = " << r.rhs.str(doc.config.digits) << "\n";
    }
  }
  os << "\noverall: " << (doc.overall_pass ? "pass" : "fail") << "\n";
  return os.str();
}

int exit_code(const ReportDocument& doc) {
  if (doc.execution_error) return 2;
  return doc.overall_pass ? 0 : 1;
}

}  // namespace dilog7
