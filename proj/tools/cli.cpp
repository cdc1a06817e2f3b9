#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hullforge/tables.hpp"

namespace hullforge::cli {

namespace {

bool is_inadmissible(ErrorCode code) {
  switch (code) {
    case ErrorCode::PredicateFailed:
    case ErrorCode::NoPreimage:
    case ErrorCode::NoScalingElement:
    case ErrorCode::InvalidLevel:
    case ErrorCode::NotPrime:
    case ErrorCode::FieldTooLarge:
    case ErrorCode::InvalidDimension:
    case ErrorCode::NotADivisor:
    case ErrorCode::MixedFields:
    case ErrorCode::NotInSubfield:
      return true;
    default:
      return false;
  }
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

std::uint64_t power_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

void add(VerifyReport& r, std::string name, bool pass, std::string detail = {}) {
  r.checks.push_back({std::move(name), pass ? "pass" : "fail", std::move(detail)});
}

void skip(VerifyReport& r, std::string name, std::string detail) {
  r.checks.push_back({std::move(name), "skipped", std::move(detail)});
}

bool same_spec(const GrsSpec& a, const GrsSpec& b) {
  return a.a == b.a && a.v == b.v && a.k == b.k && a.extended == b.extended;
}

// Nonzero rows of the hull basis must lie in C and be l-orthogonal to C.
bool hull_basis_sound(const LinearCode& code, const Matrix& basis, GaloisLevel l) {
  const Field& F = code.field();
  if (basis.rows() == 0) return true;
  if (rank(vstack(code.generator(), basis)) != code.dimension()) return false;
  for (std::size_t i = 0; i < code.dimension(); ++i)
    for (std::size_t j = 0; j < basis.rows(); ++j)
      if (galois_form(F, code.generator().row(i), basis.row(j), l).code != 0) return false;
  return true;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  if (is_inadmissible(code)) return kExitInadmissible;
  if (code == ErrorCode::MalformedDescriptor) return kExitMalformed;
  return kExitInternal;
}

bool VerifyReport::ok() const noexcept {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

VerifyReport verify_descriptor(const json& descriptor) {
  CodeDescriptor d = descriptor_from_json(descriptor);
  d.spec.validate();
  const Field& F = *d.spec.field;
  const GaloisLevel l = F.level(d.l.value_or(0));
  const LinearCode code = grs_generator(d.spec);
  const std::size_t n = code.length(), k = code.dimension();

  VerifyReport r;
  const LinearCode dual = galois_dual(code, l);
  r.hull_stacked = intersection_dim(code.generator(), dual.generator());
  r.hull_rank = (n - k) - rank_h_hdagger(code, l);
  add(r, "hull-methods", r.hull_stacked == r.hull_rank,
      "stacked " + std::to_string(r.hull_stacked) + ", rankHH " + std::to_string(r.hull_rank));
  add(r, "hull-basis", hull_basis_sound(code, intersection_basis(code.generator(), dual.generator()), l),
      "basis in C and l-orthogonal to C");

  if (d.claimed_hull)
    add(r, "claimed-hull", *d.claimed_hull == r.hull_stacked,
        "claimed " + std::to_string(*d.claimed_hull) + ", measured " + std::to_string(r.hull_stacked));
  else
    skip(r, "claimed-hull", "no claim");

  std::optional<std::size_t> distance;
  bool mds_known = false;
  if (binomial_capped(n, k, kMinorBudget) <= kMinorBudget) {
    const bool mds = mds_check_minors(code);
    add(r, "mds-minors", mds, "all " + std::to_string(k) + "-column minors");
    mds_known = true;
    if (mds) distance = n - k + 1;
  } else {
    skip(r, "mds-minors", "C(n,k) over budget");
  }
  if (power_capped(F.q(), k, kBruteForceBudget) <= kBruteForceBudget) {
    const std::size_t dmin = min_distance_bruteforce(code);
    add(r, "mds-bruteforce", dmin == n - k + 1, "minimum weight " + std::to_string(dmin));
    mds_known = true;
    distance = dmin;
  } else {
    skip(r, "mds-bruteforce", "q^k over budget");
  }
  // Both routes over budget: GRS and extended GRS codes are MDS by construction.
  if (!mds_known) distance = n - k + 1;

  if (distance && *distance == n - k + 1) {
    try {
      EaqeccParams p = eaqecc_from_hull(n, k, *distance, r.hull_stacked, F.q());
      singleton_verdict(p);
      add(r, "singleton", true, p.to_string());
      if (d.claimed_eaqecc) {
        const auto& c = *d.claimed_eaqecc;
        add(r, "claimed-eaqecc", c.same_tuple(p) && c.mds == p.mds,
            "claimed " + c.to_string() + ", derived " + p.to_string());
      } else {
        skip(r, "claimed-eaqecc", "no claim");
      }
      r.eaqecc = std::move(p);
    } catch (const Error& ex) {
      add(r, "singleton", false, ex.what());
    }
  } else {
    add(r, "claimed-eaqecc", !d.claimed_eaqecc, "code is not MDS; no tuple derived");
  }

  if (d.provenance.is_object() && d.provenance.contains("request")) {
    try {
      const FamilyRequest req = family_request_from_json(d.provenance.at("request"));
      const auto replay = construct_spec(d.spec.field, req);
      add(r, "replay", same_spec(replay.first, d.spec), std::string(to_string(req.family)) + " recipe");
    } catch (const Error& ex) {
      add(r, "replay", false, ex.what());
    }
  } else {
    skip(r, "replay", "no request in provenance");
  }
  return r;
}

json verify_report_to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  json j{{"ok", r.ok()},
         {"hull", {{"stacked", r.hull_stacked}, {"rankHH", r.hull_rank}}},
         {"checks", std::move(checks)}};
  j["eaqecc"] = r.eaqecc ? eaqecc_to_json(*r.eaqecc) : json(nullptr);
  return j;
}

std::string verify_report_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    os << std::left << std::setw(16) << c.name << std::setw(9) << c.status << c.detail << '\n';
  os << (r.ok() ? "verified" : "VERIFICATION FAILED") << '\n';
  return os.str();
}

namespace {

struct Common {
  std::string format = "json";
  std::string out_path;
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void emit(const Common& c, std::ostream& out, const std::string& body) {
  if (c.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw std::runtime_error("cannot write " + c.out_path);
  f << body;
}

std::string construct_text(const FamilyEmission& em) {
  const Construction& c = em.construction;
  const Field& F = *c.spec.field;
  std::ostringstream os;
  os << "family    " << to_string(c.request.family) << '\n'
     << "field     " << F.describe() << '\n'
     << "level     l=" << c.request.l << '\n'
     << "code      [" << c.spec.length() << ", " << c.spec.k << "]" << (c.spec.extended ? " extended" : "") << '\n'
     << "hull      " << c.hull.dim_stacked << " (stacked), " << c.hull.dim_rank << " (rankHH)\n"
     << "eaqecc    " << em.params.to_string() << '\n';
  auto logs = [&](const std::vector<Element>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ' ';
      s += xs[i].code == 0 ? "0" : "a^" + std::to_string(F.discrete_log(xs[i]));
    }
    return s;
  };
  os << "points    " << logs(c.spec.a) << '\n' << "mults     " << logs(c.spec.v) << '\n';
  return os.str();
}

std::string field_info_text(const Field& F) {
  std::ostringstream os;
  os << F.describe() << '\n' << "q-1 = " << F.group_order() << ", primes";
  for (auto p : F.group_order_primes()) os << ' ' << p;
  os << '\n' << "levels";
  for (unsigned l = 0; l < F.e(); ++l) os << ' ' << l << (2 * l == F.e() ? "(hermitian)" : l == 0 ? "(euclidean)" : "");
  os << '\n';
  return os.str();
}

json field_info_json(const Field& F) {
  json j = field_to_json(F);
  j["q"] = F.q();
  j["group_order_primes"] = F.group_order_primes();
  j["log_tables"] = F.has_log_tables();
  return j;
}

std::pair<std::uint64_t, unsigned> parse_field(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--field", "expected p:e, got " + s);
  try {
    return {std::stoull(s.substr(0, colon)), static_cast<unsigned>(std::stoul(s.substr(colon + 1)))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--field", "expected p:e, got " + s);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hullforge: GRS codes with prescribed Galois hulls and MDS EAQECC parameters", "hullforge"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");

  Common common;

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Build a family code and emit its descriptor");
  std::string family_name;
  FamilyRequest req;
  std::size_t n_opt = 0;
  construct_cmd->set_help_flag("--help", "Print this help message and exit");
  construct_cmd->add_option("--family", family_name, "T1a T1b T2 T3n T3n1 T3n2 T4n T4n1 T4n2")->required();
  construct_cmd->add_option("--p", req.p, "Characteristic")->required();
  construct_cmd->add_option("--e", req.e, "Extension degree")->required();
  construct_cmd->add_option("--l", req.l, "Galois level")->default_val(0);
  auto* n_flag = construct_cmd->add_option("--n", n_opt, "Point-set size");
  construct_cmd->add_option("--k", req.k, "Code dimension")->required();
  construct_cmd->add_option("--h", req.h, "Requested hull dimension")->required();
  construct_cmd->add_option("--x1", req.x1, "Point-set exponent x1 (T3*)");
  construct_cmd->add_option("--x2", req.x2, "Point-set exponent x2 (T3*)");
  construct_cmd->add_option("--r", req.r, "Number of cosets (T3*, T4*)");
  construct_cmd->add_option("--m", req.m, "Subgroup order m (T4*)");
  construct_cmd->add_option("--out", common.out_path, "Write to a file instead of stdout");
  add_format(construct_cmd, common);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Recompute every claim in a descriptor");
  std::string descriptor_path;
  verify_cmd->add_option("descriptor", descriptor_path, "Descriptor JSON file")->required();
  add_format(verify_cmd, common);

  // table
  auto* table_cmd = app.add_subcommand("table", "Reproduce one of the four parameter tables");
  int which = 0;
  std::size_t threads = 0;
  table_cmd->add_option("which", which, "Table index")->required()->check(CLI::Range(1, 4));
  table_cmd->add_option("--threads", threads, "Worker threads (0: HULLFORGE_THREADS or hardware)");
  table_cmd->add_option("--out", common.out_path, "Write to a file instead of stdout");
  std::string table_format = "text";
  table_cmd->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Primal and dual hull dimensions over a parameter range");
  SweepConfig cfg;
  std::vector<std::string> field_args;
  std::string source = "random";
  sweep_cmd->add_option("--field", field_args, "Field as p:e (repeatable)");
  sweep_cmd->add_option("--l-min", cfg.l_min)->default_val(0);
  sweep_cmd->add_option("--l-max", cfg.l_max)->default_val(0);
  sweep_cmd->add_option("--n-min", cfg.n_min)->default_val(1);
  sweep_cmd->add_option("--n-max", cfg.n_max)->default_val(0);
  sweep_cmd->add_option("--k-min", cfg.k_min)->default_val(1);
  sweep_cmd->add_option("--k-max", cfg.k_max)->default_val(0);
  sweep_cmd->add_option("--samples", cfg.samples, "Random specs per cell")->default_val(1);
  sweep_cmd->add_option("--seed", cfg.seed)->default_val(1);
  sweep_cmd->add_option("--source", source, "random or t1a")->check(CLI::IsMember({"random", "t1a"}));
  sweep_cmd->add_option("--threads", cfg.threads);
  sweep_cmd->add_option("--out", common.out_path, "Write to a file instead of stdout");

  // field-info
  auto* field_cmd = app.add_subcommand("field-info", "Show the canonical modulus and primitive element");
  std::uint64_t fp = 0;
  unsigned fe = 0;
  field_cmd->add_option("--p", fp)->required();
  field_cmd->add_option("--e", fe)->required();
  add_format(field_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInadmissible;
  }
  const bool text = (*table_cmd ? table_format : common.format) == "text";

  if (*verify_cmd) {
    std::ifstream f(descriptor_path);
    if (!f) {
      err << "error: cannot read " << descriptor_path << '\n';
      return kExitMalformed;
    }
    VerifyReport report;
    try {
      const json j = json::parse(f);
      report = verify_descriptor(j);
    } catch (const json::exception& ex) {
      err << "malformed descriptor: " << ex.what() << '\n';
      return kExitMalformed;
    } catch (const Error& ex) {
      err << "malformed descriptor: " << ex.what() << '\n';
      return kExitMalformed;
    }
    out << (text ? verify_report_text(report) : verify_report_to_json(report).dump(2) + "\n");
    if (!report.ok()) {
      for (const auto& c : report.checks)
        if (c.status == "fail") err << "check failed: " << c.name << ": " << c.detail << '\n';
      return kExitVerifyFailed;
    }
    return kExitOk;
  }

  try {
    if (*construct_cmd) {
      const auto fam = family_from_string(family_name);
      if (!fam) {
        err << "error: unknown family '" << family_name << "'\n";
        return kExitInadmissible;
      }
      req.family = *fam;
      if (n_flag->count()) req.n = n_opt;
      const FieldPtr F = Field::create(req.p, req.e);
      const FamilyEmission em = theorem_family_emit(F, req);
      emit(common, out, text ? construct_text(em) : descriptor_to_json(em).dump(2) + "\n");
      return kExitOk;
    }
    if (*table_cmd) {
      const TableReport report = reproduce_table(which, threads);
      emit(common, out, text ? table_report_text(report) : table_report_to_json(report).dump(2) + "\n");
      if (!report.all_match()) {
        for (const auto& row : report.rows)
          if (!row.match)
            err << "row k=" << row.expected.k << " h=" << row.expected.h << " n=" << row.expected.n << ": "
                << (row.error.empty() ? (row.measured ? row.measured->to_string() : "no tuple") : row.error) << '\n';
        return kExitVerifyFailed;
      }
      return kExitOk;
    }
    if (*sweep_cmd) {
      for (const auto& s : field_args) cfg.fields.push_back(parse_field(s));
      cfg.source = source == "t1a" ? SweepSource::T1a : SweepSource::Random;
      emit(common, out, hull_pairs_csv(sweep_hull_pairs(cfg)));
      return kExitOk;
    }
    if (*field_cmd) {
      const FieldPtr F = Field::create(fp, fe);
      out << (text ? field_info_text(*F) : field_info_json(*F).dump(2) + "\n");
      return kExitOk;
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_code_for(ex.code());
  } catch (const CLI::ValidationError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitInadmissible;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace hullforge::cli
