#include "hankel_lab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "hankel_lab/hankel.hpp"
#include "hankel_lab/moments.hpp"
#include "hankel_lab/ratfunc.hpp"

namespace hankel_lab::cli {

namespace {

using json = nlohmann::ordered_json;

/// Bad command-line input detected after parsing (unknown id, bad value, ...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnySeq = std::variant<MomentSeq<Integer>, MomentSeq<Rational>, MomentSeq<RatFuncQ>, MomentSeq<RatFuncU>>;

constexpr std::string_view kFromT = "from-t:";

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer or p/q rational, got '" + text + "'");
  }
}

std::vector<Rational> parse_t_list(std::string_view list) {
  std::vector<Rational> t;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = list.find(',', start);
    const std::string item(list.substr(start, comma == std::string_view::npos ? list.npos : comma - start));
    t.push_back(parse_rational(item, "from-t entry"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return t;
}

AnySeq make_sequence(const std::string& name, const std::optional<Rational>& param) {
  if (name.starts_with(kFromT)) {
    if (param) throw UsageError("from-t sequences take no --param");
    return sym_moments(families::periodic(parse_t_list(std::string_view(name).substr(kFromT.size()))));
  }
  const auto plain = [&](auto seq) -> AnySeq {
    if (param) throw UsageError("sequence '" + name + "' takes no --param");
    return seq;
  };
  if (name == "catalan") return plain(sequences::catalan_numbers<Integer>());
  if (name == "central-binomial") return plain(sequences::central_binomials<Integer>());
  if (name == "motzkin") return plain(sequences::motzkin_numbers<Integer>());
  if (name == "schroder-little") return plain(sequences::little_schroder_numbers<Integer>());
  if (name == "schroder-large") return plain(sequences::large_schroder_numbers<Integer>());
  if (name == "double-factorial") return plain(sequences::double_factorials<Integer>());
  if (name == "motzkin-u") {
    if (param) return motzkin_u(*param);
    return motzkin_u(RatFuncU::param());
  }
  if (name == "carlitz-q-catalan") {
    if (param) return carlitz_q_catalan(*param);
    return carlitz_q_catalan(RatFuncQ::param());
  }
  if (name == "andrews-q-catalan") {
    if (param) return sequences::andrews_q_catalans(*param);
    return sequences::andrews_q_catalans(RatFuncQ::param());
  }
  if (name == "q-central-binomial") {
    if (param) return sequences::q_central_binomials(*param);
    return sequences::q_central_binomials(RatFuncQ::param());
  }
  throw UsageError("unknown sequence '" + name + "'");
}

std::optional<Rational> parse_param(const std::string& text) {
  if (text.empty() || text == "symbolic") return std::nullopt;
  return parse_rational(text, "--param");
}

/// Writes to stdout and, when requested, to the --out file as well.
class Sink {
 public:
  Sink(std::ostream& out, const std::string& path) : out_(out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
    }
  }
  void write(const std::string& s) {
    out_ << s;
    out_.flush();
    if (file_.is_open()) file_ << s;
  }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string text_lines(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& o : r.outcomes) {
    os << (o.pass ? "PASS " : "FAIL ") << r.id << " n=" << o.n << " (" << o.millis << " ms)\n";
    if (!o.pass) os << "  lhs: " << o.lhs << "\n  rhs: " << o.rhs << "\n";
  }
  return os.str();
}

std::string csv_lines(const CheckReport& r) {
  std::string s;
  for (const auto& o : r.outcomes) {
    s += csv_field(r.id) + "," + std::to_string(o.n) + "," + (o.pass ? "true" : "false") + "," +
         std::to_string(o.millis) + "," + csv_field(o.lhs) + "," + csv_field(o.rhs) + "\n";
  }
  return s;
}

std::vector<std::string> split_ids(const std::vector<std::string>& args) {
  std::vector<std::string> ids;
  for (const auto& a : args) {
    std::size_t start = 0;
    while (start <= a.size()) {
      const std::size_t comma = std::min(a.find(',', start), a.size());
      if (comma > start) ids.push_back(a.substr(start, comma - start));
      start = comma + 1;
    }
  }
  return ids;
}

struct RunOptions {
  std::vector<std::string> ids;
  std::optional<std::size_t> n_max;
  std::string param;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string out_path;
};

int cmd_run(const RunOptions& opt, const Registry& registry, std::ostream& out, std::ostream& err) {
  std::vector<const Check*> selected;
  for (const auto& id : split_ids(opt.ids)) {
    if (id == "all") {
      for (const auto& c : registry) selected.push_back(&c);
      continue;
    }
    const Check* c = find_check(registry, id);
    if (c == nullptr) throw UsageError("unknown check '" + id + "' (see 'list')");
    selected.push_back(c);
  }
  if (selected.empty()) throw UsageError("no checks selected");
  const std::optional<Rational> param = parse_param(opt.param);

  Sink sink(out, opt.out_path);
  if (opt.format == "csv") sink.write("check,n,pass,millis,lhs,rhs\n");
  std::vector<CheckReport> reports;
  std::size_t failed = 0;
  std::size_t outcomes = 0;
  for (const Check* c : selected) {
    const CheckContext ctx{opt.n_max.value_or(c->default_n), c->param == ParamKind::None ? std::nullopt : param,
                           opt.seed};
    CheckReport report = c->run(ctx);
    report.id = c->id;
    for (const auto& o : report.outcomes) failed += o.pass ? 0 : 1;
    outcomes += report.outcomes.size();
    if (opt.format == "text") sink.write(text_lines(report));
    if (opt.format == "csv") sink.write(csv_lines(report));
    reports.push_back(std::move(report));
  }
  if (opt.format == "json") sink.write(reports_to_json(reports) + "\n");
  err << selected.size() << " check(s), " << outcomes << " outcome(s), " << failed << " failed\n";
  return failed == 0 ? kPass : kFail;
}

int cmd_list(const std::string& format, const Registry& registry, std::ostream& out) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& c : registry) {
      arr.push_back({{"id", c.id},
                     {"equations", c.equations},
                     {"default_n", c.default_n},
                     {"param", to_string(c.param)},
                     {"title", c.title}});
    }
    out << arr.dump(2) << "\n";
    return kPass;
  }
  std::size_t id_w = 2, eq_w = 9;
  for (const auto& c : registry) {
    id_w = std::max(id_w, c.id.size());
    eq_w = std::max(eq_w, c.equations.size());
  }
  const auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  for (const auto& c : registry) {
    std::string line = pad(c.id, id_w) + pad(c.equations, eq_w) + pad("n = 0.." + std::to_string(c.default_n), 9);
    line += pad(c.param == ParamKind::None ? "-" : std::string(to_string(c.param)), 1) + c.title;
    out << line << "\n";
  }
  return kPass;
}

std::string join_values(const std::vector<std::string>& values) {
  const bool compound = std::any_of(values.begin(), values.end(),
                                    [](const std::string& v) { return v.find(' ') != std::string::npos; });
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += compound ? "; " : " ";
    s += values[i];
  }
  return s;
}

int cmd_seq(const std::string& name, std::size_t count, const std::string& param, std::ostream& out) {
  const AnySeq seq = make_sequence(name, parse_param(param));
  std::vector<std::string> values;
  std::visit(
      [&](const auto& s) {
        for (const auto& v : s.prefix(count)) values.push_back(v.to_string());
      },
      seq);
  out << join_values(values) << "\n";
  return kPass;
}

int cmd_det(const std::string& name, std::size_t n, std::size_t offset, const std::string& builder,
            const std::string& param, std::ostream& out) {
  if (offset > 2) throw UsageError("offset must be 0, 1 or 2");
  const AnySeq seq = make_sequence(name, parse_param(param));
  std::visit(
      [&](const auto& s) {
        using R = typename std::decay_t<decltype(s)>::value_type;
        if (builder == "none") {
          out << det_bareiss(hankel_matrix(s, n, offset)).to_string() << "\n";
        } else {
          const RBuilder<R> b{builder == "conv" ? RKind::Conv : RKind::Lin, s};
          out << hankel_poly_det(b, n, offset).to_string() << "\n";
        }
      },
      seq);
  return kPass;
}

}  // namespace

const std::vector<std::string>& sequence_names() {
  static const std::vector<std::string> names = {
      "catalan",           "central-binomial",  "motzkin",
      "motzkin-u",         "schroder-little",   "schroder-large",
      "carlitz-q-catalan", "andrews-q-catalan", "q-central-binomial",
      "double-factorial"};
  return names;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    for (const auto& o : r.outcomes) {
      json j = {{"check", r.id}, {"n", o.n}, {"pass", o.pass}, {"lhs", o.lhs}};
      if (!o.pass) j["rhs"] = o.rhs;
      j["millis"] = o.millis;
      arr.push_back(std::move(j));
    }
  }
  return arr.dump(2);
}

std::vector<CheckReport> reports_from_json(const std::string& text) {
  std::vector<CheckReport> reports;
  for (const auto& j : json::parse(text)) {
    const auto id = j.at("check").get<std::string>();
    if (reports.empty() || reports.back().id != id) reports.push_back(CheckReport{id, {}, 0});
    Outcome o;
    o.n = j.at("n").get<std::size_t>();
    o.pass = j.at("pass").get<bool>();
    o.lhs = j.value("lhs", std::string());
    o.rhs = j.value("rhs", std::string());
    o.millis = j.at("millis").get<std::int64_t>();
    reports.back().millis += o.millis;
    reports.back().outcomes.push_back(std::move(o));
  }
  return reports;
}

int run_cli(const std::vector<std::string>& args, const Registry& registry, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact Hankel-determinant identity checker", "hankel-lab");
  app.require_subcommand(1);

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "List registered checks");
  list->add_option("--format", list_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  RunOptions run_opt;
  std::size_t n_max = 0;
  auto* run = app.add_subcommand("run", "Run checks (ids, comma-separated ids, or 'all')");
  run->add_option("ids", run_opt.ids, "Check ids")->required();
  auto* n_max_opt = run->add_option("--n-max", n_max, "Largest n (default: per check)");
  run->add_option("--param", run_opt.param, "'symbolic' or a rational value for q / u")->default_str("symbolic");
  run->add_option("--format", run_opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  run->add_option("--seed", run_opt.seed, "Seed for the random t-sequences");
  run->add_option("--out", run_opt.out_path, "Also write the report to this file");

  std::string seq_name, seq_param;
  std::size_t seq_count = 0;
  auto* seq = app.add_subcommand("seq", "Print a(0) .. a(count-1) of a named sequence");
  seq->add_option("name", seq_name, "Sequence name or from-t:<t0,t1,...>")->required();
  seq->add_option("count", seq_count, "Number of terms")->required();
  seq->add_option("--param", seq_param, "'symbolic' or a rational value for q / u");

  std::string det_name, det_builder, det_param;
  std::size_t det_n = 0, det_offset = 0;
  auto* det = app.add_subcommand("det", "Determinant of an (n+1)x(n+1) Hankel matrix");
  det->add_option("name", det_name, "Sequence name or from-t:<t0,t1,...>")->required();
  det->add_option("n", det_n, "Matrix size minus one")->required();
  det->add_option("offset", det_offset, "Index offset (0, 1 or 2)")->required();
  det->add_option("builder", det_builder, "none | conv | lin")->required()->check(
      CLI::IsMember({"none", "conv", "lin"}));
  det->add_option("--param", det_param, "'symbolic' or a rational value for q / u");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (list->parsed()) return cmd_list(list_format, registry, out);
    if (run->parsed()) {
      if (n_max_opt->count() > 0) run_opt.n_max = n_max;
      return cmd_run(run_opt, registry, out, err);
    }
    if (seq->parsed()) return cmd_seq(seq_name, seq_count, seq_param, out);
    if (det->parsed()) return cmd_det(det_name, det_n, det_offset, det_builder, det_param, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace hankel_lab::cli
