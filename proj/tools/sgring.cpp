// sgring: analyze simplicial affine semigroups and classify cyclic quotients.
//
//   sgring analyze <file> [--matrix] [--format json|text] [--verify] ...
//   sgring cyclic <n> <m1> [--verify]
//   sgring batch [files...] [--cyclic-max N [--cyclic-min N]]
//
// Exit codes: 0 success, 2 malformed input, 3 resource limit or overflow,
// 4 not simplicial, 1 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgring/sgring.hpp"

namespace {

using sgring::Json;

struct CommonFlags {
  std::string format = "text";
  long long max_box = sgring::Limits{}.max_box_volume;
  std::size_t max_apery = sgring::Limits{}.max_apery;
  std::optional<long long> truncate;
  bool verify = false;
  bool matrix = false;
  bool timing = false;

  sgring::AnalyzeOptions options() const {
    sgring::AnalyzeOptions o;
    o.limits.max_box_volume = max_box;
    o.limits.max_apery = max_apery;
    o.truncate = truncate;
    o.verify = verify;
    o.timing = timing;
    return o;
  }
};

void add_common(CLI::App *app, CommonFlags &f) {
  app->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app->add_option("--max-box", f.max_box,
                  "largest box volume searched by the membership test")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-apery", f.max_apery, "largest Apery set accepted")
      ->check(CLI::PositiveNumber);
  app->add_option("--truncate", f.truncate,
                  "expand the Hilbert series to this degree")
      ->check(CLI::NonNegativeNumber);
  app->add_flag("--verify", f.verify, "run internal consistency checks");
  app->add_flag("--matrix", f.matrix,
                "input is a plain-text matrix whose columns are generators");
  app->add_flag("--timing", f.timing, "include wall-clock time in reports");
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw sgring::InvalidInput("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

sgring::AnalysisReport analyze_file(const std::string &path,
                                    const CommonFlags &f) {
  std::string text = read_file(path);
  sgring::InputDocument doc = f.matrix ? sgring::parse_input_matrix(text)
                                       : sgring::parse_input_json(text);
  return sgring::analyze(doc, f.options());
}

int fail(const std::exception &e, const std::string &format) {
  sgring::ErrorRecord r = sgring::classify_error(e);
  if (format == "json")
    std::cout << Json{{"schema", sgring::kSchema}, {"error", r}}.dump(2)
              << "\n";
  std::cerr << "error: " << r.message << "\n";
  return r.exit_code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Simplicial affine semigroup analysis"};
  app.require_subcommand(1);

  CommonFlags flags;

  std::string path;
  CLI::App *analyze = app.add_subcommand("analyze", "analyze one input file");
  analyze->add_option("path", path, "input document")->required();
  add_common(analyze, flags);

  long long n = 0, m1 = 0;
  CLI::App *cyclic =
      app.add_subcommand("cyclic", "classify the cyclic quotient (n, m1)");
  cyclic->add_option("n", n)->required();
  cyclic->add_option("m1", m1)->required();
  add_common(cyclic, flags);

  std::vector<std::string> paths;
  std::optional<long long> cyclic_min, cyclic_max;
  CLI::App *batch = app.add_subcommand(
      "batch", "analyze many files and/or a range of cyclic quotients");
  batch->add_option("paths", paths, "input documents");
  batch->add_option("--cyclic-min", cyclic_min, "smallest n (default 2)");
  batch->add_option("--cyclic-max", cyclic_max,
                    "classify every coprime (n, m1) with n up to this bound");
  add_common(batch, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*analyze) {
    try {
      sgring::AnalysisReport r = analyze_file(path, flags);
      if (flags.format == "json")
        std::cout << Json(r).dump(2) << "\n";
      else
        std::cout << sgring::render_text(r);
      return 0;
    } catch (const std::exception &e) {
      return fail(e, flags.format);
    }
  }

  if (*cyclic) {
    try {
      sgring::CyclicReport r =
          sgring::cyclic_report(n, m1, flags.verify, flags.options().limits);
      if (flags.format == "json")
        std::cout << Json(r).dump(2) << "\n";
      else
        std::cout << sgring::render_text(r);
      return 0;
    } catch (const std::exception &e) {
      return fail(e, flags.format);
    }
  }

  // batch: items are independent; a failing item is reported in place.
  std::vector<sgring::BatchItem> items;
  bool all_parsed = true;
  for (const std::string &p : paths) {
    sgring::BatchItem b;
    b.source = p;
    try {
      b.analysis = analyze_file(p, flags);
    } catch (const std::exception &e) {
      b.error = sgring::classify_error(e);
      if (b.error->exit_code == 2)
        all_parsed = false;
    }
    items.push_back(std::move(b));
  }
  if (cyclic_max) {
    auto more = sgring::cyclic_batch(cyclic_min.value_or(2), *cyclic_max,
                                     flags.verify, flags.options().limits);
    items.insert(items.end(), more.begin(), more.end());
  }
  sgring::BatchSummary summary = sgring::summarize(items);
  if (flags.format == "json") {
    std::cout << Json{{"schema", sgring::kSchema},
                      {"items", items},
                      {"summary", summary}}
                     .dump(2)
              << "\n";
  } else {
    for (const sgring::BatchItem &b : items)
      std::cout << sgring::render_text(b) << "\n";
    std::cout << sgring::render_text(summary) << "\n";
  }
  return all_parsed ? 0 : 2;
}
