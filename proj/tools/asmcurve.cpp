#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "asmc/errors.hpp"
#include "asmc/report.hpp"

namespace {

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks the curve (X^q+X)(Y^q+Y)=c over F_{q^4}, q = p^e"};
  asmc::RunConfig cfg;
  std::vector<std::string> checks;
  std::optional<int> precision;
  std::string out_path;
  app.add_option("--p", cfg.p, "characteristic")->required();
  app.add_option("--e", cfg.e, "q = p^e")->capture_default_str();
  app.add_option("--c", cfg.c_spec, "coefficients of c in the tower generator, low degree first")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--seed", cfg.seed)->capture_default_str();
  app.add_option("--samples", cfg.samples, "F_{q^4} sample count")->capture_default_str();
  app.add_option("--precision", precision, "branch precision (default 3q)");
  app.add_option("--format", cfg.format, "json or markdown")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, asmc::Format>{{"json", asmc::Format::json}, {"markdown", asmc::Format::markdown}}));
  app.add_option("--checks", checks, "comma separated check ids or groups");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag_callback("--list", [] {
    for (const auto& g : asmc::check_catalog()) {
      std::cout << g.name << ":";
      for (const auto& id : g.ids) std::cout << " " << id;
      std::cout << "\n";
    }
    throw CLI::Success();
  }, "list check groups and ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }
  cfg.precision = precision;
  cfg.checks = split_commas(checks);

  asmc::Report rep;
  try {
    rep = asmc::run_report(cfg);
  } catch (const asmc::ConfigError& err) {
    std::cerr << "invalid configuration: " << err.what() << "\n";
    return 2;
  }
  const std::string body = rep.render();
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    f << body;
  }
  return rep.exit_code();
}
