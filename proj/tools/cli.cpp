#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "knotgrp/error.hpp"
#include "knotgrp/invariants.hpp"
#include "knotgrp/presentation.hpp"
#include "knotgrp/retraction.hpp"
#include "knotgrp/torus.hpp"
#include "knotgrp/wirtinger.hpp"

namespace knotgrp::cli {

namespace {

enum class Format { human, kv };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string present(const Presentation& p, Format format) {
  if (format == Format::human) return format_presentation(p);
  std::string gens;
  for (const auto& g : p.alphabet().generators()) {
    if (!gens.empty()) gens += ' ';
    gens += g.name;
  }
  std::string out = "gens\t" + gens + "\n";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    out += "rel." + std::to_string(i) + "\t" +
           format_word(p.relators()[i], p.alphabet()) + "\n";
  }
  return out;
}

KnotDiagram load_diagram(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.starts_with(prefix)) {
    return builtin_diagram(source.substr(prefix.size()));
  }
  return parse_diagram(read_file(source));
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw DomainError("empty entry in target list '" + list + "'");
    out.push_back(item);
  }
  if (out.empty()) throw DomainError("empty target list");
  return out;
}

Word torus_word(const std::string& text) {
  try {
    return parse_word(text, torus_alphabet());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in word \"" + text + "\"");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fundamental groups of knot complements", "knotgrp"};
  app.require_subcommand(1, 1);

  std::string format_name = "human";
  std::uint64_t max_evals = kDefaultHomBudget;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "kv"}));
  app.add_option("--max-evals", max_evals,
                 "Budget for brute-force homomorphism enumeration")
      ->check(CLI::PositiveNumber);

  std::ostringstream buf;
  std::function<void()> action;
  auto fmt = [&] { return format_name == "kv" ? Format::kv : Format::human; };

  long long m = 0, n = 0;
  std::string file, word, word2, target, targets, source;

  auto* torus = app.add_subcommand("torus", "Presentation <a,b | a^m = b^n>");
  torus->add_option("m", m)->required();
  torus->add_option("n", n)->required();
  torus->callback([&] {
    action = [&] { buf << present(torus_presentation(m, n), fmt()); };
  });

  auto* wirt = app.add_subcommand("wirtinger", "Wirtinger presentation of a diagram");
  wirt->add_option("source", source, "Diagram file or builtin:NAME")->required();
  wirt->callback([&] {
    action = [&] { buf << present(wirtinger_presentation(load_diagram(source)), fmt()); };
  });

  auto* simplify = app.add_subcommand("simplify", "Tietze simplification");
  simplify->add_option("file", file)->required();
  simplify->callback([&] {
    action = [&] {
      Presentation p = parse_presentation(read_file(file));
      auto result = auto_simplify(p);
      auto lines = format_script(p, result.script);
      buf << present(result.presentation, fmt());
      if (fmt() == Format::human) {
        buf << "script:\n";
        for (const auto& l : lines) buf << "  " << l << "\n";
      } else {
        for (std::size_t i = 0; i < lines.size(); ++i) {
          buf << "move." << i << "\t" << lines[i] << "\n";
        }
      }
    };
  });

  auto* abelian = app.add_subcommand("abelian", "Abelian invariants");
  abelian->add_option("file", file)->required();
  abelian->callback([&] {
    action = [&] {
      auto inv = abelianization(parse_presentation(read_file(file)));
      if (fmt() == Format::human) {
        buf << "abelian: " << format_abelian(inv) << "\n";
      } else {
        buf << format_profile_kv({inv, {}});
      }
    };
  });

  auto* homcount = app.add_subcommand("homcount", "Count homomorphisms into a finite group");
  homcount->add_option("file", file)->required();
  homcount->add_option("--target", target, "Group name (Z2..Z12, S3, S4, S5, D4, A4, A5)")
      ->required();
  homcount->callback([&] {
    action = [&] {
      auto table = builtin_table(target);
      auto count = hom_count(parse_presentation(read_file(file)), table, max_evals);
      if (fmt() == Format::human) {
        buf << "hom " << target << ": " << count << "\n";
      } else {
        buf << "hom." << target << "\t" << count << "\n";
      }
    };
  });

  auto* profile = app.add_subcommand("profile", "Abelianization and hom-count profile");
  profile->add_option("file", file)->required();
  profile->add_option("--targets", targets, "Comma-separated group names")->required();
  profile->callback([&] {
    action = [&] {
      auto names = split_list(targets);
      for (const auto& name : names) builtin_table(name);  // validate first
      auto prof = invariant_profile(parse_presentation(read_file(file)), names, max_evals);
      buf << (fmt() == Format::human ? format_profile(prof) : format_profile_kv(prof));
    };
  });

  auto* nf = app.add_subcommand("nf", "Normal form in <a,b | a^m = b^n>");
  nf->add_option("m", m)->required();
  nf->add_option("n", n)->required();
  nf->add_option("word", word)->required();
  nf->callback([&] {
    action = [&] {
      TorusParams params(m, n);
      auto form = torus_normal_form(params, torus_word(word));
      if (fmt() == Format::human) {
        buf << format_normal_form(form) << "\n";
      } else {
        buf << "central\t" << form.central << "\n";
        buf << "syllables\t" << format_normal_form(FreeProductNormalForm{form.syllables})
            << "\n";
      }
    };
  });

  auto* eq = app.add_subcommand("eq", "Word problem in <a,b | a^m = b^n>");
  eq->add_option("m", m)->required();
  eq->add_option("n", n)->required();
  eq->add_option("u", word)->required();
  eq->add_option("v", word2)->required();
  eq->callback([&] {
    action = [&] {
      TorusParams params(m, n);
      bool equal = words_equal_in_torus_group(params, torus_word(word), torus_word(word2));
      if (fmt() == Format::human) {
        buf << (equal ? "equal" : "not equal") << "\n";
      } else {
        buf << "equal\t" << (equal ? "true" : "false") << "\n";
      }
    };
  });

  auto* fporder = app.add_subcommand("fporder", "Element order in Z_m * Z_n");
  fporder->add_option("m", m)->required();
  fporder->add_option("n", n)->required();
  fporder->add_option("word", word)->required();
  fporder->callback([&] {
    action = [&] {
      FactorOrders orders(m, n);
      auto ord = order_in_free_product(orders, torus_word(word));
      if (fmt() == Format::human) {
        buf << "order: " << ord.to_string() << "\n";
      } else {
        buf << "order\t" << ord.to_string() << "\n";
      }
    };
  });

  double lambda = 0.0;
  std::size_t grid = 0;
  auto* retraction = app.add_subcommand("retraction", "Verify the sector retraction");
  retraction->add_option("--lambda", lambda, "Half-angle in radians, in (0, pi/2)")
      ->required();
  retraction->add_option("--grid", grid, "Samples per axis (>= 2)")->required();
  retraction->callback([&] {
    action = [&] {
      auto report = geometry::verify_retraction(geometry::RetractionParams(lambda), grid);
      buf << (fmt() == Format::human ? geometry::format_report(report)
                                     : geometry::format_report_kv(report));
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "knotgrp: " << e.what() << "\n";
    return kDomainError;
  }

  try {
    action();
  } catch (const BudgetError& e) {
    err << "knotgrp: resource budget exceeded: " << e.what() << "\n";
    return kBudgetError;
  } catch (const Error& e) {
    err << "knotgrp: " << e.what() << "\n";
    return kDomainError;
  }
  out << buf.str();
  return kOk;
}

}  // namespace knotgrp::cli
