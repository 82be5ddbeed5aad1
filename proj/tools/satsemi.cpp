// satsemi: command-line front end for saturated numerical semigroups with a
// fixed Frobenius number.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "satsemi/satsemi.hpp"

namespace {

  using satsemi::Element;
  using satsemi::NumericalSemigroup;

  enum class Format { text, json, csv };

  struct Options {
    Format      format = Format::text;
    unsigned    jobs   = 1;
    std::string sort   = "canonical";
    bool        color  = false;
  };

  class Printer {
   public:
    explicit Printer(Options const& opts) : opts_(opts) {}

    // A list of semigroups with a count footer (text) or a JSON array.
    void list(std::vector<NumericalSemigroup> const& list) const {
      std::vector<satsemi::OutputRecord> records;
      records.reserve(list.size());
      for (auto const& s : list) {
        records.push_back(satsemi::make_record(s));
      }
      switch (opts_.format) {
        case Format::text:
          for (auto const& r : records) {
            std::cout << satsemi::to_text_line(r, opts_.color) << '\n';
          }
          std::cout << "count=" << records.size() << '\n';
          break;
        case Format::json: std::cout << satsemi::to_json(records) << '\n'; break;
        case Format::csv:
          std::cout << satsemi::csv_header() << '\n';
          for (auto const& r : records) {
            std::cout << satsemi::to_csv_row(r) << '\n';
          }
          break;
      }
    }

    // Streaming rows: no footer, JSON as one record per line.
    void stream_header() const {
      if (opts_.format == Format::csv) {
        std::cout << satsemi::csv_header() << '\n';
      }
    }

    void stream_row(NumericalSemigroup const& s) const {
      auto r = satsemi::make_record(s);
      switch (opts_.format) {
        case Format::text: std::cout << satsemi::to_text_line(r, opts_.color) << '\n'; break;
        case Format::json: std::cout << satsemi::to_json(r) << '\n'; break;
        case Format::csv: std::cout << satsemi::to_csv_row(r) << '\n'; break;
      }
    }

    void single(NumericalSemigroup const& s) const {
      auto r = satsemi::make_record(s);
      switch (opts_.format) {
        case Format::text: std::cout << satsemi::to_text_line(r, opts_.color) << '\n'; break;
        case Format::json: std::cout << satsemi::to_json(r) << '\n'; break;
        case Format::csv:
          std::cout << satsemi::csv_header() << '\n' << satsemi::to_csv_row(r) << '\n';
          break;
      }
    }

    template <typename T>
    void scalar(Element frobenius, std::string const& key, T const& value) const {
      switch (opts_.format) {
        case Format::text: std::cout << value << '\n'; break;
        case Format::json: {
          nlohmann::ordered_json j;
          j["frobenius"] = frobenius;
          j[key]         = value;
          std::cout << j.dump() << '\n';
          break;
        }
        case Format::csv:
          std::cout << "frobenius," << key << '\n' << frobenius << ',' << value << '\n';
          break;
      }
    }

   private:
    Options const& opts_;
  };

  std::string braces(std::vector<Element> const& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + "}";
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saturated numerical semigroups with a fixed Frobenius number"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  if (char const* env = std::getenv("SATSEMI_COLOR")) {
    opts.color = std::string(env) == "1";
  }
  std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", opts.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--sort", opts.sort, "Output order (always canonical)")
      ->check(CLI::IsMember({"canonical"}));

  Element              frobenius = 0;
  Element              genus     = 0;
  std::size_t          rank      = 0;
  Element              max_f     = 16;
  bool                 stream    = false;
  std::vector<Element> elements;

  auto* enumerate = app.add_subcommand("enumerate", "All of Sat(F)");
  enumerate->add_option("--frobenius", frobenius)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--stream", stream, "Emit each depth layer as soon as it is computed");

  auto* by_genus = app.add_subcommand("genus", "Members of Sat(F) with a given genus");
  by_genus->add_option("--frobenius", frobenius)->required()->check(CLI::PositiveNumber);
  by_genus->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);

  auto* maximal = app.add_subcommand("maximal", "Inclusion-maximal members of Sat(F)");
  maximal->add_option("--frobenius", frobenius)->required()->check(CLI::PositiveNumber);

  auto* least = app.add_subcommand("min-genus", "Least genus in Sat(F)");
  least->add_option("--frobenius", frobenius)->required()->check(CLI::PositiveNumber);

  auto* close = app.add_subcommand("closure", "Least member of Sat(F) containing a set");
  close->add_option("--frobenius", frobenius)->required()->check(CLI::PositiveNumber);
  close->add_option("--set", elements)->delimiter(',');

  auto* min_gens = app.add_subcommand("min-gens", "Minimal Sat(F)-system and rank");
  min_gens->add_option("--frobenius", frobenius)->required()->check(CLI::PositiveNumber);
  min_gens->add_option("--small", elements, "Small elements of the semigroup")->delimiter(',');

  auto* by_rank = app.add_subcommand("rank", "Members of Sat(F) with a given Sat(F)-rank");
  by_rank->add_option("--frobenius", frobenius)->required()->check(CLI::PositiveNumber);
  by_rank->add_option("--rank", rank)->required();

  auto* feasible = app.add_subcommand("feasible", "Whether Sat(F) has an element of rank p");
  feasible->add_option("--frobenius", frobenius)->required()->check(CLI::PositiveNumber);
  feasible->add_option("--rank", rank)->required();

  auto* verify = app.add_subcommand("verify", "Cross-check against brute force");
  verify->add_option("--max-frobenius", max_f, "Check F = 1 ..= N")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  Printer out(opts);
  try {
    if (*enumerate) {
      if (stream) {
        out.stream_header();
        satsemi::walk_sat(
            frobenius,
            [&out](std::vector<satsemi::TreeNode> const& layer) {
              for (auto const& node : layer) {
                out.stream_row(node.semigroup);
              }
              std::cout.flush();
            },
            opts.jobs);
      } else {
        out.list(satsemi::enumerate_sat(frobenius, opts.jobs));
      }
    } else if (*by_genus) {
      out.list(satsemi::enumerate_sat_genus(frobenius, genus, opts.jobs));
    } else if (*maximal) {
      out.list(satsemi::maximal_elements(frobenius));
    } else if (*least) {
      out.scalar(frobenius, "min_genus", satsemi::min_genus(frobenius));
    } else if (*close) {
      out.single(satsemi::closure(frobenius, elements));
    } else if (*min_gens) {
      auto s      = NumericalSemigroup::from_small_elements(frobenius, elements);
      auto system = satsemi::minimal_system(frobenius, s);
      out.single(s);
      if (opts.format == Format::text) {
        std::cout << "sat_msg=" << braces(system.elements) << '\n';
      }
    } else if (*by_rank) {
      out.list(satsemi::enumerate_rank(frobenius, rank, opts.jobs));
    } else if (*feasible) {
      bool value = satsemi::feasible_rank(frobenius, rank);
      if (opts.format == Format::text) {
        std::cout << (value ? "true" : "false") << '\n';
      } else {
        out.scalar(frobenius, "feasible", value);
      }
    } else if (*verify) {
      std::vector<satsemi::oracle::Report> reports;
      bool                                 ok = true;
      for (Element f = 1; f <= max_f; ++f) {
        reports.push_back(satsemi::oracle::check_all(f, opts.jobs));
        ok = ok && reports.back().ok();
        if (opts.format != Format::json) {
          std::cout << satsemi::oracle::to_text(reports.back());
        }
      }
      if (opts.format == Format::json) {
        std::cout << satsemi::oracle::to_json(reports) << '\n';
      }
      if (!ok) {
        std::cerr << "satsemi: verification found discrepancies\n";
        return 1;
      }
    }
  } catch (satsemi::Error const& e) {
    std::cerr << "satsemi: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
