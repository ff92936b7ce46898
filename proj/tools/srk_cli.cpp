#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "srk/srk.hpp"

namespace {

enum Exit { Ok = 0, Other = 1, Invalid = 2, Budget = 3 };

struct IndexArgs {
  std::string space = "og";
  int k = 0;
  int n = 0;
  std::string a;
  std::string b;
  bool prime = false;
};

void add_index_options(CLI::App* cmd, IndexArgs& args, bool with_space) {
  if (with_space) cmd->add_option("--space", args.space, "g or og")->check(CLI::IsMember({"g", "og"}));
  cmd->add_option("--k", args.k, "number of parts")->required();
  cmd->add_option("--n", args.n, "ambient dimension")->required();
  cmd->add_option("--a", args.a, "comma-separated a list");
  cmd->add_option("--b", args.b, "comma-separated b list");
  cmd->add_flag("--prime", args.prime, "a_s = n/2 lies in the other family");
}

srk::OgIndex og_from(const IndexArgs& args) {
  return srk::validate_og(args.k, args.n, srk::parse_int_list(args.a), srk::parse_int_list(args.b), args.prime);
}

srk::GrIndex gr_from(const IndexArgs& args) {
  if (!args.b.empty() || args.prime)
    throw srk::Error(srk::ErrorCode::BadArity, "--b and --prime apply to OG indices only");
  return srk::validate_gr(args.k, args.n, srk::parse_int_list(args.a));
}

void report_engine(const srk::Engine& engine) {
  for (const auto& d : engine.stats().diagnostics) std::cerr << "note: " << d << "\n";
  for (const auto& d : engine.stats().y_divergences) std::cerr << "warning: y-readings diverge at " << d << "\n";
}

void print_trace(const srk::TraceNode& t, int depth) {
  std::cout << std::string(2 * depth, ' ') << srk::to_string(t.rule) << " " << srk::print_diagram(t.diagram);
  if (!t.note.empty()) std::cout << "  (" << t.note << ")";
  std::cout << "\n";
  for (const auto& c : t.children) print_trace(c, depth + 1);
}

std::string verdict_line(const srk::Verdict& v) {
  std::string s = srk::label(v);
  if (!v.note.empty()) s += " (" + v.note + ")";
  return s;
}

srk::Position parse_position(const std::string& text) {
  if (text.size() < 3 || (text[0] != 'a' && text[0] != 'b') || text[1] != ':')
    throw srk::SyntaxError(srk::ErrorCode::SyntaxError, 0, "position must be a:I or b:I");
  auto idx = srk::parse_int_list(text.substr(2));
  if (idx.size() != 1) throw srk::SyntaxError(srk::ErrorCode::SyntaxError, 2, "position needs one integer");
  return {text[0] == 'a' ? srk::Side::A : srk::Side::B, idx[0]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadric diagrams, OG Schubert classes and their rigidity"};
  app.require_subcommand(1);

  IndexArgs cls;
  bool cls_json = false;
  auto* classify = app.add_subcommand("classify", "rigidity verdicts for a Schubert index");
  add_index_options(classify, cls, true);
  classify->add_flag("--json", cls_json, "print the report as JSON");

  int exp_n = 0;
  std::string exp_diagram, exp_reading = "max";
  bool exp_trace = false, exp_merge = false, exp_json = false;
  auto* expand = app.add_subcommand("expand", "expand a quadric diagram into Schubert classes");
  expand->add_option("--n", exp_n, "ambient dimension")->required();
  expand->add_option("--diagram", exp_diagram, "compact or verbose diagram")->required();
  expand->add_flag("--trace", exp_trace, "print the derivation tree");
  expand->add_flag("--merge-primes", exp_merge, "identify primed and unprimed classes");
  expand->add_option("--y-reading", exp_reading, "max or min")->check(CLI::IsMember({"max", "min"}));
  expand->add_flag("--json", exp_json, "print JSON");

  IndexArgs pf;
  bool pf_json = false;
  auto* push = app.add_subcommand("pushforward", "class of an OG Schubert variety in G(k,n)");
  add_index_options(push, pf, false);
  push->add_flag("--json", pf_json, "print JSON");

  IndexArgs en;
  std::string en_filter = "all", en_out;
  auto* enumerate = app.add_subcommand("enumerate", "write a JSONL catalog of every index");
  enumerate->add_option("--space", en.space, "g or og")->required()->check(CLI::IsMember({"g", "og"}));
  enumerate->add_option("--k", en.k)->required();
  enumerate->add_option("--n", en.n)->required();
  enumerate->add_option("--filter", en_filter)->check(CLI::IsMember({"rigid", "nonrigid", "all"}));
  enumerate->add_option("--out", en_out, "output file")->required();

  IndexArgs wit;
  std::string wit_pos;
  std::int64_t wit_budget = srk::default_search_budget();
  auto* witness = app.add_subcommand("witness", "search for a diagram that omits a flag element");
  add_index_options(witness, wit, false);
  witness->add_option("--position", wit_pos, "a:I or b:I")->required();
  witness->add_option("--budget", wit_budget, "cap on admissible expansions")->check(CLI::PositiveNumber);

  IndexArgs dm;
  bool dm_json = false;
  auto* dim = app.add_subcommand("dim", "dimension of a Schubert variety");
  add_index_options(dim, dm, true);
  dim->add_flag("--json", dm_json, "print JSON");

  std::string parse_text;
  bool parse_json = false;
  auto* parse = app.add_subcommand("parse", "parse a diagram or index and print its forms");
  parse->add_option("text", parse_text, "diagram or index text")->required();
  parse->add_flag("--json", parse_json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Invalid;
  }

  try {
    if (*classify) {
      if (cls.space == "g") {
        auto x = gr_from(cls);
        auto rec = srk::make_record(x);
        if (cls_json) {
          std::cout << srk::to_json(rec).dump(2) << "\n";
        } else {
          std::cout << srk::sigma(x) << " in G(" << x.k << "," << x.n << ")  dim " << rec.dim << "\n";
          for (int i = 1; i <= x.k; ++i)
            std::cout << "  a_" << i << " = " << x.a[i - 1] << ": " << rec.rigid_a[i - 1] << "\n";
          std::cout << "  class " << (rec.class_rigid ? "rigid" : "not rigid") << "\n";
          std::cout << "  envelope " << srk::sigma(srk::GrIndex{x.k, x.n, *rec.envelope}) << "\n";
        }
        return Ok;
      }
      auto x = og_from(cls);
      auto rep = srk::classify_og(x);
      if (cls_json) {
        std::cout << srk::to_json(rep).dump(2) << "\n";
      } else {
        std::cout << srk::sigma(x) << " in OG(" << x.k << "," << x.n << ")\n";
        for (int i = 1; i <= x.s(); ++i)
          std::cout << "  a_" << i << " = " << x.a[i - 1] << ": " << verdict_line(rep.a_verdicts[i - 1]) << "\n";
        for (int j = 1; j <= static_cast<int>(x.b.size()); ++j)
          std::cout << "  b_" << j << " = " << x.b[j - 1] << ": " << verdict_line(rep.b_verdicts[j - 1]) << "\n";
        std::cout << "  class " << (rep.class_rigid ? "rigid" : "not rigid") << "\n";
        for (const auto& w : rep.warnings) std::cout << "  warning " << w << "\n";
      }
      return Ok;
    }

    if (*expand) {
      auto D = srk::parse_diagram(exp_diagram);
      if (D.m != exp_n)
        throw srk::Error(srk::ErrorCode::OutOfBounds,
                         "diagram has ambient " + std::to_string(D.m) + ", --n is " + std::to_string(exp_n));
      srk::EngineOptions opt;
      opt.y_reading = exp_reading == "min" ? srk::YReading::Min : srk::YReading::Max;
      srk::Engine engine(opt);
      auto S = engine.expand(D);
      if (exp_merge) S = srk::merge_primes(S);
      std::optional<srk::TraceNode> tree;
      if (exp_trace) tree = engine.trace(D, srk::Mode::OG);
      if (exp_json) {
        srk::Json j;
        j["diagram"] = srk::to_json(D);
        j["class"] = srk::to_json(S, D.k, D.m);
        if (tree) j["trace"] = srk::to_json(*tree);
        std::cout << j.dump(2) << "\n";
      } else {
        if (tree) print_trace(*tree, 0);
        std::cout << srk::format_sum(S) << "\n";
      }
      report_engine(engine);
      return Ok;
    }

    if (*push) {
      auto x = og_from(pf);
      srk::Engine engine;
      auto S = engine.pushforward(x);
      if (pf_json)
        std::cout << srk::to_json(S, x.k, x.n).dump(2) << "\n";
      else
        std::cout << srk::format_sum(S) << "\n";
      report_engine(engine);
      return Ok;
    }

    if (*enumerate) {
      std::vector<srk::CatalogRecord> records;
      auto keep = [&](bool rigid) {
        return en_filter == "all" || (en_filter == "rigid") == rigid;
      };
      if (en.space == "g") {
        for (const auto& x : srk::enumerate_gr(en.k, en.n)) {
          auto rec = srk::make_record(x);
          if (keep(rec.class_rigid)) records.push_back(std::move(rec));
        }
      } else {
        srk::Engine engine;
        for (const auto& x : srk::enumerate_og(en.k, en.n)) {
          auto rec = srk::make_record(x, engine);
          if (keep(rec.class_rigid)) records.push_back(std::move(rec));
        }
      }
      srk::write_catalog(records, en_out);
      std::cout << records.size() << " records written to " << en_out << "\n";
      return Ok;
    }

    if (*witness) {
      auto x = og_from(wit);
      auto pos = parse_position(wit_pos);
      srk::Engine engine;
      auto W = srk::find_nonrigid_witness(x, pos, engine, wit_budget);
      if (W)
        std::cout << srk::print_diagram(*W) << "  (" << srk::print_diagram(*W, srk::DiagramForm::Verbose) << ")\n";
      else
        std::cout << "none\n";
      return Ok;
    }

    if (*dim) {
      int d = 0;
      if (dm.space == "g") {
        d = srk::gr_dimension(gr_from(dm));
      } else {
        srk::Engine engine;
        d = engine.og_dimension(og_from(dm));
      }
      if (dm_json)
        std::cout << srk::Json{{"dim", d}}.dump() << "\n";
      else
        std::cout << d << "\n";
      return Ok;
    }

    if (*parse) {
      if (parse_text.find('@') != std::string::npos) {
        auto p = srk::parse_index(parse_text);
        if (parse_json) {
          std::cout << (p.orthogonal ? srk::to_json(p.og) : srk::to_json(p.gr)).dump(2) << "\n";
        } else if (p.orthogonal) {
          std::cout << srk::to_text(p.og) << "\n" << srk::sigma(p.og) << "\n"
                    << srk::print_diagram(srk::og_to_diagram(p.og)) << "\n";
        } else {
          std::cout << srk::to_text(p.gr) << "\n" << srk::sigma(p.gr) << "\n";
        }
        return Ok;
      }
      auto D = srk::parse_diagram(parse_text);
      auto rep = srk::check_conditions(D);
      if (parse_json) {
        srk::Json j = srk::to_json(D);
        j["conditions"] = srk::to_json(rep);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << srk::print_diagram(D) << "\n" << srk::print_diagram(D, srk::DiagramForm::Verbose) << "\n";
        std::cout << (rep.pass() ? "admissible" : "not admissible") << "\n";
      }
      return Ok;
    }
  } catch (const srk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == srk::ErrorCode::SearchBudgetExceeded) return Budget;
    return srk::is_validation_error(e.code()) ? Invalid : Other;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Other;
  }
  return Other;
}
