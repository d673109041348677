#include "cli.hpp"

#include <optional>

#include "CLI11.hpp"
#include "format.hpp"
#include "qgsmooth/corpus.hpp"
#include "qgsmooth/document.hpp"

namespace qgs::cli {

namespace {

enum class Format { Text, Json };

int report(const Analysis& a, Format fmt, std::ostream& out) {
  if (fmt == Format::Json)
    out << to_json(a).dump(2) << "\n";
  else
    write_text(out, a);
  return a.passed ? kPass : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verifier for Q-Gorenstein smoothing constructions", "qgsmooth"};
  app.require_subcommand(1, 1);

  std::string output = "text";
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string path;
  auto* verify = app.add_subcommand("verify", "Analyze a configuration document");
  verify->add_option("path", path, "JSON document")->required();

  std::string example;
  auto* ex = app.add_subcommand("example", "Verify a built-in example");
  ex->add_option("name", example, "Example name")->required();

  std::string dir;
  auto* all = app.add_subcommand("verify-all", "Verify every built-in example");
  all->add_option("--dir", dir, "Verify the *.json files of this directory instead");

  std::string chain_text;
  auto* chain = app.add_subcommand("chain", "Analyze one chain b1,b2,...");
  chain->add_option("entries", chain_text, "Comma separated entries")->required();

  std::size_t max_len = 0;
  int max_entry = 0;
  auto* enumerate = app.add_subcommand("enumerate-classT", "List class-T chains within bounds");
  enumerate->add_option("--max-len", max_len, "Largest chain length")->required()->check(CLI::Range(1, 16));
  enumerate->add_option("--max-entry", max_entry, "Largest entry")->required()->check(CLI::Range(1, 64));

  std::string dot_path;
  bool after_blowups = false;
  auto* dot = app.add_subcommand("export-dot", "Write the dual graph in DOT format");
  dot->add_option("path", dot_path, "JSON document")->required();
  dot->add_flag("--after-blowups", after_blowups, "Render the configuration after all blow-ups");

  // CLI11 wants argv order with the program name first.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const Format fmt = output == "json" ? Format::Json : Format::Text;

  try {
    if (*verify) return report(analyze(load_document(path)), fmt, out);
    if (*ex) return report(verify_example(example), fmt, out);
    if (*all) {
      const VerifyTable t = dir.empty() ? verify_all() : verify_all(std::filesystem::path(dir));
      if (fmt == Format::Json)
        out << to_json(t).dump(2) << "\n";
      else
        write_table_text(out, t);
      return t.all_pass ? kPass : kFailure;
    }
    if (*chain) {
      const Chain c = Chain::parse(chain_text);
      if (fmt == Format::Json)
        out << chain_json(c).dump(2) << "\n";
      else
        write_chain_text(out, c);
      return recognize_class_T(c) ? kPass : kFailure;
    }
    if (*enumerate) {
      const auto chains = generate_class_T(max_len, max_entry);
      if (fmt == Format::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& c : chains) j.push_back(c.entries());
        out << j.dump() << "\n";
      } else {
        for (const auto& c : chains) {
          const auto t = recognize_class_T(c);
          out << c.to_string() << " d=" << t->d << " n=" << t->n << " a=" << t->a << "\n";
        }
        out << "count=" << chains.size() << "\n";
      }
      return kPass;
    }
    if (*dot) {
      const Document doc = load_document(dot_path);
      out << export_dot(after_blowups ? apply_blowups(doc.base, doc.blowups) : doc.base);
      return kPass;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return is_input_error(e.kind()) ? kInputError : kFailure;
  }
  return kInputError;
}

}  // namespace qgs::cli
