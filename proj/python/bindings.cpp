#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "nota/canonical.hpp"
#include "nota/config.hpp"
#include "nota/corpus.hpp"
#include "nota/lexicon.hpp"
#include "nota/loanword.hpp"
#include "nota/pipeline.hpp"
#include "nota/romanizer.hpp"
#include "nota/script.hpp"

namespace py = pybind11;

namespace {

nota::RunMode parse_mode(const std::string& mode) {
  if (mode == "check") return nota::RunMode::Check;
  if (mode == "fix") return nota::RunMode::Fix;
  if (mode == "strict") return nota::RunMode::Strict;
  throw py::value_error("mode must be 'check', 'fix' or 'strict'");
}

nota::ScriptMode parse_script_mode(const std::string& mode, std::string_view word) {
  if (mode == "bare") return nota::ScriptMode::Bare;
  if (mode == "diacritized") return nota::ScriptMode::Diacritized;
  if (mode == "auto") {
    return nota::strip_diacritics(word) == word ? nota::ScriptMode::Bare
                                                : nota::ScriptMode::Diacritized;
  }
  throw py::value_error("mode must be 'auto', 'bare' or 'diacritized'");
}

nota::Normalizer make_normalizer(const std::optional<std::filesystem::path>& config,
                                 const std::vector<std::filesystem::path>& lexicon) {
  nota::RuleConfig c = config ? nota::RuleConfig::load(*config) : nota::RuleConfig{};
  for (const auto& p : lexicon) c.lexicon_paths.push_back(p);
  nota::Lexicon lex = nota::load_configured_lexicon(c);
  return nota::Normalizer(std::move(lex), std::move(c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normalizer and linter for Tunisian Arabic in NOTA orthography";

  static py::exception<nota::ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
  static py::exception<nota::LexiconError> lexicon_error(m, "LexiconError", PyExc_ValueError);
  static py::exception<nota::PassCapExceeded> pass_cap(m, "PassCapExceeded", PyExc_RuntimeError);
  static py::exception<nota::RomanizeError> romanize_error(m, "RomanizeError", PyExc_ValueError);
  static py::exception<nota::TranslitError> translit_error(m, "TranslitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nota::ConfigError& e) {
      config_error(e.what());
    } catch (const nota::LexiconError& e) {
      lexicon_error(e.what());
    } catch (const nota::PassCapExceeded& e) {
      pass_cap(e.what());
    } catch (const nota::RomanizeError& e) {
      romanize_error(e.what());
    } catch (const nota::TranslitError& e) {
      translit_error(e.what());
    }
  });

  py::class_<nota::Diagnostic>(m, "Diagnostic")
      .def_property_readonly("rule",
                             [](const nota::Diagnostic& d) { return std::string(nota::rule_name(d.rule)); })
      .def_property_readonly("severity",
                             [](const nota::Diagnostic& d) {
                               return std::string(nota::severity_name(d.severity));
                             })
      .def_property_readonly("start", [](const nota::Diagnostic& d) { return d.span.start; })
      .def_property_readonly("end", [](const nota::Diagnostic& d) { return d.span.end; })
      .def_readonly("message", &nota::Diagnostic::message)
      .def_readonly("replacement", &nota::Diagnostic::replacement)
      .def("__repr__", [](const nota::Diagnostic& d) {
        return "<Diagnostic " + std::string(nota::rule_name(d.rule)) + " " +
               std::string(nota::severity_name(d.severity)) + " [" +
               std::to_string(d.span.start) + ", " + std::to_string(d.span.end) + ")>";
      });

  py::class_<nota::AppliedFix>(m, "AppliedFix")
      .def_property_readonly("rule",
                             [](const nota::AppliedFix& f) { return std::string(nota::rule_name(f.rule)); })
      .def_readonly("pass_number", &nota::AppliedFix::pass)
      .def_property_readonly("start", [](const nota::AppliedFix& f) { return f.span.start; })
      .def_property_readonly("end", [](const nota::AppliedFix& f) { return f.span.end; })
      .def_readonly("replacement", &nota::AppliedFix::replacement);

  py::class_<nota::RunResult>(m, "RunResult")
      .def_readonly("output", &nota::RunResult::output)
      .def_readonly("diagnostics", &nota::RunResult::diagnostics)
      .def_readonly("fixes", &nota::RunResult::fixes)
      .def_readonly("passes_used", &nota::RunResult::passes_used)
      .def("has_errors_or_warnings", &nota::RunResult::has_errors_or_warnings);

  py::class_<nota::Normalizer>(m, "Normalizer")
      .def(py::init(&make_normalizer), py::arg("config") = py::none(),
           py::arg("lexicon") = std::vector<std::filesystem::path>{},
           "Loads an optional JSON config and extra lexicon files or directories.")
      .def(
          "run",
          [](const nota::Normalizer& n, const std::string& text, const std::string& mode) {
            return n.run(text, parse_mode(mode));
          },
          py::arg("text"), py::arg("mode") = "check")
      .def(
          "stats",
          [](const nota::Normalizer& n, const std::filesystem::path& dir) {
            return nota::to_json(nota::collect_corpus(dir, n));
          },
          py::arg("directory"), "Corpus statistics as a JSON string.");

  m.def(
      "normalize",
      [](const std::string& text, const std::string& mode) {
        return nota::normalize(text, nota::Lexicon::builtin(), nota::RuleConfig{},
                               parse_mode(mode));
      },
      py::arg("text"), py::arg("mode") = "check",
      "Runs the rules with the default lexicon and configuration.");

  m.def(
      "romanize",
      [](const std::string& word, const std::string& mode) {
        return nota::romanize_to_string(word, parse_script_mode(mode, word));
      },
      py::arg("word"), py::arg("mode") = "auto");

  m.def(
      "transliterate",
      [](const std::string& line, bool diacritized) {
        return nota::transliterate_loanword(
            nota::parse_phonemic_line(line),
            diacritized ? nota::ScriptMode::Diacritized : nota::ScriptMode::Bare);
      },
      py::arg("phonemic"), py::arg("diacritized") = false,
      "Spells a phonemically annotated loanword, e.g. 'f r i . ˈk a . s e j'.");

  m.def("canonicalize", [](const std::string& text) { return nota::canonicalize(text); },
        py::arg("text"));
  m.def("strip_diacritics",
        [](const std::string& text) { return nota::strip_diacritics(text); }, py::arg("text"));
}
