#pragma once

// Fixture documents whose text, DOT and TikZ renderings are kept as golden
// files under tests/golden/<stem>.{mg,dot,tikz}.

#include <optional>
#include <string>
#include <vector>

#include "monograph/document.hpp"

namespace corpus {

struct GoldenCase {
  std::string stem;
  monograph::Document doc;
  std::string draw;                   // monograph exported to DOT and TikZ
  std::optional<std::string> typing;  // morphism out of `draw` used for labels
};

std::vector<GoldenCase> golden_cases();

// Renderings of one case, keyed by file extension.
std::vector<std::pair<std::string, std::string>> renderings(const GoldenCase& c);

std::optional<std::string> read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace corpus
