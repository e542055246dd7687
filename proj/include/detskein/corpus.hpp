#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "detskein/bigint.hpp"

namespace detskein {

// One manifest line: `name | pd | components | determinant`.
struct CorpusEntry {
    std::string name;
    std::string pd;
    int components = 1;
    BigInt determinant;
};

// Template manifest lines: `name | pd`.
struct TemplateEntry {
    std::string name;
    std::string pd;
};

// Blank lines and lines starting with '#' are skipped.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<TemplateEntry> parse_templates(std::string_view text);

const std::vector<CorpusEntry>& bundled_corpus();
const std::vector<TemplateEntry>& bundled_templates();

}  // namespace detskein
