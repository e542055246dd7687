#include "detskein/corpus.hpp"

#include <boost/algorithm/string.hpp>

#include "detskein/error.hpp"

namespace detskein {

namespace bundled {
extern const std::string_view corpus_text;
extern const std::string_view templates_text;
}  // namespace bundled

namespace {

std::vector<std::vector<std::string>> records(std::string_view text, std::size_t fields) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> lines;
    boost::split(lines, text, boost::is_any_of("\n"));
    for (std::size_t n = 0; n < lines.size(); ++n) {
        std::string line = boost::trim_copy(lines[n]);
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> parts;
        boost::split(parts, line, boost::is_any_of("|"));
        if (parts.size() != fields) {
            throw ParseError("manifest line " + std::to_string(n + 1) + ": expected " + std::to_string(fields) +
                             " fields separated by '|'");
        }
        for (auto& p : parts) boost::trim(p);
        out.push_back(std::move(parts));
    }
    return out;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
    std::vector<CorpusEntry> out;
    for (auto& r : records(text, 4)) {
        CorpusEntry e;
        e.name = r[0];
        e.pd = r[1];
        try {
            e.components = std::stoi(r[2]);
            e.determinant = BigInt(r[3]);
        } catch (const std::exception&) {
            throw ParseError("manifest entry '" + e.name + "': components and determinant must be integers");
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<TemplateEntry> parse_templates(std::string_view text) {
    std::vector<TemplateEntry> out;
    for (auto& r : records(text, 2)) out.push_back({r[0], r[1]});
    return out;
}

const std::vector<CorpusEntry>& bundled_corpus() {
    static const std::vector<CorpusEntry> corpus = parse_corpus(bundled::corpus_text);
    return corpus;
}

const std::vector<TemplateEntry>& bundled_templates() {
    static const std::vector<TemplateEntry> templates = parse_templates(bundled::templates_text);
    return templates;
}

}  // namespace detskein
