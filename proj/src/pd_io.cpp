#include <cctype>
#include <charconv>
#include <string>

#include "detskein/diagram.hpp"
#include "detskein/error.hpp"

namespace detskein {
namespace {

class Lexer {
public:
    explicit Lexer(std::string_view text) : s_(text) {}

    void skip_separators() {
        while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == ',')) ++i_;
    }
    bool done() {
        skip_separators();
        return i_ >= s_.size();
    }
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    char get() { return i_ < s_.size() ? s_[i_++] : '\0'; }
    std::size_t offset() const { return i_; }

    void expect(char c) {
        skip_spaces();
        if (get() != c) fail(std::string("expected '") + c + "'");
    }

    int integer() {
        skip_spaces();
        std::size_t start = i_;
        if (peek() == '-' || peek() == '+') ++i_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        if (i_ == start || (i_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start])))) {
            fail("expected an integer");
        }
        int v = 0;
        const char* first = s_.data() + start + (s_[start] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, s_.data() + i_, v);
        if (ec != std::errc() || ptr != s_.data() + i_) fail("expected an integer");
        return v;
    }

    void skip_spaces() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("malformed PD code at offset " + std::to_string(i_) + ": " + what);
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

std::array<int, 4> quad(Lexer& lx) {
    lx.expect('[');
    std::array<int, 4> out{};
    for (int k = 0; k < 4; ++k) {
        if (k) lx.expect(',');
        out[k] = lx.integer();
    }
    lx.expect(']');
    return out;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
    // Tolerate a KnotTheory-style PD[...] wrapper.
    std::string_view body = text;
    {
        std::size_t b = body.find_first_not_of(" \t\r\n");
        if (b != std::string_view::npos && body.substr(b, 3) == "PD[") {
            std::size_t e = body.find_last_not_of(" \t\r\n");
            if (body[e] != ']') throw ParseError("malformed PD code: unclosed PD[");
            body = body.substr(b + 3, e - b - 3);
        }
    }
    Lexer lx(body);
    std::vector<Crossing> crossings;
    std::vector<SlotRef> slots;
    int loops = 0;
    std::optional<std::vector<std::pair<int, int>>> directive;
    while (!lx.done()) {
        char kind = lx.get();
        switch (kind) {
            case 'X': crossings.push_back({quad(lx)}); break;
            case 'T': slots.push_back({quad(lx)}); break;
            case 'U': {
                lx.expect('[');
                int n = lx.integer();
                lx.expect(']');
                if (n < 1) lx.fail("U[n] needs n >= 1");
                loops += n;
                break;
            }
            case 'O': {
                if (directive) lx.fail("more than one orientation directive");
                directive.emplace();
                lx.expect('[');
                lx.skip_spaces();
                while (lx.peek() != ']') {
                    if (!directive->empty()) lx.expect(',');
                    int idx = lx.integer();
                    lx.expect(':');
                    lx.skip_spaces();
                    char s = lx.get();
                    if (s != '+' && s != '-') lx.fail("orientation sign must be + or -");
                    directive->push_back({idx, s == '+' ? 1 : -1});
                    lx.skip_spaces();
                }
                lx.expect(']');
                break;
            }
            default:
                lx.fail(std::string("unknown token '") + kind + "'");
        }
    }
    if (crossings.empty() && slots.empty() && loops == 0) loops = 1;
    if (!directive) return LinkDiagram(std::move(crossings), std::move(slots), loops);

    LinkDiagram plain(crossings, slots, loops);
    std::vector<int> signs(plain.path_count(), 0);
    for (auto [idx, s] : *directive) {
        if (idx < 1 || static_cast<std::size_t>(idx) > signs.size()) {
            throw ParseError("orientation directive names path " + std::to_string(idx) +
                             ", diagram has " + std::to_string(signs.size()));
        }
        if (signs[idx - 1] != 0) throw ParseError("orientation directive repeats path " + std::to_string(idx));
        signs[idx - 1] = s;
    }
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == 0) throw ParseError("orientation directive omits path " + std::to_string(i + 1));
    }
    return plain.with_orientation(std::move(signs));
}

std::string to_pd(const LinkDiagram& d) {
    std::string out;
    auto sep = [&out] {
        if (!out.empty()) out += ' ';
    };
    auto put = [&](char kind, const std::array<int, 4>& a) {
        sep();
        out += kind;
        out += '[';
        for (int k = 0; k < 4; ++k) {
            if (k) out += ',';
            out += std::to_string(a[k]);
        }
        out += ']';
    };
    for (const auto& x : d.crossings()) put('X', x.arcs);
    for (const auto& s : d.slots()) put('T', s.endpoints);
    if (d.free_loops() > 0) {
        sep();
        out += "U[" + std::to_string(d.free_loops()) + "]";
    }
    if (d.oriented()) {
        sep();
        out += "O[";
        const auto& o = d.orientation();
        for (std::size_t i = 0; i < o.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(i + 1) + (o[i] > 0 ? ":+" : ":-");
        }
        out += ']';
    }
    return out;
}

}  // namespace detskein
