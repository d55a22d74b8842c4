#include "smat/text.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace smat {

namespace {

bool is_space_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_ascii_punct(unsigned char c) {
    return c < 128 && std::ispunct(c);
}

bool starts_with_at(const std::string& s, std::size_t pos, const char* prefix) {
    for (std::size_t i = 0; prefix[i]; ++i) {
        if (pos + i >= s.size() || s[pos + i] != prefix[i]) return false;
    }
    return true;
}

bool url_starts_at(const std::string& s, std::size_t pos) {
    return starts_with_at(s, pos, "http://") || starts_with_at(s, pos, "https://") ||
           starts_with_at(s, pos, "ftp://");
}

const std::unordered_set<std::string>& emoticon_set() {
    static const std::unordered_set<std::string> set = {
        ":)",  ":(",  ":D",  ":P",  ":p",  ";)",  ":/",  ":\\", ":|",  ":O",  ":o",
        ":-)", ":-(", ":-D", ":-P", ";-)", ":-/", ":-|", ":'(", ":')", "<3",
        "=)",  "=(",  "=D",  ":3",  "xD",  "XD",  "^_^", "o_O", "O_o", "-_-", "\\o/",
    };
    return set;
}

} // namespace

bool is_emoticon(const std::string& token) {
    return emoticon_set().count(token) > 0;
}

std::string clean_text(const std::string& raw) {
    // Pass 1: drop <...> spans (unclosed '<' is kept), URL runs and @-mention
    // tokens. A mention is a whitespace-delimited run starting with '@'.
    std::string pass1;
    pass1.reserve(raw.size());
    std::size_t i = 0;
    bool at_token_start = true;
    while (i < raw.size()) {
        const char c = raw[i];
        if (c == '<') {
            const std::size_t close = raw.find('>', i + 1);
            if (close != std::string::npos) {
                i = close + 1;
                continue;
            }
        }
        if (url_starts_at(raw, i)) {
            while (i < raw.size() && !is_space_byte(static_cast<unsigned char>(raw[i]))) ++i;
            continue;
        }
        if (c == '@' && at_token_start) {
            while (i < raw.size() && !is_space_byte(static_cast<unsigned char>(raw[i]))) ++i;
            continue;
        }
        at_token_start = is_space_byte(static_cast<unsigned char>(c));
        pass1.push_back(c);
        ++i;
    }

    // Pass 2: drop control characters (C0 except tab/newline/CR, DEL, and the
    // two-byte UTF-8 encodings of U+0080..U+009F), collapsing whitespace.
    std::string out;
    out.reserve(pass1.size());
    bool pending_space = false;
    for (std::size_t k = 0; k < pass1.size(); ++k) {
        const unsigned char c = static_cast<unsigned char>(pass1[k]);
        if (is_space_byte(c)) {
            pending_space = true;
            continue;
        }
        if (c < 0x20 || c == 0x7f) continue;
        if (c == 0xc2 && k + 1 < pass1.size()) {
            const unsigned char next = static_cast<unsigned char>(pass1[k + 1]);
            if (next >= 0x80 && next <= 0x9f) {
                ++k;
                continue;
            }
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.push_back(static_cast<char>(c));
    }
    return out;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space_byte(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !is_space_byte(static_cast<unsigned char>(text[j]))) ++j;
        std::string word = text.substr(i, j - i);
        i = j;

        if (is_emoticon(word)) {
            tokens.push_back(std::move(word));
            continue;
        }

        std::size_t begin = 0;
        std::size_t end = word.size();
        while (begin < end && is_ascii_punct(static_cast<unsigned char>(word[begin]))) {
            tokens.push_back(std::string(1, word[begin]));
            ++begin;
        }
        std::vector<char> trailing;
        while (end > begin && is_ascii_punct(static_cast<unsigned char>(word[end - 1]))) {
            trailing.push_back(word[end - 1]);
            --end;
        }
        if (end > begin) tokens.push_back(word.substr(begin, end - begin));
        for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
            tokens.push_back(std::string(1, *it));
        }
    }
    return tokens;
}

} // namespace smat
