#pragma once

#include <string>
#include <vector>

namespace smat {

// Strips URLs (http/https/ftp), @-mention tokens, <...> spans and control
// characters, then collapses whitespace runs to single spaces. Casing is
// preserved. May return an empty string.
std::string clean_text(const std::string& raw);

// Whitespace split followed by peeling leading/trailing ASCII punctuation
// into separate tokens. Tokens on the emoticon whitelist are kept whole.
// Deterministic, and idempotent on its own space-joined output.
std::vector<std::string> tokenize(const std::string& text);

// True if the token is on the built-in emoticon whitelist.
bool is_emoticon(const std::string& token);

} // namespace smat
