#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace smat {

enum class Gender { Male, Female };

const char* to_string(Gender g);
Gender parse_gender(const std::string& s); // accepts Male/Female and M/F

struct ProfilingDocument {
    std::string doc_id;
    std::string raw_text;
    std::vector<std::string> tokens; // cleaned + tokenized, never empty
    Gender gender = Gender::Male;
    std::string age_group;
};

struct ProfilingCorpus {
    std::vector<ProfilingDocument> documents;
    std::vector<std::string> age_groups; // declared label set, declaration order
    std::string language;

    std::size_t size() const { return documents.size(); }
    std::map<std::string, std::size_t> class_counts() const; // "gender/age" -> count
    std::size_t age_index(const std::string& label) const;   // Error if unknown
};

// Manifest TSV: directive comments (# age_groups: ..., # language: ...),
// a "doc_id path gender age_group" header, one row per document. Paths are
// relative to the manifest. Documents are cleaned and tokenized at load;
// documents emptied by cleaning are rejected.
ProfilingCorpus load_profiling_corpus(const std::string& manifest_path);

// One token row of a CoNLL-style corpus: surface, POS, chunk, 1-3 BIO tags.
struct ConllToken {
    std::string surface;
    std::string pos;
    std::string chunk;
    std::vector<std::string> tags;
};

struct TokenSentence {
    std::vector<ConllToken> tokens;
    std::size_t size() const { return tokens.size(); }
};

// Tab-separated, blank line between sentences, '#' lines ignored,
// 3 + levels columns per row. BIO transitions validated at every level.
std::vector<TokenSentence> load_conll_corpus(const std::string& path, int levels);

// Canonical form: single tabs, one blank line after every sentence.
// write(load(x)) == x byte-for-byte for files already in canonical form.
std::string format_conll(const std::vector<TokenSentence>& sentences);
void write_conll_corpus(const std::string& path, const std::vector<TokenSentence>& sentences);

// Throws Error naming `where` if tags is not a valid BIO sequence
// (an I-X must follow B-X or I-X with the same X).
void validate_bio(const std::vector<std::string>& tags, const std::string& where);

// Rewrites orphan I-X tags (at sentence start or after a different type)
// to B-X. Leaves everything else untouched.
std::vector<std::string> repair_bio(const std::vector<std::string>& tags);

} // namespace smat
