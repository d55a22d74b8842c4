#include "smat/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "smat/error.hpp"
#include "smat/text.hpp"

namespace fs = std::filesystem;

namespace smat {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_tab(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        std::string item = s.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (!item.empty()) out.push_back(item);
        start = comma + 1;
    }
    return out;
}

struct BioTag {
    char kind; // 'B', 'I' or 'O'
    std::string type;
};

BioTag parse_bio_tag(const std::string& tag, const std::string& where) {
    if (tag == "O") return {'O', ""};
    if (tag.size() >= 3 && (tag[0] == 'B' || tag[0] == 'I') && tag[1] == '-') {
        return {tag[0], tag.substr(2)};
    }
    throw Error(where + ": malformed BIO tag '" + tag + "'");
}

} // namespace

const char* to_string(Gender g) {
    return g == Gender::Male ? "Male" : "Female";
}

Gender parse_gender(const std::string& s) {
    if (s == "Male" || s == "M") return Gender::Male;
    if (s == "Female" || s == "F") return Gender::Female;
    throw Error("unknown gender label '" + s + "'");
}

std::map<std::string, std::size_t> ProfilingCorpus::class_counts() const {
    std::map<std::string, std::size_t> counts;
    for (const auto& doc : documents) {
        counts[std::string(to_string(doc.gender)) + "/" + doc.age_group]++;
    }
    return counts;
}

std::size_t ProfilingCorpus::age_index(const std::string& label) const {
    for (std::size_t i = 0; i < age_groups.size(); ++i) {
        if (age_groups[i] == label) return i;
    }
    throw Error("age group '" + label + "' not in declared label set");
}

ProfilingCorpus load_profiling_corpus(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw Error("cannot open manifest: " + manifest_path);
    const fs::path base = fs::path(manifest_path).parent_path();

    ProfilingCorpus corpus;
    corpus.language = "und";
    std::unordered_set<std::string> seen_ids;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            // Directive comments declare corpus metadata.
            const std::string body = line.substr(1);
            const std::size_t colon = body.find(':');
            if (colon != std::string::npos) {
                std::string key = body.substr(0, colon);
                key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
                const std::string value = body.substr(colon + 1);
                if (key == "age_groups") corpus.age_groups = split_csv_list(value);
                if (key == "language") {
                    for (const auto& v : split_csv_list(value)) corpus.language = v;
                }
            }
            continue;
        }
        const auto fields = split_tab(line);
        if (!header_seen) {
            if (fields.size() != 4 || fields[0] != "doc_id") {
                throw Error(manifest_path + ":" + std::to_string(line_no) +
                            ": expected header 'doc_id\tpath\tgender\tage_group'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 4) {
            throw Error(manifest_path + ":" + std::to_string(line_no) +
                        ": expected 4 tab-separated fields, got " +
                        std::to_string(fields.size()));
        }
        ProfilingDocument doc;
        doc.doc_id = fields[0];
        if (!seen_ids.insert(doc.doc_id).second) {
            throw Error(manifest_path + ":" + std::to_string(line_no) +
                        ": duplicate doc_id '" + doc.doc_id + "'");
        }
        const fs::path doc_path = base / fields[1];
        if (!fs::exists(doc_path)) {
            throw Error(manifest_path + ":" + std::to_string(line_no) +
                        ": document file not found: " + doc_path.string());
        }
        doc.gender = parse_gender(fields[2]);
        doc.age_group = fields[3];
        if (corpus.age_groups.empty()) {
            throw Error(manifest_path + ": missing '# age_groups:' declaration");
        }
        if (std::find(corpus.age_groups.begin(), corpus.age_groups.end(), doc.age_group) ==
            corpus.age_groups.end()) {
            throw Error(manifest_path + ":" + std::to_string(line_no) + ": age group '" +
                        doc.age_group + "' not in declared label set");
        }
        doc.raw_text = read_file(doc_path.string());
        doc.tokens = tokenize(clean_text(doc.raw_text));
        if (doc.tokens.empty()) {
            throw Error(manifest_path + ":" + std::to_string(line_no) + ": document '" +
                        doc.doc_id + "' is empty after cleaning");
        }
        corpus.documents.push_back(std::move(doc));
    }
    if (!header_seen) throw Error(manifest_path + ": missing manifest header");
    return corpus;
}

void validate_bio(const std::vector<std::string>& tags, const std::string& where) {
    std::string prev_type;
    char prev_kind = 'O';
    for (std::size_t i = 0; i < tags.size(); ++i) {
        const BioTag tag = parse_bio_tag(tags[i], where);
        if (tag.kind == 'I') {
            const bool continues =
                (prev_kind == 'B' || prev_kind == 'I') && prev_type == tag.type;
            if (!continues) {
                throw Error(where + ": I-" + tag.type + " at token " + std::to_string(i + 1) +
                            " does not continue a B-" + tag.type + "/I-" + tag.type + " run");
            }
        }
        prev_kind = tag.kind;
        prev_type = tag.type;
    }
}

std::vector<std::string> repair_bio(const std::vector<std::string>& tags) {
    std::vector<std::string> out = tags;
    std::string prev_type;
    char prev_kind = 'O';
    for (auto& tag : out) {
        const BioTag t = parse_bio_tag(tag, "repair_bio");
        if (t.kind == 'I' &&
            !((prev_kind == 'B' || prev_kind == 'I') && prev_type == t.type)) {
            tag = "B-" + t.type;
            prev_kind = 'B';
        } else {
            prev_kind = t.kind;
        }
        prev_type = t.type;
    }
    return out;
}

std::vector<TokenSentence> load_conll_corpus(const std::string& path, int levels) {
    if (levels < 1 || levels > 3) throw Error("levels must be 1..3");
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus: " + path);

    std::vector<TokenSentence> sentences;
    TokenSentence current;
    std::vector<int> token_lines;
    std::string line;
    int line_no = 0;
    const std::size_t want_cols = 3 + static_cast<std::size_t>(levels);

    auto flush_sentence = [&]() {
        if (current.tokens.empty()) return;
        for (int level = 0; level < levels; ++level) {
            char prev_kind = 'O';
            std::string prev_type;
            for (std::size_t i = 0; i < current.tokens.size(); ++i) {
                const std::string& raw = current.tokens[i].tags[level];
                const std::string where = path + ":" + std::to_string(token_lines[i]) +
                                          " level " + std::to_string(level + 1);
                const BioTag tag = parse_bio_tag(raw, where);
                if (tag.kind == 'I' &&
                    !((prev_kind == 'B' || prev_kind == 'I') && prev_type == tag.type)) {
                    throw Error(where + ": I-" + tag.type +
                                " does not continue a matching B-/I- run");
                }
                prev_kind = tag.kind;
                prev_type = tag.type;
            }
        }
        sentences.push_back(std::move(current));
        current = TokenSentence{};
        token_lines.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) {
            flush_sentence();
            continue;
        }
        if (line[0] == '#') continue;
        const auto fields = split_tab(line);
        if (fields.size() != want_cols) {
            throw Error(path + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(want_cols) + " columns, got " +
                        std::to_string(fields.size()));
        }
        ConllToken tok;
        tok.surface = fields[0];
        tok.pos = fields[1];
        tok.chunk = fields[2];
        tok.tags.assign(fields.begin() + 3, fields.end());
        current.tokens.push_back(std::move(tok));
        token_lines.push_back(line_no);
    }
    flush_sentence();
    return sentences;
}

std::string format_conll(const std::vector<TokenSentence>& sentences) {
    std::string out;
    for (const auto& sentence : sentences) {
        for (const auto& tok : sentence.tokens) {
            out += tok.surface;
            out += '\t';
            out += tok.pos;
            out += '\t';
            out += tok.chunk;
            for (const auto& tag : tok.tags) {
                out += '\t';
                out += tag;
            }
            out += '\n';
        }
        out += '\n';
    }
    return out;
}

void write_conll_corpus(const std::string& path, const std::vector<TokenSentence>& sentences) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write: " + path);
    out << format_conll(sentences);
}

} // namespace smat
