#include "microq/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>

#include "microq/errors.hpp"
#include "microq/tokenizer.hpp"

namespace microq {

TagSet::TagSet(std::initializer_list<std::string> tags) {
  for (const auto& t : tags) insert(t);
}

bool TagSet::insert(std::string tag) {
  if (contains(tag)) return false;
  tags_.push_back(std::move(tag));
  return true;
}

bool TagSet::contains(std::string_view tag) const {
  return std::find(tags_.begin(), tags_.end(), tag) != tags_.end();
}

bool TagSet::operator==(const TagSet& other) const {
  return sorted() == other.sorted();
}

std::vector<std::string> TagSet::sorted() const {
  std::vector<std::string> out = tags_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string TagSet::joined() const {
  std::string out;
  for (const auto& t : tags_) {
    if (!out.empty()) out += ',';
    out += t;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_comment_or_blank(std::string_view line) {
  std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

bool valid_tag(std::string_view tag) {
  if (tag.empty()) return false;
  return std::all_of(tag.begin(), tag.end(),
                     [](unsigned char c) { return c >= 'A' && c <= 'Z'; });
}

// Parses one `word<TAB>TAG[,TAG]*` line into (normalized headword, tags).
std::pair<std::string, TagSet> parse_entry_line(std::string_view line, std::size_t line_no) {
  std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos)
    throw MalformedLine(line_no, "expected word<TAB>TAG[,TAG]*");
  std::string_view word = trim(line.substr(0, tab));
  std::string_view tags = trim(line.substr(tab + 1));
  if (word.empty()) throw MalformedLine(line_no, "empty headword");
  if (tags.empty()) throw MalformedLine(line_no, "empty tag list");

  TagSet set;
  std::size_t pos = 0;
  while (pos <= tags.size()) {
    std::size_t comma = tags.find(',', pos);
    std::string_view tag = trim(tags.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos));
    if (!valid_tag(tag))
      throw MalformedLine(line_no, "invalid tag '" + std::string(tag) + "'");
    set.insert(std::string(tag));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  std::string head = normalize_word(word);
  if (head.empty()) throw MalformedLine(line_no, "headword normalizes to nothing");
  return {std::move(head), std::move(set)};
}

}  // namespace

TagMap load_base_list(const std::vector<std::string>& lines) {
  TagMap map;
  std::size_t line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto [head, tags] = parse_entry_line(line, line_no);
    TagSet& entry = map[head];
    for (const auto& t : tags) entry.insert(t);  // collision-union
  }
  if (map.empty()) throw EmptyList();
  return map;
}

void apply_overlay(TagMap& base, const std::vector<std::string>& lines, OverlayStats* stats) {
  OverlayStats local;
  std::size_t line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto [head, tags] = parse_entry_line(line, line_no);
    auto it = base.find(head);
    if (it == base.end()) {
      base.emplace(std::move(head), std::move(tags));
      ++local.added;
    } else {
      it->second = std::move(tags);  // whole-set override
      ++local.overridden;
    }
  }
  if (stats) *stats = local;
}

void merge_names(TagMap& current, const std::vector<std::string>& lines, NameStats* stats) {
  NameStats local;
  std::size_t line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::string head = normalize_word(trim(line));
    if (head.empty()) continue;
    auto it = current.find(head);
    if (it == current.end()) {
      current.emplace(std::move(head), TagSet{"NNP"});
      ++local.added;
    } else if (it->second.insert("NNP")) {
      ++local.augmented;
    }
  }
  if (stats) *stats = local;
}

Lexicon::Lexicon(TagMap entries, SourceCounts counts)
    : entries_(std::move(entries)), counts_(counts) {}

const TagSet& Lexicon::unknown_word_tags() {
  static const TagSet kDefault{"NN", "NNP", "VB", "JJ"};
  return kDefault;
}

const TagSet* Lexicon::find(std::string_view norm) const {
  auto it = entries_.find(std::string(norm));
  return it == entries_.end() ? nullptr : &it->second;
}

const TagSet& Lexicon::lookup(std::string_view norm) const {
  const TagSet* entry = find(norm);
  return entry ? *entry : unknown_word_tags();
}

std::vector<std::string> Lexicon::observed_tags() const {
  std::set<std::string> tags;
  for (const auto& [head, set] : entries_) {
    for (const auto& t : set) tags.insert(t);
  }
  return {tags.begin(), tags.end()};
}

void Lexicon::dump(std::ostream& out) const {
  for (const auto& [head, tags] : entries_) {
    out << head << '\t' << tags.joined() << '\n';
  }
}

Lexicon build_lexicon(const std::vector<std::string>& base_lines,
                      const std::vector<std::string>& overlay_lines,
                      const std::vector<std::string>& name_lines) {
  SourceCounts counts;
  TagMap map = load_base_list(base_lines);
  counts.base_entries = map.size();
  if (!overlay_lines.empty()) apply_overlay(map, overlay_lines, &counts.overlay);
  if (!name_lines.empty()) merge_names(map, name_lines, &counts.names);
  return Lexicon(std::move(map), counts);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace microq
