#ifndef MICROQ_LEXICON_HPP
#define MICROQ_LEXICON_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace microq {

// A duplicate-free set of POS tags that remembers first-insertion order so
// dumps reflect source order. Equality is set equality.
class TagSet {
 public:
  TagSet() = default;
  TagSet(std::initializer_list<std::string> tags);

  bool insert(std::string tag);  // false if already present
  bool contains(std::string_view tag) const;
  bool operator==(const TagSet& other) const;

  bool empty() const { return tags_.empty(); }
  std::size_t size() const { return tags_.size(); }
  auto begin() const { return tags_.begin(); }
  auto end() const { return tags_.end(); }

  std::vector<std::string> sorted() const;
  std::string joined() const;  // "VB,NNP" in stored order

 private:
  std::vector<std::string> tags_;
};

// Headword -> tag set, keyed by normalized form. std::map keeps dumps
// sorted by headword.
using TagMap = std::map<std::string, TagSet>;

struct OverlayStats {
  std::size_t added = 0;
  std::size_t overridden = 0;
};

struct NameStats {
  std::size_t added = 0;
  std::size_t augmented = 0;
};

struct SourceCounts {
  std::size_t base_entries = 0;
  OverlayStats overlay;
  NameStats names;
};

// Parses `word<TAB>TAG[,TAG]*` lines. Words are normalized; raw words that
// collide after normalization have their tag sets unioned. '#' comments and
// blank lines are ignored. Throws MalformedLine / EmptyList.
TagMap load_base_list(const std::vector<std::string>& lines);

// Same line format. A normalized overlay headword replaces the whole tag
// set of an existing entry and adds new entries otherwise.
void apply_overlay(TagMap& base, const std::vector<std::string>& lines,
                   OverlayStats* stats = nullptr);

// One name per line. Adds NNP to existing entries, creates {NNP} entries
// for new names.
void merge_names(TagMap& current, const std::vector<std::string>& lines,
                 NameStats* stats = nullptr);

// Immutable headword -> tag-set mapping built from the three layered lists.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(TagMap entries, SourceCounts counts);

  // Tag set for a known headword, or the open-class default
  // {NN, NNP, VB, JJ} for unknown words.
  const TagSet& lookup(std::string_view norm) const;

  // nullptr when the headword is absent.
  const TagSet* find(std::string_view norm) const;

  static const TagSet& unknown_word_tags();

  std::size_t size() const { return entries_.size(); }
  const TagMap& entries() const { return entries_; }
  const SourceCounts& source_counts() const { return counts_; }

  // All tags appearing in any entry.
  std::vector<std::string> observed_tags() const;

  // `headword<TAB>TAG,TAG` lines sorted by headword.
  void dump(std::ostream& out) const;

 private:
  TagMap entries_;
  SourceCounts counts_;
};

// Convenience: build from the three optional layers in one call.
Lexicon build_lexicon(const std::vector<std::string>& base_lines,
                      const std::vector<std::string>& overlay_lines = {},
                      const std::vector<std::string>& name_lines = {});

// Reads a whole text file into lines (used by the CLI and tests).
std::vector<std::string> read_lines(const std::string& path);

}  // namespace microq

#endif  // MICROQ_LEXICON_HPP
