// Copyright 2026 The Reqlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Structured view of a plain-text requirements specification. The input
// convention is line/paragraph oriented: '#' headings open sections,
// paragraphs whose first line matches the requirement-id pattern are
// requirements, and single-line markers classify enumerations, captions,
// table rows, reference entries and comments. Everything else is
// informative prose.

#ifndef REQLINT_DOCMODEL_HPP
#define REQLINT_DOCMODEL_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/errors.hpp"
#include "reqlint/taxonomy.hpp"

namespace reqlint {

// Half-open byte range [start, end) into some source string.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool contains(std::size_t offset) const { return offset >= start && offset < end; }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class BlockKind {
  Heading,
  Requirement,
  Informative,
  EnumerationItem,
  TableRow,
  FigureCaption,
  ReferenceEntry,
  Comment,
};

inline std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Heading: return "Heading";
    case BlockKind::Requirement: return "Requirement";
    case BlockKind::Informative: return "Informative";
    case BlockKind::EnumerationItem: return "EnumerationItem";
    case BlockKind::TableRow: return "TableRow";
    case BlockKind::FigureCaption: return "FigureCaption";
    case BlockKind::ReferenceEntry: return "ReferenceEntry";
    case BlockKind::Comment: return "Comment";
  }
  return "?";
}

struct Block {
  BlockKind kind = BlockKind::Informative;
  Span span;          // into Document::source
  std::string text;   // equals source[span]
  std::optional<std::string> requirement_id;  // set iff kind == Requirement
  // Offset (block-relative) where the requirement body starts, after the
  // id prefix. 0 for every other kind.
  std::size_t body_start = 0;
  // Heading block indices of the enclosing sections, outermost first.
  // Empty for preamble blocks.
  std::vector<std::size_t> section_path;
};

struct Section {
  std::size_t heading_block = 0;  // index into Document::blocks
  int level = 1;
  std::string title;              // heading text without markers
  std::vector<std::size_t> block_children;    // non-heading blocks directly inside
  std::vector<std::size_t> section_children;  // subsections
};

struct Document {
  std::string source;
  std::vector<Block> blocks;
  std::vector<Section> sections;
  std::vector<std::size_t> top_sections;     // top-level section indices, in order
  std::vector<std::size_t> preamble_blocks;  // blocks before the first heading
  std::optional<std::size_t> intro_section;  // first top-level section
};

struct DocConfig {
  std::string requirement_id_pattern = "^[A-Z][A-Z0-9]*-[0-9]+:";
  std::string heading_marker = "#";
  std::string references_heading_title = "References";
  std::string comment_marker = "//";
};

namespace detail {

inline bool is_blank(std::string_view line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::string_view ltrim(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

inline std::string_view rtrim(std::string_view s) {
  std::size_t i = s.size();
  while (i > 0 && std::isspace(static_cast<unsigned char>(s[i - 1]))) --i;
  return s.substr(0, i);
}

inline std::string_view trim(std::string_view s) { return rtrim(ltrim(s)); }

inline bool starts_with_digit_paren(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i > 0 && i < s.size() && s[i] == ')';
}

inline bool is_caption(std::string_view s, std::string_view word) {
  if (s.substr(0, word.size()) != word) return false;
  std::size_t i = word.size();
  if (i >= s.size() || s[i] != ' ') return false;
  ++i;
  std::size_t d = i;
  while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
  if (d == i) return false;
  while (d < s.size() && s[d] == ' ') ++d;
  return d < s.size() && s[d] == ':';
}

}  // namespace detail

// Parses `source` into blocks and sections. Throws PatternError if the
// configured requirement-id pattern does not compile and FormatError if a
// marker string is empty.
inline Document parse_document(std::string source, const DocConfig& config = {}) {
  if (config.heading_marker.empty() || config.comment_marker.empty())
    throw FormatError("document config: markers must be non-empty");
  std::regex id_regex;
  try {
    id_regex = std::regex(config.requirement_id_pattern);
  } catch (const std::regex_error& e) {
    throw PatternError("requirement_id_pattern does not compile: " +
                       std::string(e.what()));
  }

  Document doc;
  doc.source = std::move(source);

  struct OpenParagraph {
    std::size_t start = 0;
    std::size_t end = 0;
    BlockKind kind = BlockKind::Informative;
    std::optional<std::string> requirement_id;
    std::size_t body_start = 0;
    bool open = false;
  };
  OpenParagraph para;
  // Stack of open sections: indices into doc.sections.
  std::vector<std::size_t> stack;
  bool in_references = false;

  auto current_path = [&]() {
    std::vector<std::size_t> path;
    path.reserve(stack.size());
    for (std::size_t s : stack) path.push_back(doc.sections[s].heading_block);
    return path;
  };

  auto attach = [&](std::size_t block_index) {
    if (stack.empty())
      doc.preamble_blocks.push_back(block_index);
    else
      doc.sections[stack.back()].block_children.push_back(block_index);
  };

  auto flush_paragraph = [&]() {
    if (!para.open) return;
    Block b;
    b.kind = para.kind;
    b.span = {para.start, para.end};
    b.text = doc.source.substr(para.start, para.end - para.start);
    b.requirement_id = para.requirement_id;
    b.body_start = para.body_start;
    b.section_path = current_path();
    doc.blocks.push_back(std::move(b));
    attach(doc.blocks.size() - 1);
    para.open = false;
  };

  auto add_line_block = [&](BlockKind kind, std::size_t start, std::size_t end) {
    flush_paragraph();
    Block b;
    b.kind = kind;
    b.span = {start, end};
    b.text = doc.source.substr(start, end - start);
    b.section_path = current_path();
    doc.blocks.push_back(std::move(b));
    attach(doc.blocks.size() - 1);
  };

  auto open_section = [&](std::size_t start, std::size_t end) {
    flush_paragraph();
    std::string_view line(doc.source.data() + start, end - start);
    std::string_view rest = detail::ltrim(line);
    int level = 0;
    while (rest.substr(0, config.heading_marker.size()) == config.heading_marker) {
      rest.remove_prefix(config.heading_marker.size());
      ++level;
    }
    std::string title(detail::trim(rest));

    while (!stack.empty() && doc.sections[stack.back()].level >= level)
      stack.pop_back();

    Section sec;
    sec.level = level;
    sec.title = title;

    // The heading block lives inside the section it opens.
    Block b;
    b.kind = BlockKind::Heading;
    b.span = {start, end};
    b.text = doc.source.substr(start, end - start);
    std::size_t heading_index = doc.blocks.size();
    sec.heading_block = heading_index;

    std::size_t sec_index = doc.sections.size();
    if (stack.empty()) {
      doc.top_sections.push_back(sec_index);
      if (!doc.intro_section) doc.intro_section = sec_index;
    } else {
      doc.sections[stack.back()].section_children.push_back(sec_index);
    }
    doc.sections.push_back(std::move(sec));
    stack.push_back(sec_index);

    b.section_path = current_path();
    doc.blocks.push_back(std::move(b));

    in_references = false;
    for (std::size_t s : stack)
      if (doc.sections[s].title == config.references_heading_title)
        in_references = true;
  };

  const std::string& src = doc.source;
  std::size_t pos = 0;
  while (pos <= src.size()) {
    if (pos == src.size()) break;
    std::size_t eol = src.find('\n', pos);
    std::size_t line_end = (eol == std::string::npos) ? src.size() : eol;
    std::string_view line(src.data() + pos, line_end - pos);
    std::string_view body = detail::ltrim(line);
    std::size_t body_off = pos + (line.size() - body.size());

    if (detail::is_blank(line)) {
      flush_paragraph();
    } else if (body.substr(0, config.heading_marker.size()) == config.heading_marker) {
      open_section(pos, line_end);
    } else if (in_references) {
      add_line_block(BlockKind::ReferenceEntry, pos, line_end);
    } else if (body.substr(0, config.comment_marker.size()) == config.comment_marker) {
      add_line_block(BlockKind::Comment, pos, line_end);
    } else if (body.front() == '-' || body.front() == '*' ||
               detail::starts_with_digit_paren(body)) {
      add_line_block(BlockKind::EnumerationItem, pos, line_end);
    } else if (detail::is_caption(body, "Figure")) {
      add_line_block(BlockKind::FigureCaption, pos, line_end);
    } else if (detail::is_caption(body, "Table")) {
      add_line_block(BlockKind::TableRow, pos, line_end);
    } else {
      std::cmatch m;
      bool id_line = std::regex_search(body.data(), body.data() + body.size(), m,
                                       id_regex, std::regex_constants::match_continuous);
      if (id_line) {
        flush_paragraph();
        para.open = true;
        para.kind = BlockKind::Requirement;
        para.start = pos;
        para.end = line_end;
        std::string id = m.str();
        while (!id.empty() && (id.back() == ':' || id.back() == ' ')) id.pop_back();
        para.requirement_id = id;
        std::size_t after = body_off + m.length() - pos;  // block-relative
        while (para.start + after < line_end &&
               src[para.start + after] == ' ')
          ++after;
        para.body_start = after;
      } else if (para.open) {
        para.end = line_end;
      } else {
        para.open = true;
        para.kind = BlockKind::Informative;
        para.start = pos;
        para.end = line_end;
        para.requirement_id.reset();
        para.body_start = 0;
      }
    }

    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  flush_paragraph();
  return doc;
}

// Reads a document from disk. Throws ResourceError when unreadable.
inline Document parse_document_file(const std::string& path,
                                    const DocConfig& config = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read document: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), config);
}

// Block indices a rule with the given context applies to, in document order.
inline std::vector<std::size_t> blocks_in_context(const Document& doc,
                                                  ContextKind context) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    BlockKind k = doc.blocks[i].kind;
    bool match = false;
    switch (context) {
      case ContextKind::Anywhere: match = (k != BlockKind::Comment); break;
      case ContextKind::Requirement: match = (k == BlockKind::Requirement); break;
      case ContextKind::Heading: match = (k == BlockKind::Heading); break;
      case ContextKind::Figure: match = (k == BlockKind::FigureCaption); break;
      case ContextKind::Table: match = (k == BlockKind::TableRow); break;
      case ContextKind::Reference: match = (k == BlockKind::ReferenceEntry); break;
      case ContextKind::Enumeration: match = (k == BlockKind::EnumerationItem); break;
      case ContextKind::Comment: match = (k == BlockKind::Comment); break;
      case ContextKind::Unclassified: match = false; break;
    }
    if (match) out.push_back(i);
  }
  return out;
}

// True when the block sits in the introductory part of the specification:
// the first top-level section or the preamble before any heading.
inline bool is_intro_section(const Document& doc, const Block& block) {
  if (block.section_path.empty()) return true;
  if (!doc.intro_section) return false;
  return block.section_path.front() ==
         doc.sections[*doc.intro_section].heading_block;
}

// Loads DocConfig from a line-oriented `key = value` file. Lines that are
// blank or start with ';' are skipped.
inline DocConfig load_doc_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot read config file: " + path);
  DocConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = detail::trim(line);
    if (v.empty() || v.front() == ';') continue;
    std::size_t eq = v.find('=');
    if (eq == std::string_view::npos)
      throw FormatError(path + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    std::string key(detail::trim(v.substr(0, eq)));
    std::string value(detail::trim(v.substr(eq + 1)));
    if (key == "requirement_id_pattern") cfg.requirement_id_pattern = value;
    else if (key == "heading_marker") cfg.heading_marker = value;
    else if (key == "references_heading_title") cfg.references_heading_title = value;
    else if (key == "comment_marker") cfg.comment_marker = value;
    else
      throw FormatError(path + ":" + std::to_string(lineno) +
                        ": unknown config key '" + key + "'");
  }
  return cfg;
}

}  // namespace reqlint

#endif  // REQLINT_DOCMODEL_HPP
