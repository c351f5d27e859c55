// Copyright 2026 The Synqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "synqa/dataset.h"

#include <cmath>
#include <unordered_set>

#include "json.hpp"
#include "synqa/errors.h"
#include "synqa/text_types.h"
#include "synqa/utf8.h"

namespace synqa {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

class Reader {
 public:
  explicit Reader(bool strict) : strict_(strict) {}

  const json &object(const json &parent, const std::string &path) const {
    if (!parent.is_object()) fail(path, "expected an object");
    return parent;
  }

  const json *field(const json &obj, const char *key, const std::string &path,
                    bool required) const {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path, std::string("missing key \"") + key + "\"");
      return nullptr;
    }
    return &*it;
  }

  std::string string(const json &obj, const char *key,
                     const std::string &path) const {
    const json *value = field(obj, key, path, true);
    if (!value->is_string()) fail(join(path, key), "expected a string");
    return value->get<std::string>();
  }

  const json &array(const json &obj, const char *key,
                    const std::string &path) const {
    const json *value = field(obj, key, path, true);
    if (!value->is_array()) fail(join(path, key), "expected an array");
    return *value;
  }

  void only_keys(const json &obj, std::initializer_list<const char *> keys,
                 const std::string &path) const {
    if (!strict_) return;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool known = false;
      for (const char *k : keys) known |= it.key() == k;
      if (!known) fail(path, "unknown key \"" + it.key() + "\"");
    }
  }

  [[noreturn]] void fail(const std::string &path,
                         const std::string &message) const {
    throw ParseError((path.empty() ? std::string("<root>") : path) + ": " +
                     message);
  }

  static std::string join(const std::string &path, const char *key) {
    return path.empty() ? std::string(key) : path + "." + key;
  }
  static std::string index(const std::string &path, const char *key,
                           std::size_t i) {
    return join(path, key) + "[" + std::to_string(i) + "]";
  }

  bool strict() const { return strict_; }

 private:
  bool strict_;
};

Answer read_answer(const Reader &r, const json &node, const std::string &path) {
  r.object(node, path);
  r.only_keys(node, {"text", "answer_start"}, path);
  Answer answer;
  answer.text = r.string(node, "text", path);
  const json *start = r.field(node, "answer_start", path, true);
  if (!start->is_number_integer() ||
      (start->is_number_integer() && !start->is_number_unsigned() &&
       start->get<long long>() < 0)) {
    r.fail(Reader::join(path, "answer_start"),
           "expected a non-negative integer");
  }
  answer.answer_start = start->get<std::size_t>();
  return answer;
}

QAMeta read_meta(const Reader &r, const json &node, const std::string &path) {
  r.object(node, path);
  r.only_keys(node, {"origin", "template_id", "wh_type", "score"}, path);
  QAMeta meta;
  std::string origin = r.string(node, "origin", path);
  if (origin == "real") {
    meta.origin = Origin::REAL;
  } else if (origin == "synthetic") {
    meta.origin = Origin::SYNTHETIC;
  } else {
    r.fail(Reader::join(path, "origin"), "expected \"real\" or \"synthetic\"");
  }
  if (r.field(node, "template_id", path, false)) {
    meta.template_id = r.string(node, "template_id", path);
  }
  if (r.field(node, "wh_type", path, false)) {
    std::string name = r.string(node, "wh_type", path);
    meta.wh_type = parse_wh(name);
    if (!meta.wh_type) {
      r.fail(Reader::join(path, "wh_type"), "unknown question type \"" + name + "\"");
    }
  }
  if (const json *score = r.field(node, "score", path, false)) {
    if (!score->is_number()) r.fail(Reader::join(path, "score"), "expected a number");
    meta.score = score->get<double>();
  }
  return meta;
}

QAEntry read_qa(const Reader &r, const json &node, const std::string &path) {
  r.object(node, path);
  r.only_keys(node, {"id", "question", "answers", "meta"}, path);
  QAEntry qa;
  qa.id = r.string(node, "id", path);
  qa.question = r.string(node, "question", path);
  const json &answers = r.array(node, "answers", path);
  for (std::size_t i = 0; i < answers.size(); ++i) {
    qa.answers.push_back(
        read_answer(r, answers[i], Reader::index(path, "answers", i)));
  }
  const json *meta = r.field(node, "meta", path, r.strict());
  if (meta && r.strict()) {
    qa.meta = read_meta(r, *meta, Reader::join(path, "meta"));
  } else {
    qa.meta.origin = Origin::REAL;
  }
  return qa;
}

ordered_json meta_json(const QAMeta &meta) {
  ordered_json out = ordered_json::object();
  out["origin"] = origin_name(meta.origin);
  if (meta.template_id) out["template_id"] = *meta.template_id;
  if (meta.wh_type) out["wh_type"] = wh_name(*meta.wh_type);
  if (meta.score) out["score"] = *meta.score;
  return out;
}

}  // namespace

std::string_view origin_name(Origin origin) {
  return origin == Origin::REAL ? "real" : "synthetic";
}

std::size_t QADataset::pair_count() const {
  std::size_t n = 0;
  for (const Article &a : articles) {
    for (const Paragraph &p : a.paragraphs) n += p.qas.size();
  }
  return n;
}

QADataset read_dataset(std::string_view bytes) {
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("<root>: expected an object");

  QADataset dataset;
  bool strict = true;
  auto version = root.find("version");
  if (version == root.end()) {
    strict = false;
  } else if (!version->is_string()) {
    throw ParseError("version: expected a string");
  } else {
    const std::string v = version->get<std::string>();
    if (v == "1.1") {
      strict = false;
    } else if (v != kDatasetVersion && v != kCompatVersion) {
      throw ParseError("version: unsupported version \"" + v + "\"");
    }
  }
  dataset.version = strict ? version->get<std::string>() : std::string(kCompatVersion);

  Reader r(strict);
  r.only_keys(root, {"version", "data"}, "");
  const json &data = r.array(root, "data", "");
  for (std::size_t a = 0; a < data.size(); ++a) {
    const std::string apath = Reader::index("", "data", a);
    const json &anode = r.object(data[a], apath);
    r.only_keys(anode, {"title", "paragraphs"}, apath);
    Article article;
    article.title = r.string(anode, "title", apath);
    const json &paragraphs = r.array(anode, "paragraphs", apath);
    for (std::size_t p = 0; p < paragraphs.size(); ++p) {
      const std::string ppath = Reader::index(apath, "paragraphs", p);
      const json &pnode = r.object(paragraphs[p], ppath);
      r.only_keys(pnode, {"context", "qas"}, ppath);
      Paragraph paragraph;
      paragraph.context = r.string(pnode, "context", ppath);
      const json &qas = r.array(pnode, "qas", ppath);
      for (std::size_t q = 0; q < qas.size(); ++q) {
        paragraph.qas.push_back(read_qa(r, qas[q], Reader::index(ppath, "qas", q)));
      }
      article.paragraphs.push_back(std::move(paragraph));
    }
    dataset.articles.push_back(std::move(article));
  }

  std::vector<std::string> violations = check_dataset(dataset);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return dataset;
}

std::string write_dataset(const QADataset &dataset) {
  ordered_json root = ordered_json::object();
  root["version"] = dataset.version;
  ordered_json data = ordered_json::array();
  for (const Article &article : dataset.articles) {
    ordered_json anode = ordered_json::object();
    anode["title"] = article.title;
    ordered_json paragraphs = ordered_json::array();
    for (const Paragraph &paragraph : article.paragraphs) {
      ordered_json pnode = ordered_json::object();
      pnode["context"] = paragraph.context;
      ordered_json qas = ordered_json::array();
      for (const QAEntry &qa : paragraph.qas) {
        ordered_json qnode = ordered_json::object();
        qnode["id"] = qa.id;
        qnode["question"] = qa.question;
        ordered_json answers = ordered_json::array();
        for (const Answer &answer : qa.answers) {
          ordered_json node = ordered_json::object();
          node["text"] = answer.text;
          node["answer_start"] = answer.answer_start;
          answers.push_back(std::move(node));
        }
        qnode["answers"] = std::move(answers);
        qnode["meta"] = meta_json(qa.meta);
        qas.push_back(std::move(qnode));
      }
      pnode["qas"] = std::move(qas);
      paragraphs.push_back(std::move(pnode));
    }
    anode["paragraphs"] = std::move(paragraphs);
    data.push_back(std::move(anode));
  }
  root["data"] = std::move(data);
  return root.dump(2) + "\n";
}

std::vector<std::string> check_dataset(const QADataset &dataset) {
  std::vector<std::string> violations;
  std::unordered_set<std::string> ids;
  for (const Article &article : dataset.articles) {
    for (const Paragraph &paragraph : article.paragraphs) {
      const std::u32string context = utf8::decode(paragraph.context);
      for (const QAEntry &qa : paragraph.qas) {
        const std::string who = "qa '" + qa.id + "'";
        if (qa.id.empty()) violations.push_back("qa with empty id");
        if (!ids.insert(qa.id).second) violations.push_back(who + ": duplicate id");
        if (qa.question.empty()) violations.push_back(who + ": empty question");
        if (qa.answers.empty()) violations.push_back(who + ": no answers");
        if (qa.meta.score && !(*qa.meta.score >= 0.0 && *qa.meta.score <= 1.0)) {
          violations.push_back(who + ": score outside [0,1]");
        }
        for (std::size_t i = 0; i < qa.answers.size(); ++i) {
          const Answer &answer = qa.answers[i];
          const std::size_t length = utf8::length(answer.text);
          const std::string where = who + " answer " + std::to_string(i);
          if (length == 0) {
            violations.push_back(where + ": empty answer text");
            continue;
          }
          if (answer.answer_start + length > context.size()) {
            violations.push_back(where + ": expected '" + answer.text + "' at " +
                                 std::to_string(answer.answer_start) +
                                 ", span runs past the context (" +
                                 std::to_string(context.size()) + " chars)");
            continue;
          }
          std::string found = span_text(
              context, Span{answer.answer_start, answer.answer_start + length});
          if (found != answer.text) {
            violations.push_back(where + ": expected '" + answer.text + "' at " +
                                 std::to_string(answer.answer_start) +
                                 ", found '" + found + "'");
          }
        }
      }
    }
  }
  return violations;
}

std::vector<FlatPair> flatten(const QADataset &dataset) {
  std::vector<FlatPair> pairs;
  for (const Article &article : dataset.articles) {
    for (const Paragraph &paragraph : article.paragraphs) {
      for (const QAEntry &qa : paragraph.qas) {
        pairs.push_back(FlatPair{article.title, paragraph.context, qa});
      }
    }
  }
  return pairs;
}

QADataset assemble(std::vector<FlatPair> pairs, std::string version) {
  QADataset dataset;
  dataset.version = std::move(version);
  for (FlatPair &pair : pairs) {
    if (dataset.articles.empty() || dataset.articles.back().title != pair.title) {
      dataset.articles.push_back(Article{pair.title, {}});
    }
    Article &article = dataset.articles.back();
    if (article.paragraphs.empty() ||
        article.paragraphs.back().context != pair.context) {
      article.paragraphs.push_back(Paragraph{pair.context, {}});
    }
    article.paragraphs.back().qas.push_back(std::move(pair.qa));
  }
  return dataset;
}

}  // namespace synqa
