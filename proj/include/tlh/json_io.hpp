#pragma once

// Lossless JSON reading on top of nlohmann's SAX interface. Numbers keep
// their literal text, so integer coefficients of any size survive.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tlh/errors.hpp"
#include "tlh/ring.hpp"

namespace tlh {

struct RawJson {
  enum class Kind { Null, Boolean, Number, String, Array, Object };

  Kind kind = Kind::Null;
  std::string text;                   // literal for numbers, value for strings
  std::vector<std::string> keys;      // object keys, parallel to items
  std::vector<RawJson> items;         // array elements or object values

  const RawJson* find(std::string_view key) const {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == key) return &items[i];
    }
    return nullptr;
  }
};

namespace detail {

class RawJsonBuilder : public nlohmann::json_sax<nlohmann::json> {
 public:
  RawJson root;

  bool null() override { return put({RawJson::Kind::Null, {}, {}, {}}); }
  bool boolean(bool v) override {
    return put({RawJson::Kind::Boolean, v ? "true" : "false", {}, {}});
  }
  bool number_integer(number_integer_t v) override {
    return put({RawJson::Kind::Number, std::to_string(v), {}, {}});
  }
  bool number_unsigned(number_unsigned_t v) override {
    return put({RawJson::Kind::Number, std::to_string(v), {}, {}});
  }
  bool number_float(number_float_t, const string_t& s) override {
    return put({RawJson::Kind::Number, s, {}, {}});
  }
  bool string(string_t& v) override { return put({RawJson::Kind::String, v, {}, {}}); }
  bool binary(binary_t&) override { return false; }
  bool start_object(std::size_t) override { return open(RawJson::Kind::Object); }
  bool key(string_t& k) override {
    pending_key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(RawJson::Kind::Array); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t position, const std::string& token,
                   const nlohmann::detail::exception& ex) override {
    throw ParseError("JSON error at byte " + std::to_string(position) + " near '" + token +
                     "': " + ex.what());
  }

 private:
  bool put(RawJson value) {
    if (stack_.empty()) {
      root = std::move(value);
      return true;
    }
    RawJson& parent = *stack_.back();
    if (parent.kind == RawJson::Kind::Object) parent.keys.push_back(pending_key_);
    parent.items.push_back(std::move(value));
    return true;
  }

  bool open(RawJson::Kind kind) {
    put({kind, {}, {}, {}});
    RawJson* node = stack_.empty() ? &root : &stack_.back()->items.back();
    stack_.push_back(node);
    return true;
  }

  bool close() {
    stack_.pop_back();
    return true;
  }

  std::vector<RawJson*> stack_;
  std::string pending_key_;
};

}  // namespace detail

inline RawJson parse_raw_json(std::string_view text) {
  detail::RawJsonBuilder builder;
  if (!nlohmann::json::sax_parse(text, &builder)) throw ParseError("malformed JSON");
  return std::move(builder.root);
}

inline Integer integer_from_json(const RawJson& node) {
  if (node.kind != RawJson::Kind::Number) throw ParseError("expected an integer");
  const std::string& s = node.text;
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size() ||
      s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw ParseError("expected an integer literal, got '" + s + "'");
  }
  return Integer(s);
}

inline int int_from_json(const RawJson& node) {
  const Integer v = integer_from_json(node);
  if (v > INT32_MAX || v < INT32_MIN) throw ParseError("exponent out of range");
  return v.convert_to<int>();
}

/// Reads the {"num": [[qexp,aexp,texp,coeff],...], "den": [[i,mult],...]}
/// encoding back into a series.
inline GradedSeries series_from_json(const RawJson& node) {
  if (node.kind != RawJson::Kind::Object) throw ParseError("series must be a JSON object");
  const RawJson* num = node.find("num");
  const RawJson* den = node.find("den");
  if (num == nullptr || den == nullptr || num->kind != RawJson::Kind::Array ||
      den->kind != RawJson::Kind::Array || node.keys.size() != 2) {
    throw ParseError("series object needs exactly the arrays \"num\" and \"den\"");
  }
  std::vector<LaurentPoly::Term> terms;
  for (const RawJson& t : num->items) {
    if (t.kind != RawJson::Kind::Array || t.items.size() != 4) {
      throw ParseError("numerator terms are [qexp, aexp, texp, coeff]");
    }
    terms.emplace_back(Monomial{int_from_json(t.items[0]), int_from_json(t.items[1]),
                                int_from_json(t.items[2])},
                       integer_from_json(t.items[3]));
  }
  DenomVector d;
  for (const RawJson& f : den->items) {
    if (f.kind != RawJson::Kind::Array || f.items.size() != 2) {
      throw ParseError("denominator entries are [i, multiplicity]");
    }
    const int i = int_from_json(f.items[0]);
    const int mult = int_from_json(f.items[1]);
    if (i < 1 || mult < 1) throw ParseError("denominator index and multiplicity must be positive");
    d.add(i, mult);
  }
  return GradedSeries(LaurentPoly::from_terms(std::move(terms)), std::move(d));
}

inline GradedSeries parse_series_json(std::string_view text) {
  return series_from_json(parse_raw_json(text));
}

}  // namespace tlh
