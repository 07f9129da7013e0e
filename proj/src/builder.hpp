#pragma once

#include <string>
#include <utility>

#include "resprime/certificate.hpp"
#include "resprime/poly.hpp"

namespace resprime::detail {

// Collects inputs, values and comparisons, then seals them into a certificate.
class Builder {
 public:
  Builder(std::string criterion, std::string subject) {
    c_.criterion = std::move(criterion);
    c_.subject = std::move(subject);
  }

  void input(std::string key, std::string v) { c_.inputs.emplace_back(std::move(key), std::move(v)); }
  void input(std::string key, const IntPoly& p) { input(std::move(key), to_bracket(p)); }
  void input(std::string key, const BigInt& v) { input(std::move(key), to_string(v)); }
  void input(std::string key, const BigRat& v) { input(std::move(key), to_string(v)); }
  void input(std::string key, unsigned v) { input(std::move(key), std::to_string(v)); }

  void value(std::string key, std::string v) { c_.values.emplace_back(std::move(key), std::move(v)); }
  void value(std::string key, const BigInt& v) { value(std::move(key), to_string(v)); }
  void value(std::string key, const BigRat& v) { value(std::move(key), to_string(v)); }

  bool check(std::string label, BigRat lhs, Rel rel, BigRat rhs) {
    c_.witnesses.push_back({std::move(label), std::move(lhs), rel, std::move(rhs)});
    return c_.witnesses.back().holds();
  }

  void enclosure(const std::string& key, const RootEnclosures& e) {
    for (const auto& [k, _] : c_.enclosures)
      if (k == key) return;
    c_.enclosures.emplace_back(key, e);
  }

  Certificate fail(std::string reason) {
    c_.verdict = Verdict::inconclusive(std::move(reason));
    return c_;
  }
  Certificate done(Verdict v) {
    c_.verdict = std::move(v);
    return c_;
  }

  Certificate& raw() { return c_; }

 private:
  Certificate c_;
};

}  // namespace resprime::detail
