#include <sstream>
#include <string>

#include "eulersym/sweep.hpp"
#include "json.hpp"

namespace eulersym {

namespace {

template <typename T, typename F>
std::string joined(const std::vector<T>& items, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += '|';
    out += fmt(items[i]);
  }
  return out;
}

std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace

std::string emit_report(std::span<const VerificationReport> records, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json obj;
      obj["family"] = std::string(to_string(r.family));
      obj["n"] = r.n;
      obj["w"] = r.w;
      auto strs = [](const std::vector<Rational>& v) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& x : v) a.push_back(x.str());
        return a;
      };
      obj["y"] = strs(r.y);
      obj["values"] = strs(r.variant_values);
      obj["equal"] = r.all_equal;
      if (r.series_value) obj["series"] = r.series_value->str();
      arr.push_back(std::move(obj));
    }
    return arr.dump();
  }

  std::ostringstream out;
  out << "family,n,w,y,values,equal\n";
  for (const auto& r : records) {
    out << to_string(r.family) << ',' << r.n << ','
        << joined(r.w, [](unsigned v) { return std::to_string(v); }) << ','
        << joined(r.y, rational_str) << ',' << joined(r.variant_values, rational_str) << ','
        << (r.all_equal ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace eulersym
