#include "segeuler/count_triangle.hpp"

#include <sstream>

#include "segeuler/bipoly.hpp"
#include "segeuler/errors.hpp"
#include "segeuler/eulerbase.hpp"

namespace segeuler {

const char* kind_tag(CountTriangle::Kind kind) noexcept {
  switch (kind) {
    case CountTriangle::Kind::kEulerianA: return "A";
    case CountTriangle::Kind::kSegT: return "T";
    case CountTriangle::Kind::kSegK: return "K";
  }
  return "?";
}

CountTriangle::CountTriangle(Kind kind, int n, std::vector<Entry> entries)
    : kind_(kind), n_(n), entries_(std::move(entries)) {
  if (n < 1) throw RangeError("count triangle needs n >= 1");
  for (const Entry& e : entries_) {
    if (sgn(e.count) < 0) throw RangeError("negative count in triangle");
    if ((kind_ == Kind::kSegK) != e.j.has_value()) throw UsageError("column index only valid for K");
  }
}

CountTriangle CountTriangle::eulerian(int n) {
  std::vector<Entry> entries;
  const auto row = eulerian_row(n);
  for (int k = 0; k < n; ++k) entries.push_back({k, std::nullopt, row[static_cast<std::size_t>(k)]});
  return {Kind::kEulerianA, n, std::move(entries)};
}

CountTriangle CountTriangle::seg_t(int n) { return seg_t_from(n, closed_alpha(n)); }

CountTriangle CountTriangle::seg_k(int n) { return seg_k_from(n, closed_alpha(n)); }

CountTriangle CountTriangle::seg_k_from(int n, const BiPoly& alpha) {
  std::vector<Entry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) entries.push_back({i, j, alpha.coeff(i, j).get_num()});
  return {Kind::kSegK, n, std::move(entries)};
}

CountTriangle CountTriangle::seg_t_from(int n, const BiPoly& alpha) {
  const UniPoly p = alpha.specialize(BiVar::kQ, 1);
  std::vector<Entry> entries;
  for (int k = 0; k < n; ++k) entries.push_back({k, std::nullopt, p.coeff(k).get_num()});
  return {Kind::kSegT, n, std::move(entries)};
}

Int CountTriangle::total() const {
  Int sum = 0;
  for (const Entry& e : entries_) sum += e.count;
  return sum;
}

nlohmann::json CountTriangle::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const Entry& e : entries_) {
    nlohmann::json row;
    row["i"] = e.i;
    if (e.j) row["j"] = *e.j;
    row["count"] = e.count.get_str();
    entries.push_back(std::move(row));
  }
  return {{"kind", kind_tag(kind_)}, {"n", n_}, {"entries", std::move(entries)}};
}

CountTriangle CountTriangle::from_json(const nlohmann::json& j) {
  try {
    const std::string tag = j.at("kind").get<std::string>();
    Kind kind;
    if (tag == "A")
      kind = Kind::kEulerianA;
    else if (tag == "T")
      kind = Kind::kSegT;
    else if (tag == "K")
      kind = Kind::kSegK;
    else
      throw ParseError("unknown triangle kind '" + tag + "'");
    std::vector<Entry> entries;
    for (const auto& row : j.at("entries")) {
      Entry e{row.at("i").get<int>(), std::nullopt, Int(row.at("count").get<std::string>(), 10)};
      if (row.contains("j")) e.j = row.at("j").get<int>();
      entries.push_back(std::move(e));
    }
    return {kind, j.at("n").get<int>(), std::move(entries)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed count triangle: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed count: ") + e.what());
  }
}

std::string CountTriangle::to_csv() const {
  std::ostringstream out;
  out << (kind_ == Kind::kSegK ? "i,j,count\n" : "k,count\n");
  for (const Entry& e : entries_) {
    out << e.i << ',';
    if (e.j) out << *e.j << ',';
    out << e.count.get_str() << '\n';
  }
  return out.str();
}

std::string CountTriangle::to_markdown() const {
  std::ostringstream out;
  out << "### " << kind_tag(kind_) << "(n=" << n_ << ")\n\n";
  if (kind_ == Kind::kSegK) {
    // Rows i (descents), columns j (bars).
    out << "| i \\ j |";
    for (int j = 0; j < n_; ++j) out << ' ' << j << " |";
    out << "\n|---|";
    for (int j = 0; j < n_; ++j) out << "---|";
    out << '\n';
    for (int i = 0; i < n_; ++i) {
      out << "| " << i << " |";
      for (int j = 0; j < n_; ++j) {
        std::string cell;
        for (const Entry& e : entries_)
          if (e.i == i && e.j == j) cell = e.count.get_str();
        out << ' ' << cell << " |";
      }
      out << '\n';
    }
  } else {
    out << "| k | count |\n|---|---|\n";
    for (const Entry& e : entries_) out << "| " << e.i << " | " << e.count.get_str() << " |\n";
  }
  return out.str();
}

}  // namespace segeuler
