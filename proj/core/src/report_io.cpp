#include "ccx/report_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ccx {

namespace {

std::string table_lines(const Table& t, const std::string& key, const std::string& indent) {
  std::ostringstream os;
  os << indent << key << ":  # rows q = 0.." << t.n() << ", columns p = 0.." << t.n() << "\n";
  for (int q = 0; q <= t.n(); ++q) {
    os << indent << "  ";
    for (int p = 0; p <= t.n(); ++p) os << (p ? " " : "") << t.at(p, q);
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string diamond(const Table& t, const std::string& title) {
  int n = t.n();
  // widths
  size_t w = 1;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) w = std::max(w, std::to_string(t.at(p, q)).size());
  std::ostringstream os;
  os << title << "\n";
  for (int k = 2 * n; k >= 0; --k) {
    std::string row;
    int lo = std::max(0, k - n), hi = std::min(k, n);
    // leading centering pad: each missing slot is half a cell
    int missing = n - (hi - lo);
    os << std::string(size_t(missing) * (w + 1) / 2 + (size_t(missing) * (w + 1)) % 2, ' ');
    for (int p = hi; p >= lo; --p) {
      std::string cell = std::to_string(t.at(p, k - p));
      os << std::string(w - cell.size(), ' ') << cell;
      if (p > lo) os << std::string(w + 2 - w, ' ') << " ";
    }
    os << "\n";
  }
  return os.str();
}

std::string refined_diamonds(const InvariantReport& rep) {
  std::ostringstream os;
  for (int k = 0; k <= 2 * rep.n; ++k) {
    bool any = false;
    for (auto& [key, val] : rep.refined)
      if (std::get<0>(key) == k) any = true;
    if (!any) continue;
    int kmaxc = std::min(k, rep.n);
    os << "refined Betti diamond k=" << k << "\n";
    for (int l = 2 * kmaxc; l >= 0; --l) {
      int lo = std::max(0, l - kmaxc), hi = std::min(l, kmaxc);
      int missing = kmaxc - (hi - lo);
      os << std::string(size_t(missing), ' ');
      for (int p = hi; p >= lo; --p) {
        os << rep.refined_betti(k, p, l - p);
        if (p > lo) os << " ";
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string report_to_text(const InvariantReport& rep, const std::optional<ZigzagSum>& zigzags) {
  std::ostringstream os;
  os << "ccx-report/1\n";
  os << "name: " << rep.name << "\n";
  os << "n: " << rep.n << "\n";
  os << "betti:";
  for (int k = 0; k <= 2 * rep.n; ++k) os << " " << rep.betti_at(k);
  os << "\n";
  os << table_lines(rep.hodge, "hodge", "");
  os << table_lines(rep.hodge_row, "hodge_row", "");
  os << table_lines(rep.bc, "bott_chern", "");
  os << table_lines(rep.aeppli, "aeppli", "");
  os << "r_max: " << rep.r_max << "\n";
  for (size_t r = 1; r <= rep.col_pages.size(); ++r) {
    os << "frolicher_col page " << r << ":\n";
    os << table_lines(rep.col_pages[r - 1].e, "e", "  ");
    os << table_lines(rep.col_pages[r - 1].rank_d, "rank_d", "  ");
  }
  for (size_t r = 1; r <= rep.row_pages.size(); ++r) {
    os << "frolicher_row page " << r << ":\n";
    os << table_lines(rep.row_pages[r - 1].e, "e", "  ");
    os << table_lines(rep.row_pages[r - 1].rank_d, "rank_d", "  ");
  }
  os << "refined_betti:  # k p q value\n";
  for (auto& [key, val] : rep.refined) {
    auto [k, p, q] = key;
    os << "  " << k << " " << p << " " << q << " " << val << "\n";
  }
  if (zigzags) {
    os << "zigzags:\n";
    std::istringstream zin(zigzags->str());
    std::string line;
    while (std::getline(zin, line)) os << "  " << line << "\n";
  }
  os << "\n" << diamond(rep.hodge, "hodge diamond (bottom = h^{0,0})");
  os << "\n" << refined_diamonds(rep);
  return os.str();
}

std::string report_to_json(const InvariantReport& rep, const std::optional<ZigzagSum>& zigzags) {
  nlohmann::json j;
  j["format"] = "ccx-report/1";
  j["name"] = rep.name;
  j["n"] = rep.n;
  j["betti"] = rep.betti;
  auto tab = [&](const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int q = 0; q <= t.n(); ++q) {
      nlohmann::json row = nlohmann::json::array();
      for (int p = 0; p <= t.n(); ++p) row.push_back(t.at(p, q));
      rows.push_back(row);
    }
    return rows;
  };
  j["hodge"] = tab(rep.hodge);
  j["hodge_row"] = tab(rep.hodge_row);
  j["bott_chern"] = tab(rep.bc);
  j["aeppli"] = tab(rep.aeppli);
  j["r_max"] = rep.r_max;
  j["frolicher_col"] = nlohmann::json::array();
  for (size_t r = 0; r < rep.col_pages.size(); ++r)
    j["frolicher_col"].push_back(
        {{"page", r + 1}, {"e", tab(rep.col_pages[r].e)}, {"rank_d", tab(rep.col_pages[r].rank_d)}});
  j["frolicher_row"] = nlohmann::json::array();
  for (size_t r = 0; r < rep.row_pages.size(); ++r)
    j["frolicher_row"].push_back(
        {{"page", r + 1}, {"e", tab(rep.row_pages[r].e)}, {"rank_d", tab(rep.row_pages[r].rank_d)}});
  j["refined_betti"] = nlohmann::json::array();
  for (auto& [key, val] : rep.refined) {
    auto [k, p, q] = key;
    j["refined_betti"].push_back({{"k", k}, {"p", p}, {"q", q}, {"value", val}});
  }
  if (zigzags) {
    nlohmann::json zz = nlohmann::json::array();
    for (auto& [z, m] : zigzags->mults) zz.push_back({{"class", z.str()}, {"mult", m}});
    j["zigzags"] = zz;
    j["zigzags_grade"] = zigzags->n;
  }
  return j.dump(2) + "\n";
}

}  // namespace ccx
