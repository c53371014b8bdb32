#include "qh/report.hpp"

#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace qh {

std::string tool_version() { return QH_VERSION; }

std::string quiver_hash(const Quiver &q) {
  std::string text = quiver_to_json(q);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), text.data(), text.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

Json make_report(const std::string &command, const Quiver *q, bool ok, Json result) {
  Json j;
  j["tool"] = "qh";
  j["version"] = tool_version();
  j["command"] = command;
  j["quiver_sha256"] = q ? Json(quiver_hash(*q)) : Json(nullptr);
  j["ok"] = ok;
  j["result"] = std::move(result);
  return j;
}

namespace {

std::string cell(const Json &v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s)
    q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

} // namespace

std::string to_csv(const Json &rows) {
  if (!rows.is_array())
    throw std::invalid_argument("CSV export needs a table (array of rows)");
  std::vector<std::string> cols;
  for (const auto &r : rows) {
    if (!r.is_object())
      throw std::invalid_argument("CSV export needs object rows");
    for (const auto &[k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end())
        cols.push_back(k);
  }
  std::ostringstream out;
  for (std::size_t c = 0; c < cols.size(); ++c)
    out << (c ? "," : "") << cols[c];
  out << "\n";
  for (const auto &r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c)
      out << (c ? "," : "") << (r.contains(cols[c]) ? cell(r[cols[c]]) : "");
    out << "\n";
  }
  return out.str();
}

} // namespace qh
