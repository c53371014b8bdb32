#include "qh/rep.hpp"

namespace qh {

RepData parse_rep(const Quiver &q, const Json &j) {
  RepData r;
  try {
    r.field = parse_field(j.at("field").get<std::string>());
    r.dims = j.at("dims").get<DimVector>();
    for (const auto &m : j.at("maps")) {
      std::vector<std::vector<Rational>> rows;
      std::size_t cols = 0;
      for (const auto &row : m) {
        std::vector<Rational> vals;
        for (const auto &v : row)
          vals.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                       : Rational(static_cast<long>(v.get<long long>())));
        cols = vals.size();
        rows.push_back(vals);
      }
      Matrix<Rational> x(rows.size(), cols, Rational(0));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
          throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c)
          x(i, c) = rows[i][c];
      }
      r.maps.push_back(x);
    }
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("bad representation file: ") + e.what());
  }
  if (r.dims.size() != q.size() || r.maps.size() != q.edge_count())
    throw std::invalid_argument("representation does not match the quiver");
  for (std::size_t h = 0; h < q.edge_count(); ++h) {
    auto rows = static_cast<std::size_t>(r.dims[q.in(h)]), cols = static_cast<std::size_t>(r.dims[q.out(h)]);
    auto &x = r.maps[h];
    if (x.a.empty() && (rows == 0 || cols == 0))
      x = Matrix<Rational>(rows, cols, Rational(0));
    if (x.rows != rows || x.cols != cols)
      throw std::invalid_argument("edge " + std::to_string(h) + " map has the wrong shape");
  }
  return r;
}

// Maps are lists of rows; empty shapes are recovered from the quiver on parsing.
Json rep_to_json(const RepData &r) {
  Json j;
  j["field"] = r.field.name();
  j["dims"] = r.dims;
  Json maps = Json::array();
  for (const auto &m : r.maps) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols; ++c) {
        const Rational &v = m(i, c);
        if (v.get_den() == 1 && v.get_num().fits_slong_p())
          row.push_back(v.get_num().get_si());
        else
          row.push_back(v.get_str());
      }
      rows.push_back(row);
    }
    maps.push_back(rows);
  }
  j["maps"] = maps;
  return j;
}

} // namespace qh
