#include "shilov/serialize.hpp"

namespace shilov {

Json matrix_to_json(const CMat& m) {
  Json re = Json::array(), im = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json rrow = Json::array(), irow = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)},
              {"im", std::move(im)}};
}

CMat matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
    throw InputError("matrix JSON must carry rows/cols/re/im");
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimensions");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != rows || static_cast<int>(im.size()) != rows)
    throw InputError("re/im row count does not match rows");
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& rrow = re.at(i);
    const auto& irow = im.at(i);
    if (static_cast<int>(rrow.size()) != cols ||
        static_cast<int>(irow.size()) != cols)
      throw InputError("re/im column count does not match cols");
    for (int k = 0; k < cols; ++k)
      m(i, k) = cxd(rrow.at(k).get<double>(), irow.at(k).get<double>());
  }
  return m;
}

Json element_to_json(const Element& e) {
  if (e.num_blocks() == 1) return matrix_to_json(e.block(0));
  Json arr = Json::array();
  for (int i = 0; i < e.num_blocks(); ++i)
    arr.push_back(matrix_to_json(e.block(i)));
  return arr;
}

Element element_from_json(const TripleSystem& sys, const Json& j) {
  std::vector<CMat> blocks;
  if (j.is_array()) {
    for (const auto& item : j) blocks.push_back(matrix_from_json(item));
  } else {
    blocks.push_back(matrix_from_json(j));
  }
  if (static_cast<int>(blocks.size()) != sys.num_factors())
    throw InputError("element JSON has " + std::to_string(blocks.size()) +
                     " blocks, system " + sys.to_string() + " expects " +
                     std::to_string(sys.num_factors()));
  try {
    return Element(sys, std::move(blocks));
  } catch (const DimensionError& err) {
    throw InputError(err.what());
  }
}

Json operator_to_json(const CMat& op) { return matrix_to_json(op); }

}  // namespace shilov
