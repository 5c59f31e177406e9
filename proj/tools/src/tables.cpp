#include "discarr_tools/tables.hpp"

namespace discarr::tools {

const std::array<int, 11>& published_m_values() {
  static const std::array<int, 11> m{0, 1, 3, 2, 6, 4, 3, 10, 7, 6, 15};
  return m;
}

const std::array<std::string, 11>& published_fields() {
  static const std::array<std::string, 11> f{"QQ", "QQ", "QQ", "QQ",           "QQ",          "QQ",
                                             "*",  "QQ(sqrt(5))", "*", "QQ(sqrt(-3))", "*"};
  return f;
}

const std::vector<DodecahedralDependency>& published_dodecahedral_dependencies() {
  using M = IndexMatching;
  static const std::vector<DodecahedralDependency> deps{
      {M({{{1, 2}, {3, 5}, {4, 6}}}), {{1, {1, 2, 3, 5}}, {-1, {1, 2, 4, 6}}, {-1, {3, 4, 5, 6}}}},
      {M({{{1, 2}, {3, 6}, {4, 5}}}), {{1, {1, 2, 3, 6}}, {-1, {1, 2, 4, 5}}, {-1, {3, 4, 5, 6}}}},
      {M({{{1, 3}, {2, 6}, {4, 5}}}), {{1, {1, 2, 3, 6}}, {1, {1, 3, 4, 5}}, {1, {2, 4, 5, 6}}}},
      {M({{{1, 3}, {2, 4}, {5, 6}}}), {{1, {1, 3, 5, 6}}, {-1, {1, 2, 3, 4}}, {-1, {2, 4, 5, 6}}}},
      {M({{{1, 4}, {2, 3}, {5, 6}}}), {{1, {1, 4, 5, 6}}, {-1, {1, 2, 3, 4}}, {-1, {2, 3, 5, 6}}}},
      {M({{{1, 4}, {2, 5}, {3, 6}}}), {{1, {1, 3, 4, 6}}, {-1, {1, 2, 4, 5}}, {-1, {2, 3, 5, 6}}}},
      {M({{{1, 5}, {2, 3}, {4, 6}}}), {{1, {1, 4, 5, 6}}, {-1, {1, 2, 3, 5}}, {-1, {2, 3, 4, 6}}}},
      {M({{{1, 5}, {2, 6}, {3, 4}}}), {{1, {2, 3, 4, 6}}, {-1, {1, 2, 5, 6}}, {-1, {1, 3, 4, 5}}}},
      {M({{{1, 6}, {2, 4}, {3, 5}}}), {{1, {1, 2, 4, 6}}, {-1, {1, 3, 5, 6}}, {-1, {2, 3, 4, 5}}}},
      {M({{{1, 6}, {2, 5}, {3, 4}}}), {{1, {1, 3, 4, 6}}, {-1, {1, 2, 5, 6}}, {-1, {2, 3, 4, 5}}}},
  };
  return deps;
}

}  // namespace discarr::tools
