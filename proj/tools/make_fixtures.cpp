// Regenerates the fixture corpus with the canonical JSON writer.  Run from
// the repository root:  bihom_fixtures [fixtures]

#include <filesystem>
#include <fstream>
#include <iostream>

#include "bihom/constructions.hpp"
#include "bihom/families.hpp"
#include "bihom/json_io.hpp"

using namespace bihom;

namespace {

Matrix diag(std::vector<long> d) {
  Matrix m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = Scalar(d[i]);
  return m;
}

// 1-dim abelian base with a 2-dim module: l(e) = r(e) = (v1 -> v2),
// alphaV = id, betaV = -id.  The smallest symmetric-B1 extension seed whose
// cocycle condition is nontrivial.
Representation central_rep() {
  Representation V = Representation::zero(abelian(1), 2);
  V.l[(0 * 2 + 0) * 2 + 1] = Scalar(1);
  V.r[(0 * 2 + 0) * 2 + 1] = Scalar(1);
  V.betaV = diag({-1, -1});
  return V;
}

void write(const std::filesystem::path& dir, const std::string& name,
           const std::string& text) {
  std::ofstream out(dir / name, std::ios::binary);
  out << text;
  std::cout << "wrote " << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);
  std::filesystem::create_directories(dir / "maps");
  std::filesystem::create_directories(dir / "cochains");

  write(dir, "abelian2.json", algebra_to_json(abelian(2)));
  write(dir, "table_case1.json", algebra_to_json(table_case1(Scalar(1), Scalar(2))));
  write(dir, "table_case1_sym.json", algebra_to_json(table_case1(Scalar(1), Scalar(0))));
  write(dir, "table_case2.json", algebra_to_json(table_case2(Scalar(1), Scalar(2))));
  write(dir, "table_case3.json", algebra_to_json(table_case3(Scalar(1), Scalar(1))));
  write(dir, "table_case4.json", algebra_to_json(table_case4(Scalar(1), Scalar(1))));
  write(dir, "super3d.json",
        algebra_to_json(super3d(Scalar(1), Scalar(1), Scalar(1), Scalar(2))));
  write(dir, "tensor_gg.json", algebra_to_json(tensor_gg()));
  write(dir, "tensor_gg_twisted.json", algebra_to_json(tensor_gg(diag({1, 1, -1}))));
  write(dir, "lie2d.json", algebra_to_json(lie2d()));

  // Yau twist of the symmetric member [e1,e1] = e2 by the commuting bracket
  // automorphisms diag(-1,1) and diag(2,4)
  Algebra sym = table_case1_untwisted(Scalar(1), Scalar(0));
  write(dir, "yau2d.json",
        algebra_to_json(bihom_yau_twist(sym, diag({-1, 1}), diag({2, 4}))));

  Representation V = central_rep();
  write(dir, "central_rep.json", representation_to_json(V));
  Cochain f = Cochain::zero(2, 1, 2);
  f.values[f.flat_index({0, 0}, 1)] = Scalar(1);
  write(dir, "ext3d.json", algebra_to_json(extension_direct_sum(V.algebra, V, f)));

  write(dir / "maps", "diag_m1_1.json", "[\"-1\", \"0\", \"0\", \"1\"]\n");
  write(dir / "maps", "diag_2_4.json", "[\"2\", \"0\", \"0\", \"4\"]\n");
  write(dir / "cochains", "ext3d_f.json", "{\"entries\": [[0, 0, 1, \"1\"]]}\n");
  return 0;
}
