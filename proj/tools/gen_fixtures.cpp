// Regenerates the shipped fixtures into a directory (default: the data dir).
#include <filesystem>
#include <fstream>
#include <iostream>

#include "monotile/errors.hpp"
#include "monotile/fixtures.hpp"
#include "monotile/tilefamily.hpp"

using namespace monotile;

namespace {

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : data_dir();
  try {
    std::filesystem::create_directories(dir);
    write(dir / "sign_table.txt", format_sign_table(derive_sign_table().front()));
    for (NamedTile t : {NamedTile::kHat, NamedTile::kTurtle, NamedTile::kT01, NamedTile::kT10}) {
      write(dir / (std::string(tile_name(t)) + ".spec"), generate_assembly_fixture(t));
    }
    for (NamedTile t : {NamedTile::kT10, NamedTile::kT01, NamedTile::kT11}) {
      write(dir / (std::string(tile_name(t)) + ".periodic"), generate_periodic_fixture(t));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
