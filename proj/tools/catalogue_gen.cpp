// Regenerates the bundled catalogue: one translation-quiver file plus one
// metadata sidecar per shipped singularity type.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "arsobstruct/catalogue.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: catalogue_gen <output-directory>\n";
    return 1;
  }
  namespace fs = std::filesystem;
  fs::path dir(argv[1]);
  fs::create_directories(dir);
  int written = 0;
  for (const arsob::ADEType& type : arsob::shipped_types()) {
    arsob::CatalogueEntry entry = arsob::build_entry(type);
    {
      std::ofstream out(dir / (type.name() + ".tq"));
      out << "# Stable AR-quiver of the " << type.name()
          << " singularity category (curve case).\n";
      out << arsob::serialize_translation_quiver(entry.ar_quiver);
    }
    {
      std::ofstream out(dir / (type.name() + ".json"));
      out << arsob::serialize_entry_metadata(entry);
    }
    ++written;
  }
  std::cout << "wrote " << written << " catalogue entries to " << dir.string() << "\n";
  return 0;
}
