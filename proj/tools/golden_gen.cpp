// Writes one JSON file per golden record into the given directory.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "ppdp/oracle_support.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: golden_gen <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& record : ppdp::oracle::compute_golden_records()) {
    std::ofstream out(dir / (record.id + ".json"));
    out << ppdp::oracle::to_json(record).dump(2) << '\n';
    std::cout << record.id << ' ' << record.expected_digest << '\n';
  }
  return 0;
}
