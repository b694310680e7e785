#include "tatami/oracle.hpp"

#include <string>

namespace tatami::oracle {

namespace {

class Search {
 public:
  Search(int n, const TilingSink& sink, const Options& opts) : n_(n), grid_(n), sink_(sink), opts_(opts) {}

  void run() { extend(0, 0); }

 private:
  void extend(int cursor, int monomers) {
    while (cursor < n_ * n_ && grid_.covered(cell(cursor))) ++cursor;
    if (cursor == n_ * n_) {
      sink_(grid_.to_tiling());
      return;
    }
    const Cell c = cell(cursor);
    const Tile options[] = {{TileKind::Monomer, c}, {TileKind::HDimer, c}, {TileKind::VDimer, c}};
    for (const Tile& t : options) {
      const int m = monomers + (t.is_monomer() ? 1 : 0);
      if (opts_.max_monomers && m > *opts_.max_monomers) continue;
      if (!grid_.can_place(t)) continue;
      grid_.place(t);
      if (grid_.tatami_ok_around(t.anchor) && grid_.tatami_ok_around(t.other())) extend(cursor + 1, m);
      grid_.remove(t);
    }
  }

  Cell cell(int i) const { return {i % n_, i / n_}; }

  int n_;
  TileGrid grid_;
  const TilingSink& sink_;
  const Options& opts_;
};

}  // namespace

void enumerate_all(int n, const TilingSink& sink, const Options& opts) {
  if (n < 1 || n > kMaxN) throw DomainError("oracle supports 1 <= n <= " + std::to_string(kMaxN));
  Search(n, sink, opts).run();
}

std::map<int, std::uint64_t> count_by_monomers(int n) {
  std::map<int, std::uint64_t> counts;
  enumerate_all(n, [&](const Tiling& t) { ++counts[static_cast<int>(monomer_count(t))]; });
  return counts;
}

}  // namespace tatami::oracle
