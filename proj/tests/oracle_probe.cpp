// Side-by-side reference counts: brute-force oracle vs insertion engine.
// Maintenance utility, not registered as a test.
#include <cstdio>

#include "kplane/search.hpp"
#include "oracle.hpp"

using namespace kplane;

int main() {
  struct Item {
    const char* name;
    LabeledGraph g;
  };
  std::vector<Item> items;
  items.push_back({"K2", gen_path(1)});
  items.push_back({"P3", gen_path(2)});
  items.push_back({"P4", gen_path(3)});
  items.push_back({"star3", read_edge_list("n 4\n0 1\n0 2\n0 3\n")});
  items.push_back({"C3", gen_cycle(3)});
  items.push_back({"C4", gen_cycle(4)});
  items.push_back({"C5", gen_cycle(5)});
  items.push_back({"K4", gen_complete(4)});
  items.push_back({"K4-e", gen_k9_minus({{0, 1}}).induced({0, 1, 2, 3})});
  items.push_back({"C6", gen_cycle(6)});
  items.push_back({"K23", read_edge_list("n 5\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n")});
  items.push_back({"bowtie", read_edge_list("n 5\n0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n")});
  items.push_back({"paw", read_edge_list("n 4\n0 1\n0 2\n1 2\n0 3\n")});

  std::printf("%-8s %12s %12s %14s %14s\n", "graph", "oracle-lab", "engine-lab",
              "oracle-canon", "engine-canon");
  for (auto& it : items) {
    auto olab = oracle::labeled_drawings(it.g);
    auto ocan = oracle::canonical_drawings(it.g);
    EnumOptions lab;
    lab.dedup = Dedup::Labeled;
    lab.keep_drawings = false;
    EnumOptions can;
    can.dedup = Dedup::Canonical;
    can.keep_drawings = false;
    auto elab = enumerate_drawings(it.g, lab);
    auto ecan = enumerate_drawings(it.g, can);
    std::set<std::string> elab_set(elab.keys.begin(), elab.keys.end());
    std::set<std::string> ecan_set(ecan.keys.begin(), ecan.keys.end());
    std::printf("%-8s %12zu %12zu %14zu %14zu%s\n", it.name, olab.size(),
                elab_set.size(), ocan.size(), ecan_set.size(),
                (olab == elab_set && ocan == ecan_set) ? "" : "   <-- MISMATCH");
  }
  return 0;
}
