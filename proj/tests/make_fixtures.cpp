// Emits the JSON fixture files used by the command-line test script
// into the directory given as argv[1].
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "opdcat/algebra.hpp"
#include "opdcat/catio.hpp"

using namespace opdcat;
using nlohmann::json;

static std::string dir;

static void put(const std::string& name, const std::string& text) {
  std::ofstream f(dir + "/" + name);
  f << text << "\n";
}

static json algebra_file(const LaxMorphismData& D, const std::string& oppath,
                         const std::map<std::string, std::string>& fibres) {
  json j = write_lax_morphism(D);
  j["operad"] = oppath;
  j["fibres"] = fibres;
  return j;
}

int main(int argc, char** argv) {
  if (argc < 2) return 2;
  dir = argv[1];

  TruncatedOperad com3 = com_operad(3);
  TruncatedOperad ass2 = ass_operad(2);
  put("com3.op.json", write_operad(com3));
  put("ass2.op.json", write_operad(ass2));
  put("freebin.op.json", write_operad(free_binary_operad()));
  put("z2.cat.json", write_category(*fx::z2cat()).dump(2));
  put("pt.cat.json", write_category(*fx::disc({"o"})).dump(2));

  json x2 = write_category(*fx::disc({"x", "y"}));
  x2["colours"] = {{"x", "*"}, {"y", "*"}};
  put("x2.over.json", x2.dump(2));

  put("cob.alg.json",
      algebra_file(fx::cob_data(com3), "com3.op.json", {{"*", "z2.cat.json"}})
          .dump(2));
  put("trivial.alg.json",
      algebra_file(fx::trivial_data(com3), "com3.op.json",
                   {{"*", "pt.cat.json"}})
          .dump(2));
  LaxMorphismData broken = fx::cob_data(com3);
  broken.substitutions[{2, {1, 1}}] = {fx::z2cat()->arr("s")};
  put("broken.alg.json",
      algebra_file(broken, "com3.op.json", {{"*", "z2.cat.json"}}).dump(2));

  json idt = {{"kind", "lax"},
              {"dom", "cob.alg.json"},
              {"cod", "cob.alg.json"},
              {"components",
               {{"*", {{"objects", {{"*", "*"}}}, {"arrows", {{"s", "s"}}}}}}}};
  put("idtrans.json", idt.dump(2));

  json bad = {{"kind", "lax"},
              {"dom", "trivial.alg.json"},
              {"cod", "cob.alg.json"},
              {"components",
               {{"*", {{"objects", {{"o", "*"}}}, {"arrows", json::object()}}}}}};
  put("badtrans.json", bad.dump(2));

  json mod = {{"kind", "modification"},
              {"dom", "idtrans.json"},
              {"cod", "idtrans.json"}};
  put("idmod.json", mod.dump(2));
  return 0;
}
