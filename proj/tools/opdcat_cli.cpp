// Command-line front end: load JSON descriptions, run the computations and
// validations, emit a deterministic JSON report on stdout and a short human
// summary on stderr.  Exit status 0 iff every check passes.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "opdcat/algebra.hpp"
#include "opdcat/catio.hpp"
#include "opdcat/operad.hpp"
#include "opdcat/poly.hpp"
#include "opdcat/tmonad.hpp"

using namespace opdcat;
using nlohmann::json;

// ------------------------------------------------------------- sha-256

namespace {

struct Sha256 {
  uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                   0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
  std::string buf;
  uint64_t total = 0;

  static uint32_t rr(uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

  void block(const unsigned char* p) {
    static const uint32_t K[64] = {
        0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b,
        0x59f111f1, 0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01,
        0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7,
        0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc,
        0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152,
        0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
        0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
        0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
        0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819,
        0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116, 0x1e376c08,
        0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f,
        0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
        0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
    uint32_t w[64];
    for (int i = 0; i < 16; ++i)
      w[i] = (uint32_t)p[4 * i] << 24 | (uint32_t)p[4 * i + 1] << 16 |
             (uint32_t)p[4 * i + 2] << 8 | p[4 * i + 3];
    for (int i = 16; i < 64; ++i) {
      uint32_t s0 = rr(w[i - 15], 7) ^ rr(w[i - 15], 18) ^ (w[i - 15] >> 3);
      uint32_t s1 = rr(w[i - 2], 17) ^ rr(w[i - 2], 19) ^ (w[i - 2] >> 10);
      w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5],
             g = h[6], hh = h[7];
    for (int i = 0; i < 64; ++i) {
      uint32_t S1 = rr(e, 6) ^ rr(e, 11) ^ rr(e, 25);
      uint32_t ch = (e & f) ^ (~e & g);
      uint32_t t1 = hh + S1 + ch + K[i] + w[i];
      uint32_t S0 = rr(a, 2) ^ rr(a, 13) ^ rr(a, 22);
      uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      uint32_t t2 = S0 + maj;
      hh = g; g = f; f = e; e = d + t1;
      d = c; c = b; b = a; a = t1 + t2;
    }
    h[0] += a; h[1] += b; h[2] += c; h[3] += d;
    h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
  }

  void update(const std::string& s) {
    total += s.size();
    buf += s;
    size_t off = 0;
    while (buf.size() - off >= 64) {
      block((const unsigned char*)buf.data() + off);
      off += 64;
    }
    buf.erase(0, off);
  }

  std::string hex() {
    std::string pad = "\x80";
    while ((buf.size() + pad.size()) % 64 != 56) pad += '\0';
    uint64_t bits = total * 8;
    for (int i = 7; i >= 0; --i) pad += (char)((bits >> (8 * i)) & 0xff);
    total -= pad.size();  // update() counts it; irrelevant afterwards
    update(pad);
    char out[65];
    for (int i = 0; i < 8; ++i) std::snprintf(out + 8 * i, 9, "%08x", h[i]);
    return std::string(out, 64);
  }
};

std::string sha256_hex(const std::string& s) {
  Sha256 c;
  c.update(s);
  return c.hex();
}

// ------------------------------------------------------------- reporting

struct Reporter {
  json report;
  bool all_ok = true;

  explicit Reporter(const std::string& command) {
    report["command"] = command;
    report["inputs"] = json::array();
    report["checks"] = json::array();
    report["outputs"] = json::array();
  }
  void input(const std::string& path, const std::string& content) {
    report["inputs"].push_back(
        json{{"path", path}, {"sha256", sha256_hex(content)}});
  }
  void check(const std::string& name, bool pass, double coverage = 1.0,
             const std::string& witness = "") {
    report["checks"].push_back(json{{"name", name},
                                    {"status", pass ? "pass" : "fail"},
                                    {"coverage", coverage},
                                    {"witness", witness}});
    if (!pass) all_ok = false;
  }
  void info(const std::string& name, const std::string& value) {
    report["checks"].push_back(json{{"name", name},
                                    {"status", "info"},
                                    {"coverage", 1.0},
                                    {"witness", value}});
  }
  void output(const std::string& path) { report["outputs"].push_back(path); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dirname_of(const std::string& path) {
  auto p = path.find_last_of('/');
  return p == std::string::npos ? std::string(".") : path.substr(0, p);
}

std::string issues_str(const std::vector<Violation>& vs) {
  std::string s;
  for (size_t i = 0; i < vs.size() && i < 3; ++i) {
    if (i) s += " | ";
    s += vs[i].code + ": " + vs[i].detail;
  }
  return s;
}

std::string axiom_str(const std::vector<AxiomIssue>& vs) {
  std::string s;
  for (size_t i = 0; i < vs.size() && i < 3; ++i) {
    if (i) s += " | ";
    s += vs[i].axiom + "@" + vs[i].loc;
  }
  return s;
}

void dump_to(Reporter& R, const std::string& out_dir, const std::string& name,
             const json& j) {
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  std::string path = out_dir + "/" + name;
  std::ofstream f(path, std::ios::binary);
  f << j.dump(2) << "\n";
  R.output(path);
}

// ---------------------------------------------------------- file loaders

TruncatedOperad load_operad(Reporter& R, const std::string& path) {
  std::string text = slurp(path);
  R.input(path, text);
  return read_operad(text);
}

// category over the colours: the usual category file plus a "colours"
// object mapping object ids to colour names (defaulting to the first colour)
ObjOverI load_over(Reporter& R, const TruncatedOperad& T,
                   const std::string& path, CatPtr* cat_out = nullptr) {
  std::string text = slurp(path);
  R.input(path, text);
  json j = json::parse(text);
  std::vector<Violation> errs;
  CatPtr X = read_category(j, &errs);
  if (!X) throw std::runtime_error("ParseError: " + issues_str(errs));
  std::vector<int> colour_of(X->n_objects(), 0);
  if (j.contains("colours"))
    for (auto& [okey, cval] : j.at("colours").items()) {
      int o = X->obj(okey);
      int c = -1;
      for (size_t i = 0; i < T.colours.size(); ++i)
        if (T.colours[i] == cval.get<std::string>()) c = (int)i;
      if (o < 0 || c < 0)
        throw std::runtime_error("ParseError: bad colour entry " + okey);
      colour_of[o] = c;
    }
  if (cat_out) *cat_out = X;
  return over_discrete(T, X, colour_of);
}

struct LoadedAlgebra {
  TruncatedOperad T;
  std::vector<CatPtr> fibres;
  LaxMorphismData D;
};

LoadedAlgebra load_algebra(Reporter& R, const std::string& path) {
  std::string text = slurp(path);
  R.input(path, text);
  json j = json::parse(text);
  std::string dir = dirname_of(path);
  LoadedAlgebra L;
  {
    std::string optext = slurp(dir + "/" + j.at("operad").get<std::string>());
    R.input(dir + "/" + j.at("operad").get<std::string>(), optext);
    L.T = read_operad(optext);
  }
  L.fibres.resize(L.T.colours.size());
  for (size_t i = 0; i < L.T.colours.size(); ++i) {
    std::string fp =
        dir + "/" + j.at("fibres").at(L.T.colours[i]).get<std::string>();
    std::string ftext = slurp(fp);
    R.input(fp, ftext);
    std::vector<Violation> errs;
    L.fibres[i] = read_category(json::parse(ftext), &errs);
    if (!L.fibres[i])
      throw std::runtime_error("ParseError: " + issues_str(errs));
  }
  std::vector<Violation> errs;
  L.D = read_lax_morphism(j, L.T, L.fibres, &errs);
  if (!errs.empty()) throw std::runtime_error(issues_str(errs));
  return L;
}

std::vector<int> permutative_arrows(const LabelledOpCategory& TX) {
  std::vector<int> out;
  for (int f = 0; f < TX.TX->n_arrows(); ++f)
    if (TX.permutative[f] && !TX.TX->is_identity(f)) out.push_back(f);
  return out;
}

// ------------------------------------------------------------- commands

void cmd_validate(Reporter& R, const std::string& path) {
  std::string text = slurp(path);
  json j = json::parse(text);
  if (j.contains("arity_bound") && j.contains("colours")) {
    R.input(path, text);
    TruncatedOperad T = read_operad(text);
    auto vs = validate_operad(T);
    R.info("kind", "operad");
    R.check("operad-valid", vs.empty(), 1.0, issues_str(vs));
  } else if (j.contains("operad")) {
    LoadedAlgebra L = load_algebra(R, path);
    R.info("kind", "algebra");
    CoherenceReport C = validate_lax_morphism(L.D);
    R.check("coherence", C.ok, C.coverage(), axiom_str(C.issues));
  } else {
    R.input(path, text);
    std::vector<Violation> errs;
    CatPtr X = read_category(j, &errs);
    R.info("kind", "category");
    R.check("category-valid", X != nullptr, 1.0, issues_str(errs));
  }
}

void cmd_to_poly(Reporter& R, const std::string& path,
                 const std::string& out_dir) {
  TruncatedOperad T = load_operad(R, path);
  OperadToPoly P = to_polynomial(T);
  R.check("carrier-polynomial", validate_polynomial(P.M.carrier).empty());
  R.check("unit-morphism", validate_poly_morphism(P.M.unit).empty());
  R.check("mult-morphism", validate_poly_morphism(P.M.mult).empty());
  R.check("classifies-as-operad",
          classify_over_S(P.M.carrier, P.intoS).operad);
  R.info("B-objects", std::to_string(P.M.carrier.B->n_objects()));
  R.info("E-objects", std::to_string(P.M.carrier.E->n_objects()));
  dump_to(R, out_dir, "poly_B.json", write_category(*P.M.carrier.B));
  dump_to(R, out_dir, "poly_E.json", write_category(*P.M.carrier.E));
}

void cmd_from_poly(Reporter& R, const std::string& path,
                   const std::string& out_dir) {
  TruncatedOperad T = load_operad(R, path);
  OperadToPoly P = to_polynomial(T);
  TruncatedOperad T2 = from_polynomial(P.M, P.S, P.intoS);
  R.check("roundtrip-isomorphic", operad_isomorphic(T, T2));
  if (!out_dir.empty()) {
    std::string p = out_dir + "/operad_roundtrip.json";
    std::ofstream f(p, std::ios::binary);
    f << write_operad(T2);
    R.output(p);
  }
}

void cmd_classify(Reporter& R, const std::string& path) {
  TruncatedOperad T = load_operad(R, path);
  OperadToPoly P = to_polynomial(T);
  Classification c = classify_over_S(P.M.carrier, P.intoS);
  R.check("classifies-as-operad", c.operad);
  R.info("sigma-free", c.sigma_free ? "true" : "false");
  R.info("club", c.club ? "true" : "false");
}

void cmd_sigma_free(Reporter& R, const std::string& path) {
  TruncatedOperad T = load_operad(R, path);
  SigmaFreeReport s = sigma_free(T);
  R.info("direct", s.direct ? "true" : "false");
  R.info("via-discreteness", s.via_B ? "true" : "false");
  R.info("via-pullback", s.via_pullback ? "true" : "false");
  R.check("criteria-agree", s.agree());
}

void cmd_apply(Reporter& R, const std::string& oppath,
               const std::string& xpath, const std::string& out_dir) {
  TruncatedOperad T = load_operad(R, oppath);
  ObjOverI X = load_over(R, T, xpath);
  R.check("object-over-colours", validate_over(T, X).empty());
  LabelledOpCategory TX = apply_T(T, X);
  R.info("TX-objects", std::to_string(TX.TX->n_objects()));
  R.info("TX-arrows", std::to_string(TX.TX->n_arrows()));
  R.check("anchor-functorial", check_functor(TX.anchor).empty());
  dump_to(R, out_dir, "TX.json", write_category(*TX.TX));
}

void cmd_monad_laws(Reporter& R, const std::string& oppath,
                    const std::string& xpath) {
  TruncatedOperad T = load_operad(R, oppath);
  ObjOverI X = load_over(R, T, xpath);
  MonadLawReport M = check_monad_laws(T, X);
  R.check("monad-laws", M.ok, M.assoc_coverage, issues_str(M.issues));
  R.check("assoc-coverage-positive", M.assoc_coverage > 0, M.assoc_coverage);
}

void cmd_quotient(Reporter& R, const std::string& oppath,
                  const std::string& xpath, bool oracle,
                  const std::string& out_dir) {
  TruncatedOperad T = load_operad(R, oppath);
  ObjOverI X = load_over(R, T, xpath);
  LabelledOpCategory TX = apply_T(T, X);
  QuotientResult Q = quotient(TX);
  R.check("quotient-functorial", check_functor(Q.q).empty());
  R.info("quotient-objects", std::to_string(Q.Q->n_objects()));
  if (oracle) {
    CoidentResult C = coidentify(TX.TX, permutative_arrows(TX));
    bool iso = C.ok && find_isomorphism(Q.Q, C.C).has_value();
    R.check("congruence-oracle-agrees", iso, 1.0, C.ok ? "" : C.error);
  }
  dump_to(R, out_dir, "quotient.json", write_category(*Q.Q));
}

void cmd_check_algebra(Reporter& R, const std::string& path, bool oracle) {
  LoadedAlgebra L = load_algebra(R, path);
  CoherenceReport C = validate_lax_morphism(L.D);
  R.check("coherence", C.ok, C.coverage(), axiom_str(C.issues));
  R.info("lax", C.lax ? "true" : "false");
  R.info("pseudo", C.pseudo ? "true" : "false");
  R.info("strict", C.strict ? "true" : "false");
  R.info("commutative", C.commutative ? "true" : "false");
  if (oracle) {
    try {
      LaxActionData A = data_to_action(L.D);
      CoherenceReport C2 = validate_lax_action(A);
      auto member = [](const AxiomIssue& w, const std::vector<AxiomIssue>& v) {
        for (const auto& i : v)
          if (i.axiom == w.axiom && i.loc == w.loc) return true;
        return false;
      };
      bool agree = C.ok == C2.ok &&
                   (C.ok || (!C.issues.empty() && !C2.issues.empty() &&
                             member(C.issues[0], C2.issues) &&
                             member(C2.issues[0], C.issues)));
      R.check("action-oracle-agrees", agree, 1.0,
              C.ok ? "" : axiom_str(C.issues) + " vs " + axiom_str(C2.issues));
    } catch (const std::exception& e) {
      R.check("action-oracle-agrees", false, 1.0, e.what());
    }
  }
}

void cmd_check_transformation(Reporter& R, const std::string& path) {
  std::string text = slurp(path);
  R.input(path, text);
  json j = json::parse(text);
  std::string dir = dirname_of(path);
  std::string kind = j.value("kind", "lax");

  auto load_components = [&](const json& cj, const LoadedAlgebra& D,
                             const LoadedAlgebra& K) {
    std::vector<FinFunctor> comps(D.T.colours.size());
    for (size_t i = 0; i < D.T.colours.size(); ++i) {
      std::vector<Violation> errs;
      comps[i] = read_functor(cj.at(D.T.colours[i]), D.fibres[i], K.fibres[i],
                              &errs);
      if (!errs.empty()) throw std::runtime_error(issues_str(errs));
    }
    return comps;
  };
  auto load_coherences = [&](const json& jj, const LoadedAlgebra& D,
                             const LoadedAlgebra& K, LaxNatData& N) {
    if (!jj.contains("coherences")) return;
    for (auto& [opid, tbl] : jj.at("coherences").items()) {
      int op = D.T.op(opid);
      if (op < 0) throw std::runtime_error("ParseError: unknown op " + opid);
      int tc = D.T.ops[op].target;
      std::vector<int> v(D.D.doms[op].C->n_objects());
      for (int x = 0; x < (int)v.size(); ++x)
        v[x] = K.fibres[tc]->identity[N.components[tc].on_obj(
            D.D.products[op].on_obj(x))];
      for (auto& [okey, aval] : tbl.items()) {
        int x = D.D.doms[op].C->obj(okey);
        int a = K.fibres[tc]->arr(aval.get<std::string>());
        if (x < 0 || a < 0)
          throw std::runtime_error("ParseError: bad coherence " + okey);
        v[x] = a;
      }
      N.coherences[op] = v;
    }
  };

  if (kind == "modification") {
    json djt = json::parse(slurp(dir + "/" + j.at("dom").get<std::string>()));
    json cjt = json::parse(slurp(dir + "/" + j.at("cod").get<std::string>()));
    R.input(dir + "/" + j.at("dom").get<std::string>(), djt.dump());
    R.input(dir + "/" + j.at("cod").get<std::string>(), cjt.dump());
    std::string ddir = dirname_of(dir + "/" + j.at("dom").get<std::string>());
    LoadedAlgebra DA =
        load_algebra(R, ddir + "/" + djt.at("dom").get<std::string>());
    LoadedAlgebra KA =
        load_algebra(R, ddir + "/" + djt.at("cod").get<std::string>());
    LaxNatData F, G;
    F.dom = &DA.D; F.cod = &KA.D;
    G.dom = &DA.D; G.cod = &KA.D;
    F.components = load_components(djt.at("components"), DA, KA);
    G.components = load_components(cjt.at("components"), DA, KA);
    load_coherences(djt, DA, KA, F);
    load_coherences(cjt, DA, KA, G);
    ModificationData M;
    M.dom = &F;
    M.cod = &G;
    M.components.resize(DA.T.colours.size());
    for (size_t i = 0; i < DA.T.colours.size(); ++i) {
      M.components[i].resize(DA.fibres[i]->n_objects());
      for (int x = 0; x < DA.fibres[i]->n_objects(); ++x)
        M.components[i][x] = KA.fibres[i]->identity[F.components[i].on_obj(x)];
      if (j.contains("components"))
        for (auto& [okey, aval] :
             j.at("components").at(DA.T.colours[i]).items()) {
          int x = DA.fibres[i]->obj(okey);
          int a = KA.fibres[i]->arr(aval.get<std::string>());
          if (x < 0 || a < 0)
            throw std::runtime_error("ParseError: bad component " + okey);
          M.components[i][x] = a;
        }
    }
    CoherenceReport C = validate_modification(M);
    R.check("modification", C.ok, C.coverage(), axiom_str(C.issues));
    return;
  }

  LoadedAlgebra DA =
      load_algebra(R, dir + "/" + j.at("dom").get<std::string>());
  LoadedAlgebra KA =
      load_algebra(R, dir + "/" + j.at("cod").get<std::string>());
  LaxNatData N;
  N.dom = &DA.D;
  N.cod = &KA.D;
  N.components = load_components(j.at("components"), DA, KA);
  load_coherences(j, DA, KA, N);
  CoherenceReport C =
      kind == "colax" ? validate_colax_natural(N) : validate_lax_natural(N);
  R.check(kind + "-transformation", C.ok, C.coverage(), axiom_str(C.issues));
  R.info("pseudo", C.pseudo ? "true" : "false");
  R.info("strict", C.strict ? "true" : "false");
}

void cmd_commutativize(Reporter& R, const std::string& oppath,
                       const std::string& xpath, const std::string& out_dir) {
  TruncatedOperad T = load_operad(R, oppath);
  ObjOverI Z = load_over(R, T, xpath);
  StrictTAlgebra A = free_algebra(T, Z);
  AlgebraLawReport laws = validate_strict_algebra(T, A);
  R.check("algebra-laws", laws.ok, laws.assoc_coverage,
          issues_str(laws.issues));
  CommutativizeResult CR = commutativize(T, A);
  R.check("descent", CR.ok, 1.0, CR.error);
  if (CR.ok) {
    R.check("result-commutative", CR.commutative);
    LabelledOpCategory TZ = apply_T(T, Z);
    QuotientResult Q = quotient(TZ);
    bool same = CR.r.q.omap == Q.q.omap && CR.r.q.amap == Q.q.amap;
    R.check("reflector-equals-quotient", same);
    R.info("objects", std::to_string(CR.r.C->n_objects()));
    dump_to(R, out_dir, "commutativized.json", write_category(*CR.r.C));
  }
}

void cmd_compose_poly(Reporter& R, const std::string& p1,
                      const std::string& p2, const std::string& out_dir) {
  TruncatedOperad T1 = load_operad(R, p1);
  TruncatedOperad T2 = load_operad(R, p2);
  Polynomial P1 = to_polynomial(T1).M.carrier;
  Polynomial P2 = to_polynomial(T2).M.carrier;
  if (T1.colours != T2.colours) {
    R.check("colours-match", false, 1.0, "the polynomials are over different colour sets");
    return;
  }
  // same colour list gives the same discrete indexing category; share it so
  // the spans are composable
  P2.I = P1.I;
  P2.s.cod = P1.I;
  P2.t.cod = P1.I;
  ComposeResult C = compose_polynomials(P2, P1);
  R.check("composite-valid", validate_polynomial(C.comp).empty());
  R.info("B-equiv-discrete",
         is_equiv_discrete(*C.comp.B) ? "true" : "false");
  R.info("B-objects", std::to_string(C.comp.B->n_objects()));
  R.info("E-objects", std::to_string(C.comp.E->n_objects()));
  dump_to(R, out_dir, "composite_B.json", write_category(*C.comp.B));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite categorified operads toolkit"};
  app.require_subcommand(1);
  bool oracle = false;
  int max_size = 6;
  std::string out_dir, format = "json";
  app.add_flag("--oracle", oracle, "run independent cross-checks");
  app.add_option("--max-size", max_size, "enumeration bound")->capture_default_str();
  app.add_option("--out", out_dir, "directory for output dumps");
  app.add_option("--format", format, "report format: json|text")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> files;
  std::map<std::string, std::pair<int, std::string>> specs = {
      {"validate", {1, "validate a category, operad or algebra file"}},
      {"to-poly", {1, "associated polynomial of an operad"}},
      {"from-poly", {1, "operad/polynomial roundtrip"}},
      {"classify", {1, "classify the associated polynomial over S"}},
      {"sigma-free", {1, "the three sigma-freeness criteria"}},
      {"apply", {2, "apply T to a category over the colours"}},
      {"monad-laws", {2, "unit and associativity laws of T"}},
      {"quotient", {2, "the quotient T/Sigma"}},
      {"check-algebra", {1, "coherence axioms of categorified algebra data"}},
      {"check-transformation", {1, "lax/colax transformations, modifications"}},
      {"commutativize", {2, "commutativization of the free algebra"}},
      {"compose-poly", {2, "composite of two associated polynomials"}},
  };
  for (auto& [name, sp] : specs) {
    auto* sub = app.add_subcommand(name, sp.second);
    sub->fallthrough();
    sub->add_option("files", files, "input files")
        ->expected(sp.first)
        ->required();
  }
  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands()[0]->get_name();

  Reporter R(cmd);
  (void)max_size;
  try {
    if (cmd == "validate") cmd_validate(R, files[0]);
    else if (cmd == "to-poly") cmd_to_poly(R, files[0], out_dir);
    else if (cmd == "from-poly") cmd_from_poly(R, files[0], out_dir);
    else if (cmd == "classify") cmd_classify(R, files[0]);
    else if (cmd == "sigma-free") cmd_sigma_free(R, files[0]);
    else if (cmd == "apply") cmd_apply(R, files[0], files[1], out_dir);
    else if (cmd == "monad-laws") cmd_monad_laws(R, files[0], files[1]);
    else if (cmd == "quotient")
      cmd_quotient(R, files[0], files[1], oracle, out_dir);
    else if (cmd == "check-algebra") cmd_check_algebra(R, files[0], oracle);
    else if (cmd == "check-transformation")
      cmd_check_transformation(R, files[0]);
    else if (cmd == "commutativize")
      cmd_commutativize(R, files[0], files[1], out_dir);
    else if (cmd == "compose-poly")
      cmd_compose_poly(R, files[0], files[1], out_dir);
  } catch (const std::exception& e) {
    R.check("parse", false, 1.0, e.what());
  }

  if (format == "text") {
    for (auto& c : R.report["checks"])
      std::cout << c["name"].get<std::string>() << ": "
                << c["status"].get<std::string>()
                << (c["witness"].get<std::string>().empty()
                        ? ""
                        : "  (" + c["witness"].get<std::string>() + ")")
                << "\n";
  } else {
    std::cout << R.report.dump(2) << "\n";
  }
  int fails = 0;
  for (auto& c : R.report["checks"])
    if (c["status"] == "fail") ++fails;
  std::cerr << cmd << ": " << (R.all_ok ? "ok" : "FAILED") << " ("
            << R.report["checks"].size() << " checks, " << fails
            << " failures)\n";
  return R.all_ok ? 0 : 1;
}
