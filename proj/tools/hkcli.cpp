#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "hk/hk.h"

namespace {

int report_error(const char* what) {
  std::cerr << "error: " << what << ": " << hk_last_error() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with homological kernels, Noy categories and additive sites"};
  app.set_version_flag("--version", std::string(hk_version()));

  std::string command, field, category = "dualnumbers", object, source, target, out;
  std::vector<std::string> functors, morphisms, skeleton;
  unsigned window_len = 0, window_dots = 0, samples = 0, p = 2, n = 2;
  std::uint64_t seed = 1;
  bool json = false, verbose = false, assert_complete = false;

  app.add_option("command", command,
                 "hom | compose | noy-hom | kb-hom | sigma | sigma-theta | prexact | flat | topologies | "
                 "topology-of | hsigma | mu-nu | fr-plus | validate | export")
      ->required();
  app.add_option("--field", field, "Q, F2, F3, ... (overrides the category file)");
  app.add_option("--category", category,
                 "dualnumbers, noy-dualnumbers, truncpoly:N, ob:DELTA, mo:DELTA,T, en:D0,D1,..., seq:BOUND or a "
                 "category file");
  app.add_option("--functor", functors, "functor name (repeatable)");
  app.add_option("--object", object, "object A, e.g. R or R+R");
  app.add_option("--source", source, "source object, Noy object or complex");
  app.add_option("--target", target, "target object, Noy object or complex");
  app.add_option("--morphism", morphisms, "morphism expression (repeatable)");
  app.add_option("--window-len", window_len, "word length bound for diagram categories");
  app.add_option("--window-dots", window_dots, "dot bound for EN");
  app.add_option("--skeleton", skeleton, "Noy skeleton object NAME=morphism (repeatable)");
  app.add_option("--seed", seed, "seed for --samples");
  app.add_option("--samples", samples, "random morphisms added to the tested list");
  app.add_option("--p", p, "characteristic for fr-plus");
  app.add_option("--n", n, "dimension for fr-plus");
  app.add_option("--out", out, "write the report to this file");
  app.add_flag("--json", json, "machine-readable report");
  app.add_flag("--verbose", verbose, "include timing");
  app.add_flag("--assert-complete", assert_complete, "assert that the diagram window suffices for refutations");
  CLI11_PARSE(app, argc, argv);

  hk_session* s = nullptr;
  if (hk_session_create(&s) != HK_OK) return report_error("session");
  auto set = [&](const char* key, const std::string& value) {
    if (hk_session_set(s, key, value.c_str()) != HK_OK) throw std::runtime_error(key);
  };
  try {
    set("command", command);
    set("category", category);
    if (!field.empty()) set("field", field);
    for (const auto& f : functors) set("functor", f);
    if (!object.empty()) set("object", object);
    if (!source.empty()) set("source", source);
    if (!target.empty()) set("target", target);
    for (const auto& m : morphisms) set("morphism", m);
    for (const auto& k : skeleton) set("skeleton", k);
    set("window-len", std::to_string(window_len));
    set("window-dots", std::to_string(window_dots));
    set("seed", std::to_string(seed));
    set("samples", std::to_string(samples));
    set("p", std::to_string(p));
    set("n", std::to_string(n));
    set("json", json ? "1" : "0");
    set("verbose", verbose ? "1" : "0");
    set("assert-complete", assert_complete ? "1" : "0");
  } catch (const std::runtime_error& e) {
    int rc = report_error(e.what());
    hk_session_destroy(s);
    return rc;
  }

  char* report = nullptr;
  int status = 0;
  if (hk_session_run(s, &report, &status) != HK_OK) {
    int rc = report_error(command.c_str());
    hk_session_destroy(s);
    return rc;
  }
  int rc = status;
  if (out.empty()) {
    std::fputs(report, stdout);
  } else {
    std::ofstream f(out, std::ios::binary);
    f << report;
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      rc = 1;
    }
  }
  hk_string_free(report);
  hk_session_destroy(s);
  return rc;
}
