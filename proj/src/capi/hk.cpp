#include "hk/hk.h"

#include <cstring>

#include "hk/diagrams.hpp"
#include "hk/expr.hpp"
#include "hk/kernels.hpp"
#include "hk/presentations.hpp"
#include "hk/session.hpp"

struct hk_session {
  hk::cli::SessionConfig config;
};

struct hk_category {
  hk::cli::CatFile file;
};

namespace {

thread_local std::string last_error;

int fail(int code, const std::string& msg) {
  last_error = msg;
  return code;
}

template <class F>
int guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return HK_OK;
  } catch (const hk::ParseError& e) {
    return fail(HK_ERR_PARSE, e.what());
  } catch (const hk::ShapeError& e) {
    return fail(HK_ERR_SHAPE, e.what());
  } catch (const hk::FieldMismatch& e) {
    return fail(HK_ERR_FIELD, e.what());
  } catch (const hk::WindowError& e) {
    return fail(HK_ERR_WINDOW, e.what());
  } catch (const hk::MissingData& e) {
    return fail(HK_ERR_MISSING, e.what());
  } catch (const hk::NotAComplex& e) {
    return fail(HK_ERR_COMPLEX, e.what());
  } catch (const hk::Error& e) {
    return fail(HK_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(HK_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw hk::Error(std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* hk_version(void) { return "0.1.0"; }

const char* hk_last_error(void) { return last_error.c_str(); }

void hk_string_free(char* s) { std::free(s); }

int hk_session_create(hk_session** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new hk_session();
  });
}

void hk_session_destroy(hk_session* s) { delete s; }

int hk_session_set(hk_session* s, const char* key, const char* value) {
  return guarded([&] {
    require(s, "session");
    require(key, "key");
    require(value, "value");
    hk::cli::set_config(s->config, key, value);
  });
}

int hk_session_run(hk_session* s, char** report, int* status) {
  return guarded([&] {
    require(s, "session");
    require(report, "report pointer");
    hk::cli::Report r = hk::cli::run_command(s->config);
    *report = copy_string(r.render(s->config.json));
    if (status) *status = r.exit_code;
  });
}

int hk_category_open(const char* name, const char* field, unsigned window_len, hk_category** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output pointer");
    auto c = std::make_unique<hk_category>();
    std::optional<hk::FieldSpec> f;
    if (field && *field) f = hk::FieldSpec::parse(field);
    std::string n = name;
    unsigned len = window_len ? window_len : 4;
    hk::FieldSpec fs = f.value_or(hk::FieldSpec::rationals());
    if (n == "dualnumbers") c->file.category = hk::dual_numbers(fs);
    else if (n.rfind("truncpoly:", 0) == 0) c->file.category = hk::truncated_polynomial(fs, std::stoul(n.substr(10)));
    else if (n.rfind("ob:", 0) == 0) c->file.category = hk::diagrams::build_OB(hk::Scalar::parse(fs, n.substr(3)), len);
    else c->file = hk::cli::parse_category_file(n, f);
    *out = c.release();
  });
}

void hk_category_close(hk_category* c) { delete c; }

int hk_category_object_count(const hk_category* c, size_t* out) {
  return guarded([&] {
    require(c, "category");
    require(out, "output pointer");
    *out = c->file.category->object_count();
  });
}

int hk_category_object_name(const hk_category* c, size_t index, char* buf, size_t size) {
  return guarded([&] {
    require(c, "category");
    require(buf, "buffer");
    if (index >= c->file.category->object_count()) throw hk::Error("object index out of range");
    std::string n = c->file.category->object_name(static_cast<hk::ObjectId>(index));
    if (!size) return;
    std::size_t k = std::min(size - 1, n.size());
    std::memcpy(buf, n.data(), k);
    buf[k] = '\0';
  });
}

int hk_category_hom_dim(const hk_category* c, const char* source, const char* target, size_t* out) {
  return guarded([&] {
    require(c, "category");
    require(source, "source");
    require(target, "target");
    require(out, "output pointer");
    const hk::Category& cat = *c->file.category;
    *out = hk::hom_space(cat, hk::cli::parse_object(cat, source), hk::cli::parse_object(cat, target)).dim;
  });
}

int hk_category_validate(const hk_category* c, int* ok) {
  return guarded([&] {
    require(c, "category");
    require(ok, "output pointer");
    *ok = hk::validate_category(*c->file.category).ok() ? 1 : 0;
  });
}

int hk_fr_plus_dim(unsigned p, size_t n, size_t* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = hk::fr_plus_dim(p, n);
  });
}

}  // extern "C"
