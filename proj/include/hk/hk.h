#ifndef HK_H
#define HK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HK_API __attribute__((visibility("default")))
#else
#define HK_API
#endif

/* Return codes. On failure hk_last_error() describes the problem (thread-local). */
enum {
  HK_OK = 0,
  HK_ERR_INVALID = 1,  /* bad argument, unknown command, key or name */
  HK_ERR_PARSE = 2,    /* malformed category file or expression */
  HK_ERR_SHAPE = 3,    /* shapes, sources or targets do not line up */
  HK_ERR_FIELD = 4,    /* mixed fields */
  HK_ERR_WINDOW = 5,   /* computation left the declared window */
  HK_ERR_MISSING = 6,  /* structure constant or optional data absent */
  HK_ERR_COMPLEX = 7,  /* differentials do not square to zero */
  HK_ERR_INTERNAL = 8
};

typedef struct hk_session hk_session;
typedef struct hk_category hk_category;

HK_API const char* hk_version(void);
/* Message of the last failed call on this thread; "" when none. */
HK_API const char* hk_last_error(void);
HK_API void hk_string_free(char* s);

/* A session holds one run configuration. Keys are the CLI flag names without dashes
   (command, field, category, functor, object, source, target, morphism, skeleton, window-len,
   window-dots, seed, samples, p, n, json, verbose, assert-complete); functor, morphism and skeleton append. */
HK_API int hk_session_create(hk_session** out);
HK_API void hk_session_destroy(hk_session* s);
HK_API int hk_session_set(hk_session* s, const char* key, const char* value);
/* Runs the configured command. *report receives the rendered report (free with hk_string_free),
   *status the verdict class: 0 success, 2 inconclusive only. */
HK_API int hk_session_run(hk_session* s, char** report, int* status);

/* Categories: a builtin name (see hk_session_set "category") or a category file path. */
HK_API int hk_category_open(const char* name, const char* field, unsigned window_len, hk_category** out);
HK_API void hk_category_close(hk_category* c);
HK_API int hk_category_object_count(const hk_category* c, size_t* out);
/* Object name copied into buf (NUL-terminated, truncated to size). */
HK_API int hk_category_object_name(const hk_category* c, size_t index, char* buf, size_t size);
/* Dimension of hom(source, target) for objects written "A+B". */
HK_API int hk_category_hom_dim(const hk_category* c, const char* source, const char* target, size_t* out);
/* Validation of identity laws, associativity and monoidal data; *ok is 1 when no violation. */
HK_API int hk_category_validate(const hk_category* c, int* ok);

/* Rank of Γ^p(k^n) -> Sym^p(k^n) over F_p. */
HK_API int hk_fr_plus_dim(unsigned p, size_t n, size_t* out);

#ifdef __cplusplus
}
#endif

#endif
